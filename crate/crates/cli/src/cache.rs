//! Content-addressed JSON cache. Entries are keyed by the SHA-256 of
//! `(command, params, engine version)` and written atomically.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Serialize)]
struct KeyMaterial<'a, P: Serialize> {
    command: &'a str,
    params: &'a P,
    version: &'a str,
}

pub fn cache_key<P: Serialize>(command: &str, params: &P, version: &str) -> String {
    let material = KeyMaterial {
        command,
        params,
        version,
    };
    let bytes = serde_json::to_vec(&material).expect("cache key material serializes");
    hex::encode(Sha256::digest(&bytes))
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<Vec<u8>> {
        fs::read(self.path(key)).ok()
    }

    /// Write-temp-then-rename so readers never observe a partial entry.
    pub fn put(&self, key: &str, bytes: &[u8]) -> Result<()> {
        fs::create_dir_all(&self.dir)
            .with_context(|| format!("creating cache directory {}", self.dir.display()))?;
        let tmp = self
            .dir
            .join(format!(".{key}.{}.tmp", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)
                .with_context(|| format!("creating {}", tmp.display()))?;
            f.write_all(bytes)?;
            f.sync_all()?;
        }
        fs::rename(&tmp, self.path(key))
            .with_context(|| format!("renaming into {}", self.path(key).display()))?;
        Ok(())
    }
}
