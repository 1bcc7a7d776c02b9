mod cache;
mod render;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;

use cache::{cache_key, Cache};
use render::Format;
use report::{BettiParams, Side, StabilizeParams, StrataParams};

#[derive(Parser)]
#[command(name = "higgs", version, about = "Betti numbers of rank-2 Higgs bundle moduli spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Output format
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Directory for cached results
    #[arg(long, default_value = ".higgs-cache")]
    cache_dir: PathBuf,
    /// Always recompute and do not touch the cache
    #[arg(long)]
    no_cache: bool,
    /// On a cache hit, recompute anyway and fail (exit 2) unless the bytes agree
    #[arg(long)]
    verify_cache: bool,
    /// Log cache activity to stderr
    #[arg(long, short)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Poincaré polynomial from the ring presentation, the Morse stratification, or both
    Betti {
        #[arg(long)]
        g: u32,
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, value_enum, default_value = "both")]
        side: Side,
        /// Truncation degree for the ring side (default: exact polynomial, certified past 6g-6)
        #[arg(long)]
        maxdeg: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Harder–Narasimhan types, Shatz polygons and stratum codimensions
    Strata {
        #[arg(long)]
        g: u32,
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        d: i64,
        /// Largest top degree d_1 to enumerate (default d + 2)
        #[arg(long = "max")]
        max_top_degree: Option<i64>,
        #[command(flatten)]
        common: Common,
    },
    /// Betti numbers as the pole order grows, against the classifying-space limit
    Stabilize {
        #[arg(long)]
        g: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, default_value_t = 6)]
        maxn: u32,
        #[arg(long = "deg", default_value_t = 6)]
        through_degree: u32,
        #[command(flatten)]
        common: Common,
    },
}

/// A command failed its own consistency check.
#[derive(Debug)]
struct Mismatch(String);

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Mismatch {}

/// Look up `params` in the cache, computing and storing on a miss.
fn cached<P, R>(
    common: &Common,
    command: &str,
    params: &P,
    compute: impl Fn() -> Result<R>,
) -> Result<R>
where
    P: Serialize,
    R: Serialize + DeserializeOwned,
{
    if common.no_cache {
        return compute();
    }
    let cache = Cache::new(&common.cache_dir);
    let key = cache_key(command, params, higgs_core::ENGINE_VERSION);
    if let Some(bytes) = cache.get(&key) {
        match serde_json::from_slice::<R>(&bytes) {
            Ok(hit) => {
                if common.verbose {
                    eprintln!("cache hit {key}");
                }
                if common.verify_cache {
                    let fresh = serde_json::to_vec(&compute()?)?;
                    if fresh != bytes {
                        return Err(Mismatch(format!("cache entry {key} differs from recomputation")).into());
                    }
                }
                return Ok(hit);
            }
            Err(e) => eprintln!("warning: corrupt cache entry {key} ({e}); recomputing"),
        }
    }
    let value = compute()?;
    cache
        .put(&key, &serde_json::to_vec(&value)?)
        .context("writing cache entry")?;
    if common.verbose {
        eprintln!("cache store {key} in {}", cache.dir().display());
    }
    Ok(value)
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Betti {
            g,
            n,
            d,
            side,
            maxdeg,
            common,
        } => {
            let params = BettiParams {
                g,
                n,
                d,
                side,
                maxdeg,
            };
            let report = cached(&common, "betti", &params, || Ok(report::betti(&params)?))?;
            let text = render::betti(&report, common.format);
            if report.matches == Some(false) {
                print!("{text}");
                return Err(Mismatch("ring and Morse Poincaré series differ".into()).into());
            }
            Ok(text)
        }
        Command::Strata {
            g,
            n,
            r,
            d,
            max_top_degree,
            common,
        } => {
            let params = StrataParams {
                g,
                n,
                r,
                d,
                max_top_degree: max_top_degree.unwrap_or(d + 2),
            };
            let report = cached(&common, "strata", &params, || Ok(report::strata(&params)?))?;
            Ok(render::strata(&report, common.format))
        }
        Command::Stabilize {
            g,
            d,
            maxn,
            through_degree,
            common,
        } => {
            let params = StabilizeParams {
                g,
                d,
                maxn,
                through_degree,
            };
            let report = cached(&common, "stabilize", &params, || Ok(report::stabilize(&params)?))?;
            let text = render::stabilize(&report, common.format);
            if !report.monotone {
                print!("{text}");
                return Err(Mismatch("Betti numbers decrease as n grows".into()).into());
            }
            Ok(text)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let verification = e.downcast_ref::<Mismatch>().is_some()
                || matches!(
                    e.downcast_ref::<higgs_core::Error>(),
                    Some(higgs_core::Error::Verification(_))
                );
            ExitCode::from(if verification { 2 } else { 1 })
        }
    }
}
