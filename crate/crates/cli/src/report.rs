//! Computation of each command's result as a serializable report.

use higgs_core::morse::{classifying_space_poincare, higgs_poincare_morse, jacobian_poincare};
use higgs_core::relation_ideal::{dd_rhs_series_through, full_h_series};
use higgs_core::shatz::{bundle_stratum_codim, enum_hn_types, polygon, stratum_codim, StratumCodim};
use higgs_core::{Error, ModuliParams, PoincareSeries};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Ring,
    Morse,
    Both,
}

#[derive(Clone, Debug, Serialize)]
pub struct BettiParams {
    pub g: u32,
    pub n: u32,
    pub d: i64,
    pub side: Side,
    pub maxdeg: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BettiReport {
    pub g: u32,
    pub n: u32,
    pub d: i64,
    pub ring: Option<PoincareSeries>,
    pub morse: Option<PoincareSeries>,
    /// Present when both sides were computed.
    #[serde(rename = "match")]
    pub matches: Option<bool>,
}

pub fn betti(p: &BettiParams) -> Result<BettiReport, Error> {
    let params = ModuliParams::new(p.g, p.n, p.d)?;
    let want_ring = matches!(p.side, Side::Ring | Side::Both);
    let want_morse = matches!(p.side, Side::Morse | Side::Both);
    if want_ring && p.n > 0 {
        return Err(Error::InvalidParameter(format!(
            "the ring presentation describes n = 0 only; use --side morse for n = {}",
            p.n
        )));
    }
    let ring = if want_ring {
        Some(match p.maxdeg {
            None => full_h_series(p.g)?,
            Some(m) => &jacobian_poincare(p.g) * &dd_rhs_series_through(p.g, m)?,
        })
    } else {
        None
    };
    let morse = if want_morse {
        Some(higgs_poincare_morse(&params)?)
    } else {
        None
    };
    let matches = match (&ring, &morse) {
        (Some(r), Some(m)) => Some(match r.exact_through() {
            None => r == m,
            Some(n) => *r == m.truncate(n),
        }),
        _ => None,
    };
    Ok(BettiReport {
        g: p.g,
        n: p.n,
        d: p.d,
        ring,
        morse,
        matches,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct StrataParams {
    pub g: u32,
    pub n: u32,
    pub r: u32,
    pub d: i64,
    pub max_top_degree: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StratumRow {
    pub hn_type: Vec<(u32, i64)>,
    pub polygon: Vec<(i64, i64)>,
    /// Higgs stratum codimension; absent for the semistable type.
    pub chi_bound: Option<i64>,
    pub exact_codim: Option<i64>,
    /// Codimension of the bundle stratum (no Higgs field), rank 2 only.
    pub bundle_codim: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StrataReport {
    pub g: u32,
    pub n: u32,
    pub r: u32,
    pub d: i64,
    pub rows: Vec<StratumRow>,
}

pub fn strata(p: &StrataParams) -> Result<StrataReport, Error> {
    if p.r > 2 {
        return Err(Error::NotImplemented("rank > 2".into()));
    }
    if p.d.rem_euclid(2) == 0 {
        return Err(Error::EvenDegree(p.d));
    }
    let rows = enum_hn_types(p.r, p.d, p.max_top_degree)?
        .into_iter()
        .map(|mu| {
            let (codim, bundle) = if mu.is_semistable() {
                (None, None)
            } else {
                (Some(stratum_codim(&mu, p.g, p.n)?), Some(bundle_stratum_codim(&mu, p.g)?))
            };
            Ok(StratumRow {
                polygon: polygon(&mu).vertices().to_vec(),
                hn_type: mu.parts().to_vec(),
                chi_bound: codim.map(|c: StratumCodim| c.chi_bound),
                exact_codim: codim.and_then(|c| c.exact),
                bundle_codim: bundle,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(StrataReport {
        g: p.g,
        n: p.n,
        r: p.r,
        d: p.d,
        rows,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilizeParams {
    pub g: u32,
    pub d: i64,
    pub maxn: u32,
    pub through_degree: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilizeReport {
    pub g: u32,
    pub d: i64,
    pub through_degree: u32,
    /// `rows[n][i]` is `b_i` of the moduli space with pole order `n`.
    pub rows: Vec<Vec<String>>,
    pub classifying: Vec<String>,
    /// Per degree, the first `n` from which every later row equals the classifying row.
    pub stabilized_from: Vec<Option<u32>>,
    /// Whether every column is nondecreasing in `n`.
    pub monotone: bool,
}

pub fn stabilize(p: &StabilizeParams) -> Result<StabilizeReport, Error> {
    if p.maxn < 1 {
        return Err(Error::InvalidParameter("--maxn must be at least 1".into()));
    }
    let through = p.through_degree as usize;
    let mut rows = Vec::new();
    for n in 0..=p.maxn {
        let series = higgs_poincare_morse(&ModuliParams::new(p.g, n, p.d)?)?;
        rows.push(
            (0..=through)
                .map(|i| series.coeff(i))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    let bg = classifying_space_poincare(p.g, through)?;
    let classifying = (0..=through).map(|i| bg.coeff(i)).collect::<Result<Vec<_>, _>>()?;

    let stabilized_from = (0..=through)
        .map(|i| {
            let mut first = None;
            for (n, row) in rows.iter().enumerate().rev() {
                if row[i] != classifying[i] {
                    break;
                }
                first = Some(n as u32);
            }
            first
        })
        .collect();
    let monotone = rows
        .windows(2)
        .all(|w| w[0].iter().zip(&w[1]).all(|(a, b)| a <= b));
    let strings = |v: &[BigInt]| v.iter().map(ToString::to_string).collect();
    Ok(StabilizeReport {
        g: p.g,
        d: p.d,
        through_degree: p.through_degree,
        rows: rows.iter().map(|r| strings(r)).collect(),
        classifying: strings(&classifying),
        stabilized_from,
        monotone,
    })
}
