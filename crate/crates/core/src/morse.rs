//! Morse-theoretic side: critical submanifolds of the circle action on the moduli of
//! rank-2 `K(n)`-twisted Higgs bundles of odd degree, their indices and Poincaré series,
//! and the perfect-Morse assembly `P_t(H_n) = Σ_j t^{λ_j} P_t(F_n^j)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::{binomial, PoincareSeries};
use crate::shatz::{bundle_stratum_codim, enum_hn_types, h1_negative_line_bundle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ModuliParams {
    pub genus: u32,
    pub pole_order: u32,
    pub degree: i64,
}

impl ModuliParams {
    pub fn new(genus: u32, pole_order: u32, degree: i64) -> Result<Self> {
        if genus == 0 {
            return Err(Error::InvalidParameter("genus must be at least 1".into()));
        }
        if degree.rem_euclid(2) == 0 {
            return Err(Error::EvenDegree(degree));
        }
        Ok(ModuliParams {
            genus,
            pole_order,
            degree,
        })
    }

    /// Largest critical index `g + ⌊(n - 1)/2⌋`.
    pub fn max_stratum(&self) -> u32 {
        (self.genus as i64 + (self.pole_order as i64 - 1).div_euclid(2)) as u32
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StratumFactors {
    /// Moduli of stable rank-2 bundles of degree `d` (Higgs field zero).
    StableBundles { degree: i64 },
    /// `Jac^{jacobian_degree} × Sym^{sym_power} C`.
    JacobianTimesSym { jacobian_degree: i64, sym_power: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalStratum {
    pub index: u32,
    pub factors: StratumFactors,
    pub complex_dim: u32,
    pub morse_index: u32,
    pub poincare: PoincareSeries,
}

/// Poincaré polynomial of `Sym^k C`: the `q^k` coefficient of
/// `(1 + qt)^{2g} / ((1 - q)(1 - qt²))`, i.e. `Σ_{a ≤ min(k, 2g)} C(2g, a) t^a (1 + t² + ⋯ + t^{2(k-a)})`.
pub fn sym_poincare(g: u32, k: u32) -> PoincareSeries {
    let mut coeffs = vec![num_bigint::BigInt::from(0); 2 * k as usize + 1];
    for a in 0..=k.min(2 * g) {
        let b = binomial(2 * g as u64, a as u64);
        for c in 0..=(k - a) {
            coeffs[(a + 2 * c) as usize] += &b;
        }
    }
    PoincareSeries::polynomial(coeffs)
}

/// `(1 + t)^{2g}`.
pub fn jacobian_poincare(g: u32) -> PoincareSeries {
    PoincareSeries::one_plus_t_pow(1, 2 * g)
}

/// Equivariant series of the full space of rank-2 holomorphic structures,
/// `P(B𝒢) = (1+t)^{2g}(1+t³)^{2g} / ((1-t²)²(1-t⁴))`.
pub fn gauge_group_poincare(g: u32, trunc: usize) -> Result<PoincareSeries> {
    let numerator = &PoincareSeries::one_plus_t_pow(1, 2 * g) * &PoincareSeries::one_plus_t_pow(3, 2 * g);
    PoincareSeries::expand_rational(&numerator, &[2, 2, 4], trunc)
}

/// `P(B𝒢̄) = (1 - t²) P(B𝒢)`, splitting off the central circle.
pub fn classifying_space_poincare(g: u32, trunc: usize) -> Result<PoincareSeries> {
    Ok((&gauge_group_poincare(g, trunc)? * &PoincareSeries::one_minus_t_pow(2)).truncate(trunc))
}

/// Poincaré polynomial of the moduli of stable rank-2 bundles of odd degree `d` (no
/// fixed determinant), from the Harder–Narasimhan recursion
///
/// ```text
/// P^𝒢(ss) = P(B𝒢) - Σ_{d_1 > d/2} t^{2 codim} P(B𝒢_{split}),   P(N) = (1 - t²) P^𝒢(ss)
/// ```
///
/// with `P(B𝒢_{split}) = ((1+t)^{2g} / (1 - t²))²` and `codim = d_1 - d_2 + g - 1`.
pub fn stable_bundles_poincare(g: u32, d: i64) -> Result<PoincareSeries> {
    let params = ModuliParams::new(g, 0, d)?;
    let top = 2 * (4 * g as usize - 3);
    let trunc = top + 4;
    let total = gauge_group_poincare(g, trunc)?;
    let split = PoincareSeries::expand_rational(&PoincareSeries::one_plus_t_pow(1, 4 * g), &[2, 2], trunc)?;

    // strata with 2·codim > trunc cannot touch the kept degrees
    let max_top = params.degree + trunc as i64;
    let mut unstable = PoincareSeries::truncated(Vec::<i64>::new(), trunc);
    for mu in enum_hn_types(2, params.degree, max_top)?.iter().skip(1) {
        let shift = 2 * bundle_stratum_codim(mu, g)?;
        if shift as usize > trunc {
            break;
        }
        unstable = &unstable + &split.shift(shift as usize);
    }
    let semistable = &total - &unstable;
    let p = (&semistable * &PoincareSeries::one_minus_t_pow(2)).truncate(trunc);
    p.certify_polynomial(top)
}

/// Morse index (real) of the critical set `F^j`: twice `h¹` of a line bundle of degree
/// `1 - 2j`, which is `2(g + 2j - 2)` and does not depend on the pole order.
pub fn morse_index(g: u32, j: u32) -> u32 {
    if j == 0 {
        return 0;
    }
    let h1 = h1_negative_line_bundle(1 - 2 * j as i64, g).expect("degree 1 - 2j < 0");
    2 * h1 as u32
}

pub fn critical_manifolds(p: &ModuliParams) -> Result<Vec<CriticalStratum>> {
    let g = p.genus;
    let mut out = vec![CriticalStratum {
        index: 0,
        factors: StratumFactors::StableBundles { degree: p.degree },
        complex_dim: 4 * g - 3,
        morse_index: 0,
        poincare: stable_bundles_poincare(g, p.degree)?,
    }];
    for j in 1..=p.max_stratum() {
        let sym_power = 2 * g + p.pole_order - 1 - 2 * j;
        out.push(CriticalStratum {
            index: j,
            factors: StratumFactors::JacobianTimesSym {
                jacobian_degree: (p.degree + 1) / 2 - j as i64,
                sym_power,
            },
            complex_dim: g + sym_power,
            morse_index: morse_index(g, j),
            poincare: &jacobian_poincare(g) * &sym_poincare(g, sym_power),
        });
    }
    Ok(out)
}

/// Perfect-Morse assembly of the Poincaré polynomial of the Higgs moduli space.
pub fn higgs_poincare_morse(p: &ModuliParams) -> Result<PoincareSeries> {
    let total: PoincareSeries = critical_manifolds(p)?
        .into_iter()
        .map(|s| s.poincare.shift(s.morse_index as usize))
        .sum();
    if !total.all_nonnegative() {
        return Err(Error::Verification(format!("negative Betti number in {total}")));
    }
    Ok(total)
}
