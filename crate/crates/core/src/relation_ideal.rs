//! The relation ideals `I^{g'}_{k'} ⊂ Q[α, β, γ]`, Hilbert series of their quotients,
//! and the ring-side Poincaré series
//!
//! ```text
//! H*(M)^Σ = ⊕_{k=0}^{g} Λ^k_0(ψ) ⊗ Q[α,β,γ] / I^{g-k}_k,      H*(H) = H*(Jac) ⊗ H*(M)^Σ.
//! ```
//!
//! The ideal is generated by `γ^{g'+1}` and the elements
//!
//! ```text
//! ρ^c_{r,s,t} = Σ_{i=0}^{min(c,r,s)} (c-i)! α^{r-i}/(r-i)! β^{s-i}/(s-i)! (2γ)^{t+i}/i!
//! c = r + 3s + 2t - 2g' + 2 - k'
//! ```
//!
//! for `r + 3s + 3t > 3g' - 3 + k'` and `r + 2s + 2t >= 2g' - 2 + k'`. Membership is decided
//! one degree at a time by exact rank over the monomial basis.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graded::{graded_slice_rank, EvenMonomial, RingElement};
use crate::morse::jacobian_poincare;
use crate::primitive::primitive_dim;
use crate::series::PoincareSeries;

/// Parameters `(g', k')` of the ideal `I^{g'}_{k'}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IdealSpec {
    pub genus: u32,
    pub index: u32,
}

impl IdealSpec {
    pub fn new(genus: u32, index: u32) -> Self {
        IdealSpec { genus, index }
    }

    /// `c = r + 3s + 2t - 2g' + 2 - k'`.
    pub fn c(&self, r: u32, s: u32, t: u32) -> i64 {
        r as i64 + 3 * s as i64 + 2 * t as i64 - 2 * self.genus as i64 + 2 - self.index as i64
    }

    pub fn check_admissible(&self, r: u32, s: u32, t: u32) -> Result<()> {
        let (g, k) = (self.genus as i64, self.index as i64);
        let (ri, si, ti) = (r as i64, s as i64, t as i64);
        let violated = if ri + 3 * si + 3 * ti <= 3 * g - 3 + k {
            format!("r + 3s + 3t > 3g' - 3 + k' fails ({} <= {})", ri + 3 * si + 3 * ti, 3 * g - 3 + k)
        } else if ri + 2 * si + 2 * ti < 2 * g - 2 + k {
            format!("r + 2s + 2t >= 2g' - 2 + k' fails ({} < {})", ri + 2 * si + 2 * ti, 2 * g - 2 + k)
        } else {
            return Ok(());
        };
        Err(Error::Inadmissible { r, s, t, violated })
    }

    pub fn is_admissible(&self, r: u32, s: u32, t: u32) -> bool {
        self.check_admissible(r, s, t).is_ok()
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `ρ^c_{r,s,t}` for an admissible triple; homogeneous of degree `2r + 4s + 6t`.
pub fn rho(spec: IdealSpec, r: u32, s: u32, t: u32) -> Result<RingElement> {
    spec.check_admissible(r, s, t)?;
    let c = spec.c(r, s, t);
    assert!(c >= s as i64, "admissibility forces c >= s (c = {c}, s = {s})");
    let c = c as u32;
    let mut out = RingElement::zero();
    for i in 0..=c.min(r).min(s) {
        let numer = factorial(c - i) * BigInt::from(2).pow(t + i);
        let denom = factorial(r - i) * factorial(s - i) * factorial(i);
        out.add_term(
            EvenMonomial::new(r - i, s - i, t + i),
            BigRational::new(numer, denom),
        );
    }
    let degree = 2 * r + 4 * s + 6 * t;
    match out.homogeneous_degree()? {
        Some(d) if d != degree => {
            return Err(Error::Inhomogeneous {
                expected: degree,
                found: d,
            })
        }
        _ => {}
    }
    Ok(out)
}

/// The generators `γ^{g'+1}` and all admissible `ρ^c_{r,s,t}` of degree at most
/// `max_degree`, paired with their degrees.
pub fn ideal_generators(spec: IdealSpec, max_degree: u32) -> Result<Vec<(RingElement, u32)>> {
    let mut out = Vec::new();
    let top = 6 * (spec.genus + 1);
    if top <= max_degree {
        out.push((RingElement::gamma().pow(spec.genus + 1), top));
    }
    for t in 0..=max_degree / 6 {
        for s in 0..=(max_degree - 6 * t) / 4 {
            for r in 0..=(max_degree - 6 * t - 4 * s) / 2 {
                if spec.is_admissible(r, s, t) {
                    out.push((rho(spec, r, s, t)?, 2 * r + 4 * s + 6 * t));
                }
            }
        }
    }
    Ok(out)
}

/// A spanning set of the degree-`d` slice of the ideal: every generator times every
/// monomial completing it to degree `d`.
pub fn ideal_basis_in_degree(spec: IdealSpec, d: u32) -> Result<Vec<RingElement>> {
    Ok(ideal_generators(spec, d)?
        .into_iter()
        .flat_map(|(gen, deg)| {
            EvenMonomial::of_degree(d - deg)
                .into_iter()
                .map(move |m| gen.mul_monomial(&m))
        })
        .collect())
}

/// Hilbert series of `Q[α, β, γ] / I^{g'}_{k'}`, exact through `max_degree`.
pub fn quotient_hilbert(spec: IdealSpec, max_degree: u32) -> Result<PoincareSeries> {
    let generators = ideal_generators(spec, max_degree)?;
    let mut coeffs = Vec::with_capacity(max_degree as usize + 1);
    for d in 0..=max_degree {
        let monomials = EvenMonomial::count_of_degree(d);
        if monomials == 0 {
            coeffs.push(0i64);
            continue;
        }
        let slice: Vec<RingElement> = generators
            .iter()
            .filter(|(_, deg)| *deg <= d)
            .flat_map(|(gen, deg)| {
                EvenMonomial::of_degree(d - deg)
                    .into_iter()
                    .map(move |m| gen.mul_monomial(&m))
            })
            .collect();
        let rank = graded_slice_rank(&slice, d)?;
        coeffs.push((monomials - rank) as i64);
    }
    Ok(PoincareSeries::truncated(coeffs, max_degree as usize))
}

/// `Σ_{k=0}^{g} t^{3k} dim Λ^k_0 · Hilb(Q[α,β,γ]/I^{g-k}_k)`, exact through `max_degree`.
pub fn dd_rhs_series_through(g: u32, max_degree: u32) -> Result<PoincareSeries> {
    if g == 0 {
        return Err(Error::InvalidParameter("genus must be at least 1".into()));
    }
    let mut total = PoincareSeries::truncated(Vec::<i64>::new(), max_degree as usize);
    for k in 0..=g {
        let dim = primitive_dim(g, k)?;
        if dim == 0 {
            continue;
        }
        let quotient = quotient_hilbert(IdealSpec::new(g - k, k), max_degree)?;
        total = &total + &quotient.scale(&BigInt::from(dim)).shift(3 * k as usize);
    }
    Ok(total)
}

/// Degrees beyond `6g - 6` computed to witness that the series stops there.
const VANISHING_MARGIN: u32 = 6;

/// The ring-side Poincaré polynomial of `H*(M)^Σ`, certified to vanish above `6g - 6`.
pub fn dd_rhs_series(g: u32) -> Result<PoincareSeries> {
    let dim = 6 * g.max(1) - 6;
    dd_rhs_series_through(g, dim + VANISHING_MARGIN)?.certify_polynomial(dim as usize)
}

/// `(1 + t)^{2g} · P_t(H*(M)^Σ)`.
pub fn full_h_series(g: u32) -> Result<PoincareSeries> {
    Ok(&jacobian_poincare(g) * &dd_rhs_series(g)?)
}
