//! Harder–Narasimhan types, their Shatz polygons, the polygon-containment partial
//! order, and the dimension counts attached to strata and moduli spaces.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// `χ(A) = deg A + 1 - g` for a line bundle `A` on a genus-`g` curve.
pub fn riemann_roch_chi(degree: i64, g: u32) -> i64 {
    degree + 1 - g as i64
}

/// `h¹` of a line bundle of negative degree (where `h⁰ = 0`).
pub fn h1_negative_line_bundle(degree: i64, g: u32) -> Result<i64> {
    if degree >= 0 {
        return Err(Error::InvalidParameter(format!(
            "h¹ shortcut needs negative degree, got {degree}"
        )));
    }
    Ok(-riemann_roch_chi(degree, g))
}

/// `deg K(n) = 2g - 2 + n`.
pub fn twisted_canonical_degree(g: u32, n: u32) -> i64 {
    2 * g as i64 - 2 + n as i64
}

/// A Harder–Narasimhan type `((r_1, d_1), …, (r_ℓ, d_ℓ))` with strictly decreasing slopes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HNType {
    parts: Vec<(u32, i64)>,
}

fn slope_decreases(a: (u32, i64), b: (u32, i64)) -> bool {
    // d_a / r_a > d_b / r_b
    a.1 * b.0 as i64 > b.1 * a.0 as i64
}

fn validate_parts(parts: &[(u32, i64)]) -> Result<()> {
    if parts.is_empty() {
        return Err(Error::InvalidParameter("empty Harder–Narasimhan type".into()));
    }
    if let Some(p) = parts.iter().find(|p| p.0 == 0) {
        return Err(Error::InvalidParameter(format!("part {p:?} has rank 0")));
    }
    if let Some(w) = parts.windows(2).find(|w| !slope_decreases(w[0], w[1])) {
        return Err(Error::InvalidParameter(format!(
            "slopes must strictly decrease: {}/{} then {}/{}",
            w[0].1, w[0].0, w[1].1, w[1].0
        )));
    }
    Ok(())
}

impl HNType {
    pub fn new(parts: Vec<(u32, i64)>) -> Result<Self> {
        validate_parts(&parts)?;
        Ok(HNType { parts })
    }

    pub fn semistable(rank: u32, degree: i64) -> Result<Self> {
        Self::new(vec![(rank, degree)])
    }

    /// The rank-2 split type `((1, d_1), (1, d - d_1))`.
    pub fn split(d1: i64, d: i64) -> Result<Self> {
        Self::new(vec![(1, d1), (1, d - d1)])
    }

    pub fn parts(&self) -> &[(u32, i64)] {
        &self.parts
    }

    pub fn rank(&self) -> u32 {
        self.parts.iter().map(|p| p.0).sum()
    }

    pub fn degree(&self) -> i64 {
        self.parts.iter().map(|p| p.1).sum()
    }

    pub fn is_semistable(&self) -> bool {
        self.parts.len() == 1
    }

    /// `(d_1, d_2)` for a rank-2 unstable type.
    fn rank_two_split(&self) -> Result<(i64, i64)> {
        match self.parts.as_slice() {
            [(1, d1), (1, d2)] => Ok((*d1, *d2)),
            [_] => Err(Error::InvalidParameter(format!(
                "semistable type {self} has no unstable stratum"
            ))),
            _ => Err(Error::NotImplemented(format!(
                "strata of type {self}: only rank-2 types are supported"
            ))),
        }
    }
}

impl fmt::Display for HNType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (r, d)) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({r},{d})")?;
        }
        write!(f, "]")
    }
}

/// The convex polygon through the partial sums of a type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polygon {
    vertices: Vec<(i64, i64)>,
}

impl Polygon {
    /// Vertices `(0,0), (r_1, d_1), (r_1 + r_2, d_1 + d_2), …`; errors unless the edge
    /// slopes strictly decrease.
    pub fn from_parts(parts: &[(u32, i64)]) -> Result<Self> {
        validate_parts(parts)?;
        let mut vertices = vec![(0, 0)];
        let (mut x, mut y) = (0i64, 0i64);
        for &(r, d) in parts {
            x += r as i64;
            y += d;
            vertices.push((x, y));
        }
        Ok(Polygon { vertices })
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn is_convex(&self) -> bool {
        self.vertices.windows(3).all(|w| {
            let (a, b, c) = (w[0], w[1], w[2]);
            // right turn: cross((b - a), (c - b)) < 0
            (b.0 - a.0) * (c.1 - b.1) - (b.1 - a.1) * (c.0 - b.0) < 0
        })
    }

    /// Whether `(x, y)` lies on or below the upper boundary, for `0 <= x <= r`.
    fn below_upper_boundary(&self, (x, y): (i64, i64)) -> bool {
        self.vertices.windows(2).any(|w| {
            let ((x0, y0), (x1, y1)) = (w[0], w[1]);
            x0 <= x && x <= x1 && (y - y0) * (x1 - x0) <= (y1 - y0) * (x - x0)
        })
    }

    /// Containment of polygons sharing endpoints.
    pub fn contained_in(&self, other: &Polygon) -> bool {
        self.vertices.first() == other.vertices.first()
            && self.vertices.last() == other.vertices.last()
            && self.vertices.iter().all(|&v| other.below_upper_boundary(v))
    }
}

pub fn polygon(mu: &HNType) -> Polygon {
    let p = Polygon::from_parts(&mu.parts).expect("HNType is validated on construction");
    debug_assert!(p.is_convex());
    p
}

/// `μ ≤ ν` iff `Pol(μ) ⊆ Pol(ν)`.
pub fn type_leq(mu: &HNType, nu: &HNType) -> Result<bool> {
    if (mu.rank(), mu.degree()) != (nu.rank(), nu.degree()) {
        return Err(Error::InvalidParameter(format!(
            "types {mu} and {nu} have different totals (r, d)"
        )));
    }
    Ok(polygon(mu).contained_in(&polygon(nu)))
}

/// Semistable type followed by the unstable types with top degree `d_1 <= max_top_degree`,
/// in increasing `d_1`.
pub fn enum_hn_types(r: u32, d: i64, max_top_degree: i64) -> Result<Vec<HNType>> {
    match r {
        0 => Err(Error::InvalidParameter("rank must be positive".into())),
        1 => Ok(vec![HNType::semistable(1, d)?]),
        2 => {
            let mut out = vec![HNType::semistable(2, d)?];
            let first = d.div_euclid(2) + 1;
            for d1 in first..=max_top_degree {
                out.push(HNType::split(d1, d)?);
            }
            Ok(out)
        }
        _ => Err(Error::NotImplemented(format!("rank > 2 (r = {r})"))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StratumCodim {
    /// `-χ` of the deformation complex; a lower bound for `dim Hyp¹`.
    pub chi_bound: i64,
    /// `dim Hyp¹` when `Hyp²` provably vanishes.
    pub exact: Option<i64>,
}

/// Codimension of the unstable Higgs stratum of a rank-2 type: `dim Hyp¹` of
/// `Hom(L, M) → Hom(L, M) ⊗ K(n)` with `deg L = d_1 > deg M = d_2`.
pub fn stratum_codim(mu: &HNType, g: u32, n: u32) -> Result<StratumCodim> {
    let (d1, d2) = mu.rank_two_split()?;
    let a = d2 - d1;
    let twist = twisted_canonical_degree(g, n);
    let chi = riemann_roch_chi(a, g) - riemann_roch_chi(a + twist, g);
    // Hyp⁰ = 0 always; Hyp² = 0 once H¹(A ⊗ K(n)) = 0, i.e. deg > 2g - 2
    let exact = (a + twist > 2 * g as i64 - 2).then_some(-chi);
    Ok(StratumCodim {
        chi_bound: -chi,
        exact,
    })
}

/// Complex codimension `h¹(M L⁻¹) = d_1 - d_2 + g - 1` of the rank-2 bundle stratum
/// (no Higgs field) of type `((1, d_1), (1, d_2))`.
pub fn bundle_stratum_codim(mu: &HNType, g: u32) -> Result<i64> {
    let (d1, d2) = mu.rank_two_split()?;
    h1_negative_line_bundle(d2 - d1, g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ModuliDims {
    pub full: i64,
    pub fixed_det: i64,
}

/// Complex dimensions of the rank-`r` moduli of `K(n)`-twisted Higgs bundles and of the
/// fixed-determinant, trace-free locus.
pub fn moduli_dims(r: u32, g: u32, n: u32) -> ModuliDims {
    let r2 = (r as i64) * (r as i64);
    let twist = twisted_canonical_degree(g, n);
    // -χ of End E → End E ⊗ K(n) is r² deg K(n); the scalars add one each to Hyp⁰ and Hyp²
    ModuliDims {
        full: r2 * twist + 2,
        fixed_det: (r2 - 1) * twist,
    }
}
