//! Graded-commutative algebra on the universal classes.
//!
//! The even part is `Q[α, β, γ]` with `deg α = 2`, `deg β = 4`, `deg γ = 6`; the odd
//! part is the exterior algebra on `ψ_1, …, ψ_{2g}` with every `ψ_j` of degree 3.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_degree(degree: u32) -> Self {
        if degree.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// One universal generator: its name, cohomological degree and parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
    pub parity: Parity,
    /// For the rank-2 classes, the raw class this one is normalized from
    /// together with the rational scale, e.g. `α = ½ α_2`.
    pub normalization: Option<(String, BigRational)>,
}

impl GeneratorSpec {
    fn new(name: String, degree: u32) -> Self {
        GeneratorSpec {
            name,
            degree,
            parity: Parity::of_degree(degree),
            normalization: None,
        }
    }

    fn normalized(name: &str, degree: u32, source: &str, scale: (i64, i64)) -> Self {
        GeneratorSpec {
            normalization: Some((
                source.to_owned(),
                BigRational::new(scale.0.into(), scale.1.into()),
            )),
            ..Self::new(name.to_owned(), degree)
        }
    }
}

/// The full table of universal classes for rank `r` and genus `g`.
///
/// `ε_j` come from the Jacobian; `α_i, β_i, ψ_{i,j}` are the Künneth components of the
/// `i`-th characteristic class of the projectivized universal bundle, `i = 2..=r`, against
/// the curve classes `σ` and `e_j`.
pub fn universal_classes(g: u32, r: u32) -> Vec<GeneratorSpec> {
    let mut out: Vec<_> = (1..=2 * g)
        .map(|j| GeneratorSpec::new(format!("ε_{j}"), 1))
        .collect();
    for i in 2..=r {
        out.push(GeneratorSpec::new(format!("α_{i}"), 2 * i - 2));
        out.push(GeneratorSpec::new(format!("β_{i}"), 2 * i));
        out.extend((1..=2 * g).map(|j| GeneratorSpec::new(format!("ψ_{i},{j}"), 2 * i - 1)));
    }
    out
}

/// The normalized rank-2 generators `α, β, ψ_1..ψ_{2g}` and the derived class `γ`.
pub fn rank_two_classes(g: u32) -> Vec<GeneratorSpec> {
    let mut out = vec![
        GeneratorSpec::normalized("α", 2, "α_2", (1, 2)),
        GeneratorSpec::normalized("β", 4, "β_2", (-1, 4)),
    ];
    out.extend(
        (1..=2 * g).map(|j| GeneratorSpec::normalized(&format!("ψ_{j}"), 3, &format!("ψ_2,{j}"), (1, 1))),
    );
    out.push(GeneratorSpec::new("γ".to_owned(), 6));
    out
}

/// `α^a β^b γ^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EvenMonomial {
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
}

impl EvenMonomial {
    pub const ONE: EvenMonomial = EvenMonomial::new(0, 0, 0);

    pub const fn new(alpha: u32, beta: u32, gamma: u32) -> Self {
        EvenMonomial { alpha, beta, gamma }
    }

    pub fn degree(&self) -> u32 {
        2 * self.alpha + 4 * self.beta + 6 * self.gamma
    }

    pub fn mul(&self, other: &Self) -> Self {
        EvenMonomial::new(
            self.alpha + other.alpha,
            self.beta + other.beta,
            self.gamma + other.gamma,
        )
    }

    /// All monomials of cohomological degree `d`, ascending in the monomial order.
    pub fn of_degree(d: u32) -> Vec<Self> {
        let mut out = Vec::new();
        if d % 2 == 1 {
            return out;
        }
        for gamma in 0..=d / 6 {
            for beta in 0..=(d - 6 * gamma) / 4 {
                let rest = d - 6 * gamma - 4 * beta;
                out.push(EvenMonomial::new(rest / 2, beta, gamma));
            }
        }
        out.sort();
        out
    }

    pub fn count_of_degree(d: u32) -> usize {
        Self::of_degree(d).len()
    }
}

impl Ord for EvenMonomial {
    /// Graded lex with `α < β < γ`: degree first, then the exponent of the largest variable.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.gamma.cmp(&other.gamma))
            .then(self.beta.cmp(&other.beta))
            .then(self.alpha.cmp(&other.alpha))
    }
}

impl PartialOrd for EvenMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EvenMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::ONE {
            return write!(f, "1");
        }
        for (sym, e) in [("α", self.alpha), ("β", self.beta), ("γ", self.gamma)] {
            match e {
                0 => {}
                1 => write!(f, "{sym}")?,
                _ => write!(f, "{sym}^{e}")?,
            }
        }
        Ok(())
    }
}

fn fmt_terms<K: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (K, BigRational)>,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        let key = k.to_string();
        let sign = if c.is_negative() { "-" } else { "+" };
        if !first {
            write!(f, " {sign} ")?;
        } else if c.is_negative() {
            write!(f, "-")?;
        }
        first = false;
        let mag = c.abs();
        match (mag.is_one(), key.as_str()) {
            (_, "1") => write!(f, "{mag}")?,
            (true, _) => write!(f, "{key}")?,
            (false, _) => write!(f, "{mag}·{key}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// An element of `Q[α, β, γ]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RingElement {
    terms: BTreeMap<EvenMonomial, BigRational>,
}

impl RingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(EvenMonomial::ONE, c)
    }

    pub fn term(m: EvenMonomial, c: BigRational) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn monomial(m: EvenMonomial) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn alpha() -> Self {
        Self::monomial(EvenMonomial::new(1, 0, 0))
    }

    pub fn beta() -> Self {
        Self::monomial(EvenMonomial::new(0, 1, 0))
    }

    pub fn gamma() -> Self {
        Self::monomial(EvenMonomial::new(0, 0, 1))
    }

    pub fn add_term(&mut self, m: EvenMonomial, c: BigRational) {
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&EvenMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &EvenMonomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The common degree of all terms, or `None` for zero; errors if terms disagree.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut iter = self.terms.keys().map(EvenMonomial::degree);
        let Some(first) = iter.next() else {
            return Ok(None);
        };
        match iter.find(|&d| d != first) {
            Some(found) => Err(Error::Inhomogeneous {
                expected: first,
                found,
            }),
            None => Ok(Some(first)),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RingElement {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &EvenMonomial) -> Self {
        RingElement {
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    /// Commutative product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(BigRational::one()), |acc, _| acc.mul(self))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter().map(|(m, c)| (*m, c.clone())))
    }
}

/// A square-free product `ψ_{i_1} ψ_{i_2} ⋯` with `i_1 < i_2 < ⋯`, as a bit set
/// (bit `j - 1` stands for `ψ_j`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PsiSet(u32);

/// Bit width of [`PsiSet`] caps the genus.
pub const MAX_GENUS: u32 = 16;

impl PsiSet {
    pub const EMPTY: PsiSet = PsiSet(0);

    /// From 1-based indices in any order, or `None` on a repeated index.
    pub fn from_indices(indices: &[u32]) -> Option<Self> {
        let mut bits = 0u32;
        for &j in indices {
            assert!((1..=2 * MAX_GENUS).contains(&j), "ψ index {j} out of range");
            let b = 1 << (j - 1);
            if bits & b != 0 {
                return None;
            }
            bits |= b;
        }
        Some(PsiSet(bits))
    }

    pub fn len(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn indices(&self) -> Vec<u32> {
        (0..32).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    pub fn degree(&self) -> u32 {
        3 * self.len()
    }

    /// `self ∧ other` as `sign · (self ∪ other)`, or `None` when they share an index.
    pub fn wedge(&self, other: &Self) -> Option<(Self, bool)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // sign = parity of pairs (a in self, b in other) with a > b
        let inversions: u32 = other
            .indices()
            .iter()
            .map(|&b| (self.0 >> b).count_ones())
            .sum();
        Some((PsiSet(self.0 | other.0), inversions % 2 == 1))
    }

    /// All subsets of `{ψ_1..ψ_n}` of size `k`, ascending.
    pub fn subsets(n: u32, k: u32) -> Vec<Self> {
        let mut out: Vec<_> = (0u32..(1 << n))
            .filter(|s| s.count_ones() == k)
            .map(PsiSet)
            .collect();
        out.sort_by_key(|s| s.indices());
        out
    }
}

impl fmt::Display for PsiSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for j in self.indices() {
            write!(f, "ψ{j}")?;
        }
        Ok(())
    }
}

/// An element of `Λ* V`, `V` spanned by `ψ_1..ψ_{2g}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorElement {
    genus: u32,
    terms: BTreeMap<PsiSet, BigRational>,
}

impl ExteriorElement {
    pub fn zero(genus: u32) -> Self {
        assert!(genus <= MAX_GENUS, "genus {genus} exceeds {MAX_GENUS}");
        ExteriorElement {
            genus,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(genus: u32) -> Self {
        Self::basis(genus, PsiSet::EMPTY)
    }

    pub fn basis(genus: u32, set: PsiSet) -> Self {
        let mut out = Self::zero(genus);
        out.add_term(set, BigRational::one());
        out
    }

    /// `ψ_{i_1} ∧ ψ_{i_2} ∧ ⋯` in the given order; sorting contributes the permutation sign.
    pub fn psi_product(genus: u32, indices: &[u32]) -> Self {
        assert!(
            indices.iter().all(|&j| (1..=2 * genus).contains(&j)),
            "ψ index out of range for genus {genus}"
        );
        indices.iter().fold(Self::one(genus), |acc, &j| {
            acc.wedge(&Self::basis(genus, PsiSet::from_indices(&[j]).unwrap()))
                .expect("same genus")
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn add_term(&mut self, set: PsiSet, c: BigRational) {
        assert!(
            set.indices().iter().all(|&j| j <= 2 * self.genus),
            "ψ index out of range for genus {}",
            self.genus
        );
        let entry = self.terms.entry(set).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&set);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PsiSet, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, set: &PsiSet) -> BigRational {
        self.terms.get(set).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut iter = self.terms.keys().map(PsiSet::degree);
        let Some(first) = iter.next() else {
            return Ok(None);
        };
        match iter.find(|&d| d != first) {
            Some(found) => Err(Error::Inhomogeneous {
                expected: first,
                found,
            }),
            None => Ok(Some(first)),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.genus);
        for (s, x) in &self.terms {
            out.add_term(*s, x * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_genus(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(*s, c.clone());
        }
        Ok(out)
    }

    fn check_genus(&self, other: &Self) -> Result<()> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        Ok(())
    }

    /// Graded-anticommutative product; each `ψ_j` is odd.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_genus(other)?;
        let mut out = Self::zero(self.genus);
        for (s1, c1) in &self.terms {
            for (s2, c2) in &other.terms {
                if let Some((s, negative)) = s1.wedge(s2) {
                    let c = c1 * c2;
                    out.add_term(s, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.genus), |acc, _| {
            acc.wedge(self).expect("same genus")
        })
    }
}

impl fmt::Display for ExteriorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.terms.iter().map(|(s, c)| (*s, c.clone())))
    }
}

/// `γ = -2 Σ_{j=1}^{g} ψ_j ψ_{j+g}`, the symplectic class in `Λ² V`.
pub fn gamma_element(g: u32) -> ExteriorElement {
    let mut out = ExteriorElement::zero(g);
    for j in 1..=g {
        out.add_term(
            PsiSet::from_indices(&[j, j + g]).unwrap(),
            BigRational::from_integer(BigInt::from(-2)),
        );
    }
    out
}

/// Homogeneous vectors that [`graded_slice_rank`] can place in a common monomial basis.
pub trait GradedVector {
    type Key: Ord + Copy;

    fn homogeneous_degree(&self) -> Result<Option<u32>>;
    fn coordinates(&self) -> Vec<(Self::Key, BigRational)>;
}

impl GradedVector for RingElement {
    type Key = EvenMonomial;

    fn homogeneous_degree(&self) -> Result<Option<u32>> {
        RingElement::homogeneous_degree(self)
    }

    fn coordinates(&self) -> Vec<(EvenMonomial, BigRational)> {
        self.terms.iter().map(|(m, c)| (*m, c.clone())).collect()
    }
}

impl GradedVector for ExteriorElement {
    type Key = PsiSet;

    fn homogeneous_degree(&self) -> Result<Option<u32>> {
        ExteriorElement::homogeneous_degree(self)
    }

    fn coordinates(&self) -> Vec<(PsiSet, BigRational)> {
        self.terms.iter().map(|(s, c)| (*s, c.clone())).collect()
    }
}

/// Rank over `Q` of homogeneous vectors of degree `degree`, written in the monomial basis.
pub fn graded_slice_rank<V: GradedVector>(vectors: &[V], degree: u32) -> Result<usize> {
    let mut columns: BTreeMap<V::Key, usize> = BTreeMap::new();
    for v in vectors {
        if let Some(d) = v.homogeneous_degree()? {
            if d != degree {
                return Err(Error::Inhomogeneous {
                    expected: degree,
                    found: d,
                });
            }
        }
        for (k, _) in v.coordinates() {
            let next = columns.len();
            columns.entry(k).or_insert(next);
        }
    }
    let rows: Vec<Vec<BigRational>> = vectors
        .iter()
        .map(|v| {
            let mut row = vec![BigRational::zero(); columns.len()];
            for (k, c) in v.coordinates() {
                row[columns[&k]] = c;
            }
            row
        })
        .collect();
    Ok(linalg::rational_rank(&rows))
}
