//! Integer-coefficient polynomials and truncated power series in one variable `t`.
//!
//! A [`PoincareSeries`] is either an exact polynomial or a power series that is
//! known to be exact through some degree `N`. Operations propagate that bound
//! and refuse to report coefficients above it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeriesJson", into = "SeriesJson")]
pub struct PoincareSeries {
    /// Index is the degree in `t`. Trailing zeros are never stored.
    coeffs: Vec<BigInt>,
    /// `Some(n)`: coefficients are exact through degree `n` and unknown above it.
    exact_through: Option<usize>,
}

fn min_bound(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl PoincareSeries {
    fn normalized(mut coeffs: Vec<BigInt>, exact_through: Option<usize>) -> Self {
        if let Some(n) = exact_through {
            coeffs.truncate(n + 1);
        }
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PoincareSeries {
            coeffs,
            exact_through,
        }
    }

    pub fn zero() -> Self {
        Self::normalized(Vec::new(), None)
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `coeff * t^degree`.
    pub fn monomial(coeff: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = coeff;
        Self::normalized(coeffs, None)
    }

    pub fn polynomial<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        Self::normalized(coeffs.into_iter().map(Into::into).collect(), None)
    }

    /// A series known exactly through degree `exact_through`; higher entries are dropped.
    pub fn truncated<I, C>(coeffs: I, exact_through: usize) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        Self::normalized(
            coeffs.into_iter().map(Into::into).collect(),
            Some(exact_through),
        )
    }

    /// `(1 + t^step)^power`, expanded binomially.
    pub fn one_plus_t_pow(step: usize, power: u32) -> Self {
        assert!(step > 0, "step must be positive");
        let mut coeffs = vec![BigInt::zero(); step * power as usize + 1];
        for k in 0..=power {
            coeffs[step * k as usize] = binomial(power as u64, k as u64);
        }
        Self::normalized(coeffs, None)
    }

    /// `1 - t^step`.
    pub fn one_minus_t_pow(step: usize) -> Self {
        assert!(step > 0, "step must be positive");
        let mut coeffs = vec![BigInt::zero(); step + 1];
        coeffs[0] = BigInt::one();
        coeffs[step] = -BigInt::one();
        Self::normalized(coeffs, None)
    }

    pub fn exact_through(&self) -> Option<usize> {
        self.exact_through
    }

    pub fn is_polynomial(&self) -> bool {
        self.exact_through.is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Stored coefficients; everything above is zero (or unknown past the truncation).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree of a nonzero exact polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.exact_through.is_some() {
            return None;
        }
        self.coeffs.len().checked_sub(1)
    }

    fn ensure_known(&self, degree: usize) -> Result<()> {
        match self.exact_through {
            Some(n) if degree > n => Err(Error::InsufficientTruncation {
                needed: degree,
                available: n,
            }),
            _ => Ok(()),
        }
    }

    pub fn coeff(&self, degree: usize) -> Result<BigInt> {
        self.ensure_known(degree)?;
        Ok(self.coeffs.get(degree).cloned().unwrap_or_default())
    }

    /// Forget everything above `degree`.
    pub fn truncate(&self, degree: usize) -> Self {
        Self::normalized(
            self.coeffs.clone(),
            min_bound(self.exact_through, Some(degree)),
        )
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() && self.exact_through.is_none() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::normalized(coeffs, self.exact_through.map(|n| n + k))
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self::normalized(
            self.coeffs.iter().map(|c| c * factor).collect(),
            self.exact_through,
        )
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value at `t = -1`, i.e. the Euler characteristic of a Poincaré polynomial.
    pub fn eval_at_minus_one(&self) -> Result<BigInt> {
        if let Some(n) = self.exact_through {
            return Err(Error::InsufficientTruncation {
                needed: n + 1,
                available: n,
            });
        }
        Ok(self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
            .sum())
    }

    /// `t^d P(1/t) == P(t)` for an exact polynomial of formal degree `d`.
    pub fn is_palindromic(&self, d: usize) -> Result<bool> {
        if let Some(n) = self.exact_through {
            return Err(Error::InsufficientTruncation {
                needed: d,
                available: n,
            });
        }
        if self.coeffs.len() > d + 1 {
            return Ok(false);
        }
        let zero = BigInt::zero();
        let at = |i: usize| self.coeffs.get(i).unwrap_or(&zero);
        Ok((0..=d).all(|i| at(i) == at(d - i)))
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Promote a truncated series to an exact polynomial of degree at most `max_degree`.
    ///
    /// The series must be known strictly beyond `max_degree` and vanish there, so the
    /// claimed polynomial is witnessed rather than assumed.
    pub fn certify_polynomial(&self, max_degree: usize) -> Result<Self> {
        if let Some(n) = self.exact_through {
            if n <= max_degree {
                return Err(Error::InsufficientTruncation {
                    needed: max_degree + 1,
                    available: n,
                });
            }
        }
        if self.coeffs.len() > max_degree + 1 {
            return Err(Error::Verification(format!(
                "expected a polynomial of degree <= {max_degree}, found nonzero t^{} coefficient",
                self.coeffs.len() - 1
            )));
        }
        Ok(Self::normalized(self.coeffs.clone(), None))
    }

    /// Expand `numerator / prod_i (1 - t^{a_i})` as a power series exact through `trunc`.
    pub fn expand_rational(numerator: &Self, denom_factors: &[usize], trunc: usize) -> Result<Self> {
        numerator.ensure_known(trunc)?;
        if let Some(&bad) = denom_factors.iter().find(|&&a| a == 0) {
            return Err(Error::InvalidParameter(format!(
                "denominator factor 1 - t^{bad} must have positive exponent"
            )));
        }
        let mut coeffs: Vec<BigInt> = (0..=trunc)
            .map(|i| numerator.coeffs.get(i).cloned().unwrap_or_default())
            .collect();
        // dividing by (1 - t^a) is the running recurrence c_k += c_{k-a}
        for &a in denom_factors {
            for k in a..=trunc {
                let prev = coeffs[k - a].clone();
                coeffs[k] += prev;
            }
        }
        Ok(Self::normalized(coeffs, Some(trunc)))
    }

    /// Coefficientwise `a <= b` in every degree `0..=through`.
    pub fn coeffwise_leq(a: &Self, b: &Self, through: usize) -> Result<bool> {
        a.ensure_known(through)?;
        b.ensure_known(through)?;
        let zero = BigInt::zero();
        Ok((0..=through).all(|i| {
            a.coeffs.get(i).unwrap_or(&zero) <= b.coeffs.get(i).unwrap_or(&zero)
        }))
    }
}

impl Default for PoincareSeries {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &PoincareSeries {
    type Output = PoincareSeries;

    fn add(self, rhs: &PoincareSeries) -> PoincareSeries {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        let coeffs = (0..len)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
            .collect();
        PoincareSeries::normalized(coeffs, min_bound(self.exact_through, rhs.exact_through))
    }
}

impl Neg for &PoincareSeries {
    type Output = PoincareSeries;

    fn neg(self) -> PoincareSeries {
        PoincareSeries::normalized(self.coeffs.iter().map(|c| -c).collect(), self.exact_through)
    }
}

impl Sub for &PoincareSeries {
    type Output = PoincareSeries;

    fn sub(self, rhs: &PoincareSeries) -> PoincareSeries {
        self + &(-rhs)
    }
}

impl Mul for &PoincareSeries {
    type Output = PoincareSeries;

    fn mul(self, rhs: &PoincareSeries) -> PoincareSeries {
        let bound = min_bound(self.exact_through, rhs.exact_through);
        if self.is_zero() || rhs.is_zero() {
            return PoincareSeries::normalized(Vec::new(), bound);
        }
        let mut len = self.coeffs.len() + rhs.coeffs.len() - 1;
        if let Some(n) = bound {
            len = len.min(n + 1);
        }
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] += a * b;
            }
        }
        PoincareSeries::normalized(coeffs, bound)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for PoincareSeries {
            type Output = PoincareSeries;
            fn $method(self, rhs: PoincareSeries) -> PoincareSeries {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for PoincareSeries {
    fn sum<I: Iterator<Item = PoincareSeries>>(iter: I) -> Self {
        iter.fold(PoincareSeries::zero(), |acc, s| &acc + &s)
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        if let Some(n) = self.exact_through {
            write!(f, " + O(t^{})", n + 1)?;
        }
        Ok(())
    }
}

/// Wire form: `{"var":"t","coeffs":["1","4","1"],"exact_through":null}`.
#[derive(Serialize, Deserialize)]
struct SeriesJson {
    var: String,
    coeffs: Vec<String>,
    exact_through: Option<usize>,
}

impl From<PoincareSeries> for SeriesJson {
    fn from(s: PoincareSeries) -> Self {
        SeriesJson {
            var: "t".to_owned(),
            coeffs: s.coeffs.iter().map(ToString::to_string).collect(),
            exact_through: s.exact_through,
        }
    }
}

impl TryFrom<SeriesJson> for PoincareSeries {
    type Error = Error;

    fn try_from(j: SeriesJson) -> Result<Self> {
        if j.var != "t" {
            return Err(Error::Decode(format!("unexpected variable {:?}", j.var)));
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| {
                c.parse::<BigInt>()
                    .map_err(|_| Error::Decode(format!("bad coefficient {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PoincareSeries::normalized(coeffs, j.exact_through))
    }
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
