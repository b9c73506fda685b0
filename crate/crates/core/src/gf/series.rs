use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntPolynomial;

/// Coefficients `a_0..=a_N` of a power series cut off at degree `N`.
///
/// Zeros are stored; `coeffs().len() == bound() + 1` always.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<BigInt>,
}

impl TruncSeries {
    /// Pads with zeros or truncates `coeffs` to exactly `bound + 1` entries.
    pub fn new(mut coeffs: Vec<BigInt>, bound: usize) -> Self {
        coeffs.resize(bound + 1, BigInt::zero());
        Self { coeffs }
    }

    pub fn zeros(bound: usize) -> Self {
        Self::new(Vec::new(), bound)
    }

    pub fn from_polynomial(p: &IntPolynomial, bound: usize) -> Self {
        Self::new(p.coeffs().iter().take(bound + 1).cloned().collect(), bound)
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient at `degree`, or zero past the bound.
    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.bound().min(other.bound());
        Self::new((0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(), n)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.bound().min(other.bound());
        Self::new((0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(), n)
    }

    /// Cauchy product truncated to the smaller bound.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.bound().min(other.bound());
        let coeffs = (0..=n)
            .map(|k| (0..=k).map(|i| &self.coeffs[i] * &other.coeffs[k - i]).sum())
            .collect();
        Self::new(coeffs, n)
    }

    /// First degree at which the two series differ, up to the smaller bound.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }
}

/// `[a0,a1,...]` with no spaces.
impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.coeffs)
    }
}

pub(crate) fn write_list(f: &mut impl fmt::Write, items: &[BigInt]) -> fmt::Result {
    f.write_char('[')?;
    for (i, c) in items.iter().enumerate() {
        if i > 0 {
            f.write_char(',')?;
        }
        write!(f, "{c}")?;
    }
    f.write_char(']')
}
