use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{IntPolynomial, TruncSeries};
use crate::error::{Error, Result};

/// A ratio of integer polynomials whose denominator has constant term 1.
///
/// Values are always held in normalized form: numerator and denominator are
/// coprime in `Z[t]`, the denominator's constant term is `1`, and zero is
/// `0/1`. A unit constant term is what makes the power series expansion
/// integral, so denominators whose reduced constant term is not `±1` are
/// rejected.
#[derive(Clone, Debug, Eq)]
pub struct RationalGF {
    num: IntPolynomial,
    den: IntPolynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RationalGF {
    /// Builds the normalized representative of `num/den`.
    ///
    /// Common factors are cancelled before the constant term of the
    /// denominator is inspected, so `t/t` is accepted as `1/1`.
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            let c = g.constant_term();
            (num.div_scalar_exact(&c), den.div_scalar_exact(&c))
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let c0 = den.constant_term();
        if c0.is_negative() {
            num = -num;
            den = -den;
        }
        if !den.constant_term().is_one() {
            return Err(Error::NonUnitConstant(c0));
        }
        Ok(Self { num, den })
    }

    pub fn from_i64s(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(IntPolynomial::from_i64s(num), IntPolynomial::from_i64s(den))
    }

    pub fn polynomial(p: IntPolynomial) -> Self {
        Self {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::polynomial(IntPolynomial::zero())
    }

    pub fn one() -> Self {
        Self::polynomial(IntPolynomial::one())
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        Self::polynomial(IntPolynomial::monomial(BigInt::one(), k))
    }

    /// `t^k / (1 - t)^e`.
    pub fn monomial_over_one_minus_t(k: usize, e: u32) -> Self {
        Self {
            num: IntPolynomial::monomial(BigInt::one(), k),
            den: IntPolynomial::from_i64s(&[1, -1]).pow(e),
        }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Renormalizes; a no-op on values built through this type's constructors.
    pub fn normalize(&self) -> Result<Self> {
        Self::new(self.num.clone(), self.den.clone())
    }

    pub fn arith(&self, op: ArithOp, other: &Self) -> Result<Self> {
        match op {
            ArithOp::Add => Ok(self + other),
            ArithOp::Sub => Ok(self - other),
            ArithOp::Mul => Ok(self * other),
            ArithOp::Div => self.checked_div(other),
        }
    }

    /// `self / other`; fails when the reduced quotient has a denominator
    /// with vanishing constant term.
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let num = &self.num * &other.den;
        let den = &self.den * &other.num;
        Self::new(num, den).map_err(|e| match e {
            Error::NonUnitConstant(c) if c.is_zero() => Error::ZeroDenominator,
            e => e,
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
        .renormalized()
    }

    /// Power series coefficients `a_0..=a_bound`, from the recurrence
    /// `a_n = num_n - Σ_{i≥1} den_i·a_{n-i}`.
    pub fn expand(&self, bound: usize) -> TruncSeries {
        let den = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(bound + 1);
        for n in 0..=bound {
            let mut a = self.num.coeff(n);
            for (i, d) in den.iter().enumerate().skip(1).take(n) {
                if !d.is_zero() {
                    a -= d * &out[n - i];
                }
            }
            out.push(a);
        }
        TruncSeries::new(out, bound)
    }

    /// Equality by cross-multiplication, `a.num·b.den = b.num·a.den`.
    pub fn equivalent(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    fn renormalized(self) -> Self {
        Self::new(self.num, self.den).expect("unit constant terms are closed under ring operations")
    }
}

impl PartialEq for RationalGF {
    fn eq(&self, other: &Self) -> bool {
        self.equivalent(other)
    }
}

impl Add for &RationalGF {
    type Output = RationalGF;
    fn add(self, rhs: Self) -> RationalGF {
        if self.den == rhs.den {
            return RationalGF {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            }
            .renormalized();
        }
        RationalGF {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .renormalized()
    }
}

impl Sub for &RationalGF {
    type Output = RationalGF;
    fn sub(self, rhs: Self) -> RationalGF {
        self + &(-rhs)
    }
}

impl Mul for &RationalGF {
    type Output = RationalGF;
    fn mul(self, rhs: Self) -> RationalGF {
        RationalGF {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
        .renormalized()
    }
}

impl Neg for &RationalGF {
    type Output = RationalGF;
    fn neg(self) -> RationalGF {
        RationalGF {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for RationalGF {
            type Output = RationalGF;
            fn $method(self, rhs: Self) -> RationalGF {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl From<IntPolynomial> for RationalGF {
    fn from(p: IntPolynomial) -> Self {
        Self::polynomial(p)
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(num: &[i64], den: &[i64]) -> RationalGF {
        RationalGF::from_i64s(num, den).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().copied().map(BigInt::from).collect()
    }

    #[test]
    fn normalize_cancels_common_factor() {
        let x = r(&[0, 2, -2], &[2, -2]);
        assert_eq!(x.numerator(), &IntPolynomial::from_i64s(&[0, 1]));
        assert_eq!(x.denominator(), &IntPolynomial::one());
    }

    #[test]
    fn normalize_zero_numerator() {
        let x = r(&[], &[1, -1]);
        assert!(x.numerator().is_zero());
        assert_eq!(x.denominator(), &IntPolynomial::one());
    }

    #[test]
    fn normalize_keeps_coprime_pair() {
        let x = r(&[0, 0, 2, -1], &[1, -1, -2, 1]);
        assert_eq!(x.numerator().coeffs(), ints(&[0, 0, 2, -1]).as_slice());
        assert_eq!(x.denominator().coeffs(), ints(&[1, -1, -2, 1]).as_slice());
    }

    #[test]
    fn normalize_flips_sign_of_denominator() {
        let x = r(&[0, 1], &[-1, 1]);
        assert_eq!(x.numerator(), &IntPolynomial::from_i64s(&[0, -1]));
        assert_eq!(x.denominator(), &IntPolynomial::from_i64s(&[1, -1]));
    }

    #[test]
    fn normalize_errors() {
        assert_eq!(RationalGF::from_i64s(&[1], &[]), Err(Error::ZeroDenominator));
        assert_eq!(
            RationalGF::from_i64s(&[1], &[0, 1]),
            Err(Error::NonUnitConstant(BigInt::zero()))
        );
        assert_eq!(
            RationalGF::from_i64s(&[1], &[2, 1]),
            Err(Error::NonUnitConstant(BigInt::from(2)))
        );
        // cancellation happens before the constant term is checked
        assert_eq!(r(&[0, 1], &[0, 1]), RationalGF::one());
    }

    #[test]
    fn arithmetic_examples() {
        let geo = r(&[1], &[1, -1]);
        assert_eq!(&geo * &r(&[1, -1], &[1]), RationalGF::one());
        assert_eq!(&r(&[0, 1], &[1]) + &r(&[0, 0, 1], &[1]), r(&[0, 1, 1], &[1]));

        let a = r(&[0, 1], &[1, -1]);
        let q = a.checked_div(&(&RationalGF::one() - &a)).unwrap();
        assert_eq!(q.numerator(), &IntPolynomial::from_i64s(&[0, 1]));
        assert_eq!(q.denominator(), &IntPolynomial::from_i64s(&[1, -2]));
    }

    #[test]
    fn division_errors() {
        assert_eq!(
            RationalGF::one().checked_div(&RationalGF::zero()),
            Err(Error::ZeroDenominator)
        );
        assert_eq!(
            RationalGF::one().checked_div(&RationalGF::monomial(1)),
            Err(Error::ZeroDenominator)
        );
        let t = RationalGF::monomial(1);
        assert_eq!(t.checked_div(&t).unwrap(), RationalGF::one());
        assert_eq!(
            RationalGF::one().arith(ArithOp::Div, &r(&[2], &[1])),
            Err(Error::NonUnitConstant(BigInt::from(2)))
        );
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(r(&[1], &[1, -1]).expand(4).coeffs(), ints(&[1, 1, 1, 1, 1]).as_slice());
        assert_eq!(
            r(&[0, 1], &[1, -1, -1]).expand(6).coeffs(),
            ints(&[0, 1, 1, 2, 3, 5, 8]).as_slice()
        );
        assert_eq!(
            r(&[0, 0, 2, -1], &[1, -1, -2, 1]).expand(12).coeffs(),
            ints(&[0, 0, 2, 1, 5, 5, 14, 19, 42, 66, 131, 221, 417]).as_slice()
        );
        assert_eq!(RationalGF::zero().expand(0).coeffs(), ints(&[0]).as_slice());
    }

    #[test]
    fn equality_examples() {
        let lhs = &r(&[1, -1], &[1, -1, -2, 1]) - &RationalGF::one();
        assert_eq!(lhs, r(&[0, 0, 2, -1], &[1, -1, -2, 1]));
        assert_ne!(r(&[0, 1], &[1, -1]), r(&[0, 1], &[1, 0, -1]));
        assert_eq!(r(&[0, 2, -2], &[2, -2]), RationalGF::monomial(1));
    }

    #[test]
    fn display() {
        assert_eq!(r(&[0, 0, 2, -1], &[1, -1, -2, 1]).to_string(), "(2t^2 - t^3)/(1 - t - 2t^2 + t^3)");
        assert_eq!(RationalGF::monomial(3).to_string(), "t^3");
    }
}
