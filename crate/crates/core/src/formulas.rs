//! Closed forms for loop space Poincaré series and the Euler series of the
//! Bousfield–Curtis spectral sequence.

use num_traits::Zero;

use crate::error::{Error, Hypothesis, Result};
use crate::gf::{IntPolynomial, RationalGF};
use crate::spaces::{union_poinser, PairInclusion, SpaceProfile};

fn t() -> RationalGF {
    RationalGF::monomial(1)
}

fn one_minus_t() -> RationalGF {
    RationalGF::polynomial(IntPolynomial::from_i64s(&[1, -1]))
}

/// `P(ΩΣY) = P(Y)/(1 - P(Y))`.
pub fn bott_samelson(y: &SpaceProfile) -> Result<RationalGF> {
    if !y.is_path_connected() {
        return Err(Error::PathConnectednessViolation(y.name().to_owned()));
    }
    let p = y.series();
    p.checked_div(&(&RationalGF::one() - p))
}

/// `P(ΩX) = P(X)/(t - P(X))` for simply-connected `X` with null reduced diagonal.
pub fn bousfield_curtis(x: &SpaceProfile) -> Result<RationalGF> {
    if !x.is_simply_connected_in_homology() {
        return Err(Error::HypothesisViolation(Hypothesis::SimplyConnected(
            x.name().to_owned(),
        )));
    }
    x.require_diagonal_null()?;
    let p = x.series();
    p.checked_div(&(&t() - p))
}

/// Reduced Poincaré series of `Ω((A∧RP^∞) ∪_{A∧RP¹} (Y∧RP¹))`:
///
/// ```text
///        (1-t)·P(Y) + t·P(A)
///   ---------------------------------
///   1 - t - (1-t)·P(Y) - t·P(A)
/// ```
///
/// Requires `Y` path-connected and a null reduced diagonal on `A`.
pub fn main_theorem(pair: &PairInclusion) -> Result<RationalGF> {
    pair.ambient.require_path_connected()?;
    pair.sub.require_diagonal_null()?;
    let top = &(&one_minus_t() * pair.ambient.series()) + &(&t() * pair.sub.series());
    top.checked_div(&(&one_minus_t() - &top))
}

/// `χ(Ē¹) = t/(t - P(X))`, the Euler series of the tensor algebra on the
/// desuspended reduced homology of `X`.
pub fn euler_e1(x_series: &RationalGF) -> Result<RationalGF> {
    let low = x_series.expand(1);
    if !low.coeffs().iter().all(Zero::is_zero) {
        return Err(Error::HypothesisViolation(Hypothesis::SeriesStartsInDegreeTwo));
    }
    t().checked_div(&(&t() - x_series))
}

/// `χ(Ē^∞) = P(ΩX) + 1`.
pub fn euler_einf(loop_series: &RationalGF) -> RationalGF {
    loop_series + &RationalGF::one()
}

#[derive(Clone, Debug, PartialEq)]
pub struct CollapseReport {
    pub e1: RationalGF,
    pub einf: RationalGF,
}

impl CollapseReport {
    pub fn equal(&self) -> bool {
        self.e1 == self.einf
    }
}

/// Both Euler series for `X = (A∧RP^∞) ∪_{A∧RP¹} (Y∧RP¹)`: `χ(Ē¹)` from the
/// Mayer–Vietoris series of `X`, `χ(Ē^∞)` from the loop space closed form.
pub fn collapse_report(pair: &PairInclusion) -> Result<CollapseReport> {
    pair.require_mono()?;
    let einf = euler_einf(&main_theorem(pair)?);
    let e1 = euler_e1(&union_poinser(pair)?)?;
    Ok(CollapseReport { e1, einf })
}

/// Exact comparison `χ(Ē¹) = χ(Ē^∞)`.
pub fn collapse_check(pair: &PairInclusion) -> Result<bool> {
    collapse_report(pair).map(|r| r.equal())
}
