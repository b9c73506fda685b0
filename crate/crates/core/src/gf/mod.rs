//! Exact polynomial and rational generating function arithmetic.

mod poly;
mod rational;
mod series;

pub use poly::IntPolynomial;
pub use rational::{ArithOp, RationalGF};
pub use series::TruncSeries;
