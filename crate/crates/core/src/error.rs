use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A topological hypothesis some formula depends on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hypothesis {
    /// `b̃_0 = 0` for the named space.
    PathConnected(String),
    /// `b̃_0 = b̃_1 = 0` for the named space.
    SimplyConnected(String),
    /// The reduced diagonal of the named space is zero in mod 2 homology.
    DiagonalNull(String),
    /// `H̃_*(A) → H̃_*(Y)` is injective.
    MonoInHomology { sub: String, ambient: String },
    /// Constant and linear coefficients of a raw series vanish.
    SeriesStartsInDegreeTwo,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::PathConnected(name) => write!(f, "{name} must be path-connected (b0 = 0)"),
            Hypothesis::SimplyConnected(name) => {
                write!(f, "{name} must be simply-connected (b0 = b1 = 0)")
            }
            Hypothesis::DiagonalNull(name) => write!(
                f,
                "the reduced diagonal of {name} must induce zero in mod 2 homology"
            ),
            Hypothesis::MonoInHomology { sub, ambient } => write!(
                f,
                "the inclusion {sub} -> {ambient} must be a monomorphism in reduced homology"
            ),
            Hypothesis::SeriesStartsInDegreeTwo => {
                write!(f, "series must have zero coefficients in degrees 0 and 1")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("denominator constant term {0} is not a unit after reduction")]
    NonUnitConstant(BigInt),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(Hypothesis),
    #[error("{0} is not path-connected (b0 != 0)")]
    PathConnectednessViolation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid space profile: {0}")]
    InvalidProfile(String),
    #[error("parse error at offset {offset}: expected {}", .expected.join(" or "))]
    Parse { offset: usize, expected: Vec<String> },
    #[error("unknown space name `{name}` at offset {offset}")]
    UnknownName { name: String, offset: usize },
    #[error("catalog: {0}")]
    Catalog(String),
}
