//! Exact reduced Poincaré series of the loop space
//! `Ω((A∧RP^∞) ∪_{A∧RP¹} (Y∧RP¹))` for a based inclusion `A ⊂ Y`, together
//! with a degree-by-degree combinatorial oracle built from multiindex sums.
//!
//! All arithmetic is over arbitrary-precision integers. The crate is split into
//!
//! * [`gf`]: integer polynomials, rational generating functions and truncated series,
//! * [`spaces`]: space profiles described by their reduced Betti series,
//! * [`combinatorics`]: binomials, multiindexes and the brute-force Betti oracle,
//! * [`formulas`]: the closed forms and the Euler series comparison,
//! * [`expr`]: a small expression language for spaces (`susp(S^1 v S^2)`, ...).

pub mod combinatorics;
pub mod error;
pub mod expr;
pub mod formulas;
pub mod gf;
pub mod spaces;

pub use combinatorics::{
    betti_of_multiindex, binom, binomial_gf_check, c_coeff, compositions, delta_betti, delta_terms,
    loop_series_oracle, DeltaTerm,
    quotient_betti, smash_power_betti, MultiIndex,
};
pub use error::{Error, Hypothesis, Result};
pub use expr::{evaluate_space, parse_space, SpaceExpr};
pub use formulas::{
    bott_samelson, bousfield_curtis, collapse_check, collapse_report, euler_e1, euler_einf,
    main_theorem,
    CollapseReport,
};
pub use gf::{ArithOp, IntPolynomial, RationalGF, TruncSeries};
pub use spaces::{union_poinser, Catalog, PairInclusion, ProjDim, SmashOrWedge, SpaceProfile};
