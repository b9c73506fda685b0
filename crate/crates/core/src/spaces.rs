//! Spaces described by their reduced mod 2 Poincaré series.
//!
//! The topological hypotheses the formulas need (null reduced diagonal,
//! injectivity in homology) are carried as declared flags. Only their
//! consequences on series data are checked.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Deserialize;

use crate::error::{Error, Hypothesis, Result};
use crate::gf::{IntPolynomial, RationalGF};

/// Degree through which a profile's series is checked to be nonnegative.
pub const NONNEGATIVITY_CHECK_DEGREE: usize = 30;

#[derive(Clone, Debug, PartialEq)]
pub struct SpaceProfile {
    name: String,
    series: RationalGF,
    diagonal_null: bool,
    notes: String,
}

impl SpaceProfile {
    /// Validates that the series looks like a Betti series through
    /// [`NONNEGATIVITY_CHECK_DEGREE`] and that a declared null diagonal
    /// comes with `b̃_0 = 0`.
    pub fn new(name: impl Into<String>, series: RationalGF, diagonal_null: bool) -> Result<Self> {
        let name = name.into();
        let expanded = series.expand(NONNEGATIVITY_CHECK_DEGREE);
        if !expanded.is_nonnegative() {
            return Err(Error::InvalidProfile(format!(
                "{name}: series has a negative coefficient by degree {NONNEGATIVITY_CHECK_DEGREE}"
            )));
        }
        if diagonal_null && !expanded.coeff(0).is_zero() {
            return Err(Error::InvalidProfile(format!(
                "{name}: a null reduced diagonal forces b0 = 0"
            )));
        }
        Ok(Self {
            name,
            series,
            diagonal_null,
            notes: String::new(),
        })
    }

    pub fn with_notes(mut self, notes: impl Into<String>) -> Self {
        self.notes = notes.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn series(&self) -> &RationalGF {
        &self.series
    }

    pub fn diagonal_null(&self) -> bool {
        self.diagonal_null
    }

    pub fn notes(&self) -> &str {
        &self.notes
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `b̃_0 = 0`.
    pub fn is_path_connected(&self) -> bool {
        self.series.expand(0).coeff(0).is_zero()
    }

    /// `b̃_0 = b̃_1 = 0`.
    pub fn is_simply_connected_in_homology(&self) -> bool {
        self.series.expand(1).coeffs().iter().all(Zero::is_zero)
    }

    pub(crate) fn require_path_connected(&self) -> Result<()> {
        if self.is_path_connected() {
            Ok(())
        } else {
            Err(Error::HypothesisViolation(Hypothesis::PathConnected(self.name.clone())))
        }
    }

    pub(crate) fn require_diagonal_null(&self) -> Result<()> {
        if self.diagonal_null {
            Ok(())
        } else {
            Err(Error::HypothesisViolation(Hypothesis::DiagonalNull(self.name.clone())))
        }
    }

    /// The one-point space.
    pub fn point() -> Self {
        Self::trusted("pt", RationalGF::zero(), true)
    }

    /// `S^n`, `n ≥ 1`.
    pub fn sphere(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("sphere dimension must be at least 1".into()));
        }
        Ok(Self::trusted(format!("S^{n}"), RationalGF::monomial(n as usize), true))
    }

    /// `RP^n` with one mod 2 class in each degree `1..=n`.
    ///
    /// Only `RP^1 ≅ S^1` has a null reduced diagonal; for `n ≥ 2` the square of
    /// the degree-1 class is nonzero.
    pub fn projective(dim: ProjDim) -> Result<Self> {
        match dim {
            ProjDim::Finite(0) => Err(Error::InvalidArgument(
                "projective space dimension must be at least 1".into(),
            )),
            ProjDim::Finite(n) => {
                let mut coeffs = vec![BigInt::from(1); n as usize + 1];
                coeffs[0] = BigInt::zero();
                Ok(Self::trusted(
                    format!("RP^{n}"),
                    RationalGF::polynomial(IntPolynomial::new(coeffs)),
                    n == 1,
                ))
            }
            ProjDim::Infinite => Ok(Self::trusted(
                "RP^inf",
                RationalGF::monomial_over_one_minus_t(1, 1),
                false,
            )),
        }
    }

    /// Wedge sums add series, smash products multiply them.
    ///
    /// Flag propagation is a library convention: a wedge has null diagonal
    /// when both summands do, a smash product when either factor does.
    pub fn combine(&self, other: &Self, op: SmashOrWedge) -> Self {
        match op {
            SmashOrWedge::Wedge => Self::trusted(
                format!("({} v {})", self.name, other.name),
                &self.series + &other.series,
                self.diagonal_null && other.diagonal_null,
            ),
            SmashOrWedge::Smash => Self::trusted(
                format!("({} ^ {})", self.name, other.name),
                &self.series * &other.series,
                self.diagonal_null || other.diagonal_null,
            ),
        }
    }

    pub fn wedge(&self, other: &Self) -> Self {
        self.combine(other, SmashOrWedge::Wedge)
    }

    pub fn smash(&self, other: &Self) -> Self {
        self.combine(other, SmashOrWedge::Smash)
    }

    /// Reduced suspension: the series shifts up one degree.
    pub fn suspend(&self) -> Self {
        Self::trusted(
            format!("susp({})", self.name),
            &self.series * &RationalGF::monomial(1),
            true,
        )
    }

    /// Reduced cone; contractible, so its reduced series is zero.
    pub fn cone(&self) -> Self {
        Self::trusted(format!("cone({})", self.name), RationalGF::zero(), true)
    }

    // Constructors above preserve nonnegativity and the flag/b0 rule.
    fn trusted(name: impl Into<String>, series: RationalGF, diagonal_null: bool) -> Self {
        Self {
            name: name.into(),
            series,
            diagonal_null,
            notes: String::new(),
        }
    }
}

impl fmt::Display for SpaceProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, self.series)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjDim {
    Finite(u32),
    Infinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmashOrWedge {
    Wedge,
    Smash,
}

/// A based inclusion `A ⊂ Y`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairInclusion {
    pub sub: SpaceProfile,
    pub ambient: SpaceProfile,
    /// Declared: `H̃_*(A) → H̃_*(Y)` is injective.
    pub mono_in_homology: bool,
}

impl PairInclusion {
    pub fn new(sub: SpaceProfile, ambient: SpaceProfile, mono_in_homology: bool) -> Self {
        Self {
            sub,
            ambient,
            mono_in_homology,
        }
    }

    pub(crate) fn require_mono(&self) -> Result<()> {
        if self.mono_in_homology {
            Ok(())
        } else {
            Err(Error::HypothesisViolation(Hypothesis::MonoInHomology {
                sub: self.sub.name.clone(),
                ambient: self.ambient.name.clone(),
            }))
        }
    }
}

/// Reduced Poincaré series of `X = (A∧RP^∞) ∪_{A∧RP¹} (Y∧RP¹)`, from the split
/// Mayer–Vietoris sequence: `t·P(Y) + t²/(1-t)·P(A)`.
pub fn union_poinser(pair: &PairInclusion) -> Result<RationalGF> {
    pair.require_mono()?;
    let y_part = &RationalGF::monomial(1) * pair.ambient.series();
    let a_part = &RationalGF::monomial_over_one_minus_t(2, 1) * pair.sub.series();
    Ok(&y_part + &a_part)
}

/// Named spaces loaded from a JSON catalog file.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    entries: BTreeMap<String, SpaceProfile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogEntry {
    name: String,
    numerator: Vec<serde_json::Number>,
    denominator: Vec<serde_json::Number>,
    diagonal_null: bool,
}

/// Names the expression grammar claims for itself.
pub const RESERVED_NAMES: &[&str] = &["S", "RP", "pt", "v", "susp", "cone"];

impl Catalog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Vec<CatalogEntry> =
            serde_json::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
        let mut catalog = Self::new();
        for entry in raw {
            let num = parse_int_list(&entry.name, "numerator", &entry.numerator)?;
            let den = parse_int_list(&entry.name, "denominator", &entry.denominator)?;
            if den.first().is_none_or(Zero::is_zero) {
                return Err(Error::Catalog(format!(
                    "{}: denominator must have a nonzero entry at index 0",
                    entry.name
                )));
            }
            let series = RationalGF::new(IntPolynomial::new(num), IntPolynomial::new(den))
                .map_err(|e| Error::Catalog(format!("{}: {e}", entry.name)))?;
            let profile = SpaceProfile::new(entry.name.clone(), series, entry.diagonal_null)?;
            catalog.insert(profile)?;
        }
        Ok(catalog)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Catalog(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Adds a profile under its own name. Names must be identifiers and may
    /// not shadow reserved words or earlier entries.
    pub fn insert(&mut self, profile: SpaceProfile) -> Result<()> {
        let name = profile.name().to_owned();
        let valid = name
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(Error::Catalog(format!("`{name}` is not a valid identifier")));
        }
        if RESERVED_NAMES.contains(&name.as_str()) {
            return Err(Error::Catalog(format!("`{name}` is a reserved word")));
        }
        if self.entries.contains_key(&name) {
            return Err(Error::Catalog(format!("duplicate entry `{name}`")));
        }
        self.entries.insert(name, profile);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&SpaceProfile> {
        self.entries.get(name)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &SpaceProfile> {
        self.entries.values()
    }
}

fn parse_int_list(name: &str, field: &str, values: &[serde_json::Number]) -> Result<Vec<BigInt>> {
    values
        .iter()
        .map(|n| {
            BigInt::from_str(&n.to_string()).map_err(|_| {
                Error::Catalog(format!("{name}: {field} entry `{n}` is not an integer"))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(num: &[i64], den: &[i64]) -> RationalGF {
        RationalGF::from_i64s(num, den).unwrap()
    }

    fn sphere(n: u32) -> SpaceProfile {
        SpaceProfile::sphere(n).unwrap()
    }

    #[test]
    fn spheres() {
        assert_eq!(sphere(1).series(), &r(&[0, 1], &[1]));
        assert_eq!(sphere(2).series(), &r(&[0, 0, 1], &[1]));
        assert_eq!(sphere(3).series().expand(5).to_string(), "[0,0,0,1,0,0]");
        assert!(sphere(3).diagonal_null());
        assert!(SpaceProfile::sphere(0).is_err());
    }

    #[test]
    fn projective_spaces() {
        let rp1 = SpaceProfile::projective(ProjDim::Finite(1)).unwrap();
        assert_eq!(rp1.series(), sphere(1).series());
        assert!(rp1.diagonal_null());
        let rp3 = SpaceProfile::projective(ProjDim::Finite(3)).unwrap();
        assert_eq!(rp3.series(), &r(&[0, 1, 1, 1], &[1]));
        assert!(!rp3.diagonal_null());
        let rpinf = SpaceProfile::projective(ProjDim::Infinite).unwrap();
        assert_eq!(rpinf.series(), &r(&[0, 1], &[1, -1]));
        assert!(!rpinf.diagonal_null());
        assert!(SpaceProfile::projective(ProjDim::Finite(0)).is_err());
    }

    #[test]
    fn combine_and_suspend() {
        let s1 = sphere(1);
        let rpinf = SpaceProfile::projective(ProjDim::Infinite).unwrap();
        assert_eq!(s1.smash(&sphere(2)).series(), &r(&[0, 0, 0, 1], &[1]));
        assert_eq!(s1.wedge(&s1).series(), &r(&[0, 2], &[1]));
        assert_eq!(s1.smash(&rpinf).series(), &r(&[0, 0, 1], &[1, -1]));
        assert!(s1.smash(&rpinf).diagonal_null());
        assert!(!s1.wedge(&rpinf).diagonal_null());

        assert_eq!(s1.suspend().series(), &r(&[0, 0, 1], &[1]));
        assert_eq!(rpinf.suspend().series(), &r(&[0, 0, 1], &[1, -1]));
        assert!(rpinf.suspend().diagonal_null());
        assert!(SpaceProfile::point().suspend().series().is_zero());
        assert!(s1.cone().series().is_zero());
    }

    #[test]
    fn profile_validation() {
        assert!(SpaceProfile::new("bad", r(&[0, 1, -1], &[1]), false).is_err());
        assert!(SpaceProfile::new("s0", r(&[2], &[1]), true).is_err());
        assert!(SpaceProfile::new("s0", r(&[2], &[1]), false).is_ok());
    }

    #[test]
    fn union_series() {
        let pt = SpaceProfile::point();
        let s1 = sphere(1);
        let s2 = sphere(2);
        let s3 = sphere(3);
        assert_eq!(
            union_poinser(&PairInclusion::new(pt, s1.clone(), true)).unwrap(),
            r(&[0, 0, 1], &[1])
        );
        assert_eq!(
            union_poinser(&PairInclusion::new(s1.clone(), s1.clone(), true)).unwrap(),
            r(&[0, 0, 1], &[1, -1])
        );
        let expected = &r(&[0, 0, 0, 1, 1], &[1]) + &r(&[0, 0, 0, 0, 1], &[1, -1]);
        assert_eq!(
            union_poinser(&PairInclusion::new(s2.clone(), s2.wedge(&s3), true)).unwrap(),
            expected
        );
        assert!(matches!(
            union_poinser(&PairInclusion::new(s1, s2, false)),
            Err(Error::HypothesisViolation(Hypothesis::MonoInHomology { .. }))
        ));
    }

    #[test]
    fn catalog_parsing() {
        let json = r#"[
            {"name": "M", "numerator": [0, 1, 1], "denominator": [1, -1], "diagonal_null": false},
            {"name": "big", "numerator": [0, 0, 123456789012345678901234567890], "denominator": [1], "diagonal_null": true}
        ]"#;
        let cat = Catalog::from_json(json).unwrap();
        assert_eq!(cat.len(), 2);
        assert_eq!(cat.get("M").unwrap().series(), &r(&[0, 1, 1], &[1, -1]));
        assert_eq!(
            cat.get("big").unwrap().series().numerator().coeff(2).to_string(),
            "123456789012345678901234567890"
        );
    }

    #[test]
    fn catalog_rejections() {
        let zero_den = r#"[{"name": "M", "numerator": [1], "denominator": [0, 1], "diagonal_null": false}]"#;
        assert!(Catalog::from_json(zero_den).is_err());
        let reserved = r#"[{"name": "pt", "numerator": [0, 1], "denominator": [1], "diagonal_null": true}]"#;
        assert!(Catalog::from_json(reserved).is_err());
        let fractional = r#"[{"name": "M", "numerator": [0.5], "denominator": [1], "diagonal_null": false}]"#;
        assert!(Catalog::from_json(fractional).is_err());
        let dup = r#"[{"name": "M", "numerator": [0, 1], "denominator": [1], "diagonal_null": true},
                      {"name": "M", "numerator": [0, 1], "denominator": [1], "diagonal_null": true}]"#;
        assert!(Catalog::from_json(dup).is_err());
        assert!(Catalog::from_json("{}").is_err());
    }
}
