//! Brute-force Betti numbers of the loop space, summed stage by stage over
//! the homology decomposition `⊕_{s≥1} H̃_*(Y^∧s / Δ̃_s)`.
//!
//! Nothing here uses the closed form; every count is an explicit sum over
//! multiindexes.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf::{RationalGF, TruncSeries};
use crate::spaces::{PairInclusion, SpaceProfile};

/// Generalized binomial coefficient `[k ≥ 0]·n(n-1)⋯(n-k+1)/k!`, any integer `n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let n = BigInt::from(n);
    let mut acc = BigInt::one();
    // after step i, acc = n(n-1)⋯(n-i)/(i+1)!, an integer
    for i in 0..k {
        acc = acc * (&n - i) / (i + 1);
    }
    acc
}

/// Checks `Σ_{n≥m} C(n,k) t^n = t^k/(1-t)^{k+1}` through degree `bound`,
/// summing the left side directly.
pub fn binomial_gf_check(k: u32, m: u32, bound: usize) -> Result<bool> {
    if m > k {
        return Err(Error::InvalidArgument(format!("need 0 <= m <= k, got m={m}, k={k}")));
    }
    let lhs: Vec<BigInt> = (0..=bound)
        .map(|n| {
            if n < m as usize {
                BigInt::zero()
            } else {
                binom(n as i64, k as i64)
            }
        })
        .collect();
    let rhs = RationalGF::monomial_over_one_minus_t(k as usize, k + 1).expand(bound);
    Ok(TruncSeries::new(lhs, bound) == rhs)
}

/// A finite, possibly empty, sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    entries: Vec<usize>,
}

impl MultiIndex {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::InvalidArgument("multiindex entries must be positive".into()));
        }
        Ok(Self { entries })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Number of entries.
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Sum of entries.
    pub fn length(&self) -> usize {
        self.entries.iter().sum()
    }

    /// `b̃_α(W) = Π b̃_{α_i}(W)`, reading Betti numbers from `betti`.
    fn betti_product(&self, betti: &[BigInt]) -> BigInt {
        self.entries.iter().map(|&e| betti[e].clone()).product()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("()");
        }
        let parts: Vec<String> = self.entries.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All compositions of `total` into exactly `parts` positive parts, in
/// lexicographic order.
pub fn compositions(total: usize, parts: usize) -> Vec<MultiIndex> {
    fn go(remaining: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(MultiIndex { entries: prefix.clone() });
            }
            return;
        }
        if remaining < slots {
            return;
        }
        for e in 1..=remaining - (slots - 1) {
            prefix.push(e);
            go(remaining - e, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// `b̃_α(W)` with Betti numbers read from the series of `w` expanded to `bound`.
pub fn betti_of_multiindex(w: &SpaceProfile, alpha: &MultiIndex, bound: usize) -> Result<BigInt> {
    if let Some(&e) = alpha.entries.iter().find(|&&e| e > bound) {
        return Err(Error::InvalidArgument(format!(
            "multiindex entry {e} exceeds the expansion bound {bound}"
        )));
    }
    Ok(alpha.betti_product(w.series().expand(bound).coeffs()))
}

fn c_coeff_dims(dim_lambda: usize, dim_mu: usize, s: usize) -> BigInt {
    let d = (dim_lambda + dim_mu) as i64;
    binom(d, dim_mu as i64) * binom(s as i64 - d - 1, dim_mu as i64 - 1)
}

/// `c^{(s)}_{λ,μ} = C(dim λ + dim μ, dim μ)·C(s - dim λ - dim μ - 1, dim μ - 1)`.
pub fn c_coeff(lambda: &MultiIndex, mu: &MultiIndex, s: usize) -> BigInt {
    c_coeff_dims(lambda.dim(), mu.dim(), s)
}

/// One nonzero summand of the Betti number of `Δ̃_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaTerm {
    pub lambda: MultiIndex,
    pub mu: MultiIndex,
    pub coefficient: BigInt,
    /// `b̃_λ(Y)·b̃_μ(A)`.
    pub betti: BigInt,
}

/// Visits every `(λ, μ)` with `|λ|+|μ| = q - s + dim λ + dim μ + 1`,
/// `2 ≤ dim λ + dim μ + 1 ≤ s`, nonzero coefficient, and all entries in the
/// support of the respective Betti sequence.
fn for_each_delta_term(
    betti_y: &[BigInt],
    betti_a: &[BigInt],
    s: usize,
    q: usize,
    mut visit: impl FnMut(&[usize], &[usize], &BigInt, &BigInt),
) {
    let support = |betti: &[BigInt]| -> Vec<usize> {
        (1..betti.len().min(q + 1)).filter(|&e| !betti[e].is_zero()).collect()
    };
    let supp_y = support(betti_y);
    let supp_a = support(betti_a);

    for dims in 1..s {
        // |λ|+|μ| = q + dims + 1 - s, which is ≤ q since dims ≤ s - 1
        let Some(total) = (q + dims + 1).checked_sub(s) else {
            continue;
        };
        if total < dims {
            continue;
        }
        for dim_mu in 0..=dims {
            let dim_lambda = dims - dim_mu;
            let c = c_coeff_dims(dim_lambda, dim_mu, s);
            if c.is_zero() {
                continue;
            }
            let mut slots: Vec<(&[usize], &[BigInt])> = Vec::with_capacity(dims);
            slots.extend(std::iter::repeat_n((supp_y.as_slice(), betti_y), dim_lambda));
            slots.extend(std::iter::repeat_n((supp_a.as_slice(), betti_a), dim_mu));
            let mut chosen = Vec::with_capacity(dims);
            enumerate_slots(&slots, total, &mut chosen, BigInt::one(), &mut |entries, betti| {
                let (lambda, mu) = entries.split_at(dim_lambda);
                visit(lambda, mu, &c, betti);
            });
        }
    }
}

fn enumerate_slots(
    slots: &[(&[usize], &[BigInt])],
    remaining: usize,
    chosen: &mut Vec<usize>,
    product: BigInt,
    leaf: &mut impl FnMut(&[usize], &BigInt),
) {
    let Some(((support, betti), rest)) = slots.split_first() else {
        if remaining == 0 {
            leaf(chosen, &product);
        }
        return;
    };
    // every later slot needs at least one
    let Some(max_here) = remaining.checked_sub(rest.len()) else {
        return;
    };
    for &e in support.iter().take_while(|&&e| e <= max_here) {
        chosen.push(e);
        enumerate_slots(rest, remaining - e, chosen, &product * &betti[e], leaf);
        chosen.pop();
    }
}

struct Expanded {
    betti_y: Vec<BigInt>,
    betti_a: Vec<BigInt>,
}

fn expand_pair(pair: &PairInclusion, bound: usize) -> Result<Expanded> {
    pair.sub.require_diagonal_null()?;
    Ok(Expanded {
        betti_y: pair.ambient.series().expand(bound).into_coeffs(),
        betti_a: pair.sub.series().expand(bound).into_coeffs(),
    })
}

fn require_positive_stage(s: usize) -> Result<()> {
    if s == 0 {
        Err(Error::InvalidArgument("filtration stage s must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Every nonzero summand contributing to `b̃_q(Δ̃_s)`, with `Y = pair.ambient`
/// as orbit space and `A = pair.sub` as invariant subspace.
pub fn delta_terms(pair: &PairInclusion, s: usize, q: usize) -> Result<Vec<DeltaTerm>> {
    require_positive_stage(s)?;
    let ex = expand_pair(pair, q)?;
    let mut out = Vec::new();
    for_each_delta_term(&ex.betti_y, &ex.betti_a, s, q, |lambda, mu, c, betti| {
        out.push(DeltaTerm {
            lambda: MultiIndex { entries: lambda.to_vec() },
            mu: MultiIndex { entries: mu.to_vec() },
            coefficient: c.clone(),
            betti: betti.clone(),
        });
    });
    Ok(out)
}

fn delta_betti_from(betti_y: &[BigInt], betti_a: &[BigInt], s: usize, q: usize) -> BigInt {
    let mut sum = BigInt::zero();
    for_each_delta_term(betti_y, betti_a, s, q, |_, _, c, betti| sum += c * betti);
    sum
}

/// `b̃_q(Δ̃_s) = Σ c^{(s)}_{λ,μ} b̃_λ(Y) b̃_μ(A)`.
///
/// Requires the declared null diagonal on `A`.
pub fn delta_betti(pair: &PairInclusion, s: usize, q: usize) -> Result<BigInt> {
    require_positive_stage(s)?;
    let ex = expand_pair(pair, q)?;
    Ok(delta_betti_from(&ex.betti_y, &ex.betti_a, s, q))
}

fn require_path_connected(y: &SpaceProfile) -> Result<()> {
    if y.is_path_connected() {
        Ok(())
    } else {
        Err(Error::PathConnectednessViolation(y.name().to_owned()))
    }
}

/// `b̃_q(Y^∧s)`, the coefficient of `t^q` in `P(Y)^s`.
pub fn smash_power_betti(y: &SpaceProfile, s: usize, q: usize) -> Result<BigInt> {
    require_positive_stage(s)?;
    require_path_connected(y)?;
    if s > q {
        return Ok(BigInt::zero());
    }
    Ok(y.series().pow(s as u32).expand(q).coeff(q))
}

/// `b̃_q(Y^∧s/Δ̃_s) = b̃_q(Y^∧s) + b̃_{q-1}(Δ̃_s)`, the split long exact sequence.
pub fn quotient_betti(pair: &PairInclusion, s: usize, q: usize) -> Result<BigInt> {
    let smash = smash_power_betti(&pair.ambient, s, q)?;
    let delta = match q.checked_sub(1) {
        Some(q1) => delta_betti(pair, s, q1)?,
        None => {
            pair.sub.require_diagonal_null()?;
            BigInt::zero()
        }
    };
    Ok(smash + delta)
}

/// Reduced Betti numbers of the loop space through degree `bound`, summed
/// over filtration stages `1 ≤ s ≤ q`. Degree 0 is 0.
pub fn loop_series_oracle(pair: &PairInclusion, bound: usize) -> Result<TruncSeries> {
    require_path_connected(&pair.ambient)?;
    let ex = expand_pair(pair, bound)?;
    let y = TruncSeries::new(ex.betti_y.clone(), bound);

    let mut out = vec![BigInt::zero(); bound + 1];
    // powers[s] = P(Y)^s truncated
    let mut power = y.clone();
    let mut powers = vec![TruncSeries::zeros(bound)];
    for _ in 1..=bound {
        powers.push(power.clone());
        power = power.mul(&y);
    }
    for (q, slot) in out.iter_mut().enumerate().skip(1) {
        let mut b = BigInt::zero();
        for (s, pow) in powers.iter().enumerate().take(q + 1).skip(1) {
            b += pow.coeff(q);
            b += delta_betti_from(&ex.betti_y, &ex.betti_a, s, q - 1);
        }
        *slot = b;
    }
    Ok(TruncSeries::new(out, bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::RationalGF;

    fn sphere(n: u32) -> SpaceProfile {
        SpaceProfile::sphere(n).unwrap()
    }

    fn mi(e: &[usize]) -> MultiIndex {
        MultiIndex::new(e.to_vec()).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn s1_in_s2() -> PairInclusion {
        PairInclusion::new(sphere(1), sphere(2), false)
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom(5, 2), big(10));
        assert_eq!(binom(-3, 0), big(1));
        assert_eq!(binom(3, -1), big(0));
        assert_eq!(binom(-1, 2), big(1));
        assert_eq!(binom(2, 5), big(0));
        assert_eq!(binom(-2, 3), big(-4));
        assert_eq!(binom(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn binomial_gf_examples() {
        assert!(binomial_gf_check(0, 0, 10).unwrap());
        assert!(binomial_gf_check(2, 0, 10).unwrap());
        assert!(binomial_gf_check(3, 2, 15).unwrap());
        assert!(binomial_gf_check(1, 2, 15).is_err());
    }

    #[test]
    fn multiindex_basics() {
        let a = mi(&[2, 5, 4]);
        assert_eq!(a.dim(), 3);
        assert_eq!(a.length(), 11);
        assert_eq!(a.to_string(), "(2,5,4)");
        assert_eq!(MultiIndex::empty().dim(), 0);
        assert_eq!(MultiIndex::empty().length(), 0);
        assert!(MultiIndex::new(vec![1, 0]).is_err());
    }

    #[test]
    fn compositions_count() {
        // C(n-1, k-1) compositions of n into k parts
        for n in 0..9 {
            for k in 0..9 {
                let expected = if n == 0 {
                    big((k == 0) as i64)
                } else {
                    binom(n as i64 - 1, k as i64 - 1).max(big(0))
                };
                assert_eq!(big(compositions(n, k).len() as i64), expected, "n={n} k={k}");
            }
        }
        assert_eq!(compositions(3, 2), vec![mi(&[1, 2]), mi(&[2, 1])]);
    }

    #[test]
    fn betti_of_multiindex_examples() {
        let s2 = sphere(2);
        assert_eq!(betti_of_multiindex(&s2, &mi(&[2, 2]), 4).unwrap(), big(1));
        assert_eq!(betti_of_multiindex(&s2, &MultiIndex::empty(), 4).unwrap(), big(1));
        let s1s1 = sphere(1).wedge(&sphere(1));
        assert_eq!(betti_of_multiindex(&s1s1, &mi(&[1, 1, 1]), 3).unwrap(), big(8));
        assert!(betti_of_multiindex(&s2, &mi(&[5]), 4).is_err());
    }

    #[test]
    fn c_coeff_examples() {
        assert_eq!(c_coeff(&MultiIndex::empty(), &mi(&[1]), 2), big(1));
        assert_eq!(c_coeff(&mi(&[2]), &mi(&[1]), 3), big(2));
        for s in 1..6 {
            assert_eq!(c_coeff(&mi(&[1, 3]), &MultiIndex::empty(), s), big(0));
        }
    }

    #[test]
    fn delta_betti_examples() {
        let pair = s1_in_s2();
        assert_eq!(delta_betti(&pair, 2, 1).unwrap(), big(1));
        assert_eq!(delta_betti(&pair, 3, 3).unwrap(), big(2));
        assert_eq!(delta_betti(&pair, 4, 3).unwrap(), big(2));
        for q in 0..8 {
            assert_eq!(delta_betti(&pair, 1, q).unwrap(), big(0));
        }
    }

    #[test]
    fn delta_terms_survivors() {
        let pair = s1_in_s2();
        let t = delta_terms(&pair, 2, 1).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!((t[0].lambda.dim(), &t[0].mu), (0, &mi(&[1])));

        let t = delta_terms(&pair, 3, 3).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!((&t[0].lambda, &t[0].mu, &t[0].coefficient), (&mi(&[2]), &mi(&[1]), &big(2)));

        let t = delta_terms(&pair, 4, 3).unwrap();
        let mus: Vec<_> = t.iter().map(|x| x.mu.clone()).collect();
        assert!(t.iter().all(|x| x.lambda.dim() == 0));
        assert_eq!(mus.len(), 2);
        assert!(mus.contains(&mi(&[1])) && mus.contains(&mi(&[1, 1])));
    }

    #[test]
    fn delta_betti_requires_null_diagonal() {
        let rp2 = SpaceProfile::projective(crate::ProjDim::Finite(2)).unwrap();
        let pair = PairInclusion::new(rp2, sphere(2), false);
        assert!(matches!(delta_betti(&pair, 2, 1), Err(Error::HypothesisViolation(_))));
        assert!(delta_betti(&s1_in_s2(), 0, 1).is_err());
    }

    #[test]
    fn smash_power_examples() {
        let s2 = sphere(2);
        assert_eq!(smash_power_betti(&s2, 2, 4).unwrap(), big(1));
        assert_eq!(smash_power_betti(&s2, 2, 3).unwrap(), big(0));
        let y = sphere(1).wedge(&s2);
        assert_eq!(smash_power_betti(&y, 2, 3).unwrap(), big(2));
        let s0 = SpaceProfile::new("S0", RationalGF::one(), false).unwrap();
        assert_eq!(
            smash_power_betti(&s0, 2, 3),
            Err(Error::PathConnectednessViolation("S0".into()))
        );
    }

    #[test]
    fn quotient_betti_examples() {
        assert_eq!(quotient_betti(&s1_in_s2(), 2, 2).unwrap(), big(1));
        assert_eq!(quotient_betti(&s1_in_s2(), 1, 2).unwrap(), big(1));
        let pt_pair = PairInclusion::new(SpaceProfile::point(), sphere(2), true);
        assert_eq!(quotient_betti(&pt_pair, 3, 6).unwrap(), big(1));
        assert_eq!(quotient_betti(&pt_pair, 3, 0).unwrap(), big(0));
    }

    #[test]
    fn oracle_examples() {
        let to_vec = |v: &[i64]| v.iter().copied().map(BigInt::from).collect::<Vec<_>>();
        assert_eq!(loop_series_oracle(&s1_in_s2(), 4).unwrap().coeffs(), to_vec(&[0, 0, 2, 1, 5]));
        let pt_s1 = PairInclusion::new(SpaceProfile::point(), sphere(1), true);
        assert_eq!(loop_series_oracle(&pt_s1, 4).unwrap().coeffs(), to_vec(&[0, 1, 1, 1, 1]));
        let cone = PairInclusion::new(sphere(1), sphere(1).cone(), false);
        assert_eq!(loop_series_oracle(&cone, 4).unwrap().coeffs(), to_vec(&[0, 0, 1, 1, 2]));
    }

    #[test]
    fn oracle_matches_stagewise_sum() {
        let pair = PairInclusion::new(sphere(1), sphere(1).wedge(&sphere(2)), true);
        let oracle = loop_series_oracle(&pair, 7).unwrap();
        for q in 0..=7 {
            let direct: BigInt = (1..=q).map(|s| quotient_betti(&pair, s, q).unwrap()).sum();
            assert_eq!(oracle.coeff(q), direct, "q={q}");
        }
    }
}
