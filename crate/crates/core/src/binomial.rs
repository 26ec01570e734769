//! Exact binomial coefficients, greedy binomial expansions, and Macaulay
//! shift operators.
//!
//! Everything here is exact integer arithmetic over [`BigInt`]:
//!
//! - [`binom`] — `binom(a, j)` as the falling factorial `a(a-1)…(a-j+1)/j!`,
//!   defined for any integer `a` (including negatives), `1` for `j = 0` and
//!   `0` for `j < 0`.
//! - [`binomial_expansion`] — the unique greedy expansion of `b ≥ 0` in a
//!   fixed degree `d ≥ 1` as `binom(m_d, d) + binom(m_{d-1}, d-1) + … +
//!   binom(m_s, s)` with `m_d > m_{d-1} > … > m_s ≥ s ≥ 1`.
//! - [`macaulay_shift`] — `b^{<d, j>}`: shift every term of the expansion to
//!   `binom(m_k + j, k + j)`. The classical growth operators are
//!   [`macaulay_up`] (`b^{<d>}`, `j = +1`) and [`macaulay_down`]
//!   (`b_{<d>}`, `j = −1`).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient `binom(a, j)` with integer (possibly negative) top.
///
/// Follows the falling-factorial convention: `1` for `j = 0`, `0` for
/// `j < 0`, and `a(a-1)…(a-j+1)/j!` otherwise. In particular
/// `binom(-2, 2) = 3` and `binom(3, 5) = 0`.
pub fn binom(a: &BigInt, j: i64) -> BigInt {
    if j < 0 {
        return BigInt::zero();
    }
    if j == 0 {
        return BigInt::one();
    }
    // For non-negative tops below j the product hits zero; skip the work.
    if !a.is_negative() && *a < BigInt::from(j) {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for t in 0..j {
        acc *= a - BigInt::from(t);
        // The running product of t+1 consecutive integers is divisible by
        // (t+1)!, so dividing stepwise stays exact.
        acc /= BigInt::from(t + 1);
    }
    acc
}

/// Convenience wrapper for machine-integer tops.
pub fn binom_i64(a: i64, j: i64) -> BigInt {
    binom(&BigInt::from(a), j)
}

/// The greedy degree-`d` expansion of a non-negative integer.
///
/// Terms are stored as `(top, degree)` pairs in decreasing degree order;
/// the expansion of `0` has no terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialExpansion {
    value: BigInt,
    degree: u32,
    terms: Vec<(BigInt, u32)>,
}

impl BinomialExpansion {
    /// The expanded value `b`.
    pub fn value(&self) -> &BigInt {
        &self.value
    }

    /// The expansion degree `d`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Terms `(m_k, k)` with `k = d, d-1, …, s`.
    pub fn terms(&self) -> &[(BigInt, u32)] {
        &self.terms
    }

    /// Recompute `Σ binom(m_k, k)`; equals [`Self::value`] by construction.
    pub fn sum(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(m, k)| binom(m, i64::from(*k)))
            .sum()
    }

    /// The shifted sum `Σ binom(m_k + j, k + j)`.
    ///
    /// Negative `j` may push a lower index `k + j` below zero; those terms
    /// vanish by the binomial convention, and a term with `k + j = 0`
    /// contributes `1`.
    pub fn shift(&self, j: i64) -> BigInt {
        self.terms
            .iter()
            .map(|(m, k)| binom(&(m + BigInt::from(j)), i64::from(*k) + j))
            .sum()
    }
}

/// Compute the unique greedy degree-`d` expansion of `b ≥ 0`.
///
/// Greedy means: `m_d` is the largest top with `binom(m_d, d) ≤ b`, then
/// recurse on the remainder in degree `d − 1`. The remainder reaches zero
/// before the degree does, so every expansion is finite with `m_s ≥ s ≥ 1`.
pub fn binomial_expansion(b: &BigInt, d: u32) -> Result<BinomialExpansion> {
    if b.is_negative() {
        return Err(Error::NegativeEntry {
            index: 0,
            value: b.clone(),
        });
    }
    if d == 0 {
        return Err(Error::NonPositiveDegree { d: 0 });
    }
    let mut terms = Vec::new();
    let mut rem = b.clone();
    let mut k = d;
    while !rem.is_zero() {
        debug_assert!(k >= 1, "remainder must be exhausted by degree 1");
        let (top, used) = greedy_top(&rem, k);
        rem -= used;
        terms.push((top, k));
        k -= 1;
    }
    Ok(BinomialExpansion {
        value: b.clone(),
        degree: d,
        terms,
    })
}

/// Largest `m` with `binom(m, k) ≤ rem`, returned with `binom(m, k)`.
/// Requires `rem ≥ 1`, so `m ≥ k` always holds.
fn greedy_top(rem: &BigInt, k: u32) -> (BigInt, BigInt) {
    if k == 1 {
        return (rem.clone(), rem.clone());
    }
    let mut m = BigInt::from(k);
    let mut c = BigInt::one(); // binom(k, k)
    loop {
        // binom(m+1, k) = binom(m, k) * (m+1) / (m+1-k), exactly.
        let next_m = &m + 1;
        let next_c = &c * &next_m / (&next_m - BigInt::from(k));
        if next_c > *rem {
            return (m, c);
        }
        m = next_m;
        c = next_c;
    }
}

/// The Macaulay shift `b^{<d, j>}`: expand `b` in degree `d`, move every
/// term `binom(m_k, k)` to `binom(m_k + j, k + j)`, and re-sum.
pub fn macaulay_shift(b: &BigInt, d: u32, j: i64) -> Result<BigInt> {
    Ok(binomial_expansion(b, d)?.shift(j))
}

/// Macaulay upper growth `b^{<d>} = b^{<d, 1>}`: the largest value a degree
/// `d+1` component can take when the degree-`d` component is `b`.
pub fn macaulay_up(b: &BigInt, d: u32) -> Result<BigInt> {
    macaulay_shift(b, d, 1)
}

/// Macaulay lower shift `b_{<d>} = b^{<d, -1>}`.
pub fn macaulay_down(b: &BigInt, d: u32) -> Result<BigInt> {
    macaulay_shift(b, d, -1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn binom_conventions() {
        assert_eq!(binom_i64(5, 2), big(10));
        assert_eq!(binom_i64(7, -1), big(0));
        assert_eq!(binom_i64(7, 0), big(1));
        assert_eq!(binom_i64(-2, 2), big(3)); // (-2)(-3)/2
        assert_eq!(binom_i64(-1, 3), big(-1)); // (-1)(-2)(-3)/6
        assert_eq!(binom_i64(3, 5), big(0));
        assert_eq!(binom_i64(0, 0), big(1));
        assert_eq!(binom_i64(0, 1), big(0));
    }

    #[test]
    fn binom_matches_pascal() {
        for a in -10..=20i64 {
            for j in 0..=12i64 {
                assert_eq!(
                    binom_i64(a, j),
                    binom_i64(a - 1, j) + binom_i64(a - 1, j - 1),
                    "Pascal fails at ({a}, {j})"
                );
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let e = binomial_expansion(&big(8), 3).unwrap();
        assert_eq!(e.terms(), &[(big(4), 3), (big(3), 2), (big(1), 1)]);
        assert_eq!(e.sum(), big(8));

        let e = binomial_expansion(&big(10), 2).unwrap();
        assert_eq!(e.terms(), &[(big(5), 2)]);

        let e = binomial_expansion(&big(0), 4).unwrap();
        assert!(e.terms().is_empty());
        assert_eq!(e.shift(1), big(0));
    }

    #[test]
    fn expansion_rejects_bad_input() {
        assert!(binomial_expansion(&big(-1), 2).is_err());
        assert!(binomial_expansion(&big(5), 0).is_err());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(macaulay_shift(&big(3), 2, 1).unwrap(), big(4)); // binom(4,3)
        assert_eq!(macaulay_shift(&big(3), 2, -1).unwrap(), big(2)); // binom(2,1)
        assert_eq!(macaulay_shift(&big(8), 3, 1).unwrap(), big(10)); // 5+4+1
        assert_eq!(macaulay_up(&big(6), 2).unwrap(), big(10)); // binom(5,3)
        // A term with k + j = 0 contributes binom(m-1, 0) = 1.
        assert_eq!(macaulay_down(&big(7), 1).unwrap(), big(1));
    }

    #[test]
    fn shift_zero_is_identity() {
        for b in 0..200i64 {
            for d in 1..6u32 {
                assert_eq!(macaulay_shift(&big(b), d, 0).unwrap(), big(b));
            }
        }
    }

    /// Count all decompositions `b = Σ binom(m_k, k)` over consecutive
    /// degrees `d, d-1, …, s` with strictly decreasing tops `m_k ≥ k`.
    fn count_decompositions(rem: &BigInt, k: u32, upper: &BigInt) -> u64 {
        if rem.is_zero() {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        let mut count = 0;
        let mut m = BigInt::from(k);
        while &m < upper {
            let c = binom(&m, i64::from(k));
            if c > *rem {
                break;
            }
            count += count_decompositions(&(rem - c), k - 1, &m);
            m += 1;
        }
        count
    }

    #[test]
    fn expansion_is_unique() {
        let huge = BigInt::from(1_000_000);
        for b in 1..=500i64 {
            for d in 1..=8u32 {
                assert_eq!(
                    count_decompositions(&big(b), d, &huge),
                    1,
                    "expansion of {b} in degree {d} is not unique"
                );
                // ... and the greedy one reconstructs b.
                assert_eq!(binomial_expansion(&big(b), d).unwrap().sum(), big(b));
            }
        }
    }

    #[test]
    fn greedy_top_is_maximal() {
        for b in 1..=300i64 {
            for d in 1..=6u32 {
                let e = binomial_expansion(&big(b), d).unwrap();
                let (m0, k0) = &e.terms()[0];
                assert_eq!(*k0, d);
                assert!(binom(&(m0 + 1), i64::from(d)) > big(b));
            }
        }
    }
}
