//! Monomial ideals, lex-segment ideals for a prescribed Hilbert function,
//! and the closed-form minimal resolution of stable ideals.
//!
//! Monomials are exponent vectors over variables `x_1 > x_2 > … > x_n`
//! (graded lexicographic conventions). The Eliahou–Kervaire formula gives
//! the exact graded Betti numbers of any stable monomial ideal, which makes
//! lex-segment ideals an independent ground truth for the extremal-Betti
//! machinery.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::betti::BettiTable;
use crate::binomial::binom_i64;
use crate::error::{Error, Result};
use crate::vectors::OSequence;

/// Largest per-degree monomial count [`lex_segment_ideal`] will enumerate
/// unless an explicit limit is supplied.
pub const DEFAULT_MONOMIAL_LIMIT: u64 = 200;

fn degree(exponents: &[u32]) -> u64 {
    exponents.iter().map(|&e| u64::from(e)).sum()
}

/// 1-based index of the last variable dividing the monomial; `None` for 1.
fn max_index(exponents: &[u32]) -> Option<u32> {
    exponents
        .iter()
        .rposition(|&e| e > 0)
        .map(|idx| idx as u32 + 1)
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// A monomial ideal in `n` variables, stored by its unique minimal
/// generators sorted by degree, then lexicographically descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: u32,
    gens: Vec<Vec<u32>>,
}

impl MonomialIdeal {
    /// Build an ideal from any generating set; redundant generators are
    /// dropped. Every exponent vector must have length `n` and positive
    /// total degree.
    pub fn new(n: u32, generators: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        let mut gens: Vec<Vec<u32>> = Vec::new();
        for g in generators {
            if g.len() != n as usize {
                return Err(Error::WrongExponentCount {
                    expected: n,
                    found: g.len(),
                });
            }
            let d = degree(&g);
            if d == 0 {
                return Err(Error::NonPositiveDegree { d: 0 });
            }
            if d > u64::from(u32::MAX) {
                return Err(Error::IndexOutOfRange {
                    name: "generator degree",
                    value: d as i64,
                    lo: 1,
                    hi: i64::from(u32::MAX),
                });
            }
            gens.push(g);
        }
        gens.sort_unstable();
        gens.dedup();
        let minimal: Vec<Vec<u32>> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        let mut gens = minimal;
        gens.sort_by(|a, b| degree(a).cmp(&degree(b)).then_with(|| b.cmp(a)));
        Ok(MonomialIdeal { n, gens })
    }

    /// Number of ambient variables.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Minimal generators, sorted by degree then lexicographically
    /// descending (so within a degree, the lex-largest monomial first).
    pub fn generators(&self) -> &[Vec<u32>] {
        &self.gens
    }

    /// Whether the monomial with these exponents lies in the ideal.
    pub fn contains(&self, exponents: &[u32]) -> Result<bool> {
        if exponents.len() != self.n as usize {
            return Err(Error::WrongExponentCount {
                expected: self.n,
                found: exponents.len(),
            });
        }
        Ok(self.gens.iter().any(|g| divides(g, exponents)))
    }

    /// Degrees of the minimal generators (with multiplicity, ascending).
    pub fn generator_degrees(&self) -> Vec<u32> {
        self.gens.iter().map(|g| degree(g) as u32).collect()
    }

    /// Whether the ideal is stable: for each generator `m` and each
    /// variable index `i` below `max(m)`, the swap `x_i · m / x_max(m)`
    /// stays in the ideal.
    pub fn is_stable(&self) -> bool {
        self.check_stable().is_ok()
    }

    /// As [`is_stable`](Self::is_stable), reporting the first violation.
    pub fn check_stable(&self) -> Result<()> {
        for g in &self.gens {
            let Some(max) = max_index(g) else { continue };
            for i in 1..max {
                let mut swapped = g.clone();
                swapped[max as usize - 1] -= 1;
                swapped[i as usize - 1] += 1;
                if !self.contains(&swapped)? {
                    return Err(Error::NotStable {
                        generator: g.clone(),
                        index: i,
                    });
                }
            }
        }
        Ok(())
    }
}

/// All exponent vectors of total degree `deg` in `n` variables, in
/// descending lexicographic order (`x_1^deg` first, `x_n^deg` last).
fn monomials_desc(n: u32, deg: u32) -> Vec<Vec<u32>> {
    fn rec(vars_left: u32, deg_left: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if vars_left == 0 {
            if deg_left == 0 {
                out.push(current.clone());
            }
            return;
        }
        if vars_left == 1 {
            current.push(deg_left);
            out.push(current.clone());
            current.pop();
            return;
        }
        for e in (0..=deg_left).rev() {
            current.push(e);
            rec(vars_left - 1, deg_left - e, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n as usize);
    rec(n, deg, &mut current, &mut out);
    out
}

/// The lex-segment ideal in `n` variables whose quotient has Hilbert
/// function `h`: in each degree `t` the ideal is spanned by the
/// lex-largest `dim R_t - h(t)` monomials. Requires `h(1) ≤ n`.
///
/// Enumeration stops after the last possible generator degree (one past
/// the socle degree for Artinian `h`); degrees whose full monomial count
/// exceeds `limit` are refused rather than enumerated.
pub fn lex_segment_ideal_with_limit(
    h: &OSequence,
    n: u32,
    limit: u64,
) -> Result<MonomialIdeal> {
    if h.value(1) > BigInt::from(n) {
        return Err(Error::TooFewVariables {
            h1: h.value(1),
            n,
        });
    }
    let mut gens: Vec<Vec<u32>> = Vec::new();
    let mut prev: HashSet<Vec<u32>> = HashSet::new();
    let top = h.generator_degree_limit();
    for deg in 1..=top as u32 {
        let count = binom_i64(i64::from(n) + i64::from(deg) - 1, i64::from(deg));
        if count > BigInt::from(limit) {
            return Err(Error::MonomialEnumerationTooLarge {
                d: deg,
                n,
                count,
                limit,
            });
        }
        let take = (&count - h.value(deg as usize))
            .to_usize()
            .expect("an O-sequence with h(1) <= n never exceeds the monomial count");
        let monomials = monomials_desc(n, deg);
        debug_assert_eq!(BigInt::from(monomials.len()), count);
        let segment = &monomials[..take];
        for m in segment {
            let spanned = m.iter().enumerate().any(|(idx, &e)| {
                if e == 0 {
                    return false;
                }
                let mut quotient = m.clone();
                quotient[idx] -= 1;
                prev.contains(&quotient)
            });
            if !spanned {
                gens.push(m.clone());
            }
        }
        prev = segment.iter().cloned().collect();
    }
    MonomialIdeal::new(n, gens)
}

/// [`lex_segment_ideal_with_limit`] with the default per-degree cap of
/// [`DEFAULT_MONOMIAL_LIMIT`].
pub fn lex_segment_ideal(h: &OSequence, n: u32) -> Result<MonomialIdeal> {
    lex_segment_ideal_with_limit(h, n, DEFAULT_MONOMIAL_LIMIT)
}

/// Exact graded Betti numbers of `R/I` for a stable monomial ideal `I`
/// (Eliahou–Kervaire): each generator of degree `d` with largest variable
/// index `μ` contributes `binom(μ-1, i)` to `β_{i+1, i+d}`.
pub fn eliahou_kervaire_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    ideal.check_stable()?;
    let mut table = BettiTable::new(ideal.n());
    table.set(0, 0, BigInt::from(1));
    for g in ideal.generators() {
        let d = degree(g) as u32;
        let mu = max_index(g).expect("generators have positive degree");
        for i in 0..mu {
            table.add(i + 1, i + d, binom_i64(i64::from(mu) - 1, i64::from(i)));
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{betti_table_bound, lex_betti_single_degree};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn construction_normalizes() {
        // x2^2 is redundant next to x2; duplicates collapse.
        let i = MonomialIdeal::new(
            2,
            vec![vec![0, 2], vec![0, 1], vec![2, 0], vec![0, 1]],
        )
        .unwrap();
        assert_eq!(i.generators(), &[vec![0, 1], vec![2, 0]]);
        assert_eq!(i.generator_degrees(), vec![1, 2]);
    }

    #[test]
    fn construction_validates() {
        assert!(matches!(
            MonomialIdeal::new(2, vec![vec![1, 0, 0]]),
            Err(Error::WrongExponentCount {
                expected: 2,
                found: 3
            })
        ));
        assert!(matches!(
            MonomialIdeal::new(2, vec![vec![0, 0]]),
            Err(Error::NonPositiveDegree { d: 0 })
        ));
    }

    #[test]
    fn generator_order_is_degree_then_lex_descending() {
        let i = MonomialIdeal::new(2, vec![vec![0, 3], vec![1, 1], vec![2, 0]]).unwrap();
        assert_eq!(
            i.generators(),
            &[vec![2, 0], vec![1, 1], vec![0, 3]]
        );
    }

    #[test]
    fn membership() {
        let i = MonomialIdeal::new(3, vec![vec![1, 1, 0]]).unwrap();
        assert!(i.contains(&[2, 1, 3]).unwrap());
        assert!(!i.contains(&[1, 0, 5]).unwrap());
        assert!(i.contains(&[1, 1, 0]).unwrap());
        assert!(matches!(
            i.contains(&[1, 1]),
            Err(Error::WrongExponentCount { .. })
        ));
    }

    #[test]
    fn stability_detects_violations() {
        // (x2) is not stable: x1 * x2 / x2 = x1 is outside.
        let i = MonomialIdeal::new(2, vec![vec![0, 1]]).unwrap();
        assert!(!i.is_stable());
        assert!(matches!(
            i.check_stable(),
            Err(Error::NotStable { index: 1, .. })
        ));
        // (x1, x2^4) is stable.
        let i = MonomialIdeal::new(2, vec![vec![1, 0], vec![0, 4]]).unwrap();
        assert!(i.is_stable());
        // Powers of the maximal ideal are stable.
        let gens = monomials_desc(3, 2);
        let i = MonomialIdeal::new(3, gens).unwrap();
        assert!(i.is_stable());
    }

    #[test]
    fn monomial_enumeration_order() {
        assert_eq!(
            monomials_desc(2, 2),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        assert_eq!(monomials_desc(1, 3), vec![vec![3]]);
        assert_eq!(monomials_desc(0, 0), vec![Vec::<u32>::new()]);
        assert!(monomials_desc(0, 2).is_empty());
        assert_eq!(monomials_desc(3, 2).len(), 6);
    }

    #[test]
    fn lex_ideal_for_h_1_2_1() {
        let h = OSequence::artinian_i64(&[1, 2, 1]).unwrap();
        let i = lex_segment_ideal(&h, 2).unwrap();
        // (x1^2, x1 x2, x2^3)
        assert_eq!(
            i.generators(),
            &[vec![2, 0], vec![1, 1], vec![0, 3]]
        );
        assert!(i.is_stable());
    }

    #[test]
    fn lex_ideal_for_truncated_line() {
        let h = OSequence::artinian_i64(&[1, 1, 1, 1]).unwrap();
        let i = lex_segment_ideal(&h, 2).unwrap();
        // (x1, x2^4)
        assert_eq!(i.generators(), &[vec![1, 0], vec![0, 4]]);
    }

    #[test]
    fn lex_ideal_of_polynomial_ring_is_zero() {
        let h = OSequence::with_max_growth(vec![big(1), big(3)]).unwrap();
        let i = lex_segment_ideal(&h, 3).unwrap();
        assert!(i.generators().is_empty());
    }

    #[test]
    fn lex_ideal_needs_enough_variables() {
        let h = OSequence::artinian_i64(&[1, 3]).unwrap();
        assert!(matches!(
            lex_segment_ideal(&h, 2),
            Err(Error::TooFewVariables { .. })
        ));
    }

    #[test]
    fn lex_ideal_respects_enumeration_limit() {
        let h = OSequence::artinian_i64(&[1, 4, 10, 20]).unwrap();
        // Degree 4 has binom(7, 4) = 35 monomials.
        assert!(matches!(
            lex_segment_ideal_with_limit(&h, 4, 30),
            Err(Error::MonomialEnumerationTooLarge { d: 4, .. })
        ));
        assert!(lex_segment_ideal_with_limit(&h, 4, 35).is_ok());
    }

    #[test]
    fn eliahou_kervaire_hand_table() {
        // (x1^2, x1 x2, x2^3): maxes 1, 2, 2.
        let i = MonomialIdeal::new(2, vec![vec![2, 0], vec![1, 1], vec![0, 3]]).unwrap();
        let t = eliahou_kervaire_betti(&i).unwrap();
        let expected = BettiTable::from_entries(
            2,
            vec![
                (0, 0, big(1)),
                (1, 2, big(2)),
                (1, 3, big(1)),
                (2, 3, big(1)),
                (2, 4, big(1)),
            ],
        );
        assert_eq!(t, expected);
    }

    #[test]
    fn eliahou_kervaire_rejects_unstable() {
        let i = MonomialIdeal::new(2, vec![vec![0, 1]]).unwrap();
        assert!(matches!(
            eliahou_kervaire_betti(&i),
            Err(Error::NotStable { .. })
        ));
    }

    #[test]
    fn single_degree_lex_segments_match_closed_form() {
        // Every lex segment in one degree is stable, so its exact Betti
        // numbers from the resolution formula must equal the closed form,
        // which takes the quotient's component dimension b = count - s.
        for n in 1..=3u32 {
            for d in 1..=3u32 {
                let monomials = monomials_desc(n, d);
                let count = monomials.len();
                for s in 0..=count {
                    let ideal = MonomialIdeal::new(n, monomials[..s].to_vec()).unwrap();
                    let table = eliahou_kervaire_betti(&ideal).unwrap();
                    let b = big((count - s) as i64);
                    for i in 0..n {
                        assert_eq!(
                            table.get(i + 1, i + d),
                            lex_betti_single_degree(&b, d, n, i).unwrap(),
                            "n = {n}, d = {d}, s = {s}, i = {i}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn principal_power_resolves_in_one_step() {
        let i = MonomialIdeal::new(3, vec![vec![4, 0, 0]]).unwrap();
        let t = eliahou_kervaire_betti(&i).unwrap();
        let expected =
            BettiTable::from_entries(3, vec![(0, 0, big(1)), (1, 4, big(1))]);
        assert_eq!(t, expected);
    }

    #[test]
    fn lex_ideal_betti_matches_bound_for_its_own_hilbert_function() {
        // The extremal bound is attained by the lex ideal: spot-check.
        let h = OSequence::artinian_i64(&[1, 2, 1]).unwrap();
        let ideal = lex_segment_ideal(&h, 2).unwrap();
        let actual = eliahou_kervaire_betti(&ideal).unwrap();
        let bound = betti_table_bound(&h, 2).unwrap();
        assert_eq!(actual, bound);
    }
}
