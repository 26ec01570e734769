//! Closed-form graded Betti numbers and bounds for standard graded algebras
//! with a given Hilbert function.
//!
//! The central quantity is `β_{i+1, i+j}(h, n)`: the graded Betti number of
//! the lex-segment ideal with quotient Hilbert function `h` in `n`
//! variables. By Bigatti–Hulett–Pardue it bounds the Betti numbers of
//! *every* graded algebra with that Hilbert function, and it is attained by
//! the lex ideal itself (verified against the Eliahou–Kervaire oracle in the
//! test suite).
//!
//! - [`betti_bound`] — the closed form for a single `(i, j)` position.
//! - [`betti_table_bound`] — the full sparse table.
//! - [`cm_betti_bound`] — bounds for Cohen–Macaulay algebras via their
//!   Artinian reduction.
//! - [`gorenstein_wlp_bound`] / [`gorenstein_wlp_table`] — the sharper
//!   three-range bound for Gorenstein algebras with the weak Lefschetz
//!   property, built from the g-vector and self-dual by construction.
//! - [`linear_resolution_betti`], [`lex_betti_single_degree`] — special
//!   cases with independent closed forms used as cross-checks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::binomial::{binom, binom_i64, binomial_expansion};
use crate::error::{Error, Result};
use crate::vectors::{h_to_g, HVector, OSequence};

/// Sparse table of graded Betti numbers `β_{i,j}` of a cyclic quotient
/// `R/I`, keyed by (homological index, internal degree), plus the ambient
/// variable count `n`. Only nonzero entries are stored; iteration order is
/// `(i, j)`-lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    n: u32,
    entries: BTreeMap<(u32, u32), BigInt>,
}

impl BettiTable {
    pub fn new(n: u32) -> Self {
        BettiTable {
            n,
            entries: BTreeMap::new(),
        }
    }

    /// Number of ambient polynomial-ring variables.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `β_{i,j}`, zero when absent.
    pub fn get(&self, i: u32, j: u32) -> BigInt {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Set an entry; zero values clear it.
    pub fn set(&mut self, i: u32, j: u32, value: BigInt) {
        if value.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
    }

    /// Add to an entry (used when accumulating contributions).
    pub fn add(&mut self, i: u32, j: u32, value: BigInt) {
        if value.is_zero() {
            return;
        }
        let v = self.entries.entry((i, j)).or_insert_with(BigInt::zero);
        *v += value;
        if v.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti number `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: u32) -> BigInt {
        self.entries
            .iter()
            .filter(|(&(a, _), _)| a == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// Largest homological index with a nonzero entry.
    pub fn max_homological_index(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Whether the table is invariant under `(i, j) → (ci - i, cj - j)`,
    /// the index map of a self-dual minimal free resolution.
    pub fn is_symmetric_under(&self, ci: u32, cj: u32) -> bool {
        self.entries.iter().all(|(&(i, j), v)| {
            i <= ci && j <= cj && self.get(ci - i, cj - j) == *v
        })
    }

    /// Entry-wise `self ≤ other` (missing entries are zero).
    pub fn dominated_by(&self, other: &BettiTable) -> bool {
        self.entries
            .iter()
            .all(|(&(i, j), v)| *v <= other.get(i, j))
    }

    /// Build from explicit entries (mainly for tests and deserialization).
    pub fn from_entries(n: u32, entries: impl IntoIterator<Item = (u32, u32, BigInt)>) -> Self {
        let mut t = BettiTable::new(n);
        for (i, j, v) in entries {
            t.add(i, j, v);
        }
        t
    }
}

/// Total Betti number `β_i` of a module with `d`-linear resolution from its
/// Hilbert function: `Σ_{t=0}^{i} (-1)^t · hilbert(d + t) · binom(n, i - t)`.
///
/// A negative intermediate result proves the input was not the Hilbert
/// function of a module with `d`-linear resolution and is rejected.
pub fn linear_resolution_betti(
    hilbert: impl Fn(u32) -> BigInt,
    d: u32,
    n: u32,
    i: u32,
) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for t in 0..=i {
        let sign = if t % 2 == 0 { 1 } else { -1 };
        acc += sign * hilbert(d + t) * binom_i64(i64::from(n), i64::from(i - t));
    }
    if acc.is_negative() {
        return Err(Error::NotLinearHilbert { d, i, value: acc });
    }
    Ok(acc)
}

/// `β_{i+1, i+d}` of `R/I` for the lex ideal `I` generated entirely in
/// degree `d`, where `b = dim_K [R/I]_d` is the quotient's degree-`d`
/// component:
/// `binom(n+d-1, d+i) · binom(d+i-1, d-1) − Σ_{(m_k, k)} Σ_{t=0}^{m_k-k}
/// binom(m_k-1-t, k-1) · binom(n-1-t, i)` over the `d`-expansion of `b`.
pub fn lex_betti_single_degree(b: &BigInt, d: u32, n: u32, i: u32) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::NonPositiveDegree { d: 0 });
    }
    if b.is_negative() {
        return Err(Error::NegativeEntry {
            index: 0,
            value: b.clone(),
        });
    }
    let max = binom_i64(i64::from(n) + i64::from(d) - 1, i64::from(d));
    if *b > max {
        return Err(Error::ComponentTooLarge {
            value: b.clone(),
            d,
            n,
            max,
        });
    }
    let (n, d, i) = (i64::from(n), i64::from(d), i64::from(i));
    let full = binom_i64(n + d - 1, d + i) * binom_i64(d + i - 1, d - 1);
    let correction = expansion_sum(b, d as u32, n, i, true)?;
    Ok(full - correction)
}

/// `Σ_{(m_k, k)} Σ_{t=0}^{m_k - k} binom(m_k - δ - t, k - δ) · binom(n-1-t, i)`
/// over the degree-`deg` expansion of `value`, with `δ = 1` for the
/// generator-side sum and `δ = 0` for the quotient-side sum.
fn expansion_sum(value: &BigInt, deg: u32, n: i64, i: i64, generator_side: bool) -> Result<BigInt> {
    let delta = i64::from(generator_side);
    let mut acc = BigInt::zero();
    for (m, k) in binomial_expansion(value, deg)?.terms() {
        let k = i64::from(*k);
        // The expansion of a Hilbert-function value in `n` variables has
        // m_k - k ≤ n - 1, so the loop range fits machine integers.
        let spread = i64::try_from(m - BigInt::from(k))
            .expect("expansion top bounded by variables + degree");
        for t in 0..=spread {
            acc += binom(&(m - BigInt::from(delta + t)), k - delta) * binom_i64(n - 1 - t, i);
        }
    }
    Ok(acc)
}

/// The closed-form bound `β_{i+1, i+d}(h, n)` for the graded Betti numbers
/// of any algebra `R/I` with Hilbert function `h` in `n` variables; exact
/// for the lex-segment ideal.
///
/// Cases: the base value (`1` exactly at position `(0,0)`) for `i ≤ -1`;
/// zero for `d ≤ 0`; the Koszul strand `binom(n - h(1), i+1)` for `d = 1`;
/// and for `d ≥ 2` the difference of expansion sums over the
/// `(d-1)`-expansion of `h(d-1)` and the `d`-expansion of `h(d)`.
pub fn betti_bound(h: &OSequence, n: u32, i: i64, d: i64) -> Result<BigInt> {
    let h1 = h.value(1);
    if h1 > BigInt::from(n) {
        return Err(Error::TooFewVariables { h1, n });
    }
    if i <= -1 {
        return Ok(if i == -1 && d == 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        });
    }
    if d <= 0 {
        return Ok(BigInt::zero());
    }
    if d == 1 {
        return Ok(binom(&(BigInt::from(n) - h.value(1)), i + 1));
    }
    // Past the last degree where generators can appear, both expansion sums
    // cancel exactly; skip the arithmetic (and avoid walking a huge tail).
    if d as u128 > h.generator_degree_limit() as u128 {
        return Ok(BigInt::zero());
    }
    let d = u32::try_from(d).expect("degree bounded by sequence length");
    let n = i64::from(n);
    let first = expansion_sum(&h.value(d as usize - 1), d - 1, n, i, false)?;
    let second = expansion_sum(&h.value(d as usize), d, n, i, true)?;
    Ok(first - second)
}

/// The full sparse table of [`betti_bound`] values: position `(i+1, i+d)`
/// for `0 ≤ i < n` and `1 ≤ d ≤ r+1`, plus `β_{0,0} = 1`.
pub fn betti_table_bound(h: &OSequence, n: u32) -> Result<BettiTable> {
    let mut table = BettiTable::new(n);
    table.set(0, 0, BigInt::one());
    for d in 1..=h.generator_degree_limit() {
        for i in 0..i64::from(n) {
            let v = betti_bound(h, n, i, d as i64)?;
            table.set((i + 1) as u32, (i as usize + d) as u32, v);
        }
    }
    Ok(table)
}

/// Betti bound for a Cohen–Macaulay algebra of Krull dimension `dim` in `n`
/// ambient variables whose Artinian reduction has Hilbert function `hvec`:
/// the reduction lives in `n - dim` variables, so this is
/// `betti_bound(hvec, n - dim, i, j)`.
pub fn cm_betti_bound(hvec: &OSequence, n: u32, dim: u32, i: i64, j: i64) -> Result<BigInt> {
    let codim = i64::from(n) - i64::from(dim);
    if codim < 0 || hvec.value(1) > BigInt::from(codim) {
        return Err(Error::InconsistentReduction {
            codim,
            h1: hvec.value(1),
        });
    }
    betti_bound(hvec, codim as u32, i, j)
}

/// Full table version of [`cm_betti_bound`].
pub fn cm_betti_table_bound(hvec: &OSequence, n: u32, dim: u32) -> Result<BettiTable> {
    let codim = i64::from(n) - i64::from(dim);
    if codim < 0 || hvec.value(1) > BigInt::from(codim) {
        return Err(Error::InconsistentReduction {
            codim,
            h1: hvec.value(1),
        });
    }
    betti_table_bound(hvec, codim as u32)
}

/// `β_{a, b}(h, n)` addressed by table position rather than `(i, d)`:
/// `a = i + 1`, `b = i + d`. Positions with `a ≤ 0` take the base value.
fn betti_position(h: &OSequence, n: u32, a: i64, b: i64) -> Result<BigInt> {
    if a <= 0 {
        return Ok(if a == 0 && b == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        });
    }
    betti_bound(h, n, a - 1, b - a + 1)
}

/// Parameters shared by the Gorenstein-WLP bound and its table assembly.
struct GorensteinContext {
    g: OSequence,
    m: u32,
    g1: i64,
    r: i64,
    u: i64,
}

fn gorenstein_context(h: &HVector, n: u32, d: u32) -> Result<GorensteinContext> {
    let g = h_to_g(h)?;
    let m = i64::from(n) - i64::from(d) - 1;
    if m < 0 || BigInt::from(m) < g.g1() {
        return Err(Error::TooFewGorensteinVariables { m, g1: g.g1() });
    }
    let g1 = i64::try_from(g.g1()).expect("g_1 ≤ m < 2^32");
    Ok(GorensteinContext {
        u: g.u() as i64,
        g: g.to_o_sequence(),
        m: m as u32,
        g1,
        r: i64::from(h.d()),
    })
}

/// The three-range bound on `β_{i+1, i+j}` for a Gorenstein algebra of
/// dimension `d` in `n` variables with the weak Lefschetz property and
/// symmetric (SI) h-vector `h`.
///
/// With `g` the difference vector of the first half of `h`, `m = n - d - 1`,
/// `r` the socle degree and `u` the last index where `h` strictly grows:
/// the bound is the lex-side value `β_{i+1, i+j}(g, m)` for `j ≤ r - u`,
/// its dual `β_{g_1 - i, r + h_1 - i - j}(g, m)` for `j ≥ u + 2`, and the
/// sum of both in the overlap window `r - u + 1 ≤ j ≤ u + 1`.
pub fn gorenstein_wlp_bound(h: &HVector, n: u32, d: u32, i: i64, j: i64) -> Result<BigInt> {
    let ctx = gorenstein_context(h, n, d)?;
    gorenstein_value(&ctx, i, j)
}

fn gorenstein_value(ctx: &GorensteinContext, i: i64, j: i64) -> Result<BigInt> {
    let first = |i: i64, j: i64| betti_position(&ctx.g, ctx.m, i + 1, i + j);
    // h_1 = g_1 + 1, so the dual degree index r + h_1 - i - j = r + g_1 + 1 - i - j.
    let dual = |i: i64, j: i64| {
        betti_position(&ctx.g, ctx.m, ctx.g1 - i, ctx.r + ctx.g1 + 1 - i - j)
    };
    if j <= ctx.r - ctx.u {
        first(i, j)
    } else if j <= ctx.u + 1 {
        Ok(first(i, j)? + dual(i, j)?)
    } else {
        dual(i, j)
    }
}

/// Assemble the full [`gorenstein_wlp_bound`] table. For the polytope
/// normalization `m = g_1` the result is invariant under the duality map
/// `(i, j) → (h_1 - i, h_1 + r - j)`.
pub fn gorenstein_wlp_table(h: &HVector, n: u32, d: u32) -> Result<BettiTable> {
    let ctx = gorenstein_context(h, n, d)?;
    let mut table = BettiTable::new(n);
    let max_i = i64::from(ctx.m).max(ctx.g1);
    for i in -1..=max_i {
        for j in 0..=ctx.r + 1 {
            let v = gorenstein_value(&ctx, i, j)?;
            if !v.is_zero() {
                table.set((i + 1) as u32, (i + j) as u32, v);
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vectors::GVector;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn table(n: u32, entries: &[(u32, u32, i64)]) -> BettiTable {
        BettiTable::from_entries(n, entries.iter().map(|&(i, j, v)| (i, j, big(v))))
    }

    #[test]
    fn linear_resolution_square_of_maximal_ideal() {
        // I = (x1, x2, x3)^2: Hilbert function of I is binom(j+2, 2) for j ≥ 2.
        let hilbert = |j: u32| binom_i64(i64::from(j) + 2, 2);
        assert_eq!(linear_resolution_betti(hilbert, 2, 3, 0).unwrap(), big(6));
        assert_eq!(linear_resolution_betti(hilbert, 2, 3, 1).unwrap(), big(8));
        assert_eq!(linear_resolution_betti(hilbert, 2, 3, 2).unwrap(), big(3));
    }

    #[test]
    fn linear_resolution_cube_in_two_variables() {
        let hilbert = |j: u32| binom_i64(i64::from(j) + 1, 1);
        assert_eq!(linear_resolution_betti(hilbert, 3, 2, 0).unwrap(), big(4));
        assert_eq!(linear_resolution_betti(hilbert, 3, 2, 1).unwrap(), big(3));
    }

    #[test]
    fn linear_resolution_rejects_bad_hilbert() {
        // Constant Hilbert function 1 is not d-linear for n = 2, i = 1:
        // 1·binom(2,1) - 1·binom(2,0) = 1 ≥ 0, but i = 2 gives 1 - 2 + 1 = 0,
        // and a decreasing one goes negative.
        let hilbert = |j: u32| if j == 2 { big(1) } else { big(5) };
        assert!(linear_resolution_betti(hilbert, 2, 2, 1).is_err());
    }

    #[test]
    fn single_degree_examples() {
        // b = 0: the ideal is the whole degree-d component.
        assert_eq!(
            lex_betti_single_degree(&big(0), 3, 2, 0).unwrap(),
            binom_i64(4, 3)
        );
        // n = 2, d = 2, b = 1: I = (x1², x1x2), two generators.
        assert_eq!(lex_betti_single_degree(&big(1), 2, 2, 0).unwrap(), big(2));
        // out-of-range b
        assert!(lex_betti_single_degree(&big(7), 2, 2, 0).is_err());
        assert!(lex_betti_single_degree(&big(-1), 2, 2, 0).is_err());
    }

    #[test]
    fn single_degree_extremal_cases() {
        for n in 1..=4u32 {
            for d in 1..=4u32 {
                let max = binom_i64(i64::from(n + d) - 1, i64::from(d));
                let mut b = BigInt::zero();
                while b <= max {
                    // i = 0: number of generators binom(n+d-1, d) - b.
                    assert_eq!(
                        lex_betti_single_degree(&b, d, n, 0).unwrap(),
                        &max - &b
                    );
                    // i = n-1: binom(n+d-2, d-1) - b_{<d>}.
                    let down = crate::binomial::macaulay_down(&b, d).unwrap();
                    assert_eq!(
                        lex_betti_single_degree(&b, d, n, n - 1).unwrap(),
                        binom_i64(i64::from(n + d) - 2, i64::from(d) - 1) - down
                    );
                    b += 1;
                }
            }
        }
    }

    #[test]
    fn betti_bound_base_cases() {
        let h = OSequence::artinian_i64(&[1, 2, 1]).unwrap();
        assert_eq!(betti_bound(&h, 2, -1, 1).unwrap(), big(1));
        assert_eq!(betti_bound(&h, 2, -1, 2).unwrap(), big(0));
        assert_eq!(betti_bound(&h, 2, -5, 1).unwrap(), big(0));
        assert_eq!(betti_bound(&h, 2, 0, 0).unwrap(), big(0));
        assert_eq!(betti_bound(&h, 2, 0, -3).unwrap(), big(0));
        // d ≥ r + 2 vanishes.
        assert_eq!(betti_bound(&h, 2, 0, 4).unwrap(), big(0));
        assert_eq!(betti_bound(&h, 2, 1, 100).unwrap(), big(0));
    }

    #[test]
    fn betti_bound_needs_enough_variables() {
        let h = OSequence::artinian_i64(&[1, 3, 1]).unwrap();
        assert!(matches!(
            betti_bound(&h, 2, 0, 2),
            Err(Error::TooFewVariables { .. })
        ));
    }

    #[test]
    fn betti_table_h_1_2_1() {
        let h = OSequence::artinian_i64(&[1, 2, 1]).unwrap();
        let expected = table(
            2,
            &[(0, 0, 1), (1, 2, 2), (1, 3, 1), (2, 3, 1), (2, 4, 1)],
        );
        assert_eq!(betti_table_bound(&h, 2).unwrap(), expected);
    }

    #[test]
    fn betti_table_polynomial_ring_is_trivial() {
        for n in 1..=4 {
            let h = OSequence::with_max_growth(vec![BigInt::one(), big(n)]).unwrap();
            let t = betti_table_bound(&h, n as u32).unwrap();
            assert_eq!(t, table(n as u32, &[(0, 0, 1)]));
        }
    }

    #[test]
    fn betti_table_principal_square() {
        let h = OSequence::artinian_i64(&[1, 1]).unwrap();
        let t = betti_table_bound(&h, 1).unwrap();
        assert_eq!(t, table(1, &[(0, 0, 1), (1, 2, 1)]));
    }

    #[test]
    fn betti_table_includes_linear_strand() {
        // h = (1,1,1,1) in 2 variables: lex ideal (x1, x2^4).
        let h = OSequence::artinian_i64(&[1, 1, 1, 1]).unwrap();
        let t = betti_table_bound(&h, 2).unwrap();
        assert_eq!(
            t,
            table(2, &[(0, 0, 1), (1, 1, 1), (1, 4, 1), (2, 5, 1)])
        );
    }

    #[test]
    fn extremal_specializations() {
        // i = 0 → h(d-1)^{<d-1>} - h(d); i = n-1 → h(d-1) - h(d)_{<d>}.
        use crate::binomial::{macaulay_down, macaulay_up};
        for h in crate::vectors::enumerate_o_sequences(3, 4) {
            let n = 3u32;
            let limit = h.generator_degree_limit();
            for d in 2..=limit {
                let prev = h.value(d - 1);
                let cur = h.value(d);
                assert_eq!(
                    betti_bound(&h, n, 0, d as i64).unwrap(),
                    macaulay_up(&prev, d as u32 - 1).unwrap() - &cur,
                    "i = 0 specialization at h = {h:?}, d = {d}"
                );
                assert_eq!(
                    betti_bound(&h, n, i64::from(n) - 1, d as i64).unwrap(),
                    &prev - macaulay_down(&cur, d as u32).unwrap(),
                    "i = n-1 specialization at h = {h:?}, d = {d}"
                );
            }
        }
    }

    #[test]
    fn betti_bound_vanishes_for_large_i() {
        let h = OSequence::artinian_i64(&[1, 3, 4, 2]).unwrap();
        for i in 3..8 {
            for d in 0..6 {
                assert_eq!(betti_bound(&h, 3, i, d).unwrap(), big(0));
            }
        }
    }

    #[test]
    fn single_degree_agrees_with_general_formula() {
        // Build h = (1, n, binom(n+1,2), …, full, b) truncated at degree d
        // and compare the generic bound at degree d with the single-degree
        // closed form.
        for n in 1..=4u32 {
            for d in 1..=4u32 {
                let max = binom_i64(i64::from(n + d) - 1, i64::from(d));
                let mut b = BigInt::zero();
                while b <= max {
                    let mut entries: Vec<BigInt> = (0..d)
                        .map(|j| binom_i64(i64::from(n + j) - 1, i64::from(j)))
                        .collect();
                    entries.push(b.clone());
                    let h = OSequence::artinian(entries).unwrap();
                    for i in 0..n {
                        assert_eq!(
                            betti_bound(&h, n, i64::from(i), i64::from(d)).unwrap(),
                            lex_betti_single_degree(&b, d, n, i).unwrap(),
                            "mismatch at n={n}, d={d}, b={b}, i={i}"
                        );
                    }
                    b += 1;
                }
            }
        }
    }

    #[test]
    fn cm_bound_reduces_to_artinian() {
        let h = OSequence::artinian_i64(&[1, 3, 3, 1]).unwrap();
        for i in -1..4 {
            for j in 0..6 {
                assert_eq!(
                    cm_betti_bound(&h, 6, 3, i, j).unwrap(),
                    betti_bound(&h, 3, i, j).unwrap()
                );
                assert_eq!(
                    cm_betti_bound(&h, 3, 0, i, j).unwrap(),
                    betti_bound(&h, 3, i, j).unwrap()
                );
            }
        }
        assert!(matches!(
            cm_betti_bound(&h, 6, 4, 0, 2),
            Err(Error::InconsistentReduction { .. })
        ));
    }

    #[test]
    fn gorenstein_complete_intersection_h_1221() {
        // h = (1,2,2,1) with m = 1 is K[x,y]/(q2, q3): Koszul table.
        let h = HVector::new(vec![big(1), big(2), big(2), big(1)]).unwrap();
        // n - d - 1 = 1: use n = 2, d = 0.
        let t = gorenstein_wlp_table(&h, 2, 0).unwrap();
        assert_eq!(
            t,
            table(2, &[(0, 0, 1), (1, 2, 1), (1, 3, 1), (2, 5, 1)])
        );
        assert_eq!(gorenstein_wlp_bound(&h, 2, 0, 0, 2).unwrap(), big(1));
        assert_eq!(gorenstein_wlp_bound(&h, 2, 0, 1, 3).unwrap(), big(0));
        assert!(t.is_symmetric_under(2, 5));
    }

    #[test]
    fn gorenstein_simplex_table_is_principal() {
        // h = (1,1,1,1): boundary of a 3-simplex, m = g1 = 0 with n = 4, d = 3.
        let h = HVector::new(vec![big(1); 4]).unwrap();
        let t = gorenstein_wlp_table(&h, 4, 3).unwrap();
        assert_eq!(t, table(4, &[(0, 0, 1), (1, 4, 1)]));
    }

    #[test]
    fn gorenstein_octahedron_row_one() {
        // h = (1,3,3,1), polytope normalization n = h1 + d = 6, d = 3.
        let h = HVector::new(vec![big(1), big(3), big(3), big(1)]).unwrap();
        assert_eq!(gorenstein_wlp_bound(&h, 6, 3, 0, 2).unwrap(), big(3));
        assert_eq!(gorenstein_wlp_bound(&h, 6, 3, 0, 3).unwrap(), big(2));
        let t = gorenstein_wlp_table(&h, 6, 3).unwrap();
        // Self-dual under (i, j) → (h1 - i, h1 + r - j) = (3 - i, 6 - j).
        assert!(t.is_symmetric_under(3, 6));
        assert_eq!(t.get(3, 6), big(1));
    }

    #[test]
    fn gorenstein_rejects_non_si() {
        let h = HVector::new(vec![big(1), big(3), big(2), big(3), big(1)]).unwrap();
        assert!(gorenstein_wlp_bound(&h, 8, 4, 0, 2).is_err());
    }

    #[test]
    fn gorenstein_needs_enough_variables() {
        let h = HVector::new(vec![big(1), big(3), big(3), big(1)]).unwrap();
        // m = n - d - 1 = 1 < g1 = 2.
        assert!(matches!(
            gorenstein_wlp_bound(&h, 5, 3, 0, 2),
            Err(Error::TooFewGorensteinVariables { .. })
        ));
    }

    #[test]
    fn gorenstein_table_attained_by_cyclic_parameters() {
        // g = (1,2,3), d = 4 (parameters of C(7,4)): row 1 of the table must
        // match the per-degree empty-simplex bounds computed independently.
        let g = GVector::new(vec![big(1), big(2), big(3)]).unwrap();
        let h = crate::vectors::g_to_h(&g, 4).unwrap();
        let t = gorenstein_wlp_table(&h, 7, 4).unwrap();
        assert_eq!(t.get(1, 2), big(0));
        assert_eq!(t.get(1, 3), big(7));
        assert_eq!(t.get(1, 4), big(0));
        assert!(t.is_symmetric_under(3, 7));
    }
}
