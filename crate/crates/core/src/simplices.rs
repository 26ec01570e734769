//! Sharp upper bounds on counts of empty simplices of simplicial
//! `d`-polytopes.
//!
//! An *empty simplex* of a polytope is a minimal vertex set that is not a
//! face although all its proper subsets are; empty `(j-1)`-simplices
//! correspond bijectively to degree-`j` minimal generators of the
//! Stanley–Reisner ideal, i.e. to the graded Betti number `β_{1,j}`. All
//! bounds here are functions of the polytope's g-vector (or of partial data:
//! `g_1` only, or a single `g_k`), and each is attained by an explicit
//! polytope — the test suite checks attainment against the brute-force
//! minimal-nonface oracle.
//!
//! Degree/dimension bookkeeping: a bound indexed by *generator degree* `j`
//! concerns empty simplices of *dimension* `j - 1`. Both indexings are
//! exposed ([`generator_degree_bound`] vs [`empty_dimension_bound`]) and
//! [`EmptySimplexBoundReport`] carries the degree-indexed map.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::binomial::{binom_i64, macaulay_down, macaulay_shift, macaulay_up};
use crate::error::{Error, Result};
use crate::vectors::GVector;

fn check_dimension(g: &GVector, d: u32) -> Result<()> {
    let u = g.u();
    if (d as u64) < 2 * u as u64 {
        return Err(Error::DimensionTooSmall {
            u,
            d,
            min: 2 * u as u32,
        });
    }
    Ok(())
}

/// Upper bound on the number of degree-`j` minimal generators of the
/// Stanley–Reisner ideal (empty `(j-1)`-simplices) of a simplicial
/// `d`-polytope with g-vector `g`.
///
/// For `d ≥ 2u + 1` the bound is `g_{j-1}^{<j-1>} - g_j` on the lower
/// window `2 ≤ j ≤ u+1`, `g_{d+1-j} - (g_{d+2-j})_{<d+2-j>}` on the upper
/// window `d-u+1 ≤ j ≤ d`, and `0` elsewhere (with `g_{u+1} := 0`). For
/// `d = 2u` the windows meet at `j = u+1`, where the bound is
/// `g_u^{<u>} + g_u`. A simplex (`u = 0`) has a principal Stanley–Reisner
/// ideal: the single bound `1` sits at generator degree `d + 1`.
///
/// Any integer `j` is accepted; degrees outside the windows return `0`.
pub fn generator_degree_bound(g: &GVector, d: u32, j: i64) -> Result<BigInt> {
    check_dimension(g, d)?;
    let u = g.u();
    if u == 0 {
        return Ok(if j == i64::from(d) + 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        });
    }
    let ui = u as i64;
    let di = i64::from(d);
    if di == 2 * ui && j == ui + 1 {
        return Ok(macaulay_up(&g.g(u), u as u32)? + g.g(u));
    }
    if (2..=ui + 1).contains(&j) {
        let j = j as usize;
        Ok(macaulay_up(&g.g(j - 1), j as u32 - 1)? - g.g(j))
    } else if (di - ui + 1..=di).contains(&j) {
        let a = (di + 1 - j) as usize;
        let b = (di + 2 - j) as usize;
        Ok(g.g(a) - macaulay_down(&g.g(b), b as u32)?)
    } else {
        Ok(BigInt::zero())
    }
}

/// [`generator_degree_bound`] indexed by simplex dimension: an upper bound
/// on the number of empty `dim`-simplices.
pub fn empty_dimension_bound(g: &GVector, d: u32, dim: i64) -> Result<BigInt> {
    generator_degree_bound(g, d, dim.saturating_add(1))
}

/// `N(k)`: upper bound on the number of empty simplices of dimension at
/// most `k`, for `1 ≤ k < d`. Piecewise in `k`:
///
/// - `k ≤ min{u, d-u-1}`: `g_1 + Σ_{j=1}^{k} (g_j^{<j>} - g_j) - g_{k+1}`;
/// - `u < k < d-u`: the plateau value `N(u)`;
/// - `d-u ≤ k < d`: `g_1 + g_{d-k}^{<d-k>} + Σ_{j=1}^{d-k-1} (g_j^{<j>} - g_j)
///   + Σ_{j=d-k+1}^{u} (g_j^{<j>} - (g_j)_{<j>})`.
///
/// Equals the partial sum `Σ_{j=2}^{k+1}` of [`generator_degree_bound`]. A
/// simplex's lone empty simplex has dimension `d`, outside every admissible
/// `k`, so `u = 0` yields `0`.
pub fn cumulative_bound(g: &GVector, d: u32, k: u32) -> Result<BigInt> {
    check_dimension(g, d)?;
    if k < 1 || k >= d {
        return Err(Error::IndexOutOfRange {
            name: "k",
            value: i64::from(k),
            lo: 1,
            hi: i64::from(d) - 1,
        });
    }
    let u = g.u();
    if u == 0 {
        return Ok(BigInt::zero());
    }
    let k = k as usize;
    let d = d as usize;
    if k <= u.min(d - u - 1) {
        let mut acc = g.g1();
        for j in 1..=k {
            acc += macaulay_up(&g.g(j), j as u32)? - g.g(j);
        }
        Ok(acc - g.g(k + 1))
    } else if k < d - u {
        cumulative_bound(g, d as u32, u as u32)
    } else {
        let dk = d - k; // ranges over 1..=u
        let mut acc = g.g1() + macaulay_up(&g.g(dk), dk as u32)?;
        for j in 1..dk {
            acc += macaulay_up(&g.g(j), j as u32)? - g.g(j);
        }
        for j in dk + 1..=u {
            acc += macaulay_up(&g.g(j), j as u32)? - macaulay_down(&g.g(j), j as u32)?;
        }
        Ok(acc)
    }
}

/// Upper bound on the total number of empty simplices, independent of the
/// polytope's dimension: `binom(g_1+2, 2) - 1 + Σ_{j=2}^{u}
/// (g_j^{<j>} - (g_j)_{<j>})`; `1` for a simplex.
pub fn total_bound(g: &GVector) -> Result<BigInt> {
    let u = g.u();
    if u == 0 {
        return Ok(BigInt::one());
    }
    let mut total = crate::binomial::binom(&(g.g1() + 2), 2) - 1;
    for j in 2..=u {
        total += macaulay_up(&g.g(j), j as u32)? - macaulay_down(&g.g(j), j as u32)?;
    }
    Ok(total)
}

/// Upper bound on the number of empty simplices of dimension at most `k`
/// of a `d`-polytope that is not a simplex, in terms of `g_1` alone:
/// `binom(g_1+k, g_1-1)` for `2k < d`, and
/// `binom(g_1+⌊d/2⌋, g_1-1) + binom(g_1+⌊d/2⌋-1, g_1-1)` for `2k ≥ d`.
/// Equivalently: the vertex count is `f_0 = d + g_1 + 1`.
pub fn vertex_count_bound(g1: i64, d: u32, k: u32) -> Result<BigInt> {
    if g1 < 1 {
        return Err(Error::ParameterTooSmall {
            name: "g_1",
            value: g1,
            min: 1,
        });
    }
    if k < 1 || k >= d {
        return Err(Error::IndexOutOfRange {
            name: "k",
            value: i64::from(k),
            lo: 1,
            hi: i64::from(d) - 1,
        });
    }
    if 2 * i64::from(k) < i64::from(d) {
        Ok(binom_i64(g1 + i64::from(k), g1 - 1))
    } else {
        let half = i64::from(d / 2);
        Ok(binom_i64(g1 + half, g1 - 1) + binom_i64(g1 + half - 1, g1 - 1))
    }
}

/// Upper bound on the number of empty simplices of dimension at most `k`
/// valid for every non-simplex polytope with the given `g_1`, regardless
/// of dimension: `binom(g_1+k, g_1-1) + binom(g_1+k-1, g_1-1)`.
pub fn dimension_free_bound(g1: i64, k: i64) -> Result<BigInt> {
    if g1 < 1 {
        return Err(Error::ParameterTooSmall {
            name: "g_1",
            value: g1,
            min: 1,
        });
    }
    if k < 1 {
        return Err(Error::ParameterTooSmall {
            name: "k",
            value: k,
            min: 1,
        });
    }
    Ok(binom_i64(g1 + k, g1 - 1) + binom_i64(g1 + k - 1, g1 - 1))
}

fn check_gk_parameters(b: &BigInt, k: u32, j: u32) -> Result<()> {
    if k < 1 {
        return Err(Error::ParameterTooSmall {
            name: "k",
            value: i64::from(k),
            min: 1,
        });
    }
    if j < k {
        return Err(Error::ParameterTooSmall {
            name: "j",
            value: i64::from(j),
            min: i64::from(k),
        });
    }
    if b.is_negative() {
        return Err(Error::NegativeEntry {
            index: 0,
            value: b.clone(),
        });
    }
    Ok(())
}

/// Upper bound on the number of empty `j`-simplices of a `d`-polytope whose
/// g-vector satisfies `g_k ≤ b`, requiring `d ≥ j + k` (below that no bound
/// in terms of `g_k` alone exists): `b^{<k, j-k+1>}` for `2j < d`,
/// `b^{<k, j-k+1>} + b^{<k, j-k>}` for `2j = d`, and `b^{<k, d-j-k>}` for
/// `2j > d`.
pub fn gk_bound(b: &BigInt, k: u32, j: u32, d: u32) -> Result<BigInt> {
    check_gk_parameters(b, k, j)?;
    if d < j + k {
        return Err(Error::GkDimensionTooSmall { d, j, k });
    }
    let up = i64::from(j) - i64::from(k);
    if 2 * j < d {
        macaulay_shift(b, k, up + 1)
    } else if 2 * j == d {
        Ok(macaulay_shift(b, k, up + 1)? + macaulay_shift(b, k, up)?)
    } else {
        macaulay_shift(b, k, i64::from(d) - i64::from(j) - i64::from(k))
    }
}

/// Dimension-independent form of [`gk_bound`]:
/// `b^{<k, j-k+1>} + b^{<k, j-k>}`, an upper bound for every admissible
/// dimension `d ≥ j + k`.
pub fn gk_dimension_free_bound(b: &BigInt, k: u32, j: u32) -> Result<BigInt> {
    check_gk_parameters(b, k, j)?;
    let up = i64::from(j) - i64::from(k);
    Ok(macaulay_shift(b, k, up + 1)? + macaulay_shift(b, k, up)?)
}

/// All empty-simplex bounds of a `(g, d)` pair in one immutable value.
///
/// `per_degree` maps generator degree `j` to the bound on `β_{1,j}`
/// (empty `(j-1)`-simplices); `cumulative` maps `k` to `N(k)`;
/// `vanishing_range` is the closed interval of simplex dimensions that are
/// provably absent, when nonempty. For a simplex (`u = 0`) the lone empty
/// simplex has dimension `d`, so `cumulative` is identically zero while
/// `total` is `1`; for `u ≥ 1`, `cumulative` at `k = d-1` equals `total`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmptySimplexBoundReport {
    d: u32,
    g: GVector,
    per_degree: BTreeMap<u32, BigInt>,
    cumulative: BTreeMap<u32, BigInt>,
    total: BigInt,
    vanishing_range: Option<(u32, u32)>,
}

impl EmptySimplexBoundReport {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn g(&self) -> &GVector {
        &self.g
    }

    /// Bounds keyed by generator degree `j` (simplex dimension `j - 1`).
    pub fn per_degree(&self) -> &BTreeMap<u32, BigInt> {
        &self.per_degree
    }

    /// `N(k)` bounds keyed by `k`, for `1 ≤ k < d`.
    pub fn cumulative(&self) -> &BTreeMap<u32, BigInt> {
        &self.cumulative
    }

    pub fn total(&self) -> &BigInt {
        &self.total
    }

    /// Closed interval `[u+1, d-u-1]` of simplex dimensions with no empty
    /// simplices, when that interval is nonempty.
    pub fn vanishing_range(&self) -> Option<(u32, u32)> {
        self.vanishing_range
    }
}

/// Evaluate every bound for the pair `(g, d)`.
pub fn bound_report(g: &GVector, d: u32) -> Result<EmptySimplexBoundReport> {
    check_dimension(g, d)?;
    let u = g.u() as u32;
    let mut per_degree = BTreeMap::new();
    if u == 0 {
        per_degree.insert(d + 1, BigInt::one());
    } else {
        for j in 2..=d {
            per_degree.insert(j, generator_degree_bound(g, d, i64::from(j))?);
        }
    }
    let mut cumulative = BTreeMap::new();
    for k in 1..d {
        cumulative.insert(k, cumulative_bound(g, d, k)?);
    }
    let vanishing_range = if d >= 2 * u + 2 {
        Some((u + 1, d - u - 1))
    } else {
        None
    };
    Ok(EmptySimplexBoundReport {
        d,
        g: g.clone(),
        per_degree,
        cumulative,
        total: total_bound(g)?,
        vanishing_range,
    })
}
