//! Exact simplicial homology and Hochster-style Betti tables.
//!
//! Ranks of boundary matrices are computed exactly: fraction-free Gaussian
//! elimination over the integers for characteristic zero, and modular
//! elimination for prime characteristic. Tables are assembled from a
//! deterministic, order-preserving parallel sweep over vertex subsets, so
//! results are bit-identical across thread counts.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::oracle::complex::SimplicialComplex;

/// Largest vertex count accepted by [`hochster_betti`] unless an explicit
/// limit is supplied: the sweep visits all `2^n` vertex subsets.
pub const DEFAULT_VERTEX_LIMIT: u32 = 12;

/// Coefficient field characteristic: the rationals (`Zero`) or a prime
/// field (`Prime(p)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Characteristic {
    Zero,
    Prime(u64),
}

impl Characteristic {
    /// `0` selects the rationals; any prime selects `F_p`; anything else
    /// is rejected.
    pub fn new(p: u64) -> Result<Self> {
        if p == 0 {
            Ok(Characteristic::Zero)
        } else if is_prime(p) {
            Ok(Characteristic::Prime(p))
        } else {
            Err(Error::InvalidCharacteristic { p })
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Characteristic::Zero => write!(f, "0"),
            Characteristic::Prime(p) => write!(f, "{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= p) {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Ranks of the reduced homology groups of a complex over a field.
///
/// `rank(k)` is `dim H̃_k`; indices outside the stored range are zero.
/// The empty complex `{∅}` has `rank(-1) = 1` and nothing else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyRanks {
    // ranks[k] = dim H̃_{k-1}, so the slot for H̃_{-1} is index 0.
    ranks: Vec<u64>,
}

impl HomologyRanks {
    pub fn rank(&self, dim: i64) -> u64 {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|idx| self.ranks.get(idx).copied())
            .unwrap_or(0)
    }

    /// `(dimension, rank)` pairs for the nonzero reduced homology groups.
    pub fn nonzero(&self) -> Vec<(i64, u64)> {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r != 0)
            .map(|(idx, &r)| (idx as i64 - 1, r))
            .collect()
    }

    pub fn total(&self) -> u64 {
        self.ranks.iter().sum()
    }
}

/// Exact rank of an integer matrix via fraction-free (Bareiss) elimination.
fn rank_integer(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        for r in rank + 1..rows {
            // The uniform two-term update also rescales rows whose leading
            // entry is already zero, as fraction-free elimination requires.
            for c in col + 1..cols {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                debug_assert!((&num % &prev).is_zero(), "fraction-free step must divide");
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank of a matrix over `F_p` by Gaussian elimination.
fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mul = |a: u64, b: u64| -> u64 { ((a as u128 * b as u128) % p as u128) as u64 };
    let inv = |a: u64| -> u64 {
        // Fermat inverse; p is prime and a ≠ 0 mod p.
        let mut base = a % p;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    };
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| m[r][col] % p != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let scale = inv(m[rank][col]);
        for cell in m[rank][col..].iter_mut() {
            *cell = mul(*cell, scale);
        }
        let (pivot_rows, rest) = m.split_at_mut(rank + 1);
        let pivot = &pivot_rows[rank][col..];
        for row in rest.iter_mut() {
            let factor = row[col] % p;
            if factor == 0 {
                continue;
            }
            for (cell, &above) in row[col..].iter_mut().zip(pivot) {
                let sub = mul(factor, above);
                *cell = (*cell + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Boundary matrix from cardinality-`c` faces (columns) to
/// cardinality-`c-1` faces (rows), with entries ±1 encoded as i64.
fn boundary_matrix(rows: &[u32], cols: &[u32]) -> Vec<Vec<i64>> {
    let row_index: HashMap<u32, usize> = rows.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut matrix = vec![vec![0i64; cols.len()]; rows.len()];
    for (j, &face) in cols.iter().enumerate() {
        let mut sign = 1i64;
        for b in 0..32 {
            if face & (1 << b) == 0 {
                continue;
            }
            let sub = face & !(1 << b);
            let i = row_index[&sub];
            matrix[i][j] = sign;
            sign = -sign;
        }
    }
    matrix
}

fn matrix_rank(matrix: Vec<Vec<i64>>, ch: Characteristic) -> usize {
    match ch {
        Characteristic::Zero => rank_integer(
            matrix
                .into_iter()
                .map(|row| row.into_iter().map(BigInt::from).collect())
                .collect(),
        ),
        Characteristic::Prime(p) => rank_mod_p(
            matrix
                .into_iter()
                .map(|row| row.into_iter().map(|e| e.rem_euclid(p as i64) as u64).collect())
                .collect(),
            p,
        ),
    }
}

/// Reduced homology ranks of the complex spanned by `face_masks`, which
/// must be closed under subsets and contain the empty face `0`.
fn homology_from_masks(face_masks: &[u32], ch: Characteristic) -> HomologyRanks {
    debug_assert!(face_masks.contains(&0));
    let top = face_masks
        .iter()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0);
    // levels[c] = faces with c vertices, ascending mask order.
    let mut levels: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for &m in face_masks {
        levels[m.count_ones() as usize].push(m);
    }
    for level in &mut levels {
        level.sort_unstable();
    }
    // boundary_rank[c] = rank of ∂: C_{c-1} -> C_{c-2} (cardinality c -> c-1),
    // for c = 1..=top; the augmentation ∂: C_0 -> C_{-1} is included at c = 1.
    let mut boundary_rank = vec![0usize; top + 2];
    for c in 1..=top {
        let matrix = boundary_matrix(&levels[c - 1], &levels[c]);
        boundary_rank[c] = matrix_rank(matrix, ch);
    }
    let ranks = (0..=top)
        .map(|c| (levels[c].len() - boundary_rank[c] - boundary_rank[c + 1]) as u64)
        .collect();
    HomologyRanks { ranks }
}

/// Ranks of the reduced homology of a complex over the field selected by
/// `ch`. Exact in all characteristics.
pub fn reduced_homology_ranks(complex: &SimplicialComplex, ch: Characteristic) -> HomologyRanks {
    homology_from_masks(&complex.face_masks(), ch)
}

/// Graded Betti numbers of the Stanley–Reisner ring of a complex over the
/// chosen field, by summing reduced homology of all vertex-set
/// restrictions: `β_{i,j}` collects `dim H̃_{j-i-1}` of the restriction to
/// each `j`-subset of the vertices.
///
/// Visits all `2^n` subsets; refuses `n > limit`.
pub fn hochster_betti_with_limit(
    complex: &SimplicialComplex,
    ch: Characteristic,
    limit: u32,
) -> Result<BettiTable> {
    let n = complex.n();
    if n > limit {
        return Err(Error::VertexLimitExceeded { n, limit });
    }
    let faces = complex.face_masks();
    let subsets: Vec<u32> = (0..(1u64 << n)).map(|w| w as u32).collect();
    // Deterministic despite parallelism: contributions are collected in
    // subset order and folded sequentially.
    let per_subset: Vec<Vec<(u32, u32, u64)>> = subsets
        .par_iter()
        .map(|&w| {
            let restricted: Vec<u32> = faces.iter().copied().filter(|&f| f & !w == 0).collect();
            let ranks = homology_from_masks(&restricted, ch);
            let j = w.count_ones();
            ranks
                .nonzero()
                .into_iter()
                .filter_map(|(dim, rank)| {
                    // β_{i,j} with i = j - 1 - dim; dim ranges in -1..=j-1.
                    let i = i64::from(j) - 1 - dim;
                    u32::try_from(i).ok().map(|i| (i, j, rank))
                })
                .collect()
        })
        .collect();
    let mut table = BettiTable::new(n);
    for contributions in per_subset {
        for (i, j, rank) in contributions {
            table.add(i, j, BigInt::from(rank));
        }
    }
    Ok(table)
}

/// [`hochster_betti_with_limit`] with the default vertex cap of
/// [`DEFAULT_VERTEX_LIMIT`].
pub fn hochster_betti(complex: &SimplicialComplex, ch: Characteristic) -> Result<BettiTable> {
    hochster_betti_with_limit(complex, ch, DEFAULT_VERTEX_LIMIT)
}
