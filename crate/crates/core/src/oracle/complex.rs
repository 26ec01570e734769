//! Simplicial complexes at desk scale, with exact face enumeration and the
//! standard polytope-boundary families used as ground truth.
//!
//! Vertices are numbered `1..=n` in the public API; internally a face is a
//! bitmask (`u32`), which caps complexes at 32 vertices. The expensive
//! computations (Hochster tables) impose a much smaller configurable limit.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::vectors::FVector;

/// Absolute ceiling on vertices imposed by the bitmask representation.
pub const MASK_VERTEX_LIMIT: u32 = 32;

/// A finite simplicial complex given by its inclusion-maximal faces.
///
/// Always contains the empty face; vertices need not appear in any facet
/// (such "ghost" vertices are non-faces of size one, i.e. degree-one
/// generators of the Stanley–Reisner ideal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: u32,
    facets: Vec<u32>,
}

fn vertex_mask(n: u32, vertices: &[u32]) -> Result<u32> {
    let mut mask = 0u32;
    for &v in vertices {
        if v < 1 || v > n {
            return Err(Error::VertexOutOfRange { v: i64::from(v), n });
        }
        mask |= 1 << (v - 1);
    }
    Ok(mask)
}

fn mask_vertices(mask: u32) -> Vec<u32> {
    (0..MASK_VERTEX_LIMIT)
        .filter(|b| mask & (1 << b) != 0)
        .map(|b| b + 1)
        .collect()
}

impl SimplicialComplex {
    /// Build a complex on vertices `1..=n` generated by the given faces.
    /// Faces contained in others are absorbed; duplicates are merged.
    pub fn new(n: u32, facets: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        if n < 1 {
            return Err(Error::ParameterTooSmall {
                name: "n_vertices",
                value: i64::from(n),
                min: 1,
            });
        }
        if n > MASK_VERTEX_LIMIT {
            return Err(Error::VertexLimitExceeded {
                n,
                limit: MASK_VERTEX_LIMIT,
            });
        }
        let mut masks: Vec<u32> = Vec::new();
        for facet in facets {
            masks.push(vertex_mask(n, &facet)?);
        }
        masks.sort_unstable();
        masks.dedup();
        let maximal: Vec<u32> = masks
            .iter()
            .copied()
            .filter(|&f| !masks.iter().any(|&g| g != f && g & f == f))
            .collect();
        Ok(SimplicialComplex { n, facets: maximal })
    }

    /// Number of ambient vertices (including any that appear in no face).
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Inclusion-maximal faces as sorted 1-based vertex lists, ordered by
    /// size then lexicographically.
    pub fn facets(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = self.facets.iter().map(|&m| mask_vertices(m)).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Dimension of the complex (`-1` if the empty face is the only face).
    pub fn dimension(&self) -> i64 {
        self.facets
            .iter()
            .map(|m| i64::from(m.count_ones()) - 1)
            .max()
            .unwrap_or(-1)
    }

    pub(crate) fn mask_is_face(&self, mask: u32) -> bool {
        self.facets.iter().any(|&f| f & mask == mask)
    }

    /// Whether the given vertex set is a face.
    pub fn is_face(&self, vertices: &[u32]) -> Result<bool> {
        Ok(self.mask_is_face(vertex_mask(self.n, vertices)?))
    }

    /// Every face of the complex as a sorted list of bitmasks (the empty
    /// face `0` included).
    pub(crate) fn face_masks(&self) -> Vec<u32> {
        let mut set: HashSet<u32> = HashSet::new();
        set.insert(0);
        for &facet in &self.facets {
            let mut sub = facet;
            loop {
                set.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        let mut faces: Vec<u32> = set.into_iter().collect();
        faces.sort_unstable();
        faces
    }

    /// Exact face counts: entry `c` is the number of faces with `c`
    /// vertices, led by `f_{-1} = 1` for the empty face.
    pub fn f_vector(&self) -> FVector {
        let faces = self.face_masks();
        let top = faces.iter().map(|m| m.count_ones()).max().unwrap_or(0);
        let mut counts = vec![0u64; top as usize + 1];
        for m in &faces {
            counts[m.count_ones() as usize] += 1;
        }
        let entries = counts.into_iter().map(BigInt::from).collect();
        FVector::new(top, entries).expect("face counts of a complex form an f-vector")
    }

    /// All inclusion-minimal non-faces (empty simplices), as sorted 1-based
    /// vertex lists ordered by size then lexicographically. A minimal
    /// non-face of size `j` corresponds to a degree-`j` generator of the
    /// Stanley–Reisner ideal and an empty `(j-1)`-simplex.
    pub fn minimal_nonfaces(&self) -> Vec<Vec<u32>> {
        let faces: HashSet<u32> = self.face_masks().into_iter().collect();
        let mut found: HashSet<u32> = HashSet::new();
        for &face in &faces {
            for b in 0..self.n {
                let bit = 1u32 << b;
                if face & bit != 0 {
                    continue;
                }
                let candidate = face | bit;
                if faces.contains(&candidate) || found.contains(&candidate) {
                    continue;
                }
                let minimal = (0..self.n)
                    .filter(|&w| candidate & (1 << w) != 0)
                    .all(|w| faces.contains(&(candidate & !(1 << w))));
                if minimal {
                    found.insert(candidate);
                }
            }
        }
        let mut result: Vec<Vec<u32>> = found.into_iter().map(mask_vertices).collect();
        result.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        result
    }
}

/// Ascending `k`-subsets of `1..=n` in lexicographic order.
fn subsets(n: u32, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(k as usize);
    fn rec(n: u32, k: u32, start: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == k as usize {
            out.push(current.clone());
            return;
        }
        let remaining = k as usize - current.len();
        for v in start..=n {
            if ((n - v + 1) as usize) < remaining {
                break;
            }
            current.push(v);
            rec(n, k, v + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 1, &mut current, &mut out);
    out
}

/// Gale evenness: between any two vertices *not* in the set there must be
/// an even number of vertices of the set.
fn is_gale_even(n: u32, subset: &[u32]) -> bool {
    let mut member = vec![false; n as usize + 1];
    for &v in subset {
        member[v as usize] = true;
    }
    // prefix[v] = |subset ∩ {1..=v}|
    let mut prefix = vec![0u32; n as usize + 1];
    for v in 1..=n as usize {
        prefix[v] = prefix[v - 1] + u32::from(member[v]);
    }
    for x in 1..=n {
        if member[x as usize] {
            continue;
        }
        for y in x + 1..=n {
            if member[y as usize] {
                continue;
            }
            if (prefix[y as usize - 1] - prefix[x as usize]) % 2 != 0 {
                return false;
            }
        }
    }
    true
}

/// Boundary complex of the cyclic polytope `C(n, d)` (convex hull of `n`
/// points on the moment curve): facets are the `d`-subsets of `1..=n`
/// satisfying Gale evenness. Requires `n ≥ d + 1 ≥ 3`.
pub fn cyclic_polytope_boundary(n: u32, d: u32) -> Result<SimplicialComplex> {
    if d < 2 || n < d + 1 {
        return Err(Error::BadCyclicParameters { n, d });
    }
    let facets: Vec<Vec<u32>> = subsets(n, d)
        .into_iter()
        .filter(|s| is_gale_even(n, s))
        .collect();
    SimplicialComplex::new(n, facets)
}

/// Boundary of a convex `n`-gon: the cycle `1-2-…-n-1`. Requires `n ≥ 3`.
pub fn polygon_boundary(n: u32) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(Error::BadPolygonParameters { n });
    }
    let facets = (1..=n).map(|v| vec![v, v % n + 1]).collect::<Vec<_>>();
    SimplicialComplex::new(n, facets)
}

/// Boundary of the `d`-dimensional cross-polytope: `2d` vertices in
/// antipodal pairs `(2i-1, 2i)`, facets choose one vertex from each pair.
/// `d = 3` is the octahedron. Requires `d ≥ 1`.
pub fn cross_polytope_boundary(d: u32) -> Result<SimplicialComplex> {
    if d < 1 {
        return Err(Error::BadCrossPolytopeParameters { d });
    }
    let mut facets = Vec::with_capacity(1 << d);
    for choice in 0u32..(1 << d) {
        let facet: Vec<u32> = (0..d)
            .map(|i| 2 * i + 1 + ((choice >> i) & 1))
            .collect();
        facets.push(facet);
    }
    SimplicialComplex::new(2 * d, facets)
}

/// Boundary of the `d`-simplex: all proper subsets of `d + 1` vertices.
/// Requires `d ≥ 1`.
pub fn simplex_boundary(d: u32) -> Result<SimplicialComplex> {
    if d < 1 {
        return Err(Error::ParameterTooSmall {
            name: "d",
            value: i64::from(d),
            min: 1,
        });
    }
    SimplicialComplex::new(d + 1, subsets(d + 1, d))
}
