//! Face-count vectors and Hilbert-function sequences, with exact
//! conversions between them.
//!
//! - [`FVector`] — face counts `(f_{-1}, f_0, …, f_{d-1})` of a
//!   `(d-1)`-dimensional complex (boundary of a `d`-polytope), with
//!   `f_{-1} = 1` for the empty face.
//! - [`HVector`] — the h-vector `(h_0, …, h_d)` obtained from an f-vector by
//!   the standard change of basis.
//! - [`GVector`] — the g-vector `(g_0, …, g_u)` of successive differences of
//!   the first half of a symmetric h-vector, trimmed to its last positive
//!   entry.
//! - [`OSequence`] — a sequence satisfying Macaulay's growth bound
//!   `h(j+1) ≤ h(j)^{<j>}`, i.e. the Hilbert function of some standard
//!   graded algebra; carries an explicit tail convention.
//!
//! The raw linear transforms [`f_to_h_unchecked`] / [`h_to_f_unchecked`] are
//! exposed for property testing: they are mutually inverse on arbitrary
//! integer vectors, independent of any validity constraints.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::binomial::{binom_i64, macaulay_up};
use crate::error::{Error, Result};

/// Face-count vector of the boundary complex of a `d`-polytope:
/// `entries[i]` is `f_{i-1}`, the number of `(i-1)`-dimensional faces,
/// starting with `f_{-1} = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    d: u32,
    entries: Vec<BigInt>,
}

impl FVector {
    /// Build from all `d + 1` counts including the leading `f_{-1} = 1`.
    pub fn new(d: u32, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != d as usize + 1 {
            return Err(Error::LengthMismatch {
                d,
                expected: d as usize + 1,
                found: entries.len(),
            });
        }
        if entries[0] != BigInt::one() {
            return Err(Error::LeadingEntryNotOne {
                found: entries[0].clone(),
            });
        }
        for (index, value) in entries.iter().enumerate() {
            if !value.is_positive() {
                return Err(Error::NonPositiveEntry {
                    index,
                    value: value.clone(),
                });
            }
        }
        Ok(FVector { d, entries })
    }

    /// Build from the proper face counts `(f_0, …, f_{d-1})`, prepending
    /// `f_{-1} = 1`.
    pub fn from_face_counts(d: u32, counts: Vec<BigInt>) -> Result<Self> {
        let mut entries = Vec::with_capacity(counts.len() + 1);
        entries.push(BigInt::one());
        entries.extend(counts);
        Self::new(d, entries)
    }

    /// The polytope dimension `d`.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// All entries `(f_{-1}, …, f_{d-1})`.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `f_i`, valid for `-1 ≤ i ≤ d-1`.
    pub fn f(&self, i: i64) -> &BigInt {
        &self.entries[usize::try_from(i + 1).expect("index ≥ -1")]
    }
}

/// The h-vector `(h_0, …, h_d)` of a `(d-1)`-dimensional complex:
/// non-negative with `h_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    entries: Vec<BigInt>,
}

impl HVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptySequence);
        }
        if entries[0] != BigInt::one() {
            return Err(Error::LeadingEntryNotOne {
                found: entries[0].clone(),
            });
        }
        for (index, value) in entries.iter().enumerate() {
            if value.is_negative() {
                return Err(Error::NegativeEntry {
                    index,
                    value: value.clone(),
                });
            }
        }
        Ok(HVector { entries })
    }

    /// The dimension parameter `d` (one less than the number of entries).
    pub fn d(&self) -> u32 {
        (self.entries.len() - 1) as u32
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `h_j`, with zeros past the end.
    pub fn h(&self, j: usize) -> BigInt {
        self.entries.get(j).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Whether `h_i = h_{d-i}` for all `i` (Dehn–Sommerville symmetry).
    pub fn is_symmetric(&self) -> bool {
        let n = self.entries.len();
        (0..n / 2).all(|i| self.entries[i] == self.entries[n - 1 - i])
    }
}

/// The g-vector `(g_0, …, g_u)`: positive entries, `g_0 = 1`, and an
/// O-sequence. `u` is the index of the last (positive) entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GVector {
    entries: Vec<BigInt>,
}

impl GVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptySequence);
        }
        for (index, value) in entries.iter().enumerate() {
            if !value.is_positive() {
                return Err(Error::NonPositiveEntry {
                    index,
                    value: value.clone(),
                });
            }
        }
        check_o_sequence(&entries)?;
        Ok(GVector { entries })
    }

    /// The largest index `u` with `g_u > 0`.
    pub fn u(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `g_j`, with zeros past `u`.
    pub fn g(&self, j: usize) -> BigInt {
        self.entries.get(j).cloned().unwrap_or_else(BigInt::zero)
    }

    /// `g_1` (zero for the trivial g-vector `(1)`).
    pub fn g1(&self) -> BigInt {
        self.g(1)
    }

    /// View as an Artinian O-sequence (used when bounding Betti numbers of
    /// the associated graded algebra).
    pub fn to_o_sequence(&self) -> OSequence {
        OSequence::artinian(self.entries.clone()).expect("a g-vector is an O-sequence")
    }
}

/// Tail convention for an [`OSequence`] given by finitely many entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tail {
    /// All later values are zero (Artinian Hilbert function).
    Zero,
    /// Later values continue with maximal Macaulay growth
    /// `h(j+1) = h(j)^{<j>}` (e.g. a polynomial ring).
    MaxGrowth,
}

/// A sequence `h(0) = 1, h(1), h(2), …` satisfying Macaulay's growth bound
/// `h(j+1) ≤ h(j)^{<j>}` for `j ≥ 1`; exactly the Hilbert functions of
/// standard graded algebras (with `h(1)` variables).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OSequence {
    entries: Vec<BigInt>,
    tail: Tail,
}

impl OSequence {
    pub fn new(entries: Vec<BigInt>, tail: Tail) -> Result<Self> {
        if tail == Tail::MaxGrowth && entries.len() < 2 {
            return Err(Error::MaxGrowthTailTooShort);
        }
        check_o_sequence(&entries)?;
        Ok(OSequence { entries, tail })
    }

    /// Finitely supported sequence: listed entries, then zeros.
    pub fn artinian(entries: Vec<BigInt>) -> Result<Self> {
        Self::new(entries, Tail::Zero)
    }

    /// Listed entries continued by maximal growth.
    pub fn with_max_growth(entries: Vec<BigInt>) -> Result<Self> {
        Self::new(entries, Tail::MaxGrowth)
    }

    /// Convenience constructor from machine integers with zero tail.
    pub fn artinian_i64(entries: &[i64]) -> Result<Self> {
        Self::artinian(entries.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    /// The value `h(j)` for any `j ≥ 0`, applying the tail convention.
    pub fn value(&self, j: usize) -> BigInt {
        if let Some(v) = self.entries.get(j) {
            return v.clone();
        }
        match self.tail {
            Tail::Zero => BigInt::zero(),
            Tail::MaxGrowth => {
                let mut deg = self.entries.len() - 1;
                let mut v = self.entries[deg].clone();
                while deg < j {
                    v = macaulay_up(&v, deg as u32).expect("entries are non-negative");
                    deg += 1;
                }
                v
            }
        }
    }

    /// Largest degree with a nonzero value, or `None` if the sequence never
    /// becomes zero (maximal-growth tail).
    pub fn socle_degree(&self) -> Option<usize> {
        match self.tail {
            Tail::MaxGrowth => None,
            Tail::Zero => Some(
                self.entries
                    .iter()
                    .rposition(|v| !v.is_zero())
                    .expect("h(0) = 1 is nonzero"),
            ),
        }
    }

    /// One past the largest degree in which the associated lex ideal can
    /// acquire minimal generators: `r + 1` for an Artinian sequence with
    /// socle degree `r`; for a maximal-growth tail, new generators can only
    /// appear while the listed entries are below maximal growth.
    pub fn generator_degree_limit(&self) -> usize {
        match self.tail {
            Tail::Zero => self.socle_degree().expect("artinian") + 1,
            Tail::MaxGrowth => self.entries.len() - 1,
        }
    }
}

/// Check the O-sequence conditions, reporting the first violated one:
/// nonempty, `h(0) = 1`, non-negative entries, and Macaulay growth
/// `h(j+1) ≤ h(j)^{<j>}` for every `j ≥ 1`.
pub fn check_o_sequence(entries: &[BigInt]) -> Result<()> {
    if entries.is_empty() {
        return Err(Error::EmptySequence);
    }
    if entries[0] != BigInt::one() {
        return Err(Error::LeadingEntryNotOne {
            found: entries[0].clone(),
        });
    }
    for (index, value) in entries.iter().enumerate() {
        if value.is_negative() {
            return Err(Error::NegativeEntry {
                index,
                value: value.clone(),
            });
        }
    }
    for j in 1..entries.len().saturating_sub(1) {
        let bound = macaulay_up(&entries[j], j as u32)?;
        if entries[j + 1] > bound {
            return Err(Error::GrowthBoundExceeded {
                index: j + 1,
                value: entries[j + 1].clone(),
                bound,
            });
        }
    }
    Ok(())
}

/// Boolean form of [`check_o_sequence`].
pub fn is_o_sequence(entries: &[BigInt]) -> bool {
    check_o_sequence(entries).is_ok()
}

/// Check the SI-sequence conditions, reporting the first violated one:
/// symmetric (`h_i = h_{d-i}`), and the first-difference vector
/// `(h_0, h_1 - h_0, …, h_{⌊d/2⌋} - h_{⌊d/2⌋-1})` is an O-sequence.
pub fn check_si_sequence(entries: &[BigInt]) -> Result<()> {
    if entries.is_empty() {
        return Err(Error::EmptySequence);
    }
    if entries[0] != BigInt::one() {
        return Err(Error::LeadingEntryNotOne {
            found: entries[0].clone(),
        });
    }
    let d = entries.len() - 1;
    for i in 0..=d / 2 {
        if entries[i] != entries[d - i] {
            return Err(Error::NotSymmetric {
                index: i,
                mirror: d - i,
                left: entries[i].clone(),
                right: entries[d - i].clone(),
            });
        }
    }
    let diffs = half_differences(entries);
    check_o_sequence(&diffs).map_err(|e| Error::DifferencesNotOSequence(Box::new(e)))
}

/// Boolean form of [`check_si_sequence`].
pub fn is_si_sequence(entries: &[BigInt]) -> bool {
    check_si_sequence(entries).is_ok()
}

/// `(h_0, h_1 - h_0, …, h_m - h_{m-1})` for `m = ⌊d/2⌋`.
fn half_differences(entries: &[BigInt]) -> Vec<BigInt> {
    let d = entries.len() - 1;
    let mut diffs = Vec::with_capacity(d / 2 + 1);
    diffs.push(entries[0].clone());
    for i in 1..=d / 2 {
        diffs.push(&entries[i] - &entries[i - 1]);
    }
    diffs
}

/// The linear transform taking face counts to the h-vector, applied without
/// any validity checks. Input is `(f_{-1}, …, f_{d-1})`, output
/// `(h_0, …, h_d)`:
/// `h_j = Σ_{i=0}^{j} (-1)^{j-i} binom(d-i, j-i) f_{i-1}`.
pub fn f_to_h_unchecked(d: u32, entries: &[BigInt]) -> Vec<BigInt> {
    let d = i64::from(d);
    (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                    sign * binom_i64(d - i, j - i) * &entries[i as usize]
                })
                .sum()
        })
        .collect()
}

/// Inverse of [`f_to_h_unchecked`]: `f_{j-1} = Σ_{i=0}^{j} binom(d-i, j-i) h_i`.
pub fn h_to_f_unchecked(d: u32, entries: &[BigInt]) -> Vec<BigInt> {
    let d = i64::from(d);
    (0..=d)
        .map(|j| {
            (0..=j)
                .filter(|i| (*i as usize) < entries.len())
                .map(|i| binom_i64(d - i, j - i) * &entries[i as usize])
                .sum()
        })
        .collect()
}

/// Convert an f-vector to its h-vector. A negative derived entry means the
/// counts do not come from a polytope boundary (nor any Cohen–Macaulay
/// complex) and is rejected with a diagnostic.
pub fn f_to_h(f: &FVector) -> Result<HVector> {
    let h = f_to_h_unchecked(f.d(), f.entries());
    for (index, value) in h.iter().enumerate() {
        if value.is_negative() {
            return Err(Error::NegativeHEntry {
                index,
                value: value.clone(),
            });
        }
    }
    HVector::new(h)
}

/// Convert an h-vector to the f-vector of a `(d-1)`-dimensional complex.
/// `d` may exceed `h.d()`; missing entries are treated as zero.
pub fn h_to_f(h: &HVector, d: u32) -> Result<FVector> {
    if (d as usize) < h.entries().len() - 1 {
        return Err(Error::LengthMismatch {
            d,
            expected: d as usize + 1,
            found: h.entries().len(),
        });
    }
    FVector::new(d, h_to_f_unchecked(d, h.entries()))
}

/// Extract the g-vector from a symmetric h-vector: successive differences of
/// the first half, trimmed to the last positive entry. Fails when `h` is not
/// an SI-sequence.
pub fn h_to_g(h: &HVector) -> Result<GVector> {
    check_si_sequence(h.entries())?;
    let mut diffs = half_differences(h.entries());
    while diffs.len() > 1 && diffs.last().map(Zero::is_zero) == Some(true) {
        diffs.pop();
    }
    GVector::new(diffs)
}

/// Rebuild the h-vector of dimension `d` from a g-vector: partial sums up to
/// `u`, a plateau through `d - u`, then the mirror image. Requires `d ≥ 2u`.
pub fn g_to_h(g: &GVector, d: u32) -> Result<HVector> {
    let u = g.u();
    if (d as usize) < 2 * u {
        return Err(Error::DimensionTooSmall {
            u,
            d,
            min: 2 * u as u32,
        });
    }
    let mut h = Vec::with_capacity(d as usize + 1);
    let mut acc = BigInt::zero();
    for j in 0..=d as usize {
        if j <= u {
            acc += g.g(j);
        }
        if j <= (d as usize) - u {
            h.push(acc.clone());
        } else {
            h.push(h[(d as usize) - j].clone());
        }
    }
    HVector::new(h)
}

/// Exhaustively enumerate all Artinian O-sequences with `h(1) ≤ max_h1` and
/// socle degree `≤ max_socle_degree`, in depth-first order. Trailing zeros
/// are trimmed, so each Hilbert function appears exactly once.
pub fn enumerate_o_sequences(max_h1: u64, max_socle_degree: usize) -> Vec<OSequence> {
    let mut out = Vec::new();
    let mut stack = vec![vec![BigInt::one()]];
    while let Some(current) = stack.pop() {
        let j = current.len() - 1;
        if j < max_socle_degree {
            let bound = if j == 0 {
                BigInt::from(max_h1)
            } else {
                macaulay_up(&current[j], j as u32).expect("non-negative entries")
            };
            let mut v = BigInt::one();
            while v <= bound {
                let mut next = current.clone();
                next.push(v.clone());
                stack.push(next);
                v += 1;
            }
        }
        out.push(OSequence::artinian(current).expect("constructed within growth bounds"));
    }
    out
}
