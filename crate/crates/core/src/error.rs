use num_bigint::BigInt;
use thiserror::Error;

/// Coarse classification of failures, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Malformed or mathematically invalid input (not an O-sequence, negative
    /// entries, inconsistent parameters, …).
    Validation,
    /// Structurally valid input outside an operation's stated domain
    /// (e.g. a dimension too small for the requested indices).
    Precondition,
    /// Input exceeds a configured size limit for exhaustive computations.
    Size,
}

/// Errors produced by validation and precondition checks across the library.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("entry at index {index} is negative ({value})")]
    NegativeEntry { index: usize, value: BigInt },

    #[error("entry at index {index} must be positive, found {value}")]
    NonPositiveEntry { index: usize, value: BigInt },

    #[error("leading entry must be 1, found {found}")]
    LeadingEntryNotOne { found: BigInt },

    #[error("sequence must not be empty")]
    EmptySequence,

    #[error(
        "not an O-sequence: entry {value} at index {index} exceeds the Macaulay \
         growth bound {bound} imposed by the previous entry"
    )]
    GrowthBoundExceeded {
        index: usize,
        value: BigInt,
        bound: BigInt,
    },

    #[error("a maximal-growth tail needs at least two listed entries to be determined")]
    MaxGrowthTailTooShort,

    #[error("expected {expected} entries for dimension {d}, found {found}")]
    LengthMismatch { d: u32, expected: usize, found: usize },

    #[error("not an SI-sequence: h({index}) = {left} but h({mirror}) = {right} (not symmetric)")]
    NotSymmetric {
        index: usize,
        mirror: usize,
        left: BigInt,
        right: BigInt,
    },

    #[error("not an SI-sequence: first-difference vector is not an O-sequence ({0})")]
    DifferencesNotOSequence(Box<Error>),

    #[error(
        "not the f-vector of a polytope boundary: derived h-vector has h({index}) = {value} < 0"
    )]
    NegativeHEntry { index: usize, value: BigInt },

    #[error("h(1) = {h1} requires at least {h1} variables, but n = {n}")]
    TooFewVariables { h1: BigInt, n: u32 },

    #[error(
        "inconsistent Cohen-Macaulay reduction: n - dim = {codim} leaves fewer \
         variables than h(1) = {h1}"
    )]
    InconsistentReduction { codim: i64, h1: BigInt },

    #[error(
        "inconsistent Gorenstein parameters: n - d - 1 = {m} must be at least g_1 = {g1}"
    )]
    TooFewGorensteinVariables { m: i64, g1: BigInt },

    #[error("value {value} exceeds the number of degree-{d} monomials in {n} variables ({max})")]
    ComponentTooLarge {
        value: BigInt,
        d: u32,
        n: u32,
        max: BigInt,
    },

    #[error("Hilbert values are not those of a module with {d}-linear resolution: alternating sum at i = {i} is {value} < 0")]
    NotLinearHilbert { d: u32, i: u32, value: BigInt },

    #[error("degree must be positive, found {d}")]
    NonPositiveDegree { d: i64 },

    #[error("{name} = {value} is outside the admissible range [{lo}, {hi}]")]
    IndexOutOfRange {
        name: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("{name} must be at least {min}, found {value}")]
    ParameterTooSmall {
        name: &'static str,
        value: i64,
        min: i64,
    },

    #[error("g-vector with u = {u} requires dimension d >= 2u = {min}, found d = {d}")]
    DimensionTooSmall { u: usize, d: u32, min: u32 },

    #[error("bound on g_k-fold counts requires d >= j + k (found d = {d}, j = {j}, k = {k})")]
    GkDimensionTooSmall { d: u32, j: u32, k: u32 },

    #[error("characteristic must be 0 or a prime, found {p}")]
    InvalidCharacteristic { p: u64 },

    #[error("vertex {v} is outside 1..={n}")]
    VertexOutOfRange { v: i64, n: u32 },

    #[error("complex on {n} vertices exceeds the vertex limit {limit}")]
    VertexLimitExceeded { n: u32, limit: u32 },

    #[error("degree {d} has {count} monomials in {n} variables; exceeds the enumeration limit {limit}")]
    MonomialEnumerationTooLarge {
        d: u32,
        n: u32,
        count: BigInt,
        limit: u64,
    },

    #[error("ideal is not stable: swapping x_{index} into generator {generator:?} leaves the ideal")]
    NotStable { generator: Vec<u32>, index: u32 },

    #[error("exponent vector must have one entry per variable ({expected}), found {found}")]
    WrongExponentCount { expected: u32, found: usize },

    #[error("cyclic polytope requires n >= d + 1 >= 3, found n = {n}, d = {d}")]
    BadCyclicParameters { n: u32, d: u32 },

    #[error("polygon requires at least 3 vertices, found {n}")]
    BadPolygonParameters { n: u32 },

    #[error("cross-polytope requires dimension >= 1, found {d}")]
    BadCrossPolytopeParameters { d: u32 },

    #[error("invalid JSON document: {reason}")]
    InvalidDocument { reason: String },
}

impl Error {
    /// Classify this error for exit-code mapping.
    pub fn category(&self) -> ErrorCategory {
        use Error::*;
        match self {
            IndexOutOfRange { .. }
            | DimensionTooSmall { .. }
            | GkDimensionTooSmall { .. } => ErrorCategory::Precondition,
            VertexLimitExceeded { .. } | MonomialEnumerationTooLarge { .. } => {
                ErrorCategory::Size
            }
            _ => ErrorCategory::Validation,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
