//! Sharp upper bounds for graded Betti numbers and empty-simplex counts,
//! with exact combinatorial oracles to keep the formulas honest.
//!
//! The crate has three layers:
//!
//! * **Combinatorics of Macaulay representations** — [`binomial`] provides
//!   generalized binomial coefficients, the unique binomial expansion of an
//!   integer in a given degree, and the shift operators `b^{<d,j>}` built
//!   from it; [`vectors`] provides face-count (`f`), Hilbert (`h`), and
//!   `g`-vectors with the O-sequence and SI-sequence growth conditions and
//!   the conversions between them.
//!
//! * **Bounds** — [`betti`] computes the extremal graded Betti numbers of
//!   lex-segment ideals in closed form (attained bounds for any ideal with
//!   the same Hilbert function), their Cohen–Macaulay and Gorenstein
//!   weak-Lefschetz refinements, and assembles whole Betti tables.
//!   [`simplices`] specializes the Gorenstein bounds to boundary complexes
//!   of simplicial polytopes: upper bounds for the number of empty
//!   simplices (minimal non-faces) per degree, cumulatively by dimension,
//!   and in total, plus the dimension-free variants.
//!
//! * **Oracles** — [`oracle`] computes the same invariants from first
//!   principles on explicit small inputs: exact Betti tables of
//!   Stanley–Reisner rings via reduced simplicial homology over any field
//!   characteristic, and exact Betti tables of stable monomial ideals via
//!   the Eliahou–Kervaire resolution. These are independent
//!   implementations used by the test suite to verify the closed forms.
//!
//! [`json`] carries the wire formats shared with the command-line tool.
//!
//! All arithmetic is exact (`num-bigint`); nothing in the crate rounds or
//! approximates.

pub mod betti;
pub mod binomial;
pub mod error;
pub mod json;
pub mod oracle;
pub mod simplices;
pub mod vectors;

pub use betti::{
    betti_bound, betti_table_bound, cm_betti_bound, cm_betti_table_bound, gorenstein_wlp_bound,
    gorenstein_wlp_table, lex_betti_single_degree, linear_resolution_betti, BettiTable,
};
pub use binomial::{binom, binom_i64, binomial_expansion, macaulay_down, macaulay_shift, macaulay_up};
pub use error::{Error, ErrorCategory, Result};
pub use simplices::{
    bound_report, cumulative_bound, dimension_free_bound, empty_dimension_bound,
    generator_degree_bound, gk_bound, gk_dimension_free_bound, total_bound, vertex_count_bound,
    EmptySimplexBoundReport,
};
pub use vectors::{FVector, GVector, HVector, OSequence, Tail};
