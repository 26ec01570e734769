//! Independent ground-truth computations used to validate the bound
//! machinery: exact Betti tables of Stanley–Reisner rings via reduced
//! simplicial homology, and exact Betti tables of stable monomial ideals
//! via their closed-form minimal resolution.
//!
//! Everything here is exact (integer or prime-field arithmetic) and
//! deliberately restricted to small inputs by explicit limits.

mod complex;
mod homology;
mod monomial;

pub use complex::{
    cross_polytope_boundary, cyclic_polytope_boundary, polygon_boundary, simplex_boundary,
    SimplicialComplex, MASK_VERTEX_LIMIT,
};
pub use homology::{
    hochster_betti, hochster_betti_with_limit, reduced_homology_ranks, Characteristic,
    HomologyRanks, DEFAULT_VERTEX_LIMIT,
};
pub use monomial::{
    eliahou_kervaire_betti, lex_segment_ideal, lex_segment_ideal_with_limit, MonomialIdeal,
    DEFAULT_MONOMIAL_LIMIT,
};
