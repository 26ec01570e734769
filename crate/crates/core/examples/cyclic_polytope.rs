//! Bound the empty simplices of the cyclic polytope C(7, 4) from its
//! g-vector, then confirm with the exact oracle that the bound is attained.
//!
//! Run with: cargo run --example cyclic_polytope

use betti_bounds::oracle::{cyclic_polytope_boundary, hochster_betti, Characteristic};
use betti_bounds::simplices::bound_report;
use betti_bounds::vectors::GVector;
use num_bigint::BigInt;

fn main() -> Result<(), betti_bounds::error::Error> {
    // Bounds from the g-vector of the cyclic polytope C(7, 4):
    let g = GVector::new(vec![1.into(), 2.into(), 3.into()])?;
    let report = bound_report(&g, 4)?;
    assert_eq!(*report.total(), BigInt::from(7));
    println!("bound on empty simplices of a polytope with g = 1, 2, 3:");
    for (degree, bound) in report.per_degree() {
        println!("  dimension {}: at most {bound}", degree - 1);
    }
    println!("  total: at most {}", report.total());

    // The oracle confirms the bound is attained:
    let boundary = cyclic_polytope_boundary(7, 4)?;
    assert_eq!(boundary.minimal_nonfaces().len(), 7);
    let table = hochster_betti(&boundary, Characteristic::Zero)?;
    assert_eq!(table.get(1, 3), BigInt::from(7));
    println!("C(7, 4) attains it: {} empty triangles", table.get(1, 3));
    Ok(())
}
