//! Cross-validation between independent computations: the closed-form
//! bounds, the Eliahou–Kervaire resolution, and Hochster-style homology
//! tables must tell one consistent story on explicit small inputs.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use betti_bounds::betti::cm_betti_table_bound;
use betti_bounds::oracle::{
    cross_polytope_boundary, cyclic_polytope_boundary, eliahou_kervaire_betti, hochster_betti,
    lex_segment_ideal, polygon_boundary, reduced_homology_ranks, Characteristic, MonomialIdeal,
    SimplicialComplex,
};
use betti_bounds::vectors::{enumerate_o_sequences, f_to_h, h_to_g, OSequence};
use betti_bounds::{betti_table_bound, binom_i64, gorenstein_wlp_table, BettiTable};

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// All exponent vectors of total degree `deg` in `n` variables
/// (an independent enumeration, colex rather than lex order).
fn all_monomials(n: u32, deg: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n as usize];
    fn rec(idx: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx + 1 == current.len() {
            current[idx] = left;
            out.push(current.clone());
            return;
        }
        for e in 0..=left {
            current[idx] = e;
            rec(idx + 1, left - e, current, out);
        }
        current[idx] = 0;
    }
    if n == 0 {
        if deg == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, deg, &mut current, &mut out);
    out
}

/// The boundary-sphere families used throughout: (complex, polytope dim).
fn polytope_menu() -> Vec<(SimplicialComplex, u32)> {
    let mut menu = Vec::new();
    for n in 4..=9 {
        menu.push((polygon_boundary(n).unwrap(), 2));
    }
    for d in 2..=4 {
        menu.push((cross_polytope_boundary(d).unwrap(), d));
    }
    for (n, d) in [(6, 3), (7, 4), (8, 4), (8, 5)] {
        menu.push((cyclic_polytope_boundary(n, d).unwrap(), d));
    }
    menu
}

#[test]
fn lex_ideal_realizes_its_hilbert_function() {
    // Independent check of the lex-segment construction: counting the
    // monomials outside the ideal degree by degree must reproduce h.
    let mut cases = Vec::new();
    for h in enumerate_o_sequences(2, 4) {
        cases.push((h.clone(), 2u32));
        cases.push((h, 3u32));
    }
    for h in enumerate_o_sequences(3, 3) {
        cases.push((h, 3u32));
    }
    for (h, n) in cases {
        let ideal = lex_segment_ideal(&h, n).unwrap();
        let top = h.socle_degree().unwrap() + 2;
        for deg in 0..=top as u32 {
            let outside = all_monomials(n, deg)
                .iter()
                .filter(|m| !ideal.contains(m).unwrap())
                .count();
            assert_eq!(
                big(outside as i64),
                h.value(deg as usize),
                "h = {:?}, n = {n}, degree {deg}",
                h.entries()
            );
        }
    }
}

#[test]
fn lex_ideals_are_stable() {
    for h in enumerate_o_sequences(3, 4) {
        let ideal = lex_segment_ideal(&h, 3).unwrap();
        assert!(ideal.is_stable(), "h = {:?}", h.entries());
    }
}

#[test]
fn koszul_complexes_agree_with_variable_ideals() {
    // The Stanley–Reisner ideal of a full simplex on vertices k+1..n is
    // (x_1, …, x_k); its resolution is the Koszul complex, which both
    // oracles must reproduce exactly.
    for n in 1..=5u32 {
        for k in 0..=n {
            let facets = if k == n {
                Vec::new()
            } else {
                vec![((k + 1)..=n).collect::<Vec<u32>>()]
            };
            let complex = SimplicialComplex::new(n, facets).unwrap();
            let from_homology = hochster_betti(&complex, Characteristic::Zero).unwrap();

            let gens = (0..k).map(|v| {
                let mut e = vec![0u32; n as usize];
                e[v as usize] = 1;
                e
            });
            let ideal = MonomialIdeal::new(n, gens).unwrap();
            let from_resolution = eliahou_kervaire_betti(&ideal).unwrap();

            let mut koszul = BettiTable::new(n);
            for i in 0..=k {
                koszul.set(i, i, binom_i64(i64::from(k), i64::from(i)));
            }
            assert_eq!(from_homology, koszul, "n = {n}, k = {k}");
            assert_eq!(from_resolution, koszul, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn hochster_first_syzygies_count_minimal_nonfaces() {
    for (complex, _) in polytope_menu() {
        let table = hochster_betti_padded(&complex);
        let nonfaces = complex.minimal_nonfaces();
        for j in 2..=complex.n() {
            let count = nonfaces.iter().filter(|f| f.len() == j as usize).count();
            assert_eq!(
                table.get(1, j),
                big(count as i64),
                "complex on {} vertices, degree {j}",
                complex.n()
            );
        }
    }
}

fn hochster_betti_padded(complex: &SimplicialComplex) -> BettiTable {
    hochster_betti(complex, Characteristic::Zero).unwrap()
}

#[test]
fn closed_form_bounds_dominate_actual_polytope_tables() {
    // The extremal table for the reduced Hilbert function is a universal
    // upper bound; so is the Gorenstein refinement (char 0 boundary
    // spheres have the weak Lefschetz property).
    for (complex, d) in polytope_menu() {
        let n = complex.n();
        let actual = hochster_betti_padded(&complex);
        let h = f_to_h(&complex.f_vector()).unwrap();
        let hseq = OSequence::artinian(h.entries().to_vec()).unwrap();

        let cm = cm_betti_table_bound(&hseq, n, d).unwrap();
        assert!(
            actual.dominated_by(&cm),
            "lex bound violated on {} vertices, d = {d}",
            n
        );

        let gorenstein = gorenstein_wlp_table(&h, n, d).unwrap();
        assert!(
            actual.dominated_by(&gorenstein),
            "Gorenstein bound violated on {} vertices, d = {d}",
            n
        );
        // The refinement is never weaker than the plain lex bound.
        assert!(gorenstein.dominated_by(&cm), "n = {n}, d = {d}");
    }
}

#[test]
fn octahedron_and_cyclic_duality_spot_checks() {
    let oct = cross_polytope_boundary(3).unwrap();
    let t = hochster_betti_padded(&oct);
    // h = (1, 3, 3, 1): duality (i, j) -> (3 - i, 6 - j).
    assert!(t.is_symmetric_under(3, 6));
    assert_eq!(t.get(3, 6), big(1));

    let cyc = cyclic_polytope_boundary(7, 4).unwrap();
    let t = hochster_betti_padded(&cyc);
    // h = (1, 3, 6, 3, 1): h_1 = 3, socle degree 4.
    assert!(t.is_symmetric_under(3, 7));
    assert_eq!(t.get(3, 7), big(1));
    assert_eq!(t.get(1, 3), big(7));
}

#[test]
fn cyclic_h_vector_is_extremal() {
    // Neighborliness makes the cyclic polytope's g-vector the largest
    // possible: g_j = binom(g_1 + j - 1, j).
    for d in 2..=6u32 {
        for n in (d + 2)..=9u32 {
            let complex = cyclic_polytope_boundary(n, d).unwrap();
            let h = f_to_h(&complex.f_vector()).unwrap();
            assert!(h.is_symmetric(), "Dehn–Sommerville fails for C({n},{d})");
            let g = h_to_g(&h).unwrap();
            let g1 = i64::from(n) - i64::from(d) - 1;
            assert_eq!(g.u() as u32, d / 2, "C({n},{d})");
            for (j, entry) in g.entries().iter().enumerate() {
                assert_eq!(
                    *entry,
                    binom_i64(g1 + j as i64 - 1, j as i64),
                    "C({n},{d}), g_{j}"
                );
            }
        }
    }
}

#[test]
fn projective_plane_tables_by_characteristic() {
    let facets = vec![
        vec![1, 2, 3],
        vec![1, 2, 4],
        vec![1, 3, 5],
        vec![1, 4, 6],
        vec![1, 5, 6],
        vec![2, 3, 6],
        vec![2, 4, 5],
        vec![2, 5, 6],
        vec![3, 4, 5],
        vec![3, 4, 6],
    ];
    let rp2 = SimplicialComplex::new(6, facets).unwrap();
    let t0 = hochster_betti(&rp2, Characteristic::Zero).unwrap();
    let t2 = hochster_betti(&rp2, Characteristic::Prime(2)).unwrap();
    let t3 = hochster_betti(&rp2, Characteristic::Prime(3)).unwrap();
    // Semicontinuity: positive characteristic can only grow the table.
    assert!(t0.dominated_by(&t2));
    assert_eq!(t0, t3);
    assert_ne!(t0, t2);
    // The mod-2 fundamental class contributes the top socle entry.
    assert_eq!(t2.get(3, 6), &t0.get(3, 6) + 1u32);
}

#[test]
fn sphere_homology_across_the_menu() {
    for (complex, d) in polytope_menu() {
        for ch in [Characteristic::Zero, Characteristic::Prime(2), Characteristic::Prime(5)] {
            let ranks = reduced_homology_ranks(&complex, ch);
            assert_eq!(
                ranks.nonzero(),
                vec![(i64::from(d) - 1, 1)],
                "sphere of dimension {} in characteristic {ch}",
                d - 1
            );
        }
    }
}

#[test]
fn extremal_equality_smoke_grid() {
    // The full exhaustive sweep lives in the acceptance suite; keep a
    // small deterministic sample here for fast feedback.
    for h in enumerate_o_sequences(2, 3) {
        for n in 2..=3u32 {
            let ideal = lex_segment_ideal(&h, n).unwrap();
            let actual = eliahou_kervaire_betti(&ideal).unwrap();
            let bound = betti_table_bound(&h, n).unwrap();
            assert_eq!(actual, bound, "h = {:?}, n = {n}", h.entries());
        }
    }
}

#[test]
fn hochster_respects_ghost_vertices() {
    // Adding an unused vertex multiplies the resolution by a Koszul factor
    // on one variable: beta'_{i,j} = beta_{i,j} + beta_{i-1,j-1}.
    let pentagon = polygon_boundary(5).unwrap();
    let padded = SimplicialComplex::new(6, pentagon.facets()).unwrap();
    let t5 = hochster_betti_padded(&pentagon);
    let t6 = hochster_betti_padded(&padded);
    for i in 0..=6u32 {
        for j in 0..=6u32 {
            let expected = t5.get(i, j)
                + if i >= 1 && j >= 1 {
                    t5.get(i - 1, j - 1)
                } else {
                    BigInt::from(0)
                };
            assert_eq!(t6.get(i, j), expected, "(i, j) = ({i}, {j})");
        }
    }
}

#[test]
fn simplex_boundary_socle_degree() {
    // The d-simplex boundary has exactly one empty simplex, of dimension d
    // (degree d + 1) — pinning the convention used by the bound reports.
    for d in 1..=5u32 {
        let complex = betti_bounds::oracle::simplex_boundary(d).unwrap();
        let table = hochster_betti_padded(&complex);
        let expected = BettiTable::from_entries(
            d + 1,
            vec![(0, 0, big(1)), (1, d + 1, big(1))],
        );
        assert_eq!(table, expected, "d = {d}");
        assert_eq!(
            complex.minimal_nonfaces(),
            vec![(1..=d + 1).collect::<Vec<u32>>()]
        );
    }
}

#[test]
fn bound_report_matches_oracle_counts_for_cyclic() {
    // For 2-neighborly cyclic polytopes the per-degree bound at j = 2 is 0
    // and the oracle agrees (no empty edges).
    let complex = cyclic_polytope_boundary(8, 4).unwrap();
    let h = f_to_h(&complex.f_vector()).unwrap();
    let g = h_to_g(&h).unwrap();
    let report = betti_bounds::bound_report(&g, 4).unwrap();
    let nonfaces = complex.minimal_nonfaces();
    for (&j, bound) in report.per_degree() {
        let count = nonfaces.iter().filter(|f| f.len() == j as usize).count();
        assert!(
            big(count as i64) <= *bound,
            "degree {j}: {count} nonfaces > bound {bound}"
        );
    }
    let total: i64 = nonfaces.len() as i64;
    assert!(big(total) <= *report.total());
    assert_eq!(report.per_degree()[&2], big(0));
    assert!(nonfaces.iter().all(|f| f.len() != 2));
}

#[test]
fn enumerated_sequences_stay_within_variable_bound() {
    // Every enumerated O-sequence with h(1) <= n embeds into n variables:
    // its lex ideal exists and the dimensions check out via Macaulay growth.
    for h in enumerate_o_sequences(2, 5) {
        assert!(h.value(1) <= big(2));
        assert!(h.value(1).to_u32().is_some());
    }
}
