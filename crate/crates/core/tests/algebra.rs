mod common;

use common::{random_central, random_element, random_scalar};
use graphlie::algebra::{build_algebra, jacobi_defect, nilpotency_class, BasisLabel};
use graphlie::graphs::{enumerate_all, Graph};
use graphlie::invariants::{
    ad_rank, center_basis, center_dim, derived_subalgebra_dim, invariant_vector,
};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn graphs_up_to(n: usize) -> Vec<Graph> {
    (0..=n)
        .flat_map(|v| enumerate_all(v).unwrap().into_iter().flatten())
        .collect()
}

#[test]
fn dimension_formulas() {
    for g in graphs_up_to(6) {
        let a = build_algebra(&g);
        assert_eq!(a.dim(), g.n_vertices() + g.n_edges());
        assert_eq!(derived_subalgebra_dim(&a), g.n_edges(), "{g:?}");
    }
}

#[test]
fn jacobi_on_all_basis_triples() {
    for g in graphs_up_to(6) {
        let a = build_algebra(&g);
        let basis: Vec<_> = (0..a.dim()).map(|i| a.basis_element(i)).collect();
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    assert!(jacobi_defect(x, y, z).unwrap().is_zero(), "{g:?}");
                }
            }
        }
    }
}

#[test]
fn random_identities() {
    let mut rng = StdRng::seed_from_u64(0x6a61_636f_6269);
    for g in graphs_up_to(5) {
        let a = build_algebra(&g);
        for _ in 0..200 {
            let (x, y, z) = (
                random_element(&a, &mut rng),
                random_element(&a, &mut rng),
                random_element(&a, &mut rng),
            );
            assert!(jacobi_defect(&x, &y, &z).unwrap().is_zero());

            let xy = x.bracket(&y).unwrap();
            assert!(xy.add(&y.bracket(&x).unwrap()).unwrap().is_zero());
            assert!(xy.is_in_edge_span());

            let w = random_central(&a, &mut rng);
            assert!(x.bracket(&w).unwrap().is_zero());

            let (s, t) = (random_scalar(&mut rng), random_scalar(&mut rng));
            let lhs = x.scale(&s).add(&y.scale(&t)).unwrap().bracket(&z).unwrap();
            let rhs = x
                .bracket(&z)
                .unwrap()
                .scale(&s)
                .add(&y.bracket(&z).unwrap().scale(&t))
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn nilpotency_classes() {
    for g in graphs_up_to(6) {
        let expected = match (g.n_vertices(), g.n_edges()) {
            (0, _) => 0,
            (_, 0) => 1,
            _ => 2,
        };
        assert_eq!(nilpotency_class(&build_algebra(&g)), expected);
    }
}

// Two routes to the center: null space of the stacked ad maps, and the
// count of edges plus isolated vertices.
#[test]
fn center_two_routes() {
    for g in graphs_up_to(6) {
        let a = build_algebra(&g);
        assert_eq!(
            center_dim(&a),
            g.n_edges() + g.isolated_vertices().len(),
            "{g:?}"
        );
        for z in center_basis(&a) {
            let z = a.from_dense(&z);
            for i in 0..a.dim() {
                assert!(z.bracket(&a.basis_element(i)).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn ad_rank_equals_degree() {
    for g in graphs_up_to(6) {
        let a = build_algebra(&g);
        for (v, d) in g.degrees().into_iter().enumerate() {
            assert_eq!(ad_rank(&a, BasisLabel::Vertex(v)).unwrap(), d);
        }
        for &(i, j) in g.edges() {
            assert_eq!(ad_rank(&a, BasisLabel::EdgeWedge(i, j)).unwrap(), 0);
        }
        let iv = invariant_vector(&a);
        assert_eq!(iv.ad_rank_multiset, g.degree_sequence());
        assert!(iv.dim_derived <= iv.dim_center && iv.dim_center <= iv.dim);
        assert!(iv.ad_rank_multiset.iter().all(|&r| r <= iv.dim_derived));
    }
}

#[test]
fn json_round_trip() {
    for g in graphs_up_to(5) {
        let a = build_algebra(&g);
        assert_eq!(
            graphlie::algebra::GraphLieAlgebra::from_json(&a.to_json()).unwrap(),
            a
        );
    }
}
