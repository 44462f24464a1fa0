mod common;

use common::{brute_isomorphisms, labeled_graphs, permutations};
use graphlie::algebra::build_algebra;
use graphlie::graphs::{are_isomorphic, canonical_form, enumerate_all, Graph, GraphIso};
use graphlie::invariants::invariant_vector;
use graphlie::morphisms::{algebras_isomorphic, induce_lie_iso, verify_morphism, Verdict};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use std::collections::BTreeMap;

fn classes_by_canon(n: usize) -> BTreeMap<Graph, Vec<Graph>> {
    let mut by_class: BTreeMap<Graph, Vec<Graph>> = BTreeMap::new();
    for g in labeled_graphs(n) {
        by_class
            .entry(canonical_form(&g).canonical_graph)
            .or_default()
            .push(g);
    }
    by_class
}

// Every isomorphism between a class representative and each labeled member,
// found by trying all bijections, induces a verified Lie isomorphism that
// also preserves the invariant vector.
#[test]
fn induced_maps_are_lie_isomorphisms() {
    for n in 0..=5 {
        let perms = permutations(n);
        for (rep, members) in classes_by_canon(n) {
            let rep_inv = invariant_vector(&build_algebra(&rep));
            for h in &members {
                let isos = brute_isomorphisms(&rep, h, &perms);
                assert!(!isos.is_empty());
                for p in isos {
                    let sigma = GraphIso::new(rep.clone(), h.clone(), p).unwrap();
                    let tau = induce_lie_iso(&sigma).unwrap();
                    assert!(verify_morphism(&tau), "{sigma:?}");
                }
                assert_eq!(invariant_vector(&build_algebra(h)), rep_inv);
            }
        }
    }
}

#[test]
fn functoriality_on_random_pairs() {
    let mut rng = StdRng::seed_from_u64(7);
    for n in 1..=6usize {
        for g in enumerate_all(n).unwrap().into_iter().flatten() {
            let mut p1: Vec<usize> = (0..n).collect();
            let mut p2 = p1.clone();
            p1.shuffle(&mut rng);
            p2.shuffle(&mut rng);
            let h = g.relabel(&p1);
            let k = h.relabel(&p2);
            let s1 = GraphIso::new(g.clone(), h.clone(), p1).unwrap();
            let s2 = GraphIso::new(h, k, p2).unwrap();
            let composed = induce_lie_iso(&s1.then(&s2).unwrap()).unwrap();
            let product = induce_lie_iso(&s2)
                .unwrap()
                .matrix()
                .mul(induce_lie_iso(&s1).unwrap().matrix())
                .unwrap();
            assert_eq!(composed.matrix(), &product);
            let inv = induce_lie_iso(&s1.inverse()).unwrap();
            let id = inv
                .matrix()
                .mul(induce_lie_iso(&s1).unwrap().matrix())
                .unwrap();
            assert_eq!(
                id,
                graphlie::linalg::Matrix::identity(g.n_vertices() + g.n_edges())
            );
        }
    }
}

#[test]
fn decisions_match_graph_isomorphism_and_certificates_check_out() {
    let mut rng = StdRng::seed_from_u64(11);
    for n in 0..=5usize {
        let reps: Vec<Graph> = enumerate_all(n).unwrap().into_iter().flatten().collect();
        for g in &reps {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            let g_shuffled = g.relabel(&p);
            let a1 = build_algebra(&g_shuffled);
            for h in &reps {
                let a2 = build_algebra(h);
                let cert = algebras_isomorphic(&a1, &a2);
                let graphs_iso = are_isomorphic(&g_shuffled, h).is_some();
                assert_eq!(cert.verdict == Verdict::Isomorphic, graphs_iso);
                assert_eq!(graphs_iso, g == h);
                assert!(cert.is_sound(&a1, &a2), "{g:?} vs {h:?}");
                let back =
                    graphlie::morphisms::IsoCertificate::from_json(&cert.to_json(), &a1, &a2)
                        .unwrap();
                assert_eq!(back, cert);
            }
        }
    }
}
