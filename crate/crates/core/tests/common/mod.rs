//! Brute-force oracles shared by the integration tests. Nothing here uses the
//! library's refinement search; classes and isomorphisms come from trying
//! every permutation.
#![allow(dead_code)]

use graphlie::algebra::{GraphLieAlgebra, LieElement};
use graphlie::graphs::Graph;
use graphlie::linalg::{ratio, Scalar};
use rand::Rng;
use std::collections::BTreeSet;

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut current, &mut out);
    out
}

fn heap_permute(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, a, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permute(k - 1, a, out);
}

/// Every labeled simple graph on `n` vertices.
pub fn labeled_graphs(n: usize) -> Vec<Graph> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << slots.len())
        .map(|mask| {
            let edges: Vec<(usize, usize)> = slots
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

/// Smallest relabeling of `g` over all permutations.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> Graph {
    perms.iter().map(|p| g.relabel(p)).min().unwrap()
}

/// Isomorphism classes on `n` vertices, by exhaustive relabeling.
pub fn brute_classes(n: usize) -> BTreeSet<Graph> {
    let perms = permutations(n);
    labeled_graphs(n)
        .iter()
        .map(|g| brute_canonical(g, &perms))
        .collect()
}

/// All vertex maps `p` with `g.relabel(p) == h`.
pub fn brute_isomorphisms(g: &Graph, h: &Graph, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    if g.n_vertices() != h.n_vertices() || g.n_edges() != h.n_edges() {
        return Vec::new();
    }
    perms
        .iter()
        .filter(|p| &g.relabel(p) == h)
        .cloned()
        .collect()
}

pub fn random_scalar<R: Rng>(rng: &mut R) -> Scalar {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub fn random_element<'a, R: Rng>(a: &'a GraphLieAlgebra, rng: &mut R) -> LieElement<'a> {
    let coords: Vec<Scalar> = (0..a.dim()).map(|_| random_scalar(rng)).collect();
    a.from_dense(&coords)
}

/// Random element of the edge span `W`.
pub fn random_central<'a, R: Rng>(a: &'a GraphLieAlgebra, rng: &mut R) -> LieElement<'a> {
    let v = a.graph().n_vertices();
    let coords: Vec<Scalar> = (0..a.dim())
        .map(|i| {
            if i < v {
                Scalar::from_integer(0.into())
            } else {
                random_scalar(rng)
            }
        })
        .collect();
    a.from_dense(&coords)
}
