//! Canonical labeling by individualization and refinement.
//!
//! Every node of the search tree is an ordered partition of the vertices,
//! refined to an equitable partition: a cell splits by the vector of
//! neighbour counts its vertices have into each current cell, and the
//! fragments are ordered by that vector. A child individualizes one vertex of
//! the first smallest non-singleton cell. Leaves are discrete partitions,
//! i.e. vertex orders; the canonical form is the leaf whose relabeled upper
//! triangle adjacency bit string is lexicographically smallest.
//!
//! Automorphisms are picked up whenever two leaves produce the same bit
//! string, and used to skip children that lie in the same orbit as a child
//! already explored (under the automorphisms that fix the current prefix).

use num_bigint::BigUint;
use num_traits::One;
use std::collections::BTreeMap;

use super::{Graph, GraphIso};

/// A relabeling that sends a graph to its class representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `relabeling[v]` is the canonical label of input vertex `v`.
    pub relabeling: Vec<usize>,
    pub canonical_graph: Graph,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let mut tree = SearchTree::new(g);
    let root = tree.refine(tree.unit_partition());
    let mut prefix = Vec::new();
    let mut best = None;
    tree.minimize(root, &mut prefix, &mut best);
    let (_, order) = best.expect("search tree has at least one leaf");

    let mut relabeling = vec![0; order.len()];
    for (k, &v) in order.iter().enumerate() {
        relabeling[v] = k;
    }
    CanonicalForm {
        canonical_graph: g.relabel(&relabeling),
        relabeling,
    }
}

/// Decides isomorphism by comparing canonical forms. The returned witness
/// is checked against the graphs before it is handed out.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Option<GraphIso> {
    if g1.n_vertices() != g2.n_vertices()
        || g1.n_edges() != g2.n_edges()
        || g1.degree_sequence() != g2.degree_sequence()
    {
        return None;
    }
    let c1 = canonical_form(g1);
    let c2 = canonical_form(g2);
    if c1.canonical_graph != c2.canonical_graph {
        return None;
    }
    let mut from_canon2 = vec![0; g2.n_vertices()];
    for (v, &k) in c2.relabeling.iter().enumerate() {
        from_canon2[k] = v;
    }
    let vertex_map = c1.relabeling.iter().map(|&k| from_canon2[k]).collect();
    let iso = GraphIso::new(g1.clone(), g2.clone(), vertex_map)
        .expect("equal canonical forms yield an isomorphism");
    Some(iso)
}

/// Order of the automorphism group, as the product of orbit lengths along
/// the first path of the search tree (orbit-stabilizer at each level).
pub fn automorphism_count(g: &Graph) -> BigUint {
    let mut tree = SearchTree::new(g);
    let mut node = tree.refine(tree.unit_partition());

    let first_order = {
        let mut p = node.clone();
        while let Some(ci) = target_cell(&p) {
            let v = p[ci][0];
            p = tree.refine(individualize(&p, ci, v));
        }
        flatten(&p)
    };
    let first_cert = tree.certificate(&first_order);

    let mut total = BigUint::one();
    let mut prefix = Vec::new();
    while let Some(ci) = target_cell(&node) {
        let cell = node[ci].clone();
        let v0 = cell[0];
        let mut orbit_len = 1u64;
        for &w in &cell[1..] {
            if tree.orbits_fixing(&prefix).same(v0, w) {
                orbit_len += 1;
                continue;
            }
            prefix.push(w);
            let child = tree.refine(individualize(&node, ci, w));
            let found = tree.find_equivalent(child, &mut prefix, &first_cert);
            prefix.pop();
            if let Some(order) = found {
                tree.record_automorphism(&first_order, &order);
                orbit_len += 1;
            }
        }
        total *= orbit_len;
        prefix.push(v0);
        node = tree.refine(individualize(&node, ci, v0));
    }
    total
}

type Partition = Vec<Vec<usize>>;

struct SearchTree {
    n: usize,
    adj: Vec<bool>,
    automorphisms: Vec<Vec<usize>>,
}

impl SearchTree {
    fn new(g: &Graph) -> Self {
        SearchTree {
            n: g.n_vertices(),
            adj: g.adjacency(),
            automorphisms: Vec::new(),
        }
    }

    fn unit_partition(&self) -> Partition {
        if self.n == 0 {
            Vec::new()
        } else {
            vec![(0..self.n).collect()]
        }
    }

    fn refine(&self, mut p: Partition) -> Partition {
        let n = self.n;
        loop {
            let mut cell_of = vec![0; n];
            for (ci, cell) in p.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = ci;
                }
            }
            let mut next = Vec::with_capacity(p.len());
            let mut split = false;
            for cell in &p {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut fragments: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    let mut counts = vec![0; p.len()];
                    let row = &self.adj[v * n..(v + 1) * n];
                    for (w, _) in row.iter().enumerate().filter(|(_, &a)| a) {
                        counts[cell_of[w]] += 1;
                    }
                    fragments.entry(counts).or_default().push(v);
                }
                split |= fragments.len() > 1;
                next.extend(fragments.into_values());
            }
            p = next;
            if !split {
                return p;
            }
        }
    }

    /// Upper triangle of the adjacency matrix under the vertex order,
    /// column by column, packed most significant bit first.
    fn certificate(&self, order: &[usize]) -> Vec<u64> {
        let n = self.n;
        let n_bits = n * n.saturating_sub(1) / 2;
        let mut words = vec![0u64; n_bits.div_ceil(64)];
        let mut k = 0;
        for q in 1..n {
            for p in 0..q {
                if self.adj[order[p] * n + order[q]] {
                    words[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        words
    }

    fn minimize(
        &mut self,
        node: Partition,
        prefix: &mut Vec<usize>,
        best: &mut Option<(Vec<u64>, Vec<usize>)>,
    ) {
        let Some(ci) = target_cell(&node) else {
            let order = flatten(&node);
            let cert = self.certificate(&order);
            match best {
                Some((b, _)) if cert > *b => {}
                Some((b, best_order)) if cert == *b => {
                    let best_order = best_order.clone();
                    self.record_automorphism(&best_order, &order);
                }
                _ => *best = Some((cert, order)),
            }
            return;
        };
        let cell = node[ci].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() {
                let mut orbits = self.orbits_fixing(prefix);
                if tried.iter().any(|&u| orbits.same(u, v)) {
                    continue;
                }
            }
            tried.push(v);
            prefix.push(v);
            let child = self.refine(individualize(&node, ci, v));
            self.minimize(child, prefix, best);
            prefix.pop();
        }
    }

    /// Depth-first search for a leaf below `node` with certificate `target`.
    fn find_equivalent(
        &mut self,
        node: Partition,
        prefix: &mut Vec<usize>,
        target: &[u64],
    ) -> Option<Vec<usize>> {
        let Some(ci) = target_cell(&node) else {
            let order = flatten(&node);
            return (self.certificate(&order) == target).then_some(order);
        };
        let cell = node[ci].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            // A sibling in the same orbit has an isomorphic subtree, which
            // already failed.
            if !tried.is_empty() {
                let mut orbits = self.orbits_fixing(prefix);
                if tried.iter().any(|&u| orbits.same(u, v)) {
                    continue;
                }
            }
            tried.push(v);
            prefix.push(v);
            let child = self.refine(individualize(&node, ci, v));
            let found = self.find_equivalent(child, prefix, target);
            prefix.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Stores the automorphism sending `from[k]` to `to[k]`, for two leaves
    /// with equal certificates.
    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0; self.n];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        if gamma.iter().enumerate().any(|(v, &w)| v != w) {
            debug_assert!(self.is_automorphism(&gamma));
            self.automorphisms.push(gamma);
        }
    }

    fn is_automorphism(&self, gamma: &[usize]) -> bool {
        let n = self.n;
        (0..n).all(|a| (0..n).all(|b| self.adj[a * n + b] == self.adj[gamma[a] * n + gamma[b]]))
    }

    /// Orbits of the group generated by the known automorphisms that fix
    /// every vertex of `prefix`.
    fn orbits_fixing(&self, prefix: &[usize]) -> Orbits {
        let mut orbits = Orbits::new(self.n);
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&p| gamma[p] == p) {
                for (v, &w) in gamma.iter().enumerate() {
                    orbits.union(v, w);
                }
            }
        }
        orbits
    }
}

fn target_cell(p: &Partition) -> Option<usize> {
    p.iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
}

fn individualize(p: &Partition, ci: usize, v: usize) -> Partition {
    let mut out = Vec::with_capacity(p.len() + 1);
    out.extend_from_slice(&p[..ci]);
    out.push(vec![v]);
    out.push(p[ci].iter().copied().filter(|&w| w != v).collect());
    out.extend_from_slice(&p[ci + 1..]);
    out
}

fn flatten(p: &Partition) -> Vec<usize> {
    p.iter().map(|c| c[0]).collect()
}

struct Orbits {
    parent: Vec<usize>,
}

impl Orbits {
    fn new(n: usize) -> Self {
        Orbits {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn two_k2() -> Graph {
        Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn triangle_is_vertex_transitive() {
        let k3 = Graph::complete(3);
        let c = canonical_form(&k3).canonical_graph;
        for p in perms(3) {
            assert_eq!(canonical_form(&k3.relabel(&p)).canonical_graph, c);
        }
    }

    #[test]
    fn path_labelings_agree() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(
            canonical_form(&a).canonical_graph,
            canonical_form(&b).canonical_graph
        );
        assert_ne!(
            canonical_form(&a).canonical_graph,
            canonical_form(&Graph::complete(3)).canonical_graph
        );
    }

    #[test]
    fn relabeling_reproduces_canonical_graph() {
        let g = Graph::from_edges(5, &[(0, 3), (3, 4), (1, 4)]).unwrap();
        let c = canonical_form(&g);
        assert_eq!(g.relabel(&c.relabeling), c.canonical_graph);
    }

    #[test]
    fn isomorphism_witnesses() {
        let k3 = Graph::complete(3);
        let iso = are_isomorphic(&k3, &k3.relabel(&[2, 0, 1])).unwrap();
        assert!(iso.is_valid());
        assert!(are_isomorphic(&k3, &Graph::path(3)).is_none());
        assert!(are_isomorphic(&two_k2(), &Graph::path(4)).is_none());
    }

    // Oracle for the 2K2 / P4 example: none of the 24 bijections works.
    #[test]
    fn two_k2_vs_path_by_exhaustion() {
        let (a, b) = (two_k2(), Graph::path(4));
        assert!(perms(4).into_iter().all(|p| a.relabel(&p) != b));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&Graph::complete(3)), 6u32.into());
        assert_eq!(automorphism_count(&Graph::path(3)), 2u32.into());
        for n in 0..=7u32 {
            let fact: u32 = (1..=n).product();
            assert_eq!(automorphism_count(&Graph::empty(n as usize)), fact.into());
        }
        // Petersen graph.
        let petersen = super::super::parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(automorphism_count(&petersen), 120u32.into());
    }

    #[test]
    fn empty_vertex_set() {
        let g = Graph::empty(0);
        assert_eq!(canonical_form(&g).canonical_graph, g);
        assert_eq!(automorphism_count(&g), 1u32.into());
        assert!(are_isomorphic(&g, &g).is_some());
    }
}
