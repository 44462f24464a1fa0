use rayon::prelude::*;
use std::collections::BTreeSet;

use super::{canonical_form, Graph};
use crate::error::{Error, Result};

/// Environment variable that overrides the default vertex bound.
pub const MAX_VERTICES_ENV: &str = "GRAPHLIE_MAX_VERTICES";

/// Largest vertex count exhaustive enumeration will accept.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBound {
    pub max_vertices: usize,
}

impl Default for EnumerationBound {
    fn default() -> Self {
        EnumerationBound { max_vertices: 8 }
    }
}

impl EnumerationBound {
    pub fn new(max_vertices: usize) -> Self {
        EnumerationBound { max_vertices }
    }

    /// The default bound, overridden by `GRAPHLIE_MAX_VERTICES` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_VERTICES_ENV) {
            Ok(v) => v.trim().parse().map(Self::new).map_err(|_| {
                Error::Decode(format!(
                    "{MAX_VERTICES_ENV} must be a non-negative integer, got {v:?}"
                ))
            }),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn check_vertices(&self, n_vertices: usize) -> Result<()> {
        if n_vertices > self.max_vertices {
            return Err(Error::OutOfBounds {
                what: "n_vertices",
                value: n_vertices,
                bound: self.max_vertices,
            });
        }
        Ok(())
    }

    /// One canonical representative per isomorphism class of graphs with
    /// `n_vertices` vertices and `n_edges` edges, in ascending order.
    pub fn enumerate_graphs(&self, n_vertices: usize, n_edges: usize) -> Result<Vec<Graph>> {
        self.check_vertices(n_vertices)?;
        let max_edges = n_vertices * n_vertices.saturating_sub(1) / 2;
        if n_edges > max_edges {
            return Err(Error::OutOfBounds {
                what: "n_edges",
                value: n_edges,
                bound: max_edges,
            });
        }
        // Complementation is a bijection on classes; it keeps the augmentation
        // depth at most half the possible edges.
        if n_edges > max_edges / 2 {
            let low = grow(n_vertices, max_edges - n_edges)
                .pop()
                .unwrap_or_default();
            return Ok(complement_classes(&low));
        }
        Ok(grow(n_vertices, n_edges).pop().unwrap_or_default())
    }

    /// Every class on `n_vertices` vertices, indexed by edge count.
    pub fn enumerate_all(&self, n_vertices: usize) -> Result<Vec<Vec<Graph>>> {
        self.check_vertices(n_vertices)?;
        let max_edges = n_vertices * n_vertices.saturating_sub(1) / 2;
        let half = max_edges / 2;
        let mut levels = grow(n_vertices, half);
        for e in half + 1..=max_edges {
            let c = complement_classes(&levels[max_edges - e]);
            levels.push(c);
        }
        Ok(levels)
    }
}

pub fn enumerate_graphs(n_vertices: usize, n_edges: usize) -> Result<Vec<Graph>> {
    EnumerationBound::default().enumerate_graphs(n_vertices, n_edges)
}

pub fn enumerate_all(n_vertices: usize) -> Result<Vec<Vec<Graph>>> {
    EnumerationBound::default().enumerate_all(n_vertices)
}

/// Classes for edge counts `0..=up_to`. Every graph with `k + 1` edges
/// arises from one with `k` edges by adding an edge, so extending each class
/// representative in all possible ways and deduplicating by canonical form
/// reaches every class.
fn grow(n_vertices: usize, up_to: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::empty(n_vertices)]];
    for _ in 0..up_to {
        let prev = levels.last().expect("at least one level");
        let next: BTreeSet<Graph> = prev
            .par_iter()
            .flat_map_iter(|g| {
                non_edges(g).map(move |(i, j)| canonical_form(&with_edge(g, i, j)).canonical_graph)
            })
            .collect();
        levels.push(next.into_iter().collect());
    }
    levels
}

fn complement_classes(level: &[Graph]) -> Vec<Graph> {
    let set: BTreeSet<Graph> = level
        .par_iter()
        .map(|g| canonical_form(&g.complement()).canonical_graph)
        .collect();
    set.into_iter().collect()
}

fn non_edges(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = g.n_vertices();
    (0..n)
        .flat_map(move |j| (0..j).map(move |i| (i, j)))
        .filter(move |&(i, j)| !g.has_edge(i, j))
}

fn with_edge(g: &Graph, i: usize, j: usize) -> Graph {
    let mut edges = g.edges().to_vec();
    edges.push((i, j));
    Graph::from_sorted_unchecked(g.n_vertices(), edges)
}
