//! Classification of graph algebras of a fixed dimension.
//!
//! An algebra built from a graph with `v` vertices and `e` edges has
//! dimension `v + e`, and two graph algebras are isomorphic exactly when
//! their graphs are, so the classes in dimension `n` are the graph classes
//! over all `(v, e)` with `v + e = n`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::GraphLieAlgebra;
use crate::error::{Error, Result};
use crate::graphs::{parse_graph6, to_graph6, EnumerationBound, Graph};
use crate::invariants::{invariant_vector, InvariantVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    /// Canonical representative of the graph class.
    pub graph: Graph,
    pub algebra: GraphLieAlgebra,
    pub invariants: InvariantVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionCatalog {
    pub dimension: usize,
    pub include_abelian: bool,
    /// Sorted by canonical graph.
    pub entries: Vec<CatalogEntry>,
}

impl DimensionCatalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.entries.iter().map(|e| &e.graph)
    }

    pub fn to_record(&self) -> CatalogRecord {
        CatalogRecord {
            dimension: self.dimension,
            include_abelian: self.include_abelian,
            entries: self
                .entries
                .iter()
                .map(|e| EntryRecord {
                    graph6: to_graph6(&e.graph),
                    n_vertices: e.graph.n_vertices(),
                    n_edges: e.graph.n_edges(),
                    invariants: e.invariants.clone(),
                    brackets: e
                        .algebra
                        .nonzero_constants()
                        .map(|(a, b, c, x)| (a, b, c, x.to_string()))
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_record()).expect("serializable")
    }

    /// Parses [`DimensionCatalog::to_json`] output, rebuilding every entry
    /// from its graph6 string and rejecting any mismatch with the recorded
    /// data.
    pub fn from_json(text: &str) -> Result<Self> {
        let record: CatalogRecord =
            serde_json::from_str(text).map_err(|e| Error::Decode(e.to_string()))?;
        let entries = record
            .entries
            .iter()
            .map(|r| {
                let graph = parse_graph6(&r.graph6)?;
                let entry = make_entry(graph);
                let brackets: Vec<_> = entry
                    .algebra
                    .nonzero_constants()
                    .map(|(a, b, c, x)| (a, b, c, x.to_string()))
                    .collect();
                if entry.invariants != r.invariants
                    || brackets != r.brackets
                    || entry.graph.n_vertices() != r.n_vertices
                    || entry.graph.n_edges() != r.n_edges
                {
                    return Err(Error::Decode(format!("entry {} is inconsistent", r.graph6)));
                }
                Ok(entry)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DimensionCatalog {
            dimension: record.dimension,
            include_abelian: record.include_abelian,
            entries,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub dimension: usize,
    pub include_abelian: bool,
    pub entries: Vec<EntryRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryRecord {
    pub graph6: String,
    pub n_vertices: usize,
    pub n_edges: usize,
    pub invariants: InvariantVector,
    pub brackets: Vec<(usize, usize, usize, String)>,
}

fn make_entry(graph: Graph) -> CatalogEntry {
    let algebra = GraphLieAlgebra::new(&graph);
    let invariants = invariant_vector(&algebra);
    CatalogEntry {
        graph,
        algebra,
        invariants,
    }
}

/// `(v, e)` pairs with `v + e = dimension` that can carry a simple graph.
pub fn vertex_edge_splits(dimension: usize, include_abelian: bool) -> Vec<(usize, usize)> {
    (0..=dimension)
        .map(|v| (v, dimension - v))
        .filter(|&(v, e)| e <= v * v.saturating_sub(1) / 2)
        .filter(|&(_, e)| include_abelian || e > 0)
        .collect()
}

/// All graph algebras of dimension `n`, one per isomorphism class.
///
/// A dimension-`n` catalog includes the edgeless graph on `n` vertices, so
/// `n` itself must be within the vertex bound.
pub fn classify_dimension(n: usize, include_abelian: bool) -> Result<DimensionCatalog> {
    classify_dimension_with(&EnumerationBound::default(), n, include_abelian)
}

pub fn classify_dimension_with(
    bound: &EnumerationBound,
    n: usize,
    include_abelian: bool,
) -> Result<DimensionCatalog> {
    if n == 0 {
        return Err(Error::OutOfBounds {
            what: "dimension",
            value: 0,
            bound: bound.max_vertices,
        });
    }
    bound.check_vertices(n).map_err(|_| Error::OutOfBounds {
        what: "dimension",
        value: n,
        bound: bound.max_vertices,
    })?;
    let mut graphs = Vec::new();
    for (v, e) in vertex_edge_splits(n, include_abelian) {
        graphs.extend(bound.enumerate_graphs(v, e)?);
    }
    graphs.sort();
    let entries = graphs.into_par_iter().map(make_entry).collect();
    Ok(DimensionCatalog {
        dimension: n,
        include_abelian,
        entries,
    })
}

/// Number of classes in each dimension `1..=max_n`.
pub fn catalog_counts(max_n: usize, include_abelian: bool) -> Result<Vec<usize>> {
    catalog_counts_with(&EnumerationBound::default(), max_n, include_abelian)
}

pub fn catalog_counts_with(
    bound: &EnumerationBound,
    max_n: usize,
    include_abelian: bool,
) -> Result<Vec<usize>> {
    (1..=max_n)
        .map(|n| {
            bound.check_vertices(n).map_err(|_| Error::OutOfBounds {
                what: "dimension",
                value: n,
                bound: bound.max_vertices,
            })?;
            vertex_edge_splits(n, include_abelian)
                .into_iter()
                .map(|(v, e)| bound.enumerate_graphs(v, e).map(|g| g.len()))
                .sum()
        })
        .collect()
}
