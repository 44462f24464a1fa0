//! Finite simple graphs on the vertex set `0..n`.

mod canon;
mod enumerate;
mod graph6;

pub use canon::{are_isomorphic, automorphism_count, canonical_form, CanonicalForm};
pub use enumerate::{enumerate_all, enumerate_graphs, EnumerationBound, MAX_VERTICES_ENV};
pub use graph6::{parse_graph6, to_graph6};

use std::fmt;

use crate::error::{Error, Result};

/// A finite simple graph. Edges are stored as `(i, j)` with `i < j`, strictly
/// sorted, so structural equality is label-level identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from unordered pairs. Duplicate pairs (in either
    /// orientation) collapse; loops are rejected.
    pub fn from_edges(n_vertices: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for v in [a, b] {
                if v >= n_vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        n_vertices,
                    });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Graph { n_vertices, edges })
    }

    pub fn empty(n_vertices: usize) -> Graph {
        Graph {
            n_vertices,
            edges: Vec::new(),
        }
    }

    pub fn complete(n_vertices: usize) -> Graph {
        let edges = (0..n_vertices)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .collect::<Vec<_>>();
        Graph::from_sorted_unchecked(n_vertices, edges)
    }

    pub fn path(n_vertices: usize) -> Graph {
        let edges = (1..n_vertices).map(|j| (j - 1, j)).collect();
        Graph::from_sorted_unchecked(n_vertices, edges)
    }

    /// Caller guarantees the edge list already satisfies the invariants,
    /// up to ordering.
    pub(crate) fn from_sorted_unchecked(
        n_vertices: usize,
        mut edges: Vec<(usize, usize)>,
    ) -> Graph {
        edges.sort_unstable();
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(i, j)| i < j && j < n_vertices));
        Graph { n_vertices, edges }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Position of `{a, b}` in the sorted edge list.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        if a == b {
            return None;
        }
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n_vertices];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    /// Vertex degrees sorted in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = self.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        deg
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(i, j)| match (i == v, j == v) {
                (true, _) => Some(j),
                (_, true) => Some(i),
                _ => None,
            })
            .collect()
    }

    /// Dense adjacency matrix, row-major.
    pub fn adjacency(&self) -> Vec<bool> {
        let n = self.n_vertices;
        let mut adj = vec![false; n * n];
        for &(i, j) in &self.edges {
            adj[i * n + j] = true;
            adj[j * n + i] = true;
        }
        adj
    }

    /// Image of the graph under `perm`, where vertex `v` becomes `perm[v]`.
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert!(is_permutation(perm, self.n_vertices), "not a permutation");
        let edges = self
            .edges
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (perm[i], perm[j]);
                (a.min(b), a.max(b))
            })
            .collect();
        Graph::from_sorted_unchecked(self.n_vertices, edges)
    }

    pub fn complement(&self) -> Graph {
        let edges = (0..self.n_vertices)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .filter(|&(i, j)| !self.has_edge(i, j))
            .collect();
        Graph::from_sorted_unchecked(self.n_vertices, edges)
    }

    /// Disjoint union; the vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n_vertices;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(i, j)| (i + shift, j + shift)))
            .collect();
        Graph::from_sorted_unchecked(self.n_vertices + other.n_vertices, edges)
    }

    /// Parses the plain edge-list format: the first non-empty line holds the
    /// vertex count, every further line one edge `i j`. Lines starting with
    /// `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::MalformedEdgeList("missing vertex count".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::MalformedEdgeList(format!("bad vertex count {header:?}")))?;
        let mut pairs = Vec::new();
        for (lineno, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| {
                    Error::MalformedEdgeList(format!("line {}: bad vertex {s:?}", lineno + 1))
                })
            };
            match fields.as_slice() {
                [a, b] => pairs.push((parse(a)?, parse(b)?)),
                _ => {
                    return Err(Error::MalformedEdgeList(format!(
                        "line {}: expected two vertices, got {line:?}",
                        lineno + 1
                    )))
                }
            }
        }
        Graph::from_edges(n, &pairs)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n_vertices);
        for (i, j) in &self.edges {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n_vertices, self.edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

/// Normalizing constructor mirroring [`Graph::from_edges`].
pub fn graph_from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_edges(n, pairs)
}

pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    g.degree_sequence()
}

pub(crate) fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    perm.iter()
        .all(|&p| p < n && !std::mem::replace(&mut seen[p], true))
}

/// A vertex bijection `source -> target` claimed to preserve adjacency.
///
/// Fields are public so that unchecked candidates can be assembled and
/// handed to [`GraphIso::validate`]; use [`GraphIso::new`] for a checked one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphIso {
    pub source: Graph,
    pub target: Graph,
    pub vertex_map: Vec<usize>,
}

impl GraphIso {
    pub fn new(source: Graph, target: Graph, vertex_map: Vec<usize>) -> Result<GraphIso> {
        let iso = GraphIso {
            source,
            target,
            vertex_map,
        };
        iso.validate()?;
        Ok(iso)
    }

    pub fn identity(g: &Graph) -> GraphIso {
        GraphIso {
            source: g.clone(),
            target: g.clone(),
            vertex_map: (0..g.n_vertices()).collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.source.n_vertices();
        if self.target.n_vertices() != n {
            return Err(Error::InvalidGraphIso(format!(
                "vertex counts differ ({n} vs {})",
                self.target.n_vertices()
            )));
        }
        if !is_permutation(&self.vertex_map, n) {
            return Err(Error::InvalidGraphIso(
                "vertex map is not a bijection".into(),
            ));
        }
        // Equal edge counts plus edges-to-edges gives the iff.
        if self.source.n_edges() != self.target.n_edges() {
            return Err(Error::InvalidGraphIso("edge counts differ".into()));
        }
        if let Some(&(i, j)) = self
            .source
            .edges()
            .iter()
            .find(|&&(i, j)| !self.target.has_edge(self.vertex_map[i], self.vertex_map[j]))
        {
            return Err(Error::InvalidGraphIso(format!(
                "edge {{{i}, {j}}} is not mapped to an edge"
            )));
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn map(&self, v: usize) -> usize {
        self.vertex_map[v]
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &GraphIso) -> Result<GraphIso> {
        if self.target != other.source {
            return Err(Error::InvalidGraphIso(
                "isomorphisms are not composable".into(),
            ));
        }
        let vertex_map = self
            .vertex_map
            .iter()
            .map(|&v| other.vertex_map[v])
            .collect();
        GraphIso::new(self.source.clone(), other.target.clone(), vertex_map)
    }

    pub fn inverse(&self) -> GraphIso {
        let mut inv = vec![0; self.vertex_map.len()];
        for (v, &w) in self.vertex_map.iter().enumerate() {
            inv[w] = v;
        }
        GraphIso {
            source: self.target.clone(),
            target: self.source.clone(),
            vertex_map: inv,
        }
    }
}
