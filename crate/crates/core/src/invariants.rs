//! Isomorphism invariants of a graph algebra, computed by exact linear
//! algebra on the structure constants (never read off the graph).

use serde::{Deserialize, Serialize};

use crate::algebra::{nilpotency_class, BasisLabel, GraphLieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

/// Fields are declared in alphabetical order so the JSON form has sorted
/// keys.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantVector {
    /// Ranks of `ad_v` over the vertex generators, descending.
    pub ad_rank_multiset: Vec<usize>,
    pub dim: usize,
    pub dim_center: usize,
    pub dim_derived: usize,
    pub nilpotency_class: usize,
}

/// A single invariant value, as carried by separators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InvariantValue {
    Count(usize),
    Multiset(Vec<usize>),
    Graph6(String),
}

impl InvariantVector {
    /// Fields in comparison order, by name.
    pub fn fields(&self) -> [(&'static str, InvariantValue); 5] {
        use InvariantValue::*;
        [
            ("dim", Count(self.dim)),
            ("dim_derived", Count(self.dim_derived)),
            ("dim_center", Count(self.dim_center)),
            ("nilpotency_class", Count(self.nilpotency_class)),
            ("ad_rank_multiset", Multiset(self.ad_rank_multiset.clone())),
        ]
    }

    pub fn field(&self, name: &str) -> Option<InvariantValue> {
        self.fields()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v)
    }

    /// First field (in [`InvariantVector::fields`] order) where the vectors
    /// differ.
    pub fn first_difference(
        &self,
        other: &InvariantVector,
    ) -> Option<(&'static str, InvariantValue, InvariantValue)> {
        self.fields()
            .into_iter()
            .zip(other.fields())
            .find(|((_, a), (_, b))| a != b)
            .map(|((name, a), (_, b))| (name, a, b))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Decode(e.to_string()))
    }
}

/// Dimension of `[n, n]`: rank of all pairwise basis brackets.
pub fn derived_subalgebra_dim(a: &GraphLieAlgebra) -> usize {
    let dim = a.dim();
    let mut rows = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let ei = a.basis_element(i).to_dense();
            let ej = a.basis_element(j).to_dense();
            rows.push(a.bracket_dense(&ei, &ej));
        }
    }
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(rows).rank()
}

/// Basis of the center: the null space of `x ↦ ([x, e_1], ..., [x, e_d])`.
pub fn center_basis(a: &GraphLieAlgebra) -> Vec<Vec<Scalar>> {
    let dim = a.dim();
    let mut stacked = Matrix::zeros(dim * dim, dim);
    for y in 0..dim {
        for x in 0..dim {
            for (c, k) in a.structure_constants(x, y) {
                stacked.set(y * dim + c, x, k.clone());
            }
        }
    }
    stacked.nullspace()
}

pub fn center_dim(a: &GraphLieAlgebra) -> usize {
    center_basis(a).len()
}

/// Rank of `ad_b : x ↦ [b, x]`.
pub fn ad_rank(a: &GraphLieAlgebra, b: BasisLabel) -> Result<usize> {
    let index = a
        .index_of(b)
        .ok_or_else(|| Error::UnknownBasisLabel(b.to_string()))?;
    Ok(a.ad_matrix(index).rank())
}

pub fn invariant_vector(a: &GraphLieAlgebra) -> InvariantVector {
    let mut ad_rank_multiset: Vec<usize> = (0..a.graph().n_vertices())
        .map(|v| a.ad_matrix(v).rank())
        .collect();
    ad_rank_multiset.sort_unstable_by(|x, y| y.cmp(x));
    InvariantVector {
        ad_rank_multiset,
        dim: a.dim(),
        dim_center: center_dim(a),
        dim_derived: derived_subalgebra_dim(a),
        nilpotency_class: nilpotency_class(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::graphs::Graph;

    fn path_plus_isolated() -> Graph {
        Graph::path(3).disjoint_union(&Graph::empty(1))
    }

    #[test]
    fn derived_dims() {
        assert_eq!(
            derived_subalgebra_dim(&build_algebra(&Graph::complete(3))),
            3
        );
        assert_eq!(derived_subalgebra_dim(&build_algebra(&Graph::empty(5))), 0);
        assert_eq!(derived_subalgebra_dim(&build_algebra(&Graph::path(3))), 2);
        assert_eq!(derived_subalgebra_dim(&build_algebra(&Graph::empty(0))), 0);
    }

    #[test]
    fn center_dims() {
        let heis_plus_line = Graph::complete(2).disjoint_union(&Graph::empty(1));
        assert_eq!(center_dim(&build_algebra(&heis_plus_line)), 2);
        assert_eq!(center_dim(&build_algebra(&Graph::complete(3))), 3);
        assert_eq!(center_dim(&build_algebra(&Graph::empty(4))), 4);
        assert_eq!(center_dim(&build_algebra(&Graph::empty(0))), 0);
    }

    #[test]
    fn center_of_triangle_is_edge_span() {
        let a = build_algebra(&Graph::complete(3));
        for v in center_basis(&a) {
            assert!(a.from_dense(&v).is_in_edge_span());
        }
    }

    #[test]
    fn ad_ranks() {
        let p = build_algebra(&Graph::path(3));
        assert_eq!(ad_rank(&p, BasisLabel::Vertex(1)).unwrap(), 2);
        assert_eq!(ad_rank(&p, BasisLabel::Vertex(0)).unwrap(), 1);
        assert_eq!(ad_rank(&p, BasisLabel::EdgeWedge(0, 1)).unwrap(), 0);
        let k3 = build_algebra(&Graph::complete(3));
        for v in 0..3 {
            assert_eq!(ad_rank(&k3, BasisLabel::Vertex(v)).unwrap(), 2);
        }
        assert!(matches!(
            ad_rank(&p, BasisLabel::EdgeWedge(0, 2)),
            Err(Error::UnknownBasisLabel(_))
        ));
    }

    #[test]
    fn triangle_vs_path_plus_isolated() {
        let a = invariant_vector(&build_algebra(&Graph::complete(3)));
        let b = invariant_vector(&build_algebra(&path_plus_isolated()));
        assert_eq!(a.ad_rank_multiset, vec![2, 2, 2]);
        assert_eq!(b.ad_rank_multiset, vec![2, 1, 1, 0]);
        // Both are 6-dimensional with 3-dimensional center.
        assert_eq!((a.dim, b.dim), (6, 6));
        assert_eq!((a.dim_center, b.dim_center), (3, 3));
        // The derived algebra already separates them (3 vs 2).
        let (name, l, r) = a.first_difference(&b).unwrap();
        assert_eq!(name, "dim_derived");
        assert_eq!((l, r), (InvariantValue::Count(3), InvariantValue::Count(2)));
    }

    #[test]
    fn relabeling_preserves_vector() {
        let g = path_plus_isolated();
        let h = g.relabel(&[3, 1, 0, 2]);
        assert_eq!(
            invariant_vector(&build_algebra(&g)),
            invariant_vector(&build_algebra(&h))
        );
    }

    // Same-dimension pair separated by the center: the 2K2 and P3 + K1
    // algebras are both 6-dimensional with 2-dimensional derived algebra.
    #[test]
    fn two_k2_vs_path_plus_isolated() {
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        let a = invariant_vector(&build_algebra(&two_k2));
        let b = invariant_vector(&build_algebra(&path_plus_isolated()));
        assert_eq!((a.dim, a.dim_derived), (b.dim, b.dim_derived));
        assert_eq!((a.dim_center, b.dim_center), (2, 3));
    }

    #[test]
    fn json_keys_sorted() {
        let v = invariant_vector(&build_algebra(&Graph::path(3)));
        let json = v.to_json();
        let keys: Vec<&str> = [
            "ad_rank_multiset",
            "dim",
            "dim_center",
            "dim_derived",
            "nilpotency_class",
        ]
        .into_iter()
        .collect();
        let positions: Vec<usize> = keys
            .iter()
            .map(|k| json.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(InvariantVector::from_json(&json).unwrap(), v);
    }
}
