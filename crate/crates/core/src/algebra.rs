//! The two-step nilpotent Lie algebra `n = V ⊕ W` of a graph.
//!
//! `V` has one basis vector per vertex and `W` one per edge. For an edge
//! `{i, j}` with `i < j` the edge generator is `v_i ∧ v_j`, so
//! `[v_i, v_j] = +w_ij` and `[v_j, v_i] = -w_ij`. Every other bracket of
//! basis vectors vanishes, which makes `W` central.
//!
//! Basis order is all vertices by index, then all edges in sorted order.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graphs::{parse_graph6, to_graph6, Graph};
use crate::linalg::{parse_scalar, Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    Vertex(usize),
    /// Edge generator `v_i ∧ v_j`, always with `i < j`.
    EdgeWedge(usize, usize),
}

impl BasisLabel {
    pub fn is_vertex(&self) -> bool {
        matches!(self, BasisLabel::Vertex(_))
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Vertex(i) => write!(f, "v{i}"),
            BasisLabel::EdgeWedge(i, j) => write!(f, "w{i}_{j}"),
        }
    }
}

impl FromStr for BasisLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Decode(format!("bad basis label {s:?}"));
        if let Some(rest) = s.strip_prefix('v') {
            return rest.parse().map(BasisLabel::Vertex).map_err(|_| bad());
        }
        let (i, j) = s
            .strip_prefix('w')
            .and_then(|rest| rest.split_once('_'))
            .ok_or_else(bad)?;
        let (i, j): (usize, usize) = (i.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?);
        if i >= j {
            return Err(bad());
        }
        Ok(BasisLabel::EdgeWedge(i, j))
    }
}

/// Structure constants of the graph algebra, indexed by basis position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphLieAlgebra {
    graph: Graph,
    basis: Vec<BasisLabel>,
    /// `(a, b) -> [(c, coefficient)]`, stored for both orders of each pair.
    brackets: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
}

pub fn build_algebra(g: &Graph) -> GraphLieAlgebra {
    GraphLieAlgebra::new(g)
}

impl GraphLieAlgebra {
    pub fn new(g: &Graph) -> Self {
        let n = g.n_vertices();
        let basis: Vec<BasisLabel> = (0..n)
            .map(BasisLabel::Vertex)
            .chain(g.edges().iter().map(|&(i, j)| BasisLabel::EdgeWedge(i, j)))
            .collect();
        let mut brackets = BTreeMap::new();
        for (k, &(i, j)) in g.edges().iter().enumerate() {
            brackets.insert((i, j), vec![(n + k, Scalar::one())]);
            brackets.insert((j, i), vec![(n + k, -Scalar::one())]);
        }
        GraphLieAlgebra {
            graph: g.clone(),
            basis,
            brackets,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn label(&self, index: usize) -> BasisLabel {
        self.basis[index]
    }

    pub fn index_of(&self, label: BasisLabel) -> Option<usize> {
        let n = self.graph.n_vertices();
        match label {
            BasisLabel::Vertex(i) if i < n => Some(i),
            BasisLabel::Vertex(_) => None,
            BasisLabel::EdgeWedge(i, j) if i < j => self.graph.edge_index(i, j).map(|k| n + k),
            BasisLabel::EdgeWedge(..) => None,
        }
    }

    fn require_index(&self, label: BasisLabel) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownBasisLabel(label.to_string()))
    }

    /// `[e_a, e_b]` as a list of `(c, coefficient)`.
    pub fn structure_constants(&self, a: usize, b: usize) -> &[(usize, Scalar)] {
        self.brackets.get(&(a, b)).map_or(&[], Vec::as_slice)
    }

    /// Nonzero constants `(a, b, c, coefficient)` with `a < b`, sorted.
    pub fn nonzero_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.brackets
            .iter()
            .filter(|((a, b), _)| a < b)
            .flat_map(|(&(a, b), terms)| terms.iter().map(move |(c, x)| (a, b, *c, x)))
    }

    pub fn zero(&self) -> LieElement<'_> {
        LieElement {
            algebra: self,
            coords: BTreeMap::new(),
        }
    }

    pub fn basis_element(&self, index: usize) -> LieElement<'_> {
        assert!(index < self.dim(), "basis index out of range");
        let mut coords = BTreeMap::new();
        coords.insert(index, Scalar::one());
        LieElement {
            algebra: self,
            coords,
        }
    }

    pub fn element<I>(&self, terms: I) -> Result<LieElement<'_>>
    where
        I: IntoIterator<Item = (BasisLabel, Scalar)>,
    {
        let mut x = self.zero();
        for (label, c) in terms {
            let i = self.require_index(label)?;
            x.add_term(i, c);
        }
        Ok(x)
    }

    pub fn vertex(&self, i: usize) -> Result<LieElement<'_>> {
        self.element([(BasisLabel::Vertex(i), Scalar::one())])
    }

    pub fn edge(&self, i: usize, j: usize) -> Result<LieElement<'_>> {
        self.element([(BasisLabel::EdgeWedge(i.min(j), i.max(j)), Scalar::one())])
    }

    pub fn from_dense(&self, coords: &[Scalar]) -> LieElement<'_> {
        assert_eq!(coords.len(), self.dim(), "coordinate vector length");
        let coords = coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        LieElement {
            algebra: self,
            coords,
        }
    }

    /// Bracket of two dense coordinate vectors.
    pub fn bracket_dense(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (&(a, b), terms) in &self.brackets {
            if x[a].is_zero() || y[b].is_zero() {
                continue;
            }
            let xy = &x[a] * &y[b];
            for (c, k) in terms {
                out[*c] += &xy * k;
            }
        }
        out
    }

    /// Matrix of `ad_b : x ↦ [e_b, x]` in the standard basis.
    pub fn ad_matrix(&self, b: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for x in 0..self.dim() {
            for (c, k) in self.structure_constants(b, x) {
                m.set(*c, x, k.clone());
            }
        }
        m
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&AlgebraJson::from(self)).expect("serializable")
    }

    /// Parses [`GraphLieAlgebra::to_json`] output. The algebra is rebuilt
    /// from the embedded graph and the listed basis and brackets must match
    /// it exactly.
    pub fn from_json(text: &str) -> Result<Self> {
        let json: AlgebraJson =
            serde_json::from_str(text).map_err(|e| Error::Decode(e.to_string()))?;
        let graph = parse_graph6(&json.graph)?;
        let algebra = GraphLieAlgebra::new(&graph);
        let basis = json
            .basis
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<BasisLabel>>>()?;
        let brackets = json
            .brackets
            .iter()
            .map(|(a, b, c, x)| Ok((*a, *b, *c, parse_scalar(x)?)))
            .collect::<Result<Vec<_>>>()?;
        let expected: Vec<_> = algebra
            .nonzero_constants()
            .map(|(a, b, c, x)| (a, b, c, x.clone()))
            .collect();
        if json.dim != algebra.dim() || basis != algebra.basis || brackets != expected {
            return Err(Error::Decode(
                "bracket table does not match the embedded graph".into(),
            ));
        }
        Ok(algebra)
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    graph: String,
    dim: usize,
    basis: Vec<String>,
    brackets: Vec<(usize, usize, usize, String)>,
}

impl From<&GraphLieAlgebra> for AlgebraJson {
    fn from(a: &GraphLieAlgebra) -> Self {
        AlgebraJson {
            graph: to_graph6(&a.graph),
            dim: a.dim(),
            basis: a.basis.iter().map(ToString::to_string).collect(),
            brackets: a
                .nonzero_constants()
                .map(|(a, b, c, x)| (a, b, c, x.to_string()))
                .collect(),
        }
    }
}

/// An element of a [`GraphLieAlgebra`], as sparse exact coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct LieElement<'a> {
    algebra: &'a GraphLieAlgebra,
    coords: BTreeMap<usize, Scalar>,
}

impl<'a> LieElement<'a> {
    pub fn algebra(&self) -> &'a GraphLieAlgebra {
        self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coefficient(&self, label: BasisLabel) -> Scalar {
        self.algebra
            .index_of(label)
            .and_then(|i| self.coords.get(&i).cloned())
            .unwrap_or_else(Scalar::zero)
    }

    /// Nonzero coordinates keyed by basis label.
    pub fn terms(&self) -> impl Iterator<Item = (BasisLabel, &Scalar)> {
        self.coords.iter().map(|(&i, c)| (self.algebra.label(i), c))
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.algebra.dim()];
        for (&i, c) in &self.coords {
            v[i] = c.clone();
        }
        v
    }

    /// True when the element lies in `W`, the span of edge generators.
    pub fn is_in_edge_span(&self) -> bool {
        self.terms().all(|(l, _)| !l.is_vertex())
    }

    fn add_term(&mut self, index: usize, c: Scalar) {
        let entry = self.coords.entry(index).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.coords.remove(&index);
        }
    }

    fn check_same(&self, other: &LieElement<'_>) -> Result<()> {
        if std::ptr::eq(self.algebra, other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn add(&self, other: &LieElement<'_>) -> Result<LieElement<'a>> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (&i, c) in &other.coords {
            out.add_term(i, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LieElement<'_>) -> Result<LieElement<'a>> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, k: &Scalar) -> LieElement<'a> {
        if k.is_zero() {
            return self.algebra.zero();
        }
        LieElement {
            algebra: self.algebra,
            coords: self.coords.iter().map(|(&i, c)| (i, c * k)).collect(),
        }
    }

    pub fn bracket(&self, other: &LieElement<'_>) -> Result<LieElement<'a>> {
        self.check_same(other)?;
        let mut out = self.algebra.zero();
        for (&a, x) in &self.coords {
            for (&b, y) in &other.coords {
                for (c, k) in self.algebra.structure_constants(a, b) {
                    out.add_term(*c, x * y * k);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for LieElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LieElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms().map(|(l, c)| format!("({c})·{l}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

pub fn bracket<'a>(x: &LieElement<'a>, y: &LieElement<'_>) -> Result<LieElement<'a>> {
    x.bracket(y)
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`; zero in any Lie algebra.
pub fn jacobi_defect<'a>(
    x: &LieElement<'a>,
    y: &LieElement<'_>,
    z: &LieElement<'_>,
) -> Result<LieElement<'a>> {
    let t1 = x.bracket(&y.bracket(z)?)?;
    let t2 = y.bracket(&z.bracket(x)?)?;
    let t3 = z.bracket(&x.bracket(y)?)?;
    t1.add(&t2)?.add(&t3)
}

/// Dimensions of the lower central series `n = C¹ ⊇ C² ⊇ ...`, ending at the
/// first zero term (which is included unless `n` itself is zero).
pub fn lower_central_series(a: &GraphLieAlgebra) -> Vec<usize> {
    let dim = a.dim();
    let mut dims = Vec::new();
    // Rows of `current` span the current term of the series.
    let mut current: Vec<Vec<Scalar>> = Matrix::identity(dim).to_rows();
    for _ in 0..=dim {
        let span = row_basis(&current, dim);
        dims.push(span.len());
        if span.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for b in 0..dim {
            let eb = a.basis_element(b).to_dense();
            for c in &span {
                let v = a.bracket_dense(&eb, c);
                if v.iter().any(|x| !x.is_zero()) {
                    next.push(v);
                }
            }
        }
        current = next;
    }
    dims
}

fn row_basis(rows: &[Vec<Scalar>], dim: usize) -> Vec<Vec<Scalar>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(rows.to_vec());
    let (rref, pivots) = m.rref();
    (0..pivots.len())
        .map(|r| rref.row(r)[..dim].to_vec())
        .collect()
}

/// Smallest `c` with `C^{c+1} = 0`; 0 for the zero algebra.
pub fn nilpotency_class(a: &GraphLieAlgebra) -> usize {
    let series = lower_central_series(a);
    let class = series.iter().take_while(|&&d| d > 0).count();
    let expected = match (a.dim(), a.graph().n_edges()) {
        (0, _) => 0,
        (_, 0) => 1,
        _ => 2,
    };
    debug_assert_eq!(
        class, expected,
        "lower central series disagrees with the edge count"
    );
    class
}
