//! Lie algebra morphisms between graph algebras, and isomorphism
//! certificates.
//!
//! Deciding isomorphism of two graph algebras reduces to deciding
//! isomorphism of their graphs. In the constructive direction a graph
//! isomorphism `σ` induces the Lie isomorphism `τ` with `τ(v_i) = v_σ(i)`
//! and `τ(w_ij) = ±w_σ(i)σ(j)`, the sign recording whether `σ` keeps `i`
//! before `j`. Every witness handed out has been re-verified against the
//! structure constants; every separator names an invariant that differs.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::GraphLieAlgebra;
use crate::error::{Error, Result};
use crate::graphs::{are_isomorphic, canonical_form, parse_graph6, to_graph6, GraphIso};
use crate::invariants::{invariant_vector, InvariantValue};
use crate::linalg::{parse_scalar, Matrix, Scalar};

/// What a [`LieMorphism`] is claimed to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismClaim {
    Homomorphism,
    Isomorphism,
}

/// A linear map between graph algebras, as a `target_dim × source_dim`
/// matrix acting on coordinate columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieMorphism {
    source: GraphLieAlgebra,
    target: GraphLieAlgebra,
    matrix: Matrix,
    claim: MorphismClaim,
}

impl LieMorphism {
    pub fn new(
        source: GraphLieAlgebra,
        target: GraphLieAlgebra,
        matrix: Matrix,
        claim: MorphismClaim,
    ) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::ShapeMismatch {
                rows: target.dim(),
                cols: source.dim(),
                found_rows: matrix.rows(),
                found_cols: matrix.cols(),
            });
        }
        Ok(LieMorphism {
            source,
            target,
            matrix,
            claim,
        })
    }

    pub fn zero(source: GraphLieAlgebra, target: GraphLieAlgebra, claim: MorphismClaim) -> Self {
        let matrix = Matrix::zeros(target.dim(), source.dim());
        LieMorphism {
            source,
            target,
            matrix,
            claim,
        }
    }

    pub fn identity(a: &GraphLieAlgebra) -> Self {
        LieMorphism {
            source: a.clone(),
            target: a.clone(),
            matrix: Matrix::identity(a.dim()),
            claim: MorphismClaim::Isomorphism,
        }
    }

    pub fn source(&self) -> &GraphLieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &GraphLieAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn claim(&self) -> MorphismClaim {
        self.claim
    }

    pub fn with_claim(mut self, claim: MorphismClaim) -> Self {
        self.claim = claim;
        self
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(x)
    }

    /// Source basis pairs `(a, b)`, `a < b`, on which
    /// `τ[e_a, e_b] = [τ e_a, τ e_b]` fails.
    pub fn homomorphism_defects(&self) -> Vec<(usize, usize)> {
        let dim = self.source.dim();
        let images: Vec<Vec<Scalar>> = (0..dim).map(|c| self.matrix.column(c)).collect();
        let mut defects = Vec::new();
        for a in 0..dim {
            for b in a + 1..dim {
                let mut lhs = vec![Scalar::zero(); self.target.dim()];
                for (c, k) in self.source.structure_constants(a, b) {
                    for (r, x) in images[*c].iter().enumerate() {
                        if !x.is_zero() {
                            lhs[r] += k * x;
                        }
                    }
                }
                let rhs = self.target.bracket_dense(&images[a], &images[b]);
                if lhs != rhs {
                    defects.push((a, b));
                }
            }
        }
        defects
    }

    pub fn is_homomorphism(&self) -> bool {
        self.homomorphism_defects().is_empty()
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_invertible()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &LieMorphism) -> Result<LieMorphism> {
        if self.target != other.source {
            return Err(Error::AlgebraMismatch);
        }
        let matrix = other.matrix.mul(&self.matrix).expect("shapes agree");
        let claim = match (self.claim, other.claim) {
            (MorphismClaim::Isomorphism, MorphismClaim::Isomorphism) => MorphismClaim::Isomorphism,
            _ => MorphismClaim::Homomorphism,
        };
        LieMorphism::new(self.source.clone(), other.target.clone(), matrix, claim)
    }
}

/// True iff the homomorphism law holds on every source basis pair and, for a
/// claimed isomorphism, the matrix is square and invertible.
pub fn verify_morphism(m: &LieMorphism) -> bool {
    let invertible_ok = match m.claim {
        MorphismClaim::Homomorphism => true,
        MorphismClaim::Isomorphism => m.is_invertible(),
    };
    invertible_ok && m.is_homomorphism()
}

/// The Lie isomorphism induced by a graph isomorphism.
pub fn induce_lie_iso(sigma: &GraphIso) -> Result<LieMorphism> {
    sigma.validate()?;
    let source = GraphLieAlgebra::new(&sigma.source);
    let target = GraphLieAlgebra::new(&sigma.target);
    let n = sigma.source.n_vertices();
    let mut matrix = Matrix::zeros(target.dim(), source.dim());
    for v in 0..n {
        matrix.set(sigma.map(v), v, Scalar::one());
    }
    for (k, &(i, j)) in sigma.source.edges().iter().enumerate() {
        let (si, sj) = (sigma.map(i), sigma.map(j));
        let row = n + sigma
            .target
            .edge_index(si, sj)
            .expect("validated isomorphism maps edges to edges");
        let sign = if si < sj {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        matrix.set(row, n + k, sign);
    }
    LieMorphism::new(source, target, matrix, MorphismClaim::Isomorphism)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Isomorphic,
    NotIsomorphic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub sigma: GraphIso,
    pub tau: LieMorphism,
}

/// Name of the separator that compares canonical graph forms.
pub const CANONICAL_FORM: &str = "canonical_form";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separator {
    pub invariant: String,
    pub left: InvariantValue,
    pub right: InvariantValue,
}

impl Separator {
    /// Recomputes the named invariant on both algebras and checks that the
    /// recorded values are exactly what comes out, and that they differ.
    pub fn holds_for(&self, left: &GraphLieAlgebra, right: &GraphLieAlgebra) -> bool {
        let value = |a: &GraphLieAlgebra| -> Option<InvariantValue> {
            if self.invariant == CANONICAL_FORM {
                Some(InvariantValue::Graph6(to_graph6(
                    &canonical_form(a.graph()).canonical_graph,
                )))
            } else {
                invariant_vector(a).field(&self.invariant)
            }
        };
        match (value(left), value(right)) {
            (Some(l), Some(r)) => l == self.left && r == self.right && l != r,
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCertificate {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub separator: Option<Separator>,
}

/// Decides whether two graph algebras are isomorphic.
///
/// An isomorphism of the graphs yields a verified witness; otherwise the
/// first differing field of the invariant vectors (or, if the vectors
/// agree, the canonical graph forms) becomes the separator.
pub fn algebras_isomorphic(a1: &GraphLieAlgebra, a2: &GraphLieAlgebra) -> IsoCertificate {
    if let Some(sigma) = are_isomorphic(a1.graph(), a2.graph()) {
        let tau = induce_lie_iso(&sigma).expect("graph isomorphisms are valid");
        assert!(verify_morphism(&tau), "induced map failed verification");
        return IsoCertificate {
            verdict: Verdict::Isomorphic,
            witness: Some(Witness { sigma, tau }),
            separator: None,
        };
    }
    let separator = match invariant_vector(a1).first_difference(&invariant_vector(a2)) {
        Some((name, left, right)) => Separator {
            invariant: name.to_string(),
            left,
            right,
        },
        None => Separator {
            invariant: CANONICAL_FORM.to_string(),
            left: InvariantValue::Graph6(to_graph6(&canonical_form(a1.graph()).canonical_graph)),
            right: InvariantValue::Graph6(to_graph6(&canonical_form(a2.graph()).canonical_graph)),
        },
    };
    IsoCertificate {
        verdict: Verdict::NotIsomorphic,
        witness: None,
        separator: Some(separator),
    }
}

impl IsoCertificate {
    pub fn is_isomorphic(&self) -> bool {
        self.verdict == Verdict::Isomorphic
    }

    /// Re-checks the certificate against the two algebras it speaks about.
    pub fn is_sound(&self, a1: &GraphLieAlgebra, a2: &GraphLieAlgebra) -> bool {
        match (self.verdict, &self.witness, &self.separator) {
            (Verdict::Isomorphic, Some(w), None) => {
                w.sigma.is_valid()
                    && w.tau.source() == a1
                    && w.tau.target() == a2
                    && w.tau.claim() == MorphismClaim::Isomorphism
                    && verify_morphism(&w.tau)
            }
            (Verdict::NotIsomorphic, None, Some(s)) => s.holds_for(a1, a2),
            _ => false,
        }
    }

    pub fn to_record(&self) -> CertificateRecord {
        CertificateRecord {
            verdict: self.verdict,
            sigma: self.witness.as_ref().map(|w| w.sigma.vertex_map.clone()),
            tau: self.witness.as_ref().map(|w| {
                w.tau
                    .matrix()
                    .to_rows()
                    .iter()
                    .map(|r| r.iter().map(ToString::to_string).collect())
                    .collect()
            }),
            separator: self.separator.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_record()).expect("serializable")
    }

    /// Parses a certificate written by [`IsoCertificate::to_json`] for the
    /// algebras `a1`, `a2` and re-checks it.
    pub fn from_json(text: &str, a1: &GraphLieAlgebra, a2: &GraphLieAlgebra) -> Result<Self> {
        CertificateRecord::from_json(text)?.into_certificate(a1, a2)
    }
}

/// Serialized form of an [`IsoCertificate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub verdict: Verdict,
    pub sigma: Option<Vec<usize>>,
    pub tau: Option<Vec<Vec<String>>>,
    pub separator: Option<Separator>,
}

impl CertificateRecord {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Decode(e.to_string()))
    }

    pub fn into_certificate(
        self,
        a1: &GraphLieAlgebra,
        a2: &GraphLieAlgebra,
    ) -> Result<IsoCertificate> {
        let witness = match (self.sigma, self.tau) {
            (Some(sigma), Some(tau)) => {
                let sigma = GraphIso::new(a1.graph().clone(), a2.graph().clone(), sigma)?;
                let rows = tau
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|x| parse_scalar(x))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                if rows.iter().any(|r| r.len() != a1.dim()) {
                    return Err(Error::Decode("ragged tau matrix".into()));
                }
                let matrix = if rows.is_empty() {
                    Matrix::zeros(0, a1.dim())
                } else {
                    Matrix::from_rows(rows)
                };
                let tau =
                    LieMorphism::new(a1.clone(), a2.clone(), matrix, MorphismClaim::Isomorphism)?;
                Some(Witness { sigma, tau })
            }
            (None, None) => None,
            _ => return Err(Error::Decode("sigma and tau must appear together".into())),
        };
        let cert = IsoCertificate {
            verdict: self.verdict,
            witness,
            separator: self.separator,
        };
        if !cert.is_sound(a1, a2) {
            return Err(Error::Decode("certificate does not check out".into()));
        }
        Ok(cert)
    }
}

/// Convenience for callers holding graph6 strings.
pub fn algebras_isomorphic_graph6(g1: &str, g2: &str) -> Result<IsoCertificate> {
    let a1 = GraphLieAlgebra::new(&parse_graph6(g1)?);
    let a2 = GraphLieAlgebra::new(&parse_graph6(g2)?);
    Ok(algebras_isomorphic(&a1, &a2))
}
