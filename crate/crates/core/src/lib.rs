//! Two-step nilpotent Lie algebras attached to finite simple graphs.
//!
//! A graph `(S, E)` gives the algebra `n = V ⊕ W` where `V` has the vertices
//! as a basis, `W` is spanned by `α ∧ β` for the edges `αβ`, and the only
//! nonzero brackets of basis vectors are `[α, β] = α ∧ β` on edges. Two such
//! algebras are isomorphic exactly when their graphs are, which is how
//! [`morphisms::algebras_isomorphic`] decides isomorphism and how
//! [`enumerate::classify_dimension`] lists the classes in a dimension.
//!
//! All arithmetic is exact over the rationals.
//!
//! ```
//! use graphlie::prelude::*;
//!
//! let k3 = Graph::complete(3);
//! let n = build_algebra(&k3);
//! assert_eq!(n.dim(), 6);
//! assert_eq!(derived_subalgebra_dim(&n), 3);
//!
//! let relabeled = build_algebra(&k3.relabel(&[2, 0, 1]));
//! let cert = algebras_isomorphic(&n, &relabeled);
//! assert!(cert.is_isomorphic() && cert.is_sound(&n, &relabeled));
//!
//! assert_eq!(classify_dimension(6, true).unwrap().len(), 5);
//! ```
//!
//! The converse direction of the isomorphism criterion (an algebra
//! isomorphism forces a graph isomorphism) is relied on, not checked: no
//! finite search over real changes of basis can confirm it. What the crate
//! does check is that every induced map really is a Lie isomorphism and
//! that distinct classes are separated by an explicit invariant.

pub mod algebra;
pub mod audit;
pub mod enumerate;
pub mod error;
pub mod graphs;
pub mod invariants;
pub mod linalg;
pub mod morphisms;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::algebra::{
        bracket, build_algebra, jacobi_defect, nilpotency_class, BasisLabel, GraphLieAlgebra,
        LieElement,
    };
    pub use crate::enumerate::{catalog_counts, classify_dimension, DimensionCatalog};
    pub use crate::graphs::{
        are_isomorphic, automorphism_count, canonical_form, enumerate_graphs, parse_graph6,
        to_graph6, Graph, GraphIso,
    };
    pub use crate::invariants::{
        ad_rank, center_dim, derived_subalgebra_dim, invariant_vector, InvariantVector,
    };
    pub use crate::linalg::Scalar;
    pub use crate::morphisms::{
        algebras_isomorphic, induce_lie_iso, verify_morphism, IsoCertificate, LieMorphism, Verdict,
    };
}
