//! Full structural self-check of one graph algebra.

use serde::Serialize;

use crate::algebra::{jacobi_defect, nilpotency_class, GraphLieAlgebra};
use crate::graphs::Graph;
use crate::invariants::{center_dim, derived_subalgebra_dim};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub graph6: String,
    pub checks: Vec<Check>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        name,
        passed,
        detail,
    }
}

/// Runs every structural check on the algebra of `g`: dimension formulas,
/// center, nilpotency, antisymmetry, centrality of the edge span, the
/// ad-rank/degree law, and the Jacobi identity on all basis triples.
pub fn audit(g: &Graph) -> AuditReport {
    let a = GraphLieAlgebra::new(g);
    let (v, e) = (g.n_vertices(), g.n_edges());
    let dim = a.dim();
    let mut checks = Vec::new();

    checks.push(check(
        "dimension",
        dim == v + e,
        format!("dim = {dim}, |S| + |E| = {}", v + e),
    ));

    let derived = derived_subalgebra_dim(&a);
    checks.push(check(
        "derived_dimension",
        derived == e,
        format!("dim [n,n] = {derived}, |E| = {e}"),
    ));

    let center = center_dim(&a);
    let isolated = g.isolated_vertices().len();
    checks.push(check(
        "center_dimension",
        center == e + isolated,
        format!("dim z(n) = {center}, |E| + isolated = {}", e + isolated),
    ));

    let class = nilpotency_class(&a);
    let expected = match (dim, e) {
        (0, _) => 0,
        (_, 0) => 1,
        _ => 2,
    };
    checks.push(check(
        "nilpotency_class",
        class == expected,
        format!("class = {class}, expected {expected}"),
    ));

    let basis: Vec<_> = (0..dim).map(|i| a.basis_element(i)).collect();
    let brackets: Vec<Vec<_>> = basis
        .iter()
        .map(|x| {
            basis
                .iter()
                .map(|y| x.bracket(y).expect("same algebra"))
                .collect()
        })
        .collect();

    let antisym_failures = (0..dim)
        .flat_map(|i| (0..dim).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            !brackets[i][j]
                .add(&brackets[j][i])
                .expect("same algebra")
                .is_zero()
        })
        .count();
    checks.push(check(
        "antisymmetry",
        antisym_failures == 0,
        format!("{antisym_failures} failing basis pairs"),
    ));

    let central_failures = (0..dim)
        .flat_map(|i| (v..dim).map(move |w| (i, w)))
        .filter(|&(i, w)| !brackets[i][w].is_zero())
        .count();
    checks.push(check(
        "edge_span_central",
        central_failures == 0,
        format!("{central_failures} nonzero brackets with edge generators"),
    ));

    let degrees = g.degrees();
    let ad_failures: Vec<usize> = (0..v)
        .filter(|&i| a.ad_matrix(i).rank() != degrees[i])
        .collect();
    checks.push(check(
        "ad_rank_equals_degree",
        ad_failures.is_empty(),
        format!("failing vertices: {ad_failures:?}"),
    ));

    let mut jacobi_failures = 0usize;
    for x in &basis {
        for y in &basis {
            for z in &basis {
                if !jacobi_defect(x, y, z).expect("same algebra").is_zero() {
                    jacobi_failures += 1;
                }
            }
        }
    }
    checks.push(check(
        "jacobi",
        jacobi_failures == 0,
        format!("{} basis triples, {jacobi_failures} failing", dim.pow(3)),
    ));

    let json_ok = GraphLieAlgebra::from_json(&a.to_json()).as_ref() == Ok(&a);
    checks.push(check("json_round_trip", json_ok, String::new()));

    AuditReport {
        graph6: g.to_string(),
        checks,
    }
}
