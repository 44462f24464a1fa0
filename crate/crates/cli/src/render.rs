//! Text renderings of library values. Every function returns the complete,
//! newline-terminated output.

use graphlie::algebra::GraphLieAlgebra;
use graphlie::audit::AuditReport;
use graphlie::enumerate::DimensionCatalog;
use graphlie::graphs::{to_graph6, Graph};
use graphlie::invariants::{InvariantValue, InvariantVector};
use graphlie::morphisms::IsoCertificate;

use crate::Format;

fn json_line(mut s: String) -> String {
    s.push('\n');
    s
}

fn join_counts(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn value(v: &InvariantValue) -> String {
    match v {
        InvariantValue::Count(n) => n.to_string(),
        InvariantValue::Multiset(xs) => join_counts(xs),
        InvariantValue::Graph6(s) => s.clone(),
    }
}

pub fn algebra(a: &GraphLieAlgebra, format: Format) -> String {
    match format {
        Format::Json => json_line(a.to_json()),
        Format::Graph6 => format!("{}\n", to_graph6(a.graph())),
        Format::Table => {
            let g = a.graph();
            let mut s = format!(
                "graph {}  dim {}  (|S| = {}, |E| = {})\n",
                to_graph6(g),
                a.dim(),
                g.n_vertices(),
                g.n_edges()
            );
            let labels: Vec<String> = a.basis().iter().map(ToString::to_string).collect();
            s.push_str(&format!("basis: {}\n", labels.join(" ")));
            if a.nonzero_constants().next().is_none() {
                s.push_str("all brackets vanish\n");
            }
            for (x, y, z, c) in a.nonzero_constants() {
                let coef = if c == &graphlie::linalg::int(1) {
                    String::new()
                } else {
                    format!("{c}·")
                };
                s.push_str(&format!(
                    "[{}, {}] = {coef}{}\n",
                    a.label(x),
                    a.label(y),
                    a.label(z)
                ));
            }
            s
        }
    }
}

pub fn invariants(g: &Graph, iv: &InvariantVector, format: Format) -> String {
    match format {
        Format::Json => json_line(iv.to_json()),
        Format::Graph6 => format!("{}\n", to_graph6(g)),
        Format::Table => {
            let mut s = format!("graph              {}\n", to_graph6(g));
            for (name, v) in iv.fields() {
                s.push_str(&format!("{name:<18} {}\n", value(&v)));
            }
            s
        }
    }
}

pub fn certificate(cert: &IsoCertificate, format: Format) -> String {
    if format == Format::Json {
        return json_line(cert.to_json());
    }
    let record = cert.to_record();
    let verdict = if cert.is_isomorphic() {
        "isomorphic"
    } else {
        "not_isomorphic"
    };
    let mut s = format!("verdict: {verdict}\n");
    if let Some(sigma) = &record.sigma {
        let pairs: Vec<String> = sigma
            .iter()
            .enumerate()
            .map(|(i, j)| format!("{i}->{j}"))
            .collect();
        s.push_str(&format!("sigma: {}\n", pairs.join(" ")));
    }
    if let Some(tau) = &record.tau {
        s.push_str(&format!(
            "tau ({}x{}):\n",
            tau.len(),
            tau.first().map_or(0, Vec::len)
        ));
        let width = tau.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in tau {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            s.push_str(&format!("  {}\n", cells.join(" ")));
        }
    }
    if let Some(sep) = &record.separator {
        s.push_str(&format!(
            "separator: {} {} vs {}\n",
            sep.invariant,
            value(&sep.left),
            value(&sep.right)
        ));
    }
    s
}

pub fn catalog(cat: &DimensionCatalog, format: Format) -> String {
    match format {
        Format::Json => json_line(cat.to_json()),
        Format::Graph6 => cat
            .graphs()
            .map(|g| format!("{}\n", to_graph6(g)))
            .collect(),
        Format::Table => {
            let mut s = format!(
                "{:>3}  {:<8} {:>3} {:>3}  {:>7} {:>6} {:>5}  {}\n",
                "#", "graph6", "|S|", "|E|", "derived", "center", "class", "ad_ranks"
            );
            for (i, e) in cat.entries.iter().enumerate() {
                let iv = &e.invariants;
                s.push_str(&format!(
                    "{:>3}  {:<8} {:>3} {:>3}  {:>7} {:>6} {:>5}  {}\n",
                    i + 1,
                    to_graph6(&e.graph),
                    e.graph.n_vertices(),
                    e.graph.n_edges(),
                    iv.dim_derived,
                    iv.dim_center,
                    iv.nilpotency_class,
                    join_counts(&iv.ad_rank_multiset)
                ));
            }
            s.push_str(&format!(
                "{} classes in dimension {}{}\n",
                cat.len(),
                cat.dimension,
                if cat.include_abelian {
                    ""
                } else {
                    " (abelian excluded)"
                }
            ));
            s
        }
    }
}

pub fn audit(report: &AuditReport, format: Format) -> String {
    match format {
        Format::Json => json_line(serde_json::to_string_pretty(report).expect("serializable")),
        Format::Graph6 => format!("{}\n", report.graph6),
        Format::Table => {
            let mut s = format!("graph {}\n", report.graph6);
            for c in &report.checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                s.push_str(format!("{mark}  {:<22} {}", c.name, c.detail).trim_end());
                s.push('\n');
            }
            s
        }
    }
}
