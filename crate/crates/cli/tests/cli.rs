use graphlie::algebra::GraphLieAlgebra;
use graphlie::enumerate::DimensionCatalog;
use graphlie::graphs::{parse_graph6, Graph};
use graphlie::invariants::InvariantVector;
use graphlie::morphisms::{CertificateRecord, IsoCertificate, Verdict};
use std::path::PathBuf;
use std::process::{Command, Output};

fn graphlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphlie"))
        .args(args)
        .env_remove("GRAPHLIE_MAX_VERTICES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_edges(name: &str, g: &Graph) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, g.to_edge_list()).unwrap();
    path
}

// K3 and its relabeling by (2, 0, 1), the second given as an edge list.
#[test]
fn iso_on_relabeled_triangles() {
    let k3 = Graph::complete(3);
    let path = write_edges("k3_relabeled.txt", &k3.relabel(&[2, 0, 1]));
    let out = graphlie(&[
        "iso",
        "Bw",
        "--edges",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let record = CertificateRecord::from_json(&stdout(&out)).unwrap();
    assert_eq!(record.verdict, Verdict::Isomorphic);
    assert_eq!(record.tau.as_ref().unwrap().len(), 6);
    let a = GraphLieAlgebra::new(&k3);
    let cert = record.into_certificate(&a, &a).unwrap();
    assert!(cert.is_sound(&a, &a));
}

#[test]
fn iso_on_non_isomorphic_graphs() {
    // P4 vs the star K1,3.
    let out = graphlie(&["iso", "Ch", "Cs", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let a1 = GraphLieAlgebra::new(&parse_graph6("Ch").unwrap());
    let a2 = GraphLieAlgebra::new(&parse_graph6("Cs").unwrap());
    let cert = IsoCertificate::from_json(&stdout(&out), &a1, &a2).unwrap();
    assert_eq!(cert.separator.unwrap().invariant, "ad_rank_multiset");
}

#[test]
fn enumerate_dimension_six() {
    let out = graphlie(&["enumerate", "--dim", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7, "{text}");
    assert_eq!(lines[6], "5 classes in dimension 6");

    let out = graphlie(&[
        "enumerate",
        "--dim",
        "6",
        "--format",
        "graph6",
        "--no-abelian",
    ]);
    assert_eq!(stdout(&out).lines().count(), 4);

    let out = graphlie(&["enumerate", "--dim", "6", "--format", "json"]);
    let cat = DimensionCatalog::from_json(&stdout(&out)).unwrap();
    assert_eq!(cat.len(), 5);
}

#[test]
fn verify_triangle() {
    let out = graphlie(&["verify", "Bw"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn build_and_invariants_json_parse_back() {
    let out = graphlie(&["build", "Bw", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let a = GraphLieAlgebra::from_json(&stdout(&out)).unwrap();
    assert_eq!(a, GraphLieAlgebra::new(&Graph::complete(3)));

    let out = graphlie(&["invariants", "Bw", "--format", "json"]);
    let iv = InvariantVector::from_json(&stdout(&out)).unwrap();
    assert_eq!(iv.ad_rank_multiset, vec![2, 2, 2]);
}

#[test]
fn build_table() {
    let out = graphlie(&["build", "A_"]);
    assert_eq!(
        stdout(&out),
        "graph A_  dim 3  (|S| = 2, |E| = 1)\nbasis: v0 v1 w0_1\n[v0, v1] = w0_1\n"
    );
}

#[test]
fn usage_and_parse_errors_exit_two() {
    for args in [
        vec!["build", "Bh"],
        vec!["iso", "A_"],
        vec!["build"],
        vec!["enumerate", "--dim", "9"],
        vec!["enumerate", "--dim", "0"],
        vec!["frobnicate"],
        vec!["build", "--edges", "/nonexistent/graph.txt"],
    ] {
        let out = graphlie(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bad_edge_file_rejected_before_work() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("loop.txt");
    std::fs::write(&path, "3\n0 1\n2 2\n").unwrap();
    let out = graphlie(&["iso", "Bw", "--edges", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn vertex_bound_overrides() {
    let out = graphlie(&[
        "enumerate",
        "--dim",
        "9",
        "--max-vertices",
        "9",
        "--format",
        "graph6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    // Splits (9,0), (8,1), (7,2), (6,3), (5,4), (4,5) give 1 + 1 + 2 + 5 + 6 + 1.
    assert_eq!(stdout(&out).lines().count(), 16);

    let out = Command::new(env!("CARGO_BIN_EXE_graphlie"))
        .args(["enumerate", "--dim", "9", "--format", "graph6"])
        .env("GRAPHLIE_MAX_VERTICES", "9")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = graphlie(&["enumerate", "--dim", "3", "--max-vertices", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn jobs_flag() {
    let out = graphlie(&[
        "enumerate",
        "--dim",
        "8",
        "--jobs",
        "2",
        "--format",
        "graph6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 10);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["enumerate", "--dim", "8", "--format", "json"],
        vec!["iso", "Ch", "Cs", "--format", "json"],
        vec!["verify", "Ch", "--format", "json"],
    ] {
        let a = graphlie(&args);
        let b = graphlie(&args);
        assert_eq!(a.stdout, b.stdout);
        assert!(!a.stdout.contains(&b'\r'));
    }
}
