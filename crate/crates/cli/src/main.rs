//! graphlie: build, inspect, compare and classify graph Lie algebras.
//!
//! Exit codes: 0 success (and "isomorphic" for `iso`), 1 not isomorphic,
//! 2 usage or input errors, 3 a failed `verify`.

mod render;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use graphlie::algebra::GraphLieAlgebra;
use graphlie::audit::audit;
use graphlie::enumerate::classify_dimension_with;
use graphlie::graphs::{parse_graph6, EnumerationBound, Graph, MAX_VERTICES_ENV};
use graphlie::invariants::invariant_vector;
use graphlie::morphisms::algebras_isomorphic;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "graphlie",
    version,
    about = "Two-step nilpotent Lie algebras of finite simple graphs",
    after_help = "EXAMPLES:\n\
                  \n  graphlie build A_\
                  \n  graphlie invariants --edges triangle.txt --format json\
                  \n  graphlie iso Bw Bw\
                  \n  graphlie enumerate --dim 6\
                  \n  graphlie verify Bw"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Worker threads for enumeration (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Largest vertex count enumeration will accept
    #[arg(long, global = true, env = MAX_VERTICES_ENV)]
    max_vertices: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Print the bracket table of a graph's algebra
    Build(GraphInputs),
    /// Print the invariant vector of a graph's algebra
    Invariants(GraphInputs),
    /// Decide whether two graph algebras are isomorphic (exit 0 if so, 1 if not)
    Iso(GraphInputs),
    /// List one algebra per isomorphism class in a dimension
    Enumerate {
        /// Algebra dimension
        #[arg(long)]
        dim: usize,
        /// Leave out the abelian algebra (edgeless graph)
        #[arg(long)]
        no_abelian: bool,
    },
    /// Run the structural self-check on one graph (exit 3 on any failure)
    Verify(GraphInputs),
}

#[derive(Args)]
struct GraphInputs {
    /// Graphs in graph6 format
    graphs: Vec<String>,
    /// Graphs in edge-list format (first line n, then one `i j` per line);
    /// taken after the positional graphs
    #[arg(long = "edges", value_name = "FILE")]
    edge_files: Vec<PathBuf>,
}

impl GraphInputs {
    /// Parses every input up front, so nothing runs on a partial set.
    fn load(&self, expected: usize) -> Result<Vec<Graph>> {
        let mut out = Vec::new();
        for s in &self.graphs {
            out.push(parse_graph6(s).with_context(|| format!("parsing graph6 {s:?}"))?);
        }
        for path in &self.edge_files {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            out.push(
                Graph::parse_edge_list(&text)
                    .with_context(|| format!("parsing {}", path.display()))?,
            );
        }
        if out.len() != expected {
            bail!("expected {expected} graph(s), got {}", out.len());
        }
        Ok(out)
    }
}

enum Outcome {
    Success,
    NotIsomorphic,
    VerifyFailed,
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<Outcome> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring worker threads")?;
    }
    let bound = cli
        .max_vertices
        .map(EnumerationBound::new)
        .unwrap_or_default();

    match &cli.command {
        Command::Build(inputs) => {
            let g = inputs.load(1)?.remove(0);
            let a = GraphLieAlgebra::new(&g);
            out.write_all(render::algebra(&a, cli.format).as_bytes())?;
        }
        Command::Invariants(inputs) => {
            let g = inputs.load(1)?.remove(0);
            let a = GraphLieAlgebra::new(&g);
            let iv = invariant_vector(&a);
            out.write_all(render::invariants(&g, &iv, cli.format).as_bytes())?;
        }
        Command::Iso(inputs) => {
            let mut graphs = inputs.load(2)?;
            let (g2, g1) = (graphs.pop().unwrap(), graphs.pop().unwrap());
            let (a1, a2) = (GraphLieAlgebra::new(&g1), GraphLieAlgebra::new(&g2));
            let cert = algebras_isomorphic(&a1, &a2);
            out.write_all(render::certificate(&cert, cli.format).as_bytes())?;
            if !cert.is_isomorphic() {
                return Ok(Outcome::NotIsomorphic);
            }
        }
        Command::Enumerate { dim, no_abelian } => {
            let cat = classify_dimension_with(&bound, *dim, !no_abelian)?;
            out.write_all(render::catalog(&cat, cli.format).as_bytes())?;
        }
        Command::Verify(inputs) => {
            let g = inputs.load(1)?.remove(0);
            let report = audit(&g);
            out.write_all(render::audit(&report, cli.format).as_bytes())?;
            if !report.passed() {
                return Ok(Outcome::VerifyFailed);
            }
        }
    }
    Ok(Outcome::Success)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::NotIsomorphic) => ExitCode::from(1),
        Ok(Outcome::VerifyFailed) => ExitCode::from(3),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
