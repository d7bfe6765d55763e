//! `randic` — exact graph invariants and verification scans.
//!
//! Subcommands: `compute` (invariants of one graph), `essential`
//! (diameter-essential structure), `reduce` (the audited deletion
//! loop), `verify` (suite scans over graph sources).
//!
//! Exit codes: 0 on success or a clean scan, 1 when a hard suite
//! reports violations, 2 on usage or input errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use randic_core::format::{parse_edge_list, parse_graph6, to_graph6};
use randic_core::graph::Graph;
use randic_core::harness::{
    registry, verify_conjecture, verify_constants, verify_lemmas, GraphSource, ScanOptions,
    VerifyReport,
};
use randic_core::invariants::{corollary_gaps, degree_sum_lower_bound, InvariantBundle};
use randic_core::reduction::reduce_to_core;
use randic_core::structure::{block_decomposition, layer_profile, local_minimum_vertices};

#[derive(Parser)]
#[command(
    name = "randic",
    version,
    about = "Exact Randić-index/diameter toolkit and verification harness",
    after_help = "Verdicts use exact arithmetic; --digits only affects decimal rendering."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact invariants (R, D, f, degree bounds) of one graph.
    Compute {
        #[command(flatten)]
        input: GraphInput,
        /// Fraction digits for decimal renderings.
        #[arg(long, default_value_t = 6)]
        digits: usize,
    },
    /// Essential vertices/edges, blocks, essential paths, layers.
    Essential {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Audited deletion loop: trace plus the reduced core graph.
    Reduce {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 6)]
        digits: usize,
    },
    /// Verification scans over graph sources.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// List the registered verification suites.
    Suites,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// One graph6 string.
    #[arg(long, value_name = "G6")]
    graph6: Option<String>,
    /// Path to an edge-list file (`n <count>` header, then `u v` lines).
    #[arg(long, value_name = "PATH")]
    edges: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// The path-minimum inequality, its equality class, and both
    /// corollary gaps.
    Conjecture {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Deletion/edge/subdivision lemma suites (see `randic suites`).
    Lemmas {
        #[command(flatten)]
        source: SourceArgs,
        /// Comma-separated suite names; defaults to the lemma set.
        #[arg(long, value_delimiter = ',', value_name = "NAMES")]
        suites: Option<Vec<String>>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Closed-form constants: exact identities and certified sweeps.
    Constants {
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct SourceArgs {
    /// Every labeled connected graph on N vertices (2 ≤ N ≤ 7).
    #[arg(long, value_name = "N", group = "source")]
    exhaustive: Option<usize>,
    /// graph6 file, one graph per line.
    #[arg(long, value_name = "PATH", group = "source")]
    input: Option<PathBuf>,
    /// G(n,p) samples as N,P,COUNT (e.g. 20,0.3,1000).
    #[arg(long, value_name = "N,P,COUNT", group = "source")]
    gnp: Option<String>,
    /// Uniform labeled trees as N,COUNT (e.g. 40,1000).
    #[arg(long, value_name = "N,COUNT", group = "source")]
    trees: Option<String>,
    /// Seed for the random sources.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Tolerate malformed graph6 lines (counted as warnings).
    #[arg(long)]
    skip_bad: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable summary.
    Text,
    /// Line-delimited JSON records (one violation per line + summary).
    Records,
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads for the scan.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Fraction digits for decimal renderings.
    #[arg(long, default_value_t = 6)]
    digits: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Compute { input, digits } => {
            let g = load_graph(&input)?;
            print!("{}", render_compute(&g, digits)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Essential { input, format } => {
            let g = load_graph(&input)?;
            match format {
                Format::Text => print!("{}", render_essential(&g)?),
                Format::Records => print!("{}", render_essential_records(&g)?),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce { input, digits } => {
            let g = load_graph(&input)?;
            print!("{}", render_reduce(&g, digits)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { target } => run_verify(target),
        Command::Suites => {
            for suite in registry() {
                println!("{:<24} [{}] {}", suite.name(), match suite.kind() {
                    randic_core::harness::SuiteKind::Hard => "hard",
                    randic_core::harness::SuiteKind::Contextual => "contextual",
                }, suite.summary());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_graph(input: &GraphInput) -> Result<Graph, String> {
    if let Some(g6) = &input.graph6 {
        return parse_graph6(g6).map_err(|e| format!("--graph6 {g6:?}: {e}"));
    }
    let path = input.edges.as_ref().expect("clap enforces one input");
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("--edges {}: {e}", path.display()))?;
    parse_edge_list(&text).map_err(|e| format!("--edges {}: {e}", path.display()))
}

fn render_compute(g: &Graph, digits: usize) -> Result<String, String> {
    let bundle = InvariantBundle::compute(g).map_err(|e| e.to_string())?;
    let mut out = String::new();
    let _ = writeln!(out, "n = {}", bundle.n);
    let _ = writeln!(out, "m = {}", bundle.m);
    let _ = writeln!(
        out,
        "degrees: max {} min {}",
        bundle.max_degree, bundle.min_degree
    );
    let _ = writeln!(
        out,
        "R = {} ~ {}",
        bundle.randic,
        bundle.randic.decimal(digits)
    );
    let _ = writeln!(out, "D = {}", bundle.diameter);
    let _ = writeln!(out, "f = {} ~ {}", bundle.f, bundle.f.decimal(digits));
    if let Ok(bound) = degree_sum_lower_bound(g) {
        let _ = writeln!(
            out,
            "degree-sum bound = {} ~ {}",
            bound,
            bound.decimal(digits)
        );
    }
    if let Ok((gap1, gap2)) = corollary_gaps(g) {
        let _ = writeln!(
            out,
            "difference gap = {} ~ {}",
            gap1,
            gap1.decimal(digits)
        );
        let _ = writeln!(out, "ratio gap = {} ~ {}", gap2, gap2.decimal(digits));
    }
    Ok(out)
}

fn render_essential(g: &Graph) -> Result<String, String> {
    let profile = block_decomposition(g).map_err(|e| e.to_string())?;
    let local_min = local_minimum_vertices(g).map_err(|e| e.to_string())?;
    let mut out = String::new();
    let _ = writeln!(out, "essential vertices: {:?}", profile.essential_vertices);
    let _ = writeln!(out, "essential edges:");
    for (u, v) in &profile.essential_edges {
        let cut = g.is_cut_edge(*u, *v).expect("edge exists");
        let _ = writeln!(out, "  ({u},{v}) cut-edge: {cut}");
    }
    let _ = writeln!(out, "blocks: {}", profile.blocks.len());
    for block in &profile.blocks {
        let _ = writeln!(out, "  block {:?}", block);
        let root = block[0];
        let lp = layer_profile(g, block, root).expect("root lies in its block");
        for (i, layer) in lp.layers.iter().enumerate() {
            let a = lp.min_nonessential_degree[i]
                .map_or_else(|| "inf".to_string(), |d| d.to_string());
            let _ = writeln!(
                out,
                "    layer {i} (root {root}): {:?} min-nonessential-degree {a}",
                layer
            );
        }
    }
    let _ = writeln!(
        out,
        "essential paths: {:?} (lengths {:?})",
        profile.essential_paths,
        profile.path_lengths()
    );
    let _ = writeln!(out, "local-minimum vertices: {local_min:?}");
    Ok(out)
}

fn render_essential_records(g: &Graph) -> Result<String, String> {
    let profile = block_decomposition(g).map_err(|e| e.to_string())?;
    let local_min = local_minimum_vertices(g).map_err(|e| e.to_string())?;
    let layers: Vec<_> = profile
        .blocks
        .iter()
        .map(|block| layer_profile(g, block, block[0]).expect("root lies in its block"))
        .collect();
    let record = serde_json::json!({
        "record": "essential-profile",
        "profile": profile,
        "layer_profiles": layers,
        "local_minimum_vertices": local_min,
    });
    Ok(format!("{record}\n"))
}

fn render_reduce(g: &Graph, digits: usize) -> Result<String, String> {
    let (core, trace) = reduce_to_core(g).map_err(|e| e.to_string())?;
    let mut out = String::new();
    for line in trace.render_lines(digits) {
        let _ = writeln!(out, "{line}");
    }
    let _ = writeln!(out, "steps: {}", trace.steps.len());
    let _ = writeln!(out, "final graph: {}", to_graph6(&core));
    Ok(out)
}

fn run_verify(target: VerifyTarget) -> Result<ExitCode, String> {
    let (report, run) = match target {
        VerifyTarget::Conjecture { source, run } => {
            let source = source.to_source()?;
            let report = verify_conjecture(&source, run.scan_options())
                .map_err(|e| e.to_string())?;
            (report, run)
        }
        VerifyTarget::Lemmas { source, suites, run } => {
            let source = source.to_source()?;
            let report = verify_lemmas(&source, suites.as_deref(), run.scan_options())
                .map_err(|e| e.to_string())?;
            (report, run)
        }
        VerifyTarget::Constants { run } => {
            let report = verify_constants(run.scan_options()).map_err(|e| e.to_string())?;
            (report, run)
        }
    };
    emit(&report, &run)?;
    Ok(ExitCode::from(report.exit_code() as u8))
}

impl RunArgs {
    fn scan_options(&self) -> ScanOptions {
        ScanOptions {
            workers: self.workers,
            digits: self.digits,
        }
    }
}

impl SourceArgs {
    fn to_source(&self) -> Result<GraphSource, String> {
        if let Some(n) = self.exhaustive {
            return Ok(GraphSource::Exhaustive { n });
        }
        if let Some(path) = &self.input {
            return Ok(GraphSource::Graph6File {
                path: path.clone(),
                skip_bad: self.skip_bad,
            });
        }
        if let Some(spec) = &self.gnp {
            let parts: Vec<&str> = spec.split(',').collect();
            if parts.len() != 3 {
                return Err(format!("--gnp expects N,P,COUNT, got {spec:?}"));
            }
            let n = parts[0]
                .parse::<usize>()
                .map_err(|e| format!("--gnp vertex count {:?}: {e}", parts[0]))?;
            let p = parts[1]
                .parse::<f64>()
                .map_err(|e| format!("--gnp probability {:?}: {e}", parts[1]))?;
            let count = parts[2]
                .parse::<u64>()
                .map_err(|e| format!("--gnp count {:?}: {e}", parts[2]))?;
            return Ok(GraphSource::Gnp {
                n,
                p,
                count,
                seed: self.seed,
            });
        }
        if let Some(spec) = &self.trees {
            let parts: Vec<&str> = spec.split(',').collect();
            if parts.len() != 2 {
                return Err(format!("--trees expects N,COUNT, got {spec:?}"));
            }
            let n = parts[0]
                .parse::<usize>()
                .map_err(|e| format!("--trees vertex count {:?}: {e}", parts[0]))?;
            let count = parts[1]
                .parse::<u64>()
                .map_err(|e| format!("--trees count {:?}: {e}", parts[1]))?;
            return Ok(GraphSource::Trees {
                n,
                count,
                seed: self.seed,
            });
        }
        Err("one of --exhaustive, --input, --gnp, --trees is required".into())
    }
}

fn emit(report: &VerifyReport, run: &RunArgs) -> Result<(), String> {
    let rendered = match run.format {
        Format::Text => report.render_text(run.digits),
        Format::Records => report.render_records(run.digits),
    };
    match &run.output {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}
