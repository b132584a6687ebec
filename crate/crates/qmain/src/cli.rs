//! Command-line front end. Exit codes: 0 on success/agreement, 1 when a
//! check reports a discrepancy, 2 on input errors.

use std::fs;
use std::io::{self, BufRead, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qmain::analysis::analyze_graph;
use qmain::enumerate::{
    enumerate_bicyclic, equivalence_sweep, verify_classification, EnumerationConfig,
};
use qmain::families::{make_family, reference_families, FamilySpec};
use qmain::graph::{parse_edge_list, to_edge_list, Graph};
use qmain::graph6::{parse_graph6, to_graph6};
use qmain::jacobi::SpectralTolerances;
use qmain::parabolic::check_parabolic;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISCREPANCY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser)]
#[command(
    name = "qmain",
    about = "Main signless Laplacian eigenvalue counts, parabolic checks, and bicyclic classification",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Args)]
struct InputArgs {
    /// Input path, or "-" for standard input.
    #[arg(default_value = "-")]
    input: String,
    /// Input format. graph6 inputs may hold one graph per line.
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

#[derive(Args)]
struct TolArgs {
    /// Jacobi convergence threshold (relative off-diagonal mass).
    #[arg(long, default_value_t = 1e-12)]
    tol_jacobi: f64,
    /// Eigenvalue clustering gap, relative to max(1, ||L+||_inf).
    #[arg(long, default_value_t = 1e-8)]
    tol_gap: f64,
    /// Main-cluster projection threshold, relative to sqrt(n).
    #[arg(long, default_value_t = 1e-8)]
    tol_proj: f64,
}

impl TolArgs {
    fn tolerances(&self) -> SpectralTolerances {
        SpectralTolerances {
            jacobi: self.tol_jacobi,
            cluster_gap: self.tol_gap,
            projection: self.tol_proj,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Per-graph report: degrees, 2-walk sums, exact main count, float
    /// clusters, parabolic verdict. One JSON object per line.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        tols: TolArgs,
    },
    /// Parabolic verdict only, with the structural audit for bicyclic
    /// parabolic graphs. One JSON object per line.
    Parabolic {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Named graph families.
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
    /// Enumerate connected bicyclic graphs up to isomorphism.
    Enumerate {
        #[arg(long, value_name = "N")]
        max_n: usize,
        /// Emit one graph6 line per graph instead of the count summary.
        #[arg(long)]
        emit: bool,
        /// Disable worker parallelism.
        #[arg(long)]
        serial: bool,
    },
    /// Enumerate, collect the graphs with exactly two main eigenvalues,
    /// and compare them with the named families.
    Verify {
        #[arg(long, value_name = "N")]
        max_n: usize,
        /// Also write the JSON report to this path.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Print the found graphs as a graph6 stream instead of JSON.
        #[arg(long)]
        emit: bool,
        #[arg(long)]
        serial: bool,
    },
    /// Check (main count = 1 <=> regular) and (= 2 <=> parabolic) over
    /// all small labeled connected graphs plus random samples.
    Sweep {
        #[arg(long, default_value_t = 6)]
        exhaustive_n: usize,
        /// Random connected graphs per order in 8..=10.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum FamiliesAction {
    /// List the accepted family names.
    List,
    /// Print one named graph.
    Emit {
        /// Family name, e.g. "H:3", "G1", "theta:3,3,1", "cycle:5".
        name: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Re-derive the parabolic parameters of every named family and
    /// compare them with the published values.
    CheckAll,
}

fn read_input(path: &str) -> io::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        fs::read_to_string(path)
    }
}

fn open_lines(path: &str) -> io::Result<Box<dyn BufRead>> {
    if path == "-" {
        Ok(Box::new(io::BufReader::new(io::stdin())))
    } else {
        Ok(Box::new(io::BufReader::new(fs::File::open(path)?)))
    }
}

/// Applies `f` to each graph of the input. graph6 inputs are processed
/// line by line, so arbitrarily long piped streams work in flat memory.
fn for_each_graph(
    input: &InputArgs,
    mut f: impl FnMut(&Graph) -> Result<(), Box<dyn std::error::Error>>,
) -> Result<(), Box<dyn std::error::Error>> {
    match input.format {
        Format::Edgelist => {
            let g = parse_edge_list(&read_input(&input.input)?)?;
            f(&g)
        }
        Format::Graph6 => {
            for line in open_lines(&input.input)?.lines() {
                let line = line?;
                let trimmed = line.trim();
                if trimmed.is_empty() {
                    continue;
                }
                f(&parse_graph6(trimmed)?)?;
            }
            Ok(())
        }
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Box<dyn std::error::Error>> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Analyze { input, tols } => {
            let tolerances = tols.tolerances();
            for_each_graph(&input, |g| {
                let record = analyze_graph(g, &tolerances, false)?;
                writeln!(out, "{}", serde_json::to_string(&record)?)?;
                Ok(())
            })?;
            Ok(EXIT_OK)
        }
        Command::Parabolic { input } => {
            for_each_graph(&input, |g| {
                let record = analyze_graph(g, &SpectralTolerances::default(), true)?;
                let mut fragment = serde_json::to_value(&record.parabolic)?;
                fragment["graph6"] = json!(record.graph6);
                writeln!(out, "{}", serde_json::to_string(&fragment)?)?;
                Ok(())
            })?;
            Ok(EXIT_OK)
        }
        Command::Families { action } => families(action, &mut out),
        Command::Enumerate {
            max_n,
            emit,
            serial,
        } => {
            let mut cfg = EnumerationConfig::new(max_n)?;
            cfg.parallel = !serial;
            cfg.emit_graph6 = emit;
            let graphs = enumerate_bicyclic(&cfg);
            if cfg.emit_graph6 {
                for g in &graphs {
                    writeln!(out, "{}", to_graph6(g))?;
                }
            } else {
                let mut counts = std::collections::BTreeMap::new();
                for g in &graphs {
                    *counts.entry(g.n()).or_insert(0usize) += 1;
                }
                let summary = json!({ "max_n": max_n, "total": graphs.len(), "counts": counts });
                writeln!(out, "{}", serde_json::to_string(&summary)?)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            max_n,
            json: json_path,
            emit,
            serial,
        } => {
            let mut cfg = EnumerationConfig::new(max_n)?;
            cfg.parallel = !serial;
            let report = verify_classification(&cfg);
            let rendered = serde_json::to_string_pretty(&report)?;
            if let Some(path) = json_path {
                fs::write(path, &rendered)?;
            }
            if emit {
                for entry in &report.found {
                    writeln!(out, "{}", entry.graph6)?;
                }
            } else {
                writeln!(out, "{rendered}")?;
            }
            Ok(if report.is_clean() {
                EXIT_OK
            } else {
                EXIT_DISCREPANCY
            })
        }
        Command::Sweep {
            exhaustive_n,
            samples,
            seed,
        } => {
            let report = equivalence_sweep(exhaustive_n, samples, seed)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            Ok(if report.is_clean() {
                EXIT_OK
            } else {
                EXIT_DISCREPANCY
            })
        }
    }
}

fn families(
    action: FamiliesAction,
    out: &mut impl Write,
) -> Result<i32, Box<dyn std::error::Error>> {
    match action {
        FamiliesAction::List => {
            for line in [
                "H:<k>          theta(k,2,2) with a pendant on each internal path vertex (k >= 2)",
                "G1             two triangles sharing a vertex (bowtie)",
                "G2             two triangles joined by an edge",
                "G3             two triangles joined by a path of length 3",
                "G4             theta(2,2,1), the diamond",
                "G5             theta(3,3,1)",
                "G6             theta(2,2,2), the complete bipartite K{2,3}",
                "G7             theta(3,3,3)",
                "theta:<p,q,r>  three internally disjoint paths (p >= q >= r >= 1, q >= 2)",
                "f1:<p,q>       cycles of lengths p and q sharing one vertex",
                "f2:<p,q,t>     cycles of lengths p and q joined by a path of length t",
                "cycle:<n>  path:<n>  star:<n>  complete:<n>",
            ] {
                writeln!(out, "{line}")?;
            }
            Ok(EXIT_OK)
        }
        FamiliesAction::Emit { name, format } => {
            let spec: FamilySpec = name.parse()?;
            let g = make_family(&spec)?;
            match format {
                Format::Graph6 => writeln!(out, "{}", to_graph6(&g))?,
                Format::Edgelist => write!(out, "{}", to_edge_list(&g))?,
            }
            Ok(EXIT_OK)
        }
        FamiliesAction::CheckAll => {
            let mut all_ok = true;
            for (spec, (want_a, want_b)) in reference_families(5) {
                let g = make_family(&spec)?;
                let verdict = check_parabolic(&g);
                let got = verdict.params();
                let ok = got.is_some_and(|p| (p.a, p.b) == (want_a, want_b));
                all_ok &= ok;
                let line = json!({
                    "family": spec.to_string(),
                    "n": g.n(),
                    "expected": [want_a, want_b],
                    "derived": got.map(|p| vec![p.a, p.b]),
                    "main_count": qmain::spectra::main_eigenvalue_count(&g),
                    "ok": ok,
                });
                writeln!(out, "{}", serde_json::to_string(&line)?)?;
            }
            Ok(if all_ok { EXIT_OK } else { EXIT_DISCREPANCY })
        }
    }
}
