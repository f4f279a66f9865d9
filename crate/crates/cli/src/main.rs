//! fraclocdim: generate graphs, compute exact (local) metric dimensions,
//! and verify the theory over builtin or user corpora.
//!
//! Exit codes: 0 success (and, for `verify`, no failed claim), 1 at least
//! one failed claim, 2 usage or input errors. All numeric output is exact
//! `p/q`; decimals only ever appear as advisory extra columns.

mod output;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fraclocdim::dist::DistMatrix;
use fraclocdim::families::{self, FamilySpec};
use fraclocdim::harness::{self, corpus};
use fraclocdim::resolve::{self, ResolveReport};
use fraclocdim::{io as gio, lp, symmetry, Graph, Status};

/// Default vertex ceiling for the LP-backed subcommands; override with
/// the FRACLOCDIM_MAX_N environment variable.
const DEFAULT_MAX_N: usize = 200;
/// Covering rows accepted by the exact solver before bailing out.
const MAX_LP_ROWS: usize = 20_000;

#[derive(Parser)]
#[command(name = "fraclocdim", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Materialize a graph family to edge-list or JSON form.
    Gen {
        /// Family string, e.g. 'petersen()' or 'strong(complete(3),cycle(5))'.
        family: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
        /// Output path; '-' or omitted for stdout.
        #[arg(long, short)]
        output: Option<String>,
    },
    /// Print l(G), r(G) and optionally the full L(uv) table.
    Resolve {
        #[command(flatten)]
        input: GraphInput,
        /// Emit the whole report as JSON, including the L-table.
        #[arg(long)]
        l_table: bool,
        /// Include the per-pair R(u,v) table in the JSON report.
        #[arg(long, requires = "l_table")]
        r_table: bool,
    },
    /// Exact fractional local metric dimension.
    Ldimf {
        #[command(flatten)]
        input: GraphInput,
        /// Also print the optimal assignment as JSON.
        #[arg(long)]
        assignment: bool,
        /// Export the reduced covering LP (one row of vertex indices per line).
        #[arg(long)]
        export_lp: Option<String>,
    },
    /// Exact fractional metric dimension.
    Dimf {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        assignment: bool,
        #[arg(long)]
        export_lp: Option<String>,
    },
    /// Exact integer local metric dimension (exhaustive, n <= 24).
    Ldim {
        #[command(flatten)]
        input: GraphInput,
        /// Compute the full metric dimension instead.
        #[arg(long)]
        metric: bool,
    },
    /// Automorphism orbits and vertex-transitivity (n <= 64).
    Orbits {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Build the product of two graph files.
    Product {
        #[arg(value_enum)]
        kind: ProductKind,
        /// Left operand path ('-' for stdin, at most once).
        left: String,
        /// Right operand path.
        right: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
        #[arg(long, short)]
        output: Option<String>,
    },
    /// Run theorem claims over a corpus; exit 1 if any claim fails.
    Verify {
        /// 'all' or a comma-separated list of claim ids.
        #[arg(long, default_value = "all")]
        claims: String,
        /// 'builtin' or a path to a corpus file (one family per line).
        #[arg(long, default_value = "builtin")]
        corpus: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
        /// List the claim ids and statements, then exit.
        #[arg(long)]
        list: bool,
    },
    /// CSV of graph,n,m,l,r,ldim,ldim_f,dim_f over a corpus.
    Table {
        #[arg(long, default_value = "builtin")]
        corpus: String,
        /// Append advisory decimal columns for the two fractional values.
        #[arg(long)]
        decimal: bool,
        #[arg(long, short)]
        output: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edges,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKind {
    Strong,
    Cartesian,
    Join,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ReportFormat {
    Table,
    Json,
    Csv,
}

/// A graph argument: a file path / stdin, or an inline family string.
#[derive(Args)]
struct GraphInput {
    /// Path to an edge-list or JSON graph; '-' reads stdin.
    input: Option<String>,
    /// Inline family string instead of a file.
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
}

fn max_n() -> usize {
    std::env::var("FRACLOCDIM_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => fail(msg),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Gen {
            family,
            format,
            output,
        } => {
            let spec = FamilySpec::parse(&family).map_err(|e| e.to_string())?;
            let g = spec.build().map_err(|e| e.to_string())?;
            write_graph(&g, format, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Resolve {
            input,
            l_table,
            r_table,
        } => {
            let g = load_capped(&input)?;
            let d = DistMatrix::compute(&g).map_err(|e| e.to_string())?;
            let mut report = ResolveReport::new(&g, &d);
            if r_table {
                report = report.with_pairs(&d);
            }
            if l_table {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
                );
            } else {
                println!("graph: {}", report.graph);
                println!("n: {}  m: {}", report.n, report.m);
                println!("l: {}", report.l);
                println!("r: {}", report.r);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ldimf {
            input,
            assignment,
            export_lp,
        } => fractional_dimension(&input, assignment, export_lp.as_deref(), false),
        Command::Dimf {
            input,
            assignment,
            export_lp,
        } => fractional_dimension(&input, assignment, export_lp.as_deref(), true),
        Command::Ldim { input, metric } => {
            let g = load_capped(&input)?;
            let d = DistMatrix::compute(&g).map_err(|e| e.to_string())?;
            let value = if metric {
                resolve::integer_dim(&g, &d)
            } else {
                resolve::integer_ldim(&g, &d)
            }
            .map_err(|e| e.to_string())?;
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbits { input, json } => {
            let g = load_capped(&input)?;
            let d = DistMatrix::compute(&g).map_err(|e| e.to_string())?;
            let orbits = symmetry::orbits(&g, &d).map_err(|e| e.to_string())?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&orbits).map_err(|e| e.to_string())?
                );
            } else {
                for (i, members) in orbits.orbits.iter().enumerate() {
                    let items: Vec<String> = members.iter().map(|v| v.to_string()).collect();
                    println!("orbit {i}: {{{}}}", items.join(", "));
                }
                println!("vertex-transitive: {}", orbits.transitive);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Product {
            kind,
            left,
            right,
            format,
            output,
        } => {
            if left == "-" && right == "-" {
                return Err("only one operand may read stdin".into());
            }
            let a = read_graph_file(&left)?;
            let b = read_graph_file(&right)?;
            let g = match kind {
                ProductKind::Strong => {
                    families::strong_product(&a, &b).map_err(|e| e.to_string())?
                }
                ProductKind::Cartesian => {
                    families::cartesian_product(&a, &b).map_err(|e| e.to_string())?
                }
                ProductKind::Join => families::join(&a, &b),
            };
            write_graph(&g, format, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            claims,
            corpus,
            format,
            list,
        } => {
            if list {
                for info in harness::claims::REGISTRY {
                    println!("{:34} {}", info.id, info.statement);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let claim_ids = if claims == "all" {
                harness::all_claim_ids()
            } else {
                claims.split(',').map(|s| s.trim().to_string()).collect()
            };
            let specs = load_corpus(&corpus)?;
            eprintln!(
                "fraclocdim {}: verifying {} claim(s) over {} corpus entries",
                env!("CARGO_PKG_VERSION"),
                claim_ids.len(),
                specs.len()
            );
            let reports = harness::run_suite(&specs, &claim_ids).map_err(|e| e.to_string())?;
            output::print_reports(&reports, format);
            let failures = reports.iter().filter(|r| r.status == Status::Fail).count();
            eprintln!(
                "{} report(s): {} failed, {} passed, {} skipped",
                reports.len(),
                failures,
                reports.iter().filter(|r| r.status == Status::Pass).count(),
                reports
                    .iter()
                    .filter(|r| {
                        matches!(r.status, Status::SkippedCeiling | Status::SkippedHypothesis)
                    })
                    .count(),
            );
            Ok(if failures > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Table {
            corpus,
            decimal,
            output,
        } => {
            let specs = load_corpus(&corpus)?;
            for spec in &specs {
                let n = spec.build().map_err(|e| e.to_string())?.num_vertices();
                check_cap(n)?;
            }
            eprintln!(
                "fraclocdim {}: tabulating {} corpus entries",
                env!("CARGO_PKG_VERSION"),
                specs.len()
            );
            let csv = output::corpus_table(&specs, decimal).map_err(|e| e.to_string())?;
            write_text(&csv, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn fractional_dimension(
    input: &GraphInput,
    assignment: bool,
    export_lp: Option<&str>,
    all_pairs: bool,
) -> Result<ExitCode, String> {
    let g = load_capped(input)?;
    let d = DistMatrix::compute(&g).map_err(|e| e.to_string())?;
    let rows: Vec<_> = if all_pairs {
        resolve::pair_table(&d).into_iter().map(|p| p.1).collect()
    } else {
        resolve::local_table(&g, &d).into_values().collect()
    };
    if rows.len() > MAX_LP_ROWS {
        return Err(format!(
            "{} covering rows exceed the solver ceiling of {MAX_LP_ROWS}",
            rows.len()
        ));
    }
    let lp_instance =
        lp::LinearProgram::covering(rows, g.num_vertices()).map_err(|e| e.to_string())?;
    if let Some(path) = export_lp {
        write_text(&lp_instance.to_text(), Some(path))?;
    }
    let solution = lp::solve_lp(&lp_instance);
    if assignment {
        println!(
            "{}",
            serde_json::to_string_pretty(&solution).map_err(|e| e.to_string())?
        );
    } else {
        println!("{}", solution.value);
    }
    Ok(ExitCode::SUCCESS)
}

fn check_cap(n: usize) -> Result<(), String> {
    let cap = max_n();
    if n > cap {
        return Err(format!(
            "graph has {n} vertices, over the ceiling of {cap} (set FRACLOCDIM_MAX_N to raise it)"
        ));
    }
    Ok(())
}

fn load_capped(input: &GraphInput) -> Result<Graph, String> {
    let g = match (&input.input, &input.family) {
        (_, Some(family)) => FamilySpec::parse(family)
            .and_then(|spec| spec.build())
            .map_err(|e| e.to_string())?,
        (Some(path), None) => read_graph_file(path)?,
        (None, None) => return Err("provide an input path, '-', or --family".into()),
    };
    if g.num_vertices() < 2 {
        return Err("dimension computations need at least 2 vertices".into());
    }
    check_cap(g.num_vertices())?;
    Ok(g)
}

fn read_graph_file(path: &str) -> Result<Graph, String> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| e.to_string())?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    gio::from_str_auto(&text).map_err(|e| format!("{path}: {e}"))
}

fn write_graph(g: &Graph, format: GraphFormat, output: Option<&str>) -> Result<(), String> {
    let text = match format {
        GraphFormat::Edges => gio::to_edge_list(g),
        GraphFormat::Json => gio::to_json(g) + "\n",
    };
    write_text(&text, output)
}

fn write_text(text: &str, output: Option<&str>) -> Result<(), String> {
    match output {
        None | Some("-") => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{path}: {e}")),
    }
}

fn load_corpus(arg: &str) -> Result<Vec<FamilySpec>, String> {
    if arg == "builtin" {
        return Ok(corpus::builtin_corpus());
    }
    let text = if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| e.to_string())?;
        buf
    } else {
        std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?
    };
    corpus::parse_corpus(&text).map_err(|e| e.to_string())
}
