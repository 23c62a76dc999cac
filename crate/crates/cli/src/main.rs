//! `abs-spectra`: ABS matrices, spectra, energies, indices, characteristic
//! polynomials and identity checks from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! or I/O errors.

mod graph_spec;
mod output;

use std::env;
use std::fmt;
use std::process::ExitCode;

use abs_spectra::linalg::{char_poly, poly_from_roots};
use abs_spectra::spectra::{abs_matrix, adjacency_matrix, path_abs_charpoly};
use abs_spectra::verifier::{
    default_suite, has_blocking_failures, reports_to_csv, reports_to_json, run_check, CheckId,
    GraphCase, DEFAULT_TOLERANCE,
};
use abs_spectra::{Graph, Indices, SymMatrix, TransformKind};
use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

/// Environment variable overriding the default verification tolerance.
const TOL_ENV: &str = "ABS_SPECTRA_TOL";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

fn lib_error(e: abs_spectra::Error) -> CliError {
    CliError::Usage(e.to_string())
}

#[derive(Parser)]
#[command(
    name = "abs-spectra",
    version,
    about = "ABS spectra, energies and identity checks for simple graphs"
)]
struct Cli {
    /// Emit CSV instead of JSON.
    #[arg(long, global = true)]
    csv: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Graph spec, e.g. `cycle:6`, `complete_bipartite:2:3`,
    /// `splitting:cycle:4:k=2` or `file:graph.txt`.
    #[arg(long = "graph", value_name = "SPEC")]
    spec: String,
}

impl GraphArg {
    fn load(&self) -> Result<Graph, CliError> {
        graph_spec::parse(&self.spec)
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MatrixChoice {
    /// Use the ABS matrix.
    #[arg(long)]
    abs: bool,
    /// Use the adjacency matrix.
    #[arg(long)]
    adjacency: bool,
}

impl MatrixChoice {
    fn matrix(&self, g: &Graph) -> SymMatrix {
        if self.abs {
            abs_matrix(g).into_sym()
        } else {
            adjacency_matrix(g)
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    /// Faddeev-LeVerrier.
    Fl,
    /// Product of `(x - eigenvalue)`.
    Roots,
    /// Path recurrence; ABS matrix of a path on at least 5 vertices only.
    Recurrence,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Default,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph: `gen cycle 6`, `gen complete_bipartite 2 3`.
    Gen {
        kind: String,
        params: Vec<String>,
        /// Emit the edge-list text format (takes precedence over `--csv`).
        #[arg(long)]
        edge_list: bool,
    },
    /// Load a graph from an edge-list or JSON file.
    Load {
        path: String,
        /// Emit the edge-list text format (takes precedence over `--csv`).
        #[arg(long)]
        edge_list: bool,
    },
    /// Apply a transform: subdivision, semitotal_point, semitotal_line,
    /// splitting or shadow.
    Transform {
        kind: String,
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        graph: GraphArg,
        /// Emit the edge-list text format (takes precedence over `--csv`).
        #[arg(long)]
        edge_list: bool,
    },
    /// Print the ABS or adjacency matrix.
    Matrix {
        #[command(flatten)]
        which: MatrixChoice,
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Print the eigenvalues in ascending order.
    Spectrum {
        #[command(flatten)]
        which: MatrixChoice,
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Print spectrum, energy, sum of squared eigenvalues and its
    /// combinatorial value (2m for adjacency, 2(m - H) for ABS).
    Energy {
        #[command(flatten)]
        which: MatrixChoice,
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Print the degree-based indices.
    Indices {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Print characteristic polynomial coefficients, constant term first.
    Charpoly {
        #[command(flatten)]
        which: MatrixChoice,
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value = "fl")]
        via: Via,
    },
    /// Run identity checks. Without `--graph` the default suite is used.
    Verify {
        #[arg(long, value_enum, conflicts_with = "graph")]
        suite: Option<Suite>,
        /// Run only this check.
        #[arg(long, value_name = "ID")]
        check: Option<String>,
        #[arg(long, value_name = "SPEC")]
        graph: Option<String>,
        /// Tolerance; defaults to $ABS_SPECTRA_TOL, then 1e-8.
        #[arg(long)]
        tol: Option<f64>,
        /// k values for the splitting and shadow checks.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        k: Vec<usize>,
    },
}

fn tolerance(flag: Option<f64>) -> Result<f64, CliError> {
    let tol = match (flag, env::var(TOL_ENV)) {
        (Some(t), _) => t,
        (None, Ok(text)) => text
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{TOL_ENV}=`{text}` is not a number")))?,
        (None, Err(_)) => DEFAULT_TOLERANCE,
    };
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(CliError::Usage(format!(
            "tolerance must be positive, got {tol}"
        )))
    }
}

fn emit_graph(g: &Graph, format: Format, edge_list: bool) -> String {
    if edge_list {
        abs_spectra::graph::to_edge_list(g)
    } else {
        output::graph(g, format)
    }
}

/// Text for standard output plus whether a check failed.
fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let format = if cli.csv { Format::Csv } else { Format::Json };
    let text = match cli.command {
        Command::Gen {
            kind,
            params,
            edge_list,
        } => {
            let params: Vec<&str> = params.iter().map(String::as_str).collect();
            let g = Graph::generate(graph_spec::family(&kind, &params)?).map_err(lib_error)?;
            emit_graph(&g, format, edge_list)
        }
        Command::Load { path, edge_list } => {
            emit_graph(&graph_spec::load_file(&path)?, format, edge_list)
        }
        Command::Transform {
            kind,
            k,
            graph,
            edge_list,
        } => {
            let t = TransformKind::from_name(&kind, k).map_err(lib_error)?;
            let g = t.apply(&graph.load()?).map_err(lib_error)?;
            emit_graph(&g, format, edge_list)
        }
        Command::Matrix { which, graph } => output::matrix(&which.matrix(&graph.load()?), format),
        Command::Spectrum { which, graph } => {
            let m = which.matrix(&graph.load()?);
            output::spectrum(
                &abs_spectra::linalg::eigenvalues_symmetric(&m).map_err(lib_error)?,
                format,
            )
        }
        Command::Energy { which, graph } => {
            let g = graph.load()?;
            let spectrum =
                abs_spectra::linalg::eigenvalues_symmetric(&which.matrix(&g)).map_err(lib_error)?;
            let m = g.size() as f64;
            let check = if which.abs {
                2.0 * (m - Indices::of(&g).harmonic)
            } else {
                2.0 * m
            };
            output::energy(&spectrum, check, format)
        }
        Command::Indices { graph } => output::indices(&Indices::of(&graph.load()?), format),
        Command::Charpoly { which, graph, via } => {
            let g = graph.load()?;
            let m = which.matrix(&g);
            let (name, poly) = match via {
                Via::Fl => ("fl", char_poly(&m).map_err(lib_error)?),
                Via::Roots => {
                    let roots =
                        abs_spectra::linalg::eigenvalues_symmetric(&m).map_err(lib_error)?;
                    ("roots", poly_from_roots(roots.iter()))
                }
                Via::Recurrence => {
                    if !which.abs || !g.is_path() {
                        return Err(CliError::Usage(
                            "--via recurrence needs --abs and a path graph".into(),
                        ));
                    }
                    (
                        "recurrence",
                        path_abs_charpoly(g.order()).map_err(lib_error)?,
                    )
                }
            };
            output::charpoly(name, &poly, format)
        }
        Command::Verify {
            suite: _,
            check,
            graph,
            tol,
            k,
        } => {
            let tol = tolerance(tol)?;
            let checks = match check {
                Some(id) => vec![id.parse::<CheckId>().map_err(lib_error)?],
                None => CheckId::ALL.to_vec(),
            };
            let mut cases = match graph {
                Some(spec) => vec![GraphCase::new(spec.clone(), graph_spec::parse(&spec)?)],
                None => default_suite(),
            };
            if !k.is_empty() {
                for case in &mut cases {
                    case.params.ks = k.clone();
                }
            }
            let reports = if checks.len() == CheckId::ALL.len() {
                abs_spectra::verifier::run_suite(&cases, tol).map_err(lib_error)?
            } else {
                let mut out = Vec::new();
                for case in &cases {
                    for &id in &checks {
                        out.extend(run_check(id, case, tol).map_err(lib_error)?);
                    }
                }
                out
            };
            let text = match format {
                Format::Json => reports_to_json(&reports) + "\n",
                Format::Csv => reports_to_csv(&reports).map_err(lib_error)?,
            };
            return Ok((text, has_blocking_failures(&reports)));
        }
    };
    Ok((text, false))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, failed)) => {
            print!("{text}");
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("abs-spectra: {e}");
            ExitCode::from(2)
        }
    }
}
