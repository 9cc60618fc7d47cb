//! Command-line front end. Exit codes: 0 success, 1 domain failure, 2 usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand};

use crate::blocks::decompose_three_cycles;
use crate::decomposition::Decomposition;
use crate::error::Error;
use crate::format::{parse, serialize};
use crate::four_phase::{checkerboard, decompose_4k, FactorSplit};
use crate::graph::TorusDims;
use crate::render::{render_svg, RenderStyle};
use crate::search::{search, SearchOutcome, DEFAULT_NODE_LIMIT};
use crate::special::{
    c6_decompose, construct_with, feasibility, odd_decompose, FeasibilityVerdict,
};
use crate::validate::validate;

/// Largest edge count for which `--auto` falls back to exhaustive search.
const AUTO_SEARCH_MAX_EDGES: usize = 96;

#[derive(Parser, Debug)]
#[command(
    name = "torus-decomp",
    version,
    about = "Cycle decompositions of the torus C_m x C_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a decomposition with one of the known constructions.
    Decompose(DecomposeArgs),
    /// Check a decomposition file.
    Verify { file: PathBuf },
    /// Exhaustive search for a decomposition into k-cycles.
    Search {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Report what is known about decomposing C_m x C_n into k-cycles.
    Feasible {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Draw a decomposition file as SVG.
    Render {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        #[arg(long, default_value_t = 40.0)]
        cell_size: f64,
    },
}

#[derive(Args, Debug)]
#[command(group(
    ArgGroup::new("method")
        .required(true)
        .args(["three_cycles", "four_phase", "c6", "odd", "checkerboard", "auto"])
))]
struct DecomposeArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    /// Three cycles of length 2mn/3 (3 must divide m or n).
    #[arg(long)]
    three_cycles: bool,
    /// Cycles of length k on a torus whose sides and k are multiples of 4.
    #[arg(long, requires = "k")]
    four_phase: bool,
    /// 6-cycles.
    #[arg(long)]
    c6: bool,
    /// Cycles of length max(m, n) for odd m, n.
    #[arg(long)]
    odd: bool,
    /// Unit squares.
    #[arg(long)]
    checkerboard: bool,
    /// Pick a construction from the feasibility verdict, searching small open cases.
    #[arg(long, requires = "k")]
    auto: bool,
    /// Cycle length.
    #[arg(long)]
    k: Option<usize>,
    /// Cross-strand factor of k/4 for --four-phase.
    #[arg(long, requires_all = ["four_phase", "h"])]
    g: Option<usize>,
    /// Along-strand factor of k/4 for --four-phase.
    #[arg(long, requires_all = ["four_phase", "g"])]
    h: Option<usize>,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

/// A failed subcommand. Verdicts go to stdout, errors to stderr.
struct Failure {
    code: u8,
    msg: String,
    stdout: bool,
}

/// Text for stdout on success.
type Outcome = std::result::Result<String, Failure>;

/// A negative answer (failed verification, impossibility verdict).
fn fail(msg: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        msg: msg.into(),
        stdout: true,
    }
}

fn error(code: u8, msg: impl Into<String>) -> Failure {
    Failure {
        code,
        msg: format!("error: {}", msg.into()),
        stdout: false,
    }
}

fn domain(e: Error) -> Failure {
    error(1, e.to_string())
}

fn read(path: &Path) -> std::result::Result<Decomposition, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| error(1, format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| fail(format!("FAIL: {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    fs::write(path, text).map_err(|e| error(1, format!("{}: {e}", path.display())))
}

fn emit(d: &Decomposition, output: Option<&Path>, summary: String) -> Outcome {
    match output {
        Some(path) => {
            write_file(path, &serialize(d))?;
            Ok(format!("{summary}\n"))
        }
        None => Ok(serialize(d)),
    }
}

fn decompose(a: &DecomposeArgs) -> Outcome {
    let dims = TorusDims::new(a.m, a.n).map_err(domain)?;
    let d = if a.three_cycles {
        decompose_three_cycles(dims)
    } else if a.c6 {
        c6_decompose(dims)
    } else if a.odd {
        if a.m <= a.n {
            odd_decompose(dims)
        } else {
            odd_decompose(dims.transposed()).map(|d| d.transposed())
        }
    } else if a.checkerboard {
        checkerboard(dims)
    } else if a.four_phase {
        let k = a.k.expect("clap enforces --k");
        if !a.m.is_multiple_of(4) || !a.n.is_multiple_of(4) || !k.is_multiple_of(4) {
            return Err(error(1, "--four-phase needs m, n and k divisible by 4"));
        }
        let split = a.g.zip(a.h).map(|(g, h)| FactorSplit { g, h });
        decompose_4k(a.m / 4, a.n / 4, k / 4, split)
    } else {
        return auto(dims, a.k.expect("clap enforces --k"), a.output.as_deref());
    }
    .map_err(domain)?;
    let summary = validate(&d).to_string();
    emit(&d, a.output.as_deref(), summary)
}

fn auto(dims: TorusDims, k: usize, output: Option<&Path>) -> Outcome {
    match feasibility(k, dims.m(), dims.n()) {
        FeasibilityVerdict::ConstructibleHere(method) => {
            let d = construct_with(method, k, dims).map_err(domain)?;
            emit(&d, output, format!("{} via {method}", validate(&d)))
        }
        FeasibilityVerdict::OpenUnknown if dims.edge_count() <= AUTO_SEARCH_MAX_EDGES => {
            match search(dims, k, DEFAULT_NODE_LIMIT).map_err(domain)? {
                SearchOutcome::Found {
                    decomposition,
                    nodes,
                } => emit(
                    &decomposition,
                    output,
                    format!("{} via search ({nodes} nodes)", validate(&decomposition)),
                ),
                other => Err(fail(search_line(&other))),
            }
        }
        verdict => Err(fail(verdict.to_string())),
    }
}

fn search_line(outcome: &SearchOutcome) -> String {
    match outcome {
        SearchOutcome::Found {
            decomposition,
            nodes,
        } => {
            format!("FOUND: {} ({nodes} nodes)", validate(decomposition))
        }
        SearchOutcome::ProvedImpossible { nodes } => {
            format!("IMPOSSIBLE (tree exhausted, {nodes} nodes)")
        }
        SearchOutcome::Inconclusive { nodes } => {
            format!("INCONCLUSIVE (node limit reached, {nodes} nodes)")
        }
    }
}

fn execute(cli: Cli) -> Outcome {
    match cli.command {
        Command::Decompose(a) => decompose(&a),
        Command::Verify { file } => {
            let d = read(&file)?;
            let report = validate(&d);
            if report.passed() {
                Ok(format!("{report}\n"))
            } else {
                Err(fail(report.to_string()))
            }
        }
        Command::Search {
            m,
            n,
            k,
            node_limit,
            output,
        } => {
            let dims = TorusDims::new(m, n).map_err(domain)?;
            let outcome = search(dims, k, node_limit).map_err(domain)?;
            match &outcome {
                SearchOutcome::Found { decomposition, .. } => {
                    if let Some(path) = &output {
                        write_file(path, &serialize(decomposition))?;
                    }
                    Ok(format!("{}\n", search_line(&outcome)))
                }
                _ => Err(fail(search_line(&outcome))),
            }
        }
        Command::Feasible { m, n, k } => {
            TorusDims::new(m, n).map_err(domain)?;
            let verdict = feasibility(k, m, n);
            match verdict {
                FeasibilityVerdict::ConstructibleHere(_) | FeasibilityVerdict::OpenUnknown => {
                    Ok(format!("{verdict}\n"))
                }
                _ => Err(fail(verdict.to_string())),
            }
        }
        Command::Render {
            file,
            output,
            cell_size,
        } => {
            if !(cell_size.is_finite() && cell_size > 0.0) {
                return Err(error(2, "--cell-size must be positive"));
            }
            let d = read(&file)?;
            let svg = render_svg(&d, &RenderStyle::with_cell_size(cell_size)).map_err(domain)?;
            write_file(&output, &svg)?;
            Ok(String::new())
        }
    }
}

/// Run the CLI on `args` (including the program name) and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    match execute(cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(f) => {
            let _ = if f.stdout {
                writeln!(out, "{}", f.msg)
            } else {
                writeln!(err, "{}", f.msg)
            };
            f.code
        }
    }
}
