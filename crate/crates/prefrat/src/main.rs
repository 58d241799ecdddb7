use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use prefrat::analyze::{analyze, What};
use prefrat::format::{AlgebraFile, SubspaceSpec};
use prefrat::report::{rows_json, rows_text};
use prefrat::verify::{verify_algebra, Check, Limits, Status, USelection};
use prefrat_core::corpus::{example_sec2, standard_corpus};
use prefrat_core::{Error, LieAlgebra};

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

/// Subalgebra intervals, chief series and prefrattini subalgebras of solvable
/// Lie algebras over GF(p).
#[derive(Parser)]
#[command(name = "prefrat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Lie algebra axioms of an algebra file.
    Check { file: PathBuf },
    /// Report on one algebra relative to a subalgebra U.
    Analyze {
        file: PathBuf,
        /// U as JSON: {"vectors": [[...], ...]} or a bare array of vectors (default: 0).
        #[arg(long)]
        u: Option<String>,
        /// info, chief, frattini, prefrattini, omega-min or conjugacy.
        #[arg(long, default_value = "info")]
        what: What,
        #[arg(long)]
        json: bool,
    },
    /// Run the structural checks on a file or on the built-in corpus.
    Verify {
        /// Algebra file (omit with --corpus).
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        corpus: bool,
        /// Prime for --corpus: 2, 3 or 5.
        #[arg(long, default_value_t = 2)]
        p: u32,
        /// zero, all-subalgebras or sample:N.
        #[arg(long, default_value = "zero")]
        u_mode: String,
        /// Seed for sample:N.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated check names, or all.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long)]
        json: bool,
    },
    /// Write the (p+3)-dimensional example algebra as an algebra file.
    Example {
        #[arg(long)]
        p: u32,
        /// Output path (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

type Outcome = Result<u8, (u8, String)>;

fn input_error(message: impl ToString) -> (u8, String) {
    (EXIT_INPUT, message.to_string())
}

fn core_error(e: Error) -> (u8, String) {
    match e {
        Error::Resource { .. } => (EXIT_RESOURCE, e.to_string()),
        _ => input_error(e),
    }
}

fn load(path: &Path) -> Result<LieAlgebra, (u8, String)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    AlgebraFile::parse(&text)
        .and_then(|f| f.to_algebra())
        .map_err(|e| input_error(format!("{}: {e}", path.display())))
}

/// Load and require the axioms; reports the violation as an input error.
fn load_valid(path: &Path) -> Result<LieAlgebra, (u8, String)> {
    let algebra = load(path)?;
    algebra
        .validate()
        .map_err(|v| input_error(format!("{}: axiom violation: {v:?}", path.display())))?;
    Ok(algebra)
}

fn run(command: Command) -> Outcome {
    let limits = Limits::from_env().map_err(input_error)?;
    match command {
        Command::Check { file } => {
            let algebra = load(&file)?;
            match algebra.validate() {
                Ok(()) => {
                    println!(
                        "ok: {}-dimensional Lie algebra over GF({})",
                        algebra.dim(),
                        algebra.field().p()
                    );
                    Ok(0)
                }
                Err(v) => Err(input_error(format!("axiom violation: {v:?}"))),
            }
        }
        Command::Analyze { file, u, what, json } => {
            let algebra = load_valid(&file)?;
            let u = match u {
                None => algebra.zero_space(),
                Some(text) => SubspaceSpec::parse(&text)
                    .and_then(|s| s.to_subspace(&algebra))
                    .map_err(|e| input_error(format!("--u: {e}")))?,
            };
            let report = analyze(&algebra, &u, what, limits).map_err(core_error)?;
            if json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.to_text(algebra.labels()));
            }
            Ok(0)
        }
        Command::Verify {
            file,
            corpus,
            p,
            u_mode,
            seed,
            checks,
            json,
        } => {
            let selection = USelection::parse(&u_mode, seed).map_err(input_error)?;
            let checks = Check::parse_list(&checks).map_err(input_error)?;
            let algebras: Vec<(String, LieAlgebra)> = match (file, corpus) {
                (Some(path), false) => {
                    let name = path
                        .file_stem()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_else(|| "algebra".into());
                    vec![(name, load_valid(&path)?)]
                }
                (None, true) => standard_corpus(p)
                    .map_err(input_error)?
                    .into_iter()
                    .map(|e| (e.name, e.algebra))
                    .collect(),
                _ => return Err(input_error("give an algebra file or --corpus")),
            };
            let rows: Vec<_> = algebras
                .iter()
                .flat_map(|(name, algebra)| verify_algebra(name, algebra, &selection, &checks, limits))
                .collect();
            if json {
                print!("{}", rows_json(&rows));
            } else {
                let labels = |name: &str| {
                    algebras
                        .iter()
                        .find(|(n, _)| n == name)
                        .map(|(_, a)| a.labels())
                };
                print!("{}", rows_text(&rows, labels));
            }
            Ok(if rows.iter().any(|r| r.status == Status::Fail) {
                EXIT_FAIL
            } else {
                0
            })
        }
        Command::Example { p, out } => {
            let entry = example_sec2(p).map_err(input_error)?;
            let text = AlgebraFile::from_algebra(&entry.algebra).to_json();
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| input_error(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(0)
        }
    }
}
