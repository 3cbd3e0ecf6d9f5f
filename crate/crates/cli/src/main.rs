use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopf_forest::combinatorics::DegreeCaps;
use hopf_forest::iso::IsoId;
use hopf_forest::report::VerificationReport;
use hopf_forest::structures::{
    AlgebraId, AlphabetId, HeapGL, IrreduciblePbts, IrreduciblePerms, OrderedGL, QSym, Shuffle,
    Tensor, Weights,
};

mod commands;
mod config;

use commands::CmdResult;
use config::Settings;

/// Builds the algebra named by `$id` and evaluates `$body` with it bound to `$h`.
macro_rules! with_algebra {
    ($id:expr, $caps:expr, |$h:ident| $body:expr) => {{
        let caps: DegreeCaps = $caps;
        match $id {
            AlgebraId::Ho => {
                let $h = OrderedGL::new(caps);
                $body
            }
            AlgebraId::Hho => {
                let $h = HeapGL::new(caps);
                $body
            }
            AlgebraId::QSym => {
                let $h = QSym { caps };
                $body
            }
            AlgebraId::Shuffle(AlphabetId::IrreduciblePbt) => {
                let $h = Shuffle {
                    alphabet: IrreduciblePbts { caps },
                };
                $body
            }
            AlgebraId::Shuffle(AlphabetId::IrreduciblePerm) => {
                let $h = Shuffle {
                    alphabet: IrreduciblePerms { caps },
                };
                $body
            }
            AlgebraId::Shuffle(AlphabetId::Weights) => {
                let $h = Shuffle {
                    alphabet: Weights { caps },
                };
                $body
            }
            AlgebraId::Tensor(AlphabetId::IrreduciblePbt) => {
                let $h = Tensor {
                    alphabet: IrreduciblePbts { caps },
                };
                $body
            }
            AlgebraId::Tensor(AlphabetId::IrreduciblePerm) => {
                let $h = Tensor {
                    alphabet: IrreduciblePerms { caps },
                };
                $body
            }
            AlgebraId::Tensor(AlphabetId::Weights) => {
                let $h = Tensor {
                    alphabet: Weights { caps },
                };
                $body
            }
        }
    }};
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "hopf-forest",
    version,
    about = "Compute in Hopf algebras of trees, words and permutations"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Settings file with `max_degree`, `tree_cap` and `perm_cap` entries.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Element {
    #[arg(long, value_parser = parse_algebra)]
    algebra: AlgebraId,

    /// Operands are LinComb JSON, inline or as @path.
    #[arg(long)]
    json: bool,

    element: String,
}

#[derive(Subcommand)]
enum Command {
    /// List every object of a kind and degree in canonical order.
    Enumerate {
        kind: String,
        degree: usize,
    },
    Product {
        #[arg(long, value_parser = parse_algebra)]
        algebra: AlgebraId,
        /// Operands are LinComb JSON, inline or as @path.
        #[arg(long)]
        json: bool,
        left: String,
        right: String,
    },
    Coproduct(Element),
    Antipode(Element),
    /// First Eulerian idempotent.
    Eulerian(Element),
    CoradicalLevel(Element),
    IsPrimitive(Element),
    /// Apply ψ (planar binary to ordered trees) or φ (permutations to heap-ordered trees).
    Bij {
        #[arg(long, value_parser = parse_iso)]
        which: IsoId,
        #[arg(long)]
        inverse: bool,
        object: String,
    },
    VerifyAxioms {
        #[arg(long, value_parser = parse_algebra)]
        algebra: AlgebraId,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    VerifyIso {
        #[arg(long, value_parser = parse_iso)]
        which: IsoId,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Write the triangularity certificates as JSON.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Product structure constants as CSV.
    ExportStructureConstants {
        #[arg(long, value_parser = parse_algebra)]
        algebra: AlgebraId,
        #[arg(long)]
        max_degree: Option<usize>,
    },
}

fn parse_algebra(s: &str) -> Result<AlgebraId, String> {
    s.parse().map_err(|e: hopf_forest::Error| e.to_string())
}

fn parse_iso(s: &str) -> Result<IsoId, String> {
    s.parse().map_err(|e: hopf_forest::Error| e.to_string())
}

enum Outcome {
    Done(String),
    Verified(VerificationReport),
}

fn run(cli: &Cli, settings: &Settings) -> CmdResult<Outcome> {
    let caps = settings.caps;
    let format = cli.format;
    let degree = |d: Option<usize>| d.unwrap_or(settings.default_max_degree);
    Ok(match &cli.command {
        Command::Enumerate { kind, degree } => {
            Outcome::Done(commands::enumerate_cmd(kind, *degree, caps, format)?)
        }
        Command::Product {
            algebra,
            json,
            left,
            right,
        } => Outcome::Done(with_algebra!(*algebra, caps, |h| commands::product(
            &h, left, right, *json, format
        ))?),
        Command::Coproduct(e) => {
            Outcome::Done(with_algebra!(e.algebra, caps, |h| commands::coproduct(
                &h, &e.element, e.json, format
            ))?)
        }
        Command::Antipode(e) => {
            Outcome::Done(with_algebra!(e.algebra, caps, |h| commands::antipode_cmd(
                &h, &e.element, e.json, format
            ))?)
        }
        Command::Eulerian(e) => {
            Outcome::Done(with_algebra!(e.algebra, caps, |h| commands::eulerian_cmd(
                &h, &e.element, e.json, format
            ))?)
        }
        Command::CoradicalLevel(e) => Outcome::Done(with_algebra!(e.algebra, caps, |h| {
            commands::coradical_level_cmd(&h, &e.element, e.json, format)
        })?),
        Command::IsPrimitive(e) => Outcome::Done(with_algebra!(e.algebra, caps, |h| {
            commands::is_primitive_cmd(&h, &e.element, e.json, format)
        })?),
        Command::Bij {
            which,
            inverse,
            object,
        } => Outcome::Done(commands::bij(*which, *inverse, object, format)?),
        Command::VerifyAxioms {
            algebra,
            max_degree,
        } => Outcome::Verified(with_algebra!(*algebra, caps, |h| {
            commands::verify_axioms_cmd(&h, degree(*max_degree))
        })?),
        Command::VerifyIso {
            which,
            max_degree,
            emit,
        } => Outcome::Verified(commands::verify_iso_cmd(
            *which,
            degree(*max_degree),
            caps,
            emit.as_deref(),
        )?),
        Command::ExportStructureConstants {
            algebra,
            max_degree,
        } => {
            let csv = with_algebra!(*algebra, caps, |h| commands::export_structure_constants(
                &h,
                degree(*max_degree)
            ))?;
            Outcome::Done(csv.trim_end().to_string())
        }
    })
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), String> {
    let mut text = text.to_string();
    if !text.is_empty() {
        text.push('\n');
    }
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display()))
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = match Settings::load(cli.config.as_deref()) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let outcome = match run(&cli, &settings) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match outcome {
        Outcome::Done(text) => match write_output(cli.output.as_deref(), &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Outcome::Verified(report) => {
            let body = match cli.format {
                Format::Text => {
                    let full = report.to_string();
                    // the summary line is printed separately, always last on stdout
                    full.rsplit_once('\n')
                        .map(|(b, _)| b.to_string())
                        .unwrap_or_default()
                }
                Format::Json => report.to_json(),
            };
            if let Err(e) = write_output(cli.output.as_deref(), &body) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            println!("{}", report.summary_line());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
