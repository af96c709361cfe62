//! `sympmat`: enumeration, orbits, representability, witnesses and strata of
//! rank-2 symplectic matroids.
//!
//! Exit codes: 0 on success, 1 on domain errors, 2 on usage errors.

mod commands;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Debug, Parser)]
#[command(name = "sympmat", version, about = "Rank-2 symplectic matroids, their liftings and certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

/// A symplectic matroid given inline, from a file, or as all of `J_n²`.
#[derive(Debug, Args)]
pub struct MatroidArgs {
    #[arg(long)]
    n: Option<usize>,

    /// Bases as a JSON list of signed pairs, e.g. "[[1,2],[-1,-2]]".
    #[arg(long, conflicts_with_all = ["file", "full"])]
    bases: Option<String>,

    /// JSON document {"n": int, "bases": [[int,int], ...]}.
    #[arg(long, conflicts_with_all = ["bases", "full"])]
    file: Option<PathBuf>,

    /// Every admissible pair.
    #[arg(long, conflicts_with_all = ["bases", "file"])]
    full: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every symplectic matroid on E_n (n <= 3).
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Group matroids into orbits of the signed or the full permutation group.
    Orbits {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = commands::GroupArg::Signed)]
        group: commands::GroupArg,
    },
    /// Liftings, trichotomy and representability of one matroid.
    Representable(MatroidArgs),
    /// A certified exact-rational witness for one matroid.
    Witness(MatroidArgs),
    /// Stratum reports for every representable matroid (n <= 3).
    Classify {
        #[arg(long)]
        n: usize,
    },
    /// Betti numbers of SpG(2,2n), computed two ways.
    Betti {
        #[arg(long)]
        n: usize,
    },
    /// Moment polytopes of one matroid and of its maximal lifting.
    Polytope(MatroidArgs),
    /// Schubert varieties of SpG(2,2n), or the one indexed by --pair.
    Schubert {
        #[arg(long)]
        n: usize,
        /// A signed pair such as "[2,-1]".
        #[arg(long)]
        pair: Option<String>,
    },
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(anyhow::Error),
}

impl Failure {
    pub fn domain(e: impl Into<anyhow::Error>) -> Self {
        Failure::Domain(e.into())
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let report = match &cli.command {
        Command::Enumerate { n } => commands::enumerate(*n)?,
        Command::Orbits { n, group } => commands::orbits(*n, *group)?,
        Command::Representable(m) => commands::representable(&m.resolve()?)?,
        Command::Witness(m) => commands::witness(&m.resolve()?)?,
        Command::Classify { n } => commands::classify(*n)?,
        Command::Betti { n } => commands::betti(*n)?,
        Command::Polytope(m) => commands::polytope(&m.resolve()?)?,
        Command::Schubert { n, pair } => commands::schubert(*n, pair.as_deref())?,
    };
    report.emit(cli.format, cli.out.as_deref()).map_err(Failure::Domain)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n");
            eprintln!("usage: sympmat <COMMAND> [--n N] [--bases JSON | --file PATH | --full] [--format text|json|csv] [--out PATH]");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

impl MatroidArgs {
    fn resolve(&self) -> Result<sympmat_core::SymplecticMatroid, Failure> {
        let need_n = || self.n.ok_or_else(|| Failure::Usage("--n is required with --bases and --full".into()));
        match (&self.bases, &self.file, self.full) {
            (Some(json), None, false) => input::symplectic(need_n()?, &input::parse_pairs(json)?),
            (None, Some(path), false) => {
                let doc = input::read_file(path)?;
                if self.n.is_some_and(|n| n != doc.n) {
                    return Err(Failure::Usage(format!("--n disagrees with n = {} in {}", doc.n, path.display())));
                }
                input::symplectic(doc.n, &doc.bases)
            }
            (None, None, true) => sympmat_core::SymplecticMatroid::full(need_n()?).map_err(Failure::domain),
            _ => Err(Failure::Usage("give exactly one of --bases, --file or --full".into())),
        }
    }
}
