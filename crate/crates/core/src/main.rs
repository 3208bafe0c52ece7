//! `trispectra` command-line frontend.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.
//! `TRISPECTRA_THREADS` caps the worker pool used by `--parallel`.

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use trispectra::cli::{dispatch, Command, Format, GraphChoice, Rotation, RunConfig};
use trispectra::families::Family;

#[derive(Parser)]
#[command(name = "trispectra", version, about = "Exact spectra and eigenvectors of triangular-board and queens graphs")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Output format; each command documents its default.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Shorthand for `--format json`.
    #[arg(long, global = true, conflicts_with_all = ["format", "csv"])]
    json: bool,
    /// Shorthand for `--format csv`.
    #[arg(long, global = true, conflicts_with = "format")]
    csv: bool,
    /// Write the payload here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Fan independent work items out over threads.
    #[arg(long, global = true)]
    parallel: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Dot,
    Ascii,
    Mtx,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphArg {
    Tri,
    Queens,
    Clique,
    Bipartite,
    G12,
    G13,
    G23x,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    T,
    U,
    V,
    X,
    Y,
}

#[derive(Clone, Copy, ValueEnum)]
enum RotationArg {
    Pos,
    Neg,
}

#[derive(Args)]
struct Sides {
    /// Single board side.
    #[arg(long, conflicts_with_all = ["n_min", "n_max"])]
    n: Option<usize>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
}

impl Sides {
    fn range(&self, default_min: usize) -> Result<RangeInclusive<usize>, String> {
        match (self.n, self.n_min, self.n_max) {
            (Some(n), _, _) => Ok(n..=n),
            (None, lo, Some(hi)) => Ok(lo.unwrap_or(default_min)..=hi),
            _ => Err("give --n or --n-max".into()),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a graph (default JSON; also dot, mtx).
    Build {
        #[arg(long, value_enum)]
        graph: GraphArg,
        /// Board side, clique order, or first side of K_{a,b}.
        #[arg(long)]
        n: usize,
        /// Second side of K_{a,b}.
        #[arg(long, default_value_t = 0)]
        b: usize,
    },
    /// Closed-form spectrum (default JSON; also csv).
    Spectrum {
        #[arg(long, value_enum)]
        graph: GraphArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        b: usize,
        /// Confirm integer multiplicities by exact nullity.
        #[arg(long)]
        verify: bool,
    },
    /// Emit one family vector (default JSON; also ascii).
    Family {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<i64>,
        /// Stencil row for the t family.
        #[arg(long)]
        x: Option<usize>,
        /// Stencil position for the t family.
        #[arg(long)]
        y: Option<usize>,
        #[arg(long, value_enum)]
        rotate: Option<RotationArg>,
    },
    /// Check every family vector on a range of sides (default CSV).
    VerifyFamily {
        /// Omit to check all five families.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        #[command(flatten)]
        sides: Sides,
    },
    /// Stencil basis of the -3 eigenspace with its exact rank.
    BasisLeast {
        #[arg(long)]
        n: usize,
    },
    /// Five-part split of the queens graph (default JSON edge lists; also dot).
    Decompose {
        #[arg(long)]
        n: usize,
    },
    /// Verify the queens split; JSON report.
    VerifyDecomposition {
        #[command(flatten)]
        sides: Sides,
    },
    /// Chained Weyl bounds on the queens eigenvalues (default JSON; also csv).
    WeylBounds {
        /// Board side.
        #[arg(long)]
        n: usize,
        /// Single eigenvalue index; omit for the whole table.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Integer eigenvalues of queens graphs against the predicted set; JSON.
    CheckConjecture {
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1e-6)]
        eps: f64,
    },
    /// Recompute the worked examples and diff against embedded values.
    ReproduceExamples,
    /// Report the boundary search behind the x and y constructors.
    Reconcile {
        #[command(flatten)]
        sides: Sides,
    },
}

fn family(f: FamilyArg) -> Family {
    match f {
        FamilyArg::T => Family::T,
        FamilyArg::U => Family::U,
        FamilyArg::V => Family::V,
        FamilyArg::X => Family::X,
        FamilyArg::Y => Family::Y,
    }
}

fn graph(g: GraphArg) -> GraphChoice {
    match g {
        GraphArg::Tri => GraphChoice::Tri,
        GraphArg::Queens => GraphChoice::Queens,
        GraphArg::Clique => GraphChoice::Clique,
        GraphArg::Bipartite => GraphChoice::Bipartite,
        GraphArg::G12 => GraphChoice::G12,
        GraphArg::G13 => GraphChoice::G13,
        GraphArg::G23x => GraphChoice::G23x,
    }
}

fn config(cli: Cli) -> Result<RunConfig, String> {
    let format = match (cli.format, cli.json, cli.csv) {
        (_, true, _) => Some(Format::Json),
        (_, _, true) => Some(Format::Csv),
        (Some(f), _, _) => Some(match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Dot => Format::Dot,
            FormatArg::Ascii => Format::Ascii,
            FormatArg::Mtx => Format::Mtx,
        }),
        _ => None,
    };
    let command = match cli.command {
        Cmd::Build { graph: g, n, b } => Command::Build { graph: graph(g), n, b },
        Cmd::Spectrum { graph: g, n, b, verify } => Command::Spectrum { graph: graph(g), n, b, verify },
        Cmd::Family { family: f, n, lambda, x, y, rotate } => Command::Family {
            family: family(f),
            n,
            lambda,
            placement: x.zip(y),
            rotation: rotate.map(|r| match r {
                RotationArg::Pos => Rotation::Pos,
                RotationArg::Neg => Rotation::Neg,
            }),
        },
        Cmd::VerifyFamily { family: f, sides } => Command::VerifyFamily { family: f.map(family), sides: sides.range(4)? },
        Cmd::BasisLeast { n } => Command::BasisLeast { n },
        Cmd::Decompose { n } => Command::Decompose { n },
        Cmd::VerifyDecomposition { sides } => Command::VerifyDecomposition { sides: sides.range(4)? },
        Cmd::WeylBounds { n, k } => Command::WeylBounds { n, k },
        Cmd::CheckConjecture { n_min, n_max, eps } => {
            if !(eps > 0.0 && eps < 0.5) {
                return Err("--eps must lie in (0, 0.5)".into());
            }
            Command::CheckConjecture { sides: n_min..=n_max, eps }
        }
        Cmd::ReproduceExamples => Command::ReproduceExamples,
        Cmd::Reconcile { sides } => Command::Reconcile { sides: sides.range(4)? },
    };
    Ok(RunConfig { command, format, parallel: cli.parallel })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = std::env::var("TRISPECTRA_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build_global();
    }
    let out = cli.out.clone();
    let cfg = match config(cli) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let outcome = match dispatch(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &outcome.output) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", outcome.output),
    }
    ExitCode::from(outcome.status as u8)
}
