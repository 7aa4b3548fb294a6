//! Command-line front end: conversions between positroid representations,
//! seeded verification suites, and inspection of single objects.

mod convert;
mod plabic;
mod report;
mod single;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{ArgGroup, Parser, Subcommand};
use positroid::Prime;

use crate::report::Report;

/// Which field computations run over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSel {
    Q,
    P(Prime),
}

fn parse_field(s: &str) -> Result<FieldSel, String> {
    match s {
        "q" | "Q" => Ok(FieldSel::Q),
        _ => {
            let p = s
                .strip_prefix('p')
                .and_then(|t| t.parse::<u64>().ok())
                .ok_or_else(|| format!("expected `q` or `p<prime>`, got `{s}`"))?;
            Prime::new(p).map(FieldSel::P).map_err(|e| e.to_string())
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "positroid-cli",
    version,
    about = "Positroid varieties: conversions, invariants and verification runs"
)]
struct Cli {
    /// Field for point counts and measurements: `q` (rationals) or `p<prime>`.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    field: FieldSel,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Abort once this many work units have been spent.
    #[arg(long, global = true)]
    max_work: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert between pairs, windows, necklaces and decorated permutations.
    #[command(group(ArgGroup::new("source").required(true).args(["pair", "window", "necklace", "decorated"])))]
    Convert {
        /// `u w k` with u below w in k-Bruhat order.
        #[arg(long, num_args = 3, value_names = ["U", "W", "K"])]
        pair: Option<Vec<String>>,
        /// Bounded affine window such as `[4,3,6,5]`, optionally followed by k.
        #[arg(long, num_args = 1..=2, value_names = ["WINDOW", "K"])]
        window: Option<Vec<String>>,
        /// Grassmann necklace such as `124|234|346|456|562|612`.
        #[arg(long)]
        necklace: Option<String>,
        /// Decorated permutation such as `1- 4 3 2` (fixed points marked + or -).
        #[arg(long)]
        decorated: Option<String>,
    },
    /// Run a seeded invariant suite.
    Verify {
        suite: verify::Suite,
        /// Size bound: permutations in S_n, positroids of G(k, n) for n up to this.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Restrict the classes suite to one k.
        #[arg(long)]
        k: Option<usize>,
        /// Primes for point counts, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        q: Vec<u64>,
        /// Plabic graph file for the plabic suite.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Random samples per item.
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// Cohomology class, Bergeron-Sottile polynomial and duality for a window.
    Class { window: String },
    /// R-polynomial of an interval, with point counts over --field p<prime>.
    Rpoly {
        u: String,
        w: String,
        /// Reduced word for w such as `1 2 1`.
        #[arg(long)]
        word: Option<String>,
    },
    /// Inspect a plabic graph file.
    Plabic {
        #[command(subcommand)]
        action: PlabicCmd,
    },
    /// Total nonnegativity of subspaces and flags (rational field only).
    Tnn {
        #[command(subcommand)]
        action: TnnCmd,
    },
}

#[derive(Subcommand, Debug)]
enum PlabicCmd {
    /// Reducedness, face count and face labels.
    Check { file: PathBuf },
    /// Boundary measurement at the file's edge weights.
    Measure { file: PathBuf },
    /// Trips and the trip permutation.
    Trips { file: PathBuf },
    /// Face labels.
    Labels { file: PathBuf },
    /// Twist of the measured point and the face-label composite.
    Twist { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum TnnCmd {
    /// Whether the column span of a matrix is totally nonnegative.
    Check { matrix: String },
    /// Complete a totally nonnegative subspace to a totally nonnegative flag.
    Complete { matrix: String },
    /// Search for a totally nonnegative subspace between two nested ones.
    Intermediate {
        #[arg(long)]
        lower: String,
        #[arg(long)]
        upper: String,
        /// Largest denominator in the grid search.
        #[arg(long, default_value_t = 50)]
        bound: i64,
    },
}

fn execute(cli: &Cli, report: &mut Report) -> Result<&'static str> {
    let field = cli.field;
    Ok(match &cli.command {
        Command::Convert {
            pair,
            window,
            necklace,
            decorated,
        } => {
            let src = match (pair, window, necklace, decorated) {
                (Some(p), ..) => convert::Source::Pair(p[0].clone(), p[1].clone(), p[2].clone()),
                (_, Some(w), ..) => convert::Source::Window(w[0].clone(), w.get(1).cloned()),
                (_, _, Some(s), _) => convert::Source::Necklace(s.clone()),
                (.., Some(s)) => convert::Source::Decorated(s.clone()),
                _ => bail!("convert needs one of --pair, --window, --necklace, --decorated"),
            };
            convert::run(&src, report)?;
            "convert"
        }
        Command::Verify {
            suite,
            n,
            k,
            q,
            file,
            samples,
        } => {
            let opts = verify::Options {
                n: *n,
                k: *k,
                qs: q.clone(),
                file: file.clone(),
                samples: *samples,
                seed: cli.seed,
            };
            verify::run(*suite, &opts, report)?;
            "verify"
        }
        Command::Class { window } => {
            single::class(window, report)?;
            "class"
        }
        Command::Rpoly { u, w, word } => {
            single::rpoly(u, w, word.as_deref(), field, report)?;
            "rpoly"
        }
        Command::Plabic { action } => {
            let (a, file) = match action {
                PlabicCmd::Check { file } => (plabic::Action::Check, file),
                PlabicCmd::Measure { file } => (plabic::Action::Measure, file),
                PlabicCmd::Trips { file } => (plabic::Action::Trips, file),
                PlabicCmd::Labels { file } => (plabic::Action::Labels, file),
                PlabicCmd::Twist { file } => (plabic::Action::Twist, file),
            };
            plabic::run(a, file, field, report)?;
            "plabic"
        }
        Command::Tnn { action } => {
            let a = match action {
                TnnCmd::Check { matrix } => single::TnnAction::Check(matrix.clone()),
                TnnCmd::Complete { matrix } => single::TnnAction::Complete(matrix.clone()),
                TnnCmd::Intermediate {
                    lower,
                    upper,
                    bound,
                } => single::TnnAction::Intermediate {
                    lower: lower.clone(),
                    upper: upper.clone(),
                    bound: *bound,
                },
            };
            single::tnn(&a, field, report)?;
            "tnn"
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = Report::new(cli.max_work);
    let outcome = execute(&cli, &mut report);
    print!("{report}");
    match outcome {
        Ok(verb) => {
            println!("{}", report.summary(verb, cli.seed));
            if report.failed() == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
