//! Command-line interface.
//!
//! Exit codes: 0 success, 1 computation error (machine-readable JSON error
//! object on stderr), 2 usage error. Data output is deterministic for a
//! fixed configuration; progress lines go to stderr only. The environment
//! variable `SILVERLINE_THREADS` caps the parallelism of the dichotomy
//! verification.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use silverline::commands::{self, CommandError};
use silverline::config::{OutputFormat, RunConfig};

#[derive(Parser)]
#[command(
    name = "silverline",
    about = "Exact silver-number arithmetic, sigma-integer normal forms, and inflation-substitution tilings of the half-line",
    version
)]
struct Cli {
    /// Optional key=value config file; flags override its settings.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Decimal digits for printed approximations (truncated, never rounded up).
    #[arg(long, global = true)]
    digits: Option<u32>,
    /// Isolating-interval width as an exact rational "1/100...".
    #[arg(long, global = true)]
    width: Option<String>,
    /// Output format for commands that support several.
    #[arg(long, global = true)]
    emit: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate silver polynomials of degree N with classification columns.
    Polys { n: usize },
    /// Isolate the silver number of a polynomial given by coefficient bits.
    Root {
        #[arg(long)]
        poly: String,
    },
    /// Rewrite a sigma-integer representation into its normal form.
    NormalForm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bits: String,
    },
    /// Enumerate the first rho-integers of the distinguished base N as CSV.
    Integers {
        n: usize,
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
    /// Build a tiling prefix and its exact endpoints.
    Tile {
        #[arg(long)]
        poly: String,
        /// Substitution strings, e.g. "1,3;1;2"; default: ascending DW rule.
        #[arg(long)]
        rule: Option<String>,
        #[arg(long, default_value_t = 1)]
        start: u8,
        #[arg(long, default_value_t = 50)]
        tiles: usize,
    },
    /// Detect the convergence mode of an inflation-substitution iteration.
    Converge {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        rule: Option<String>,
        #[arg(long, default_value_t = 1)]
        start: u8,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Non-negative matrix operations on companion forms.
    Matrix {
        #[command(subcommand)]
        op: MatrixOp,
    },
    /// Build and exhaustively verify the tiling certificate (L, v0).
    Dichotomy {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 10)]
        degree_bound: usize,
        /// Comma-separated scan ladder, e.g. "4,6,8,10".
        #[arg(long)]
        ladder: Option<String>,
    },
    /// Reproduce the exact rational-L impossibility arguments.
    Impossibility {
        /// supergolden | plastic | golden
        #[arg(long, default_value = "supergolden")]
        case: String,
    },
    /// Run the full acceptance suite, one pass/fail line per criterion.
    VerifyAll,
}

#[derive(Subcommand)]
enum MatrixOp {
    /// Primitivity by the Wielandt power test and the label-gcd criterion.
    Primitive {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "dw")]
        form: String,
    },
    /// Certified Perron data (spectral radius interval, exact eigenvectors).
    Perron {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "dw")]
        form: String,
    },
    /// Intertwiner M with B M = M A between two companion forms.
    Intertwine {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "dw")]
        form_a: String,
        #[arg(long, default_value = "dwt")]
        form_b: String,
    },
}

fn build_config(cli: &Cli) -> Result<RunConfig, CommandError> {
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::load(path).map_err(CommandError::Computation)?,
        None => RunConfig::default(),
    };
    if let Some(d) = cli.digits {
        cfg.digits = d;
    }
    if let Some(w) = &cli.width {
        cfg.set("precision_width", w).map_err(|e| CommandError::Usage(e.to_string()))?;
    }
    if let Some(e) = &cli.emit {
        cfg.output_format = OutputFormat::parse(e).map_err(|err| CommandError::Usage(err.to_string()))?;
    }
    cfg.validate().map_err(|e| CommandError::Usage(e.to_string()))?;
    Ok(cfg)
}

fn dispatch(cli: &Cli, cfg: &RunConfig) -> Result<String, CommandError> {
    match &cli.command {
        Command::Polys { n } => commands::cmd_polys(*n, cfg),
        Command::Root { poly } => commands::cmd_root(poly, cfg),
        Command::NormalForm { n, bits } => commands::cmd_normal_form(*n, bits, cfg),
        Command::Integers { n, count } => commands::cmd_integers(*n, *count, cfg),
        Command::Tile { poly, rule, start, tiles } => {
            commands::cmd_tile(poly, rule.as_deref(), *start, *tiles, cfg)
        }
        Command::Converge { poly, rule, start, budget } => {
            commands::cmd_converge(poly, rule.as_deref(), *start, *budget)
        }
        Command::Matrix { op } => match op {
            MatrixOp::Primitive { poly, form } => commands::cmd_matrix_primitive(poly, form),
            MatrixOp::Perron { poly, form } => commands::cmd_matrix_perron(poly, form, cfg),
            MatrixOp::Intertwine { poly, form_a, form_b } => {
                commands::cmd_matrix_intertwine(poly, form_a, form_b)
            }
        },
        Command::Dichotomy { poly, degree_bound, ladder } => {
            let mut last = 0usize;
            let mut progress = |done: usize, total: usize| {
                // Progress on stderr only; stdout stays byte-deterministic.
                if done * 10 / total.max(1) > last {
                    last = done * 10 / total.max(1);
                    eprintln!("verified {done}/{total} candidates");
                }
            };
            commands::cmd_dichotomy(poly, *degree_bound, ladder.as_deref(), cfg, Some(&mut progress))
        }
        Command::Impossibility { case } => commands::cmd_impossibility(case),
        Command::VerifyAll => {
            let mut progress = |done: usize, total: usize| {
                eprintln!("dichotomy verification: {done}/{total}");
            };
            let results = silverline::acceptance::run_all(Some(&mut progress));
            let mut out = String::new();
            let mut all_ok = true;
            for r in &results {
                out.push_str(&r.line());
                out.push('\n');
                all_ok &= r.passed;
            }
            out.push_str(&format!(
                "{}/{} criteria passed\n",
                results.iter().filter(|r| r.passed).count(),
                results.len()
            ));
            if all_ok {
                Ok(out)
            } else {
                print!("{out}");
                Err(CommandError::Computation(silverline_core::Error::CannotCertify(
                    "acceptance criteria failed".into(),
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match build_config(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{}", commands::error_object(&e));
            return ExitCode::from(commands::exit_code(&e) as u8);
        }
    };
    match dispatch(&cli, &cfg) {
        Ok(out) => {
            print!("{out}");
            std::io::stdout().flush().ok();
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", commands::error_object(&e));
            ExitCode::from(commands::exit_code(&e) as u8)
        }
    }
}
