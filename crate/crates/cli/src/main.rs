//! Command-line driver: constructs the Pfaffian ideals and runs the
//! verification suites, emitting machine-readable reports.

mod commands;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "campedelli", version, about = "Exact verification toolkit for serial-unprojection Pfaffian ideals and a Z/6-invariant surface configuration")]
struct Cli {
    /// Output format for reports and listings.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for randomized parameter and prime choices.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Maximum S-pairs per basis computation (overrides UNPROJ_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Zero out per-check timings for byte-reproducible reports.
    #[arg(long, global = true)]
    no_timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the named generators of a stage ideal.
    Construct {
        /// Number of variable pairs (2..=6).
        #[arg(long)]
        n: usize,
        /// Unprojection stage (0..=n).
        #[arg(long)]
        stage: usize,
        /// Work over a prime field instead of the rationals.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Run a verification suite.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Re-emit a previously written JSON report.
    Report {
        /// Path to a JSON report.
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Structural identities, counts, degeneration and dimension ladder
    /// for the generic family at one size.
    Structural {
        /// Number of variable pairs (2..=6).
        #[arg(long)]
        n: usize,
        /// Prime for the dimension computations.
        #[arg(long, default_value_t = 31991)]
        prime: u64,
    },
    /// The surface configuration: table conformance, invariance,
    /// dimensions, reduced-ideal match and the cone statement.
    Campedelli {
        /// JSON file with eight field-element strings.
        #[arg(long)]
        params: Option<PathBuf>,
        /// Prime for the concrete-parameter checks.
        #[arg(long, default_value_t = 103)]
        prime: u64,
        /// Re-run the generator table and invariance checks with the
        /// parameters kept symbolic (always exact; on by default).
        #[arg(long, default_value_t = true)]
        symbolic_r: bool,
    },
    /// Hilbert series of the reduced quotient at seeded random
    /// parameters over several primes, plus the resolution identities.
    Hilbert {
        /// JSON file with eight field-element strings (used in addition
        /// to the seeded draws).
        #[arg(long)]
        params: Option<PathBuf>,
        /// Extra prime to test besides the built-in ones.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Fixed-point analysis for one group element.
    FixedLocus {
        /// Which element: the square or the cube of the generator.
        #[arg(long, value_enum)]
        element: ElementArg,
        /// Prime (must be 1 mod 6) for the dimension checks.
        #[arg(long, default_value_t = 103)]
        prime: u64,
    },
    /// Staged singular-locus probe of the reduced cone.
    Smoothness {
        /// Prime field for the probe.
        #[arg(long, default_value_t = 103)]
        prime: u64,
        /// Cap on the number of adjoined Jacobian minors.
        #[arg(long, default_value_t = 512)]
        max_minors: usize,
        /// Minors added between dimension recomputations.
        #[arg(long, default_value_t = 16)]
        batch: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ElementArg {
    G2,
    G3,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = commands::resolve_budget(cli.budget);
    let outcome = match &cli.command {
        Command::Construct { n, stage, prime } => {
            commands::construct(*n, *stage, *prime, cli.format == Format::Json)
        }
        Command::Verify(v) => {
            let report = match v {
                VerifyCommand::Structural { n, prime } => {
                    commands::verify_structural(*n, *prime, &budget)
                }
                VerifyCommand::Campedelli {
                    params,
                    prime,
                    symbolic_r,
                } => commands::verify_campedelli(
                    params.as_deref(),
                    *prime,
                    *symbolic_r,
                    cli.seed,
                    &budget,
                ),
                VerifyCommand::Hilbert { params, prime } => {
                    commands::verify_hilbert(params.as_deref(), *prime, cli.seed, &budget)
                }
                VerifyCommand::FixedLocus { element, prime } => commands::verify_fixed_locus(
                    matches!(element, ElementArg::G2),
                    *prime,
                    cli.seed,
                    &budget,
                ),
                VerifyCommand::Smoothness {
                    prime,
                    max_minors,
                    batch,
                } => commands::verify_smoothness(*prime, *max_minors, *batch, cli.seed, &budget),
            };
            report.map(|mut report| {
                if cli.no_timings {
                    report.strip_timings();
                }
                let text = match cli.format {
                    Format::Json => report.to_json(),
                    Format::Text => report.to_text(),
                };
                (text, report.exit_code())
            })
        }
        Command::Report { input } => commands::reprint(input, cli.format == Format::Json),
    };
    match outcome {
        Ok((text, code)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                println!("{text}");
            }
            ExitCode::from(code as u8)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
