//! Command-line frontend: argument parsing, the builtin registry and the
//! commands, each producing a [`RunReport`].

pub mod builtins;
pub mod commands;
pub mod error;
pub mod report;

use clap::{Parser, Subcommand};

pub use commands::Options;
pub use error::{CliError, Result};
pub use report::{CheckResult, RunReport};

#[derive(Debug, Parser)]
#[command(name = "jordan", version, about = "Exact verification of Jordan homomorphisms and their counterexamples")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Number of random samples for sampled checks.
    #[arg(long, global = true)]
    pub samples: Option<usize>,

    /// Word length bound for semigroup constructions.
    #[arg(long = "max-length", global = true)]
    pub max_length: Option<usize>,

    /// Replace random samples by exhaustive lattice or basis inputs.
    #[arg(long, global = true)]
    pub exhaustive: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Jordan law and the identities every Jordan homomorphism satisfies.
    VerifyIdentities {
        #[arg(help = builtins::ALGEBRAS)]
        algebra: String,
        #[arg(help = builtins::MAPS)]
        map: String,
    },
    /// Split a Jordan homomorphism by a central idempotent.
    Decompose {
        #[arg(help = builtins::ALGEBRAS)]
        algebra: String,
        #[arg(help = builtins::MAPS)]
        map: String,
    },
    /// The Grassmann-algebra map that is nearly standard but not standard.
    GrassmannDemo {
        #[arg(default_value_t = 4)]
        n: usize,
    },
    /// The semigroup-cocycle construction and its obstruction.
    Pe2Demo {
        #[arg(long, default_value = "default", help = builtins::PRESENTATIONS)]
        presentation: String,
        #[arg(long, default_value = "comm", help = builtins::GENERATORS)]
        generator: String,
    },
    /// The value of a T-ideal on an algebra.
    Tideal {
        #[arg(help = builtins::GENERATORS)]
        generator: String,
        #[arg(help = builtins::ALGEBRAS)]
        algebra: String,
        /// Use span{x v y} instead of the ideal generated by the values.
        #[arg(long)]
        strict: bool,
    },
    /// Class counts of a graded congruence and its inner variant.
    Congruence {
        #[arg(default_value = "default", help = builtins::PRESENTATIONS)]
        presentation: String,
    },
    /// Structural checks on an algebra and its involution.
    Validate {
        #[arg(help = builtins::ALGEBRAS)]
        algebra: String,
    },
    /// Polynomial-coefficient non-standardness certificates.
    Cfin {
        #[arg(help = builtins::ALGEBRAS)]
        algebra: String,
        /// Basis label for the center test, such as e11.
        #[arg(long)]
        element: Option<String>,
    },
}

impl Cli {
    pub fn options(&self) -> Options {
        Options {
            seed: self.seed,
            samples: self.samples,
            max_length: self.max_length,
            exhaustive: self.exhaustive,
        }
    }
}

pub fn run(cli: &Cli) -> Result<RunReport> {
    let opts = cli.options();
    match &cli.command {
        Command::VerifyIdentities { algebra, map } => commands::verify_identities(algebra, map, &opts),
        Command::Decompose { algebra, map } => commands::decompose(algebra, map, &opts),
        Command::GrassmannDemo { n } => commands::grassmann_demo(*n, &opts),
        Command::Pe2Demo { presentation, generator } => commands::pe2_demo(presentation, generator, &opts),
        Command::Tideal { generator, algebra, strict } => commands::tideal(generator, algebra, *strict, &opts),
        Command::Congruence { presentation } => commands::congruence(presentation, &opts),
        Command::Validate { algebra } => commands::validate(algebra, &opts),
        Command::Cfin { algebra, element } => commands::cfin(algebra, element.as_deref(), &opts),
    }
}

/// Runs the parsed command, prints its report and returns the exit code.
pub fn main_with(cli: &Cli) -> i32 {
    match run(cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            report.exit_code()
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            2
        }
    }
}
