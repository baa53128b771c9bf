//! Command-line front end: exact PRS, recursive PRS, the four subresultant
//! constructions, identity verification, root counting, and size/timing
//! benchmarks. Reports are JSON with every scalar an exact fraction
//! string. Exit codes: 0 ok, 1 domain error or failed verification,
//! 2 usage error.

mod bench;
mod commands;
mod poly_text;
mod report;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};

use recsubres::{monic_rule, sturm_rule, DivisionRule};

#[derive(Parser)]
#[command(
    name = "recsubres",
    version,
    about = "Exact recursive polynomial remainder sequences, subresultants, and real-root counting"
)]
struct Cli {
    /// Emit compact single-line JSON (default is pretty-printed)
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

/// Division rule used for the remainder steps.
#[derive(Clone, Copy, Debug, Default,PartialEq, Eq, ValueEnum)]
enum RuleArg {
    /// alpha = 1, beta = -1 at every step
    #[default]
    Sturm,
    /// alpha = 1, beta = leading coefficient of the remainder
    Monic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum KindArg {
    Classic,
    Recursive,
    Nested,
    Reduced,
}

/// Testing hook: perturb one identity's expected factor so the named
/// identity fails verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum CorruptArg {
    Fundamental,
    Recursive,
    Nested,
    Reduced,
}

#[derive(Subcommand)]
enum Command {
    /// Polynomial remainder sequence of f and g
    Prs {
        f: String,
        g: String,
        #[arg(long, value_enum, default_value_t)]
        rule: RuleArg,
    },
    /// Recursive polynomial remainder sequence of f and g
    Rprs {
        f: String,
        g: String,
        #[arg(long, value_enum, default_value_t)]
        rule: RuleArg,
    },
    /// Subresultant polynomial (and optionally matrix) of one construction
    Subres {
        f: String,
        g: String,
        /// Which construction to evaluate
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Level index k (recursive, nested, and reduced kinds)
        #[arg(long)]
        k: Option<usize>,
        /// Target degree j
        #[arg(long)]
        j: usize,
        /// Include the matrix entries in the report
        #[arg(long)]
        matrix: bool,
        #[arg(long, value_enum, default_value_t)]
        rule: RuleArg,
    },
    /// Count the real roots of f with multiplicity
    Rootcount { f: String },
    /// Recompute both sides of every equivalence identity and report
    /// exact-equality status; exit code is nonzero on any failure
    Verify {
        f: Option<String>,
        g: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        rule: RuleArg,
        /// Seed for a generated instance when no polynomials are given
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, hide = true)]
        corrupt: Option<CorruptArg>,
    },
    /// Matrix sizes and construction+determinant timings per (k, j)
    Bench {
        f: Option<String>,
        g: Option<String>,
        /// Inclusive degree sweep such as 6..12 over fixed-shape inputs
        #[arg(long)]
        sweep: Option<String>,
        /// Emit CSV instead of JSON
        #[arg(long)]
        csv: bool,
        /// Seed for a generated instance when no other input is given
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Debug)]
pub(crate) enum AppError {
    Usage(String),
    Domain(String),
}

impl From<recsubres::Error> for AppError {
    fn from(e: recsubres::Error) -> Self {
        AppError::Domain(e.to_string())
    }
}

fn rule_of(arg: RuleArg) -> Box<dyn DivisionRule> {
    match arg {
        RuleArg::Sturm => Box::new(sturm_rule()),
        RuleArg::Monic => Box::new(monic_rule()),
    }
}

fn run(command: Command, compact: bool) -> Result<i32, AppError> {
    match command {
        Command::Prs { f, g, rule } => {
            let value = commands::cmd_prs(&f, &g, rule_of(rule).as_ref())?;
            report::emit(&value, compact);
            Ok(0)
        }
        Command::Rprs { f, g, rule } => {
            let value = commands::cmd_rprs(&f, &g, rule_of(rule).as_ref())?;
            report::emit(&value, compact);
            Ok(0)
        }
        Command::Subres {
            f,
            g,
            kind,
            k,
            j,
            matrix,
            rule,
        } => {
            let args = commands::SubresArgs {
                f: &f,
                g: &g,
                kind,
                k,
                j,
                matrix,
            };
            let value = commands::cmd_subres(args, rule_of(rule).as_ref())?;
            report::emit(&value, compact);
            Ok(0)
        }
        Command::Rootcount { f } => {
            let value = commands::cmd_rootcount(&f)?;
            report::emit(&value, compact);
            Ok(0)
        }
        Command::Verify {
            f,
            g,
            rule,
            seed,
            corrupt,
        } => {
            let args = verify::VerifyArgs {
                f: f.as_deref(),
                g: g.as_deref(),
                seed,
                corrupt,
            };
            let (value, code) = verify::cmd_verify(args, rule_of(rule).as_ref())?;
            report::emit(&value, compact);
            Ok(code)
        }
        Command::Bench {
            f,
            g,
            sweep,
            csv,
            seed,
        } => {
            let args = bench::BenchArgs {
                f: f.as_deref(),
                g: g.as_deref(),
                sweep: sweep.as_deref(),
                seed,
                csv,
            };
            match bench::cmd_bench(args)? {
                bench::BenchOutput::Json(value) => report::emit(&value, compact),
                bench::BenchOutput::Csv(text) => print!("{text}"),
            }
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command, cli.json) {
        Ok(code) => std::process::exit(code),
        Err(AppError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            std::process::exit(2);
        }
        Err(AppError::Domain(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}
