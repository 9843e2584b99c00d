//! borelkit: batch front end over the invariant library. All results go to
//! stdout as JSON lines (or tables with --pretty); timing goes to stderr.
//!
//! Exit codes: 0 success, 2 formula/oracle mismatch, 3 input error,
//! 4 resource limit.

mod commands;
mod output;
mod suites;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use borelkit_core::Error;

#[derive(Parser)]
#[command(
    name = "borelkit",
    version,
    about = "Invariants of Borel-type monomial ideals"
)]
pub struct Cli {
    /// Emit JSON lines on stdout (the default; kept for symmetry).
    #[arg(long, global = true)]
    pub json: bool,
    /// Render human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Seed for the deterministic instance generators.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cap on candidate multidegrees in the homology oracle
    /// (overrides the BORELKIT_LIMIT environment variable).
    #[arg(long = "limit-lcm", global = true)]
    pub limit_lcm: Option<usize>,
    /// Report Betti numbers of the ideal or of the quotient module.
    #[arg(long, global = true, value_enum, default_value_t = ModuleView::Ideal)]
    pub module: ModuleView,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModuleView {
    Ideal,
    #[value(name = "s-mod-i")]
    SModI,
}

impl ModuleView {
    pub fn label(self) -> &'static str {
        match self {
            ModuleView::Ideal => "ideal",
            ModuleView::SModI => "s-mod-i",
        }
    }
}

/// Ideal input: a JSON document file, inline Borel generators, or a
/// t-spread Veronese triple.
#[derive(clap::Args, Clone)]
pub struct IdealInput {
    /// Path to an ideal JSON document.
    #[arg(long)]
    pub ideal: Option<std::path::PathBuf>,
    /// Ambient variable count for inline generators.
    #[arg(long)]
    pub n: Option<usize>,
    /// Exponent bound for inline Borel generators (omit for unbounded).
    #[arg(long)]
    pub k: Option<u32>,
    /// Inline Borel generator, e.g. "x2*x4" (repeatable, commas allowed).
    #[arg(long)]
    pub borel: Vec<String>,
    /// t-spread Veronese parameters as "n,d,t".
    #[arg(long)]
    pub tspread: Option<String>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Expand an ideal presentation into its minimal generators.
    Expand {
        #[command(flatten)]
        input: IdealInput,
        /// Print only the generator count.
        #[arg(long)]
        count: bool,
    },
    /// Graded Betti numbers by formula and by the homology oracle.
    Betti {
        #[command(flatten)]
        input: IdealInput,
        /// Include the multigraded table from the oracle.
        #[arg(long)]
        multigraded: bool,
    },
    /// Minimal primes of a squarefree ideal with height and multiplicity.
    Minprimes {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Multiplicity by the first-block formula and the cover oracle.
    Mult {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Analytic spread by the first-block formula and the rank oracle.
    Aspread {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Homological shift ideals; --profile walks every degree.
    Hs {
        #[command(flatten)]
        input: IdealInput,
        /// Homological degree of the shift.
        #[arg(long, default_value_t = 1)]
        j: u32,
        /// Full profile over all degrees with invariants.
        #[arg(long)]
        profile: bool,
    },
    /// t-spread Veronese ideals: generators, shifts, quotient order.
    Tspread {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        t: usize,
        /// Also compute the j-th shift ideal.
        #[arg(long)]
        hs: Option<u32>,
        /// Verify the first-shift linear-quotient order.
        #[arg(long)]
        check_lq: bool,
    },
    /// Run a property suite on seeded random instances.
    Check {
        /// One of: betti, hs, mult, aspread, lq, regular-decomp, tspread, all.
        suite: suites::SuiteName,
        /// Instance counts per suite.
        #[arg(long, value_enum, default_value_t = suites::SuiteSize::Small)]
        size: suites::SuiteSize,
    },
    /// Every invariant of one ideal, formula and oracle side by side.
    Invariants {
        #[command(flatten)]
        input: IdealInput,
    },
}

fn main() -> ExitCode {
    // Usage problems are input errors (exit 3); clap's default of 2 is
    // reserved for formula/oracle mismatches.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(3);
        }
    };
    let started = Instant::now();
    let outcome = run(&cli);
    eprintln!("# elapsed_ms={}", started.elapsed().as_millis());
    match outcome {
        Ok(mismatch_free) => {
            if mismatch_free {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

/// Ok(true) = clean run; Ok(false) = a formula/oracle mismatch was reported.
fn run(cli: &Cli) -> Result<bool, Error> {
    match &cli.command {
        Command::Expand { input, count } => commands::expand(cli, input, *count),
        Command::Betti { input, multigraded } => commands::betti(cli, input, *multigraded),
        Command::Minprimes { input } => commands::minprimes(cli, input),
        Command::Mult { input } => commands::mult(cli, input),
        Command::Aspread { input } => commands::aspread(cli, input),
        Command::Hs { input, j, profile } => commands::hs(cli, input, *j, *profile),
        Command::Tspread {
            n,
            d,
            t,
            hs,
            check_lq,
        } => commands::tspread(cli, *n, *d, *t, *hs, *check_lq),
        Command::Check { suite, size } => suites::run(cli, *suite, *size),
        Command::Invariants { input } => commands::invariants(cli, input),
    }
}

pub fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::ResourceLimit(_) => 4,
        _ => 3,
    }
}

/// Resolved oracle cap: flag, then environment, then the default.
pub fn oracle_limit(cli: &Cli) -> usize {
    if let Some(limit) = cli.limit_lcm {
        return limit;
    }
    if let Ok(env) = std::env::var("BORELKIT_LIMIT") {
        if let Ok(parsed) = env.parse() {
            return parsed;
        }
    }
    10_000
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code_for(&Error::ResourceLimit("x".into())), 4);
        assert_eq!(exit_code_for(&Error::ZeroIdeal), 3);
        assert_eq!(
            exit_code_for(&Error::Parse {
                column: 1,
                message: "bad".into()
            }),
            3
        );
    }
}
