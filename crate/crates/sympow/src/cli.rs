//! Command-line interface: argument parsing and dispatch.
//!
//! Results go to stdout, diagnostics (timing, notes, errors) to stderr.
//! Exit codes: 0 on success, 2 on parse or usage errors, 3 on domain errors
//! (zero/unit ideals, violated strategy preconditions, search caps).

use std::ffi::OsString;
use std::io::Read;
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use crate::asymptotics::{
    alpha_sequence, lower_bound_resurgence, waldschmidt_approx, waldschmidt_exact,
};
use crate::decompose;
use crate::error::{Error, Result};
use crate::output::{to_json, CommandResult, OptionsEcho, OutputDocument};
use crate::parse::parse_ideal;
use crate::polyhedron::{h_to_v, polyhedron_stats, symbolic_polyhedron};
use crate::ring::Ring;
use crate::symbolic::{
    containment_problem, containment_problem_given_a, is_symbolic_equal_ordinary, symbolic_defect,
    symbolic_power, Strategy, SymbolicOptions,
};

#[derive(Parser)]
#[command(
    name = "sympow",
    version,
    about = "Symbolic powers of monomial ideals, in exact arithmetic",
    after_help = "Ideals are written in the grammar \"(x*y, x^2*z)\"; pass \"-\" to read the \
                  expression from stdin. Without --vars the ring is inferred from the \
                  expression in first-appearance order."
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Ordered, comma-separated variable list fixing exponent positions
    #[arg(long, global = true, value_delimiter = ',', value_name = "VARS")]
    vars: Option<Vec<String>>,

    /// Define symbolic powers over the minimal primes instead of all
    /// associated primes
    #[arg(long, global = true)]
    min_primes: bool,

    /// Algorithm for symbolic powers
    #[arg(long, global = true, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,

    /// Sample size for approximated invariants
    #[arg(long, global = true, default_value_t = 10, value_name = "N")]
    sample_size: u32,

    /// Output format on stdout
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Suppress diagnostics on stderr
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Auto,
    Squarefree,
    General,
    Saturation,
}

impl From<StrategyArg> for Strategy {
    fn from(arg: StrategyArg) -> Strategy {
        match arg {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Squarefree => Strategy::Squarefree,
            StrategyArg::General => Strategy::General,
            StrategyArg::Saturation => Strategy::Saturation,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the n-th symbolic power I^(n)
    SymbolicPower { ideal: String, n: u32 },
    /// Irredundant primary decomposition
    PrimaryDecomp { ideal: String },
    /// Associated primes
    AssocPrimes { ideal: String },
    /// Largest height of an associated prime
    BigHeight { ideal: String },
    /// Intersection of the minimal primary components
    MinimalPart { ideal: String },
    /// Does I^(n) equal I^n? (standard definition)
    IsEqualOrdinary { ideal: String, n: u32 },
    /// Smallest a with I^(a) ⊆ I^b, or largest b with I^(a) ⊆ I^b
    #[command(group(ArgGroup::new("direction").required(true).args(["given_a", "given_b"])))]
    Containment {
        ideal: String,
        /// Fix a and search for the largest b
        #[arg(long, value_name = "A")]
        given_a: Option<u32>,
        /// Fix b and search for the smallest a
        #[arg(long, value_name = "B")]
        given_b: Option<u32>,
    },
    /// Number of minimal generators of I^(n) outside I^n
    SymbolicDefect { ideal: String, n: u32 },
    /// The symbolic polyhedron with facet/vertex/ray statistics
    Polyhedron { ideal: String },
    /// The Waldschmidt constant
    #[command(group(ArgGroup::new("wmode").args(["exact", "approx"])))]
    Waldschmidt {
        ideal: String,
        /// Exact value via the symbolic polyhedron (default)
        #[arg(long)]
        exact: bool,
        /// Upper bound from the first --sample-size symbolic powers
        #[arg(long)]
        approx: bool,
    },
    /// Lower bound on the resurgence from containment searches up to r
    ResurgenceBound { ideal: String, r: u32 },
    /// The sequence α(I^(m))/m for m = 1..k
    AlphaSequence { ideal: String, k: u32 },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::SymbolicPower { .. } => "symbolic-power",
            Command::PrimaryDecomp { .. } => "primary-decomp",
            Command::AssocPrimes { .. } => "assoc-primes",
            Command::BigHeight { .. } => "big-height",
            Command::MinimalPart { .. } => "minimal-part",
            Command::IsEqualOrdinary { .. } => "is-equal-ordinary",
            Command::Containment { .. } => "containment",
            Command::SymbolicDefect { .. } => "symbolic-defect",
            Command::Polyhedron { .. } => "polyhedron",
            Command::Waldschmidt { .. } => "waldschmidt",
            Command::ResurgenceBound { .. } => "resurgence-bound",
            Command::AlphaSequence { .. } => "alpha-sequence",
        }
    }

    fn ideal_text(&self) -> &str {
        match self {
            Command::SymbolicPower { ideal, .. }
            | Command::PrimaryDecomp { ideal }
            | Command::AssocPrimes { ideal }
            | Command::BigHeight { ideal }
            | Command::MinimalPart { ideal }
            | Command::IsEqualOrdinary { ideal, .. }
            | Command::Containment { ideal, .. }
            | Command::SymbolicDefect { ideal, .. }
            | Command::Polyhedron { ideal }
            | Command::Waldschmidt { ideal, .. }
            | Command::ResurgenceBound { ideal, .. }
            | Command::AlphaSequence { ideal, .. } => ideal,
        }
    }
}

/// Run the CLI; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn read_ideal_source(cli: &Cli) -> Result<String> {
    let text = cli.command.ideal_text();
    if text == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| Error::Parse {
                pos: 0,
                msg: format!("could not read stdin: {e}"),
            })?;
        Ok(buffer)
    } else {
        Ok(text.to_string())
    }
}

fn execute(cli: &Cli) -> Result<()> {
    if cli.min_primes && matches!(cli.command, Command::IsEqualOrdinary { .. }) {
        return Err(Error::Usage(
            "is-equal-ordinary uses the standard (associated primes) definition; \
             --min-primes does not apply"
                .to_string(),
        ));
    }

    let source = read_ideal_source(cli)?;
    let expr = parse_ideal(&source, cli.vars.as_deref())?;
    let ring = expr.ring.clone();
    let ideal = expr.ideal;
    let opts = SymbolicOptions {
        minimal_primes: cli.min_primes,
        strategy: cli.strategy.into(),
    };
    let mut echo = OptionsEcho::new(&ring, cli.min_primes, &opts.strategy.to_string());

    let start = Instant::now();
    let result = match &cli.command {
        Command::SymbolicPower { n, .. } => {
            echo.n = Some(*n);
            CommandResult::Ideal(symbolic_power(&ideal, *n, &opts)?)
        }
        Command::PrimaryDecomp { .. } => {
            CommandResult::Decomposition(decompose::primary_decomposition(&ideal)?)
        }
        Command::AssocPrimes { .. } => CommandResult::Primes(decompose::associated_primes(&ideal)?),
        Command::BigHeight { .. } => CommandResult::Integer(decompose::big_height(&ideal)? as u64),
        Command::MinimalPart { .. } => CommandResult::Ideal(decompose::minimal_part(&ideal)?),
        Command::IsEqualOrdinary { n, .. } => {
            echo.n = Some(*n);
            CommandResult::Boolean(is_symbolic_equal_ordinary(&ideal, *n)?)
        }
        Command::Containment {
            given_a, given_b, ..
        } => match (given_a, given_b) {
            (Some(a), None) => {
                echo.given_a = Some(*a);
                CommandResult::Integer(containment_problem_given_a(&ideal, *a, &opts)? as u64)
            }
            (None, Some(b)) => {
                echo.given_b = Some(*b);
                CommandResult::Integer(containment_problem(&ideal, *b, &opts)? as u64)
            }
            _ => unreachable!("clap enforces exactly one of --given-a/--given-b"),
        },
        Command::SymbolicDefect { n, .. } => {
            echo.n = Some(*n);
            CommandResult::Integer(symbolic_defect(&ideal, *n, &opts)? as u64)
        }
        Command::Polyhedron { .. } => {
            let h = symbolic_polyhedron(&ideal, &opts)?;
            let v = h_to_v(&h);
            let stats = polyhedron_stats(&h);
            CommandResult::Polyhedron { h, v, stats }
        }
        Command::Waldschmidt { approx, .. } => {
            if *approx {
                echo.mode = Some("approx".to_string());
                echo.sample_size = Some(cli.sample_size);
                let report = waldschmidt_approx(&ideal, cli.sample_size, &opts)?;
                if !cli.quiet {
                    eprintln!(
                        "note: upper bound from the first {} symbolic powers",
                        cli.sample_size
                    );
                }
                CommandResult::Waldschmidt(report)
            } else {
                echo.mode = Some("exact".to_string());
                CommandResult::Waldschmidt(waldschmidt_exact(&ideal, &opts)?)
            }
        }
        Command::ResurgenceBound { r, .. } => {
            echo.r_max = Some(*r);
            CommandResult::Rational(lower_bound_resurgence(&ideal, *r, &opts)?)
        }
        Command::AlphaSequence { k, .. } => {
            echo.k = Some(*k);
            CommandResult::Sequence(alpha_sequence(&ideal, *k, &opts)?)
        }
    };
    let elapsed = start.elapsed();

    emit(cli, &ring, result, echo);
    if !cli.quiet {
        eprintln!("time: {} ms", elapsed.as_millis());
    }
    Ok(())
}

fn emit(cli: &Cli, ring: &Ring, result: CommandResult, options: OptionsEcho) {
    match cli.format {
        FormatArg::Text => println!("{}", result.render_text(ring)),
        FormatArg::Json => {
            let document = OutputDocument {
                command: cli.command.name().to_string(),
                options,
                result: result.to_payload(ring),
            };
            print!("{}", to_json(&document));
        }
    }
}
