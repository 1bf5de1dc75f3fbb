//! The `gsc` command line: expression evaluation in a quotient algebra, the
//! finite oracle, and the verification suites.
//!
//! Output is plain, line-oriented text on stdout. Errors print as
//! `error: <Name> ...` lines; the exit status is 0 iff no error line and no
//! `FAIL` line was printed.

pub mod eval;
pub mod suites;
pub mod syntax;

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};

use crate::oracle::{verify_galois, verify_maximal_prime, FiniteConfig};
use crate::report::Report;
use crate::sample;
use crate::series::{classify_series, generalized_sum};

use eval::{filter_from_text, EvalError, Evaluator, Value};
use suites::{run_all, run_suite, SuiteOptions, SUITES};

#[derive(Debug, Parser)]
#[command(name = "gsc", about = "Exact arithmetic in quotient algebras of rational sequences")]
pub struct Cli {
    /// Filter of the quotient: `frechet` or `principal:<set>`.
    #[arg(long, global = true, default_value = "frechet")]
    pub filter: String,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleCheck {
    Galois,
    MaximalPrime,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression and print its value.
    Eval { expr: String },
    /// Print the classification of a scalar.
    Classify { expr: String },
    /// Decide equality of two scalars in the quotient.
    Eq { left: String, right: String },
    /// Classify the series with the given terms and print its generalized sum.
    Sum { expr: String },
    /// Exhaustive verification over a finite index set and prime field.
    Oracle {
        #[arg(long, default_value_t = 3)]
        lambda: u32,
        #[arg(long, default_value_t = 2)]
        field: u32,
        #[arg(long, value_enum, default_value_t = OracleCheck::All)]
        check: OracleCheck,
    },
    /// Run a named verification suite, or `all`.
    Check {
        suite: String,
        #[arg(long, default_value_t = 1000)]
        kmax: u64,
    },
}

/// Printed output and exit status of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { stdout: text + "\n", code: 0 }
    }

    fn error(e: impl std::fmt::Display) -> Outcome {
        Outcome { stdout: format!("error: {e}\n"), code: 1 }
    }

    fn reports(reports: &[Report]) -> Outcome {
        let stdout: String = reports.iter().map(|r| r.to_string()).collect();
        let code = if reports.iter().all(Report::passed) { 0 } else { 1 };
        Outcome { stdout, code }
    }
}

fn evaluate(ev: &Evaluator, text: &str) -> Result<Value, EvalError> {
    ev.eval_text(text)
}

/// Execute a parsed command line. `seed` seeds the randomized suites.
pub fn run(cli: &Cli, seed: u64) -> Outcome {
    let filter = match filter_from_text(&cli.filter) {
        Ok(f) => f,
        Err(e) => return Outcome::error(e),
    };
    let ev = Evaluator::new(filter.clone());
    let result = match &cli.command {
        Command::Eval { expr } => evaluate(&ev, expr).map(|v| ev.render(&v)),
        Command::Classify { expr } => {
            evaluate(&ev, expr).and_then(|v| match v {
                Value::Seq(x) => Ok(ev.scalar(x).classify().to_string()),
                Value::Rat(c) => Ok(ev.scalar(crate::seqrep::RSeq::constant(c)).classify().to_string()),
                other => Err(EvalError::Type { expected: "sequence", found: kind(&other) }),
            })
        }
        Command::Eq { left, right } => (|| {
            let a = ev.seq(&syntax::parse(left)?)?;
            let b = ev.seq(&syntax::parse(right)?)?;
            Ok::<_, EvalError>(ev.scalar(a).scalar_eq(&ev.scalar(b))?.to_string())
        })(),
        Command::Sum { expr } => (|| {
            let s = ev.seq(&syntax::parse(expr)?)?;
            let verdict = classify_series(&s)?;
            let value = generalized_sum(&s, &filter)?;
            Ok::<_, EvalError>(format!("verdict: {verdict}\nvalue: {value}"))
        })(),
        Command::Oracle { lambda, field, check } => {
            let cfg = match FiniteConfig::new(*lambda, *field) {
                Ok(c) => c,
                Err(e) => return Outcome::error(e),
            };
            let mut reports = Vec::new();
            if matches!(check, OracleCheck::Galois | OracleCheck::All) {
                reports.push(verify_galois(&cfg));
            }
            if matches!(check, OracleCheck::MaximalPrime | OracleCheck::All) {
                reports.push(verify_maximal_prime(&cfg));
            }
            return match reports.into_iter().collect::<Result<Vec<_>, _>>() {
                Ok(r) => Outcome::reports(&r),
                Err(e) => Outcome::error(e),
            };
        }
        Command::Check { suite, kmax } => {
            let opts = SuiteOptions { seed, kmax: *kmax, filter };
            if suite == "all" {
                return Outcome::reports(&run_all(&opts));
            }
            return match run_suite(suite, &opts) {
                Some(r) => Outcome::reports(&[r]),
                None => Outcome::error(format!("UnknownSuite {suite} (expected one of: all, {})", SUITES.join(", "))),
            };
        }
    };
    match result {
        Ok(text) => Outcome::ok(text),
        Err(e) => Outcome::error(e),
    }
}

fn kind(v: &Value) -> &'static str {
    match v {
        Value::Seq(_) => "sequence",
        Value::Rat(_) => "rational",
        Value::Bool(_) => "boolean",
        Value::Class(_) => "classification",
    }
}

/// Parse arguments and run; clap usage errors print to stderr with status 2.
pub fn run_from_args<I, T>(args: I, seed: u64) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, seed),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            Outcome { stdout: String::new(), code }
        }
    }
}

/// Entry point used by the binary: arguments from the process, seed from
/// `GSC_SEED`.
pub fn main_from_env() -> i32 {
    let out = run_from_args(std::env::args_os(), sample::seed_from_env());
    print!("{}", out.stdout);
    out.code
}
