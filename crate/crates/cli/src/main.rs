use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pqsym_cli::eval::Basis;
use pqsym_cli::suites::{Suite, SuiteOptions};
use pqsym_cli::{run_convert, run_decompose, run_eval, run_rank, run_verify, CliError, Method, Output};

/// Exact computation in the quasisymmetric functions and the peak algebra.
///
/// Expressions combine rationals, basis atoms M[..], F[..], K[..], L[..],
/// symmetric functions p[n], q[n], e[n], h[n], generators Q[n; ..] and
/// theta(...) with + - * ^ and parentheses. Pass "-" to read from stdin.
#[derive(Parser)]
#[command(name = "pqsym", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Output basis; defaults to M for QSym results and L for PQSym results.
        #[arg(long, value_enum)]
        basis: Option<Basis>,
    },
    /// Re-express an element (expression or element JSON) in another basis.
    Convert {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long, value_enum)]
        basis: Basis,
    },
    /// Write a PQSym element as a polynomial in the generators Q[n; alpha].
    Decompose {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long, value_enum, default_value = "inductive")]
        method: Method,
    },
    /// Print the dimension and rank table for weights 1..=max-weight.
    Rank {
        #[arg(long, default_value_t = 9)]
        max_weight: u32,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_weight: u32,
        /// Variable count for the oracle suite (default: the weight of each identity).
        #[arg(long)]
        vars: Option<usize>,
    },
}

fn read_input(arg: String) -> Result<String, CliError> {
    if arg != "-" {
        return Ok(arg);
    }
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
    Ok(s)
}

fn dispatch(cli: Cli) -> Result<Output, CliError> {
    let json = cli.json;
    match cli.command {
        Command::Eval { expr, basis } => run_eval(&read_input(expr)?, basis, json),
        Command::Convert { input, basis } => run_convert(&read_input(input)?, basis, json),
        Command::Decompose { input, method } => run_decompose(&read_input(input)?, method, json),
        Command::Rank { max_weight } => run_rank(max_weight, json),
        Command::Verify { suite, max_weight, vars } => run_verify(suite, SuiteOptions { max_weight, vars }, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| dispatch(cli)) {
        Ok(Ok(out)) => {
            println!("{}", out.text);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(_) => ExitCode::from(2),
    }
}
