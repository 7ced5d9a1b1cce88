//! Command-line verification of the curve, Jacobian, moduli and periodic
//! module computations. Exit codes: 0 pass, 1 fail, 2 usage error.

mod claims;
mod monodromy;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use frobfix::curve::Curve;

use claims::Claim;
use report::Report;

const DEFAULT_CURVE: &str = "d=2;t=0x2;n=0";

#[derive(Parser, Debug)]
#[command(name = "frobfix", version, about = "Verify Frobenius-fixed points and periodic modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Branch points, ordinarity, point counts and zeta data of a curve.
    CurveInfo {
        #[arg(long, default_value = DEFAULT_CURVE)]
        curve: String,
        /// Write the JSON report here ("-" for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run one verification.
    Verify {
        #[arg(long, value_enum)]
        claim: Claim,
        #[arg(long, default_value = DEFAULT_CURVE)]
        curve: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Largest monodromy order searched.
        #[arg(long, default_value_t = 64)]
        cap: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Order profile, strictness and Frobenius representation of a module.
    Monodromy {
        /// JSON text, or a path to a JSON file.
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 64)]
        cap: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_curve(s: &str) -> Result<Curve, ExitCode> {
    s.parse::<Curve>().map_err(|e| usage_error(format!("invalid curve {s:?}: {e}")))
}

fn emit(report: &Report, json: Option<&PathBuf>, started: Instant) -> ExitCode {
    if let Some(path) = json {
        let text = report.to_json();
        if path.as_os_str() == "-" {
            print!("{text}");
        } else if let Err(e) = std::fs::write(path, text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if json.map_or(true, |p| p.as_os_str() != "-") {
        println!("{}", report.summary());
        println!("{}", serde_json::to_string_pretty(&report.outputs).expect("outputs serialize"));
        for d in &report.diagnostics {
            println!("note: {d}");
        }
    }
    eprintln!("elapsed: {:.2}s", started.elapsed().as_secs_f64());
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match cli.command {
        Command::CurveInfo { curve, json } => match parse_curve(&curve) {
            Ok(c) => emit(&claims::curve_info(&c), json.as_ref(), started),
            Err(code) => code,
        },
        Command::Verify { claim, curve, seed, cap, json } => match parse_curve(&curve) {
            Ok(c) => emit(&claims::run(claim, &c, seed, cap), json.as_ref(), started),
            Err(code) => code,
        },
        Command::Monodromy { matrix, n_max, cap, json } => {
            let text = if matrix.trim_start().starts_with('{') {
                matrix
            } else {
                match std::fs::read_to_string(&matrix) {
                    Ok(t) => t,
                    Err(e) => return usage_error(format!("cannot read {matrix}: {e}")),
                }
            };
            let input = match monodromy::MatrixInput::parse(&text).and_then(|i| i.q_log().map(|_| i)) {
                Ok(i) => i,
                Err(e) => return usage_error(e),
            };
            if n_max == 0 || n_max > frobfix::periodic::MAX_PROFILE_LEVEL {
                return usage_error(format!("--n-max must be in 1..={}", frobfix::periodic::MAX_PROFILE_LEVEL));
            }
            emit(&monodromy::run(&input, n_max, cap), json.as_ref(), started)
        }
    }
}
