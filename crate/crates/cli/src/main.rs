//! `dioph`: solve, search and cross-check `x^n + y^m = c·x^k·y^l`.
//!
//! Exit codes: 0 success, 1 the solver and the oracle disagree, 2 usage or
//! output error.

mod error;
mod report;
mod sweep;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand};
use dioph_core::power_eq::parametrize;
use dioph_core::{
    brute_force, crosscheck, solve, BigUint, EquationParams, SearchBox, DEFAULT_BOUND,
};
use serde::Serialize;

use crate::error::CliError;
use crate::report::{BruteReport, InstanceReport, PowerEqReport};
use crate::sweep::{Interval, SweepSpec};

#[derive(Parser, Debug)]
#[command(
    name = "dioph",
    version,
    about = "Solver for x^n + y^m = c·x^k·y^l over the positive integers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify an instance and print its solution set with witnesses
    Solve {
        #[command(flatten)]
        eq: Equation,
        #[command(flatten)]
        bound: BoundArg,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive search over a box
    Brute {
        #[command(flatten)]
        eq: Equation,
        #[arg(long)]
        xmax: u64,
        #[arg(long)]
        ymax: u64,
        /// Only pairs with gcd(x, y) = 1
        #[arg(long)]
        coprime: bool,
        /// Only pairs with gcd(x, y) ≤ GCDMAX
        #[arg(long)]
        gcdmax: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Solve, then compare against exhaustive search; exits 1 on any discrepancy
    Crosscheck {
        #[command(flatten)]
        eq: Equation,
        #[command(flatten)]
        bound: BoundArg,
        #[arg(long, default_value_t = 100)]
        xmax: u64,
        #[arg(long, default_value_t = 100)]
        ymax: u64,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check every instance of a grid and write a JSONL report
    Sweep {
        /// Interval such as 1..5, 1..=5 or 3
        #[arg(long, default_value = "1..5")]
        n: Interval,
        #[arg(long, default_value = "1..5")]
        m: Interval,
        #[arg(long, default_value = "1..4")]
        k: Interval,
        /// The exponent of y on the right-hand side (ℓ)
        #[arg(long, default_value = "1..4")]
        l: Interval,
        #[arg(long, default_value = "1..12")]
        c: Interval,
        #[command(flatten)]
        bound: BoundArg,
        #[arg(long, default_value_t = 300)]
        xmax: u64,
        #[arg(long, default_value_t = 300)]
        ymax: u64,
        /// Report file, overwritten on every run
        #[arg(long)]
        out: PathBuf,
        /// Worker threads (default: one per core)
        #[arg(long)]
        jobs: Option<usize>,
        /// Print the summary as JSON
        #[arg(long)]
        json: bool,
    },
    /// Parametrize x^a = y^b and list its first solutions
    Powereq {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long, default_value_t = 10)]
        tmax: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct Equation {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    k: u32,
    /// The exponent of y on the right-hand side (ℓ)
    #[arg(long)]
    l: u32,
    #[arg(long, value_parser = parse_biguint)]
    c: BigUint,
}

fn parse_biguint(s: &str) -> Result<BigUint, String> {
    s.parse()
        .map_err(|_| format!("'{s}' is not a non-negative integer"))
}

impl Equation {
    fn params(&self) -> Result<EquationParams, CliError> {
        EquationParams::new(self.n, self.m, self.k, self.l, self.c.clone())
            .map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[derive(Args, Debug)]
struct BoundArg {
    /// Gcd bound for fallback and bounded searches
    #[arg(long, env = "DIOPH_DEFAULT_BOUND", default_value_t = DEFAULT_BOUND)]
    bound: u64,
}

impl BoundArg {
    fn get(&self) -> Result<u64, CliError> {
        if self.bound == 0 {
            return Err(CliError::Usage("bound must be ≥ 1".into()));
        }
        Ok(self.bound)
    }
}

fn emit<T: Serialize>(json: bool, value: &T, human: impl FnOnce(&T) -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string(value).expect("reports serialize")
        );
    } else {
        print!("{}", human(value));
    }
}

/// Solves `p` and, given a box, cross-checks it. Returns the report and its
/// discrepancy count.
pub(crate) fn run_instance(
    p: &EquationParams,
    bound: u64,
    search_box: Option<&SearchBox>,
) -> Result<(InstanceReport, usize), CliError> {
    let start = Instant::now();
    let (cls, set) = solve(p, bound).map_err(|e| CliError::Usage(e.to_string()))?;
    let check = search_box.map(|b| crosscheck(p, b, &set));
    let elapsed = start.elapsed();
    let discrepancies = check.as_ref().map_or(0, |c| c.discrepancies());
    Ok((
        InstanceReport::new(p, &cls, &set, check.as_ref(), elapsed),
        discrepancies,
    ))
}

fn status(discrepancies: usize) -> ExitCode {
    if discrepancies == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Solve { eq, bound, json } => {
            let (report, _) = run_instance(&eq.params()?, bound.get()?, None)?;
            emit(json, &report, table::instance);
        }
        Command::Brute {
            eq,
            xmax,
            ymax,
            coprime,
            gcdmax,
            json,
        } => {
            let p = eq.params()?;
            let b = SearchBox {
                x_max: xmax,
                y_max: ymax,
                coprime_only: coprime,
                gcd_max: gcdmax,
            };
            let found = brute_force(&p, &b);
            emit(json, &BruteReport::new(&p, &b, &found), table::brute);
        }
        Command::Crosscheck {
            eq,
            bound,
            xmax,
            ymax,
            json,
        } => {
            let b = SearchBox {
                x_max: xmax,
                y_max: ymax,
                coprime_only: false,
                gcd_max: None,
            };
            let (report, discrepancies) = run_instance(&eq.params()?, bound.get()?, Some(&b))?;
            emit(json, &report, table::instance);
            return Ok(status(discrepancies));
        }
        Command::Sweep {
            n,
            m,
            k,
            l,
            c,
            bound,
            xmax,
            ymax,
            out,
            jobs,
            json,
        } => {
            let spec = SweepSpec {
                n,
                m,
                k,
                l,
                c,
                search_box: SearchBox {
                    x_max: xmax,
                    y_max: ymax,
                    coprime_only: false,
                    gcd_max: None,
                },
                bound: bound.get()?,
                out,
            };
            let outcome = match jobs {
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .map_err(|e| CliError::Usage(e.to_string()))?
                    .install(|| sweep::run(&spec))?,
                None => sweep::run(&spec)?,
            };
            emit(json, &outcome.summary, table::summary);
            return Ok(status(outcome.defective));
        }
        Command::Powereq { a, b, tmax, json } => {
            let p = parametrize(a, b).ok_or_else(|| {
                let name = if a == 0 { "a" } else { "b" };
                CliError::Usage(format!("{name} must be ≥ 1"))
            })?;
            emit(json, &PowerEqReport::new(&p, tmax), table::power_eq);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => Cli::command().error(ErrorKind::ValueValidation, msg).exit(),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrepancies_exit_1() {
        let p = EquationParams::new(2, 3, 1, 1, 3u32).unwrap();
        let (_, mut set) = solve(&p, DEFAULT_BOUND).unwrap();
        set.solutions.remove(0);
        let r = crosscheck(&p, &SearchBox::square(20), &set);
        assert_eq!(r.discrepancies(), 1);
        assert_eq!(status(r.discrepancies()), ExitCode::from(1));
        assert_eq!(status(0), ExitCode::SUCCESS);
    }

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
