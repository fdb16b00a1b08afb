//! `lgvlab`: generating functions, verification suites and bijections on the
//! command line. JSON goes to stdout, human summaries to stderr.
//!
//! Exit codes: 0 all checks pass, 1 a check failed or a guard tripped,
//! 2 bad flags or invalid input.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lgvlab::algebra::{det_division_free, lgv_matrix};
use lgvlab::bijections::Theorem1Map;
use lgvlab::guard::{DEFAULT_GUARD_LIMIT, GUARD_ENV_VAR};
use lgvlab::objects::{genfun_brute, schur_brute, Partition, PlanePartition, RowStatistic};
use lgvlab::perm::Permutation;
use lgvlab::verify::{sweep, verify_lgv, verify_schur, verify_theorem1, StatisticReport};
use lgvlab::{Error, Guard};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "lgvlab",
    version,
    about = "Plane partitions, LGV path families and signed bijections"
)]
struct Cli {
    /// Largest enumeration any single step may perform.
    #[arg(long, global = true, env = GUARD_ENV_VAR, default_value_t = DEFAULT_GUARD_LIMIT)]
    guard_limit: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    BruteZeros,
    BruteMaxes,
    Det,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generating function of PP(shape; max) as JSON.
    Genfun {
        /// Comma-separated parts; "" is the empty partition.
        #[arg(long, allow_hyphen_values = true)]
        shape: Partition,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t = Method::Det)]
        method: Method,
    },
    /// Compare both brute-force tallies with the determinant.
    VerifyTheorem1 {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        max: usize,
    },
    /// Check the tail swap, the LGV sijection and the signed count.
    VerifyLgv {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        max: usize,
    },
    /// Apply the zeros-to-maxes bijection to one plane partition.
    Bijection {
        #[arg(long)]
        shape: Option<Partition>,
        #[arg(long)]
        max: Option<usize>,
        /// JSON (full object or bare rows), `@path`, or `-` for stdin.
        #[arg(long)]
        input: String,
        /// Also print the orbit through the composed sijection.
        #[arg(long)]
        trace: bool,
    },
    /// Schur polynomial by tableaux; with --perm, verify the symmetry map.
    Schur {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        vars: usize,
        /// One-line notation, e.g. 2,1,3.
        #[arg(long, value_parser = parse_perm)]
        perm: Option<Permutation>,
    },
    /// Run verify-theorem1 and verify-lgv on every small instance.
    Sweep {
        #[arg(long)]
        max_cells: usize,
        #[arg(long)]
        max_bound: usize,
    },
}

fn parse_perm(s: &str) -> Result<Permutation, Error> {
    let images = s
        .split(',')
        .map(|t| {
            t.trim().parse::<usize>().map_err(|_| Error::Invalid {
                what: "permutation",
                message: format!("{t:?} is not a positive integer"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Permutation::from_one_based(&images)
}

/// Why the process stops early.
enum Failure {
    Usage(String),
    Check,
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invalid { .. } | Error::VarCountMismatch { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn emit(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string(v).expect("reports serialize"));
}

fn report(r: &StatisticReport) -> Result<(), Failure> {
    emit(r);
    eprint!("{}", r.summary());
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn read_input(arg: &str) -> Result<String, Failure> {
    let io = |e: std::io::Error| Failure::Usage(format!("cannot read input: {e}"));
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(io)
    } else {
        Ok(arg.to_string())
    }
}

fn parse_plane_partition(
    text: &str,
    shape: Option<Partition>,
    max: Option<usize>,
) -> Result<PlanePartition, Failure> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Failure::Usage(format!("input is not JSON: {e}")))?;
    let p = if value.is_array() {
        let (Some(shape), Some(max)) = (shape, max) else {
            return Err(Failure::Usage("bare rows need --shape and --max".into()));
        };
        let rows: Vec<Vec<usize>> = serde_json::from_value(value).map_err(|e| {
            Failure::Usage(format!("rows must be arrays of nonnegative integers: {e}"))
        })?;
        PlanePartition::new(shape, max, rows)?
    } else {
        let p: PlanePartition = serde_json::from_value(value)
            .map_err(|e| Failure::Usage(format!("invalid plane partition: {e}")))?;
        if shape.as_ref().is_some_and(|s| s != p.shape()) || max.is_some_and(|m| m != p.max()) {
            return Err(Failure::Usage(
                "input shape or max disagrees with --shape/--max".into(),
            ));
        }
        p
    };
    Ok(p)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let guard = Guard::new(cli.guard_limit);
    match cli.command {
        Command::Genfun { shape, max, method } => {
            let poly = match method {
                Method::BruteZeros => genfun_brute(&shape, max, RowStatistic::Zeros, &guard)?,
                Method::BruteMaxes => genfun_brute(&shape, max, RowStatistic::Maxes, &guard)?,
                Method::Det => det_division_free(&lgv_matrix(&shape, max))?,
            };
            emit(&poly);
            eprintln!("{poly}");
            Ok(())
        }
        Command::VerifyTheorem1 { shape, max } => report(&verify_theorem1(&shape, max, &guard)?),
        Command::VerifyLgv { shape, max } => report(&verify_lgv(&shape, max, &guard)?),
        Command::Bijection {
            shape,
            max,
            input,
            trace,
        } => {
            let p = parse_plane_partition(&read_input(&input)?, shape, max)?;
            let map = Theorem1Map::new(p.shape().clone(), p.max())?;
            if trace {
                let (q, orbit) = map.apply_traced(&p)?;
                emit(&json!({ "output": q, "trace": orbit }));
            } else {
                emit(&map.apply(&p)?);
            }
            Ok(())
        }
        Command::Schur { shape, vars, perm } => match perm {
            None => {
                emit(&schur_brute(&shape, vars, &guard)?);
                Ok(())
            }
            Some(sigma) => report(&verify_schur(&shape, vars, &sigma, &guard)?),
        },
        Command::Sweep {
            max_cells,
            max_bound,
        } => {
            let r = sweep(max_cells, max_bound, &guard);
            emit(&r);
            eprint!("{}", r.summary());
            if r.passed {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
