use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use fd2p::constructions::{ldu_subspaces, Family};
use fd2p::fields::FieldParams;
use fd2p::structure::{factorization_sweep, pavesic_factorize, GROUP_BOUND};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::report::{Params, Tool};
use crate::suite::{params_of, run_suite, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fd2p", version, about = "Unit groups of the modular group algebra FD_2p")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every structural check at one (p, n, f) and write a JSON report.
    Verify(VerifyArgs),
    /// Print a named basis family, one element per line.
    Basis(BasisArgs),
    /// Factor seeded elements of 1 + Γ(A) and check the round trip.
    Factorize(FactorizeArgs),
}

#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    /// Odd prime characteristic.
    #[arg(long)]
    pub p: u64,
    /// Extension degree of F over F_p.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    /// Monic irreducible modulus, coefficients constant term first, e.g. "1,0,1".
    #[arg(long)]
    pub poly: Option<String>,
}

impl FieldArgs {
    fn modulus(&self) -> fd2p::Result<Option<Vec<u32>>> {
        self.poly.as_deref().map(FieldParams::parse_modulus).transpose()
    }
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Enumeration bound for subgroups; whole-algebra scans get ten times this.
    #[arg(long)]
    pub bound: Option<u128>,
    /// Where to write the JSON report; printed to stdout when absent.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Samples per seeded property check.
    #[arg(long, default_value_t = 256)]
    pub samples: usize,
}

#[derive(Debug, Clone, Args)]
pub struct BasisArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// omega | unitary | symmetric | center | d_block | gamma
    #[arg(long)]
    pub family: String,
}

#[derive(Debug, Clone, Args)]
pub struct FactorizeArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Factor every element of 1 + Γ(A) instead of sampling.
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long, default_value_t = GROUP_BOUND)]
    pub bound: u128,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct FactorizeReport {
    pub tool: Tool,
    pub seed: u64,
    pub params: Params,
    pub exhaustive: bool,
    pub count: u128,
    pub exact: u128,
    pub first_counterexample: Option<String>,
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Verify(args) => verify(&args, out),
        Command::Basis(args) => basis(&args, out),
        Command::Factorize(args) => factorize(&args, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_CONFIG
        }
    }
}

/// Configuration and I/O problems, reported with exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] fd2p::Error),
    #[error("unknown family {0:?}; expected one of omega, unitary, symmetric, center, d_block, gamma")]
    UnknownFamily(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn emit(out: &mut dyn Write, path: Option<&PathBuf>, json: &str) -> Result<(), CliError> {
    match path {
        Some(path) => std::fs::write(path, format!("{json}\n")).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => writeln!(out, "{json}").map_err(|source| CliError::Io {
            path: "stdout".into(),
            source,
        }),
    }
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut cfg = SuiteConfig::new(args.field.p, args.field.n);
    cfg.modulus = args.field.modulus()?;
    cfg.seed = args.seed;
    cfg.samples = args.samples;
    if let Some(b) = args.bound {
        cfg.bound = b;
        cfg.scan_bound = b.saturating_mul(10);
    }
    let report = run_suite(&cfg)?;
    emit(out, args.report.as_ref(), &report.to_json())?;
    if args.report.is_some() {
        let s = &report.summary;
        let _ = writeln!(
            out,
            "verify p={} n={}: {} records, {} pass, {} fail, {} skipped",
            report.params.p, report.params.n, s.total, s.pass, s.fail, s.skipped
        );
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
}

fn basis(args: &BasisArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let family: Family = args
        .family
        .parse()
        .map_err(|_| CliError::UnknownFamily(args.family.clone()))?;
    let alg = fd2p::algebra(args.field.p, args.field.n, args.field.modulus()?)?;
    for x in family.build(&alg) {
        let serial = serde_json::to_string(&x.element.serialize()).expect("nested vectors serialize");
        let _ = writeln!(out, "{serial}\t{}\t{}", x.name, x.element);
    }
    Ok(EXIT_OK)
}

fn factorize(args: &FactorizeArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let alg = fd2p::algebra(args.field.p, args.field.n, args.field.modulus()?)?;
    let mut report = FactorizeReport {
        tool: Tool::default(),
        seed: args.seed,
        params: params_of(&alg),
        exhaustive: args.exhaustive,
        count: 0,
        exact: 0,
        first_counterexample: None,
    };
    if args.exhaustive {
        let sweep = factorization_sweep(&alg, args.bound)?;
        report.count = sweep.count;
        report.exact = sweep.exact.min(sweep.in_blocks);
        if report.exact != report.count {
            report.first_counterexample = Some("sweep found inexact factorizations".into());
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let ldu = ldu_subspaces(&alg);
        for _ in 0..args.count {
            let v = &alg.one() + &alg.random_gamma(&mut rng);
            let t = pavesic_factorize(&v)?;
            report.count += 1;
            if t.reconstruct() == v && t.in_blocks(&ldu) {
                report.exact += 1;
            } else if report.first_counterexample.is_none() {
                report.first_counterexample = Some(v.to_string());
            }
        }
    }
    if let Some(path) = &args.report {
        let json = serde_json::to_string_pretty(&report).expect("report serializes");
        emit(out, Some(path), &json)?;
    }
    let _ = writeln!(out, "{}/{} exact", report.exact, report.count);
    if let Some(v) = &report.first_counterexample {
        let _ = writeln!(out, "first counterexample: {v}");
    }
    Ok(if report.exact == report.count { EXIT_OK } else { EXIT_FAIL })
}
