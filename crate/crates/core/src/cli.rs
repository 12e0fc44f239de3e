//! The `polysep` command line. Data goes to `out`, diagnostics to `err`.
//!
//! Exit codes: 0 success, 1 failed verification or internal error, 2 bad
//! flags or parameters, 3 below the asymptotic threshold, 4 root finding
//! did not converge.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::error::Error;
use crate::family::{mignotte_family, FamilyInstance};
use crate::poly::PolyJson;
use crate::rootfind::aberth_all_roots;
use crate::sep::{
    analyze, analyze_reciprocal, family_roots, geometric_sweep, scan, write_csv, ScanOptions,
};
use crate::verify::run_suite;

#[derive(Debug, Parser)]
#[command(
    name = "polysep",
    version,
    about = "Integer polynomials with abnormally close roots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Params {
    /// Degree, at least 3.
    #[arg(short = 'd', value_parser = clap::value_parser!(u32).range(3..))]
    d: u32,
    /// Family parameter, at least 1.
    #[arg(short = 'a', value_parser = clap::value_parser!(u64).range(1..))]
    a: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print P_{d,a} with its close-pair prediction as JSON.
    Gen(Params),
    /// Print all complex roots of P_{d,a} as JSON.
    Roots {
        #[command(flatten)]
        params: Params,
        /// Fixed working precision in bits instead of the adaptive policy.
        #[arg(long, value_parser = clap::value_parser!(u32).range(32..))]
        prec: Option<u32>,
    },
    /// Separation report for P_{d,a}.
    Analyze {
        #[command(flatten)]
        params: Params,
        /// Compact single-line JSON instead of pretty-printed JSON.
        #[arg(long)]
        json: bool,
    },
    /// Separation report for the monic reciprocal of P_{d,a}.
    Reciprocal(Params),
    /// Print x^d - 2(ax - 1)^2 as polynomial JSON.
    Mignotte(Params),
    /// Sweep a geometrically and write one CSV row per value.
    Scan {
        #[arg(short = 'd', value_parser = clap::value_parser!(u32).range(3..))]
        d: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        a_from: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        a_to: u64,
        #[arg(long, default_value_t = 10.0)]
        a_factor: f64,
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Rows evaluated in parallel.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: u32,
        /// Leave elapsed_ms empty so output is byte-for-byte reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Run the invariant suite; exit status 0 iff every check passes.
    Verify {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(3..))]
        d_max: u32,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        a_max: u64,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ZeroPolynomial | Error::DegreeTooSmall { .. } | Error::InvalidParameter(_) => 2,
        Error::Threshold { .. } | Error::BracketNotFound { .. } => 3,
        Error::NonConvergence(_) | Error::Unconverged => 4,
        Error::NotSquareFree | Error::InsufficientData(_) => 1,
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T, compact: bool) -> std::io::Result<()> {
    let text = if compact {
        serde_json::to_string(value)
    } else {
        serde_json::to_string_pretty(value)
    }
    .map_err(std::io::Error::other)?;
    writeln!(out, "{text}")
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::InvalidParameter(format!("output failed: {e}"))
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    match cmd {
        Command::Gen(p) => {
            let inst = FamilyInstance::new(p.d, p.a)?;
            emit(out, &inst.to_json(), false).map_err(io_err)?;
        }
        Command::Roots { params: p, prec } => {
            let inst = FamilyInstance::new(p.d, p.a)?;
            let rs = match prec {
                Some(bits) => aberth_all_roots(&inst.poly, bits)?,
                None => family_roots(&inst)?,
            };
            emit(out, &rs.to_json(), false).map_err(io_err)?;
            if !rs.converged {
                let _ = writeln!(err, "roots did not converge at {} bits", rs.prec_bits);
                return Ok(4);
            }
        }
        Command::Analyze { params: p, json } => {
            let report = analyze(&FamilyInstance::new(p.d, p.a)?)?;
            emit(out, &report.to_json(), json).map_err(io_err)?;
        }
        Command::Reciprocal(p) => {
            let report = analyze_reciprocal(&FamilyInstance::new(p.d, p.a)?)?;
            emit(out, &report.to_json(), false).map_err(io_err)?;
        }
        Command::Mignotte(p) => {
            let poly: PolyJson = mignotte_family(p.d, p.a)?.into();
            emit(out, &poly, false).map_err(io_err)?;
        }
        Command::Scan {
            d,
            a_from,
            a_to,
            a_factor,
            out: path,
            jobs,
            no_timing,
        } => {
            let values = geometric_sweep(a_from, a_to, a_factor)?;
            let rows = scan(
                d,
                &values,
                ScanOptions {
                    jobs: jobs as usize,
                    timing: !no_timing,
                },
            )?;
            match path {
                Some(path) => {
                    let file = File::create(&path).map_err(|e| {
                        Error::InvalidParameter(format!("cannot create {}: {e}", path.display()))
                    })?;
                    write_csv(&rows, BufWriter::new(file))?;
                }
                None => write_csv(&rows, &mut *out)?,
            }
            for r in rows.iter().filter(|r| r.status.as_str() != "ok") {
                let _ = writeln!(err, "d={} a={}: {}", r.d, r.a, r.status.as_str());
            }
        }
        Command::Verify { d_max, a_max } => {
            let report = run_suite(d_max, a_max);
            for c in &report.checks {
                let verdict = if c.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    err,
                    "{verdict} {} ({} cases, {} failed)",
                    c.name, c.cases, c.failed
                );
                for f in &c.failures {
                    let _ = writeln!(err, "    {f}");
                }
            }
            emit(out, &report, false).map_err(io_err)?;
            return Ok(if report.all_passed { 0 } else { 1 });
        }
    }
    Ok(0)
}
