//! Command-line surface. The binary target is a thin wrapper around
//! [`run`], which parses arguments, dispatches, and reports through the
//! writers it is handed — so the whole interface is testable in-process.
//!
//! Exit codes: 0 on success, 1 when a verification fails (a sweep with
//! failures, or `check --expect-wls` on a non-WLS sequence), 2 on invalid
//! input. Every error path prints exactly one diagnostic line to the error
//! stream.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::ci::CiTriple;
use crate::error::Error;
use crate::gorenstein::DegreeSequence;
use crate::hilbert::{HilbertFunction, WlsVerdict};
use crate::liaison::link;
use crate::monomial::MonomialIdeal;
use crate::verify::{sweep_detailed, PairVerdict, SweepConfig, SweepReport};

/// Environment variable fixing the rayon worker count for `sweep`.
pub const THREADS_ENV: &str = "LEFSCHETZ_THREADS";

#[derive(Parser)]
#[command(
    name = "lefschetz",
    version,
    about = "Hilbert functions of codimension-3 Artinian algebras: complete intersections, Gorenstein ideals, liaison, and Weak Lefschetz sequence checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function of a complete intersection with the given degrees
    Ci {
        /// Three nondecreasing positive degrees, e.g. 2,2,3
        #[arg(long, value_name = "A1,A2,A3")]
        degrees: String,
    },
    /// Hilbert function and index data of a Gorenstein degree sequence
    Gor {
        /// Odd-length nondecreasing positive degree list, e.g. 2,2,2,3,3
        #[arg(long, value_name = "D1,...")]
        degrees: String,
    },
    /// Minimal complete-intersection triple of a degree sequence
    Mci {
        #[arg(long, value_name = "D1,...")]
        degrees: String,
    },
    /// Remove ghost pairs (two degrees summing to theta) from a sequence
    Reduce {
        #[arg(long, value_name = "D1,...")]
        degrees: String,
    },
    /// Link a Gorenstein ideal inside a complete intersection
    Link {
        /// Complete-intersection degrees, e.g. 2,2,3
        #[arg(long, value_name = "A1,A2,A3")]
        ci: String,
        /// Gorenstein degree sequence, e.g. 2,2,2
        #[arg(long, value_name = "D1,...")]
        gor: String,
    },
    /// Weak Lefschetz sequence test for an explicit Hilbert function
    Check {
        /// Values from degree 0, e.g. 1,3,6,6,3
        #[arg(long, value_name = "H0,H1,...")]
        sequence: String,
        /// Exit 1 unless the sequence is a Weak Lefschetz sequence
        #[arg(long)]
        expect_wls: bool,
    },
    /// Hilbert function of an Artinian monomial quotient of k[x,y,z]
    MonomialHf {
        /// Generators as colon-separated exponents, e.g. 3:0:0,0:3:0,0:0:3,1:1:1
        #[arg(long, value_name = "E:E:E,...")]
        gens: String,
    },
    /// Exhaustive verification sweep over all admissible pairs
    Sweep {
        #[arg(long, value_name = "N")]
        d_max: Option<i64>,
        #[arg(long, value_name = "M")]
        m_max: Option<usize>,
        /// Componentwise box size above the minimal triple
        #[arg(long, value_name = "K")]
        offset: Option<i64>,
        /// Also enumerate unnormalized pairs; the normalization-only checks
        /// become informational
        #[arg(long)]
        no_normalization: bool,
        /// Write the JSON report here instead of stdout
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Write one CSV row per checked pair
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
        /// JSON file with a base configuration; flags override it
        #[arg(long, value_name = "FILE")]
        config: Option<PathBuf>,
    },
}

enum CliError {
    Usage(String),
    Lib(Error),
    Io(String, std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(what, e) => write!(f, "{what}: {e}"),
        }
    }
}

/// Parses `argv` (including the program name) and runs the selected
/// command, writing results to `out` and diagnostics to `err`. Returns the
/// process exit code.
pub fn run<O: Write, E: Write>(
    argv: impl IntoIterator<Item = String>,
    out: &mut O,
    err: &mut E,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let text = e.to_string();
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch<O: Write>(command: Command, out: &mut O) -> Result<i32, CliError> {
    match command {
        Command::Ci { degrees } => {
            let triple = parse_triple(&degrees, "--degrees")?;
            let h = triple.hilbert_function();
            let (lambda, delta_at_lambda) = triple.lambda_stats();
            #[derive(Serialize)]
            struct CiOutput {
                hf: Vec<i64>,
                delta: Vec<i64>,
                theta: i64,
                lambda: i64,
                delta_at_lambda: i64,
            }
            emit(
                out,
                &CiOutput {
                    hf: h.values().to_vec(),
                    delta: h.first_difference().values().to_vec(),
                    theta: triple.theta(),
                    lambda,
                    delta_at_lambda,
                },
            )?;
            Ok(0)
        }
        Command::Gor { degrees } => {
            let seq = parse_sequence(&degrees, "--degrees")?;
            let h = seq.hilbert_function();
            let data = seq.mci_data();
            #[derive(Serialize)]
            struct GorOutput {
                theta: i64,
                hf: Vec<i64>,
                lambda: i64,
                b_set: Vec<usize>,
                c_set: Vec<usize>,
                mci: [i64; 3],
                reduced: bool,
            }
            emit(
                out,
                &GorOutput {
                    theta: seq.theta(),
                    hf: h.values().to_vec(),
                    lambda: h.lambda(),
                    b_set: data.b_set,
                    c_set: data.c_set,
                    mci: data.mci.degrees(),
                    reduced: data.reduced,
                },
            )?;
            Ok(0)
        }
        Command::Mci { degrees } => {
            let seq = parse_sequence(&degrees, "--degrees")?;
            let data = seq.mci_data();
            #[derive(Serialize)]
            struct MciOutput {
                b_set: Vec<usize>,
                c_set: Vec<usize>,
                mci: [i64; 3],
            }
            emit(
                out,
                &MciOutput {
                    b_set: data.b_set,
                    c_set: data.c_set,
                    mci: data.mci.degrees(),
                },
            )?;
            Ok(0)
        }
        Command::Reduce { degrees } => {
            let seq = parse_sequence(&degrees, "--degrees")?;
            let reduced = seq.reduce().map_err(CliError::Lib)?;
            let hf_preserved = seq.hilbert_function() == reduced.hilbert_function();
            #[derive(Serialize)]
            struct ReduceOutput {
                reduced_degrees: Vec<i64>,
                hf_preserved: bool,
            }
            emit(
                out,
                &ReduceOutput {
                    reduced_degrees: reduced.degrees().to_vec(),
                    hf_preserved,
                },
            )?;
            Ok(0)
        }
        Command::Link { ci, gor } => {
            let alpha = parse_triple(&ci, "--ci")?;
            let delta = parse_sequence(&gor, "--gor")?;
            let lp = link(&alpha, &delta).map_err(CliError::Lib)?;
            let aci = lp.aci_degrees();
            #[derive(Serialize)]
            struct LinkOutput {
                hq: Vec<i64>,
                tau: i64,
                e_degrees: [i64; 4],
                normalized: bool,
                wls: WlsVerdict,
            }
            emit(
                out,
                &LinkOutput {
                    hq: lp.h_q().values().to_vec(),
                    tau: lp.tau(),
                    e_degrees: aci.degrees,
                    normalized: aci.normalized,
                    wls: lp.h_q().wls(),
                },
            )?;
            Ok(0)
        }
        Command::Check {
            sequence,
            expect_wls,
        } => {
            let values = parse_i64_list(&sequence, "--sequence")?;
            let h = HilbertFunction::new(values).map_err(CliError::Lib)?;
            let verdict = h.wls();
            let failed = expect_wls && !verdict.is_wls;
            emit(out, &verdict)?;
            Ok(if failed { 1 } else { 0 })
        }
        Command::MonomialHf { gens } => {
            let ideal = MonomialIdeal::new(parse_generators(&gens)?).map_err(CliError::Lib)?;
            let h = ideal.hilbert_function();
            #[derive(Serialize)]
            struct MonomialOutput {
                hf: Vec<i64>,
                wls: WlsVerdict,
            }
            emit(
                out,
                &MonomialOutput {
                    wls: h.wls(),
                    hf: h.values().to_vec(),
                },
            )?;
            Ok(0)
        }
        Command::Sweep {
            d_max,
            m_max,
            offset,
            no_normalization,
            out: out_path,
            csv,
            config,
        } => {
            let mut cfg = match config {
                Some(path) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| CliError::Io(format!("cannot read {}", path.display()), e))?;
                    serde_json::from_str::<SweepConfig>(&text).map_err(|e| {
                        CliError::Usage(format!("invalid config {}: {e}", path.display()))
                    })?
                }
                None => SweepConfig {
                    d_max: 0,
                    m_max: 0,
                    alpha_offset: 3,
                    enforce_normalization: true,
                },
            };
            if let Some(d) = d_max {
                cfg.d_max = d;
            }
            if let Some(m) = m_max {
                cfg.m_max = m;
            }
            if let Some(k) = offset {
                cfg.alpha_offset = k;
            }
            if no_normalization {
                cfg.enforce_normalization = false;
            }
            if cfg.d_max < 1 || cfg.m_max < 1 {
                return Err(CliError::Usage(
                    "sweep needs --d-max >= 1 and --m-max >= 1 (flags or config file)".into(),
                ));
            }
            if cfg.alpha_offset < 0 {
                return Err(CliError::Usage("--offset must be nonnegative".into()));
            }
            let (report, verdicts) = run_sweep_with_env_pool(&cfg)?;
            if let Some(path) = &csv {
                write_csv(path, &verdicts)?;
            }
            let json = to_json(&report)?;
            match &out_path {
                Some(path) => fs::write(path, json.as_bytes())
                    .map_err(|e| CliError::Io(format!("cannot write {}", path.display()), e))?,
                None => {
                    let _ = out.write_all(json.as_bytes());
                }
            }
            Ok(if report.failures.is_empty() { 0 } else { 1 })
        }
    }
}

/// Runs the sweep, honoring the worker-count override from the
/// environment. An unset variable leaves rayon's global pool in charge.
fn run_sweep_with_env_pool(
    cfg: &SweepConfig,
) -> Result<(SweepReport, Vec<PairVerdict>), CliError> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(sweep_detailed(cfg)),
        Ok(raw) => {
            let n: usize = raw
                .trim()
                .parse()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| {
                    CliError::Usage(format!(
                        "{THREADS_ENV} must be a positive integer, got {raw:?}"
                    ))
                })?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Usage(format!("cannot build a {n}-thread pool: {e}")))?;
            Ok(pool.install(|| sweep_detailed(cfg)))
        }
    }
}

fn write_csv(path: &PathBuf, verdicts: &[PairVerdict]) -> Result<(), CliError> {
    let mut writer = csv::Writer::from_path(path)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    writer
        .write_record(["delta", "alpha", "hq", "tau", "claim_ok", "wls", "failed_checks"])
        .map_err(|e| CliError::Usage(format!("csv error: {e}")))?;
    for v in verdicts {
        let record = [
            join_spaced(v.delta.iter()),
            join_spaced(v.alpha.degrees().iter()),
            join_spaced(v.h_q.values().iter()),
            v.tau.to_string(),
            v.claim_ok.to_string(),
            v.wls.is_wls.to_string(),
            v.failed_checks().join(" "),
        ];
        writer
            .write_record(&record)
            .map_err(|e| CliError::Usage(format!("csv error: {e}")))?;
    }
    writer
        .flush()
        .map_err(|e| CliError::Usage(format!("csv error: {e}")))?;
    Ok(())
}

fn join_spaced<'a>(values: impl Iterator<Item = &'a i64>) -> String {
    values
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::Usage(format!("serialization failure: {e}")))
}

fn emit<O: Write, T: Serialize>(out: &mut O, value: &T) -> Result<(), CliError> {
    let json = to_json(value)?;
    let _ = out.write_all(json.as_bytes());
    Ok(())
}

fn parse_i64_list(text: &str, flag: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("{flag}: {part:?} is not an integer")))
        })
        .collect()
}

fn parse_triple(text: &str, flag: &str) -> Result<CiTriple, CliError> {
    let values = parse_i64_list(text, flag)?;
    if values.len() != 3 {
        return Err(CliError::Usage(format!(
            "{flag}: a complete intersection needs exactly 3 degrees, got {}",
            values.len()
        )));
    }
    CiTriple::new(values[0], values[1], values[2]).map_err(CliError::Lib)
}

fn parse_sequence(text: &str, flag: &str) -> Result<DegreeSequence, CliError> {
    DegreeSequence::new(parse_i64_list(text, flag)?).map_err(CliError::Lib)
}

fn parse_generators(text: &str) -> Result<Vec<[i64; 3]>, CliError> {
    text.split(',')
        .map(|gen| {
            let parts: Vec<&str> = gen.trim().split(':').collect();
            if parts.len() != 3 {
                return Err(CliError::Usage(format!(
                    "--gens: {gen:?} is not of the form e1:e2:e3"
                )));
            }
            let mut exps = [0i64; 3];
            for (slot, part) in exps.iter_mut().zip(&parts) {
                *slot = part.trim().parse::<i64>().map_err(|_| {
                    CliError::Usage(format!("--gens: {part:?} is not an integer"))
                })?;
            }
            Ok(exps)
        })
        .collect()
}
