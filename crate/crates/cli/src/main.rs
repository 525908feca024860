//! Command-line surface for the shifted-polynomial toolkit.
//!
//! Exit codes are part of the contract and stable:
//!   0  success (verify: zero failures; scan: no violation found)
//!   1  verification failures, or a replay that did not reproduce
//!   2  usage, parse or domain errors (bad files, d <= 0, unknown claim,
//!      malformed grids)
//!   3  scan-conjecture found a candidate counterexample

mod files;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand};

use files::{
    parse_grid, PolynomialFile, ReportFile, ScanReportDto, SweepReportDto, ARTIFACT_VERSION,
};
use shiftmodes::rational::{format_rational, parse_rational, Rational};
use shiftmodes::verifier::conjecture::{scan_conjecture, scan_family, ConjectureScanConfig};
use shiftmodes::verifier::fnv_digest;
use shiftmodes::verifier::sweep::{sweep, DGridSpec, SweepConfig};
use shiftmodes::{
    m_bar, m_under, modes_of_power, predict_general, predict_q_modes, ClaimId, PolyShape,
};

const EXIT_FAILURES: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

#[derive(Parser)]
#[command(name = "shiftmodes", version, about = "Exact shifts, mode analysis and claim verification for polynomials with nonnegative non-decreasing coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact coefficients of P(x+d) as a polynomial file
    Shift {
        /// Input polynomial file (JSON)
        input: PathBuf,
        /// Shift amount, an exact rational like "1/2" (must be positive)
        #[arg(long)]
        d: String,
    },
    /// Analyze the mode structure of P(x+d)
    Modes {
        /// Input polynomial file (JSON)
        input: PathBuf,
        /// Shift amount, an exact rational (must be positive)
        #[arg(long)]
        d: String,
        /// Also run the closed-form predictors and compare
        #[arg(long)]
        predict: bool,
    },
    /// Sweep one claim (or the whole catalog) against generated instances
    Verify {
        /// Claim id (e.g. "Thm5.1") or "all"
        #[arg(long)]
        claim: String,
        #[arg(long, default_value_t = 1)]
        m_min: usize,
        #[arg(long, default_value_t = 20)]
        m_max: usize,
        /// Comma-separated rationals; omitted = hypothesis-aware auto grid
        #[arg(long)]
        d_grid: Option<String>,
        /// Generated polynomials per (m, d) cell
        #[arg(long, default_value_t = 2)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads for the sweep (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Write a replayable report file here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Track the modes of P(x+d) along an increasing d grid and report
    /// whether both mode ends move monotonically (open-conjecture evidence)
    ScanConjecture {
        /// Input polynomial file; omit when using --family
        input: Option<PathBuf>,
        /// Generated family: "q", "power" or "random"
        #[arg(long)]
        family: Option<String>,
        /// Strictly increasing comma-separated rationals, all positive
        #[arg(long)]
        d_grid: String,
        #[arg(long, default_value_t = 1)]
        m_min: usize,
        #[arg(long, default_value_t = 16)]
        m_max: usize,
        /// Polynomials to scan in family mode
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write a replayable report file here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-run a report's embedded configuration and compare verdicts
    Replay {
        /// Report file produced by verify or scan-conjecture
        report: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Shift { input, d } => cmd_shift(&input, &d),
        Command::Modes { input, d, predict } => cmd_modes(&input, &d, predict),
        Command::Verify {
            claim,
            m_min,
            m_max,
            d_grid,
            trials,
            seed,
            jobs,
            out,
        } => cmd_verify(&claim, m_min, m_max, d_grid.as_deref(), trials, seed, jobs, out.as_deref()),
        Command::ScanConjecture {
            input,
            family,
            d_grid,
            m_min,
            m_max,
            count,
            seed,
            out,
        } => cmd_scan(
            input.as_deref(),
            family.as_deref(),
            &d_grid,
            m_min,
            m_max,
            count,
            seed,
            out.as_deref(),
        ),
        Command::Replay { report } => cmd_replay(&report),
    }
}

fn parse_positive_d(s: &str) -> Result<Rational> {
    let d = parse_rational(s).map_err(|e| anyhow!("{e}"))?;
    if d <= shiftmodes::rational::int(0) {
        bail!("shift parameter must be positive, got {s}");
    }
    Ok(d)
}

fn cmd_shift(input: &Path, d_str: &str) -> Result<u8> {
    let file = PolynomialFile::load(input)?;
    let p = file.to_poly()?;
    let d = parse_positive_d(d_str)?;
    let b = shiftmodes::shift(&p, &d).map_err(|e| anyhow!("{e}"))?;
    let label = match file.label {
        Some(l) => format!("{l} shifted by {}", format_rational(&d)),
        None => format!("shifted by {}", format_rational(&d)),
    };
    println!("{}", PolynomialFile::from_poly(&b, Some(label)).to_json());
    Ok(0)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_modes(input: &Path, d_str: &str, predict: bool) -> Result<u8> {
    let file = PolynomialFile::load(input)?;
    let p = file.to_poly()?;
    let d = parse_positive_d(d_str)?;
    let m = p.degree();
    let b = shiftmodes::shift(&p, &d).map_err(|e| anyhow!("{e}"))?;
    let analysis = b.analyze();

    println!("degree: {m}");
    println!("d: {}", format_rational(&d));
    println!("shifted: {b}");
    println!("unimodal: {}", yes_no(analysis.is_unimodal));
    match analysis.mode_set {
        Some(iv) => {
            println!("mode set: {iv}");
            println!("M_*: {}", iv.lo);
            println!("M^*: {}", iv.hi);
        }
        None => println!("mode set: (none — not unimodal)"),
    }
    println!("m_bar: {}", m_bar(m, &d).map_err(|e| anyhow!("{e}"))?);
    println!("m_under: {}", m_under(m, &d).map_err(|e| anyhow!("{e}"))?);
    println!("log-concave: {}", yes_no(analysis.is_log_concave));
    println!(
        "strictly log-concave: {}",
        yes_no(analysis.is_strictly_log_concave)
    );
    println!("internal zeros: {}", yes_no(analysis.has_internal_zeros));

    if predict {
        if !p.is_nondecreasing() {
            println!("prediction: not applicable (coefficients are not non-decreasing)");
            return Ok(0);
        }
        let prediction = if p.is_all_ones() {
            predict_q_modes(m, &d).map_err(|e| anyhow!("{e}"))?
        } else if p.is_pure_power() {
            modes_of_power(m, &d).map_err(|e| anyhow!("{e}"))?
        } else {
            // Mode structure is invariant under positive scaling, so the
            // predictors see the monic normalization.
            let monic = p.to_monic();
            predict_general(&PolyShape::of(&monic), m, &d).map_err(|e| anyhow!("{e}"))?
        };
        println!("prediction: {prediction}");
        let agree = prediction.holds_for(&analysis, b.coeffs());
        println!("verdict: {}", if agree { "AGREE" } else { "DISAGREE" });
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    claim_str: &str,
    m_min: usize,
    m_max: usize,
    d_grid: Option<&str>,
    trials: usize,
    seed: u64,
    jobs: Option<usize>,
    out: Option<&Path>,
) -> Result<u8> {
    if let Some(n) = jobs {
        // Ignore the error if a global pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let claims: Vec<ClaimId> = if claim_str.eq_ignore_ascii_case("all") {
        ClaimId::ALL.to_vec()
    } else {
        vec![claim_str.parse().map_err(|e| anyhow!("{e}"))?]
    };
    let grid = match d_grid {
        Some(spec) => DGridSpec::Explicit(parse_grid(spec)?),
        None => DGridSpec::Auto,
    };

    let mut dtos = Vec::new();
    let mut total_failures = 0usize;
    for claim in claims {
        let config = SweepConfig::new(claim, m_min, m_max)
            .with_grid(grid.clone())
            .with_trials(trials)
            .with_seed(seed);
        let report = sweep(&config).map_err(|e| anyhow!("{e}"))?;
        println!(
            "{claim}: {} trials, {} passes, {} failures, {} not-applicable ({:.2?})",
            report.trials,
            report.passes,
            report.failures.len(),
            report.not_applicable,
            report.wall_time
        );
        for failure in report.failures.iter().take(5) {
            println!("  FAIL {}", failure.canonical_line());
        }
        total_failures += report.failures.len();
        dtos.push(SweepReportDto::from_report(&report));
    }

    if let Some(path) = out {
        ReportFile::Sweep {
            artifact_version: ARTIFACT_VERSION.to_string(),
            reports: dtos,
        }
        .save(path)?;
        println!("report written to {}", path.display());
    }
    Ok(if total_failures == 0 { 0 } else { EXIT_FAILURES })
}

fn single_scan_digest(report: &shiftmodes::MonotonicityReport) -> String {
    let line = report.canonical_line();
    fnv_digest(std::iter::once(line.as_str()))
}

fn mode_seq(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[allow(clippy::too_many_arguments)]
fn cmd_scan(
    input: Option<&Path>,
    family: Option<&str>,
    d_grid: &str,
    m_min: usize,
    m_max: usize,
    count: usize,
    seed: u64,
    out: Option<&Path>,
) -> Result<u8> {
    let grid = parse_grid(d_grid)?;

    let (dto, violations) = match (input, family) {
        (Some(path), None) => {
            let p = PolynomialFile::load(path)?.to_poly()?;
            let started = Instant::now();
            let report = scan_conjecture(&p, &grid).map_err(|e| anyhow!("{e}"))?;
            println!("polynomial: {p}");
            println!("d grid: {}", dto_grid(&grid));
            println!("M_* along grid: {}", mode_seq(&report.min_modes));
            println!("M^* along grid: {}", mode_seq(&report.max_modes));
            let digest = single_scan_digest(&report);
            let dto = ScanReportDto::from_single_report(
                &report,
                started.elapsed().as_millis() as u64,
                digest,
            );
            (dto, report.violations)
        }
        (None, Some(fam)) => {
            let config = ConjectureScanConfig {
                family: fam.parse().map_err(|e| anyhow!("{e}"))?,
                m_min,
                m_max,
                count,
                seed,
                grid,
            };
            let report = scan_family(&config).map_err(|e| anyhow!("{e}"))?;
            println!(
                "scanned {} polynomials (family {}, m in [{}, {}]) over {} grid points",
                report.polys_scanned,
                config.family,
                config.m_min,
                config.m_max,
                config.grid.len()
            );
            let dto = ScanReportDto::from_family_report(&report);
            (dto, report.violations)
        }
        _ => bail!("provide exactly one of an input file or --family"),
    };

    if let Some(path) = out {
        ReportFile::ConjectureScan {
            artifact_version: ARTIFACT_VERSION.to_string(),
            report: dto,
        }
        .save(path)?;
        println!("report written to {}", path.display());
    }

    if violations.is_empty() {
        println!("consistent: no violation found (evidence only, not a proof)");
        Ok(0)
    } else {
        println!("CANDIDATE COUNTEREXAMPLE(S): {}", violations.len());
        for v in violations.iter().take(10) {
            println!("  {v}");
        }
        Ok(EXIT_COUNTEREXAMPLE)
    }
}

fn dto_grid(grid: &[Rational]) -> String {
    grid.iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_replay(path: &Path) -> Result<u8> {
    let file = ReportFile::load(path)?;
    let mut mismatches = 0usize;
    match file {
        ReportFile::Sweep { reports, .. } => {
            for stored in reports {
                let config = stored.config.to_config()?;
                let fresh = SweepReportDto::from_report(
                    &sweep(&config).map_err(|e| anyhow!("{e}"))?,
                );
                if fresh.replay_key() == stored.replay_key() {
                    println!("{}: replay identical", stored.config.claim);
                } else {
                    println!("{}: REPLAY MISMATCH", stored.config.claim);
                    mismatches += 1;
                }
            }
        }
        ReportFile::ConjectureScan { report: stored, .. } => {
            let fresh = match stored.to_scan_config()? {
                Some(config) => {
                    ScanReportDto::from_family_report(
                        &scan_family(&config).map_err(|e| anyhow!("{e}"))?,
                    )
                }
                None => {
                    let coeffs = stored
                        .config
                        .input_coefficients
                        .as_ref()
                        .ok_or_else(|| anyhow!("input scan report lacks coefficients"))?;
                    let p = PolynomialFile {
                        label: None,
                        degree: coeffs.len() - 1,
                        coefficients: coeffs.clone(),
                    }
                    .to_poly()?;
                    let grid = files::parse_grid_list(&stored.config.d_grid)?;
                    let started = Instant::now();
                    let report = scan_conjecture(&p, &grid).map_err(|e| anyhow!("{e}"))?;
                    let digest = single_scan_digest(&report);
                    ScanReportDto::from_single_report(
                        &report,
                        started.elapsed().as_millis() as u64,
                        digest,
                    )
                }
            };
            if fresh.replay_key() == stored.replay_key() {
                println!("conjecture scan: replay identical");
            } else {
                println!("conjecture scan: REPLAY MISMATCH");
                mismatches += 1;
            }
        }
    }
    Ok(if mismatches == 0 { 0 } else { EXIT_FAILURES })
}
