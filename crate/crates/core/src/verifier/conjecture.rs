//! Mode-monotonicity scanning for the open conjecture, and the empirical
//! near-one threshold search.
//!
//! The conjecture says that for monic non-decreasing `P` and `0 < d1 < d2`,
//! both the smallest and the greatest mode of `P(x + d)` are non-increasing
//! in `d`. It is open: the scanner only ever reports "no violation found"
//! or a fully replayable candidate counterexample. It never asserts truth.

use std::time::{Duration, Instant};

use num::{One, Signed};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rational::{format_rational, rat, Rational};
use crate::sequence::CoeffSeq;
use crate::shift::{q_coeffs, shift};
use crate::verifier::fnv_digest;
use crate::verifier::generate::{gen_poly, mix_seed, Profile};

/// Which end of the mode interval moved the wrong way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeEnd {
    Smallest,
    Greatest,
}

impl std::fmt::Display for ModeEnd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModeEnd::Smallest => write!(f, "smallest mode"),
            ModeEnd::Greatest => write!(f, "greatest mode"),
        }
    }
}

/// A candidate counterexample, persisted verbatim (exact rationals) so it
/// can be re-verified independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureViolation {
    pub poly: CoeffSeq,
    pub d1: Rational,
    pub d2: Rational,
    pub end: ModeEnd,
    pub before: usize,
    pub after: usize,
}

impl std::fmt::Display for ConjectureViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} rises from {} to {} between d={} and d={} for P={}",
            self.end,
            self.before,
            self.after,
            format_rational(&self.d1),
            format_rational(&self.d2),
            self.poly
        )
    }
}

/// Mode trajectories of one polynomial along a strictly increasing grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityReport {
    pub poly: CoeffSeq,
    pub grid: Vec<Rational>,
    pub min_modes: Vec<usize>,
    pub max_modes: Vec<usize>,
    pub violations: Vec<ConjectureViolation>,
}

impl MonotonicityReport {
    /// No violation found on this grid. Says nothing about the conjecture
    /// beyond the instances actually tested.
    pub fn consistent(&self) -> bool {
        self.violations.is_empty()
    }

    /// Canonical line for digests and replay comparison.
    pub fn canonical_line(&self) -> String {
        let fmt_seq = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "poly={};grid={};min={};max={};violations={}",
            self.poly,
            self.grid
                .iter()
                .map(format_rational)
                .collect::<Vec<_>>()
                .join(","),
            fmt_seq(&self.min_modes),
            fmt_seq(&self.max_modes),
            self.violations.len()
        )
    }
}

/// Compute `(M_*, M^*)` along the grid and test both for non-increase.
///
/// Requires a nonnegative non-decreasing polynomial and a strictly
/// increasing grid of positive shifts.
pub fn scan_conjecture(p: &CoeffSeq, grid: &[Rational]) -> Result<MonotonicityReport> {
    if grid.is_empty()
        || grid.iter().any(|d| !d.is_positive())
        || grid.windows(2).any(|w| w[0] >= w[1])
    {
        return Err(Error::BadGrid);
    }
    if let Some(i) = crate::sequence::nondecreasing_violation(p.coeffs()) {
        return Err(Error::NotNonDecreasing(i));
    }

    let mut min_modes = Vec::with_capacity(grid.len());
    let mut max_modes = Vec::with_capacity(grid.len());
    for d in grid {
        let analysis = shift(p, d)?.analyze();
        let modes = analysis
            .mode_set
            .expect("shift of a non-decreasing sequence is unimodal");
        min_modes.push(modes.lo);
        max_modes.push(modes.hi);
    }

    let mut violations = Vec::new();
    for i in 1..grid.len() {
        if min_modes[i] > min_modes[i - 1] {
            violations.push(ConjectureViolation {
                poly: p.clone(),
                d1: grid[i - 1].clone(),
                d2: grid[i].clone(),
                end: ModeEnd::Smallest,
                before: min_modes[i - 1],
                after: min_modes[i],
            });
        }
        if max_modes[i] > max_modes[i - 1] {
            violations.push(ConjectureViolation {
                poly: p.clone(),
                d1: grid[i - 1].clone(),
                d2: grid[i].clone(),
                end: ModeEnd::Greatest,
                before: max_modes[i - 1],
                after: max_modes[i],
            });
        }
    }

    Ok(MonotonicityReport {
        poly: p.clone(),
        grid: grid.to_vec(),
        min_modes,
        max_modes,
        violations,
    })
}

/// Which polynomial family a batch scan draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanFamily {
    /// `Q_m = 1 + x + ... + x^m` for each degree in range.
    AllOnes,
    /// `x^m` for each degree in range.
    PurePower,
    /// Seeded random monic non-decreasing polynomials, rotating profiles.
    Random,
}

impl std::fmt::Display for ScanFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ScanFamily::AllOnes => write!(f, "q"),
            ScanFamily::PurePower => write!(f, "power"),
            ScanFamily::Random => write!(f, "random"),
        }
    }
}

impl std::str::FromStr for ScanFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" | "all-ones" => Ok(ScanFamily::AllOnes),
            "power" | "pure-power" => Ok(ScanFamily::PurePower),
            "random" => Ok(ScanFamily::Random),
            other => Err(Error::UnknownProfile(other.to_string())),
        }
    }
}

/// Everything needed to reproduce a batch scan bit-exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureScanConfig {
    pub family: ScanFamily,
    pub m_min: usize,
    pub m_max: usize,
    pub count: usize,
    pub seed: u64,
    pub grid: Vec<Rational>,
}

/// Aggregate result of scanning a polynomial family. Violations are
/// candidate counterexamples, persisted verbatim; the digest covers every
/// per-polynomial mode trajectory so replays compare bit-exactly.
#[derive(Debug, Clone)]
pub struct ConjectureScanReport {
    pub config: ConjectureScanConfig,
    pub polys_scanned: usize,
    pub violations: Vec<ConjectureViolation>,
    pub digest: String,
    pub wall_time: Duration,
}

impl ConjectureScanReport {
    pub fn consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The deterministic polynomial stream for a scan config.
pub fn scan_polys(config: &ConjectureScanConfig) -> Vec<CoeffSeq> {
    let span = config.m_max - config.m_min + 1;
    let rotation = [
        Profile::UniformSteps,
        Profile::Sparse,
        Profile::Geometric,
        Profile::Boundary,
    ];
    (0..config.count)
        .map(|i| {
            let m = config.m_min + i % span;
            match config.family {
                ScanFamily::AllOnes => CoeffSeq::all_ones(m),
                ScanFamily::PurePower => CoeffSeq::pure_power(m),
                ScanFamily::Random => gen_poly(
                    m,
                    rotation[i % rotation.len()],
                    true,
                    mix_seed(config.seed, i as u64, 0x5c, 0),
                ),
            }
        })
        .collect()
}

/// Scan a whole family against one grid, in parallel, merging results in
/// polynomial order.
pub fn scan_family(config: &ConjectureScanConfig) -> Result<ConjectureScanReport> {
    if config.m_min < 1 || config.m_min > config.m_max || config.count == 0 {
        return Err(Error::MalformedInstance(
            "scan needs 1 <= m_min <= m_max and count >= 1".into(),
        ));
    }
    let started = Instant::now();
    let polys = scan_polys(config);
    let reports: Vec<MonotonicityReport> = polys
        .par_iter()
        .map(|p| scan_conjecture(p, &config.grid))
        .collect::<Result<_>>()?;

    let lines: Vec<String> = reports.iter().map(|r| r.canonical_line()).collect();
    let digest = fnv_digest(lines.iter().map(|s| s.as_str()));
    let violations: Vec<ConjectureViolation> = reports
        .into_iter()
        .flat_map(|r| r.violations)
        .collect();

    Ok(ConjectureScanReport {
        config: config.clone(),
        polys_scanned: polys.len(),
        violations,
        digest,
        wall_time: started.elapsed(),
    })
}

/// Result of the empirical near-one threshold search. The value is a grid
/// measurement, not a proved constant; it is labeled EMPIRICAL wherever it
/// is printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmpiricalThreshold {
    pub m: usize,
    pub resolution: u64,
    /// Number of leading grid steps `1 - d = k/resolution` on which the
    /// shifted all-ones polynomial has the unique mode `floor(m/2)`.
    pub passing_steps: u64,
    /// The largest tested `1 - d` below which every finer grid point
    /// passes; zero when even the first step fails.
    pub one_minus_d: Rational,
}

impl std::fmt::Display for EmpiricalThreshold {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "EMPIRICAL: for m={} the all-ones shift keeps the unique mode {} on all tested d with 1-d <= {} (resolution 1/{})",
            self.m,
            self.m / 2,
            format_rational(&self.one_minus_d),
            self.resolution
        )
    }
}

/// Grid search for how far below one the shift can move while the all-ones
/// polynomial keeps the unique mode `floor(m/2)`: scan `d = 1 - k/res`
/// upward in `k` and stop at the first failure.
pub fn find_near_one_threshold(m: usize, resolution: u64) -> Result<EmpiricalThreshold> {
    if m < 2 || resolution < 2 {
        return Err(Error::MalformedInstance(
            "threshold search needs m >= 2 and resolution >= 2".into(),
        ));
    }
    let target = m / 2;
    let mut passing = 0u64;
    for k in 1..resolution {
        let d = Rational::one() - rat(k as i64, resolution as i64);
        let modes = q_coeffs(m, &d)?
            .analyze()
            .mode_set
            .expect("shifted all-ones sequence is unimodal");
        if modes.lo == target && modes.hi == target {
            passing = k;
        } else {
            break;
        }
    }
    Ok(EmpiricalThreshold {
        m,
        resolution,
        passing_steps: passing,
        one_minus_d: rat(passing as i64, resolution as i64),
    })
}
