//! The sweep engine: run one claim's checker over a cross product of
//! degrees, shift values and generated polynomials, in parallel, with a
//! deterministic, replayable report.
//!
//! Auto grids are hypothesis-aware. Pure random sampling would almost never
//! satisfy the integrality side conditions, so each degree's grid mixes
//! structured values (integers, half-integers, window straddles, values
//! making `(m+1)/(d+1)`, `m/(d+1)` or `d*m_bar` integral) with seeded random
//! rationals.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num::{One, Signed};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::modes::m_bar;
use crate::rational::{format_rational, int, rat, Rational};
use crate::verifier::claims::{check, ClaimId, Instance, Outcome, PolySource, VerdictRecord};
use crate::verifier::generate::{mix_seed, seeded_rationals, Profile};

/// How the per-degree shift grid is chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DGridSpec {
    /// Hypothesis-aware structured grid plus seeded random values.
    Auto,
    /// Exactly these values, for every degree.
    Explicit(Vec<Rational>),
}

impl DGridSpec {
    pub fn describe(&self) -> String {
        match self {
            DGridSpec::Auto => "auto".to_string(),
            DGridSpec::Explicit(g) => g
                .iter()
                .map(format_rational)
                .collect::<Vec<_>>()
                .join(","),
        }
    }
}

/// Everything needed to reproduce a sweep bit-exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub claim: ClaimId,
    pub m_min: usize,
    pub m_max: usize,
    pub d_grid: DGridSpec,
    pub trials_per_cell: usize,
    pub seed: u64,
}

impl SweepConfig {
    pub fn new(claim: ClaimId, m_min: usize, m_max: usize) -> Self {
        SweepConfig {
            claim,
            m_min: m_min.max(1),
            m_max,
            d_grid: DGridSpec::Auto,
            trials_per_cell: 1,
            seed: 0,
        }
    }

    pub fn with_grid(mut self, grid: DGridSpec) -> Self {
        self.d_grid = grid;
        self
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials_per_cell = trials;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Aggregate result of a sweep. `trials` counts in-hypothesis instances
/// only; `passes + failures.len() == trials` always, and not-applicable
/// instances are tallied separately. The digest covers every verdict line
/// (passes included) so replays can be compared bit-exactly; wall time is
/// excluded from it.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub trials: usize,
    pub passes: usize,
    pub not_applicable: usize,
    pub failures: Vec<VerdictRecord>,
    pub wall_time: Duration,
    pub digest: String,
}

impl SweepReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

use crate::verifier::fnv_digest;

fn half(r: &Rational) -> Rational {
    r / int(2)
}

/// Structured + seeded shift values for one degree, before any claim
/// filtering. All entries are positive.
fn base_grid(m: usize, seed: u64) -> BTreeSet<Rational> {
    let mi = m as i64;
    let mut grid: BTreeSet<Rational> = BTreeSet::new();

    // Integers and half-integers, including the d >= (m-1)/2 and d >= m
    // regime boundaries.
    for v in [1, 2, 3, mi - 1, mi, mi + 1, 2 * mi] {
        if v >= 1 {
            grid.insert(int(v));
        }
    }
    grid.insert(rat(1, 2));
    grid.insert(rat(3, 2));
    grid.insert(rat(5, 2));
    if mi >= 2 {
        grid.insert(half(&int(mi - 1)));
    }

    // Small fractions below one.
    grid.insert(rat(1, 3));
    grid.insert(rat(2, 3));
    grid.insert(rat(3, 4));
    grid.insert(rat(1, mi.max(1) + 1));

    // Near one, inside the 1 - d <= 1/m band.
    grid.insert(Rational::one() - rat(1, 2 * mi.max(1)));
    grid.insert(Rational::one() - rat(1, mi.max(1) + 1));

    // Straddle the window (1/C(m,2), 1/m): below it, inside it (two
    // points), and at/above its top.
    if m >= 2 {
        let pairs = int((m * (m - 1) / 2) as i64);
        let lo = pairs.recip();
        let hi = int(mi).recip();
        grid.insert(half(&lo)); // strictly below 1/C(m,2)
        grid.insert(&lo / int(4)); // deep inside the unique-mode-(m-1) zone
        if lo < hi {
            let span = &hi - &lo;
            grid.insert(&lo + half(&span)); // middle of the window
            grid.insert(&lo + &span / int(4));
            grid.insert(&hi + &span / int(4)); // just above the window
        }
    }

    // Values making (m+1)/(d+1) or m/(d+1) a positive integer.
    for k in 2..=(m + 1).min(10) {
        let d = rat(mi + 1, k as i64) - Rational::one();
        if d.is_positive() {
            grid.insert(d);
        }
        let d = rat(mi, k as i64) - Rational::one();
        if d.is_positive() {
            grid.insert(d);
        }
    }

    // Values with d * m_bar a positive integer and d > 1: for a target
    // anchor j, d = k/j lands in the half-open interval
    // [(m-j)/(j+1), (m-j+1)/j) that forces m_bar = j.
    for j in 1..=m.min(9) {
        let ji = j as i64;
        let lower = rat(mi - ji, ji + 1);
        let upper = rat(mi - ji + 1, ji);
        let mut k = {
            // smallest k with k/j >= lower and k/j > 1
            let from_lower = (&lower * int(ji)).ceil().to_integer();
            let from_one = int(ji + 1).to_integer();
            from_lower.max(from_one)
        };
        loop {
            let d = Rational::new(k.clone(), ji.into());
            if d >= upper {
                break;
            }
            if d > Rational::one() && m_bar(m, &d).map(|mb| mb == j).unwrap_or(false) {
                grid.insert(d);
                break; // one targeted value per anchor keeps grids compact
            }
            k += 1;
        }
    }

    // Seeded random rationals, both below and above one.
    for r in seeded_rationals(mix_seed(seed, m as u64, 0xd, 0), 4, 2000) {
        grid.insert(r);
    }

    grid
}

/// Extra deterministic grid values for claims whose hypothesis region is
/// thin in the shared base grid.
fn claim_extras(claim: ClaimId, m: usize) -> Vec<Rational> {
    let mi = m.max(1) as i64;
    match claim {
        // Ladders below one, two incommensurate denominators.
        ClaimId::Prop3_8i | ClaimId::Prop3_8ii | ClaimId::Thm4_5 => {
            let mut out: Vec<Rational> = (1..16).map(|i| rat(i, 16)).collect();
            out.extend((1..23).map(|i| rat(i, 23)));
            out
        }
        // The band 1 - 1/m <= d < 1.
        ClaimId::Prop3_8iii => (1..=14)
            .map(|i| Rational::one() - rat(i, 16 * mi))
            .collect(),
        // Interior samples of the window (1/C(m,2), 1/m).
        ClaimId::Rem3_1 if m >= 4 => {
            let lo = int((m * (m - 1) / 2) as i64).recip();
            let hi = int(mi).recip();
            let span = &hi - &lo;
            (1..18).map(|i| &lo + &span * rat(i, 18)).collect()
        }
        _ => Vec::new(),
    }
}

/// The hypothesis-aware grid for one claim and degree: keep exactly the
/// base-grid values (plus claim-specific extras) that satisfy the claim's
/// side conditions on `d`.
pub fn auto_d_grid(claim: ClaimId, m: usize, seed: u64) -> Vec<Rational> {
    use crate::modes::{remark31_window, succ_ratio_integral, unique_mode_conditions};
    use crate::rational::is_positive_integer;

    let mut base = base_grid(m, seed);
    base.extend(claim_extras(claim, m));
    let keep = |d: &Rational| -> bool {
        let one = Rational::one();
        match claim {
            ClaimId::Prop3_3 | ClaimId::Cor4_3 => d.is_one(),
            ClaimId::Prop3_4 | ClaimId::Cor4_2 => *d >= one,
            ClaimId::Cor3_5 => *d >= one && succ_ratio_integral(m, d),
            ClaimId::Prop3_6 => {
                *d > one && {
                    let mb = m_bar(m, d).expect("d > 0");
                    is_positive_integer(&(d * int(mb as i64)))
                }
            }
            ClaimId::Cor3_7i => *d > one && d.is_integer(),
            ClaimId::Cor3_7ii => {
                *d > one && is_positive_integer(&(int(m as i64) / (d + Rational::one())))
            }
            ClaimId::Cor4_4 => {
                *d > one
                    && unique_mode_conditions(m, d)
                        .map(|c| c.iter().any(|&x| x))
                        .unwrap_or(false)
            }
            ClaimId::Prop3_8i | ClaimId::Prop3_8ii | ClaimId::Thm4_5 => {
                d.is_positive() && *d < one
            }
            ClaimId::Prop3_8iii => {
                let gap = Rational::one() - d;
                gap.is_positive() && gap <= int(m.max(1) as i64).recip()
            }
            ClaimId::Rem3_1 => remark31_window(m, d),
            _ => true,
        }
    };
    base.into_iter().filter(keep).collect()
}

/// Profile rotation per claim: sources that can satisfy the claim's
/// hypotheses. The trial index walks the rotation.
fn sources_for(claim: ClaimId) -> Vec<fn(u64) -> PolySource> {
    fn uniform(seed: u64) -> PolySource {
        PolySource::Profile { profile: Profile::UniformSteps, monic: true, seed }
    }
    fn sparse(seed: u64) -> PolySource {
        PolySource::Profile { profile: Profile::Sparse, monic: true, seed }
    }
    fn geometric(seed: u64) -> PolySource {
        PolySource::Profile { profile: Profile::Geometric, monic: true, seed }
    }
    fn boundary(seed: u64) -> PolySource {
        PolySource::Profile { profile: Profile::Boundary, monic: true, seed }
    }
    fn all_ones(_seed: u64) -> PolySource {
        PolySource::Profile { profile: Profile::AllOnes, monic: true, seed: 0 }
    }
    fn pure_power(_seed: u64) -> PolySource {
        PolySource::Profile { profile: Profile::PurePower, monic: true, seed: 0 }
    }
    fn uniform_raw(seed: u64) -> PolySource {
        PolySource::Profile { profile: Profile::UniformSteps, monic: false, seed }
    }
    fn unimodal(seed: u64) -> PolySource {
        PolySource::Unimodal { seed }
    }
    fn nonneg(seed: u64) -> PolySource {
        PolySource::Nonneg { seed }
    }

    match claim {
        // Statements about the two fixed polynomials.
        ClaimId::Eq4
        | ClaimId::Prop3_2
        | ClaimId::Prop3_3
        | ClaimId::Prop3_4
        | ClaimId::Cor3_5
        | ClaimId::Prop3_6
        | ClaimId::Cor3_7i
        | ClaimId::Cor3_7ii
        | ClaimId::Prop3_8i
        | ClaimId::Prop3_8ii
        | ClaimId::Prop3_8iii
        | ClaimId::Rem3_1 => vec![all_ones],
        ClaimId::Prop3_1 => vec![pure_power],
        // The anchor inequality ignores the polynomial.
        ClaimId::Eq1 => vec![all_ones],
        // Nonnegative coefficients suffice.
        ClaimId::Lem2_2 | ClaimId::Eq2 => vec![nonneg, uniform_raw, sparse, boundary, pure_power],
        // Unimodal input required.
        ClaimId::Lem2_1 => vec![unimodal, uniform_raw, boundary],
        // Non-decreasing input.
        ClaimId::Thm5_1 | ClaimId::Conj5_2 => {
            vec![uniform, sparse, geometric, boundary, all_ones, pure_power]
        }
        // Monic non-decreasing, pure power allowed.
        ClaimId::Thm4_1 | ClaimId::Cor4_2 | ClaimId::Cor4_3 => {
            vec![uniform, sparse, geometric, boundary, all_ones, pure_power]
        }
        // Monic non-decreasing, pure power excluded by hypothesis.
        ClaimId::Cor2_1 | ClaimId::Cor4_4 | ClaimId::Thm4_5 => {
            vec![uniform, sparse, geometric, boundary, all_ones]
        }
    }
}

/// Materialize the deterministic instance list for a config.
pub fn instances_for(config: &SweepConfig) -> Result<Vec<Instance>> {
    if let DGridSpec::Explicit(g) = &config.d_grid {
        if g.is_empty() || g.iter().any(|d| !d.is_positive()) {
            return Err(Error::BadGrid);
        }
    }
    let sources = sources_for(config.claim);
    let mut out = Vec::new();
    for m in config.m_min..=config.m_max {
        let grid: Vec<Rational> = match &config.d_grid {
            DGridSpec::Auto => auto_d_grid(config.claim, m, config.seed),
            DGridSpec::Explicit(g) => g.clone(),
        };
        if config.claim == ClaimId::Conj5_2 {
            // Consecutive grid pairs: monotonicity along a sorted grid is
            // exactly monotonicity on consecutive pairs.
            let mut sorted = grid;
            sorted.sort();
            sorted.dedup();
            for w in 0..sorted.len().saturating_sub(1) {
                for t in 0..config.trials_per_cell {
                    let seed = mix_seed(config.seed, m as u64, w as u64, t as u64);
                    let source = sources[t % sources.len()](seed);
                    let mut inst = Instance::new(m, sorted[w].clone(), source);
                    inst.d2 = Some(sorted[w + 1].clone());
                    out.push(inst);
                }
            }
        } else {
            for (di, d) in grid.iter().enumerate() {
                for t in 0..config.trials_per_cell {
                    let seed = mix_seed(config.seed, m as u64, di as u64, t as u64);
                    let source = sources[t % sources.len()](seed);
                    out.push(Instance::new(m, d.clone(), source));
                }
            }
        }
    }
    Ok(out)
}

/// Run the sweep. Instances are checked in parallel and merged in instance
/// order, so the report is deterministic regardless of scheduling.
pub fn sweep(config: &SweepConfig) -> Result<SweepReport> {
    let started = Instant::now();
    let instances = instances_for(config)?;
    let verdicts: Vec<VerdictRecord> = instances
        .par_iter()
        .map(|inst| check(config.claim, inst))
        .collect();

    let mut trials = 0usize;
    let mut passes = 0usize;
    let mut not_applicable = 0usize;
    let mut failures = Vec::new();
    for v in &verdicts {
        match v.outcome {
            Outcome::Pass => {
                trials += 1;
                passes += 1;
            }
            Outcome::Fail => {
                trials += 1;
                failures.push(v.clone());
            }
            Outcome::NotApplicable => not_applicable += 1,
        }
    }
    let lines: Vec<String> = verdicts.iter().map(|v| v.canonical_line()).collect();
    let digest = fnv_digest(lines.iter().map(|s| s.as_str()));

    Ok(SweepReport {
        config: config.clone(),
        trials,
        passes,
        not_applicable,
        failures,
        wall_time: started.elapsed(),
        digest,
    })
}
