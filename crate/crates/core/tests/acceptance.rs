//! Acceptance suite. One test per criterion; each prints a single
//! PASS/FAIL line with its headline numbers. Everything here is exact:
//! a single disagreement anywhere fails the suite.

use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use num::One;
use shiftmodes::rational::{int, rat, Rational};
use shiftmodes::sequence::analyze;
use shiftmodes::shift::{horner_shift, shift};
use shiftmodes::verifier::conjecture::{scan_family, ConjectureScanConfig, ScanFamily};
use shiftmodes::verifier::generate::{
    gen_nonneg, gen_poly, gen_unimodal, mix_seed, seeded_rationals, Profile,
};
use shiftmodes::verifier::sweep::instances_for;
use shiftmodes::{
    modes, sweep, ClaimId, DGridSpec, Outcome, SweepConfig, SweepReport,
};

/// The criteria are compute-heavy and already parallel inside (rayon);
/// running them concurrently with each other just thrashes the cores and
/// distorts the wall-clock budget check, so they take turns.
static HEAVY: Mutex<()> = Mutex::new(());

fn heavy_turn() -> std::sync::MutexGuard<'static, ()> {
    HEAVY.lock().unwrap_or_else(|poisoned| poisoned.into_inner())
}

fn run(claim: ClaimId, m_min: usize, m_max: usize, trials: usize, seed: u64) -> SweepReport {
    let config = SweepConfig::new(claim, m_min, m_max)
        .with_trials(trials)
        .with_seed(seed);
    let report = sweep(&config).expect("sweep runs");
    assert_eq!(
        report.passes + report.failures.len(),
        report.trials,
        "{claim}: verdict accounting is broken"
    );
    report
}

fn assert_clean(report: &SweepReport, min_trials: usize) {
    assert!(
        report.failures.is_empty(),
        "{}: {} failures, first: {}",
        report.config.claim,
        report.failures.len(),
        report.failures[0].canonical_line()
    );
    assert!(
        report.trials >= min_trials,
        "{}: only {} in-hypothesis trials (needed {})",
        report.config.claim,
        report.trials,
        min_trials
    );
}

fn pass_line(criterion: &str, detail: String) {
    println!("ACCEPTANCE {criterion}: PASS — {detail}");
}

/// Criterion 1: the two shift algorithms agree on >= 10,000 instances with
/// degrees up to 200 and mixed d profiles, within five minutes.
#[test]
fn criterion_1_dual_oracle_shift_equivalence() {
    let _turn = heavy_turn();
    let started = Instant::now();

    // (count, m_lo, m_hi, d numerator/denominator bound). Coefficient
    // growth is ~ m * log(d), so the d bound shrinks as degrees grow.
    let bands: [(usize, usize, usize, u64); 4] = [
        (8500, 1, 40, 1_000_000),
        (1200, 41, 90, 2_000),
        (350, 91, 150, 64),
        (80, 151, 200, 16),
    ];

    let mut jobs: Vec<(usize, Rational, u64)> = Vec::new();
    let mut total = 0usize;
    for (band, &(count, m_lo, m_hi, bound)) in bands.iter().enumerate() {
        for i in 0..count {
            let seed = mix_seed(0xD0A1, band as u64, i as u64, 0);
            let m = m_lo + (seed as usize) % (m_hi - m_lo + 1);
            let d = match i % 5 {
                0 => int(1 + (seed % 7) as i64),
                1 => rat(1, 1 + (seed % 9) as i64),
                _ => seeded_rationals(seed, 1, bound)[0].clone(),
            };
            jobs.push((m, d, seed));
            total += 1;
        }
    }
    // Pin the degree cap itself.
    jobs.push((200, rat(99, 100), 0x200));
    jobs.push((200, int(3), 0x201));
    total += 2;

    let profiles = Profile::ALL;
    let disagreements: usize = jobs
        .par_iter()
        .map(|(m, d, seed)| {
            let p = match seed % 8 {
                6 => gen_nonneg(*m, *seed),
                7 => gen_unimodal(*m, *seed),
                k => gen_poly(*m, profiles[k as usize % 6], seed % 2 == 0, *seed),
            };
            let a = shift(&p, d).expect("d > 0");
            let b = horner_shift(&p, d).expect("d > 0");
            usize::from(a != b)
        })
        .sum();

    let elapsed = started.elapsed();
    assert_eq!(disagreements, 0, "the two shift algorithms disagreed");
    assert!(total >= 10_000, "only {total} instances");
    assert!(
        elapsed.as_secs() < 300,
        "took {elapsed:?}, budget is five minutes"
    );
    pass_line(
        "1 dual-oracle shift equivalence",
        format!("{total} instances, m <= 200, 100% agreement, {elapsed:.2?}"),
    );
}

/// Criterion 2: shifts of generated nonnegative non-decreasing sequences
/// are unimodal — zero failures over >= 10,000 instances, m in [1, 60],
/// with grids straddling every d regime.
#[test]
fn criterion_2_main_theorem_unimodality() {
    let _turn = heavy_turn();
    let report = run(ClaimId::Thm5_1, 1, 60, 4, 2);
    assert_clean(&report, 10_000);

    // The auto grid must straddle 0 < d < 1, d = 1, d > 1 and d >= m.
    let instances = instances_for(&report.config).expect("config is valid");
    let one = Rational::one();
    assert!(instances.iter().any(|i| i.d < one));
    assert!(instances.iter().any(|i| i.d == one));
    assert!(instances.iter().any(|i| i.d > one && i.d < int(i.m as i64)));
    assert!(instances.iter().any(|i| i.d >= int(i.m as i64)));

    pass_line(
        "2 main unimodality theorem",
        format!(
            "{} trials, {} passes, 0 failures, {:.2?}",
            report.trials, report.passes, report.wall_time
        ),
    );
}

/// Criterion 3: the two difference identities (and the anchor inequality)
/// hold exactly on >= 1,000 instances each, for every index j.
#[test]
fn criterion_3_identity_suites() {
    let _turn = heavy_turn();
    let eq2 = run(ClaimId::Eq2, 1, 24, 2, 3);
    assert_clean(&eq2, 1_000);
    let eq4 = run(ClaimId::Eq4, 1, 40, 1, 3);
    assert_clean(&eq4, 1_000);
    let eq1 = run(ClaimId::Eq1, 1, 60, 1, 3);
    assert_clean(&eq1, 1_000);
    pass_line(
        "3 identity suites",
        format!(
            "Eq2 {} + Eq4 {} + Eq1 {} instances, all exact",
            eq2.trials, eq4.trials, eq1.trials
        ),
    );
}

/// Criterion 4: exact-mode rules match ground truth exactly, with every
/// integrality side condition exercised at least 50 times.
#[test]
fn criterion_4_exact_mode_rules() {
    let _turn = heavy_turn();
    let power = run(ClaimId::Prop3_1, 1, 40, 1, 4);
    assert_clean(&power, 1_000);
    // Both branches of the power rule at least 50 times each.
    let instances = instances_for(&power.config).expect("valid");
    let integral = instances
        .iter()
        .filter(|i| modes::succ_ratio_integral(i.m, &i.d))
        .count();
    assert!(integral >= 50, "only {integral} integral power instances");
    assert!(instances.len() - integral >= 50);

    let d_one = run(ClaimId::Prop3_3, 1, 101, 1, 4);
    assert!(d_one.failures.is_empty());
    assert!(d_one.trials >= 100);

    let mut counts = Vec::new();
    for (claim, m_hi) in [
        (ClaimId::Cor3_5, 60),
        (ClaimId::Prop3_6, 60),
        (ClaimId::Cor3_7i, 60),
        (ClaimId::Cor3_7ii, 60),
        (ClaimId::Prop3_8ii, 60),
    ] {
        let report = run(claim, 1, m_hi, 1, 4);
        assert!(
            report.failures.is_empty(),
            "{claim}: {:?}",
            report.failures.first().map(|f| f.canonical_line())
        );
        assert!(
            report.trials >= 50,
            "{claim}: only {} targeted hits",
            report.trials
        );
        counts.push(format!("{claim} {}", report.trials));
    }

    // The tiny-d biconditional needs both branches.
    let config = SweepConfig::new(ClaimId::Prop3_8ii, 2, 60).with_seed(4);
    let tiny_branches = instances_for(&config)
        .expect("valid")
        .iter()
        .filter(|i| {
            let threshold = int((i.m * (i.m - 1) / 2) as i64).recip();
            i.d < threshold
        })
        .count();
    assert!(tiny_branches >= 50, "only {tiny_branches} below 1/C(m,2)");

    pass_line(
        "4 exact-mode rules",
        format!(
            "Prop3.1 {} ({} integral), Prop3.3 {}, {}",
            power.trials,
            integral,
            d_one.trials,
            counts.join(", ")
        ),
    );
}

/// Criterion 5: every bound rule holds with zero failures over >= 1,000
/// in-hypothesis instances (Cor4.4 with all five side conditions
/// exercised).
#[test]
fn criterion_5_bound_rules() {
    let _turn = heavy_turn();
    let mut summary = Vec::new();
    for (claim, m_min, m_max, trials) in [
        (ClaimId::Lem2_1, 1, 30, 1),
        (ClaimId::Lem2_2, 1, 30, 1),
        (ClaimId::Cor2_1, 1, 30, 1),
        (ClaimId::Prop3_4, 1, 50, 1),
        (ClaimId::Prop3_8i, 1, 40, 1),
        (ClaimId::Prop3_8iii, 1, 70, 1),
        (ClaimId::Rem3_1, 4, 64, 1),
        (ClaimId::Thm4_1, 1, 30, 1),
        (ClaimId::Cor4_2, 1, 40, 2),
        (ClaimId::Cor4_3, 1, 40, 25),
        (ClaimId::Cor4_4, 2, 40, 3),
        (ClaimId::Thm4_5, 1, 30, 1),
    ] {
        let report = run(claim, m_min, m_max, trials, 5);
        assert_clean(&report, 1_000);
        summary.push(format!("{claim} {}", report.trials));
    }

    // All five unique-mode side conditions fire at least 50 times across
    // the Cor4.4 sweep's in-hypothesis instances.
    let config = SweepConfig::new(ClaimId::Cor4_4, 2, 40)
        .with_trials(3)
        .with_seed(5);
    let mut fired = [0usize; 5];
    for inst in instances_for(&config).expect("valid") {
        if inst.d > Rational::one() {
            let conds = modes::unique_mode_conditions(inst.m, &inst.d).expect("d > 0");
            for (slot, hit) in fired.iter_mut().zip(conds) {
                *slot += usize::from(hit);
            }
        }
    }
    for (i, count) in fired.iter().enumerate() {
        assert!(
            *count >= 50,
            "unique-mode condition {} fired only {count} times",
            i + 1
        );
    }

    pass_line(
        "5 bound rules",
        format!("{}; unique-mode conditions fired {fired:?}", summary.join(", ")),
    );
}

/// Criterion 6: strict log-concavity of the shifted all-ones coefficients
/// for every m <= 60 across at least 20 d values including 0 < d < 1.
#[test]
fn criterion_6_strict_log_concavity() {
    let _turn = heavy_turn();
    // A fixed 24-value grid shared by every degree, straddling both sides
    // of d = 1.
    let grid: Vec<Rational> = [
        (1, 8),
        (1, 7),
        (1, 6),
        (1, 5),
        (1, 4),
        (1, 3),
        (2, 5),
        (1, 2),
        (3, 5),
        (2, 3),
        (3, 4),
        (4, 5),
        (7, 8),
        (9, 10),
        (1, 1),
        (9, 8),
        (5, 4),
        (3, 2),
        (7, 4),
        (2, 1),
        (9, 4),
        (3, 1),
        (7, 2),
        (5, 1),
    ]
    .iter()
    .map(|&(n, d)| rat(n, d))
    .collect();
    assert!(grid.len() >= 20);
    assert!(grid.iter().any(|d| *d < Rational::one()));

    let config = SweepConfig::new(ClaimId::Prop3_2, 1, 60)
        .with_grid(DGridSpec::Explicit(grid.clone()))
        .with_seed(6);
    let report = sweep(&config).expect("sweep runs");
    assert!(
        report.failures.is_empty(),
        "Prop3.2: {}",
        report.failures[0].canonical_line()
    );
    assert_eq!(report.trials, 60 * grid.len());

    pass_line(
        "6 strict log-concavity",
        format!(
            "all m <= 60 across {} d values each, all strictly log-concave",
            grid.len()
        ),
    );
}

/// Criterion 7: the scanner agrees with exhaustive chain-definition
/// enumeration on every sequence of length <= 8 over {0, 1, 2, 3}.
#[test]
fn criterion_7_small_instance_brute_force() {
    fn chain_modes(seq: &[Rational]) -> Vec<usize> {
        (0..seq.len())
            .filter(|&t| {
                (1..=t).all(|i| seq[i - 1] <= seq[i])
                    && (t + 1..seq.len()).all(|i| seq[i - 1] >= seq[i])
            })
            .collect()
    }

    let mut checked = 0usize;
    for len in 1..=8usize {
        let total = 4usize.pow(len as u32);
        for code in 0..total {
            let mut c = code;
            let seq: Vec<Rational> = (0..len)
                .map(|_| {
                    let v = int((c % 4) as i64);
                    c /= 4;
                    v
                })
                .collect();
            let a = analyze(&seq).expect("nonnegative alphabet");
            let oracle = chain_modes(&seq);
            assert_eq!(
                a.is_unimodal,
                !oracle.is_empty(),
                "verdict mismatch on {seq:?}"
            );
            let got: Vec<usize> = a.mode_set.map(|iv| iv.iter().collect()).unwrap_or_default();
            assert_eq!(got, oracle, "mode set mismatch on {seq:?}");
            checked += 1;
        }
    }
    assert!(checked >= 65_536);
    pass_line(
        "7 small-instance brute force",
        format!("{checked} sequences, 100% agreement with the chain oracle"),
    );
}

/// Criterion 8: the conjecture scanner covers >= 2,000 polynomials on a
/// 12-point grid and its report replays bit-exactly from the embedded
/// configuration. (The conjecture's truth is not a criterion.)
#[test]
fn criterion_8_conjecture_scan_replay() {
    let _turn = heavy_turn();
    let grid: Vec<Rational> = vec![
        rat(1, 8),
        rat(1, 4),
        rat(1, 2),
        rat(3, 4),
        rat(9, 10),
        int(1),
        rat(3, 2),
        int(2),
        int(3),
        int(5),
        int(8),
        int(13),
    ];
    assert_eq!(grid.len(), 12);
    let config = ConjectureScanConfig {
        family: ScanFamily::Random,
        m_min: 1,
        m_max: 24,
        count: 2_000,
        seed: 8,
        grid,
    };
    let first = scan_family(&config).expect("scan runs");
    assert_eq!(first.polys_scanned, 2_000);

    let replay = scan_family(&config).expect("replay runs");
    assert_eq!(first.digest, replay.digest, "replay digest drifted");
    assert_eq!(first.violations, replay.violations);
    assert_eq!(first.polys_scanned, replay.polys_scanned);

    // Structured families replay too.
    for family in [ScanFamily::AllOnes, ScanFamily::PurePower] {
        let cfg = ConjectureScanConfig {
            family,
            m_min: 1,
            m_max: 40,
            count: 200,
            seed: 8,
            grid: config.grid.clone(),
        };
        let a = scan_family(&cfg).expect("scan runs");
        let b = scan_family(&cfg).expect("scan runs");
        assert_eq!(a.digest, b.digest);
    }

    pass_line(
        "8 conjecture scan replay",
        format!(
            "2000 polynomials x 12-point grid, {} violation candidate(s), replay bit-exact",
            first.violations.len()
        ),
    );
}

/// The zero-failure invariant across the whole theorem catalog on a smoke
/// grid: every claim id maps to a working checker that reports passes.
#[test]
fn theorem_catalog_smoke_sweep() {
    let _turn = heavy_turn();
    for claim in ClaimId::theorems() {
        let report = run(claim, claim_m_min(claim), 16, 1, 9);
        assert!(
            report.failures.is_empty(),
            "{claim}: {}",
            report.failures[0].canonical_line()
        );
        assert!(report.trials > 0, "{claim}: nothing applicable");
        // Not-applicable instances never count as passes.
        let instances = instances_for(&report.config).expect("valid");
        assert_eq!(
            instances.len(),
            report.trials + report.not_applicable,
            "{claim}: instance accounting"
        );
    }
    let report = run(ClaimId::Conj5_2, 1, 12, 1, 9);
    assert!(report.trials > 0);
    pass_line(
        "catalog smoke sweep",
        "all 24 theorem checkers pass on the smoke grid".to_string(),
    );
}

fn claim_m_min(claim: ClaimId) -> usize {
    match claim {
        ClaimId::Rem3_1 => 4,
        ClaimId::Prop3_8ii | ClaimId::Cor4_4 => 2,
        _ => 1,
    }
}

/// Reproducibility: identical (claim, config, seed) produces bit-identical
/// reports modulo wall time; different seeds change the instance stream.
#[test]
fn sweep_reports_replay_bit_exactly() {
    let _turn = heavy_turn();
    for claim in [ClaimId::Thm5_1, ClaimId::Cor4_4, ClaimId::Prop3_8ii, ClaimId::Conj5_2] {
        let config = SweepConfig::new(claim, claim_m_min(claim), 14)
            .with_trials(2)
            .with_seed(10);
        let a = sweep(&config).expect("sweep runs");
        let b = sweep(&config).expect("sweep runs");
        assert_eq!(a.digest, b.digest, "{claim}");
        assert_eq!(a.trials, b.trials);
        assert_eq!(a.passes, b.passes);
        assert_eq!(a.not_applicable, b.not_applicable);
        assert_eq!(a.failures, b.failures);

        let other = sweep(&config.clone().with_seed(11)).expect("sweep runs");
        assert_ne!(a.digest, other.digest, "{claim}: seed must matter");
    }
    pass_line("replay determinism", "reports are bit-identical modulo wall time".to_string());
}

/// Explicit grids are honored verbatim and validated.
#[test]
fn explicit_grid_round_trip() {
    let _turn = heavy_turn();
    let grid = vec![rat(1, 3), rat(1, 2), int(1), rat(3, 2), int(2), int(5), int(41)];
    let config = SweepConfig::new(ClaimId::Thm5_1, 1, 40)
        .with_grid(DGridSpec::Explicit(grid.clone()))
        .with_trials(25)
        .with_seed(1);
    let report = sweep(&config).expect("sweep runs");
    assert!(report.all_passed());
    assert_eq!(report.trials, 40 * grid.len() * 25);
    assert_eq!(report.not_applicable, 0);

    let bad = SweepConfig::new(ClaimId::Thm5_1, 1, 4)
        .with_grid(DGridSpec::Explicit(vec![rat(-1, 2)]));
    assert!(sweep(&bad).is_err());
    pass_line("explicit grids", format!("{} trials on the pinned grid", report.trials));
}

/// Sweeping with hypothesis filters: a grid that misses every hypothesis
/// yields only not-applicable verdicts, never passes.
#[test]
fn out_of_scope_instances_never_pass() {
    let config = SweepConfig::new(ClaimId::Cor4_3, 2, 6)
        .with_grid(DGridSpec::Explicit(vec![int(2)])) // Cor4.3 needs d = 1
        .with_trials(2)
        .with_seed(0);
    let report = sweep(&config).expect("sweep runs");
    assert_eq!(report.trials, 0);
    assert_eq!(report.passes, 0);
    assert!(report.not_applicable > 0);
    for inst in instances_for(&config).expect("valid") {
        let v = shiftmodes::check(ClaimId::Cor4_3, &inst);
        assert_eq!(v.outcome, Outcome::NotApplicable);
        assert!(v.witness.is_some(), "NA must carry its reason");
    }
    pass_line("hypothesis discipline", "out-of-scope instances count separately".to_string());
}
