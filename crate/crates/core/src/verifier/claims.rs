//! The claim catalog and its per-claim checkers.
//!
//! Every entry in [`ClaimId`] names one verifiable statement about shifted
//! coefficient sequences. A checker first validates the statement's
//! hypotheses on the given instance (out-of-scope instances yield a
//! not-applicable verdict, which never counts as a pass), then asserts the
//! conclusion with exact arithmetic and reports a witness on failure.

use num::{One, Signed};

use crate::error::{Error, Result};
use crate::modes::{
    m_bar, check_basic_inequality, modes_of_power, q_rule_d_ge_one, q_rule_d_one,
    q_rule_near_one, q_rule_small_d_bounds, remark31_window, succ_ratio_integral,
    unique_mode_conditions,
};
use crate::rational::{format_rational, int, Rational};
use crate::sequence::{CoeffSeq, ModeInterval};
use crate::shift::{difference_identity, q_coeffs, q_difference, shift};
use crate::verifier::generate::{gen_nonneg, gen_poly, gen_unimodal, Profile};

/// Identifiers for every statement the verifier can check. `Conj5.2` is an
/// open conjecture: its checker gathers evidence and can only report
/// "consistent" or "candidate counterexample", never truth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimId {
    Thm5_1,
    Lem2_1,
    Lem2_2,
    Cor2_1,
    Eq1,
    Eq2,
    Eq4,
    Prop3_1,
    Prop3_2,
    Prop3_3,
    Prop3_4,
    Cor3_5,
    Prop3_6,
    Cor3_7i,
    Cor3_7ii,
    Prop3_8i,
    Prop3_8ii,
    Prop3_8iii,
    Rem3_1,
    Thm4_1,
    Cor4_2,
    Cor4_3,
    Cor4_4,
    Thm4_5,
    Conj5_2,
}

impl ClaimId {
    pub const ALL: [ClaimId; 25] = [
        ClaimId::Thm5_1,
        ClaimId::Lem2_1,
        ClaimId::Lem2_2,
        ClaimId::Cor2_1,
        ClaimId::Eq1,
        ClaimId::Eq2,
        ClaimId::Eq4,
        ClaimId::Prop3_1,
        ClaimId::Prop3_2,
        ClaimId::Prop3_3,
        ClaimId::Prop3_4,
        ClaimId::Cor3_5,
        ClaimId::Prop3_6,
        ClaimId::Cor3_7i,
        ClaimId::Cor3_7ii,
        ClaimId::Prop3_8i,
        ClaimId::Prop3_8ii,
        ClaimId::Prop3_8iii,
        ClaimId::Rem3_1,
        ClaimId::Thm4_1,
        ClaimId::Cor4_2,
        ClaimId::Cor4_3,
        ClaimId::Cor4_4,
        ClaimId::Thm4_5,
        ClaimId::Conj5_2,
    ];

    /// Every claim that is a proved statement; a sweep failure on any of
    /// these is a defect in this crate, never in the statement.
    pub fn theorems() -> impl Iterator<Item = ClaimId> {
        Self::ALL.into_iter().filter(|c| *c != ClaimId::Conj5_2)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimId::Thm5_1 => "Thm5.1",
            ClaimId::Lem2_1 => "Lem2.1",
            ClaimId::Lem2_2 => "Lem2.2",
            ClaimId::Cor2_1 => "Cor2.1",
            ClaimId::Eq1 => "Eq1",
            ClaimId::Eq2 => "Eq2",
            ClaimId::Eq4 => "Eq4",
            ClaimId::Prop3_1 => "Prop3.1",
            ClaimId::Prop3_2 => "Prop3.2",
            ClaimId::Prop3_3 => "Prop3.3",
            ClaimId::Prop3_4 => "Prop3.4",
            ClaimId::Cor3_5 => "Cor3.5",
            ClaimId::Prop3_6 => "Prop3.6",
            ClaimId::Cor3_7i => "Cor3.7i",
            ClaimId::Cor3_7ii => "Cor3.7ii",
            ClaimId::Prop3_8i => "Prop3.8i",
            ClaimId::Prop3_8ii => "Prop3.8ii",
            ClaimId::Prop3_8iii => "Prop3.8iii",
            ClaimId::Rem3_1 => "Rem3.1",
            ClaimId::Thm4_1 => "Thm4.1",
            ClaimId::Cor4_2 => "Cor4.2",
            ClaimId::Cor4_3 => "Cor4.3",
            ClaimId::Cor4_4 => "Cor4.4",
            ClaimId::Thm4_5 => "Thm4.5",
            ClaimId::Conj5_2 => "Conj5.2",
        }
    }

    /// One-line statement of the claim, in sequence terms.
    pub fn description(&self) -> &'static str {
        match self {
            ClaimId::Thm5_1 => {
                "the shift of every nonnegative non-decreasing sequence is unimodal"
            }
            ClaimId::Lem2_1 => {
                "multiplying a unimodal polynomial by (x+d) keeps it unimodal and moves the smallest mode to t or t+1"
            }
            ClaimId::Lem2_2 => {
                "for nonnegative P the shift is non-increasing from index m_bar; a mode lies at 0 or 1 when d >= (m-1)/2; the shift is non-increasing when d >= m"
            }
            ClaimId::Cor2_1 => {
                "for monic non-decreasing P != x^m: no mode exceeds m_bar, and the step after m_bar drops strictly"
            }
            ClaimId::Eq1 => "m - d <= (d+1) * m_bar < m + 1",
            ClaimId::Eq2 => {
                "the closed form for (j+1) d^(j+1) (b_(j+1) - b_j) equals the direct difference for all j"
            }
            ClaimId::Eq4 => {
                "the closed form for d_j - d_(j-1) of the shifted all-ones polynomial equals the direct difference for all j"
            }
            ClaimId::Prop3_1 => {
                "(x+d)^m has modes {m_bar, m_bar+1} when (m+1)/(d+1) is a positive integer, otherwise the unique mode m_bar"
            }
            ClaimId::Prop3_2 => "the shifted all-ones coefficients are strictly log-concave",
            ClaimId::Prop3_3 => {
                "the all-ones shift at d = 1 has modes {m/2-1, m/2} for even m, else the unique mode (m-1)/2"
            }
            ClaimId::Prop3_4 => {
                "for d >= 1 the all-ones shift has at most two modes m_bar-1 and m_bar, and the unique mode m_bar when the degree-(m+1) anchor exceeds m_bar"
            }
            ClaimId::Cor3_5 => {
                "for d >= 1 with (m+1)/(d+1) a positive integer, the all-ones shift has the unique mode m_bar"
            }
            ClaimId::Prop3_6 => {
                "for d > 1 with d*m_bar a positive integer, the all-ones shift has the unique mode m_bar"
            }
            ClaimId::Cor3_7i => {
                "for integer d > 1 the all-ones shift has the unique mode m_bar"
            }
            ClaimId::Cor3_7ii => {
                "for d > 1 with m/(d+1) a positive integer, the all-ones shift has the unique mode m_bar"
            }
            ClaimId::Prop3_8i => {
                "for 0 < d < 1 the all-ones shift satisfies floor(m/2) <= M_* <= M^* <= min(m-1, m_bar)"
            }
            ClaimId::Prop3_8ii => {
                "the all-ones shift has the unique mode m-1 if and only if 0 < d < 1/C(m,2)"
            }
            ClaimId::Prop3_8iii => {
                "for 0 < 1-d <= 1/m the all-ones shift has at most two modes m_bar-1 and m_bar, and the unique mode m_bar when (m+1)/(d+1) is integral"
            }
            ClaimId::Rem3_1 => {
                "inside the window 1/C(m,2) < d < 1/m the anchor is m yet every mode of the all-ones shift is below m-1"
            }
            ClaimId::Thm4_1 => {
                "the all-ones shift bounds M_* below and the pure-power shift bounds M^* above, with mode transfer at the anchor"
            }
            ClaimId::Cor4_2 => {
                "for d >= 1, P(x+d) has at most two modes: {m_bar, m_bar+1} for x^m, else {m_bar-1, m_bar}"
            }
            ClaimId::Cor4_3 => {
                "P(x+1) has the mode ceil((m-1)/2), unique unless P is x^m or the all-ones polynomial"
            }
            ClaimId::Cor4_4 => {
                "for d > 1 and P != x^m, any of five integrality conditions forces the unique mode m_bar"
            }
            ClaimId::Thm4_5 => {
                "for 0 < d < 1 and P != x^m, floor(m/2) <= M_* <= M^* <= m_bar"
            }
            ClaimId::Conj5_2 => {
                "open conjecture: M_* and M^* are non-increasing in d (evidence gathering only)"
            }
        }
    }
}

impl std::fmt::Display for ClaimId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl std::str::FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

/// Where the instance polynomial comes from. Seeded sources regenerate
/// deterministically, so a failure record replays from its description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolySource {
    Explicit(CoeffSeq),
    Profile { profile: Profile, monic: bool, seed: u64 },
    Unimodal { seed: u64 },
    Nonneg { seed: u64 },
}

impl PolySource {
    pub fn realize(&self, m: usize) -> CoeffSeq {
        match self {
            PolySource::Explicit(p) => p.clone(),
            PolySource::Profile { profile, monic, seed } => gen_poly(m, *profile, *monic, *seed),
            PolySource::Unimodal { seed } => gen_unimodal(m, *seed),
            PolySource::Nonneg { seed } => gen_nonneg(m, *seed),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            PolySource::Explicit(p) => format!("explicit:{p}"),
            PolySource::Profile { profile, monic, seed } => {
                format!("profile:{profile}:monic={monic}:seed={seed}")
            }
            PolySource::Unimodal { seed } => format!("unimodal:seed={seed}"),
            PolySource::Nonneg { seed } => format!("nonneg:seed={seed}"),
        }
    }
}

/// One checkable instance: a degree, one shift (two for the conjecture
/// claim, which compares modes at `d < d2`), and a polynomial source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub m: usize,
    pub d: Rational,
    pub d2: Option<Rational>,
    pub source: PolySource,
}

impl Instance {
    pub fn new(m: usize, d: Rational, source: PolySource) -> Self {
        Instance { m, d, d2: None, source }
    }

    pub fn poly(&self) -> CoeffSeq {
        self.source.realize(self.m)
    }

    pub fn describe(&self) -> String {
        let d2 = match &self.d2 {
            Some(d2) => format!(";d2={}", format_rational(d2)),
            None => String::new(),
        };
        format!(
            "m={};d={}{};poly={}",
            self.m,
            format_rational(&self.d),
            d2,
            self.source.describe()
        )
    }
}

/// Outcome of one check. Not-applicable instances are counted separately
/// and never count as passes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Outcome::Pass => write!(f, "pass"),
            Outcome::Fail => write!(f, "fail"),
            Outcome::NotApplicable => write!(f, "not-applicable"),
        }
    }
}

/// Per-instance verdict. On failure the witness holds the expected versus
/// observed data; on a not-applicable verdict it holds the unmet
/// hypothesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerdictRecord {
    pub claim: ClaimId,
    pub instance: Instance,
    pub outcome: Outcome,
    pub witness: Option<String>,
}

impl VerdictRecord {
    fn pass(claim: ClaimId, instance: Instance) -> Self {
        VerdictRecord { claim, instance, outcome: Outcome::Pass, witness: None }
    }

    fn fail(claim: ClaimId, instance: Instance, witness: String) -> Self {
        VerdictRecord { claim, instance, outcome: Outcome::Fail, witness: Some(witness) }
    }

    fn na(claim: ClaimId, instance: Instance, reason: String) -> Self {
        VerdictRecord {
            claim,
            instance,
            outcome: Outcome::NotApplicable,
            witness: Some(reason),
        }
    }

    /// Canonical one-line form; the sweep digest is computed over these.
    pub fn canonical_line(&self) -> String {
        format!(
            "{}|{}|{}|{}",
            self.claim,
            self.instance.describe(),
            self.outcome,
            self.witness.as_deref().unwrap_or("-")
        )
    }
}

struct Ctx {
    claim: ClaimId,
    instance: Instance,
}

impl Ctx {
    fn pass(self) -> VerdictRecord {
        VerdictRecord::pass(self.claim, self.instance)
    }

    fn fail(self, witness: impl Into<String>) -> VerdictRecord {
        VerdictRecord::fail(self.claim, self.instance, witness.into())
    }

    fn na(self, reason: impl Into<String>) -> VerdictRecord {
        VerdictRecord::na(self.claim, self.instance, reason.into())
    }

    fn verdict(self, ok: bool, witness: impl Into<String>) -> VerdictRecord {
        if ok {
            self.pass()
        } else {
            self.fail(witness)
        }
    }
}

fn mode_interval_string(iv: Option<ModeInterval>) -> String {
    match iv {
        Some(iv) => iv.to_string(),
        None => "(not unimodal)".to_string(),
    }
}

/// Run the checker for `claim` on `instance`.
pub fn check(claim: ClaimId, instance: &Instance) -> VerdictRecord {
    let ctx = Ctx { claim, instance: instance.clone() };
    let m = instance.m;
    let d = instance.d.clone();
    if !d.is_positive() {
        return ctx.na("requires d > 0");
    }

    match claim {
        ClaimId::Thm5_1 => {
            let p = instance.poly();
            if !p.is_nondecreasing() {
                return ctx.na("requires non-decreasing coefficients");
            }
            let b = shift(&p, &d).expect("d > 0");
            let analysis = b.analyze();
            ctx.verdict(
                analysis.is_unimodal,
                format!("shift {b} is not unimodal (witness {:?})", analysis.violation_witness),
            )
        }

        ClaimId::Lem2_1 => {
            let f = instance.poly();
            let fa = f.analyze();
            let Some(t) = fa.min_mode() else {
                return ctx.na("requires a unimodal polynomial");
            };
            let g = f.multiply_by_linear(&d).expect("d > 0");
            let ga = g.analyze();
            let ok = ga.is_unimodal && ga.min_mode().is_some_and(|s| s == t || s == t + 1);
            ctx.verdict(
                ok,
                format!(
                    "smallest mode of (x+d)f moved from {t} to {}; product {g}",
                    mode_interval_string(ga.mode_set)
                ),
            )
        }

        ClaimId::Lem2_2 => {
            let p = instance.poly();
            let b = shift(&p, &d).expect("d > 0");
            let mb = m_bar(m, &d).expect("d > 0");
            for j in mb + 1..=m {
                if b[j - 1] < b[j] {
                    return ctx.fail(format!(
                        "tail rises at index {j}: b_{}={} < b_{}={}",
                        j - 1,
                        format_rational(&b[j - 1]),
                        j,
                        format_rational(&b[j])
                    ));
                }
            }
            if &d * int(2) >= int(m as i64 - 1) {
                let analysis = b.analyze();
                let ok = analysis.is_unimodal && analysis.min_mode().is_some_and(|s| s <= 1);
                if !ok {
                    return ctx.fail(format!(
                        "d >= (m-1)/2 but modes are {} for {b}",
                        mode_interval_string(analysis.mode_set)
                    ));
                }
            }
            if d >= int(m as i64) {
                if let Some(j) = (1..=m).find(|&j| b[j - 1] < b[j]) {
                    return ctx.fail(format!("d >= m but b rises at index {j}: {b}"));
                }
            }
            ctx.pass()
        }

        ClaimId::Cor2_1 => {
            let p = instance.poly();
            if !p.in_upward_class() {
                return ctx.na("requires monic non-decreasing P");
            }
            if p.is_pure_power() {
                return ctx.na("requires P != x^m");
            }
            let b = shift(&p, &d).expect("d > 0");
            let analysis = b.analyze();
            let mb = m_bar(m, &d).expect("d > 0");
            if !analysis.max_mode().is_some_and(|hi| hi <= mb) {
                return ctx.fail(format!(
                    "greatest mode {} exceeds anchor {mb} for {b}",
                    mode_interval_string(analysis.mode_set)
                ));
            }
            if mb + 1 <= m && b[mb + 1] >= b[mb] {
                return ctx.fail(format!(
                    "no strict drop after the anchor: b_{}={} >= b_{}={}",
                    mb + 1,
                    format_rational(&b[mb + 1]),
                    mb,
                    format_rational(&b[mb])
                ));
            }
            ctx.pass()
        }

        ClaimId::Eq1 => {
            let ok = check_basic_inequality(m, &d).expect("d > 0");
            ctx.verdict(ok, format!("anchor inequality fails for m={m}"))
        }

        ClaimId::Eq2 => {
            if m == 0 {
                return ctx.na("requires m >= 1");
            }
            let p = instance.poly();
            let b = shift(&p, &d).expect("d > 0");
            for j in 0..m {
                let closed = difference_identity(&p, &d, j).expect("j in range");
                let direct = (&b[j + 1] - &b[j]) * int(j as i64 + 1) * d.pow(j as i32 + 1);
                if closed != direct {
                    return ctx.fail(format!(
                        "difference identity fails at j={j}: closed {} vs direct {}",
                        format_rational(&closed),
                        format_rational(&direct)
                    ));
                }
            }
            ctx.pass()
        }

        ClaimId::Eq4 => {
            if m == 0 {
                return ctx.na("requires m >= 1");
            }
            if !instance.poly().is_all_ones() {
                return ctx.na("statement concerns the all-ones polynomial");
            }
            let q = q_coeffs(m, &d).expect("d > 0");
            for j in 1..=m {
                let closed = q_difference(m, &d, j).expect("j in range");
                let direct = &q[j] - &q[j - 1];
                if closed != direct {
                    return ctx.fail(format!(
                        "all-ones difference fails at j={j}: closed {} vs direct {}",
                        format_rational(&closed),
                        format_rational(&direct)
                    ));
                }
            }
            ctx.pass()
        }

        ClaimId::Prop3_1 => {
            if m == 0 {
                return ctx.na("requires m >= 1");
            }
            if !instance.poly().is_pure_power() {
                return ctx.na("statement concerns x^m");
            }
            let b = shift(&CoeffSeq::pure_power(m), &d).expect("d > 0");
            let truth = b.analyze();
            let pred = modes_of_power(m, &d).expect("d > 0");
            let expected = pred.exact_modes().expect("power rule is exact");
            ctx.verdict(
                truth.mode_set == Some(expected),
                format!(
                    "predicted {expected} but observed {} for {b}",
                    mode_interval_string(truth.mode_set)
                ),
            )
        }

        ClaimId::Prop3_2 => {
            if !instance.poly().is_all_ones() {
                return ctx.na("statement concerns the all-ones polynomial");
            }
            let q = q_coeffs(m, &d).expect("d > 0");
            let analysis = q.analyze();
            ctx.verdict(
                analysis.is_strictly_log_concave,
                format!(
                    "not strictly log-concave at {:?}: {q}",
                    analysis.violation_witness
                ),
            )
        }

        ClaimId::Prop3_3 => {
            if m == 0 {
                return ctx.na("requires m >= 1");
            }
            if !instance.poly().is_all_ones() {
                return ctx.na("statement concerns the all-ones polynomial");
            }
            if !d.is_one() {
                return ctx.na("requires d = 1");
            }
            let truth = q_coeffs(m, &d).expect("d > 0").analyze();
            let expected = q_rule_d_one(m, &d).exact_modes().expect("d = 1 rule is exact");
            ctx.verdict(
                truth.mode_set == Some(expected),
                format!(
                    "predicted {expected} but observed {}",
                    mode_interval_string(truth.mode_set)
                ),
            )
        }

        ClaimId::Prop3_4 => {
            if m == 0 {
                return ctx.na("requires m >= 1");
            }
            if !instance.poly().is_all_ones() {
                return ctx.na("statement concerns the all-ones polynomial");
            }
            if d < Rational::one() {
                return ctx.na("requires d >= 1");
            }
            let truth = q_coeffs(m, &d).expect("d > 0").analyze();
            let pred = q_rule_d_ge_one(m, &d);
            let q = q_coeffs(m, &d).expect("d > 0");
            ctx.verdict(
                pred.holds_for(&truth, q.coeffs()),
                format!(
                    "prediction {pred} fails: observed {}",
                    mode_interval_string(truth.mode_set)
                ),
            )
        }

        ClaimId::Cor3_5 | ClaimId::Prop3_6 | ClaimId::Cor3_7i | ClaimId::Cor3_7ii => {
            if m == 0 {
                return ctx.na("requires m >= 1");
            }
            if !instance.poly().is_all_ones() {
                return ctx.na("statement concerns the all-ones polynomial");
            }
            let applicable = match claim {
                ClaimId::Cor3_5 => d >= Rational::one() && succ_ratio_integral(m, &d),
                ClaimId::Prop3_6 => {
                    d > Rational::one() && {
                        let mb = m_bar(m, &d).expect("d > 0");
                        crate::rational::is_positive_integer(&(&d * int(mb as i64)))
                    }
                }
                ClaimId::Cor3_7i => d > Rational::one() && d.is_integer(),
                ClaimId::Cor3_7ii => {
                    d > Rational::one()
                        && crate::rational::is_positive_integer(
                            &(int(m as i64) / (&d + Rational::one())),
                        )
                }
                _ => unreachable!(),
            };
            if !applicable {
                return ctx.na("integrality hypothesis does not hold");
            }
            let mb = m_bar(m, &d).expect("d > 0");
            let truth = q_coeffs(m, &d).expect("d > 0").analyze();
            ctx.verdict(
                truth.mode_set == Some(ModeInterval::single(mb)),
                format!(
                    "expected unique mode {mb} but observed {}",
                    mode_interval_string(truth.mode_set)
                ),
            )
        }

        ClaimId::Prop3_8i => {
            if m == 0 {
                return ctx.na("requires m >= 1");
            }
            if !instance.poly().is_all_ones() {
                return ctx.na("statement concerns the all-ones polynomial");
            }
            if !(d.is_positive() && d < Rational::one()) {
                return ctx.na("requires 0 < d < 1");
            }
            let q = q_coeffs(m, &d).expect("d > 0");
            let truth = q.analyze();
            let pred = q_rule_small_d_bounds(m, &d);
            ctx.verdict(
                pred.holds_for(&truth, q.coeffs()),
                format!(
                    "bounds {pred} fail: observed {}",
                    mode_interval_string(truth.mode_set)
                ),
            )
        }

        ClaimId::Prop3_8ii => {
            if m < 2 {
                return ctx.na("requires m >= 2");
            }
            if !instance.poly().is_all_ones() {
                return ctx.na("statement concerns the all-ones polynomial");
            }
            if !(d.is_positive() && d < Rational::one()) {
                return ctx.na("requires 0 < d < 1");
            }
            let threshold = int((m * (m - 1) / 2) as i64).recip();
            let tiny = d < threshold;
            let truth = q_coeffs(m, &d).expect("d > 0").analyze();
            let unique_last = truth.mode_set == Some(ModeInterval::single(m - 1));
            ctx.verdict(
                tiny == unique_last,
                format!(
                    "biconditional fails: d<1/C(m,2)={tiny} but unique-mode-(m-1)={unique_last}, observed {}",
                    mode_interval_string(truth.mode_set)
                ),
            )
        }

        ClaimId::Prop3_8iii => {
            if m == 0 {
                return ctx.na("requires m >= 1");
            }
            if !instance.poly().is_all_ones() {
                return ctx.na("statement concerns the all-ones polynomial");
            }
            let gap = Rational::one() - &d;
            if !(gap.is_positive() && gap <= int(m as i64).recip()) {
                return ctx.na("requires 0 < 1 - d <= 1/m");
            }
            let q = q_coeffs(m, &d).expect("d > 0");
            let truth = q.analyze();
            let pred = q_rule_near_one(m, &d);
            ctx.verdict(
                pred.holds_for(&truth, q.coeffs()),
                format!(
                    "prediction {pred} fails: observed {}",
                    mode_interval_string(truth.mode_set)
                ),
            )
        }

        ClaimId::Rem3_1 => {
            if !instance.poly().is_all_ones() {
                return ctx.na("statement concerns the all-ones polynomial");
            }
            if !remark31_window(m, &d) {
                return ctx.na("requires 1/C(m,2) < d < 1/m");
            }
            let mb = m_bar(m, &d).expect("d > 0");
            if mb != m {
                return ctx.fail(format!("anchor should be m={m} inside the window, got {mb}"));
            }
            let q = q_coeffs(m, &d).expect("d > 0");
            if q[m - 2] <= q[m - 1] {
                return ctx.fail(format!(
                    "expected d_(m-2) > d_(m-1), got {} <= {}",
                    format_rational(&q[m - 2]),
                    format_rational(&q[m - 1])
                ));
            }
            let truth = q.analyze();
            ctx.verdict(
                truth.max_mode().is_some_and(|hi| hi <= m - 2),
                format!(
                    "a mode reaches m-1 or above: {}",
                    mode_interval_string(truth.mode_set)
                ),
            )
        }

        ClaimId::Thm4_1 => {
            if m == 0 {
                return ctx.na("requires m >= 1");
            }
            let p = instance.poly();
            if !p.in_upward_class() {
                return ctx.na("requires monic non-decreasing P");
            }
            let b = shift(&p, &d).expect("d > 0");
            let pa = b.analyze();
            let qa = q_coeffs(m, &d).expect("d > 0").analyze();
            let xa = shift(&CoeffSeq::pure_power(m), &d).expect("d > 0").analyze();
            let (Some(p_modes), Some(q_modes), Some(x_modes)) =
                (pa.mode_set, qa.mode_set, xa.mode_set)
            else {
                return ctx.fail("a shifted sequence failed to be unimodal");
            };
            if !(q_modes.lo <= p_modes.lo && p_modes.hi <= x_modes.hi) {
                return ctx.fail(format!(
                    "sandwich fails: all-ones {q_modes}, P {p_modes}, pure power {x_modes}"
                ));
            }
            let mb = m_bar(m, &d).expect("d > 0");
            if q_modes.contains(mb) && !p_modes.contains(mb) {
                return ctx.fail(format!(
                    "anchor mode {mb} of the all-ones shift did not transfer: P has {p_modes}"
                ));
            }
            let exempt = p.is_pure_power() && succ_ratio_integral(m, &d);
            if q_modes == ModeInterval::single(mb)
                && !exempt
                && p_modes != ModeInterval::single(mb)
            {
                return ctx.fail(format!(
                    "unique anchor mode {mb} did not transfer: P has {p_modes}"
                ));
            }
            ctx.pass()
        }

        ClaimId::Cor4_2 => {
            if m == 0 {
                return ctx.na("requires m >= 1");
            }
            let p = instance.poly();
            if !p.in_upward_class() {
                return ctx.na("requires monic non-decreasing P");
            }
            if d < Rational::one() {
                return ctx.na("requires d >= 1");
            }
            let mb = m_bar(m, &d).expect("d > 0");
            let allowed: Vec<usize> = if p.is_pure_power() {
                vec![mb, mb + 1]
            } else if mb == 0 {
                vec![0]
            } else {
                vec![mb - 1, mb]
            };
            let b = shift(&p, &d).expect("d > 0");
            let truth = b.analyze();
            ctx.verdict(
                truth.mode_set.is_some_and(|s| s.subset_of(&allowed)),
                format!(
                    "modes {} escape the candidate set {allowed:?}",
                    mode_interval_string(truth.mode_set)
                ),
            )
        }

        ClaimId::Cor4_3 => {
            if m == 0 {
                return ctx.na("requires m >= 1");
            }
            let p = instance.poly();
            if !p.in_upward_class() {
                return ctx.na("requires monic non-decreasing P");
            }
            if !d.is_one() {
                return ctx.na("requires d = 1");
            }
            let center = m / 2; // ceil((m-1)/2)
            let truth = shift(&p, &d).expect("d > 0").analyze();
            let Some(modes) = truth.mode_set else {
                return ctx.fail("shift is not unimodal");
            };
            if !modes.contains(center) {
                return ctx.fail(format!("{center} is not a mode: observed {modes}"));
            }
            // The exact characterization (the repaired uniqueness clause;
            // see rule_unit_shift): the center ties its left neighbor on
            // even degrees exactly over the flat-upper-half family, and
            // its right neighbor only for the odd-degree pure power.
            let shape = crate::modes::PolyShape::of(&p);
            let expected = if m % 2 == 1 && shape.is_pure_power {
                ModeInterval { lo: center, hi: center + 1 }
            } else if m >= 2 && m % 2 == 0 && shape.flat_upper_half {
                ModeInterval { lo: center - 1, hi: center }
            } else {
                ModeInterval::single(center)
            };
            ctx.verdict(
                modes == expected,
                format!("expected modes {expected}, observed {modes} for P={p}"),
            )
        }

        ClaimId::Cor4_4 => {
            if m == 0 {
                return ctx.na("requires m >= 1");
            }
            let p = instance.poly();
            if !p.in_upward_class() {
                return ctx.na("requires monic non-decreasing P");
            }
            if p.is_pure_power() {
                return ctx.na("requires P != x^m");
            }
            if d <= Rational::one() {
                return ctx.na("requires d > 1");
            }
            let conds = unique_mode_conditions(m, &d).expect("d > 0");
            if !conds.iter().any(|&c| c) {
                return ctx.na("none of the five side conditions holds");
            }
            let mb = m_bar(m, &d).expect("d > 0");
            let truth = shift(&p, &d).expect("d > 0").analyze();
            ctx.verdict(
                truth.mode_set == Some(ModeInterval::single(mb)),
                format!(
                    "conditions {conds:?} promise unique mode {mb}, observed {}",
                    mode_interval_string(truth.mode_set)
                ),
            )
        }

        ClaimId::Thm4_5 => {
            if m == 0 {
                return ctx.na("requires m >= 1");
            }
            let p = instance.poly();
            if !p.in_upward_class() {
                return ctx.na("requires monic non-decreasing P");
            }
            if p.is_pure_power() {
                return ctx.na("requires P != x^m");
            }
            if !(d.is_positive() && d < Rational::one()) {
                return ctx.na("requires 0 < d < 1");
            }
            let mb = m_bar(m, &d).expect("d > 0");
            let truth = shift(&p, &d).expect("d > 0").analyze();
            ctx.verdict(
                truth
                    .mode_set
                    .is_some_and(|s| s.lo >= m / 2 && s.hi <= mb),
                format!(
                    "sandwich [{}..{mb}] fails: observed {}",
                    m / 2,
                    mode_interval_string(truth.mode_set)
                ),
            )
        }

        ClaimId::Conj5_2 => {
            let Some(d2) = instance.d2.clone() else {
                return ctx.na("requires a pair d < d2");
            };
            if d >= d2 {
                return ctx.na("requires d < d2");
            }
            let p = instance.poly();
            if !p.is_nondecreasing() {
                return ctx.na("requires non-decreasing coefficients");
            }
            let first = shift(&p, &d).expect("d > 0").analyze();
            let second = shift(&p, &d2).expect("d2 > 0").analyze();
            let (Some(a), Some(b)) = (first.mode_set, second.mode_set) else {
                return ctx.fail("a shifted sequence failed to be unimodal");
            };
            ctx.verdict(
                a.lo >= b.lo && a.hi >= b.hi,
                format!(
                    "candidate counterexample: modes {a} at d={} vs {b} at d2={} for P={p}",
                    format_rational(&d),
                    format_rational(&d2)
                ),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn explicit(coeffs: &[i64], m: usize, d: Rational) -> Instance {
        Instance::new(m, d, PolySource::Explicit(CoeffSeq::from_integers(coeffs).unwrap()))
    }

    #[test]
    fn claim_ids_round_trip_through_strings() {
        for c in ClaimId::ALL {
            assert_eq!(c.as_str().parse::<ClaimId>().unwrap(), c);
        }
        assert!(matches!(
            "Nope".parse::<ClaimId>(),
            Err(Error::UnknownClaim(_))
        ));
        assert_eq!(ClaimId::theorems().count(), 24);
    }

    #[test]
    fn main_theorem_worked_example() {
        let v = check(ClaimId::Thm5_1, &explicit(&[1, 2, 3], 2, rat(1, 2)));
        assert_eq!(v.outcome, Outcome::Pass);
    }

    #[test]
    fn remark_window_worked_example() {
        let inst = Instance::new(
            5,
            rat(1, 8),
            PolySource::Profile { profile: Profile::AllOnes, monic: true, seed: 0 },
        );
        let v = check(ClaimId::Rem3_1, &inst);
        assert_eq!(v.outcome, Outcome::Pass);
        // Outside the window: not applicable, never a pass.
        let inst = Instance::new(
            5,
            rat(1, 2),
            PolySource::Profile { profile: Profile::AllOnes, monic: true, seed: 0 },
        );
        let v = check(ClaimId::Rem3_1, &inst);
        assert_eq!(v.outcome, Outcome::NotApplicable);
        assert!(v.witness.is_some());
    }

    #[test]
    fn conjecture_pair_worked_example() {
        let mut inst = Instance::new(
            4,
            rat(1, 2),
            PolySource::Profile { profile: Profile::AllOnes, monic: true, seed: 0 },
        );
        inst.d2 = Some(rat(1, 1));
        let v = check(ClaimId::Conj5_2, &inst);
        assert_eq!(v.outcome, Outcome::Pass);

        let mut unordered = inst.clone();
        unordered.d2 = Some(rat(1, 4));
        assert_eq!(check(ClaimId::Conj5_2, &unordered).outcome, Outcome::NotApplicable);
    }

    #[test]
    fn hypothesis_discipline_yields_not_applicable() {
        // Cor4.3 needs d = 1.
        let v = check(ClaimId::Cor4_3, &explicit(&[0, 1, 1], 2, rat(3, 2)));
        assert_eq!(v.outcome, Outcome::NotApplicable);
        // Cor2.1 needs P != x^m.
        let v = check(
            ClaimId::Cor2_1,
            &Instance::new(3, rat(1, 2), PolySource::Explicit(CoeffSeq::pure_power(3))),
        );
        assert_eq!(v.outcome, Outcome::NotApplicable);
        // Thm5.1 needs non-decreasing input.
        let v = check(ClaimId::Thm5_1, &explicit(&[3, 1, 2], 2, rat(1, 2)));
        assert_eq!(v.outcome, Outcome::NotApplicable);
    }

    #[test]
    fn passes_carry_no_witness_and_na_records_its_reason() {
        let v = check(ClaimId::Prop3_3, &explicit(&[1, 1, 1], 2, int(1)));
        assert_eq!(v.outcome, Outcome::Pass);
        assert!(v.witness.is_none());
        let v = check(ClaimId::Prop3_3, &explicit(&[1, 2, 3], 2, int(1)));
        assert_eq!(v.outcome, Outcome::NotApplicable);
        assert!(v.witness.is_some());
    }

    #[test]
    fn spot_check_every_theorem_on_a_small_grid() {
        for claim in ClaimId::theorems() {
            let mut applicable = 0;
            for m in 1..=12usize {
                for d in [rat(1, 7), rat(1, 2), rat(9, 10), int(1), rat(3, 2), int(2), int(13)] {
                    for (profile, monic) in [
                        (Profile::AllOnes, true),
                        (Profile::PurePower, true),
                        (Profile::UniformSteps, true),
                        (Profile::Sparse, true),
                    ] {
                        let inst = Instance::new(
                            m,
                            d.clone(),
                            PolySource::Profile { profile, monic, seed: mix(m, &d) },
                        );
                        let v = check(claim, &inst);
                        match v.outcome {
                            Outcome::Pass => applicable += 1,
                            Outcome::Fail => panic!(
                                "{claim} failed on {}: {}",
                                inst.describe(),
                                v.witness.unwrap_or_default()
                            ),
                            Outcome::NotApplicable => {}
                        }
                    }
                }
            }
            assert!(applicable > 0, "{claim} never applied on the spot grid");
        }
    }

    fn mix(m: usize, d: &Rational) -> u64 {
        use crate::verifier::generate::mix_seed;
        mix_seed(42, m as u64, d.numer().bits(), d.denom().bits())
    }

    #[test]
    fn lemma_checks_use_their_own_generators() {
        for seed in 0..40u64 {
            let inst = Instance::new(7, rat(5, 3), PolySource::Unimodal { seed });
            let v = check(ClaimId::Lem2_1, &inst);
            assert_eq!(v.outcome, Outcome::Pass, "{:?}", v.witness);
            let inst = Instance::new(7, rat(5, 3), PolySource::Nonneg { seed });
            let v = check(ClaimId::Lem2_2, &inst);
            assert_eq!(v.outcome, Outcome::Pass, "{:?}", v.witness);
        }
    }
}
