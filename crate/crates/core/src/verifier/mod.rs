//! Machine verification at scale: instance generators, one checker per
//! claim in the catalog, a deterministic parallel sweep engine, and the
//! mode-monotonicity scanner for the open conjecture.

pub mod claims;
pub mod conjecture;
pub mod generate;
pub mod sweep;

pub use claims::{check, ClaimId, Instance, Outcome, PolySource, VerdictRecord};
pub use conjecture::{
    find_near_one_threshold, scan_conjecture, scan_family, ConjectureScanConfig,
    ConjectureScanReport, ConjectureViolation, EmpiricalThreshold, ModeEnd, MonotonicityReport,
    ScanFamily,
};
pub use generate::{gen_nonneg, gen_poly, gen_unimodal, mix_seed, seeded_rationals, Profile};
pub use sweep::{auto_d_grid, instances_for, sweep, DGridSpec, SweepConfig, SweepReport};

/// FNV-1a over newline-joined records; fast, stable across platforms, and
/// plenty for replay comparison (nothing here is adversarial).
pub fn fnv_digest<'a>(lines: impl Iterator<Item = &'a str>) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for line in lines {
        for byte in line.as_bytes().iter().chain(b"\n") {
            hash ^= u64::from(*byte);
            hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    format!("{hash:016x}")
}
