//! On-disk formats: polynomial files and report files.
//!
//! Every rational is serialized as an exact `"p/q"` (or bare integer)
//! string; decimals are rejected on input so inexact values can never
//! sneak in. Report files embed their full generator configuration so a
//! single `replay` command can re-derive every verdict bit-exactly.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use shiftmodes::rational::{format_rational, parse_rational, Rational};
use shiftmodes::sequence::CoeffSeq;
use shiftmodes::verifier::conjecture::{
    ConjectureScanConfig, ConjectureScanReport, ConjectureViolation, ModeEnd, MonotonicityReport,
    ScanFamily,
};
use shiftmodes::verifier::sweep::{DGridSpec, SweepConfig, SweepReport};
use shiftmodes::ClaimId;

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// A polynomial on disk: degree plus exact coefficient strings, constant
/// term first.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolynomialFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub degree: usize,
    pub coefficients: Vec<String>,
}

impl PolynomialFile {
    pub fn from_poly(p: &CoeffSeq, label: Option<String>) -> Self {
        PolynomialFile {
            label,
            degree: p.degree(),
            coefficients: p.coeffs().iter().map(format_rational).collect(),
        }
    }

    pub fn to_poly(&self) -> Result<CoeffSeq> {
        if self.coefficients.len() != self.degree + 1 {
            bail!(
                "degree {} needs {} coefficients, found {}",
                self.degree,
                self.degree + 1,
                self.coefficients.len()
            );
        }
        let coeffs: Vec<Rational> = self
            .coefficients
            .iter()
            .map(|s| parse_rational(s).map_err(|e| anyhow!("{e}")))
            .collect::<Result<_>>()?;
        CoeffSeq::new(coeffs).map_err(|e| anyhow!("{e}"))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        serde_json::from_str(&text)
            .with_context(|| format!("{} is not a valid polynomial file", path.display()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialization cannot fail")
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepConfigDto {
    pub claim: String,
    pub m_min: usize,
    pub m_max: usize,
    /// `"auto"` or a comma-separated list of exact rationals.
    pub d_grid: String,
    pub trials_per_cell: usize,
    pub seed: u64,
}

impl SweepConfigDto {
    pub fn from_config(c: &SweepConfig) -> Self {
        SweepConfigDto {
            claim: c.claim.to_string(),
            m_min: c.m_min,
            m_max: c.m_max,
            d_grid: c.d_grid.describe(),
            trials_per_cell: c.trials_per_cell,
            seed: c.seed,
        }
    }

    pub fn to_config(&self) -> Result<SweepConfig> {
        let claim: ClaimId = self.claim.parse().map_err(|e| anyhow!("{e}"))?;
        let grid = if self.d_grid == "auto" {
            DGridSpec::Auto
        } else {
            DGridSpec::Explicit(parse_grid(&self.d_grid)?)
        };
        Ok(SweepConfig::new(claim, self.m_min, self.m_max)
            .with_grid(grid)
            .with_trials(self.trials_per_cell)
            .with_seed(self.seed))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerdictDto {
    pub m: usize,
    pub d: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d2: Option<String>,
    pub source: String,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReportDto {
    pub config: SweepConfigDto,
    pub trials: usize,
    pub passes: usize,
    pub not_applicable: usize,
    pub failures: Vec<VerdictDto>,
    pub digest: String,
    pub wall_time_ms: u64,
}

impl SweepReportDto {
    pub fn from_report(r: &SweepReport) -> Self {
        SweepReportDto {
            config: SweepConfigDto::from_config(&r.config),
            trials: r.trials,
            passes: r.passes,
            not_applicable: r.not_applicable,
            failures: r
                .failures
                .iter()
                .map(|v| VerdictDto {
                    m: v.instance.m,
                    d: format_rational(&v.instance.d),
                    d2: v.instance.d2.as_ref().map(format_rational),
                    source: v.instance.source.describe(),
                    outcome: v.outcome.to_string(),
                    witness: v.witness.clone(),
                })
                .collect(),
            digest: r.digest.clone(),
            wall_time_ms: r.wall_time.as_millis() as u64,
        }
    }

    /// Everything that must reproduce on replay (wall time excluded).
    pub fn replay_key(&self) -> (usize, usize, usize, Vec<String>, String) {
        (
            self.trials,
            self.passes,
            self.not_applicable,
            self.failures
                .iter()
                .map(|f| format!("{}|{}|{}|{:?}", f.m, f.d, f.source, f.witness))
                .collect(),
            self.digest.clone(),
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ViolationDto {
    pub coefficients: Vec<String>,
    pub d1: String,
    pub d2: String,
    pub end: String,
    pub before: usize,
    pub after: usize,
}

impl ViolationDto {
    pub fn from_violation(v: &ConjectureViolation) -> Self {
        ViolationDto {
            coefficients: v.poly.coeffs().iter().map(format_rational).collect(),
            d1: format_rational(&v.d1),
            d2: format_rational(&v.d2),
            end: match v.end {
                ModeEnd::Smallest => "smallest".to_string(),
                ModeEnd::Greatest => "greatest".to_string(),
            },
            before: v.before,
            after: v.after,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanConfigDto {
    /// `"q"`, `"power"`, `"random"`, or `"input"` for an explicit polynomial.
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_coefficients: Option<Vec<String>>,
    pub m_min: usize,
    pub m_max: usize,
    pub count: usize,
    pub seed: u64,
    pub d_grid: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanReportDto {
    pub config: ScanConfigDto,
    pub polys_scanned: usize,
    /// Populated for single-input scans: the exact mode trajectories.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_modes: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_modes: Option<Vec<usize>>,
    pub violations: Vec<ViolationDto>,
    pub digest: String,
    pub wall_time_ms: u64,
}

impl ScanReportDto {
    pub fn from_family_report(r: &ConjectureScanReport) -> Self {
        ScanReportDto {
            config: ScanConfigDto {
                family: r.config.family.to_string(),
                input_coefficients: None,
                m_min: r.config.m_min,
                m_max: r.config.m_max,
                count: r.config.count,
                seed: r.config.seed,
                d_grid: r.config.grid.iter().map(format_rational).collect(),
            },
            polys_scanned: r.polys_scanned,
            min_modes: None,
            max_modes: None,
            violations: r.violations.iter().map(ViolationDto::from_violation).collect(),
            digest: r.digest.clone(),
            wall_time_ms: r.wall_time.as_millis() as u64,
        }
    }

    pub fn from_single_report(r: &MonotonicityReport, wall_ms: u64, digest: String) -> Self {
        ScanReportDto {
            config: ScanConfigDto {
                family: "input".to_string(),
                input_coefficients: Some(
                    r.poly.coeffs().iter().map(format_rational).collect(),
                ),
                m_min: r.poly.degree(),
                m_max: r.poly.degree(),
                count: 1,
                seed: 0,
                d_grid: r.grid.iter().map(format_rational).collect(),
            },
            polys_scanned: 1,
            min_modes: Some(r.min_modes.clone()),
            max_modes: Some(r.max_modes.clone()),
            violations: r.violations.iter().map(ViolationDto::from_violation).collect(),
            digest,
            wall_time_ms: wall_ms,
        }
    }

    pub fn replay_key(&self) -> (usize, Vec<String>, String) {
        (
            self.polys_scanned,
            self.violations
                .iter()
                .map(|v| format!("{:?}|{}|{}|{}|{}|{}", v.coefficients, v.d1, v.d2, v.end, v.before, v.after))
                .collect(),
            self.digest.clone(),
        )
    }

    pub fn to_scan_config(&self) -> Result<Option<ConjectureScanConfig>> {
        if self.config.family == "input" {
            return Ok(None);
        }
        let family: ScanFamily = self.config.family.parse().map_err(|e| anyhow!("{e}"))?;
        Ok(Some(ConjectureScanConfig {
            family,
            m_min: self.config.m_min,
            m_max: self.config.m_max,
            count: self.config.count,
            seed: self.config.seed,
            grid: parse_grid_list(&self.config.d_grid)?,
        }))
    }
}

/// The envelope written to `--out`: version plus one of the payload kinds.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReportFile {
    Sweep {
        artifact_version: String,
        reports: Vec<SweepReportDto>,
    },
    ConjectureScan {
        artifact_version: String,
        report: ScanReportDto,
    },
}

impl ReportFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        serde_json::from_str(&text)
            .with_context(|| format!("{} is not a valid report file", path.display()))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).expect("serialization cannot fail");
        fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
    }
}

/// Parse a comma-separated list of exact rationals.
pub fn parse_grid(spec: &str) -> Result<Vec<Rational>> {
    spec.split(',')
        .map(|s| parse_rational(s).map_err(|e| anyhow!("{e}")))
        .collect()
}

pub fn parse_grid_list(items: &[String]) -> Result<Vec<Rational>> {
    items
        .iter()
        .map(|s| parse_rational(s).map_err(|e| anyhow!("{e}")))
        .collect()
}
