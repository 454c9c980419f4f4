//! Structured verification records and their JSON/CSV serialization.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::spaces::SpectralCoefficients;

/// One compared pair of sides. For one-sided inequalities the margin is
/// `lhs − rhs` (nonpositive when the inequality holds); for equality
/// checks it is the absolute gap.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SamplePair {
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Aggregate {
    pub max_margin: f64,
    pub max_ratio: f64,
}

/// Quadrature refinement evidence: the largest relative movement of any
/// reported value when the oversampling factor doubles.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Refinement {
    pub oversample: u32,
    pub delta: f64,
}

/// Band-doubling evidence for ratio-style checks.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Stability {
    pub band_doubled: u32,
    pub max_ratio_doubled: f64,
    pub delta: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Record of one inequality check over a sample set.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub inequality: String,
    pub space: String,
    pub pair: Option<String>,
    #[serde(rename = "L")]
    pub band: u32,
    pub n: usize,
    pub seed: u64,
    pub tol: f64,
    pub samples: Vec<SamplePair>,
    pub aggregate: Aggregate,
    pub refinement: Refinement,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub stability: Option<Stability>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn passes(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    /// Per-sample rows as CSV.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,lhs,rhs,margin\n");
        for (i, s) in self.samples.iter().enumerate() {
            out.push_str(&format!("{},{},{},{}\n", i, s.lhs, s.rhs, s.margin));
        }
        out
    }
}

/// Aggregate samples into a report; the verdict is `max margin ≤ tol`
/// unless `verdict_override` supplies a sharper rule.
#[allow(clippy::too_many_arguments)]
pub(crate) fn assemble(
    inequality: &str,
    space: String,
    pair: Option<String>,
    band: u32,
    n: usize,
    seed: u64,
    tol: f64,
    samples: Vec<SamplePair>,
    refinement: Refinement,
    stability: Option<Stability>,
    verdict_override: Option<bool>,
) -> VerificationReport {
    let max_margin = samples.iter().map(|s| s.margin).fold(f64::NEG_INFINITY, f64::max);
    let max_ratio = samples
        .iter()
        .filter(|s| s.rhs != 0.0)
        .map(|s| s.lhs / s.rhs)
        .fold(f64::NEG_INFINITY, f64::max);
    let pass = verdict_override.unwrap_or(max_margin <= tol);
    VerificationReport {
        inequality: inequality.to_string(),
        space,
        pair,
        band,
        n,
        seed,
        tol,
        samples,
        aggregate: Aggregate { max_margin, max_ratio },
        refinement,
        stability,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
    }
}

/// Optimizer bookkeeping for the ratio search.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct OptimizerTrace {
    pub restarts: usize,
    pub sweeps: usize,
    pub evals: usize,
}

/// Result of the empirical ratio-supremum search. The reported ratio is a
/// lower bound for the true supremum and never a certificate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RatioSearchResult {
    pub space: String,
    pub pair: String,
    pub lambda: Vec<String>,
    pub best_ratio: f64,
    pub a_priori_bound: f64,
    pub coefficients: SpectralCoefficients,
    pub trace: OptimizerTrace,
    pub seed: u64,
    pub not_a_certificate: bool,
}

impl RatioSearchResult {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("result serialization");
        s.push('\n');
        s
    }
}

/// Write contents to `path` atomically (write to a sibling temp file,
/// then rename), so failed runs leave no partial report behind.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)
}
