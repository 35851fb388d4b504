//! Named verification suites. Each check binds one mathematical claim to an
//! exact, seeded computation and reports `pass` or `fail` with a witness.

mod dual;
mod golden;
mod localization;
mod pbw;
pub mod sample;
mod shriek;
mod roundtrip;

use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::{AlgebraError, Result};

pub use golden::{golden_dir, golden_path, GoldenNakayama, GOLDEN_ENV};

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 9] = [
    "pbw-laws",
    "center",
    "dual-orthogonality",
    "shriek-dims",
    "frobenius",
    "nakayama",
    "decomposition",
    "localization",
    "roundtrip",
];

pub const DEFAULT_SEED: u64 = 0x5eed;
pub const DEFAULT_BUDGET: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckResult {
    pub claim_id: String,
    pub paper_anchor: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_millis: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteReport {
    pub suite_name: String,
    pub n_range: Vec<usize>,
    pub seed: u64,
    pub budget: usize,
    pub checks: Vec<CheckResult>,
    pub details: Value,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn check(&self, claim_id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.claim_id == claim_id)
    }

    /// Drops timing so that reports are byte-identical across runs.
    pub fn without_timing(mut self) -> Self {
        for c in &mut self.checks {
            c.elapsed_millis = None;
        }
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {} n={:?} seed={} budget={}\n", self.suite_name, self.n_range, self.seed, self.budget);
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("  {status} {} ({})", c.claim_id, c.paper_anchor));
            if let Some(ms) = c.elapsed_millis {
                out.push_str(&format!(" {ms} ms"));
            }
            out.push('\n');
            if let Some(w) = &c.witness {
                out.push_str(&format!("    witness: {w}\n"));
            }
        }
        if let Value::Object(map) = &self.details {
            for (k, v) in map {
                out.push_str(&format!("  {k}: {v}\n"));
            }
        }
        out
    }
}

/// Everything that determines a suite run.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub name: String,
    pub n: usize,
    pub seed: u64,
    pub budget: usize,
    /// Rewrite golden files from the current computation instead of
    /// comparing against them.
    pub bless: bool,
    pub golden_dir: PathBuf,
}

impl SuiteConfig {
    pub fn new(name: &str, n: usize) -> Self {
        SuiteConfig {
            name: name.to_string(),
            n,
            seed: DEFAULT_SEED,
            budget: DEFAULT_BUDGET,
            bless: false,
            golden_dir: golden_dir(),
        }
    }
}

/// Runs a suite with default golden handling.
pub fn run_suite(name: &str, n: usize, seed: u64, budget: usize) -> Result<SuiteReport> {
    run(&SuiteConfig {
        seed,
        budget,
        ..SuiteConfig::new(name, n)
    })
}

/// Largest supported `n` per suite. The PBW suites work on polynomial-size
/// bases; the shriek suites build `2^{2n+1}`-dimensional tables.
pub fn max_n(name: &str) -> Option<usize> {
    match name {
        "pbw-laws" | "center" | "dual-orthogonality" | "localization" | "roundtrip" | "shriek-dims" => Some(3),
        "frobenius" | "nakayama" | "decomposition" => Some(2),
        _ => None,
    }
}

pub fn run(config: &SuiteConfig) -> Result<SuiteReport> {
    let name = config.name.as_str();
    let max = max_n(name).ok_or_else(|| AlgebraError::UnknownSuite(name.to_string()))?;
    if config.n == 0 || config.n > max {
        return Err(AlgebraError::UnsupportedN {
            suite: name.to_string(),
            n: config.n,
            max,
        });
    }
    let mut runner = Runner::default();
    let ctx = Context {
        n: config.n,
        seed: config.seed,
        budget: config.budget,
        suite: name,
    };
    match name {
        "pbw-laws" => pbw::laws(&ctx, &mut runner),
        "center" => pbw::center(&ctx, &mut runner),
        "dual-orthogonality" => dual::orthogonality(&ctx, &mut runner),
        "shriek-dims" => shriek::dims(&ctx, &mut runner),
        "frobenius" => shriek::frobenius(&ctx, &mut runner),
        "nakayama" => shriek::nakayama(&ctx, &mut runner, config),
        "decomposition" => shriek::decomposition(&ctx, &mut runner),
        "localization" => localization::suite(&ctx, &mut runner),
        "roundtrip" => roundtrip::suite(&ctx, &mut runner),
        _ => unreachable!("checked by max_n"),
    }
    Ok(SuiteReport {
        suite_name: name.to_string(),
        n_range: vec![config.n],
        seed: config.seed,
        budget: config.budget,
        checks: runner.checks,
        details: Value::Object(runner.details),
    })
}

/// Parameters shared by the checks of one run.
pub(crate) struct Context<'a> {
    pub n: usize,
    pub seed: u64,
    pub budget: usize,
    pub suite: &'a str,
}

impl Context<'_> {
    pub fn rng(&self, check: &str) -> sample::SampleRng {
        sample::stream(self.seed, self.suite, check)
    }
}

/// A failed check: the rendered counterexample.
#[derive(Debug)]
pub(crate) struct Failure(pub String);

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure(format!("error: {e}"))
    }
}

pub(crate) type Outcome = std::result::Result<(), Failure>;

pub(crate) fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(Failure(witness()))
    }
}

#[derive(Default)]
pub(crate) struct Runner {
    checks: Vec<CheckResult>,
    details: Map<String, Value>,
}

impl Runner {
    pub fn check(&mut self, claim_id: &str, anchor: &str, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = f();
        let elapsed = u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX);
        let (status, witness) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(Failure(w)) => (Status::Fail, Some(w)),
        };
        self.checks.push(CheckResult {
            claim_id: claim_id.to_string(),
            paper_anchor: anchor.to_string(),
            status,
            witness,
            elapsed_millis: Some(elapsed),
        });
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details
            .insert(key.to_string(), serde_json::to_value(value).expect("plain data serializes"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_and_guard() {
        assert_eq!(
            run_suite("nope", 1, 0, 1).unwrap_err(),
            AlgebraError::UnknownSuite("nope".into())
        );
        assert!(matches!(
            run_suite("nakayama", 3, 0, 1).unwrap_err(),
            AlgebraError::UnsupportedN { max: 2, .. }
        ));
        assert!(matches!(
            run_suite("pbw-laws", 0, 0, 1).unwrap_err(),
            AlgebraError::UnsupportedN { .. }
        ));
    }

    #[test]
    fn report_json_shape() {
        let report = run_suite("shriek-dims", 1, 0, 1).unwrap().without_timing();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["suiteName"], "shriek-dims");
        assert_eq!(json["nRange"], serde_json::json!([1]));
        let check = &json["checks"][0];
        assert!(check["claimId"].is_string());
        assert!(check["paperAnchor"].is_string());
        assert_eq!(check["status"], "pass");
        assert!(check.get("elapsedMillis").is_none());
    }
}
