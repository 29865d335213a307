//! Verification matrices loaded from TOML.

use serde::{Deserialize, Serialize};

use super::bounds::{BoundEngine, BoundPair};
use super::{Case, TheoremError};
use crate::cone::{cone_equal, ConeV};

pub const REFERENCE_SUITE: &str = include_str!("../../data/reference_suite.toml");

#[derive(Debug, Clone, Deserialize)]
pub struct SuiteCase {
    pub name: String,
    pub n: usize,
    pub d: u64,
    pub i: usize,
    pub status: String,
    pub lower: Option<Vec<Vec<i64>>>,
    pub upper: Option<Vec<Vec<i64>>>,
    pub simplicial: Option<bool>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Suite {
    #[serde(rename = "case")]
    pub cases: Vec<SuiteCase>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseOutcome {
    pub name: String,
    pub passed: bool,
    pub failures: Vec<String>,
    pub report: Option<BoundPair>,
}

impl SuiteCase {
    pub fn case(&self) -> Case {
        Case {
            n: self.n,
            d: self.d,
            i: self.i,
        }
    }
}

pub fn parse_suite(text: &str) -> Result<Suite, TheoremError> {
    toml::from_str(text).map_err(|e| TheoremError::Suite(e.to_string()))
}

pub fn reference_suite() -> Suite {
    parse_suite(REFERENCE_SUITE).expect("bundled suite parses")
}

fn expect_cone(
    failures: &mut Vec<String>,
    label: &str,
    got: &ConeV,
    want: &Option<Vec<Vec<i64>>>,
) -> Result<(), TheoremError> {
    let Some(rays) = want else { return Ok(()) };
    let want = ConeV::from_ints(got.ambient_dim(), rays)?;
    if !cone_equal(got, &want)? {
        failures.push(format!("{label} is {got}, expected {want}"));
    }
    Ok(())
}

pub fn run_case(engine: &BoundEngine, c: &SuiteCase) -> CaseOutcome {
    let mut failures = Vec::new();
    let report = match engine.verify(c.n, c.d, c.i) {
        Ok(r) => r,
        Err(e) => {
            return CaseOutcome {
                name: c.name.clone(),
                passed: false,
                failures: vec![e.to_string()],
                report: None,
            }
        }
    };
    if report.status.to_string() != c.status {
        failures.push(format!("status {} (expected {})", report.status, c.status));
    }
    let checks = expect_cone(&mut failures, "lower", &report.lower, &c.lower)
        .and_then(|_| expect_cone(&mut failures, "upper", &report.upper, &c.upper));
    if let Err(e) = checks {
        failures.push(e.to_string());
    }
    if let Some(s) = c.simplicial {
        if report.simplicial != Some(s) {
            failures.push(format!("simplicial {:?} (expected {s})", report.simplicial));
        }
    }
    CaseOutcome {
        name: c.name.clone(),
        passed: failures.is_empty(),
        failures,
        report: Some(report),
    }
}

/// Runs every case in file order with a shared engine.
pub fn run_suite(suite: &Suite) -> Vec<CaseOutcome> {
    let engine = BoundEngine::new();
    suite.cases.iter().map(|c| run_case(&engine, c)).collect()
}
