use std::collections::BTreeMap;
use std::fmt::Write;
use std::time::Instant;

use cminor_algebra::rational::as_string;
use cminor_algebra::Rational;
use serde::{Deserialize, Serialize};

/// One exact comparison. `equal` is always `lhs == rhs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub case: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(with = "as_string")]
    pub lhs: Rational,
    #[serde(with = "as_string")]
    pub rhs: Rational,
    pub equal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cells: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tilings: Option<String>,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub fn new(suite: &str, case: String, lhs: Rational, rhs: Rational, started: Instant) -> Self {
        let equal = lhs == rhs;
        VerificationReport {
            suite: suite.into(),
            case,
            label: None,
            lhs,
            rhs,
            equal,
            cells: None,
            tilings: None,
            elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn with_region(mut self, cells: usize, tilings: Option<String>) -> Self {
        self.cells = Some(cells);
        self.tilings = tilings;
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    /// suite -> (passed, total)
    pub by_suite: BTreeMap<String, (usize, usize)>,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<22} {:>8} {:>8}", "suite", "passed", "total");
        for (suite, (p, t)) in &self.by_suite {
            let _ = writeln!(out, "{suite:<22} {p:>8} {t:>8}");
        }
        let _ = writeln!(out, "{:<22} {:>8} {:>8}", "all", self.passed, self.total);
        out
    }
}

pub fn summarize(reports: &[VerificationReport]) -> Summary {
    let mut s = Summary::default();
    for r in reports {
        let e = s.by_suite.entry(r.suite.clone()).or_insert((0, 0));
        e.1 += 1;
        s.total += 1;
        if r.equal {
            e.0 += 1;
            s.passed += 1;
        }
    }
    s
}
