//! Structured outcomes of numerical checks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::error::{domain, Error};

/// Outcome of a check. Exploratory checks carry no pass criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Informational,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Self::Pass
        } else {
            Self::Fail
        }
    }

    pub fn is_failure(self) -> bool {
        self == Self::Fail
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "true",
            Self::Fail => "false",
            Self::Informational => "informational",
        })
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "true" => Ok(Self::Pass),
            "false" => Ok(Self::Fail),
            "informational" => Ok(Self::Informational),
            other => Err(domain("Verdict::from_str", format!("unknown verdict {other:?}"))),
        }
    }
}

/// One row of a verification run.
///
/// For bound checks `margin = rhs - lhs`; for agreement checks `lhs` is the
/// observed discrepancy and `rhs` the allowed one. Either way the check
/// passes iff `margin ≥ -slack`, where the slack is set by the producing
/// check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub check_id: String,
    pub params: BTreeMap<String, f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub verdict: Verdict,
    pub provenance: String,
    pub runtime_ms: u64,
}

impl CheckReport {
    pub fn new(check_id: impl Into<String>, provenance: impl Into<String>) -> Self {
        Self {
            check_id: check_id.into(),
            params: BTreeMap::new(),
            lhs: f64::NAN,
            rhs: f64::NAN,
            margin: f64::NAN,
            verdict: Verdict::Fail,
            provenance: provenance.into(),
            runtime_ms: 0,
        }
    }

    pub fn param(mut self, key: impl Into<String>, value: f64) -> Self {
        self.params.insert(key.into(), value);
        self
    }

    /// `lhs ≤ rhs·(1 + rel_slack)`.
    pub fn upper_bound(mut self, lhs: f64, rhs: f64, rel_slack: f64) -> Self {
        self.lhs = lhs;
        self.rhs = rhs;
        self.margin = rhs - lhs;
        self.verdict = Verdict::from_bool(self.margin >= -rel_slack * rhs.abs());
        self
    }

    /// `|value - target| ≤ tol`, recorded as discrepancy against tolerance.
    pub fn agreement(mut self, value: f64, target: f64, tol: f64) -> Self {
        let diff = (value - target).abs();
        self.lhs = diff;
        self.rhs = tol;
        self.margin = tol - diff;
        self.verdict = Verdict::from_bool(diff <= tol);
        self
    }

    /// A boolean property; `lhs`/`rhs` carry whatever evidence the caller has.
    pub fn property(mut self, ok: bool, lhs: f64, rhs: f64) -> Self {
        self.lhs = lhs;
        self.rhs = rhs;
        self.margin = if ok { 0.0 } else { -1.0 };
        self.verdict = Verdict::from_bool(ok);
        self
    }

    pub fn informational(mut self, lhs: f64, rhs: f64) -> Self {
        self.lhs = lhs;
        self.rhs = rhs;
        self.margin = rhs - lhs;
        self.verdict = Verdict::Informational;
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.runtime_ms = start.elapsed().as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    /// Re-judge against an absolute slack on the margin.
    pub fn rejudge(&mut self, slack: f64) {
        if self.verdict != Verdict::Informational {
            self.verdict = Verdict::from_bool(self.margin >= -slack);
        }
    }
}
