//! Verification outcomes.

use std::fmt::Display;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::exactalg::{Coeff, Poly};
use crate::series::TruncSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// What a correct implementation should observe for an identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expected {
    Pass,
    /// Encodes a printed misprint: the check must fail.
    Fail,
    /// Informational; never counted in a summary.
    ReportOnly,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

impl Expected {
    pub fn as_str(self) -> &'static str {
        match self {
            Expected::Pass => "pass",
            Expected::Fail => "fail",
            Expected::ReportOnly => "report-only",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub degree: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: String,
    pub order: usize,
    pub status: Status,
    pub first_discrepancy: Option<Discrepancy>,
    pub elapsed: Duration,
    /// Free-form findings: where a discrepancy sits, conventions chosen,
    /// report-only observations.
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Equality ignoring elapsed time.
    pub fn same_outcome(&self, other: &Self) -> bool {
        self.id == other.id
            && self.order == other.order
            && self.status == other.status
            && self.first_discrepancy == other.first_discrepancy
            && self.notes == other.notes
    }
}

/// Accumulates comparisons for one identity and keeps the first mismatch.
pub struct Check {
    id: String,
    order: usize,
    start: Instant,
    discrepancy: Option<Discrepancy>,
    error: Option<String>,
    notes: Vec<String>,
}

impl Check {
    pub fn new(id: &str, order: usize) -> Self {
        Check {
            id: id.to_string(),
            order,
            start: Instant::now(),
            discrepancy: None,
            error: None,
            notes: Vec::new(),
        }
    }

    pub fn failed(&self) -> bool {
        self.discrepancy.is_some() || self.error.is_some()
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Record a mismatch at `degree` unless one is already recorded.
    pub fn mismatch(&mut self, context: &str, degree: usize, lhs: impl Display, rhs: impl Display) {
        if self.discrepancy.is_none() {
            self.notes.push(format!("first discrepancy: {context}"));
            self.discrepancy = Some(Discrepancy { degree, lhs: lhs.to_string(), rhs: rhs.to_string() });
        }
    }

    /// Compare two values; returns whether they agree.
    pub fn expect_eq<T: PartialEq + Display>(&mut self, context: &str, degree: usize, lhs: &T, rhs: &T) -> bool {
        if lhs == rhs {
            true
        } else {
            self.mismatch(context, degree, lhs, rhs);
            false
        }
    }

    /// Coefficient-wise comparison up to the common order.
    pub fn expect_series<C: Coeff>(&mut self, context: &str, lhs: &TruncSeries<C>, rhs: &TruncSeries<C>) -> bool {
        match lhs.first_difference(rhs) {
            None => true,
            Some((d, a, b)) => {
                self.mismatch(context, d, a, b);
                false
            }
        }
    }

    /// Coefficient-wise polynomial comparison; the degree reported is the
    /// lowest differing coefficient.
    pub fn expect_poly<C: Coeff>(&mut self, context: &str, lhs: &Poly<C>, rhs: &Poly<C>) -> bool {
        let len = lhs.coeffs().len().max(rhs.coeffs().len());
        for d in 0..len {
            let (a, b) = (lhs.coeff(d), rhs.coeff(d));
            if a != b {
                self.mismatch(context, d, a, b);
                return false;
            }
        }
        true
    }

    pub fn expect_true(&mut self, context: &str, degree: usize, ok: bool) -> bool {
        if !ok {
            self.mismatch(context, degree, "false", "true");
        }
        ok
    }

    pub fn error(&mut self, e: &AlgebraError) {
        if self.error.is_none() {
            self.error = Some(e.to_string());
            self.notes.push(format!("error: {e}"));
        }
    }

    /// Unwrap a fallible computation, recording the error.
    pub fn attempt<T>(&mut self, r: Result<T, AlgebraError>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.error(&e);
                None
            }
        }
    }

    pub fn finish(self) -> VerificationReport {
        let status = if self.error.is_some() {
            Status::Error
        } else if self.discrepancy.is_some() {
            Status::Fail
        } else {
            Status::Pass
        };
        VerificationReport {
            id: self.id,
            order: self.order,
            status,
            first_discrepancy: self.discrepancy,
            elapsed: self.start.elapsed(),
            notes: self.notes,
        }
    }
}
