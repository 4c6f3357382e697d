//! Catalog of every identity check and a driver that runs a selection of
//! them, optionally in parallel.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::chebyshev::{self as cheb, AlphaRelation, Congruence, Structure};
use crate::error::{AlgebraError, Result};
use crate::pentagonal::{self as pent, MainIdentity, RecurrenceFamily};
use crate::report::{Check, Expected, Status, VerificationReport};

/// One registered identity.
#[derive(Clone, Copy)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    /// Equation tag the identity is known by.
    pub tag: &'static str,
    pub expected: Expected,
    pub default_order: usize,
    check: fn(usize) -> VerificationReport,
}

impl IdentityDescriptor {
    /// Run at `order`; a panic inside the check becomes an error report.
    pub fn run(&self, order: usize) -> VerificationReport {
        let start = Instant::now();
        match catch_unwind(AssertUnwindSafe(|| (self.check)(order))) {
            Ok(r) => r,
            Err(panic) => {
                let msg = panic
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                let mut check = Check::new(self.id, order);
                check.error(&AlgebraError::InvalidArgument(format!("check panicked: {msg}")));
                let mut r = check.finish();
                r.elapsed = start.elapsed();
                r
            }
        }
    }

    /// How this identity's outcome counts in a suite summary; `None` for
    /// report-only entries.
    pub fn counted_as(&self, status: Status) -> Option<Status> {
        match (self.expected, status) {
            (Expected::ReportOnly, _) => None,
            (_, Status::Error) => Some(Status::Error),
            (Expected::Pass, s) => Some(s),
            (Expected::Fail, Status::Fail) => Some(Status::Pass),
            (Expected::Fail, Status::Pass) => Some(Status::Fail),
        }
    }
}

impl std::fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("tag", &self.tag)
            .field("expected", &self.expected)
            .field("default_order", &self.default_order)
            .finish()
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn odd_primes_up_to(n: usize) -> Vec<u64> {
    (3..=n as u64).filter(|&p| p % 2 == 1 && (3..p).take_while(|d| d * d <= p).all(|d| p % d != 0)).collect()
}

macro_rules! entry {
    ($id:literal, $tag:literal, $exp:ident, $order:expr, $f:expr) => {
        IdentityDescriptor { id: $id, tag: $tag, expected: Expected::$exp, default_order: $order, check: $f }
    };
}

/// Every registered identity, sorted by id.
pub fn list_identities() -> Vec<IdentityDescriptor> {
    let mut v = vec![
        entry!("classic-1.6", "Eq. 1.6", Pass, 200, pent::classic_check),
        entry!("ansatz-2.16", "Eq. 2.16", Pass, 60, pent::ansatz_check),
        entry!("series-2.21", "Eq. 2.21", Pass, 60, |n| pent::main_identity_check(MainIdentity::SeriesS, n)),
        entry!("series-2.23", "Eq. 2.23", Pass, 60, |n| pent::main_identity_check(MainIdentity::SeriesSq, n)),
        entry!("errata-2.15-x5", "Eq. 2.15", Fail, 8, pent::errata_2_15_check),
        entry!("errata-2.23-q", "Eq. 2.23", Fail, 8, pent::errata_2_23_check),
        entry!("tower-R-2.31", "Eq. 2.31", Pass, 12, pent::tower_r_check),
        entry!("rec-2.13a", "Eq. 2.13a", Pass, 40, |n| pent::recurrence_suite(RecurrenceFamily::SSymbolic, n)),
        entry!("pentagonal-3.3", "Eq. 3.3", Pass, 100, |n| pent::main_identity_check(MainIdentity::Pentagonal, n)),
        entry!("jacobi-3.4", "Eq. 3.4", Pass, 60, pent::jacobi_triple_product_check),
        entry!("telescope-3.9", "Eq. 3.9", Pass, 5, pent::telescoping_check),
        entry!("tower-3.11", "Eq. 3.11", Pass, 40, pent::tower_recursion_check),
        entry!("tower-3.15", "Eq. 3.15", Pass, 40, pent::tower_closed_form_check),
        entry!("bar-3.19", "Eq. 3.19", Pass, 40, pent::specialization_check),
        entry!("calP-4.10", "Eq. 4.10", Pass, 60, |n| pent::main_identity_check(MainIdentity::CalP, n)),
        entry!("funcS-4.13", "Eq. 4.13", Pass, 60, |n| pent::main_identity_check(MainIdentity::FunctionalS, n)),
        entry!("rec-5.4", "Eq. 5.4", Pass, 40, |n| pent::recurrence_suite(RecurrenceFamily::Classical, n)),
        entry!("qinv-5.15", "Eq. 5.15", Pass, 10, pent::q_inverse_check),
        entry!("flim-5.16b", "Eq. 5.16b", Pass, 40, pent::f_limit_check),
        entry!("rec-5.19", "Eq. 5.19", Pass, 40, |n| pent::recurrence_suite(RecurrenceFamily::F, n)),
        entry!("genF-5.23", "Eq. 5.23", Pass, 30, |n| pent::main_identity_check(MainIdentity::GeneratingF, n)),
        entry!("rec-5.25", "Eq. 5.25", Pass, 40, |n| pent::recurrence_suite(RecurrenceFamily::SOne, n)),
        entry!("rec-5.27", "Eq. 5.27", Pass, 40, |n| pent::recurrence_suite(RecurrenceFamily::SQ, n)),
        entry!("cheb-table-6.4", "Eq. 6.4", Pass, 9, cheb::table_errata_check),
        entry!("cong-6.5", "Eq. 6.5", Pass, 11, |n| cheb::congruence_suite(Congruence::Fermat, &odd_primes_up_to(n))),
        entry!("cong-6.8a", "Eq. 6.8a", Pass, 5, |n| cheb::congruence_suite(Congruence::SquarePrime, &odd_primes_up_to(n.min(11)))),
        entry!("cong-6.8b", "Eq. 6.8b", Pass, 3, |n| {
            let params: Vec<u64> = (0..=n.min(8) as u64).collect();
            cheb::congruence_suite(Congruence::PowerOfTwo, &params)
        }),
        entry!("gamma-6.9", "Eq. 6.9", ReportOnly, 10, cheb::gauss_eval_check),
        entry!("recur-6.10", "Eq. 6.10", Pass, 12, cheb::recurrence_check),
        entry!("rel-6.11", "Eq. 6.11", Pass, 12, |n| cheb::structure_check(Structure::Difference, n)),
        entry!("deriv-6.15", "Eq. 6.15", Pass, 12, |n| cheb::structure_check(Structure::Derivative, n)),
        entry!("vals-6.16", "Eq. 6.16", Pass, 12, |n| cheb::structure_check(Structure::ValuesAtOne, n)),
        entry!("comp-6.17", "Eq. 6.17", Pass, 6, |n| cheb::composition_check(n.min(12), n.min(12))),
        entry!("ode-6.19", "Eq. 6.19", Pass, 12, |n| cheb::structure_check(Structure::Ode, n)),
        entry!("hyp-6.23", "Eq. 6.23", Pass, 12, |n| cheb::hypergeometric_check(n, 8)),
        entry!("vals-6.25", "Eq. 6.25", Pass, 12, |n| cheb::structure_check(Structure::ValuesAtZero, n)),
        entry!("explicit-6.26", "Eq. 6.26", Pass, 12, cheb::explicit_check),
        entry!("probe-6.32", "Eq. 6.32", ReportOnly, 20, cheb::probe_check),
        entry!("alpha-6.34", "Eq. 6.34", Pass, 8, |n| cheb::alpha_relations_check(AlphaRelation::Recurrence, n)),
        entry!("alpha-6.35", "Eq. 6.35", Pass, 8, |n| cheb::alpha_relations_check(AlphaRelation::UDifference, n)),
        entry!("alpha-6.37", "Eq. 6.37", Pass, 8, |n| cheb::alpha_relations_check(AlphaRelation::URecurrence, n)),
        entry!("alpha-6.38", "Eq. 6.38", Pass, 8, |n| cheb::alpha_relations_check(AlphaRelation::Even, n)),
        entry!("group-6.39a", "Eq. 6.39a", Pass, 8, cheb::group_law_check),
        entry!("inv-6.39b", "Eq. 6.39b", Pass, 6, |n| cheb::inverse_suite(&[rat(2), rat(3)], n)),
        entry!("misprint-6.44", "Eq. 6.44", Fail, 8, cheb::misprint_check_6_44),
    ];
    v.sort_by_key(|d| d.id);
    v
}

pub fn find(id: &str) -> Option<IdentityDescriptor> {
    list_identities().into_iter().find(|d| d.id == id)
}

/// Which identities to run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Ids(Vec<String>),
}

/// A report together with the catalog data needed to interpret it.
#[derive(Clone, Debug)]
pub struct SuiteEntry {
    pub descriptor: IdentityDescriptor,
    pub report: VerificationReport,
}

impl SuiteEntry {
    pub fn counted_as(&self) -> Option<Status> {
        self.descriptor.counted_as(self.report.status)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    /// In id order.
    pub entries: Vec<SuiteEntry>,
    pub summary: Summary,
    pub wall_time: Duration,
}

impl SuiteResult {
    pub fn reports(&self) -> impl Iterator<Item = &VerificationReport> {
        self.entries.iter().map(|e| &e.report)
    }

    /// True when nothing failed or errored against expectations.
    pub fn ok(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0
    }
}

/// Run a selection at each identity's default order, or at `order_override`.
/// `jobs` bounds the number of checks run at once (default: all cores).
pub fn run(selection: &Selection, order_override: Option<usize>, jobs: Option<usize>) -> Result<SuiteResult> {
    let catalog = list_identities();
    let chosen: Vec<IdentityDescriptor> = match selection {
        Selection::All => catalog,
        Selection::Ids(ids) => {
            let mut chosen = Vec::new();
            for id in ids {
                let d = catalog.iter().find(|d| d.id == id).ok_or_else(|| AlgebraError::UnknownId(id.clone()))?;
                if !chosen.iter().any(|c: &IdentityDescriptor| c.id == d.id) {
                    chosen.push(*d);
                }
            }
            chosen.sort_by_key(|d| d.id);
            chosen
        }
    };
    if jobs == Some(0) {
        return Err(AlgebraError::InvalidArgument("jobs must be at least 1".into()));
    }
    let start = Instant::now();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder.build().map_err(|e| AlgebraError::InvalidArgument(e.to_string()))?;
    let entries: Vec<SuiteEntry> = pool.install(|| {
        chosen
            .par_iter()
            .map(|d| SuiteEntry { descriptor: *d, report: d.run(order_override.unwrap_or(d.default_order)) })
            .collect()
    });
    let mut summary = Summary::default();
    for e in &entries {
        match e.counted_as() {
            Some(Status::Pass) => summary.pass += 1,
            Some(Status::Fail) => summary.fail += 1,
            Some(Status::Error) => summary.error += 1,
            None => {}
        }
    }
    Ok(SuiteResult { entries, summary, wall_time: start.elapsed() })
}
