//! The invariant suite behind `polysep verify`.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::family::{
    a_min, construct_compact, construct_expanded, height_formula, leading_formula, FamilyInstance,
};
use crate::irreducible::verify_family_irreducible;
use crate::sep::analyze;

/// Failures listed per check before the rest are only counted.
const MAX_LISTED: usize = 10;

#[derive(Clone, Debug, Serialize)]
pub struct CheckSummary {
    pub name: &'static str,
    pub cases: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl CheckSummary {
    fn new(name: &'static str) -> Self {
        CheckSummary {
            name,
            cases: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub d_max: u32,
    pub a_max: u64,
    pub all_passed: bool,
    pub checks: Vec<CheckSummary>,
}

/// Values of `a` used for the numeric checks at degree `d`.
fn numeric_a_values(d: u32, a_max: u64) -> Vec<u64> {
    let lo = a_min(d);
    if a_max < lo {
        return Vec::new();
    }
    let mut v = vec![lo, a_max];
    v.dedup();
    v
}

/// Runs every check for `3 <= d <= d_max`, `1 <= a <= a_max`. Numeric
/// checks (brackets, ratios, Mahler) run at `a_min(d)` and `a_max`, for
/// `d <= 8`.
pub fn run_suite(d_max: u32, a_max: u64) -> VerifyReport {
    let mut construction = CheckSummary::new("construction-identities");
    let mut eisenstein = CheckSummary::new("eisenstein-reciprocal");
    let mut monic = CheckSummary::new("reciprocal-monic");
    let mut brackets = CheckSummary::new("close-pair-brackets");
    let mut ratios = CheckSummary::new("separation-ratio");
    let mut mahler = CheckSummary::new("mahler-bound");
    let mut certificates = CheckSummary::new("certificate-below-measured");

    for d in 3..=d_max {
        for a in 1..=a_max {
            let case = || format!("d={d} a={a}");
            let (compact, expanded) = match (construct_compact(d, a), construct_expanded(d, a)) {
                (Ok(c), Ok(e)) => (c, e),
                _ => {
                    construction.record(false, case);
                    continue;
                }
            };
            let ok = compact == expanded
                && compact.degree().ok() == Some(d as usize)
                && compact.coeff(0) == BigInt::one()
                && leading_formula(d, a).is_ok_and(|l| compact.leading().is_ok_and(|c| *c == l))
                && height_formula(d, a).is_ok_and(|h| compact.height().is_ok_and(|c| c == h));
            construction.record(ok, case);
            monic.record(
                compact.reciprocal().leading().is_ok_and(|c| c.is_one()),
                case,
            );
        }
    }

    for d in 3..=d_max {
        for a in 1..=a_max {
            let cert = FamilyInstance::new(d, a).map(|inst| verify_family_irreducible(&inst));
            eisenstein.record(cert.is_ok_and(|c| c.passed), || format!("d={d} a={a}"));
        }
    }

    for d in 3..=d_max.min(8) {
        for a in numeric_a_values(d, a_max) {
            let case = || format!("d={d} a={a}");
            let report = FamilyInstance::new(d, a).and_then(|inst| analyze(&inst));
            let r = match report {
                Ok(r) => r,
                Err(e) => {
                    let msg = format!("d={d} a={a}: {e}");
                    brackets.record(false, || msg.clone());
                    ratios.record(false, || msg.clone());
                    mahler.record(false, || msg.clone());
                    continue;
                }
            };
            brackets.record(r.pair_in_brackets == Some(true) && r.small_roots == 2, case);
            let tol = if a >= 100 { 0.01 } else { 0.05 };
            ratios.record((r.ratio - 1.0).abs() <= tol, || {
                format!("d={d} a={a}: ratio {}", r.ratio)
            });
            mahler.record(r.mahler_ok && r.disc_nonzero, case);
            certificates.record(r.e_certified.is_some_and(|c| c <= r.e + 1e-9), || {
                format!(
                    "d={d} a={a}: certified {:?} measured {}",
                    r.e_certified, r.e
                )
            });
        }
    }

    let checks = vec![
        construction,
        eisenstein,
        monic,
        brackets,
        ratios,
        mahler,
        certificates,
    ];
    VerifyReport {
        d_max,
        a_max,
        all_passed: checks.iter().all(CheckSummary::passed),
        checks,
    }
}
