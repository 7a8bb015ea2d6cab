//! Coefficient claims and their independent verification.
//!
//! Verification never looks at how a certificate was built: it recomputes the
//! coefficient by the single-coefficient formula, by the dense oracle when the
//! polynomial is small enough, and (for exact-height claims) by a full scan.

use serde::{Deserialize, Serialize};

use crate::dense::{cyclotomic_poly_capped, DEFAULT_DEGREE_CAP, MAX_INDEX};
use crate::kaplan::{ternary_coeff, ternary_height_capped, OddPrimeTriple, DEFAULT_SCAN_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Minus,
    Plus,
    Moller,
    Lehmer,
    Yves,
}

/// Claim `a_pqr(n) = claimed`; with `exact_height`, also `A(pqr) = |claimed|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub p: u64,
    pub q: u64,
    pub r: u64,
    /// The admissible integer `a` for constructed certificates, `m` for the
    /// `(mpq-1)/2` families.
    pub alpha: i64,
    pub n: u64,
    pub claimed: i64,
    pub exact_height: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub dense_cap: u64,
    pub scan_cap: u64,
    pub workers: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { dense_cap: DEFAULT_DEGREE_CAP, scan_cap: DEFAULT_SCAN_CAP, workers: 1 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Passed,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    fn new(name: &str, status: CheckStatus, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), status, detail: detail.into() }
    }

    fn compare(name: &str, computed: i64, claimed: i64) -> Self {
        let status = if computed == claimed { CheckStatus::Passed } else { CheckStatus::Failed };
        Check::new(name, status, format!("computed {computed}, claimed {claimed}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationResult {
    pub certificate: Certificate,
    pub checks: Vec<Check>,
}

impl VerificationResult {
    /// No check failed and the single-coefficient check ran.
    pub fn verified(&self) -> bool {
        self.failed() == 0 && self.status_of("kaplan") == Some(CheckStatus::Passed)
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.status == CheckStatus::Passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| c.status == CheckStatus::Failed).count()
    }

    pub fn status_of(&self, name: &str) -> Option<CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }
}

pub fn verify_certificate(cert: &Certificate) -> VerificationResult {
    verify_certificate_with(cert, &VerifyConfig::default())
}

pub fn verify_certificate_with(cert: &Certificate, config: &VerifyConfig) -> VerificationResult {
    let mut checks = Vec::new();
    let triple = match OddPrimeTriple::new(cert.p, cert.q, cert.r) {
        Ok(t) => t,
        Err(e) => {
            checks.push(Check::new("triple", CheckStatus::Failed, e.to_string()));
            return VerificationResult { certificate: *cert, checks };
        }
    };

    match ternary_coeff(&triple, cert.n) {
        Ok(v) => checks.push(Check::compare("kaplan", v, cert.claimed)),
        Err(e) => checks.push(Check::new("kaplan", CheckStatus::Failed, e.to_string())),
    }

    let degree = triple.degree();
    if degree <= config.dense_cap && triple.n() <= MAX_INDEX {
        match cyclotomic_poly_capped(triple.n(), config.dense_cap) {
            Ok(poly) => checks.push(Check::compare("dense", poly.get(cert.n), cert.claimed)),
            Err(e) => checks.push(Check::new("dense", CheckStatus::Failed, e.to_string())),
        }
    } else {
        checks.push(Check::new(
            "dense",
            CheckStatus::Skipped,
            format!("degree {degree} above the dense cap {}", config.dense_cap),
        ));
    }

    if cert.exact_height {
        match ternary_height_capped(&triple, config.workers, config.scan_cap) {
            Ok(h) => checks.push(Check::compare(
                "height",
                h.height as i64,
                cert.claimed.abs(),
            )),
            Err(e) => checks.push(Check::new("height", CheckStatus::Skipped, e.to_string())),
        }
    }

    VerificationResult { certificate: *cert, checks }
}
