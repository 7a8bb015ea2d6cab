//! Residue classes `β (mod p)` that force a ternary coefficient of size `p - β`,
//! and the explicit constructions built on them.
//!
//! For `β ∈ [1, (p-3)/2]` with inverse `β*`:
//!
//! * `B₋(p)`: `p <= β + 2β* + 1` and `β > β*` (coefficient `β - p`),
//! * `B₊(p)`: `β + β* >= p` and `β* <= 2β` (coefficient `p - β`).

mod certificate;
mod construct;
mod families;
mod interval;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, mod_inverse};

pub use certificate::{
    verify_certificate, verify_certificate_with, Certificate, CertificateKind, Check, CheckStatus,
    VerificationResult, VerifyConfig,
};
pub use construct::{construct, construct_minus, construct_plus, least_admissible_q};
pub use families::{
    duke_beta, find_beta_window, lehmer, moller, moller_with_q, yves_beta, yves_certificate,
    YvesBeta,
};
pub use interval::{interval_minus, interval_plus, q_threshold, IntervalQ};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Minus,
    Plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaClass {
    pub p: u64,
    pub beta: u64,
    pub beta_star: u64,
    /// `β* - 1`, the `σ` of `(p-1)(q-1) = ρp + σq` for any `q ≡ β (mod p)`.
    pub sigma: u64,
}

impl BetaClass {
    pub fn in_b_minus(&self) -> bool {
        in_b_minus(self)
    }

    pub fn in_b_plus(&self) -> bool {
        in_b_plus(self)
    }

    pub fn in_set(&self, sign: Sign) -> bool {
        match sign {
            Sign::Minus => in_b_minus(self),
            Sign::Plus => in_b_plus(self),
        }
    }

    /// `|claimed|` of every certificate built from this class.
    pub fn magnitude(&self) -> u64 {
        self.p - self.beta
    }

    fn in_lower_half(&self) -> bool {
        self.beta >= 1 && self.p >= 3 && self.beta <= (self.p - 3) / 2
    }
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not an odd prime")));
    }
    Ok(())
}

pub fn beta_class(p: u64, beta: u64) -> Result<BetaClass> {
    check_odd_prime(p)?;
    if beta == 0 || beta >= p {
        return Err(Error::InvalidInput(format!("β = {beta} outside [1, {}]", p - 1)));
    }
    let beta_star = mod_inverse(beta as i64, p)?;
    Ok(BetaClass { p, beta, beta_star, sigma: beta_star - 1 })
}

pub fn in_b_minus(c: &BetaClass) -> bool {
    c.in_lower_half() && c.p <= c.beta + 2 * c.beta_star + 1 && c.beta > c.beta_star
}

pub fn in_b_plus(c: &BetaClass) -> bool {
    c.in_lower_half() && c.beta + c.beta_star >= c.p && c.beta_star <= 2 * c.beta
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BeiterSets {
    pub p: u64,
    pub b_minus: Vec<u64>,
    pub b_plus: Vec<u64>,
}

impl BeiterSets {
    /// `B₋(p) ∪ B₊(p)`, ascending.
    pub fn union(&self) -> Vec<u64> {
        let mut all: Vec<u64> = self.b_minus.iter().chain(&self.b_plus).copied().collect();
        all.sort_unstable();
        all
    }

    pub fn get(&self, sign: Sign) -> &[u64] {
        match sign {
            Sign::Minus => &self.b_minus,
            Sign::Plus => &self.b_plus,
        }
    }
}

pub fn beiter_sets(p: u64) -> Result<BeiterSets> {
    check_odd_prime(p)?;
    let mut sets = BeiterSets { p, b_minus: Vec::new(), b_plus: Vec::new() };
    for beta in 1..=(p - 3) / 2 {
        let c = beta_class(p, beta)?;
        if in_b_minus(&c) {
            sets.b_minus.push(beta);
        }
        if in_b_plus(&c) {
            sets.b_plus.push(beta);
        }
    }
    Ok(sets)
}

/// `(p-3)/2`, the largest element of `B(p)` for `p >= 11`; its membership is
/// re-derived from the closed form of its inverse.
pub fn max_b_element(p: u64) -> Result<u64> {
    check_odd_prime(p)?;
    if p < 11 {
        return Err(Error::InvalidInput(format!("p = {p} is below 11")));
    }
    let beta = (p - 3) / 2;
    let c = beta_class(p, beta)?;
    let (expected_star, member) = match p % 3 {
        1 => (2 * (p - 1) / 3, in_b_plus(&c)),
        2 => ((p - 2) / 3, in_b_minus(&c)),
        _ => unreachable!("p > 3 is prime"),
    };
    if c.beta_star != expected_star || !member {
        return Err(Error::Internal(format!(
            "(p-3)/2 = {beta} failed its membership check for p = {p}"
        )));
    }
    Ok(beta)
}

/// `p - min B(p)`, a lower bound for the largest ternary height with least prime `p`.
pub fn mp_lower_bound(p: u64) -> Option<u64> {
    let sets = beiter_sets(p).ok()?;
    sets.union().first().map(|b| p - b)
}
