//! Closed-form coefficients of the binary cyclotomic polynomial `Φ_pq`.
//!
//! Every `0 <= m < pq` is `α₁p + β₁q` or `α₁p + β₁q - pq` with `α₁ ∈ [0, q)`
//! and `β₁ ∈ [0, p)`; the coefficient is decided by comparing `α₁`, `β₁` with
//! the unique decomposition `(p-1)(q-1) = ρp + σq`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{is_prime, mod_inverse, mul_mod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoSigma {
    pub p: u64,
    pub q: u64,
    pub rho: u64,
    pub sigma: u64,
}

fn check_pair(p: u64, q: u64) -> Result<()> {
    if p < 3 || p >= q || !is_prime(p) || !is_prime(q) {
        return Err(Error::InvalidInput(format!(
            "need odd primes p < q, got p = {p}, q = {q}"
        )));
    }
    Ok(())
}

pub fn rho_sigma(p: u64, q: u64) -> Result<RhoSigma> {
    check_pair(p, q)?;
    // (p-1)(q-1) ≡ σq (mod p) gives σ ≡ q⁻¹ - 1
    let q_inv = mod_inverse((q % p) as i64, p)?;
    let sigma = (q_inv + p - 1) % p;
    let total = (p - 1) * (q - 1);
    let rest = total
        .checked_sub(sigma * q)
        .ok_or_else(|| Error::Internal(format!("no decomposition for ({p}, {q})")))?;
    debug_assert_eq!(rest % p, 0);
    Ok(RhoSigma { p, q, rho: rest / p, sigma })
}

/// `Φ_pq` with the inverses needed for O(1) coefficient lookups.
#[derive(Debug, Clone)]
pub struct BinaryCyclo {
    pub p: u64,
    pub q: u64,
    pub rho: u64,
    pub sigma: u64,
    p_inv_mod_q: u64,
    q_inv_mod_p: u64,
}

impl BinaryCyclo {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        let rs = rho_sigma(p, q)?;
        Ok(BinaryCyclo {
            p,
            q,
            rho: rs.rho,
            sigma: rs.sigma,
            p_inv_mod_q: mod_inverse(p as i64, q)?,
            q_inv_mod_p: mod_inverse((q % p) as i64, p)?,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.p * self.q
    }

    pub fn degree(&self) -> u64 {
        (self.p - 1) * (self.q - 1)
    }

    /// `a_pq(m)` for `0 <= m < pq`. Callers guarantee the range.
    #[inline]
    pub fn coeff_unchecked(&self, m: u64) -> i8 {
        let (p, q) = (self.p, self.q);
        let alpha1 = mul_mod(m % q, self.p_inv_mod_q, q);
        let beta1 = mul_mod(m % p, self.q_inv_mod_p, p);
        let s = alpha1 * p + beta1 * q;
        if s == m {
            (alpha1 <= self.rho && beta1 <= self.sigma) as i8
        } else if alpha1 > self.rho && beta1 > self.sigma {
            // s == m + pq
            -1
        } else {
            0
        }
    }

    pub fn coeff(&self, m: u64) -> Result<i8> {
        if m >= self.modulus() {
            return Err(Error::InvalidInput(format!(
                "index {m} outside [0, {})",
                self.modulus()
            )));
        }
        Ok(self.coeff_unchecked(m))
    }

    /// Coefficients for every index in `[0, pq)`; entries past the degree are 0.
    pub fn table(&self) -> Vec<i8> {
        (0..self.modulus()).map(|m| self.coeff_unchecked(m)).collect()
    }
}

pub fn binary_coeff(p: u64, q: u64, m: u64) -> Result<i8> {
    BinaryCyclo::new(p, q)?.coeff(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scan_rho_sigma(p: u64, q: u64) -> (u64, u64) {
        let total = (p - 1) * (q - 1);
        let hits: Vec<_> = (0..=total / q)
            .filter(|s| (total - s * q) % p == 0)
            .map(|s| ((total - s * q) / p, s))
            .collect();
        assert_eq!(hits.len(), 1, "decomposition not unique for ({p}, {q})");
        hits[0]
    }

    #[test]
    fn rho_sigma_examples() {
        let rs = rho_sigma(11, 59).unwrap();
        assert_eq!((rs.rho, rs.sigma), (42, 2));
        let rs = rho_sigma(3, 5).unwrap();
        assert_eq!((rs.rho, rs.sigma), (1, 1));
        let rs = rho_sigma(13, 31).unwrap();
        assert_eq!((rs.rho, rs.sigma), (11, 7));
        assert!(rho_sigma(5, 3).is_err());
        assert!(rho_sigma(3, 9).is_err());
        assert!(rho_sigma(2, 5).is_err());
    }

    #[test]
    fn rho_sigma_matches_scan_and_inverse_identity() {
        let primes: Vec<u64> = (3..200).filter(|&n| is_prime(n)).collect();
        for (i, &p) in primes.iter().enumerate() {
            for &q in &primes[i + 1..] {
                let rs = rho_sigma(p, q).unwrap();
                assert_eq!((rs.rho, rs.sigma), scan_rho_sigma(p, q));
                assert!(rs.sigma < p && rs.rho < q);
                assert_eq!(rs.sigma + 1, mod_inverse((q % p) as i64, p).unwrap());
            }
        }
    }

    #[test]
    fn binary_examples() {
        assert_eq!(binary_coeff(3, 5, 0), Ok(1));
        assert_eq!(binary_coeff(3, 5, 7), Ok(-1));
        assert_eq!(binary_coeff(11, 59, 66), Ok(1));
        assert!(binary_coeff(3, 5, 15).is_err());
        let phi15 = BinaryCyclo::new(3, 5).unwrap().table();
        assert_eq!(&phi15[..9], &[1, -1, 0, 1, -1, 1, 0, -1, 1]);
        assert!(phi15[9..].iter().all(|&c| c == 0));
    }
}
