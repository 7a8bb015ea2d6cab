//! Brute-force ground truth for `Φ_n` and `1/Φ_n`.
//!
//! `Φ_n` for squarefree `n = p₁⋯p_k` is built one prime at a time with
//! `Φ_{mp}(x) = Φ_m(x^p) / Φ_m(x)`, each step an exact synthetic division by
//! a monic divisor. Every arithmetic step is checked; overflow is an error.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::factorize;

pub const MAX_INDEX: u64 = 10_000_000;
pub const DEFAULT_DEGREE_CAP: u64 = 2_000_000;

/// Dense coefficients of `Φ_n`; `coeffs[k] = a_n(k)` for `k <= φ(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffVec {
    pub n: u64,
    pub coeffs: Vec<i64>,
}

impl CoeffVec {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `a_n(k)`, zero outside `[0, φ(n)]`.
    pub fn get(&self, k: u64) -> i64 {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.coeffs.get(k).copied())
            .unwrap_or(0)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// `Φ_n(1)`.
    pub fn value_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

/// One period of the Taylor coefficients of `1/Φ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicSeries {
    pub n: u64,
    pub block: Vec<i64>,
}

impl PeriodicSeries {
    /// `c_n(k)` for any `k`, by periodic extension.
    pub fn get(&self, k: u64) -> i64 {
        self.block[(k % self.n) as usize]
    }

    /// `H(n)`, the largest `|c_n(k)|`.
    pub fn height(&self) -> u64 {
        self.block.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0)
    }

    /// Smallest shift `t >= 1` under which the infinite series is invariant.
    pub fn minimal_period(&self) -> u64 {
        let len = self.block.len();
        (1..=len)
            .filter(|t| len % t == 0)
            .find(|&t| (0..len).all(|k| self.block[k] == self.block[(k + t) % len]))
            .unwrap_or(len) as u64
    }
}

fn squarefree_primes(n: u64) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("index {n} must be at least 2")));
    }
    if n > MAX_INDEX {
        return Err(Error::TooLarge(format!("index {n} exceeds {MAX_INDEX}")));
    }
    let f = factorize(n)?;
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree(n));
    }
    Ok(f.primes().collect())
}

/// Exact quotient of `dividend` by a monic `divisor`; errors if a remainder
/// survives or any intermediate overflows `i64`.
fn exact_div_monic(dividend: &[i64], divisor: &[i64]) -> Result<Vec<i64>> {
    let dd = divisor.len() - 1;
    debug_assert_eq!(divisor[dd], 1);
    if dividend.len() < divisor.len() {
        return Err(Error::Internal("dividend degree below divisor degree".into()));
    }
    let qd = dividend.len() - 1 - dd;
    let lower: Vec<(usize, i64)> = divisor[..dd]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| (j, c))
        .collect();
    let mut rem = dividend.to_vec();
    let mut quot = vec![0i64; qd + 1];
    let overflow = || Error::TooLarge("coefficient overflow during exact division".into());
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        if c == 0 {
            continue;
        }
        quot[i] = c;
        for &(j, d) in &lower {
            let t = c.checked_mul(d).ok_or_else(overflow)?;
            rem[i + j] = rem[i + j].checked_sub(t).ok_or_else(overflow)?;
        }
    }
    if rem[..dd].iter().any(|&c| c != 0) {
        return Err(Error::Internal("non-zero remainder in exact division".into()));
    }
    Ok(quot)
}

pub fn cyclotomic_poly(n: u64) -> Result<CoeffVec> {
    cyclotomic_poly_capped(n, DEFAULT_DEGREE_CAP)
}

/// `Φ_n` for squarefree `2 <= n <= 10^7` with `φ(n) <= degree_cap`.
pub fn cyclotomic_poly_capped(n: u64, degree_cap: u64) -> Result<CoeffVec> {
    let primes = squarefree_primes(n)?;
    let phi: u64 = primes.iter().map(|p| p - 1).product();
    if phi > degree_cap {
        return Err(Error::TooLarge(format!(
            "degree φ({n}) = {phi} exceeds the cap {degree_cap}"
        )));
    }
    let first = primes[0] as usize;
    let mut coeffs = vec![1i64; first];
    for &p in &primes[1..] {
        let p = p as usize;
        let mut lifted = vec![0i64; (coeffs.len() - 1) * p + 1];
        for (k, &c) in coeffs.iter().enumerate() {
            lifted[k * p] = c;
        }
        coeffs = exact_div_monic(&lifted, &coeffs)?;
    }
    Ok(CoeffVec { n, coeffs })
}

/// `(height, least index attaining it)`.
pub fn height_of(v: &CoeffVec) -> (u64, u64) {
    let mut best = (0u64, 0u64);
    for (k, c) in v.coeffs.iter().enumerate() {
        if c.unsigned_abs() > best.0 {
            best = (c.unsigned_abs(), k as u64);
        }
    }
    best
}

pub fn reciprocal_block(n: u64) -> Result<PeriodicSeries> {
    reciprocal_block_capped(n, DEFAULT_DEGREE_CAP)
}

/// `1/Φ_n = -Ψ_n(x)·(1 + x^n + x^{2n} + …)` with `Ψ_n = (x^n - 1)/Φ_n`, so one
/// period is `-Ψ_n` padded to length `n`.
pub fn reciprocal_block_capped(n: u64, degree_cap: u64) -> Result<PeriodicSeries> {
    let phi = cyclotomic_poly_capped(n, degree_cap)?;
    let len = n as usize;
    let mut x_n_minus_1 = vec![0i64; len + 1];
    x_n_minus_1[0] = -1;
    x_n_minus_1[len] = 1;
    let psi = exact_div_monic(&x_n_minus_1, &phi.coeffs)?;
    let mut block = vec![0i64; len];
    for (k, c) in psi.iter().enumerate() {
        block[k] = -c;
    }
    Ok(PeriodicSeries { n, block })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReciprocalPrediction {
    EqualPMinus1,
    LessThanPMinus1,
}

/// Classifies whether `H(pqr)` reaches `p - 1`: exactly when `q ≡ r ≡ 1` or
/// `q ≡ r ≡ -1 (mod p)` and `(p-2)r < (p-1)(q-1)`.
pub fn reciprocal_height_predicate(p: u64, q: u64, r: u64) -> Result<ReciprocalPrediction> {
    crate::kaplan::OddPrimeTriple::new(p, q, r)?;
    let (qm, rm) = (q % p, r % p);
    let congruent = qm == rm && (qm == 1 || qm == p - 1);
    let small_r = (p as u128 - 2) * (r as u128) < (p as u128 - 1) * (q as u128 - 1);
    Ok(if congruent && small_r {
        ReciprocalPrediction::EqualPMinus1
    } else {
        ReciprocalPrediction::LessThanPMinus1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::is_prime;

    #[test]
    fn small_polynomials() {
        assert_eq!(cyclotomic_poly(7).unwrap().coeffs, vec![1; 7]);
        assert_eq!(cyclotomic_poly(15).unwrap().coeffs, vec![1, -1, 0, 1, -1, 1, 0, -1, 1]);
        assert_eq!(cyclotomic_poly(2).unwrap().coeffs, vec![1, 1]);
        assert_eq!(cyclotomic_poly(6).unwrap().coeffs, vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(10).unwrap().coeffs, vec![1, -1, 1, -1, 1]);
        let phi105 = cyclotomic_poly(105).unwrap();
        assert_eq!(phi105.get(7), -2);
        assert_eq!(phi105.get(1000), 0);
    }

    #[test]
    fn rejects_bad_indices() {
        assert_eq!(cyclotomic_poly(12), Err(Error::NotSquarefree(12)));
        assert!(matches!(cyclotomic_poly(1), Err(Error::InvalidInput(_))));
        assert!(matches!(cyclotomic_poly(10_000_019), Err(Error::TooLarge(_))));
        assert!(matches!(cyclotomic_poly_capped(105, 47), Err(Error::TooLarge(_))));
    }

    #[test]
    fn heights() {
        assert_eq!(height_of(&cyclotomic_poly(7).unwrap()), (1, 0));
        assert_eq!(height_of(&cyclotomic_poly(105).unwrap()), (2, 7));
        let (h, k) = height_of(&cyclotomic_poly(5 * 7 * 11).unwrap());
        assert_eq!(h, 3);
        assert!(k <= 119);
    }

    #[test]
    fn structural_identities() {
        for n in 2..3000u64 {
            let Ok(v) = cyclotomic_poly(n) else { continue };
            assert!(v.is_palindromic(), "n = {n}");
            assert_eq!(v.coeffs[0], 1);
            let f = factorize(n).unwrap();
            let expected = if f.factors.len() == 1 { n as i64 } else { 1 };
            assert_eq!(v.value_at_one(), expected, "n = {n}");
            assert_eq!(v.degree() as u64, f.totient());
        }
    }

    #[test]
    fn reciprocal_examples() {
        let b = reciprocal_block(3).unwrap();
        assert_eq!(b.block, vec![1, -1, 0]);
        for p in [5u64, 7, 11, 13] {
            let b = reciprocal_block(p).unwrap();
            assert_eq!(b.block[0], 1);
            assert_eq!(b.block[1], -1);
            assert!(b.block[2..].iter().all(|&c| c == 0));
        }
        assert_eq!(reciprocal_block(15).unwrap().block.len(), 15);
        // Ψ_105 is flat; 561 = 3·11·17 is the least n with H(n) = 2
        assert_eq!(reciprocal_block(105).unwrap().height(), 1);
        assert_eq!(reciprocal_block(561).unwrap().height(), 2);
    }

    #[test]
    fn reciprocal_reproduces_identity() {
        for n in [3u64, 15, 30, 105, 231, 385, 561, 1001] {
            let phi = cyclotomic_poly(n).unwrap();
            let inv = reciprocal_block(n).unwrap();
            assert_eq!(inv.n % inv.minimal_period(), 0);
            for k in 0..3 * n {
                let s: i64 = (0..=k.min(phi.degree() as u64))
                    .map(|j| phi.get(j) * inv.get(k - j))
                    .sum();
                assert_eq!(s, (k == 0) as i64, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn predicate_examples() {
        use ReciprocalPrediction::*;
        assert_eq!(reciprocal_height_predicate(3, 11, 17), Ok(EqualPMinus1));
        assert_eq!(reciprocal_height_predicate(3, 5, 7), Ok(LessThanPMinus1));
        assert_eq!(reciprocal_height_predicate(3, 7, 13), Ok(LessThanPMinus1));
        assert_eq!(reciprocal_height_predicate(5, 11, 19), Ok(LessThanPMinus1));
    }

    #[test]
    fn predicate_matches_computed_height() {
        let primes: Vec<u64> = (3..2000).filter(|&n| is_prime(n)).collect();
        for (i, &p) in primes.iter().enumerate() {
            for (j, &q) in primes.iter().enumerate().skip(i + 1) {
                for &r in &primes[j + 1..] {
                    if p * q * r > 8000 {
                        break;
                    }
                    let h = reciprocal_block(p * q * r).unwrap().height();
                    let predicted = reciprocal_height_predicate(p, q, r).unwrap();
                    assert!(h <= p - 1);
                    assert_eq!(
                        predicted == ReciprocalPrediction::EqualPMinus1,
                        h == p - 1,
                        "({p}, {q}, {r}): H = {h}"
                    );
                }
            }
        }
    }
}
