//! Single coefficients and heights of ternary `Φ_pqr`.
//!
//! A single coefficient costs `O(p)`: with `f(m)` the representative in
//! `[0, pq)` of `(n - m)·r⁻¹ mod pq`,
//!
//! ```text
//! a_pqr(n) = Σ_{m<p} b(m) - Σ_{m<p} b(m+q),   b(i) = a_pq(f(i)) if f(i) <= ⌊n/r⌋ else 0.
//! ```
//!
//! Full height scans use the recurrence `a(n) = a(n - pq) + g(n)` where `g`
//! are the coefficients of `Φ_pq(x^r)·(1 + … + x^{p-1})(1 - x^q)`, which is
//! `O(1)` per coefficient once a window of `pq` values is seeded by the
//! single-coefficient formula.

use std::thread;

use serde::{Deserialize, Serialize};

use crate::binary::BinaryCyclo;
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, mod_inverse, mul_mod};

pub const DEFAULT_SCAN_CAP: u64 = 2_000_000_000;

/// Odd primes `p < q < r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OddPrimeTriple {
    pub p: u64,
    pub q: u64,
    pub r: u64,
}

impl OddPrimeTriple {
    pub fn new(p: u64, q: u64, r: u64) -> Result<Self> {
        if !(2 < p && p < q && q < r) {
            return Err(Error::InvalidInput(format!(
                "need 2 < p < q < r, got ({p}, {q}, {r})"
            )));
        }
        for x in [p, q, r] {
            if !is_prime(x) {
                return Err(Error::InvalidInput(format!("{x} is not prime")));
            }
        }
        r.checked_mul(p * q)
            .ok_or_else(|| Error::TooLarge(format!("pqr overflows for ({p}, {q}, {r})")))?;
        Ok(OddPrimeTriple { p, q, r })
    }

    pub fn n(&self) -> u64 {
        self.p * self.q * self.r
    }

    /// `φ(pqr)`, the degree of `Φ_pqr`.
    pub fn degree(&self) -> u64 {
        (self.p - 1) * (self.q - 1) * (self.r - 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightReport {
    pub triple: OddPrimeTriple,
    pub height: u64,
    /// Least index attaining the height.
    pub witness: u64,
    pub signed_value: i64,
}

/// Precomputed state for repeated coefficient queries on one triple.
#[derive(Debug, Clone)]
pub struct TernaryCyclo {
    pub triple: OddPrimeTriple,
    binary: BinaryCyclo,
    pq: u64,
    r_inv: u64,
}

impl TernaryCyclo {
    pub fn new(triple: OddPrimeTriple) -> Result<Self> {
        let pq = triple.p * triple.q;
        Ok(TernaryCyclo {
            triple,
            binary: BinaryCyclo::new(triple.p, triple.q)?,
            pq,
            r_inv: mod_inverse((triple.r % pq) as i64, pq)?,
        })
    }

    /// `f(m)` for the coefficient index `n`.
    #[inline]
    pub fn f(&self, n: u64, m: u64) -> u64 {
        let pq = self.pq;
        let diff = (n % pq + pq - m % pq) % pq;
        mul_mod(diff, self.r_inv, pq)
    }

    /// Exact `a_pqr(n)`; zero past the degree.
    pub fn coeff(&self, n: u64) -> i64 {
        let cutoff = n / self.triple.r;
        let b = |i: u64| {
            let fi = self.f(n, i);
            if fi <= cutoff {
                self.binary.coeff_unchecked(fi) as i64
            } else {
                0
            }
        };
        let q = self.triple.q;
        (0..self.triple.p).map(|m| b(m) - b(m + q)).sum()
    }

    /// Largest `|a(n)|` over `n ∈ [start, end)` with its least index.
    fn scan_range(&self, table: &[i8], start: u64, end: u64) -> (u64, u64, i64) {
        let OddPrimeTriple { p, q, r } = self.triple;
        let pq = self.pq;
        let mut window = vec![0i64; pq as usize];
        for n in start.saturating_sub(pq)..start {
            window[(n % pq) as usize] = self.coeff(n);
        }
        let lookup = |j: u64| table.get(j as usize).copied().unwrap_or(0) as i64;
        let mut best = (0u64, start, 0i64);
        let (mut j0, mut k0) = (start / r, start % r);
        let mut idx = (start % pq) as usize;
        for n in start..end {
            let mut g = if k0 < p {
                lookup(j0)
            } else if k0 >= q && k0 < q + p {
                -lookup(j0)
            } else {
                0
            };
            if j0 >= 1 && k0 + r < q + p {
                g -= lookup(j0 - 1);
            }
            let a = window[idx] + g;
            window[idx] = a;
            if a.unsigned_abs() > best.0 {
                best = (a.unsigned_abs(), n, a);
            }
            k0 += 1;
            if k0 == r {
                k0 = 0;
                j0 += 1;
            }
            idx += 1;
            if idx as u64 == pq {
                idx = 0;
            }
        }
        best
    }
}

pub fn f_value(t: &OddPrimeTriple, n: u64, m: u64) -> Result<u64> {
    let pq = t.p * t.q;
    if m >= pq {
        return Err(Error::InvalidInput(format!("m = {m} outside [0, {pq})")));
    }
    Ok(TernaryCyclo::new(*t)?.f(n, m))
}

pub fn ternary_coeff(t: &OddPrimeTriple, n: u64) -> Result<i64> {
    Ok(TernaryCyclo::new(*t)?.coeff(n))
}

pub fn ternary_height(t: &OddPrimeTriple, workers: usize) -> Result<HeightReport> {
    ternary_height_capped(t, workers, DEFAULT_SCAN_CAP)
}

/// Exact height of `Φ_pqr`, scanning at most `scan_cap` coefficients. The
/// result does not depend on `workers`.
pub fn ternary_height_capped(t: &OddPrimeTriple, workers: usize, scan_cap: u64) -> Result<HeightReport> {
    if workers == 0 {
        return Err(Error::InvalidInput("workers must be positive".into()));
    }
    let total = t.degree() + 1;
    if total > scan_cap {
        return Err(Error::TooLarge(format!(
            "{total} coefficients exceed the scan cap {scan_cap}"
        )));
    }
    let tc = TernaryCyclo::new(*t)?;
    let table = tc.binary.table();
    let chunk = total.div_ceil(workers as u64).max(1);
    let ranges: Vec<(u64, u64)> = (0..total)
        .step_by(chunk as usize)
        .map(|s| (s, (s + chunk).min(total)))
        .collect();
    let partials: Vec<(u64, u64, i64)> = if ranges.len() == 1 {
        vec![tc.scan_range(&table, 0, total)]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&(s, e)| {
                    let (tc, table) = (&tc, &table);
                    scope.spawn(move || tc.scan_range(table, s, e))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("scan worker panicked")).collect()
        })
    };
    let (height, witness, signed_value) = partials
        .into_iter()
        .fold((0, 0, 0), |acc, part| {
            if part.0 > acc.0 || (part.0 == acc.0 && part.1 < acc.1) {
                part
            } else {
                acc
            }
        });
    Ok(HeightReport { triple: *t, height, witness, signed_value })
}

/// Index `n'` with `a_pqs(n') = a_pqr(n)` for a prime `s ≡ r (mod pq)`, `s >= r`.
pub fn transport_same(t: &OddPrimeTriple, n: u64, s: u64) -> Result<u64> {
    let pq = t.p * t.q;
    if s < t.r || s % pq != t.r % pq || !is_prime(s) {
        return Err(Error::CongruenceViolated(format!(
            "need a prime s >= {} with s ≡ {} (mod {pq}), got {s}",
            t.r,
            t.r % pq
        )));
    }
    let (quot, n0) = (n / t.r, n % t.r);
    quot.checked_mul(s)
        .and_then(|x| x.checked_add(n0))
        .ok_or_else(|| Error::TooLarge("transported index overflows".into()))
}

/// Index `n'` with `a_pqu(n') = -a_pqr(n)` for a prime `u > pq`, `u ≡ -r (mod pq)`.
pub fn transport_neg(t: &OddPrimeTriple, n: u64, u: u64) -> Result<u64> {
    let pq = t.p * t.q;
    if u <= pq || (u % pq + t.r % pq) % pq != 0 || !is_prime(u) {
        return Err(Error::CongruenceViolated(format!(
            "need a prime u > {pq} with u ≡ -{} (mod {pq}), got {u}",
            t.r
        )));
    }
    let (quot, n0) = (n / t.r, n % t.r);
    let n1 = ((t.q + t.p - 1) as i128 - n0 as i128).rem_euclid(pq as i128) as u64;
    quot.checked_mul(u)
        .and_then(|x| x.checked_add(n1))
        .ok_or_else(|| Error::TooLarge("transported index overflows".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::cyclotomic_poly;
    use crate::numtheory::find_prime_in_ap;

    fn triple(p: u64, q: u64, r: u64) -> OddPrimeTriple {
        OddPrimeTriple::new(p, q, r).unwrap()
    }

    #[test]
    fn triple_validation() {
        assert!(OddPrimeTriple::new(3, 5, 7).is_ok());
        assert!(OddPrimeTriple::new(2, 5, 7).is_err());
        assert!(OddPrimeTriple::new(5, 3, 7).is_err());
        assert!(OddPrimeTriple::new(3, 5, 9).is_err());
        assert!(OddPrimeTriple::new(3, 3, 7).is_err());
    }

    #[test]
    fn f_examples() {
        let t = triple(11, 59, 877);
        assert_eq!(f_value(&t, 175410, 10), Ok(200));
        assert_eq!(175410 / 877, 200);
        assert_eq!(f_value(&t, 500, 500), Ok(0));
        assert_eq!(f_value(&triple(3, 5, 7), 7, 0), Ok(1));
        assert_eq!(f_value(&triple(3, 5, 7), 9, 9), Ok(0));
        assert!(f_value(&t, 0, 649).is_err());
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(ternary_coeff(&triple(3, 5, 7), 7), Ok(-2));
        assert_eq!(ternary_coeff(&triple(11, 59, 877), 175410), Ok(-7));
        assert_eq!(ternary_coeff(&triple(13, 31, 1097), 137160), Ok(8));
        assert_eq!(ternary_coeff(&triple(3, 5, 7), 1_000_000), Ok(0));
    }

    #[test]
    fn kaplan_matches_dense_small() {
        for (p, q, r) in [(3, 5, 7), (3, 5, 11), (3, 7, 11), (5, 7, 11), (5, 7, 17), (3, 11, 17)] {
            let t = triple(p, q, r);
            let tc = TernaryCyclo::new(t).unwrap();
            let dense = cyclotomic_poly(t.n()).unwrap();
            for n in 0..=t.degree() + 50 {
                assert_eq!(tc.coeff(n), dense.get(n), "({p}, {q}, {r}) n = {n}");
            }
        }
    }

    #[test]
    fn height_examples() {
        let h = ternary_height(&triple(3, 5, 7), 1).unwrap();
        assert_eq!((h.height, h.witness, h.signed_value), (2, 7, -2));
        assert_eq!(ternary_height(&triple(5, 7, 11), 3).unwrap().height, 3);
        assert!(matches!(
            ternary_height_capped(&triple(3, 5, 7), 1, 48),
            Err(Error::TooLarge(_))
        ));
        assert!(ternary_height(&triple(3, 5, 7), 0).is_err());
    }

    #[test]
    fn scanner_agrees_with_single_coefficients() {
        for (p, q, r) in [(3, 5, 7), (5, 7, 11), (7, 11, 13), (5, 11, 13), (3, 7, 53), (11, 13, 17)] {
            let t = triple(p, q, r);
            let tc = TernaryCyclo::new(t).unwrap();
            let expected = (0..=t.degree()).fold((0u64, 0u64, 0i64), |best, n| {
                let a = tc.coeff(n);
                if a.unsigned_abs() > best.0 { (a.unsigned_abs(), n, a) } else { best }
            });
            for workers in [1usize, 2, 3, 7] {
                let h = ternary_height(&t, workers).unwrap();
                assert_eq!((h.height, h.witness, h.signed_value), expected, "({p},{q},{r}) w={workers}");
            }
        }
    }

    #[test]
    fn transports() {
        let t = triple(3, 5, 7);
        let u = find_prime_in_ap(-7, 15, 15, 1000).unwrap();
        assert_eq!(u, 23);
        let n2 = transport_neg(&t, 7, u).unwrap();
        assert_eq!(n2, 30);
        assert_eq!(ternary_coeff(&triple(3, 5, 23), n2), Ok(2));
        assert!(matches!(transport_neg(&t, 7, 7), Err(Error::CongruenceViolated(_))));

        let t = triple(11, 59, 877);
        assert_eq!(transport_same(&t, 175410, 877), Ok(175410));
        assert!(matches!(transport_same(&t, 175410, 2175), Err(Error::CongruenceViolated(_))));
        let s = find_prime_in_ap(877, 649, 877, 10_000_000).unwrap();
        let n_same = transport_same(&t, 175410, s).unwrap();
        assert_eq!(ternary_coeff(&triple(11, 59, s), n_same), Ok(-7));
        let u = find_prime_in_ap(-877, 649, 649, 10_000_000).unwrap();
        let n_neg = transport_neg(&t, 175410, u).unwrap();
        assert_eq!(ternary_coeff(&triple(11, 59, u), n_neg), Ok(7));
    }
}
