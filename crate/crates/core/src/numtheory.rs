//! Exact integer and modular primitives.
//!
//! Every product of two residues goes through a `u128` intermediate, so all
//! routines are exact on the full `u64` range.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Witness set that makes Miller-Rabin deterministic below 3.3 * 10^24.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Deterministic primality test, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &sp in &MR_WITNESSES {
        if n == sp {
            return true;
        }
        if n % sp == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Inverse of `a` modulo `m`, in `[1, m-1]` (or 0 when `m == 1` is excluded by
/// the caller). Negative `a` is reduced first.
pub fn mod_inverse(a: i64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidInput(format!("modulus {m} must be at least 2")));
    }
    let a_red = (a as i128).rem_euclid(m as i128);
    // extended Euclid on (a_red, m)
    let (mut old_r, mut r) = (a_red, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return Err(Error::NotCoprime { value: a, modulus: m });
    }
    Ok(old_s.rem_euclid(m as i128) as u64)
}

/// Least prime `s` with `lower_bound < s <= search_cap` and
/// `s ≡ residue (mod modulus)`.
pub fn find_prime_in_ap(residue: i64, modulus: u64, lower_bound: u64, search_cap: u64) -> Result<u64> {
    if modulus == 0 {
        return Err(Error::InvalidInput("modulus must be positive".into()));
    }
    if lower_bound >= search_cap {
        return Err(Error::InvalidInput(format!(
            "lower bound {lower_bound} must be below the search cap {search_cap}"
        )));
    }
    let res = (residue as i128).rem_euclid(modulus as i128) as u64;
    if gcd(res, modulus) != 1 {
        return Err(Error::NotCoprime { value: residue, modulus });
    }
    let start = lower_bound + 1;
    let offset = (res + modulus - start % modulus) % modulus;
    let exceeded = Error::SearchLimitExceeded { residue: res, modulus, lower_bound, search_cap };
    let mut s = start.checked_add(offset).ok_or_else(|| exceeded.clone())?;
    while s <= search_cap {
        if is_prime(s) {
            return Ok(s);
        }
        s = match s.checked_add(modulus) {
            Some(next) => next,
            None => break,
        };
    }
    Err(exceeded)
}

/// Canonical prime factorization of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub n: u64,
    /// `(prime, exponent)` pairs, ascending by prime.
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Euler's totient.
    pub fn totient(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product()
    }

    pub fn recompose(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidInput("cannot factor 0".into()));
    }
    let mut primes = Vec::new();
    let mut rest = n;
    for d in [2u64, 3, 5] {
        while rest % d == 0 {
            primes.push(d);
            rest /= d;
        }
    }
    // wheel-6 trial division for small factors
    let mut d = 7u64;
    let mut step = 4u64;
    while d <= 1 << 16 && d * d <= rest {
        while rest % d == 0 {
            primes.push(d);
            rest /= d;
        }
        d += step;
        step = 6 - step;
    }
    if rest > 1 {
        split_large(rest, &mut primes);
    }
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { n, factors })
}

fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

/// Nontrivial factor of a composite `n` with no factor below 2^16.
fn pollard_brent(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let step = |x: u64, c: u64| (mul_mod(x, x, n) + c) % n;
    for c in 1u64.. {
        let (mut x, mut y) = (2u64, 2u64);
        let mut d = 1u64;
        while d == 1 {
            x = step(x, c);
            y = step(step(y, c), c);
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

pub fn totient(n: u64) -> Result<u64> {
    Ok(factorize(n)?.totient())
}
