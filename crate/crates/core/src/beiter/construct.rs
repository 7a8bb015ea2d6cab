//! Negative and positive counter-example constructions.
//!
//! For each integer `a` in the admissible interval, `r` is the least prime
//! above `q` with `r(q - pa) ≡ -1 (mod pq)`, and the coefficient index is
//! `n = p - 1 + w·r` with
//!
//! * negative: `w = (p-β-1)q - (p-β*-1)ap`, value `β - p`,
//! * positive: `w = 1 + (p-β-1)q - (p-β)ap`, value `p - β`.

use super::certificate::{Certificate, CertificateKind};
use super::interval::{interval_minus, interval_plus};
use super::{beta_class, BetaClass, Sign};
use crate::error::{Error, Result};
use crate::numtheory::{find_prime_in_ap, is_prime, mod_inverse};

fn member_class(p: u64, beta: u64, sign: Sign) -> Result<BetaClass> {
    let c = beta_class(p, beta)?;
    if !c.in_set(sign) {
        return Err(Error::ConditionViolated(format!(
            "β = {beta} is not in B{}({p})",
            if sign == Sign::Minus { "₋" } else { "₊" }
        )));
    }
    Ok(c)
}

fn admissible_alphas(c: &BetaClass, q: u64, sign: Sign) -> Result<Vec<i128>> {
    let interval = match sign {
        Sign::Minus => interval_minus(c, q)?,
        Sign::Plus => interval_plus(c, q)?,
    };
    let alphas: Vec<i128> = interval.map(|i| i.integers().collect()).unwrap_or_default();
    if alphas.is_empty() {
        return Err(Error::NoIntegerInInterval);
    }
    Ok(alphas)
}

fn build(c: &BetaClass, q: u64, sign: Sign, r_cap: u64) -> Result<Vec<Certificate>> {
    let p = c.p;
    let pq = p * q;
    let (pi, qi, bi, bsi) = (p as i128, q as i128, c.beta as i128, c.beta_star as i128);
    admissible_alphas(c, q, sign)?
        .into_iter()
        .map(|a| {
            let step = qi - pi * a;
            let residue = -(mod_inverse(step as i64, pq)? as i64);
            let r = find_prime_in_ap(residue, pq, q, r_cap)?;
            let (w, claimed, exact_height) = match sign {
                Sign::Minus => ((pi - bi - 1) * qi - (pi - bsi - 1) * a * pi, c.beta as i64 - p as i64, false),
                Sign::Plus => (
                    1 + (pi - bi - 1) * qi - (pi - bi) * a * pi,
                    (p - c.beta) as i64,
                    c.beta + c.beta_star == p,
                ),
            };
            if w < 0 {
                return Err(Error::Internal(format!("negative index multiplier {w} for α = {a}")));
            }
            let n = u64::try_from(pi - 1 + w * r as i128)
                .map_err(|_| Error::TooLarge(format!("index overflows for α = {a}, r = {r}")))?;
            Ok(Certificate {
                kind: match sign {
                    Sign::Minus => CertificateKind::Minus,
                    Sign::Plus => CertificateKind::Plus,
                },
                p,
                q,
                r,
                alpha: a as i64,
                n,
                claimed,
                exact_height,
            })
        })
        .collect()
}

/// One certificate per integer `α` in the negative interval, each claiming `β - p`.
pub fn construct_minus(p: u64, beta: u64, q: u64, r_cap: u64) -> Result<Vec<Certificate>> {
    let c = member_class(p, beta, Sign::Minus)?;
    build(&c, q, Sign::Minus, r_cap)
}

/// One certificate per integer `α` in the positive interval, each claiming `p - β`.
pub fn construct_plus(p: u64, beta: u64, q: u64, r_cap: u64) -> Result<Vec<Certificate>> {
    let c = member_class(p, beta, Sign::Plus)?;
    build(&c, q, Sign::Plus, r_cap)
}

pub fn construct(p: u64, beta: u64, q: u64, sign: Sign, r_cap: u64) -> Result<Vec<Certificate>> {
    match sign {
        Sign::Minus => construct_minus(p, beta, q, r_cap),
        Sign::Plus => construct_plus(p, beta, q, r_cap),
    }
}

/// Least prime `q ≡ β (mod p)`, `q > p`, whose interval holds an integer.
pub fn least_admissible_q(p: u64, beta: u64, sign: Sign, q_cap: u64) -> Result<u64> {
    let c = member_class(p, beta, sign)?;
    let mut q = p + beta;
    while q <= q_cap {
        if is_prime(q) && admissible_alphas(&c, q, sign).is_ok() {
            return Ok(q);
        }
        q += p;
    }
    Err(Error::SearchLimitExceeded {
        residue: beta,
        modulus: p,
        lower_bound: p,
        search_cap: q_cap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kaplan::{ternary_coeff, OddPrimeTriple};

    fn kaplan(c: &Certificate) -> i64 {
        ternary_coeff(&OddPrimeTriple::new(c.p, c.q, c.r).unwrap(), c.n).unwrap()
    }

    #[test]
    fn minus_examples() {
        let certs = construct_minus(11, 4, 59, 10_000_000).unwrap();
        assert_eq!(certs.len(), 1);
        let c = &certs[0];
        assert_eq!((c.alpha, c.r, c.n, c.claimed), (2, 877, 175410, -7));
        assert_eq!(kaplan(c), -7);

        let certs = construct_minus(11, 4, 103, 10_000_000).unwrap();
        assert_eq!((certs[0].alpha, certs[0].r, certs[0].n), (4, 1229, 381000));

        assert_eq!(construct_minus(11, 4, 37, 10_000_000), Err(Error::NoIntegerInInterval));
        assert!(matches!(construct_minus(13, 5, 239, 10_000_000), Err(Error::ConditionViolated(_))));
        assert!(matches!(
            construct_minus(11, 4, 59, 800),
            Err(Error::SearchLimitExceeded { .. })
        ));
    }

    #[test]
    fn plus_examples() {
        let certs = construct_plus(13, 5, 239, 10_000_000).unwrap();
        assert_eq!(certs.len(), 1);
        let c = &certs[0];
        assert_eq!((c.alpha, c.r, c.n, c.claimed, c.exact_height), (6, 8221, 8632062, 8, true));
        assert_eq!(kaplan(c), 8);

        let q = least_admissible_q(23, 9, Sign::Plus, 1_000_000).unwrap();
        let certs = construct_plus(23, 9, q, 10_000_000).unwrap();
        assert!(certs.iter().all(|c| c.claimed == 14 && !c.exact_height));
        assert!(certs.iter().all(|c| kaplan(c) == 14));
    }

    #[test]
    fn least_q() {
        assert_eq!(least_admissible_q(11, 4, Sign::Minus, 1_000_000), Ok(59));
        assert!(least_admissible_q(11, 4, Sign::Plus, 1_000_000).is_err());
    }
}
