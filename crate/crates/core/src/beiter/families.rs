//! Classical certificate families and residue finders for large positive coefficients.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::certificate::{Certificate, CertificateKind};
use super::construct::{construct_plus, least_admissible_q};
use super::{beta_class, check_odd_prime, in_b_plus, Sign};
use crate::error::{Error, Result};
use crate::numtheory::{find_prime_in_ap, is_prime, pow_mod};

/// Cap on successive `m` tried when `moller` searches.
const MOLLER_SEARCH_LIMIT: u64 = 100_000;

fn check_moller_q(p: u64, q: u64) -> Result<()> {
    if p <= 3 || !is_prime(p) {
        return Err(Error::InvalidInput(format!("need a prime p > 3, got {p}")));
    }
    if q <= p || !is_prime(q) || q % p != 2 {
        return Err(Error::CongruenceViolated(format!(
            "need a prime q > {p} with q ≡ 2 (mod {p}), got {q}"
        )));
    }
    Ok(())
}

/// Coefficient `(p+1)/2` at `n = (p-1)(qr+1)/2` for `q ≡ 2 (mod p)` and
/// `r = (mpq-1)/2`, with `q` the least such prime.
pub fn moller(p: u64, m: u64, search: bool) -> Result<Certificate> {
    if p <= 3 || !is_prime(p) {
        return Err(Error::InvalidInput(format!("need a prime p > 3, got {p}")));
    }
    let q = find_prime_in_ap(2, p, p, u64::MAX)?;
    moller_with_q(p, q, m, search)
}

/// As [`moller`] for a caller-supplied `q`. With `search`, successive `m`
/// starting at the given one are tried until `r` is a prime above `q`.
pub fn moller_with_q(p: u64, q: u64, m: u64, search: bool) -> Result<Certificate> {
    check_moller_q(p, q)?;
    if m == 0 {
        return Err(Error::InvalidInput("m must be positive".into()));
    }
    let pq = p * q;
    let attempt = |m: u64| -> Option<u64> {
        // mpq must be odd for r to be integral; pq is odd so m must be
        if m % 2 == 0 {
            return None;
        }
        let r = (m.checked_mul(pq)? - 1) / 2;
        (r > q && is_prime(r)).then_some(r)
    };
    let (m, r) = if search {
        (m..m.saturating_add(MOLLER_SEARCH_LIMIT))
            .find_map(|m| attempt(m).map(|r| (m, r)))
            .ok_or(Error::RNotPrime { p, q, m })?
    } else {
        (m, attempt(m).ok_or(Error::RNotPrime { p, q, m })?)
    };
    let n = index_for(p - 1, q, r)?;
    Ok(Certificate {
        kind: CertificateKind::Moller,
        p,
        q,
        r,
        alpha: m as i64,
        n,
        claimed: ((p + 1) / 2) as i64,
        exact_height: true,
    })
}

/// `k(qr+1)/2`.
fn index_for(k: u64, q: u64, r: u64) -> Result<u64> {
    let v = k as u128 * (q as u128 * r as u128 + 1) / 2;
    u64::try_from(v).map_err(|_| Error::TooLarge("index overflows u64".into()))
}

/// Coefficient `(p-1)/2` at `n = (p-3)(qr+1)/2` on the same triples as [`moller`].
pub fn lehmer(p: u64, q: u64, r: u64) -> Result<Certificate> {
    if p == 3 {
        return Err(Error::InvalidInput("p = 3 gives the degenerate value 0".into()));
    }
    check_moller_q(p, q)?;
    let pq = p * q;
    if r <= q || !is_prime(r) || (2 * r + 1) % pq != 0 {
        return Err(Error::ConditionViolated(format!(
            "r = {r} is not a prime of the form (mpq-1)/2 above q = {q}"
        )));
    }
    Ok(Certificate {
        kind: CertificateKind::Lehmer,
        p,
        q,
        r,
        alpha: ((2 * r + 1) / pq) as i64,
        n: index_for(p - 3, q, r)?,
        claimed: ((p - 1) / 2) as i64,
        exact_height: false,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct YvesBeta {
    pub e: u32,
    pub p: u64,
    pub beta: u64,
    pub beta_star: u64,
    /// `((2N-1)p - 9)/(3N)`, equal to `p - β`.
    pub bound: u64,
    /// `p` sits exactly on the size threshold `N²/2 - 9`.
    pub boundary: bool,
}

/// Member `β = ((N+1)p + 9)/(3N)` of `B₊(p)` for `N = 2^{2e+1}`,
/// `p ≡ N - 9 (mod 3N)` and `p >= N²/2 - 9`.
pub fn yves_beta(e: u32, p: u64) -> Result<YvesBeta> {
    if e == 0 || e > 15 {
        return Err(Error::InvalidInput(format!("e = {e} outside [1, 15]")));
    }
    check_odd_prime(p)?;
    let big_n = 1u64 << (2 * e + 1);
    let (pi, ni) = (p as i128, big_n as i128);
    if (pi - (ni - 9)).rem_euclid(3 * ni) != 0 {
        return Err(Error::ConditionViolated(format!(
            "p = {p} is not ≡ {} (mod {})",
            (ni - 9).rem_euclid(3 * ni),
            3 * ni
        )));
    }
    if 2 * pi < ni * ni - 18 {
        return Err(Error::ConditionViolated(format!(
            "p = {p} is below N²/2 - 9 = {}",
            (ni * ni - 18) / 2
        )));
    }
    let beta = ((ni + 1) * pi + 9) / (3 * ni);
    let beta_star = (2 * pi + ni) / 3;
    let c = beta_class(p, beta as u64)?;
    if c.beta_star as i128 != beta_star || !in_b_plus(&c) {
        return Err(Error::Internal(format!("β = {beta} is not in B₊({p})")));
    }
    let boundary = 2 * pi == ni * ni - 18;
    if boundary {
        log::warn!("p = {p} sits exactly on the size threshold for e = {e}");
    }
    Ok(YvesBeta {
        e,
        p,
        beta: beta as u64,
        beta_star: c.beta_star,
        bound: (((2 * ni - 1) * pi - 9) / (3 * ni)) as u64,
        boundary,
    })
}

/// Positive construction at the least admissible `q` for the β of [`yves_beta`].
pub fn yves_certificate(e: u32, p: u64, q_cap: u64, r_cap: u64) -> Result<Vec<Certificate>> {
    let y = yves_beta(e, p)?;
    let q = least_admissible_q(p, y.beta, Sign::Plus, q_cap)?;
    let mut certs = construct_plus(p, y.beta, q, r_cap)?;
    for c in &mut certs {
        c.kind = CertificateKind::Yves;
    }
    Ok(certs)
}

/// Least `β ∈ [(p/3)(1+ε), (p/3)(1+2ε)]` whose inverse lies in
/// `[(2p/3)(1-ε/2), (2p/3)(1+ε)]` and which belongs to `B₊(p)`.
pub fn find_beta_window(p: u64, epsilon: Ratio<i128>) -> Result<Option<u64>> {
    check_odd_prime(p)?;
    if epsilon <= Ratio::from_integer(0) || epsilon >= Ratio::new(1, 6) {
        return Err(Error::InvalidInput(format!("ε = {epsilon} outside (0, 1/6)")));
    }
    let pr = Ratio::from_integer(p as i128);
    let one = Ratio::from_integer(1);
    let (b_lo, b_hi) = (pr / 3 * (one + epsilon), pr / 3 * (one + epsilon * 2));
    let (s_lo, s_hi) = (pr * 2 / 3 * (one - epsilon / 2), pr * 2 / 3 * (one + epsilon));
    let first = b_lo.ceil().to_integer().max(1);
    let last = b_hi.floor().to_integer().min(p as i128 - 1);
    for beta in first..=last {
        let c = beta_class(p, beta as u64)?;
        let s = Ratio::from_integer(c.beta_star as i128);
        if s_lo <= s && s <= s_hi && in_b_plus(&c) {
            return Ok(Some(c.beta));
        }
    }
    Ok(None)
}

/// The root `β < p/2` of `β² ≡ -1 (mod p)`, when one exists.
pub fn duke_beta(p: u64) -> Option<u64> {
    if p < 3 || !is_prime(p) || p % 4 != 1 {
        return None;
    }
    let non_residue = (2..p).find(|&c| pow_mod(c, (p - 1) / 2, p) == p - 1)?;
    let root = pow_mod(non_residue, (p - 1) / 4, p);
    Some(root.min(p - root))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moller_examples() {
        let c = moller(5, 1, false).unwrap();
        assert_eq!((c.q, c.r, c.n, c.claimed), (7, 17, 240, 3));
        let c = moller(7, 3, false).unwrap();
        assert_eq!((c.q, c.r, c.n, c.claimed), (23, 241, 16632, 4));
        assert_eq!(moller(5, 2, false), Err(Error::RNotPrime { p: 5, q: 7, m: 2 }));
        let c = moller(7, 1, true).unwrap();
        assert_eq!((c.alpha, c.r), (3, 241));
        assert!(moller(3, 1, true).is_err());
        assert!(moller_with_q(5, 11, 1, false).is_err());
    }

    #[test]
    fn lehmer_examples() {
        let c = lehmer(5, 7, 17).unwrap();
        assert_eq!((c.n, c.claimed, c.alpha), (120, 2, 1));
        let c = lehmer(7, 23, 241).unwrap();
        assert_eq!((c.n, c.claimed, c.alpha), (11088, 3, 3));
        assert!(lehmer(3, 5, 7).is_err());
        assert!(lehmer(5, 7, 19).is_err());
    }

    #[test]
    fn yves_examples() {
        let y = yves_beta(1, 47).unwrap();
        assert_eq!((y.beta, y.beta_star, y.bound, y.boundary), (18, 34, 29, false));
        let y = yves_beta(2, 503).unwrap();
        assert_eq!((y.beta, y.bound, y.boundary), (173, 330, true));
        // p = 23 satisfies p >= N²/2 - 9 with equality
        let y = yves_beta(1, 23).unwrap();
        assert_eq!((y.beta, y.bound, y.boundary), (9, 14, true));
        assert!(matches!(yves_beta(1, 41), Err(Error::ConditionViolated(_))));
        // 23 ≡ 23 (mod 96) but 23 < 503
        assert!(matches!(yves_beta(2, 23), Err(Error::ConditionViolated(_))));
        for p in (24..5000).filter(|&p| is_prime(p) && p % 24 == 23) {
            let y = yves_beta(1, p).unwrap();
            assert_eq!(y.bound, (5 * p - 3) / 8);
            assert_eq!(y.bound, p - y.beta);
        }
    }

    #[test]
    fn window_examples() {
        let eps = Ratio::new(1, 10);
        let b = find_beta_window(10007, eps).unwrap().unwrap();
        let c = beta_class(10007, b).unwrap();
        assert!(in_b_plus(&c));
        assert!(30 * b >= 10007 * 11 && 30 * b <= 10007 * 12);
        assert_eq!(find_beta_window(11, Ratio::new(1, 100)), Ok(None));
        assert!(find_beta_window(11, Ratio::new(1, 6)).is_err());
        for p in (29..3000).filter(|&p| is_prime(p)) {
            if let Some(b) = find_beta_window(p, Ratio::new(1, 8)).unwrap() {
                assert!(in_b_plus(&beta_class(p, b).unwrap()));
            }
        }
    }

    #[test]
    fn duke_examples() {
        assert_eq!(duke_beta(13), Some(5));
        assert_eq!(duke_beta(11), None);
        assert_eq!(duke_beta(29), Some(12));
        assert_eq!(duke_beta(5), Some(2));
        for p in (5..2000).filter(|&p| is_prime(p) && p % 4 == 1) {
            let b = duke_beta(p).unwrap();
            assert_eq!((b * b + 1) % p, 0);
            assert!(2 * b < p);
        }
    }
}
