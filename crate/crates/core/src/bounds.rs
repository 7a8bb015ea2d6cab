//! Known upper bounds on the height `A(pqr)`, used as ceilings on computed heights.

use crate::kaplan::OddPrimeTriple;
use crate::numtheory::mod_inverse;

/// `p - ⌈p/4⌉`.
pub fn general_ceiling(p: u64) -> u64 {
    p - p.div_ceil(4)
}

/// `min((p-1)/2 + a, p - a)` with `a = min(q*, r*, p - q*, p - r*)`, where
/// `q*`, `r*` are the inverses of `q`, `r` modulo `p`.
pub fn inverse_ceiling(t: &OddPrimeTriple) -> u64 {
    let p = t.p;
    let q_star = mod_inverse((t.q % p) as i64, p).expect("q is a prime distinct from p");
    let r_star = mod_inverse((t.r % p) as i64, p).expect("r is a prime distinct from p");
    let a = q_star.min(r_star).min(p - q_star).min(p - r_star);
    ((p - 1) / 2 + a).min(p - a)
}

/// Ceiling that applies only when `q` or `r` sits in a special residue class:
/// `(p+1)/2` for classes `±1, ±2`, `(p+3)/2` for classes `(p±1)/2`.
pub fn residue_ceiling(t: &OddPrimeTriple) -> Option<u64> {
    let p = t.p;
    let classes = [t.q % p, t.r % p];
    let near_unit = classes.iter().any(|&c| c == 1 || c == 2 || c == p - 1 || c == p - 2);
    if near_unit {
        return Some((p + 1) / 2);
    }
    let half = classes.iter().any(|&c| c == (p - 1) / 2 || c == (p + 1) / 2);
    half.then_some((p + 3) / 2)
}

/// Smallest ceiling known for `A(pqr)`.
pub fn best_ceiling(t: &OddPrimeTriple) -> u64 {
    let c = general_ceiling(t.p).min(inverse_ceiling(t));
    residue_ceiling(t).map_or(c, |r| c.min(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceilings() {
        assert_eq!(general_ceiling(67), 50);
        assert_eq!(general_ceiling(73), 54);
        assert_eq!(general_ceiling(3), 2);
        let t = OddPrimeTriple::new(3, 5, 7).unwrap();
        assert_eq!(residue_ceiling(&t), Some(2));
        assert_eq!(best_ceiling(&t), 2);
        // q ≡ 3, r ≡ 4 (mod 7): the half-residue class applies
        let t = OddPrimeTriple::new(7, 17, 53).unwrap();
        assert_eq!(residue_ceiling(&t), Some(5));
        // (17, 29, 1931): 29* = 10, 1931* = 4 mod 17, so a = 4
        let t = OddPrimeTriple::new(17, 29, 1931).unwrap();
        assert_eq!(inverse_ceiling(&t), 12);
    }
}
