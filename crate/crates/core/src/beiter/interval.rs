//! Exact rational intervals of admissible `α` and the `q` thresholds that
//! guarantee an integer inside them.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{BetaClass, Sign};
use crate::error::{Error, Result};
use crate::numtheory::is_prime;

/// Interval with rational endpoints `lo_num/lo_den`, `hi_num/hi_den`.
///
/// All comparisons are by cross-multiplication in `i128`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalQ {
    pub lo_num: i128,
    pub lo_den: i128,
    pub hi_num: i128,
    pub hi_den: i128,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl IntervalQ {
    pub fn new(lo: (i128, i128), hi: (i128, i128), lo_open: bool, hi_open: bool) -> Self {
        assert!(lo.1 > 0 && hi.1 > 0, "denominators must be positive");
        IntervalQ { lo_num: lo.0, lo_den: lo.1, hi_num: hi.0, hi_den: hi.1, lo_open, hi_open }
    }

    pub fn lower(&self) -> Ratio<i128> {
        Ratio::new(self.lo_num, self.lo_den)
    }

    pub fn upper(&self) -> Ratio<i128> {
        Ratio::new(self.hi_num, self.hi_den)
    }

    /// Whether the rational `num/den` (`den > 0`) lies in the interval.
    pub fn contains_rational(&self, num: i128, den: i128) -> bool {
        let above = num * self.lo_den - self.lo_num * den;
        let below = self.hi_num * den - num * self.hi_den;
        (if self.lo_open { above > 0 } else { above >= 0 })
            && (if self.hi_open { below > 0 } else { below >= 0 })
    }

    pub fn contains(&self, x: i128) -> bool {
        self.contains_rational(x, 1)
    }

    pub fn is_empty(&self) -> bool {
        let cmp = self.lo_num * self.hi_den - self.hi_num * self.lo_den;
        cmp > 0 || (cmp == 0 && (self.lo_open || self.hi_open))
    }

    /// Least and greatest integers inside, if any.
    pub fn integer_bounds(&self) -> Option<(i128, i128)> {
        let lo_floor = self.lo_num.div_euclid(self.lo_den);
        let lo_exact = self.lo_num.rem_euclid(self.lo_den) == 0;
        let first = if lo_exact && !self.lo_open { lo_floor } else { lo_floor + 1 };
        let hi_floor = self.hi_num.div_euclid(self.hi_den);
        let hi_exact = self.hi_num.rem_euclid(self.hi_den) == 0;
        let last = if hi_exact && self.hi_open { hi_floor - 1 } else { hi_floor };
        (first <= last).then_some((first, last))
    }

    pub fn integers(&self) -> impl Iterator<Item = i128> {
        let (first, last) = self.integer_bounds().unwrap_or((1, 0));
        first..=last
    }

    /// Integers sitting exactly on an open endpoint (excluded from the interval).
    pub fn excluded_endpoint_integers(&self) -> Vec<i128> {
        let mut out = Vec::new();
        if self.lo_open && self.lo_num.rem_euclid(self.lo_den) == 0 {
            out.push(self.lo_num / self.lo_den);
        }
        if self.hi_open && self.hi_num.rem_euclid(self.hi_den) == 0 {
            out.push(self.hi_num / self.hi_den);
        }
        out
    }

    pub fn length(&self) -> Ratio<i128> {
        self.upper() - self.lower()
    }
}

fn check_q(c: &BetaClass, q: u64) -> Result<()> {
    if q <= c.p || !is_prime(q) || q % c.p != c.beta {
        return Err(Error::CongruenceViolated(format!(
            "need a prime q > {} with q ≡ {} (mod {}), got {q}",
            c.p, c.beta, c.p
        )));
    }
    Ok(())
}

/// Admissible `α` for the negative construction; `None` when the set is
/// empty (`p > β + 2β* + 1`).
pub fn interval_minus(c: &BetaClass, q: u64) -> Result<Option<IntervalQ>> {
    check_q(c, q)?;
    let (p, b, bs, s) = (c.p as i128, c.beta as i128, c.beta_star as i128, c.sigma as i128);
    let q = q as i128;
    if !(b >= 1 && 2 * b <= p - 3 && b >= s + 2 && p >= b + s + 2) {
        return Err(Error::ConditionViolated(format!(
            "β = {b}, σ = {s} violate 1 <= β <= (p-3)/2, β >= σ+2, p >= β+σ+2 for p = {p}"
        )));
    }
    if p > b + 2 * bs + 1 {
        return Ok(None);
    }
    let lo = (q * (p - bs - 2 - b), p * (p - bs - 2));
    let hi = if p < b + 2 * bs + 1 {
        (q * (p - bs - b), p * (p - bs))
    } else {
        (q * bs - 1, p * (p - bs - 1))
    };
    Ok(Some(IntervalQ::new(lo, hi, true, false)))
}

/// `γ = min{(p-β*)/(p-β), (β*-β)/β*}` as `(num, den)`.
fn gamma(c: &BetaClass) -> (i128, i128) {
    let (p, b, bs) = (c.p as i128, c.beta as i128, c.beta_star as i128);
    let first = (p - bs, p - b);
    let second = (bs - b, bs);
    if first.0 * second.1 <= second.0 * first.1 {
        first
    } else {
        second
    }
}

/// Admissible `α` for the positive construction; `None` when `β* > 2β`.
/// The lower endpoint is open; an integer sitting on it is excluded and logged.
pub fn interval_plus(c: &BetaClass, q: u64) -> Result<Option<IntervalQ>> {
    check_q(c, q)?;
    let (p, b, bs, s) = (c.p as i128, c.beta as i128, c.beta_star as i128, c.sigma as i128);
    let q = q as i128;
    if !(b >= 1 && 2 * b <= p - 3 && b + s >= p - 1) {
        return Err(Error::ConditionViolated(format!(
            "β = {b}, σ = {s} violate 1 <= β <= (p-3)/2, β+σ >= p-1 for p = {p}"
        )));
    }
    if bs > 2 * b {
        return Ok(None);
    }
    let (gn, gd) = gamma(c);
    let interval = IntervalQ::new((q * (p - 1 - 2 * b), p * (p - 1 - b)), (q * gn, p * gd), true, false);
    for a in interval.excluded_endpoint_integers() {
        log::warn!("α = {a} lies on the open lower endpoint for p = {p}, β = {b}, q = {q}; excluded");
    }
    Ok(Some(interval))
}

/// `q` above which the admissible interval has length at least one.
pub fn q_threshold(c: &BetaClass, sign: Sign) -> Result<Ratio<i128>> {
    if !c.in_set(sign) {
        return Err(Error::ConditionViolated(format!(
            "β = {} is not in B{}({})",
            c.beta,
            if sign == Sign::Minus { "₋" } else { "₊" },
            c.p
        )));
    }
    let (p, b, bs) = (c.p as i128, c.beta as i128, c.beta_star as i128);
    Ok(match sign {
        Sign::Minus if p < b + 2 * bs + 1 => Ratio::new(p * (p - bs) * (p - bs - 2), 2 * b),
        Sign::Minus => Ratio::new((b + bs - 1) * (p * (b + bs) + 1), b),
        Sign::Plus => {
            let g = Ratio::new(gamma(c).0, gamma(c).1);
            let denom = g * (p - 1 - b) - Ratio::from_integer(p - 1 - 2 * b);
            Ratio::from_integer(p * (p - 1 - b)) / denom
        }
    })
}
