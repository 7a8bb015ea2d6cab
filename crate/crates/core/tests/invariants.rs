use cyclo_heights::beiter::{construct, least_admissible_q, verify_certificate, Sign};
use cyclo_heights::bounds::{best_ceiling, general_ceiling};
use cyclo_heights::dense::{cyclotomic_poly, height_of};
use cyclo_heights::kaplan::{transport_neg, transport_same};
use cyclo_heights::numtheory::{find_prime_in_ap, is_prime};
use cyclo_heights::{ternary_coeff, ternary_height, OddPrimeTriple, TernaryCyclo};
use proptest::prelude::*;

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43])
}

fn triple() -> impl Strategy<Value = OddPrimeTriple> {
    (small_prime(), small_prime(), small_prime())
        .prop_filter("distinct", |(a, b, c)| a != b && b != c && a != c)
        .prop_map(|(a, b, c)| {
            let mut v = [a, b, c];
            v.sort_unstable();
            OddPrimeTriple::new(v[0], v[1], v[2]).unwrap()
        })
        .prop_filter("dense-sized", |t| t.n() <= 60_000)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kaplan_matches_dense(t in triple()) {
        let dense = cyclotomic_poly(t.n()).unwrap();
        let tc = TernaryCyclo::new(t).unwrap();
        for k in 0..=dense.degree() as u64 + 3 {
            prop_assert_eq!(tc.coeff(k), dense.get(k));
        }
    }

    #[test]
    fn scan_matches_dense_and_ceilings(t in triple(), workers in 1usize..5) {
        let h = ternary_height(&t, workers).unwrap();
        let (dh, dk) = height_of(&cyclotomic_poly(t.n()).unwrap());
        prop_assert_eq!((h.height, h.witness), (dh, dk));
        prop_assert!(h.height <= best_ceiling(&t));
        prop_assert!(h.height <= general_ceiling(t.p));
    }

    #[test]
    fn transports_preserve_or_negate(t in triple(), k in 0u64..1000, hop in 1u64..4) {
        let n = k % (t.degree() + 1);
        let pq = t.p * t.q;
        let v = ternary_coeff(&t, n).unwrap();
        let s = find_prime_in_ap(t.r as i64, pq, t.r + (hop - 1) * pq, u64::MAX).unwrap();
        let same = transport_same(&t, n, s).unwrap();
        prop_assert_eq!(ternary_coeff(&OddPrimeTriple::new(t.p, t.q, s).unwrap(), same).unwrap(), v);
        let u = find_prime_in_ap(-(t.r as i64), pq, pq.max(t.q) + (hop - 1) * pq, u64::MAX).unwrap();
        let neg = transport_neg(&t, n, u).unwrap();
        prop_assert_eq!(ternary_coeff(&OddPrimeTriple::new(t.p, t.q, u).unwrap(), neg).unwrap(), -v);
    }
}

#[test]
fn tampering_is_always_detected() {
    for (p, beta, sign) in [(11, 4, Sign::Minus), (13, 5, Sign::Plus), (23, 9, Sign::Plus), (17, 7, Sign::Minus)] {
        let q = least_admissible_q(p, beta, sign, 1_000_000).unwrap();
        for cert in construct(p, beta, q, sign, 10_000_000).unwrap() {
            assert!(verify_certificate(&cert).verified());
            let mut off = cert;
            off.claimed += 1;
            off.exact_height = false;
            assert!(!verify_certificate(&off).verified());
            let mut moved = cert;
            moved.n += 1;
            moved.exact_height = false;
            assert!(!verify_certificate(&moved).verified());
        }
    }
}

#[test]
fn r_cap_is_respected() {
    let e = construct(11, 4, 59, Sign::Minus, 876).unwrap_err();
    assert!(matches!(e, cyclo_heights::Error::SearchLimitExceeded { .. }));
    assert!(is_prime(877));
}
