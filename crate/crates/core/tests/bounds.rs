use cws_core::bounds::{asymptotics, gv_evaluate, gv_max_d, gv_max_k, gv_sides, BoundQuery, GvVariant};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Standard inequality in plain integers: sum_{s<d} C(n,s) 3^s (2^k - 1) < 2^n - 1.
fn standard_holds(n: usize, k: usize, d: usize) -> bool {
    let three = BigUint::from(3u32);
    let lhs = (0..d).fold(BigUint::zero(), |acc, s| acc + binomial(n, s) * three.pow(s as u32));
    let two = BigUint::from(2u32);
    lhs * (two.pow(k as u32) - BigUint::one()) < two.pow(n as u32) - BigUint::one()
}

proptest! {
    #[test]
    fn max_d_is_non_increasing_in_k(n in 1usize..=128, variant in 0usize..4) {
        let variant = GvVariant::ALL[variant];
        let ds: Vec<usize> = (0..=n).map(|k| gv_max_d(&BoundQuery::new(n, k, variant)).unwrap()).collect();
        prop_assert!(ds.windows(2).all(|w| w[0] >= w[1]), "{ds:?}");
    }

    #[test]
    fn max_k_is_consistent_with_max_d(n in 1usize..=128, k_frac in 0.0f64..=1.0, variant in 0usize..4) {
        let variant = GvVariant::ALL[variant];
        let k = (k_frac * n as f64) as usize;
        let d = gv_max_d(&BoundQuery::new(n, k, variant)).unwrap();
        let back = gv_max_k(n, d, variant, None).unwrap();
        prop_assert!(back.is_some_and(|kk| kk >= k), "n={n} k={k} d={d} back={back:?}");
    }

    #[test]
    fn palindromic_rhs_is_smaller(n in 2usize..=128, k_frac in 0.0f64..1.0) {
        let k = (k_frac * n as f64) as usize;
        let simple = gv_max_d(&BoundQuery::new(n, k, GvVariant::CyclicPalindromicSimple)).unwrap();
        let full = gv_max_d(&BoundQuery::new(n, k, GvVariant::CyclicNonpalindromic)).unwrap();
        prop_assert!(simple <= full);
    }

    #[test]
    fn standard_matches_integer_recomputation(n in 2usize..=90, k_frac in 0.01f64..1.0) {
        let k = ((k_frac * n as f64) as usize).clamp(1, n - 1);
        let d = gv_max_d(&BoundQuery::new(n, k, GvVariant::Standard)).unwrap();
        let expected = (1..=n).take_while(|&d| standard_holds(n, k, d)).last().unwrap_or(1);
        prop_assert_eq!(d, expected);
        let (lhs, rhs) = gv_sides(n, k, d, GvVariant::Standard);
        prop_assert!(lhs < rhs || d == 1);
    }
}

#[test]
fn capped_rows_and_names() {
    let row = gv_evaluate(&BoundQuery::new(36, 13, GvVariant::Standard).capped(5)).unwrap();
    assert_eq!((row.d_capped, row.by_convention), (5, false));
    assert!(row.d_gv >= 5);
    for v in GvVariant::ALL {
        assert_eq!(v.name().parse::<GvVariant>().unwrap(), v);
    }
    let a = asymptotics(0.1).unwrap();
    assert!(a.h2 > 0.46 && a.h2 < 0.47);
    assert!(asymptotics(1.5).is_err());
}
