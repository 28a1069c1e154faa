use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use rank2_ehrhart::exactmath::{binomial_poly, Polynomial, Rational};
use rank2_ehrhart::formulas::{ehr_matroid, hstar_matroid, hstar_to_ehr, p_poly, p_star};
use rank2_ehrhart::matroid::{enumerate_partitions, Rank2Matroid};

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

#[test]
fn p_star_expands_p_in_the_hstar_basis() {
    for n in 1..=12i64 {
        for a in 1..=n {
            let expanded: Polynomial = p_star(a, n)
                .unwrap()
                .into_iter()
                .enumerate()
                .map(|(j, c)| {
                    binomial_poly(n - 1 - j as i64, (n - 1) as usize)
                        .scale(&Rational::from_integer(c))
                })
                .sum();
            assert_eq!(expanded, p_poly(a, n).unwrap(), "a={a}, n={n}");
        }
    }
}

#[test]
fn hstar_sum_is_normalized_volume() {
    for n in 3..=10 {
        for m in enumerate_partitions(n, 3) {
            let h = hstar_matroid(&m);
            let ehr = ehr_matroid(&m);
            let volume = ehr.leading_coeff().unwrap() * Rational::from_integer(factorial(n - 1));
            assert_eq!(Rational::from_integer(h.sum()), volume, "{m}");
        }
    }
}

#[test]
fn hstar_is_nonnegative() {
    for n in 2..=12 {
        for m in enumerate_partitions(n, 2) {
            let h = hstar_matroid(&m);
            assert!(h.is_nonnegative(), "{m}: {:?}", h.coeffs());
            assert!(!h.coeffs()[0].is_zero() && !h.coeffs()[0].is_negative());
        }
    }
}

#[test]
fn disconnected_hstar_matches_products_of_simplices() {
    for n in 2..=12 {
        for m in 1..n {
            let mat = Rank2Matroid::from_partition(&[m, n - m]).unwrap();
            let expected: Vec<BigInt> = (0..n)
                .map(|j| {
                    let c = |top: usize| rank2_ehrhart::exactmath::binomial(top as i64 - 1, j);
                    c(m) * c(n - m)
                })
                .collect();
            let h = hstar_matroid(&mat);
            let mut got = h.coeffs().to_vec();
            got.resize(n, BigInt::zero());
            assert_eq!(got, expected, "{mat}");
        }
    }
}

fn partition() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..5, 2..6)
}

proptest! {
    #[test]
    fn hstar_round_trips_through_ehrhart(parts in partition()) {
        let m = Rank2Matroid::from_partition(&parts).unwrap();
        prop_assert_eq!(hstar_to_ehr(&hstar_matroid(&m)), ehr_matroid(&m));
    }

    #[test]
    fn ehrhart_values_are_integers(parts in partition(), t in 0i64..12) {
        let m = Rank2Matroid::from_partition(&parts).unwrap();
        let v = ehr_matroid(&m).eval_int(t);
        prop_assert!(v.is_integer() && v.is_positive());
    }

    #[test]
    fn partition_order_is_irrelevant(mut parts in partition()) {
        let a = ehr_matroid(&Rank2Matroid::from_partition(&parts).unwrap());
        parts.reverse();
        prop_assert_eq!(a, ehr_matroid(&Rank2Matroid::from_partition(&parts).unwrap()));
    }
}
