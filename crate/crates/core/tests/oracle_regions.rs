use num_bigint::BigInt;

use rank2_ehrhart::exactmath::Rational;
use rank2_ehrhart::formulas::{ehr_hypersimplex, ehr_q, ehr_r_halfopen, ehr_simplex_product};
use rank2_ehrhart::oracle::{count_region, oracle_region_ehrhart, Guard, Region};

fn count(region: Region, t: u64) -> Rational {
    Rational::from_integer(BigInt::from(
        count_region(region, t, Guard::DEFAULT).unwrap(),
    ))
}

#[test]
fn q_regions_match_closed_forms() {
    for n in 2..=6usize {
        for k in 1..n {
            for t in 0..=4u64 {
                for half_open in [false, true] {
                    let region = if half_open {
                        Region::QHalfOpen { k, n }
                    } else {
                        Region::Q { k, n }
                    };
                    let formula = ehr_q(k as i64, n as i64, half_open)
                        .unwrap()
                        .eval_int(t as i64);
                    assert_eq!(count(region, t), formula, "{region}, t={t}");
                }
            }
        }
    }
}

#[test]
fn r_regions_and_hypersimplex_match_closed_forms() {
    for n in 2..=6usize {
        for l in 1..n {
            for t in 0..=4u64 {
                let formula = ehr_r_halfopen(l as i64, n as i64)
                    .unwrap()
                    .eval_int(t as i64);
                assert_eq!(
                    count(Region::RHalfOpen { l, n }, t),
                    formula,
                    "l={l}, n={n}, t={t}"
                );
            }
        }
        for t in 0..=4u64 {
            let formula = ehr_hypersimplex(n as i64).unwrap().eval_int(t as i64);
            assert_eq!(
                count(Region::Hypersimplex { n }, t),
                formula,
                "n={n}, t={t}"
            );
        }
    }
}

#[test]
fn r_regions_are_unions_of_half_open_q() {
    for n in 2..=6usize {
        for l in 1..n {
            for t in 0..=4u64 {
                let pieces: Rational = (1..=l).map(|k| count(Region::QHalfOpen { k, n }, t)).sum();
                assert_eq!(pieces, count(Region::RHalfOpen { l, n }, t));
            }
        }
    }
}

#[test]
fn interpolated_region_polynomials() {
    assert_eq!(
        oracle_region_ehrhart(Region::RHalfOpen { l: 2, n: 4 }, Guard::DEFAULT).unwrap(),
        ehr_r_halfopen(2, 4).unwrap()
    );
    assert_eq!(
        oracle_region_ehrhart(Region::SimplexProduct { m: 2, n: 3 }, Guard::DEFAULT).unwrap(),
        ehr_simplex_product(2, 5).unwrap()
    );
    assert_eq!(
        oracle_region_ehrhart(Region::Q { k: 3, n: 6 }, Guard::DEFAULT).unwrap(),
        ehr_q(3, 6, false).unwrap()
    );
}
