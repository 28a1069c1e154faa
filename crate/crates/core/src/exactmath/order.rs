//! The coefficientwise partial order on polynomials.
//!
//! `p ⪯ q` iff every coefficient of `q - p` is nonnegative.

use num_traits::{Signed, Zero};

use super::{Polynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffOrder {
    /// `p = q`.
    Equal,
    /// `p ⪯ q` and every coefficient of `q - p` of degree at least one is positive.
    StrictOnPositiveDegree,
    /// `p ⪯ q`, with some positive-degree coefficient of `q - p` equal to zero.
    LessEq,
    /// `q - p` has a negative coefficient.
    Incomparable,
}

impl CoeffOrder {
    /// `p ⪯ q` holds in any of its forms.
    pub fn is_leq(self) -> bool {
        !matches!(self, CoeffOrder::Incomparable)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CoeffOrder::Equal => "equal",
            CoeffOrder::StrictOnPositiveDegree => "strict-positive-degree",
            CoeffOrder::LessEq => "leq",
            CoeffOrder::Incomparable => "incomparable",
        }
    }
}

/// Outcome of comparing `p` against `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub order: CoeffOrder,
    /// `q - p`.
    pub difference: Polynomial,
    /// Lowest degree at which `q - p` is negative, or (for `LessEq`) zero
    /// at positive degree.
    pub witness: Option<(usize, Rational)>,
}

/// Decides where `p` sits relative to `q` in the coefficientwise order.
pub fn coeff_compare(p: &Polynomial, q: &Polynomial) -> Comparison {
    let difference = q - p;
    if difference.is_zero() {
        return Comparison {
            order: CoeffOrder::Equal,
            difference,
            witness: None,
        };
    }
    let top = p.degree().max(q.degree()).unwrap_or(0);
    if let Some((i, c)) = difference
        .coeffs()
        .iter()
        .enumerate()
        .find(|(_, c)| c.is_negative())
    {
        let witness = Some((i, c.clone()));
        return Comparison {
            order: CoeffOrder::Incomparable,
            difference,
            witness,
        };
    }
    let zero_at = (1..=top).find(|&i| difference.coeff(i).is_zero());
    match zero_at {
        None => Comparison {
            order: CoeffOrder::StrictOnPositiveDegree,
            difference,
            witness: None,
        },
        Some(i) => Comparison {
            order: CoeffOrder::LessEq,
            difference,
            witness: Some((i, Rational::zero())),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{binomial_poly, rat};
    use proptest::prelude::*;

    #[test]
    fn reflexive_is_equal() {
        let p = binomial_poly(3, 4);
        assert_eq!(coeff_compare(&p, &p).order, CoeffOrder::Equal);
    }

    #[test]
    fn mixed_signs_are_incomparable() {
        let c = coeff_compare(&Polynomial::var(), &Polynomial::one());
        assert_eq!(c.order, CoeffOrder::Incomparable);
        assert_eq!(c.witness, Some((1, rat(-1, 1))));
    }

    #[test]
    fn zero_positive_degree_coefficient_is_not_strict() {
        let c = coeff_compare(&Polynomial::zero(), &Polynomial::from_ints(&[1, 0, 1]));
        assert_eq!(c.order, CoeffOrder::LessEq);
        assert_eq!(c.witness, Some((1, rat(0, 1))));
        // a zero constant term is allowed under strictness
        let c = coeff_compare(&Polynomial::zero(), &Polynomial::from_ints(&[0, 1, 1]));
        assert_eq!(c.order, CoeffOrder::StrictOnPositiveDegree);
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-3i64..=3, 0..4).prop_map(|v| Polynomial::from_ints(&v))
    }

    fn nonneg_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(0i64..=3, 0..4).prop_map(|v| Polynomial::from_ints(&v))
    }

    proptest! {
        #[test]
        fn antisymmetric(p in small_poly(), q in small_poly()) {
            let forward = coeff_compare(&p, &q).order.is_leq();
            let backward = coeff_compare(&q, &p).order.is_leq();
            if forward && backward {
                prop_assert_eq!(p, q);
            }
        }

        #[test]
        fn transitive(p in small_poly(), q in small_poly(), r in small_poly()) {
            if coeff_compare(&p, &q).order.is_leq() && coeff_compare(&q, &r).order.is_leq() {
                prop_assert!(coeff_compare(&p, &r).order.is_leq());
            }
        }

        #[test]
        fn stable_under_nonnegative_multiplication(
            p in small_poly(), q in small_poly(), r in nonneg_poly()
        ) {
            if coeff_compare(&p, &q).order.is_leq() {
                prop_assert!(coeff_compare(&(&p * &r), &(&q * &r)).order.is_leq());
            }
        }

        #[test]
        fn adding_nonnegative_is_leq(p in small_poly(), r in nonneg_poly()) {
            prop_assert!(coeff_compare(&p, &(&p + &r)).order.is_leq());
        }
    }
}
