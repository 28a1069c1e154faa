//! Binomial coefficients, as integers and as polynomials in `t`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Polynomial, Rational};

/// Generalized binomial coefficient `top choose r` for any integer `top`.
///
/// `binomial(-1, r) = (-1)^r`, and `binomial(m, r) = 0` for `0 <= m < r`.
pub fn binomial(top: i64, r: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..r {
        acc *= BigInt::from(top) - BigInt::from(i);
        acc /= BigInt::from(i + 1);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `binom(t + shift, m)` expanded in the monomial basis.
pub fn binomial_poly(shift: i64, m: usize) -> Polynomial {
    binomial_poly_affine(1, shift, m)
}

/// `binom(scale*t + shift, m) = prod_{i<m} (scale*t + shift - i) / m!`.
pub fn binomial_poly_affine(scale: i64, shift: i64, m: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    let slope = Rational::from_integer(scale.into());
    for i in 0..m {
        let factor = Polynomial::linear(
            Rational::from_integer((shift - i as i64).into()),
            slope.clone(),
        );
        acc = &acc * &factor;
    }
    let mut fact = BigInt::one();
    for i in 2..=m {
        fact *= BigInt::from(i);
    }
    acc.scale(&Rational::new(BigInt::one(), fact))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn integer_binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-1, 4), BigInt::from(1));
        assert_eq!(binomial(-3, 2), BigInt::from(6));
        assert_eq!(binomial(30, 15), BigInt::from(155_117_520u64));
    }

    #[test]
    fn spot_expansions() {
        assert_eq!(binomial_poly(0, 0), Polynomial::one());
        assert_eq!(
            binomial_poly(2, 3),
            Polynomial::from_coeffs(vec![rat(0, 1), rat(1, 3), rat(1, 2), rat(1, 6)])
        );
        assert_eq!(binomial_poly(1, 1), Polynomial::from_ints(&[1, 1]));
        assert_eq!(binomial_poly(3, 3).eval_int(1), rat(4, 1));
    }

    #[test]
    fn pascal_identity() {
        for c in -8..=8 {
            for m in 1..=8 {
                assert_eq!(
                    binomial_poly(c, m),
                    binomial_poly(c - 1, m) + binomial_poly(c - 1, m - 1),
                    "c={c} m={m}"
                );
            }
        }
    }

    #[test]
    fn evaluates_to_integer_binomials() {
        for c in -6..=6i64 {
            for m in 0..=7 {
                for k in (-c).max(0)..=10 {
                    let v = binomial_poly(c, m).eval_int(k);
                    assert_eq!(
                        v,
                        Rational::from_integer(binomial(k + c, m)),
                        "c={c} m={m} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn affine_matches_composition() {
        for n in 1..=10 {
            let direct = binomial_poly_affine(2, n - 1, (n - 1) as usize);
            let composed = binomial_poly(n - 1, (n - 1) as usize).compose_scaled(&rat(2, 1));
            assert_eq!(direct, composed);
        }
    }
}
