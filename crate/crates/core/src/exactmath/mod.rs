//! Exact rational arithmetic and univariate polynomials in the dilation variable `t`.

mod binomial;
mod order;
mod poly;

pub use binomial::{binomial, binomial_poly, binomial_poly_affine};
pub use order::{coeff_compare, CoeffOrder, Comparison};
pub(crate) use poly::sign_of;
pub use poly::Polynomial;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `num / den` as a [`Rational`].
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
