//! Floating-point spot checks of the two analytic ingredients behind the
//! real-rootedness of sparse paving h*-polynomials.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::exactmath::binomial;
use crate::formulas::p_star;

/// Working precision (bits) for the trigonometric identity.
pub const TRIG_PRECISION: usize = 256;

/// Largest angle accepted by [`trig_identity_residual`].
pub const THETA_MAX: f64 = 1.5;

/// Absolute tolerance for both sampled lemma checks.
pub const LEMMA_TOLERANCE: f64 = 1e-9;

/// `points` equally spaced angles in `[0, 1.45]`, endpoints included.
pub fn theta_grid(points: usize) -> Vec<f64> {
    const LAST: f64 = 1.45;
    match points {
        0 => vec![],
        1 => vec![0.0],
        _ => (0..points)
            .map(|i| LAST * i as f64 / (points - 1) as f64)
            .collect(),
    }
}

/// `i / steps` for `i = 1..=steps`.
pub fn y_grid(steps: usize) -> Vec<f64> {
    (1..=steps).map(|i| i as f64 / steps as f64).collect()
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LemmaError {
    #[error("theta = {0} is outside [0, {THETA_MAX}]")]
    Theta(f64),
    #[error("a = {0} must be 1 or 2")]
    A(i64),
    #[error("n = {0} must be at least 9")]
    N(i64),
    #[error("y = {0} is outside (0, 1]")]
    Y(f64),
}

const RM: RoundingMode = RoundingMode::ToEven;

fn big_int(v: &num_bigint::BigInt, cc: &mut Consts) -> BigFloat {
    BigFloat::parse(&v.to_string(), Radix::Dec, TRIG_PRECISION, RM, cc)
}

fn to_f64(x: &BigFloat) -> f64 {
    x.to_string().parse().unwrap_or(f64::NAN)
}

/// `|sum_j binom(n,2j) (-tan^2 θ)^j - cos(nθ) / cos^n θ|`.
///
/// Both sides are evaluated with [`TRIG_PRECISION`] bits at the exact binary
/// value of `theta`; near `π/2` they grow like `cos^{-n} θ`, far beyond what
/// double precision can resolve to an absolute error of `1e-9`.
pub fn trig_identity_residual(n: u32, theta: f64) -> Result<f64, LemmaError> {
    if !(0.0..=THETA_MAX).contains(&theta) {
        return Err(LemmaError::Theta(theta));
    }
    let p = TRIG_PRECISION;
    let mut cc = Consts::new().expect("astro-float constants cache");
    let th = BigFloat::from_f64(theta, p);
    let tan = th.tan(p, RM, &mut cc);
    let x = tan.mul(&tan, p, RM).neg();

    let mut lhs = BigFloat::from_word(0, p);
    let mut power = BigFloat::from_word(1, p);
    for j in 0..=(n / 2) as usize {
        let c = big_int(&binomial(n as i64, 2 * j), &mut cc);
        lhs = lhs.add(&c.mul(&power, p, RM), p, RM);
        power = power.mul(&x, p, RM);
    }

    let n_big = BigFloat::from_word(n as u64, p);
    let numer = th.mul(&n_big, p, RM).cos(p, RM, &mut cc);
    let denom = th.cos(p, RM, &mut cc).powi(n as usize, p, RM);
    let rhs = numer.div(&denom, p, RM);
    Ok(to_f64(&lhs.sub(&rhs, p, RM).abs()))
}

/// `y^{n/2} p*_{a,n}((y-1)/y)` in double precision, for `a ∈ {1,2}`, `n >= 9`, `y ∈ (0,1]`.
///
/// The bound to check is that the value lies strictly inside `(-a/n, a/n)`.
pub fn bounds_lemma_value(a: i64, n: i64, y: f64) -> Result<f64, LemmaError> {
    if !(1..=2).contains(&a) {
        return Err(LemmaError::A(a));
    }
    if n < 9 {
        return Err(LemmaError::N(n));
    }
    if !(y > 0.0 && y <= 1.0) {
        return Err(LemmaError::Y(y));
    }
    let w = (y - 1.0) / y;
    let coeffs = p_star(a, n).expect("a <= 2 < n");
    let value = coeffs
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * w + c.to_f64().unwrap_or(f64::NAN));
    Ok(y.powf(n as f64 / 2.0) * value)
}
