//! Closed-form Ehrhart and h*-polynomials for rank-2 matroid polytopes and the
//! auxiliary (half-open) regions used to assemble them.
//!
//! Binomials in `t` follow the shift convention of [`binomial_poly`]:
//! `binom(t + c, m)` is `binomial_poly(c, m)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactmath::{binomial, binomial_poly, binomial_poly_affine, Polynomial, Rational};
use crate::matroid::Rank2Matroid;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("{name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        range: String,
    },
    #[error("polynomial of degree {degree} cannot have an h*-vector in dimension {dim}")]
    DegreeTooLarge { degree: usize, dim: usize },
    #[error("h*-coefficient h_{index} = {value} is not an integer")]
    NonIntegral { index: usize, value: Rational },
}

fn check(name: &'static str, value: i64, lo: i64, hi: i64) -> Result<(), FormulaError> {
    if (lo..=hi).contains(&value) {
        Ok(())
    } else {
        Err(FormulaError::OutOfRange {
            name,
            value,
            range: format!("[{lo}, {hi}]"),
        })
    }
}

fn scalar(c: i64) -> Rational {
    Rational::from_integer(c.into())
}

/// `binom(2t + n - 1, n - 1)`, the number of ways to put `2t` balls into `n` boxes.
pub fn two_t_binomial(n: i64) -> Polynomial {
    binomial_poly_affine(2, n - 1, (n - 1) as usize)
}

/// `binom(t + n - 1, n - 1)`, the Ehrhart polynomial of the simplex `Δ_{1,n}`.
pub fn ehr_simplex(n: i64) -> Polynomial {
    binomial_poly(n - 1, (n - 1) as usize)
}

/// Ehrhart polynomial of `Δ_{1,m} × Δ_{1,n-m}`.
pub fn ehr_simplex_product(m: i64, n: i64) -> Result<Polynomial, FormulaError> {
    check("m", m, 1, n - 1)?;
    Ok(ehr_simplex(m) * ehr_simplex(n - m))
}

/// `P_{a,n}(t) = sum_{k=1}^{a} binom(t+n-k-1, n-k) binom(t+k-1, k-1)`, with `P_{0,n} = 0`.
pub fn p_poly(a: i64, n: i64) -> Result<Polynomial, FormulaError> {
    check("n", n, 1, i64::MAX)?;
    check("a", a, 0, n)?;
    Ok((1..=a)
        .map(|k| {
            binomial_poly(n - k - 1, (n - k) as usize) * binomial_poly(k - 1, (k - 1) as usize)
        })
        .sum())
}

/// Ehrhart polynomial of `Q_{k,n}`, or of its half-open version when `half_open`.
pub fn ehr_q(k: i64, n: i64, half_open: bool) -> Result<Polynomial, FormulaError> {
    check("k", k, 1, n - 1)?;
    let second = if half_open {
        binomial_poly(n - k - 1, (n - k) as usize)
    } else {
        binomial_poly(n - k, (n - k) as usize)
    };
    Ok(binomial_poly(k - 1, (k - 1) as usize) * second - binomial_poly(n - 2, (n - 1) as usize))
}

/// Ehrhart polynomial of the half-open region `R̃_{l,n}`: `P_{l,n} - l binom(t+n-2, n-1)`.
pub fn ehr_r_halfopen(l: i64, n: i64) -> Result<Polynomial, FormulaError> {
    check("l", l, 1, n - 1)?;
    Ok(p_poly(l, n)? - binomial_poly(n - 2, (n - 1) as usize).scale(&scalar(l)))
}

/// Ehrhart polynomial of the second hypersimplex `Δ_{2,n}`.
pub fn ehr_hypersimplex(n: i64) -> Result<Polynomial, FormulaError> {
    check("n", n, 2, i64::MAX)?;
    Ok(two_t_binomial(n) - binomial_poly(n - 2, (n - 1) as usize).scale(&scalar(n)))
}

/// Ehrhart polynomial of the minimal matroid `T_{2,n}`.
pub fn ehr_minimal(n: i64) -> Result<Polynomial, FormulaError> {
    check("n", n, 3, i64::MAX)?;
    Ok(ehr_simplex(n) + binomial_poly(n - 2, (n - 1) as usize).scale(&scalar(n - 3)))
}

/// Ehrhart polynomial of the base polytope of `m`.
///
/// Connected matroids use `binom(2t+n-1, n-1) - sum_i P_{a_i,n}`; a matroid with
/// two hyperplanes is a product of two simplices.
pub fn ehr_matroid(m: &Rank2Matroid) -> Polynomial {
    let n = m.n() as i64;
    match m.parts() {
        &[a, b] => ehr_simplex(a as i64) * ehr_simplex(b as i64),
        parts => {
            let correction: Polynomial = parts
                .iter()
                .map(|&a| p_poly(a as i64, n).expect("parts never exceed n"))
                .sum();
            two_t_binomial(n) - correction
        }
    }
}

/// Coefficients of `p*_{a,n}(x) = sum_{k=1}^{a} sum_{j>=1} binom(k,j) binom(n-k-1, j-1) x^j`.
///
/// Index `j` holds the coefficient of `x^j`; entry 0 is always zero. The
/// binomial `binom(-1, j-1) = (-1)^{j-1}` arising at `k = n` is the
/// generalized one.
pub fn p_star(a: i64, n: i64) -> Result<Vec<BigInt>, FormulaError> {
    check("n", n, 1, i64::MAX)?;
    check("a", a, 0, n)?;
    let mut out = vec![BigInt::zero(); a as usize + 1];
    for k in 1..=a {
        for (j, slot) in out.iter_mut().enumerate().take(k as usize + 1).skip(1) {
            *slot += binomial(k, j) * binomial(n - k - 1, j - 1);
        }
    }
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    Ok(out)
}

/// h*-polynomial `h_0 + h_1 x + ... ` of a lattice polytope of dimension `ambient_dim`.
///
/// Trailing zeros are trimmed; the dimension is kept separately.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HStarVector {
    coeffs: Vec<BigInt>,
    ambient_dim: usize,
}

impl HStarVector {
    pub fn new(mut coeffs: Vec<BigInt>, ambient_dim: usize) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self {
            coeffs,
            ambient_dim,
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Degree of the trimmed polynomial; `None` only for the zero vector.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `h*(1)`, the normalized volume.
    pub fn sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// The h*-polynomial as a polynomial in `x`.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_bigints(&self.coeffs)
    }
}

fn even_binomials(n: i64) -> Vec<BigInt> {
    (0..=n / 2).map(|j| binomial(n, 2 * j as usize)).collect()
}

fn sub_into(acc: &mut Vec<BigInt>, other: &[BigInt]) {
    if acc.len() < other.len() {
        acc.resize(other.len(), BigInt::zero());
    }
    for (a, o) in acc.iter_mut().zip(other) {
        *a -= o;
    }
}

/// h*-polynomial of the base polytope of `m`, from the closed formula.
pub fn hstar_matroid(m: &Rank2Matroid) -> HStarVector {
    let n = m.n() as i64;
    match m.parts() {
        &[a, b] => {
            let (a, b) = (a as i64, b as i64);
            let coeffs = (0..a.min(b) as usize)
                .map(|j| binomial(a - 1, j) * binomial(b - 1, j))
                .collect();
            HStarVector::new(coeffs, m.dimension())
        }
        parts => {
            let mut acc = even_binomials(n);
            for &a in parts {
                sub_into(
                    &mut acc,
                    &p_star(a as i64, n).expect("parts never exceed n"),
                );
            }
            HStarVector::new(acc, m.dimension())
        }
    }
}

/// h*-polynomial of a connected sparse paving matroid on `n` elements with
/// `lambda` hyperplanes of size two.
pub fn hstar_sparse_paving(n: i64, lambda: i64) -> Result<HStarVector, FormulaError> {
    check("n", n, 3, i64::MAX)?;
    check("lambda", lambda, 0, (n / 2).min(n - 3))?;
    let mut acc = even_binomials(n);
    acc.resize(acc.len().max(3), BigInt::zero());
    acc[1] -= BigInt::from(n + lambda);
    acc[2] -= BigInt::from(lambda * (n - 3));
    Ok(HStarVector::new(acc, (n - 1) as usize))
}

/// Rewrites an Ehrhart polynomial of a `d`-dimensional polytope in the basis
/// `binom(t+d-j, d)`, i.e. `h_j = sum_{i<=j} (-1)^i binom(d+1, i) ehr(j - i)`.
pub fn ehr_to_hstar(p: &Polynomial, d: usize) -> Result<HStarVector, FormulaError> {
    if let Some(degree) = p.degree().filter(|&deg| deg > d) {
        return Err(FormulaError::DegreeTooLarge { degree, dim: d });
    }
    let values: Vec<Rational> = (0..=d as i64).map(|t| p.eval_int(t)).collect();
    let mut coeffs = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut h = Rational::zero();
        for i in 0..=j {
            let term = &values[j - i] * Rational::from_integer(binomial(d as i64 + 1, i));
            if i % 2 == 0 {
                h += term;
            } else {
                h -= term;
            }
        }
        if !h.is_integer() {
            return Err(FormulaError::NonIntegral { index: j, value: h });
        }
        coeffs.push(h.to_integer());
    }
    Ok(HStarVector::new(coeffs, d))
}

/// `sum_j h_j binom(t + d - j, d)`.
pub fn hstar_to_ehr(h: &HStarVector) -> Polynomial {
    let d = h.ambient_dim() as i64;
    h.coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            binomial_poly(d - j as i64, d as usize).scale(&Rational::from_integer(c.clone()))
        })
        .sum()
}

/// Both sides of `binom(t+r, r) binom(t+s, s) = sum_j binom(r,j) binom(s,j) binom(t+r+s-j, r+s)`.
pub fn suranyi_sides(r: usize, s: usize) -> (Polynomial, Polynomial) {
    let (ri, si) = (r as i64, s as i64);
    let lhs = binomial_poly(ri, r) * binomial_poly(si, s);
    let rhs = (0..=r.min(s))
        .map(|j| {
            let c = binomial(ri, j) * binomial(si, j);
            binomial_poly(ri + si - j as i64, r + s).scale(&Rational::from_integer(c))
        })
        .sum();
    (lhs, rhs)
}

/// Constant term equals one, as for every nonempty lattice polytope.
pub(crate) fn is_unit_constant(p: &Polynomial) -> bool {
    p.coeff(0).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::matroid::enumerate_partitions;

    fn m(p: &[usize]) -> Rank2Matroid {
        Rank2Matroid::from_partition(p).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn hv(v: &[i64], d: usize) -> HStarVector {
        HStarVector::new(ints(v), d)
    }

    #[test]
    fn p_poly_examples() {
        assert_eq!(p_poly(0, 7).unwrap(), Polynomial::zero());
        assert_eq!(p_poly(1, 4).unwrap(), binomial_poly(2, 3));
        assert_eq!(p_poly(4, 4).unwrap(), binomial_poly_affine(2, 3, 3));
        assert!(p_poly(5, 4).is_err());
        assert!(p_poly(-1, 4).is_err());
    }

    #[test]
    fn q_and_r_examples() {
        for n in 2..=8 {
            assert_eq!(ehr_q(1, n, true).unwrap(), Polynomial::zero());
            assert_eq!(
                ehr_q(1, n, false).unwrap(),
                binomial_poly(n - 2, (n - 2) as usize)
            );
            assert_eq!(ehr_r_halfopen(1, n).unwrap(), Polynomial::zero());
        }
        assert_eq!(
            ehr_q(2, 4, false).unwrap(),
            binomial_poly(3, 3) + binomial_poly(2, 3)
        );
        assert_eq!(
            ehr_r_halfopen(2, 4).unwrap(),
            p_poly(2, 4).unwrap() - binomial_poly(2, 3).scale(&rat(2, 1))
        );
        // frozen from a symbolic expansion: t/6 + t^2/2 + t^3/3
        assert_eq!(
            ehr_r_halfopen(2, 4).unwrap(),
            Polynomial::from_coeffs(vec![rat(0, 1), rat(1, 6), rat(1, 2), rat(1, 3)])
        );
        let summed: Polynomial = (1..=3).map(|k| ehr_q(k, 5, true).unwrap()).sum();
        assert_eq!(ehr_r_halfopen(3, 5).unwrap(), summed);
        assert!(ehr_q(0, 4, false).is_err());
        assert!(ehr_q(4, 4, false).is_err());
        assert!(ehr_r_halfopen(4, 4).is_err());
    }

    #[test]
    fn hypersimplex_and_minimal() {
        assert_eq!(ehr_hypersimplex(3).unwrap(), binomial_poly(2, 2));
        assert_eq!(ehr_hypersimplex(2).unwrap(), Polynomial::one());
        let h4 = ehr_hypersimplex(4).unwrap();
        let vals: Vec<_> = (0..4).map(|t| h4.eval_int(t)).collect();
        assert_eq!(vals, [rat(1, 1), rat(6, 1), rat(19, 1), rat(44, 1)]);
        assert_eq!(ehr_minimal(3).unwrap(), binomial_poly(2, 2));
        assert_eq!(ehr_minimal(4).unwrap().eval_int(1), rat(5, 1));
        assert_eq!(
            ehr_minimal(5).unwrap(),
            binomial_poly(4, 4) + binomial_poly(3, 4).scale(&rat(2, 1))
        );
        assert!(ehr_minimal(2).is_err());
        assert!(ehr_hypersimplex(1).is_err());
    }

    #[test]
    fn matroid_examples() {
        let u4 = ehr_matroid(&m(&[1, 1, 1, 1]));
        assert_eq!(u4, ehr_hypersimplex(4).unwrap());
        assert_eq!(u4.eval_int(1), rat(6, 1));
        let t4 = ehr_matroid(&m(&[2, 1, 1]));
        assert_eq!(t4, ehr_minimal(4).unwrap());
        assert_eq!(t4.to_strings(), ["1", "13/6", "3/2", "1/3"]);
        assert_eq!(ehr_matroid(&m(&[2, 2])), Polynomial::from_ints(&[1, 2, 1]));
        assert_eq!(ehr_matroid(&m(&[3, 1])), binomial_poly(2, 2));
    }

    #[test]
    fn degree_matches_dimension() {
        for n in 2..=9 {
            for mat in enumerate_partitions(n, 2) {
                assert_eq!(ehr_matroid(&mat).degree(), Some(mat.dimension()), "{mat}");
            }
        }
    }

    #[test]
    fn p_star_examples() {
        for n in 2..=9 {
            assert_eq!(p_star(1, n).unwrap(), ints(&[0, 1]));
            assert_eq!(p_star(0, n).unwrap(), ints(&[0]));
        }
        for n in 4..=9 {
            assert_eq!(p_star(2, n).unwrap(), ints(&[0, 3, n - 3]));
        }
        assert!(p_star(5, 4).is_err());
    }

    #[test]
    fn hstar_examples() {
        assert_eq!(hstar_matroid(&m(&[1, 1, 1])), hv(&[1], 2));
        assert_eq!(hstar_matroid(&m(&[2, 1, 1])), hv(&[1, 1], 3));
        assert_eq!(hstar_matroid(&m(&[1, 1, 1, 1])), hv(&[1, 2, 1], 3));
        assert_eq!(hstar_matroid(&m(&[2, 2])), hv(&[1, 1], 2));
        assert_eq!(hstar_matroid(&m(&[1, 1])), hv(&[1], 0));
        assert_eq!(hstar_sparse_paving(5, 0).unwrap(), hv(&[1, 5, 5], 4));
        assert_eq!(hstar_sparse_paving(5, 2).unwrap(), hv(&[1, 3, 1], 4));
        assert_eq!(hstar_sparse_paving(4, 1).unwrap(), hv(&[1, 1], 3));
        assert!(hstar_sparse_paving(4, 2).is_err());
        assert!(hstar_sparse_paving(2, 0).is_err());
        assert!(hstar_sparse_paving(7, 4).is_err());
    }

    #[test]
    fn basis_conversions() {
        let h = ehr_to_hstar(&ehr_hypersimplex(4).unwrap(), 3).unwrap();
        assert_eq!(h, hv(&[1, 2, 1], 3));
        assert_eq!(hstar_to_ehr(&hv(&[1], 2)), binomial_poly(2, 2));
        let p = ehr_minimal(5).unwrap();
        assert_eq!(hstar_to_ehr(&ehr_to_hstar(&p, 4).unwrap()), p);
        assert!(matches!(
            ehr_to_hstar(&p, 3),
            Err(FormulaError::DegreeTooLarge { degree: 4, dim: 3 })
        ));
        let half_t = Polynomial::linear(rat(1, 1), rat(1, 2));
        assert!(matches!(
            ehr_to_hstar(&half_t, 1),
            Err(FormulaError::NonIntegral { .. })
        ));
    }

    #[test]
    fn suranyi_examples() {
        let (l, r) = suranyi_sides(1, 0);
        assert_eq!((l.clone(), r), (Polynomial::from_ints(&[1, 1]), l));
        let (l, r) = suranyi_sides(1, 1);
        assert_eq!(l, Polynomial::from_ints(&[1, 2, 1]));
        assert_eq!(r, Polynomial::from_ints(&[1, 2, 1]));
        let (l, r) = suranyi_sides(3, 2);
        assert_eq!(l, r);
        assert_eq!(l.degree(), Some(5));
    }

    #[test]
    fn unit_constant_term() {
        for n in 2..=8 {
            for mat in enumerate_partitions(n, 2) {
                assert!(is_unit_constant(&ehr_matroid(&mat)));
            }
        }
    }
}
