//! Coefficientwise inequalities, Ehrhart positivity and root locations.

mod lemmas;
mod roots;

pub use lemmas::{
    bounds_lemma_value, theta_grid, trig_identity_residual, y_grid, LemmaError, LEMMA_TOLERANCE,
    THETA_MAX, TRIG_PRECISION,
};
pub use roots::{
    is_log_concave, is_real_rooted, is_unimodal, real_root_certificate, sturm_chain,
    sturm_distinct_real_roots, Interval, RootCertificate,
};

use num_traits::Signed;
use thiserror::Error;

use crate::exactmath::{coeff_compare, CoeffOrder, Comparison, Polynomial, Rational};
use crate::formulas::{ehr_hypersimplex, ehr_matroid, ehr_minimal, p_poly, FormulaError};
use crate::matroid::Rank2Matroid;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("a = {a}, b = {b} must be nonnegative with a + b <= n = {n}")]
    Superadditivity { a: i64, b: i64, n: i64 },
    #[error("stepping inequality needs 1 <= a <= b and a + b <= n, got a = {a}, b = {b}, n = {n}")]
    Stepping { a: i64, b: i64, n: i64 },
    #[error("bounds are stated for connected matroids; {0} has two hyperplanes")]
    Disconnected(String),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

/// Compares `P_{a,n} + P_{b,n}` against `P_{a+b,n}`.
///
/// The order always holds. It is strict on positive degree for `0 < a, b`
/// with `a + b < n`; at `a + b = n` the `t^{n-1}` coefficients agree.
pub fn superadditivity_check(a: i64, b: i64, n: i64) -> Result<Comparison, AnalysisError> {
    if a < 0 || b < 0 || a + b > n {
        return Err(AnalysisError::Superadditivity { a, b, n });
    }
    let lhs = p_poly(a, n)? + p_poly(b, n)?;
    Ok(coeff_compare(&lhs, &p_poly(a + b, n)?))
}

/// Compares `P_{a,n} + P_{b,n}` against `P_{a-1,n} + P_{b+1,n}`, the single
/// step that superadditivity iterates.
pub fn stepping_check(a: i64, b: i64, n: i64) -> Result<Comparison, AnalysisError> {
    if a < 1 || a > b || a + b > n {
        return Err(AnalysisError::Stepping { a, b, n });
    }
    let lhs = p_poly(a, n)? + p_poly(b, n)?;
    let rhs = p_poly(a - 1, n)? + p_poly(b + 1, n)?;
    Ok(coeff_compare(&lhs, &rhs))
}

/// `ehr(T_{2,n}) ⪯ ehr(M) ⪯ ehr(U_{2,n})` for a connected matroid `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub partition: Vec<usize>,
    pub lower: CoeffOrder,
    pub upper: CoeffOrder,
    pub minimal: bool,
    pub uniform: bool,
    /// First offending `(degree, coefficient)` of a failed comparison.
    pub witness: Option<(usize, Rational)>,
}

impl BoundsReport {
    pub fn lower_ok(&self) -> bool {
        self.lower.is_leq()
    }

    pub fn upper_ok(&self) -> bool {
        self.upper.is_leq()
    }

    pub fn lower_strict(&self) -> bool {
        self.lower == CoeffOrder::StrictOnPositiveDegree
    }

    pub fn upper_strict(&self) -> bool {
        self.upper == CoeffOrder::StrictOnPositiveDegree
    }

    /// Both bounds hold; each is strict on positive degree unless `M` is the
    /// corresponding extremal matroid, in which case it is an equality.
    pub fn passes(&self) -> bool {
        let expect = |endpoint: bool, order: CoeffOrder| {
            if endpoint {
                order == CoeffOrder::Equal
            } else {
                order == CoeffOrder::StrictOnPositiveDegree
            }
        };
        expect(self.minimal, self.lower) && expect(self.uniform, self.upper)
    }
}

pub fn bounds_check(m: &Rank2Matroid) -> Result<BoundsReport, AnalysisError> {
    if !m.is_connected() {
        return Err(AnalysisError::Disconnected(m.to_string()));
    }
    let n = m.n() as i64;
    let ehr = ehr_matroid(m);
    let lower = coeff_compare(&ehr_minimal(n)?, &ehr);
    let upper = coeff_compare(&ehr, &ehr_hypersimplex(n)?);
    let class = m.classify();
    let witness = lower.witness.clone().or_else(|| upper.witness.clone());
    Ok(BoundsReport {
        partition: m.parts().to_vec(),
        lower: lower.order,
        upper: upper.order,
        minimal: class.minimal,
        uniform: class.uniform,
        witness: if lower.order.is_leq() && upper.order.is_leq() {
            None
        } else {
            witness
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positivity {
    /// Every coefficient up to the degree is positive.
    pub positive: bool,
    /// First negative `(degree, coefficient)`, or failing that the first zero one.
    pub witness: Option<(usize, Rational)>,
    /// Constant term is exactly one.
    pub unit_constant: bool,
}

pub fn positivity_check(p: &Polynomial) -> Positivity {
    let first = |pred: fn(&Rational) -> bool| {
        p.coeffs()
            .iter()
            .enumerate()
            .find(|(_, c)| pred(c))
            .map(|(i, c)| (i, c.clone()))
    };
    let witness = first(|c| c.is_negative()).or_else(|| first(|c| !c.is_positive()));
    Positivity {
        positive: !p.is_zero() && witness.is_none(),
        witness,
        unit_constant: crate::formulas::is_unit_constant(p),
    }
}
