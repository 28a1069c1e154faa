//! Brute-force lattice-point counting over inequality descriptions.
//!
//! Nothing here uses the closed formulas: counts come from enumerating
//! integer points, and polynomials from interpolating those counts.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactmath::{Polynomial, Rational};
use crate::matroid::{BlockConstraint, HRepresentation, Rank2Matroid, Relation};

/// Size limits for enumeration; the cost grows like `(t+1)^dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    pub max_dim: usize,
    pub max_t: u64,
}

impl Guard {
    pub const DEFAULT: Guard = Guard {
        max_dim: 10,
        max_t: 8,
    };

    pub fn unlimited() -> Self {
        Guard {
            max_dim: usize::MAX,
            max_t: u64::MAX,
        }
    }

    fn check(&self, dim: usize, t: u64) -> Result<(), OracleError> {
        if dim > self.max_dim || t > self.max_t {
            return Err(OracleError::Guard {
                dim,
                t,
                max_dim: self.max_dim,
                max_t: self.max_t,
            });
        }
        Ok(())
    }
}

impl Default for Guard {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration in dimension {dim} at t = {t} exceeds the guard (dimension <= {max_dim}, t <= {max_t})")]
    Guard {
        dim: usize,
        t: u64,
        max_dim: usize,
        max_t: u64,
    },
    #[error("invalid region {0}")]
    InvalidRegion(String),
    #[error("interpolation needs {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("repeated interpolation node t = {0}")]
    DuplicateNode(u64),
    #[error("count {got} at t = {t} disagrees with the interpolant value {expected}")]
    Inconsistent {
        t: u64,
        expected: Rational,
        got: u64,
    },
}

/// Calls `f` on every lattice point of the polytope, in lexicographic order.
pub fn for_each_point(
    h: &HRepresentation,
    guard: Guard,
    mut f: impl FnMut(&[u64]),
) -> Result<(), OracleError> {
    guard.check(h.dim, h.t)?;
    let mut x = vec![0u64; h.dim];
    let mut block_sums = vec![0u64; h.constraints.len()];
    descend(h, 0, 0, &mut x, &mut block_sums, &mut f);
    Ok(())
}

fn descend(
    h: &HRepresentation,
    i: usize,
    sum: u64,
    x: &mut [u64],
    block_sums: &mut [u64],
    f: &mut impl FnMut(&[u64]),
) {
    let target = h.coordinate_sum();
    if i == h.dim {
        if sum == target && h.violated(x).is_empty() {
            f(x);
        }
        return;
    }
    let rest = (h.dim - i - 1) as u64 * h.t;
    let lo = target.saturating_sub(sum + rest);
    let hi = h.t.min(target - sum);
    for v in lo..=hi {
        x[i] = v;
        let mut feasible = true;
        for (c, s) in h.constraints.iter().zip(block_sums.iter_mut()) {
            if c.indices.contains(&i) {
                *s += v;
                feasible &= match c.relation {
                    Relation::AtMost => *s <= h.t,
                    Relation::Less => *s < h.t,
                    Relation::Greater => true,
                };
            }
        }
        if feasible {
            descend(h, i + 1, sum + v, x, block_sums, f);
        }
        for (c, s) in h.constraints.iter().zip(block_sums.iter_mut()) {
            if c.indices.contains(&i) {
                *s -= v;
            }
        }
    }
    x[i] = 0;
}

pub fn count_points(h: &HRepresentation, guard: Guard) -> Result<u64, OracleError> {
    let mut count = 0;
    for_each_point(h, guard, |_| count += 1)?;
    Ok(count)
}

/// `#(t P(M) ∩ Z^n)`.
pub fn count_lattice_points(m: &Rank2Matroid, t: u64, guard: Guard) -> Result<u64, OracleError> {
    count_points(&m.h_representation(t), guard)
}

/// Polytopes and half-open polytopes inside the second hypersimplex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    /// `Δ_{2,n}`.
    Hypersimplex { n: usize },
    /// `x_1+..+x_{k-1} <= 1`, `x_{k+1}+..+x_n <= 1`.
    Q { k: usize, n: usize },
    /// As `Q` with the second inequality strict.
    QHalfOpen { k: usize, n: usize },
    /// `x_1+..+x_l > 1`.
    RHalfOpen { l: usize, n: usize },
    /// `Δ_{1,m} × Δ_{1,n}`.
    SimplexProduct { m: usize, n: usize },
    /// `Δ_{1,n}`.
    Simplex { n: usize },
    /// `Δ_{1,n-1}` placed in `Δ_{2,n}` as the face `x_n = 1`.
    EmbeddedSimplex { n: usize },
}

fn block(indices: std::ops::Range<usize>, relation: Relation) -> BlockConstraint {
    BlockConstraint { indices, relation }
}

impl Region {
    pub fn validate(&self) -> Result<(), OracleError> {
        let ok = match *self {
            Region::Hypersimplex { n } | Region::EmbeddedSimplex { n } => n >= 2,
            Region::Q { k, n } | Region::QHalfOpen { k, n } => 1 <= k && k < n,
            Region::RHalfOpen { l, n } => 1 <= l && l < n,
            Region::SimplexProduct { m, n } => m >= 1 && n >= 1,
            Region::Simplex { n } => n >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(OracleError::InvalidRegion(self.to_string()))
        }
    }

    /// Upper bound on the dimension, used as the interpolation degree.
    pub fn degree_bound(&self) -> usize {
        match *self {
            Region::Hypersimplex { n }
            | Region::Q { n, .. }
            | Region::QHalfOpen { n, .. }
            | Region::RHalfOpen { n, .. }
            | Region::Simplex { n } => n - 1,
            Region::EmbeddedSimplex { n } => n - 2,
            Region::SimplexProduct { m, n } => m + n - 2,
        }
    }

    pub fn h_representation(&self, t: u64) -> Result<HRepresentation, OracleError> {
        self.validate()?;
        let (dim, rank, constraints) = match *self {
            Region::Hypersimplex { n } => (n, 2, vec![]),
            Region::Q { k, n } => (
                n,
                2,
                vec![
                    block(0..k - 1, Relation::AtMost),
                    block(k..n, Relation::AtMost),
                ],
            ),
            Region::QHalfOpen { k, n } => (
                n,
                2,
                vec![
                    block(0..k - 1, Relation::AtMost),
                    block(k..n, Relation::Less),
                ],
            ),
            Region::RHalfOpen { l, n } => (n, 2, vec![block(0..l, Relation::Greater)]),
            Region::SimplexProduct { m, n } => (
                m + n,
                2,
                vec![
                    block(0..m, Relation::AtMost),
                    block(m..m + n, Relation::AtMost),
                ],
            ),
            Region::Simplex { n } => (n, 1, vec![]),
            Region::EmbeddedSimplex { n } => (n, 2, vec![block(0..n - 1, Relation::AtMost)]),
        };
        Ok(HRepresentation {
            dim,
            t,
            rank,
            constraints,
        })
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Region::Hypersimplex { n } => write!(f, "hypersimplex(n={n})"),
            Region::Q { k, n } => write!(f, "Q(k={k}, n={n})"),
            Region::QHalfOpen { k, n } => write!(f, "Q_halfopen(k={k}, n={n})"),
            Region::RHalfOpen { l, n } => write!(f, "R_halfopen(l={l}, n={n})"),
            Region::SimplexProduct { m, n } => write!(f, "simplex_product(m={m}, n={n})"),
            Region::Simplex { n } => write!(f, "simplex(n={n})"),
            Region::EmbeddedSimplex { n } => write!(f, "embedded_simplex(n={n})"),
        }
    }
}

pub fn count_region(region: Region, t: u64, guard: Guard) -> Result<u64, OracleError> {
    count_points(&region.h_representation(t)?, guard)
}

/// Exact Lagrange interpolation through the first `degree_bound + 1` points;
/// any further points must lie on the result.
pub fn interpolate_ehrhart(
    values: &[(u64, u64)],
    degree_bound: usize,
) -> Result<Polynomial, OracleError> {
    let needed = degree_bound + 1;
    if values.len() < needed {
        return Err(OracleError::TooFewPoints {
            needed,
            got: values.len(),
        });
    }
    let mut seen: Vec<u64> = values.iter().map(|&(t, _)| t).collect();
    seen.sort_unstable();
    if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
        return Err(OracleError::DuplicateNode(w[0]));
    }

    let (nodes, extra) = values.split_at(needed);
    let mut result = Polynomial::zero();
    for (j, &(tj, yj)) in nodes.iter().enumerate() {
        let mut basis = Polynomial::constant(Rational::from_integer(BigInt::from(yj)));
        for (m, &(tm, _)) in nodes.iter().enumerate() {
            if m != j {
                let denom = Rational::from_integer(BigInt::from(tj) - BigInt::from(tm));
                let factor = Polynomial::linear(
                    -Rational::from_integer(BigInt::from(tm)),
                    Rational::from_integer(1.into()),
                );
                basis = (&basis * &factor).scale(&denom.recip());
            }
        }
        result += &basis;
    }

    for &(t, y) in extra {
        let expected = result.eval_int(t as i64);
        if expected != Rational::from_integer(BigInt::from(y)) {
            return Err(OracleError::Inconsistent {
                t,
                expected,
                got: y,
            });
        }
    }
    Ok(result)
}

/// Interpolates from counts at `t = 0..=degree_bound + 1`, the last one a consistency check.
pub fn interpolate_counts(
    degree_bound: usize,
    mut count: impl FnMut(u64) -> Result<u64, OracleError>,
) -> Result<Polynomial, OracleError> {
    let values = (0..=degree_bound as u64 + 1)
        .map(|t| count(t).map(|c| (t, c)))
        .collect::<Result<Vec<_>, _>>()?;
    interpolate_ehrhart(&values, degree_bound)
}

/// Ehrhart polynomial of `P(M)` recovered from brute-force counts.
pub fn oracle_ehrhart(m: &Rank2Matroid, guard: Guard) -> Result<Polynomial, OracleError> {
    interpolate_counts(m.dimension(), |t| count_lattice_points(m, t, guard))
}

pub fn oracle_region_ehrhart(region: Region, guard: Guard) -> Result<Polynomial, OracleError> {
    interpolate_counts(region.degree_bound(), |t| count_region(region, t, guard))
}

/// Lattice points of `t Δ_{2,n}` outside `t P(M)`, classified by how many
/// block inequalities they violate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationAudit {
    pub partition: Vec<usize>,
    pub t: u64,
    pub hypersimplex_points: u64,
    pub inside: u64,
    pub outside: u64,
    /// Outside points violating zero or several inequalities, with the count.
    pub failures: Vec<(Vec<u64>, usize)>,
}

impl SeparationAudit {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn separation_audit(
    m: &Rank2Matroid,
    t: u64,
    guard: Guard,
) -> Result<SeparationAudit, OracleError> {
    let polytope = m.h_representation(t);
    let hypersimplex = Region::Hypersimplex { n: m.n() }.h_representation(t)?;
    let mut audit = SeparationAudit {
        partition: m.parts().to_vec(),
        t,
        hypersimplex_points: 0,
        inside: 0,
        outside: 0,
        failures: Vec::new(),
    };
    for_each_point(&hypersimplex, guard, |x| {
        audit.hypersimplex_points += 1;
        match polytope.violated(x).len() {
            0 => audit.inside += 1,
            1 => audit.outside += 1,
            k => {
                audit.outside += 1;
                audit.failures.push((x.to_vec(), k));
            }
        }
    })?;
    Ok(audit)
}
