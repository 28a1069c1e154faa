//! Exact Ehrhart theory for base polytopes of rank-2 matroids.
//!
//! A loopless rank-2 matroid is determined by the sizes of its parallel
//! classes ([`matroid::Rank2Matroid`]). [`formulas`] gives closed forms for
//! the Ehrhart and h*-polynomials of its base polytope, [`analysis`]
//! certifies positivity, coefficientwise bounds and real-rootedness, and
//! [`oracle`] recomputes everything by brute-force lattice-point counting.

pub mod analysis;
pub mod exactmath;
pub mod formulas;
pub mod matroid;
pub mod oracle;

pub use exactmath::{Polynomial, Rational};
pub use matroid::Rank2Matroid;
