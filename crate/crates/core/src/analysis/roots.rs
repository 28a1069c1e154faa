//! Exact real-root counting with Sturm chains, and root certificates for
//! h*-polynomials.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactmath::{sign_of, Polynomial, Rational};
use crate::formulas::HStarVector;

/// Open interval with optional finite endpoints; `None` is `-∞` (lower) or `+∞` (upper).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
}

impl Interval {
    pub fn real_line() -> Self {
        Self {
            lower: None,
            upper: None,
        }
    }

    /// `(-∞, 0)`.
    pub fn negative() -> Self {
        Self {
            lower: None,
            upper: Some(Rational::zero()),
        }
    }

    pub fn open(lower: Rational, upper: Rational) -> Self {
        Self {
            lower: Some(lower),
            upper: Some(upper),
        }
    }
}

/// Sturm chain `p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i)`, each member
/// rescaled by a positive constant to a primitive integer polynomial.
pub fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.primitive()];
    let d = p.derivative().primitive();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push((-r).primitive());
    }
    chain
}

fn sign_at_infinity(p: &Polynomial, positive: bool) -> i8 {
    let lc = p.leading_coeff().map(sign_of).unwrap_or(0);
    let odd = p.degree().unwrap_or(0) % 2 == 1;
    if positive || !odd {
        lc
    } else {
        -lc
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[Polynomial], x: Option<&Rational>, positive_inf: bool) -> usize {
    match x {
        Some(x) => variations(chain.iter().map(|q| q.sign_at(x))),
        None => variations(chain.iter().map(|q| sign_at_infinity(q, positive_inf))),
    }
}

/// Sturm chain of a square-free polynomial, ready for root counts.
struct SquareFreeChain {
    q: Polynomial,
    chain: Vec<Polynomial>,
}

impl SquareFreeChain {
    fn new(p: &Polynomial) -> Self {
        let q = p.square_free_part();
        let chain = if q.is_constant() {
            Vec::new()
        } else {
            sturm_chain(&q)
        };
        Self { q, chain }
    }

    fn count(&self, interval: &Interval) -> usize {
        if self.chain.is_empty() {
            return 0;
        }
        if let (Some(a), Some(b)) = (&interval.lower, &interval.upper) {
            if a >= b {
                return 0;
            }
        }
        let lo = variations_at(&self.chain, interval.lower.as_ref(), false);
        let hi = variations_at(&self.chain, interval.upper.as_ref(), true);
        // lo - hi counts roots in (a, b]; drop b itself for an open interval.
        let at_upper = interval
            .upper
            .as_ref()
            .is_some_and(|b| self.q.eval(b).is_zero());
        lo - hi - usize::from(at_upper)
    }
}

/// Number of distinct real roots of `p` in the open interval.
///
/// Panics if `p` is zero.
pub fn sturm_distinct_real_roots(p: &Polynomial, interval: &Interval) -> usize {
    assert!(!p.is_zero(), "the zero polynomial has no finite root count");
    // The square-free part has the same distinct roots and a clean chain.
    SquareFreeChain::new(p).count(interval)
}

/// Every root of `p` is real, counted with multiplicity.
///
/// Recurses on `p = q * gcd(p, p')` with `q` square-free: `p` is real-rooted
/// iff `q` has `deg q` distinct real roots and `gcd(p, p')` is real-rooted.
pub fn is_real_rooted(p: &Polynomial) -> bool {
    if p.is_constant() {
        return true;
    }
    let g = p.gcd(&p.derivative());
    let q = p.div_rem(&g).0;
    let deg = q.degree().unwrap_or(0);
    sturm_distinct_real_roots(&q, &Interval::real_line()) == deg && is_real_rooted(&g)
}

/// `h_0 <= ... <= h_k >= ... >= h_d` for some `k`.
pub fn is_unimodal(seq: &[BigInt]) -> bool {
    let mut descending = false;
    for w in seq.windows(2) {
        if w[1] > w[0] {
            if descending {
                return false;
            }
        } else if w[1] < w[0] {
            descending = true;
        }
    }
    true
}

/// `h_i^2 >= h_{i-1} h_{i+1}` for every interior index.
pub fn is_log_concave(seq: &[BigInt]) -> bool {
    seq.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCertificate {
    pub degree: usize,
    pub distinct_real_roots: usize,
    pub real_rooted: bool,
    pub all_roots_negative: bool,
    pub positive_coefficients: bool,
    pub unimodal: bool,
    pub log_concave: bool,
}

impl RootCertificate {
    /// For positive coefficients, real-rooted implies log-concave implies unimodal.
    pub fn implications_hold(&self) -> bool {
        if !self.positive_coefficients {
            return true;
        }
        (!self.real_rooted || self.log_concave) && (!self.log_concave || self.unimodal)
    }
}

/// Root certificate for an h*-polynomial.
///
/// Panics on the zero vector.
pub fn real_root_certificate(h: &HStarVector) -> RootCertificate {
    let p = h.to_polynomial();
    assert!(!p.is_zero(), "root certificate of the zero polynomial");
    let chain = SquareFreeChain::new(&p);
    let distinct = chain.count(&Interval::real_line());
    let negative = chain.count(&Interval::negative());
    let degree = p.degree().unwrap_or(0);
    // A square-free polynomial is real-rooted iff all its roots are distinct reals.
    let real_rooted = if chain.q.degree() == Some(degree) {
        distinct == degree
    } else {
        is_real_rooted(&p)
    };
    RootCertificate {
        degree,
        distinct_real_roots: distinct,
        real_rooted,
        all_roots_negative: negative == distinct,
        positive_coefficients: h.coeffs().iter().all(Signed::is_positive),
        unimodal: is_unimodal(h.coeffs()),
        log_concave: is_log_concave(h.coeffs()),
    }
}
