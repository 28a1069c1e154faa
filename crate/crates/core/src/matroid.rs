//! Loopless rank-2 matroids, modelled by the sizes of their hyperplanes.
//!
//! In a loopless rank-2 matroid the hyperplanes are the parallel classes and
//! partition the ground set, so the multiset of their sizes determines the
//! matroid up to isomorphism. Elements are labelled so that hyperplanes occupy
//! consecutive index blocks in order of decreasing size.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("a hyperplane partition needs at least one part")]
    Empty,
    #[error("a single hyperplane of size {0} gives a rank-1 matroid")]
    SinglePart(usize),
    #[error("hyperplane sizes must be positive")]
    ZeroPart,
    #[error("the minimal matroid T(2,n) needs n >= 3, got n = {0}")]
    MinimalTooSmall(usize),
    #[error("malformed partition {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank2Matroid {
    parts: Vec<usize>,
}

impl Rank2Matroid {
    /// Builds the matroid with the given hyperplane sizes, in any order.
    pub fn from_partition(sizes: &[usize]) -> Result<Self, MatroidError> {
        match sizes {
            [] => return Err(MatroidError::Empty),
            _ if sizes.contains(&0) => return Err(MatroidError::ZeroPart),
            [single] => return Err(MatroidError::SinglePart(*single)),
            _ => {}
        }
        let mut parts = sizes.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    /// `U_{2,n}`: every element is its own hyperplane.
    pub fn uniform(n: usize) -> Result<Self, MatroidError> {
        Self::from_partition(&vec![1; n])
    }

    /// `T_{2,n}`: hyperplanes of sizes `n-2, 1, 1`.
    pub fn minimal(n: usize) -> Result<Self, MatroidError> {
        if n < 3 {
            return Err(MatroidError::MinimalTooSmall(n));
        }
        Self::from_partition(&[n - 2, 1, 1])
    }

    /// Hyperplane sizes, sorted descending.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Ground-set size.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of hyperplanes.
    pub fn s(&self) -> usize {
        self.parts.len()
    }

    /// Connected iff there are at least three hyperplanes; otherwise the
    /// matroid is a direct sum of two rank-1 uniform matroids.
    pub fn is_connected(&self) -> bool {
        self.s() >= 3
    }

    /// Dimension of the base polytope.
    pub fn dimension(&self) -> usize {
        if self.is_connected() {
            self.n() - 1
        } else {
            self.n() - 2
        }
    }

    /// Index blocks of the hyperplanes under the canonical labelling (0-based).
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&a| {
                let r = start..start + a;
                start += a;
                r
            })
            .collect()
    }

    pub fn classify(&self) -> Classification {
        let n = self.n();
        Classification {
            connected: self.is_connected(),
            uniform: self.parts.iter().all(|&a| a == 1),
            minimal: n >= 3 && self.parts == [n - 2, 1, 1],
            sparse_paving: self.parts.iter().all(|&a| a <= 2),
            lambda: self.parts.iter().filter(|&&a| a == 2).count(),
        }
    }

    /// Inequality description of the `t`-th dilate of the base polytope.
    pub fn h_representation(&self, t: u64) -> HRepresentation {
        HRepresentation {
            dim: self.n(),
            t,
            rank: 2,
            constraints: self
                .blocks()
                .into_iter()
                .map(|indices| BlockConstraint {
                    indices,
                    relation: Relation::AtMost,
                })
                .collect(),
        }
    }
}

impl fmt::Display for Rank2Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Rank2Matroid {
    type Err = MatroidError;

    /// Parses comma-separated hyperplane sizes such as `"2,1,1"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let sizes = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| MatroidError::Parse {
                        input: s.to_string(),
                        reason: format!("{:?}: {e}", tok.trim()),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_partition(&sizes)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub connected: bool,
    /// All hyperplanes are singletons.
    pub uniform: bool,
    /// Hyperplane sizes are `n-2, 1, 1`.
    pub minimal: bool,
    /// All hyperplanes have size at most two.
    pub sparse_paving: bool,
    /// Number of hyperplanes of size two.
    pub lambda: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    AtMost,
    Less,
    Greater,
}

impl Relation {
    fn symbol(self) -> &'static str {
        match self {
            Relation::AtMost => "<=",
            Relation::Less => "<",
            Relation::Greater => ">",
        }
    }

    pub fn holds(self, lhs: u64, rhs: u64) -> bool {
        match self {
            Relation::AtMost => lhs <= rhs,
            Relation::Less => lhs < rhs,
            Relation::Greater => lhs > rhs,
        }
    }
}

/// `sum_{i in indices} x_i  (relation)  t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockConstraint {
    pub indices: Range<usize>,
    pub relation: Relation,
}

/// `{ x in [0,t]^dim : sum x = rank*t, block constraints }`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HRepresentation {
    pub dim: usize,
    pub t: u64,
    /// 2 for matroid polytopes, 1 for simplices.
    pub rank: u64,
    pub constraints: Vec<BlockConstraint>,
}

impl HRepresentation {
    pub fn coordinate_sum(&self) -> u64 {
        self.rank * self.t
    }

    /// Indices of the block constraints `x` violates.
    pub fn violated(&self, x: &[u64]) -> Vec<usize> {
        self.constraints
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.relation.holds(x[c.indices.clone()].iter().sum(), self.t))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        x.len() == self.dim
            && x.iter().all(|&v| v <= self.t)
            && x.iter().sum::<u64>() == self.coordinate_sum()
            && self.violated(x).is_empty()
    }
}

impl fmt::Display for HRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x in [0,{}]^{}, sum x = {}",
            self.t,
            self.dim,
            self.coordinate_sum()
        )?;
        for c in &self.constraints {
            let terms: Vec<String> = c.indices.clone().map(|i| format!("x{}", i + 1)).collect();
            let lhs = if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join("+")
            };
            write!(f, ", {lhs} {} {}", c.relation.symbol(), self.t)?;
        }
        Ok(())
    }
}

/// All rank-2 matroids on `n` elements with at least `min_parts` hyperplanes,
/// in descending lexicographic order of their partitions.
///
/// Panics if `min_parts < 2`.
pub fn enumerate_partitions(n: usize, min_parts: usize) -> Vec<Rank2Matroid> {
    assert!(
        min_parts >= 2,
        "rank-2 matroids have at least two hyperplanes"
    );
    fn rec(
        remaining: usize,
        max: usize,
        min_parts: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            if cur.len() >= min_parts {
                out.push(cur.clone());
            }
            return;
        }
        if cur.len() + remaining < min_parts {
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            cur.push(part);
            rec(remaining - part, part, min_parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, min_parts, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|parts| Rank2Matroid { parts })
        .collect()
}

/// Connected sparse paving matroids on `n` elements, ordered by `lambda`.
pub fn sparse_paving_partitions(n: usize) -> Vec<Rank2Matroid> {
    (0..=n / 2)
        .filter(|&lambda| n - lambda >= 3)
        .map(|lambda| {
            let mut parts = vec![2; lambda];
            parts.extend(std::iter::repeat_n(1, n - 2 * lambda));
            Rank2Matroid { parts }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: &[usize]) -> Rank2Matroid {
        Rank2Matroid::from_partition(p).unwrap()
    }

    #[test]
    fn construction() {
        let u = m(&[1, 1, 1, 1]);
        assert_eq!((u.n(), u.s()), (4, 4));
        let t = m(&[1, 2, 1]);
        assert_eq!(t.parts(), [2, 1, 1]);
        assert_eq!((t.n(), t.s()), (4, 3));
        assert_eq!(
            Rank2Matroid::from_partition(&[3]),
            Err(MatroidError::SinglePart(3))
        );
        assert_eq!(Rank2Matroid::from_partition(&[]), Err(MatroidError::Empty));
        assert_eq!(
            Rank2Matroid::from_partition(&[2, 0, 1]),
            Err(MatroidError::ZeroPart)
        );
        assert_eq!(Rank2Matroid::from_partition(t.parts()).unwrap(), t);
    }

    #[test]
    fn parsing() {
        assert_eq!("1, 2,1".parse::<Rank2Matroid>().unwrap(), m(&[2, 1, 1]));
        assert!("2,x".parse::<Rank2Matroid>().is_err());
        assert!("2,-1".parse::<Rank2Matroid>().is_err());
        assert!("".parse::<Rank2Matroid>().is_err());
        assert_eq!(m(&[1, 3, 1]).to_string(), "3,1,1");
    }

    #[test]
    fn classification() {
        let c = m(&[1; 5]).classify();
        assert!(c.uniform && c.sparse_paving && c.connected);
        assert_eq!(c.lambda, 0);
        let c = m(&[2, 2, 1]).classify();
        assert!(c.sparse_paving && !c.minimal && c.connected);
        assert_eq!(c.lambda, 2);
        let c = m(&[3, 1, 1]).classify();
        assert!(c.minimal && !c.sparse_paving);
        let c = m(&[2, 1, 1]).classify();
        assert!(c.minimal && c.sparse_paving);
        assert!(!m(&[2, 2]).classify().connected);
    }

    #[test]
    fn h_representation_text() {
        assert_eq!(
            m(&[2, 1, 1]).h_representation(1).to_string(),
            "x in [0,1]^4, sum x = 2, x1+x2 <= 1, x3 <= 1, x4 <= 1"
        );
        let h = m(&[2, 2]).h_representation(1);
        assert!(h.contains(&[1, 0, 0, 1]));
        assert!(!h.contains(&[1, 1, 0, 0]));
        assert_eq!(h.violated(&[1, 1, 0, 0]), [0]);
    }

    #[test]
    fn enumeration_order() {
        let show = |n, k| -> Vec<Vec<usize>> {
            enumerate_partitions(n, k)
                .iter()
                .map(|m| m.parts().to_vec())
                .collect()
        };
        assert_eq!(show(4, 3), [vec![2, 1, 1], vec![1, 1, 1, 1]]);
        assert_eq!(
            show(5, 3),
            [
                vec![3, 1, 1],
                vec![2, 2, 1],
                vec![2, 1, 1, 1],
                vec![1, 1, 1, 1, 1]
            ]
        );
        assert_eq!(show(2, 2), [vec![1, 1]]);
        // p(12) = 77, minus the single-part partition
        assert_eq!(enumerate_partitions(12, 2).len(), 76);
    }

    #[test]
    fn sweep_invariants() {
        for n in 3..=12 {
            let all = enumerate_partitions(n, 3);
            for mat in &all {
                assert!(mat.classify().connected);
                let mut covered = vec![0; n];
                for b in mat.blocks() {
                    b.for_each(|i| covered[i] += 1);
                }
                assert!(covered.iter().all(|&c| c == 1));
            }
            assert_eq!(all.iter().filter(|m| m.classify().uniform).count(), 1);
            assert_eq!(all.iter().filter(|m| m.classify().minimal).count(), 1);
        }
    }

    #[test]
    fn sparse_paving_family() {
        let sp: Vec<_> = sparse_paving_partitions(5)
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(sp, ["1,1,1,1,1", "2,1,1,1", "2,2,1"]);
        for n in 3..=20 {
            let expected: Vec<_> = enumerate_partitions(n, 3)
                .into_iter()
                .filter(|m| m.classify().sparse_paving)
                .collect();
            let mut got = sparse_paving_partitions(n);
            got.sort();
            let mut exp = expected;
            exp.sort();
            assert_eq!(got, exp);
        }
    }
}
