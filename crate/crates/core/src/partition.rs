//! Integer partitions and the dominance order.
//!
//! Partitions label nilpotent adjoint orbits of the classical complex Lie
//! algebras; the classical family fixes which partitions occur (size and
//! parity-multiplicity constraints) and dominance encodes orbit-closure
//! containment. Partitions are kept in canonical nonincreasing order so that
//! equality is structural.

use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

/// Classical series of a simple Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `sl(n)`: every partition of `n` occurs.
    A,
    /// `so(2n+1)`: even parts occur with even multiplicity.
    B,
    /// `sp(2n)`: odd parts occur with even multiplicity.
    C,
    /// `so(2n)`: even parts occur with even multiplicity; partitions with all
    /// parts even label two orbits each.
    D,
}

/// A classical type: family together with its rank parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassicalType {
    pub family: Family,
    pub rank: usize,
}

impl ClassicalType {
    pub fn new(family: Family, rank: usize) -> Self {
        Self { family, rank }
    }

    /// Size of the natural matrix representation: `n`, `2n+1`, `2n`, `2n`.
    pub fn ambient_size(self) -> usize {
        match self.family {
            Family::A => self.rank,
            Family::B => 2 * self.rank + 1,
            Family::C | Family::D => 2 * self.rank,
        }
    }
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionError {
    /// Parts must be positive.
    ZeroPart,
    /// Dominance is only defined between partitions of the same total.
    UnequalSize,
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::ZeroPart => write!(f, "partition parts must be positive"),
            PartitionError::UnequalSize => {
                write!(f, "dominance requires partitions of the same total")
            }
        }
    }
}

impl core::error::Error for PartitionError {}

/// A partition: nonincreasing sequence of positive integers.
///
/// The empty partition (of 0) is legal; it is the identity for
/// [`Partition::termwise_sum`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order; rejects zero parts.
    pub fn new<I: IntoIterator<Item = usize>>(parts: I) -> Result<Self, PartitionError> {
        let mut parts: Vec<usize> = parts.into_iter().collect();
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The total being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `k`-th part (0-indexed), zero beyond the end.
    pub fn part(&self, k: usize) -> usize {
        self.parts.get(k).copied().unwrap_or(0)
    }

    /// Dominance order: every prefix sum of `self` is at least the matching
    /// prefix sum of `other` (zero-padded). Encodes that the orbit labelled
    /// by `other` lies in the closure of the one labelled by `self`.
    pub fn dominates(&self, other: &Partition) -> Result<bool, PartitionError> {
        if self.n() != other.n() {
            return Err(PartitionError::UnequalSize);
        }
        let mut a = 0usize;
        let mut b = 0usize;
        for k in 0..self.len().max(other.len()) {
            a += self.part(k);
            b += other.part(k);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Subsequences of even and odd parts, in order: `(evens, odds)`.
    pub fn parity_split(&self) -> (Partition, Partition) {
        let evens = self.parts.iter().copied().filter(|p| p % 2 == 0).collect();
        let odds = self.parts.iter().copied().filter(|p| p % 2 == 1).collect();
        (Partition { parts: evens }, Partition { parts: odds })
    }

    /// Term-by-term sum with zero padding. The result is nonincreasing since
    /// both inputs are.
    pub fn termwise_sum(a: &Partition, b: &Partition) -> Partition {
        let len = a.len().max(b.len());
        let parts = (0..len).map(|k| a.part(k) + b.part(k)).collect();
        Partition { parts }
    }

    /// Conjugate partition (transpose of the Young diagram).
    pub fn transpose(&self) -> Partition {
        let mut parts = Vec::new();
        let mut k = 1;
        loop {
            let count = self.parts.iter().filter(|&&p| p >= k).count();
            if count == 0 {
                break;
            }
            parts.push(count);
            k += 1;
        }
        Partition { parts }
    }

    /// Does this partition label a nilpotent orbit of the given type?
    pub fn is_admissible(&self, ty: ClassicalType) -> bool {
        if self.n() != ty.ambient_size() {
            return false;
        }
        match ty.family {
            Family::A => true,
            Family::B | Family::D => self.parity_has_even_multiplicity(0),
            Family::C => self.parity_has_even_multiplicity(1),
        }
    }

    /// Every part of the given parity occurs an even number of times.
    fn parity_has_even_multiplicity(&self, parity: usize) -> bool {
        let mut i = 0;
        while i < self.parts.len() {
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == self.parts[i] {
                j += 1;
            }
            if self.parts[i] % 2 == parity && (j - i) % 2 != 0 {
                return false;
            }
            i = j;
        }
        true
    }

    /// All parts even. In type D such a partition labels two distinct orbits;
    /// the two are not distinguished further here.
    pub fn is_very_even(&self) -> bool {
        !self.parts.is_empty() && self.parts.iter().all(|p| p % 2 == 0)
    }

    /// All parts share one parity (the labelled orbit is even).
    pub fn has_uniform_parity(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] % 2 == w[1] % 2)
    }

    /// Number of real forms of the labelled complex nilpotent orbit inside
    /// `sl(n,R)`: two when all parts are even, one otherwise.
    pub fn sl_real_form_count(&self) -> u8 {
        if self.is_very_even() {
            2
        } else {
            1
        }
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, in descending lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
            return;
        }
        let mut part = max.min(remaining);
        while part >= 1 {
            stack.push(part);
            rec(remaining - part, part, stack, out);
            stack.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    rec(n, n, &mut stack, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    #[test]
    fn constructor_sorts_and_rejects_zero() {
        assert_eq!(p(&[1, 3, 2]).parts(), &[3, 2, 1]);
        assert_eq!(Partition::new([2, 0, 1]), Err(PartitionError::ZeroPart));
        assert!(Partition::empty().is_empty());
        assert_eq!(Partition::empty().n(), 0);
    }

    #[test]
    fn admissibility_per_family() {
        let a4 = ClassicalType::new(Family::A, 4);
        assert!(p(&[3, 1]).is_admissible(a4));
        assert!(!p(&[3, 1, 1]).is_admissible(a4));

        // type C requires even total and even multiplicity of odd parts
        let c3 = ClassicalType::new(Family::C, 3);
        assert!(p(&[2, 2, 1, 1]).is_admissible(c3));
        assert!(!p(&[2, 1]).is_admissible(ClassicalType::new(Family::C, 1)));
        assert!(!p(&[3, 2, 1]).is_admissible(c3));

        // type B: odd total, even parts with even multiplicity
        let b2 = ClassicalType::new(Family::B, 2);
        assert!(p(&[2, 2, 1]).is_admissible(b2));
        assert!(p(&[3, 1, 1]).is_admissible(b2));
        assert!(!p(&[2, 1, 1, 1]).is_admissible(b2));

        // type D with the very-even flag
        let d2 = ClassicalType::new(Family::D, 2);
        assert!(p(&[2, 2]).is_admissible(d2));
        assert!(p(&[2, 2]).is_very_even());
        assert!(!p(&[3, 1]).is_very_even());
        assert!(p(&[3, 1]).is_admissible(d2));
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(p(&[3, 2]).dominates(&p(&[2, 2, 1])), Ok(true));
        assert_eq!(p(&[2, 2, 1]).dominates(&p(&[3, 2])), Ok(false));
        assert_eq!(p(&[3, 1, 1]).dominates(&p(&[2, 2, 1])), Ok(true));
        let d = p(&[4, 2, 1]);
        assert_eq!(d.dominates(&d), Ok(true));
        assert_eq!(
            p(&[3, 1]).dominates(&p(&[3])),
            Err(PartitionError::UnequalSize)
        );
    }

    #[test]
    fn incomparable_pair() {
        // smallest incomparable pair in the dominance order
        let a = p(&[3, 1, 1, 1]);
        let b = p(&[2, 2, 2]);
        assert_eq!(a.dominates(&b), Ok(false));
        assert_eq!(b.dominates(&a), Ok(false));
    }

    #[test]
    fn parity_split_examples() {
        let (e, o) = p(&[8, 7, 6, 4, 4, 3, 2, 1]).parity_split();
        assert_eq!(e.parts(), &[8, 6, 4, 4, 2]);
        assert_eq!(o.parts(), &[7, 3, 1]);

        let (e, o) = p(&[5]).parity_split();
        assert!(e.is_empty());
        assert_eq!(o.parts(), &[5]);

        let (e, o) = p(&[2, 2]).parity_split();
        assert_eq!(e.parts(), &[2, 2]);
        assert!(o.is_empty());
    }

    #[test]
    fn termwise_sum_examples() {
        let s = Partition::termwise_sum(&p(&[8, 6, 4, 4, 2]), &p(&[7, 3, 1]));
        assert_eq!(s.parts(), &[15, 9, 5, 4, 2]);

        let q = p(&[4, 2]);
        assert_eq!(Partition::termwise_sum(&q, &Partition::empty()), q);

        let s = Partition::termwise_sum(&p(&[2, 2]), &p(&[1]));
        assert_eq!(s.parts(), &[3, 2]);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[3, 1]).transpose().parts(), &[2, 1, 1]);
        assert_eq!(p(&[1, 1, 1]).transpose().parts(), &[3]);

        // brute-force box count oracle for the transpose of (15,9,5,4,2)
        let q = p(&[15, 9, 5, 4, 2]);
        let t = q.transpose();
        assert_eq!(t.len(), 15);
        let mut boxes = 0usize;
        for k in 1..=15 {
            boxes += q.parts().iter().filter(|&&x| x >= k).count();
        }
        assert_eq!(boxes, 35);
        assert_eq!(t.n(), 35);
        assert_eq!(t.transpose(), q);
    }

    #[test]
    fn parity_split_merge_roundtrip_small() {
        for n in 0..=12 {
            for q in enumerate_partitions(n) {
                let (e, o) = q.parity_split();
                let merged =
                    Partition::new(e.parts().iter().chain(o.parts().iter()).copied()).unwrap();
                assert_eq!(merged, q);
                assert_eq!(Partition::termwise_sum(&e, &o).n(), q.n());
            }
        }
    }

    #[test]
    fn transpose_reverses_dominance() {
        for n in 1..=8 {
            let all = enumerate_partitions(n);
            for a in &all {
                assert_eq!(a.transpose().transpose(), *a);
                for b in &all {
                    let fwd = a.dominates(b).unwrap();
                    let rev = b.transpose().dominates(&a.transpose()).unwrap();
                    assert_eq!(fwd, rev, "a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(enumerate_partitions(5).len(), 7);
        let sixes = enumerate_partitions(6);
        // descending lexicographic order
        for w in sixes.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn real_form_counts() {
        assert_eq!(p(&[2]).sl_real_form_count(), 2);
        assert_eq!(p(&[2, 2]).sl_real_form_count(), 2);
        assert_eq!(p(&[3, 2]).sl_real_form_count(), 1);
        assert_eq!(p(&[1, 1]).sl_real_form_count(), 1);
    }

    #[test]
    fn serde_is_a_bare_array() {
        extern crate std;
        let q = p(&[8, 7, 6, 4, 4, 3, 2, 1]);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, "[8,7,6,4,4,3,2,1]");
        let back: Partition = serde_json::from_str("[1,3,2]").unwrap();
        assert_eq!(back.parts(), &[3, 2, 1]);
        assert!(serde_json::from_str::<Partition>("[1,0]").is_err());
    }
}
