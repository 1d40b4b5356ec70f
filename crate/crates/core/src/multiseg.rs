//! Multisegments and elementary operations.

use std::collections::BTreeMap;
use std::fmt;

use crate::context::{Family, Side};
use crate::error::{Error, Result};
use crate::segment::Segment;

/// A multiset of same-side segments kept in canonical order.
///
/// The empty multisegment has no side and acts as the unit on both sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Multisegment {
    segments: Vec<Segment>,
}

/// One elementary operation: the indices (into the source's canonical order)
/// of the linked pair, and the resulting multisegment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryOp {
    pub pair: (usize, usize),
    pub result: Multisegment,
}

impl Multisegment {
    pub fn new(mut segments: Vec<Segment>) -> Result<Self> {
        if let Some(first) = segments.first() {
            let side = first.side();
            if let Some(bad) = segments.iter().find(|s| s.side() != side) {
                return Err(Error::SideMismatch {
                    expected: side,
                    found: bad.side(),
                });
            }
        }
        segments.sort();
        Ok(Multisegment { segments })
    }

    pub fn empty() -> Self {
        Multisegment::default()
    }

    pub fn singleton(segment: Segment) -> Self {
        Multisegment {
            segments: vec![segment],
        }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn side(&self) -> Option<Side> {
        self.segments.first().map(Segment::side)
    }

    pub fn degree(&self) -> u64 {
        self.segments.iter().map(Segment::degree).sum()
    }

    /// `Σ len(Δ)²`; strictly increases along every elementary operation.
    pub fn rank(&self) -> u64 {
        self.segments.iter().map(|s| s.len() * s.len()).sum()
    }

    /// Multiset union (the key of an induced product).
    pub fn union(&self, other: &Multisegment) -> Result<Multisegment> {
        if let (Some(a), Some(b)) = (self.side(), other.side()) {
            if a != b {
                return Err(Error::SideMismatch {
                    expected: a,
                    found: b,
                });
            }
        }
        let mut out = Vec::with_capacity(self.segments.len() + other.segments.len());
        let (mut i, mut j) = (0, 0);
        while i < self.segments.len() && j < other.segments.len() {
            if self.segments[i] <= other.segments[j] {
                out.push(self.segments[i].clone());
                i += 1;
            } else {
                out.push(other.segments[j].clone());
                j += 1;
            }
        }
        out.extend_from_slice(&self.segments[i..]);
        out.extend_from_slice(&other.segments[j..]);
        Ok(Multisegment { segments: out })
    }

    /// Replaces a linked pair by its union and intersection.
    pub fn apply_op(&self, i: usize, j: usize) -> Result<Multisegment> {
        let (a, b) = (&self.segments[i], &self.segments[j]);
        let (union, inter) = a.union_inter(b)?;
        let mut segs: Vec<Segment> = self
            .segments
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, s)| s.clone())
            .collect();
        segs.push(union);
        segs.extend(inter);
        segs.sort();
        Ok(Multisegment { segments: segs })
    }

    /// All elementary operations, one per unordered linked pair `(i, j)`,
    /// `i < j`, enumerated lexicographically.
    pub fn elementary_ops(&self) -> Vec<ElementaryOp> {
        let n = self.segments.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.segments[i].is_linked(&self.segments[j]) {
                    let result = self.apply_op(i, j).expect("linked pair");
                    out.push(ElementaryOp {
                        pair: (i, j),
                        result,
                    });
                }
            }
        }
        out
    }

    /// True iff no two segments are linked.
    pub fn is_pairwise_unlinked(&self) -> bool {
        let n = self.segments.len();
        (0..n).all(|i| (i + 1..n).all(|j| !self.segments[i].is_linked(&self.segments[j])))
    }

    /// Multiset of `(family, exponent)` with multiplicities.
    pub fn support(&self) -> Support {
        let mut counts = BTreeMap::new();
        for seg in &self.segments {
            for e in seg.exponents() {
                *counts.entry((seg.family().clone(), e)).or_insert(0) += 1;
            }
        }
        Support {
            side: self.side(),
            counts,
        }
    }

    /// True iff the support is a run of consecutive exponents of one line,
    /// each occurring once.
    pub fn is_segment_support(&self) -> bool {
        let Some(first) = self.segments.first() else {
            return false;
        };
        if !self.segments.iter().all(|s| s.same_line(first)) {
            return false;
        }
        let support = self.support();
        if support.counts.values().any(|&m| m != 1) {
            return false;
        }
        let step = first.step();
        let exps: Vec<i64> = support.counts.keys().map(|(_, e)| *e).collect();
        exps.windows(2).all(|w| w[1] - w[0] == step)
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromIterator<Segment> for Multisegment {
    /// Panics on mixed sides; use [`Multisegment::new`] for fallible input.
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        Multisegment::new(iter.into_iter().collect()).expect("segments share a side")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Support {
    pub side: Option<Side>,
    pub counts: BTreeMap<(Family, i64), u32>,
}

impl Support {
    pub fn multiplicity(&self, family: &str, exponent: i64) -> u32 {
        self.counts
            .iter()
            .find(|((f, e), _)| f.name() == family && *e == exponent)
            .map_or(0, |(_, &m)| m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::AlgebraContext;
    use crate::segment::make_segment;

    fn f(a: i64, b: i64) -> Segment {
        make_segment(
            &AlgebraContext::quaternion_default(),
            "rho",
            Side::F,
            a,
            (b - a + 1) as u64,
        )
        .unwrap()
    }

    fn d(a: i64, l: u64) -> Segment {
        make_segment(&AlgebraContext::quaternion_default(), "rho", Side::D, a, l).unwrap()
    }

    fn sigma1() -> Multisegment {
        [f(4, 9), f(0, 5), f(3, 6), f(1, 8)].into_iter().collect()
    }

    #[test]
    fn normalization_is_order_insensitive() {
        let a: Multisegment = [f(4, 9), f(0, 5), f(3, 6), f(1, 8)].into_iter().collect();
        let b: Multisegment = [f(1, 8), f(3, 6), f(0, 5), f(4, 9)].into_iter().collect();
        assert_eq!(a, b);
        assert_eq!(a.segments()[0], f(0, 5));
        assert!(Multisegment::new(vec![f(0, 0), d(0, 1)]).is_err());
    }

    #[test]
    fn elementary_ops_of_sigma1() {
        let ops = sigma1().elementary_ops();
        // canonical order: [0..5], [1..8], [3..6], [4..9]; only (1, 2) is nested
        let pairs: Vec<_> = ops.iter().map(|o| o.pair).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]);
        for op in &ops {
            assert_eq!(op.result.support(), sigma1().support());
            assert!(op.result.rank() > sigma1().rank());
        }
    }

    #[test]
    fn elementary_ops_of_fait_a() {
        let a: Multisegment = [d(0, 3), d(1, 4), d(3, 2), d(4, 3)].into_iter().collect();
        let ops = a.elementary_ops();
        assert_eq!(ops.len(), 1);
        let expected: Multisegment = [d(0, 5), d(4, 1), d(1, 4), d(3, 2)].into_iter().collect();
        assert_eq!(ops[0].result, expected);
        assert!(Multisegment::singleton(f(0, 0)).elementary_ops().is_empty());
    }

    #[test]
    fn support_examples() {
        assert_eq!(sigma1().support().multiplicity("rho", 4), 4);
        let s = Multisegment::singleton(f(0, 1)).support();
        assert_eq!(s.multiplicity("rho", 0), 1);
        assert_eq!(s.multiplicity("rho", 1), 1);
        assert_eq!(s.counts.len(), 2);
    }

    #[test]
    fn segment_support_examples() {
        let ms: Multisegment = [f(0, 0), f(1, 2)].into_iter().collect();
        assert!(ms.is_segment_support());
        assert!(!sigma1().is_segment_support());
        let gap: Multisegment = [f(0, 0), f(2, 2)].into_iter().collect();
        assert!(!gap.is_segment_support());
        let dd: Multisegment = [d(0, 1), d(2, 2)].into_iter().collect();
        assert!(dd.is_segment_support());
        let mixed: Multisegment = [d(0, 1), d(1, 1)].into_iter().collect();
        assert!(!mixed.is_segment_support());
        assert!(!Multisegment::empty().is_segment_support());
    }
}
