//! Segments: arithmetic progressions of twist exponents over one cuspidal
//! family.
//!
//! On the F side a segment `rho[a..b]` is the run `ν^a ρ, …, ν^b ρ` (step 1).
//! On the D side `rho'{a;l}` is the run of `l` exponents
//! `a, a+s, …, a+(l−1)s`, where `s` is the family's torsion number.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;

use crate::context::{AlgebraContext, Family, Side};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    family: Family,
    side: Side,
    start: i64,
    len: u64,
}

#[allow(clippy::len_without_is_empty)]
impl Segment {
    pub fn new(family: Family, side: Side, start: i64, len: u64) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptySegment);
        }
        if side == Side::D && !family.has_d_side() {
            return Err(Error::NoDAttachment(family.name().to_string()));
        }
        Ok(Segment {
            family,
            side,
            start,
            len,
        })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    /// Distance between consecutive exponents: 1 on F, `s` on D.
    pub fn step(&self) -> i64 {
        match self.side {
            Side::F => 1,
            Side::D => self.family.s().expect("validated D attachment") as i64,
        }
    }

    pub fn end(&self) -> i64 {
        self.start + (self.len as i64 - 1) * self.step()
    }

    pub fn exponents(&self) -> impl Iterator<Item = i64> + '_ {
        let step = self.step();
        (0..self.len as i64).map(move |i| self.start + i * step)
    }

    /// Residue class of the start exponent modulo the step.
    pub fn residue(&self) -> i64 {
        self.start.rem_euclid(self.step())
    }

    /// Degree contributed by one exponent: `p` on F, `t = p·s/d` on D.
    pub fn unit_degree(&self) -> u64 {
        match self.side {
            Side::F => self.family.p(),
            Side::D => self.family.t().expect("validated D attachment"),
        }
    }

    /// Group degree: `n` for GL(n, F) on side F, `r` for GL(r, D) on side D.
    pub fn degree(&self) -> u64 {
        self.unit_degree() * self.len
    }

    /// Degree over F of the split group matching this segment.
    pub fn transfer_degree(&self) -> u64 {
        match self.side {
            Side::F => self.family.p() * self.len,
            Side::D => {
                self.family.p() * self.family.s().expect("validated D attachment") * self.len
            }
        }
    }

    pub fn same_line(&self, other: &Segment) -> bool {
        self.family == other.family && self.side == other.side && self.residue() == other.residue()
    }

    /// True iff both lie on one line and their union is a segment distinct
    /// from each of them.
    pub fn is_linked(&self, other: &Segment) -> bool {
        if !self.same_line(other) {
            return false;
        }
        let step = self.step();
        let (lo, hi) = if (self.start, self.end()) <= (other.start, other.end()) {
            (self, other)
        } else {
            (other, self)
        };
        // neither nested nor equal, and no gap between them
        lo.start < hi.start && lo.end() < hi.end() && hi.start <= lo.end() + step
    }

    /// `(Δ₁ ∪ Δ₂, Δ₁ ∩ Δ₂)` for a linked pair; the intersection is `None`
    /// when the segments are merely juxtaposed.
    pub fn union_inter(&self, other: &Segment) -> Result<(Segment, Option<Segment>)> {
        if !self.is_linked(other) {
            return Err(Error::NotLinked);
        }
        let step = self.step();
        let lo = self.start.min(other.start);
        let hi = self.end().max(other.end());
        let union = self.with_bounds(lo, hi, step);
        let a = self.start.max(other.start);
        let b = self.end().min(other.end());
        let inter = (a <= b).then(|| self.with_bounds(a, b, step));
        Ok((union, inter))
    }

    fn with_bounds(&self, start: i64, end: i64, step: i64) -> Segment {
        Segment {
            family: self.family.clone(),
            side: self.side,
            start,
            len: ((end - start) / step + 1) as u64,
        }
    }

    /// Cuts the segment into consecutive pieces of the given exponent counts,
    /// highest exponents first. Zero counts give `None`.
    pub(crate) fn split_top_first(&self, counts: &[u64]) -> Vec<Option<Segment>> {
        debug_assert_eq!(counts.iter().sum::<u64>(), self.len);
        let step = self.step();
        let mut remaining = self.len;
        counts
            .iter()
            .map(|&c| {
                remaining -= c;
                (c > 0).then(|| Segment {
                    family: self.family.clone(),
                    side: self.side,
                    start: self.start + remaining as i64 * step,
                    len: c,
                })
            })
            .collect()
    }

    /// Mean of the exponent set.
    pub fn exponent_center(&self) -> Ratio<i64> {
        Ratio::new(self.start + self.end(), 2)
    }
}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// By side, family name, residue, start, length.
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.side
            .cmp(&other.side)
            .then_with(|| {
                if std::sync::Arc::ptr_eq(&self.family, &other.family) {
                    Ordering::Equal
                } else {
                    self.family.name().cmp(other.family.name())
                }
            })
            .then_with(|| match self.side {
                Side::F => Ordering::Equal,
                Side::D => self.residue().cmp(&other.residue()),
            })
            .then(self.start.cmp(&other.start))
            .then(self.len.cmp(&other.len))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::F => write!(f, "{}[{}..{}]", self.family.name(), self.start, self.end()),
            Side::D => write!(f, "{}'{{{};{}}}", self.family.name(), self.start, self.len),
        }
    }
}

/// Looks the family up in `ctx` and validates the segment.
pub fn make_segment(
    ctx: &AlgebraContext,
    family: &str,
    side: Side,
    start: i64,
    len: u64,
) -> Result<Segment> {
    Segment::new(ctx.family(family)?.clone(), side, start, len)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> AlgebraContext {
        AlgebraContext::quaternion_default()
    }

    fn f(a: i64, b: i64) -> Segment {
        make_segment(&ctx(), "rho", Side::F, a, (b - a + 1) as u64).unwrap()
    }

    fn d(a: i64, l: u64) -> Segment {
        make_segment(&ctx(), "rho", Side::D, a, l).unwrap()
    }

    #[test]
    fn make_segment_examples() {
        let s = f(0, 5);
        assert_eq!(s.exponents().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(s.degree(), 6);
        let s = d(0, 3);
        assert_eq!(s.exponents().collect::<Vec<_>>(), vec![0, 2, 4]);
        assert_eq!(s.degree(), 3);
        assert_eq!(s.transfer_degree(), 6);
        assert_eq!(d(1, 4).exponents().collect::<Vec<_>>(), vec![1, 3, 5, 7]);
    }

    #[test]
    fn make_segment_errors() {
        let ctx = AlgebraContext::new(2, [("rho", 1, Some(2)), ("chi", 2, None)]).unwrap();
        assert_eq!(
            make_segment(&ctx, "nope", Side::F, 0, 1).unwrap_err(),
            Error::UnknownFamily("nope".into())
        );
        assert_eq!(
            make_segment(&ctx, "chi", Side::D, 0, 1).unwrap_err(),
            Error::NoDAttachment("chi".into())
        );
        assert_eq!(
            make_segment(&ctx, "rho", Side::F, 0, 0).unwrap_err(),
            Error::EmptySegment
        );
    }

    #[test]
    fn linked_examples() {
        assert!(f(0, 5).is_linked(&f(1, 8)));
        assert!(!f(1, 8).is_linked(&f(3, 6)));
        assert!(d(0, 3).is_linked(&d(4, 3)));
        // juxtaposed
        assert!(f(0, 0).is_linked(&f(1, 1)));
        assert!(!f(0, 0).is_linked(&f(2, 2)));
        // different residue classes on D
        assert!(!d(0, 1).is_linked(&d(1, 1)));
        assert!(!f(0, 3).is_linked(&f(0, 3)));
        // different sides are never linked
        assert!(!f(0, 0).is_linked(&d(1, 1)));
    }

    #[test]
    fn union_inter_examples() {
        assert_eq!(
            f(0, 5).union_inter(&f(4, 9)).unwrap(),
            (f(0, 9), Some(f(4, 5)))
        );
        assert_eq!(
            f(0, 5).union_inter(&f(1, 8)).unwrap(),
            (f(0, 8), Some(f(1, 5)))
        );
        assert_eq!(
            d(0, 3).union_inter(&d(4, 3)).unwrap(),
            (d(0, 5), Some(d(4, 1)))
        );
        assert_eq!(f(0, 0).union_inter(&f(1, 1)).unwrap(), (f(0, 1), None));
        assert_eq!(f(1, 8).union_inter(&f(3, 6)).unwrap_err(), Error::NotLinked);
    }

    #[test]
    fn exponent_center_examples() {
        assert_eq!(f(0, 5).exponent_center(), Ratio::new(5, 2));
        assert_eq!(d(1, 3).exponent_center(), Ratio::from_integer(3));
        assert_eq!(f(-4, -4).exponent_center(), Ratio::from_integer(-4));
    }

    #[test]
    fn split_highest_first() {
        let pieces = f(0, 5).split_top_first(&[2, 0, 4]);
        assert_eq!(pieces, vec![Some(f(4, 5)), None, Some(f(0, 3))]);
        let pieces = d(1, 4).split_top_first(&[1, 3]);
        assert_eq!(pieces, vec![Some(d(7, 1)), Some(d(1, 3))]);
    }

    #[test]
    fn display() {
        assert_eq!(f(0, 5).to_string(), "rho[0..5]");
        assert_eq!(d(1, 4).to_string(), "rho'{1;4}");
    }
}
