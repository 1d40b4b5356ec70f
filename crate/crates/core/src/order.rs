//! The partial order generated by elementary operations.
//!
//! `a ≤ b` when `a` is reachable from `b` by a finite chain of elementary
//! operations. The rank `Σ len²` strictly increases along each operation,
//! which bounds every search here.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::multiseg::Multisegment;
use crate::segment::Segment;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateStep {
    /// The linked pair that was replaced.
    pub pair: (Segment, Segment),
    pub result: Multisegment,
}

/// A chain of elementary operations witnessing `target ≤ source`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrderCertificate {
    pub steps: Vec<CertificateStep>,
}

impl OrderCertificate {
    /// Re-applies every step to `source` and returns the final multisegment.
    /// Fails if some step does not name a linked pair of the current
    /// multisegment or produces a different result.
    pub fn replay(&self, source: &Multisegment) -> Result<Multisegment> {
        let mut current = source.clone();
        for step in &self.steps {
            let segs = current.segments();
            let i = segs
                .iter()
                .position(|s| *s == step.pair.0)
                .ok_or(Error::NotLinked)?;
            let j = segs
                .iter()
                .enumerate()
                .position(|(k, s)| k != i && *s == step.pair.1)
                .ok_or(Error::NotLinked)?;
            let next = current.apply_op(i.min(j), i.max(j))?;
            if next != step.result {
                return Err(Error::NotLinked);
            }
            current = next;
        }
        Ok(current)
    }
}

fn check_sides(a: &Multisegment, b: &Multisegment) -> Result<()> {
    match (a.side(), b.side()) {
        (Some(x), Some(y)) if x != y => Err(Error::SideMismatch {
            expected: y,
            found: x,
        }),
        _ => Ok(()),
    }
}

/// Decides `a ≤ b` by breadth-first search downward from `b`; returns a
/// shortest certificate when it holds.
pub fn leq(a: &Multisegment, b: &Multisegment) -> Result<(bool, Option<OrderCertificate>)> {
    check_sides(a, b)?;
    if a == b {
        return Ok((true, Some(OrderCertificate::default())));
    }
    if a.support() != b.support() || a.rank() <= b.rank() {
        return Ok((false, None));
    }
    let target_rank = a.rank();
    let mut parent: HashMap<Multisegment, (Multisegment, (Segment, Segment))> = HashMap::new();
    let mut seen: HashSet<Multisegment> = HashSet::from([b.clone()]);
    let mut queue = VecDeque::from([b.clone()]);
    while let Some(node) = queue.pop_front() {
        for op in node.elementary_ops() {
            let next = op.result;
            if next.rank() > target_rank || seen.contains(&next) {
                continue;
            }
            let pair = (
                node.segments()[op.pair.0].clone(),
                node.segments()[op.pair.1].clone(),
            );
            seen.insert(next.clone());
            parent.insert(next.clone(), (node.clone(), pair));
            if next == *a {
                return Ok((true, Some(rebuild(&parent, a, b))));
            }
            if next.rank() < target_rank {
                queue.push_back(next);
            }
        }
    }
    Ok((false, None))
}

fn rebuild(
    parent: &HashMap<Multisegment, (Multisegment, (Segment, Segment))>,
    target: &Multisegment,
    source: &Multisegment,
) -> OrderCertificate {
    let mut steps = Vec::new();
    let mut cur = target.clone();
    while cur != *source {
        let (prev, pair) = &parent[&cur];
        steps.push(CertificateStep {
            pair: pair.clone(),
            result: cur.clone(),
        });
        cur = prev.clone();
    }
    steps.reverse();
    OrderCertificate { steps }
}

/// Every multisegment `≤ ms`, including `ms` itself.
pub fn down_set(ms: &Multisegment) -> BTreeSet<Multisegment> {
    let mut seen = HashSet::from([ms.clone()]);
    let mut stack = vec![ms.clone()];
    while let Some(node) = stack.pop() {
        for op in node.elementary_ops() {
            if seen.insert(op.result.clone()) {
                stack.push(op.result);
            }
        }
    }
    seen.into_iter().collect()
}

/// The finite poset `{a : a ≤ top}` listed in a linear extension (every
/// element precedes the elements above it), with its order relation.
#[derive(Debug, Clone)]
pub struct DownSetPoset {
    elements: Vec<Multisegment>,
    index: HashMap<Multisegment, usize>,
    // le[i][j] <=> elements[i] <= elements[j]
    le: Vec<Vec<bool>>,
}

impl DownSetPoset {
    pub fn new(top: &Multisegment) -> Self {
        let mut elements: Vec<Multisegment> = down_set(top).into_iter().collect();
        // higher rank = lower in the order
        elements.sort_by(|x, y| y.rank().cmp(&x.rank()).then_with(|| x.cmp(y)));
        let index: HashMap<Multisegment, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let n = elements.len();
        let mut le = vec![vec![false; n]; n];
        for j in 0..n {
            le[j][j] = true;
            for op in elements[j].elementary_ops() {
                let c = index[&op.result];
                debug_assert!(c < j);
                for i in 0..=c {
                    if le[i][c] {
                        le[i][j] = true;
                    }
                }
            }
        }
        DownSetPoset {
            elements,
            index,
            le,
        }
    }

    pub fn elements(&self) -> &[Multisegment] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, ms: &Multisegment) -> Option<usize> {
        self.index.get(ms).copied()
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i][j]
    }

    /// Zeta matrix `Z[i][j] = [elements[i] ≤ elements[j]]`.
    pub fn zeta_matrix(&self) -> Vec<Vec<i64>> {
        self.le
            .iter()
            .map(|row| row.iter().map(|&b| b as i64).collect())
            .collect()
    }

    /// Möbius matrix, computed by the recursion
    /// `μ(y, y) = 1`, `μ(x, y) = −Σ_{x < z ≤ y} μ(z, y)`.
    pub fn moebius_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut mu = vec![vec![0i64; n]; n];
        for y in 0..n {
            mu[y][y] = 1;
            for x in (0..y).rev() {
                if !self.le[x][y] {
                    continue;
                }
                mu[x][y] = -(x + 1..=y)
                    .filter(|&z| self.le[x][z] && self.le[z][y])
                    .map(|z| mu[z][y])
                    .sum::<i64>();
            }
        }
        mu
    }
}

/// Möbius function `μ(a, b)` of the order restricted to the down-set of `b`.
pub fn moebius(a: &Multisegment, b: &Multisegment) -> Result<i64> {
    check_sides(a, b)?;
    let poset = DownSetPoset::new(b);
    let i = poset.index_of(a).ok_or(Error::Incomparable)?;
    let j = poset.index_of(b).expect("top is in its own down-set");
    Ok(poset.moebius_matrix()[i][j])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::{AlgebraContext, Side};
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

    fn ms(segs: &[(i64, i64)]) -> Multisegment {
        segs.iter().map(|&(a, b)| f(a, b)).collect()
    }

    #[test]
    fn reflexive_with_empty_certificate() {
        let m = ms(&[(0, 1), (2, 3)]);
        assert_eq!(
            leq(&m, &m).unwrap(),
            (true, Some(OrderCertificate::default()))
        );
        let e = Multisegment::empty();
        assert!(leq(&e, &e).unwrap().0);
        assert!(!leq(&e, &m).unwrap().0);
        assert!(!leq(&m, &e).unwrap().0);
    }

    #[test]
    fn two_point_chain() {
        let top = ms(&[(0, 0), (1, 1)]);
        let bottom = ms(&[(0, 1)]);
        let (ok, cert) = leq(&bottom, &top).unwrap();
        assert!(ok);
        let cert = cert.unwrap();
        assert_eq!(cert.steps.len(), 1);
        assert_eq!(cert.replay(&top).unwrap(), bottom);
        assert!(!leq(&top, &bottom).unwrap().0);
    }

    #[test]
    fn side_mismatch_is_an_error() {
        let ctx = AlgebraContext::quaternion_default();
        let dm = Multisegment::singleton(make_segment(&ctx, "rho", Side::D, 0, 1).unwrap());
        assert!(matches!(
            leq(&dm, &ms(&[(0, 0)])),
            Err(Error::SideMismatch { .. })
        ));
    }

    #[test]
    fn down_set_examples() {
        let two = down_set(&ms(&[(0, 0), (1, 1)]));
        assert_eq!(two.len(), 2);
        assert!(two.contains(&ms(&[(0, 1)])));
        assert_eq!(down_set(&ms(&[(0, 0), (1, 1), (2, 2)])).len(), 4);
        assert_eq!(down_set(&ms(&[(0, 2)])).len(), 1);
    }

    #[test]
    fn moebius_examples() {
        let b = ms(&[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(moebius(&b, &b).unwrap(), 1);
        assert_eq!(moebius(&ms(&[(0, 1)]), &ms(&[(0, 0), (1, 1)])).unwrap(), -1);
        assert_eq!(moebius(&ms(&[(0, 2)]), &b).unwrap(), 1);
        assert_eq!(moebius(&ms(&[(0, 1), (2, 2)]), &b).unwrap(), -1);
        assert_eq!(
            moebius(&b, &ms(&[(0, 2)])).unwrap_err(),
            Error::Incomparable
        );
    }

    #[test]
    fn poset_is_listed_in_a_linear_extension() {
        let p = DownSetPoset::new(&ms(&[(0, 0), (1, 2), (2, 3), (3, 3)]));
        for i in 0..p.len() {
            for j in 0..p.len() {
                if p.le(i, j) {
                    assert!(i <= j);
                }
            }
        }
    }
}
