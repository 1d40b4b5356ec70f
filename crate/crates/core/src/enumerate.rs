//! Finite enumerations of segments and standard keys for exhaustive checks.
//!
//! The exponent lattice is infinite, so every enumeration is bounded by an
//! exponent window `[lo, hi]`: a segment qualifies when all its exponents
//! lie in the window.

use crate::context::{Family, Side};
use crate::multiseg::Multisegment;
use crate::segment::Segment;
use crate::weyl::LeviComposition;

/// All segments of `family` on `side` with exponents inside `[lo, hi]` and
/// group degree at most `max_degree`, in canonical order.
pub fn segments_in_window(
    family: &Family,
    side: Side,
    lo: i64,
    hi: i64,
    max_degree: u64,
) -> Vec<Segment> {
    let mut out = Vec::new();
    if side == Side::D && !family.has_d_side() {
        return out;
    }
    for start in lo..=hi {
        for len in 1.. {
            let Ok(seg) = Segment::new(family.clone(), side, start, len) else {
                break;
            };
            if seg.end() > hi || seg.degree() > max_degree {
                break;
            }
            out.push(seg);
        }
    }
    out.sort();
    out
}

/// All multisets of `segments` with total degree in `1..=max_degree`.
pub fn keys_up_to_degree(segments: &[Segment], max_degree: u64) -> Vec<Multisegment> {
    fn rec(
        segments: &[Segment],
        from: usize,
        budget: u64,
        cur: &mut Vec<Segment>,
        out: &mut Vec<Multisegment>,
    ) {
        for i in from..segments.len() {
            let deg = segments[i].degree();
            if deg > budget {
                continue;
            }
            cur.push(segments[i].clone());
            out.push(Multisegment::new(cur.clone()).expect("one side"));
            rec(segments, i, budget - deg, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(segments, 0, max_degree, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| (a.degree(), a).cmp(&(b.degree(), b)));
    out.dedup();
    out
}

/// All multisegments whose support is the run of `k` consecutive exponents
/// (on the line of `start`) each taken once: one per composition of `k`.
pub fn segment_support_multisegments(
    family: &Family,
    side: Side,
    start: i64,
    k: u64,
) -> Vec<Multisegment> {
    LeviComposition::all(k)
        .into_iter()
        .map(|c| {
            let mut s = start;
            let mut segs = Vec::new();
            for &len in c.blocks() {
                let seg = Segment::new(family.clone(), side, s, len).expect("valid segment");
                s = seg.end() + seg.step();
                segs.push(seg);
            }
            Multisegment::new(segs).expect("one side")
        })
        .collect()
}

/// Multisegments consisting of the run of `k` single exponents starting at
/// `start`; the maximum of its segment-support block.
pub fn cuspidal_run(family: &Family, side: Side, start: i64, k: u64) -> Multisegment {
    segment_support_multisegments(family, side, start, k)
        .into_iter()
        .max_by_key(Multisegment::len)
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::AlgebraContext;
    use crate::order::down_set;

    #[test]
    fn window_counts() {
        let ctx = AlgebraContext::quaternion_default();
        let rho = ctx.family("rho").unwrap();
        // 4 + 3 + 2 + 1 intervals in [0, 3]
        assert_eq!(segments_in_window(rho, Side::F, 0, 3, 10).len(), 10);
        assert_eq!(segments_in_window(rho, Side::F, 0, 3, 2).len(), 7);
        // D: starts 0..3, step 2
        let d = segments_in_window(rho, Side::D, 0, 3, 10);
        assert_eq!(
            d.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            [
                "rho'{0;1}",
                "rho'{0;2}",
                "rho'{2;1}",
                "rho'{1;1}",
                "rho'{1;2}",
                "rho'{3;1}"
            ]
        );
    }

    #[test]
    fn keys_are_distinct_and_bounded() {
        let ctx = AlgebraContext::quaternion_default();
        let rho = ctx.family("rho").unwrap();
        let segs = segments_in_window(rho, Side::F, 0, 1, 2);
        // segments [0], [1], [0..1]
        let keys = keys_up_to_degree(&segs, 2);
        assert_eq!(keys.len(), 2 + 1 + 3);
        assert!(keys.iter().all(|k| k.degree() <= 2));
    }

    #[test]
    fn segment_support_block_is_a_down_set() {
        let ctx = AlgebraContext::quaternion_default();
        let rho = ctx.family("rho").unwrap();
        for side in [Side::F, Side::D] {
            for k in 1..=5 {
                let block = segment_support_multisegments(rho, side, 0, k);
                assert_eq!(block.len(), 1 << (k - 1));
                let top = cuspidal_run(rho, side, 0, k);
                assert_eq!(down_set(&top), block.into_iter().collect());
            }
        }
    }
}
