//! The standing counterexample to the converse of order monotonicity.
//!
//! With `d = 2`, a character `rho` and `s = 2`, the D-side multisegments
//!
//! ```text
//! a = {rho'{0;3}, rho'{1;4}, rho'{3;2}, rho'{4;3}}
//! b = {rho'{0;5}, rho'{1;3}, rho'{3;3}, rho'{4;1}}
//! ```
//!
//! transfer to `σ₁ = {[0..5],[1..8],[3..6],[4..9]}` and
//! `σ₂ = {[0..9],[1..6],[3..8],[4..5]}` on GL(24, F). There `σ₂ < σ₁`, yet
//! `b ≤ a` fails: only one pair of segments of `a` is linked.

use crate::context::{AlgebraContext, Side};
use crate::error::Result;
use crate::multiseg::Multisegment;
use crate::order::leq;
use crate::segment::make_segment;
use crate::transfer::ConverseWitness;

#[derive(Debug, Clone)]
pub struct Fait {
    pub ctx: AlgebraContext,
    pub a: Multisegment,
    pub b: Multisegment,
    pub sigma1: Multisegment,
    pub sigma2: Multisegment,
}

impl Default for Fait {
    fn default() -> Self {
        Self::new()
    }
}

impl Fait {
    pub fn new() -> Self {
        let ctx = AlgebraContext::quaternion_default();
        let d = |segs: &[(i64, u64)]| -> Multisegment {
            segs.iter()
                .map(|&(a, l)| make_segment(&ctx, "rho", Side::D, a, l).unwrap())
                .collect()
        };
        let f = |segs: &[(i64, i64)]| -> Multisegment {
            segs.iter()
                .map(|&(a, b)| make_segment(&ctx, "rho", Side::F, a, (b - a + 1) as u64).unwrap())
                .collect()
        };
        Fait {
            a: d(&[(0, 3), (1, 4), (3, 2), (4, 3)]),
            b: d(&[(0, 5), (1, 3), (3, 3), (4, 1)]),
            sigma1: f(&[(0, 5), (1, 8), (3, 6), (4, 9)]),
            sigma2: f(&[(0, 9), (1, 6), (3, 8), (4, 5)]),
            ctx,
        }
    }

    /// `σ₂ ≤ σ₁` holds while `b ≤ a` does not.
    pub fn witness(&self) -> Result<ConverseWitness> {
        Ok(ConverseWitness {
            images_related: leq(&self.sigma2, &self.sigma1)?.0,
            preimages_related: leq(&self.b, &self.a)?.0,
        })
    }
}
