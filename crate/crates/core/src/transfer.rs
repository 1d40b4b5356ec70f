//! Jacquet-Langlands transfer between `R(D)` and `R(F)`.
//!
//! A D-side segment `rho'{a;l}` over a family with torsion number `s`
//! corresponds to the F-side segment `rho[a .. a+l·s−1]`. `jl` applies this
//! segmentwise to standard keys, giving an injective ring morphism; `lj`
//! inverts it on keys all of whose segments transfer and kills the rest.
//!
//! No `(−1)^(n−r)` sign is attached to `jl`: that sign belongs to the
//! character identity, and every Grothendieck-level statement checked here
//! is normalized without it.

use crate::context::{AlgebraContext, Side};
use crate::decomp::{express_irreducible, to_irreducible_basis, DecompositionProvider};
use crate::error::{Error, Result};
use crate::multiseg::Multisegment;
use crate::order::{leq, OrderCertificate};
use crate::ring::{Basis, TensorRep, VirtualRep};
use crate::segment::Segment;

#[derive(Debug, Clone)]
pub struct TransferContext {
    ctx: AlgebraContext,
}

impl TransferContext {
    pub fn new(ctx: AlgebraContext) -> Self {
        TransferContext { ctx }
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn d(&self) -> u64 {
        self.ctx.d()
    }

    pub fn segment_d_to_f(&self, seg: &Segment) -> Result<Segment> {
        if seg.side() != Side::D {
            return Err(Error::SideMismatch {
                expected: Side::D,
                found: seg.side(),
            });
        }
        let s = seg.family().s().expect("D segments carry s");
        Segment::new(seg.family().clone(), Side::F, seg.start(), seg.len() * s)
    }

    pub fn segment_f_to_d(&self, seg: &Segment) -> Result<Segment> {
        if seg.side() != Side::F {
            return Err(Error::SideMismatch {
                expected: Side::F,
                found: seg.side(),
            });
        }
        let d = self.d();
        if !seg.transfer_degree().is_multiple_of(d) {
            return Err(Error::DoesNotTransfer(seg.to_string()));
        }
        let s = seg.family().s().ok_or_else(|| {
            Error::InconsistentTransferDatum(format!(
                "{seg} transfers but family `{}` has no D-side line",
                seg.family().name()
            ))
        })?;
        if !seg.len().is_multiple_of(s) {
            return Err(Error::InconsistentTransferDatum(format!(
                "{seg} transfers but its length is not a multiple of s = {s}"
            )));
        }
        Segment::new(seg.family().clone(), Side::D, seg.start(), seg.len() / s)
    }

    fn segment_transfers(&self, seg: &Segment) -> bool {
        seg.transfer_degree().is_multiple_of(self.d())
    }

    /// Segmentwise image of a D-side multisegment.
    pub fn key_d_to_f(&self, ms: &Multisegment) -> Result<Multisegment> {
        let segs = ms
            .segments()
            .iter()
            .map(|s| self.segment_d_to_f(s))
            .collect::<Result<_>>()?;
        Multisegment::new(segs)
    }

    /// Segmentwise preimage of an F-side key, or `None` if some segment does
    /// not transfer.
    pub fn key_f_to_d(&self, ms: &Multisegment) -> Result<Option<Multisegment>> {
        if !ms.segments().iter().all(|s| self.segment_transfers(s)) {
            return Ok(None);
        }
        let segs = ms
            .segments()
            .iter()
            .map(|s| self.segment_f_to_d(s))
            .collect::<Result<_>>()?;
        Ok(Some(Multisegment::new(segs)?))
    }

    pub fn jl(&self, x: &VirtualRep) -> Result<VirtualRep> {
        require(x, Side::D, Basis::Standard)?;
        let mut out = VirtualRep::zero(Side::F, Basis::Standard);
        for (ms, &c) in x.terms() {
            out.add_term(self.key_d_to_f(ms)?, c);
        }
        Ok(out)
    }

    pub fn lj(&self, x: &VirtualRep) -> Result<VirtualRep> {
        require(x, Side::F, Basis::Standard)?;
        let mut out = VirtualRep::zero(Side::D, Basis::Standard);
        for (ms, &c) in x.terms() {
            let degree = ms.degree();
            if degree % self.d() != 0 {
                return Err(Error::NoInnerForm {
                    degree,
                    d: self.d(),
                });
            }
            if let Some(pre) = self.key_f_to_d(ms)? {
                out.add_term(pre, c);
            }
        }
        Ok(out)
    }

    /// `x ∈ S_{G,G'}`: the transfer to the inner form vanishes.
    pub fn is_g_prime_null(&self, x: &VirtualRep) -> Result<bool> {
        Ok(self.lj(x)?.is_zero())
    }

    /// Membership in the ideal generated by segments of degree prime to `d`:
    /// every key has a segment whose degree is not divisible by `d`.
    pub fn in_ideal(&self, x: &VirtualRep) -> Result<bool> {
        require(x, Side::F, Basis::Standard)?;
        Ok(x.terms().keys().all(|ms| self.key_in_ideal(ms)))
    }

    fn key_in_ideal(&self, ms: &Multisegment) -> bool {
        ms.segments().iter().any(|s| !self.segment_transfers(s))
    }

    /// Drops every tensor with a slot in the ideal.
    pub fn reduce_mod_ideal(&self, t: &TensorRep) -> TensorRep {
        TensorRep::from_terms(
            t.side(),
            t.arity(),
            t.terms()
                .iter()
                .filter(|(k, _)| !k.iter().any(|m| self.key_in_ideal(m)))
                .map(|(k, &c)| (k.clone(), c)),
        )
    }

    /// Slotwise `jl` of a D-side tensor.
    pub fn jl_tensor(&self, t: &TensorRep) -> Result<TensorRep> {
        if t.side() != Side::D {
            return Err(Error::SideMismatch {
                expected: Side::D,
                found: t.side(),
            });
        }
        let mut terms = Vec::with_capacity(t.terms().len());
        for (k, &c) in t.terms() {
            let image = k
                .iter()
                .map(|m| self.key_d_to_f(m))
                .collect::<Result<Vec<_>>>()?;
            terms.push((image, c));
        }
        Ok(TensorRep::from_terms(Side::F, t.arity(), terms))
    }

    /// The Langlands-data map `M`: segmentwise transfer of an irreducible
    /// label.
    pub fn m_map(&self, ms: &Multisegment) -> Result<Multisegment> {
        self.key_d_to_f(ms)
    }

    /// Comultiplication commutes with `jl` modulo the ideal.
    pub fn check_hopf_compat(&self, x: &VirtualRep) -> Result<bool> {
        let lhs = self.reduce_mod_ideal(&self.jl(x)?.comult()?);
        let rhs = self.jl_tensor(&x.comult()?)?;
        Ok(lhs == rhs)
    }

    /// Expands `jl(Irr(ms'))` in the F-side irreducible basis and checks
    /// that `Irr(M(ms'))` occurs once and every other term is strictly lower.
    pub fn check_jl_irreducible_image(
        &self,
        ms: &Multisegment,
        prov: &dyn DecompositionProvider,
    ) -> Result<JlImageReport> {
        let image = self.jl(&express_irreducible(ms, prov)?)?;
        let expansion = to_irreducible_basis(&image, prov)?;
        let leading = self.m_map(ms)?;
        let leading_coefficient = expansion.coefficient(&leading);
        let mut lower_terms = Vec::new();
        let mut all_lower = true;
        for (a, &c) in expansion.terms() {
            if *a == leading {
                continue;
            }
            all_lower &= leq(a, &leading)?.0;
            lower_terms.push((a.clone(), c));
        }
        Ok(JlImageReport {
            leading,
            leading_coefficient,
            lower_terms,
            all_lower,
            expansion,
        })
    }

    /// `lj(Irr_F(M(ms')))` equals `Irr_D(ms')`, both in standard coordinates.
    pub fn check_conjecture_case(
        &self,
        ms: &Multisegment,
        prov: &dyn DecompositionProvider,
    ) -> Result<bool> {
        let f_side = express_irreducible(&self.m_map(ms)?, prov)?;
        let d_side = express_irreducible(ms, prov)?;
        Ok(self.lj(&f_side)? == d_side)
    }

    /// `lj(aubert_F(jl(x))) = aubert_D(x)`.
    pub fn check_involution_compat(&self, x: &VirtualRep) -> Result<bool> {
        let lhs = self.lj(&self.jl(x)?.aubert()?)?;
        Ok(lhs == x.aubert()?)
    }

    /// For each pair with `a' ≤ b'`, checks `jl(a') ≤ jl(b')`.
    pub fn check_order_preservation(
        &self,
        pairs: &[(Multisegment, Multisegment)],
    ) -> Result<OrderPreservationReport> {
        let mut cases = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let premise = leq(a, b)?.0;
            let (image_leq, certificate) = if premise {
                leq(&self.key_d_to_f(a)?, &self.key_d_to_f(b)?)?
            } else {
                (false, None)
            };
            cases.push(OrderCase {
                a: a.clone(),
                b: b.clone(),
                premise,
                image_leq,
                certificate,
            });
        }
        Ok(OrderPreservationReport {
            cases,
            witness: crate::fait::Fait::new().witness()?,
        })
    }
}

fn require(x: &VirtualRep, side: Side, basis: Basis) -> Result<()> {
    if x.side() != side {
        return Err(Error::SideMismatch {
            expected: side,
            found: x.side(),
        });
    }
    if x.basis() != basis {
        return Err(Error::BasisMismatch(match basis {
            Basis::Standard => "Std",
            Basis::Irreducible => "Irr",
        }));
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct JlImageReport {
    /// `M(ms')`.
    pub leading: Multisegment,
    pub leading_coefficient: i64,
    pub lower_terms: Vec<(Multisegment, i64)>,
    /// Every companion is strictly below the leading label.
    pub all_lower: bool,
    pub expansion: VirtualRep,
}

impl JlImageReport {
    pub fn passed(&self) -> bool {
        self.leading_coefficient == 1 && self.all_lower
    }
}

#[derive(Debug, Clone)]
pub struct OrderCase {
    pub a: Multisegment,
    pub b: Multisegment,
    /// `a ≤ b` on the D side.
    pub premise: bool,
    /// `jl(a) ≤ jl(b)` on the F side (only evaluated when the premise holds).
    pub image_leq: bool,
    pub certificate: Option<OrderCertificate>,
}

/// The fixed witness that the converse of monotonicity fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConverseWitness {
    pub images_related: bool,
    pub preimages_related: bool,
}

#[derive(Debug, Clone)]
pub struct OrderPreservationReport {
    pub cases: Vec<OrderCase>,
    pub witness: ConverseWitness,
}

impl OrderPreservationReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| !c.premise || c.image_leq)
            && self.witness.images_related
            && !self.witness.preimages_related
    }
}
