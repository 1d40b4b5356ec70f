//! Change of basis between standard modules and irreducibles.
//!
//! `Std(b) = Σ_{a ≤ b} m(a, b) · Irr(a)` with `m(b, b) = 1`. The numbers
//! `m(a, b)` come from a [`DecompositionProvider`]; the built-in provider
//! knows them only where they are forced to be 0 or 1, and refuses the rest.

use crate::error::{Error, Result};
use crate::multiseg::Multisegment;
use crate::order::{leq, DownSetPoset};
use crate::ring::{Basis, VirtualRep};

pub trait DecompositionProvider: Send + Sync {
    /// Whether multiplicities `m(a, b)` are known for every `a ≤ b`.
    fn covers(&self, b: &Multisegment) -> bool;

    /// Multiplicity of `Irr(a)` in `Std(b)`.
    fn multiplicity(&self, a: &Multisegment, b: &Multisegment) -> Result<u64>;
}

/// Multiplicity one for every `a ≤ b`, on the supports where this is known:
/// segment-type supports (each exponent of a single run occurs once),
/// multisegments with at most two segments, and pairwise unlinked
/// multisegments (irreducible standard modules).
#[derive(Debug, Clone, Copy, Default)]
pub struct SegmentSupportProvider;

pub fn segment_support_provider() -> SegmentSupportProvider {
    SegmentSupportProvider
}

impl DecompositionProvider for SegmentSupportProvider {
    fn covers(&self, b: &Multisegment) -> bool {
        b.len() <= 2 || b.is_segment_support() || b.is_pairwise_unlinked()
    }

    fn multiplicity(&self, a: &Multisegment, b: &Multisegment) -> Result<u64> {
        if !self.covers(b) {
            return Err(Error::NotCovered(b.to_string()));
        }
        Ok(leq(a, b)?.0 as u64)
    }
}

/// True iff the standard module is irreducible: no two segments linked.
pub fn is_irreducible_standard(ms: &Multisegment) -> bool {
    ms.is_pairwise_unlinked()
}

fn require_covered(prov: &dyn DecompositionProvider, ms: &Multisegment) -> Result<()> {
    if !prov.covers(ms) {
        return Err(Error::NotCovered(ms.to_string()));
    }
    Ok(())
}

/// `Std(ms)` written in the irreducible basis.
pub fn decompose_standard(
    ms: &Multisegment,
    prov: &dyn DecompositionProvider,
) -> Result<VirtualRep> {
    require_covered(prov, ms)?;
    let side = side_of(ms);
    let poset = DownSetPoset::new(ms);
    let mut out = VirtualRep::zero(side, Basis::Irreducible);
    for a in poset.elements() {
        out.add_term(a.clone(), prov.multiplicity(a, ms)? as i64);
    }
    Ok(out)
}

/// `Irr(ms)` written in the standard basis, by inverting the unitriangular
/// decomposition matrix over the down-set of `ms`.
pub fn express_irreducible(
    ms: &Multisegment,
    prov: &dyn DecompositionProvider,
) -> Result<VirtualRep> {
    require_covered(prov, ms)?;
    let side = side_of(ms);
    let poset = DownSetPoset::new(ms);
    let elems = poset.elements();
    let n = elems.len();
    // irr[i] = Irr(elems[i]) in Std coordinates; elements below i precede it
    let mut irr: Vec<VirtualRep> = Vec::with_capacity(n);
    for j in 0..n {
        let mut v = VirtualRep::std(side, elems[j].clone())?;
        for i in 0..j {
            if !poset.le(i, j) {
                continue;
            }
            let m = prov.multiplicity(&elems[i], &elems[j])? as i64;
            if m != 0 {
                v = v.try_sub(&irr[i].scale(m))?;
            }
        }
        irr.push(v);
    }
    Ok(irr.pop().expect("down-set contains its top"))
}

/// Rewrites a standard-basis element in the irreducible basis.
pub fn to_irreducible_basis(
    x: &VirtualRep,
    prov: &dyn DecompositionProvider,
) -> Result<VirtualRep> {
    if x.basis() != Basis::Standard {
        return Err(Error::BasisMismatch("Std"));
    }
    let mut out = VirtualRep::zero(x.side(), Basis::Irreducible);
    for (ms, &c) in x.terms() {
        out = out.try_add(&decompose_standard(ms, prov)?.scale(c))?;
    }
    Ok(out)
}

/// Rewrites an irreducible-basis element in the standard basis.
pub fn to_standard_basis(x: &VirtualRep, prov: &dyn DecompositionProvider) -> Result<VirtualRep> {
    if x.basis() != Basis::Irreducible {
        return Err(Error::BasisMismatch("Irr"));
    }
    let mut out = VirtualRep::zero(x.side(), Basis::Standard);
    for (ms, &c) in x.terms() {
        out = out.try_add(&express_irreducible(ms, prov)?.scale(c))?;
    }
    Ok(out)
}

fn side_of(ms: &Multisegment) -> crate::context::Side {
    ms.side().unwrap_or(crate::context::Side::F)
}
