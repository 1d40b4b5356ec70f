//! The graded Grothendieck rings `R(F)` and `R(D)`.
//!
//! Elements are finite integer combinations of multisegment keys, read in
//! either the standard basis (induced from essentially square-integrable
//! factors) or the irreducible basis (Langlands quotients). The standard
//! basis is the free commutative ring on segments: the product of two keys
//! is their multiset union.
//!
//! Jacquet restriction of a single segment keeps the highest exponents in
//! the first tensor block. The involution uses the sign `(−1)^(k−1)` for a
//! composition with `k` blocks; this differs from `(−1)^(n−k−1)` by the
//! constant `(−1)^n` on each graded slice and makes the transfer of the
//! involution hold with no extra sign.

use std::collections::BTreeMap;
use std::fmt;

use crate::context::Side;
use crate::error::{Error, Result};
use crate::multiseg::Multisegment;
use crate::segment::Segment;
use crate::weyl::LeviComposition;

/// Largest key degree for which [`VirtualRep::aubert`] sums over every
/// composition directly.
pub const DIRECT_AUBERT_MAX_DEGREE: u64 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Standard,
    Irreducible,
}

impl Basis {
    fn tag(self) -> &'static str {
        match self {
            Basis::Standard => "Std",
            Basis::Irreducible => "Irr",
        }
    }
}

/// Integer combination of multisegment keys on one side, in one basis.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualRep {
    side: Side,
    basis: Basis,
    terms: BTreeMap<Multisegment, i64>,
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, i64>, key: K, coeff: i64) {
    if coeff == 0 {
        return;
    }
    let entry = map.entry(key);
    match entry {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if *o.get() == 0 {
                o.remove();
            }
        }
    }
}

impl VirtualRep {
    pub fn zero(side: Side, basis: Basis) -> Self {
        VirtualRep {
            side,
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `1 = Std(∅)`.
    pub fn unit(side: Side) -> Self {
        Self::basis_element(side, Basis::Standard, Multisegment::empty())
    }

    fn basis_element(side: Side, basis: Basis, ms: Multisegment) -> Self {
        let mut v = Self::zero(side, basis);
        v.terms.insert(ms, 1);
        v
    }

    /// The standard module indexed by `ms`. The side is taken from `ms`,
    /// or is `side` when `ms` is empty.
    pub fn std(side: Side, ms: Multisegment) -> Result<Self> {
        check_key_side(side, &ms)?;
        Ok(Self::basis_element(side, Basis::Standard, ms))
    }

    /// The Langlands quotient of the standard module indexed by `ms`.
    pub fn irr(side: Side, ms: Multisegment) -> Result<Self> {
        check_key_side(side, &ms)?;
        Ok(Self::basis_element(side, Basis::Irreducible, ms))
    }

    pub fn from_terms(
        side: Side,
        basis: Basis,
        terms: impl IntoIterator<Item = (Multisegment, i64)>,
    ) -> Result<Self> {
        let mut v = Self::zero(side, basis);
        for (ms, c) in terms {
            check_key_side(side, &ms)?;
            add_into(&mut v.terms, ms, c);
        }
        Ok(v)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Multisegment, i64> {
        &self.terms
    }

    pub fn coefficient(&self, ms: &Multisegment) -> i64 {
        self.terms.get(ms).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all keys; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut degrees = self.terms.keys().map(Multisegment::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Splits into graded slices.
    pub fn slices(&self) -> BTreeMap<u64, VirtualRep> {
        let mut out: BTreeMap<u64, VirtualRep> = BTreeMap::new();
        for (ms, &c) in &self.terms {
            out.entry(ms.degree())
                .or_insert_with(|| Self::zero(self.side, self.basis))
                .terms
                .insert(ms.clone(), c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, ms: Multisegment, coeff: i64) {
        add_into(&mut self.terms, ms, coeff);
    }

    fn check_compatible(&self, other: &VirtualRep) -> Result<()> {
        if self.side != other.side {
            return Err(Error::SideMismatch {
                expected: self.side,
                found: other.side,
            });
        }
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(self.basis.tag()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &VirtualRep) -> Result<VirtualRep> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (ms, &c) in &other.terms {
            out.add_term(ms.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &VirtualRep) -> Result<VirtualRep> {
        self.try_add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> VirtualRep {
        let mut out = Self::zero(self.side, self.basis);
        if k != 0 {
            out.terms = self
                .terms
                .iter()
                .map(|(m, &c)| (m.clone(), c * k))
                .collect();
        }
        out
    }

    /// Induced product; defined on the standard basis only.
    pub fn mul(&self, other: &VirtualRep) -> Result<VirtualRep> {
        self.check_compatible(other)?;
        if self.basis != Basis::Standard {
            return Err(Error::BasisMismatch("Std"));
        }
        let mut out = Self::zero(self.side, Basis::Standard);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                out.add_term(a.union(b)?, x * y);
            }
        }
        Ok(out)
    }

    fn require_standard(&self) -> Result<()> {
        if self.basis != Basis::Standard {
            return Err(Error::BasisMismatch("Std"));
        }
        Ok(())
    }

    /// Two-block comultiplication `c(x) = Σ_{k+k'=n} r_{(k,k')}(x)`,
    /// including the splits with the unit on either side.
    pub fn comult(&self) -> Result<TensorRep> {
        self.require_standard()?;
        let mut out = TensorRep::zero(self.side, 2);
        for (key, &c) in &self.terms {
            for ((l, r), k) in comult_key(key) {
                add_into(&mut out.terms, vec![l, r], c * k);
            }
        }
        Ok(out)
    }

    /// Jacquet restriction to the standard Levi `levi`, computed as the
    /// iterated comultiplication sliced at the block degrees.
    pub fn jacquet_restrict(&self, levi: &LeviComposition) -> Result<TensorRep> {
        self.require_standard()?;
        let mut out = TensorRep::zero(self.side, levi.blocks().len());
        for (key, &c) in &self.terms {
            if key.degree() != levi.n() {
                return Err(Error::DegreeMismatch {
                    expected: key.degree(),
                    found: levi.n(),
                });
            }
            for (parts, k) in restrict_key(key, levi.blocks()) {
                add_into(&mut out.terms, parts, c * k);
            }
        }
        Ok(out)
    }

    /// The involution `Σ_L (−1)^(k(L)−1) i_L r_L` over all standard Levi
    /// compositions of the degree. Requires a homogeneous element.
    ///
    /// Keys of degree above [`DIRECT_AUBERT_MAX_DEGREE`] go through
    /// [`VirtualRep::aubert_factored`]; below it the sum is taken literally.
    pub fn aubert(&self) -> Result<VirtualRep> {
        let n = self.check_aubert_input()?;
        if n > DIRECT_AUBERT_MAX_DEGREE {
            return self.aubert_factored();
        }
        self.aubert_by_definition()
    }

    fn check_aubert_input(&self) -> Result<u64> {
        self.require_standard()?;
        if self.is_zero() {
            return Ok(0);
        }
        self.homogeneous_degree().ok_or(Error::NotHomogeneous)
    }

    /// The involution as the literal sum over all `2^(n−1)` compositions.
    pub fn aubert_by_definition(&self) -> Result<VirtualRep> {
        let n = self.check_aubert_input()?;
        let mut out = Self::zero(self.side, Basis::Standard);
        for (key, &c) in &self.terms {
            for (ms, k) in aubert_key(key, n) {
                out.add_term(ms, c * k);
            }
        }
        Ok(out)
    }

    /// The involution through the antipode. In positive degree the sum
    /// `Σ_k (−1)^(k−1) m^(k) π^⊗k Δ^(k)` equals `−S`, and `S` is a ring
    /// morphism of this commutative ring, so a key with `k` segments maps to
    /// `(−1)^(k+1)` times the product of the images of its segments.
    pub fn aubert_factored(&self) -> Result<VirtualRep> {
        self.check_aubert_input()?;
        let mut out = Self::zero(self.side, Basis::Standard);
        for (key, &c) in &self.terms {
            let mut acc: BTreeMap<Multisegment, i64> = BTreeMap::from([(Multisegment::empty(), 1)]);
            for seg in key.segments() {
                let single = Multisegment::singleton(seg.clone());
                let image = aubert_key(&single, single.degree());
                let mut next = BTreeMap::new();
                for (a, &x) in &acc {
                    for (b, &y) in &image {
                        add_into(&mut next, a.union(b)?, x * y);
                    }
                }
                acc = next;
            }
            let sign = if key.len() % 2 == 1 || key.is_empty() {
                1
            } else {
                -1
            };
            for (ms, k) in acc {
                out.add_term(ms, sign * c * k);
            }
        }
        Ok(out)
    }

    /// The involution applied slice by slice.
    pub fn aubert_graded(&self) -> Result<VirtualRep> {
        let mut out = Self::zero(self.side, self.basis);
        for slice in self.slices().values() {
            out = out.try_add(&slice.aubert()?)?;
        }
        Ok(out)
    }

    /// Terms in display order: by degree, then number of segments, then key.
    pub fn display_terms(&self) -> Vec<(&Multisegment, i64)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, &c)| (m, c)).collect();
        v.sort_by(|(a, _), (b, _)| {
            (a.degree(), a.len())
                .cmp(&(b.degree(), b.len()))
                .then_with(|| a.cmp(b))
        });
        v
    }
}

fn check_key_side(side: Side, ms: &Multisegment) -> Result<()> {
    match ms.side() {
        Some(found) if found != side => Err(Error::SideMismatch {
            expected: side,
            found,
        }),
        _ => Ok(()),
    }
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (ms, c)) in self.display_terms().into_iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match (i, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{}({ms})", self.basis.tag())?;
        }
        Ok(())
    }
}

/// Integer combination of tensors of multisegment keys, one key per block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorRep {
    side: Side,
    arity: usize,
    terms: BTreeMap<Vec<Multisegment>, i64>,
}

impl TensorRep {
    pub fn zero(side: Side, arity: usize) -> Self {
        TensorRep {
            side,
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        side: Side,
        arity: usize,
        terms: impl IntoIterator<Item = (Vec<Multisegment>, i64)>,
    ) -> Self {
        let mut t = Self::zero(side, arity);
        for (k, c) in terms {
            debug_assert_eq!(k.len(), arity);
            add_into(&mut t.terms, k, c);
        }
        t
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Multisegment>, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &[Multisegment]) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, key: Vec<Multisegment>, coeff: i64) {
        add_into(&mut self.terms, key, coeff);
    }

    /// Slotwise product in the tensor power of the ring.
    pub fn mul(&self, other: &TensorRep) -> Result<TensorRep> {
        if self.side != other.side {
            return Err(Error::SideMismatch {
                expected: self.side,
                found: other.side,
            });
        }
        assert_eq!(self.arity, other.arity, "tensor arity mismatch");
        let mut out = Self::zero(self.side, self.arity);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let key = a
                    .iter()
                    .zip(b)
                    .map(|(p, q)| p.union(q))
                    .collect::<Result<Vec<_>>>()?;
                out.add_term(key, x * y);
            }
        }
        Ok(out)
    }

    /// Induction from the Levi: the product of all blocks.
    pub fn induce(&self) -> VirtualRep {
        let mut out = VirtualRep::zero(self.side, Basis::Standard);
        for (key, &c) in &self.terms {
            let ms = key
                .iter()
                .try_fold(Multisegment::empty(), |acc, m| acc.union(m))
                .expect("blocks share a side");
            out.add_term(ms, c);
        }
        out
    }

    /// Applies the comultiplication to block `slot`, raising the arity by one.
    pub fn comult_slot(&self, slot: usize) -> TensorRep {
        let mut out = Self::zero(self.side, self.arity + 1);
        for (key, &c) in &self.terms {
            for ((l, r), k) in comult_key(&key[slot]) {
                let mut nk = Vec::with_capacity(self.arity + 1);
                nk.extend_from_slice(&key[..slot]);
                nk.push(l);
                nk.push(r);
                nk.extend_from_slice(&key[slot + 1..]);
                out.add_term(nk, c * k);
            }
        }
        out
    }
}

impl fmt::Display for TensorRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (key, &c)) in self.terms.iter().enumerate() {
            match (i, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            for (j, ms) in key.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ⊗ ")?;
                }
                if ms.is_empty() {
                    f.write_str("1")?;
                } else {
                    write!(f, "Std({ms})")?;
                }
            }
        }
        Ok(())
    }
}

/// Jacquet restriction of one essentially square-integrable factor.
///
/// Zero unless every block is a multiple of the per-exponent degree;
/// otherwise one tensor whose blocks are consecutive sub-segments, highest
/// exponents first.
pub fn restrict_esci(segment: &Segment, levi: &LeviComposition) -> Result<TensorRep> {
    if levi.n() != segment.degree() {
        return Err(Error::DegreeMismatch {
            expected: segment.degree(),
            found: levi.n(),
        });
    }
    let mut out = TensorRep::zero(segment.side(), levi.blocks().len());
    if let Some(pieces) = esci_pieces(segment, levi.blocks()) {
        let key = pieces
            .into_iter()
            .map(|p| p.map(Multisegment::singleton).unwrap_or_default());
        out.add_term(key.collect(), 1);
    }
    Ok(out)
}

/// The pieces of [`restrict_esci`], or `None` when the restriction is zero.
pub(crate) fn esci_pieces(segment: &Segment, blocks: &[u64]) -> Option<Vec<Option<Segment>>> {
    let unit = segment.unit_degree();
    if blocks.iter().any(|b| b % unit != 0) {
        return None;
    }
    let counts: Vec<u64> = blocks.iter().map(|b| b / unit).collect();
    Some(segment.split_top_first(&counts))
}

/// Comultiplication of one standard key, as the product over its segments of
/// `Σ_k top_k ⊗ rest`.
pub(crate) fn comult_key(key: &Multisegment) -> BTreeMap<(Multisegment, Multisegment), i64> {
    let mut acc: BTreeMap<(Multisegment, Multisegment), i64> =
        BTreeMap::from([((Multisegment::empty(), Multisegment::empty()), 1)]);
    for seg in key.segments() {
        let mut next = BTreeMap::new();
        for ((l, r), c) in &acc {
            for top in 0..=seg.len() {
                let pieces = seg.split_top_first(&[top, seg.len() - top]);
                let nl = match &pieces[0] {
                    Some(p) => l
                        .union(&Multisegment::singleton(p.clone()))
                        .expect("same side"),
                    None => l.clone(),
                };
                let nr = match &pieces[1] {
                    Some(p) => r
                        .union(&Multisegment::singleton(p.clone()))
                        .expect("same side"),
                    None => r.clone(),
                };
                add_into(&mut next, (nl, nr), *c);
            }
        }
        acc = next;
    }
    acc
}

/// `r_L` on one key: the iterated comultiplication sliced at the block
/// degrees. Each segment is cut into consecutive pieces, highest exponents
/// first, one piece per block; the blocks must be filled exactly.
pub(crate) fn restrict_key(key: &Multisegment, blocks: &[u64]) -> BTreeMap<Vec<Multisegment>, i64> {
    struct Walk<'a> {
        segments: &'a [Segment],
        out: BTreeMap<Vec<Multisegment>, i64>,
    }

    impl Walk<'_> {
        fn segment(&mut self, idx: usize, caps: &mut [u64], parts: &mut Vec<Vec<Segment>>) {
            let Some(seg) = self.segments.get(idx) else {
                if caps.iter().all(|&c| c == 0) {
                    let key = parts
                        .iter()
                        .map(|p| Multisegment::new(p.clone()).expect("same side"))
                        .collect();
                    add_into(&mut self.out, key, 1);
                }
                return;
            };
            let mut counts = vec![0u64; caps.len()];
            self.distribute(idx, seg, 0, seg.len(), &mut counts, caps, parts);
        }

        #[allow(clippy::too_many_arguments)]
        fn distribute(
            &mut self,
            idx: usize,
            seg: &Segment,
            block: usize,
            left: u64,
            counts: &mut [u64],
            caps: &mut [u64],
            parts: &mut Vec<Vec<Segment>>,
        ) {
            let unit = seg.unit_degree();
            if block + 1 == caps.len() {
                if left * unit > caps[block] {
                    return;
                }
                counts[block] = left;
                let pieces = seg.split_top_first(counts);
                for (j, p) in pieces.iter().enumerate() {
                    caps[j] -= counts[j] * unit;
                    if let Some(p) = p {
                        parts[j].push(p.clone());
                    }
                }
                self.segment(idx + 1, caps, parts);
                for (j, p) in pieces.iter().enumerate() {
                    caps[j] += counts[j] * unit;
                    if p.is_some() {
                        parts[j].pop();
                    }
                }
                return;
            }
            let most = left.min(caps[block] / unit);
            for c in 0..=most {
                counts[block] = c;
                self.distribute(idx, seg, block + 1, left - c, counts, caps, parts);
            }
        }
    }

    if key.degree() != blocks.iter().sum::<u64>() || blocks.is_empty() {
        return BTreeMap::new();
    }
    let mut walk = Walk {
        segments: key.segments(),
        out: BTreeMap::new(),
    };
    let mut caps = blocks.to_vec();
    let mut parts = vec![Vec::new(); blocks.len()];
    walk.segment(0, &mut caps, &mut parts);
    walk.out
}

fn aubert_key(key: &Multisegment, n: u64) -> BTreeMap<Multisegment, i64> {
    let mut out = BTreeMap::new();
    if n == 0 {
        out.insert(key.clone(), 1);
        return out;
    }
    for levi in LeviComposition::all(n) {
        let sign = if levi.blocks().len() % 2 == 1 { 1 } else { -1 };
        for (parts, c) in restrict_key(key, levi.blocks()) {
            let ms = parts
                .iter()
                .try_fold(Multisegment::empty(), |acc, m| acc.union(m))
                .expect("same side");
            add_into(&mut out, ms, sign * c);
        }
    }
    out
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

    fn ms(segs: &[(i64, i64)]) -> Multisegment {
        segs.iter().map(|&(a, b)| f(a, b)).collect()
    }

    fn std(segs: &[(i64, i64)]) -> VirtualRep {
        VirtualRep::std(Side::F, ms(segs)).unwrap()
    }

    fn levi(b: &[u64]) -> LeviComposition {
        LeviComposition::new(b.to_vec()).unwrap()
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            std(&[(0, 1)]).mul(&std(&[(2, 2)])).unwrap(),
            std(&[(0, 1), (2, 2)])
        );
        let sigma1 = std(&[(0, 5), (1, 8), (3, 6), (4, 9)]);
        assert_eq!(
            std(&[(0, 5)]).mul(&std(&[(1, 8), (3, 6), (4, 9)])).unwrap(),
            sigma1
        );
        let unit = VirtualRep::unit(Side::F);
        assert_eq!(sigma1.mul(&unit).unwrap(), sigma1);
    }

    #[test]
    fn mul_rejects_irreducible_and_mixed_sides() {
        let irr = VirtualRep::irr(Side::F, ms(&[(0, 0)])).unwrap();
        assert_eq!(irr.mul(&irr).unwrap_err(), Error::BasisMismatch("Std"));
        let d = VirtualRep::unit(Side::D);
        assert!(matches!(
            std(&[(0, 0)]).mul(&d),
            Err(Error::SideMismatch { .. })
        ));
    }

    #[test]
    fn restrict_esci_examples() {
        let t = restrict_esci(&f(0, 1), &levi(&[1, 1])).unwrap();
        assert_eq!(t.terms().len(), 1);
        assert_eq!(t.coefficient(&[ms(&[(1, 1)]), ms(&[(0, 0)])]), 1);

        let ctx = AlgebraContext::new(2, [("tau", 2, Some(1))]).unwrap();
        let s = make_segment(&ctx, "tau", Side::F, 0, 2).unwrap();
        assert!(restrict_esci(&s, &levi(&[1, 3])).unwrap().is_zero());
        assert_eq!(restrict_esci(&s, &levi(&[2, 2])).unwrap().terms().len(), 1);

        let whole = restrict_esci(&f(3, 7), &levi(&[5])).unwrap();
        assert_eq!(whole.coefficient(&[ms(&[(3, 7)])]), 1);
        assert!(matches!(
            restrict_esci(&f(0, 1), &levi(&[3])),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn comult_examples() {
        let e = Multisegment::empty;
        let c = std(&[(0, 1)]).comult().unwrap();
        let expected = TensorRep::from_terms(
            Side::F,
            2,
            [
                (vec![e(), ms(&[(0, 1)])], 1),
                (vec![ms(&[(1, 1)]), ms(&[(0, 0)])], 1),
                (vec![ms(&[(0, 1)]), e()], 1),
            ],
        );
        assert_eq!(c, expected);

        let c = std(&[(0, 0)]).comult().unwrap();
        assert_eq!(c.terms().len(), 2);

        let x = std(&[(0, 0)]).comult().unwrap();
        let y = std(&[(1, 1)]).comult().unwrap();
        let xy = std(&[(0, 0), (1, 1)]).comult().unwrap();
        assert_eq!(xy.terms().len(), 4);
        assert_eq!(x.mul(&y).unwrap(), xy);
    }

    #[test]
    fn jacquet_restrict_examples() {
        let r = std(&[(0, 0), (1, 1)])
            .jacquet_restrict(&levi(&[1, 1]))
            .unwrap();
        let expected = TensorRep::from_terms(
            Side::F,
            2,
            [
                (vec![ms(&[(0, 0)]), ms(&[(1, 1)])], 1),
                (vec![ms(&[(1, 1)]), ms(&[(0, 0)])], 1),
            ],
        );
        assert_eq!(r, expected);
        let r = std(&[(0, 1)]).jacquet_restrict(&levi(&[1, 1])).unwrap();
        assert_eq!(
            r,
            TensorRep::from_terms(Side::F, 2, [(vec![ms(&[(1, 1)]), ms(&[(0, 0)])], 1)])
        );
        let x = std(&[(0, 2), (1, 3)]);
        assert_eq!(x.jacquet_restrict(&levi(&[6])).unwrap().induce(), x);
        assert!(x.jacquet_restrict(&levi(&[2, 2])).is_err());
    }

    #[test]
    fn aubert_examples() {
        let x = std(&[(0, 1)]);
        let dx = x.aubert().unwrap();
        assert_eq!(dx, std(&[(0, 1)]).try_sub(&std(&[(0, 0), (1, 1)])).unwrap());
        assert_eq!(
            std(&[(0, 0), (1, 1)]).aubert().unwrap(),
            std(&[(0, 0), (1, 1)]).scale(-1)
        );
        assert_eq!(dx.aubert().unwrap(), x);
        let mixed = std(&[(0, 0)]).try_add(&std(&[(0, 1)])).unwrap();
        assert_eq!(mixed.aubert().unwrap_err(), Error::NotHomogeneous);
        assert_eq!(
            mixed.aubert_graded().unwrap(),
            std(&[(0, 0)])
                .try_add(&std(&[(0, 1)]))
                .unwrap()
                .try_sub(&std(&[(0, 0), (1, 1)]))
                .unwrap()
        );
    }

    #[test]
    fn display_order() {
        let v = std(&[(0, 1)]).try_sub(&std(&[(0, 0), (1, 1)])).unwrap();
        assert_eq!(v.to_string(), "Std(rho[0..1]) - Std(rho[0..0],rho[1..1])");
        assert_eq!(
            v.scale(-2).to_string(),
            "-2*Std(rho[0..1]) + 2*Std(rho[0..0],rho[1..1])"
        );
        assert_eq!(VirtualRep::zero(Side::F, Basis::Standard).to_string(), "0");
        assert_eq!(VirtualRep::unit(Side::F).to_string(), "Std()");
    }
}
