//! Standard Levi compositions, the shuffle sets `W(L₁, L₂)` and the
//! geometric lemma.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::multiseg::Multisegment;
use crate::ring::{esci_pieces, TensorRep};
use crate::segment::Segment;

/// Ordered block sizes of a standard Levi subgroup of `GL(n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LeviComposition {
    blocks: Vec<u64>,
}

impl LeviComposition {
    pub fn new(blocks: Vec<u64>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidComposition("no blocks".into()));
        }
        if blocks.contains(&0) {
            return Err(Error::InvalidComposition("zero block".into()));
        }
        Ok(LeviComposition { blocks })
    }

    /// The trivial Levi `(n)`.
    pub fn whole(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn n(&self) -> u64 {
        self.blocks.iter().sum()
    }

    /// The sections as 0-based index ranges.
    pub fn sections(&self) -> Vec<Range<usize>> {
        let mut start = 0usize;
        self.blocks
            .iter()
            .map(|&b| {
                let r = start..start + b as usize;
                start = r.end;
                r
            })
            .collect()
    }

    /// All `2^(n−1)` compositions of `n`, in lexicographic order.
    pub fn all(n: u64) -> Vec<LeviComposition> {
        fn rec(rest: u64, cur: &mut Vec<u64>, out: &mut Vec<LeviComposition>) {
            if rest == 0 {
                out.push(LeviComposition {
                    blocks: cur.clone(),
                });
                return;
            }
            for b in 1..=rest {
                cur.push(b);
                rec(rest - b, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }

    pub fn scaled(&self, d: u64) -> LeviComposition {
        LeviComposition {
            blocks: self.blocks.iter().map(|b| b * d).collect(),
        }
    }

    /// Divides every block by `d`.
    pub fn divided(&self, d: u64) -> Result<LeviComposition> {
        if d == 0 || self.blocks.iter().any(|b| b % d != 0) {
            return Err(Error::NotDivisible(d));
        }
        Ok(LeviComposition {
            blocks: self.blocks.iter().map(|b| b / d).collect(),
        })
    }
}

impl fmt::Display for LeviComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A permutation of `{1..n}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockPermutation {
    images: Vec<usize>,
}

impl BlockPermutation {
    pub fn identity(n: usize) -> Self {
        BlockPermutation {
            images: (0..n).collect(),
        }
    }

    /// From one-line notation `[w(1), …, w(n)]`, 1-based.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &x in one_line {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidComposition(format!(
                    "{one_line:?} is not a permutation"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(BlockPermutation {
            images: one_line.iter().map(|x| x - 1).collect(),
        })
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// 0-based image.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn inverse(&self) -> BlockPermutation {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        BlockPermutation { images: inv }
    }
}

impl fmt::Display for BlockPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn check_same_n(l1: &LeviComposition, l2: &LeviComposition) -> Result<()> {
    if l1.n() != l2.n() {
        return Err(Error::DegreeMismatch {
            expected: l1.n(),
            found: l2.n(),
        });
    }
    Ok(())
}

/// `W(L₁, L₂)`: permutations increasing on every `L₁`-section whose inverse
/// is increasing on every `L₂`-section. Sorted by one-line notation.
pub fn shuffle_set(l1: &LeviComposition, l2: &LeviComposition) -> Result<Vec<BlockPermutation>> {
    check_same_n(l1, l2)?;
    let n = l1.n() as usize;
    let sec1: Vec<usize> = section_ids(l1, n);
    let sections2 = l2.sections();
    // w⁻¹ increasing on an L₂-section means its positions are filled in order,
    // so each step only chooses which L₂-section receives the next element.
    let mut next_free: Vec<usize> = sections2.iter().map(|r| r.start).collect();
    let mut images = vec![0usize; n];
    let mut out = Vec::new();

    fn rec(
        x: usize,
        n: usize,
        sec1: &[usize],
        sections2: &[Range<usize>],
        next_free: &mut [usize],
        images: &mut [usize],
        out: &mut Vec<BlockPermutation>,
    ) {
        if x == n {
            out.push(BlockPermutation {
                images: images.to_vec(),
            });
            return;
        }
        for j in 0..sections2.len() {
            let y = next_free[j];
            if y == sections2[j].end {
                continue;
            }
            if x > 0 && sec1[x - 1] == sec1[x] && images[x - 1] > y {
                continue;
            }
            images[x] = y;
            next_free[j] += 1;
            rec(x + 1, n, sec1, sections2, next_free, images, out);
            next_free[j] -= 1;
        }
    }

    rec(
        0,
        n,
        &sec1,
        &sections2,
        &mut next_free,
        &mut images,
        &mut out,
    );
    out.sort();
    Ok(out)
}

fn section_ids(l: &LeviComposition, n: usize) -> Vec<usize> {
    let mut ids = vec![0; n];
    for (i, r) in l.sections().into_iter().enumerate() {
        for x in r {
            ids[x] = i;
        }
    }
    ids
}

/// `c[i][j] = |w(A_i) ∩ B_j|` for the sections `A_i` of `L₁` and `B_j` of
/// `L₂`. Row `i` gives the blocks of `L₁ ∩ L₂^w` inside block `i`; column
/// `j` gives the blocks of `^wL₁ ∩ L₂` inside block `j`.
pub fn intersection_matrix(
    w: &BlockPermutation,
    l1: &LeviComposition,
    l2: &LeviComposition,
) -> Vec<Vec<u64>> {
    let sec2 = section_ids(l2, l1.n() as usize);
    matrix_of(w, &l1.sections(), &sec2, l2.blocks().len())
}

fn matrix_of(
    w: &BlockPermutation,
    sec1: &[Range<usize>],
    sec2: &[usize],
    k2: usize,
) -> Vec<Vec<u64>> {
    sec1.iter()
        .map(|a| {
            let mut row = vec![0u64; k2];
            for x in a.clone() {
                row[sec2[w.apply(x)]] += 1;
            }
            row
        })
        .collect()
}

/// The standard inclusion `t : W(L'₁, L'₂) → W(L₁, L₂)` permuting the
/// consecutive `d`-blocks of `{1..rd}` by `τ'` and keeping the order inside
/// each block: `x = ad − b ↦ τ'(a)d − b`.
pub fn block_embed(tau: &BlockPermutation, d: usize) -> BlockPermutation {
    let r = tau.len();
    let mut images = vec![0usize; r * d];
    for x in 1..=r * d {
        let a = x.div_ceil(d);
        let b = a * d - x;
        images[x - 1] = (tau.apply(a - 1) + 1) * d - b - 1;
    }
    BlockPermutation { images }
}

/// `W(L₁, L₂)_d`: the shuffles for which every block of `^wL₁ ∩ L₂` has size
/// divisible by `d`.
pub fn shuffle_set_d(
    l1: &LeviComposition,
    l2: &LeviComposition,
    d: u64,
) -> Result<Vec<BlockPermutation>> {
    l1.divided(d)?;
    l2.divided(d)?;
    Ok(shuffle_set(l1, l2)?
        .into_iter()
        .filter(|w| {
            intersection_matrix(w, l1, l2)
                .iter()
                .flatten()
                .all(|c| c % d == 0)
        })
        .collect())
}

/// `r_{L₂} i_{L₁}(σ₁ ⊗ … ⊗ σ_k)` by the geometric lemma:
/// `Σ_{w ∈ W(L₁,L₂)} i_{^wL₁ ∩ L₂}((r_{L₁ ∩ L₂^w} σ)^w)`, each inner
/// restriction being that of a single segment.
pub fn geometric_lemma(
    l1: &LeviComposition,
    l2: &LeviComposition,
    factors: &[Segment],
) -> Result<TensorRep> {
    check_same_n(l1, l2)?;
    if factors.len() != l1.blocks().len()
        || factors
            .iter()
            .zip(l1.blocks())
            .any(|(s, &b)| s.degree() != b)
    {
        let found = factors.iter().map(Segment::degree).sum();
        return Err(Error::DegreeMismatch {
            expected: l1.n(),
            found,
        });
    }
    let side = factors[0].side();
    let k2 = l2.blocks().len();
    let mut out = TensorRep::zero(side, k2);
    let sec1 = l1.sections();
    let sec2 = section_ids(l2, l1.n() as usize);
    'shuffles: for w in shuffle_set(l1, l2)? {
        let c = matrix_of(&w, &sec1, &sec2, k2);
        let mut slots: Vec<Vec<Segment>> = vec![Vec::new(); k2];
        for (sigma, row) in factors.iter().zip(&c) {
            let cols: Vec<usize> = (0..k2).filter(|&j| row[j] > 0).collect();
            let blocks: Vec<u64> = cols.iter().map(|&j| row[j]).collect();
            let Some(pieces) = esci_pieces(sigma, &blocks) else {
                continue 'shuffles;
            };
            // the w-action moves piece number m to its L₂ block
            for (piece, &j) in pieces.into_iter().zip(&cols) {
                slots[j].extend(piece);
            }
        }
        let key = slots
            .into_iter()
            .map(Multisegment::new)
            .collect::<Result<Vec<_>>>()?;
        out.add_term(key, 1);
    }
    Ok(out)
}

/// The geometric lemma applied to a standard key, with `L₁` given by the
/// degrees of its segments in canonical order.
pub fn geometric_lemma_key(key: &Multisegment, l2: &LeviComposition) -> Result<TensorRep> {
    let l1 = LeviComposition::new(key.segments().iter().map(Segment::degree).collect())?;
    geometric_lemma(&l1, l2, key.segments())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::{AlgebraContext, Side};
    use crate::ring::VirtualRep;
    use crate::segment::make_segment;

    fn levi(b: &[u64]) -> LeviComposition {
        LeviComposition::new(b.to_vec()).unwrap()
    }

    fn perm(one_line: &[usize]) -> BlockPermutation {
        BlockPermutation::from_one_line(one_line).unwrap()
    }

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
    fn compositions() {
        assert_eq!(LeviComposition::all(4).len(), 8);
        assert_eq!(LeviComposition::all(1), vec![levi(&[1])]);
        assert!(LeviComposition::new(vec![]).is_err());
        assert!(LeviComposition::new(vec![1, 0]).is_err());
        assert_eq!(levi(&[2, 4]).divided(2).unwrap(), levi(&[1, 2]));
        assert_eq!(
            levi(&[2, 3]).divided(2).unwrap_err(),
            Error::NotDivisible(2)
        );
        assert_eq!(levi(&[1, 2]).sections(), vec![0..1, 1..3]);
    }

    #[test]
    fn shuffle_set_examples() {
        let w = shuffle_set(&levi(&[1, 1]), &levi(&[1, 1])).unwrap();
        assert_eq!(w, vec![perm(&[1, 2]), perm(&[2, 1])]);
        assert_eq!(
            shuffle_set(&levi(&[2]), &levi(&[1, 1])).unwrap(),
            vec![perm(&[1, 2])]
        );
        assert_eq!(
            shuffle_set(&levi(&[1, 1]), &levi(&[2])).unwrap(),
            vec![perm(&[1, 2])]
        );
        assert!(shuffle_set(&levi(&[1]), &levi(&[2])).is_err());
    }

    #[test]
    fn shuffle_set_full_torus_is_symmetric_group() {
        for n in 1..=6u64 {
            let torus = levi(&vec![1; n as usize]);
            let count = shuffle_set(&torus, &torus).unwrap().len() as u64;
            assert_eq!(count, (1..=n).product::<u64>());
        }
    }

    #[test]
    fn shuffles_satisfy_both_monotonicity_conditions() {
        let (l1, l2) = (levi(&[2, 1, 3]), levi(&[3, 3]));
        for w in shuffle_set(&l1, &l2).unwrap() {
            let winv = w.inverse();
            for r in l1.sections() {
                assert!(r
                    .clone()
                    .zip(r.clone().skip(1))
                    .all(|(x, y)| w.apply(x) < w.apply(y)));
            }
            for r in l2.sections() {
                assert!(r
                    .clone()
                    .zip(r.clone().skip(1))
                    .all(|(x, y)| winv.apply(x) < winv.apply(y)));
            }
        }
    }

    #[test]
    fn block_embed_examples() {
        assert_eq!(block_embed(&perm(&[2, 1]), 2).one_line(), vec![3, 4, 1, 2]);
        assert_eq!(
            block_embed(&BlockPermutation::identity(3), 3),
            BlockPermutation::identity(9)
        );
        let cycle = perm(&[2, 3, 1]);
        assert_eq!(block_embed(&cycle, 1), cycle);
    }

    #[test]
    fn shuffle_set_d_examples() {
        let wd = shuffle_set_d(&levi(&[2, 2]), &levi(&[2, 2]), 2).unwrap();
        assert_eq!(wd.len(), 2);
        let embedded: Vec<_> = shuffle_set(&levi(&[1, 1]), &levi(&[1, 1]))
            .unwrap()
            .iter()
            .map(|w| block_embed(w, 2))
            .collect();
        assert_eq!(wd, embedded);
        assert_eq!(
            shuffle_set_d(&levi(&[4]), &levi(&[2, 2]), 2).unwrap().len(),
            1
        );
        assert_eq!(
            shuffle_set_d(&levi(&[1, 2]), &levi(&[2, 1]), 1).unwrap(),
            shuffle_set(&levi(&[1, 2]), &levi(&[2, 1])).unwrap()
        );
        assert_eq!(
            shuffle_set_d(&levi(&[1, 3]), &levi(&[4]), 2).unwrap_err(),
            Error::NotDivisible(2)
        );
    }

    #[test]
    fn geometric_lemma_examples() {
        let t = geometric_lemma(&levi(&[1, 1]), &levi(&[1, 1]), &[f(0, 0), f(1, 1)]).unwrap();
        let expected = TensorRep::from_terms(
            Side::F,
            2,
            [
                (vec![ms(&[(0, 0)]), ms(&[(1, 1)])], 1),
                (vec![ms(&[(1, 1)]), ms(&[(0, 0)])], 1),
            ],
        );
        assert_eq!(t, expected);

        let t = geometric_lemma(&levi(&[2]), &levi(&[1, 1]), &[f(0, 1)]).unwrap();
        assert_eq!(
            t,
            TensorRep::from_terms(Side::F, 2, [(vec![ms(&[(1, 1)]), ms(&[(0, 0)])], 1)])
        );

        let key = ms(&[(0, 2), (1, 1), (3, 4)]);
        let t = geometric_lemma_key(&key, &levi(&[6])).unwrap();
        assert_eq!(t.induce(), VirtualRep::std(Side::F, key).unwrap());
    }

    #[test]
    fn geometric_lemma_matches_iterated_comultiplication() {
        let key = ms(&[(0, 1), (1, 2), (2, 2)]);
        let x = VirtualRep::std(Side::F, key.clone()).unwrap();
        for l2 in LeviComposition::all(5) {
            assert_eq!(
                geometric_lemma_key(&key, &l2).unwrap(),
                x.jacquet_restrict(&l2).unwrap()
            );
        }
    }
}
