//! Property suites run by `jlring check`.
//!
//! Exhaustive properties range over every key of bounded degree whose
//! exponents lie in the window `[0, n − 1]`, `n` being the degree bound;
//! the Hopf suite narrows this to `[0, 3]`, its shuffle sums being the
//! costliest.
//! Sampled properties draw keys with exponents in `[−8, 8]` from a ChaCha
//! stream seeded by `--seed`, so reruns are byte-identical.

use std::collections::BTreeSet;

use jlring::enumerate::{keys_up_to_degree, segment_support_multisegments, segments_in_window};
use jlring::fait::Fait;
use jlring::weyl::{geometric_lemma_key, intersection_matrix};
use jlring::{
    block_embed, decompose_standard, express_irreducible, leq, segment_support_provider,
    shuffle_set, shuffle_set_d, AlgebraContext, BlockPermutation, Family, LeviComposition,
    Multisegment, Segment, Side, TransferContext, VirtualRep,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::expr::round_trips;
use crate::report::Check;
use crate::scenario::Scenario;

pub const SUITES: [&str; 6] = [
    "hopf",
    "involution",
    "transfer",
    "order",
    "conjecture",
    "weyl",
];

const SAMPLE_LO: i64 = -8;
const SAMPLE_HI: i64 = 8;
const SAMPLES: usize = 200;
const ORDER_SAMPLES: usize = 500;

pub fn default_max_degree(suite: &str) -> u64 {
    match suite {
        "hopf" => 6,
        "involution" | "order" | "conjecture" => 5,
        _ => 4,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl std::fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "unknown suite `{}` (expected one of: {})",
            self.0,
            SUITES.join(", ")
        )
    }
}

impl std::error::Error for UnknownSuite {}

pub fn run_suite(
    name: &str,
    scenario: &Scenario,
    seed: u64,
    max_degree: u64,
) -> Result<Vec<Check>, UnknownSuite> {
    let mut run = Run {
        ctx: scenario.ctx(),
        rng: ChaCha8Rng::seed_from_u64(seed),
        n: max_degree,
        checks: Vec::new(),
        emitted: Prop::new("parse/print round trip of every emitted expression"),
    };
    match name {
        "hopf" => run.hopf(),
        "involution" => run.involution(),
        "transfer" => run.transfer(),
        "order" => run.order(),
        "conjecture" => run.conjecture(),
        "weyl" => run.weyl(),
        _ => return Err(UnknownSuite(name.to_string())),
    }
    let mut emitted = std::mem::replace(&mut run.emitted, Prop::new(""));
    if emitted.cases == 0 {
        emitted.note = Some("this suite emits no expressions".into());
    }
    run.checks.push(emitted.finish());
    Ok(run.checks)
}

struct Prop {
    name: String,
    cases: u64,
    counterexample: Option<String>,
    note: Option<String>,
}

impl Prop {
    fn new(name: impl Into<String>) -> Self {
        Prop {
            name: name.into(),
            cases: 0,
            counterexample: None,
            note: None,
        }
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(what());
        }
    }

    fn outcome(&mut self, r: jlring::Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.case(ok, what),
            Err(e) => self.case(false, || format!("{}: {e}", what())),
        }
    }

    fn finish(self) -> Check {
        Check {
            passed: self.counterexample.is_none(),
            property: self.name,
            cases: self.cases,
            counterexample: self.counterexample,
            note: self.note,
        }
    }
}

struct Run<'a> {
    ctx: &'a AlgebraContext,
    rng: ChaCha8Rng,
    n: u64,
    checks: Vec<Check>,
    emitted: Prop,
}

fn std_rep(ms: &Multisegment) -> VirtualRep {
    let side = ms.side().unwrap_or(Side::F);
    VirtualRep::std(side, ms.clone()).expect("key side")
}

const HOPF_WINDOW_HI: i64 = 3;

fn window_keys(family: &Family, side: Side, n: u64) -> Vec<Multisegment> {
    window_keys_in(family, side, n, n.saturating_sub(1) as i64)
}

fn window_keys_in(family: &Family, side: Side, n: u64, hi: i64) -> Vec<Multisegment> {
    keys_up_to_degree(&segments_in_window(family, side, 0, hi, n), n)
}

fn unit_degree(family: &Family, side: Side) -> u64 {
    Segment::new(family.clone(), side, 0, 1)
        .expect("family has this side")
        .degree()
}

fn random_key(rng: &mut ChaCha8Rng, family: &Family, side: Side, n: u64) -> Multisegment {
    let unit = unit_degree(family, side);
    let mut remaining = rng.gen_range(unit..=n.max(unit));
    let mut segs = Vec::new();
    while remaining >= unit {
        let len = rng.gen_range(1..=remaining / unit);
        let start = rng.gen_range(SAMPLE_LO..=SAMPLE_HI);
        segs.push(Segment::new(family.clone(), side, start, len).expect("valid segment"));
        remaining -= len * unit;
    }
    Multisegment::new(segs).expect("one side")
}

impl Run<'_> {
    fn emit(&mut self, x: &VirtualRep) {
        let ctx = self.ctx;
        self.emitted.case(round_trips(x, ctx), || x.to_string());
    }

    fn push(&mut self, p: Prop) {
        self.checks.push(p.finish());
    }

    fn skipped(&mut self, name: impl Into<String>, why: &str) {
        let mut p = Prop::new(name);
        p.note = Some(format!("skipped: {why}"));
        self.push(p);
    }

    fn f_family(&self) -> Family {
        self.ctx.families()[0].clone()
    }

    fn d_family(&self) -> Option<Family> {
        self.ctx.families().iter().find(|f| f.has_d_side()).cloned()
    }

    fn sides(&self) -> Vec<(Side, Family)> {
        let mut v = vec![(Side::F, self.f_family())];
        v.extend(self.d_family().map(|f| (Side::D, f)));
        v
    }

    fn hopf(&mut self) {
        let n = self.n;
        for (side, fam) in self.sides() {
            let keys = window_keys_in(&fam, side, n, HOPF_WINDOW_HI.min(n as i64 - 1));
            let window = format!("exponents in [0,{}]", HOPF_WINDOW_HI.min(n as i64 - 1));
            let tag = format!("{side}-keys of `{}` of degree <= {n}, {window}", fam.name());

            let mut coassoc = Prop::new(format!("coassociativity (c⊗1)c = (1⊗c)c on {tag}"));
            let mut lemma = Prop::new(format!(
                "geometric lemma equals iterated comultiplication at every composition, on {tag}"
            ));
            for key in &keys {
                let x = std_rep(key);
                coassoc.outcome(
                    x.comult().map(|c| c.comult_slot(0) == c.comult_slot(1)),
                    || x.to_string(),
                );
                for l2 in LeviComposition::all(key.degree()) {
                    lemma.outcome(
                        geometric_lemma_key(key, &l2)
                            .and_then(|g| Ok(g == x.jacquet_restrict(&l2)?)),
                        || format!("{x} restricted to {l2}"),
                    );
                }
            }
            self.push(coassoc);
            self.push(lemma);

            let mut mult = Prop::new(format!(
                "c(x·y) = c(x)·c(y) on {side}-keys of `{}` with deg x + deg y <= {n}, {window}",
                fam.name()
            ));
            for a in &keys {
                for b in keys.iter().filter(|b| a.degree() + b.degree() <= n) {
                    let (x, y) = (std_rep(a), std_rep(b));
                    let r = x.mul(&y).and_then(|xy| {
                        self.emit(&xy);
                        Ok(xy.comult()? == x.comult()?.mul(&y.comult()?)?)
                    });
                    mult.outcome(r, || format!("x = {x}, y = {y}"));
                }
            }
            self.push(mult);

            let mut sampled = Prop::new(format!(
                "coassociativity and multiplicativity on {SAMPLES} sampled {side}-keys of degree <= {n}"
            ));
            for _ in 0..SAMPLES {
                let x = std_rep(&random_key(&mut self.rng, &fam, side, n));
                let y = std_rep(&random_key(&mut self.rng, &fam, side, n));
                let r = x.comult().and_then(|c| {
                    let xy = x.mul(&y)?;
                    self.emit(&xy);
                    Ok(c.comult_slot(0) == c.comult_slot(1)
                        && xy.comult()? == c.mul(&y.comult()?)?)
                });
                sampled.outcome(r, || format!("x = {x}, y = {y}"));
            }
            self.push(sampled);
        }
        if self.d_family().is_none() {
            self.skipped(
                "Hopf properties on D-keys",
                "no family has an inner-form line",
            );
        }
    }

    fn involution(&mut self) {
        let n = self.n;
        let prov = segment_support_provider();
        for (side, fam) in self.sides() {
            let keys = window_keys(&fam, side, n);
            let tag = format!("{side}-keys of `{}` of degree <= {n}", fam.name());
            let mut twice = Prop::new(format!("involution applied twice is the identity on {tag}"));
            let mut agree = Prop::new(format!(
                "defining sum agrees with the antipode factorization on {tag}"
            ));
            for key in &keys {
                let x = std_rep(key);
                let r = x.aubert().and_then(|y| {
                    self.emit(&y);
                    Ok(y.aubert()? == x)
                });
                twice.outcome(r, || x.to_string());
                agree.outcome(
                    x.aubert_by_definition()
                        .and_then(|a| Ok(a == x.aubert_factored()?)),
                    || x.to_string(),
                );
            }
            self.push(twice);
            self.push(agree);

            let mut irr = Prop::new(format!(
                "on {side}-segment supports of size <= {n} the involution maps each Irr to ±Irr"
            ));
            for k in 1..=n {
                for key in segment_support_multisegments(&fam, side, 0, k) {
                    let r = express_irreducible(&key, &prov).and_then(|x| {
                        let y = x.aubert()?;
                        let back = jlring::decomp::to_irreducible_basis(&y, &prov)?;
                        self.emit(&back);
                        Ok(back.len() == 1 && back.terms().values().all(|c| c.abs() == 1))
                    });
                    irr.outcome(r, || format!("Irr({key})"));
                }
            }
            self.push(irr);

            let mut sampled = Prop::new(format!(
                "involution applied twice on {SAMPLES} sampled {side}-keys"
            ));
            for _ in 0..SAMPLES {
                let x = std_rep(&random_key(&mut self.rng, &fam, side, n));
                sampled.outcome(x.aubert().and_then(|y| Ok(y.aubert()? == x)), || {
                    x.to_string()
                });
            }
            self.push(sampled);
        }

        let fam = self.f_family();
        let mut example = Prop::new(format!(
            "involution of Std({0}[0..1]) is Std({0}[0..1]) - Std({0}[0..0],{0}[1..1])",
            fam.name()
        ));
        let seg = |a: i64, len: u64| Segment::new(fam.clone(), Side::F, a, len).unwrap();
        let x = std_rep(&Multisegment::singleton(seg(0, 2)));
        let expected = x
            .try_sub(&std_rep(&[seg(0, 1), seg(1, 1)].into_iter().collect()))
            .expect("same side");
        example.outcome(x.aubert().map(|y| y == expected), || x.to_string());
        self.push(example);

        let compat_max = n.min(3);
        let name = format!("lj(aubert(jl(x))) = aubert(x) on D-keys of degree <= {compat_max}");
        let Some(dfam) = self.d_family() else {
            return self.skipped(name, "no family has an inner-form line");
        };
        let tc = TransferContext::new(self.ctx.clone());
        let mut compat = Prop::new(name);
        for key in window_keys(&dfam, Side::D, compat_max) {
            let x = std_rep(&key);
            compat.outcome(tc.check_involution_compat(&x), || x.to_string());
        }
        self.push(compat);
    }

    fn transfer(&mut self) {
        let n = self.n;
        let d = self.ctx.d();
        let tc = TransferContext::new(self.ctx.clone());
        let Some(dfam) = self.d_family() else {
            return self.skipped("transfer properties", "no family has an inner-form line");
        };
        let dkeys = window_keys(&dfam, Side::D, n);
        let tag = format!("D-keys of `{}` of degree <= {n}", dfam.name());

        let mut inverse = Prop::new(format!("lj(jl(x)) = x on {tag}"));
        let mut hopf = Prop::new(format!("c(jl x) = jl(c x) modulo the ideal, on {tag}"));
        for key in &dkeys {
            let x = std_rep(key);
            let r = tc.jl(&x).and_then(|y| {
                self.emit(&y);
                let back = tc.lj(&y)?;
                self.emit(&back);
                Ok(back == x)
            });
            inverse.outcome(r, || x.to_string());
            hopf.outcome(tc.check_hopf_compat(&x), || x.to_string());
        }
        self.push(inverse);
        self.push(hopf);

        let mut morphism = Prop::new(format!(
            "jl(x·y) = jl(x)·jl(y) on D-keys of `{}` with deg x + deg y <= {n}",
            dfam.name()
        ));
        for a in &dkeys {
            for b in dkeys.iter().filter(|b| a.degree() + b.degree() <= n) {
                let (x, y) = (std_rep(a), std_rep(b));
                let r = x
                    .mul(&y)
                    .and_then(|xy| Ok(tc.jl(&xy)? == tc.jl(&x)?.mul(&tc.jl(&y)?)?));
                morphism.outcome(r, || format!("x = {x}, y = {y}"));
            }
        }
        self.push(morphism);

        let slice = n - n % d;
        let ffam = self.f_family();
        let name = format!(
            "ker lj on the degree-{slice} F-slice of `{}` is spanned by the keys with a segment of degree not divisible by {d}",
            ffam.name()
        );
        if slice == 0 {
            self.skipped(name, "no positive degree <= n is divisible by d");
        } else {
            let mut kernel = Prop::new(name);
            let mut images = BTreeSet::new();
            for key in window_keys(&ffam, Side::F, slice)
                .iter()
                .filter(|k| k.degree() == slice)
            {
                let x = std_rep(key);
                let predicted_zero = key.segments().iter().any(|s| s.degree() % d != 0);
                let r = tc.lj(&x).map(|y| {
                    if y.is_zero() {
                        predicted_zero
                    } else {
                        // nonzero images must stay independent
                        !predicted_zero && y.len() == 1 && images.insert(y.terms().clone())
                    }
                });
                kernel.outcome(r, || x.to_string());
            }
            self.push(kernel);
        }

        let mut sampled = Prop::new(format!(
            "lj∘jl = id and jl multiplicative on {SAMPLES} sampled D-keys of degree <= {n}"
        ));
        for _ in 0..SAMPLES {
            let x = std_rep(&random_key(&mut self.rng, &dfam, Side::D, n));
            let y = std_rep(&random_key(&mut self.rng, &dfam, Side::D, n));
            let r = (|| {
                Ok(tc.lj(&tc.jl(&x)?)? == x
                    && tc.jl(&x.mul(&y)?)? == tc.jl(&x)?.mul(&tc.jl(&y)?)?)
            })();
            sampled.outcome(r, || format!("x = {x}, y = {y}"));
        }
        self.push(sampled);
    }

    fn order(&mut self) {
        let n = self.n;
        let tc = TransferContext::new(self.ctx.clone());
        let name = format!(
            "jl sends every elementary-operation edge to an ordered pair with a replayable certificate ({ORDER_SAMPLES} sampled D-multisegments of degree <= {n})"
        );
        match self.d_family() {
            None => self.skipped(name, "no family has an inner-form line"),
            Some(dfam) => {
                let mut all = Prop::new(format!(
                    "jl sends every elementary-operation edge to an ordered pair, on D-keys of `{}` of degree <= {n}",
                    dfam.name()
                ));
                let mut all_edges = 0u64;
                for b in window_keys(&dfam, Side::D, n) {
                    let r = (|| {
                        let jb = tc.key_d_to_f(&b)?;
                        for op in b.elementary_ops() {
                            all_edges += 1;
                            if !leq(&tc.key_d_to_f(&op.result)?, &jb)?.0 {
                                return Ok(false);
                            }
                        }
                        Ok(true)
                    })();
                    all.outcome(r, || b.to_string());
                }
                all.note = Some(format!("{all_edges} edges"));
                self.push(all);

                let mut mono = Prop::new(name);
                let mut edges = 0u64;
                for _ in 0..ORDER_SAMPLES {
                    let b = random_order_key(&mut self.rng, &dfam, n);
                    let r = (|| {
                        let jb = tc.key_d_to_f(&b)?;
                        self.emit(&std_rep(&jb));
                        for op in b.elementary_ops() {
                            edges += 1;
                            let ja = tc.key_d_to_f(&op.result)?;
                            let (ok, cert) = leq(&ja, &jb)?;
                            let replayed = cert.map(|c| c.replay(&jb)).transpose()?;
                            if !ok || replayed.as_ref() != Some(&ja) {
                                return Ok(false);
                            }
                        }
                        Ok(true)
                    })();
                    mono.outcome(r, || b.to_string());
                }
                mono.note = Some(format!("{edges} edges"));
                self.push(mono);
            }
        }

        let fait = Fait::new();
        let mut witness = Prop::new(format!(
            "the converse fails: jl(b) <= jl(a) but not b <= a, for a = {}, b = {}",
            fait.a, fait.b
        ));
        witness.outcome(
            fait.witness()
                .map(|w| w.images_related && !w.preimages_related),
            || "witness relations".to_string(),
        );
        self.push(witness);
    }

    fn conjecture(&mut self) {
        let n = self.n;
        let Some(dfam) = self.d_family() else {
            return self.skipped("conjecture cases", "no family has an inner-form line");
        };
        let tc = TransferContext::new(self.ctx.clone());
        let prov = segment_support_provider();
        let two: Vec<Multisegment> = window_keys(&dfam, Side::D, n)
            .into_iter()
            .filter(|k| k.len() == 2)
            .collect();
        let mut supports = Vec::new();
        for k in 1..=n {
            supports.extend(segment_support_multisegments(&dfam, Side::D, 0, k));
        }
        let ranges = [
            (format!("two-segment D-multisegments of degree <= {n}"), two),
            (format!("D-segment supports of size <= {n}"), supports),
        ];
        for (tag, keys) in ranges {
            let mut conj = Prop::new(format!("lj(Irr(M(x))) = Irr(x) on {tag}"));
            let mut image = Prop::new(format!(
                "jl(Irr(x)) has Irr(M(x)) with coefficient 1 and only lower companions, on {tag}"
            ));
            for key in &keys {
                conj.outcome(tc.check_conjecture_case(key, &prov), || key.to_string());
                let r = tc.check_jl_irreducible_image(key, &prov).map(|rep| {
                    self.emit(&rep.expansion);
                    rep.passed()
                });
                image.outcome(r, || key.to_string());
            }
            self.push(conj);
            self.push(image);
        }

        let mut sampled = Prop::new(format!(
            "lj(Irr(M(x))) = Irr(x) on {SAMPLES} sampled two-segment D-multisegments of degree <= {n}"
        ));
        let unit = unit_degree(&dfam, Side::D);
        if 2 * unit > n {
            sampled.note = Some("skipped: two segments exceed the degree bound".into());
        } else {
            for _ in 0..SAMPLES {
                let key = loop {
                    let k = random_key(&mut self.rng, &dfam, Side::D, n);
                    if k.len() == 2 {
                        break k;
                    }
                };
                let r = tc.check_conjecture_case(&key, &prov).and_then(|ok| {
                    let x = express_irreducible(&key, &prov)?;
                    self.emit(&x);
                    self.emit(&decompose_standard(&key, &prov)?);
                    Ok(ok)
                });
                sampled.outcome(r, || key.to_string());
            }
        }
        self.push(sampled);
    }

    fn weyl(&mut self) {
        let n = self.n;
        let mut bijection = Prop::new(format!(
            "block_embed maps W(L1,L2) bijectively onto W(dL1,dL2)_d for all compositions of r <= {n}, d in {{2,3}}"
        ));
        for d in [2u64, 3] {
            for r in 1..=n {
                let comps = LeviComposition::all(r);
                for l1 in &comps {
                    for l2 in &comps {
                        let res = (|| {
                            let small = shuffle_set(l1, l2)?;
                            let big = shuffle_set_d(&l1.scaled(d), &l2.scaled(d), d)?;
                            let image: BTreeSet<BlockPermutation> =
                                small.iter().map(|t| block_embed(t, d as usize)).collect();
                            Ok(image.len() == small.len()
                                && image == big.into_iter().collect::<BTreeSet<_>>())
                        })();
                        bijection.outcome(res, || format!("L1 = {l1}, L2 = {l2}, d = {d}"));
                    }
                }
            }
        }
        self.push(bijection);

        let mut tables = Prop::new(format!(
            "|W(L1,L2)| equals the number of integer matrices with row sums L1 and column sums L2, r <= {n}"
        ));
        let mut matrices = Prop::new(format!(
            "intersection matrices of W(L1,L2) are distinct with margins L1 and L2, r <= {n}"
        ));
        for r in 1..=n {
            let comps = LeviComposition::all(r);
            for l1 in &comps {
                for l2 in &comps {
                    let Ok(w) = shuffle_set(l1, l2) else {
                        tables.case(false, || format!("L1 = {l1}, L2 = {l2}"));
                        continue;
                    };
                    tables.case(
                        w.len() as u64 == contingency_tables(l1.blocks(), l2.blocks()),
                        || format!("L1 = {l1}, L2 = {l2}"),
                    );
                    let ms: BTreeSet<Vec<Vec<u64>>> =
                        w.iter().map(|w| intersection_matrix(w, l1, l2)).collect();
                    let margins = ms.iter().all(|m| {
                        m.iter()
                            .map(|row| row.iter().sum::<u64>())
                            .eq(l1.blocks().iter().copied())
                            && (0..l2.blocks().len())
                                .map(|j| m.iter().map(|row| row[j]).sum::<u64>())
                                .eq(l2.blocks().iter().copied())
                    });
                    matrices.case(ms.len() == w.len() && margins, || {
                        format!("L1 = {l1}, L2 = {l2}")
                    });
                }
            }
        }
        self.push(tables);
        self.push(matrices);

        let mut embed = Prop::new("block_embed([2,1], 2) = [3,4,1,2]");
        let tau = BlockPermutation::from_one_line(&[2, 1]).expect("permutation");
        embed.case(block_embed(&tau, 2).one_line() == [3, 4, 1, 2], || {
            block_embed(&tau, 2).to_string()
        });
        self.push(embed);

        let mut count = Prop::new("|W((2,2),(2,2))_2| = 2");
        let l = LeviComposition::new(vec![2, 2]).expect("composition");
        count.outcome(shuffle_set_d(&l, &l, 2).map(|w| w.len() == 2), || {
            "W((2,2),(2,2))_2".into()
        });
        self.push(count);
    }
}

/// Random D-multisegment, mostly on one line and started close together, so
/// that linked pairs are common.
fn random_order_key(rng: &mut ChaCha8Rng, family: &Family, n: u64) -> Multisegment {
    let unit = unit_degree(family, Side::D);
    let s = family.s().unwrap_or(1) as i64;
    let mut remaining = rng.gen_range(unit..=n.max(unit));
    let mut segs = Vec::new();
    while remaining >= unit {
        let len = rng.gen_range(1..=(remaining / unit).min(3));
        let shift = if rng.gen_bool(0.25) { 1 % s } else { 0 };
        let start = rng.gen_range(0..=3) * s + shift;
        segs.push(Segment::new(family.clone(), Side::D, start, len).expect("valid segment"));
        remaining -= len * unit;
    }
    Multisegment::new(segs).expect("one side")
}

/// Nonnegative integer matrices with the given row and column sums.
fn contingency_tables(rows: &[u64], cols: &[u64]) -> u64 {
    fn fill(rows: &[u64], cols: &mut Vec<u64>) -> u64 {
        let Some((&first, rest)) = rows.split_first() else {
            return u64::from(cols.iter().all(|&c| c == 0));
        };
        fn row(j: usize, left: u64, rest: &[u64], cols: &mut Vec<u64>) -> u64 {
            if j == cols.len() {
                return if left == 0 { fill(rest, cols) } else { 0 };
            }
            let mut total = 0;
            for v in 0..=left.min(cols[j]) {
                cols[j] -= v;
                total += row(j + 1, left - v, rest, cols);
                cols[j] += v;
            }
            total
        }
        row(0, first, rest, cols)
    }
    fill(rows, &mut cols.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contingency_examples() {
        assert_eq!(contingency_tables(&[2, 2], &[2, 2]), 3);
        assert_eq!(contingency_tables(&[1, 1], &[1, 1]), 2);
        assert_eq!(contingency_tables(&[3], &[1, 2]), 1);
    }

    #[test]
    fn unknown_suite() {
        let e = run_suite("nope", &Scenario::default(), 0, 3).unwrap_err();
        assert!(e.to_string().contains("nope"));
    }

    #[test]
    fn random_keys_respect_bounds() {
        let sc = Scenario::default();
        let fam = sc.ctx().families()[0].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let k = random_key(&mut rng, &fam, Side::D, 5);
            assert!((1..=5).contains(&k.degree()));
            assert_eq!(k.side(), Some(Side::D));
        }
    }
}
