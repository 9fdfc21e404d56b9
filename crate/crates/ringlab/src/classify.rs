//! Criteria matrices: every desk-decidable criterion of the six
//! characterization theorems, evaluated clause by clause with witnesses.
//!
//! Each criterion is decided against its own clause, never by forwarding to
//! another criterion, so the agreement of the verdicts inside one matrix is
//! a genuine mechanical check of the theorem. Quantifiers over ring elements
//! are evaluated exhaustively on finite rings, by closed-form number theory
//! on localized integer rings, and componentwise on products.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{
    annihilator, enumerate_ideals, ideal_generate, is_pure, is_reduced, is_regular, nilradical,
    quotient_ring, IdealRep, SlIdeal,
};
use crate::ring::{gcd_i64, RingElement, RingHandle, SemilocalCore};
use crate::spectrum::{
    ker_pi, localize, max_regular_ideals, primes, s_related, separating_pair, SpectrumGraph,
};
use crate::topology::{mask_points, RetractionOutcome, RetractionTarget, SpectralSpace, TopologyKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    True,
    False,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Element { value: RingElement },
    ElementPair { a: RingElement, b: RingElement },
    Prime { id: usize },
    PrimePair { a: usize, b: usize },
    PrimeUnderTwo { prime: usize, above_a: usize, above_b: usize },
    Ideal { ideal: String },
    IdealElement { ideal: String, value: RingElement },
    Classes { classes: Vec<Vec<usize>> },
    ClosedPair { a: Vec<usize>, b: Vec<usize> },
    Text { text: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Criterion {
    fn holds(id: &str, value: bool, witness: Option<Witness>) -> Criterion {
        Criterion {
            id: id.into(),
            verdict: if value { Verdict::True } else { Verdict::False },
            witness: if value { None } else { witness },
            note: None,
        }
    }

    fn na(id: &str, note: &str) -> Criterion {
        Criterion {
            id: id.into(),
            verdict: Verdict::NotApplicable,
            witness: None,
            note: Some(note.into()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriteriaMatrix {
    pub theorem: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub criteria: Vec<Criterion>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Consensus {
    Agreed(bool),
    Empty,
    Disagreement(Vec<(String, bool)>),
}

impl CriteriaMatrix {
    /// All applicable verdicts must be equal; this is the theorem under test.
    pub fn consensus(&self) -> Consensus {
        let applicable: Vec<(String, bool)> = self
            .criteria
            .iter()
            .filter_map(|c| match c.verdict {
                Verdict::True => Some((c.id.clone(), true)),
                Verdict::False => Some((c.id.clone(), false)),
                Verdict::NotApplicable => None,
            })
            .collect();
        match applicable.first() {
            None => Consensus::Empty,
            Some((_, first)) => {
                if applicable.iter().all(|(_, v)| v == first) {
                    Consensus::Agreed(*first)
                } else {
                    Consensus::Disagreement(applicable)
                }
            }
        }
    }

    fn zero_ring(theorem: &str) -> CriteriaMatrix {
        CriteriaMatrix {
            theorem: theorem.into(),
            note: Some("zero ring".into()),
            criteria: Vec::new(),
        }
    }
}

/// Outcome of a clause whose evaluation may be gated by a size cap.
enum Clause {
    Value(bool, Option<Witness>),
    NotApplicable(String),
}

impl Clause {
    fn criterion(self, id: &str) -> Criterion {
        match self {
            Clause::Value(v, w) => Criterion::holds(id, v, w),
            Clause::NotApplicable(note) => Criterion::na(id, &note),
        }
    }
}

fn space_of(ring: &RingHandle) -> Result<SpectralSpace> {
    Ok(primes(ring)?.to_space())
}

fn embed(ring: &RingHandle, factor: usize, w: &RingElement) -> RingElement {
    let factors = ring.product_factors().expect("product ring");
    RingElement::Tuple(
        factors
            .iter()
            .enumerate()
            .map(|(j, f)| if j == factor { w.clone() } else { f.zero() })
            .collect(),
    )
}

// ---------------------------------------------------------------------------
// finite-ring evaluation context: annihilator bitsets, units, idempotents
// ---------------------------------------------------------------------------

struct Fin {
    words: usize,
    ann: Vec<u64>,
    ann_count: Vec<u64>,
}

impl Fin {
    fn build(ring: &RingHandle) -> Fin {
        let core = ring.fin().expect("finite ring");
        let n = core.size;
        let words = (n as usize + 63) / 64;
        let mut ann = vec![0u64; n as usize * words];
        let mut ann_count = vec![0u64; n as usize];
        for f in 0..n {
            let row = &mut ann[f as usize * words..(f as usize + 1) * words];
            let mut count = 0;
            for a in 0..n {
                if core.mul(a, f) == 0 {
                    row[(a / 64) as usize] |= 1 << (a % 64);
                    count += 1;
                }
            }
            ann_count[f as usize] = count;
        }
        Fin {
            words,
            ann,
            ann_count,
        }
    }

    fn ann_row(&self, f: u64) -> &[u64] {
        &self.ann[f as usize * self.words..(f as usize + 1) * self.words]
    }

    fn in_ann(&self, f: u64, a: u64) -> bool {
        self.ann_row(f)[(a / 64) as usize] & (1 << (a % 64)) != 0
    }
}

fn mask_of(elements: &[u64], words: usize) -> Vec<u64> {
    let mut m = vec![0u64; words];
    for &x in elements {
        m[(x / 64) as usize] |= 1 << (x % 64);
    }
    m
}

fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

// ---------------------------------------------------------------------------
// semilocal scans over the canonical integer enumeration
// ---------------------------------------------------------------------------

fn sl_unit(c: &SemilocalCore, k: i64) -> bool {
    k != 0 && c.primes.iter().all(|&p| k.unsigned_abs() % p != 0)
}

/// First nonnegative integer `k` with `k` and `k - 1` both non-units.
fn sl_first_double_nonunit(c: &SemilocalCore) -> RingElement {
    let mut k = 0i64;
    loop {
        if !sl_unit(c, k) && !sl_unit(c, k - 1) {
            return RingElement::Frac { num: k, den: 1 };
        }
        k += 1;
    }
}

/// First non-unit integer `k >= 2`; the smallest localized prime.
fn sl_first_nonunit(c: &SemilocalCore) -> RingElement {
    RingElement::Frac {
        num: c.primes[0] as i64,
        den: 1,
    }
}

// ---------------------------------------------------------------------------
// shared clause evaluators
// ---------------------------------------------------------------------------

/// Whether every prime (optionally only the maximal ones) lies below a
/// unique maximal point of the spectrum.
fn unique_max_above(space: &SpectralSpace) -> (bool, Option<Witness>) {
    let maxes = space.maximal_points();
    for x in 0..space.n() {
        let over: Vec<usize> = maxes.iter().copied().filter(|&m| space.leq(x, m)).collect();
        if over.len() != 1 {
            return (
                false,
                Some(Witness::PrimeUnderTwo {
                    prime: x,
                    above_a: over.first().copied().unwrap_or(x),
                    above_b: over.get(1).copied().unwrap_or(x),
                }),
            );
        }
    }
    (true, None)
}

fn unique_min_below(space: &SpectralSpace) -> (bool, Option<Witness>) {
    unique_max_above(&space.hochster_dual())
}

/// `exists a in I with 1 - a in J`, i.e. `I + J` is the whole ring.
fn cosum_is_whole(
    ring: &RingHandle,
    i: &IdealRep,
    j: &IdealRep,
) -> Result<(bool, Option<RingElement>)> {
    if ring.fin().is_some() {
        let one = ring.one();
        for &a in i.elements().unwrap() {
            let a = RingElement::Int(a);
            let rest = ring.sub(&one, &a)?;
            if j.contains(ring, &rest) {
                return Ok((true, Some(a)));
            }
        }
        return Ok((false, None));
    }
    if ring.sl().is_some() {
        let kind = |rep: &IdealRep| match &rep.data {
            crate::ideal::IdealData::Semilocal(k) => k.clone(),
            _ => unreachable!("semilocal ideal"),
        };
        let (ki, kj) = (kind(i), kind(j));
        return Ok(match (ki, kj) {
            (SlIdeal::Unit, _) => (true, Some(RingElement::Frac { num: 1, den: 1 })),
            (_, SlIdeal::Unit) => (true, Some(RingElement::Frac { num: 0, den: 1 })),
            (SlIdeal::Zero, _) | (_, SlIdeal::Zero) => (false, None),
            (SlIdeal::Principal(d1), SlIdeal::Principal(d2)) => {
                if gcd_i64(d1 as i64, d2 as i64) != 1 {
                    (false, None)
                } else {
                    // a = d1 * (d1^{-1} mod d2) lies in (d1) with 1 - a in (d2)
                    let inv = (1..d2).find(|x| (d1 % d2 * x) % d2 == 1).unwrap();
                    (
                        true,
                        Some(RingElement::Frac {
                            num: (d1 * inv) as i64,
                            den: 1,
                        }),
                    )
                }
            }
        });
    }
    let factors = ring.product_factors().expect("product ring");
    let (pi, pj) = (i.parts().unwrap(), j.parts().unwrap());
    let mut parts = Vec::with_capacity(factors.len());
    for (f, (a, b)) in factors.iter().zip(pi.iter().zip(pj)) {
        let (ok, w) = cosum_is_whole(f, a, b)?;
        if !ok {
            return Ok((false, None));
        }
        parts.push(w.unwrap());
    }
    Ok((true, Some(RingElement::Tuple(parts))))
}

/// Smallest idempotent `e` with `e` in `I` and `1-e` in `J`.
fn idempotent_separating(
    ring: &RingHandle,
    i: &IdealRep,
    j: &IdealRep,
) -> Result<Option<RingElement>> {
    let one = ring.one();
    for e in ring.idempotents() {
        let co = ring.sub(&one, e)?;
        if i.contains(ring, e) && j.contains(ring, &co) {
            return Ok(Some(e.clone()));
        }
    }
    Ok(None)
}

/// `pi : A -> A_p` surjective, decided as: every element outside the prime
/// becomes invertible modulo the localization kernel.
fn localization_surjective(ring: &RingHandle, prime_id: usize) -> Result<(bool, Option<Witness>)> {
    if ring.fin().is_some() {
        let (local, map) = localize(ring, prime_id)?;
        let spec = primes(ring)?;
        let members = spec.points[prime_id].ideal.elements().unwrap().to_vec();
        for s in 0..ring.size().unwrap() {
            if members.binary_search(&s).is_ok() {
                continue;
            }
            let img = map.apply(&RingElement::Int(s))?;
            if !local.is_unit(&img)?.0 {
                return Ok((
                    false,
                    Some(Witness::Element {
                        value: RingElement::Int(s),
                    }),
                ));
            }
        }
        return Ok((true, None));
    }
    if let Some(c) = ring.sl() {
        if prime_id == 0 {
            // the zero prime: no integer maps onto 1/p
            return Ok((
                false,
                Some(Witness::Text {
                    text: format!("1/{} has no preimage", c.primes[0]),
                }),
            ));
        }
        let p = c.primes[prime_id - 1];
        match c.primes.iter().find(|&&q| q != p) {
            Some(q) => Ok((
                false,
                Some(Witness::Text {
                    text: format!("1/{q} has no preimage"),
                }),
            )),
            None => Ok((true, None)),
        }
    } else {
        let factors = ring.product_factors().expect("product ring");
        let mut offset = 0;
        for f in factors {
            let len = primes(f)?.len();
            if prime_id < offset + len {
                return localization_surjective(f, prime_id - offset);
            }
            offset += len;
        }
        Err(Error::Encoding(format!("no prime with id {prime_id}")))
    }
}

fn all_localizations_surjective(
    ring: &RingHandle,
    maximal_only: bool,
) -> Result<(bool, Option<Witness>)> {
    let spec = primes(ring)?;
    for p in &spec.points {
        if maximal_only && !p.maximal {
            continue;
        }
        let (ok, w) = localization_surjective(ring, p.id)?;
        if !ok {
            return Ok((ok, w));
        }
    }
    Ok((true, None))
}

/// Every element satisfies `f = f^2 g` for some `g`.
fn absolutely_flat_every(ring: &RingHandle) -> Result<(bool, Option<RingElement>)> {
    if let Some(core) = ring.fin() {
        for f in 0..core.size {
            let f2 = core.mul(f, f);
            if !(0..core.size).any(|g| core.mul(f2, g) == f) {
                return Ok((false, Some(RingElement::Int(f))));
            }
        }
        return Ok((true, None));
    }
    if let Some(c) = ring.sl() {
        // nonzero non-units have no quasi-inverse
        return Ok((false, Some(sl_first_nonunit(c))));
    }
    let factors = ring.product_factors().expect("product ring");
    for (i, f) in factors.iter().enumerate() {
        let (ok, w) = absolutely_flat_every(f)?;
        if !ok {
            return Ok((false, Some(embed(ring, i, &w.unwrap()))));
        }
    }
    Ok((true, None))
}

/// Every element is an idempotent plus a unit.
fn clean_every(ring: &RingHandle) -> Result<(bool, Option<RingElement>)> {
    if let Some(core) = ring.fin() {
        let idems = core.idempotents();
        for f in 0..core.size {
            let ok = idems
                .iter()
                .any(|&e| core.is_unit(core.sub(f, e)).is_some());
            if !ok {
                return Ok((false, Some(RingElement::Int(f))));
            }
        }
        return Ok((true, None));
    }
    if let Some(c) = ring.sl() {
        if c.primes.len() == 1 {
            return Ok((true, None));
        }
        return Ok((false, Some(sl_first_double_nonunit(c))));
    }
    let factors = ring.product_factors().expect("product ring");
    for (i, f) in factors.iter().enumerate() {
        let (ok, w) = clean_every(f)?;
        if !ok {
            return Ok((false, Some(embed(ring, i, &w.unwrap()))));
        }
    }
    Ok((true, None))
}

/// Exchange property: for each `f` some idempotent lies in `Af` with its
/// complement in `A(1-f)`.
fn exchange_every(ring: &RingHandle) -> Result<(bool, Option<RingElement>)> {
    if let Some(core) = ring.fin() {
        let idems = core.idempotents();
        for f in 0..core.size {
            let af: Vec<u64> = {
                let mut v: Vec<u64> = (0..core.size).map(|a| core.mul(a, f)).collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            let cf = core.sub(core.one(), f);
            let a1f: Vec<u64> = {
                let mut v: Vec<u64> = (0..core.size).map(|a| core.mul(a, cf)).collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            let ok = idems.iter().any(|&e| {
                af.binary_search(&e).is_ok()
                    && a1f.binary_search(&core.sub(core.one(), e)).is_ok()
            });
            if !ok {
                return Ok((false, Some(RingElement::Int(f))));
            }
        }
        return Ok((true, None));
    }
    if let Some(c) = ring.sl() {
        // with trivial idempotents the property needs f or 1-f invertible
        if c.primes.len() == 1 {
            return Ok((true, None));
        }
        return Ok((false, Some(sl_first_double_nonunit(c))));
    }
    let factors = ring.product_factors().expect("product ring");
    for (i, f) in factors.iter().enumerate() {
        let (ok, w) = exchange_every(f)?;
        if !ok {
            return Ok((false, Some(embed(ring, i, &w.unwrap()))));
        }
    }
    Ok((true, None))
}

/// For each `f` there are `g, h` with `(1+fg)(1+f'h) = 0`, `f' = 1-f`.
fn unit_one_plus_every(ring: &RingHandle) -> Result<(bool, Option<RingElement>)> {
    if let Some(core) = ring.fin() {
        let fin = Fin::build(ring);
        let one = core.one();
        for f in 0..core.size {
            let fprime = core.sub(one, f);
            let coset = |x: u64| -> Vec<u64> {
                let mut v: Vec<u64> = (0..core.size).map(|g| core.add(one, core.mul(x, g))).collect();
                v.sort_unstable();
                v.dedup();
                v
            };
            let g1 = coset(f);
            if g1.binary_search(&0).is_ok() {
                continue;
            }
            let g2 = coset(fprime);
            if g2.binary_search(&0).is_ok() {
                continue;
            }
            let g2_mask = mask_of(&g2, fin.words);
            let ok = g1.iter().any(|&x| intersects(fin.ann_row(x), &g2_mask));
            if !ok {
                return Ok((false, Some(RingElement::Int(f))));
            }
        }
        return Ok((true, None));
    }
    if let Some(c) = ring.sl() {
        // in a domain one of the two factors must vanish, so f or 1-f must
        // be invertible
        if c.primes.len() == 1 {
            return Ok((true, None));
        }
        return Ok((false, Some(sl_first_double_nonunit(c))));
    }
    let factors = ring.product_factors().expect("product ring");
    for (i, f) in factors.iter().enumerate() {
        let (ok, w) = unit_one_plus_every(f)?;
        if !ok {
            return Ok((false, Some(embed(ring, i, &w.unwrap()))));
        }
    }
    Ok((true, None))
}

/// Zero-divisor pairs are split by an idempotent: `f = fe`, `g = g(1-e)`.
fn purified_elementwise(ring: &RingHandle) -> Result<(bool, Option<(RingElement, RingElement)>)> {
    if let Some(core) = ring.fin() {
        let idems = core.idempotents();
        let one = core.one();
        for f in 0..core.size {
            for g in 0..core.size {
                if core.mul(f, g) != 0 {
                    continue;
                }
                let ok = idems.iter().any(|&e| {
                    core.mul(f, e) == f && core.mul(g, core.sub(one, e)) == g
                });
                if !ok {
                    return Ok((false, Some((RingElement::Int(f), RingElement::Int(g)))));
                }
            }
        }
        return Ok((true, None));
    }
    if ring.sl().is_some() {
        return Ok((true, None));
    }
    let factors = ring.product_factors().expect("product ring");
    for (i, f) in factors.iter().enumerate() {
        let (ok, w) = purified_elementwise(f)?;
        if !ok {
            let (a, b) = w.unwrap();
            return Ok((false, Some((embed(ring, i, &a), embed(ring, i, &b)))));
        }
    }
    Ok((true, None))
}

/// `Ann(f) + Ann(g) = Ann(fg)` for all pairs, decided by subgroup sizes.
fn ann_identity_every(ring: &RingHandle) -> Result<(bool, Option<(RingElement, RingElement)>)> {
    if let Some(core) = ring.fin() {
        let fin = Fin::build(ring);
        for f in 0..core.size {
            for g in f..core.size {
                let fg = core.mul(f, g);
                let inter = fin
                    .ann_row(f)
                    .iter()
                    .zip(fin.ann_row(g))
                    .map(|(x, y)| (x & y).count_ones() as u64)
                    .sum::<u64>();
                let sum_size = fin.ann_count[f as usize] * fin.ann_count[g as usize] / inter;
                if sum_size != fin.ann_count[fg as usize] {
                    return Ok((false, Some((RingElement::Int(f), RingElement::Int(g)))));
                }
            }
        }
        return Ok((true, None));
    }
    if ring.sl().is_some() {
        return Ok((true, None));
    }
    let factors = ring.product_factors().expect("product ring");
    for (i, f) in factors.iter().enumerate() {
        let (ok, w) = ann_identity_every(f)?;
        if !ok {
            let (a, b) = w.unwrap();
            return Ok((false, Some((embed(ring, i, &a), embed(ring, i, &b)))));
        }
    }
    Ok((true, None))
}

/// `fg = 0` implies `Ann(f) + Ann(g) = A`.
fn ann_cosum_on_zero_divisors(
    ring: &RingHandle,
) -> Result<(bool, Option<(RingElement, RingElement)>)> {
    if let Some(core) = ring.fin() {
        let fin = Fin::build(ring);
        let one = core.one();
        for f in 0..core.size {
            for g in 0..core.size {
                if core.mul(f, g) != 0 {
                    continue;
                }
                let ok = (0..core.size)
                    .filter(|&a| fin.in_ann(f, a))
                    .any(|a| fin.in_ann(g, core.sub(one, a)));
                if !ok {
                    return Ok((false, Some((RingElement::Int(f), RingElement::Int(g)))));
                }
            }
        }
        return Ok((true, None));
    }
    if ring.sl().is_some() {
        return Ok((true, None));
    }
    let factors = ring.product_factors().expect("product ring");
    for (i, f) in factors.iter().enumerate() {
        let (ok, w) = ann_cosum_on_zero_divisors(f)?;
        if !ok {
            let (a, b) = w.unwrap();
            return Ok((false, Some((embed(ring, i, &a), embed(ring, i, &b)))));
        }
    }
    Ok((true, None))
}

/// Every annihilator is a pure ideal.
fn ann_pure_every(ring: &RingHandle) -> Result<(bool, Option<RingElement>)> {
    if ring.fin().is_some() {
        let mut seen: Vec<Vec<u64>> = Vec::new();
        for f in ring.elements().unwrap() {
            let ann = annihilator(ring, &f)?;
            let elements = ann.elements().unwrap().to_vec();
            if seen.contains(&elements) {
                continue;
            }
            if !is_pure(ring, &ann)?.0 {
                return Ok((false, Some(f)));
            }
            seen.push(elements);
        }
        return Ok((true, None));
    }
    if ring.sl().is_some() {
        return Ok((true, None));
    }
    let factors = ring.product_factors().expect("product ring");
    for (i, f) in factors.iter().enumerate() {
        let (ok, w) = ann_pure_every(f)?;
        if !ok {
            return Ok((false, Some(embed(ring, i, &w.unwrap()))));
        }
    }
    Ok((true, None))
}

/// Every annihilator is a regular ideal.
fn ann_regular_every(ring: &RingHandle) -> Result<(bool, Option<RingElement>)> {
    if ring.fin().is_some() {
        let mut seen: Vec<Vec<u64>> = Vec::new();
        for f in ring.elements().unwrap() {
            let ann = annihilator(ring, &f)?;
            let elements = ann.elements().unwrap().to_vec();
            if seen.contains(&elements) {
                continue;
            }
            if !is_regular(ring, &ann)?.0 {
                return Ok((false, Some(f)));
            }
            seen.push(elements);
        }
        return Ok((true, None));
    }
    if ring.sl().is_some() {
        return Ok((true, None));
    }
    let factors = ring.product_factors().expect("product ring");
    for (i, f) in factors.iter().enumerate() {
        let (ok, w) = ann_regular_every(f)?;
        if !ok {
            return Ok((false, Some(embed(ring, i, &w.unwrap()))));
        }
    }
    Ok((true, None))
}

/// All localizations at primes (or maximals) are integral domains.
fn localizations_are_domains(
    ring: &RingHandle,
    maximal_only: bool,
) -> Result<(bool, Option<Witness>)> {
    if ring.fin().is_some() {
        let spec = primes(ring)?;
        for p in &spec.points {
            if maximal_only && !p.maximal {
                continue;
            }
            let (local, _) = localize(ring, p.id)?;
            let m = local.size().unwrap();
            for a in 1..m {
                for b in a..m {
                    if local
                        .mul(&RingElement::Int(a), &RingElement::Int(b))
                        .unwrap()
                        == RingElement::Int(0)
                    {
                        return Ok((false, Some(Witness::Prime { id: p.id })));
                    }
                }
            }
        }
        return Ok((true, None));
    }
    if ring.sl().is_some() {
        // every localization of a domain is a domain
        return Ok((true, None));
    }
    let factors = ring.product_factors().expect("product ring");
    for f in factors {
        let (ok, w) = localizations_are_domains(f, maximal_only)?;
        if !ok {
            return Ok((false, w));
        }
    }
    Ok((true, None))
}

/// Idempotents lift modulo every ideal (gated by the enumeration cap on
/// finite rings).
fn lifting_mod_each_ideal(ring: &RingHandle) -> Result<Clause> {
    if let Some(core) = ring.fin() {
        if core.size > ring.caps().ideal_enum_cap {
            return Ok(Clause::NotApplicable(format!(
                "ideal enumeration capped at {}",
                ring.caps().ideal_enum_cap
            )));
        }
        let idems = core.idempotents();
        for ideal in enumerate_ideals(ring)? {
            let members = ideal.elements().unwrap();
            for f in 0..core.size {
                let defect = core.sub(core.mul(f, f), f);
                if members.binary_search(&defect).is_err() {
                    continue;
                }
                let liftable = idems
                    .iter()
                    .any(|&e| members.binary_search(&core.sub(f, e)).is_ok());
                if !liftable {
                    return Ok(Clause::Value(
                        false,
                        Some(Witness::IdealElement {
                            ideal: ideal.describe(),
                            value: RingElement::Int(f),
                        }),
                    ));
                }
            }
        }
        return Ok(Clause::Value(true, None));
    }
    if let Some(c) = ring.sl() {
        if c.primes.len() == 1 {
            // every proper quotient is local, so lifts are trivial
            return Ok(Clause::Value(true, None));
        }
        let d = c.primes[0] * c.primes[1];
        // Z/d carries a nontrivial idempotent while A has only 0 and 1
        return Ok(Clause::Value(
            false,
            Some(Witness::Ideal {
                ideal: format!("({d})"),
            }),
        ));
    }
    let factors = ring.product_factors().expect("product ring");
    let mut gated = None;
    for f in factors {
        match lifting_mod_each_ideal(f)? {
            Clause::Value(false, w) => return Ok(Clause::Value(false, w)),
            Clause::Value(true, _) => {}
            Clause::NotApplicable(note) => gated = Some(note),
        }
    }
    Ok(match gated {
        Some(note) => Clause::NotApplicable(note),
        None => Clause::Value(true, None),
    })
}

/// Every pure ideal is regular (gated by the enumeration cap).
fn pure_implies_regular(ring: &RingHandle) -> Result<Clause> {
    if let Some(core) = ring.fin() {
        if core.size > ring.caps().ideal_enum_cap {
            return Ok(Clause::NotApplicable(format!(
                "ideal enumeration capped at {}",
                ring.caps().ideal_enum_cap
            )));
        }
        for ideal in enumerate_ideals(ring)? {
            if is_pure(ring, &ideal)?.0 && !is_regular(ring, &ideal)?.0 {
                return Ok(Clause::Value(
                    false,
                    Some(Witness::Ideal {
                        ideal: ideal.describe(),
                    }),
                ));
            }
        }
        return Ok(Clause::Value(true, None));
    }
    if ring.sl().is_some() {
        // pure ideals of the domain are the zero and unit ideals
        return Ok(Clause::Value(true, None));
    }
    let factors = ring.product_factors().expect("product ring");
    let mut gated = None;
    for f in factors {
        match pure_implies_regular(f)? {
            Clause::Value(false, w) => return Ok(Clause::Value(false, w)),
            Clause::Value(true, _) => {}
            Clause::NotApplicable(note) => gated = Some(note),
        }
    }
    Ok(match gated {
        Some(note) => Clause::NotApplicable(note),
        None => Clause::Value(true, None),
    })
}

/// Idempotents lift along every localization. On a finite ring the distinct
/// localizations are indexed by the nonempty sets of maximal ideals kept
/// alive, and their idempotents by subsets of those; each candidate lift is
/// checked through the kernel memberships.
fn lifting_along_localizations(ring: &RingHandle) -> Result<(bool, Option<Witness>)> {
    if ring.fin().is_some() {
        let spec = primes(ring)?;
        let k = spec.len();
        if k == 0 {
            return Ok((true, None));
        }
        let kernels: Vec<IdealRep> = (0..k)
            .map(|id| ker_pi(ring, id))
            .collect::<Result<_>>()?;
        let one = ring.one();
        // the primitive idempotent supported on each prime's local factor
        let all_prims = crate::spectrum::primitive_idempotents(ring)?;
        let prims: Vec<RingElement> = kernels
            .iter()
            .map(|kernel| {
                all_prims
                    .iter()
                    .find(|e| kernel.contains(ring, &ring.sub(&one, e).unwrap()))
                    .cloned()
                    .expect("each local factor carries a primitive idempotent")
            })
            .collect();
        for alive in 1u32..(1 << k) {
            for chosen in 0u32..(1 << k) {
                if chosen & !alive != 0 {
                    continue;
                }
                // candidate lift: the sum of the primitive idempotents of
                // the chosen factors
                let mut cand = ring.zero();
                for (i, e) in prims.iter().enumerate() {
                    if chosen & (1 << i) != 0 {
                        cand = ring.add(&cand, e)?;
                    }
                }
                let mut ok = true;
                for i in 0..k {
                    if alive & (1 << i) == 0 {
                        continue;
                    }
                    if chosen & (1 << i) != 0 {
                        let co = ring.sub(&one, &cand)?;
                        if !kernels[i].contains(ring, &co) {
                            ok = false;
                            break;
                        }
                    } else if !kernels[i].contains(ring, &cand) {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    return Ok((
                        false,
                        Some(Witness::Text {
                            text: format!("no lift for factor set {alive:b}, idempotent {chosen:b}"),
                        }),
                    ));
                }
            }
        }
        return Ok((true, None));
    }
    if ring.sl().is_some() {
        // localizations of a domain are domains with trivial idempotents
        return Ok((true, None));
    }
    let factors = ring.product_factors().expect("product ring");
    for f in factors {
        let (ok, w) = lifting_along_localizations(f)?;
        if !ok {
            return Ok((false, w));
        }
    }
    Ok((true, None))
}

/// The clopen pieces cut out by idempotents form a basis of the induced
/// topology on the chosen subspace. `keep_outside` selects `D(e)` (the
/// primes avoiding `e`) for the maximal side and `V(e)` for the minimal.
fn clopen_basis(
    ring: &RingHandle,
    spec: &SpectrumGraph,
    subspace: &[usize],
    keep_outside: bool,
    topology: TopologyKind,
) -> Result<(bool, Option<Witness>)> {
    let space = spec.to_space();
    let rel_opens = space.relative_opens(subspace, topology);
    let mut basis: Vec<u64> = Vec::new();
    for e in ring.idempotents() {
        let mut mask = 0u64;
        for (slot, &pid) in subspace.iter().enumerate() {
            let inside = spec.points[pid].ideal.contains(ring, e);
            if inside != keep_outside {
                mask |= 1 << slot;
            }
        }
        basis.push(mask);
    }
    for &open in &rel_opens {
        let mut covered = 0u64;
        for &b in &basis {
            if b & !open == 0 {
                covered |= b;
            }
        }
        if covered != open {
            return Ok((
                false,
                Some(Witness::ClosedPair {
                    a: mask_points(open)
                        .into_iter()
                        .map(|slot| subspace[slot])
                        .collect(),
                    b: Vec::new(),
                }),
            ));
        }
    }
    Ok((true, None))
}

/// The map sending a maximal ideal to the regular ideal generated by its
/// idempotents, checked to be a homeomorphism onto the space of max-regular
/// ideals.
fn pierce_homeomorphism(ring: &RingHandle) -> Result<(bool, Option<Witness>)> {
    let spec = primes(ring)?;
    let space = spec.to_space();
    let max_ids = spec.max_ids();
    let regs = max_regular_ideals(ring)?;
    // image of each maximal ideal
    let mut images: Vec<usize> = Vec::with_capacity(max_ids.len());
    for &m in &max_ids {
        let gens: Vec<RingElement> = ring
            .idempotents()
            .iter()
            .filter(|e| spec.points[m].ideal.contains(ring, e))
            .cloned()
            .collect();
        let image = ideal_generate(ring, &gens)?;
        match regs.iter().position(|r| *r == image) {
            Some(idx) => images.push(idx),
            None => {
                return Ok((
                    false,
                    Some(Witness::Prime { id: m }),
                ))
            }
        }
    }
    // bijectivity
    let mut seen = vec![false; regs.len()];
    for (slot, &img) in images.iter().enumerate() {
        if seen[img] {
            return Ok((false, Some(Witness::Prime { id: max_ids[slot] })));
        }
        seen[img] = true;
    }
    if seen.iter().any(|s| !s) {
        return Ok((
            false,
            Some(Witness::Text {
                text: "a max-regular ideal is not hit".into(),
            }),
        ));
    }
    // topology of the max-regular space: opens generated by the pieces cut
    // out by idempotents
    let mut basis: Vec<u64> = Vec::new();
    for e in ring.idempotents() {
        let mut mask = 0u64;
        for (idx, reg) in regs.iter().enumerate() {
            if !reg.contains(ring, e) {
                mask |= 1 << idx;
            }
        }
        basis.push(mask);
    }
    let mut sp_opens: Vec<u64> = vec![0];
    loop {
        let mut added = false;
        let snapshot = sp_opens.clone();
        for &o in &snapshot {
            for &b in &basis {
                let u = o | b;
                if !sp_opens.contains(&u) {
                    sp_opens.push(u);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    sp_opens.sort_unstable();
    // relative opens of the maximal subspace, pushed through the bijection
    let rel_opens = space.relative_opens(&max_ids, TopologyKind::Zariski);
    let mut pushed: Vec<u64> = rel_opens
        .iter()
        .map(|&o| {
            let mut m = 0u64;
            for (slot, &img) in images.iter().enumerate() {
                if o & (1 << slot) != 0 {
                    m |= 1 << img;
                }
            }
            m
        })
        .collect();
    pushed.sort_unstable();
    pushed.dedup();
    Ok((
        pushed == sp_opens,
        (pushed != sp_opens).then(|| Witness::Text {
            text: "open sets do not correspond".into(),
        }),
    ))
}

/// Connected components equal the closures of the chosen side's points.
fn components_match(
    ring: &RingHandle,
    max_side: bool,
) -> Result<(bool, Option<Witness>)> {
    let spec = primes(ring)?;
    let space = spec.to_space();
    let mut components: Vec<Vec<usize>> = space.connected_components();
    components.iter_mut().for_each(|c| c.sort_unstable());
    components.sort();
    let mut closures: Vec<Vec<usize>> = if max_side {
        spec.max_ids()
            .into_iter()
            .map(|m| mask_points(space.down_set(m)))
            .collect()
    } else {
        spec.min_ids()
            .into_iter()
            .map(|p| mask_points(space.up_set(p)))
            .collect()
    };
    closures.sort();
    closures.dedup();
    Ok((
        components == closures,
        (components != closures).then(|| Witness::Classes {
            classes: components.clone(),
        }),
    ))
}

// ---------------------------------------------------------------------------
// the six criteria operations
// ---------------------------------------------------------------------------

pub fn criteria_zero_dimensional(ring: &RingHandle) -> Result<CriteriaMatrix> {
    let theorem = "zero_dimensional";
    if ring.is_zero_ring() {
        return Ok(CriteriaMatrix::zero_ring(theorem));
    }
    let spec = primes(ring)?;
    let space = spec.to_space();
    let mut criteria = Vec::new();

    // (i) every prime is maximal
    let chain = (0..spec.len())
        .flat_map(|i| (0..spec.len()).map(move |j| (i, j)))
        .find(|&(i, j)| i != j && spec.le[i][j]);
    criteria.push(Criterion::holds(
        "i",
        chain.is_none(),
        chain.map(|(i, j)| Witness::PrimePair { a: i, b: j }),
    ));

    // (ii) distinct primes are separated by a zero product
    let mut sep = (true, None);
    'pairs: for i in 0..spec.len() {
        for j in 0..spec.len() {
            if i != j && separating_pair(ring, i, j)?.is_none() {
                sep = (false, Some(Witness::PrimePair { a: i, b: j }));
                break 'pairs;
            }
        }
    }
    criteria.push(Criterion::holds("ii", sep.0, sep.1));

    // (iii)-(vi) topology coincidence and separation
    let zar = space.separation(TopologyKind::Zariski);
    criteria.push(Criterion::holds(
        "iii",
        zar.hausdorff,
        zar.hausdorff_witness
            .map(|(a, b)| Witness::PrimePair { a, b }),
    ));
    let z_opens = space.opens(TopologyKind::Zariski);
    criteria.push(Criterion::holds(
        "iv",
        z_opens == space.opens(TopologyKind::Patch),
        None,
    ));
    let flat = space.separation(TopologyKind::Flat);
    criteria.push(Criterion::holds(
        "v",
        flat.hausdorff,
        flat.hausdorff_witness
            .map(|(a, b)| Witness::PrimePair { a, b }),
    ));
    criteria.push(Criterion::holds(
        "vi",
        z_opens == space.opens(TopologyKind::Flat),
        None,
    ));

    // (vii) canonical maps onto localizations are surjective
    let (ok, w) = all_localizations_surjective(ring, false)?;
    criteria.push(Criterion::holds("vii", ok, w));

    // (viii) the reduced quotient is absolutely flat
    let nil = nilradical(ring);
    let (reduced_quotient, _) = quotient_ring(ring, &nil)?;
    let (ok, w) = absolutely_flat_every(&reduced_quotient)?;
    criteria.push(Criterion::holds(
        "viii",
        ok,
        w.map(|value| Witness::Element { value }),
    ));

    // (ix) quantifies over all flat epimorphisms out of the ring
    criteria.push(Criterion::na(
        "ix",
        "quantifies over all flat ring epimorphisms",
    ));

    // (x) singleton tensor-relation classes
    let mut x = (true, None);
    'outer: for i in 0..spec.len() {
        for j in 0..spec.len() {
            if i != j && s_related(ring, i, j)? {
                x = (false, Some(Witness::PrimePair { a: i, b: j }));
                break 'outer;
            }
        }
    }
    criteria.push(Criterion::holds("x", x.0, x.1));

    Ok(CriteriaMatrix {
        theorem: theorem.into(),
        note: None,
        criteria,
    })
}

pub fn criteria_gelfand(ring: &RingHandle) -> Result<CriteriaMatrix> {
    let theorem = "gelfand";
    if ring.is_zero_ring() {
        return Ok(CriteriaMatrix::zero_ring(theorem));
    }
    let spec = primes(ring)?;
    let space = spec.to_space();
    let max_ids = spec.max_ids();
    let mut criteria = Vec::new();

    // (i) unique maximal over each prime
    let (ok, w) = unique_max_above(&space);
    criteria.push(Criterion::holds("i", ok, w));

    // (ii) relation classes of maximal points are their flat closures
    let r_classes = space.r_classes();
    let mut ii = (true, None);
    for &m in &max_ids {
        let class = r_classes
            .iter()
            .find(|c| c.contains(&m))
            .expect("partition covers the space");
        if *class != mask_points(space.down_set(m)) {
            ii = (false, Some(Witness::Prime { id: m }));
            break;
        }
    }
    criteria.push(Criterion::holds("ii", ii.0, ii.1));

    // (iii) distinct maximals separated by a zero product
    let mut iii = (true, None);
    'iii: for (a, &m) in max_ids.iter().enumerate() {
        for &n in max_ids.iter().skip(a + 1) {
            if separating_pair(ring, m, n)?.is_none() {
                iii = (false, Some(Witness::PrimePair { a: m, b: n }));
                break 'iii;
            }
        }
    }
    criteria.push(Criterion::holds("iii", iii.0, iii.1));

    // (iv) maps onto localizations at maximals are surjective
    let (ok, w) = all_localizations_surjective(ring, true)?;
    criteria.push(Criterion::holds("iv", ok, w));

    // (v) Zariski retraction onto the maximal points
    let v = match space.retraction(RetractionTarget::Max) {
        RetractionOutcome::Map { continuous, .. } => (continuous, None),
        RetractionOutcome::NoUnique { point, targets } => (
            false,
            Some(Witness::PrimeUnderTwo {
                prime: point,
                above_a: targets.first().copied().unwrap_or(point),
                above_b: targets.get(1).copied().unwrap_or(point),
            }),
        ),
    };
    criteria.push(Criterion::holds("v", v.0, v.1));

    // (vi) Zariski normality
    let sep = space.separation(TopologyKind::Zariski);
    criteria.push(Criterion::holds(
        "vi",
        sep.normal,
        sep.normal_witness
            .map(|(a, b)| Witness::ClosedPair { a, b }),
    ));

    // (vii) elementwise unit clause
    let (ok, w) = unit_one_plus_every(ring)?;
    criteria.push(Criterion::holds(
        "vii",
        ok,
        w.map(|value| Witness::Element { value }),
    ));

    // (viii) flat closures of maximals are Zariski closed
    let mut viii = (true, None);
    for &m in &max_ids {
        if !space.is_closed(space.down_set(m), TopologyKind::Zariski) {
            viii = (false, Some(Witness::Prime { id: m }));
            break;
        }
    }
    criteria.push(Criterion::holds("viii", viii.0, viii.1));

    // (ix) localization kernels of distinct maximals sum to the whole ring
    let mut ix = (true, None);
    'ix: for (a, &m) in max_ids.iter().enumerate() {
        for &n in max_ids.iter().skip(a + 1) {
            let km = ker_pi(ring, m)?;
            let kn = ker_pi(ring, n)?;
            if !cosum_is_whole(ring, &km, &kn)?.0 {
                ix = (false, Some(Witness::PrimePair { a: m, b: n }));
                break 'ix;
            }
        }
    }
    criteria.push(Criterion::holds("ix", ix.0, ix.1));

    // (x) an element vanishing at one maximal and 1 at the other
    let mut x = (true, None);
    'x: for (a, &m) in max_ids.iter().enumerate() {
        for &n in max_ids.iter().skip(a + 1) {
            let km = ker_pi(ring, m)?;
            let kn = ker_pi(ring, n)?;
            if cosum_is_whole(ring, &km, &kn)?.1.is_none() {
                x = (false, Some(Witness::PrimePair { a: m, b: n }));
                break 'x;
            }
        }
    }
    criteria.push(Criterion::holds("x", x.0, x.1));

    // (xi) maximal points map homeomorphically onto the relation quotient
    criteria.push(Criterion::holds(
        "xi",
        space.subspace_to_quotient_homeo(&max_ids, &r_classes, TopologyKind::Zariski),
        None,
    ));

    Ok(CriteriaMatrix {
        theorem: theorem.into(),
        note: None,
        criteria,
    })
}

pub fn criteria_clean(ring: &RingHandle) -> Result<CriteriaMatrix> {
    let theorem = "clean";
    if ring.is_zero_ring() {
        return Ok(CriteriaMatrix::zero_ring(theorem));
    }
    let spec = primes(ring)?;
    let space = spec.to_space();
    let max_ids = spec.max_ids();
    let gelfand = unique_max_above(&space);
    let mut criteria = Vec::new();

    // (i) local-global solvability is exercised by the gluing construction
    criteria.push(Criterion::na(
        "i",
        "exercised by the solver's glue-and-verify property",
    ));

    // (ii) every element is an idempotent plus a unit
    let (ok, w) = clean_every(ring)?;
    criteria.push(Criterion::holds(
        "ii",
        ok,
        w.map(|value| Witness::Element { value }),
    ));

    // (iii) idempotent separating distinct maximals
    let mut iii = (true, None);
    'iii: for (a, &m) in max_ids.iter().enumerate() {
        for &n in max_ids.iter().skip(a + 1) {
            if idempotent_separating(ring, &spec.points[m].ideal, &spec.points[n].ideal)?.is_none()
            {
                iii = (false, Some(Witness::PrimePair { a: m, b: n }));
                break 'iii;
            }
        }
    }
    criteria.push(Criterion::holds("iii", iii.0, iii.1));

    // (iv) Gelfand with totally disconnected maximal subspace
    let max_space = space.subspace(&max_ids);
    let totally_disconnected = max_space
        .connected_components()
        .iter()
        .all(|c| c.len() == 1);
    criteria.push(Criterion::holds(
        "iv",
        gelfand.0 && totally_disconnected,
        gelfand.1.clone(),
    ));

    // (v) Gelfand with regular localization kernels
    let mut v = (gelfand.0, gelfand.1.clone());
    if v.0 {
        for &m in &max_ids {
            let k = ker_pi(ring, m)?;
            if !is_regular(ring, &k)?.0 {
                v = (false, Some(Witness::Prime { id: m }));
                break;
            }
        }
    }
    criteria.push(Criterion::holds("v", v.0, v.1));

    // (vi) components are the flat closures of maximal points
    let (ok, w) = components_match(ring, true)?;
    criteria.push(Criterion::holds("vi", ok, w));

    // (vii) exchange property
    let (ok, w) = exchange_every(ring)?;
    criteria.push(Criterion::holds(
        "vii",
        ok,
        w.map(|value| Witness::Element { value }),
    ));

    // (viii) idempotents lift modulo each ideal
    criteria.push(lifting_mod_each_ideal(ring)?.criterion("viii"));

    // (ix) idempotent separating the localization kernels
    let mut ix = (true, None);
    'ix: for (a, &m) in max_ids.iter().enumerate() {
        for &n in max_ids.iter().skip(a + 1) {
            let km = ker_pi(ring, m)?;
            let kn = ker_pi(ring, n)?;
            if idempotent_separating(ring, &km, &kn)?.is_none() {
                ix = (false, Some(Witness::PrimePair { a: m, b: n }));
                break 'ix;
            }
        }
    }
    criteria.push(Criterion::holds("ix", ix.0, ix.1));

    // (x) idempotent clopens form a basis of the maximal subspace
    let (ok, w) = clopen_basis(ring, &spec, &max_ids, true, TopologyKind::Zariski)?;
    criteria.push(Criterion::holds("x", ok, w));

    // (xi) Gelfand and every pure ideal is regular
    let xi = if !gelfand.0 {
        Clause::Value(false, gelfand.1.clone())
    } else {
        pure_implies_regular(ring)?
    };
    criteria.push(xi.criterion("xi"));

    // (xii) maximals map homeomorphically onto the max-regular space
    let (ok, w) = pierce_homeomorphism(ring)?;
    criteria.push(Criterion::holds("xii", ok, w));

    Ok(CriteriaMatrix {
        theorem: theorem.into(),
        note: None,
        criteria,
    })
}

pub fn criteria_mp(ring: &RingHandle) -> Result<CriteriaMatrix> {
    let theorem = "mp";
    if ring.is_zero_ring() {
        return Ok(CriteriaMatrix::zero_ring(theorem));
    }
    let spec = primes(ring)?;
    let space = spec.to_space();
    let min_ids = spec.min_ids();
    let mut criteria = Vec::new();

    // (i) unique minimal under each prime
    let (ok, w) = unique_min_below(&space);
    criteria.push(Criterion::holds("i", ok, w));

    // (ii) distinct minimal primes span the whole ring
    let mut ii = (true, None);
    'ii: for (a, &p) in min_ids.iter().enumerate() {
        for &q in min_ids.iter().skip(a + 1) {
            if !cosum_is_whole(ring, &spec.points[p].ideal, &spec.points[q].ideal)?.0 {
                ii = (false, Some(Witness::PrimePair { a: p, b: q }));
                break 'ii;
            }
        }
    }
    criteria.push(Criterion::holds("ii", ii.0, ii.1));

    // (iii) the reduced quotient has the property
    let nil = nilradical(ring);
    let (reduced_quotient, _) = quotient_ring(ring, &nil)?;
    let q_space = space_of(&reduced_quotient)?;
    let (ok, w) = unique_min_below(&q_space);
    criteria.push(Criterion::holds("iii", ok, w));

    // (iv) relation classes of minimal points are their Zariski closures
    let r_classes = space.r_classes();
    let mut iv = (true, None);
    for &p in &min_ids {
        let class = r_classes
            .iter()
            .find(|c| c.contains(&p))
            .expect("partition covers the space");
        if *class != mask_points(space.up_set(p)) {
            iv = (false, Some(Witness::Prime { id: p }));
            break;
        }
    }
    criteria.push(Criterion::holds("iv", iv.0, iv.1));

    // (v) flat retraction onto the minimal points
    let v = match space.retraction(RetractionTarget::Min) {
        RetractionOutcome::Map { continuous, .. } => (continuous, None),
        RetractionOutcome::NoUnique { point, targets } => (
            false,
            Some(Witness::PrimeUnderTwo {
                prime: point,
                above_a: targets.first().copied().unwrap_or(point),
                above_b: targets.get(1).copied().unwrap_or(point),
            }),
        ),
    };
    criteria.push(Criterion::holds("v", v.0, v.1));

    // (vi) flat normality
    let sep = space.separation(TopologyKind::Flat);
    criteria.push(Criterion::holds(
        "vi",
        sep.normal,
        sep.normal_witness
            .map(|(a, b)| Witness::ClosedPair { a, b }),
    ));

    // (vii) Zariski closures of minimal points are flat closed
    let mut vii = (true, None);
    for &p in &min_ids {
        if !space.is_closed(space.up_set(p), TopologyKind::Flat) {
            vii = (false, Some(Witness::Prime { id: p }));
            break;
        }
    }
    criteria.push(Criterion::holds("vii", vii.0, vii.1));

    // (viii) minimal points map homeomorphically onto the relation quotient
    criteria.push(Criterion::holds(
        "viii",
        space.subspace_to_quotient_homeo(&min_ids, &r_classes, TopologyKind::Flat),
        None,
    ));

    Ok(CriteriaMatrix {
        theorem: theorem.into(),
        note: None,
        criteria,
    })
}

pub fn criteria_reduced_mp(ring: &RingHandle) -> Result<CriteriaMatrix> {
    let theorem = "reduced_mp";
    if ring.is_zero_ring() {
        return Ok(CriteriaMatrix::zero_ring(theorem));
    }
    let spec = primes(ring)?;
    let space = spec.to_space();
    let mut criteria = Vec::new();

    // (i) reduced and unique minimal under each prime
    let reduced = is_reduced(ring);
    let (mp, mp_w) = unique_min_below(&space);
    let witness = if !reduced {
        nilpotent_witness(ring).map(|value| Witness::Element { value })
    } else {
        mp_w
    };
    criteria.push(Criterion::holds("i", reduced && mp, witness));

    // (ii) annihilators of a zero-divisor pair span the ring
    let (ok, w) = ann_cosum_on_zero_divisors(ring)?;
    criteria.push(Criterion::holds(
        "ii",
        ok,
        w.map(|(a, b)| Witness::ElementPair { a, b }),
    ));

    // (iii) the annihilator sum identity
    let (ok, w) = ann_identity_every(ring)?;
    criteria.push(Criterion::holds(
        "iii",
        ok,
        w.map(|(a, b)| Witness::ElementPair { a, b }),
    ));

    // (iv) every annihilator is pure
    let (ok, w) = ann_pure_every(ring)?;
    criteria.push(Criterion::holds(
        "iv",
        ok,
        w.map(|value| Witness::Element { value }),
    ));

    // (v) principal ideals flat, represented by the elementwise clause (iv)
    criteria.push(Criterion::na("v", "represented by (iv)"));

    // (vi)/(vii) localizations are integral domains
    let (ok, w) = localizations_are_domains(ring, false)?;
    criteria.push(Criterion::holds("vi", ok, w));
    let (ok, w) = localizations_are_domains(ring, true)?;
    criteria.push(Criterion::holds("vii", ok, w));

    Ok(CriteriaMatrix {
        theorem: theorem.into(),
        note: None,
        criteria,
    })
}

fn nilpotent_witness(ring: &RingHandle) -> Option<RingElement> {
    let nil = nilradical(ring);
    if ring.fin().is_some() {
        nil.elements()
            .unwrap()
            .iter()
            .find(|&&x| x != 0)
            .map(|&x| RingElement::Int(x))
    } else if ring.sl().is_some() {
        None
    } else {
        let factors = ring.product_factors()?;
        factors
            .iter()
            .enumerate()
            .find_map(|(i, f)| nilpotent_witness(f).map(|w| embed(ring, i, &w)))
    }
}

pub fn criteria_purified(ring: &RingHandle) -> Result<CriteriaMatrix> {
    let theorem = "purified";
    if ring.is_zero_ring() {
        return Ok(CriteriaMatrix::zero_ring(theorem));
    }
    let spec = primes(ring)?;
    let space = spec.to_space();
    let min_ids = spec.min_ids();
    let reduced = is_reduced(ring);
    let mut criteria = Vec::new();

    // defining clause: distinct minimal primes split by an idempotent pair
    let mut def = (true, None);
    'def: for (a, &p) in min_ids.iter().enumerate() {
        for &q in min_ids.iter().skip(a + 1) {
            if idempotent_separating(ring, &spec.points[p].ideal, &spec.points[q].ideal)?.is_none()
            {
                def = (false, Some(Witness::PrimePair { a: p, b: q }));
                break 'def;
            }
        }
    }
    criteria.push(Criterion::holds("def", def.0, def.1));

    if !reduced {
        for id in ["ii", "iii", "iv", "vi", "vii", "viii", "ix", "x", "xi"] {
            criteria.push(Criterion::na(id, "stated for reduced rings"));
        }
        criteria.push(Criterion::na(
            "v",
            "exercised by the minimal-prime gluing construction",
        ));
        // the property transfers through the reduced quotient; publishing
        // the quotient's verdict makes the agreement check exercise the
        // transfer against the defining clause
        let nil = nilradical(ring);
        let (reduced_quotient, _) = quotient_ring(ring, &nil)?;
        let quotient_matrix = criteria_purified(&reduced_quotient)?;
        let verdict = match quotient_matrix.consensus() {
            Consensus::Agreed(v) => v,
            _ => false,
        };
        criteria.push(Criterion {
            id: "nilradical_transfer".into(),
            verdict: if verdict { Verdict::True } else { Verdict::False },
            witness: None,
            note: Some("purified verdict of the quotient by the nilradical".into()),
        });
        return Ok(CriteriaMatrix {
            theorem: theorem.into(),
            note: None,
            criteria,
        });
    }

    // (ii) mp with totally disconnected minimal subspace
    let (mp, mp_w) = unique_min_below(&space);
    let min_space = space.subspace(&min_ids);
    let totally_disconnected = min_space
        .connected_components()
        .iter()
        .all(|c| c.len() == 1);
    criteria.push(Criterion::holds("ii", mp && totally_disconnected, mp_w));

    // (iii) minimal primes are regular ideals
    let mut iii = (true, None);
    for &p in &min_ids {
        if !is_regular(ring, &spec.points[p].ideal)?.0 {
            iii = (false, Some(Witness::Prime { id: p }));
            break;
        }
    }
    criteria.push(Criterion::holds("iii", iii.0, iii.1));

    // (iv) components are the Zariski closures of minimal points
    let (ok, w) = components_match(ring, false)?;
    criteria.push(Criterion::holds("iv", ok, w));

    // (v) exercised by the construct module's minimal-prime gluing
    criteria.push(Criterion::na(
        "v",
        "exercised by the minimal-prime gluing construction",
    ));

    // (vi) idempotents lift along each localization
    let (ok, w) = lifting_along_localizations(ring)?;
    criteria.push(Criterion::holds("vi", ok, w));

    // (vii) idempotent clopens form a basis of the minimal subspace
    let (ok, w) = clopen_basis(ring, &spec, &min_ids, false, TopologyKind::Flat)?;
    criteria.push(Criterion::holds("vii", ok, w));

    // (viii) mp and every pure ideal is regular
    let viii = if !mp {
        Clause::Value(false, None)
    } else {
        pure_implies_regular(ring)?
    };
    criteria.push(viii.criterion("viii"));

    // (ix) max-regular ideals are exactly the minimal primes
    let regs = max_regular_ideals(ring)?;
    let mins: Vec<&IdealRep> = min_ids.iter().map(|&p| &spec.points[p].ideal).collect();
    let ix = regs.len() == mins.len()
        && regs.iter().all(|r| mins.iter().any(|m| *m == r))
        && mins.iter().all(|m| regs.iter().any(|r| r == *m));
    criteria.push(Criterion::holds("ix", ix, None));

    // (x) every annihilator is regular
    let (ok, w) = ann_regular_every(ring)?;
    criteria.push(Criterion::holds(
        "x",
        ok,
        w.map(|value| Witness::Element { value }),
    ));

    // (xi) elementwise idempotent splitting of zero divisors
    let (ok, w) = purified_elementwise(ring)?;
    criteria.push(Criterion::holds(
        "xi",
        ok,
        w.map(|(a, b)| Witness::ElementPair { a, b }),
    ));

    Ok(CriteriaMatrix {
        theorem: theorem.into(),
        note: None,
        criteria,
    })
}

// ---------------------------------------------------------------------------
// full report
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub ring: crate::ring::RingDescriptor,
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<u64>,
    pub zero_ring: bool,
    pub matrices: BTreeMap<String, CriteriaMatrix>,
    pub labels: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub disagreements: Vec<String>,
}

pub fn classify_report(ring: &RingHandle) -> Result<ClassifyReport> {
    let mut report = ClassifyReport {
        ring: ring.descriptor().clone(),
        label: ring.label(),
        size: ring.size(),
        zero_ring: ring.is_zero_ring(),
        matrices: BTreeMap::new(),
        labels: Vec::new(),
        disagreements: Vec::new(),
    };
    if report.zero_ring {
        report.labels.push("zero_ring".into());
        return Ok(report);
    }
    let matrices = [
        criteria_zero_dimensional(ring)?,
        criteria_gelfand(ring)?,
        criteria_clean(ring)?,
        criteria_mp(ring)?,
        criteria_reduced_mp(ring)?,
        criteria_purified(ring)?,
    ];
    let mut verdicts: BTreeMap<String, bool> = BTreeMap::new();
    for m in matrices {
        match m.consensus() {
            Consensus::Agreed(v) => {
                verdicts.insert(m.theorem.clone(), v);
            }
            Consensus::Empty => {}
            Consensus::Disagreement(_) => report.disagreements.push(m.theorem.clone()),
        }
        report.matrices.insert(m.theorem.clone(), m);
    }
    let reduced = is_reduced(ring);
    let mut labels = Vec::new();
    if reduced {
        labels.push("reduced".to_string());
    }
    let truth = |name: &str| verdicts.get(name).copied().unwrap_or(false);
    if truth("zero_dimensional") {
        labels.push("zero_dimensional".into());
        if reduced {
            labels.push("absolutely_flat".into());
        }
    }
    if truth("gelfand") {
        labels.push("gelfand".into());
    }
    if truth("clean") {
        labels.push("clean".into());
    }
    if truth("mp") {
        labels.push("mp".into());
    }
    if truth("reduced_mp") {
        labels.push("pf".into());
    }
    if truth("purified") {
        labels.push("purified".into());
        if reduced {
            labels.push("almost_pp".into());
        }
    }
    if ann_regular_every(ring)?.0 && reduced {
        labels.push("pp".into());
    }
    labels.sort();
    report.labels = labels;
    Ok(report)
}
