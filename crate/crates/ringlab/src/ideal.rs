//! Exact ideal representations: element sets for finite rings, normalized
//! symbolic descriptors for localized integer rings, componentwise tuples
//! for products with an infinite factor.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ring::{
    coset_quotient, ideal_closure, RingDescriptor, RingElement, RingHandle, RingMap,
};

/// Ideal of a localized integer ring, normalized: every nonzero proper ideal
/// is generated by a product of powers of the localized primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlIdeal {
    Zero,
    /// Generated by `d >= 2`, a product of powers of localized primes.
    Principal(u64),
    Unit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum IdealData {
    /// Sorted element indices.
    Finite(Vec<u64>),
    Semilocal(SlIdeal),
    Product(Vec<IdealRep>),
}

/// An ideal together with a generator list. Equality is equality of the
/// underlying sets (element sets for finite rings, normalized descriptors
/// for semilocal ones), independent of the generators.
#[derive(Clone, Debug)]
pub struct IdealRep {
    pub(crate) data: IdealData,
    pub gens: Vec<RingElement>,
}

impl PartialEq for IdealRep {
    fn eq(&self, other: &Self) -> bool {
        self.data == other.data
    }
}
impl Eq for IdealRep {}

impl IdealRep {
    pub(crate) fn finite(ring: &RingHandle, mut elements: Vec<u64>) -> IdealRep {
        elements.sort_unstable();
        elements.dedup();
        let gens = minimal_gens(ring, &elements);
        IdealRep {
            data: IdealData::Finite(elements),
            gens,
        }
    }

    pub(crate) fn semilocal(kind: SlIdeal) -> IdealRep {
        let gens = match &kind {
            SlIdeal::Zero => vec![],
            SlIdeal::Principal(d) => vec![RingElement::Frac {
                num: *d as i64,
                den: 1,
            }],
            SlIdeal::Unit => vec![RingElement::Frac { num: 1, den: 1 }],
        };
        IdealRep {
            data: IdealData::Semilocal(kind),
            gens,
        }
    }

    pub(crate) fn product(ring: &RingHandle, parts: Vec<IdealRep>) -> IdealRep {
        let factors = ring.product_factors().expect("product ring");
        let mut gens = Vec::new();
        for (i, part) in parts.iter().enumerate() {
            for g in &part.gens {
                let tuple: Vec<RingElement> = factors
                    .iter()
                    .enumerate()
                    .map(|(j, f)| if j == i { g.clone() } else { f.zero() })
                    .collect();
                gens.push(RingElement::Tuple(tuple));
            }
        }
        IdealRep {
            data: IdealData::Product(parts),
            gens,
        }
    }

    /// Element set of a finite-ring ideal.
    pub fn elements(&self) -> Option<&[u64]> {
        match &self.data {
            IdealData::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub(crate) fn parts(&self) -> Option<&[IdealRep]> {
        match &self.data {
            IdealData::Product(v) => Some(v),
            _ => None,
        }
    }

    pub fn contains(&self, ring: &RingHandle, e: &RingElement) -> bool {
        match (&self.data, e) {
            (IdealData::Finite(v), RingElement::Int(i)) => v.binary_search(i).is_ok(),
            (IdealData::Semilocal(kind), _) => {
                let c = ring.sl().expect("semilocal ring");
                let (num, _) = match c.check(e) {
                    Ok(x) => x,
                    Err(_) => return false,
                };
                match kind {
                    SlIdeal::Zero => num == 0,
                    SlIdeal::Unit => true,
                    SlIdeal::Principal(d) => {
                        if num == 0 {
                            return true;
                        }
                        // v_p(num) >= v_p(d) for every localized prime p
                        let mut dd = *d;
                        let mut nn = num.unsigned_abs();
                        for p in &c.primes {
                            while dd % p == 0 {
                                if nn % p != 0 {
                                    return false;
                                }
                                dd /= p;
                                nn /= p;
                            }
                        }
                        true
                    }
                }
            }
            (IdealData::Product(parts), RingElement::Tuple(xs)) => {
                let factors = ring.product_factors().expect("product ring");
                parts
                    .iter()
                    .zip(factors.iter().zip(xs))
                    .all(|(part, (f, x))| part.contains(f, x))
            }
            _ => false,
        }
    }

    pub fn is_whole(&self, ring: &RingHandle) -> bool {
        match &self.data {
            IdealData::Finite(v) => v.len() as u64 == ring.size().expect("finite ring"),
            IdealData::Semilocal(kind) => matches!(kind, SlIdeal::Unit),
            IdealData::Product(parts) => {
                let factors = ring.product_factors().expect("product ring");
                parts
                    .iter()
                    .zip(factors)
                    .all(|(p, f)| p.is_whole(f))
            }
        }
    }

    pub fn is_zero_ideal(&self, ring: &RingHandle) -> bool {
        match &self.data {
            IdealData::Finite(v) => v.as_slice() == [0] || (ring.is_zero_ring()),
            IdealData::Semilocal(kind) => matches!(kind, SlIdeal::Zero),
            IdealData::Product(parts) => {
                let factors = ring.product_factors().expect("product ring");
                parts
                    .iter()
                    .zip(factors)
                    .all(|(p, f)| p.is_zero_ideal(f))
            }
        }
    }

    /// Deterministic display used by witness payloads and reports.
    pub fn describe(&self) -> String {
        match &self.data {
            IdealData::Finite(v) => format!(
                "{{{}}}",
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            IdealData::Semilocal(SlIdeal::Zero) => "(0)".into(),
            IdealData::Semilocal(SlIdeal::Principal(d)) => format!("({d})"),
            IdealData::Semilocal(SlIdeal::Unit) => "(1)".into(),
            IdealData::Product(parts) => format!(
                "{}",
                parts
                    .iter()
                    .map(|p| p.describe())
                    .collect::<Vec<_>>()
                    .join(" x ")
            ),
        }
    }
}

/// Greedy minimal generator list for a finite-ring ideal element set.
fn minimal_gens(ring: &RingHandle, elements: &[u64]) -> Vec<RingElement> {
    let core = match ring.fin() {
        Some(c) => c,
        None => return Vec::new(),
    };
    let mut gens: Vec<u64> = Vec::new();
    let mut closure: Vec<u64> = vec![0];
    while closure.len() < elements.len() {
        let next = elements
            .iter()
            .copied()
            .find(|e| closure.binary_search(e).is_err())
            .expect("closure is a subset of the ideal");
        gens.push(next);
        closure = ideal_closure(core, &gens);
    }
    gens.into_iter().map(RingElement::Int).collect()
}

pub(crate) fn whole_ideal(ring: &RingHandle) -> IdealRep {
    if let Some(n) = ring.size() {
        return IdealRep::finite(ring, (0..n).collect());
    }
    if ring.sl().is_some() {
        return IdealRep::semilocal(SlIdeal::Unit);
    }
    let factors = ring.product_factors().expect("product ring");
    let parts: Vec<IdealRep> = factors.iter().map(whole_ideal).collect();
    IdealRep::product(ring, parts)
}

/// Smallest ideal containing `gens`.
pub fn ideal_generate(ring: &RingHandle, gens: &[RingElement]) -> Result<IdealRep> {
    for g in gens {
        ring.check(g)?;
    }
    if let Some(core) = ring.fin() {
        let idx: Vec<u64> = gens.iter().map(|g| g.as_index().unwrap()).collect();
        let elements = ideal_closure(core, &idx);
        let mut ideal = IdealRep::finite(ring, elements);
        if !gens.is_empty() {
            ideal.gens = gens.to_vec();
        }
        return Ok(ideal);
    }
    if let Some(c) = ring.sl() {
        let mut d: u64 = 0;
        for g in gens {
            let (num, _) = c.check(g)?;
            let part = c.p_part(num);
            d = gcd_u64(d, part);
        }
        let kind = match d {
            0 => SlIdeal::Zero,
            1 => SlIdeal::Unit,
            d => SlIdeal::Principal(d),
        };
        return Ok(IdealRep::semilocal(kind));
    }
    let factors = ring.product_factors().expect("product ring");
    let mut parts = Vec::with_capacity(factors.len());
    for (i, f) in factors.iter().enumerate() {
        let comp_gens: Vec<RingElement> = gens
            .iter()
            .map(|g| match g {
                RingElement::Tuple(xs) => Ok(xs[i].clone()),
                other => Err(Error::Encoding(format!("expected a tuple, got {other}"))),
            })
            .collect::<Result<_>>()?;
        parts.push(ideal_generate(f, &comp_gens)?);
    }
    Ok(IdealRep::product(ring, parts))
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Intersect,
}

pub fn ideal_ops(ring: &RingHandle, i: &IdealRep, j: &IdealRep, op: IdealOp) -> Result<IdealRep> {
    match op {
        IdealOp::Sum => ideal_sum(ring, i, j),
        IdealOp::Product => ideal_product(ring, i, j),
        IdealOp::Intersect => ideal_intersect(ring, i, j),
    }
}

pub fn ideal_sum(ring: &RingHandle, i: &IdealRep, j: &IdealRep) -> Result<IdealRep> {
    match (&i.data, &j.data) {
        (IdealData::Finite(a), IdealData::Finite(b)) => {
            let core = ring.fin().expect("finite ring");
            let mut out = BTreeSet::new();
            for x in a {
                for y in b {
                    out.insert(core.add(*x, *y));
                }
            }
            Ok(IdealRep::finite(ring, out.into_iter().collect()))
        }
        (IdealData::Semilocal(a), IdealData::Semilocal(b)) => {
            let kind = match (a, b) {
                (SlIdeal::Unit, _) | (_, SlIdeal::Unit) => SlIdeal::Unit,
                (SlIdeal::Zero, x) | (x, SlIdeal::Zero) => x.clone(),
                (SlIdeal::Principal(d1), SlIdeal::Principal(d2)) => {
                    match gcd_u64(*d1, *d2) {
                        1 => SlIdeal::Unit,
                        d => SlIdeal::Principal(d),
                    }
                }
            };
            Ok(IdealRep::semilocal(kind))
        }
        (IdealData::Product(a), IdealData::Product(b)) => {
            let factors = ring.product_factors().expect("product ring");
            let parts: Vec<IdealRep> = factors
                .iter()
                .zip(a.iter().zip(b))
                .map(|(f, (x, y))| ideal_sum(f, x, y))
                .collect::<Result<_>>()?;
            Ok(IdealRep::product(ring, parts))
        }
        _ => Err(Error::IncompatibleRings(
            "ideal representations belong to different rings".into(),
        )),
    }
}

pub fn ideal_product(ring: &RingHandle, i: &IdealRep, j: &IdealRep) -> Result<IdealRep> {
    match (&i.data, &j.data) {
        (IdealData::Finite(a), IdealData::Finite(b)) => {
            let core = ring.fin().expect("finite ring");
            let mut prods: Vec<u64> = Vec::new();
            for x in a {
                for y in b {
                    prods.push(core.mul(*x, *y));
                }
            }
            let elements = ideal_closure(core, &prods);
            Ok(IdealRep::finite(ring, elements))
        }
        (IdealData::Semilocal(a), IdealData::Semilocal(b)) => {
            let kind = match (a, b) {
                (SlIdeal::Zero, _) | (_, SlIdeal::Zero) => SlIdeal::Zero,
                (SlIdeal::Unit, x) | (x, SlIdeal::Unit) => x.clone(),
                (SlIdeal::Principal(d1), SlIdeal::Principal(d2)) => SlIdeal::Principal(d1 * d2),
            };
            Ok(IdealRep::semilocal(kind))
        }
        (IdealData::Product(a), IdealData::Product(b)) => {
            let factors = ring.product_factors().expect("product ring");
            let parts: Vec<IdealRep> = factors
                .iter()
                .zip(a.iter().zip(b))
                .map(|(f, (x, y))| ideal_product(f, x, y))
                .collect::<Result<_>>()?;
            Ok(IdealRep::product(ring, parts))
        }
        _ => Err(Error::IncompatibleRings(
            "ideal representations belong to different rings".into(),
        )),
    }
}

pub fn ideal_intersect(ring: &RingHandle, i: &IdealRep, j: &IdealRep) -> Result<IdealRep> {
    match (&i.data, &j.data) {
        (IdealData::Finite(a), IdealData::Finite(b)) => {
            let set_b: BTreeSet<u64> = b.iter().copied().collect();
            let elements: Vec<u64> = a.iter().copied().filter(|x| set_b.contains(x)).collect();
            Ok(IdealRep::finite(ring, elements))
        }
        (IdealData::Semilocal(a), IdealData::Semilocal(b)) => {
            let kind = match (a, b) {
                (SlIdeal::Zero, _) | (_, SlIdeal::Zero) => SlIdeal::Zero,
                (SlIdeal::Unit, x) | (x, SlIdeal::Unit) => x.clone(),
                (SlIdeal::Principal(d1), SlIdeal::Principal(d2)) => {
                    SlIdeal::Principal(lcm_u64(*d1, *d2))
                }
            };
            Ok(IdealRep::semilocal(kind))
        }
        (IdealData::Product(a), IdealData::Product(b)) => {
            let factors = ring.product_factors().expect("product ring");
            let parts: Vec<IdealRep> = factors
                .iter()
                .zip(a.iter().zip(b))
                .map(|(f, (x, y))| ideal_intersect(f, x, y))
                .collect::<Result<_>>()?;
            Ok(IdealRep::product(ring, parts))
        }
        _ => Err(Error::IncompatibleRings(
            "ideal representations belong to different rings".into(),
        )),
    }
}

/// `Ann(f) = {a : af = 0}`.
pub fn annihilator(ring: &RingHandle, f: &RingElement) -> Result<IdealRep> {
    ring.check(f)?;
    if let Some(core) = ring.fin() {
        let fi = f.as_index().unwrap();
        let elements: Vec<u64> = (0..core.size).filter(|&a| core.mul(a, fi) == 0).collect();
        return Ok(IdealRep::finite(ring, elements));
    }
    if ring.sl().is_some() {
        return Ok(if ring.is_zero(f) {
            IdealRep::semilocal(SlIdeal::Unit)
        } else {
            IdealRep::semilocal(SlIdeal::Zero)
        });
    }
    let factors = ring.product_factors().expect("product ring");
    let xs = match f {
        RingElement::Tuple(xs) => xs,
        _ => unreachable!("checked"),
    };
    let parts: Vec<IdealRep> = factors
        .iter()
        .zip(xs)
        .map(|(fac, x)| annihilator(fac, x))
        .collect::<Result<_>>()?;
    Ok(IdealRep::product(ring, parts))
}

/// Principal ideal `Af`.
pub fn principal_ideal(ring: &RingHandle, f: &RingElement) -> Result<IdealRep> {
    ideal_generate(ring, std::slice::from_ref(f))
}

pub struct Radicals {
    pub nilradical: IdealRep,
    pub jacobson: IdealRep,
}

/// Nilradical (set of nilpotents) and Jacobson radical (intersection of
/// maximal ideals).
pub fn radicals(ring: &RingHandle) -> Result<Radicals> {
    Ok(Radicals {
        nilradical: nilradical(ring),
        jacobson: jacobson_radical(ring)?,
    })
}

pub fn nilradical(ring: &RingHandle) -> IdealRep {
    ring.0
        .nilradical_cache
        .get_or_init(|| {
            if let Some(core) = ring.fin() {
                let elements: Vec<u64> = (0..core.size).filter(|&a| core.is_nilpotent(a)).collect();
                return IdealRep::finite(ring, elements);
            }
            if ring.sl().is_some() {
                return IdealRep::semilocal(SlIdeal::Zero);
            }
            let factors = ring.product_factors().expect("product ring");
            let parts: Vec<IdealRep> = factors.iter().map(nilradical).collect();
            IdealRep::product(ring, parts)
        })
        .clone()
}

pub fn jacobson_radical(ring: &RingHandle) -> Result<IdealRep> {
    if ring.fin().is_some() {
        let spec = crate::spectrum::primes(ring)?;
        let mut acc = IdealRep::finite(
            ring,
            (0..ring.size().unwrap()).collect(),
        );
        for point in &spec.points {
            if point.maximal {
                acc = ideal_intersect(ring, &acc, &point.ideal)?;
            }
        }
        return Ok(acc);
    }
    if let Some(c) = ring.sl() {
        let d: u64 = c.primes.iter().product();
        return Ok(IdealRep::semilocal(SlIdeal::Principal(d)));
    }
    let factors = ring.product_factors().expect("product ring");
    let parts: Vec<IdealRep> = factors
        .iter()
        .map(jacobson_radical)
        .collect::<Result<_>>()?;
    Ok(IdealRep::product(ring, parts))
}

pub fn is_reduced(ring: &RingHandle) -> bool {
    nilradical(ring).is_zero_ideal(ring)
}

/// Pure ideal test: `Ann(f) + I = A` for every `f` in `I`. On failure
/// returns the first offending `f` in canonical order.
pub fn is_pure(ring: &RingHandle, ideal: &IdealRep) -> Result<(bool, Option<RingElement>)> {
    match &ideal.data {
        IdealData::Finite(elements) => {
            let core = ring.fin().expect("finite ring");
            for &f in elements {
                let ann: Vec<u64> = (0..core.size).filter(|&a| core.mul(a, f) == 0).collect();
                let one = core.one();
                let hit = ann.iter().any(|&a| {
                    let rest = core.sub(one, a);
                    elements.binary_search(&rest).is_ok()
                });
                if !hit {
                    return Ok((false, Some(RingElement::Int(f))));
                }
            }
            Ok((true, None))
        }
        IdealData::Semilocal(kind) => match kind {
            SlIdeal::Zero | SlIdeal::Unit => Ok((true, None)),
            SlIdeal::Principal(d) => Ok((
                false,
                Some(RingElement::Frac {
                    num: *d as i64,
                    den: 1,
                }),
            )),
        },
        IdealData::Product(parts) => {
            let factors = ring.product_factors().expect("product ring");
            for (i, (part, f)) in parts.iter().zip(factors).enumerate() {
                let (ok, witness) = is_pure(f, part)?;
                if !ok {
                    let tuple: Vec<RingElement> = factors
                        .iter()
                        .enumerate()
                        .map(|(j, fac)| {
                            if j == i {
                                witness.clone().unwrap()
                            } else {
                                fac.zero()
                            }
                        })
                        .collect();
                    return Ok((false, Some(RingElement::Tuple(tuple))));
                }
            }
            Ok((true, None))
        }
    }
}

/// Regular ideal test: every member is fixed by an idempotent of the ideal
/// (`f = fe`). When true, also returns the single idempotent generator,
/// computed as the join `e ∨ f = e + f - ef` of the ideal's idempotents.
pub fn is_regular(ring: &RingHandle, ideal: &IdealRep) -> Result<(bool, Option<RingElement>)> {
    match &ideal.data {
        IdealData::Finite(elements) => {
            let core = ring.fin().expect("finite ring");
            let idems: Vec<u64> = core
                .idempotents()
                .into_iter()
                .filter(|e| elements.binary_search(e).is_ok())
                .collect();
            for &f in elements {
                if !idems.iter().any(|&e| core.mul(f, e) == f) {
                    return Ok((false, None));
                }
            }
            let mut join = 0u64;
            for &e in &idems {
                join = core.sub(core.add(join, e), core.mul(join, e));
            }
            Ok((true, Some(RingElement::Int(join))))
        }
        IdealData::Semilocal(kind) => match kind {
            SlIdeal::Zero => Ok((true, Some(RingElement::Frac { num: 0, den: 1 }))),
            SlIdeal::Unit => Ok((true, Some(RingElement::Frac { num: 1, den: 1 }))),
            SlIdeal::Principal(_) => Ok((false, None)),
        },
        IdealData::Product(parts) => {
            let factors = ring.product_factors().expect("product ring");
            let mut gens = Vec::with_capacity(parts.len());
            for (part, f) in parts.iter().zip(factors) {
                let (ok, gen) = is_regular(f, part)?;
                if !ok {
                    return Ok((false, None));
                }
                gens.push(gen.unwrap());
            }
            Ok((true, Some(RingElement::Tuple(gens))))
        }
    }
}

/// Quotient ring with the canonical surjection as a recorded element map.
pub fn quotient_ring(ring: &RingHandle, ideal: &IdealRep) -> Result<(RingHandle, RingMap)> {
    quotient_core(ring, ideal, None)
}

pub(crate) fn quotient_core(
    ring: &RingHandle,
    ideal: &IdealRep,
    desc_override: Option<RingDescriptor>,
) -> Result<(RingHandle, RingMap)> {
    let caps = ring.caps();
    let synth_desc = || {
        desc_override.clone().unwrap_or_else(|| RingDescriptor::Quotient {
            base: Box::new(ring.descriptor().clone()),
            ideal_gens: ideal.gens.clone(),
        })
    };
    match &ideal.data {
        IdealData::Finite(elements) => {
            let core = ring.fin().expect("finite ring");
            let (qcore, fwd) = coset_quotient(core.clone(), elements);
            let handle = RingHandle::from_parts(
                synth_desc(),
                crate::ring::Repr::Finite(qcore),
                caps,
            );
            let map = RingMap::finite_table(ring, &handle, fwd);
            Ok((handle, map))
        }
        IdealData::Semilocal(kind) => match kind {
            SlIdeal::Zero => {
                let c = ring.sl().expect("semilocal ring");
                let handle = RingHandle::from_parts(
                    synth_desc(),
                    crate::ring::Repr::Semilocal(c.clone()),
                    caps,
                );
                let map = RingMap {
                    src: ring.clone(),
                    dst: handle.clone(),
                    kind: crate::ring::MapKind::Identity,
                };
                Ok((handle, map))
            }
            SlIdeal::Principal(d) => {
                let handle = RingHandle::from_parts(
                    synth_desc(),
                    crate::ring::Repr::Finite(crate::ring::FiniteCore::new(
                        crate::ring::FiniteOps::QuotientInt { n: *d },
                        *d,
                    )),
                    caps,
                );
                let map = RingMap::semilocal_to_mod(ring, &handle, *d);
                Ok((handle, map))
            }
            SlIdeal::Unit => {
                let handle = RingHandle::from_parts(
                    synth_desc(),
                    crate::ring::Repr::Finite(crate::ring::FiniteCore::new(
                        crate::ring::FiniteOps::QuotientInt { n: 1 },
                        1,
                    )),
                    caps,
                );
                let map = RingMap::semilocal_to_mod(ring, &handle, 1);
                Ok((handle, map))
            }
        },
        IdealData::Product(parts) => {
            let factors = ring.product_factors().expect("product ring");
            let mut handles = Vec::with_capacity(parts.len());
            let mut maps = Vec::with_capacity(parts.len());
            for (part, f) in parts.iter().zip(factors) {
                let (h, m) = quotient_core(f, part, None)?;
                handles.push(h);
                maps.push(m);
            }
            let handle = RingHandle::product_of(handles, caps);
            let map = RingMap::componentwise(ring, &handle, maps);
            Ok((handle, map))
        }
    }
}

/// All ideals of a finite ring within the enumeration cap, computed as the
/// closure of the principal ideals under pairwise sums, sorted by
/// (cardinality, lexicographic element set).
pub fn enumerate_ideals(ring: &RingHandle) -> Result<Vec<IdealRep>> {
    let core = ring.fin().ok_or_else(|| {
        Error::Unsupported("ideal enumeration requires a finite ring".into())
    })?;
    let cap = ring.caps().ideal_enum_cap;
    if core.size > cap {
        return Err(Error::SizeCap(format!(
            "ideal enumeration needs size <= {cap}, ring has {}",
            core.size
        )));
    }
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    for a in 0..core.size {
        seen.insert(ideal_closure(core, &[a]));
    }
    loop {
        let snapshot: Vec<Vec<u64>> = seen.iter().cloned().collect();
        let mut added = false;
        for (i, x) in snapshot.iter().enumerate() {
            for y in snapshot.iter().skip(i + 1) {
                let mut sum = BTreeSet::new();
                for a in x {
                    for b in y {
                        sum.insert(core.add(*a, *b));
                    }
                }
                let sum: Vec<u64> = sum.into_iter().collect();
                if seen.insert(sum) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let mut out: Vec<Vec<u64>> = seen.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out
        .into_iter()
        .map(|elements| IdealRep::finite(ring, elements))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ring_from_descriptor;

    fn zn(n: u64) -> RingHandle {
        ring_from_descriptor(&RingDescriptor::QuotientInt { modulus: n }).unwrap()
    }

    fn sl(primes: &[u64]) -> RingHandle {
        ring_from_descriptor(&RingDescriptor::SemilocalInt {
            primes: primes.to_vec(),
        })
        .unwrap()
    }

    fn ints(v: &[u64]) -> Vec<RingElement> {
        v.iter().map(|&x| RingElement::Int(x)).collect()
    }

    // independent closure oracle: grow a subset until it is closed under
    // addition and multiplication by everything
    fn closure_oracle(n: u64, gens: &[u64]) -> Vec<u64> {
        let mut set: BTreeSet<u64> = [0].into();
        for &g in gens {
            set.insert(g % n);
        }
        loop {
            let mut next = set.clone();
            for &x in &set {
                for &y in &set {
                    next.insert((x + y) % n);
                }
                for a in 0..n {
                    next.insert((a * x) % n);
                }
            }
            if next == set {
                break;
            }
            set = next;
        }
        set.into_iter().collect()
    }

    #[test]
    fn generate_examples() {
        let z6 = zn(6);
        let i = ideal_generate(&z6, &ints(&[4])).unwrap();
        assert_eq!(i.elements().unwrap(), closure_oracle(6, &[4]).as_slice());
        assert_eq!(i.elements().unwrap(), &[0, 2, 4]);

        let empty = ideal_generate(&z6, &[]).unwrap();
        assert_eq!(empty.elements().unwrap(), &[0]);

        let z12 = zn(12);
        let i = ideal_generate(&z12, &ints(&[8, 6])).unwrap();
        assert_eq!(i.elements().unwrap(), &[0, 2, 4, 6, 8, 10]); // gcd(8,6,12)=2
    }

    #[test]
    fn ops_examples() {
        let z6 = zn(6);
        let two = ideal_generate(&z6, &ints(&[2])).unwrap();
        let three = ideal_generate(&z6, &ints(&[3])).unwrap();
        let sum = ideal_sum(&z6, &two, &three).unwrap();
        assert!(sum.is_whole(&z6));
        let meet = ideal_intersect(&z6, &two, &three).unwrap();
        assert_eq!(meet.elements().unwrap(), &[0]);
        let zero = ideal_generate(&z6, &[]).unwrap();
        assert_eq!(ideal_sum(&z6, &two, &zero).unwrap(), two);
    }

    #[test]
    fn annihilator_examples() {
        let z6 = zn(6);
        let ann2 = annihilator(&z6, &RingElement::Int(2)).unwrap();
        assert_eq!(ann2.elements().unwrap(), &[0, 3]);
        let ann0 = annihilator(&z6, &RingElement::Int(0)).unwrap();
        assert!(ann0.is_whole(&z6));
        let s = sl(&[2, 3]);
        let ann = annihilator(&s, &RingElement::Frac { num: 5, den: 7 }).unwrap();
        assert!(ann.is_zero_ideal(&s));
    }

    #[test]
    fn radical_examples() {
        let z12 = zn(12);
        let r = radicals(&z12).unwrap();
        assert_eq!(r.nilradical.elements().unwrap(), &[0, 6]);
        assert_eq!(r.jacobson.elements().unwrap(), &[0, 6]);
        let z6 = zn(6);
        assert_eq!(nilradical(&z6).elements().unwrap(), &[0]);
        let s = sl(&[2, 3]);
        let r = radicals(&s).unwrap();
        assert!(r.nilradical.is_zero_ideal(&s));
        assert_eq!(r.jacobson, IdealRep::semilocal(SlIdeal::Principal(6)));
    }

    #[test]
    fn pure_examples() {
        let z6 = zn(6);
        let two = ideal_generate(&z6, &ints(&[2])).unwrap();
        assert_eq!(is_pure(&z6, &two).unwrap(), (true, None));
        let z4 = zn(4);
        let i = ideal_generate(&z4, &ints(&[2])).unwrap();
        assert_eq!(is_pure(&z4, &i).unwrap(), (false, Some(RingElement::Int(2))));
        let zero = ideal_generate(&z4, &[]).unwrap();
        assert_eq!(is_pure(&z4, &zero).unwrap(), (true, None));
    }

    // second route from the pure-ideal characterization: for each f in I
    // there is g in I with f = fg
    fn pure_oracle(ring: &RingHandle, ideal: &IdealRep) -> bool {
        let core = ring.fin().unwrap();
        let elements = ideal.elements().unwrap();
        elements
            .iter()
            .all(|&f| elements.iter().any(|&g| core.mul(f, g) == f))
    }

    #[test]
    fn pure_agrees_with_fixpoint_route() {
        for n in 2..=24u64 {
            let r = zn(n);
            for ideal in enumerate_ideals(&r).unwrap() {
                assert_eq!(
                    is_pure(&r, &ideal).unwrap().0,
                    pure_oracle(&r, &ideal),
                    "Z/{n} ideal {:?}",
                    ideal.elements()
                );
            }
        }
    }

    #[test]
    fn regular_examples() {
        let z6 = zn(6);
        let two = ideal_generate(&z6, &ints(&[2])).unwrap();
        assert_eq!(
            is_regular(&z6, &two).unwrap(),
            (true, Some(RingElement::Int(4)))
        );
        let z4 = zn(4);
        let i = ideal_generate(&z4, &ints(&[2])).unwrap();
        assert_eq!(is_regular(&z4, &i).unwrap(), (false, None));
        let zero = ideal_generate(&z4, &[]).unwrap();
        assert_eq!(
            is_regular(&z4, &zero).unwrap(),
            (true, Some(RingElement::Int(0)))
        );
    }

    // oracle: the ideal generated by the idempotents lying in I equals I
    fn regular_oracle(ring: &RingHandle, ideal: &IdealRep) -> bool {
        let idems: Vec<RingElement> = ring
            .idempotents()
            .iter()
            .filter(|e| ideal.contains(ring, e))
            .cloned()
            .collect();
        let gen = ideal_generate(ring, &idems).unwrap();
        gen == *ideal
    }

    #[test]
    fn regular_agrees_with_generation_oracle() {
        for n in 2..=24u64 {
            let r = zn(n);
            for ideal in enumerate_ideals(&r).unwrap() {
                assert_eq!(
                    is_regular(&r, &ideal).unwrap().0,
                    regular_oracle(&r, &ideal),
                    "Z/{n} ideal {:?}",
                    ideal.elements()
                );
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let z12 = zn(12);
        let six = ideal_generate(&z12, &ints(&[6])).unwrap();
        let (q, map) = quotient_ring(&z12, &six).unwrap();
        assert_eq!(q.size(), Some(6));
        // canonical surjection: coset count oracle
        assert_eq!(map.apply(&RingElement::Int(7)).unwrap(), RingElement::Int(1));
        for a in 0..6u64 {
            for b in 0..6u64 {
                assert_eq!(
                    q.mul(&RingElement::Int(a), &RingElement::Int(b)).unwrap(),
                    RingElement::Int((a * b) % 6)
                );
            }
        }

        let (same, _) = quotient_ring(&z12, &ideal_generate(&z12, &[]).unwrap()).unwrap();
        assert_eq!(same.size(), Some(12));

        let s = sl(&[2, 3]);
        let twelve = ideal_generate(&s, &[RingElement::Frac { num: 12, den: 1 }]).unwrap();
        let (q, map) = quotient_ring(&s, &twelve).unwrap();
        assert_eq!(q.size(), Some(12));
        // 1/7 maps to 7^{-1} = 7 mod 12
        assert_eq!(
            map.apply(&RingElement::Frac { num: 1, den: 7 }).unwrap(),
            RingElement::Int(7)
        );
    }

    #[test]
    fn enumerate_examples() {
        let z6 = zn(6);
        let ideals = enumerate_ideals(&z6).unwrap();
        // divisor-lattice oracle: ideals of Z/6 correspond to divisors of 6
        assert_eq!(ideals.len(), 4);
        assert_eq!(ideals[0].elements().unwrap(), &[0]);
        assert_eq!(ideals.last().unwrap().elements().unwrap().len(), 6);

        let z4 = zn(4);
        assert_eq!(enumerate_ideals(&z4).unwrap().len(), 3);
        let f5 = zn(5);
        assert_eq!(enumerate_ideals(&f5).unwrap().len(), 2);
    }

    #[test]
    fn ideal_count_matches_divisor_oracle() {
        fn divisors(n: u64) -> usize {
            (1..=n).filter(|d| n % d == 0).count()
        }
        for n in 2..=36u64 {
            let r = zn(n);
            assert_eq!(enumerate_ideals(&r).unwrap().len(), divisors(n), "Z/{n}");
        }
    }

    #[test]
    fn pure_implies_idempotent_and_regular_implies_pure() {
        for n in 2..=36u64 {
            let r = zn(n);
            for ideal in enumerate_ideals(&r).unwrap() {
                let pure = is_pure(&r, &ideal).unwrap().0;
                if pure {
                    let sq = ideal_product(&r, &ideal, &ideal).unwrap();
                    assert_eq!(sq, ideal, "pure ideal must be idempotent in Z/{n}");
                }
                if is_regular(&r, &ideal).unwrap().0 {
                    assert!(pure, "regular ideal must be pure in Z/{n}");
                }
            }
        }
    }

    #[test]
    fn annihilator_is_order_reversing_on_principal_ideals() {
        let r = zn(24);
        for f in 0..24u64 {
            for g in 0..24u64 {
                let fi = principal_ideal(&r, &RingElement::Int(f)).unwrap();
                let gi = principal_ideal(&r, &RingElement::Int(g)).unwrap();
                let f_in_g = fi
                    .elements()
                    .unwrap()
                    .iter()
                    .all(|x| gi.contains(&r, &RingElement::Int(*x)));
                if f_in_g {
                    let ann_f = annihilator(&r, &RingElement::Int(f)).unwrap();
                    let ann_g = annihilator(&r, &RingElement::Int(g)).unwrap();
                    assert!(ann_g
                        .elements()
                        .unwrap()
                        .iter()
                        .all(|x| ann_f.contains(&r, &RingElement::Int(*x))));
                }
            }
        }
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let r = zn(72);
        assert!(matches!(
            enumerate_ideals(&r).unwrap_err(),
            Error::SizeCap(_)
        ));
    }
}
