//! Explicitly computable commutative rings with unit.
//!
//! A [`RingHandle`] is an immutable, cheaply clonable handle to one of three
//! representations: a finite ring under the canonical index encoding, the
//! integers localized away from a finite prime set, or a direct product with
//! at least one infinite factor (elements are tuples). All operations are
//! pure; handles are safe to share across threads.

mod descriptor;
mod finite;
mod semilocal;

pub use descriptor::{is_prime, RingDescriptor, RingElement};

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ideal::IdealRep;
use crate::spectrum::SpectrumGraph;

pub(crate) use finite::{coset_quotient, ideal_closure, FiniteCore, FiniteOps};
pub(crate) use semilocal::{gcd_i64, SemilocalCore};

/// Size limits guarding exhaustive scans.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Largest admissible finite ring.
    pub max_ring_size: u64,
    /// Largest finite ring whose full ideal lattice may be enumerated.
    pub ideal_enum_cap: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_ring_size: 4096,
            ideal_enum_cap: 64,
        }
    }
}

pub(crate) enum Repr {
    Finite(Arc<FiniteCore>),
    Semilocal(SemilocalCore),
    /// Direct product with at least one infinite factor; elements are tuples.
    Product(Vec<RingHandle>),
}

pub(crate) struct RingInner {
    pub descriptor: RingDescriptor,
    pub repr: Repr,
    pub caps: Caps,
    pub idempotents_cache: OnceLock<Vec<RingElement>>,
    pub spectrum_cache: OnceLock<Arc<SpectrumGraph>>,
    pub kernels_cache: OnceLock<Vec<IdealRep>>,
    pub nilradical_cache: OnceLock<IdealRep>,
}

#[derive(Clone)]
pub struct RingHandle(pub(crate) Arc<RingInner>);

impl PartialEq for RingHandle {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.descriptor == other.0.descriptor
    }
}
impl Eq for RingHandle {}

impl std::fmt::Debug for RingHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RingHandle({})", self.label())
    }
}

pub fn ring_from_descriptor(desc: &RingDescriptor) -> Result<RingHandle> {
    ring_from_descriptor_with(desc, Caps::default())
}

pub fn ring_from_descriptor_with(desc: &RingDescriptor, caps: Caps) -> Result<RingHandle> {
    desc.validate()?;
    build(desc, caps)
}

fn check_cap(size: u64, caps: &Caps, what: &str) -> Result<()> {
    if size > caps.max_ring_size {
        Err(Error::SizeCap(format!(
            "{what} has {size} elements, cap is {}",
            caps.max_ring_size
        )))
    } else {
        Ok(())
    }
}

fn build(desc: &RingDescriptor, caps: Caps) -> Result<RingHandle> {
    match desc {
        RingDescriptor::QuotientInt { modulus } => {
            check_cap(*modulus, &caps, "quotient_int ring")?;
            Ok(RingHandle::from_parts(
                desc.clone(),
                Repr::Finite(FiniteCore::new(
                    FiniteOps::QuotientInt { n: *modulus },
                    *modulus,
                )),
                caps,
            ))
        }
        RingDescriptor::PolyQuotient { p, modulus_poly } => {
            let deg = modulus_poly.len() - 1;
            let size = p
                .checked_pow(deg as u32)
                .ok_or_else(|| Error::SizeCap("poly_quotient ring overflows".into()))?;
            check_cap(size, &caps, "poly_quotient ring")?;
            Ok(RingHandle::from_parts(
                desc.clone(),
                Repr::Finite(FiniteCore::new(
                    FiniteOps::PolyQuotient {
                        p: *p,
                        modulus: modulus_poly.clone(),
                        deg,
                    },
                    size,
                )),
                caps,
            ))
        }
        RingDescriptor::Product { factors } => {
            let built: Vec<RingHandle> = factors
                .iter()
                .map(|f| build(f, caps))
                .collect::<Result<_>>()?;
            if built.iter().all(|h| h.is_finite()) {
                let cores: Vec<Arc<FiniteCore>> =
                    built.iter().map(|h| h.fin().unwrap().clone()).collect();
                let mut size: u64 = 1;
                for c in &cores {
                    size = size
                        .checked_mul(c.size)
                        .ok_or_else(|| Error::SizeCap("product ring overflows".into()))?;
                }
                check_cap(size, &caps, "product ring")?;
                Ok(RingHandle::from_parts(
                    desc.clone(),
                    Repr::Finite(FiniteCore::new(FiniteOps::Product { factors: cores }, size)),
                    caps,
                ))
            } else {
                Ok(RingHandle::from_parts(
                    desc.clone(),
                    Repr::Product(built),
                    caps,
                ))
            }
        }
        RingDescriptor::Quotient { base, ideal_gens } => {
            let base_ring = build(base, caps)?;
            let ideal = crate::ideal::ideal_generate(&base_ring, ideal_gens)?;
            let (ring, _map) = crate::ideal::quotient_core(&base_ring, &ideal, Some(desc.clone()))?;
            Ok(ring)
        }
        RingDescriptor::Localization { base, prime } => {
            let base_ring = build(base, caps)?;
            let (ring, _map) = crate::spectrum::localize_core(&base_ring, *prime, Some(desc.clone()))?;
            Ok(ring)
        }
        RingDescriptor::SemilocalInt { primes } => Ok(RingHandle::from_parts(
            desc.clone(),
            Repr::Semilocal(SemilocalCore::new(primes.clone())),
            caps,
        )),
    }
}

/// Facts returned by the element predicate scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementFacts {
    pub idempotent: bool,
    pub nilpotent: bool,
    pub nilpotency_index: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
}

impl RingHandle {
    pub(crate) fn from_parts(descriptor: RingDescriptor, repr: Repr, caps: Caps) -> RingHandle {
        RingHandle(Arc::new(RingInner {
            descriptor,
            repr,
            caps,
            idempotents_cache: OnceLock::new(),
            spectrum_cache: OnceLock::new(),
            kernels_cache: OnceLock::new(),
            nilradical_cache: OnceLock::new(),
        }))
    }

    /// Direct product of already-built handles. Unlike descriptor-built
    /// products this keeps the componentwise representation even when every
    /// factor is finite, so recorded maps stay componentwise.
    pub(crate) fn product_of(factors: Vec<RingHandle>, caps: Caps) -> RingHandle {
        let desc = RingDescriptor::Product {
            factors: factors.iter().map(|f| f.descriptor().clone()).collect(),
        };
        RingHandle::from_parts(desc, Repr::Product(factors), caps)
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.0.descriptor
    }

    pub fn label(&self) -> String {
        self.0.descriptor.label()
    }

    pub fn caps(&self) -> Caps {
        self.0.caps
    }

    pub(crate) fn fin(&self) -> Option<&Arc<FiniteCore>> {
        match &self.0.repr {
            Repr::Finite(c) => Some(c),
            _ => None,
        }
    }

    pub(crate) fn sl(&self) -> Option<&SemilocalCore> {
        match &self.0.repr {
            Repr::Semilocal(c) => Some(c),
            _ => None,
        }
    }

    pub(crate) fn product_factors(&self) -> Option<&[RingHandle]> {
        match &self.0.repr {
            Repr::Product(fs) => Some(fs),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.0.repr, Repr::Finite(_))
    }

    pub fn size(&self) -> Option<u64> {
        self.fin().map(|c| c.size)
    }

    pub fn is_zero_ring(&self) -> bool {
        self.size() == Some(1)
    }

    pub fn zero(&self) -> RingElement {
        match &self.0.repr {
            Repr::Finite(_) => RingElement::Int(0),
            Repr::Semilocal(_) => RingElement::Frac { num: 0, den: 1 },
            Repr::Product(fs) => RingElement::Tuple(fs.iter().map(|f| f.zero()).collect()),
        }
    }

    pub fn one(&self) -> RingElement {
        match &self.0.repr {
            Repr::Finite(c) => RingElement::Int(c.one()),
            Repr::Semilocal(_) => RingElement::Frac { num: 1, den: 1 },
            Repr::Product(fs) => RingElement::Tuple(fs.iter().map(|f| f.one()).collect()),
        }
    }

    /// Checks that `e` is a well-formed element of this ring.
    pub fn check(&self, e: &RingElement) -> Result<()> {
        match (&self.0.repr, e) {
            (Repr::Finite(c), RingElement::Int(i)) => {
                if *i < c.size {
                    Ok(())
                } else {
                    Err(Error::Encoding(format!(
                        "index {i} out of range for a ring of size {}",
                        c.size
                    )))
                }
            }
            (Repr::Semilocal(c), _) => c.check(e).map(|_| ()),
            (Repr::Product(fs), RingElement::Tuple(parts)) => {
                if fs.len() != parts.len() {
                    return Err(Error::Encoding(format!(
                        "tuple arity {} does not match {} factors",
                        parts.len(),
                        fs.len()
                    )));
                }
                for (f, p) in fs.iter().zip(parts) {
                    f.check(p)?;
                }
                Ok(())
            }
            (_, other) => Err(Error::Encoding(format!(
                "element {other} does not match the ring encoding of {}",
                self.label()
            ))),
        }
    }

    /// Unary/binary arithmetic under the canonical encoding.
    pub fn arith(&self, op: ArithOp, a: &RingElement, b: Option<&RingElement>) -> Result<RingElement> {
        match op {
            ArithOp::Add => {
                let b = b.ok_or_else(|| Error::ArityMismatch("add needs two operands".into()))?;
                self.add(a, b)
            }
            ArithOp::Mul => {
                let b = b.ok_or_else(|| Error::ArityMismatch("mul needs two operands".into()))?;
                self.mul(a, b)
            }
            ArithOp::Neg => self.neg(a),
        }
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub fn neg(&self, a: &RingElement) -> Result<RingElement> {
        self.check(a)?;
        Ok(self.neg_unchecked(a))
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    pub(crate) fn add_unchecked(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (&self.0.repr, a, b) {
            (Repr::Finite(c), RingElement::Int(x), RingElement::Int(y)) => {
                RingElement::Int(c.add(*x, *y))
            }
            (Repr::Semilocal(c), _, _) => {
                let x = c.check(a).expect("checked");
                let y = c.check(b).expect("checked");
                c.add(x, y).expect("semilocal arithmetic")
            }
            (Repr::Product(fs), RingElement::Tuple(xs), RingElement::Tuple(ys)) => {
                RingElement::Tuple(
                    fs.iter()
                        .zip(xs.iter().zip(ys))
                        .map(|(f, (x, y))| f.add_unchecked(x, y))
                        .collect(),
                )
            }
            _ => unreachable!("mismatched element shapes after check"),
        }
    }

    pub(crate) fn mul_unchecked(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (&self.0.repr, a, b) {
            (Repr::Finite(c), RingElement::Int(x), RingElement::Int(y)) => {
                RingElement::Int(c.mul(*x, *y))
            }
            (Repr::Semilocal(c), _, _) => {
                let x = c.check(a).expect("checked");
                let y = c.check(b).expect("checked");
                c.mul(x, y).expect("semilocal arithmetic")
            }
            (Repr::Product(fs), RingElement::Tuple(xs), RingElement::Tuple(ys)) => {
                RingElement::Tuple(
                    fs.iter()
                        .zip(xs.iter().zip(ys))
                        .map(|(f, (x, y))| f.mul_unchecked(x, y))
                        .collect(),
                )
            }
            _ => unreachable!("mismatched element shapes after check"),
        }
    }

    pub(crate) fn neg_unchecked(&self, a: &RingElement) -> RingElement {
        match (&self.0.repr, a) {
            (Repr::Finite(c), RingElement::Int(x)) => RingElement::Int(c.neg(*x)),
            (Repr::Semilocal(c), _) => {
                let x = c.check(a).expect("checked");
                c.neg(x)
            }
            (Repr::Product(fs), RingElement::Tuple(xs)) => RingElement::Tuple(
                fs.iter()
                    .zip(xs.iter())
                    .map(|(f, x)| f.neg_unchecked(x))
                    .collect(),
            ),
            _ => unreachable!("mismatched element shapes after check"),
        }
    }

    /// Exponentiation by squaring; `pow(a, 0) = 1`.
    pub fn pow(&self, a: &RingElement, mut k: u64) -> Result<RingElement> {
        self.check(a)?;
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            base = self.mul_unchecked(&base, &base);
            k >>= 1;
        }
        Ok(acc)
    }

    pub fn is_zero(&self, a: &RingElement) -> bool {
        *a == self.zero()
    }

    pub fn is_one(&self, a: &RingElement) -> bool {
        *a == self.one()
    }

    /// Decides invertibility, with the inverse as witness. Finite rings scan;
    /// semilocal rings test coprimality of the numerator with every
    /// localized prime.
    pub fn is_unit(&self, a: &RingElement) -> Result<(bool, Option<RingElement>)> {
        self.check(a)?;
        Ok(self.is_unit_unchecked(a))
    }

    pub(crate) fn is_unit_unchecked(&self, a: &RingElement) -> (bool, Option<RingElement>) {
        match (&self.0.repr, a) {
            (Repr::Finite(c), RingElement::Int(x)) => match c.is_unit(*x) {
                Some(inv) => (true, Some(RingElement::Int(inv))),
                None => (false, None),
            },
            (Repr::Semilocal(c), _) => {
                let x = c.check(a).expect("checked");
                match c.is_unit(x) {
                    Some(inv) => (true, Some(inv)),
                    None => (false, None),
                }
            }
            (Repr::Product(fs), RingElement::Tuple(xs)) => {
                let mut invs = Vec::with_capacity(xs.len());
                for (f, x) in fs.iter().zip(xs) {
                    match f.is_unit_unchecked(x) {
                        (true, Some(inv)) => invs.push(inv),
                        _ => return (false, None),
                    }
                }
                (true, Some(RingElement::Tuple(invs)))
            }
            _ => unreachable!("mismatched element shapes after check"),
        }
    }

    pub fn element_facts(&self, a: &RingElement) -> Result<ElementFacts> {
        self.check(a)?;
        Ok(self.element_facts_unchecked(a))
    }

    pub(crate) fn element_facts_unchecked(&self, a: &RingElement) -> ElementFacts {
        match (&self.0.repr, a) {
            (Repr::Finite(c), RingElement::Int(x)) => {
                let idempotent = c.mul(*x, *x) == *x;
                let nil_index = c.nilpotency_index(*x);
                ElementFacts {
                    idempotent,
                    nilpotent: nil_index.is_some(),
                    nilpotency_index: nil_index,
                }
            }
            (Repr::Semilocal(c), _) => {
                let (num, den) = c.check(a).expect("checked");
                // a domain: the only nilpotent is 0, the idempotents are 0 and 1
                let idempotent = (num == 0 && den == 1) || (num == 1 && den == 1);
                let nilpotent = num == 0;
                ElementFacts {
                    idempotent,
                    nilpotent,
                    nilpotency_index: nilpotent.then_some(1),
                }
            }
            (Repr::Product(fs), RingElement::Tuple(xs)) => {
                let facts: Vec<ElementFacts> = fs
                    .iter()
                    .zip(xs)
                    .map(|(f, x)| f.element_facts_unchecked(x))
                    .collect();
                let nilpotent = facts.iter().all(|f| f.nilpotent);
                ElementFacts {
                    idempotent: facts.iter().all(|f| f.idempotent),
                    nilpotent,
                    nilpotency_index: nilpotent
                        .then(|| facts.iter().filter_map(|f| f.nilpotency_index).max())
                        .flatten(),
                }
            }
            _ => unreachable!("mismatched element shapes after check"),
        }
    }

    pub fn is_idempotent(&self, a: &RingElement) -> bool {
        self.mul_unchecked(a, a) == *a
    }

    pub fn is_nilpotent_elem(&self, a: &RingElement) -> bool {
        self.element_facts_unchecked(a).nilpotent
    }

    /// All idempotents in ascending canonical order. Finite rings scan;
    /// semilocal rings are connected domains with exactly `{0, 1}`; products
    /// combine factor idempotents componentwise.
    pub fn idempotents(&self) -> &[RingElement] {
        self.0.idempotents_cache.get_or_init(|| match &self.0.repr {
            Repr::Finite(c) => c.idempotents().into_iter().map(RingElement::Int).collect(),
            Repr::Semilocal(_) => vec![
                RingElement::Frac { num: 0, den: 1 },
                RingElement::Frac { num: 1, den: 1 },
            ],
            Repr::Product(fs) => {
                let per: Vec<&[RingElement]> = fs.iter().map(|f| f.idempotents()).collect();
                let mut out = vec![Vec::new()];
                for list in &per {
                    let mut next = Vec::with_capacity(out.len() * list.len());
                    for prefix in &out {
                        for e in *list {
                            let mut t = prefix.clone();
                            t.push(e.clone());
                            next.push(t);
                        }
                    }
                    out = next;
                }
                let mut elems: Vec<RingElement> =
                    out.into_iter().map(RingElement::Tuple).collect();
                elems.sort();
                elems
            }
        })
    }

    /// Iterates every element of a finite ring in canonical order.
    pub fn elements(&self) -> Option<impl Iterator<Item = RingElement>> {
        self.size().map(|n| (0..n).map(RingElement::Int))
    }

    /// Exhaustive commutativity/associativity/distributivity/identity check.
    pub fn verify_ring_axioms(&self) -> std::result::Result<(), String> {
        let c = match self.fin() {
            Some(c) => c,
            None => return Err("axiom sweep requires a finite ring".into()),
        };
        let n = c.size;
        let one = c.one();
        for a in 0..n {
            if c.add(a, 0) != a {
                return Err(format!("additive identity fails at {a}"));
            }
            if c.mul(a, one) != a {
                return Err(format!("multiplicative identity fails at {a}"));
            }
            if c.add(a, c.neg(a)) != 0 {
                return Err(format!("additive inverse fails at {a}"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if c.add(a, b) != c.add(b, a) {
                    return Err(format!("addition not commutative at ({a},{b})"));
                }
                if c.mul(a, b) != c.mul(b, a) {
                    return Err(format!("multiplication not commutative at ({a},{b})"));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    if c.add(c.add(a, b), d) != c.add(a, c.add(b, d)) {
                        return Err(format!("addition not associative at ({a},{b},{d})"));
                    }
                    if c.mul(c.mul(a, b), d) != c.mul(a, c.mul(b, d)) {
                        return Err(format!("multiplication not associative at ({a},{b},{d})"));
                    }
                    if c.mul(a, c.add(b, d)) != c.add(c.mul(a, b), c.mul(a, d)) {
                        return Err(format!("distributivity fails at ({a},{b},{d})"));
                    }
                }
            }
        }
        Ok(())
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(((t % m as i128 + m as i128) % m as i128) as u64)
}

#[derive(Debug)]
pub(crate) enum MapKind {
    Identity,
    /// Table of images per source index, with the smallest preimage per
    /// target index as the canonical section.
    FiniteTable { fwd: Arc<Vec<u64>>, sec: Arc<Vec<u64>> },
    /// `a/b -> a * b^{-1} (mod m)` from a semilocal ring onto `Z/m`.
    SemilocalToMod { m: u64 },
    Componentwise(Vec<RingMap>),
    Projection { factor: usize },
    Compose(Box<RingMap>, Box<RingMap>),
}

/// A recorded surjection between rings (quotient or localization map),
/// applied elementwise, with a canonical section picking the smallest
/// preimage.
#[derive(Debug)]
pub struct RingMap {
    pub src: RingHandle,
    pub dst: RingHandle,
    pub(crate) kind: MapKind,
}

impl RingMap {
    pub fn identity(r: &RingHandle) -> RingMap {
        RingMap {
            src: r.clone(),
            dst: r.clone(),
            kind: MapKind::Identity,
        }
    }

    pub(crate) fn finite_table(src: &RingHandle, dst: &RingHandle, fwd: Vec<u64>) -> RingMap {
        let dst_size = dst.size().expect("finite target") as usize;
        let mut sec = vec![u64::MAX; dst_size];
        for (a, &img) in fwd.iter().enumerate() {
            if sec[img as usize] == u64::MAX {
                sec[img as usize] = a as u64;
            }
        }
        RingMap {
            src: src.clone(),
            dst: dst.clone(),
            kind: MapKind::FiniteTable {
                fwd: Arc::new(fwd),
                sec: Arc::new(sec),
            },
        }
    }

    pub(crate) fn semilocal_to_mod(src: &RingHandle, dst: &RingHandle, m: u64) -> RingMap {
        RingMap {
            src: src.clone(),
            dst: dst.clone(),
            kind: MapKind::SemilocalToMod { m },
        }
    }

    pub(crate) fn componentwise(src: &RingHandle, dst: &RingHandle, maps: Vec<RingMap>) -> RingMap {
        RingMap {
            src: src.clone(),
            dst: dst.clone(),
            kind: MapKind::Componentwise(maps),
        }
    }

    pub(crate) fn projection(src: &RingHandle, factor: usize) -> RingMap {
        let dst = src.product_factors().expect("product source")[factor].clone();
        RingMap {
            src: src.clone(),
            dst,
            kind: MapKind::Projection { factor },
        }
    }

    pub(crate) fn compose(first: RingMap, second: RingMap) -> RingMap {
        RingMap {
            src: first.src.clone(),
            dst: second.dst.clone(),
            kind: MapKind::Compose(Box::new(first), Box::new(second)),
        }
    }

    pub fn apply(&self, e: &RingElement) -> Result<RingElement> {
        self.src.check(e)?;
        match &self.kind {
            MapKind::Identity => Ok(e.clone()),
            MapKind::FiniteTable { fwd, .. } => {
                let i = e.as_index()?;
                Ok(RingElement::Int(fwd[i as usize]))
            }
            MapKind::SemilocalToMod { m } => {
                let c = self.src.sl().expect("semilocal source");
                let (num, den) = c.check(e)?;
                if *m == 1 {
                    return Ok(RingElement::Int(0));
                }
                let den_mod = (den.rem_euclid(*m as i64)) as u64;
                let inv = mod_inverse(den_mod, *m).ok_or_else(|| {
                    Error::Encoding(format!("denominator {den} not invertible mod {m}"))
                })?;
                let num_mod = (num.rem_euclid(*m as i64)) as u64;
                Ok(RingElement::Int((num_mod * inv) % m))
            }
            MapKind::Componentwise(maps) => match e {
                RingElement::Tuple(parts) => {
                    let imgs: Result<Vec<RingElement>> = maps
                        .iter()
                        .zip(parts)
                        .map(|(m, p)| m.apply(p))
                        .collect();
                    Ok(RingElement::Tuple(imgs?))
                }
                other => Err(Error::Encoding(format!("expected a tuple, got {other}"))),
            },
            MapKind::Projection { factor } => match e {
                RingElement::Tuple(parts) => Ok(parts[*factor].clone()),
                other => Err(Error::Encoding(format!("expected a tuple, got {other}"))),
            },
            MapKind::Compose(first, second) => second.apply(&first.apply(e)?),
        }
    }

    /// Canonical section: the smallest preimage under the canonical order.
    pub fn section(&self, e: &RingElement) -> Result<RingElement> {
        self.dst.check(e)?;
        match &self.kind {
            MapKind::Identity => Ok(e.clone()),
            MapKind::FiniteTable { sec, .. } => {
                let i = e.as_index()?;
                Ok(RingElement::Int(sec[i as usize]))
            }
            MapKind::SemilocalToMod { .. } => {
                let i = e.as_index()?;
                Ok(RingElement::Frac {
                    num: i as i64,
                    den: 1,
                })
            }
            MapKind::Componentwise(maps) => match e {
                RingElement::Tuple(parts) => {
                    let pres: Result<Vec<RingElement>> = maps
                        .iter()
                        .zip(parts)
                        .map(|(m, p)| m.section(p))
                        .collect();
                    Ok(RingElement::Tuple(pres?))
                }
                other => Err(Error::Encoding(format!("expected a tuple, got {other}"))),
            },
            MapKind::Projection { factor } => {
                let fs = self.src.product_factors().expect("product source");
                let parts: Vec<RingElement> = fs
                    .iter()
                    .enumerate()
                    .map(|(i, f)| if i == *factor { e.clone() } else { f.zero() })
                    .collect();
                Ok(RingElement::Tuple(parts))
            }
            MapKind::Compose(first, second) => first.section(&second.section(e)?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: u64) -> RingHandle {
        ring_from_descriptor(&RingDescriptor::QuotientInt { modulus: n }).unwrap()
    }

    #[test]
    fn ring_sizes_from_descriptors() {
        assert_eq!(zn(6).size(), Some(6));
        let f4 = ring_from_descriptor(&RingDescriptor::PolyQuotient {
            p: 2,
            modulus_poly: vec![1, 1, 1],
        })
        .unwrap();
        assert_eq!(f4.size(), Some(4));
        let q = ring_from_descriptor(&RingDescriptor::Quotient {
            base: Box::new(RingDescriptor::QuotientInt { modulus: 12 }),
            ideal_gens: vec![RingElement::Int(6)],
        })
        .unwrap();
        assert_eq!(q.size(), Some(6));
    }

    #[test]
    fn arith_examples() {
        let r = zn(6);
        // 4*5 = 20 = 2 mod 6 (integer oracle)
        assert_eq!(
            r.mul(&RingElement::Int(4), &RingElement::Int(5)).unwrap(),
            RingElement::Int(2)
        );
        for a in 0..6 {
            let a = RingElement::Int(a);
            assert_eq!(r.add(&a, &r.zero()).unwrap(), a);
        }
        let f4 = ring_from_descriptor(&RingDescriptor::PolyQuotient {
            p: 2,
            modulus_poly: vec![1, 1, 1],
        })
        .unwrap();
        assert_eq!(
            f4.mul(&RingElement::Int(2), &RingElement::Int(2)).unwrap(),
            RingElement::Int(3)
        );
    }

    #[test]
    fn unit_examples() {
        let r = zn(6);
        let (ok, inv) = r.is_unit(&RingElement::Int(5)).unwrap();
        assert!(ok);
        assert_eq!(inv, Some(RingElement::Int(5))); // 25 = 1 mod 6
        let (ok, _) = r.is_unit(&RingElement::Int(2)).unwrap();
        assert!(!ok);

        let sl = ring_from_descriptor(&RingDescriptor::SemilocalInt { primes: vec![2, 3] }).unwrap();
        let (ok, inv) = sl.is_unit(&RingElement::Frac { num: 5, den: 7 }).unwrap();
        assert!(ok);
        assert_eq!(inv, Some(RingElement::Frac { num: 7, den: 5 }));
    }

    #[test]
    fn predicate_examples() {
        let z6 = zn(6);
        assert!(z6.element_facts(&RingElement::Int(3)).unwrap().idempotent);
        let z4 = zn(4);
        let facts = z4.element_facts(&RingElement::Int(2)).unwrap();
        assert!(facts.nilpotent);
        assert_eq!(facts.nilpotency_index, Some(2));
        let zero_facts = z4.element_facts(&RingElement::Int(0)).unwrap();
        assert!(zero_facts.idempotent && zero_facts.nilpotent);
        assert_eq!(zero_facts.nilpotency_index, Some(1));
    }

    #[test]
    fn idempotent_sets() {
        let ids: Vec<u64> = zn(6)
            .idempotents()
            .iter()
            .map(|e| e.as_index().unwrap())
            .collect();
        assert_eq!(ids, vec![0, 1, 3, 4]);
        let ids4: Vec<u64> = zn(4)
            .idempotents()
            .iter()
            .map(|e| e.as_index().unwrap())
            .collect();
        assert_eq!(ids4, vec![0, 1]);
        let f3 = zn(3);
        assert_eq!(f3.idempotents().len(), 2);
    }

    #[test]
    fn idempotents_closed_under_lattice_ops() {
        for n in [4u64, 6, 12, 30, 36] {
            let r = zn(n);
            let one = r.one();
            let ids = r.idempotents().to_vec();
            for e in &ids {
                let complement = r.sub(&one, e).unwrap();
                assert!(ids.contains(&complement));
                for f in &ids {
                    let meet = r.mul(e, f).unwrap();
                    assert!(ids.contains(&meet));
                    let join = r.sub(&r.add(e, f).unwrap(), &meet).unwrap();
                    assert!(ids.contains(&join));
                }
            }
        }
    }

    #[test]
    fn product_units_and_idempotents_are_componentwise() {
        let prod = ring_from_descriptor(&RingDescriptor::Product {
            factors: vec![
                RingDescriptor::QuotientInt { modulus: 2 },
                RingDescriptor::QuotientInt { modulus: 3 },
            ],
        })
        .unwrap();
        assert_eq!(prod.size(), Some(6));
        // index a*3+b; units are (1,1),(1,2) -> 4,5
        let mut units = Vec::new();
        for i in 0..6 {
            if prod.is_unit(&RingElement::Int(i)).unwrap().0 {
                units.push(i);
            }
        }
        assert_eq!(units, vec![4, 5]);
        let ids: Vec<u64> = prod
            .idempotents()
            .iter()
            .map(|e| e.as_index().unwrap())
            .collect();
        assert_eq!(ids, vec![0, 1, 3, 4]); // (0,0),(0,1),(1,0),(1,1)
    }

    #[test]
    fn axioms_hold_for_small_rings() {
        for n in 2..=16u64 {
            zn(n).verify_ring_axioms().unwrap();
        }
        let f8 = ring_from_descriptor(&RingDescriptor::PolyQuotient {
            p: 2,
            modulus_poly: vec![1, 1, 0, 1],
        })
        .unwrap();
        f8.verify_ring_axioms().unwrap();
    }

    #[test]
    fn semilocal_is_a_domain() {
        let sl = ring_from_descriptor(&RingDescriptor::SemilocalInt { primes: vec![2, 3] }).unwrap();
        let a = RingElement::Frac { num: 4, den: 7 };
        let b = RingElement::Frac { num: -3, den: 5 };
        let prod = sl.mul(&a, &b).unwrap();
        assert_eq!(prod, RingElement::Frac { num: -12, den: 35 });
        assert!(!sl.is_zero(&prod));
    }

    #[test]
    fn size_cap_fails_fast() {
        let err = ring_from_descriptor(&RingDescriptor::QuotientInt { modulus: 5000 }).unwrap_err();
        assert!(matches!(err, Error::SizeCap(_)));
    }

    #[test]
    fn zero_ring_is_representable() {
        let z = ring_from_descriptor(&RingDescriptor::Quotient {
            base: Box::new(RingDescriptor::QuotientInt { modulus: 6 }),
            ideal_gens: vec![RingElement::Int(1)],
        })
        .unwrap();
        assert!(z.is_zero_ring());
        assert_eq!(z.one(), z.zero());
    }
}
