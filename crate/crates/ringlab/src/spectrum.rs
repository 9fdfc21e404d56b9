//! Prime spectra as finite posets: enumeration, localization kernels,
//! localizations, max-regular ideals, and minimal-prime witnesses.
//!
//! Primes of a finite ring are found through its primitive idempotents: for
//! each primitive idempotent `e` the set `{a : a*e nilpotent}` is a prime
//! ideal, and these exhaust the spectrum. Localized integer rings contribute
//! the zero ideal below one prime per localized rational prime; products
//! contribute the disjoint union of their factor spectra.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{whole_ideal, IdealRep, SlIdeal};
use crate::ring::{RingDescriptor, RingElement, RingHandle, RingMap};
use crate::topology::SpectralSpace;

#[derive(Clone, Debug)]
pub struct SpecPoint {
    /// Stable identifier in the canonical enumeration.
    pub id: usize,
    pub ideal: IdealRep,
    pub maximal: bool,
    pub minimal: bool,
    /// Deterministic display form: element set for finite rings, `(0)` or
    /// `pA` for localized integer rings, `factor:inner` inside products.
    pub symbol: String,
}

#[derive(Clone, Debug)]
pub struct SpectrumGraph {
    pub points: Vec<SpecPoint>,
    /// `le[i][j]` iff the i-th prime is contained in the j-th.
    pub le: Vec<Vec<bool>>,
}

impl SpectrumGraph {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn max_ids(&self) -> Vec<usize> {
        self.points
            .iter()
            .filter(|p| p.maximal)
            .map(|p| p.id)
            .collect()
    }

    pub fn min_ids(&self) -> Vec<usize> {
        self.points
            .iter()
            .filter(|p| p.minimal)
            .map(|p| p.id)
            .collect()
    }

    /// The spectral space carried by the inclusion order.
    pub fn to_space(&self) -> SpectralSpace {
        let labels: Vec<String> = self.points.iter().map(|p| p.symbol.clone()).collect();
        let mut relations = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.le[i][j] {
                    relations.push((i, j));
                }
            }
        }
        SpectralSpace::from_order(labels, &relations).expect("spectrum order is a valid poset")
    }
}

/// Minimal nonzero idempotents under `e <= f iff ef = e`; pairwise
/// orthogonal with sum 1. The zero ring has none.
pub fn primitive_idempotents(ring: &RingHandle) -> Result<Vec<RingElement>> {
    let core = ring
        .fin()
        .ok_or_else(|| Error::Unsupported("primitive idempotents need a finite ring".into()))?;
    if core.is_zero_ring() {
        return Ok(Vec::new());
    }
    let idems = core.idempotents();
    let mut primitive = Vec::new();
    for &e in &idems {
        if e == 0 {
            continue;
        }
        let minimal = idems
            .iter()
            .all(|&f| f == 0 || f == e || core.mul(e, f) != f);
        if minimal {
            primitive.push(e);
        }
    }
    Ok(primitive.into_iter().map(RingElement::Int).collect())
}

/// Canonically ordered prime spectrum; cached per handle.
pub fn primes(ring: &RingHandle) -> Result<Arc<SpectrumGraph>> {
    if let Some(cached) = ring.0.spectrum_cache.get() {
        return Ok(cached.clone());
    }
    let spec = Arc::new(compute_primes(ring)?);
    let _ = ring.0.spectrum_cache.set(spec.clone());
    Ok(ring.0.spectrum_cache.get().unwrap().clone())
}

fn compute_primes(ring: &RingHandle) -> Result<SpectrumGraph> {
    if let Some(core) = ring.fin() {
        let mut ideals: Vec<Vec<u64>> = Vec::new();
        for e in primitive_idempotents(ring)? {
            let e = e.as_index().unwrap();
            let elements: Vec<u64> = (0..core.size)
                .filter(|&a| core.is_nilpotent(core.mul(a, e)))
                .collect();
            ideals.push(elements);
        }
        ideals.sort();
        ideals.dedup();
        let n = ideals.len();
        let points: Vec<SpecPoint> = ideals
            .into_iter()
            .enumerate()
            .map(|(id, elements)| {
                let ideal = IdealRep::finite(ring, elements);
                let symbol = ideal.describe();
                SpecPoint {
                    id,
                    ideal,
                    maximal: true,
                    minimal: true,
                    symbol,
                }
            })
            .collect();
        let le = identity_order(n);
        return Ok(SpectrumGraph { points, le });
    }
    if let Some(c) = ring.sl() {
        let mut points = vec![SpecPoint {
            id: 0,
            ideal: IdealRep::semilocal(SlIdeal::Zero),
            maximal: false,
            minimal: true,
            symbol: "(0)".into(),
        }];
        for (k, p) in c.primes.iter().enumerate() {
            points.push(SpecPoint {
                id: k + 1,
                ideal: IdealRep::semilocal(SlIdeal::Principal(*p)),
                maximal: true,
                minimal: false,
                symbol: format!("{p}A"),
            });
        }
        let n = points.len();
        let mut le = identity_order(n);
        for j in 1..n {
            le[0][j] = true;
        }
        return Ok(SpectrumGraph { points, le });
    }
    let factors = ring.product_factors().expect("product ring");
    let mut points = Vec::new();
    let mut blocks = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        let inner = primes(f)?;
        blocks.push(inner.clone());
        for p in &inner.points {
            let parts: Vec<IdealRep> = factors
                .iter()
                .enumerate()
                .map(|(j, g)| {
                    if j == i {
                        p.ideal.clone()
                    } else {
                        whole_ideal(g)
                    }
                })
                .collect();
            points.push(SpecPoint {
                id: points.len(),
                ideal: IdealRep::product(ring, parts),
                maximal: p.maximal,
                minimal: p.minimal,
                symbol: format!("{i}:{}", p.symbol),
            });
        }
    }
    let n = points.len();
    let mut le = identity_order(n);
    let mut offset = 0;
    for block in &blocks {
        for i in 0..block.len() {
            for j in 0..block.len() {
                if block.le[i][j] {
                    le[offset + i][offset + j] = true;
                }
            }
        }
        offset += block.len();
    }
    Ok(SpectrumGraph { points, le })
}

fn identity_order(n: usize) -> Vec<Vec<bool>> {
    (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect()
}

fn point<'a>(spec: &'a SpectrumGraph, id: usize) -> Result<&'a SpecPoint> {
    spec.points
        .get(id)
        .ok_or_else(|| Error::Encoding(format!("no prime with id {id}")))
}

/// Kernel of the canonical map into the localization at the given prime:
/// `{f : exists g outside the prime with fg = 0}`.
pub fn ker_pi(ring: &RingHandle, prime_id: usize) -> Result<IdealRep> {
    let kernels = ring.0.kernels_cache.get_or_init(|| {
        compute_kernels(ring).expect("kernels computable for every supported family")
    });
    kernels
        .get(prime_id)
        .cloned()
        .ok_or_else(|| Error::Encoding(format!("no prime with id {prime_id}")))
}

fn compute_kernels(ring: &RingHandle) -> Result<Vec<IdealRep>> {
    let spec = primes(ring)?;
    if let Some(core) = ring.fin() {
        let mut out = Vec::with_capacity(spec.len());
        for p in &spec.points {
            let members = p.ideal.elements().unwrap();
            let outside: Vec<u64> =
                (0..core.size).filter(|i| members.binary_search(i).is_err()).collect();
            let elements: Vec<u64> = (0..core.size)
                .filter(|&f| outside.iter().any(|&g| core.mul(f, g) == 0))
                .collect();
            out.push(IdealRep::finite(ring, elements));
        }
        return Ok(out);
    }
    if ring.sl().is_some() {
        return Ok(spec
            .points
            .iter()
            .map(|_| IdealRep::semilocal(SlIdeal::Zero))
            .collect());
    }
    let factors = ring.product_factors().expect("product ring");
    let mut out = Vec::with_capacity(spec.len());
    for (i, f) in factors.iter().enumerate() {
        let inner_spec = primes(f)?;
        for inner_id in 0..inner_spec.len() {
            let inner_kernel = ker_pi(f, inner_id)?;
            let parts: Vec<IdealRep> = factors
                .iter()
                .enumerate()
                .map(|(j, g)| {
                    if j == i {
                        inner_kernel.clone()
                    } else {
                        whole_ideal(g)
                    }
                })
                .collect();
            out.push(IdealRep::product(ring, parts));
        }
    }
    Ok(out)
}

/// Localization at a prime with the canonical map. Finite rings localize as
/// the quotient by the localization kernel; localized integer rings localize
/// to the single-prime ring, except at the zero prime whose localization is
/// the rationals and is rejected.
pub fn localize(ring: &RingHandle, prime_id: usize) -> Result<(RingHandle, RingMap)> {
    localize_core(ring, prime_id, None)
}

pub(crate) fn localize_core(
    ring: &RingHandle,
    prime_id: usize,
    desc_override: Option<RingDescriptor>,
) -> Result<(RingHandle, RingMap)> {
    let spec = primes(ring)?;
    point(&spec, prime_id)?;
    let desc = desc_override.unwrap_or_else(|| RingDescriptor::Localization {
        base: Box::new(ring.descriptor().clone()),
        prime: prime_id,
    });
    if ring.fin().is_some() {
        let kernel = ker_pi(ring, prime_id)?;
        return crate::ideal::quotient_core(ring, &kernel, Some(desc));
    }
    if let Some(c) = ring.sl() {
        if prime_id == 0 {
            return Err(Error::UnsupportedLocalization(
                "localizing at the zero prime would be the field of fractions".into(),
            ));
        }
        let p = c.primes[prime_id - 1];
        let handle = RingHandle::from_parts(
            desc,
            crate::ring::Repr::Semilocal(crate::ring::SemilocalCore::new(vec![p])),
            ring.caps(),
        );
        let map = RingMap {
            src: ring.clone(),
            dst: handle.clone(),
            kind: crate::ring::MapKind::Identity,
        };
        return Ok((handle, map));
    }
    let factors = ring.product_factors().expect("product ring");
    let mut offset = 0;
    for (i, f) in factors.iter().enumerate() {
        let len = primes(f)?.len();
        if prime_id < offset + len {
            let proj = RingMap::projection(ring, i);
            let (local, inner_map) = localize(f, prime_id - offset)?;
            let map = RingMap::compose(proj, inner_map);
            let handle = RingHandle::from_parts(
                desc,
                match &local.0.repr {
                    crate::ring::Repr::Finite(c) => crate::ring::Repr::Finite(c.clone()),
                    crate::ring::Repr::Semilocal(c) => crate::ring::Repr::Semilocal(c.clone()),
                    crate::ring::Repr::Product(fs) => crate::ring::Repr::Product(fs.clone()),
                },
                ring.caps(),
            );
            let map = RingMap {
                src: map.src,
                dst: handle.clone(),
                kind: map.kind,
            };
            return Ok((handle, map));
        }
        offset += len;
    }
    unreachable!("prime id validated above")
}

/// A cofactor witness for membership in the localization nilpotents: some
/// `g` outside the prime with `f*g` nilpotent, if one exists.
pub fn minimal_prime_witness(
    ring: &RingHandle,
    prime_id: usize,
    f: &RingElement,
) -> Result<Option<RingElement>> {
    ring.check(f)?;
    let spec = primes(ring)?;
    let p = point(&spec, prime_id)?;
    if !p.ideal.contains(ring, f) {
        return Err(Error::Precondition(format!(
            "element {f} does not lie in prime #{prime_id}"
        )));
    }
    witness_unchecked(ring, &p.ideal, f)
}

fn witness_unchecked(
    ring: &RingHandle,
    prime: &IdealRep,
    f: &RingElement,
) -> Result<Option<RingElement>> {
    if let Some(core) = ring.fin() {
        let fi = f.as_index().unwrap();
        let members = prime.elements().unwrap();
        for g in 0..core.size {
            if members.binary_search(&g).is_ok() {
                continue;
            }
            if core.is_nilpotent(core.mul(fi, g)) {
                return Ok(Some(RingElement::Int(g)));
            }
        }
        return Ok(None);
    }
    if ring.sl().is_some() {
        // a domain: fg nilpotent means fg = 0, so only f = 0 has a witness
        return Ok(if ring.is_zero(f) {
            Some(RingElement::Frac { num: 1, den: 1 })
        } else {
            None
        });
    }
    let factors = ring.product_factors().expect("product ring");
    let parts = prime.parts().expect("product prime");
    let xs = match f {
        RingElement::Tuple(xs) => xs,
        _ => unreachable!("checked"),
    };
    // the prime is proper in exactly one factor; the witness must avoid the
    // prime there and kill every other component
    let i = parts
        .iter()
        .zip(factors)
        .position(|(part, fac)| !part.is_whole(fac))
        .expect("prime ideal is proper");
    let inner = witness_unchecked(&factors[i], &parts[i], &xs[i])?;
    Ok(inner.map(|w| {
        RingElement::Tuple(
            factors
                .iter()
                .enumerate()
                .map(|(j, fac)| if j == i { w.clone() } else { fac.zero() })
                .collect(),
        )
    }))
}

/// Decides minimality of a prime via cofactor witnesses: every member must
/// admit one.
pub fn is_minimal_by_witness(ring: &RingHandle, prime_id: usize) -> Result<bool> {
    let spec = primes(ring)?;
    let p = point(&spec, prime_id)?;
    minimal_by_witness_unchecked(ring, &p.ideal)
}

fn minimal_by_witness_unchecked(ring: &RingHandle, prime: &IdealRep) -> Result<bool> {
    if ring.fin().is_some() {
        for &f in prime.elements().unwrap() {
            if witness_unchecked(ring, prime, &RingElement::Int(f))?.is_none() {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    if ring.sl().is_some() {
        // only the zero prime: every nonzero member of pA lacks a witness
        return Ok(prime.is_zero_ideal(ring));
    }
    let factors = ring.product_factors().expect("product ring");
    let parts = prime.parts().expect("product prime");
    let i = parts
        .iter()
        .zip(factors)
        .position(|(part, fac)| !part.is_whole(fac))
        .expect("prime ideal is proper");
    minimal_by_witness_unchecked(&factors[i], &parts[i])
}

/// The maximal proper regular ideals. For a finite ring these are `A(1-e)`
/// over the primitive idempotents `e`, one per connected component.
pub fn max_regular_ideals(ring: &RingHandle) -> Result<Vec<IdealRep>> {
    if ring.fin().is_some() {
        let one = ring.one();
        let mut out = Vec::new();
        for e in primitive_idempotents(ring)? {
            let complement = ring.sub(&one, &e)?;
            out.push(crate::ideal::principal_ideal(ring, &complement)?);
        }
        let mut sets: Vec<Vec<u64>> = out
            .iter()
            .map(|i| i.elements().unwrap().to_vec())
            .collect();
        sets.sort();
        sets.dedup();
        return Ok(sets
            .into_iter()
            .map(|elements| IdealRep::finite(ring, elements))
            .collect());
    }
    if ring.sl().is_some() {
        return Ok(vec![IdealRep::semilocal(SlIdeal::Zero)]);
    }
    let factors = ring.product_factors().expect("product ring");
    let mut out = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        for m in max_regular_ideals(f)? {
            let parts: Vec<IdealRep> = factors
                .iter()
                .enumerate()
                .map(|(j, g)| if j == i { m.clone() } else { whole_ideal(g) })
                .collect();
            out.push(IdealRep::product(ring, parts));
        }
    }
    Ok(out)
}

/// Lexicographically first pair `(f, g)` with `f` outside the first prime,
/// `g` outside the second, and `fg = 0`; `None` when no such pair exists.
pub fn separating_pair(
    ring: &RingHandle,
    p_id: usize,
    q_id: usize,
) -> Result<Option<(RingElement, RingElement)>> {
    let spec = primes(ring)?;
    let p = point(&spec, p_id)?.ideal.clone();
    let q = point(&spec, q_id)?.ideal.clone();
    separating_pair_unchecked(ring, &p, &q)
}

fn separating_pair_unchecked(
    ring: &RingHandle,
    p: &IdealRep,
    q: &IdealRep,
) -> Result<Option<(RingElement, RingElement)>> {
    if let Some(core) = ring.fin() {
        let pm = p.elements().unwrap();
        let qm = q.elements().unwrap();
        for f in 0..core.size {
            if pm.binary_search(&f).is_ok() {
                continue;
            }
            for g in 0..core.size {
                if qm.binary_search(&g).is_ok() {
                    continue;
                }
                if core.mul(f, g) == 0 {
                    return Ok(Some((RingElement::Int(f), RingElement::Int(g))));
                }
            }
        }
        return Ok(None);
    }
    if ring.sl().is_some() {
        // a domain admits no separating pair
        return Ok(None);
    }
    let factors = ring.product_factors().expect("product ring");
    let p_parts = p.parts().expect("product prime");
    let q_parts = q.parts().expect("product prime");
    let pi = p_parts
        .iter()
        .zip(factors)
        .position(|(part, fac)| !part.is_whole(fac))
        .expect("proper prime");
    let qi = q_parts
        .iter()
        .zip(factors)
        .position(|(part, fac)| !part.is_whole(fac))
        .expect("proper prime");
    if pi != qi {
        // indicator elements of the two factors multiply to zero
        let f = RingElement::Tuple(
            factors
                .iter()
                .enumerate()
                .map(|(j, fac)| if j == pi { fac.one() } else { fac.zero() })
                .collect(),
        );
        let g = RingElement::Tuple(
            factors
                .iter()
                .enumerate()
                .map(|(j, fac)| if j == qi { fac.one() } else { fac.zero() })
                .collect(),
        );
        return Ok(Some((f, g)));
    }
    let inner = separating_pair_unchecked(&factors[pi], &p_parts[pi], &q_parts[pi])?;
    Ok(inner.map(|(f, g)| {
        let embed = |w: &RingElement| {
            RingElement::Tuple(
                factors
                    .iter()
                    .enumerate()
                    .map(|(j, fac)| if j == pi { w.clone() } else { fac.zero() })
                    .collect(),
            )
        };
        (embed(&f), embed(&g))
    }))
}

/// Tensor non-vanishing relation between two primes, decided elementwise:
/// related iff no separating pair exists.
pub fn s_related(ring: &RingHandle, p_id: usize, q_id: usize) -> Result<bool> {
    Ok(separating_pair(ring, p_id, q_id)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{enumerate_ideals, ideal_intersect};
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

    #[test]
    fn primitive_idempotent_examples() {
        let ids = |r: &RingHandle| -> Vec<u64> {
            primitive_idempotents(r)
                .unwrap()
                .iter()
                .map(|e| e.as_index().unwrap())
                .collect()
        };
        assert_eq!(ids(&zn(6)), vec![3, 4]);
        assert_eq!(ids(&zn(12)), vec![4, 9]);
        assert_eq!(ids(&zn(5)), vec![1]);
    }

    #[test]
    fn primitive_idempotents_are_orthogonal_and_sum_to_one() {
        for n in 2..=40u64 {
            let r = zn(n);
            let prims = primitive_idempotents(&r).unwrap();
            let mut total = r.zero();
            for (i, e) in prims.iter().enumerate() {
                total = r.add(&total, e).unwrap();
                for (j, f) in prims.iter().enumerate() {
                    if i != j {
                        assert!(r.is_zero(&r.mul(e, f).unwrap()));
                    }
                }
            }
            assert!(r.is_one(&total), "Z/{n}");
        }
    }

    #[test]
    fn primes_of_z6() {
        let r = zn(6);
        let spec = primes(&r).unwrap();
        assert_eq!(spec.len(), 2);
        assert_eq!(spec.points[0].ideal.elements().unwrap(), &[0, 2, 4]);
        assert_eq!(spec.points[1].ideal.elements().unwrap(), &[0, 3]);
        assert!(spec.points.iter().all(|p| p.maximal && p.minimal));
        assert!(!spec.le[0][1] && !spec.le[1][0]);
    }

    #[test]
    fn primes_of_semilocal() {
        let r = sl(&[2, 3]);
        let spec = primes(&r).unwrap();
        assert_eq!(spec.len(), 3);
        assert_eq!(spec.points[0].symbol, "(0)");
        assert_eq!(spec.points[1].symbol, "2A");
        assert_eq!(spec.points[2].symbol, "3A");
        assert!(spec.le[0][1] && spec.le[0][2]);
        assert!(!spec.le[1][2] && !spec.le[2][1]);
        assert!(spec.points[0].minimal && !spec.points[0].maximal);
        assert!(spec.points[1].maximal && !spec.points[1].minimal);
    }

    // independent oracle: a subset is a prime ideal iff it is a proper
    // ideal with the product-splitting property
    fn is_prime_ideal(r: &RingHandle, members: &[u64]) -> bool {
        let core = r.fin().unwrap();
        if members.len() as u64 == core.size {
            return false;
        }
        for a in 0..core.size {
            for b in 0..core.size {
                let in_a = members.binary_search(&a).is_ok();
                let in_b = members.binary_search(&b).is_ok();
                let prod_in = members.binary_search(&core.mul(a, b)).is_ok();
                if prod_in && !in_a && !in_b {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn primes_match_ideal_enumeration_oracle() {
        for n in 2..=36u64 {
            let r = zn(n);
            let spec = primes(&r).unwrap();
            let from_spec: Vec<Vec<u64>> = spec
                .points
                .iter()
                .map(|p| p.ideal.elements().unwrap().to_vec())
                .collect();
            let mut oracle: Vec<Vec<u64>> = enumerate_ideals(&r)
                .unwrap()
                .into_iter()
                .map(|i| i.elements().unwrap().to_vec())
                .filter(|members| is_prime_ideal(&r, members))
                .collect();
            oracle.sort();
            assert_eq!(from_spec, oracle, "Z/{n}");
        }
    }

    #[test]
    fn kernel_examples() {
        let z12 = zn(12);
        let spec = primes(&z12).unwrap();
        // prime (2) = evens sorts first
        assert_eq!(
            spec.points[0].ideal.elements().unwrap(),
            &[0, 2, 4, 6, 8, 10]
        );
        assert_eq!(ker_pi(&z12, 0).unwrap().elements().unwrap(), &[0, 4, 8]);
        let z6 = zn(6);
        assert_eq!(ker_pi(&z6, 0).unwrap().elements().unwrap(), &[0, 2, 4]);
        let s = sl(&[2, 3]);
        assert!(ker_pi(&s, 1).unwrap().is_zero_ideal(&s));
    }

    #[test]
    fn kernel_invariants() {
        for n in [4u64, 6, 8, 12, 18, 24, 30, 36] {
            let r = zn(n);
            let spec = primes(&r).unwrap();
            let mut meet = crate::ideal::whole_ideal(&r);
            for p in &spec.points {
                let k = ker_pi(&r, p.id).unwrap();
                // kernel sits inside its prime
                for &f in k.elements().unwrap() {
                    assert!(p.ideal.contains(&r, &RingElement::Int(f)));
                }
                if p.maximal {
                    meet = ideal_intersect(&r, &meet, &k).unwrap();
                }
            }
            assert_eq!(meet.elements().unwrap(), &[0], "Z/{n}");
        }
    }

    #[test]
    fn localize_examples() {
        let z12 = zn(12);
        let (at2, _) = localize(&z12, 0).unwrap();
        assert_eq!(at2.size(), Some(4));
        let z6 = zn(6);
        let spec = primes(&z6).unwrap();
        let at3 = spec
            .points
            .iter()
            .find(|p| p.ideal.elements().unwrap() == [0, 3])
            .unwrap()
            .id;
        let (loc, map) = localize(&z6, at3).unwrap();
        assert_eq!(loc.size(), Some(3));
        assert_eq!(map.apply(&RingElement::Int(3)).unwrap(), RingElement::Int(0));

        let s = sl(&[2, 3]);
        let (at2, _) = localize(&s, 1).unwrap();
        assert!(at2.sl().is_some());
        assert_eq!(at2.sl().unwrap().primes, vec![2]);
        assert!(matches!(
            localize(&s, 0).unwrap_err(),
            Error::UnsupportedLocalization(_)
        ));
    }

    // fraction-construction oracle: the localization of a finite ring at a
    // prime, built from genuine fractions a/s with the standard equivalence,
    // has exactly as many classes as the kernel quotient
    fn fraction_localization_size(r: &RingHandle, prime: &IdealRep) -> usize {
        let core = r.fin().unwrap();
        let members = prime.elements().unwrap();
        let outside: Vec<u64> =
            (0..core.size).filter(|i| members.binary_search(i).is_err()).collect();
        let eq = |a: u64, s: u64, b: u64, t: u64| {
            outside
                .iter()
                .any(|&u| core.mul(u, core.sub(core.mul(a, t), core.mul(b, s))) == 0)
        };
        let mut classes: Vec<(u64, u64)> = Vec::new();
        for a in 0..core.size {
            for &s in &outside {
                if !classes.iter().any(|&(b, t)| eq(a, s, b, t)) {
                    classes.push((a, s));
                }
            }
        }
        classes.len()
    }

    #[test]
    fn localization_agrees_with_fraction_oracle() {
        for n in [4u64, 6, 8, 12, 18, 20] {
            let r = zn(n);
            let spec = primes(&r).unwrap();
            for p in &spec.points {
                let (loc, _) = localize(&r, p.id).unwrap();
                assert_eq!(
                    loc.size().unwrap() as usize,
                    fraction_localization_size(&r, &p.ideal),
                    "Z/{n} at {:?}",
                    p.ideal.elements()
                );
            }
        }
    }

    #[test]
    fn witness_examples() {
        let z12 = zn(12);
        // prime (2) has id 0; 2*3 = 6 is nilpotent
        assert_eq!(
            minimal_prime_witness(&z12, 0, &RingElement::Int(2)).unwrap(),
            Some(RingElement::Int(3))
        );
        let s = sl(&[2, 3]);
        assert_eq!(
            minimal_prime_witness(&s, 1, &RingElement::Frac { num: 2, den: 1 }).unwrap(),
            None
        );
        assert_eq!(
            minimal_prime_witness(&s, 0, &RingElement::Frac { num: 0, den: 1 }).unwrap(),
            Some(RingElement::Frac { num: 1, den: 1 })
        );
    }

    #[test]
    fn witness_minimality_matches_poset_minimality() {
        for n in [4u64, 6, 12, 30] {
            let r = zn(n);
            let spec = primes(&r).unwrap();
            for p in &spec.points {
                assert_eq!(is_minimal_by_witness(&r, p.id).unwrap(), p.minimal);
            }
        }
        let s = sl(&[2, 3]);
        let spec = primes(&s).unwrap();
        for p in &spec.points {
            assert_eq!(is_minimal_by_witness(&s, p.id).unwrap(), p.minimal);
        }
    }

    #[test]
    fn max_regular_examples() {
        let z6 = zn(6);
        let ideals = max_regular_ideals(&z6).unwrap();
        assert_eq!(ideals.len(), 2);
        assert_eq!(ideals[0].elements().unwrap(), &[0, 2, 4]);
        assert_eq!(ideals[1].elements().unwrap(), &[0, 3]);
        let z4 = zn(4);
        let ideals = max_regular_ideals(&z4).unwrap();
        assert_eq!(ideals.len(), 1);
        assert_eq!(ideals[0].elements().unwrap(), &[0]);
        let f7 = zn(7);
        let ideals = max_regular_ideals(&f7).unwrap();
        assert_eq!(ideals.len(), 1);
        assert_eq!(ideals[0].elements().unwrap(), &[0]);
    }

    #[test]
    fn s_relation_is_trivial_on_finite_spectra() {
        for n in [6u64, 12, 30] {
            let r = zn(n);
            let spec = primes(&r).unwrap();
            for p in &spec.points {
                for q in &spec.points {
                    assert_eq!(s_related(&r, p.id, q.id).unwrap(), p.id == q.id);
                }
            }
        }
        let s = sl(&[2, 3]);
        let spec = primes(&s).unwrap();
        for p in &spec.points {
            for q in &spec.points {
                assert!(s_related(&s, p.id, q.id).unwrap());
            }
        }
    }

    #[test]
    fn product_spectrum_is_disjoint_union() {
        let desc = RingDescriptor::Product {
            factors: vec![
                RingDescriptor::SemilocalInt { primes: vec![2, 3] },
                RingDescriptor::SemilocalInt { primes: vec![2, 3] },
            ],
        };
        let r = ring_from_descriptor(&desc).unwrap();
        let spec = primes(&r).unwrap();
        assert_eq!(spec.len(), 6);
        assert_eq!(spec.max_ids().len(), 4);
        assert_eq!(spec.min_ids().len(), 2);
        // no order across the two blocks
        assert!(!spec.le[0][3] && !spec.le[3][0]);
        assert!(spec.le[0][1] && spec.le[3][4]);
    }
}
