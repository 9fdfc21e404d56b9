//! Constructive algorithms: clean decompositions, exchange idempotents,
//! idempotent lifting, canonical decomposition into local factors, and
//! orthogonal-idempotent gluing of local solutions of polynomial systems.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ideal::{is_regular, nilradical, IdealRep};
use crate::poly::{map_system, system_satisfied, PolySystem};
use crate::ring::{RingElement, RingHandle, RingMap};
use crate::spectrum::{ker_pi, localize, primes};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleanDecomposition {
    pub idempotent: RingElement,
    pub unit: RingElement,
}

/// Writes `f = e + u` with `e` idempotent and `u` a unit, picking the
/// idempotent with the smallest canonical encoding.
pub fn clean_decompose(ring: &RingHandle, f: &RingElement) -> Result<CleanDecomposition> {
    ring.check(f)?;
    if ring.product_factors().is_some() {
        return Err(Error::Unsupported(
            "clean decomposition is implemented for finite and semilocal rings".into(),
        ));
    }
    for e in ring.idempotents() {
        let u = ring.sub(f, e)?;
        if ring.is_unit_unchecked(&u).0 {
            return Ok(CleanDecomposition {
                idempotent: e.clone(),
                unit: u,
            });
        }
    }
    Err(Error::NoDecomposition(f.to_string()))
}

/// The primitive idempotent congruent to 1 modulo the localization kernel
/// of the given prime; it maps to 1 in that local factor and to 0 in every
/// other.
fn factor_idempotent(ring: &RingHandle, prime_id: usize) -> Result<RingElement> {
    let kernel = ker_pi(ring, prime_id)?;
    let one = ring.one();
    crate::spectrum::primitive_idempotents(ring)?
        .into_iter()
        .find(|e| kernel.contains(ring, &ring.sub(&one, e).unwrap()))
        .ok_or_else(|| {
            Error::Encoding(format!(
                "no primitive idempotent supported on prime #{prime_id}"
            ))
        })
}

/// The canonical exchange idempotent of `f`: the sum of the primitive
/// idempotents of the local factors in which `f` is invertible. Both
/// membership conditions `e in Af` and `1-e in A(1-f)` are verified exactly
/// before the element is returned.
pub fn exchange_idempotent(ring: &RingHandle, f: &RingElement) -> Result<RingElement> {
    ring.check(f)?;
    if ring.fin().is_none() {
        return Err(Error::Unsupported(
            "exchange idempotents are computed on finite rings".into(),
        ));
    }
    let spec = primes(ring)?;
    let mut e = ring.zero();
    for p in &spec.points {
        if !p.ideal.contains(ring, f) {
            e = ring.add(&e, &factor_idempotent(ring, p.id)?)?;
        }
    }
    let one = ring.one();
    let af = crate::ideal::principal_ideal(ring, f)?;
    let complement = ring.sub(&one, f)?;
    let a1f = crate::ideal::principal_ideal(ring, &complement)?;
    let co = ring.sub(&one, &e)?;
    if !ring.is_idempotent(&e) || !af.contains(ring, &e) || !a1f.contains(ring, &co) {
        return Err(Error::NoLift(format!(
            "no exchange idempotent for {f}; the ring is not clean"
        )));
    }
    Ok(e)
}

#[derive(Clone, Debug)]
pub struct LiftOutcome {
    pub idempotent: RingElement,
    /// Number of cubic-iteration steps taken when the ideal consists of
    /// nilpotents; `None` when the exhaustive fallback was used.
    pub newton_steps: Option<u64>,
}

/// Lifts an idempotent of `A/I` along the quotient: given `f` with
/// `f^2 - f` in `I`, finds an idempotent `e` of `A` with `f - e` in `I`.
///
/// When `I` lies inside the nilradical the cubic Newton step
/// `e <- 3e^2 - 2e^3` from `e_0 = f` converges to the unique lift; for a
/// general ideal the idempotents are scanned for the smallest valid lift.
pub fn lift_idempotent(ring: &RingHandle, ideal: &IdealRep, f: &RingElement) -> Result<LiftOutcome> {
    ring.check(f)?;
    let sq = ring.mul(f, f)?;
    let defect = ring.sub(&sq, f)?;
    if !ideal.contains(ring, &defect) {
        return Err(Error::Precondition(format!(
            "{f}^2 - {f} does not lie in the ideal"
        )));
    }
    let nil = nilradical(ring);
    let inside_nil = match ideal.elements() {
        Some(members) => members
            .iter()
            .all(|&x| nil.contains(ring, &RingElement::Int(x))),
        None => ideal.is_zero_ideal(ring),
    };
    if inside_nil {
        let mut e = f.clone();
        let mut steps = 0u64;
        loop {
            let e2 = ring.mul_unchecked(&e, &e);
            let e3 = ring.mul_unchecked(&e2, &e);
            let three_e2 = {
                let t = ring.add_unchecked(&e2, &e2);
                ring.add_unchecked(&t, &e2)
            };
            let two_e3 = ring.add_unchecked(&e3, &e3);
            let next = ring.sub(&three_e2, &two_e3)?;
            if next == e {
                break;
            }
            e = next;
            steps += 1;
        }
        if !ring.is_idempotent(&e) {
            return Err(Error::NoLift(format!("iteration stalled at {e}")));
        }
        return Ok(LiftOutcome {
            idempotent: e,
            newton_steps: Some(steps),
        });
    }
    for e in ring.idempotents() {
        let diff = ring.sub(f, e)?;
        if ideal.contains(ring, &diff) {
            return Ok(LiftOutcome {
                idempotent: e.clone(),
                newton_steps: None,
            });
        }
    }
    Err(Error::NoLift(format!("no idempotent congruent to {f}")))
}

pub struct CrtFactor {
    pub prime_id: usize,
    pub ring: RingHandle,
    pub map: RingMap,
}

/// Canonical decomposition of a finite ring into its localizations at
/// maximal ideals, with exhaustively verified mutually inverse maps.
pub struct CrtDecomposition {
    pub source: RingHandle,
    pub factors: Vec<CrtFactor>,
    backward: BTreeMap<Vec<u64>, u64>,
}

impl CrtDecomposition {
    pub fn forward(&self, a: &RingElement) -> Result<Vec<RingElement>> {
        self.factors.iter().map(|f| f.map.apply(a)).collect()
    }

    pub fn backward(&self, images: &[RingElement]) -> Result<RingElement> {
        let key: Vec<u64> = images
            .iter()
            .map(|e| e.as_index())
            .collect::<Result<_>>()?;
        self.backward
            .get(&key)
            .map(|&a| RingElement::Int(a))
            .ok_or_else(|| Error::Encoding("image tuple outside the product".into()))
    }
}

pub fn crt_decomposition(ring: &RingHandle) -> Result<CrtDecomposition> {
    let core = ring
        .fin()
        .ok_or_else(|| Error::Unsupported("canonical decomposition needs a finite ring".into()))?;
    let spec = primes(ring)?;
    let mut factors = Vec::new();
    for p in &spec.points {
        if !p.maximal {
            continue;
        }
        let (local, map) = localize(ring, p.id)?;
        factors.push(CrtFactor {
            prime_id: p.id,
            ring: local,
            map,
        });
    }
    let mut backward = BTreeMap::new();
    for a in 0..core.size {
        let key: Vec<u64> = factors
            .iter()
            .map(|f| f.map.apply(&RingElement::Int(a)).unwrap().as_index().unwrap())
            .collect();
        if backward.insert(key, a).is_some() {
            return Err(Error::Encoding(
                "canonical decomposition map is not injective".into(),
            ));
        }
    }
    let product_size: u64 = factors
        .iter()
        .map(|f| f.ring.size().expect("finite factor"))
        .product();
    if product_size != core.size {
        return Err(Error::Encoding(
            "canonical decomposition map is not surjective".into(),
        ));
    }
    Ok(CrtDecomposition {
        source: ring.clone(),
        factors,
        backward,
    })
}

/// Exhaustive check that the decomposition maps are mutually inverse ring
/// isomorphisms.
pub fn verify_crt(dec: &CrtDecomposition) -> Result<()> {
    let n = dec.source.size().expect("finite source");
    for a in 0..n {
        let a = RingElement::Int(a);
        let imgs = dec.forward(&a)?;
        if dec.backward(&imgs)? != a {
            return Err(Error::Encoding(format!("round trip fails at {a}")));
        }
    }
    let src = dec.source.fin().expect("finite source");
    for factor in &dec.factors {
        // materialize the factor map once and verify on raw indices
        let table: Vec<u64> = (0..n)
            .map(|a| factor.map.apply(&RingElement::Int(a)).unwrap().as_index().unwrap())
            .collect();
        let dst = factor.ring.fin().expect("finite factor");
        for a in 0..n {
            for b in 0..n {
                if table[src.add(a, b) as usize] != dst.add(table[a as usize], table[b as usize]) {
                    return Err(Error::Encoding(format!("additivity fails at ({a},{b})")));
                }
                if table[src.mul(a, b) as usize] != dst.mul(table[a as usize], table[b as usize]) {
                    return Err(Error::Encoding(format!(
                        "multiplicativity fails at ({a},{b})"
                    )));
                }
            }
        }
        if table[src.one() as usize] != dst.one() {
            return Err(Error::Encoding("unit is not preserved".into()));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GluingMode {
    /// Factors are the localizations at maximal ideals.
    Max,
    /// Factors are the quotients by minimal primes (reduced rings).
    Min,
}

#[derive(Debug)]
pub struct GluePart {
    pub idempotent: RingElement,
    pub factor: RingHandle,
    pub map: RingMap,
}

/// Orthogonal idempotents summing to 1, one per factor, with `e_k` mapping
/// to 1 in its own factor and to 0 elsewhere.
#[derive(Debug)]
pub struct GluingPlan {
    pub mode: GluingMode,
    pub parts: Vec<GluePart>,
}

pub fn build_gluing_plan(ring: &RingHandle, mode: GluingMode) -> Result<GluingPlan> {
    ring.fin()
        .ok_or_else(|| Error::Unsupported("gluing plans need a finite ring".into()))?;
    let spec = primes(ring)?;
    let one = ring.one();
    let mut parts = Vec::new();
    match mode {
        GluingMode::Max => {
            for p in &spec.points {
                if !p.maximal {
                    continue;
                }
                let e = factor_idempotent(ring, p.id)?;
                let (factor, map) = localize(ring, p.id)?;
                parts.push(GluePart {
                    idempotent: e,
                    factor,
                    map,
                });
            }
        }
        GluingMode::Min => {
            if !crate::ideal::is_reduced(ring) {
                return Err(Error::Precondition(
                    "minimal-prime gluing needs a reduced ring".into(),
                ));
            }
            for p in &spec.points {
                if !p.minimal {
                    continue;
                }
                let (regular, gen) = is_regular(ring, &p.ideal)?;
                if !regular {
                    return Err(Error::Precondition(format!(
                        "minimal prime #{} is not a regular ideal",
                        p.id
                    )));
                }
                let e = ring.sub(&one, &gen.unwrap())?;
                let (factor, map) = crate::ideal::quotient_ring(ring, &p.ideal)?;
                parts.push(GluePart {
                    idempotent: e,
                    factor,
                    map,
                });
            }
        }
    }
    // orthogonality and partition of unity are forced by the construction
    let mut total = ring.zero();
    for (i, part) in parts.iter().enumerate() {
        total = ring.add(&total, &part.idempotent)?;
        for other in parts.iter().skip(i + 1) {
            let prod = ring.mul(&part.idempotent, &other.idempotent)?;
            if !ring.is_zero(&prod) {
                return Err(Error::Encoding("plan idempotents are not orthogonal".into()));
            }
        }
    }
    if !ring.is_one(&total) && !parts.is_empty() {
        return Err(Error::Encoding("plan idempotents do not sum to 1".into()));
    }
    Ok(GluingPlan { mode, parts })
}

/// Combines per-factor solutions into a global one: each local coordinate is
/// lifted to its smallest preimage and the glued coordinate is the
/// idempotent-weighted sum over the factors. The output is verified against
/// the system before it is returned.
pub fn glue_solutions(
    ring: &RingHandle,
    plan: &GluingPlan,
    sys: &PolySystem,
    local_solutions: &[Vec<RingElement>],
) -> Result<Vec<RingElement>> {
    if local_solutions.len() != plan.parts.len() {
        return Err(Error::ArityMismatch(format!(
            "{} local solutions for {} factors",
            local_solutions.len(),
            plan.parts.len()
        )));
    }
    for (k, (part, local)) in plan.parts.iter().zip(local_solutions).enumerate() {
        let mapped = map_system(&part.map, sys)?;
        if !system_satisfied(&part.factor, &mapped, local)? {
            return Err(Error::LocalSolution {
                factor: k,
                reason: "does not satisfy the factor system".into(),
            });
        }
    }
    let mut glued = Vec::with_capacity(sys.vars);
    for j in 0..sys.vars {
        let mut coord = ring.zero();
        for (part, local) in plan.parts.iter().zip(local_solutions) {
            let lift = part.map.section(&local[j])?;
            let weighted = ring.mul(&part.idempotent, &lift)?;
            coord = ring.add(&coord, &weighted)?;
        }
        glued.push(coord);
    }
    if !system_satisfied(ring, sys, &glued)? {
        return Err(Error::Precondition(
            "glued assignment fails the system".into(),
        ));
    }
    Ok(glued)
}

/// Smallest solution of a system over a finite ring by exhaustive search.
pub fn brute_force_solve(ring: &RingHandle, sys: &PolySystem) -> Result<Option<Vec<RingElement>>> {
    let n = ring
        .size()
        .ok_or_else(|| Error::Unsupported("exhaustive search needs a finite ring".into()))?;
    let mut point = vec![0u64; sys.vars];
    loop {
        let elems: Vec<RingElement> = point.iter().map(|&i| RingElement::Int(i)).collect();
        if system_satisfied(ring, sys, &elems)? {
            return Ok(Some(elems));
        }
        let mut j = sys.vars;
        loop {
            if j == 0 {
                return Ok(None);
            }
            j -= 1;
            point[j] += 1;
            if point[j] < n {
                break;
            }
            point[j] = 0;
        }
    }
}

/// Solves a system over a finite ring through the local factors: each
/// localization is searched exhaustively and the local solutions are glued.
/// Returns `None` exactly when some factor has no solution.
pub fn solve_local_global(ring: &RingHandle, sys: &PolySystem) -> Result<Option<Vec<RingElement>>> {
    let plan = build_gluing_plan(ring, GluingMode::Max)?;
    let mut locals = Vec::with_capacity(plan.parts.len());
    for part in &plan.parts {
        let mapped = map_system(&part.map, sys)?;
        match brute_force_solve(&part.factor, &mapped)? {
            Some(sol) => locals.push(sol),
            None => return Ok(None),
        }
    }
    if plan.parts.is_empty() {
        // the zero ring: the empty assignment of zeros solves anything
        return Ok(Some(vec![ring.zero(); sys.vars]));
    }
    Ok(Some(glue_solutions(ring, &plan, sys, &locals)?))
}

/// For a zero-divisor pair `fg = 0`, the smallest idempotent `e` with
/// `f = fe` and `g = g(1-e)`, if one exists.
pub fn purify_witness(
    ring: &RingHandle,
    f: &RingElement,
    g: &RingElement,
) -> Result<Option<RingElement>> {
    let prod = ring.mul(f, g)?;
    if !ring.is_zero(&prod) {
        return Err(Error::Precondition(format!("{f} * {g} is not zero")));
    }
    let one = ring.one();
    for e in ring.idempotents() {
        let fe = ring.mul(f, e)?;
        let co = ring.sub(&one, e)?;
        let gco = ring.mul(g, &co)?;
        if fe == *f && gco == *g {
            return Ok(Some(e.clone()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideal_generate;
    use crate::poly::{Polynomial, Term};
    use crate::ring::{ring_from_descriptor, RingDescriptor};

    fn zn(n: u64) -> RingHandle {
        ring_from_descriptor(&RingDescriptor::QuotientInt { modulus: n }).unwrap()
    }

    fn sl23() -> RingHandle {
        ring_from_descriptor(&RingDescriptor::SemilocalInt { primes: vec![2, 3] }).unwrap()
    }

    #[test]
    fn clean_decompose_examples() {
        let z6 = zn(6);
        let d = clean_decompose(&z6, &RingElement::Int(2)).unwrap();
        assert_eq!(d.idempotent, RingElement::Int(1));
        assert_eq!(d.unit, RingElement::Int(1));
        let z4 = zn(4);
        let d = clean_decompose(&z4, &RingElement::Int(2)).unwrap();
        assert_eq!(d.idempotent, RingElement::Int(1));
        assert_eq!(d.unit, RingElement::Int(1));
        let err = clean_decompose(&sl23(), &RingElement::Frac { num: 3, den: 1 }).unwrap_err();
        assert!(matches!(err, Error::NoDecomposition(_)));
    }

    #[test]
    fn clean_decompose_is_total_on_small_finite_rings() {
        for n in 2..=30u64 {
            let r = zn(n);
            for f in 0..n {
                let f = RingElement::Int(f);
                let d = clean_decompose(&r, &f).unwrap();
                assert!(r.is_idempotent(&d.idempotent));
                let (unit, inv) = r.is_unit(&d.unit).unwrap();
                assert!(unit);
                let back = r.mul(&d.unit, &inv.unwrap()).unwrap();
                assert!(r.is_one(&back));
                assert_eq!(r.add(&d.idempotent, &d.unit).unwrap(), f);
            }
        }
    }

    #[test]
    fn exchange_examples() {
        let z6 = zn(6);
        assert_eq!(
            exchange_idempotent(&z6, &RingElement::Int(2)).unwrap(),
            RingElement::Int(4)
        );
        assert_eq!(
            exchange_idempotent(&z6, &RingElement::Int(0)).unwrap(),
            RingElement::Int(0)
        );
        assert_eq!(
            exchange_idempotent(&z6, &RingElement::Int(1)).unwrap(),
            RingElement::Int(1)
        );
    }

    #[test]
    fn lift_examples() {
        let z12 = zn(12);
        let six = ideal_generate(&z12, &[RingElement::Int(6)]).unwrap();
        let out = lift_idempotent(&z12, &six, &RingElement::Int(3)).unwrap();
        assert_eq!(out.idempotent, RingElement::Int(9));
        assert!(out.newton_steps.is_some());

        let z4 = zn(4);
        let two = ideal_generate(&z4, &[RingElement::Int(2)]).unwrap();
        let out = lift_idempotent(&z4, &two, &RingElement::Int(3)).unwrap();
        assert_eq!(out.idempotent, RingElement::Int(1));

        let zero = ideal_generate(&z12, &[]).unwrap();
        let out = lift_idempotent(&z12, &zero, &RingElement::Int(4)).unwrap();
        assert_eq!(out.idempotent, RingElement::Int(4));
    }

    #[test]
    fn newton_preserves_residue_class() {
        let z16 = zn(16);
        let nil = nilradical(&z16);
        // f = 9: 9^2 - 9 = 72 = 8 mod 16 is nilpotent
        let f = RingElement::Int(9);
        let out = lift_idempotent(&z16, &nil, &f).unwrap();
        let diff = z16.sub(&f, &out.idempotent).unwrap();
        assert!(nil.contains(&z16, &diff));
        assert!(z16.is_idempotent(&out.idempotent));
    }

    #[test]
    fn crt_examples() {
        let z12 = zn(12);
        let dec = crt_decomposition(&z12).unwrap();
        let sizes: Vec<u64> = dec.factors.iter().map(|f| f.ring.size().unwrap()).collect();
        assert_eq!(sizes, vec![4, 3]);
        verify_crt(&dec).unwrap();

        let z6 = zn(6);
        let dec = crt_decomposition(&z6).unwrap();
        let sizes: Vec<u64> = dec.factors.iter().map(|f| f.ring.size().unwrap()).collect();
        assert_eq!(sizes, vec![2, 3]);
        verify_crt(&dec).unwrap();

        let f7 = zn(7);
        let dec = crt_decomposition(&f7).unwrap();
        assert_eq!(dec.factors.len(), 1);
        verify_crt(&dec).unwrap();
    }

    #[test]
    fn gluing_plan_examples() {
        let z6 = zn(6);
        let plan = build_gluing_plan(&z6, GluingMode::Max).unwrap();
        let es: Vec<RingElement> = plan.parts.iter().map(|p| p.idempotent.clone()).collect();
        assert_eq!(es, vec![RingElement::Int(3), RingElement::Int(4)]);
        let sizes: Vec<u64> = plan.parts.iter().map(|p| p.factor.size().unwrap()).collect();
        assert_eq!(sizes, vec![2, 3]);

        let plan_min = build_gluing_plan(&z6, GluingMode::Min).unwrap();
        let es_min: Vec<RingElement> =
            plan_min.parts.iter().map(|p| p.idempotent.clone()).collect();
        assert_eq!(es, es_min);

        let f5 = zn(5);
        let plan = build_gluing_plan(&f5, GluingMode::Max).unwrap();
        assert_eq!(plan.parts.len(), 1);
        assert!(f5.is_one(&plan.parts[0].idempotent));

        assert!(matches!(
            build_gluing_plan(&zn(4), GluingMode::Min).unwrap_err(),
            Error::Precondition(_)
        ));
    }

    fn x2_minus_4(ring: &RingHandle) -> PolySystem {
        let poly = Polynomial::new(
            ring,
            1,
            vec![
                Term {
                    coeff: RingElement::Int(1),
                    exps: vec![2],
                },
                Term {
                    coeff: ring.neg(&RingElement::Int(4)).unwrap(),
                    exps: vec![0],
                },
            ],
        )
        .unwrap();
        PolySystem::new(ring, 1, vec![poly]).unwrap()
    }

    #[test]
    fn glue_example() {
        let z6 = zn(6);
        let sys = x2_minus_4(&z6);
        let plan = build_gluing_plan(&z6, GluingMode::Max).unwrap();
        let locals = vec![vec![RingElement::Int(0)], vec![RingElement::Int(1)]];
        let glued = glue_solutions(&z6, &plan, &sys, &locals).unwrap();
        assert_eq!(glued, vec![RingElement::Int(4)]); // 3*0 + 4*1

        // a wrong local solution is rejected with its factor index
        let bad = vec![vec![RingElement::Int(1)], vec![RingElement::Int(1)]];
        match glue_solutions(&z6, &plan, &sys, &bad).unwrap_err() {
            Error::LocalSolution { factor, .. } => assert_eq!(factor, 0),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn solve_examples() {
        let z6 = zn(6);
        let sol = solve_local_global(&z6, &x2_minus_4(&z6)).unwrap();
        assert_eq!(sol, Some(vec![RingElement::Int(4)]));
        // brute force oracle: the full solution set of x^2 = 4 over Z/6
        let mut all = Vec::new();
        for x in 0..6u64 {
            if (x * x) % 6 == 4 {
                all.push(x);
            }
        }
        assert_eq!(all, vec![2, 4]);

        // x^2 - 5 has no solution: 5 is not a square mod 6
        let no_sol = Polynomial::new(
            &z6,
            1,
            vec![
                Term {
                    coeff: RingElement::Int(1),
                    exps: vec![2],
                },
                Term {
                    coeff: RingElement::Int(1),
                    exps: vec![0],
                },
            ],
        )
        .unwrap();
        let sys = PolySystem::new(&z6, 1, vec![no_sol]).unwrap();
        assert_eq!(solve_local_global(&z6, &sys).unwrap(), None);
        assert_eq!(brute_force_solve(&z6, &sys).unwrap(), None);

        // x - c is solved by c
        for c in 0..6u64 {
            let sys = PolySystem::new(
                &z6,
                1,
                vec![Polynomial::new(
                    &z6,
                    1,
                    vec![
                        Term {
                            coeff: RingElement::Int(1),
                            exps: vec![1],
                        },
                        Term {
                            coeff: z6.neg(&RingElement::Int(c)).unwrap(),
                            exps: vec![0],
                        },
                    ],
                )
                .unwrap()],
            )
            .unwrap();
            assert_eq!(
                solve_local_global(&z6, &sys).unwrap(),
                Some(vec![RingElement::Int(c)])
            );
        }
    }

    #[test]
    fn purify_examples() {
        let z6 = zn(6);
        assert_eq!(
            purify_witness(&z6, &RingElement::Int(2), &RingElement::Int(3)).unwrap(),
            Some(RingElement::Int(4))
        );
        let z4 = zn(4);
        assert_eq!(
            purify_witness(&z4, &RingElement::Int(2), &RingElement::Int(2)).unwrap(),
            None
        );
        for g in 0..4u64 {
            assert_eq!(
                purify_witness(&z4, &RingElement::Int(0), &RingElement::Int(g)).unwrap(),
                Some(RingElement::Int(0))
            );
        }
        assert!(matches!(
            purify_witness(&z6, &RingElement::Int(1), &RingElement::Int(1)).unwrap_err(),
            Error::Precondition(_)
        ));
    }

    #[test]
    fn poly_eval_smoke_over_glued_output() {
        let z12 = zn(12);
        let sys = x2_minus_4(&z12);
        if let Some(sol) = solve_local_global(&z12, &sys).unwrap() {
            assert!(system_satisfied(&z12, &sys, &sol).unwrap());
            assert!(crate::poly::poly_eval(&z12, &sys.polys[0], &sol).unwrap() == z12.zero());
        } else {
            panic!("x^2 = 4 is solvable over Z/12");
        }
    }
}
