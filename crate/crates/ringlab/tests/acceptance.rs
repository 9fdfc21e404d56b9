//! Acceptance suite: one test per criterion, each printing a PASS line.
//! All checks are exact; no tolerances apply anywhere.

use ringlab::classify::{
    classify_report, criteria_clean, criteria_gelfand, criteria_mp, criteria_purified,
    criteria_reduced_mp, criteria_zero_dimensional, Consensus, CriteriaMatrix, Verdict, Witness,
};
use ringlab::construct::{
    brute_force_solve, clean_decompose, crt_decomposition, exchange_idempotent, lift_idempotent,
    purify_witness, solve_local_global, verify_crt,
};
use ringlab::corpus::{builtin, labeled_posets, random_systems, ring_seed};
use ringlab::ideal::{
    annihilator, enumerate_ideals, ideal_intersect, is_pure, is_reduced, is_regular, nilradical,
    quotient_ring,
};
use ringlab::ring::{ring_from_descriptor, RingDescriptor, RingElement, RingHandle};
use ringlab::spectrum::{ker_pi, primes};
use ringlab::topology::{RetractionOutcome, RetractionTarget, SpectralSpace, TopologyKind};

fn finite_corpus() -> Vec<RingDescriptor> {
    builtin().finite_descriptors()
}

fn all_corpus() -> Vec<RingDescriptor> {
    builtin().all_descriptors()
}

fn build(desc: &RingDescriptor) -> RingHandle {
    ring_from_descriptor(desc).expect("corpus descriptors are valid")
}

fn agreed(matrix: &CriteriaMatrix) -> Option<bool> {
    match matrix.consensus() {
        Consensus::Agreed(v) => Some(v),
        Consensus::Empty => None,
        Consensus::Disagreement(_) => panic!(
            "matrix {} disagrees: {:?}",
            matrix.theorem,
            matrix
                .criteria
                .iter()
                .map(|c| (c.id.clone(), c.verdict))
                .collect::<Vec<_>>()
        ),
    }
}

/// Criterion 1: every finite corpus ring satisfies every applicable clause
/// of the zero-dimensionality theorem, and the clauses agree.
#[test]
fn criterion_01_zero_dimensional_suite() {
    let mut count = 0usize;
    for desc in finite_corpus() {
        let ring = build(&desc);
        let matrix = criteria_zero_dimensional(&ring).unwrap();
        assert_eq!(
            agreed(&matrix),
            Some(true),
            "{} must be zero-dimensional",
            ring.label()
        );
        count += 1;
    }
    println!("criterion 1 (zero-dimensional suite over {count} finite rings): PASS");
}

/// Criterion 2: the two-prime localized integer ring has a Hausdorff
/// maximal spectrum while every Gelfand clause fails, clause (vii) with the
/// counterexample f = 3.
#[test]
fn criterion_02_counterexample_reproduction() {
    let ring = build(&RingDescriptor::SemilocalInt { primes: vec![2, 3] });
    let spec = primes(&ring).unwrap();
    let space = spec.to_space();
    let max_ids = spec.max_ids();
    assert_eq!(max_ids.len(), 2);
    // the induced topology on the maximal points is discrete
    let max_space = space.subspace(&max_ids);
    assert!(max_space.separation(TopologyKind::Zariski).hausdorff);
    let rel = space.relative_opens(&max_ids, TopologyKind::Zariski);
    assert_eq!(rel, vec![0b00, 0b01, 0b10, 0b11]);

    let matrix = criteria_gelfand(&ring).unwrap();
    assert_eq!(agreed(&matrix), Some(false));
    for c in &matrix.criteria {
        assert_eq!(c.verdict, Verdict::False, "clause {} must fail", c.id);
    }
    let vii = matrix.criteria.iter().find(|c| c.id == "vii").unwrap();
    match &vii.witness {
        Some(Witness::Element { value }) => {
            assert_eq!(*value, RingElement::Frac { num: 3, den: 1 });
        }
        other => panic!("expected an element witness, got {other:?}"),
    }
    println!("criterion 2 (boundary ring: Hausdorff maximal spectrum, no Gelfand): PASS");
}

/// Criterion 3: all six criteria matrices agree internally on every corpus
/// ring, finite and semilocal.
#[test]
fn criterion_03_theorem_agreement() {
    let mut count = 0usize;
    for desc in all_corpus() {
        let ring = build(&desc);
        for matrix in [
            criteria_zero_dimensional(&ring).unwrap(),
            criteria_gelfand(&ring).unwrap(),
            criteria_clean(&ring).unwrap(),
            criteria_mp(&ring).unwrap(),
            criteria_reduced_mp(&ring).unwrap(),
            criteria_purified(&ring).unwrap(),
        ] {
            if let Consensus::Disagreement(vs) = matrix.consensus() {
                panic!(
                    "{}: {} criteria disagree: {vs:?}",
                    ring.label(),
                    matrix.theorem
                );
            }
            count += 1;
        }
    }
    println!("criterion 3 (theorem agreement over {count} matrices): PASS");
}

/// Criterion 4: the labeled poset sweep. (a) intra-class agreement of the
/// topological clauses, (b) the duality swap, (c) retraction onto the
/// maximal points exists iff the Gelfand clauses hold and is unique.
#[test]
fn criterion_04_poset_sweep() {
    let bound = builtin().poset_point_bound;
    let posets = labeled_posets(bound);
    let mut count = 0usize;
    for (n, relations) in &posets {
        let labels: Vec<String> = (0..*n).map(|i| format!("x{i}")).collect();
        let space = SpectralSpace::from_order(labels, relations).unwrap();
        let classification = space.classify();
        // (a) intra-class agreement
        let gelfand = classification
            .gelfand_agrees()
            .unwrap_or_else(|| panic!("gelfand clauses disagree on {relations:?}"));
        let mp = classification
            .mp_agrees()
            .unwrap_or_else(|| panic!("mp clauses disagree on {relations:?}"));
        classification
            .zero_dim_agrees()
            .unwrap_or_else(|| panic!("zero-dim clauses disagree on {relations:?}"));
        // (b) duality
        let dual = space.hochster_dual().classify();
        assert_eq!(
            gelfand,
            dual.mp_agrees().unwrap(),
            "duality fails on {relations:?}"
        );
        assert_eq!(
            mp,
            dual.gelfand_agrees().unwrap(),
            "dual duality fails on {relations:?}"
        );
        // (c) retraction existence and uniqueness
        let canonical = matches!(
            space.retraction(RetractionTarget::Max),
            RetractionOutcome::Map {
                continuous: true,
                ..
            }
        );
        assert_eq!(canonical, gelfand, "retraction iff gelfand on {relations:?}");
        let all = space.all_retractions(RetractionTarget::Max);
        if gelfand {
            assert_eq!(all.len(), 1, "retraction not unique on {relations:?}");
        } else {
            assert!(all.is_empty(), "spurious retraction on {relations:?}");
        }
        count += 1;
    }
    println!("criterion 4 (sweep over {count} labeled posets): PASS");
}

/// Criterion 5: clean decompositions and exchange idempotents exist and
/// verify exactly for every element of every finite corpus ring.
#[test]
fn criterion_05_clean_decomposition_totality() {
    let mut elements = 0usize;
    for desc in finite_corpus() {
        let ring = build(&desc);
        let spec = primes(&ring).unwrap();
        let one = ring.one();
        for f in ring.elements().unwrap() {
            let d = clean_decompose(&ring, &f).unwrap();
            assert!(ring.is_idempotent(&d.idempotent));
            let (unit, inv) = ring.is_unit(&d.unit).unwrap();
            assert!(unit);
            assert!(ring.is_one(&ring.mul(&d.unit, &inv.unwrap()).unwrap()));
            assert_eq!(ring.add(&d.idempotent, &d.unit).unwrap(), f);

            let e = exchange_idempotent(&ring, &f).unwrap();
            assert!(ring.is_idempotent(&e));
            let af = ringlab::ideal::principal_ideal(&ring, &f).unwrap();
            let a1f =
                ringlab::ideal::principal_ideal(&ring, &ring.sub(&one, &f).unwrap()).unwrap();
            assert!(af.contains(&ring, &e));
            assert!(a1f.contains(&ring, &ring.sub(&one, &e).unwrap()));
            elements += 1;
        }
        drop(spec);
    }
    println!("criterion 5 (clean/exchange totality over {elements} elements): PASS");
}

/// Criterion 6: local-global solving agrees with whole-ring brute force on
/// seeded random systems over every finite corpus ring of size <= 36.
#[test]
fn criterion_06_gluing_vs_brute_force() {
    let spec = builtin();
    let mut rings = 0usize;
    let mut systems = 0usize;
    for (idx, desc) in spec.finite_descriptors().into_iter().enumerate() {
        let ring = build(&desc);
        if ring.size().unwrap() > 36 {
            continue;
        }
        let seed = ring_seed(spec.seed, idx);
        for sys in random_systems(&ring, 100, seed).unwrap() {
            let glued = solve_local_global(&ring, &sys).unwrap();
            let brute = brute_force_solve(&ring, &sys).unwrap();
            assert_eq!(
                glued.is_some(),
                brute.is_some(),
                "solvability mismatch on {}",
                ring.label()
            );
            if let Some(sol) = glued {
                assert!(ringlab::poly::system_satisfied(&ring, &sys, &sol).unwrap());
            }
            systems += 1;
        }
        rings += 1;
    }
    println!("criterion 6 (gluing vs brute force: {systems} systems over {rings} rings): PASS");
}

/// Criterion 7: pure ideals coincide with regular ideals on finite corpus
/// rings of size <= 36, and every pure ideal is the intersection of the
/// localization kernels at the maximal ideals containing it.
#[test]
fn criterion_07_pure_equals_regular() {
    let mut rings = 0usize;
    for desc in finite_corpus() {
        let ring = build(&desc);
        if ring.size().unwrap() > 36 {
            continue;
        }
        let spec = primes(&ring).unwrap();
        for ideal in enumerate_ideals(&ring).unwrap() {
            let pure = is_pure(&ring, &ideal).unwrap().0;
            let regular = is_regular(&ring, &ideal).unwrap().0;
            assert_eq!(
                pure,
                regular,
                "pure/regular mismatch on {} at {}",
                ring.label(),
                ideal.describe()
            );
            if pure {
                // intersection formula over the maximal ideals containing I
                let mut meet: Option<ringlab::IdealRep> = None;
                for p in &spec.points {
                    if !p.maximal {
                        continue;
                    }
                    let contains_ideal = ideal
                        .elements()
                        .unwrap()
                        .iter()
                        .all(|&x| p.ideal.contains(&ring, &RingElement::Int(x)));
                    if contains_ideal {
                        let k = ker_pi(&ring, p.id).unwrap();
                        meet = Some(match meet {
                            None => k,
                            Some(m) => ideal_intersect(&ring, &m, &k).unwrap(),
                        });
                    }
                }
                let meet = meet.unwrap_or_else(|| {
                    // no maximal contains I, so I is the whole ring
                    ringlab::ideal::ideal_generate(&ring, &[ring.one()]).unwrap()
                });
                assert_eq!(
                    meet,
                    ideal,
                    "kernel intersection formula fails on {} at {}",
                    ring.label(),
                    ideal.describe()
                );
            }
        }
        rings += 1;
    }
    println!("criterion 7 (pure = regular over {rings} rings): PASS");
}

/// Criterion 8: Newton lifting within the logarithmic step bound on every
/// non-reduced finite corpus ring, and clean/purified transfer through the
/// nilradical quotient, computed independently on both sides.
#[test]
fn criterion_08_lifting_and_nilradical_transfer() {
    let mut rings = 0usize;
    for desc in finite_corpus() {
        let ring = build(&desc);
        if is_reduced(&ring) {
            continue;
        }
        let nil = nilradical(&ring);
        let nil_index = nil
            .elements()
            .unwrap()
            .iter()
            .map(|&x| ring.element_facts(&RingElement::Int(x)).unwrap().nilpotency_index.unwrap())
            .max()
            .unwrap();
        let bound = (64 - (nil_index - 1).leading_zeros() as u64).max(0) + 1; // ceil(log2) + 1
        let (quotient, map) = quotient_ring(&ring, &nil).unwrap();
        for e_bar in quotient.idempotents() {
            let preimage = map.section(e_bar).unwrap();
            let out = lift_idempotent(&ring, &nil, &preimage).unwrap();
            assert!(ring.is_idempotent(&out.idempotent));
            assert_eq!(&map.apply(&out.idempotent).unwrap(), e_bar);
            let steps = out.newton_steps.expect("nilradical lifts use the iteration");
            assert!(
                steps <= bound,
                "{}: {steps} steps exceed bound {bound}",
                ring.label()
            );
        }
        let clean_a = agreed(&criteria_clean(&ring).unwrap());
        let clean_q = agreed(&criteria_clean(&quotient).unwrap());
        assert_eq!(clean_a, clean_q, "clean transfer fails on {}", ring.label());
        let purified_a = agreed(&criteria_purified(&ring).unwrap());
        let purified_q = agreed(&criteria_purified(&quotient).unwrap());
        assert_eq!(
            purified_a,
            purified_q,
            "purified transfer fails on {}",
            ring.label()
        );
        rings += 1;
    }
    println!("criterion 8 (lifting and nilradical transfer over {rings} non-reduced rings): PASS");
}

/// Criterion 9: the annihilator sum identity holds on every reduced finite
/// corpus ring, checked against a literal set-sum oracle on the small ones,
/// and the non-reduced witness ring reports the pair (2,2).
#[test]
fn criterion_09_annihilator_identities() {
    let mut rings = 0usize;
    for desc in finite_corpus() {
        let ring = build(&desc);
        if !is_reduced(&ring) {
            continue;
        }
        let matrix = criteria_reduced_mp(&ring).unwrap();
        assert_eq!(agreed(&matrix), Some(true), "{}", ring.label());
        if ring.size().unwrap() <= 16 {
            // literal oracle: element sets of Ann(f) + Ann(g) vs Ann(fg)
            let n = ring.size().unwrap();
            for f in 0..n {
                for g in 0..n {
                    let f = RingElement::Int(f);
                    let g = RingElement::Int(g);
                    let ann_f = annihilator(&ring, &f).unwrap();
                    let ann_g = annihilator(&ring, &g).unwrap();
                    let sum = ringlab::ideal::ideal_sum(&ring, &ann_f, &ann_g).unwrap();
                    let fg = ring.mul(&f, &g).unwrap();
                    assert_eq!(sum, annihilator(&ring, &fg).unwrap());
                }
            }
        }
        rings += 1;
    }
    let z4 = build(&RingDescriptor::QuotientInt { modulus: 4 });
    let report = classify_report(&z4).unwrap();
    assert!(!report.labels.iter().any(|l| l == "pf"));
    let matrix = &report.matrices["reduced_mp"];
    let iii = matrix.criteria.iter().find(|c| c.id == "iii").unwrap();
    match &iii.witness {
        Some(Witness::ElementPair { a, b }) => {
            assert_eq!((a.clone(), b.clone()), (RingElement::Int(2), RingElement::Int(2)));
        }
        other => panic!("expected the witness pair (2,2), got {other:?}"),
    }
    println!("criterion 9 (annihilator identities over {rings} reduced rings): PASS");
}

/// Criterion 10: the canonical map into the product of localizations is an
/// exhaustively verified ring isomorphism on every finite corpus ring.
#[test]
fn criterion_10_crt_isomorphism() {
    let mut rings = 0usize;
    for desc in finite_corpus() {
        let ring = build(&desc);
        let dec = crt_decomposition(&ring).unwrap();
        verify_crt(&dec).unwrap_or_else(|e| panic!("{}: {e}", ring.label()));
        rings += 1;
    }
    println!("criterion 10 (decomposition isomorphism over {rings} rings): PASS");
}

/// Criterion 11: idempotent witnesses exist for every zero-divisor pair of
/// every reduced finite corpus ring, and fail on (2,2) in the non-reduced
/// witness ring.
#[test]
fn criterion_11_elementwise_purified() {
    let mut pairs = 0usize;
    for desc in finite_corpus() {
        let ring = build(&desc);
        if !is_reduced(&ring) {
            continue;
        }
        let n = ring.size().unwrap();
        for f in 0..n {
            for g in 0..n {
                let f = RingElement::Int(f);
                let g = RingElement::Int(g);
                if !ring.is_zero(&ring.mul(&f, &g).unwrap()) {
                    continue;
                }
                let w = purify_witness(&ring, &f, &g).unwrap();
                let e = w.unwrap_or_else(|| {
                    panic!("no witness for ({f},{g}) in {}", ring.label())
                });
                assert_eq!(ring.mul(&f, &e).unwrap(), f);
                let co = ring.sub(&ring.one(), &e).unwrap();
                assert_eq!(ring.mul(&g, &co).unwrap(), g);
                pairs += 1;
            }
        }
    }
    let z4 = build(&RingDescriptor::QuotientInt { modulus: 4 });
    assert_eq!(
        purify_witness(&z4, &RingElement::Int(2), &RingElement::Int(2)).unwrap(),
        None
    );
    println!("criterion 11 (elementwise witnesses over {pairs} zero-divisor pairs): PASS");
}
