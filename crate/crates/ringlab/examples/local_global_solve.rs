//! Solve a polynomial system by solving in each local factor and gluing the
//! local solutions with orthogonal idempotents.
//!
//! Run with: cargo run --example local_global_solve

use ringlab::construct::{build_gluing_plan, glue_solutions, solve_local_global, GluingMode};
use ringlab::poly::{map_system, poly_eval, PolySystem, Polynomial, Term};
use ringlab::ring::{ring_from_descriptor, RingDescriptor, RingElement};

fn main() {
    let ring = ring_from_descriptor(&RingDescriptor::QuotientInt { modulus: 6 }).unwrap();
    // x^2 - 4 = 0
    let poly = Polynomial::new(
        &ring,
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
    let sys = PolySystem::new(&ring, 1, vec![poly]).unwrap();

    let plan = build_gluing_plan(&ring, GluingMode::Max).unwrap();
    println!("ring: {}", ring.label());
    for (k, part) in plan.parts.iter().enumerate() {
        let mapped = map_system(&part.map, &sys).unwrap();
        println!(
            "factor {k}: size {}, idempotent {}, system maps to {} terms",
            part.factor.size().unwrap(),
            part.idempotent,
            mapped.polys[0].terms.len()
        );
    }

    // solve each factor by hand and glue
    let locals = vec![vec![RingElement::Int(0)], vec![RingElement::Int(1)]];
    let glued = glue_solutions(&ring, &plan, &sys, &locals).unwrap();
    println!("glued assignment: x = {}", glued[0]);
    println!(
        "verification: f(x) = {}",
        poly_eval(&ring, &sys.polys[0], &glued).unwrap()
    );

    // or let the solver search the factors itself
    let sol = solve_local_global(&ring, &sys).unwrap();
    println!("solver output: {sol:?}");

    // an unsolvable system is detected through an unsolvable factor
    let no_sol = Polynomial::new(
        &ring,
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
    let sys = PolySystem::new(&ring, 1, vec![no_sol]).unwrap();
    println!("x^2 + 1 over Z/6: {:?}", solve_local_global(&ring, &sys).unwrap());
}
