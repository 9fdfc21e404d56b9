//! Lift idempotents along quotient maps: the cubic iteration handles ideals
//! of nilpotents, an exhaustive scan handles the rest.
//!
//! Run with: cargo run --example lift_idempotents

use ringlab::construct::lift_idempotent;
use ringlab::ideal::{ideal_generate, nilradical, quotient_ring};
use ringlab::ring::{ring_from_descriptor, RingDescriptor, RingElement};

fn main() {
    let ring = ring_from_descriptor(&RingDescriptor::QuotientInt { modulus: 12 }).unwrap();
    let nil = nilradical(&ring);
    println!("ring: {}, nilradical {}", ring.label(), nil.describe());

    let (quotient, map) = quotient_ring(&ring, &nil).unwrap();
    println!("quotient by the nilradical has size {}", quotient.size().unwrap());
    for e_bar in quotient.idempotents() {
        let preimage = map.section(e_bar).unwrap();
        let out = lift_idempotent(&ring, &nil, &preimage).unwrap();
        println!(
            "idempotent {} of the quotient lifts to {} in {} iteration step(s)",
            e_bar,
            out.idempotent,
            out.newton_steps.unwrap()
        );
    }

    // lifting modulo an ideal that is not inside the nilradical falls back
    // to the exhaustive scan
    let six = ideal_generate(&ring, &[RingElement::Int(6)]).unwrap();
    let out = lift_idempotent(&ring, &six, &RingElement::Int(3)).unwrap();
    println!(
        "3 is idempotent mod (6); the lift is {} (steps recorded: {:?})",
        out.idempotent, out.newton_steps
    );
}
