//! Walk the ideal lattice of a finite ring: purity, regularity, and
//! annihilators. On finite rings the pure ideals and the regular ideals
//! coincide.
//!
//! Run with: cargo run --example pure_and_regular_ideals

use ringlab::ideal::{annihilator, enumerate_ideals, is_pure, is_regular, radicals};
use ringlab::ring::{ring_from_descriptor, RingDescriptor, RingElement};

fn main() {
    let ring = ring_from_descriptor(&RingDescriptor::QuotientInt { modulus: 36 }).unwrap();
    println!("ring: {}", ring.label());

    let r = radicals(&ring).unwrap();
    println!(
        "nilradical {}, Jacobson radical {}",
        r.nilradical.describe(),
        r.jacobson.describe()
    );

    println!("\nideal lattice:");
    for ideal in enumerate_ideals(&ring).unwrap() {
        let (pure, counterexample) = is_pure(&ring, &ideal).unwrap();
        let (regular, generator) = is_regular(&ring, &ideal).unwrap();
        let mut line = format!(
            "  {:<30} pure: {:<5} regular: {}",
            ideal.describe(),
            pure,
            regular
        );
        if let Some(f) = counterexample {
            line.push_str(&format!("  (fails at f = {f})"));
        }
        if let Some(e) = generator {
            line.push_str(&format!("  (generated by the idempotent {e})"));
        }
        println!("{line}");
    }

    println!("\nannihilators:");
    for f in [0u64, 2, 3, 4, 6, 9, 12, 18] {
        let ann = annihilator(&ring, &RingElement::Int(f)).unwrap();
        println!("  Ann({f}) = {}", ann.describe());
    }
}
