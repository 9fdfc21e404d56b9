//! Write every element of a ring as an idempotent plus a unit, and compute
//! the exchange idempotents.
//!
//! Run with: cargo run --example clean_decomposition

use ringlab::construct::{clean_decompose, exchange_idempotent};
use ringlab::ring::{ring_from_descriptor, RingDescriptor, RingElement};

fn main() {
    let ring = ring_from_descriptor(&RingDescriptor::QuotientInt { modulus: 12 }).unwrap();
    println!("ring: {}", ring.label());
    println!("f = e + u  (idempotent + unit)   exchange idempotent");
    for f in ring.elements().unwrap() {
        let d = clean_decompose(&ring, &f).unwrap();
        let e = exchange_idempotent(&ring, &f).unwrap();
        println!(
            "{:>2} = {} + {:>2}                     {}",
            f.to_string(),
            d.idempotent,
            d.unit.to_string(),
            e
        );
    }

    // a ring with an element admitting no decomposition
    let semilocal =
        ring_from_descriptor(&RingDescriptor::SemilocalInt { primes: vec![2, 3] }).unwrap();
    let f = RingElement::Frac { num: 3, den: 1 };
    match clean_decompose(&semilocal, &f) {
        Err(e) => println!("\n{}: element 3: {e}", semilocal.label()),
        Ok(_) => unreachable!("3 and 2 are both non-units there"),
    }
}
