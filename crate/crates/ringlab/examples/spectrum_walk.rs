//! Enumerate the prime spectrum of a ring, its localization kernels, and
//! the localizations themselves; render the spectrum as DOT.
//!
//! Run with: cargo run --example spectrum_walk

use ringlab::report::spectrum_dot;
use ringlab::ring::{ring_from_descriptor, RingDescriptor};
use ringlab::spectrum::{ker_pi, localize, max_regular_ideals, primes, primitive_idempotents};

fn main() {
    let ring = ring_from_descriptor(&RingDescriptor::QuotientInt { modulus: 60 }).unwrap();
    println!("ring: {}", ring.label());

    let prims = primitive_idempotents(&ring).unwrap();
    println!(
        "primitive idempotents: {}",
        prims
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );

    let spec = primes(&ring).unwrap();
    for p in &spec.points {
        let kernel = ker_pi(&ring, p.id).unwrap();
        let (local, _) = localize(&ring, p.id).unwrap();
        println!(
            "prime #{} = {}  kernel {}  localization of size {}",
            p.id,
            p.symbol,
            kernel.describe(),
            local.size().unwrap()
        );
    }

    println!("max-regular ideals:");
    for m in max_regular_ideals(&ring).unwrap() {
        println!("  {}", m.describe());
    }

    // a ring with a non-trivial order on its spectrum
    let semilocal = ring_from_descriptor(&RingDescriptor::SemilocalInt { primes: vec![2, 3] })
        .unwrap();
    let spec = primes(&semilocal).unwrap();
    println!("\n{} spectrum as DOT:", semilocal.label());
    print!("{}", spectrum_dot(&spec));
}
