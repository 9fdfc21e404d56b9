//! Classify a few rings against every criteria matrix and print the labels.
//!
//! Run with: cargo run --example classify_ring

use ringlab::classify::classify_report;
use ringlab::ring::{ring_from_descriptor, RingDescriptor};

fn main() {
    let rings = [
        RingDescriptor::QuotientInt { modulus: 6 },
        RingDescriptor::QuotientInt { modulus: 4 },
        RingDescriptor::PolyQuotient {
            p: 2,
            modulus_poly: vec![1, 1, 1],
        },
        RingDescriptor::SemilocalInt { primes: vec![2, 3] },
    ];
    for desc in rings {
        let ring = ring_from_descriptor(&desc).unwrap();
        let report = classify_report(&ring).unwrap();
        println!("{}", ring.label());
        println!("  labels: {}", report.labels.join(", "));
        for (theorem, matrix) in &report.matrices {
            let verdicts: Vec<String> = matrix
                .criteria
                .iter()
                .map(|c| format!("{}={:?}", c.id, c.verdict))
                .collect();
            println!("  {theorem}: {}", verdicts.join(" "));
        }
        println!();
    }
}
