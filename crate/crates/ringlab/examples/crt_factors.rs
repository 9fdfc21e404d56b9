//! Decompose a finite ring into its localizations at maximal ideals and
//! verify the mutually inverse maps exhaustively.
//!
//! Run with: cargo run --example crt_factors

use ringlab::construct::{crt_decomposition, verify_crt};
use ringlab::ring::{ring_from_descriptor, RingDescriptor, RingElement};

fn main() {
    for n in [12u64, 60, 7] {
        let ring = ring_from_descriptor(&RingDescriptor::QuotientInt { modulus: n }).unwrap();
        let dec = crt_decomposition(&ring).unwrap();
        let sizes: Vec<u64> = dec.factors.iter().map(|f| f.ring.size().unwrap()).collect();
        println!("{} decomposes into local factors of sizes {:?}", ring.label(), sizes);
        verify_crt(&dec).unwrap();
        println!("  maps verified as mutually inverse ring isomorphisms");

        // a round trip through the factor tuple
        let a = RingElement::Int(n - 1);
        let images = dec.forward(&a).unwrap();
        let back = dec.backward(&images).unwrap();
        println!(
            "  {} maps to ({}) and back to {}",
            a,
            images
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(", "),
            back
        );
    }
}
