//! A boundary ring: the integers localized away from {2, 3}. Its maximal
//! spectrum is Hausdorff (two isolated points), yet the ring fails every
//! Gelfand criterion because the zero prime sits under both maximals. The
//! repair: Hausdorff maximal spectrum is equivalent to the quotient by the
//! Jacobson radical being Gelfand.
//!
//! Run with: cargo run --example hausdorff_but_not_gelfand

use ringlab::classify::{criteria_gelfand, Verdict, Witness};
use ringlab::ideal::{quotient_ring, radicals};
use ringlab::ring::{ring_from_descriptor, RingDescriptor};
use ringlab::spectrum::primes;
use ringlab::topology::TopologyKind;

fn main() {
    let ring = ring_from_descriptor(&RingDescriptor::SemilocalInt { primes: vec![2, 3] }).unwrap();
    println!("ring: {}", ring.label());

    let spec = primes(&ring).unwrap();
    let space = spec.to_space();
    let max_ids = spec.max_ids();
    let max_space = space.subspace(&max_ids);
    println!(
        "maximal spectrum: {} points, Zariski Hausdorff: {}",
        max_ids.len(),
        max_space.separation(TopologyKind::Zariski).hausdorff
    );

    let matrix = criteria_gelfand(&ring).unwrap();
    println!("Gelfand criteria:");
    for c in &matrix.criteria {
        let mut line = format!("  ({}) {:?}", c.id, c.verdict);
        if let Some(Witness::Element { value }) = &c.witness {
            line.push_str(&format!("  counterexample f = {value}"));
        }
        println!("{line}");
        assert_eq!(c.verdict, Verdict::False);
    }

    // the corrected statement: A/J is Gelfand iff Max(A) is Hausdorff
    let r = radicals(&ring).unwrap();
    let (mod_jacobson, _) = quotient_ring(&ring, &r.jacobson).unwrap();
    let quotient_matrix = criteria_gelfand(&mod_jacobson).unwrap();
    let all_true = quotient_matrix
        .criteria
        .iter()
        .all(|c| c.verdict != Verdict::False);
    println!(
        "\nquotient by the Jacobson radical {} is Gelfand: {}",
        mod_jacobson.label(),
        all_true
    );
}
