//! Finite spectral spaces: closures under the three topologies, separation
//! properties, retractions, relation classes, and order duality.
//!
//! Run with: cargo run --example poset_topologies

use ringlab::topology::{RetractionOutcome, RetractionTarget, SpectralSpace, TopologyKind};

fn show(name: &str, space: &SpectralSpace) {
    println!("{name}: points {:?}", space.labels());
    for topo in [TopologyKind::Zariski, TopologyKind::Flat, TopologyKind::Patch] {
        let closure: Vec<&str> = space
            .closure(0, topo)
            .into_iter()
            .map(|i| space.labels()[i].as_str())
            .collect();
        let sep = space.separation(topo);
        println!(
            "  {topo:?}: closure({}) = {:?}, hausdorff = {}, normal = {}",
            space.labels()[0],
            closure,
            sep.hausdorff,
            sep.normal
        );
    }
    match space.retraction(RetractionTarget::Max) {
        RetractionOutcome::Map { map, continuous } => {
            let image: Vec<&str> = map.iter().map(|&i| space.labels()[i].as_str()).collect();
            println!("  retraction onto maximal points: {image:?} (continuous: {continuous})");
        }
        RetractionOutcome::NoUnique { point, targets } => {
            println!(
                "  no retraction: {} lies under {} maximal points",
                space.labels()[point],
                targets.len()
            );
        }
    }
    let classes: Vec<Vec<&str>> = space
        .r_classes()
        .into_iter()
        .map(|c| c.into_iter().map(|i| space.labels()[i].as_str()).collect())
        .collect();
    println!("  span-relation classes: {classes:?}");
    let c = space.classify();
    println!(
        "  gelfand clauses agree to {:?}, mp to {:?}, zero-dim to {:?}",
        c.gelfand_agrees(),
        c.mp_agrees(),
        c.zero_dim_agrees()
    );
    println!();
}

fn main() {
    let v = SpectralSpace::from_order(
        vec!["p".into(), "m1".into(), "m2".into()],
        &[(0, 1), (0, 2)],
    )
    .unwrap();
    show("one minimal under two maximals", &v);

    let lambda = v.hochster_dual();
    show("its order dual", &lambda);

    let chain = SpectralSpace::from_order(
        vec!["a".into(), "b".into(), "c".into()],
        &[(0, 1), (1, 2)],
    )
    .unwrap();
    show("chain of three", &chain);

    println!("duality is an involution: {}", lambda.hochster_dual() == v);
}
