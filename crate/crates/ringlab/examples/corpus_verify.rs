//! Run the agreement suites over a small corpus and print the table the
//! `ringlab verify` subcommand produces.
//!
//! Run with: cargo run --example corpus_verify

use ringlab::cli::run_verify;
use ringlab::corpus::CorpusSpec;
use ringlab::ring::Caps;

fn main() {
    let spec = CorpusSpec {
        quotient_int_max: 16,
        poly_primes: vec![2],
        poly_max_degree: 2,
        product_max_arity: 2,
        product_max_size: 32,
        ..CorpusSpec::default()
    };
    let rows = run_verify(&spec, Caps::default(), None).unwrap();
    let mut disagreements = 0usize;
    for row in &rows {
        if !row.agree {
            disagreements += 1;
        }
        println!(
            "{:<24} {:<18} {:<9} {}",
            row.ring,
            row.theorem,
            if row.agree { "agree" } else { "DISAGREE" },
            row.detail
        );
    }
    println!("\n{} rows, {disagreements} disagreements", rows.len());
}
