//! Zero-probability extraction: from zp(R) = ε through the left ideal
//! generated by B and the descent to a two-sided ideal D with |D²|
//! recorded exactly. The JSON printed at the end is the report the
//! `extract` subcommand emits.
//!
//!     cargo run --example extract_zero

use ringprob::catalog::ring_from_file;
use ringprob::catalog::{build_family, FamilySpec, RingFile};
use ringprob::extraction::extract_zero_ideal;
use ringprob::ring::Flavor;

fn main() {
    // A hand-written ring file: x·y = y₁·x on Z_2×Z_2 (one-sided
    // structure as lopsided as order 4 allows).
    let file = RingFile {
        name: "column4".into(),
        flavor: Flavor::Associative,
        orders: vec![2, 2],
        table: vec![
            vec![vec![1, 0], vec![0, 0]],
            vec![vec![0, 1], vec![0, 0]],
        ],
    };
    let column = ring_from_file(&file).unwrap();

    for ring in [column, build_family(&FamilySpec::Matrix2(2)).unwrap()] {
        let rep = extract_zero_ideal(&ring, None).unwrap();
        println!("== {} ==", ring.name());
        println!("  zp = epsilon   = {} ≈ {}", rep.epsilon, rep.epsilon.decimal6());
        println!("  |X|            = {}", rep.x_set_size);
        println!("  [R:B]          = {}", rep.index_b);
        println!("  witnesses in B = {:?}", rep.witness_generators);
        println!("  descent steps  = {}", rep.descent_steps);
        println!("  [R:D]          = {}", rep.index_d);
        println!(
            "  |D²|           = {} (span {})",
            rep.square_or_bracket_set_size, rep.square_or_bracket_span_size
        );
        println!("  VALID          = {}\n", rep.valid);
    }

    let m2 = build_family(&FamilySpec::Matrix2(2)).unwrap();
    let rep = extract_zero_ideal(&m2, None).unwrap();
    println!("full report JSON for {}:", m2.name());
    println!("{}", rep.to_json().unwrap());
}
