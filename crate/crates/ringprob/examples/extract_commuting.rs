//! Commuting-probability extraction, end to end: from cp(R) = ε to a Lie
//! ideal D with audited index and bracket-span size, printing the full
//! assertion log.
//!
//!     cargo run --example extract_commuting

use ringprob::catalog::{build_family, FamilySpec};
use ringprob::extraction::extract_commuting_ideal;

fn main() {
    for spec in [FamilySpec::Matrix2(2), FamilySpec::Matrix2(3), FamilySpec::UpperTriangular2(2)] {
        let ring = build_family(&spec).unwrap();
        let rep = extract_commuting_ideal(&ring, None).unwrap();
        println!("== {} (|R| = {}) ==", ring.name(), ring.cardinality());
        println!("  epsilon            = {} ≈ {}", rep.epsilon, rep.epsilon.decimal6());
        println!("  |X|                = {}", rep.x_set_size);
        println!("  [L:B]              = {}", rep.index_b);
        println!("  generation r       = {} (span reached in {} rounds)", rep.eberhard_r, rep.eberhard_rounds);
        println!("  max |[L,b]| over B = {}", rep.max_orbit_over_b);
        println!("  witnesses          = {:?}", rep.witness_generators);
        println!("  [L:D]              = {}", rep.index_d);
        println!(
            "  |[D,D]|            = {} (span {})",
            rep.square_or_bracket_set_size, rep.square_or_bracket_span_size
        );
        println!("  VALID              = {}", rep.valid);
        for a in &rep.assertion_log.0 {
            println!("    [{:?}] {:<40} {}", a.status, a.name, a.witness);
        }
        println!();
    }
}
