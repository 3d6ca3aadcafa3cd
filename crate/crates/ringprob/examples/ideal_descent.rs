//! One-sided to two-sided ideal descent, exhaustively over every
//! one-sided non-two-sided ideal of a few small rings (found by the
//! subgroup oracle), with the per-step annihilator bounds printed.
//!
//!     cargo run --example ideal_descent

use ringprob::catalog::{build_family, FamilySpec};
use ringprob::extraction::{one_sided_only_ideals, one_sided_to_two_sided};
use ringprob::ring::{FiniteRing, Flavor, GroupShape};
use ringprob::subobjects::index;

fn column_ring() -> FiniteRing {
    let shape = GroupShape::new(vec![2, 2]).unwrap();
    FiniteRing::new(
        "column4",
        shape,
        vec![vec![1, 0], vec![2, 0]],
        Flavor::Associative,
    )
    .unwrap()
}

fn main() {
    let rings = vec![
        column_ring(),
        build_family(&FamilySpec::UpperTriangular2(2)).unwrap(),
        build_family(&FamilySpec::Matrix2(2)).unwrap(),
    ];
    for ring in &rings {
        let cases = one_sided_only_ideals(ring).unwrap();
        println!(
            "== {} : {} one-sided non-two-sided ideal(s) ==",
            ring.name(),
            cases.len()
        );
        for (sub, side) in cases {
            let rep = one_sided_to_two_sided(ring, &sub, side).unwrap();
            println!(
                "  {:?} ideal {:?} (index {}) → two-sided of index {} in {} step(s), valid = {}",
                side,
                sub.members,
                index(ring, &sub),
                rep.final_index,
                rep.steps.len(),
                rep.valid
            );
            for s in &rep.steps {
                println!(
                    "     step: y = {}, index {} → {}, n = {}, max [R:Ann(d)] = {} ≤ n⁴ = {}",
                    s.y, s.index_before, s.index_after, s.n, s.max_sampled_ann_index, s.ann_index_bound
                );
            }
        }
        println!();
    }
}
