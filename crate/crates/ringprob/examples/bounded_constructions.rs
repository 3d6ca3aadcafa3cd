//! The bounded commutator/square constructions: pick a of maximal orbit,
//! realize the orbit by least representatives, stabilize, transversal,
//! and certify span(`[L,L]`) (resp. span(R²)) against the product bound.
//!
//!     cargo run --example bounded_constructions

use ringprob::catalog::{build_family, FamilySpec};
use ringprob::extraction::{bounded_commutator_construction, bounded_square_construction};

fn main() {
    for spec in [
        FamilySpec::UpperTriangular2(2),
        FamilySpec::Matrix2(2),
        FamilySpec::Cyclic(4),
        FamilySpec::ZeroRing(8),
    ] {
        let ring = build_family(&spec).unwrap();
        let comm = bounded_commutator_construction(&ring).unwrap();
        println!("== {} commutator construction ==", ring.name());
        println!(
            "  n = {}, a = {}, |C| = {}, s = {}, span([L,L]) = {}, product bound = {}",
            comm.n,
            comm.chosen_a,
            comm.c.order(),
            comm.s,
            comm.span_order,
            comm.product_bound
        );
        println!("  valid = {}", comm.valid);

        let sq = bounded_square_construction(&ring).unwrap();
        println!("== {} square construction ==", ring.name());
        println!(
            "  n = {}, a = {}, |C| = {}, s = {}, span(R²) = {}, product bound = {}",
            sq.n,
            sq.chosen_a,
            sq.c.order(),
            sq.s,
            sq.span_order,
            sq.product_bound
        );
        println!("  valid = {}\n", sq.valid);
    }
}
