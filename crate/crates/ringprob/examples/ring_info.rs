//! Build a few rings and print their exact probabilities and extremal
//! orbit indices.
//!
//!     cargo run --example ring_info

use ringprob::catalog::{build_family, FamilySpec};
use ringprob::probability::{commuting_probability, cp_consistency, zero_probability};

fn main() {
    let specs = [
        FamilySpec::Cyclic(12),
        FamilySpec::ZeroRing(16),
        FamilySpec::UpperTriangular2(2),
        FamilySpec::Matrix2(2),
        FamilySpec::Matrix2(3),
        FamilySpec::DirectSum(
            Box::new(FamilySpec::Matrix2(2)),
            Box::new(FamilySpec::Cyclic(3)),
        ),
    ];
    for spec in &specs {
        let ring = build_family(spec).unwrap();
        let cp = commuting_probability(&ring).unwrap();
        let zp = zero_probability(&ring).unwrap();
        println!(
            "{:<16} |R| = {:<4} commutative = {:<5} cp = {} ≈ {}   zp = {} ≈ {}",
            ring.name(),
            ring.cardinality(),
            ring.is_commutative(),
            cp,
            cp.decimal6(),
            zp,
            zp.decimal6(),
        );
    }

    // The three routes to cp agree exactly: centralizer sums, the
    // associated Lie ring, and the raw pair count.
    let m2 = build_family(&FamilySpec::Matrix2(2)).unwrap();
    let rep = cp_consistency(&m2).unwrap();
    println!(
        "\ncp(M2(Z2)) three ways: {} / {} / {} → consistent = {}",
        rep.cp_via_centralizers,
        rep.cp_of_associated_lie_ring,
        rep.cp_via_pair_count,
        rep.consistent
    );
}
