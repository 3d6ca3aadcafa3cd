//! Extraction vs brute force: for every ring of order ≤ 16 in the small
//! universe, compare the extracted ideal's objective against the
//! exhaustive optimum over all ideals. Emits the gap table as CSV —
//! exploratory output for the open question of best-possible bounds.
//!
//!     cargo run --example oracle_gap

use ringprob::catalog::{build_family, enumerate_rings, FamilySpec};
use ringprob::extraction::{
    brute_force_optimal_ideal, extract_commuting_ideal, extract_zero_ideal, objective_of,
    Objective, ObjectiveValue, XMode,
};
use ringprob::ring::{Flavor, GroupShape};
use ringprob::subobjects::AdditiveSubgroup;

fn main() {
    let mut rings = Vec::new();
    for orders in [vec![4], vec![2, 2]] {
        let shape = GroupShape::new(orders).unwrap();
        rings.extend(enumerate_rings(&shape, Flavor::Associative).unwrap().into_iter().map(|e| e.ring));
    }
    rings.push(build_family(&FamilySpec::UpperTriangular2(2)).unwrap());
    rings.push(build_family(&FamilySpec::Matrix2(2)).unwrap());
    for n in [6u64, 8, 12, 16] {
        rings.push(build_family(&FamilySpec::Cyclic(n)).unwrap());
        rings.push(build_family(&FamilySpec::ZeroRing(n)).unwrap());
    }

    println!("# ringprob oracle gap v1");
    println!("ring,mode,extracted_index,extracted_span,extracted_value,oracle_value,gap");
    for ring in &rings {
        for mode in [XMode::Cp, XMode::Zp] {
            let report = match mode {
                XMode::Cp => extract_commuting_ideal(ring, None).unwrap(),
                XMode::Zp => extract_zero_ideal(ring, None).unwrap(),
            };
            let analyzed = match mode {
                XMode::Cp => ring.associated_lie_ring().unwrap(),
                XMode::Zp => ring.clone(),
            };
            let d = AdditiveSubgroup::from_members(&analyzed, report.d.members.clone(), vec![]);
            let (idx, span) = objective_of(&analyzed, &d, mode).unwrap();
            let extracted = idx.max(span);
            let oracle = brute_force_optimal_ideal(ring, mode, Objective::Max).unwrap();
            let best = match oracle.best_value {
                ObjectiveValue::Scalar(v) => v,
                ObjectiveValue::Pair(a, b) => a.max(b),
            };
            println!(
                "{},{},{},{},{},{},{}",
                ring.name(),
                mode.name(),
                idx,
                span,
                extracted,
                best,
                extracted - best
            );
        }
    }
}
