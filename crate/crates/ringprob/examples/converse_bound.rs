//! The converse direction: an extracted ideal D of index m with span
//! order k forces probability ≥ 1/(k·m²). Checked exactly against the
//! ideals the pipelines produce.
//!
//!     cargo run --example converse_bound

use ringprob::catalog::{build_family, FamilySpec};
use ringprob::extraction::{
    converse_lower_bound, extract_commuting_ideal, extract_zero_ideal, ConverseMode,
};
use ringprob::subobjects::AdditiveSubgroup;

fn main() {
    for spec in [
        FamilySpec::Matrix2(2),
        FamilySpec::Matrix2(3),
        FamilySpec::UpperTriangular2(2),
        FamilySpec::Cyclic(6),
    ] {
        let ring = build_family(&spec).unwrap();

        let cp_rep = extract_commuting_ideal(&ring, None).unwrap();
        let lie = ring.associated_lie_ring().unwrap();
        let d = AdditiveSubgroup::from_members(&lie, cp_rep.d.members.clone(), cp_rep.d.generators.clone());
        let conv = converse_lower_bound(&lie, &d, ConverseMode::Cp).unwrap();
        println!(
            "{:<10} cp: m = {}, k = {:>2}, bound = {:<8} ≤ cp = {:<8} → holds = {}",
            ring.name(),
            conv.index_m,
            conv.span_k,
            conv.bound.to_string(),
            conv.probability.to_string(),
            conv.holds
        );

        let zp_rep = extract_zero_ideal(&ring, None).unwrap();
        let dz = AdditiveSubgroup::from_members(&ring, zp_rep.d.members.clone(), zp_rep.d.generators.clone());
        let convz = converse_lower_bound(&ring, &dz, ConverseMode::Zp).unwrap();
        println!(
            "{:<10} zp: m = {}, k = {:>2}, bound = {:<8} ≤ zp = {:<8} → holds = {}",
            ring.name(),
            convz.index_m,
            convz.span_k,
            convz.bound.to_string(),
            convz.probability.to_string(),
            convz.holds
        );
    }
}
