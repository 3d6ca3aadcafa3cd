//! Converse lower bound: a ring whose structure admits an ideal D of
//! index m with bracket/square span of order k cannot have arbitrarily
//! small probability. Concretely cp(R) ≥ 1/(k·m²): for x ∈ D the map
//! y ↦ `[x,y]` sends D into the span, so |C_D(x)| ≥ |D|/k, and summing
//! |C(x)| over x ∈ D already yields |D|²/k commuting pairs. Mirrored for
//! zp with products and annihilators. The inequality is asserted, not
//! assumed.

use crate::error::{Result, RingError};
use crate::probability::{commuting_probability, zero_probability};
use crate::rational::Rational;
use crate::ring::FiniteRing;
use crate::subobjects::{
    additive_span, bracket_set, index, is_ideal, product_set, AdditiveSubgroup, IdealKind,
};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConverseMode {
    Cp,
    Zp,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConverseReport {
    pub mode: ConverseMode,
    /// m = [R : D].
    pub index_m: u64,
    /// k = |span(`[D,D]`)| (cp) or |span(D²)| (zp).
    pub span_k: u64,
    /// 1/(k·m²).
    pub bound: Rational,
    pub probability: Rational,
    /// probability ≥ bound, exactly.
    pub holds: bool,
}

/// Computes 1/(k·m²) for the ideal D and asserts the probability
/// dominates it. D must be an ideal of the kind the mode analyzes
/// (Lie ideal for cp, two-sided for zp) in the given ring.
pub fn converse_lower_bound(
    ring: &FiniteRing,
    d: &AdditiveSubgroup,
    mode: ConverseMode,
) -> Result<ConverseReport> {
    d.check_ring(ring)?;
    let kind = match mode {
        ConverseMode::Cp => IdealKind::Lie,
        ConverseMode::Zp => IdealKind::TwoSided,
    };
    let check = is_ideal(ring, d, kind)?;
    if !check.ok {
        let (r, a) = check.counterexample.unwrap_or((0, 0));
        return Err(RingError::NonIdealInput {
            kind: kind.name().to_string(),
            r,
            a,
        });
    }

    let dset = d.as_element_set();
    let pairs = match mode {
        ConverseMode::Cp => bracket_set(ring, &dset, &dset)?,
        ConverseMode::Zp => product_set(ring, &dset, &dset)?,
    };
    let span = additive_span(ring, &pairs)?;
    let k = span.order();
    let m = index(ring, d);
    let bound = Rational::from_counts(1, k * m * m).expect("positive denominator");
    let probability = match mode {
        ConverseMode::Cp => commuting_probability(ring)?,
        ConverseMode::Zp => zero_probability(ring)?,
    };
    let holds = probability >= bound;
    Ok(ConverseReport {
        mode,
        index_m: m,
        span_k: k,
        bound,
        probability,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_family, FamilySpec};
    use crate::subobjects::additive_span_of_ids;

    #[test]
    fn whole_commutative_ring_attains_bound_one() {
        let r = build_family(&FamilySpec::Cyclic(6)).unwrap();
        let lie = r.associated_lie_ring().unwrap();
        let d = additive_span_of_ids(&lie, &[1]).unwrap();
        let rep = converse_lower_bound(&lie, &d, ConverseMode::Cp).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.bound, Rational::one());
        assert_eq!(rep.probability, Rational::one());
    }

    #[test]
    fn trivial_ideal_gives_diagonal_bound() {
        // D = {0} in an order-n ring: bound = 1/n², always ≤ cp.
        let r = build_family(&FamilySpec::Matrix2(2)).unwrap().associated_lie_ring().unwrap();
        let d = additive_span_of_ids(&r, &[]).unwrap();
        let rep = converse_lower_bound(&r, &d, ConverseMode::Cp).unwrap();
        assert_eq!(rep.bound, Rational::from_counts(1, 256).unwrap());
        assert!(rep.holds);
    }

    #[test]
    fn zp_bound_on_z4_ideal() {
        let r = build_family(&FamilySpec::Cyclic(4)).unwrap();
        let d = additive_span_of_ids(&r, &[2]).unwrap();
        // D = {0,2}: D² = {0}, span k = 1, m = 2: bound = 1/4 ≤ zp = 1/2.
        let rep = converse_lower_bound(&r, &d, ConverseMode::Zp).unwrap();
        assert_eq!(rep.span_k, 1);
        assert_eq!(rep.index_m, 2);
        assert_eq!(rep.bound, Rational::from_counts(1, 4).unwrap());
        assert!(rep.holds);
    }

    #[test]
    fn non_ideal_input_is_rejected() {
        let m = build_family(&FamilySpec::Matrix2(2)).unwrap();
        let sub = additive_span_of_ids(&m, &[m.basis_id(0)]).unwrap();
        assert!(matches!(
            converse_lower_bound(&m, &sub, ConverseMode::Zp),
            Err(RingError::NonIdealInput { .. })
        ));
    }
}
