//! Exact commuting probability and zero-product probability.
//!
//! cp(R) = |{(x,y) : `[x,y]` = 0}| / |R|² and zp(R) = |{(x,y) : xy = 0}| / |R|².
//! Both are computed through the centralizer/annihilator sums
//! Σ_x |C(x)| and Σ_x |Ann(x)|, which the pair-count definitions reduce to;
//! the double-loop pair counts are kept as an independent cross-check.

use crate::error::Result;
use crate::rational::Rational;
use crate::ring::{FiniteRing, Flavor, OrbitOp};
use serde::Serialize;

fn kernel_size(ring: &FiniteRing, op: OrbitOp) -> Result<u64> {
    let map = ring.orbit_map(op)?;
    Ok(map.iter().filter(|&&v| v == 0).count() as u64)
}

/// Number of ordered pairs with `[x,y]` = 0, via Σ_x |C(x)|.
pub fn commuting_pairs(ring: &FiniteRing) -> Result<u64> {
    ring.check_enum_cap()?;
    let mut total = 0u64;
    for a in 0..ring.cardinality() {
        total += kernel_size(ring, OrbitOp::BracketBy(a))?;
    }
    Ok(total)
}

/// Number of ordered pairs with x·y = 0, via Σ_x |Ann(x)|.
pub fn zero_pairs(ring: &FiniteRing) -> Result<u64> {
    ring.check_enum_cap()?;
    if ring.flavor() != Flavor::Associative {
        return Err(crate::error::RingError::FlavorMismatch {
            expected: "associative",
            actual: ring.flavor().name(),
        });
    }
    let mut total = 0u64;
    for a in 0..ring.cardinality() {
        total += kernel_size(ring, OrbitOp::LeftMulBy(a))?;
    }
    Ok(total)
}

/// cp(R): fraction of ordered pairs that commute. Any flavor.
pub fn commuting_probability(ring: &FiniteRing) -> Result<Rational> {
    let n = ring.cardinality();
    Ok(Rational::from_counts(commuting_pairs(ring)?, n * n).expect("nonzero cardinality"))
}

/// zp(R): fraction of ordered pairs with product zero. Associative only.
pub fn zero_probability(ring: &FiniteRing) -> Result<Rational> {
    let n = ring.cardinality();
    Ok(Rational::from_counts(zero_pairs(ring)?, n * n).expect("nonzero cardinality"))
}

/// Independent pair-count oracle for cp: plain double loop over bracket.
pub fn commuting_pairs_double_loop(ring: &FiniteRing) -> Result<u64> {
    ring.check_enum_cap()?;
    let n = ring.cardinality();
    let mut count = 0u64;
    for x in 0..n {
        for y in 0..n {
            if ring.bracket_id(x, y) == 0 {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Independent pair-count oracle for zp: plain double loop over products.
pub fn zero_pairs_double_loop(ring: &FiniteRing) -> Result<u64> {
    ring.check_enum_cap()?;
    let n = ring.cardinality();
    let mut count = 0u64;
    for x in 0..n {
        for y in 0..n {
            if ring.mul_id(x, y) == 0 {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Cross-check that cp(R), cp of the associated Lie ring, and the
/// bracket-zero pair count all agree exactly.
#[derive(Debug, Clone, Serialize)]
pub struct CpConsistency {
    pub cp_via_centralizers: Rational,
    pub cp_of_associated_lie_ring: Rational,
    pub cp_via_pair_count: Rational,
    pub consistent: bool,
}

pub fn cp_consistency(ring: &FiniteRing) -> Result<CpConsistency> {
    let cp = commuting_probability(ring)?;
    let lie = ring.associated_lie_ring()?;
    let cp_lie = commuting_probability(&lie)?;
    let n = ring.cardinality();
    let cp_pairs = Rational::from_counts(commuting_pairs_double_loop(ring)?, n * n)
        .expect("nonzero cardinality");
    let consistent = cp == cp_lie && cp == cp_pairs;
    Ok(CpConsistency {
        cp_via_centralizers: cp,
        cp_of_associated_lie_ring: cp_lie,
        cp_via_pair_count: cp_pairs,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::GroupShape;

    fn z(n: u64) -> FiniteRing {
        let shape = GroupShape::new(vec![n]).unwrap();
        FiniteRing::new(format!("Z{n}"), shape, vec![vec![1]], Flavor::Associative).unwrap()
    }

    fn zero_ring(orders: Vec<u64>) -> FiniteRing {
        let k = orders.len();
        let shape = GroupShape::new(orders).unwrap();
        FiniteRing::new("zero", shape, vec![vec![0; k]; k], Flavor::Associative).unwrap()
    }

    fn mat2() -> FiniteRing {
        let shape = GroupShape::new(vec![2, 2, 2, 2]).unwrap();
        let mut table = vec![vec![0u64; 4]; 4];
        for a in 0..2usize {
            for b in 0..2usize {
                for c in 0..2usize {
                    for d in 0..2usize {
                        if b == c {
                            table[2 * a + b][2 * c + d] = 1u64 << (2 * a + d);
                        }
                    }
                }
            }
        }
        FiniteRing::new("M2(Z2)", shape, table, Flavor::Associative).unwrap()
    }

    #[test]
    fn commutative_rings_have_cp_one() {
        assert_eq!(commuting_probability(&z(7)).unwrap(), Rational::one());
        assert_eq!(
            commuting_probability(&zero_ring(vec![2, 2])).unwrap(),
            Rational::one()
        );
    }

    #[test]
    fn zero_ring_has_zp_one() {
        assert_eq!(zero_probability(&zero_ring(vec![2, 3])).unwrap(), Rational::one());
    }

    #[test]
    fn zp_of_prime_fields() {
        // xy = 0 iff x = 0 or y = 0: zp(Z_p) = (2p−1)/p².
        assert_eq!(
            zero_probability(&z(2)).unwrap(),
            Rational::from_counts(3, 4).unwrap()
        );
        assert_eq!(
            zero_probability(&z(3)).unwrap(),
            Rational::from_counts(5, 9).unwrap()
        );
    }

    #[test]
    fn zp_of_z4_is_one_half() {
        assert_eq!(
            zero_probability(&z(4)).unwrap(),
            Rational::from_counts(1, 2).unwrap()
        );
    }

    #[test]
    fn mat2_cp_matches_double_loop_exactly() {
        let r = mat2();
        let via_sum = commuting_pairs(&r).unwrap();
        let via_loop = commuting_pairs_double_loop(&r).unwrap();
        assert_eq!(via_sum, via_loop);
        // Frozen from the double-loop oracle: 2 central elements with
        // |C| = 16 and 14 elements with |C| = 4 give 88/256 = 11/32.
        assert_eq!(
            commuting_probability(&r).unwrap(),
            Rational::from_counts(11, 32).unwrap()
        );
        let via_zp_sum = zero_pairs(&r).unwrap();
        let via_zp_loop = zero_pairs_double_loop(&r).unwrap();
        assert_eq!(via_zp_sum, via_zp_loop);
        // Frozen from the oracle: 16 + 6·1 + 9·4 = 58 zero pairs.
        assert_eq!(via_zp_sum, 58);
    }

    #[test]
    fn consistency_report_ties_the_three_routes() {
        for ring in [z(4), zero_ring(vec![2, 2]), mat2()] {
            let rep = cp_consistency(&ring).unwrap();
            assert!(rep.consistent, "{}", ring.name());
            assert_eq!(rep.cp_via_centralizers, rep.cp_of_associated_lie_ring);
            assert_eq!(rep.cp_via_centralizers, rep.cp_via_pair_count);
        }
    }

    #[test]
    fn probability_bounds() {
        for ring in [z(6), mat2()] {
            let n = ring.cardinality();
            let cp = commuting_probability(&ring).unwrap();
            assert!(cp.is_positive());
            assert!(cp.cmp_u64(1) != std::cmp::Ordering::Greater);
            // Diagonal pairs commute: cp ≥ 1/|R|.
            let diag = Rational::from_counts(1, n).unwrap();
            assert!(cp >= diag);
            // Denominator divides |R|².
            use num::bigint::BigInt;
            let nsq = BigInt::from(n * n);
            assert_eq!(&nsq % cp.denominator(), BigInt::from(0));
        }
    }

    #[test]
    fn zp_counted_on_opposite_ring_is_equal() {
        // Row/column symmetry of the zero-pair relation.
        let r = mat2();
        let op = r.opposite_ring().unwrap();
        assert_eq!(zero_pairs(&r).unwrap(), zero_pairs(&op).unwrap());
    }
}
