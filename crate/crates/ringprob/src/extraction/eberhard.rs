//! Sumset generation in finite abelian groups: a symmetric subset X
//! containing 0 generates its additive span within 3r summands, where r
//! is the least positive integer with (r+1)·|X| > |G|. The check here
//! does not trust the bound — it computes the iterated sumsets and
//! reports the first round at which the span is reached.

use crate::error::{Result, RingError};
use crate::ring::{GroupShape, FULL_ENUM_CAP};
use crate::subobjects::{span_ids, IdSet};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct SumsetGeneration {
    /// Least positive r with (r+1)|X| > |G|.
    pub r: u64,
    /// Least m ≥ 1 with the m-fold sumset X + … + X equal to the span.
    pub rounds_to_span: u64,
    pub x_size: u64,
    pub span_order: u64,
    pub group_order: u64,
    /// rounds_to_span ≤ 3r.
    pub verified: bool,
}

/// Verifies the 3r-fold sumset identity for a symmetric 0-containing
/// subset of the additive group. Errors with `SymmetryViolated` when the
/// hypothesis on X fails.
pub fn eberhard_generation(shape: &GroupShape, x_members: &[u64]) -> Result<SumsetGeneration> {
    let n = shape.cardinality();
    if n > FULL_ENUM_CAP {
        return Err(RingError::CapExceeded {
            what: "group order",
            value: n,
            cap: FULL_ENUM_CAP,
        });
    }
    let x = IdSet::from_sorted(n, x_members);
    if !x.contains(0) {
        return Err(RingError::SymmetryViolated { witness: 0 });
    }
    for &m in x_members {
        if !x.contains(shape.neg_id(m)) {
            return Err(RingError::SymmetryViolated { witness: m });
        }
    }

    let x_size = x.len() as u64;
    let r = n / x_size; // least r with (r+1)|X| > |G|, and ≥ 1 since |X| ≤ |G|
    let span = span_ids(shape, x_members);
    let span_order = span.len() as u64;

    // Layered BFS: each element enters the frontier exactly once, so the
    // whole verification is O(|span|·|X|) additions.
    let mut reached = x.clone();
    let mut frontier: Vec<u64> = x.to_sorted_vec();
    let mut rounds: u64 = 1;
    while reached.len() < span.len() {
        let mut next = Vec::new();
        for &f in &frontier {
            for &xm in x_members {
                let s = shape.add_ids(f, xm);
                if reached.insert(s) {
                    next.push(s);
                }
            }
        }
        if next.is_empty() {
            // Stabilized below the span: impossible for 0 ∈ X; treated as
            // a verification failure rather than a panic.
            break;
        }
        frontier = next;
        rounds += 1;
    }

    let verified = reached.len() as u64 == span_order && rounds <= 3 * r;
    Ok(SumsetGeneration {
        r,
        rounds_to_span: rounds,
        x_size,
        span_order,
        group_order: n,
        verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: u64) -> GroupShape {
        GroupShape::new(vec![n]).unwrap()
    }

    #[test]
    fn z5_with_zero_one_four() {
        let g = cyclic(5);
        let out = eberhard_generation(&g, &[0, 1, 4]).unwrap();
        assert_eq!(out.r, 1);
        assert_eq!(out.span_order, 5);
        assert!(out.verified);
        assert!(out.rounds_to_span <= 3);
    }

    #[test]
    fn whole_group_is_trivially_verified() {
        let g = cyclic(6);
        let out = eberhard_generation(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(out.r, 1);
        assert_eq!(out.rounds_to_span, 1);
        assert!(out.verified);
    }

    #[test]
    fn z7_with_zero_one_six_needs_r_two() {
        let g = cyclic(7);
        let out = eberhard_generation(&g, &[0, 1, 6]).unwrap();
        assert_eq!(out.r, 2);
        assert_eq!(out.span_order, 7);
        assert!(out.verified);
        // 3-fold sumset of {0,±1} is {−3..3} = all of Z_7.
        assert_eq!(out.rounds_to_span, 3);
    }

    #[test]
    fn zero_singleton() {
        let g = cyclic(9);
        let out = eberhard_generation(&g, &[0]).unwrap();
        assert_eq!(out.span_order, 1);
        assert_eq!(out.rounds_to_span, 1);
        assert!(out.verified);
    }

    #[test]
    fn asymmetric_set_is_rejected() {
        let g = cyclic(5);
        let err = eberhard_generation(&g, &[0, 1]).unwrap_err();
        assert!(matches!(err, RingError::SymmetryViolated { witness: 1 }));
        let err0 = eberhard_generation(&g, &[1, 4]).unwrap_err();
        assert!(matches!(err0, RingError::SymmetryViolated { witness: 0 }));
    }

    #[test]
    fn proper_subgroup_span() {
        // X = {0, 2, 4} in Z_6 spans {0,2,4} only.
        let g = cyclic(6);
        let out = eberhard_generation(&g, &[0, 2, 4]).unwrap();
        assert_eq!(out.span_order, 3);
        assert!(out.verified);
    }
}
