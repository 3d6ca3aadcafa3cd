//! Conversion of a one-sided ideal into a two-sided ideal by strict
//! index descent: while B is not two-sided, pick the least-id y ∈ R whose
//! multiples escape B (y·B ⊄ B for a right ideal, B·y ⊄ B for a left
//! ideal), and replace B by B + yB (resp. B + By), a strictly larger
//! ideal of the same sidedness. Terminates in ≤ log₂`[R:B]` steps.
//!
//! Every step asserts, exactly: the new subgroup is still a one-sided
//! ideal, the index strictly decreased, and for sampled d = y·b₁ + b₂
//! (resp. b₁·y + b₂) the annihilator containment Ann(b₁,b₂) ⊆ Ann(d) with
//! `[R:Ann(d)]` ≤ n⁴ for n = max(`[R:B]`, |B²|) of the current step.

use super::AssertionLog;
use crate::error::{Result, RingError};
use crate::ring::{FiniteRing, Flavor, OrbitOp};
use crate::subobjects::{
    additive_span_of_ids, index, is_ideal, left_annihilator, product_set, right_annihilator,
    AdditiveSubgroup, IdealKind,
};
use serde::{Deserialize, Serialize};

/// Which one-sided kind the input ideal is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn ideal_kind(self) -> IdealKind {
        match self {
            Side::Left => IdealKind::Left,
            Side::Right => IdealKind::Right,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DescentStep {
    /// The escaping multiplier chosen (least id with y·B ⊄ B / B·y ⊄ B).
    pub y: u64,
    pub index_before: u64,
    pub index_after: u64,
    /// n = max(`[R:B]`, |B²|) for this step.
    pub n: u64,
    /// Largest sampled `[R : Ann(d)]` (annihilator on the step's side).
    pub max_sampled_ann_index: u64,
    /// n⁴, the bound the sampled indices are checked against.
    pub ann_index_bound: u64,
    /// Largest sampled `[D : Ann_D(d)]` — the in-ideal quotient recorded
    /// alongside the ambient-ring numbers.
    pub max_sampled_in_ideal_index: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DescentReport {
    pub side: Side,
    pub steps: Vec<DescentStep>,
    pub final_ideal: AdditiveSubgroup,
    pub final_index: u64,
    pub assertion_log: AssertionLog,
    pub valid: bool,
}

/// Produces the multiples set {y·b : b ∈ B} (right-ideal descent) or
/// {b·y : b ∈ B} (left-ideal descent) as sorted ids.
fn escape_multiples(ring: &FiniteRing, side: Side, y: u64, b: &AdditiveSubgroup) -> Result<Vec<u64>> {
    let map = match side {
        Side::Right => ring.orbit_map(OrbitOp::LeftMulBy(y))?, // b ↦ y·b
        Side::Left => ring.orbit_map(OrbitOp::RightMulBy(y))?, // b ↦ b·y
    };
    let mut out: Vec<u64> = b.members.iter().map(|&m| map[m as usize]).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Converts the one-sided ideal B into a two-sided ideal, with full trace.
pub fn one_sided_to_two_sided(
    ring: &FiniteRing,
    b: &AdditiveSubgroup,
    side: Side,
) -> Result<DescentReport> {
    if ring.flavor() != Flavor::Associative {
        return Err(RingError::FlavorMismatch {
            expected: "associative",
            actual: ring.flavor().name(),
        });
    }
    b.check_ring(ring)?;
    ring.check_enum_cap()?;
    let pre = is_ideal(ring, b, side.ideal_kind())?;
    if !pre.ok {
        let (r, a) = pre.counterexample.unwrap_or((0, 0));
        return Err(RingError::NonIdealInput {
            kind: side.ideal_kind().name().to_string(),
            r,
            a,
        });
    }

    let mut log = AssertionLog::default();
    let mut current = b.clone();
    let mut steps = Vec::new();

    loop {
        if is_ideal(ring, &current, IdealKind::TwoSided)?.ok {
            break;
        }
        let index_before = index(ring, &current);
        let bset = current.as_element_set();
        let squares = product_set(ring, &bset, &bset)?;
        let n = index_before.max(squares.len());

        // Least-id escaping multiplier. One exists exactly because the
        // ideal is not two-sided.
        let mut chosen = None;
        'search: for y in 0..ring.cardinality() {
            let mult = escape_multiples(ring, side, y, &current)?;
            if mult.iter().any(|&m| !current.contains(m)) {
                chosen = Some((y, mult));
                break 'search;
            }
        }
        let Some((y, mult)) = chosen else {
            log.check(
                "descent_escape_exists",
                false,
                "not two-sided yet no multiplier escapes".to_string(),
            );
            break;
        };

        let mut seed = current.members.clone();
        seed.extend(&mult);
        let next = additive_span_of_ids(ring, &seed)?;
        let next = AdditiveSubgroup {
            generators: current.generators.clone(),
            ..next
        };

        let still = is_ideal(ring, &next, side.ideal_kind())?;
        log.check(
            &format!("descent_step_{}_is_{}_ideal", steps.len(), side.ideal_kind().name()),
            still.ok,
            format!("y = {y}, counterexample {:?}", still.counterexample),
        );
        let index_after = index(ring, &next);
        log.check(
            &format!("descent_step_{}_strict_decrease", steps.len()),
            index_after < index_before,
            format!("index {index_before} -> {index_after}"),
        );

        // Sampled annihilator checks on the new ideal: every d ∈ B + yB
        // decomposes as y·b₁ + b₂ (mirrored for left).
        let bound = n.saturating_mul(n).saturating_mul(n).saturating_mul(n);
        let mut max_ann = 0u64;
        let mut max_in_ideal = 0u64;
        let mut decomp_ok = true;
        let mut witness = String::new();
        let ymap = match side {
            Side::Right => ring.orbit_map(OrbitOp::LeftMulBy(y))?,
            Side::Left => ring.orbit_map(OrbitOp::RightMulBy(y))?,
        };
        for &d in next.members.iter().take(256) {
            // Least b₁ with d − y·b₁ ∈ B.
            let mut found = None;
            for &b1 in &current.members {
                let part = ymap[b1 as usize];
                let b2 = ring.shape().add_ids(d, ring.shape().neg_id(part));
                if current.contains(b2) {
                    found = Some((b1, b2));
                    break;
                }
            }
            let Some((b1, b2)) = found else {
                decomp_ok = false;
                witness = format!("d = {d} has no decomposition");
                break;
            };
            let (ann_pair, ann_d) = match side {
                Side::Right => (
                    right_annihilator(ring, &[b1, b2])?,
                    right_annihilator(ring, &[d])?,
                ),
                Side::Left => (
                    left_annihilator(ring, &[b1, b2])?,
                    left_annihilator(ring, &[d])?,
                ),
            };
            if let Some(&t) = ann_pair.members.iter().find(|&&t| !ann_d.contains(t)) {
                decomp_ok = false;
                witness = format!("d = {d}: {t} annihilates (b1,b2) but not d");
                break;
            }
            let ann_index = index(ring, &ann_d);
            max_ann = max_ann.max(ann_index);
            if ann_index > bound {
                decomp_ok = false;
                witness = format!("d = {d}: [R:Ann(d)] = {ann_index} > n^4 = {bound}");
                break;
            }
            // In-ideal quotient [D : Ann_D(d)] = |d·D| (resp. |D·d|).
            let dmap = match side {
                Side::Right => ring.orbit_map(OrbitOp::LeftMulBy(d))?,
                Side::Left => ring.orbit_map(OrbitOp::RightMulBy(d))?,
            };
            let mut image: Vec<u64> =
                next.members.iter().map(|&m| dmap[m as usize]).collect();
            image.sort_unstable();
            image.dedup();
            max_in_ideal = max_in_ideal.max(image.len() as u64);
        }
        log.check(
            &format!("descent_step_{}_annihilator_bound", steps.len()),
            decomp_ok,
            if decomp_ok {
                format!("max [R:Ann(d)] = {max_ann} <= n^4 = {bound}")
            } else {
                witness
            },
        );

        steps.push(DescentStep {
            y,
            index_before,
            index_after,
            n,
            max_sampled_ann_index: max_ann,
            ann_index_bound: bound,
            max_sampled_in_ideal_index: max_in_ideal,
        });
        current = next;

        if !log.all_pass() {
            break;
        }
        if steps.len() > 64 {
            log.check("descent_terminates", false, "more than 64 steps".to_string());
            break;
        }
    }

    let final_index = index(ring, &current);
    let two = is_ideal(ring, &current, IdealKind::TwoSided)?;
    log.check(
        "descent_result_two_sided",
        two.ok,
        format!("final index {final_index}"),
    );
    let valid = log.all_pass();
    Ok(DescentReport {
        side,
        steps,
        final_ideal: current,
        final_index,
        assertion_log: log,
        valid,
    })
}
