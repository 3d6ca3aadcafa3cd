//! Brute-force oracle: enumerate every additive subgroup of a small ring,
//! filter to ideals of the requested kind, and minimize an objective over
//! the two bounded quantities (index and bracket/square span order).
//! The extraction pipelines are witnesses, not optimizers; the oracle
//! certifies feasibility and measures the gap.

use super::pipeline::XMode;
use crate::error::{Result, RingError};
use crate::ring::{FiniteRing, Flavor, ORACLE_CAP};
use crate::subobjects::{
    additive_span, bracket_set, index, is_ideal, product_set, AdditiveSubgroup, IdSet, IdealKind,
};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// Objective over (index, span order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    /// max(index, span) — both quantities bounded by one function.
    Max,
    /// index + span.
    Sum,
    /// (index, span) lexicographically.
    Lex,
}

impl Objective {
    pub fn parse(s: &str) -> Option<Objective> {
        match s {
            "max" => Some(Objective::Max),
            "sum" => Some(Objective::Sum),
            "lex" => Some(Objective::Lex),
            _ => None,
        }
    }

    pub fn evaluate(self, index: u64, span: u64) -> ObjectiveValue {
        match self {
            Objective::Max => ObjectiveValue::Scalar(index.max(span)),
            Objective::Sum => ObjectiveValue::Scalar(index + span),
            Objective::Lex => ObjectiveValue::Pair(index, span),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum ObjectiveValue {
    Scalar(u64),
    Pair(u64, u64),
}

impl std::fmt::Display for ObjectiveValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ObjectiveValue::Scalar(v) => write!(f, "{v}"),
            ObjectiveValue::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// Every additive subgroup of the ring's additive group, as sorted member
/// lists, ordered by (order, members). Cap: |R| ≤ 256.
pub fn enumerate_subgroups(ring: &FiniteRing) -> Result<Vec<AdditiveSubgroup>> {
    let n = ring.cardinality();
    if n > ORACLE_CAP {
        return Err(RingError::CapExceeded {
            what: "ring cardinality (subgroup oracle)",
            value: n,
            cap: ORACLE_CAP,
        });
    }
    let shape = ring.shape();
    let trivial = IdSet::from_sorted(n, &[0]);
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out: Vec<Vec<u64>> = Vec::new();
    let mut frontier = vec![trivial.clone()];
    seen.insert(trivial.to_sorted_vec());
    out.push(trivial.to_sorted_vec());
    while let Some(sub) = frontier.pop() {
        for g in 1..n {
            if sub.contains(g) {
                continue;
            }
            // Extend by the cyclic group of g, coset by coset.
            let mut ext = sub.clone();
            let base = sub.to_sorted_vec();
            let mut jg = g;
            while !ext.contains(jg) {
                for &m in &base {
                    ext.insert(shape.add_ids(m, jg));
                }
                jg = shape.add_ids(jg, g);
            }
            let key = ext.to_sorted_vec();
            if seen.insert(key.clone()) {
                out.push(key);
                frontier.push(ext);
            }
        }
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(out
        .into_iter()
        .map(|members| AdditiveSubgroup::from_members(ring, members, vec![]))
        .collect())
}

/// All subgroups that are one-sided ideals but not two-sided, with the
/// side they are closed on. Used to drive the descent exhaustively.
pub fn one_sided_only_ideals(
    ring: &FiniteRing,
) -> Result<Vec<(AdditiveSubgroup, super::descent::Side)>> {
    let mut out = Vec::new();
    for sub in enumerate_subgroups(ring)? {
        if is_ideal(ring, &sub, IdealKind::TwoSided)?.ok {
            continue;
        }
        if is_ideal(ring, &sub, IdealKind::Left)?.ok {
            out.push((sub, super::descent::Side::Left));
        } else if is_ideal(ring, &sub, IdealKind::Right)?.ok {
            out.push((sub, super::descent::Side::Right));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub ring_name: String,
    pub ring_hash: String,
    pub mode: XMode,
    pub objective: Objective,
    pub subgroup_count: u64,
    pub feasible_count: u64,
    pub best: AdditiveSubgroup,
    pub best_index: u64,
    pub best_span: u64,
    pub best_value: ObjectiveValue,
}

/// Index and bracket/square span order of an ideal, the two numbers every
/// objective is built from. `analyzed` must be the structure the mode
/// analyzes (Lie ring for cp).
pub fn objective_of(
    analyzed: &FiniteRing,
    d: &AdditiveSubgroup,
    mode: XMode,
) -> Result<(u64, u64)> {
    let dset = d.as_element_set();
    let pairs = match mode {
        XMode::Cp => bracket_set(analyzed, &dset, &dset)?,
        XMode::Zp => product_set(analyzed, &dset, &dset)?,
    };
    let span = additive_span(analyzed, &pairs)?;
    Ok((index(analyzed, d), span.order()))
}

/// Exhaustive search for the ideal minimizing the objective. For cp mode
/// on an associative ring the search runs over Lie ideals of the
/// associated Lie ring; ties break toward the least member-id sequence.
pub fn brute_force_optimal_ideal(
    ring: &FiniteRing,
    mode: XMode,
    objective: Objective,
) -> Result<OracleReport> {
    let analyzed_storage;
    let analyzed: &FiniteRing = match (mode, ring.flavor()) {
        (XMode::Cp, Flavor::Associative) => {
            analyzed_storage = ring.associated_lie_ring()?;
            &analyzed_storage
        }
        (XMode::Cp, Flavor::Lie) => ring,
        (XMode::Zp, Flavor::Associative) => ring,
        (XMode::Zp, Flavor::Lie) => {
            return Err(RingError::FlavorMismatch {
                expected: "associative",
                actual: "lie",
            })
        }
    };
    let kind = match mode {
        XMode::Cp => IdealKind::Lie,
        XMode::Zp => IdealKind::TwoSided,
    };
    let subgroups = enumerate_subgroups(analyzed)?;
    let subgroup_count = subgroups.len() as u64;
    let mut feasible_count = 0u64;
    let mut best: Option<(ObjectiveValue, Vec<u64>, u64, u64)> = None;
    for sub in &subgroups {
        if !is_ideal(analyzed, sub, kind)?.ok {
            continue;
        }
        feasible_count += 1;
        let (idx, span) = objective_of(analyzed, sub, mode)?;
        let value = objective.evaluate(idx, span);
        let candidate = (value, sub.members.clone(), idx, span);
        best = Some(match best {
            None => candidate,
            Some(cur) => {
                if (candidate.0, &candidate.1) < (cur.0, &cur.1) {
                    candidate
                } else {
                    cur
                }
            }
        });
    }
    // {0} and the whole ring are always feasible, so `best` exists.
    let (best_value, members, best_index, best_span) =
        best.expect("at least the trivial ideal is feasible");
    Ok(OracleReport {
        ring_name: ring.name().to_string(),
        ring_hash: ring.content_hash().to_string(),
        mode,
        objective,
        subgroup_count,
        feasible_count,
        best: AdditiveSubgroup::from_members(analyzed, members, vec![]),
        best_index,
        best_span,
        best_value,
    })
}
