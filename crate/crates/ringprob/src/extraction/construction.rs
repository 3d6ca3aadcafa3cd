//! Bounded commutator/square constructions.
//!
//! Hypothesis shape: every centralizer (resp. right annihilator) has index
//! at most n. The construction picks a least-id element a of maximal orbit
//! size n, representatives b₁..bₙ realizing the orbit `[L,a]` (resp. aR),
//! the joint stabilizer C of the representatives, and a transversal
//! a₁..aₛ of C; it then certifies, by direct enumeration:
//!   - `[L,a+x]` = `[L,a]` and `[L,x]` ⊆ `[L,a]` for every x ∈ C (mirrored: aR),
//!   - s ≤ n^n,
//!   - span(`[L,L]`) ⊆ span(∪ᵢ `[L,aᵢ]`) with a₀ = a,
//!   - |span(`[L,L]`)| ≤ Π |`[L,aᵢ]`|  (mirrored: R² and aᵢR).
//!
//! For the square construction the joint stabilizer is
//! C = {x : x·bᵢ = 0 ∀i}: the condition the containment argument needs is
//! two-sided for brackets but one-sided for products, and it is the left
//! factor that must vanish for (a+x)·bᵢ = a·bᵢ to hold.

use super::AssertionLog;
use crate::error::{Result, RingError};
use crate::ring::{FiniteRing, Flavor, OrbitOp};
use crate::subobjects::{
    additive_span_of_ids, centralizer, index, left_annihilator, transversal, AdditiveSubgroup,
    IdSet,
};
use num::bigint::BigInt;
use serde::Serialize;

/// Which proposition the report certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstructionMode {
    Commutator,
    Square,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructionReport {
    pub schema_version: u32,
    pub ring_name: String,
    pub ring_hash: String,
    pub mode: ConstructionMode,
    /// n = max orbit size = max centralizer/annihilator index.
    pub n: u64,
    /// Least-id element attaining n.
    pub chosen_a: u64,
    /// Least-id representatives realizing the orbit of a.
    pub b_list: Vec<u64>,
    /// Joint stabilizer of the representatives.
    pub c: AdditiveSubgroup,
    /// a₀ = a followed by the transversal of C.
    pub transversal_reps: Vec<u64>,
    /// s = `[R : C]` (the transversal size, not counting a₀).
    pub s: u64,
    /// |`[L,L]`| (resp. |R²|) as a plain set.
    pub commutator_set_size: u64,
    /// Exact order of span(`[L,L]`) (resp. span(R²)).
    pub span_order: u64,
    /// Π |`[L,aᵢ]`| (resp. Π |aᵢR|), decimal string (can be large).
    pub product_bound: String,
    pub assertion_log: AssertionLog,
    pub valid: bool,
}

impl ConstructionReport {
    pub fn ensure_valid(&self) -> Result<()> {
        self.assertion_log.ensure_valid()
    }
}

fn orbit_op(mode: ConstructionMode, a: u64) -> OrbitOp {
    match mode {
        ConstructionMode::Commutator => OrbitOp::BracketBy(a),
        ConstructionMode::Square => OrbitOp::LeftMulBy(a),
    }
}

/// Orbit of a as a sorted member list: `[L,a]` or aR.
fn orbit_members(ring: &FiniteRing, mode: ConstructionMode, a: u64) -> Result<Vec<u64>> {
    let mut v = ring.orbit_map(orbit_op(mode, a))?;
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

fn construction(ring: &FiniteRing, mode: ConstructionMode) -> Result<ConstructionReport> {
    if mode == ConstructionMode::Square && ring.flavor() != Flavor::Associative {
        return Err(RingError::FlavorMismatch {
            expected: "associative",
            actual: ring.flavor().name(),
        });
    }
    ring.check_enum_cap()?;
    let n_card = ring.cardinality();
    let mut log = AssertionLog::default();

    // n and the least-id element attaining it.
    let mut n = 0u64;
    let mut chosen_a = 0u64;
    let mut orbit_sizes = Vec::with_capacity(n_card as usize);
    for x in 0..n_card {
        let size = ring.map_image_size(orbit_op(mode, x))?;
        orbit_sizes.push(size);
        if size > n {
            n = size;
            chosen_a = x;
        }
    }
    log.note("maximal_orbit", format!("n = {n} at a = {chosen_a}"));

    // Representatives b₁..bₙ: for each orbit value, the least y realizing
    // it ([bᵢ,a] sweep for brackets, a·bᵢ for products).
    let amap = match mode {
        ConstructionMode::Commutator => ring.orbit_map(OrbitOp::BracketBy(chosen_a))?, // y ↦ [y,a]
        ConstructionMode::Square => ring.orbit_map(OrbitOp::LeftMulBy(chosen_a))?,     // y ↦ a·y
    };
    let mut rep_of = std::collections::BTreeMap::new();
    for (y, &v) in amap.iter().enumerate() {
        rep_of.entry(v).or_insert(y as u64);
    }
    let orbit_a: Vec<u64> = rep_of.keys().copied().collect();
    let b_list: Vec<u64> = rep_of.values().copied().collect();
    log.check(
        "representatives_realize_orbit",
        b_list.len() as u64 == n,
        format!("|orbit(a)| = {}, reps = {}", orbit_a.len(), b_list.len()),
    );
    // For brackets: [bᵢ,a] values are the negatives of the y ↦ [y,a]
    // sweep… they are the same set: [b,a] = −[a,b] and the orbit is a
    // subgroup, closed under negation. Assert that directly.
    let orbit_set = IdSet::from_sorted(n_card, &orbit_a);
    log.check(
        "orbit_is_negation_closed_subgroup",
        orbit_a
            .iter()
            .all(|&v| orbit_set.contains(ring.shape().neg_id(v))),
        format!("|orbit| = {}", orbit_a.len()),
    );

    // C: joint stabilizer of the representatives.
    let c = match mode {
        ConstructionMode::Commutator => centralizer(ring, &b_list)?,
        ConstructionMode::Square => left_annihilator(ring, &b_list)?,
    };

    // Containments: for every x ∈ C, orbit(a+x) = orbit(a) and
    // orbit(x) ⊆ orbit(a).
    let mut containment_ok = true;
    let mut witness = String::new();
    for &x in &c.members {
        let ax = ring.shape().add_ids(chosen_a, x);
        let ax_orbit = orbit_members(ring, mode, ax)?;
        if ax_orbit != orbit_a {
            containment_ok = false;
            witness = format!("x = {x}: orbit(a+x) differs from orbit(a)");
            break;
        }
        let x_orbit = orbit_members(ring, mode, x)?;
        if x_orbit.iter().any(|&v| !orbit_set.contains(v)) {
            containment_ok = false;
            witness = format!("x = {x}: orbit(x) escapes orbit(a)");
            break;
        }
    }
    log.check("stabilizer_orbit_containments", containment_ok, witness);

    // Transversal of C with a₀ = a in front.
    let reps = transversal(ring, &c)?;
    let s = index(ring, &c);
    log.check(
        "transversal_size_is_index",
        reps.len() as u64 == s,
        format!("s = {s}"),
    );
    let n_to_n = BigInt::from(n).pow(u32::try_from(n.min(4096)).expect("n fits u32"));
    log.check(
        "index_s_at_most_n_to_the_n",
        BigInt::from(s) <= n_to_n.clone(),
        format!("s = {s}, n^n = {n_to_n}"),
    );
    let mut all_reps = Vec::with_capacity(reps.len() + 1);
    all_reps.push(chosen_a);
    all_reps.extend(reps);

    // span([L,L]) ⊆ span(∪ orbit(aᵢ)) and the product bound.
    let mut union = Vec::new();
    let mut product_bound = BigInt::from(1u64);
    for &rep in &all_reps {
        let o = orbit_members(ring, mode, rep)?;
        product_bound *= BigInt::from(o.len() as u64);
        union.extend(o);
    }
    union.sort_unstable();
    union.dedup();
    let union_span = additive_span_of_ids(ring, &union)?;

    // Full commutator/square set over the whole ring.
    let mut full = IdSet::new(n_card);
    for x in 0..n_card {
        for &v in &ring.orbit_map(orbit_op(mode, x))? {
            full.insert(v);
        }
    }
    let full_sorted = full.to_sorted_vec();
    let full_span = additive_span_of_ids(ring, &full_sorted)?;
    log.check(
        "full_span_inside_transversal_orbit_span",
        full_span.members.iter().all(|&m| union_span.contains(m)),
        format!(
            "|span(full)| = {}, |span(union)| = {}",
            full_span.order(),
            union_span.order()
        ),
    );
    log.check(
        "span_order_at_most_product_bound",
        BigInt::from(full_span.order()) <= product_bound.clone(),
        format!("|span| = {} vs product {}", full_span.order(), product_bound),
    );

    let valid = log.all_pass();
    Ok(ConstructionReport {
        schema_version: 1,
        ring_name: ring.name().to_string(),
        ring_hash: ring.content_hash().to_string(),
        mode,
        n,
        chosen_a,
        b_list,
        c,
        transversal_reps: all_reps,
        s,
        commutator_set_size: full_sorted.len() as u64,
        span_order: full_span.order(),
        product_bound: product_bound.to_string(),
        assertion_log: log,
        valid,
    })
}

/// Certifies that `[L,L]` has order controlled by the maximal centralizer
/// index. Works on Lie rings and on associative rings via their bracket.
pub fn bounded_commutator_construction(ring: &FiniteRing) -> Result<ConstructionReport> {
    construction(ring, ConstructionMode::Commutator)
}

/// Mirror construction for R² with orbits aR and the joint stabilizer
/// {x : x·bᵢ = 0}.
pub fn bounded_square_construction(ring: &FiniteRing) -> Result<ConstructionReport> {
    construction(ring, ConstructionMode::Square)
}
