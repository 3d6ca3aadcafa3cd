//! Additive subgroups, centralizers, annihilators, orbit sets, ideal
//! closures, indices and transversals — the sub-structure toolkit every
//! construction in this crate is built from.
//!
//! Subgroups and sets are explicit sorted id lists (rings here are small;
//! exactness and simplicity beat clever normal forms at ≤ 4096 elements).
//! Every operation is a pure function of immutable inputs and returns
//! order-normalized members, so results are deterministic.

use crate::error::{Result, RingError};
use crate::ring::{Element, FiniteRing, Flavor, OrbitOp};
use serde::{Deserialize, Serialize};

/// A plain subset of ring elements; no closure required.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementSet {
    /// Name of the ambient ring.
    pub ring: String,
    /// Content hash of the ring table, guarding against cross-ring use.
    pub ring_hash: String,
    /// Sorted, deduplicated element ids.
    pub members: Vec<u64>,
}

impl ElementSet {
    pub fn from_ids(ring: &FiniteRing, ids: impl IntoIterator<Item = u64>) -> ElementSet {
        let mut members: Vec<u64> = ids.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&last) = members.last() {
            assert!(last < ring.cardinality(), "element id out of range");
        }
        ElementSet {
            ring: ring.name().to_string(),
            ring_hash: ring.content_hash().to_string(),
            members,
        }
    }

    pub fn from_elements<'a>(
        ring: &FiniteRing,
        elems: impl IntoIterator<Item = &'a Element>,
    ) -> ElementSet {
        Self::from_ids(ring, elems.into_iter().map(|e| e.id()))
    }

    pub fn len(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, id: u64) -> bool {
        self.members.binary_search(&id).is_ok()
    }

    pub fn check_ring(&self, ring: &FiniteRing) -> Result<()> {
        if self.ring_hash != ring.content_hash() {
            return Err(RingError::RingMismatch {
                expected: self.ring_hash.clone(),
                actual: ring.content_hash().to_string(),
            });
        }
        Ok(())
    }
}

/// An additive subgroup with its recorded generators.
///
/// Invariants: 0 is a member, members are closed under + and −, every
/// generator is a member, |members| divides the ring cardinality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdditiveSubgroup {
    /// Name of the ambient ring.
    pub ring: String,
    /// Content hash of the ring table, guarding against cross-ring use.
    pub ring_hash: String,
    /// Sorted member ids; always contains 0.
    pub members: Vec<u64>,
    /// Generator ids recorded at construction.
    pub generators: Vec<u64>,
}

impl AdditiveSubgroup {
    /// Stamps a member list with the ring's identity. The members must
    /// already be a subgroup (sorted, 0-containing, addition-closed);
    /// use `additive_span*` to build one from an arbitrary seed.
    pub fn from_members(ring: &FiniteRing, members: Vec<u64>, generators: Vec<u64>) -> Self {
        debug_assert!(members.first() == Some(&0));
        AdditiveSubgroup {
            ring: ring.name().to_string(),
            ring_hash: ring.content_hash().to_string(),
            members,
            generators,
        }
    }
    pub fn order(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn contains(&self, id: u64) -> bool {
        self.members.binary_search(&id).is_ok()
    }

    pub fn is_whole_ring(&self, ring: &FiniteRing) -> bool {
        self.order() == ring.cardinality()
    }

    pub fn check_ring(&self, ring: &FiniteRing) -> Result<()> {
        if self.ring_hash != ring.content_hash() {
            return Err(RingError::RingMismatch {
                expected: self.ring_hash.clone(),
                actual: ring.content_hash().to_string(),
            });
        }
        Ok(())
    }

    pub fn as_element_set(&self) -> ElementSet {
        ElementSet {
            ring: self.ring.clone(),
            ring_hash: self.ring_hash.clone(),
            members: self.members.clone(),
        }
    }
}

/// Dense bitset over element ids; the internal workhorse for member sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct IdSet {
    words: Vec<u64>,
    count: usize,
}

impl IdSet {
    pub fn new(cardinality: u64) -> IdSet {
        IdSet {
            words: vec![0u64; (cardinality as usize).div_ceil(64)],
            count: 0,
        }
    }

    pub fn insert(&mut self, id: u64) -> bool {
        let (w, b) = ((id / 64) as usize, id % 64);
        let mask = 1u64 << b;
        if self.words[w] & mask == 0 {
            self.words[w] |= mask;
            self.count += 1;
            true
        } else {
            false
        }
    }

    pub fn contains(&self, id: u64) -> bool {
        let (w, b) = ((id / 64) as usize, id % 64);
        self.words[w] & (1u64 << b) != 0
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn iter_ids(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            (0..64)
                .filter(move |b| word & (1u64 << b) != 0)
                .map(move |b| (w as u64) * 64 + b)
        })
    }

    pub fn to_sorted_vec(&self) -> Vec<u64> {
        self.iter_ids().collect()
    }

    pub fn intersect_with(&mut self, other: &IdSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        self.count = self.words.iter().map(|w| w.count_ones() as usize).sum();
    }

    pub fn from_sorted(cardinality: u64, ids: &[u64]) -> IdSet {
        let mut s = IdSet::new(cardinality);
        for &id in ids {
            s.insert(id);
        }
        s
    }
}

/// Closes a set of ids under addition (finite abelian, so negation comes
/// for free). Returns the members as a bitset.
pub(crate) fn span_ids(shape: &crate::ring::GroupShape, seed: &[u64]) -> IdSet {
    let mut set = IdSet::new(shape.cardinality());
    set.insert(0);
    for &g in seed {
        if set.contains(g) {
            continue;
        }
        // Extend by the cyclic group of g: new span = ∪_j (old + j·g).
        let base = set.to_sorted_vec();
        let mut jg = g;
        while !set.contains(jg) {
            for &m in &base {
                set.insert(shape.add_ids(m, jg));
            }
            jg = shape.add_ids(jg, g);
        }
    }
    set
}

fn subgroup_from_idset(ring: &FiniteRing, set: &IdSet, generators: Vec<u64>) -> AdditiveSubgroup {
    AdditiveSubgroup::from_members(ring, set.to_sorted_vec(), generators)
}

/// Smallest additive subgroup containing the seed; generators := seed.
pub fn additive_span(ring: &FiniteRing, seed: &ElementSet) -> Result<AdditiveSubgroup> {
    seed.check_ring(ring)?;
    ring.check_enum_cap()?;
    let set = span_ids(ring.shape(), &seed.members);
    Ok(subgroup_from_idset(ring, &set, seed.members.clone()))
}

pub fn additive_span_of_ids(ring: &FiniteRing, seed: &[u64]) -> Result<AdditiveSubgroup> {
    ring.check_enum_cap()?;
    let set = span_ids(ring.shape(), seed);
    let mut gens = seed.to_vec();
    gens.sort_unstable();
    gens.dedup();
    Ok(subgroup_from_idset(ring, &set, gens))
}

/// Index of the subgroup in the additive group: |R| / |A|.
pub fn index(ring: &FiniteRing, sub: &AdditiveSubgroup) -> u64 {
    ring.cardinality() / sub.order()
}

/// Kernel of the additive map given by `op`, as a bitset.
fn kernel_idset(ring: &FiniteRing, op: OrbitOp) -> Result<IdSet> {
    let map = ring.orbit_map(op)?;
    let mut set = IdSet::new(ring.cardinality());
    for (y, &img) in map.iter().enumerate() {
        if img == 0 {
            set.insert(y as u64);
        }
    }
    Ok(set)
}

fn intersect_kernels(ring: &FiniteRing, ops: impl Iterator<Item = OrbitOp>) -> Result<IdSet> {
    ring.check_enum_cap()?;
    let mut acc: Option<IdSet> = None;
    for op in ops {
        let ker = kernel_idset(ring, op)?;
        match &mut acc {
            None => acc = Some(ker),
            Some(a) => a.intersect_with(&ker),
        }
    }
    Ok(acc.unwrap_or_else(|| {
        // Empty constraint set: the whole ring.
        let mut all = IdSet::new(ring.cardinality());
        for id in 0..ring.cardinality() {
            all.insert(id);
        }
        all
    }))
}

/// C(S) = {y : `[s,y]` = 0 for all s ∈ S}. Any flavor.
pub fn centralizer(ring: &FiniteRing, constraint_ids: &[u64]) -> Result<AdditiveSubgroup> {
    // [s,y] = 0 ⇔ [y,s] = 0 by antisymmetry, so the y ↦ [y,s] kernels work.
    let set = intersect_kernels(
        ring,
        constraint_ids.iter().map(|&s| OrbitOp::BracketBy(s)),
    )?;
    Ok(subgroup_from_idset(ring, &set, vec![]))
}

pub fn centralizer_of_set(ring: &FiniteRing, s: &ElementSet) -> Result<AdditiveSubgroup> {
    s.check_ring(ring)?;
    centralizer(ring, &s.members)
}

fn require_associative(ring: &FiniteRing) -> Result<()> {
    if ring.flavor() != Flavor::Associative {
        return Err(RingError::FlavorMismatch {
            expected: "associative",
            actual: ring.flavor().name(),
        });
    }
    Ok(())
}

/// Ann(S) = {y : s·y = 0 for all s ∈ S} (right annihilator).
pub fn right_annihilator(ring: &FiniteRing, constraint_ids: &[u64]) -> Result<AdditiveSubgroup> {
    require_associative(ring)?;
    let set = intersect_kernels(
        ring,
        constraint_ids.iter().map(|&s| OrbitOp::LeftMulBy(s)),
    )?;
    Ok(subgroup_from_idset(ring, &set, vec![]))
}

/// {y : y·s = 0 for all s ∈ S} (left annihilator).
pub fn left_annihilator(ring: &FiniteRing, constraint_ids: &[u64]) -> Result<AdditiveSubgroup> {
    require_associative(ring)?;
    let set = intersect_kernels(
        ring,
        constraint_ids.iter().map(|&s| OrbitOp::RightMulBy(s)),
    )?;
    Ok(subgroup_from_idset(ring, &set, vec![]))
}

/// `[L,a]` = {`[y,a]` : y ∈ L}. The image of an additive map, so it is in
/// fact a subgroup; exposed as a set because the constructions treat it
/// as one.
pub fn commutator_set(ring: &FiniteRing, a: u64) -> Result<ElementSet> {
    let map = ring.orbit_map(OrbitOp::BracketBy(a))?;
    Ok(ElementSet::from_ids(ring, map))
}

/// aR = {a·y : y ∈ R}.
pub fn right_multiples(ring: &FiniteRing, a: u64) -> Result<ElementSet> {
    require_associative(ring)?;
    let map = ring.orbit_map(OrbitOp::LeftMulBy(a))?;
    Ok(ElementSet::from_ids(ring, map))
}

/// Ra = {y·a : y ∈ R}.
pub fn left_multiples(ring: &FiniteRing, a: u64) -> Result<ElementSet> {
    require_associative(ring)?;
    let map = ring.orbit_map(OrbitOp::RightMulBy(a))?;
    Ok(ElementSet::from_ids(ring, map))
}

/// {a·b : a ∈ A, b ∈ B} as a set of products.
pub fn product_set(ring: &FiniteRing, a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
    require_associative(ring)?;
    a.check_ring(ring)?;
    b.check_ring(ring)?;
    ring.check_enum_cap()?;
    let mut out = IdSet::new(ring.cardinality());
    for &x in &a.members {
        // One additive map per left factor keeps this O(|A|·|R|·k).
        let map = ring.orbit_map(OrbitOp::LeftMulBy(x))?;
        for &y in &b.members {
            out.insert(map[y as usize]);
        }
    }
    Ok(ElementSet::from_ids(ring, out.to_sorted_vec()))
}

/// {`[a,b]` : a ∈ A, b ∈ B}. Any flavor.
pub fn bracket_set(ring: &FiniteRing, a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
    a.check_ring(ring)?;
    b.check_ring(ring)?;
    ring.check_enum_cap()?;
    let mut out = IdSet::new(ring.cardinality());
    for &y in &b.members {
        let map = ring.orbit_map(OrbitOp::BracketBy(y))?;
        for &x in &a.members {
            out.insert(map[x as usize]);
        }
    }
    Ok(ElementSet::from_ids(ring, out.to_sorted_vec()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    Left,
    Right,
    TwoSided,
    Lie,
}

impl IdealKind {
    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Left => "left",
            IdealKind::Right => "right",
            IdealKind::TwoSided => "two_sided",
            IdealKind::Lie => "lie",
        }
    }

    /// Maps whose images are the products the ideal kind must absorb:
    /// R·b = im(y ↦ y·b) for left ideals, b·R = im(y ↦ b·y) for right.
    fn orbit_ops(self, b: u64) -> Vec<OrbitOp> {
        match self {
            IdealKind::Left => vec![OrbitOp::RightMulBy(b)],
            IdealKind::Right => vec![OrbitOp::LeftMulBy(b)],
            IdealKind::TwoSided => vec![OrbitOp::RightMulBy(b), OrbitOp::LeftMulBy(b)],
            IdealKind::Lie => vec![OrbitOp::BracketBy(b)],
        }
    }
}

/// Result of an ideal-closure computation.
#[derive(Debug, Clone)]
pub struct IdealClosure {
    pub subgroup: AdditiveSubgroup,
    /// The witnesses b_1..b_s: D = B + Σ span(orbit(b_i)), recorded in the
    /// deterministic least-id scan order in which they were used.
    pub witnesses: Vec<u64>,
    /// For one-sided closures with bookkeeping: derivation of each member
    /// id as (base element of B, per-witness multiplier a_i), meaning
    /// y = b + Σ a_i·b_i (left) or y = b + Σ b_i·a_i (right).
    pub derivations: Option<Vec<Derivation>>,
}

/// y = base + Σ `coeffs[i].0` · `witness[coeffs[i].1]` (multiplication on the
/// closure's side).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub member: u64,
    pub base: u64,
    /// (multiplier id a, witness position i).
    pub coeffs: Vec<(u64, usize)>,
}

/// Smallest ideal of the given kind containing the seed subgroup, by
/// fixed-point iteration: scan members in least-id order, and whenever a
/// member's orbit (R·b, b·R, both, or `[L,b]`) escapes the current subgroup,
/// record b as a witness and extend by the orbit's span. The final pass
/// certifies that every member's orbit stays inside, i.e. the result is an
/// ideal by direct check.
pub fn closure_ideal(
    ring: &FiniteRing,
    seed: &AdditiveSubgroup,
    kind: IdealKind,
    with_derivations: bool,
) -> Result<IdealClosure> {
    seed.check_ring(ring)?;
    ring.check_enum_cap()?;
    if kind != IdealKind::Lie {
        require_associative(ring)?;
    }
    let shape = ring.shape();
    let mut set = IdSet::from_sorted(ring.cardinality(), &seed.members);
    let mut witnesses: Vec<u64> = Vec::new();

    // Derivation bookkeeping (one-sided closures only).
    let track = with_derivations && matches!(kind, IdealKind::Left | IdealKind::Right);
    let mut deriv: Vec<Option<Derivation>> = if track {
        let mut v = vec![None; ring.cardinality() as usize];
        for &m in &seed.members {
            v[m as usize] = Some(Derivation {
                member: m,
                base: m,
                coeffs: vec![],
            });
        }
        v
    } else {
        Vec::new()
    };

    let combine = |a: &Derivation, b: &Derivation, member: u64, shape: &crate::ring::GroupShape| {
        let mut coeffs = a.coeffs.clone();
        for &(mult, w) in &b.coeffs {
            match coeffs.iter_mut().find(|(_, wi)| *wi == w) {
                Some((m0, _)) => *m0 = shape.add_ids(*m0, mult),
                None => coeffs.push((mult, w)),
            }
        }
        coeffs.sort_by_key(|&(_, w)| w);
        Derivation {
            member,
            base: shape.add_ids(a.base, b.base),
            coeffs,
        }
    };

    loop {
        let mut grew = false;
        let snapshot = set.to_sorted_vec();
        for &b in &snapshot {
            let ops = kind.orbit_ops(b);
            let mut escape = false;
            let mut orbit_maps = Vec::new();
            for op in ops {
                let map = ring.orbit_map(op)?;
                if map.iter().any(|&v| !set.contains(v)) {
                    escape = true;
                }
                orbit_maps.push((op, map));
            }
            if !escape {
                continue;
            }
            grew = true;
            let widx = witnesses.len();
            witnesses.push(b);

            // Orbit members with a derivation each: value = r·b (or b·r).
            let mut orbit_elems: Vec<(u64, u64)> = Vec::new(); // (value, multiplier r)
            let mut seen = IdSet::new(ring.cardinality());
            for (_, map) in &orbit_maps {
                for (r, &v) in map.iter().enumerate() {
                    if seen.insert(v) {
                        orbit_elems.push((v, r as u64));
                    }
                }
            }
            // Extend the subgroup by the span of the orbit, coset by coset.
            // (For two-sided/Lie closures the orbit union may not itself be
            // a subgroup; spanning handles that uniformly.)
            for &(v, r) in &orbit_elems {
                if set.contains(v) {
                    continue;
                }
                let base_members = set.to_sorted_vec();
                let mut jv = v;
                let mut j: u64 = 1;
                while !set.contains(jv) {
                    // j·(r·b) = (j·r)·b, so a scalar multiple of an orbit
                    // element keeps a one-term derivation.
                    let jv_deriv = track.then(|| Derivation {
                        member: jv,
                        base: 0,
                        coeffs: vec![(shape.smul_id(j, r), widx)],
                    });
                    for &m in &base_members {
                        let nm = shape.add_ids(m, jv);
                        if set.insert(nm) && track {
                            let dm = deriv[m as usize]
                                .clone()
                                .expect("member derivation present");
                            let dj = jv_deriv.clone().expect("track implies derivation");
                            deriv[nm as usize] = Some(combine(&dm, &dj, nm, shape));
                        }
                    }
                    jv = shape.add_ids(jv, v);
                    j += 1;
                }
            }
        }
        if !grew {
            break;
        }
    }

    let members = set.to_sorted_vec();
    let derivations = track.then(|| {
        members
            .iter()
            .map(|&m| deriv[m as usize].clone().expect("closed member derived"))
            .collect()
    });
    Ok(IdealClosure {
        subgroup: AdditiveSubgroup::from_members(ring, members, seed.generators.clone()),
        witnesses,
        derivations,
    })
}

/// Outcome of an ideal check: holds, or a counterexample pair (r, a) with
/// a in the subgroup and the product on the failing side outside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealCheck {
    pub ok: bool,
    pub counterexample: Option<(u64, u64)>,
}

/// Checks closure of the subgroup under the multiplications of `kind`.
/// Scans basis multipliers only (sufficient by bilinearity) but reports
/// the counterexample as full element ids.
pub fn is_ideal(ring: &FiniteRing, sub: &AdditiveSubgroup, kind: IdealKind) -> Result<IdealCheck> {
    sub.check_ring(ring)?;
    if kind != IdealKind::Lie {
        require_associative(ring)?;
    }
    for i in 0..ring.rank() {
        let e = ring.basis_id(i);
        for &a in &sub.members {
            let products: Vec<u64> = match kind {
                IdealKind::Left => vec![ring.mul_id(e, a)],
                IdealKind::Right => vec![ring.mul_id(a, e)],
                IdealKind::TwoSided => vec![ring.mul_id(e, a), ring.mul_id(a, e)],
                IdealKind::Lie => vec![ring.bracket_id(e, a)],
            };
            if products.iter().any(|&p| !sub.contains(p)) {
                return Ok(IdealCheck {
                    ok: false,
                    counterexample: Some((e, a)),
                });
            }
        }
    }
    Ok(IdealCheck {
        ok: true,
        counterexample: None,
    })
}

/// Coset representatives of the subgroup, one per coset, each the least id
/// in its coset; the first is 0. |result| = index.
pub fn transversal(ring: &FiniteRing, sub: &AdditiveSubgroup) -> Result<Vec<u64>> {
    sub.check_ring(ring)?;
    ring.check_enum_cap()?;
    let shape = ring.shape();
    let mut claimed = IdSet::new(ring.cardinality());
    let mut reps = Vec::new();
    for id in 0..ring.cardinality() {
        if claimed.contains(id) {
            continue;
        }
        reps.push(id);
        for &m in &sub.members {
            claimed.insert(shape.add_ids(id, m));
        }
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::GroupShape;

    fn z(n: u64) -> FiniteRing {
        let shape = GroupShape::new(vec![n]).unwrap();
        FiniteRing::new(format!("Z{n}"), shape, vec![vec![1]], Flavor::Associative).unwrap()
    }

    fn mat2() -> FiniteRing {
        let shape = GroupShape::new(vec![2, 2, 2, 2]).unwrap();
        let e = |i: usize| 1u64 << i;
        let mut table = vec![vec![0u64; 4]; 4];
        for a in 0..2usize {
            for b in 0..2usize {
                for c in 0..2usize {
                    for d in 0..2usize {
                        if b == c {
                            table[2 * a + b][2 * c + d] = e(2 * a + d);
                        }
                    }
                }
            }
        }
        FiniteRing::new("M2(Z2)", shape, table, Flavor::Associative).unwrap()
    }

    #[test]
    fn span_examples() {
        let r = z(4);
        let s = additive_span(&r, &ElementSet::from_ids(&r, [2])).unwrap();
        assert_eq!(s.members, vec![0, 2]);
        assert_eq!(index(&r, &s), 2);

        let empty = additive_span(&r, &ElementSet::from_ids(&r, [])).unwrap();
        assert_eq!(empty.members, vec![0]);
        assert_eq!(index(&r, &empty), 4);

        let shape = GroupShape::new(vec![2, 2]).unwrap();
        let k4 = FiniteRing::new("k4", shape, vec![vec![0, 0], vec![0, 0]], Flavor::Associative)
            .unwrap();
        let whole = additive_span(&k4, &ElementSet::from_ids(&k4, [1, 2])).unwrap();
        assert_eq!(whole.order(), 4);
        assert_eq!(index(&k4, &whole), 1);

        // Trivial subgroup of an order-16 ring has index 16.
        let m = mat2();
        let trivial = additive_span_of_ids(&m, &[]).unwrap();
        assert_eq!(index(&m, &trivial), 16);
    }

    #[test]
    fn lagrange_holds_for_spans() {
        let r = z(12);
        for g in 0..12 {
            let s = additive_span_of_ids(&r, &[g]).unwrap();
            assert_eq!(12 % s.order(), 0);
            assert!(s.contains(0));
        }
    }

    #[test]
    fn centralizer_in_commutative_ring_is_everything() {
        let r = z(6);
        let c = centralizer(&r, &[1, 2, 3]).unwrap();
        assert_eq!(c.order(), 6);
        let c_empty = centralizer(&r, &[]).unwrap();
        assert_eq!(c_empty.order(), 6);
    }

    #[test]
    fn centralizer_of_e11_in_mat2_is_the_diagonal() {
        let r = mat2();
        let e11 = r.basis_id(0);
        let c = centralizer(&r, &[e11]).unwrap();
        // Oracle: enumerate all 16 elements against E11 directly.
        let expect: Vec<u64> = (0..16)
            .filter(|&y| r.bracket_id(y, e11) == 0)
            .collect();
        assert_eq!(c.members, expect);
        assert_eq!(c.order(), 4);
        // Diagonal matrices: 0, E11, E22, E11+E22.
        assert_eq!(c.members, vec![0, 1, 8, 9]);
    }

    #[test]
    fn annihilators_in_z6_and_zero_ring() {
        let r = z(6);
        let ann2 = right_annihilator(&r, &[2]).unwrap();
        assert_eq!(ann2.members, vec![0, 3]);
        let ann0 = right_annihilator(&r, &[0]).unwrap();
        assert_eq!(ann0.order(), 6);

        let shape = GroupShape::new(vec![2, 2]).unwrap();
        let zr = FiniteRing::new("zero4", shape, vec![vec![0, 0], vec![0, 0]], Flavor::Associative)
            .unwrap();
        for x in 0..4 {
            assert_eq!(right_annihilator(&zr, &[x]).unwrap().order(), 4);
        }
    }

    #[test]
    fn left_annihilator_matches_right_on_opposite() {
        let r = mat2();
        let op = r.opposite_ring().unwrap();
        for s in [1u64, 2, 5, 7] {
            let left = left_annihilator(&r, &[s]).unwrap();
            let right_op = right_annihilator(&op, &[s]).unwrap();
            assert_eq!(left.members, right_op.members);
        }
    }

    #[test]
    fn orbit_sizes_multiply_to_cardinality() {
        let r = mat2();
        for a in 0..16 {
            let orbit = commutator_set(&r, a).unwrap();
            let cent = centralizer(&r, &[a]).unwrap();
            assert_eq!(orbit.len() * cent.order(), 16);
            let mult = right_multiples(&r, a).unwrap();
            let ann = right_annihilator(&r, &[a]).unwrap();
            assert_eq!(mult.len() * ann.order(), 16);
        }
    }

    #[test]
    fn commutator_set_examples() {
        let r = mat2();
        let e12 = r.basis_id(1);
        let set = commutator_set(&r, e12).unwrap();
        assert_eq!(set.len(), 4);
        // Central element in Z6: orbit is {0}.
        let zr = z(6);
        assert_eq!(commutator_set(&zr, 4).unwrap().members, vec![0]);
    }

    #[test]
    fn right_multiples_examples() {
        let r = z(6);
        assert_eq!(right_multiples(&r, 2).unwrap().members, vec![0, 2, 4]);
        assert_eq!(right_multiples(&r, 0).unwrap().members, vec![0]);
        // Zero ring: aR = {0} for every a.
        let shape = GroupShape::new(vec![2, 2]).unwrap();
        let zr = FiniteRing::new("z", shape, vec![vec![0, 0], vec![0, 0]], Flavor::Associative)
            .unwrap();
        for a in 0..4 {
            assert_eq!(right_multiples(&zr, a).unwrap().members, vec![0]);
        }
    }

    #[test]
    fn left_and_right_multiples_differ_on_noncommutative_rings() {
        let r = mat2();
        let e11 = r.basis_id(0);
        // E11·R = first-row matrices; R·E11 = first-column matrices.
        assert_eq!(right_multiples(&r, e11).unwrap().members, vec![0, 1, 2, 3]);
        assert_eq!(left_multiples(&r, e11).unwrap().members, vec![0, 1, 4, 5]);
    }

    #[test]
    fn product_set_on_z4_is_everything() {
        let r = z(4);
        let all = ElementSet::from_ids(&r, 0..4);
        let p = product_set(&r, &all, &all).unwrap();
        assert_eq!(p.members, vec![0, 1, 2, 3]);
    }

    #[test]
    fn closure_of_e11_span_is_the_column_ideal() {
        let r = mat2();
        let seed = additive_span_of_ids(&r, &[r.basis_id(0)]).unwrap();
        let closed = closure_ideal(&r, &seed, IdealKind::Left, false).unwrap();
        // Left ideal generated by E11 = first-column matrices
        // {0, E11, E21, E11+E21}.
        assert_eq!(closed.subgroup.members, vec![0, 1, 4, 5]);
        assert!(is_ideal(&r, &closed.subgroup, IdealKind::Left).unwrap().ok);
        assert_eq!(closed.witnesses, vec![1]);
    }

    #[test]
    fn closure_is_idempotent_and_monotone() {
        let r = mat2();
        let seed = additive_span_of_ids(&r, &[r.basis_id(1)]).unwrap();
        let once = closure_ideal(&r, &seed, IdealKind::TwoSided, false).unwrap();
        let twice = closure_ideal(&r, &once.subgroup, IdealKind::TwoSided, false).unwrap();
        assert_eq!(once.subgroup.members, twice.subgroup.members);
        assert!(twice.witnesses.is_empty());
        for &m in &seed.members {
            assert!(once.subgroup.contains(m));
        }
    }

    #[test]
    fn is_ideal_counterexample_matches_spec_example() {
        let r = mat2();
        let sub = additive_span_of_ids(&r, &[r.basis_id(0)]).unwrap();
        let check = is_ideal(&r, &sub, IdealKind::Left).unwrap();
        assert!(!check.ok);
        // E21·E11 = E21 escapes span{E11}.
        assert_eq!(check.counterexample, Some((r.basis_id(2), r.basis_id(0))));

        let zr = z(4);
        let ideal = additive_span_of_ids(&zr, &[2]).unwrap();
        assert!(is_ideal(&zr, &ideal, IdealKind::TwoSided).unwrap().ok);
        let trivial = additive_span_of_ids(&zr, &[]).unwrap();
        assert!(is_ideal(&zr, &trivial, IdealKind::TwoSided).unwrap().ok);
    }

    #[test]
    fn transversal_reps_are_least_and_partition() {
        let r = z(4);
        let sub = additive_span_of_ids(&r, &[2]).unwrap();
        let reps = transversal(&r, &sub).unwrap();
        assert_eq!(reps, vec![0, 1]);

        let whole = additive_span_of_ids(&r, &[1]).unwrap();
        assert_eq!(transversal(&r, &whole).unwrap(), vec![0]);

        // |transversal| = index; cosets partition.
        let m = mat2();
        let sub = additive_span_of_ids(&m, &[1, 2]).unwrap();
        let reps = transversal(&m, &sub).unwrap();
        assert_eq!(reps.len() as u64, index(&m, &sub));
        let shape = m.shape();
        let mut covered: Vec<u64> = reps
            .iter()
            .flat_map(|&t| sub.members.iter().map(move |&s| shape.add_ids(t, s)))
            .collect();
        covered.sort_unstable();
        assert_eq!(covered, (0..16).collect::<Vec<_>>());
    }

    #[test]
    fn commutator_set_of_neg_is_neg_of_set() {
        let r = mat2();
        for a in 0..16 {
            let s1 = commutator_set(&r, a).unwrap();
            let s2 = commutator_set(&r, r.shape().neg_id(a)).unwrap();
            let negged: ElementSet = ElementSet::from_ids(
                &r,
                s1.members.iter().map(|&m| r.shape().neg_id(m)),
            );
            assert_eq!(negged.members, s2.members);
        }
    }

    #[test]
    fn derivations_reconstruct_members() {
        // Left-ideal closure in M2(Z2) starting from span{E12}: every member
        // must decompose as b + Σ a_i·b_i with b in the seed span.
        let r = mat2();
        let seed = additive_span_of_ids(&r, &[r.basis_id(1)]).unwrap();
        let closed = closure_ideal(&r, &seed, IdealKind::Left, true).unwrap();
        let derivs = closed.derivations.as_ref().unwrap();
        assert_eq!(derivs.len(), closed.subgroup.members.len());
        for d in derivs {
            assert!(seed.contains(d.base), "base {} outside seed", d.base);
            let mut acc = d.base;
            for &(a, w) in &d.coeffs {
                let b = closed.witnesses[w];
                acc = r.shape().add_ids(acc, r.mul_id(a, b));
            }
            assert_eq!(acc, d.member);
        }
    }

    #[test]
    fn right_closure_derivations_multiply_on_the_right() {
        // Right-ideal closure of span{E21} in M2(Z2): members decompose
        // as b + Σ b_i·a_i with multiplication on the right.
        let r = mat2();
        let seed = additive_span_of_ids(&r, &[r.basis_id(2)]).unwrap();
        let closed = closure_ideal(&r, &seed, IdealKind::Right, true).unwrap();
        // E21·R = bottom-row matrices {0, E21, E22, E21+E22}.
        assert_eq!(closed.subgroup.members, vec![0, 4, 8, 12]);
        assert!(is_ideal(&r, &closed.subgroup, IdealKind::Right).unwrap().ok);
        for d in closed.derivations.as_ref().unwrap() {
            assert!(seed.contains(d.base));
            let mut acc = d.base;
            for &(a, w) in &d.coeffs {
                let b = closed.witnesses[w];
                acc = r.shape().add_ids(acc, r.mul_id(b, a));
            }
            assert_eq!(acc, d.member, "member {} misderived", d.member);
        }
    }

    #[test]
    fn ring_mismatch_is_detected() {
        let r1 = z(4);
        let r2 = z(6);
        let s = ElementSet::from_ids(&r1, [1]);
        assert!(matches!(
            additive_span(&r2, &s),
            Err(RingError::RingMismatch { .. })
        ));
    }

    #[test]
    fn cap_exceeded_beyond_4096() {
        let shape = GroupShape::new(vec![8192]).unwrap();
        let big = FiniteRing::new("big", shape, vec![vec![0]], Flavor::Associative).unwrap();
        assert!(matches!(
            additive_span_of_ids(&big, &[1]),
            Err(RingError::CapExceeded { .. })
        ));
    }
}
