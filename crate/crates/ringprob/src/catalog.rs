//! Sources of test rings: parametric families, exhaustive small-shape
//! enumeration, and JSON file ingestion.
//!
//! Census counts are counts of validated structure-constant tables, NOT of
//! isomorphism classes — no isomorphism reduction is attempted anywhere.
//! Downstream checks are isomorphism-invariant (max/min of cp over a
//! census), so this is sound for what the crate asserts.

use crate::error::{IllFormed, Result, RingError};
use crate::ring::{make_ring_normalized, FiniteRing, Flavor, GroupShape};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::path::Path;

/// Largest admissible |R|^(k²) for a census; exactly admits the order-8
/// shape `[2,2,2]` (8^9 candidates).
pub const CENSUS_CANDIDATE_CAP: u64 = 134_217_728;

const SMALL_PRIMES: [u64; 11] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

/// Parametric ring families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    /// Z_n with the usual multiplication; n = 1 is the trivial ring.
    Cyclic(u64),
    /// All products zero on the fully split abelian group of order n
    /// (prime factorization with multiplicity, sorted: 4 → `[2,2]`).
    ZeroRing(u64),
    /// Full 2×2 matrix ring over Z_p, basis E11,E12,E21,E22, shape `[p,p,p,p]`.
    Matrix2(u64),
    /// Upper-triangular 2×2 matrices over Z_p, basis E11,E12,E22.
    UpperTriangular2(u64),
    /// Direct sum with componentwise multiplication.
    DirectSum(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn label(&self) -> String {
        match self {
            FamilySpec::Cyclic(n) => format!("Z{n}"),
            FamilySpec::ZeroRing(n) => format!("zero{n}"),
            FamilySpec::Matrix2(p) => format!("M2(Z{p})"),
            FamilySpec::UpperTriangular2(p) => format!("T2(Z{p})"),
            FamilySpec::DirectSum(a, b) => format!("sum({},{})", a.label(), b.label()),
        }
    }

    /// Parses "cyclic:6", "zero:8", "mat2:3", "tri2:2",
    /// "sum(zero:4,cyclic:2)" (sums nest).
    pub fn parse(s: &str) -> Result<FamilySpec> {
        fn bad(detail: String) -> RingError {
            RingError::IllFormed(IllFormed::BadArity { detail })
        }
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("sum(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| bad(format!("unterminated sum in {s:?}")))?;
            // Split at the top-level comma.
            let mut depth = 0usize;
            let mut split = None;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => depth = depth.saturating_sub(1),
                    ',' if depth == 0 => {
                        split = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let i = split.ok_or_else(|| bad(format!("sum needs two components in {s:?}")))?;
            let a = FamilySpec::parse(&inner[..i])?;
            let b = FamilySpec::parse(&inner[i + 1..])?;
            return Ok(FamilySpec::DirectSum(Box::new(a), Box::new(b)));
        }
        let (name, param) = s
            .split_once(':')
            .ok_or_else(|| bad(format!("family spec {s:?} is not name:param")))?;
        let n: u64 = param
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad family parameter {param:?}")))?;
        match name.trim() {
            "cyclic" => Ok(FamilySpec::Cyclic(n)),
            "zero" => Ok(FamilySpec::ZeroRing(n)),
            "mat2" => Ok(FamilySpec::Matrix2(n)),
            "tri2" => Ok(FamilySpec::UpperTriangular2(n)),
            other => Err(bad(format!("unknown family {other:?}"))),
        }
    }
}

fn check_order_param(n: u64) -> Result<()> {
    if n == 0 || n > 4096 {
        return Err(RingError::CapExceeded {
            what: "family order parameter",
            value: n,
            cap: 4096,
        });
    }
    Ok(())
}

fn check_prime_param(p: u64) -> Result<()> {
    if !SMALL_PRIMES.contains(&p) {
        return Err(RingError::IllFormed(IllFormed::BadOrders {
            detail: format!("matrix family parameter {p} must be a prime ≤ 31"),
        }));
    }
    Ok(())
}

/// Prime factorization with multiplicity, sorted ascending.
fn split_factors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        while m % d == 0 {
            out.push(d);
            m /= d;
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out.sort_unstable();
    out
}

/// Builds a validated ring from a family spec.
pub fn build_family(spec: &FamilySpec) -> Result<FiniteRing> {
    match spec {
        FamilySpec::Cyclic(n) => {
            check_order_param(*n)?;
            let (shape, table) = if *n == 1 {
                (GroupShape::new(vec![])?, vec![])
            } else {
                (GroupShape::new(vec![*n])?, vec![vec![1u64]])
            };
            FiniteRing::new(spec.label(), shape, table, Flavor::Associative)
        }
        FamilySpec::ZeroRing(n) => {
            check_order_param(*n)?;
            let orders = split_factors(*n);
            let k = orders.len();
            let shape = GroupShape::new(orders)?;
            FiniteRing::new(spec.label(), shape, vec![vec![0; k]; k], Flavor::Associative)
        }
        FamilySpec::Matrix2(p) => {
            check_prime_param(*p)?;
            let shape = GroupShape::new(vec![*p; 4])?;
            // Basis E11,E12,E21,E22 with E_{ab}E_{cd} = δ_{bc} E_{ad};
            // basis index of E_{ad} is 2(a−1)+(d−1) in 0-based form.
            let mut table = vec![vec![0u64; 4]; 4];
            for a in 0..2usize {
                for b in 0..2usize {
                    for c in 0..2usize {
                        for d in 0..2usize {
                            if b == c {
                                let target = 2 * a + d;
                                table[2 * a + b][2 * c + d] = p.pow(target as u32);
                            }
                        }
                    }
                }
            }
            FiniteRing::new(spec.label(), shape, table, Flavor::Associative)
        }
        FamilySpec::UpperTriangular2(p) => {
            check_prime_param(*p)?;
            let shape = GroupShape::new(vec![*p; 3])?;
            // Basis E11, E12, E22.
            let e = |i: u32| p.pow(i);
            let table = vec![
                vec![e(0), e(1), 0],
                vec![0, 0, e(1)],
                vec![0, 0, e(2)],
            ];
            FiniteRing::new(spec.label(), shape, table, Flavor::Associative)
        }
        FamilySpec::DirectSum(sa, sb) => {
            let a = build_family(sa)?;
            let b = build_family(sb)?;
            direct_sum(&a, &b, spec.label())
        }
    }
}

/// Componentwise direct sum of two associative rings, renormalized into
/// canonical coordinate order.
pub fn direct_sum(a: &FiniteRing, b: &FiniteRing, name: String) -> Result<FiniteRing> {
    if a.flavor() != b.flavor() {
        return Err(RingError::FlavorMismatch {
            expected: a.flavor().name(),
            actual: b.flavor().name(),
        });
    }
    let ka = a.rank();
    let kb = b.rank();
    let k = ka + kb;
    let mut orders: Vec<u64> = Vec::with_capacity(k);
    orders.extend_from_slice(a.shape().orders());
    orders.extend_from_slice(b.shape().orders());
    let mut table = vec![vec![vec![0u64; k]; k]; k];
    for i in 0..ka {
        for j in 0..ka {
            let coords = a.shape().decode(a.table()[i][j]);
            table[i][j][..ka].copy_from_slice(&coords);
        }
    }
    for i in 0..kb {
        for j in 0..kb {
            let coords = b.shape().decode(b.table()[i][j]);
            table[ka + i][ka + j][ka..].copy_from_slice(&coords);
        }
    }
    make_ring_normalized(name, &orders, &table, a.flavor())
}

/// One validated census member.
#[derive(Debug, Clone)]
pub struct CensusEntry {
    /// Mixed-radix index of the full table in the |R|^(k²) candidate
    /// space, row-major, first entry most significant.
    pub candidate_index: u64,
    pub ring: FiniteRing,
}

/// Exhaustively enumerates validated structure-constant tables over the
/// shape, in candidate-index order; deduplicated by table equality only
/// (every index is a distinct table). Partial associativity pruning keeps
/// the walk far below the raw candidate count.
pub fn enumerate_rings(shape: &GroupShape, flavor: Flavor) -> Result<Vec<CensusEntry>> {
    let k = shape.rank();
    let n = shape.cardinality();
    let entries = (k * k) as u32;
    match n.checked_pow(entries) {
        Some(c) if c <= CENSUS_CANDIDATE_CAP => {}
        c => {
            return Err(RingError::CapExceeded {
                what: "census candidate count",
                value: c.unwrap_or(u64::MAX),
                cap: CENSUS_CANDIDATE_CAP,
            })
        }
    }
    if k == 0 {
        let ring = FiniteRing::new(census_name(shape, 0), shape.clone(), vec![], flavor)?;
        return Ok(vec![CensusEntry {
            candidate_index: 0,
            ring,
        }]);
    }

    // Per-entry admissible values: well-definedness is entry-local.
    let admissible: Vec<Vec<Vec<u64>>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    (0..n)
                        .filter(|&t| {
                            shape.smul_id(shape.orders()[i], t) == 0
                                && shape.smul_id(shape.orders()[j], t) == 0
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    // Parallelize over the first table entry; each worker backtracks over
    // the rest. Collect preserves prefix order, so output stays sorted by
    // candidate index.
    // weight[pos] = n^(k²−1−pos): row-major, first entry most significant.
    let weight: Vec<u64> = (0..entries).map(|p| n.pow(entries - 1 - p)).collect();
    let first_choices = admissible[0][0].clone();
    let mut results: Vec<Vec<CensusEntry>> = Vec::new();
    first_choices
        .par_iter()
        .map(|&first| {
            let mut table = vec![vec![u64::MAX; k]; k];
            table[0][0] = first;
            let mut found = Vec::new();
            backtrack(
                shape,
                flavor,
                &admissible,
                &weight,
                &mut table,
                1,
                first * weight[0],
                &mut found,
            );
            found
        })
        .collect_into_vec(&mut results);
    Ok(results.into_iter().flatten().collect())
}

fn census_name(shape: &GroupShape, candidate_index: u64) -> String {
    let orders: Vec<String> = shape.orders().iter().map(|d| d.to_string()).collect();
    format!("census[{}]#{}", orders.join(","), candidate_index)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    shape: &GroupShape,
    flavor: Flavor,
    admissible: &[Vec<Vec<u64>>],
    weight: &[u64],
    table: &mut Vec<Vec<u64>>,
    pos: usize,
    index_acc: u64,
    found: &mut Vec<CensusEntry>,
) {
    let k = shape.rank();
    if pos == k * k {
        if let Ok(ring) = FiniteRing::new(
            census_name(shape, index_acc),
            shape.clone(),
            table.clone(),
            flavor,
        ) {
            found.push(CensusEntry {
                candidate_index: index_acc,
                ring,
            });
        }
        return;
    }
    let (i, j) = (pos / k, pos % k);
    for &t in &admissible[i][j] {
        table[i][j] = t;
        if partial_ok(shape, flavor, table) {
            backtrack(
                shape,
                flavor,
                admissible,
                weight,
                table,
                pos + 1,
                index_acc + t * weight[pos],
                found,
            );
        }
    }
    table[i][j] = u64::MAX;
}

/// Bilinear extension over a partially assigned table; `None` when an
/// entry the product needs is still unassigned.
fn partial_product(shape: &GroupShape, table: &[Vec<u64>], x: u64, y: u64) -> Option<u64> {
    let xs = shape.decode(x);
    let ys = shape.decode(y);
    let mut acc = 0u64;
    for (i, &xi) in xs.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for (j, &yj) in ys.iter().enumerate() {
            if yj == 0 {
                continue;
            }
            let t = table[i][j];
            if t == u64::MAX {
                return None;
            }
            acc = shape.add_ids(acc, shape.smul_id(xi * yj, t));
        }
    }
    Some(acc)
}

/// Checks every axiom instance that is fully determined by the assigned
/// entries; returns false only on a definite violation.
fn partial_ok(shape: &GroupShape, flavor: Flavor, table: &[Vec<u64>]) -> bool {
    let k = shape.rank();
    let basis = |i: usize| -> u64 {
        let mut w = 1u64;
        for &d in &shape.orders()[..i] {
            w *= d;
        }
        w
    };
    match flavor {
        Flavor::Associative => {
            for i in 0..k {
                for j in 0..k {
                    if table[i][j] == u64::MAX {
                        continue;
                    }
                    for l in 0..k {
                        let lhs = partial_product(shape, table, table[i][j], basis(l));
                        let rhs = match table[j][l] {
                            u64::MAX => None,
                            tjl => partial_product(shape, table, basis(i), tjl),
                        };
                        if let (Some(a), Some(b)) = (lhs, rhs) {
                            if a != b {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        Flavor::Lie => {
            for i in 0..k {
                if table[i][i] != u64::MAX && table[i][i] != 0 {
                    return false;
                }
                for j in 0..k {
                    if table[i][j] != u64::MAX
                        && table[j][i] != u64::MAX
                        && table[i][j] != shape.neg_id(table[j][i])
                    {
                        return false;
                    }
                }
            }
            // Jacobi is left to final validation; the antisymmetry pruning
            // above already collapses the space.
        }
    }
    true
}

// ---- ring file I/O ------------------------------------------------------

/// On-disk ring format. `table[i][j]` is the coefficient vector of
/// e_{i+1}·e_{j+1} in the order of `orders`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingFile {
    pub name: String,
    pub flavor: Flavor,
    pub orders: Vec<u64>,
    pub table: Vec<Vec<Vec<u64>>>,
}

pub fn ring_to_file(ring: &FiniteRing) -> RingFile {
    let k = ring.rank();
    RingFile {
        name: ring.name().to_string(),
        flavor: ring.flavor(),
        orders: ring.shape().orders().to_vec(),
        table: (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| ring.shape().decode(ring.table()[i][j]))
                    .collect()
            })
            .collect(),
    }
}

pub fn ring_from_file(file: &RingFile) -> Result<FiniteRing> {
    make_ring_normalized(file.name.clone(), &file.orders, &file.table, file.flavor)
}

pub fn save_ring(ring: &FiniteRing, path: &Path) -> Result<()> {
    let file = ring_to_file(ring);
    let mut text = serde_json::to_string_pretty(&file)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

pub fn load_ring(path: &Path) -> Result<FiniteRing> {
    let text = std::fs::read_to_string(path)?;
    let file: RingFile = serde_json::from_str(&text)?;
    ring_from_file(&file)
}
