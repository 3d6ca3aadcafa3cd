//! Finite associative rings and finite Lie rings presented by structure
//! constants over a finite abelian additive group.
//!
//! The additive group is a direct sum of cyclic groups Z_{d_1} ⊕ … ⊕ Z_{d_k}
//! with orders sorted non-decreasing. An element is a coordinate vector
//! (x_1,…,x_k) with 0 ≤ x_i < d_i, identified with its mixed-radix id
//! Σ x_i·w_i where w_1 = 1 and w_{i+1} = w_i·d_i (first coordinate least
//! significant). Multiplication is the bilinear extension of a k×k table of
//! basis products e_i·e_j.
//!
//! Rings are non-unital: no identity is required or detected. All types are
//! immutable after validation and every operation is a pure function.

use crate::error::{IllFormed, Result, RingError};
use sha2::{Digest, Sha256};

/// Cardinality cap for operations that enumerate all ring elements.
pub const FULL_ENUM_CAP: u64 = 4096;

/// Cardinality cap for the subgroup-lattice brute-force oracle.
pub const ORACLE_CAP: u64 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Associative,
    Lie,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Associative => "associative",
            Flavor::Lie => "lie",
        }
    }
}

/// Shape of the additive group: cyclic orders, sorted non-decreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupShape {
    orders: Vec<u64>,
    weights: Vec<u64>,
    cardinality: u64,
}

impl GroupShape {
    /// Orders must each be ≥ 2 and sorted non-decreasing (the canonical
    /// form; ingestion paths permute user input before calling this).
    /// An empty list gives the trivial group of order 1.
    pub fn new(orders: Vec<u64>) -> Result<GroupShape> {
        let mut cardinality: u64 = 1;
        let mut weights = Vec::with_capacity(orders.len());
        for (i, &d) in orders.iter().enumerate() {
            if d < 2 {
                return Err(RingError::IllFormed(IllFormed::BadOrders {
                    detail: format!("order d_{} = {} < 2", i + 1, d),
                }));
            }
            if i > 0 && orders[i - 1] > d {
                return Err(RingError::IllFormed(IllFormed::BadOrders {
                    detail: format!("orders not sorted at position {}", i + 1),
                }));
            }
            weights.push(cardinality);
            cardinality = cardinality.checked_mul(d).ok_or_else(|| {
                RingError::IllFormed(IllFormed::BadOrders {
                    detail: "cardinality overflows u64".to_string(),
                })
            })?;
        }
        Ok(GroupShape {
            orders,
            weights,
            cardinality,
        })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn cardinality(&self) -> u64 {
        self.cardinality
    }

    pub fn encode(&self, coords: &[u64]) -> u64 {
        debug_assert_eq!(coords.len(), self.orders.len());
        coords
            .iter()
            .zip(&self.weights)
            .map(|(&c, &w)| c * w)
            .sum()
    }

    pub fn decode(&self, id: u64) -> Vec<u64> {
        debug_assert!(id < self.cardinality);
        let mut rem = id;
        self.orders
            .iter()
            .map(|&d| {
                let c = rem % d;
                rem /= d;
                c
            })
            .collect()
    }

    pub fn add_ids(&self, a: u64, b: u64) -> u64 {
        let mut rem_a = a;
        let mut rem_b = b;
        let mut out = 0u64;
        for (&d, &w) in self.orders.iter().zip(&self.weights) {
            let c = (rem_a % d + rem_b % d) % d;
            out += c * w;
            rem_a /= d;
            rem_b /= d;
        }
        out
    }

    pub fn neg_id(&self, a: u64) -> u64 {
        let mut rem = a;
        let mut out = 0u64;
        for (&d, &w) in self.orders.iter().zip(&self.weights) {
            let c = rem % d;
            out += if c == 0 { 0 } else { (d - c) * w };
            rem /= d;
        }
        out
    }

    pub fn smul_id(&self, n: u64, a: u64) -> u64 {
        let mut rem = a;
        let mut out = 0u64;
        for (&d, &w) in self.orders.iter().zip(&self.weights) {
            let c = (n % d) * (rem % d) % d;
            out += c * w;
            rem /= d;
        }
        out
    }

    fn add_coords_assign(&self, acc: &mut [u64], rhs: &[u64]) {
        for ((a, &r), &d) in acc.iter_mut().zip(rhs).zip(&self.orders) {
            *a = (*a + r) % d;
        }
    }
}

/// A ring element: coordinate vector plus its mixed-radix id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    id: u64,
    coords: Vec<u64>,
}

impl Element {
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.id == 0
    }
}

/// Metadata recorded when user input was normalized into canonical form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LoadMeta {
    /// `permutation[i]` is the position in the user's coordinate order of
    /// the i-th canonical coordinate.
    pub permutation: Vec<usize>,
}

/// A finite ring (associative or Lie) given by structure constants.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    name: String,
    shape: GroupShape,
    flavor: Flavor,
    /// table[i][j] = id of e_i·e_j (resp. `[e_i,e_j]`).
    table: Vec<Vec<u64>>,
    /// Same table with entries pre-decoded, for the bilinear extension.
    table_coords: Vec<Vec<Vec<u64>>>,
    hash: String,
    meta: LoadMeta,
}

impl FiniteRing {
    /// Validates and constructs a ring. The table is k×k of element ids.
    ///
    /// Checks, in order: arity, id ranges, well-definedness of the bilinear
    /// extension, then associativity (associative flavor) or antisymmetry +
    /// Jacobi (Lie flavor), each on all basis pairs/triples — sufficient by
    /// bilinearity.
    pub fn new(
        name: impl Into<String>,
        shape: GroupShape,
        table: Vec<Vec<u64>>,
        flavor: Flavor,
    ) -> Result<FiniteRing> {
        let k = shape.rank();
        if table.len() != k {
            return Err(RingError::IllFormed(IllFormed::BadArity {
                detail: format!("expected {} rows, got {}", k, table.len()),
            }));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != k {
                return Err(RingError::IllFormed(IllFormed::BadArity {
                    detail: format!("row {} has {} entries, expected {}", i, row.len(), k),
                }));
            }
            for (j, &t) in row.iter().enumerate() {
                if t >= shape.cardinality() {
                    return Err(RingError::IllFormed(IllFormed::BadCoefficient {
                        row: i,
                        col: j,
                        coeff: t as usize,
                    }));
                }
            }
        }

        // Well-definedness: d_i·(e_i e_j) = d_j·(e_i e_j) = 0.
        for i in 0..k {
            for j in 0..k {
                let t = table[i][j];
                if shape.smul_id(shape.orders[i], t) != 0 || shape.smul_id(shape.orders[j], t) != 0
                {
                    return Err(RingError::IllFormed(IllFormed::WellDefinedness { i, j }));
                }
            }
        }

        let table_coords: Vec<Vec<Vec<u64>>> = table
            .iter()
            .map(|row| row.iter().map(|&t| shape.decode(t)).collect())
            .collect();

        let ring = FiniteRing {
            name: name.into(),
            shape,
            flavor,
            table,
            table_coords,
            hash: String::new(),
            meta: LoadMeta::default(),
        };

        match flavor {
            Flavor::Associative => {
                for i in 0..k {
                    for j in 0..k {
                        for l in 0..k {
                            let left =
                                ring.product_id(ring.table[i][j], ring.basis_id(l));
                            let right =
                                ring.product_id(ring.basis_id(i), ring.table[j][l]);
                            if left != right {
                                return Err(RingError::IllFormed(IllFormed::Associativity {
                                    i,
                                    j,
                                    l,
                                }));
                            }
                        }
                    }
                }
            }
            Flavor::Lie => {
                for i in 0..k {
                    if ring.table[i][i] != 0 {
                        return Err(RingError::IllFormed(IllFormed::Antisymmetry { i, j: i }));
                    }
                    for j in 0..k {
                        if ring.table[i][j] != ring.shape.neg_id(ring.table[j][i]) {
                            return Err(RingError::IllFormed(IllFormed::Antisymmetry { i, j }));
                        }
                    }
                }
                for i in 0..k {
                    for j in 0..k {
                        for l in 0..k {
                            let a = ring.product_id(ring.table[i][j], ring.basis_id(l));
                            let b = ring.product_id(ring.table[j][l], ring.basis_id(i));
                            let c = ring.product_id(ring.table[l][i], ring.basis_id(j));
                            if ring.shape.add_ids(ring.shape.add_ids(a, b), c) != 0 {
                                return Err(RingError::IllFormed(IllFormed::Jacobi { i, j, l }));
                            }
                        }
                    }
                }
            }
        }

        let mut ring = ring;
        ring.hash = ring.compute_hash();
        Ok(ring)
    }

    fn compute_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(b"ringtable-v1;");
        hasher.update(self.flavor.name().as_bytes());
        hasher.update(b";");
        for d in &self.shape.orders {
            hasher.update(d.to_le_bytes());
        }
        hasher.update(b";");
        for row in &self.table {
            for &t in row {
                hasher.update(t.to_le_bytes());
            }
        }
        let digest = hasher.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> FiniteRing {
        self.name = name.into();
        self
    }

    pub(crate) fn set_meta(&mut self, meta: LoadMeta) {
        self.meta = meta;
    }

    pub fn meta(&self) -> &LoadMeta {
        &self.meta
    }

    pub fn shape(&self) -> &GroupShape {
        &self.shape
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn cardinality(&self) -> u64 {
        self.shape.cardinality()
    }

    pub fn rank(&self) -> usize {
        self.shape.rank()
    }

    /// Content hash of (flavor, orders, table); guards against cross-ring
    /// use of serialized subgroups and keys reports.
    pub fn content_hash(&self) -> &str {
        &self.hash
    }

    pub fn table(&self) -> &Vec<Vec<u64>> {
        &self.table
    }

    pub fn basis_id(&self, i: usize) -> u64 {
        self.shape.weights[i]
    }

    pub fn zero(&self) -> Element {
        self.element_from_id(0)
    }

    pub fn element_from_id(&self, id: u64) -> Element {
        assert!(id < self.cardinality(), "element id out of range");
        Element {
            id,
            coords: self.shape.decode(id),
        }
    }

    pub fn element(&self, coords: &[u64]) -> Result<Element> {
        if coords.len() != self.rank() {
            return Err(RingError::IllFormed(IllFormed::BadArity {
                detail: format!(
                    "coordinate vector of length {}, expected {}",
                    coords.len(),
                    self.rank()
                ),
            }));
        }
        for (i, (&c, &d)) in coords.iter().zip(self.shape.orders()).enumerate() {
            if c >= d {
                return Err(RingError::IllFormed(IllFormed::BadCoefficient {
                    row: 0,
                    col: i,
                    coeff: c as usize,
                }));
            }
        }
        Ok(Element {
            id: self.shape.encode(coords),
            coords: coords.to_vec(),
        })
    }

    pub fn basis_element(&self, i: usize) -> Element {
        self.element_from_id(self.basis_id(i))
    }

    // ---- id-level arithmetic ----------------------------------------

    /// Bilinear extension of the structure-constant table. This is the
    /// product for associative rings and the bracket for Lie rings.
    pub(crate) fn product_id(&self, x: u64, y: u64) -> u64 {
        let k = self.rank();
        let xs = self.shape.decode(x);
        let ys = self.shape.decode(y);
        let mut acc = vec![0u64; k];
        for (i, &xi) in xs.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in ys.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = xi * yj;
                let t = &self.table_coords[i][j];
                for (m, (&tm, &dm)) in t.iter().zip(self.shape.orders()).enumerate() {
                    if tm != 0 {
                        acc[m] = (acc[m] + c % dm * tm) % dm;
                    }
                }
            }
        }
        self.shape.encode(&acc)
    }

    pub(crate) fn mul_id(&self, x: u64, y: u64) -> u64 {
        debug_assert_eq!(self.flavor, Flavor::Associative);
        self.product_id(x, y)
    }

    pub(crate) fn bracket_id(&self, x: u64, y: u64) -> u64 {
        match self.flavor {
            Flavor::Lie => self.product_id(x, y),
            Flavor::Associative => {
                let xy = self.product_id(x, y);
                let yx = self.product_id(y, x);
                self.shape.add_ids(xy, self.shape.neg_id(yx))
            }
        }
    }

    // ---- element-level operations ------------------------------------

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        self.element_from_id(self.shape.add_ids(x.id, y.id))
    }

    pub fn neg(&self, x: &Element) -> Element {
        self.element_from_id(self.shape.neg_id(x.id))
    }

    pub fn smul(&self, n: u64, x: &Element) -> Element {
        self.element_from_id(self.shape.smul_id(n, x.id))
    }

    /// Ring product; associative flavor only.
    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        if self.flavor != Flavor::Associative {
            return Err(RingError::FlavorMismatch {
                expected: "associative",
                actual: self.flavor.name(),
            });
        }
        Ok(self.element_from_id(self.mul_id(x.id, y.id)))
    }

    /// `[x,y]`: xy − yx for associative rings, the table extension for Lie
    /// rings. Satisfies `[x,x]` = 0 either way.
    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        self.element_from_id(self.bracket_id(x.id, y.id))
    }

    /// The Lie ring on the same additive group with `[x,y]` = xy − yx.
    pub fn associated_lie_ring(&self) -> Result<FiniteRing> {
        if self.flavor != Flavor::Associative {
            return Err(RingError::FlavorMismatch {
                expected: "associative",
                actual: self.flavor.name(),
            });
        }
        let k = self.rank();
        let table: Vec<Vec<u64>> = (0..k)
            .map(|i| (0..k).map(|j| self.bracket_id(self.basis_id(i), self.basis_id(j))).collect())
            .collect();
        FiniteRing::new(
            format!("{}~lie", self.name),
            self.shape.clone(),
            table,
            Flavor::Lie,
        )
    }

    /// Ring with the transposed table (x ∘ y = y·x); associative only.
    pub fn opposite_ring(&self) -> Result<FiniteRing> {
        if self.flavor != Flavor::Associative {
            return Err(RingError::FlavorMismatch {
                expected: "associative",
                actual: self.flavor.name(),
            });
        }
        let k = self.rank();
        let table: Vec<Vec<u64>> = (0..k)
            .map(|i| (0..k).map(|j| self.table[j][i]).collect())
            .collect();
        FiniteRing::new(
            format!("{}~op", self.name),
            self.shape.clone(),
            table,
            Flavor::Associative,
        )
    }

    /// Table-level commutativity, sufficient by bilinearity. For Lie
    /// flavor this means abelian (all brackets zero) — in characteristic
    /// 2 a Lie table is symmetric even when brackets are nonzero.
    pub fn is_commutative(&self) -> bool {
        let k = self.rank();
        match self.flavor {
            Flavor::Associative => {
                (0..k).all(|i| (0..k).all(|j| self.table[i][j] == self.table[j][i]))
            }
            Flavor::Lie => (0..k).all(|i| (0..k).all(|j| self.table[i][j] == 0)),
        }
    }

    /// Guard for operations that enumerate every element.
    pub(crate) fn check_enum_cap(&self) -> Result<()> {
        if self.cardinality() > FULL_ENUM_CAP {
            return Err(RingError::CapExceeded {
                what: "ring cardinality",
                value: self.cardinality(),
                cap: FULL_ENUM_CAP,
            });
        }
        Ok(())
    }

    // ---- whole-ring additive maps -------------------------------------

    /// Images of the basis generators under one of the additive maps
    /// y ↦ [y,a], y ↦ a·y, y ↦ y·a.
    pub(crate) fn basis_images(&self, op: OrbitOp) -> Vec<u64> {
        (0..self.rank())
            .map(|j| {
                let e = self.basis_id(j);
                match op {
                    OrbitOp::BracketBy(a) => self.bracket_id(e, a),
                    OrbitOp::LeftMulBy(a) => self.mul_id(a, e),
                    OrbitOp::RightMulBy(a) => self.mul_id(e, a),
                }
            })
            .collect()
    }

    /// Evaluates the additive map determined by `basis_images` at every
    /// element, in id order, via a mixed-radix odometer (O(|R|·k)).
    pub(crate) fn additive_image_map(&self, basis_images: &[u64]) -> Vec<u64> {
        let n = self.cardinality() as usize;
        let k = self.rank();
        let images: Vec<Vec<u64>> = basis_images.iter().map(|&g| self.shape.decode(g)).collect();
        let mut counter = vec![0u64; k];
        let mut acc = vec![0u64; k];
        let mut out = Vec::with_capacity(n);
        for step in 0..n {
            out.push(self.shape.encode(&acc));
            if step + 1 == n {
                break;
            }
            // Increment the odometer; each carry level adds one basis
            // image (the wrap contributes −(d−1)·g = +g since d·g = 0).
            for j in 0..k {
                counter[j] += 1;
                self.shape.add_coords_assign(&mut acc, &images[j]);
                if counter[j] == self.shape.orders[j] {
                    counter[j] = 0;
                } else {
                    break;
                }
            }
        }
        out
    }

    /// Full image map for the orbit operation: entry y is the id of the
    /// image of y. Requires the enumeration cap.
    pub(crate) fn orbit_map(&self, op: OrbitOp) -> Result<Vec<u64>> {
        self.check_enum_cap()?;
        Ok(self.additive_image_map(&self.basis_images(op)))
    }

    /// |kernel| of the additive map.
    pub(crate) fn map_kernel_count(&self, op: OrbitOp) -> Result<u64> {
        Ok(self.orbit_map(op)?.iter().filter(|&&v| v == 0).count() as u64)
    }

    /// |image| of the additive map, via |R| / |kernel|.
    pub(crate) fn map_image_size(&self, op: OrbitOp) -> Result<u64> {
        Ok(self.cardinality() / self.map_kernel_count(op)?)
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum OrbitOp {
    /// y ↦ [y, a]
    BracketBy(u64),
    /// y ↦ a·y
    LeftMulBy(u64),
    /// y ↦ y·a
    RightMulBy(u64),
}

/// Builds a ring from user-ordered input, permuting the coordinates into
/// canonical (sorted) order and recording the permutation.
pub fn make_ring_normalized(
    name: impl Into<String>,
    orders: &[u64],
    table_coords: &[Vec<Vec<u64>>],
    flavor: Flavor,
) -> Result<FiniteRing> {
    let k = orders.len();
    // Stable sort of coordinate positions by order.
    let mut perm: Vec<usize> = (0..k).collect();
    perm.sort_by_key(|&i| orders[i]);
    let sorted: Vec<u64> = perm.iter().map(|&i| orders[i]).collect();
    let shape = GroupShape::new(sorted)?;

    if table_coords.len() != k {
        return Err(RingError::IllFormed(IllFormed::BadArity {
            detail: format!("expected {} table rows, got {}", k, table_coords.len()),
        }));
    }
    let mut table = vec![vec![0u64; k]; k];
    for (ci, &ui) in perm.iter().enumerate() {
        let row = &table_coords[ui];
        if row.len() != k {
            return Err(RingError::IllFormed(IllFormed::BadArity {
                detail: format!("table row {} has {} entries, expected {}", ui, row.len(), k),
            }));
        }
        for (cj, &uj) in perm.iter().enumerate() {
            let entry = &row[uj];
            if entry.len() != k {
                return Err(RingError::IllFormed(IllFormed::BadArity {
                    detail: format!(
                        "table[{}][{}] has {} coefficients, expected {}",
                        ui,
                        uj,
                        entry.len(),
                        k
                    ),
                }));
            }
            let mut coords = vec![0u64; k];
            for (cm, &um) in perm.iter().enumerate() {
                let c = entry[um];
                if c >= orders[um] {
                    return Err(RingError::IllFormed(IllFormed::BadCoefficient {
                        row: ui,
                        col: uj,
                        coeff: c as usize,
                    }));
                }
                coords[cm] = c;
            }
            table[ci][cj] = shape.encode(&coords);
        }
    }
    let mut ring = FiniteRing::new(name, shape, table, flavor)?;
    ring.set_meta(LoadMeta { permutation: perm });
    Ok(ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> FiniteRing {
        let shape = GroupShape::new(vec![n]).unwrap();
        FiniteRing::new(format!("Z{n}"), shape, vec![vec![1]], Flavor::Associative).unwrap()
    }

    fn zero_ring(orders: Vec<u64>) -> FiniteRing {
        let k = orders.len();
        let shape = GroupShape::new(orders).unwrap();
        FiniteRing::new("zero", shape, vec![vec![0; k]; k], Flavor::Associative).unwrap()
    }

    /// 2×2 matrices over F_p, basis E11, E12, E21, E22.
    fn mat2(p: u64) -> FiniteRing {
        let shape = GroupShape::new(vec![p; 4]).unwrap();
        let e = |i: usize| -> u64 { shape.weights[i] };
        // E_{ab}·E_{cd} = δ_{bc}·E_{ad}; basis index = 2(a−1)+(d−1).
        let mut table = vec![vec![0u64; 4]; 4];
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        if b == c {
                            table[2 * a + b][2 * c + d] = e(2 * a + d);
                        }
                    }
                }
            }
        }
        FiniteRing::new(format!("M2(Z{p})"), shape, table, Flavor::Associative).unwrap()
    }

    #[test]
    fn mixed_radix_first_coordinate_least_significant() {
        let shape = GroupShape::new(vec![2, 3]).unwrap();
        assert_eq!(shape.encode(&[1, 2]), 5);
        assert_eq!(shape.decode(5), vec![1, 2]);
        assert_eq!(shape.encode(&[0, 0]), 0);
        // id is a bijection
        let seen: std::collections::BTreeSet<u64> =
            (0..6).map(|id| shape.encode(&shape.decode(id))).collect();
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn trivial_group_is_supported() {
        let shape = GroupShape::new(vec![]).unwrap();
        assert_eq!(shape.cardinality(), 1);
        let r = FiniteRing::new("unit", shape, vec![], Flavor::Associative).unwrap();
        assert_eq!(r.cardinality(), 1);
        assert!(r.is_commutative());
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(GroupShape::new(vec![1]).is_err());
        assert!(GroupShape::new(vec![3, 2]).is_err());
    }

    #[test]
    fn z4_is_a_valid_ring() {
        let r = z(4);
        assert_eq!(r.cardinality(), 4);
        // add(3,2)=1, neg(1)=3
        let e = |id| r.element_from_id(id);
        assert_eq!(r.add(&e(3), &e(2)).id(), 1);
        assert_eq!(r.neg(&e(1)).id(), 3);
        // mul(2,2)=0
        assert_eq!(r.mul(&e(2), &e(2)).unwrap().id(), 0);
    }

    #[test]
    fn z6_products() {
        let r = z(6);
        let e = |id| r.element_from_id(id);
        assert_eq!(r.mul(&e(2), &e(3)).unwrap().id(), 0);
        assert_eq!(r.mul(&e(5), &e(5)).unwrap().id(), 1);
    }

    #[test]
    fn smul_in_klein_group() {
        let r = zero_ring(vec![2, 2]);
        let x = r.element(&[1, 1]).unwrap();
        assert_eq!(r.smul(2, &x).id(), 0);
    }

    #[test]
    fn zero_ring_multiplies_to_zero() {
        let r = zero_ring(vec![2, 2, 2]);
        for x in 0..8 {
            for y in 0..8 {
                assert_eq!(r.mul_id(x, y), 0);
            }
        }
    }

    #[test]
    fn row_ring_is_associative_by_hand_oracle() {
        // e1e1=e1, e1e2=e2, e2e1=0, e2e2=0 on Z_2×Z_2.
        let shape = GroupShape::new(vec![2, 2]).unwrap();
        let table = vec![vec![1, 2], vec![0, 0]];
        let r = FiniteRing::new("row", shape, table, Flavor::Associative).unwrap();
        assert!(!r.is_commutative());
        // Independent oracle: check every element triple directly.
        for x in 0..4 {
            for y in 0..4 {
                for zz in 0..4 {
                    assert_eq!(
                        r.mul_id(r.mul_id(x, y), zz),
                        r.mul_id(x, r.mul_id(y, zz)),
                        "triple ({x},{y},{zz})"
                    );
                }
            }
        }
    }

    #[test]
    fn nonassociative_table_is_rejected() {
        // e1e1=e2, e1e2=e1 on Z_2×Z_2: (e1e1)e1 = e2e1 vs e1(e1e1) = e1e2.
        let shape = GroupShape::new(vec![2, 2]).unwrap();
        let table = vec![vec![2, 1], vec![0, 0]];
        let err = FiniteRing::new("bad", shape, table, Flavor::Associative).unwrap_err();
        match err {
            RingError::IllFormed(IllFormed::Associativity { .. }) => {}
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn lie_flavor_rejects_nonzero_self_bracket() {
        let shape = GroupShape::new(vec![3]).unwrap();
        let err = FiniteRing::new("badlie", shape, vec![vec![1]], Flavor::Lie).unwrap_err();
        match err {
            RingError::IllFormed(IllFormed::Antisymmetry { .. }) => {}
            other => panic!("expected antisymmetry failure, got {other:?}"),
        }
    }

    #[test]
    fn ill_formed_well_definedness_detected() {
        // On Z_2×Z_4 set e1e1 = e2 (order 4): 2·(e1e1) = 2e2 ≠ 0.
        let shape = GroupShape::new(vec![2, 4]).unwrap();
        let table = vec![vec![2, 0], vec![0, 0]];
        let err = FiniteRing::new("bad", shape, table, Flavor::Associative).unwrap_err();
        match err {
            RingError::IllFormed(IllFormed::WellDefinedness { i: 0, j: 0 }) => {}
            other => panic!("expected well-definedness failure, got {other:?}"),
        }
    }

    #[test]
    fn bracket_vanishes_on_commutative_rings() {
        let r = z(6);
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(r.bracket_id(x, y), 0);
            }
        }
    }

    #[test]
    fn mat2_bracket_of_e11_e12_is_e12() {
        let r = mat2(2);
        let e11 = r.basis_element(0);
        let e12 = r.basis_element(1);
        // Hand oracle: E11·E12 = E12, E12·E11 = 0.
        assert_eq!(r.mul(&e11, &e12).unwrap().id(), e12.id());
        assert_eq!(r.mul(&e12, &e11).unwrap().id(), 0);
        assert_eq!(r.bracket(&e11, &e12).id(), e12.id());
        assert_eq!(r.bracket(&e12, &e12).id(), 0);
    }

    #[test]
    fn associated_lie_ring_agrees_with_source_brackets() {
        let r = mat2(2);
        let lie = r.associated_lie_ring().unwrap();
        assert_eq!(lie.flavor(), Flavor::Lie);
        assert_eq!(lie.cardinality(), 16);
        assert!(!lie.is_commutative());
        for x in 0..16 {
            for y in 0..16 {
                assert_eq!(lie.bracket_id(x, y), r.bracket_id(x, y));
            }
        }
        // Commutative source gives the abelian Lie ring.
        let abelian = z(4).associated_lie_ring().unwrap();
        assert!(abelian.is_commutative());
        assert!(abelian.table().iter().flatten().all(|&t| t == 0));
    }

    #[test]
    fn opposite_ring_reverses_products() {
        let r = mat2(2);
        let op = r.opposite_ring().unwrap();
        for x in 0..16 {
            for y in 0..16 {
                assert_eq!(op.mul_id(x, y), r.mul_id(y, x));
            }
        }
        let opop = op.opposite_ring().unwrap();
        assert_eq!(opop.table(), r.table());
        // Commutative rings are their own opposite.
        let zr = z(6);
        assert_eq!(zr.opposite_ring().unwrap().table(), zr.table());
    }

    #[test]
    fn distributivity_on_random_triples() {
        // Implied by construction; spot-checked as defense in depth.
        let r = mat2(2);
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state % 16
        };
        for _ in 0..200 {
            let (x, y, zz) = (next(), next(), next());
            let lhs = r.mul_id(x, r.shape.add_ids(y, zz));
            let rhs = r.shape.add_ids(r.mul_id(x, y), r.mul_id(x, zz));
            assert_eq!(lhs, rhs);
            let lhs2 = r.mul_id(r.shape.add_ids(x, y), zz);
            let rhs2 = r.shape.add_ids(r.mul_id(x, zz), r.mul_id(y, zz));
            assert_eq!(lhs2, rhs2);
        }
    }

    #[test]
    fn odometer_image_map_matches_direct_evaluation() {
        let r = mat2(2);
        let a = 7u64;
        for op in [OrbitOp::BracketBy(a), OrbitOp::LeftMulBy(a), OrbitOp::RightMulBy(a)] {
            let map = r.orbit_map(op).unwrap();
            for y in 0..16u64 {
                let direct = match op {
                    OrbitOp::BracketBy(a) => r.bracket_id(y, a),
                    OrbitOp::LeftMulBy(a) => r.mul_id(a, y),
                    OrbitOp::RightMulBy(a) => r.mul_id(y, a),
                };
                assert_eq!(map[y as usize], direct);
            }
        }
    }

    #[test]
    fn normalization_permutes_into_sorted_orders() {
        // User gives orders [4,2]; canonical is [2,4] with swapped coords.
        let table = vec![
            vec![vec![1, 0], vec![0, 0]],
            vec![vec![0, 0], vec![0, 0]],
        ];
        let r = make_ring_normalized("perm", &[4, 2], &table, Flavor::Associative).unwrap();
        assert_eq!(r.shape().orders(), &[2, 4]);
        assert_eq!(r.meta().permutation, vec![1, 0]);
        // e(canonical 2nd basis) is the user's first generator: its square
        // is itself.
        let g = r.basis_id(1);
        assert_eq!(r.mul_id(g, g), g);
    }

    #[test]
    fn flavor_mismatch_errors() {
        let shape = GroupShape::new(vec![2, 2]).unwrap();
        let lie = FiniteRing::new("ab", shape, vec![vec![0, 0], vec![0, 0]], Flavor::Lie).unwrap();
        let x = lie.element_from_id(1);
        assert!(matches!(
            lie.mul(&x, &x),
            Err(RingError::FlavorMismatch { .. })
        ));
        assert!(lie.associated_lie_ring().is_err());
        assert!(lie.opposite_ring().is_err());
    }

    #[test]
    fn content_hash_distinguishes_tables() {
        let a = z(4);
        let shape = GroupShape::new(vec![4]).unwrap();
        let b = FiniteRing::new("Z4zero", shape, vec![vec![0]], Flavor::Associative).unwrap();
        assert_ne!(a.content_hash(), b.content_hash());
        assert_eq!(a.content_hash().len(), 16);
    }
}
