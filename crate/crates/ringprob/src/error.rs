//! Error types shared across the crate.

use thiserror::Error;

/// Structural defects detected while validating a ring table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IllFormed {
    /// An additive order is < 2 or the orders list is not sorted.
    BadOrders { detail: String },
    /// Wrong number of rows/columns/coefficients in a table.
    BadArity { detail: String },
    /// A coefficient is out of range for its cyclic component.
    BadCoefficient { row: usize, col: usize, coeff: usize },
    /// d_i·(e_i·e_j) ≠ 0 or d_j·(e_i·e_j) ≠ 0: bilinear extension undefined.
    WellDefinedness { i: usize, j: usize },
    /// (e_i·e_j)·e_l ≠ e_i·(e_j·e_l) on a basis triple.
    Associativity { i: usize, j: usize, l: usize },
    /// `[e_i,e_i]` ≠ 0 or `[e_i,e_j]` ≠ −`[e_j,e_i]`.
    Antisymmetry { i: usize, j: usize },
    /// Jacobi identity fails on a basis triple.
    Jacobi { i: usize, j: usize, l: usize },
}

impl std::fmt::Display for IllFormed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IllFormed::BadOrders { detail } => write!(f, "bad additive orders: {detail}"),
            IllFormed::BadArity { detail } => write!(f, "bad table arity: {detail}"),
            IllFormed::BadCoefficient { row, col, coeff } => write!(
                f,
                "coefficient {coeff} of table[{row}][{col}] out of range"
            ),
            IllFormed::WellDefinedness { i, j } => write!(
                f,
                "bilinear extension undefined at basis pair ({i},{j})"
            ),
            IllFormed::Associativity { i, j, l } => write!(
                f,
                "associativity fails on basis triple ({i},{j},{l})"
            ),
            IllFormed::Antisymmetry { i, j } => write!(
                f,
                "antisymmetry fails on basis pair ({i},{j})"
            ),
            IllFormed::Jacobi { i, j, l } => write!(
                f,
                "Jacobi identity fails on basis triple ({i},{j},{l})"
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum RingError {
    #[error("ill-formed ring: {0}")]
    IllFormed(IllFormed),

    #[error("operation requires flavor {expected}, ring is {actual}")]
    FlavorMismatch {
        expected: &'static str,
        actual: &'static str,
    },

    #[error("cap exceeded: {what} = {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    #[error("proof-step assertion failed: {name} (witness: {witness})")]
    AssertionFailed { name: String, witness: String },

    #[error("input is not a {kind} ideal: counterexample ({r}, {a})")]
    NonIdealInput { kind: String, r: u64, a: u64 },

    #[error("set is not symmetric or misses 0: witness id {witness}")]
    SymmetryViolated { witness: u64 },

    #[error("set/subgroup belongs to a different ring (hash {expected} vs {actual})")]
    RingMismatch { expected: String, actual: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl RingError {
    /// CLI exit code mapping: 2 assertion failure, 3 malformed input,
    /// 4 cap exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            RingError::AssertionFailed { .. } => 2,
            RingError::CapExceeded { .. } => 4,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, RingError>;
