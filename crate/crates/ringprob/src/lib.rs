//! ringprob — exact structure analysis of finite rings and Lie rings.
//!
//! The crate computes the commuting probability cp(R) and the zero-product
//! probability zp(R) of a finite ring exactly, extracts witness ideals with
//! certified index and square/commutator-span bounds by running the
//! constructive arguments step by step with every inequality checked, and
//! cross-validates against brute-force oracles on small instances.
//!
//! Everything is exact: probabilities and thresholds are rationals, all
//! comparisons are integer/rational comparisons, and identical inputs
//! produce byte-identical reports.
//!
//! Start with the runnable examples (`cargo run --example ring_info`, …) or
//! the thin CLI (`cargo run --bin ringprob -- info ring.json`).

pub mod catalog;
pub mod cli;
pub mod error;
pub mod extraction;
pub mod probability;
pub mod rational;
pub mod ring;
pub mod subobjects;

pub use error::{IllFormed, Result, RingError};
pub use rational::Rational;
pub use ring::{Element, FiniteRing, Flavor, GroupShape, FULL_ENUM_CAP, ORACLE_CAP};
pub use subobjects::{AdditiveSubgroup, ElementSet, IdealKind};
