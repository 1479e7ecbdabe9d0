//! Exact homological algebra over prime fields.
//!
//! Algebras are structure constants, modules are action matrices, and every
//! homological quantity (Hom, tensor products, Ext, Tor, projective and
//! injective dimensions) is computed by deterministic Gaussian elimination
//! over GF(p). On top of that engine sit Morita rings and their module
//! tuples, Gorenstein-projectivity tests with replayable totally acyclic
//! certificates, and monomorphism categories.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod field;
pub mod fixtures;
pub mod gorenstein;
pub mod linalg;
pub mod module;
pub mod mono;
pub mod morita;
mod poly;

pub use field::PrimeField;
pub use linalg::{Mat, Subspace};
