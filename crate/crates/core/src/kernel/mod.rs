//! Signature-generic Clifford algebra engine.
//!
//! Blades are bitmasks over basis 1-vectors (`e0` is bit 0); the canonical
//! sign of a blade is that of its factors in ascending index order. Products
//! are computed from a precomputed `(sign, blade)` table per algebra.

mod algebra;
mod multivector;
mod serial;

pub use algebra::{pga2, pga3, reorder_sign, Algebra, AlgebraDescriptor, Blade, MAX_DIM};
pub use multivector::Multivector;

/// Default absolute tolerance for O(1)-magnitude comparisons.
pub const TOL: f64 = 1e-12;
