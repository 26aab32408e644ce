//! Exact-arithmetic invariants of smooth manifolds.
//!
//! This crate computes the finitely-checkable smooth-topology data behind
//! coexistence questions for Einstein metrics: Poincaré-polynomial counting
//! of product diffeotypes, Wall-style h-cobordism and 6-manifold
//! diffeomorphism criteria, circle-bundle Gysin computations, holonomy /
//! Â-genus scalar-curvature obstructions, and Fano 3-fold / Calabi-Yau
//! partner derivations over a bundled catalog. All arithmetic is exact:
//! arbitrary-precision integers and rationals throughout, no floats.
//!
//! Everything is pure and immutable after construction, so the whole API is
//! safe for concurrent batch use without coordination.

#![forbid(unsafe_code)]

pub mod algebra;
pub mod catalog;
pub mod manifolds;
pub mod report;
pub(crate) mod serde_util;

pub use algebra::{
    binomial, is_irreducible, poly_factor, poly_mul, AlgebraError, FactorMultiset, IntMatrix,
    PoincarePolynomial,
};
pub use catalog::{bundled_catalog, load_catalog, parse_catalog, CatalogError, CatalogFile};
pub use manifolds::{Decision, ManifoldError};
