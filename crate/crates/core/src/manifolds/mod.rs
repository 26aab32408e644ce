//! Descriptor types for 4-, 6-, and 7-manifolds and Fano / Calabi-Yau
//! 3-folds, with the deciders and derivations that connect them.
//!
//! Descriptors record finite invariants only (Betti numbers, characteristic
//! numbers, structure flags); the analytic objects behind them enter solely
//! through boolean flags such as `admits_sasaki_einstein`. All values are
//! immutable and all operations are pure functions.

mod fano;
mod four;
mod gysin;
mod holonomy;
mod products;
mod seven;
mod wall6;

pub use fano::{
    cy_derive, cy_partner_spec, fano_derive, fano_filter, partner_id, CYDerived, CYSpec,
    FanoDerived, FanoRow,
};
pub use four::{
    a_hat_spin4, four_invariants, h_cobordant, AHatReport, FourInvariants, FourManifoldDesc,
};
pub use gysin::{gysin_circle_bundle, GradedRingData, GysinReport};
pub use holonomy::{holonomy_obstruction, Holonomy, HolonomyObstruction, PscIndex};
pub use products::{product_diffeotype_count, ProductCount, ProductWitness};
pub use seven::{se7_consistency, ConsistencyReport, DerivedFact, Seven7Desc};
pub use wall6::{wall6_diffeo, wall6_from_cy, wall6_from_fano, Wall6Desc};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Three-valued outcome of a diffeomorphism-type decision. `Unsupported`
/// marks inputs the implemented criteria deliberately do not cover; it is a
/// value, not a failure.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    Unsupported,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decision::Yes => write!(f, "yes"),
            Decision::No => write!(f, "no"),
            Decision::Unsupported => write!(f, "unsupported"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ManifoldError {
    #[error("descriptor is not spin")]
    NotSpin,
    #[error("product counting requires k >= 2, got k={0}")]
    KTooSmall(u32),
    #[error("the allowed-values list must be non-empty")]
    EmptyEllSet,
    #[error("allowed values must lie in 1..=4, got {0}")]
    InvalidEll(u8),
    #[error("no obstruction case covers dimension {dim} with holonomy {holonomy}")]
    UnknownCase { dim: u32, holonomy: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("non-integral result: {0}")]
    NonIntegral(String),
    #[error("operation requires Fano index 2, got index {0}")]
    WrongIndex(u32),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}
