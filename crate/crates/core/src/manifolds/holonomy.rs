//! Scalar-curvature obstructions for compact Ricci-flat manifolds of special
//! holonomy, read off from the parallel-spinor count of the holonomy group.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::ManifoldError;

/// Irreducible special holonomy of a compact Ricci-flat spin manifold.
///
/// Dimension conventions: `SU(m)` lives in real dimension `n = 2m` (twice
/// the complex rank), `Sp(k)` in `n = 4k`, `Spin(7)` in `n = 8`. Some
/// presentations pair the label "SU(2m)" with `n = 2m`, which is
/// dimensionally inconsistent; this implementation keys every case off the
/// real dimension, so holonomy `SU(m)` with `n = 2m ≡ 0 (mod 4)` is the
/// `Â = 2` case.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Holonomy {
    SU(u32),
    Sp(u32),
    Spin7,
}

impl fmt::Display for Holonomy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Holonomy::SU(m) => write!(f, "SU({m})"),
            Holonomy::Sp(k) => write!(f, "Sp({k})"),
            Holonomy::Spin7 => write!(f, "Spin(7)"),
        }
    }
}

/// The index-theoretic quantity that blocks positive scalar curvature.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PscIndex {
    /// Â-genus value (dimension ≡ 0 mod 4).
    AHat(i64),
    /// Hitchin α-invariant nonzero (dimension ≡ 2 mod 8).
    AlphaNonZero,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HolonomyObstruction {
    pub index_value: Option<PscIndex>,
    pub psc_obstructed: bool,
}

/// Dirac-index obstruction table for holonomy `hol` in real dimension `n`.
///
/// - `SU(m)`, `n = 2m ≡ 0 (mod 4)`: `Â = 2`, no positive scalar curvature.
/// - `SU(m)`, `n = 2m ≡ 2 (mod 8)`: `α ≠ 0`, no positive scalar curvature.
/// - `SU(m)`, `n = 2m ≡ 6 (mod 8)`: unobstructed (simply-connected manifolds
///   in these dimensions always carry positive-scalar-curvature metrics).
/// - `Sp(k)`, `n = 4k`: `Â = k + 1`, obstructed.
/// - `Spin(7)`, `n = 8`: `Â = 1`, obstructed.
///
/// Any other pairing is outside the table.
pub fn holonomy_obstruction(n: u32, hol: Holonomy) -> Result<HolonomyObstruction, ManifoldError> {
    let unknown = || ManifoldError::UnknownCase {
        dim: n,
        holonomy: hol.to_string(),
    };
    match hol {
        Holonomy::SU(m) => {
            if m == 0 || n != 2 * m {
                return Err(unknown());
            }
            if n.is_multiple_of(4) {
                Ok(HolonomyObstruction {
                    index_value: Some(PscIndex::AHat(2)),
                    psc_obstructed: true,
                })
            } else if n % 8 == 2 {
                Ok(HolonomyObstruction {
                    index_value: Some(PscIndex::AlphaNonZero),
                    psc_obstructed: true,
                })
            } else {
                // n ≡ 6 mod 8
                Ok(HolonomyObstruction {
                    index_value: None,
                    psc_obstructed: false,
                })
            }
        }
        Holonomy::Sp(k) => {
            if k == 0 || n != 4 * k {
                return Err(unknown());
            }
            Ok(HolonomyObstruction {
                index_value: Some(PscIndex::AHat(i64::from(k) + 1)),
                psc_obstructed: true,
            })
        }
        Holonomy::Spin7 => {
            if n != 8 {
                return Err(unknown());
            }
            Ok(HolonomyObstruction {
                index_value: Some(PscIndex::AHat(1)),
                psc_obstructed: true,
            })
        }
    }
}
