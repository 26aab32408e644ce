//! Rational Betti numbers of a circle bundle over a compact 2n-dimensional
//! base, via exactness of the Gysin sequence.
//!
//! The sequence `… → H^{k-2}(X) →L H^k(X) →π* H^k(M) →∫ H^{k-1}(X) →L
//! H^{k+1}(X) → …` (L = cup product with the Euler class) gives
//! `b_k(M) = (b_k(X) - rk L_{k-2}) + (b_{k-1}(X) - rk L_{k-1})`.

use serde::{Deserialize, Serialize};

use super::ManifoldError;
use crate::algebra::IntMatrix;

/// Cohomology-ring data of the base: Betti numbers for degrees `0..=2n` and,
/// for each degree `k ≤ 2n-2`, the matrix of cup product with a fixed
/// degree-2 class `e: H^k → H^{k+2}` (rows = b_{k+2}, cols = b_k).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedRingData {
    pub betti: Vec<usize>,
    pub cup_e_maps: Vec<IntMatrix>,
}

impl GradedRingData {
    /// Ring data of a Kähler base satisfying duality and Hard Lefschetz,
    /// built from the Betti vector alone: each cup map gets the maximal rank
    /// Hard Lefschetz allows (injective below the middle, surjective above).
    pub fn hard_lefschetz_model(betti: Vec<usize>) -> Result<Self, ManifoldError> {
        if betti.len().is_multiple_of(2) {
            return Err(ManifoldError::DimensionMismatch(format!(
                "base Betti vector must cover degrees 0..=2n, got length {}",
                betti.len()
            )));
        }
        let n = (betti.len() - 1) / 2;
        let maps = (0..betti.len().saturating_sub(2))
            .map(|k| {
                let (rows, cols) = (betti[k + 2], betti[k]);
                let rank = if k < n { cols } else { rows }.min(rows).min(cols);
                IntMatrix::diagonal_ones(rows, cols, rank)
            })
            .collect();
        Ok(Self {
            betti,
            cup_e_maps: maps,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GysinReport {
    /// Betti numbers of the (2n+1)-dimensional total space, degrees 0..=2n+1.
    pub total_betti: Vec<usize>,
    /// Whether `π*: H⁴(X,ℝ) → H⁴(M,ℝ)` vanishes, i.e. `L: H² → H⁴` is onto.
    #[serde(rename = "H4_pullback_vanishes")]
    pub h4_pullback_vanishes: bool,
    /// With `p₁(M) = π* p₁(X)`, a vanishing degree-4 pullback makes `p₁(M)`
    /// a torsion class.
    pub p1_torsion_conclusion: bool,
}

/// Betti numbers of the circle-bundle total space over a base of complex
/// dimension `n`, plus the degree-4 pullback conclusion.
pub fn gysin_circle_bundle(base: &GradedRingData, n: usize) -> Result<GysinReport, ManifoldError> {
    if base.betti.len() != 2 * n + 1 {
        return Err(ManifoldError::DimensionMismatch(format!(
            "base of complex dimension {n} needs Betti numbers for degrees 0..={}, got length {}",
            2 * n,
            base.betti.len()
        )));
    }
    let expected_maps = if n == 0 { 0 } else { 2 * n - 1 };
    if base.cup_e_maps.len() != expected_maps {
        return Err(ManifoldError::DimensionMismatch(format!(
            "expected {expected_maps} cup maps (degrees 0..={}), got {}",
            2 * n as i64 - 2,
            base.cup_e_maps.len()
        )));
    }
    for (k, m) in base.cup_e_maps.iter().enumerate() {
        if m.rows() != base.betti[k + 2] || m.cols() != base.betti[k] {
            return Err(ManifoldError::DimensionMismatch(format!(
                "cup map in degree {k} is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                base.betti[k + 2],
                base.betti[k]
            )));
        }
    }

    let b = |k: i64| -> usize {
        if k < 0 || k as usize >= base.betti.len() {
            0
        } else {
            base.betti[k as usize]
        }
    };
    let ranks: Vec<usize> = base.cup_e_maps.iter().map(IntMatrix::rank).collect();
    let rank = |k: i64| -> usize {
        if k < 0 || k as usize >= ranks.len() {
            0
        } else {
            ranks[k as usize]
        }
    };

    let total_betti: Vec<usize> = (0..=(2 * n as i64 + 1))
        .map(|k| (b(k) - rank(k - 2)) + (b(k - 1) - rank(k - 1)))
        .collect();

    let h4_pullback_vanishes = if n >= 2 {
        rank(2) == base.betti[4]
    } else {
        // no degree-4 cohomology downstairs
        true
    };

    Ok(GysinReport {
        total_betti,
        h4_pullback_vanishes,
        p1_torsion_conclusion: h4_pullback_vanishes,
    })
}
