//! Wall's diffeomorphism criterion for closed, spin, simply-connected
//! 6-manifolds with torsion-free second homology.
//!
//! For such spaces with `b₂ = 1` the complete invariants reduce to three
//! integers: `b₃`, the cubic value `𝖧³` on a generator, and the pairing
//! `p₁·𝖧`. The only generator ambiguity is the sign, which flips `𝖧³` and
//! `p₁·𝖧` simultaneously.

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::fano::{CYDerived, CYSpec, FanoDerived, FanoRow};
use super::{Decision, ManifoldError};

/// Wall-class invariants of a closed 6-manifold. `cubic_HHH` and `p1_dot_H`
/// refer to a chosen generator of H² and are meaningful only when `b2 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wall6Desc {
    pub spin: bool,
    #[serde(rename = "torsion_free_T2")]
    pub torsion_free_t2: bool,
    pub b2: u32,
    pub b3: u32,
    #[serde(rename = "cubic_HHH", default)]
    pub cubic_hhh: i64,
    #[serde(rename = "p1_dot_H", default)]
    pub p1_dot_h: i64,
}

impl Wall6Desc {
    pub fn validate(&self) -> Result<(), String> {
        if !self.b3.is_multiple_of(2) {
            return Err(format!("b3 must be even, got {}", self.b3));
        }
        Ok(())
    }

    /// Gauge with `𝖧³ ≥ 0`: flipping the generator negates both `𝖧³` and
    /// `p₁·𝖧`.
    pub fn normalized(&self) -> Self {
        if self.cubic_hhh < 0 {
            Self {
                cubic_hhh: -self.cubic_hhh,
                p1_dot_h: -self.p1_dot_h,
                ..self.clone()
            }
        } else {
            self.clone()
        }
    }
}

/// Wall's criterion for two descriptors with `b₂ = 1`: diffeomorphic iff
/// `(b₃, 𝖧³, p₁·𝖧)` agree for some choice of generator signs. Requires both
/// spin and torsion-free flags; returns `Unsupported` when `b₂ ≠ 1`
/// (trilinear-form isomorphism testing in higher rank is out of scope).
pub fn wall6_diffeo(m1: &Wall6Desc, m2: &Wall6Desc) -> Result<Decision, ManifoldError> {
    for (name, d) in [("first", m1), ("second", m2)] {
        if !d.spin {
            return Err(ManifoldError::PreconditionViolated(format!(
                "{name} descriptor is not spin"
            )));
        }
        if !d.torsion_free_t2 {
            return Err(ManifoldError::PreconditionViolated(format!(
                "{name} descriptor has torsion in H2"
            )));
        }
        if let Err(e) = d.validate() {
            return Err(ManifoldError::PreconditionViolated(format!(
                "{name} descriptor invalid: {e}"
            )));
        }
    }
    if m1.b2 != 1 || m2.b2 != 1 {
        return Ok(Decision::Unsupported);
    }
    let agree = [1i64, -1].iter().any(|&eps| {
        m1.b3 == m2.b3 && eps * m1.cubic_hhh == m2.cubic_hhh && eps * m1.p1_dot_h == m2.p1_dot_h
    });
    Ok(if agree { Decision::Yes } else { Decision::No })
}

fn rational_to_i64(v: &BigRational, what: &str) -> Result<i64, ManifoldError> {
    if !v.is_integer() {
        return Err(ManifoldError::NonIntegral(format!("{what} = {v}")));
    }
    v.to_integer()
        .to_i64()
        .ok_or_else(|| ManifoldError::NonIntegral(format!("{what} out of i64 range")))
}

/// Wall descriptor of the 6-manifold underlying a `b₂ = 1` catalog row.
/// Torsion-freeness of H₂ holds for the bundled rows (Lefschetz-type
/// arguments give H₂ = ℤ there) and is asserted by this constructor.
pub fn wall6_from_fano(row: &FanoRow, derived: &FanoDerived) -> Result<Wall6Desc, ManifoldError> {
    if row.b2() != 1 {
        return Err(ManifoldError::PreconditionViolated(format!(
            "row {} has b2 = {}, need 1",
            row.id,
            row.b2()
        )));
    }
    if !derived.spin {
        return Err(ManifoldError::NotSpin);
    }
    Ok(Wall6Desc {
        spin: true,
        torsion_free_t2: true,
        b2: 1,
        b3: derived.b3,
        cubic_hhh: rational_to_i64(&derived.h_cubed, "H^3")?,
        p1_dot_h: rational_to_i64(&derived.p1_dot_h, "p1.H")?,
    })
}

/// Wall descriptor of a Calabi-Yau matching `spec` (h¹¹ = 1 so b₂ = 1;
/// spin since c₁ = 0; `p₁·𝖧 = -2c₂·𝖧`, `b₃ = 2h^{1,2} + 2`).
pub fn wall6_from_cy(spec: &CYSpec, derived: &CYDerived) -> Result<Wall6Desc, ManifoldError> {
    if spec.h11 != 1 {
        return Err(ManifoldError::PreconditionViolated(format!(
            "spec has h11 = {}, need 1",
            spec.h11
        )));
    }
    Ok(Wall6Desc {
        spin: true,
        torsion_free_t2: spec.t2_trivial,
        b2: 1,
        b3: derived.b3,
        cubic_hhh: spec.h_cubed,
        p1_dot_h: derived.p1_dot_h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifolds::fano::{cy_derive, cy_partner_spec, fano_derive};

    fn wall(b3: u32, h3: i64, p1h: i64) -> Wall6Desc {
        Wall6Desc {
            spin: true,
            torsion_free_t2: true,
            b2: 1,
            b3,
            cubic_hhh: h3,
            p1_dot_h: p1h,
        }
    }

    #[test]
    fn fano_1_12_matches_its_partner() {
        let row = FanoRow::new("1-12", 2, 16, 1, 10);
        let derived = fano_derive(&row).unwrap();
        let fano_side = wall6_from_fano(&row, &derived).unwrap();

        let spec = cy_partner_spec(&row).unwrap();
        let cy_side = wall6_from_cy(&spec, &cy_derive(&spec)).unwrap();

        assert_eq!(fano_side, wall(20, 2, -16));
        assert_eq!(cy_side, wall(20, 2, -16));
        assert_eq!(wall6_diffeo(&fano_side, &cy_side).unwrap(), Decision::Yes);
    }

    #[test]
    fn different_rows_do_not_match() {
        assert_eq!(
            wall6_diffeo(&wall(20, 2, -16), &wall(42, 1, -20)).unwrap(),
            Decision::No
        );
    }

    #[test]
    fn generator_flip_is_respected() {
        assert_eq!(
            wall6_diffeo(&wall(20, -2, 16), &wall(20, 2, -16)).unwrap(),
            Decision::Yes
        );
        // flipping only one of the two values is a genuine difference
        assert_eq!(
            wall6_diffeo(&wall(20, -2, -16), &wall(20, 2, -16)).unwrap(),
            Decision::No
        );
    }

    #[test]
    fn preconditions_and_unsupported() {
        let mut bad = wall(20, 2, -16);
        bad.spin = false;
        assert!(matches!(
            wall6_diffeo(&bad, &wall(20, 2, -16)),
            Err(ManifoldError::PreconditionViolated(_))
        ));
        let mut torsion = wall(20, 2, -16);
        torsion.torsion_free_t2 = false;
        assert!(wall6_diffeo(&wall(20, 2, -16), &torsion).is_err());

        let mut high_rank = wall(0, 0, 0);
        high_rank.b2 = 2;
        assert_eq!(
            wall6_diffeo(&high_rank, &high_rank).unwrap(),
            Decision::Unsupported
        );

        let mut odd_b3 = wall(20, 2, -16);
        odd_b3.b3 = 3;
        assert!(wall6_diffeo(&odd_b3, &wall(20, 2, -16)).is_err());
    }
}
