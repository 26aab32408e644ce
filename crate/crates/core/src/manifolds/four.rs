//! Closed simply-connected oriented smooth 4-manifolds, described by the
//! rank data of the intersection form plus the spin flag.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Decision, ManifoldError};
use crate::algebra::PoincarePolynomial;

/// Invariants of a closed simply-connected oriented 4-manifold: `b₂⁺`, `b₂⁻`
/// and whether the intersection form is even (spin). `b₁ = b₃ = 0` always.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourManifoldDesc {
    pub b2_plus: u32,
    pub b2_minus: u32,
    pub spin: bool,
    #[serde(default)]
    pub label: String,
}

impl FourManifoldDesc {
    pub fn new(b2_plus: u32, b2_minus: u32, spin: bool, label: &str) -> Self {
        Self {
            b2_plus,
            b2_minus,
            spin,
            label: label.to_string(),
        }
    }

    pub fn b2(&self) -> u32 {
        self.b2_plus + self.b2_minus
    }

    pub fn euler(&self) -> u32 {
        2 + self.b2()
    }

    pub fn signature(&self) -> i64 {
        i64::from(self.b2_plus) - i64::from(self.b2_minus)
    }

    /// Indefinite intersection form: both signs occur.
    pub fn is_indefinite(&self) -> bool {
        self.b2_plus > 0 && self.b2_minus > 0
    }

    /// Same orientation-reversed manifold: swaps `b₂⁺` and `b₂⁻`.
    pub fn reversed(&self) -> Self {
        Self {
            b2_plus: self.b2_minus,
            b2_minus: self.b2_plus,
            spin: self.spin,
            label: self.label.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FourInvariants {
    pub euler: u32,
    pub signature: i64,
    pub poincare: PoincarePolynomial,
}

/// Euler characteristic, signature, and Poincaré polynomial `1 + b₂t² + t⁴`.
pub fn four_invariants(d: &FourManifoldDesc) -> FourInvariants {
    FourInvariants {
        euler: d.euler(),
        signature: d.signature(),
        poincare: PoincarePolynomial::from_coeffs(vec![
            BigInt::from(1),
            BigInt::zero(),
            BigInt::from(d.b2()),
            BigInt::zero(),
            BigInt::from(1),
        ]),
    }
}

/// Wall's h-cobordism criterion for closed simply-connected 4-manifolds.
///
/// Both non-spin with equal (χ, σ): h-cobordant. Both spin with equal (χ, σ)
/// and indefinite (or trivial) intersection forms: h-cobordant, since
/// indefinite even unimodular forms are classified by rank and signature.
/// Differing spin flags or differing (χ, σ): not h-cobordant. Spin definite
/// forms of positive rank are left undecided rather than guessing at
/// unclassified territory.
pub fn h_cobordant(x: &FourManifoldDesc, y: &FourManifoldDesc) -> Decision {
    if x.spin != y.spin {
        return Decision::No;
    }
    if x.euler() != y.euler() || x.signature() != y.signature() {
        return Decision::No;
    }
    if !x.spin {
        return Decision::Yes;
    }
    // equal (χ, σ) forces equal (b₂⁺, b₂⁻), so definiteness agrees
    if x.b2() == 0 || x.is_indefinite() {
        Decision::Yes
    } else {
        Decision::Unsupported
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AHatReport {
    #[serde(with = "crate::serde_util::rational_string")]
    pub a_hat: BigRational,
    pub psc_obstructed: bool,
}

/// Â-genus of a closed spin 4-manifold and the Lichnerowicz obstruction.
///
/// The signature theorem gives `p₁ = 3σ` for closed oriented 4-manifolds, and
/// `Â = -p₁/24`, so `Â = -σ/8`. A nonzero index of the Dirac operator rules
/// out positive scalar curvature.
pub fn a_hat_spin4(d: &FourManifoldDesc) -> Result<AHatReport, ManifoldError> {
    if !d.spin {
        return Err(ManifoldError::NotSpin);
    }
    let a_hat = BigRational::new(BigInt::from(-d.signature()), BigInt::from(8));
    Ok(AHatReport {
        psc_obstructed: !a_hat.is_zero(),
        a_hat,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn barlow() -> FourManifoldDesc {
        FourManifoldDesc::new(1, 8, false, "Barlow surface")
    }

    #[test]
    fn barlow_invariants() {
        let inv = four_invariants(&barlow());
        assert_eq!(inv.euler, 11);
        assert_eq!(inv.signature, -7);
        assert_eq!(
            inv.poincare,
            PoincarePolynomial::from_coeffs(vec![1, 0, 9, 0, 1])
        );
    }

    #[test]
    fn sphere_like_invariants() {
        let inv = four_invariants(&FourManifoldDesc::new(0, 0, true, "S4"));
        assert_eq!((inv.euler, inv.signature), (2, 0));
        assert_eq!(
            inv.poincare,
            PoincarePolynomial::from_coeffs(vec![1, 0, 0, 0, 1])
        );
    }

    #[test]
    fn seven_point_blowup_invariants() {
        let inv = four_invariants(&FourManifoldDesc::new(1, 7, false, "CP2 # 7 CP2bar"));
        assert_eq!((inv.euler, inv.signature), (10, -6));
    }

    #[test]
    fn h_cobordism_examples() {
        let del_pezzo = FourManifoldDesc::new(1, 8, false, "CP2 # 8 CP2bar");
        assert_eq!(h_cobordant(&barlow(), &del_pezzo), Decision::Yes);
        let spin_twin = FourManifoldDesc::new(1, 8, true, "");
        assert_eq!(h_cobordant(&barlow(), &spin_twin), Decision::No);
        let k3 = FourManifoldDesc::new(3, 19, true, "K3");
        assert_eq!(h_cobordant(&k3, &k3), Decision::Yes);
        let chi_mismatch = FourManifoldDesc::new(1, 7, false, "");
        assert_eq!(h_cobordant(&barlow(), &chi_mismatch), Decision::No);
        // spin definite of positive rank: undecided
        let definite = FourManifoldDesc::new(0, 8, true, "");
        assert_eq!(h_cobordant(&definite, &definite), Decision::Unsupported);
        // trivial b2 spin pair: homotopy 4-spheres
        let s4 = FourManifoldDesc::new(0, 0, true, "");
        assert_eq!(h_cobordant(&s4, &s4), Decision::Yes);
    }

    #[test]
    fn a_hat_values() {
        let k3 = FourManifoldDesc::new(3, 19, true, "K3");
        let rep = a_hat_spin4(&k3).unwrap();
        assert_eq!(rep.a_hat, BigRational::from_integer(2.into()));
        assert!(rep.psc_obstructed);

        let flat = a_hat_spin4(&FourManifoldDesc::new(0, 0, true, "")).unwrap();
        assert!(flat.a_hat.is_zero());
        assert!(!flat.psc_obstructed);

        let reversed = a_hat_spin4(&k3.reversed()).unwrap();
        assert_eq!(reversed.a_hat, BigRational::from_integer((-2).into()));
        assert!(reversed.psc_obstructed);

        assert_eq!(
            a_hat_spin4(&FourManifoldDesc::new(1, 8, false, "")),
            Err(ManifoldError::NotSpin)
        );
    }
}
