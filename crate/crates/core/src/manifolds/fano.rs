//! Fano 3-fold catalog rows and the derivations connecting them to putative
//! Calabi-Yau partners with the same Wall invariants.
//!
//! Conventions, all exact: a Fano 3-fold has Todd genus 1, so `c₁c₂ = 24`;
//! with Fano index `m` and `𝖧 = c₁/m` one gets `𝖧³ = c₁³/m³` and
//! `p₁·𝖧 = (c₁³ - 48)/m` from `p₁ = c₁² - 2c₂`. For a Calabi-Yau 3-fold
//! `p₁ = -2c₂` and `b₃ = 2h^{1,2} + 2`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::ManifoldError;

/// One catalog record for a deformation family of Fano 3-folds. Unknown JSON
/// fields are preserved on round-trip but never interpreted.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FanoRow {
    /// Catalog tag, e.g. "1-12" (the digit before the dash is b₂).
    pub id: String,
    /// Fano index: the largest integer dividing c₁.
    pub index: u32,
    pub c1_cubed: i64,
    pub h11: u32,
    pub h12: u32,
    #[serde(default)]
    pub description: String,
    /// Catalog-provided flag: the family is known to be K-stable (strictly).
    #[serde(default)]
    pub k_stable: bool,
    #[serde(flatten, skip_serializing_if = "BTreeMap::is_empty", default)]
    pub extra: BTreeMap<String, serde_json::Value>,
}

impl FanoRow {
    pub fn new(id: &str, index: u32, c1_cubed: i64, h11: u32, h12: u32) -> Self {
        Self {
            id: id.to_string(),
            index,
            c1_cubed,
            h11,
            h12,
            description: String::new(),
            k_stable: false,
            extra: BTreeMap::new(),
        }
    }

    pub fn b2(&self) -> u32 {
        self.h11
    }

    pub fn b3(&self) -> u32 {
        2 * self.h12
    }

    pub fn euler(&self) -> i64 {
        2 + 2 * i64::from(self.h11) - 2 * i64::from(self.h12)
    }

    /// Spin iff the index is even (c₁ ≡ 0 mod 2 makes w₂ vanish).
    pub fn spin(&self) -> bool {
        self.index.is_multiple_of(2)
    }

    /// Check the row invariants; `Err` names the violated one.
    pub fn validate(&self) -> Result<(), String> {
        if self.id.is_empty() {
            return Err("id must be non-empty".into());
        }
        if self.index == 0 {
            return Err(format!("row {}: index must be positive", self.id));
        }
        if self.index > 4 {
            return Err(format!(
                "row {}: Fano index {} exceeds the Kobayashi-Ochiai bound 4",
                self.id, self.index
            ));
        }
        if self.c1_cubed <= 0 {
            return Err(format!("row {}: c1^3 must be positive", self.id));
        }
        if self.h11 == 0 {
            return Err(format!("row {}: h11 must be positive", self.id));
        }
        let m3 = i64::from(self.index).pow(3);
        if self.c1_cubed % m3 != 0 {
            return Err(format!(
                "row {}: index^3 = {} does not divide c1^3 = {}",
                self.id, m3, self.c1_cubed
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanoDerived {
    pub b2: u32,
    pub b3: u32,
    pub euler: i64,
    pub spin: bool,
    #[serde(rename = "H_cubed", with = "crate::serde_util::rational_string")]
    pub h_cubed: BigRational,
    #[serde(rename = "p1_dot_H", with = "crate::serde_util::rational_string")]
    pub p1_dot_h: BigRational,
}

/// Topological data derived from a catalog row: Betti numbers, Euler
/// characteristic, spin flag, `𝖧³ = c₁³/index³`, and
/// `p₁·𝖧 = (c₁³ - 48)/index`.
pub fn fano_derive(r: &FanoRow) -> Result<FanoDerived, ManifoldError> {
    let m3 = i64::from(r.index).pow(3);
    if r.index == 0 || r.c1_cubed % m3 != 0 {
        return Err(ManifoldError::NonIntegral(format!(
            "index^3 = {m3} does not divide c1^3 = {}",
            r.c1_cubed
        )));
    }
    let h_cubed = BigRational::from_integer(BigInt::from(r.c1_cubed / m3));
    let p1_dot_h = BigRational::new(
        BigInt::from(r.c1_cubed - 48),
        BigInt::from(i64::from(r.index)),
    );
    Ok(FanoDerived {
        b2: r.b2(),
        b3: r.b3(),
        euler: r.euler(),
        spin: r.spin(),
        h_cubed,
        p1_dot_h,
    })
}

/// Keep the rows that could underlie a Calabi-Yau partner: spin (even
/// index), `b₃ ≥ 2` (a Calabi-Yau has `h^{3,0} = 1`), and index < 4 — the
/// index-4 case is ℂP₃ alone by the Kobayashi-Ochiai equality, excluded by
/// its vanishing b₃. Row order is preserved.
pub fn fano_filter(catalog: &[FanoRow]) -> Vec<FanoRow> {
    catalog
        .iter()
        .filter(|r| r.spin() && r.b3() >= 2 && r.index < 4)
        .cloned()
        .collect()
}

/// Wall-invariant requirements on a Calabi-Yau 3-fold. Plain data; use
/// [`CYSpec::validate`] where the invariants must hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CYSpec {
    #[serde(rename = "H_cubed")]
    pub h_cubed: i64,
    #[serde(rename = "c2_dot_H")]
    pub c2_dot_h: i64,
    pub h11: u32,
    pub h12: u32,
    #[serde(rename = "T2_trivial")]
    pub t2_trivial: bool,
}

impl CYSpec {
    pub fn validate(&self) -> Result<(), String> {
        if self.h_cubed <= 0 {
            return Err("H^3 must be positive".into());
        }
        if self.h11 == 0 {
            return Err("h11 must be positive".into());
        }
        if (2 * self.h_cubed + self.c2_dot_h) % 12 != 0 {
            return Err(format!(
                "Riemann-Roch value (2*{} + {})/12 is not an integer",
                self.h_cubed, self.c2_dot_h
            ));
        }
        Ok(())
    }
}

/// Partner tag for a catalog id: "1-12" → "I-12".
pub fn partner_id(id: &str) -> String {
    match id.split_once('-') {
        Some((_, rest)) => format!("I-{rest}"),
        None => format!("I-{id}"),
    }
}

/// The Calabi-Yau invariants forced by diffeomorphism to the (index-2) Fano
/// row `r`: matching `𝖧³`, `b₃`, and `p₁·𝖧` under `p₁ = -2c₂` gives
/// `𝖧³ = c₁³/8`, `c₂·𝖧 = 12 - 2𝖧³`, `h^{1,2} = h^{1,2}(Fano) - 1`.
pub fn cy_partner_spec(r: &FanoRow) -> Result<CYSpec, ManifoldError> {
    if r.index != 2 {
        return Err(ManifoldError::WrongIndex(r.index));
    }
    if r.b3() < 2 {
        return Err(ManifoldError::PreconditionViolated(format!(
            "row {} has b3 = {} < 2, so no Calabi-Yau partner exists",
            r.id,
            r.b3()
        )));
    }
    if r.c1_cubed % 8 != 0 {
        return Err(ManifoldError::NonIntegral(format!(
            "8 does not divide c1^3 = {}",
            r.c1_cubed
        )));
    }
    let h_cubed = r.c1_cubed / 8;
    Ok(CYSpec {
        h_cubed,
        c2_dot_h: 12 - 2 * h_cubed,
        h11: 1,
        h12: r.h12 - 1,
        t2_trivial: true,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CYDerived {
    #[serde(rename = "p1_dot_H")]
    pub p1_dot_h: i64,
    pub b3: u32,
    #[serde(rename = "chi_OH", with = "crate::serde_util::rational_string")]
    pub chi_oh: BigRational,
    /// χ(𝒪(𝖧)) = 1, i.e. the linear system |𝖧| is a single divisor.
    pub single_divisor_flag: bool,
}

/// Invariants a Calabi-Yau with spec `s` must exhibit: `p₁·𝖧 = -2c₂·𝖧`,
/// `b₃ = 2h^{1,2} + 2`, and the Riemann-Roch value
/// `χ(𝒪(𝖧)) = (2𝖧³ + c₂·𝖧)/12`.
pub fn cy_derive(s: &CYSpec) -> CYDerived {
    let chi_oh = BigRational::new(BigInt::from(2 * s.h_cubed + s.c2_dot_h), BigInt::from(12));
    CYDerived {
        p1_dot_h: -2 * s.c2_dot_h,
        b3: 2 * s.h12 + 2,
        single_divisor_flag: chi_oh.is_one(),
        chi_oh,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn row_1_12() -> FanoRow {
        FanoRow::new("1-12", 2, 16, 1, 10)
    }

    #[test]
    fn derive_1_12() {
        let d = fano_derive(&row_1_12()).unwrap();
        assert_eq!(d.h_cubed, BigRational::from_integer(2.into()));
        assert_eq!(d.p1_dot_h, BigRational::from_integer((-16).into()));
        assert_eq!(d.b3, 20);
        assert!(d.spin);
        assert_eq!(d.euler, -16);
    }

    #[test]
    fn derive_1_13() {
        let d = fano_derive(&FanoRow::new("1-13", 2, 24, 1, 5)).unwrap();
        assert_eq!(d.h_cubed, BigRational::from_integer(3.into()));
        assert_eq!(d.p1_dot_h, BigRational::from_integer((-12).into()));
        // for index 2 this is 4H^3 - 24
        assert_eq!(d.p1_dot_h, BigRational::from_integer((4 * 3 - 24).into()));
    }

    #[test]
    fn derive_1_15_has_no_third_betti() {
        let d = fano_derive(&FanoRow::new("1-15", 2, 40, 1, 0)).unwrap();
        assert_eq!(d.b3, 0);
        assert_eq!(d.euler, 4);
        assert_eq!(d.h_cubed, BigRational::from_integer(5.into()));
    }

    #[test]
    fn derive_rejects_non_divisible_cube() {
        let r = FanoRow::new("bad", 2, 15, 1, 1);
        assert!(matches!(
            fano_derive(&r),
            Err(ManifoldError::NonIntegral(_))
        ));
        assert!(r.validate().is_err());
    }

    #[test]
    fn partner_spec_examples() {
        let s = cy_partner_spec(&FanoRow::new("1-11", 2, 8, 1, 21)).unwrap();
        assert_eq!(
            s,
            CYSpec {
                h_cubed: 1,
                c2_dot_h: 10,
                h11: 1,
                h12: 20,
                t2_trivial: true
            }
        );
        let s = cy_partner_spec(&FanoRow::new("1-14", 2, 32, 1, 2)).unwrap();
        assert_eq!((s.h_cubed, s.c2_dot_h, s.h12), (4, 4, 1));
        let s = cy_partner_spec(&FanoRow::new("1-13", 2, 24, 1, 5)).unwrap();
        assert_eq!((s.h_cubed, s.c2_dot_h, s.h12), (3, 6, 4));
        s.validate().unwrap();
    }

    #[test]
    fn partner_spec_preconditions() {
        assert!(matches!(
            cy_partner_spec(&FanoRow::new("CP3", 4, 64, 1, 0)),
            Err(ManifoldError::WrongIndex(4))
        ));
        assert!(matches!(
            cy_partner_spec(&FanoRow::new("1-15", 2, 40, 1, 0)),
            Err(ManifoldError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn cy_derive_examples() {
        let d = cy_derive(&CYSpec {
            h_cubed: 2,
            c2_dot_h: 8,
            h11: 1,
            h12: 9,
            t2_trivial: true,
        });
        assert_eq!(d.p1_dot_h, -16);
        assert_eq!(d.b3, 20);
        assert!(d.chi_oh.is_one());
        assert!(d.single_divisor_flag);

        let d = cy_derive(&CYSpec {
            h_cubed: 4,
            c2_dot_h: 4,
            h11: 1,
            h12: 1,
            t2_trivial: true,
        });
        assert!(d.chi_oh.is_one());

        // degenerate all-zero input: formulas still evaluate
        let d = cy_derive(&CYSpec {
            h_cubed: 0,
            c2_dot_h: 0,
            h11: 1,
            h12: 0,
            t2_trivial: true,
        });
        assert!(d.chi_oh.is_zero());
        assert!(!d.single_divisor_flag);
        assert_eq!(d.b3, 2);
    }

    #[test]
    fn partner_tags() {
        assert_eq!(partner_id("1-12"), "I-12");
        assert_eq!(partner_id("CP3"), "I-CP3");
    }

    #[test]
    fn filter_keeps_exactly_the_candidates() {
        let catalog = vec![
            FanoRow::new("1-11", 2, 8, 1, 21),
            FanoRow::new("1-12", 2, 16, 1, 10),
            FanoRow::new("1-13", 2, 24, 1, 5),
            FanoRow::new("1-14", 2, 32, 1, 2),
            FanoRow::new("1-15", 2, 40, 1, 0), // b3 = 0
            FanoRow::new("2-32", 2, 48, 2, 0), // b3 = 0
            FanoRow::new("2-35", 2, 56, 2, 0), // b3 = 0
            FanoRow::new("3-27", 2, 48, 3, 0), // b3 = 0
            FanoRow::new("CP3", 4, 64, 1, 0),  // index 4 and b3 = 0
            FanoRow::new("odd", 1, 27, 1, 5),  // odd index: not spin
        ];
        let kept: Vec<String> = fano_filter(&catalog).into_iter().map(|r| r.id).collect();
        assert_eq!(kept, vec!["1-11", "1-12", "1-13", "1-14"]);
        for r in &catalog[4..9] {
            if r.index % 2 == 0 && r.index < 4 {
                assert_eq!(r.b3(), 0, "{} rejected by b3", r.id);
            }
        }
        assert!(fano_filter(&[]).is_empty());
    }

    #[test]
    fn wire_field_names() {
        let spec = CYSpec {
            h_cubed: 2,
            c2_dot_h: 8,
            h11: 1,
            h12: 9,
            t2_trivial: true,
        };
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(
            json,
            r#"{"H_cubed":2,"c2_dot_H":8,"h11":1,"h12":9,"T2_trivial":true}"#
        );
        let back: CYSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);

        let row = FanoRow::new("1-12", 2, 16, 1, 10);
        let json = serde_json::to_string(&row).unwrap();
        assert_eq!(
            json,
            r#"{"id":"1-12","index":2,"c1_cubed":16,"h11":1,"h12":10,"description":"","k_stable":false}"#
        );
    }
}
