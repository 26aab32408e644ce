//! Consistency engine for compact 7-manifold structure flags.
//!
//! Forward-chains three facts and reports any clash:
//!
//! - R1: a Sasaki-Einstein metric has positive Ricci curvature, so Myers'
//!   theorem forces a finite fundamental group.
//! - R2: a Sasaki-Einstein metric forces the first Pontryagin class to be a
//!   torsion class (transverse Hard Lefschetz through the Gysin/basic
//!   cohomology argument).
//! - R3: holonomy inside G₂ together with a finite fundamental group forces
//!   `p₁` non-torsion: Joyce's integral formula makes a torsion `p₁` imply a
//!   flat metric, whose compact quotients have infinite fundamental group.
//!
//! Unknowns stay unknown; the closure only ever adds facts, so it is
//! monotone in the input flags.

use serde::{Deserialize, Serialize};

/// Flag record for a smooth compact 7-manifold. `pi1_finite` and
/// `p1_torsion` are tri-state: `Some(v)` asserted, `None` unknown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seven7Desc {
    #[serde(default)]
    pub label: String,
    #[serde(default)]
    pub pi1_finite: Option<bool>,
    #[serde(default)]
    pub p1_torsion: Option<bool>,
    pub admits_sasaki_einstein: bool,
    pub admits_g2_holonomy: bool,
    /// Optional Betti vector b₀..b₇.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<u64>>,
}

impl Seven7Desc {
    pub fn new(admits_sasaki_einstein: bool, admits_g2_holonomy: bool) -> Self {
        Self {
            label: String::new(),
            pi1_finite: None,
            p1_torsion: None,
            admits_sasaki_einstein,
            admits_g2_holonomy,
            b: None,
        }
    }

    /// Check the Betti vector, when present: length 8, palindromic,
    /// b₀ = b₇ = 1.
    pub fn validate(&self) -> Result<(), String> {
        if let Some(b) = &self.b {
            if b.len() != 8 {
                return Err(format!("Betti vector must have length 8, got {}", b.len()));
            }
            if b[0] != 1 || b[7] != 1 {
                return Err("Betti vector must have b0 = b7 = 1".into());
            }
            if (0..4).any(|i| b[i] != b[7 - i]) {
                return Err("Betti vector must be palindromic".into());
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedFact {
    pub field: String,
    pub value: bool,
    pub rule: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub derived_facts: Vec<DerivedFact>,
    pub contradiction: bool,
    pub narrative: String,
}

impl ConsistencyReport {
    pub fn rule_trace(&self) -> Vec<&str> {
        self.derived_facts.iter().map(|f| f.rule.as_str()).collect()
    }

    /// All (field, value) assertions: given flags plus derived facts.
    /// Exposed for monotonicity checking.
    pub fn assertions(d: &Seven7Desc) -> Vec<(String, bool)> {
        let report = se7_consistency(d);
        let mut facts = Vec::new();
        if d.admits_sasaki_einstein {
            facts.push(("admits_sasaki_einstein".to_string(), true));
        }
        if d.admits_g2_holonomy {
            facts.push(("admits_g2_holonomy".to_string(), true));
        }
        if let Some(v) = d.pi1_finite {
            facts.push(("pi1_finite".to_string(), v));
        }
        if let Some(v) = d.p1_torsion {
            facts.push(("p1_torsion".to_string(), v));
        }
        for f in &report.derived_facts {
            facts.push((f.field.clone(), f.value));
        }
        facts.sort();
        facts.dedup();
        facts
    }
}

#[derive(Default, Clone, Copy)]
struct TriState {
    asserted_true: bool,
    asserted_false: bool,
}

impl TriState {
    fn seed(v: Option<bool>) -> Self {
        Self {
            asserted_true: v == Some(true),
            asserted_false: v == Some(false),
        }
    }

    fn clashes(&self) -> bool {
        self.asserted_true && self.asserted_false
    }
}

/// Forward-chaining closure of the three structure rules. Never fails:
/// contradictory inputs yield `contradiction = true` with the rule trace.
pub fn se7_consistency(d: &Seven7Desc) -> ConsistencyReport {
    let mut pi1 = TriState::seed(d.pi1_finite);
    let mut p1 = TriState::seed(d.p1_torsion);
    let mut derived: Vec<DerivedFact> = Vec::new();
    let mut narrative: Vec<String> = Vec::new();

    let push = |facts: &mut Vec<DerivedFact>,
                lines: &mut Vec<String>,
                field: &str,
                value: bool,
                rule: &str,
                why: &str| {
        facts.push(DerivedFact {
            field: field.to_string(),
            value,
            rule: rule.to_string(),
        });
        lines.push(format!("{rule}: {why}"));
    };

    if d.admits_sasaki_einstein {
        push(
            &mut derived,
            &mut narrative,
            "pi1_finite",
            true,
            "R1",
            "a Sasaki-Einstein metric has positive Ricci curvature, so Myers' theorem \
             forces the fundamental group to be finite",
        );
        pi1.asserted_true = true;
        push(
            &mut derived,
            &mut narrative,
            "p1_torsion",
            true,
            "R2",
            "a Sasaki-Einstein structure forces the first Pontryagin class to be a \
             torsion class",
        );
        p1.asserted_true = true;
    }
    // fires on given or R1-derived finiteness
    if d.admits_g2_holonomy && pi1.asserted_true {
        push(
            &mut derived,
            &mut narrative,
            "p1_torsion",
            false,
            "R3",
            "with holonomy in G2 and finite fundamental group the metric cannot be \
             flat, and Joyce's integral formula then makes the first Pontryagin \
             class non-torsion",
        );
        p1.asserted_false = true;
    }

    let contradiction = pi1.clashes() || p1.clashes();
    narrative.push(if contradiction {
        "conclusion: the asserted flags are mutually inconsistent".to_string()
    } else {
        "conclusion: no contradiction among the asserted flags".to_string()
    });

    ConsistencyReport {
        derived_facts: derived,
        contradiction,
        narrative: narrative.join("\n"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn se_and_g2_is_contradictory() {
        let r = se7_consistency(&Seven7Desc::new(true, true));
        assert!(r.contradiction);
        assert_eq!(r.rule_trace(), vec!["R1", "R2", "R3"]);
    }

    #[test]
    fn se_alone_derives_both_facts() {
        let r = se7_consistency(&Seven7Desc::new(true, false));
        assert!(!r.contradiction);
        let derived: Vec<(&str, bool)> = r
            .derived_facts
            .iter()
            .map(|f| (f.field.as_str(), f.value))
            .collect();
        assert_eq!(derived, vec![("pi1_finite", true), ("p1_torsion", true)]);
    }

    #[test]
    fn g2_with_infinite_pi1_is_open() {
        let mut d = Seven7Desc::new(false, true);
        d.pi1_finite = Some(false);
        let r = se7_consistency(&d);
        assert!(!r.contradiction);
        assert!(r.derived_facts.is_empty());
    }

    #[test]
    fn g2_with_finite_pi1_derives_nontorsion_p1() {
        let mut d = Seven7Desc::new(false, true);
        d.pi1_finite = Some(true);
        let r = se7_consistency(&d);
        assert!(!r.contradiction);
        assert_eq!(r.derived_facts.len(), 1);
        assert_eq!(r.derived_facts[0].rule, "R3");
        assert!(!r.derived_facts[0].value);

        // and a given torsion p1 then clashes
        d.p1_torsion = Some(true);
        assert!(se7_consistency(&d).contradiction);
    }

    #[test]
    fn betti_vector_validation() {
        let mut d = Seven7Desc::new(false, false);
        d.b = Some(vec![1, 0, 0, 20, 20, 0, 0, 1]);
        assert!(d.validate().is_ok());
        d.b = Some(vec![1, 0, 0, 20, 19, 0, 0, 1]);
        assert!(d.validate().is_err());
        d.b = Some(vec![1, 0, 0, 1]);
        assert!(d.validate().is_err());
    }

    #[test]
    fn inline_json_shape() {
        let d: Seven7Desc =
            serde_json::from_str(r#"{"admits_sasaki_einstein":true,"admits_g2_holonomy":true}"#)
                .unwrap();
        assert_eq!(d.pi1_finite, None);
        assert!(se7_consistency(&d).contradiction);
    }
}
