//! Deterministic report emission: every operation output renders as pretty
//! JSON or as a fixed-layout text table. Identical inputs always produce
//! byte-identical reports.

use serde::Serialize;

use crate::manifolds::{
    AHatReport, CYDerived, CYSpec, ConsistencyReport, Decision, FanoDerived, FanoRow,
    FourInvariants, GysinReport, ProductCount,
};
use crate::serde_util::rational_to_string;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Table,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "table" => Ok(ReportFormat::Table),
            other => Err(format!("unknown format {other:?} (expected json or table)")),
        }
    }
}

/// An operation output that knows its table layout. JSON comes from serde.
pub trait Render: Serialize {
    fn table(&self) -> String;
}

pub fn emit_report<T: Render + ?Sized>(value: &T, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Table => value.table(),
    }
}

fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (j, cell) in row.iter().enumerate() {
            widths[j] = widths[j].max(cell.len());
        }
    }
    let mut out = String::new();
    let mut emit_row = |cells: &[String]| {
        let mut line = String::new();
        for (j, cell) in cells.iter().enumerate() {
            line.push_str(cell);
            if j + 1 < cols {
                for _ in cell.len()..widths[j] + 2 {
                    line.push(' ');
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    emit_row(&header.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    for row in rows {
        emit_row(row);
    }
    out
}

/// `fano-scan` output: the filtered rows, in catalog order.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct FanoScanReport(pub Vec<FanoRow>);

impl Render for FanoScanReport {
    fn table(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .0
            .iter()
            .map(|r| {
                vec![
                    r.id.clone(),
                    r.c1_cubed.to_string(),
                    r.h12.to_string(),
                    r.h11.to_string(),
                    r.index.to_string(),
                ]
            })
            .collect();
        render_table(&["ID", "c1^3", "h12", "h11", "Index"], &rows)
    }
}

/// One `cy-partner` row: the partner tag plus required invariants.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CyPartnerRow {
    pub partner_id: String,
    pub spec: CYSpec,
    pub derived: CYDerived,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct CyPartnerReport(pub Vec<CyPartnerRow>);

impl Render for CyPartnerReport {
    fn table(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .0
            .iter()
            .map(|r| {
                vec![
                    r.partner_id.clone(),
                    r.spec.h_cubed.to_string(),
                    r.spec.c2_dot_h.to_string(),
                    r.spec.h11.to_string(),
                    r.spec.h12.to_string(),
                    if r.spec.t2_trivial { "0" } else { "?" }.to_string(),
                ]
            })
            .collect();
        render_table(&["Partner", "H^3", "c2.H", "h11", "h12", "T2"], &rows)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecisionReport {
    pub decision: Decision,
}

impl Render for DecisionReport {
    fn table(&self) -> String {
        format!("decision={}\n", self.decision)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FanoDeriveReport {
    pub id: String,
    pub derived: FanoDerived,
}

impl Render for FanoDeriveReport {
    fn table(&self) -> String {
        let d = &self.derived;
        format!(
            "id={} b2={} b3={} euler={} spin={} H^3={} p1.H={}\n",
            self.id,
            d.b2,
            d.b3,
            d.euler,
            d.spin,
            rational_to_string(&d.h_cubed),
            rational_to_string(&d.p1_dot_h)
        )
    }
}

impl Render for ProductCount {
    fn table(&self) -> String {
        format!("count={} expected={}\n", self.count, self.expected_binomial)
    }
}

impl Render for GysinReport {
    fn table(&self) -> String {
        let betti: Vec<String> = self.total_betti.iter().map(|b| b.to_string()).collect();
        format!(
            "total_betti={}\nH4_pullback_vanishes={}\np1_torsion={}\n",
            betti.join(","),
            self.h4_pullback_vanishes,
            self.p1_torsion_conclusion
        )
    }
}

impl Render for ConsistencyReport {
    fn table(&self) -> String {
        let mut out = format!("contradiction={}\n", self.contradiction);
        for f in &self.derived_facts {
            out.push_str(&format!("derived: {}={} [{}]\n", f.field, f.value, f.rule));
        }
        let trace: Vec<&str> = self.derived_facts.iter().map(|f| f.rule.as_str()).collect();
        out.push_str(&format!("trace={}\n", trace.join(",")));
        out
    }
}

impl Render for AHatReport {
    fn table(&self) -> String {
        format!(
            "a_hat={} psc_obstructed={}\n",
            rational_to_string(&self.a_hat),
            self.psc_obstructed
        )
    }
}

impl Render for FourInvariants {
    fn table(&self) -> String {
        format!(
            "euler={} signature={} poincare={}\n",
            self.euler, self.signature, self.poincare
        )
    }
}
