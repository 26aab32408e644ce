//! wallkit: exact diffeomorphism-type invariants from the command line.
//!
//! Every subcommand is a thin adapter over the library: parse inputs,
//! dispatch, emit the library's report byte-for-byte. Exit codes: 0 success,
//! 1 operational error (usage, IO, parse, validation), 2 when `--strict` is
//! set and the mathematical outcome is negative (decision "no" or a flag
//! contradiction).

#![forbid(unsafe_code)]

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};

use wallkit_core::manifolds::{
    a_hat_spin4, cy_derive, cy_partner_spec, fano_derive, fano_filter, gysin_circle_bundle,
    h_cobordant, partner_id, product_diffeotype_count, se7_consistency, wall6_diffeo, Decision,
    FourManifoldDesc, GradedRingData, Seven7Desc, Wall6Desc,
};
use wallkit_core::report::{
    emit_report, CyPartnerReport, CyPartnerRow, DecisionReport, FanoDeriveReport, FanoScanReport,
    ReportFormat,
};
use wallkit_core::{bundled_catalog, load_catalog, CatalogFile};

#[derive(Parser)]
#[command(
    name = "wallkit",
    about = "Exact smooth-topology invariants: product diffeotype counts, h-cobordism and \
             Wall 6-manifold criteria, Gysin Betti numbers, Fano/Calabi-Yau derivations",
    version
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, default_value = "table")]
    format: ReportFormatArg,
    /// Exit with status 2 when the mathematical outcome is negative
    /// (decision "no" or a contradiction).
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, clap::ValueEnum)]
enum ReportFormatArg {
    Table,
    Json,
}

impl From<ReportFormatArg> for ReportFormat {
    fn from(v: ReportFormatArg) -> Self {
        match v {
            ReportFormatArg::Table => ReportFormat::Table,
            ReportFormatArg::Json => ReportFormat::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count distinct k-fold product diffeotypes by Poincaré polynomial.
    #[command(name = "product-count")]
    ProductCount {
        /// Number of 4-manifold factors (k >= 2).
        #[arg(long)]
        k: u32,
        /// Allowed ℓ values, comma-separated, each in 1..=4.
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
        ells: Vec<u8>,
    },
    /// Decide h-cobordism of two closed simply-connected 4-manifolds.
    Hcob {
        /// JSON file with the first descriptor.
        x: PathBuf,
        /// JSON file with the second descriptor.
        y: PathBuf,
    },
    /// Betti numbers of a circle bundle from base cohomology-ring data.
    Gysin {
        /// JSON file with the base ring data (betti, cup_e_maps).
        base: PathBuf,
    },
    /// Consistency closure of 7-manifold structure flags.
    Check7 {
        /// JSON file with the descriptor.
        desc: Option<PathBuf>,
        /// Inline JSON descriptor instead of a file.
        #[arg(long, conflicts_with = "desc")]
        inline: Option<String>,
    },
    /// Filter the Fano catalog down to Calabi-Yau partner candidates.
    #[command(name = "fano-scan")]
    FanoScan {
        /// Catalog file (default: WALLKIT_CATALOG or the bundled catalog).
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Required invariants of the Calabi-Yau partner of a catalog row.
    #[command(name = "cy-partner")]
    CyPartner {
        /// Catalog id (e.g. 1-12); omitted = all candidate rows.
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Decide diffeomorphism of two Wall-class 6-manifold descriptors.
    Wall6 {
        /// JSON file with the first descriptor.
        a: PathBuf,
        /// JSON file with the second descriptor.
        b: PathBuf,
    },
    /// Topological invariants derived from a Fano catalog row.
    #[command(name = "derive-fano")]
    DeriveFano {
        #[arg(long)]
        id: String,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Â-genus and scalar-curvature obstruction of a spin 4-manifold.
    Ahat4 {
        /// JSON file with the descriptor.
        desc: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // usage errors echo the grammar; help/version requests are not errors
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format: ReportFormat = cli.format.into();
    match run(cli.command, format) {
        Ok(outcome) => {
            print!("{}", outcome.report);
            if cli.strict && outcome.negative {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

struct Outcome {
    report: String,
    /// Drives the --strict exit code.
    negative: bool,
}

impl Outcome {
    fn ok(report: String) -> Self {
        Self {
            report,
            negative: false,
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn resolve_catalog(flag: Option<PathBuf>) -> Result<CatalogFile> {
    let path = flag.or_else(|| std::env::var_os("WALLKIT_CATALOG").map(PathBuf::from));
    match path {
        Some(p) => Ok(load_catalog(&p)?),
        None => Ok(bundled_catalog()),
    }
}

fn run(command: Command, format: ReportFormat) -> Result<Outcome> {
    match command {
        Command::ProductCount { k, ells } => {
            let result = product_diffeotype_count(&ells, k)?;
            Ok(Outcome::ok(emit_report(&result, format)))
        }
        Command::Hcob { x, y } => {
            let dx: FourManifoldDesc = read_json(&x)?;
            let dy: FourManifoldDesc = read_json(&y)?;
            let decision = h_cobordant(&dx, &dy);
            Ok(Outcome {
                report: emit_report(&DecisionReport { decision }, format),
                negative: decision == Decision::No,
            })
        }
        Command::Gysin { base } => {
            let data: GradedRingData = read_json(&base)?;
            if data.betti.len().is_multiple_of(2) {
                return Err(anyhow!(
                    "base Betti vector must cover degrees 0..=2n (odd length), got length {}",
                    data.betti.len()
                ));
            }
            let n = (data.betti.len() - 1) / 2;
            let report = gysin_circle_bundle(&data, n)?;
            Ok(Outcome::ok(emit_report(&report, format)))
        }
        Command::Check7 { desc, inline } => {
            let d: Seven7Desc = match (desc, inline) {
                (Some(path), None) => read_json(&path)?,
                (None, Some(json)) => {
                    serde_json::from_str(&json).context("cannot parse inline descriptor")?
                }
                (None, None) => return Err(anyhow!("check7 needs a descriptor file or --inline")),
                (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
            };
            d.validate()
                .map_err(|e| anyhow!("invalid descriptor: {e}"))?;
            let report = se7_consistency(&d);
            Ok(Outcome {
                negative: report.contradiction,
                report: emit_report(&report, format),
            })
        }
        Command::FanoScan { catalog } => {
            let cat = resolve_catalog(catalog)?;
            let rows = fano_filter(&cat.rows);
            Ok(Outcome::ok(emit_report(&FanoScanReport(rows), format)))
        }
        Command::CyPartner { id, catalog } => {
            let cat = resolve_catalog(catalog)?;
            let rows = match id {
                Some(id) => vec![cat
                    .find(&id)
                    .ok_or_else(|| anyhow!("no catalog row with id {id:?}"))?
                    .clone()],
                None => fano_filter(&cat.rows),
            };
            let mut out = Vec::with_capacity(rows.len());
            for row in &rows {
                let spec = cy_partner_spec(row)?;
                out.push(CyPartnerRow {
                    partner_id: partner_id(&row.id),
                    derived: cy_derive(&spec),
                    spec,
                });
            }
            Ok(Outcome::ok(emit_report(&CyPartnerReport(out), format)))
        }
        Command::Wall6 { a, b } => {
            let da: Wall6Desc = read_json(&a)?;
            let db: Wall6Desc = read_json(&b)?;
            let decision = wall6_diffeo(&da, &db)?;
            Ok(Outcome {
                report: emit_report(&DecisionReport { decision }, format),
                negative: decision == Decision::No,
            })
        }
        Command::DeriveFano { id, catalog } => {
            let cat = resolve_catalog(catalog)?;
            let row = cat
                .find(&id)
                .ok_or_else(|| anyhow!("no catalog row with id {id:?}"))?;
            let derived = fano_derive(row)?;
            Ok(Outcome::ok(emit_report(
                &FanoDeriveReport {
                    id: row.id.clone(),
                    derived,
                },
                format,
            )))
        }
        Command::Ahat4 { desc } => {
            let d: FourManifoldDesc = read_json(&desc)?;
            let report = a_hat_spin4(&d)?;
            Ok(Outcome::ok(emit_report(&report, format)))
        }
    }
}
