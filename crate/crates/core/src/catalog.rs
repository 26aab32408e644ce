//! Ingestion, validation, and persistence of Fano catalog data.
//!
//! File format: UTF-8, one JSON object per line. An optional leading header
//! line `{"version": "..."}` (recognized by the absence of an `id` field)
//! carries the catalog version; every other line is a row with fields
//! `{id, index, c1_cubed, h11, h12, description, k_stable}`. Unknown fields
//! are preserved on round-trip but never interpreted. Blank lines and lines
//! starting with `#` are skipped.

use std::fs;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::manifolds::FanoRow;

/// The catalog rows shipped with the crate.
const BUNDLED: &str = include_str!("../data/fano_catalog.jsonl");

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{origin}:{line}: parse error: {message}")]
    Parse {
        origin: String,
        line: usize,
        message: String,
    },
    #[error("{origin}:{line}: validation error: {invariant}")]
    Validation {
        origin: String,
        line: usize,
        invariant: String,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogFile {
    pub version: String,
    pub rows: Vec<FanoRow>,
}

impl CatalogFile {
    /// Serialize back to the line-oriented format (header line + one row per
    /// line). Loading the result reproduces an identical value.
    pub fn emit(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{}\n",
            serde_json::json!({ "version": self.version })
        ));
        for row in &self.rows {
            out.push_str(&serde_json::to_string(row).expect("row serializes"));
            out.push('\n');
        }
        out
    }

    pub fn find(&self, id: &str) -> Option<&FanoRow> {
        self.rows.iter().find(|r| r.id == id)
    }
}

#[derive(Deserialize)]
struct Header {
    version: String,
}

/// Parse catalog text; `origin` labels error messages (a path or "<inline>").
pub fn parse_catalog(text: &str, origin: &str) -> Result<CatalogFile, CatalogError> {
    let mut version: Option<String> = None;
    let mut rows: Vec<FanoRow> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let value: serde_json::Value =
            serde_json::from_str(trimmed).map_err(|e| CatalogError::Parse {
                origin: origin.to_string(),
                line: lineno,
                message: e.to_string(),
            })?;
        let is_header = value.get("id").is_none();
        if is_header {
            if version.is_some() || !rows.is_empty() {
                return Err(CatalogError::Parse {
                    origin: origin.to_string(),
                    line: lineno,
                    message: "header line must come first and appear once".into(),
                });
            }
            let header: Header =
                serde_json::from_value(value).map_err(|e| CatalogError::Parse {
                    origin: origin.to_string(),
                    line: lineno,
                    message: format!("bad header: {e}"),
                })?;
            version = Some(header.version);
            continue;
        }
        let row: FanoRow = serde_json::from_value(value).map_err(|e| CatalogError::Parse {
            origin: origin.to_string(),
            line: lineno,
            message: e.to_string(),
        })?;
        row.validate()
            .map_err(|invariant| CatalogError::Validation {
                origin: origin.to_string(),
                line: lineno,
                invariant,
            })?;
        if rows.iter().any(|r| r.id == row.id) {
            return Err(CatalogError::Validation {
                origin: origin.to_string(),
                line: lineno,
                invariant: format!("duplicate id {:?}", row.id),
            });
        }
        rows.push(row);
    }
    Ok(CatalogFile {
        version: version.unwrap_or_else(|| "1".to_string()),
        rows,
    })
}

/// Load and validate a catalog file; row order is preserved.
pub fn load_catalog(path: &Path) -> Result<CatalogFile, CatalogError> {
    let text = fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_catalog(&text, &path.display().to_string())
}

/// The bundled catalog: the rows relevant to the index-2 Fano / Calabi-Yau
/// matching problem. Validated by construction.
pub fn bundled_catalog() -> CatalogFile {
    parse_catalog(BUNDLED, "<bundled>").expect("bundled catalog is valid")
}
