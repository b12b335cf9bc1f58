//! Structured report files: `{"schema_version": 1, "reports": [...]}`,
//! pretty-printed with fields in declaration order.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Document<T> {
    schema_version: u32,
    reports: Vec<T>,
}

/// The document text, newline-terminated.
pub fn render_results<T: Serialize>(reports: &[T]) -> Result<String> {
    #[derive(Serialize)]
    struct Borrowed<'a, T> {
        schema_version: u32,
        reports: &'a [T],
    }
    let mut s = serde_json::to_string_pretty(&Borrowed {
        schema_version: SCHEMA_VERSION,
        reports,
    })?;
    s.push('\n');
    Ok(s)
}

pub fn parse_results<T: DeserializeOwned>(text: &str) -> Result<Vec<T>> {
    let doc: Document<T> = serde_json::from_str(text)?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::Spec(format!("unsupported schema version {}", doc.schema_version)));
    }
    Ok(doc.reports)
}

pub fn persist_results<T: Serialize>(reports: &[T], path: &Path) -> Result<()> {
    std::fs::write(path, render_results(reports)?)?;
    Ok(())
}

pub fn load_results<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>> {
    parse_results(&std::fs::read_to_string(path)?)
}
