use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use dirrelay::NetworkParams;
use serde::{Deserialize, Serialize};

use crate::args::Command;

pub const SCHEMA_VERSION: u32 = 1;

/// One CSV table. Every row carries a `status` cell: `ok` or the failure reason.
#[derive(Debug, Clone)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone)]
pub struct Row {
    pub values: Vec<f64>,
    pub status: Result<(), String>,
}

impl Row {
    pub fn ok(values: Vec<f64>) -> Self {
        Self { values, status: Ok(()) }
    }

    pub fn failed(width: usize, reason: impl Into<String>) -> Self {
        Self {
            values: vec![f64::NAN; width],
            status: Err(reason.into()),
        }
    }
}

/// 17 significant digits, enough to round-trip any f64.
pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{x:.16e}")
    }
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Self {
            name: name.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.status.is_err()).count()
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("# dirrelay {} schema {SCHEMA_VERSION}\n", self.name);
        out.push_str(&self.columns.join(","));
        out.push_str(",status\n");
        for row in &self.rows {
            for v in &row.values {
                out.push_str(&format_number(*v));
                out.push(',');
            }
            match &row.status {
                Ok(()) => out.push_str("ok"),
                Err(reason) => {
                    let _ = write!(out, "error: {}", reason.replace([',', '\n'], ";"));
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn write(&self, dir: &Path) -> io::Result<PathBuf> {
        let path = dir.join(format!("{}.csv", self.name));
        fs::write(&path, self.to_csv())?;
        Ok(path)
    }
}

/// Record of one run, written next to its outputs as `<command>.manifest.json`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema_version: u32,
    pub command: String,
    /// Fully resolved scenario; a rerun uses this instead of re-reading config files.
    pub params: NetworkParams,
    pub overrides: Vec<(String, String)>,
    pub seed: u64,
    pub started: String,
    pub finished: String,
    pub outputs: Vec<PathBuf>,
    pub row_failures: usize,
    pub notes: Vec<String>,
    pub invocation: Command,
}

impl RunManifest {
    pub fn path_for(dir: &Path, command: &str) -> PathBuf {
        dir.join(format!("{command}.manifest.json"))
    }

    pub fn write(&self, dir: &Path) -> io::Result<PathBuf> {
        let path = Self::path_for(dir, &self.command);
        let text = serde_json::to_string_pretty(self).map_err(io::Error::other)?;
        fs::write(&path, text + "\n")?;
        Ok(path)
    }

    pub fn read(path: &Path) -> io::Result<Self> {
        let text = fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))
    }
}
