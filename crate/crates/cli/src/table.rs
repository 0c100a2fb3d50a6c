//! Column-oriented result table with CSV and JSON writers.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::config::Config;
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct ResultTable {
    pub columns: Vec<&'static str>,
    pub units: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
    pub metadata: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl ResultTable {
    pub fn new(layout: &[(&'static str, &'static str)]) -> Self {
        let mut metadata = BTreeMap::new();
        metadata.insert("constants_table".into(), photomom_core::constants::TABLE_VERSION.into());
        metadata.insert("tool_version".into(), env!("CARGO_PKG_VERSION").into());
        Self {
            columns: layout.iter().map(|(c, _)| *c).collect(),
            units: layout.iter().map(|(_, u)| *u).collect(),
            rows: Vec::new(),
            metadata,
        }
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) {
        self.metadata.insert(key.to_string(), value.to_string());
    }

    pub fn push(&mut self, row: Vec<f64>) -> Result<(), CliError> {
        if row.len() != self.columns.len() {
            return Err(CliError::Numerical(format!(
                "row {} has {} values, expected {}",
                self.rows.len(),
                row.len(),
                self.columns.len()
            )));
        }
        if let Some((i, v)) = row.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(CliError::Numerical(format!(
                "row {} column {} is not finite ({v})",
                self.rows.len(),
                self.columns[i]
            )));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }

    /// Metadata as `# key: value` lines, then header, units and data rows.
    /// Numbers carry 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.metadata {
            out.push_str(&format!("# {k}: {v}\n"));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        out.push_str(&self.units.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, config: &Config) -> Result<String, CliError> {
        #[derive(Serialize)]
        struct Column<'a> {
            name: &'a str,
            unit: &'a str,
            values: Vec<f64>,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            metadata: &'a BTreeMap<String, String>,
            config: &'a Config,
            columns: Vec<Column<'a>>,
        }
        let columns = self
            .columns
            .iter()
            .zip(&self.units)
            .enumerate()
            .map(|(i, (name, unit))| Column {
                name,
                unit,
                values: self.rows.iter().map(|r| r[i]).collect(),
            })
            .collect();
        let doc = Doc {
            metadata: &self.metadata,
            config,
            columns,
        };
        let mut s = serde_json::to_string_pretty(&doc).map_err(|e| CliError::Numerical(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn render(&self, format: Format, config: &Config) -> Result<String, CliError> {
        match format {
            Format::Csv => Ok(self.to_csv()),
            Format::Json => self.to_json(config),
        }
    }
}
