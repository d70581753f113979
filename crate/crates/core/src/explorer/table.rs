use crate::Result;
use serde::Serialize;
use std::io::Write;

/// Tool identity and the resolved configuration that produced a dataset.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    pub config: serde_json::Value,
}

impl Metadata {
    pub fn new(config: serde_json::Value) -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
        }
    }
}

/// Named columns of `f64` rows.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }

    /// CSV with `#` comment lines carrying `meta`, then a header row, then
    /// values in `{:.16e}` form.
    pub fn write_csv<W: Write>(&self, mut out: W, meta: &Metadata) -> Result<()> {
        writeln!(out, "# {} {}", meta.tool, meta.version)?;
        writeln!(out, "# config: {}", serde_json::to_string(&meta.config)?)?;
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|x| format!("{x:.16e}")))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_json<W: Write>(&self, mut out: W, meta: &Metadata) -> Result<()> {
        #[derive(Serialize)]
        struct Doc<'a> {
            #[serde(flatten)]
            meta: &'a Metadata,
            #[serde(flatten)]
            table: &'a Table,
        }
        serde_json::to_writer_pretty(&mut out, &Doc { meta, table: self })?;
        writeln!(out)?;
        Ok(())
    }
}
