//! Command output: an optional table, a list of checks and summary lines,
//! rendered as text, CSV or JSON.

use std::io::{self, Write};

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub anchor: &'static str,
    pub name: &'static str,
    pub n: Option<u64>,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(
        anchor: &'static str,
        name: &'static str,
        n: Option<u64>,
        passed: bool,
        detail: impl Into<String>,
    ) -> Self {
        Check {
            anchor,
            name,
            n,
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub header: Vec<String>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub checks: Vec<Check>,
    pub summary: Vec<(String, String)>,
    pub passed: bool,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            passed: true,
            ..Default::default()
        }
    }

    pub fn check(&mut self, check: Check) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn summary(&mut self, key: &str, value: impl ToString) {
        self.summary.push((key.to_string(), value.to_string()));
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Text => self.render_text(out),
            Format::Csv => self.render_csv(out),
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.to_json())?;
                writeln!(out)
            }
        }
    }

    fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                let obj: serde_json::Map<String, serde_json::Value> = self
                    .columns
                    .iter()
                    .zip(r)
                    .map(|(c, v)| (c.to_string(), serde_json::Value::String(v.clone())))
                    .collect();
                serde_json::Value::Object(obj)
            })
            .collect();
        let summary: serde_json::Map<String, serde_json::Value> = self
            .summary
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        serde_json::json!({
            "command": self.command,
            "header": self.header,
            "columns": self.columns,
            "rows": rows,
            "checks": self.checks,
            "summary": summary,
            "passed": self.passed,
        })
    }

    fn render_text(&self, out: &mut dyn Write) -> io::Result<()> {
        for line in &self.header {
            writeln!(out, "{line}")?;
        }
        if !self.columns.is_empty() {
            let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
            for row in &self.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let line = |cells: Vec<&str>| -> String {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            writeln!(out, "{}", line(self.columns.clone()))?;
            for row in &self.rows {
                writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
            }
        }
        for c in &self.checks {
            let n = c.n.map(|n| format!(" n={n}")).unwrap_or_default();
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(out, "{verdict} [{}] {}{n}", c.anchor, c.name)?;
            } else {
                writeln!(out, "{verdict} [{}] {}{n}: {}", c.anchor, c.name, c.detail)?;
            }
        }
        for (k, v) in &self.summary {
            writeln!(out, "{k}: {v}")?;
        }
        if !self.checks.is_empty() {
            let failed = self.checks.iter().filter(|c| !c.passed).count();
            writeln!(out, "{} checks, {failed} failed", self.checks.len())?;
        }
        Ok(())
    }

    /// The table if there is one, otherwise the checks.
    fn render_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        if !self.columns.is_empty() {
            w.write_record(&self.columns)?;
            for row in &self.rows {
                w.write_record(row)?;
            }
        } else {
            w.write_record(["anchor", "name", "n", "passed", "detail"])?;
            for c in &self.checks {
                let n = c.n.map(|n| n.to_string()).unwrap_or_default();
                w.write_record([
                    c.anchor,
                    c.name,
                    &n,
                    if c.passed { "true" } else { "false" },
                    &c.detail,
                ])?;
            }
        }
        w.flush()
    }
}
