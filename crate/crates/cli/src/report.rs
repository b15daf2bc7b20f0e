//! The record printed by every command.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use hwv_core::{FieldKind, Scalar};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Default, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub stats: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub outputs: Vec<String>,
    /// Excluded from determinism comparisons.
    pub wall_time_us: u64,
    /// Set when the report is printed but the command still fails.
    #[serde(skip)]
    pub failure: Option<crate::CliError>,
}

impl RunReport {
    pub fn stat(&mut self, key: &str, value: impl Into<Value>) {
        self.stats.insert(key.to_string(), value.into());
    }

    pub fn set_time(&mut self, elapsed: Duration) {
        self.wall_time_us = elapsed.as_micros().try_into().unwrap_or(u64::MAX);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: hwv {}", self.command.join(" "));
        if let Some(r) = &self.result {
            let _ = writeln!(out, "result:  {r}");
        }
        if let Some(f) = &self.field {
            let _ = writeln!(out, "field:   {f}");
        }
        if let Some(m) = &self.method {
            let _ = writeln!(out, "method:  {m}");
        }
        for (k, v) in &self.stats {
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            let _ = writeln!(out, "  {k}: {v}");
        }
        if let Some(s) = self.seed {
            let _ = writeln!(out, "seed:    {s}");
        }
        for o in &self.outputs {
            let _ = writeln!(out, "wrote:   {o}");
        }
        let _ = write!(out, "time:    {:.3} ms", self.wall_time_us as f64 / 1000.0);
        out
    }
}
