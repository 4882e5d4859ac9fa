//! The report every verb emits.

use crate::report::{ValidationReport, Verdict, Violation};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt::Write as _;

pub const TOOL: &str = concat!("gcross ", env!("CARGO_PKG_VERSION"));

/// Characters of entry data shown in text output.
const TEXT_DATA_LIMIT: usize = 240;

/// One requested check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub check: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Violation>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub data: Value,
    /// Wall time in microseconds, only with `--timings`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

impl Entry {
    pub fn new(check: impl Into<String>, verdict: Verdict) -> Self {
        Self { check: check.into(), verdict, witnesses: Vec::new(), detail: String::new(), data: Value::Null, timing_us: None }
    }

    /// Pass iff the validation report is empty; its violations become the
    /// witnesses.
    pub fn from_validation(check: impl Into<String>, r: ValidationReport) -> Self {
        let mut e = Self::new(check, Verdict::from_bool(r.is_ok()));
        e.witnesses = r.violations;
        e
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = d.into();
        self
    }

    pub fn data(mut self, v: Value) -> Self {
        self.data = v;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    pub entries: Vec<Entry>,
    pub exit_status: u8,
}

impl Report {
    pub fn new(command: &str, input: Option<String>, seed: u64) -> Self {
        Self { tool: TOOL.into(), command: command.into(), input, seed, warnings: Vec::new(), entries: Vec::new(), exit_status: 0 }
    }

    pub fn push(&mut self, e: Entry) {
        self.entries.push(e);
        self.exit_status = if self.passed() { 0 } else { 1 };
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.verdict.is_pass())
    }

    pub fn entry(&self, check: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.check == check)
    }

    pub fn to_structured(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data") + "\n"
    }

    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}{}", self.tool, self.command, self.input.as_deref().map(|i| format!(" {i}")).unwrap_or_default());
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        for e in &self.entries {
            let _ = write!(s, "{:<14} {}", e.verdict.to_string(), e.check);
            if !e.detail.is_empty() {
                let _ = write!(s, ": {}", e.detail);
            }
            if let Some(t) = e.timing_us {
                let _ = write!(s, " ({t} us)");
            }
            s.push('\n');
            if !e.data.is_null() {
                let d = e.data.to_string();
                let cut: String = d.chars().take(TEXT_DATA_LIMIT).collect();
                let more = if cut.len() < d.len() { " ..." } else { "" };
                let _ = writeln!(s, "    {cut}{more}");
            }
            for v in e.witnesses.iter().take(20) {
                let _ = writeln!(s, "    {v}");
            }
            if e.witnesses.len() > 20 {
                let _ = writeln!(s, "    ... {} more", e.witnesses.len() - 20);
            }
        }
        let _ = writeln!(s, "exit status {}", self.exit_status);
        s
    }
}
