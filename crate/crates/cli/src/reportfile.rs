//! Machine-readable command reports, mirroring the human output.
//!
//! Reports are deterministic: fixed key order, no timestamps, canonical
//! scalar strings, so identical inputs produce byte-identical files.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ReportFile {
    pub command: String,
    pub input: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subject: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axiom: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
}

impl ReportFile {
    pub fn new(command: &str, input: &str) -> Self {
        ReportFile {
            command: command.to_string(),
            input: input.to_string(),
            pass: true,
            subject: None,
            axiom: None,
            witness: None,
            error: None,
            details: None,
        }
    }

    pub fn from_check(command: &str, input: &str, report: &hopfheap::CheckReport) -> Self {
        let mut r = ReportFile::new(command, input);
        r.subject = Some(report.subject.to_string());
        if let Some(v) = &report.violation {
            r.pass = false;
            r.axiom = Some(v.axiom.to_string());
            r.witness = Some(v.witness.clone());
        }
        r
    }

    pub fn error(command: &str, input: &str, message: String) -> Self {
        let mut r = ReportFile::new(command, input);
        r.pass = false;
        r.error = Some(message);
        r
    }

    pub fn with_details(mut self, details: serde_json::Value) -> Self {
        self.details = Some(details);
        self
    }
}
