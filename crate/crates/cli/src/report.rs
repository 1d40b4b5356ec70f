//! Deterministic command reports, rendered as plain text or JSON.

use serde::Serialize;
use serde_json::Value;

use crate::scenario::ScenarioSpec;

/// Outcome of one property over its cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub property: String,
    pub cases: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn line(&self) -> String {
        let mut s = format!(
            "{} {} [{} case{}]",
            if self.passed { "PASS" } else { "FAIL" },
            self.property,
            self.cases,
            if self.cases == 1 { "" } else { "s" }
        );
        if let Some(note) = &self.note {
            s.push_str(&format!(" ({note})"));
        }
        if let Some(c) = &self.counterexample {
            s.push_str(&format!("\n     first counterexample: {c}"));
        }
        s
    }
}

/// One elementary operation of an order certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateEntry {
    pub pair: [String; 2],
    pub result: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub scenario: ScenarioSpec,
    pub inputs: Vec<String>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<CertificateEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<Check>>,
    /// Plain-text rendering of `result`, one entry per line.
    #[serde(skip)]
    pub text: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().flatten().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.text {
            out.push_str(line);
            out.push('\n');
        }
        if let Some(cert) = &self.certificate {
            for (i, step) in cert.iter().enumerate() {
                out.push_str(&format!(
                    "  {}. {} + {} -> {}\n",
                    i + 1,
                    step.pair[0],
                    step.pair[1],
                    step.result
                ));
            }
        }
        for check in self.checks.iter().flatten() {
            out.push_str(&check.line());
            out.push('\n');
        }
        out
    }
}
