//! Uniform verification reports with text and JSON rendering.
//!
//! Residuals are rendered as exact scalars, never floats, so a falsified
//! identity is diagnosable from the report alone.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("unknown format {0:?}; use text or json")]
    UnknownFormat(String),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Verified,
    Falsified,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Verified => write!(f, "VERIFIED"),
            Verdict::Falsified => write!(f, "FALSIFIED"),
        }
    }
}

/// One grading class and its exact residual, rendered as text. The residual
/// of a verified class is the string `"0"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualLine {
    pub class: String,
    pub value: String,
}

/// Outcome of checking one identity at one truncation parameter.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub parameter: u32,
    pub residuals: Vec<ResidualLine>,
    pub verdict: Verdict,
    pub seconds: f64,
}

impl VerificationReport {
    /// Builds a report from (class, rendered residual, is_zero) triples.
    /// The verdict is verified exactly when every residual is zero.
    pub fn new(
        identity: impl Into<String>,
        parameter: u32,
        residuals: Vec<(String, String, bool)>,
        started: Instant,
    ) -> Self {
        let verdict = if residuals.iter().all(|r| r.2) {
            Verdict::Verified
        } else {
            Verdict::Falsified
        };
        VerificationReport {
            identity: identity.into(),
            parameter,
            residuals: residuals
                .into_iter()
                .map(|(class, value, _)| ResidualLine { class, value })
                .collect(),
            verdict,
            seconds: started.elapsed().as_secs_f64(),
        }
    }

    pub fn verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }

    /// Renders deterministically (stable line order) in the given format.
    pub fn render(&self, format: &str) -> Result<String, ReportError> {
        match format {
            "text" => Ok(self.render_text()),
            "json" => Ok(serde_json::to_string_pretty(self)?),
            other => Err(ReportError::UnknownFormat(other.to_string())),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("identity: {}\n", self.identity));
        out.push_str(&format!("parameter: {}\n", self.parameter));
        for r in &self.residuals {
            out.push_str(&format!("  {}: {}\n", r.class, r.value));
        }
        out.push_str(&format!("seconds: {:.3}\n", self.seconds));
        out.push_str(&format!("{}\n", self.verdict));
        out
    }

    pub fn parse_json(text: &str) -> Result<Self, ReportError> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verified_report_renders() {
        let r = VerificationReport::new(
            "pentagon",
            4,
            vec![("(1,1)".into(), "0".into(), true)],
            Instant::now(),
        );
        let text = r.render("text").unwrap();
        assert!(text.trim_end().ends_with("VERIFIED"));
        assert!(r.verified());
    }

    #[test]
    fn injected_residual_falsifies() {
        let r = VerificationReport::new(
            "pentagon",
            0,
            vec![
                ("(1,0)".into(), "0".into(), true),
                ("(1,1)".into(), "1/(s - s^-1)".into(), false),
            ],
            Instant::now(),
        );
        assert!(!r.verified());
        let text = r.render("text").unwrap();
        assert!(text.contains("FALSIFIED"));
        assert!(text.contains("(1,1): 1/(s - s^-1)"));
    }

    #[test]
    fn json_round_trips() {
        let r = VerificationReport::new(
            "sw-wcf",
            6,
            vec![("(0,2)".into(), "0".into(), true)],
            Instant::now(),
        );
        let json = r.render("json").unwrap();
        let back = VerificationReport::parse_json(&json).unwrap();
        assert_eq!(back.identity, r.identity);
        assert_eq!(back.parameter, r.parameter);
        assert_eq!(back.residuals, r.residuals);
        assert_eq!(back.verdict, r.verdict);
    }

    #[test]
    fn unknown_format_rejected() {
        let r = VerificationReport::new("x", 0, vec![], Instant::now());
        assert!(matches!(
            r.render("yaml"),
            Err(ReportError::UnknownFormat(_))
        ));
    }
}
