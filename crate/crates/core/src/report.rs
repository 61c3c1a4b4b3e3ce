//! Outcome of comparing two truncated series.

use std::time::Instant;

use serde::Serialize;

use crate::qseries::{Ring, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FirstDiff {
    pub index: usize,
    pub left: serde_json::Value,
    pub right: serde_json::Value,
}

/// One identity checked coefficientwise up to `order`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub order: usize,
    pub pass: bool,
    pub first_diff: Option<FirstDiff>,
    pub ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    /// Passes iff `left` and `right` agree on every coefficient `0..=order`.
    pub fn compare<R: Ring>(
        identity: &str,
        left: &TruncatedSeries<R>,
        right: &TruncatedSeries<R>,
        started: Instant,
    ) -> Self {
        let order = left.order().min(right.order());
        let first_diff = (0..=order)
            .find(|&i| left.coefficient(i) != right.coefficient(i))
            .map(|index| FirstDiff {
                index,
                left: left.coefficient(index).to_json(),
                right: right.coefficient(index).to_json(),
            });
        VerificationReport {
            identity: identity.to_string(),
            order,
            pass: first_diff.is_none() && left.order() == right.order(),
            first_diff,
            ms: started.elapsed().as_millis(),
            error: None,
            note: None,
        }
    }

    /// Compares plain integer sequences (enumeration counts).
    pub fn compare_counts(
        identity: &str,
        left: &[num_bigint::BigInt],
        right: &[num_bigint::BigInt],
        started: Instant,
    ) -> Self {
        let l = TruncatedSeries::from_coeffs(left.to_vec(), left.len().saturating_sub(1));
        let r = TruncatedSeries::from_coeffs(right.to_vec(), right.len().saturating_sub(1));
        Self::compare(identity, &l, &r, started)
    }

    /// A check that could not be carried out.
    pub fn failed(identity: &str, order: usize, error: impl ToString, started: Instant) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            order,
            pass: false,
            first_diff: None,
            ms: started.elapsed().as_millis(),
            error: Some(error.to_string()),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// `identity order PASS|FAIL ...` for terminal output.
    pub fn summary_line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let mut line = format!("{:<24} N={:<4} {status} ({} ms)", self.identity, self.order, self.ms);
        if let Some(d) = &self.first_diff {
            line.push_str(&format!(" first diff at q^{}: {} vs {}", d.index, d.left, d.right));
        }
        if let Some(e) = &self.error {
            line.push_str(&format!(" error: {e}"));
        }
        line
    }
}
