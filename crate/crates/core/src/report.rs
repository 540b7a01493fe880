//! Outcome records for coefficientwise comparisons.

use std::time::Instant;

use serde::{Deserialize, Serialize};

/// Result of comparing two series up to a truncation order.
///
/// `match` is true exactly when `first_mismatch` is `None`; the constructors
/// are the only way to build one, so the two fields cannot disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    subject: String,
    order: usize,
    #[serde(rename = "match")]
    matched: bool,
    first_mismatch: Option<usize>,
    elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>, order: usize, first_mismatch: Option<usize>) -> Self {
        Self { subject: subject.into(), order, matched: first_mismatch.is_none(), first_mismatch, elapsed_ms: 0 }
    }

    pub fn subject(&self) -> &str {
        &self.subject
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_match(&self) -> bool {
        self.matched
    }

    pub fn first_mismatch(&self) -> Option<usize> {
        self.first_mismatch
    }

    pub fn elapsed_ms(&self) -> u64 {
        self.elapsed_ms
    }

    pub fn named(mut self, subject: impl Into<String>) -> Self {
        self.subject = subject.into();
        self
    }

    pub fn with_elapsed_since(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }

    /// Merges several comparisons of the same subject: the result matches iff
    /// all of them do, and reports the smallest mismatching exponent.
    pub fn all(subject: impl Into<String>, order: usize, parts: &[VerificationReport]) -> Self {
        let first = parts.iter().filter_map(|r| r.first_mismatch).min();
        let elapsed = parts.iter().map(|r| r.elapsed_ms).sum();
        let mut report = Self::new(subject, order, first);
        report.elapsed_ms = elapsed;
        report
    }
}
