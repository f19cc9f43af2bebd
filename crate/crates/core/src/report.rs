//! Structured outcomes of the verification routines.

use std::fmt;

use serde::Serialize;

/// Outcome of an asserted identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            passed: true,
            checked: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Records one comparison; `detail` is only rendered on failure.
    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            self.failures.push(detail());
        }
    }

    pub fn fail(&mut self, detail: impl Into<String>) {
        self.checked += 1;
        self.passed = false;
        self.failures.push(detail.into());
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Folds another report's checks into this one.
    pub fn absorb(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.passed &= other.passed;
        self.failures
            .extend(other.failures.into_iter().map(|f| format!("{}: {f}", other.name)));
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks)", self.name, self.checked)?;
        for failure in self.failures.iter().take(10) {
            write!(f, "\n  mismatch: {failure}")?;
        }
        if self.failures.len() > 10 {
            write!(f, "\n  ... {} more", self.failures.len() - 10)?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

/// Side-by-side comparison of two computations whose equality is not
/// asserted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub name: String,
    pub left_label: String,
    pub right_label: String,
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub agree: bool,
    pub first_discrepancy: Option<String>,
    pub notes: Vec<String>,
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.agree { "AGREE" } else { "DIFFER" };
        write!(f, "REPORT {} [{status}]", self.name)?;
        if !self.left.is_empty() {
            write!(f, "\n  {}: {}", self.left_label, self.left.join(" "))?;
        }
        if !self.right.is_empty() {
            write!(f, "\n  {}: {}", self.right_label, self.right.join(" "))?;
        }
        if let Some(d) = &self.first_discrepancy {
            write!(f, "\n  first discrepancy: {d}")?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}
