use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// One violated clause together with a human readable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub clause: String,
    pub witness: String,
}

/// Outcome of a checker. An empty report means every clause held.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, clause: impl Into<String>, witness: impl Into<String>) {
        self.violations.push(Violation { clause: clause.into(), witness: witness.into() });
    }

    pub fn merge(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }

    /// True if some violation names the given clause.
    pub fn has(&self, clause: &str) -> bool {
        self.violations.iter().any(|v| v.clause == clause)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "{}: {}", v.clause, v.witness)?;
        }
        Ok(())
    }
}
