//! Pass/fail reports returned by the identity checks and probes.

use alloc::string::String;
use alloc::vec::Vec;

/// Failures past this many are counted but not stored.
pub const MAX_WITNESSES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub inputs: Vec<String>,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub cases: usize,
    pub failed: usize,
    pub skipped: usize,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        CheckReport { check: check.into(), cases: 0, failed: 0, skipped: 0, witnesses: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn pass(&mut self) {
        self.cases += 1;
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn fail(&mut self, inputs: Vec<String>, expected: String, found: String) {
        self.cases += 1;
        self.failed += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(Witness { inputs, expected, found });
        }
    }

    /// Records one case, failing when `expected != found`.
    pub fn compare<T: PartialEq + core::fmt::Display>(&mut self, inputs: impl FnOnce() -> Vec<String>, expected: &T, found: &T) {
        if expected == found {
            self.pass();
        } else {
            use alloc::string::ToString;
            self.fail(inputs(), expected.to_string(), found.to_string());
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.failed += other.failed;
        self.skipped += other.skipped;
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
        self.notes.extend(other.notes);
    }
}
