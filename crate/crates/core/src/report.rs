//! Pass/fail reports for axiom checks.
//!
//! Checks scan basis tuples in lexicographic order and stop at the first
//! violation, so the reported witness is deterministic.

/// The first violated axiom, with the basis-index tuple witnessing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
}

impl Violation {
    pub fn new(axiom: &'static str, witness: Vec<usize>) -> Self {
        Violation { axiom, witness }
    }
}

/// Outcome of one structure check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub subject: &'static str,
    pub violation: Option<Violation>,
}

impl CheckReport {
    pub fn pass(subject: &'static str) -> Self {
        CheckReport {
            subject,
            violation: None,
        }
    }

    pub fn fail(subject: &'static str, axiom: &'static str, witness: Vec<usize>) -> Self {
        CheckReport {
            subject,
            violation: Some(Violation::new(axiom, witness)),
        }
    }

    pub fn from_violation(subject: &'static str, violation: Option<Violation>) -> Self {
        CheckReport { subject, violation }
    }

    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.violation {
            None => write!(f, "{}: pass", self.subject),
            Some(v) => write!(
                f,
                "{}: FAIL ({} at witness {:?})",
                self.subject, v.axiom, v.witness
            ),
        }
    }
}
