//! Pass/fail reports produced by the theorem verifiers.

use std::fmt;

/// Result of a predicate check: holds, or fails with a concrete witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check<W> {
    Holds,
    Fails(W),
}

impl<W> Check<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Check::Holds => None,
            Check::Fails(w) => Some(w),
        }
    }

    pub fn from_witness(witness: Option<W>) -> Self {
        witness.map_or(Check::Holds, Check::Fails)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail { witness: String },
    /// The claim is conditional and its hypothesis does not hold here.
    HypothesisNotMet { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub outcome: Outcome,
}

/// An ordered list of named checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.push(name, Outcome::Pass);
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.push(name, Outcome::Fail { witness: witness.into() });
    }

    pub fn not_met(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.push(name, Outcome::HypothesisNotMet { reason: reason.into() });
    }

    /// Records `Pass` when `witness` is `None`, otherwise a failure.
    pub fn check(&mut self, name: impl Into<String>, witness: Option<String>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, outcome: Outcome) {
        self.lines.push(CheckLine { name: name.into(), outcome });
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        for line in other.lines {
            self.push(format!("{prefix}{}", line.name), line.outcome);
        }
    }

    /// No line failed. Unmet hypotheses do not count as failures.
    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| matches!(l.outcome, Outcome::Fail { .. }))
    }

    pub fn get(&self, name: &str) -> Option<&Outcome> {
        self.lines.iter().find(|l| l.name == name).map(|l| &l.outcome)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            match &line.outcome {
                Outcome::Pass => writeln!(f, "PASS  {}", line.name)?,
                Outcome::Fail { witness } => writeln!(f, "FAIL  {}: {}", line.name, witness)?,
                Outcome::HypothesisNotMet { reason } => {
                    writeln!(f, "SKIP  {} (hypothesis not met: {})", line.name, reason)?
                }
            }
        }
        Ok(())
    }
}
