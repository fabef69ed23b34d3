use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::Certificate;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Verified { checks: usize },
    Counterexample { checks: usize, certificates: Vec<Certificate> },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub instance: String,
    pub size: usize,
    pub goursat: bool,
    pub outcome: Outcome,
}

/// A certificate together with whether the instance was expected to fail
/// (non-Goursat) or not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub instance: String,
    pub expected: bool,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub family: String,
    pub seed: u64,
    /// Instances actually checked.
    pub instances: usize,
    pub results: Vec<InstanceReport>,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl TheoremReport {
    /// Failures on instances that ship Hagemann–Mitschke terms.
    pub fn unexpected(&self) -> impl Iterator<Item = &Failure> {
        self.failures.iter().filter(|f| !f.expected)
    }

    /// No Goursat instance produced a certificate.
    pub fn holds(&self) -> bool {
        self.unexpected().next().is_none()
    }

    pub fn checks(&self) -> usize {
        self.results
            .iter()
            .map(|r| match r.outcome {
                Outcome::Verified { checks } | Outcome::Counterexample { checks, .. } => checks,
                Outcome::Skipped { .. } => 0,
            })
            .sum()
    }

    pub fn certificates(&self) -> impl Iterator<Item = &Certificate> {
        self.failures.iter().map(|f| &f.certificate)
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "theorem {} on {} (seed {}): {} instances, {} checks, {} failures ({} unexpected) in {:.2?}",
            self.theorem,
            self.family,
            self.seed,
            self.instances,
            self.checks(),
            self.failures.len(),
            self.unexpected().count(),
            self.wall_time
        )?;
        for r in &self.results {
            let tag = if r.goursat { "goursat" } else { "set" };
            match &r.outcome {
                Outcome::Verified { checks } => writeln!(f, "  {} [{tag}] verified ({checks} checks)", r.instance)?,
                Outcome::Counterexample { checks, certificates } => {
                    writeln!(f, "  {} [{tag}] counterexample after {checks} checks", r.instance)?;
                    for c in certificates {
                        writeln!(f, "    {c}")?;
                    }
                }
                Outcome::Skipped { reason } => writeln!(f, "  {} [{tag}] skipped: {reason}", r.instance)?,
            }
        }
        Ok(())
    }
}
