//! The theorem harness. Each check implements [`TheoremCheck`] and is looked
//! up by id in a [`Registry`]. Running a check over an [`InstanceFamily`]
//! verifies it on Goursat instances and collects [`Certificate`]s elsewhere.

mod certificate;
mod checks;
mod cube;
mod enumerate;
mod family;
mod graphs;
mod report;
#[cfg(test)]
mod props;

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

pub use certificate::Certificate;
pub use checks::{Ckp, ConnectorQuotient, CubeCheck, GoursatPushout, GrpdClosure, HmModularity};
pub use cube::Cube;
pub use family::{FamilyKind, Instance, InstanceFamily};
pub use graphs::{group_graphs, set_graphs};
pub use report::{Failure, InstanceReport, Outcome, TheoremReport};

use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOptions {
    /// Keep searching after the first certificate.
    pub collect_all: bool,
    /// Connectors tried per pair of relations.
    pub connector_limit: usize,
    /// Largest carrier on which cubes are enumerated.
    pub cube_max: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            collect_all: false,
            connector_limit: 4,
            cube_max: 4,
        }
    }
}

/// What one check found on one instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Findings {
    pub checks: usize,
    pub certificates: Vec<Certificate>,
    pub skipped: Option<String>,
}

impl Findings {
    pub fn skipped(reason: impl Into<String>) -> Self {
        Findings {
            skipped: Some(reason.into()),
            ..Findings::default()
        }
    }

    /// Stores `c`; breaks unless all certificates are wanted.
    pub fn record(&mut self, c: Certificate, opts: &CheckOptions) -> ControlFlow<()> {
        self.certificates.push(c);
        if opts.collect_all {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    }
}

pub trait TheoremCheck: Send + Sync {
    fn id(&self) -> &'static str;
    fn statement(&self) -> &'static str;
    fn check(&self, instance: &Instance, opts: &CheckOptions) -> Result<Findings>;
}

/// Checks by id, in registration order.
#[derive(Default)]
pub struct Registry {
    checks: Vec<Box<dyn TheoremCheck>>,
}

impl Registry {
    pub fn new() -> Self {
        Registry::default()
    }

    pub fn standard() -> Self {
        let mut r = Registry::new();
        r.register(Box::new(Ckp));
        r.register(Box::new(GoursatPushout));
        r.register(Box::new(CubeCheck));
        r.register(Box::new(ConnectorQuotient));
        r.register(Box::new(GrpdClosure));
        r.register(Box::new(HmModularity));
        r
    }

    /// Adds `check`, replacing any check with the same id.
    pub fn register(&mut self, check: Box<dyn TheoremCheck>) {
        match self.checks.iter_mut().find(|c| c.id() == check.id()) {
            Some(slot) => *slot = check,
            None => self.checks.push(check),
        }
    }

    pub fn get(&self, id: &str) -> Option<&dyn TheoremCheck> {
        self.checks.iter().find(|c| c.id() == id).map(|c| c.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn TheoremCheck> {
        self.checks.iter().map(|c| c.as_ref())
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.id()).collect()
    }
}

/// Runs `check` on every instance of `family` in parallel. Results keep the
/// enumeration order; unless `collect_all` is set, instances after the first
/// one with a certificate are dropped.
pub fn run_check(check: &dyn TheoremCheck, family: &InstanceFamily, opts: &CheckOptions) -> Result<TheoremReport> {
    let start = Instant::now();
    let instances = family.instances()?;
    let first_failure = AtomicUsize::new(usize::MAX);
    let found: Vec<Option<Result<Findings>>> = instances
        .par_iter()
        .enumerate()
        .map(|(k, inst)| {
            if !opts.collect_all && k > first_failure.load(Ordering::Relaxed) {
                return None;
            }
            let res = check.check(inst, opts);
            if matches!(&res, Ok(f) if !f.certificates.is_empty()) || res.is_err() {
                first_failure.fetch_min(k, Ordering::Relaxed);
            }
            Some(res)
        })
        .collect();
    let cut = if opts.collect_all {
        instances.len()
    } else {
        first_failure.into_inner().saturating_add(1).min(instances.len())
    };
    let mut results = Vec::with_capacity(cut);
    let mut failures = Vec::new();
    for (inst, f) in instances.iter().zip(found).take(cut) {
        let f = f.expect("instances before the cut are always checked")?;
        let outcome = match (f.skipped, f.certificates.is_empty()) {
            (Some(reason), _) => Outcome::Skipped { reason },
            (None, true) => Outcome::Verified { checks: f.checks },
            (None, false) => {
                failures.extend(f.certificates.iter().map(|c| Failure {
                    instance: inst.name.clone(),
                    expected: !inst.is_goursat(),
                    certificate: c.clone(),
                }));
                Outcome::Counterexample {
                    checks: f.checks,
                    certificates: f.certificates,
                }
            }
        };
        results.push(InstanceReport {
            instance: inst.name.clone(),
            size: inst.algebra.size(),
            goursat: inst.is_goursat(),
            outcome,
        });
    }
    Ok(TheoremReport {
        theorem: check.id().to_string(),
        family: family.label(),
        seed: family.seed,
        instances: results.len(),
        results,
        failures,
        wall_time: start.elapsed(),
    })
}

impl Registry {
    pub fn run(&self, id: &str, family: &InstanceFamily, opts: &CheckOptions) -> Result<TheoremReport> {
        let check = self
            .get(id)
            .ok_or_else(|| crate::error::Error::InvalidArgument(format!("unknown theorem `{id}`")))?;
        run_check(check, family, opts)
    }

    pub fn run_all(&self, family: &InstanceFamily, opts: &CheckOptions) -> Result<Vec<TheoremReport>> {
        self.iter().map(|c| run_check(c, family, opts)).collect()
    }
}
