use std::path::PathBuf;

use anyhow::bail;
use clap::{Args, Subcommand};
use goursat_core::theorems::{CheckOptions, FamilyKind, Instance, InstanceFamily, Registry, TheoremReport};
use serde::{Deserialize, Serialize};

use crate::input::algebra;
use crate::output::Output;
use crate::{EXIT_COUNTEREXAMPLE, EXIT_OK};

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Runs one check over an instance family.
    Run {
        /// Check id, see `theorems list`.
        id: String,
        #[command(flatten)]
        opts: HarnessArgs,
    },
    /// Runs every registered check over an instance family.
    All {
        #[command(flatten)]
        opts: HarnessArgs,
    },
    /// Lists the registered checks.
    List,
}

#[derive(Debug, Args)]
pub struct HarnessArgs {
    /// bare-set, cyclic, direct-product, symmetric, small-groups or custom.
    #[arg(long, default_value = "cyclic")]
    family: FamilyKind,
    /// Largest carrier size (group order for group families).
    #[arg(long = "max-size", visible_alias = "max-order", default_value_t = 8)]
    max_size: usize,
    /// Seed for instance sampling; recorded in the report.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Check only this many instances, drawn with the seeded stream.
    #[arg(long)]
    sample: Option<usize>,
    /// Keep going after the first certificate.
    #[arg(long)]
    collect_all: bool,
    /// Connectors examined per pair of relations.
    #[arg(long, default_value_t = CheckOptions::default().connector_limit)]
    limit: usize,
    /// Largest carrier on which the cube check runs.
    #[arg(long, default_value_t = CheckOptions::default().cube_max)]
    cube_max: usize,
    /// Algebra files for the custom family; implies `--family custom`.
    #[arg(short = 'a', long = "algebra", value_name = "FILE")]
    algebras: Vec<PathBuf>,
}

impl HarnessArgs {
    fn family(&self) -> anyhow::Result<InstanceFamily> {
        let family = if self.family == FamilyKind::Custom || !self.algebras.is_empty() {
            if self.algebras.is_empty() {
                bail!("the custom family needs at least one --algebra file");
            }
            let instances = self
                .algebras
                .iter()
                .map(|p| algebra(p).map(|f| Instance::new(f.algebra, f.hm_terms)))
                .collect::<anyhow::Result<Vec<_>>>()?;
            InstanceFamily::custom(instances)
        } else {
            InstanceFamily::new(self.family, self.max_size)
        };
        Ok(family.with_seed(self.seed).with_sample(self.sample))
    }

    fn options(&self) -> CheckOptions {
        CheckOptions {
            collect_all: self.collect_all,
            connector_limit: self.limit,
            cube_max: self.cube_max,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremInfo {
    pub id: String,
    pub statement: String,
}

fn exit_code(reports: &[TheoremReport]) -> i32 {
    if reports.iter().all(TheoremReport::holds) {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    }
}

pub fn run(cmd: &Cmd) -> anyhow::Result<Output> {
    let registry = Registry::standard();
    match cmd {
        Cmd::Run { id, opts } => {
            if registry.get(id).is_none() {
                bail!("unknown theorem `{id}`; known: {}", registry.ids().join(", "));
            }
            let report = registry.run(id, &opts.family()?, &opts.options())?;
            let code = exit_code(std::slice::from_ref(&report));
            Ok(Output::new(&report, report.to_string())?.with_code(code))
        }
        Cmd::All { opts } => {
            let reports = registry.run_all(&opts.family()?, &opts.options())?;
            let text: String = reports.iter().map(ToString::to_string).collect();
            Ok(Output::new(&reports, text)?.with_code(exit_code(&reports)))
        }
        Cmd::List => {
            let infos: Vec<TheoremInfo> = registry
                .iter()
                .map(|c| TheoremInfo {
                    id: c.id().to_string(),
                    statement: c.statement().to_string(),
                })
                .collect();
            let text: String = infos.iter().map(|i| format!("{:<20} {}\n", i.id, i.statement)).collect();
            Output::new(&infos, text)
        }
    }
}
