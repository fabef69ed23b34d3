use std::path::PathBuf;

use anyhow::bail;
use clap::Subcommand;
use goursat_core::connector::Connector;
use goursat_core::internal::{
    groupoid_from_connector, groupoid_structures, induced_structure_search, quotient_rg, verify_category,
    verify_groupoid, GraphCheck, InducedReport, InternalGroupoid, InternalStructure,
};
use goursat_core::relcalc::EquivRelation;
use serde::{Deserialize, Serialize};

use crate::input::read;
use crate::output::{compact, Output};

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Checks the category or groupoid axioms of a structure file; for a bare
    /// graph, counts its groupoid structures.
    Verify {
        #[arg(short = 'g', long = "graph", value_name = "FILE")]
        graph: PathBuf,
        /// Stop counting groupoid structures after this many.
        #[arg(long, default_value_t = 16)]
        limit: usize,
    },
    /// Builds the groupoid induced by a connector on Eq(d) and Eq(c).
    FromConnector {
        #[arg(short = 'g', long = "graph", value_name = "FILE")]
        graph: PathBuf,
        #[arg(short = 'p', long = "connector", value_name = "FILE")]
        connector: PathBuf,
    },
    /// Pushes a groupoid along the levelwise quotient by θ1 on arrows and θ0
    /// on objects.
    Quotient {
        #[arg(short = 'g', long = "graph", value_name = "FILE")]
        graph: PathBuf,
        #[arg(long, value_name = "FILE")]
        theta1: PathBuf,
        #[arg(long, value_name = "FILE")]
        theta0: PathBuf,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerifyOutput {
    Graph { groupoid_structures: usize, limit: usize },
    Category { check: GraphCheck },
    Groupoid { check: GraphCheck },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientOutput {
    /// The quotient graph.
    pub target: InternalStructure,
    /// The induced report; its structure travels in `groupoid`.
    pub report: InducedReport,
    pub groupoid: Option<InternalGroupoid>,
}

fn check_text(what: &str, check: &GraphCheck) -> String {
    match &check.violation {
        None => format!("{what}: all axioms hold"),
        Some(v) => format!("not a {what}: {v}"),
    }
}

pub fn run(cmd: &Cmd) -> anyhow::Result<Output> {
    match cmd {
        Cmd::Verify { graph, limit } => {
            let (out, text) = match read::<InternalStructure>(graph)? {
                InternalStructure::Graph(g) => {
                    let n = groupoid_structures(&g, *limit)?.len();
                    let text = format!("reflexive graph with {n} groupoid structure(s) (limit {limit})");
                    (VerifyOutput::Graph { groupoid_structures: n, limit: *limit }, text)
                }
                InternalStructure::Category(c) => {
                    let check = verify_category(&c)?;
                    let text = check_text("category", &check);
                    (VerifyOutput::Category { check }, text)
                }
                InternalStructure::Groupoid(g) => {
                    let check = verify_groupoid(&g)?;
                    let text = check_text("groupoid", &check);
                    (VerifyOutput::Groupoid { check }, text)
                }
            };
            Output::new(&out, text)
        }
        Cmd::FromConnector { graph, connector } => {
            let s: InternalStructure = read(graph)?;
            let p: Connector = read(connector)?;
            let grpd = groupoid_from_connector(s.graph(), &p)?;
            let text = format!("groupoid {}", compact(&grpd));
            Output::new(&grpd, text)
        }
        Cmd::Quotient { graph, theta1, theta0 } => {
            let InternalStructure::Groupoid(grpd) = read::<InternalStructure>(graph)? else {
                bail!("{} does not describe a groupoid (needs `m` and `i`)", graph.display());
            };
            let (t1, t0): (EquivRelation, EquivRelation) = (read(theta1)?, read(theta0)?);
            let (dst, mor) = quotient_rg(grpd.graph(), &t1, &t0)?;
            let mut report = induced_structure_search(&dst, &grpd, &mor)?;
            let groupoid = report.structure.take();
            let text = match (&groupoid, &report.conflict, report.unlifted, &report.violation) {
                (Some(g), ..) => format!("induced groupoid {}", compact(g)),
                (None, Some(c), ..) => format!(
                    "not well defined: pair {:?} has lifts {:?} composing to {:?}",
                    c.pair, c.lifts, c.images
                ),
                (None, None, Some(pair), _) => format!("not well defined: pair {pair:?} has no composable lift"),
                (None, None, None, Some(v)) => format!("induced composition is not a groupoid: {v}"),
                (None, None, None, None) => "induced composition is not a groupoid".to_string(),
            };
            let out = QuotientOutput {
                target: InternalStructure::Graph(dst),
                report,
                groupoid,
            };
            Output::new(&out, text)
        }
    }
}
