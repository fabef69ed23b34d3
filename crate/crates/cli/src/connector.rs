use std::path::PathBuf;

use clap::{ArgGroup, Subcommand};
use goursat_core::connector::{
    centralizing_to_connector, connector_to_centralizing, find_connectors, find_connectors_in, image_connector,
    is_centralizing, verify_connector, CentralizingReport, Connector, ConnectorCheck, DoubleRelation,
};
use goursat_core::relcalc::{EquivRelation, FinMap};
use serde::{Deserialize, Serialize};

use crate::input::{algebra_opt, read};
use crate::output::{compact, Output};

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Searches for connectors between R and S, as homomorphisms when an
    /// algebra is given.
    Find {
        #[arg(short = 'R', value_name = "FILE")]
        r: PathBuf,
        #[arg(short = 'S', value_name = "FILE")]
        s: PathBuf,
        #[arg(short = 'a', long = "algebra", value_name = "FILE")]
        algebra: Option<PathBuf>,
        /// Stop after this many connectors.
        #[arg(long, default_value_t = 16)]
        limit: usize,
    },
    /// Checks the connector axioms, and compatibility when an algebra is given.
    Verify {
        #[arg(short = 'p', long = "connector", value_name = "FILE")]
        connector: PathBuf,
        #[arg(short = 'a', long = "algebra", value_name = "FILE")]
        algebra: Option<PathBuf>,
    },
    /// Converts a connector to its centralizing double relation or back.
    #[command(group(ArgGroup::new("input").required(true).args(["connector", "double"])))]
    Convert {
        #[arg(short = 'p', long = "connector", value_name = "FILE")]
        connector: Option<PathBuf>,
        #[arg(short = 'd', long = "double", value_name = "FILE")]
        double: Option<PathBuf>,
    },
    /// Pushes a connector along a surjective map onto f(R) and f(S).
    Image {
        #[arg(short = 'p', long = "connector", value_name = "FILE")]
        connector: PathBuf,
        #[arg(long = "map", short = 'f', value_name = "FILE")]
        map: PathBuf,
        /// Codomain algebra; the image must then be a homomorphism.
        #[arg(short = 'a', long = "algebra", value_name = "FILE")]
        algebra: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindOutput {
    pub count: usize,
    pub limit: usize,
    pub connectors: Vec<Connector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "to", rename_all = "snake_case")]
pub enum ConvertOutput {
    Double {
        double: DoubleRelation,
        centralizing: CentralizingReport,
    },
    Connector {
        connector: Connector,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageOutput {
    pub connector: Option<Connector>,
    pub error: Option<String>,
}

fn table_text(p: &Connector) -> String {
    compact(&p.entries().map(|((x, y, z), v)| [x, y, z, v]).collect::<Vec<_>>())
}

pub fn run(cmd: &Cmd) -> anyhow::Result<Output> {
    match cmd {
        Cmd::Find { r, s, algebra, limit } => {
            let (r, s): (EquivRelation, EquivRelation) = (read(r)?, read(s)?);
            let connectors = match algebra_opt(algebra.as_deref())? {
                Some(alg) => find_connectors_in(&alg, &r, &s, *limit)?,
                None => find_connectors(&r, &s, *limit)?,
            };
            let mut text = format!(
                "{} connector(s){}\n",
                connectors.len(),
                if connectors.len() == *limit { " (limit reached)" } else { "" }
            );
            for p in &connectors {
                text.push_str(&format!("  {}\n", table_text(p)));
            }
            let out = FindOutput {
                count: connectors.len(),
                limit: *limit,
                connectors,
            };
            Output::new(&out, text)
        }
        Cmd::Verify { connector, algebra } => {
            let p: Connector = read(connector)?;
            let check: ConnectorCheck = verify_connector(&p, algebra_opt(algebra.as_deref())?.as_ref())?;
            let text = match &check.violation {
                None => "connector: all axioms hold".to_string(),
                Some(v) => format!("not a connector: {v}"),
            };
            Output::new(&check, text)
        }
        Cmd::Convert { connector, double } => {
            let out = match (connector, double) {
                (Some(path), _) => {
                    let p: Connector = read(path)?;
                    let double = connector_to_centralizing(&p)?;
                    let centralizing = is_centralizing(&double);
                    ConvertOutput::Double { double, centralizing }
                }
                (None, Some(path)) => {
                    let d: DoubleRelation = read(path)?;
                    ConvertOutput::Connector {
                        connector: centralizing_to_connector(&d)?,
                    }
                }
                (None, None) => unreachable!("clap requires one input"),
            };
            let text = match &out {
                ConvertOutput::Double { double, centralizing } => format!(
                    "double relation with {} squares, {}\n{}",
                    double.len(),
                    if centralizing.holds { "centralizing" } else { "not centralizing" },
                    compact(double)
                ),
                ConvertOutput::Connector { connector } => format!("connector {}", table_text(connector)),
            };
            Output::new(&out, text)
        }
        Cmd::Image { connector, map, algebra } => {
            let p: Connector = read(connector)?;
            let f: FinMap = read(map)?;
            let codomain = algebra_opt(algebra.as_deref())?;
            let out = match image_connector(&f, &p, codomain.as_ref()) {
                Ok(q) => ImageOutput {
                    connector: Some(q),
                    error: None,
                },
                Err(e) => ImageOutput {
                    connector: None,
                    error: Some(e.to_string()),
                },
            };
            let text = match (&out.connector, &out.error) {
                (Some(q), _) => format!("image connector {}", table_text(q)),
                (None, Some(e)) => format!("no image connector: {e}"),
                (None, None) => unreachable!(),
            };
            Output::new(&out, text)
        }
    }
}
