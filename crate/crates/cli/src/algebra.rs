use std::path::PathBuf;

use anyhow::Context;
use clap::Subcommand;
use goursat_core::algebra::{
    all_congruences, check_goursat_congruences, group_hm_terms, modularity_of, quotient, verify_hm_terms, FinAlgebra,
    GoursatReport, HmCheck, HmTerms, ModularityReport,
};
use goursat_core::relcalc::{EquivRelation, FinMap};
use serde::{Deserialize, Serialize};

use crate::input::{algebra, read};
use crate::output::{compact, Output};

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Lists every congruence of an algebra.
    Congruences {
        #[arg(short = 'a', long = "algebra", value_name = "FILE")]
        algebra: PathBuf,
    },
    /// Quotient algebra and canonical map for a congruence.
    Quotient {
        #[arg(short = 'a', long = "algebra", value_name = "FILE")]
        algebra: PathBuf,
        #[arg(long, value_name = "FILE")]
        theta: PathBuf,
    },
    /// Checks Hagemann–Mitschke term tables: from --terms, the file's
    /// `hm_terms`, or the group terms when the algebra is a group.
    HmCheck {
        #[arg(short = 'a', long = "algebra", value_name = "FILE")]
        algebra: PathBuf,
        #[arg(long, value_name = "FILE")]
        terms: Option<PathBuf>,
    },
    /// Modularity of the congruence lattice and 3-permutability of all pairs.
    Modularity {
        #[arg(short = 'a', long = "algebra", value_name = "FILE")]
        algebra: PathBuf,
        /// Report every nonpermutable pair, not only the first.
        #[arg(long)]
        collect_all: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruencesOutput {
    pub algebra: String,
    pub size: usize,
    pub congruences: Vec<EquivRelation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientOutput {
    pub quotient: FinAlgebra,
    pub map: FinMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TermSource {
    Option,
    File,
    Group,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HmOutput {
    pub source: TermSource,
    pub check: HmCheck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularityOutput {
    pub modularity: ModularityReport,
    pub permutability: GoursatReport,
}

pub fn run(cmd: &Cmd) -> anyhow::Result<Output> {
    match cmd {
        Cmd::Congruences { algebra: path } => {
            let alg = algebra(path)?.algebra;
            let congruences: Vec<EquivRelation> = all_congruences(&alg)?.into_iter().map(|c| c.into_equiv()).collect();
            let mut text = format!("{alg}: {} congruences\n", congruences.len());
            for c in &congruences {
                text.push_str(&format!("  {}\n", compact(c)));
            }
            let out = CongruencesOutput {
                algebra: alg.name().to_string(),
                size: alg.size(),
                congruences,
            };
            Output::new(&out, text)
        }
        Cmd::Quotient { algebra: path, theta } => {
            let alg = algebra(path)?.algebra;
            let theta: EquivRelation = read(theta)?;
            let (q, f) = quotient(&alg, &theta)?;
            let out = QuotientOutput {
                quotient: q,
                map: f.into_map(),
            };
            let text = format!("{}\nmap {}", out.quotient, compact(out.map.table()));
            Output::new(&out, text)
        }
        Cmd::HmCheck { algebra: path, terms } => {
            let file = algebra(path)?;
            let (source, terms): (TermSource, HmTerms) = match (terms, file.hm_terms) {
                (Some(p), _) => (TermSource::Option, read(p)?),
                (None, Some(t)) => (TermSource::File, t),
                (None, None) => (
                    TermSource::Group,
                    group_hm_terms(&file.algebra).context("no terms given and the algebra is not a group")?,
                ),
            };
            let check = verify_hm_terms(&file.algebra, &terms)?;
            let text = match check.witness {
                None => format!("{}: terms satisfy all three identities", file.algebra),
                Some((id, x, y)) => format!("{}: {} fails at x={x}, y={y}", file.algebra, compact(&id)),
            };
            Output::new(&HmOutput { source, check }, text)
        }
        Cmd::Modularity { algebra: path, collect_all } => {
            let alg = algebra(path)?.algebra;
            let congs = all_congruences(&alg)?;
            let modularity = modularity_of(&congs)?;
            let permutability = check_goursat_congruences(&congs, *collect_all)?;
            let mut text = format!(
                "{alg}: {} congruences, {}\n",
                congs.len(),
                if modularity.modular { "modular" } else { "not modular" }
            );
            if let Some(p) = &modularity.pentagon {
                text.push_str(&format!("  pentagon {}\n", compact(p)));
            }
            text.push_str(&format!(
                "3-permutability: {} ({} pairs checked)\n",
                if permutability.holds { "holds" } else { "fails" },
                permutability.pairs_checked
            ));
            for f in &permutability.failures {
                text.push_str(&format!("  R={} S={} witness {:?}\n", compact(&f.r), compact(&f.s), f.witness));
            }
            Output::new(&ModularityOutput { modularity, permutability }, text)
        }
    }
}
