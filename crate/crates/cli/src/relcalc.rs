use std::path::PathBuf;

use clap::Subcommand;
use goursat_core::relcalc::{self, is_equivalence, permutability, EquivRelation, EquivalenceReport, FinMap, Relation};
use serde::{Deserialize, Serialize};

use crate::input::read;
use crate::output::{compact, Output};

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Diagram-order composite: x (R;S) z iff x R y and y S z.
    Compose {
        #[arg(short = 'R', value_name = "FILE")]
        r: PathBuf,
        #[arg(short = 'S', value_name = "FILE")]
        s: PathBuf,
    },
    /// Regular image f(R) of a relation along a map.
    Image {
        #[arg(long = "map", short = 'f', value_name = "FILE")]
        map: PathBuf,
        #[arg(short = 'R', value_name = "FILE")]
        r: PathBuf,
    },
    /// Compares the alternating composites R S R … and S R S … of length n.
    Perm {
        #[arg(long, short = 'n', default_value_t = 3)]
        n: usize,
        #[arg(short = 'R', value_name = "FILE")]
        r: PathBuf,
        #[arg(short = 'S', value_name = "FILE")]
        s: PathBuf,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageOutput {
    pub image: Relation,
    pub equivalence: EquivalenceReport,
}

/// The word `R S R …` of length `n`, starting with `first`.
fn word(first: char, second: char, n: usize) -> String {
    (0..n).map(|k| if k % 2 == 0 { first } else { second }).collect()
}

pub fn run(cmd: &Cmd) -> anyhow::Result<Output> {
    match cmd {
        Cmd::Compose { r, s } => {
            let (r, s): (Relation, Relation) = (read(r)?, read(s)?);
            let out = relcalc::compose(&r, &s)?;
            let text = format!("{} pairs: {}", out.len(), compact(&out.pairs().collect::<Vec<_>>()));
            Output::new(&out, text)
        }
        Cmd::Image { map, r } => {
            let (f, r): (FinMap, Relation) = (read(map)?, read(r)?);
            let image = relcalc::regular_image(&f, &r)?;
            let equivalence = is_equivalence(&image)?;
            let text = format!(
                "image {}\n{}",
                compact(&image.pairs().collect::<Vec<_>>()),
                equivalence.describe()
            );
            Output::new(&ImageOutput { image, equivalence }, text)
        }
        Cmd::Perm { n, r, s } => {
            let (r, s): (EquivRelation, EquivRelation) = (read(r)?, read(s)?);
            let report = permutability(&r, &s, *n)?;
            let (lhs, rhs) = (word('R', 'S', *n), word('S', 'R', *n));
            let text = match report.witness {
                None => format!("{lhs} = {rhs}"),
                Some((x, y)) => format!("{lhs} ≠ {rhs}, witness ({x},{y})"),
            };
            Output::new(&report, text)
        }
    }
}
