use serde::{Deserialize, Serialize};

use super::equiv::EquivRelation;
use super::relation::Relation;
use crate::error::{check_index, check_size, Error, Result};

/// A total function between finite carriers, given by its table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MapFile", into = "MapFile")]
pub struct FinMap {
    dst: usize,
    table: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct MapFile {
    src: usize,
    dst: usize,
    table: Vec<usize>,
}

impl TryFrom<MapFile> for FinMap {
    type Error = Error;

    fn try_from(m: MapFile) -> Result<Self> {
        check_size("map table length", m.src, m.table.len())?;
        FinMap::new(m.dst, m.table)
    }
}

impl From<FinMap> for MapFile {
    fn from(m: FinMap) -> Self {
        MapFile {
            src: m.table.len(),
            dst: m.dst,
            table: m.table,
        }
    }
}

impl FinMap {
    pub fn new(dst: usize, table: Vec<usize>) -> Result<Self> {
        for &y in &table {
            check_index(y, dst)?;
        }
        Ok(FinMap { dst, table })
    }

    pub fn identity(n: usize) -> Self {
        FinMap {
            dst: n,
            table: (0..n).collect(),
        }
    }

    pub fn constant(src: usize, dst: usize, value: usize) -> Result<Self> {
        check_index(value, dst)?;
        Ok(FinMap {
            dst,
            table: vec![value; src],
        })
    }

    pub fn src(&self) -> usize {
        self.table.len()
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// Diagram-order composite: first `self`, then `next`.
    pub fn then(&self, next: &FinMap) -> Result<FinMap> {
        check_size("map composite", self.dst, next.src())?;
        Ok(FinMap {
            dst: next.dst,
            table: self.table.iter().map(|&x| next.table[x]).collect(),
        })
    }

    /// The graph `⟨1, f⟩` as a relation from the source to the target.
    pub fn graph(&self) -> Relation {
        Relation::from_pairs(self.src(), self.dst, self.table.iter().copied().enumerate())
            .expect("map entries are in range")
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.dst];
        self.table.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.dst];
        for &y in &self.table {
            seen[y] = true;
        }
        seen.into_iter().all(|b| b)
    }

    /// Equivalence relation `{(x, x') | f(x) = f(x')}`.
    pub fn kernel_pair(&self) -> EquivRelation {
        EquivRelation::from_key(self.src(), |x| self.table[x])
    }

    /// Factor `f = i ∘ q` with `q` surjective and `i` injective. The image
    /// carrier is indexed by first occurrence along the source.
    pub fn image_factorization(&self) -> (FinMap, FinMap) {
        let mut slot = vec![usize::MAX; self.dst];
        let mut inclusion = Vec::new();
        let mut quotient = Vec::with_capacity(self.src());
        for &y in &self.table {
            if slot[y] == usize::MAX {
                slot[y] = inclusion.len();
                inclusion.push(y);
            }
            quotient.push(slot[y]);
        }
        let k = inclusion.len();
        (
            FinMap {
                dst: k,
                table: quotient,
            },
            FinMap {
                dst: self.dst,
                table: inclusion,
            },
        )
    }

    /// A section `s` with `f ∘ s = 1`, choosing the least preimage.
    pub fn least_section(&self) -> Option<FinMap> {
        let mut table = vec![usize::MAX; self.dst];
        for (x, &y) in self.table.iter().enumerate().rev() {
            table[y] = x;
        }
        if table.contains(&usize::MAX) {
            return None;
        }
        Some(FinMap {
            dst: self.src(),
            table,
        })
    }
}
