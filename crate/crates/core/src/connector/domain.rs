use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_size, Error, Result};
use crate::relcalc::EquivRelation;

pub type Triple = (usize, usize, usize);

/// The pullback `R ×_X S`: triples `(x, y, z)` with `x R y` and `y S z`, in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PullbackDomain {
    r: EquivRelation,
    s: EquivRelation,
    triples: Vec<Triple>,
    index: Vec<usize>,
}

const ABSENT: usize = usize::MAX;

impl PullbackDomain {
    pub fn new(r: &EquivRelation, s: &EquivRelation) -> Result<Self> {
        check_size("pullback domain", r.size(), s.size())?;
        let n = r.size();
        let mut triples = Vec::new();
        let mut index = vec![ABSENT; n * n * n];
        for x in 0..n {
            for y in r.class(x) {
                for z in s.class(y) {
                    index[(x * n + y) * n + z] = triples.len();
                    triples.push((x, y, z));
                }
            }
        }
        Ok(PullbackDomain {
            r: r.clone(),
            s: s.clone(),
            triples,
            index,
        })
    }

    /// Size of the base carrier `X`.
    pub fn size(&self) -> usize {
        self.r.size()
    }

    pub fn r(&self) -> &EquivRelation {
        &self.r
    }

    pub fn s(&self) -> &EquivRelation {
        &self.s
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    #[inline]
    pub fn index_of(&self, x: usize, y: usize, z: usize) -> Option<usize> {
        let n = self.size();
        if x >= n || y >= n || z >= n {
            return None;
        }
        match self.index[(x * n + y) * n + z] {
            ABSENT => None,
            i => Some(i),
        }
    }

    pub fn contains(&self, x: usize, y: usize, z: usize) -> bool {
        self.index_of(x, y, z).is_some()
    }
}

/// A total table `p` on `R ×_X S`, stored in domain order. Construction does
/// not check the connector axioms; see [`crate::connector::verify_connector`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connector {
    domain: PullbackDomain,
    table: Vec<usize>,
}

impl Connector {
    pub fn new(domain: PullbackDomain, table: Vec<usize>) -> Result<Self> {
        if table.len() != domain.len() {
            return Err(Error::Malformed(format!(
                "connector table has {} entries for a domain of {} triples",
                table.len(),
                domain.len()
            )));
        }
        if let Some(&v) = table.iter().find(|&&v| v >= domain.size()) {
            return Err(Error::OutOfRange {
                index: v,
                size: domain.size(),
            });
        }
        Ok(Connector { domain, table })
    }

    pub fn from_fn(r: &EquivRelation, s: &EquivRelation, p: impl Fn(usize, usize, usize) -> usize) -> Result<Self> {
        let domain = PullbackDomain::new(r, s)?;
        let table = domain.triples().iter().map(|&(x, y, z)| p(x, y, z)).collect();
        Connector::new(domain, table)
    }

    /// Builds from `[x, y, z, p]` rows; every domain triple must be listed
    /// exactly once.
    pub fn from_entries(r: &EquivRelation, s: &EquivRelation, entries: &[[usize; 4]]) -> Result<Self> {
        let domain = PullbackDomain::new(r, s)?;
        let mut table = vec![None; domain.len()];
        for &[x, y, z, p] in entries {
            let i = domain
                .index_of(x, y, z)
                .ok_or_else(|| Error::InvalidConnector(format!("({x},{y},{z}) is not in R x_X S")))?;
            if table[i].replace(p).is_some_and(|old| old != p) {
                return Err(Error::InvalidConnector(format!("two values given for ({x},{y},{z})")));
            }
        }
        let table = table
            .into_iter()
            .zip(domain.triples())
            .map(|(v, &t)| v.ok_or(Error::IncompleteTable(t)))
            .collect::<Result<Vec<_>>>()?;
        Connector::new(domain, table)
    }

    pub fn domain(&self) -> &PullbackDomain {
        &self.domain
    }

    pub fn r(&self) -> &EquivRelation {
        self.domain.r()
    }

    pub fn s(&self) -> &EquivRelation {
        self.domain.s()
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn get(&self, x: usize, y: usize, z: usize) -> Option<usize> {
        self.domain.index_of(x, y, z).map(|i| self.table[i])
    }

    /// Value on a triple known to lie in the domain.
    #[inline]
    pub fn at(&self, x: usize, y: usize, z: usize) -> usize {
        self.get(x, y, z).expect("triple outside R x_X S")
    }

    pub fn entries(&self) -> impl Iterator<Item = (Triple, usize)> + '_ {
        self.domain.triples().iter().copied().zip(self.table.iter().copied())
    }

    /// The opposite connector `(x, y, z) ↦ p(z, y, x)`, between `S` and `R`.
    pub fn mirror(&self) -> Result<Connector> {
        Connector::from_fn(self.s(), self.r(), |x, y, z| self.at(z, y, x))
    }
}

impl fmt::Display for Connector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "connector between R = {} and S = {}", self.r(), self.s())?;
        for ((x, y, z), p) in self.entries() {
            writeln!(f, "  p({x},{y},{z}) = {p}")?;
        }
        Ok(())
    }
}

/// Partitions are written as a bare list of blocks; the object form
/// `{"partition": ..}` is accepted too.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub(super) enum PartitionJson {
    Blocks(Vec<Vec<usize>>),
    Equiv(EquivRelation),
}

impl PartitionJson {
    pub(super) fn into_equiv(self) -> Result<EquivRelation> {
        match self {
            PartitionJson::Blocks(blocks) => {
                EquivRelation::from_partition(blocks.iter().map(Vec::len).sum(), &blocks)
            }
            PartitionJson::Equiv(e) => Ok(e),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ConnectorJson {
    #[serde(rename = "R")]
    r: PartitionJson,
    #[serde(rename = "S")]
    s: PartitionJson,
    table: Vec<[usize; 4]>,
}

impl Serialize for Connector {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ConnectorJson {
            r: PartitionJson::Blocks(self.r().blocks()),
            s: PartitionJson::Blocks(self.s().blocks()),
            table: self.entries().map(|((x, y, z), p)| [x, y, z, p]).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Connector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ConnectorJson::deserialize(d)?;
        let r = raw.r.into_equiv().map_err(D::Error::custom)?;
        let s = raw.s.into_equiv().map_err(D::Error::custom)?;
        Connector::from_entries(&r, &s, &raw.table).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(n: usize, blocks: &[&[usize]]) -> EquivRelation {
        let b: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
        EquivRelation::from_partition(n, &b).unwrap()
    }

    /// Oracle: triple loop with membership tests.
    fn brute_triples(r: &EquivRelation, s: &EquivRelation) -> Vec<Triple> {
        let n = r.size();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if r.related(x, y) && s.related(y, z) {
                        out.push((x, y, z));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn domain_examples() {
        let d = PullbackDomain::new(&EquivRelation::discrete(3), &EquivRelation::discrete(3)).unwrap();
        assert_eq!(d.triples(), &[(0, 0, 0), (1, 1, 1), (2, 2, 2)]);
        assert_eq!(PullbackDomain::new(&EquivRelation::full(2), &EquivRelation::full(2)).unwrap().len(), 8);

        let r = part(3, &[&[0, 1], &[2]]);
        let s = part(3, &[&[0, 2], &[1]]);
        let d = PullbackDomain::new(&r, &s).unwrap();
        assert_eq!(d.triples(), brute_triples(&r, &s).as_slice());
        assert_eq!(d.triples(), &[(0, 0, 0), (0, 0, 2), (0, 1, 1), (1, 0, 0), (1, 0, 2), (1, 1, 1), (2, 2, 0), (2, 2, 2)]);
        assert!(d.contains(1, 0, 2) && !d.contains(2, 0, 0));
        assert!(PullbackDomain::new(&r, &EquivRelation::full(2)).is_err());
    }

    #[test]
    fn entries_must_cover_domain() {
        let d = EquivRelation::discrete(2);
        let err = Connector::from_entries(&d, &d, &[[0, 0, 0, 0]]).unwrap_err();
        assert_eq!(err, Error::IncompleteTable((1, 1, 1)));
        assert!(Connector::from_entries(&d, &d, &[[0, 1, 0, 0]]).is_err());
        let ok = Connector::from_entries(&d, &d, &[[1, 1, 1, 1], [0, 0, 0, 0]]).unwrap();
        assert_eq!(ok.table(), &[0, 1]);
    }

    #[test]
    fn json_round_trip() {
        let r = part(3, &[&[0, 1], &[2]]);
        let p = Connector::from_fn(&r, &r, |x, y, z| if x == y { z } else { x }).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        assert!(text.starts_with(r#"{"R":[[0,1],[2]],"S":[[0,1],[2]],"table":[[0,0,0,0]"#));
        let back: Connector = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        let object_form = r#"{"R": {"partition": [[0]]}, "S": [[0]], "table": [[0, 0, 0, 0]]}"#;
        assert!(serde_json::from_str::<Connector>(object_form).is_ok());
    }
}
