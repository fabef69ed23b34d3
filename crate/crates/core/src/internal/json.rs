use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{InternalCategory, InternalGroupoid, Mode, ReflexiveGraph};
use crate::algebra::{bare_set, FinAlgebra};
use crate::error::{Error, Result};
use crate::relcalc::FinMap;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Level {
    Size(usize),
    Algebra(FinAlgebra),
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    mode: Mode,
    #[serde(rename = "X0")]
    x0: Level,
    #[serde(rename = "X1")]
    x1: Level,
    d: Vec<usize>,
    c: Vec<usize>,
    e: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<Vec<[usize; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    i: Option<Vec<usize>>,
}

/// A graph, category or groupoid read from the common JSON layout; which one
/// depends on whether `m` and `i` are present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InternalStructure {
    Graph(ReflexiveGraph),
    Category(InternalCategory),
    Groupoid(InternalGroupoid),
}

impl InternalStructure {
    pub fn parse(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.try_into()
    }

    pub fn graph(&self) -> &ReflexiveGraph {
        match self {
            InternalStructure::Graph(g) => g,
            InternalStructure::Category(c) => c.graph(),
            InternalStructure::Groupoid(g) => g.graph(),
        }
    }
}

fn level(mode: Mode, l: Level) -> Result<FinAlgebra> {
    match (mode, l) {
        (_, Level::Size(n)) => bare_set(n),
        (Mode::Algebra, Level::Algebra(a)) => Ok(a),
        (Mode::Set, Level::Algebra(a)) if a.is_bare_set() => Ok(a),
        (Mode::Set, Level::Algebra(_)) => Err(Error::Parse("set-mode graphs take carrier sizes, not algebras".into())),
    }
}

impl TryFrom<GraphFile> for InternalStructure {
    type Error = Error;

    fn try_from(f: GraphFile) -> Result<Self> {
        let x0 = level(f.mode, f.x0)?;
        let x1 = level(f.mode, f.x1)?;
        let (n0, n1) = (x0.size(), x1.size());
        let graph = ReflexiveGraph::new(x0, x1, FinMap::new(n0, f.d)?, FinMap::new(n0, f.c)?, FinMap::new(n1, f.e)?)?;
        if graph.mode() != f.mode {
            return Err(Error::Parse(format!("declared mode {:?} does not match the carriers", f.mode)));
        }
        let Some(entries) = f.m else {
            return match f.i {
                None => Ok(InternalStructure::Graph(graph)),
                Some(_) => Err(Error::Parse("`i` given without `m`".into())),
            };
        };
        let mut m = vec![None; graph.composable().len()];
        for [g, h, k] in entries {
            let idx = graph
                .pair_index(g, h)
                .ok_or_else(|| Error::Malformed(format!("({g},{h}) is not a composable pair")))?;
            if m[idx].replace(k).is_some_and(|old| old != k) {
                return Err(Error::Malformed(format!("conflicting entries for ({g},{h})")));
            }
        }
        if let Some(idx) = m.iter().position(Option::is_none) {
            let (g, h) = graph.composable()[idx];
            return Err(Error::Malformed(format!("composition missing at ({g},{h})")));
        }
        let cat = InternalCategory::new(graph, m.into_iter().map(Option::unwrap).collect())?;
        match f.i {
            None => Ok(InternalStructure::Category(cat)),
            Some(i) => {
                let n = cat.graph().arrows();
                Ok(InternalStructure::Groupoid(InternalGroupoid::new(cat, FinMap::new(n, i)?)?))
            }
        }
    }
}

fn graph_file(g: &ReflexiveGraph, m: Option<Vec<[usize; 3]>>, i: Option<Vec<usize>>) -> GraphFile {
    let level = |a: &FinAlgebra| match g.mode() {
        Mode::Set => Level::Size(a.size()),
        Mode::Algebra => Level::Algebra(a.clone()),
    };
    GraphFile {
        mode: g.mode(),
        x0: level(g.x0()),
        x1: level(g.x1()),
        d: g.d().table().to_vec(),
        c: g.c().table().to_vec(),
        e: g.e().table().to_vec(),
        m,
        i,
    }
}

fn entries(c: &InternalCategory) -> Vec<[usize; 3]> {
    c.entries().map(|(g, h, k)| [g, h, k]).collect()
}

impl Serialize for ReflexiveGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        graph_file(self, None, None).serialize(s)
    }
}

impl Serialize for InternalCategory {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        graph_file(self.graph(), Some(entries(self)), None).serialize(s)
    }
}

impl Serialize for InternalGroupoid {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let i = self.inverse().table().to_vec();
        graph_file(self.graph(), Some(entries(self.category())), Some(i)).serialize(s)
    }
}

impl Serialize for InternalStructure {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            InternalStructure::Graph(g) => g.serialize(s),
            InternalStructure::Category(c) => c.serialize(s),
            InternalStructure::Groupoid(g) => g.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for InternalStructure {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        GraphFile::deserialize(d)?.try_into().map_err(D::Error::custom)
    }
}

impl<'de> Deserialize<'de> for InternalGroupoid {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match InternalStructure::deserialize(d)? {
            InternalStructure::Groupoid(g) => Ok(g),
            _ => Err(D::Error::custom("expected a groupoid with `m` and `i`")),
        }
    }
}
