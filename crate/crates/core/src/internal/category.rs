use std::fmt;

use serde::{Deserialize, Serialize};

use super::ReflexiveGraph;
use crate::algebra::is_homomorphism;
use crate::error::{check_size, Error, Result};
use crate::relcalc::FinMap;

/// A reflexive graph with a composition `m(g, h) = g ∘ h`, defined on pairs
/// with `d(g) = c(h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalCategory {
    graph: ReflexiveGraph,
    /// Indexed like [`ReflexiveGraph::composable`].
    m: Vec<usize>,
}

impl InternalCategory {
    /// Checks only that `m` is a total table on the composable pairs; use
    /// [`verify_category`] for the axioms.
    pub fn new(graph: ReflexiveGraph, m: Vec<usize>) -> Result<Self> {
        check_size("composition table", graph.composable().len(), m.len())?;
        if let Some(&k) = m.iter().find(|&&k| k >= graph.arrows()) {
            return Err(Error::OutOfRange {
                index: k,
                size: graph.arrows(),
            });
        }
        Ok(InternalCategory { graph, m })
    }

    pub fn from_fn(graph: ReflexiveGraph, m: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let table = graph.composable().iter().map(|&(g, h)| m(g, h)).collect();
        InternalCategory::new(graph, table)
    }

    pub fn graph(&self) -> &ReflexiveGraph {
        &self.graph
    }

    pub fn table(&self) -> &[usize] {
        &self.m
    }

    /// `g ∘ h`, or `None` when `d(g) ≠ c(h)`.
    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.graph.pair_index(g, h).map(|i| self.m[i])
    }

    /// Triples `(g, h, g ∘ h)` over all composable pairs.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.graph.composable().iter().zip(&self.m).map(|(&(g, h), &k)| (g, h, k))
    }

    /// The two-sided inverse of every arrow, if all exist.
    pub fn inverses(&self) -> Option<FinMap> {
        let gr = &self.graph;
        let (d, c, e) = (gr.d(), gr.c(), gr.e());
        let table = (0..gr.arrows())
            .map(|g| {
                (0..gr.arrows()).find(|&k| {
                    self.compose(k, g) == Some(e.apply(d.apply(g))) && self.compose(g, k) == Some(e.apply(c.apply(g)))
                })
            })
            .collect::<Option<Vec<_>>>()?;
        FinMap::new(gr.arrows(), table).ok()
    }
}

/// An internal category together with an inversion `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalGroupoid {
    category: InternalCategory,
    i: FinMap,
}

impl InternalGroupoid {
    pub fn new(category: InternalCategory, i: FinMap) -> Result<Self> {
        let n = category.graph().arrows();
        if i.src() != n || i.dst() != n {
            return Err(Error::Malformed(format!("i must map X1 (size {n}) to itself")));
        }
        Ok(InternalGroupoid { category, i })
    }

    /// The groupoid structure of a category in which every arrow is invertible.
    pub fn from_category(category: InternalCategory) -> Option<Self> {
        let i = category.inverses()?;
        Some(InternalGroupoid { category, i })
    }

    pub fn category(&self) -> &InternalCategory {
        &self.category
    }

    pub fn graph(&self) -> &ReflexiveGraph {
        self.category.graph()
    }

    pub fn inverse(&self) -> &FinMap {
        &self.i
    }

    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.category.compose(g, h)
    }
}

/// First failing category or groupoid law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum GraphViolation {
    /// `d(g ∘ h) ≠ d(h)`.
    Domain { g: usize, h: usize, value: usize },
    /// `c(g ∘ h) ≠ c(g)`.
    Codomain { g: usize, h: usize, value: usize },
    /// `e(c(g)) ∘ g ≠ g`.
    LeftUnit { g: usize, value: usize },
    /// `g ∘ e(d(g)) ≠ g`.
    RightUnit { g: usize, value: usize },
    /// `f ∘ (g ∘ h) ≠ (f ∘ g) ∘ h`.
    Associativity {
        f: usize,
        g: usize,
        h: usize,
        lhs: usize,
        rhs: usize,
    },
    /// `d(i(g)) ≠ c(g)`.
    InverseDomain { g: usize, value: usize },
    /// `c(i(g)) ≠ d(g)`.
    InverseCodomain { g: usize, value: usize },
    /// `i(g) ∘ g ≠ e(d(g))`.
    LeftInverse { g: usize, value: usize },
    /// `g ∘ i(g) ≠ e(c(g))`.
    RightInverse { g: usize, value: usize },
    /// `m` or `i` fails to preserve `op`; `args` are pair indices for `m`
    /// and arrows for `i`.
    Homomorphism {
        map: String,
        op: String,
        args: Vec<usize>,
    },
}

impl fmt::Display for GraphViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GraphViolation::*;
        match self {
            Domain { g, h, value } => write!(f, "d({g}∘{h}) = d({value}) differs from d({h})"),
            Codomain { g, h, value } => write!(f, "c({g}∘{h}) = c({value}) differs from c({g})"),
            LeftUnit { g, value } => write!(f, "left unit law fails at {g}: e(c({g}))∘{g} = {value}"),
            RightUnit { g, value } => write!(f, "right unit law fails at {g}: {g}∘e(d({g})) = {value}"),
            Associativity { f: a, g, h, lhs, rhs } => {
                write!(f, "associativity fails at ({a},{g},{h}): {a}∘({g}∘{h}) = {lhs} but ({a}∘{g})∘{h} = {rhs}")
            }
            InverseDomain { g, value } => write!(f, "d(i({g})) = d({value}) differs from c({g})"),
            InverseCodomain { g, value } => write!(f, "c(i({g})) = c({value}) differs from d({g})"),
            LeftInverse { g, value } => write!(f, "i({g})∘{g} = {value} is not the identity at d({g})"),
            RightInverse { g, value } => write!(f, "{g}∘i({g}) = {value} is not the identity at c({g})"),
            Homomorphism { map, op, args } => write!(f, "{map} does not preserve `{op}` at {args:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphCheck {
    pub holds: bool,
    pub violation: Option<GraphViolation>,
}

impl GraphCheck {
    fn from(violation: Option<GraphViolation>) -> Self {
        GraphCheck {
            holds: violation.is_none(),
            violation,
        }
    }
}

fn category_violation(cat: &InternalCategory) -> Result<Option<GraphViolation>> {
    let gr = cat.graph();
    let (d, c, e) = (gr.d(), gr.c(), gr.e());
    for (g, h, value) in cat.entries() {
        if d.apply(value) != d.apply(h) {
            return Ok(Some(GraphViolation::Domain { g, h, value }));
        }
        if c.apply(value) != c.apply(g) {
            return Ok(Some(GraphViolation::Codomain { g, h, value }));
        }
    }
    for g in 0..gr.arrows() {
        // Both pairs are composable because d∘e = c∘e = 1.
        let value = cat.compose(e.apply(c.apply(g)), g).unwrap();
        if value != g {
            return Ok(Some(GraphViolation::LeftUnit { g, value }));
        }
        let value = cat.compose(g, e.apply(d.apply(g))).unwrap();
        if value != g {
            return Ok(Some(GraphViolation::RightUnit { g, value }));
        }
    }
    for (f, g, fg) in cat.entries() {
        for h in (0..gr.arrows()).filter(|&h| c.apply(h) == d.apply(g)) {
            let gh = cat.compose(g, h).unwrap();
            let (lhs, rhs) = (cat.compose(f, gh).unwrap(), cat.compose(fg, h).unwrap());
            if lhs != rhs {
                return Ok(Some(GraphViolation::Associativity { f, g, h, lhs, rhs }));
            }
        }
    }
    let m = FinMap::new(gr.arrows(), cat.table().to_vec())?;
    if let Some((op, args)) = is_homomorphism(&m, gr.pair_algebra(), gr.x1())?.witness {
        return Ok(Some(GraphViolation::Homomorphism {
            map: "m".into(),
            op,
            args,
        }));
    }
    Ok(None)
}

/// Checks the domain, codomain, unit and associativity laws pointwise and, in
/// algebra mode, that `m` is a homomorphism on the pullback.
pub fn verify_category(cat: &InternalCategory) -> Result<GraphCheck> {
    Ok(GraphCheck::from(category_violation(cat)?))
}

/// Checks [`verify_category`] and then the inverse laws.
pub fn verify_groupoid(grpd: &InternalGroupoid) -> Result<GraphCheck> {
    if let Some(v) = category_violation(grpd.category())? {
        return Ok(GraphCheck::from(Some(v)));
    }
    let gr = grpd.graph();
    let (d, c, e, i) = (gr.d(), gr.c(), gr.e(), grpd.inverse());
    for g in 0..gr.arrows() {
        let value = i.apply(g);
        if d.apply(value) != c.apply(g) {
            return Ok(GraphCheck::from(Some(GraphViolation::InverseDomain { g, value })));
        }
        if c.apply(value) != d.apply(g) {
            return Ok(GraphCheck::from(Some(GraphViolation::InverseCodomain { g, value })));
        }
    }
    for g in 0..gr.arrows() {
        let value = grpd.compose(i.apply(g), g).unwrap();
        if value != e.apply(d.apply(g)) {
            return Ok(GraphCheck::from(Some(GraphViolation::LeftInverse { g, value })));
        }
        let value = grpd.compose(g, i.apply(g)).unwrap();
        if value != e.apply(c.apply(g)) {
            return Ok(GraphCheck::from(Some(GraphViolation::RightInverse { g, value })));
        }
    }
    if let Some((op, args)) = is_homomorphism(i, gr.x1(), gr.x1())?.witness {
        return Ok(GraphCheck::from(Some(GraphViolation::Homomorphism {
            map: "i".into(),
            op,
            args,
        })));
    }
    Ok(GraphCheck::from(None))
}

/// Every category structure on `graph`, in lexicographic order of the
/// composition table, stopping after `limit`.
///
/// Cells are filled in pair order; the unit laws fix some cells up front and
/// associativity is checked as soon as all four cells of an instance are set.
pub fn category_structures(graph: &ReflexiveGraph, limit: usize) -> Result<Vec<InternalCategory>> {
    let (d, c, e) = (graph.d(), graph.c(), graph.e());
    let n1 = graph.arrows();
    let candidates: Vec<Vec<usize>> = graph
        .composable()
        .iter()
        .map(|&(g, h)| {
            if g == e.apply(c.apply(h)) {
                vec![h]
            } else if h == e.apply(d.apply(g)) {
                vec![g]
            } else {
                (0..n1).filter(|&k| d.apply(k) == d.apply(h) && c.apply(k) == c.apply(g)).collect()
            }
        })
        .collect();
    let mut search = CategorySearch {
        graph,
        candidates,
        table: vec![None; graph.composable().len()],
        out: Vec::new(),
        limit,
    };
    search.fill(0)?;
    Ok(search.out)
}

struct CategorySearch<'a> {
    graph: &'a ReflexiveGraph,
    candidates: Vec<Vec<usize>>,
    table: Vec<Option<usize>>,
    out: Vec<InternalCategory>,
    limit: usize,
}

impl CategorySearch<'_> {
    fn get(&self, g: usize, h: usize) -> Option<usize> {
        self.table[self.graph.pair_index(g, h)?]
    }

    /// No associativity instance with all cells assigned fails.
    fn consistent(&self) -> bool {
        let (d, c) = (self.graph.d(), self.graph.c());
        self.graph.composable().iter().all(|&(f, g)| {
            let Some(fg) = self.get(f, g) else { return true };
            (0..self.graph.arrows()).filter(|&h| c.apply(h) == d.apply(g)).all(|h| {
                match self.get(g, h).and_then(|gh| self.get(f, gh)).zip(self.get(fg, h)) {
                    Some((lhs, rhs)) => lhs == rhs,
                    None => true,
                }
            })
        })
    }

    fn fill(&mut self, i: usize) -> Result<()> {
        if self.out.len() >= self.limit {
            return Ok(());
        }
        if i == self.table.len() {
            let cat = InternalCategory::new(self.graph.clone(), self.table.iter().map(|v| v.unwrap()).collect())?;
            if verify_category(&cat)?.holds {
                self.out.push(cat);
            }
            return Ok(());
        }
        for k in self.candidates[i].clone() {
            self.table[i] = Some(k);
            if self.consistent() {
                self.fill(i + 1)?;
            }
        }
        self.table[i] = None;
        Ok(())
    }
}

/// Every groupoid structure on `graph`: the category structures whose arrows
/// are all invertible, each with its unique inversion.
pub fn groupoid_structures(graph: &ReflexiveGraph, limit: usize) -> Result<Vec<InternalGroupoid>> {
    let mut out = Vec::new();
    for cat in category_structures(graph, usize::MAX)? {
        if out.len() >= limit {
            break;
        }
        if let Some(g) = InternalGroupoid::from_category(cat) {
            if verify_groupoid(&g)?.holds {
                out.push(g);
            }
        }
    }
    Ok(out)
}
