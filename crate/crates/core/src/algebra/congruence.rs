use std::cmp::Reverse;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;

use super::{tuples, FinAlgebra, Homomorphism, OpTable};
use crate::error::{check_index, check_size, Error, Result};
use crate::relcalc::{EquivRelation, FinCarrier, FinMap};

pub const DEFAULT_CONGRUENCE_BOUND: usize = 12;

/// An equivalence relation known to be compatible with every operation of
/// some algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence(EquivRelation);

impl Congruence {
    pub fn new(alg: &FinAlgebra, e: EquivRelation) -> Result<Self> {
        check_compatible(alg, &e)?;
        Ok(Congruence(e))
    }

    pub fn discrete(alg: &FinAlgebra) -> Self {
        Congruence(EquivRelation::discrete(alg.size()))
    }

    pub fn full(alg: &FinAlgebra) -> Self {
        Congruence(EquivRelation::full(alg.size()))
    }

    pub fn equiv(&self) -> &EquivRelation {
        &self.0
    }

    pub fn into_equiv(self) -> EquivRelation {
        self.0
    }
}

impl Deref for Congruence {
    type Target = EquivRelation;

    fn deref(&self) -> &EquivRelation {
        &self.0
    }
}

impl fmt::Debug for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Con{}", self.0)
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Pairs `(g(..a..), g(..b..))` that a congruence containing `e` must relate,
/// found by moving one argument at a time to its block representative.
/// Single-position moves suffice because the relation is transitive.
fn translation_images<'a>(
    alg: &'a FinAlgebra,
    e: &'a EquivRelation,
) -> impl Iterator<Item = (usize, Vec<usize>, Vec<usize>)> + 'a {
    let n = alg.size();
    alg.tables().iter().enumerate().flat_map(move |(op, table)| {
        let k = table.arity();
        (0..k).flat_map(move |pos| {
            tuples(n, k).filter_map(move |args| {
                let a = args[pos];
                let r = e.rep(a);
                if r == a {
                    return None;
                }
                let mut moved = args.clone();
                moved[pos] = r;
                Some((op, args, moved))
            })
        })
    })
}

fn table_pair(table: &OpTable, a: &[usize], b: &[usize]) -> (usize, usize) {
    (table.apply(a), table.apply(b))
}

/// Checks that `e` is compatible with every operation. On failure the error
/// carries the two argument tuples, concatenated.
pub fn check_compatible(alg: &FinAlgebra, e: &EquivRelation) -> Result<()> {
    check_size("congruence carrier", alg.size(), e.size())?;
    for (op, a, b) in translation_images(alg, e) {
        let (x, y) = table_pair(&alg.tables()[op], &a, &b);
        if !e.related(x, y) {
            let mut args = a;
            args.extend(b);
            return Err(Error::IncompatibleCongruence {
                op: alg.signature().ops[op].name.clone(),
                args,
            });
        }
    }
    Ok(())
}

/// Least congruence containing the seed pairs.
pub fn congruence_generated<I>(alg: &FinAlgebra, seed: I) -> Result<Congruence>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let n = alg.size();
    let mut uf = UnionFind::<usize>::new(n);
    for (a, b) in seed {
        check_index(a, n)?;
        check_index(b, n)?;
        uf.union(a, b);
    }
    loop {
        let e = EquivRelation::from_key(n, |x| uf.find_mut(x));
        let mut changed = false;
        for (op, a, b) in translation_images(alg, &e) {
            let (x, y) = table_pair(&alg.tables()[op], &a, &b);
            changed |= uf.union(x, y);
        }
        if !changed {
            return Ok(Congruence(e));
        }
    }
}

pub fn all_congruences(alg: &FinAlgebra) -> Result<Vec<Congruence>> {
    all_congruences_bounded(alg, DEFAULT_CONGRUENCE_BOUND)
}

/// Whole congruence lattice, ordered from `Δ` (most blocks) to `∇`.
///
/// Every congruence is the join of the principal congruences below it, so
/// closing the principal ones under joins, one generator at a time, reaches
/// all of them.
pub fn all_congruences_bounded(alg: &FinAlgebra, bound: usize) -> Result<Vec<Congruence>> {
    let n = alg.size();
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let principal: BTreeSet<EquivRelation> = pairs
        .par_iter()
        .map(|&(a, b)| congruence_generated(alg, [(a, b)]).map(Congruence::into_equiv))
        .collect::<Result<_>>()?;

    let mut lattice: BTreeSet<EquivRelation> = BTreeSet::new();
    lattice.insert(EquivRelation::discrete(n));
    for p in &principal {
        let joins: Vec<EquivRelation> = lattice
            .iter()
            .filter(|l| !p.refines(l))
            .map(|l| l.join(p))
            .collect::<Result<_>>()?;
        lattice.extend(joins);
    }
    let mut out: Vec<EquivRelation> = lattice.into_iter().collect();
    out.sort_by_key(|e| (Reverse(e.num_blocks()), e.clone()));
    Ok(out.into_iter().map(Congruence).collect())
}

/// Quotient algebra on the blocks of `theta` (ordered by least element) and
/// the canonical projection.
pub fn quotient(alg: &FinAlgebra, theta: &EquivRelation) -> Result<(FinAlgebra, Homomorphism)> {
    check_compatible(alg, theta)?;
    let index = theta.block_indices();
    let reps: Vec<usize> = theta.blocks().iter().map(|b| b[0]).collect();
    let m = reps.len();
    let tables = alg
        .tables()
        .iter()
        .map(|t| {
            OpTable::from_fn(t.arity(), m, |args| {
                let lifted: Vec<usize> = args.iter().map(|&q| reps[q]).collect();
                index[t.apply(&lifted)]
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let q = FinAlgebra::new(
        format!("{}/{}", alg.name(), theta),
        FinCarrier::new(m),
        alg.signature().clone(),
        tables,
    )?;
    let proj = Homomorphism::new_unchecked(FinMap::new(m, index)?);
    Ok((q, proj))
}
