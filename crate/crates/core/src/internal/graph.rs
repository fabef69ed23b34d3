use serde::{Deserialize, Serialize};

use crate::algebra::{bare_set, is_homomorphism, pullback, FinAlgebra};
use crate::error::{check_size, Error, Result};
use crate::relcalc::{EquivRelation, FinMap};

/// Whether the graph lives in finite sets or in a variety of finite algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Set,
    Algebra,
}

/// `X1 ⇉ X0` with domain `d`, codomain `c` and common section `e`.
///
/// Set-mode graphs carry bare sets at both levels, so every structural check
/// can treat the two modes uniformly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflexiveGraph {
    x0: FinAlgebra,
    x1: FinAlgebra,
    d: FinMap,
    c: FinMap,
    e: FinMap,
    /// Composable pairs `(g, h)` with `d(g) = c(h)`, lexicographic.
    composable: Vec<(usize, usize)>,
    pair_index: Vec<Option<usize>>,
    pair_algebra: FinAlgebra,
}

impl ReflexiveGraph {
    pub fn new(x0: FinAlgebra, x1: FinAlgebra, d: FinMap, c: FinMap, e: FinMap) -> Result<Self> {
        x0.same_signature(&x1)?;
        let (n0, n1) = (x0.size(), x1.size());
        for (name, f) in [("d", &d), ("c", &c)] {
            if f.src() != n1 || f.dst() != n0 {
                return Err(Error::Malformed(format!("{name} must map X1 (size {n1}) to X0 (size {n0})")));
            }
        }
        if e.src() != n0 || e.dst() != n1 {
            return Err(Error::Malformed(format!("e must map X0 (size {n0}) to X1 (size {n1})")));
        }
        for x in 0..n0 {
            let ex = e.apply(x);
            if d.apply(ex) != x || c.apply(ex) != x {
                return Err(Error::Malformed(format!("d∘e and c∘e must be the identity; fails at object {x}")));
            }
        }
        for (name, f, src, dst) in [("d", &d, &x1, &x0), ("c", &c, &x1, &x0), ("e", &e, &x0, &x1)] {
            if let Some((op, args)) = is_homomorphism(f, src, dst)?.witness {
                return Err(Error::Malformed(format!("{name} does not preserve `{op}` at {args:?}")));
            }
        }
        let pb = pullback(&x1, &d, &x1, &c)?;
        let mut pair_index = vec![None; n1 * n1];
        for (i, &(g, h)) in pb.pairs.iter().enumerate() {
            pair_index[g * n1 + h] = Some(i);
        }
        Ok(ReflexiveGraph {
            x0,
            x1,
            d,
            c,
            e,
            composable: pb.pairs,
            pair_index,
            pair_algebra: pb.algebra,
        })
    }

    /// Graph over bare sets of sizes `n0` and `n1`.
    pub fn set(n0: usize, n1: usize, d: Vec<usize>, c: Vec<usize>, e: Vec<usize>) -> Result<Self> {
        check_size("d table", n1, d.len())?;
        check_size("c table", n1, c.len())?;
        check_size("e table", n0, e.len())?;
        ReflexiveGraph::new(
            bare_set(n0)?,
            bare_set(n1)?,
            FinMap::new(n0, d)?,
            FinMap::new(n0, c)?,
            FinMap::new(n1, e)?,
        )
    }

    /// The graph of an equivalence relation: arrows are the related pairs
    /// `(x, y)` in lexicographic order, read as arrows `x → y`.
    pub fn of_relation(r: &EquivRelation) -> Result<Self> {
        Self::of_pairs(r.size(), &r.pairs().collect::<Vec<_>>())
    }

    /// The graph of a reflexive relation given by its pairs; arrow `k` is
    /// `pairs[k]` read as `x → y`.
    pub fn of_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let index = |p: (usize, usize)| pairs.iter().position(|&q| q == p);
        let e = (0..n)
            .map(|x| index((x, x)).ok_or_else(|| Error::Malformed(format!("relation is not reflexive at {x}"))))
            .collect::<Result<Vec<_>>>()?;
        let d = pairs.iter().map(|p| p.0).collect();
        let c = pairs.iter().map(|p| p.1).collect();
        ReflexiveGraph::set(n, pairs.len(), d, c, e)
    }

    /// One-object graph whose arrows are the elements of `alg`; the identity
    /// arrow is element `unit`.
    pub fn one_object(alg: &FinAlgebra, unit: usize) -> Result<Self> {
        let x0 = if alg.is_bare_set() {
            bare_set(1)?
        } else {
            // The trivial algebra of the same signature.
            crate::algebra::quotient(alg, &EquivRelation::full(alg.size()))?.0
        };
        let n = alg.size();
        ReflexiveGraph::new(
            x0,
            alg.clone(),
            FinMap::constant(n, 1, 0)?,
            FinMap::constant(n, 1, 0)?,
            FinMap::constant(1, n, unit)?,
        )
    }

    pub fn mode(&self) -> Mode {
        if self.x1.is_bare_set() {
            Mode::Set
        } else {
            Mode::Algebra
        }
    }

    pub fn x0(&self) -> &FinAlgebra {
        &self.x0
    }

    pub fn x1(&self) -> &FinAlgebra {
        &self.x1
    }

    pub fn objects(&self) -> usize {
        self.x0.size()
    }

    pub fn arrows(&self) -> usize {
        self.x1.size()
    }

    pub fn d(&self) -> &FinMap {
        &self.d
    }

    pub fn c(&self) -> &FinMap {
        &self.c
    }

    pub fn e(&self) -> &FinMap {
        &self.e
    }

    pub fn composable(&self) -> &[(usize, usize)] {
        &self.composable
    }

    pub fn pair_index(&self, g: usize, h: usize) -> Option<usize> {
        self.pair_index.get(g * self.arrows() + h).copied().flatten()
    }

    /// The pullback `X1 ×_{X0} X1` of `d` and `c` as an algebra.
    pub fn pair_algebra(&self) -> &FinAlgebra {
        &self.pair_algebra
    }

    pub fn kernel_d(&self) -> EquivRelation {
        self.d.kernel_pair()
    }

    pub fn kernel_c(&self) -> EquivRelation {
        self.c.kernel_pair()
    }

    /// Whether `⟨d, c⟩` is injective, i.e. the graph is a relation.
    pub fn is_relation(&self) -> bool {
        let mut seen = vec![false; self.objects() * self.objects()];
        (0..self.arrows()).all(|g| {
            let k = self.d.apply(g) * self.objects() + self.c.apply(g);
            !std::mem::replace(&mut seen[k], true)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclic;

    #[test]
    fn section_laws_enforced() {
        assert!(ReflexiveGraph::set(2, 3, vec![0, 1, 0], vec![0, 1, 1], vec![0, 1]).is_ok());
        let err = ReflexiveGraph::set(2, 3, vec![0, 1, 0], vec![0, 1, 1], vec![0, 2]).unwrap_err();
        assert!(matches!(err, Error::Malformed(_)));
    }

    #[test]
    fn composable_pairs_follow_d_then_c() {
        // Arrows: 0 = id0, 1 = id1, 2 = 0 → 1.
        let g = ReflexiveGraph::set(2, 3, vec![0, 1, 0], vec![0, 1, 1], vec![0, 1]).unwrap();
        assert_eq!(g.composable(), &[(0, 0), (1, 1), (1, 2), (2, 0)][..]);
        assert_eq!(g.pair_index(2, 0), Some(3));
        assert_eq!(g.pair_index(1, 2), Some(2));
        assert_eq!(g.pair_index(0, 2), None);
        assert_eq!(g.pair_index(2, 2), None);
        assert!(g.is_relation());
    }

    #[test]
    fn relation_graph() {
        let r = EquivRelation::from_partition(3, &[vec![0, 1], vec![2]]).unwrap();
        let g = ReflexiveGraph::of_relation(&r).unwrap();
        assert_eq!(g.arrows(), 5);
        assert_eq!(g.mode(), Mode::Set);
        assert!(g.is_relation());
    }

    #[test]
    fn one_object_group() {
        let g = ReflexiveGraph::one_object(&cyclic(4).unwrap(), 0).unwrap();
        assert_eq!(g.mode(), Mode::Algebra);
        assert_eq!(g.objects(), 1);
        assert_eq!(g.composable().len(), 16);
        assert!(!g.is_relation());
    }
}
