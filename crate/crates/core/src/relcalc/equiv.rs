use std::fmt;

use petgraph::unionfind::UnionFind;

use super::relation::Relation;
use crate::error::{check_index, check_size, Error, Result};

/// An equivalence relation in canonical form: each element stores the least
/// element of its block. Structural equality is therefore relation equality,
/// and the derived order is a fixed total order used for deterministic scans.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EquivRelation {
    reps: Vec<usize>,
}

impl EquivRelation {
    pub fn discrete(n: usize) -> Self {
        EquivRelation {
            reps: (0..n).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        EquivRelation { reps: vec![0; n] }
    }

    /// Kernel of an arbitrary key function.
    pub fn from_key<K, F>(n: usize, mut key: F) -> Self
    where
        K: Eq + std::hash::Hash,
        F: FnMut(usize) -> K,
    {
        let mut first = std::collections::HashMap::new();
        let reps = (0..n).map(|x| *first.entry(key(x)).or_insert(x)).collect();
        EquivRelation { reps }
    }

    /// Build from blocks that must cover `0..n` exactly once.
    pub fn from_partition(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidArgument("empty block in partition".into()));
            }
            for &x in block {
                check_index(x, n)?;
                if block_of[x] != usize::MAX {
                    return Err(Error::InvalidArgument(format!(
                        "element {x} occurs in more than one block"
                    )));
                }
                block_of[x] = b;
            }
        }
        if let Some(x) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidArgument(format!("element {x} is not covered by the partition")));
        }
        Ok(Self::from_key(n, |x| block_of[x]))
    }

    /// Partition built from a sequence of generating pairs.
    pub fn generated_by<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut uf = UnionFind::<usize>::new(n);
        for (a, b) in pairs {
            check_index(a, n)?;
            check_index(b, n)?;
            uf.union(a, b);
        }
        Ok(Self::from_union_find(n, &mut uf))
    }

    pub(crate) fn from_union_find(n: usize, uf: &mut UnionFind<usize>) -> Self {
        Self::from_key(n, |x| uf.find_mut(x))
    }

    /// Accepts a relation only if it is reflexive, symmetric and transitive.
    pub fn from_relation(r: &Relation) -> Result<Self> {
        let report = super::is_equivalence(r)?;
        if !report.is_equivalence() {
            return Err(Error::NotEquivalence(report.describe()));
        }
        Ok(Self::from_key(r.src(), |x| r.successors(x).next().unwrap_or(x)))
    }

    pub fn size(&self) -> usize {
        self.reps.len()
    }

    /// Canonical representative (least element) of the block of `x`.
    #[inline]
    pub fn rep(&self, x: usize) -> usize {
        self.reps[x]
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    #[inline]
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.reps[a] == self.reps[b]
    }

    pub fn num_blocks(&self) -> usize {
        self.reps.iter().enumerate().filter(|&(x, &r)| x == r).count()
    }

    /// Blocks ordered by least element, each ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut index = vec![usize::MAX; self.size()];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (x, &r) in self.reps.iter().enumerate() {
            if index[r] == usize::MAX {
                index[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[index[r]].push(x);
        }
        blocks
    }

    /// Elements of the block containing `x`, ascending.
    pub fn class(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        let r = self.reps[x];
        (r..self.size()).filter(move |&y| self.reps[y] == r)
    }

    /// Index of each element's block when blocks are ordered by least element.
    pub fn block_indices(&self) -> Vec<usize> {
        let mut index = vec![usize::MAX; self.size()];
        let mut next = 0;
        self.reps
            .iter()
            .map(|&r| {
                if index[r] == usize::MAX {
                    index[r] = next;
                    next += 1;
                }
                index[r]
            })
            .collect()
    }

    /// Related pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size()).flat_map(move |x| self.class(x).map(move |y| (x, y)))
    }

    pub fn num_pairs(&self) -> usize {
        let mut counts = vec![0usize; self.size()];
        for &r in &self.reps {
            counts[r] += 1;
        }
        counts.iter().map(|c| c * c).sum()
    }

    pub fn to_relation(&self) -> Relation {
        Relation::from_fn(self.size(), self.size(), |a, b| self.related(a, b))
    }

    pub fn is_discrete(&self) -> bool {
        self.reps.iter().enumerate().all(|(x, &r)| x == r)
    }

    pub fn is_full(&self) -> bool {
        self.reps.iter().all(|&r| r == 0)
    }

    /// Inclusion `self ⊆ other`.
    pub fn refines(&self, other: &EquivRelation) -> bool {
        self.size() == other.size() && (0..self.size()).all(|x| other.related(x, self.reps[x]))
    }

    pub fn meet(&self, other: &EquivRelation) -> Result<EquivRelation> {
        check_size("meet", self.size(), other.size())?;
        Ok(Self::from_key(self.size(), |x| (self.reps[x], other.reps[x])))
    }

    pub fn join(&self, other: &EquivRelation) -> Result<EquivRelation> {
        check_size("join", self.size(), other.size())?;
        let n = self.size();
        let mut uf = UnionFind::<usize>::new(n);
        for x in 0..n {
            uf.union(x, self.reps[x]);
            uf.union(x, other.reps[x]);
        }
        Ok(Self::from_union_find(n, &mut uf))
    }
}

impl fmt::Debug for EquivRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Equiv{self}")
    }
}

impl fmt::Display for EquivRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            let s: Vec<String> = block.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", s.join(","))?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(n: usize, blocks: &[&[usize]]) -> EquivRelation {
        let b: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
        EquivRelation::from_partition(n, &b).unwrap()
    }

    #[test]
    fn canonical_form_is_structural() {
        let a = part(4, &[&[3, 1], &[0], &[2]]);
        let b = EquivRelation::generated_by(4, [(1, 3)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.reps(), &[0, 1, 2, 1]);
        assert_eq!(a.blocks(), vec![vec![0], vec![1, 3], vec![2]]);
    }

    #[test]
    fn partition_validation() {
        assert!(EquivRelation::from_partition(3, &[vec![0, 1]]).is_err());
        assert!(EquivRelation::from_partition(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(EquivRelation::from_partition(2, &[vec![0, 2], vec![1]]).is_err());
    }

    #[test]
    fn meet_join_lattice() {
        let r = part(4, &[&[0, 1], &[2, 3]]);
        let s = part(4, &[&[0, 2], &[1, 3]]);
        assert_eq!(r.meet(&s).unwrap(), EquivRelation::discrete(4));
        assert_eq!(r.join(&s).unwrap(), EquivRelation::full(4));
        assert!(EquivRelation::discrete(4).refines(&r));
        assert!(r.refines(&EquivRelation::full(4)));
        assert!(!r.refines(&s));
    }

    #[test]
    fn relation_round_trip() {
        let r = part(5, &[&[0, 4], &[1, 2, 3]]);
        assert_eq!(EquivRelation::from_relation(&r.to_relation()).unwrap(), r);
        assert_eq!(r.num_pairs(), r.to_relation().len());
        let not_sym = Relation::from_pairs(2, 2, [(0, 0), (1, 1), (0, 1)]).unwrap();
        assert!(EquivRelation::from_relation(&not_sym).is_err());
    }
}
