//! Exact calculus of binary relations between finite carriers.
//!
//! Composition is always written in diagram order: `compose(r, s)` relates
//! `x` to `z` when `x r y` and `y s z` for some `y`. The juxtaposition `SR`
//! common in the categorical literature denotes the same relation.

mod equiv;
mod json;
mod map;
mod relation;
#[cfg(test)]
mod props;

use serde::{Deserialize, Serialize};

pub use equiv::EquivRelation;
pub use map::FinMap;
pub use relation::{FinCarrier, Relation};

use crate::error::{check_size, Error, Result};

pub fn compose(r: &Relation, s: &Relation) -> Result<Relation> {
    r.compose(s)
}

pub fn opposite(r: &Relation) -> Relation {
    r.opposite()
}

pub fn kernel_pair(f: &FinMap) -> EquivRelation {
    f.kernel_pair()
}

pub fn image_factorization(f: &FinMap) -> (FinMap, FinMap) {
    f.image_factorization()
}

/// The regular image `f(R) = {(f x, f x') | x R x'}`.
pub fn regular_image(f: &FinMap, r: &Relation) -> Result<Relation> {
    check_size("regular image: relation source", f.src(), r.src())?;
    check_size("regular image: relation target", f.src(), r.dst())?;
    Relation::from_pairs(f.dst(), f.dst(), r.pairs().map(|(x, y)| (f.apply(x), f.apply(y))))
}

/// Which of the three equivalence axioms hold, with the first failure of each
/// found in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub reflexive_witness: Option<usize>,
    pub symmetric_witness: Option<(usize, usize)>,
    pub transitive_witness: Option<(usize, usize, usize)>,
}

impl EquivalenceReport {
    pub fn is_equivalence(&self) -> bool {
        self.reflexive && self.symmetric && self.transitive
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if let Some(x) = self.reflexive_witness {
            parts.push(format!("not reflexive at {x}"));
        }
        if let Some((x, y)) = self.symmetric_witness {
            parts.push(format!("not symmetric: ({x},{y}) without ({y},{x})"));
        }
        if let Some((x, y, z)) = self.transitive_witness {
            parts.push(format!("not transitive: ({x},{y}) and ({y},{z}) without ({x},{z})"));
        }
        if parts.is_empty() {
            "equivalence relation".into()
        } else {
            parts.join("; ")
        }
    }
}

pub fn is_equivalence(r: &Relation) -> Result<EquivalenceReport> {
    check_size("equivalence check on non-square relation", r.src(), r.dst())?;
    let n = r.src();
    let reflexive_witness = (0..n).find(|&x| !r.contains(x, x));
    let symmetric_witness = r.pairs().find(|&(x, y)| !r.contains(y, x));
    let transitive_witness = r.pairs().find_map(|(x, y)| {
        r.successors(y)
            .find(|&z| !r.contains(x, z))
            .map(|z| (x, y, z))
    });
    Ok(EquivalenceReport {
        reflexive: reflexive_witness.is_none(),
        symmetric: symmetric_witness.is_none(),
        transitive: transitive_witness.is_none(),
        reflexive_witness,
        symmetric_witness,
        transitive_witness,
    })
}

/// Comparison of the alternating composites `R S R …` and `S R S …` of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutabilityReport {
    pub n: usize,
    pub holds: bool,
    /// The composite starting with `R`.
    pub lhs: Relation,
    /// The composite starting with `S`.
    pub rhs: Relation,
    pub witness: Option<(usize, usize)>,
}

fn alternating(first: &Relation, second: &Relation, n: usize) -> Result<Relation> {
    let mut acc = first.clone();
    for k in 1..n {
        acc = acc.compose(if k % 2 == 1 { second } else { first })?;
    }
    Ok(acc)
}

pub fn permutability(r: &EquivRelation, s: &EquivRelation, n: usize) -> Result<PermutabilityReport> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("permutability length must be at least 2, got {n}")));
    }
    check_size("permutability", r.size(), s.size())?;
    let (rr, sr) = (r.to_relation(), s.to_relation());
    let lhs = alternating(&rr, &sr, n)?;
    let rhs = alternating(&sr, &rr, n)?;
    let witness = lhs.first_difference(&rhs);
    Ok(PermutabilityReport {
        n,
        holds: witness.is_none(),
        lhs,
        rhs,
        witness,
    })
}

/// Least equivalence relation containing `r`.
pub fn equivalence_closure(r: &Relation) -> Result<EquivRelation> {
    check_size("equivalence closure on non-square relation", r.src(), r.dst())?;
    EquivRelation::generated_by(r.src(), r.pairs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(n: usize, blocks: &[&[usize]]) -> EquivRelation {
        let b: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
        EquivRelation::from_partition(n, &b).unwrap()
    }

    #[test]
    fn kernel_pair_examples() {
        let f = FinMap::new(2, vec![0, 0, 1]).unwrap();
        assert_eq!(kernel_pair(&f), part(3, &[&[0, 1], &[2]]));
        assert_eq!(kernel_pair(&FinMap::new(5, vec![4, 0, 2]).unwrap()), EquivRelation::discrete(3));
        assert_eq!(kernel_pair(&FinMap::constant(4, 2, 1).unwrap()), EquivRelation::full(4));
        // f°f read in diagram order is graph(f) then its opposite.
        let g = f.graph();
        assert_eq!(g.compose(&g.opposite()).unwrap(), kernel_pair(&f).to_relation());
    }

    #[test]
    fn regular_image_is_not_transitive_in_sets() {
        let f = FinMap::new(3, vec![0, 1, 1, 2]).unwrap();
        let r = part(4, &[&[0, 1], &[2, 3]]);
        let img = regular_image(&f, &r.to_relation()).unwrap();
        let expected =
            Relation::from_pairs(3, 3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
        assert_eq!(img, expected);
        let report = is_equivalence(&img).unwrap();
        assert!(report.reflexive && report.symmetric && !report.transitive);
        assert_eq!(report.transitive_witness, Some((0, 1, 2)));
    }

    #[test]
    fn regular_image_trivial_cases() {
        let r = part(3, &[&[0, 2], &[1]]).to_relation();
        assert_eq!(regular_image(&FinMap::identity(3), &r).unwrap(), r);
        let f = FinMap::new(2, vec![1, 0, 1]).unwrap();
        assert_eq!(regular_image(&f, &Relation::identity(3)).unwrap(), Relation::identity(2));
    }

    #[test]
    fn equivalence_report_examples() {
        assert!(is_equivalence(&Relation::full(3, 3)).unwrap().is_equivalence());
        let r = Relation::from_pairs(2, 2, [(0, 1)]).unwrap();
        let rep = is_equivalence(&r).unwrap();
        assert!(!rep.reflexive);
        assert_eq!(rep.reflexive_witness, Some(0));
        assert!(matches!(is_equivalence(&Relation::empty(2, 3)), Err(Error::CarrierMismatch { .. })));
    }

    #[test]
    fn three_permutability_counterexample() {
        let r = part(4, &[&[0, 1], &[2, 3]]);
        let s = part(4, &[&[0], &[1, 2], &[3]]);
        let rep = permutability(&r, &s, 3).unwrap();
        assert!(!rep.holds);
        assert_eq!(rep.witness, Some((0, 3)));
        assert!(rep.lhs.contains(0, 3) && !rep.rhs.contains(0, 3));
    }

    #[test]
    fn permutability_with_itself() {
        let r = part(5, &[&[0, 3], &[1, 2, 4]]);
        for n in 2..6 {
            assert!(permutability(&r, &r, n).unwrap().holds);
        }
        assert!(matches!(permutability(&r, &r, 1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn closure_examples() {
        let chain = Relation::from_pairs(3, 3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(equivalence_closure(&chain).unwrap(), EquivRelation::full(3));
        assert_eq!(equivalence_closure(&Relation::identity(3)).unwrap(), EquivRelation::discrete(3));
        let single = Relation::from_pairs(4, 4, [(0, 1)]).unwrap();
        assert_eq!(equivalence_closure(&single).unwrap(), part(4, &[&[0, 1], &[2], &[3]]));
    }
}
