//! Lattice-level checks on the congruences of an algebra: 3-permutability of
//! every pair and the modular law.

use serde::{Deserialize, Serialize};

use super::{all_congruences_bounded, Congruence, FinAlgebra, DEFAULT_CONGRUENCE_BOUND};
use crate::error::Result;
use crate::relcalc::{permutability, EquivRelation};

/// A congruence pair with `RSR ≠ SRS`, and a pair in the difference.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutabilityFailure {
    pub r: EquivRelation,
    pub s: EquivRelation,
    pub witness: (usize, usize),
    /// Whether the witness lies in `RSR` (otherwise it lies in `SRS`).
    pub in_rsr: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoursatReport {
    pub congruences: usize,
    pub pairs_checked: usize,
    pub holds: bool,
    pub failures: Vec<PermutabilityFailure>,
}

/// Runs the 3-permutability check over every unordered pair of congruences,
/// stopping at the first failure unless `collect_all` is set.
pub fn check_goursat_instance(alg: &FinAlgebra) -> Result<GoursatReport> {
    check_goursat_congruences(&all_congruences_bounded(alg, DEFAULT_CONGRUENCE_BOUND)?, false)
}

pub fn check_goursat_congruences(congruences: &[Congruence], collect_all: bool) -> Result<GoursatReport> {
    let mut failures = Vec::new();
    let mut pairs_checked = 0;
    'scan: for (i, r) in congruences.iter().enumerate() {
        for s in &congruences[i + 1..] {
            pairs_checked += 1;
            let rep = permutability(r, s, 3)?;
            if let Some(w) = rep.witness {
                failures.push(PermutabilityFailure {
                    r: r.equiv().clone(),
                    s: s.equiv().clone(),
                    witness: w,
                    in_rsr: rep.lhs.contains(w.0, w.1),
                });
                if !collect_all {
                    break 'scan;
                }
            }
        }
    }
    Ok(GoursatReport {
        congruences: congruences.len(),
        pairs_checked,
        holds: failures.is_empty(),
        failures,
    })
}

/// A sublattice isomorphic to N5: `low < high`, both incomparable with `side`,
/// with `low ∧ side = high ∧ side` and `low ∨ side = high ∨ side`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pentagon {
    pub bottom: EquivRelation,
    pub low: EquivRelation,
    pub high: EquivRelation,
    pub side: EquivRelation,
    pub top: EquivRelation,
}

impl Pentagon {
    /// Re-derives meets, joins and the order relations from the three
    /// middle elements.
    pub fn is_valid(&self) -> bool {
        let (a, b, c) = (&self.low, &self.high, &self.side);
        let meets = a.meet(c).ok().as_ref() == Some(&self.bottom) && b.meet(c).ok().as_ref() == Some(&self.bottom);
        let joins = a.join(c).ok().as_ref() == Some(&self.top) && b.join(c).ok().as_ref() == Some(&self.top);
        meets && joins && a.refines(b) && a != b && !c.refines(b) && !b.refines(c) && !c.refines(a) && !a.refines(c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModularityReport {
    pub congruences: usize,
    pub modular: bool,
    pub pentagon: Option<Pentagon>,
}

/// Tests `θ ≤ ψ ⇒ θ ∨ (φ ∧ ψ) = (θ ∨ φ) ∧ ψ` over all triples. A failure
/// `θ ∨ (φ ∧ ψ) < (θ ∨ φ) ∧ ψ` yields the pentagon with `side = φ`.
pub fn modularity_check(alg: &FinAlgebra) -> Result<ModularityReport> {
    modularity_of(&all_congruences_bounded(alg, DEFAULT_CONGRUENCE_BOUND)?)
}

pub fn modularity_of(congruences: &[Congruence]) -> Result<ModularityReport> {
    for theta in congruences {
        for psi in congruences.iter().filter(|psi| theta.refines(psi)) {
            for phi in congruences {
                let low = theta.join(&phi.meet(psi)?)?;
                let high = theta.join(phi)?.meet(psi)?;
                if low != high {
                    let pentagon = Pentagon {
                        bottom: phi.meet(&low)?,
                        top: phi.join(&high)?,
                        low,
                        high,
                        side: phi.equiv().clone(),
                    };
                    return Ok(ModularityReport {
                        congruences: congruences.len(),
                        modular: false,
                        pentagon: Some(pentagon),
                    });
                }
            }
        }
    }
    Ok(ModularityReport {
        congruences: congruences.len(),
        modular: true,
        pentagon: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bare_set, cyclic, direct_product, symmetric};

    fn part(n: usize, blocks: &[&[usize]]) -> EquivRelation {
        let b: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
        EquivRelation::from_partition(n, &b).unwrap()
    }

    #[test]
    fn groups_are_goursat() {
        let z2 = cyclic(2).unwrap();
        for g in [symmetric(3).unwrap(), cyclic(4).unwrap(), direct_product(&z2, &z2).unwrap()] {
            let rep = check_goursat_instance(&g).unwrap();
            assert!(rep.holds, "{}", g.name());
        }
        assert!(check_goursat_instance(&cyclic(1).unwrap()).unwrap().holds);
    }

    #[test]
    fn bare_set_fails_with_known_witness() {
        let set = bare_set(4).unwrap();
        let congs = all_congruences_bounded(&set, 4).unwrap();
        let rep = check_goursat_congruences(&congs, true).unwrap();
        assert!(!rep.holds);
        assert_eq!(rep.pairs_checked, 15 * 14 / 2);
        let r = part(4, &[&[0, 1], &[2, 3]]);
        let s = part(4, &[&[0], &[1, 2], &[3]]);
        let hit = rep
            .failures
            .iter()
            .find(|f| (f.r == r && f.s == s) || (f.r == s && f.s == r))
            .expect("the standard pair fails");
        assert_eq!(hit.witness, (0, 3));
        assert!(!check_goursat_instance(&set).unwrap().holds);
    }

    #[test]
    fn modularity_examples() {
        for g in crate::algebra::small_groups(8).unwrap() {
            assert!(modularity_check(&g).unwrap().modular, "{}", g.name());
        }
        assert!(modularity_check(&bare_set(2).unwrap()).unwrap().modular);
        assert!(modularity_check(&bare_set(3).unwrap()).unwrap().modular);
        let rep = modularity_check(&bare_set(4).unwrap()).unwrap();
        assert!(!rep.modular);
        assert!(rep.pentagon.unwrap().is_valid());
    }
}
