use serde::{Deserialize, Serialize};

use crate::algebra::{check_compatible, FinAlgebra};
use crate::error::{check_size, Result};
use crate::relcalc::EquivRelation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftingReport {
    /// Whether the hypothesis `α ∧ β ≤ γ` holds; otherwise the check passes
    /// vacuously.
    pub applicable: bool,
    pub holds: bool,
    /// `(a, b, c, d)` with `a β b`, `c β d`, `a α c`, `b α d`, `c γ d` but not `a γ b`.
    pub witness: Option<(usize, usize, usize, usize)>,
}

/// Shifting property for three congruences of `alg`: when `α ∧ β ≤ γ`, any
/// `α`-rectangle with `β` rungs whose bottom rung lies in `γ` has its top rung
/// in `γ` too.
pub fn shifting_lemma_check(
    alg: &FinAlgebra,
    alpha: &EquivRelation,
    beta: &EquivRelation,
    gamma: &EquivRelation,
) -> Result<ShiftingReport> {
    for e in [alpha, beta, gamma] {
        check_size("shifting check", alg.size(), e.size())?;
        check_compatible(alg, e)?;
    }
    if !alpha.meet(beta)?.refines(gamma) {
        return Ok(ShiftingReport {
            applicable: false,
            holds: true,
            witness: None,
        });
    }
    let n = alg.size();
    for a in 0..n {
        for b in beta.class(a) {
            if gamma.related(a, b) {
                continue;
            }
            for c in alpha.class(a) {
                for d in beta.class(c) {
                    if alpha.related(b, d) && gamma.related(c, d) {
                        return Ok(ShiftingReport {
                            applicable: true,
                            holds: false,
                            witness: Some((a, b, c, d)),
                        });
                    }
                }
            }
        }
    }
    Ok(ShiftingReport {
        applicable: true,
        holds: true,
        witness: None,
    })
}
