use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relcalc::{FinMap, Relation};

/// A cube whose left face is the pullback of split epis `p: X → Y ← Z: q`
/// and whose right face is the split epis `g: U → W ← V: h`, joined by the
/// surjections `α: X → U`, `β: Y → W`, `γ: Z → V`.
///
/// ```text
///   X --α--> U
///  p|↑s     g|↑t        Z --γ--> V
///   Y --β--> W         q|↑r     h|↑u
///                       Y --β--> W
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cube {
    pub p: FinMap,
    pub s: FinMap,
    pub q: FinMap,
    pub r: FinMap,
    pub alpha: FinMap,
    pub gamma: FinMap,
    pub beta: FinMap,
    pub g: FinMap,
    pub t: FinMap,
    pub h: FinMap,
    pub u: FinMap,
}

impl Cube {
    fn validate(&self) -> Result<()> {
        let id = |n| FinMap::identity(n);
        if self.s.then(&self.p)? != id(self.p.dst()) || self.r.then(&self.q)? != id(self.q.dst()) {
            return Err(Error::InvalidArgument("s and r must be sections of p and q".into()));
        }
        if self.t.then(&self.g)? != id(self.g.dst()) || self.u.then(&self.h)? != id(self.h.dst()) {
            return Err(Error::InvalidArgument("t and u must be sections of g and h".into()));
        }
        let squares = [
            (&self.alpha, &self.g, &self.p, "g∘α ≠ β∘p"),
            (&self.gamma, &self.h, &self.q, "h∘γ ≠ β∘q"),
        ];
        for (across, down, left, msg) in squares {
            if across.then(down)? != left.then(&self.beta)? {
                return Err(Error::NonCommutingSquare(msg.into()));
            }
        }
        if self.s.then(&self.alpha)? != self.beta.then(&self.t)? {
            return Err(Error::NonCommutingSquare("α∘s ≠ t∘β".into()));
        }
        if self.r.then(&self.gamma)? != self.beta.then(&self.u)? {
            return Err(Error::NonCommutingSquare("γ∘r ≠ u∘β".into()));
        }
        if ![&self.alpha, &self.beta, &self.gamma].iter().all(|m| m.is_surjective()) {
            return Err(Error::InvalidArgument("α, β and γ must be surjective".into()));
        }
        Ok(())
    }

    /// Checks the hypotheses, then returns the first pair of `U ×_W V`
    /// that is not `(α x, γ z)` for any `(x, z)` with `p x = q z`. In finite
    /// sets uniqueness of the pairing is automatic, so `None` means the
    /// right face is a pullback.
    pub fn right_face_gap(&self) -> Result<Option<(usize, usize)>> {
        self.validate()?;
        let (nu, nv) = (self.g.src(), self.h.src());
        let hit = Relation::from_pairs(
            nu,
            nv,
            (0..self.p.src()).flat_map(|x| {
                (0..self.q.src())
                    .filter(move |&z| self.p.apply(x) == self.q.apply(z))
                    .map(move |z| (self.alpha.apply(x), self.gamma.apply(z)))
            }),
        )?;
        Ok((0..nu)
            .flat_map(|a| (0..nv).map(move |b| (a, b)))
            .find(|&(a, b)| self.g.apply(a) == self.h.apply(b) && !hit.contains(a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(dst: usize, t: &[usize]) -> FinMap {
        FinMap::new(dst, t.to_vec()).unwrap()
    }

    #[test]
    fn identity_horizontals_give_a_pullback() {
        let p = map(2, &[0, 1, 1]);
        let s = map(3, &[0, 1]);
        let id3 = FinMap::identity(3);
        let cube = Cube {
            p: p.clone(),
            s: s.clone(),
            q: p.clone(),
            r: s.clone(),
            alpha: id3.clone(),
            gamma: id3,
            beta: FinMap::identity(2),
            g: p.clone(),
            t: s.clone(),
            h: p,
            u: s,
        };
        assert_eq!(cube.right_face_gap().unwrap(), None);
    }

    #[test]
    fn broken_square_rejected() {
        let p = map(2, &[0, 1, 1]);
        let s = map(3, &[0, 1]);
        let cube = Cube {
            p: p.clone(),
            s: s.clone(),
            q: p.clone(),
            r: s.clone(),
            alpha: map(3, &[0, 2, 1]),
            gamma: FinMap::identity(3),
            beta: FinMap::identity(2),
            g: p.clone(),
            t: s.clone(),
            h: p,
            u: s,
        };
        assert!(cube.right_face_gap().is_err());
    }
}
