//! Small enumeration helpers shared by the checks.

use crate::algebra::{all_congruences, is_homomorphism, quotient, Congruence, FinAlgebra};
use crate::error::Result;
use crate::relcalc::{EquivRelation, FinMap};

pub(crate) fn congruences(alg: &FinAlgebra) -> Result<Vec<EquivRelation>> {
    Ok(all_congruences(alg)?.into_iter().map(Congruence::into_equiv).collect())
}

pub(crate) fn quotient_map(alg: &FinAlgebra, theta: &EquivRelation) -> Result<(FinAlgebra, FinMap)> {
    let (q, f) = quotient(alg, theta)?;
    Ok((q, f.into_map()))
}

/// Every section `s` of `p: X → Y` (`p∘s = 1`) that is a homomorphism
/// `Y → X`, in lexicographic order of tables.
pub(crate) fn sections(p: &FinMap, x: &FinAlgebra, y: &FinAlgebra) -> Result<Vec<FinMap>> {
    let mut fibres = vec![Vec::new(); p.dst()];
    for (a, &b) in p.table().iter().enumerate() {
        fibres[b].push(a);
    }
    if fibres.iter().any(Vec::is_empty) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pick = vec![0; fibres.len()];
    loop {
        let s = FinMap::new(x.size(), fibres.iter().zip(&pick).map(|(f, &i)| f[i]).collect())?;
        if is_homomorphism(&s, y, x)?.holds {
            out.push(s);
        }
        // Odometer, last fibre fastest.
        let Some(k) = (0..pick.len()).rev().find(|&k| pick[k] + 1 < fibres[k].len()) else {
            return Ok(out);
        };
        pick[k] += 1;
        pick[k + 1..].iter_mut().for_each(|v| *v = 0);
    }
}

/// The unique `h` with `h∘q = m` for a surjective `q`, if `ker q ⊆ ker m`.
pub(crate) fn factor(q: &FinMap, m: &FinMap) -> Option<FinMap> {
    let mut table = vec![None; q.dst()];
    for (x, &w) in q.table().iter().enumerate() {
        let v = m.apply(x);
        if table[w].replace(v).is_some_and(|old| old != v) {
            return None;
        }
    }
    FinMap::new(m.dst(), table.into_iter().collect::<Option<Vec<_>>>()?).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bare_set, cyclic};

    #[test]
    fn sections_of_set_maps() {
        let p = FinMap::new(2, vec![0, 1, 1, 0]).unwrap();
        let s = sections(&p, &bare_set(4).unwrap(), &bare_set(2).unwrap()).unwrap();
        let tables: Vec<&[usize]> = s.iter().map(FinMap::table).collect();
        assert_eq!(tables, [&[0, 1][..], &[0, 2], &[3, 1], &[3, 2]]);
    }

    #[test]
    fn group_sections_are_homomorphisms() {
        // Z4 → Z2 has no homomorphic section; Z2 → Z1 has exactly one.
        let z4 = cyclic(4).unwrap();
        let (z2, p) = quotient_map(&z4, &EquivRelation::from_key(4, |x| x % 2)).unwrap();
        assert!(sections(&p, &z4, &z2).unwrap().is_empty());
        let (z1, p) = quotient_map(&z2, &EquivRelation::full(2)).unwrap();
        assert_eq!(sections(&p, &z2, &z1).unwrap().len(), 1);
    }

    #[test]
    fn factoring() {
        let q = FinMap::new(2, vec![0, 0, 1]).unwrap();
        let m = FinMap::new(3, vec![2, 2, 0]).unwrap();
        assert_eq!(factor(&q, &m).unwrap().table(), &[2, 0]);
        assert!(factor(&q, &FinMap::identity(3)).is_none());
    }
}
