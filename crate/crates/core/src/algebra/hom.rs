use serde::{Deserialize, Serialize};

use super::{tuples, FinAlgebra, OpTable};
use crate::error::{check_index, check_size, Error, Result};
use crate::relcalc::{FinCarrier, FinMap};

/// A map known to commute with every operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Homomorphism(FinMap);

impl Homomorphism {
    pub fn new(f: FinMap, src: &FinAlgebra, dst: &FinAlgebra) -> Result<Self> {
        let check = is_homomorphism(&f, src, dst)?;
        match check.witness {
            None => Ok(Homomorphism(f)),
            Some((op, args)) => Err(Error::InvalidArgument(format!(
                "map does not preserve `{op}` at {args:?}"
            ))),
        }
    }

    pub(crate) fn new_unchecked(f: FinMap) -> Self {
        Homomorphism(f)
    }

    pub fn map(&self) -> &FinMap {
        &self.0
    }

    pub fn into_map(self) -> FinMap {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomCheck {
    pub holds: bool,
    /// Operation name and argument tuple of the first failure.
    pub witness: Option<(String, Vec<usize>)>,
}

pub fn is_homomorphism(f: &FinMap, a: &FinAlgebra, b: &FinAlgebra) -> Result<HomCheck> {
    a.same_signature(b)?;
    check_size("homomorphism source", a.size(), f.src())?;
    check_size("homomorphism target", b.size(), f.dst())?;
    for ((op, ta), tb) in a.ops().zip(b.tables()) {
        for args in tuples(a.size(), ta.arity()) {
            let image: Vec<usize> = args.iter().map(|&x| f.apply(x)).collect();
            if f.apply(ta.apply(&args)) != tb.apply(&image) {
                return Ok(HomCheck {
                    holds: false,
                    witness: Some((op.name.clone(), args)),
                });
            }
        }
    }
    Ok(HomCheck {
        holds: true,
        witness: None,
    })
}

/// Every homomorphism `a → b`, in lexicographic order of tables.
pub fn all_homomorphisms(a: &FinAlgebra, b: &FinAlgebra) -> Result<Vec<FinMap>> {
    a.same_signature(b)?;
    let n = a.size();
    // Each equation f(g(args)) = g(f(args)) is checked as soon as the last
    // element it mentions has been assigned.
    let mut due: Vec<Vec<(usize, Vec<usize>, usize)>> = vec![Vec::new(); n];
    for (op, t) in a.tables().iter().enumerate() {
        for args in tuples(n, t.arity()) {
            let r = t.apply(&args);
            let last = args.iter().copied().chain([r]).max().unwrap_or(r);
            due[last].push((op, args, r));
        }
    }
    let mut out = Vec::new();
    let mut table = Vec::with_capacity(n);
    extend(a, b, &due, &mut table, &mut out);
    out.into_iter().map(|t| FinMap::new(b.size(), t)).collect()
}

fn extend(
    a: &FinAlgebra,
    b: &FinAlgebra,
    due: &[Vec<(usize, Vec<usize>, usize)>],
    table: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let k = table.len();
    if k == a.size() {
        out.push(table.clone());
        return;
    }
    for v in 0..b.size() {
        table.push(v);
        let ok = due[k].iter().all(|(op, args, r)| {
            let image: Vec<usize> = args.iter().map(|&x| table[x]).collect();
            table[*r] == b.tables()[*op].apply(&image)
        });
        if ok {
            extend(a, b, due, table, out);
        }
        table.pop();
    }
}

/// The subalgebra on `elements` (which must be closed under all operations),
/// with its inclusion. Elements are renumbered in ascending order.
pub fn subalgebra(alg: &FinAlgebra, elements: &[usize]) -> Result<(FinAlgebra, FinMap)> {
    let mut elems = elements.to_vec();
    elems.sort_unstable();
    elems.dedup();
    let mut index = vec![usize::MAX; alg.size()];
    for (i, &x) in elems.iter().enumerate() {
        check_index(x, alg.size())?;
        index[x] = i;
    }
    let m = elems.len();
    let mut tables = Vec::new();
    for (op, t) in alg.ops() {
        let mut values = Vec::new();
        for args in tuples(m, t.arity()) {
            let lifted: Vec<usize> = args.iter().map(|&i| elems[i]).collect();
            let r = t.apply(&lifted);
            if index[r] == usize::MAX {
                return Err(Error::InvalidArgument(format!(
                    "subset is not closed under `{}`: {lifted:?} gives {r}",
                    op.name
                )));
            }
            values.push(index[r]);
        }
        tables.push(OpTable::new(t.arity(), m, values)?);
    }
    let sub = FinAlgebra::new(
        format!("{}|sub", alg.name()),
        FinCarrier::new(m),
        alg.signature().clone(),
        tables,
    )?;
    Ok((sub, FinMap::new(alg.size(), elems)?))
}

/// Pullback of two homomorphisms into a common codomain.
#[derive(Debug, Clone)]
pub struct Pullback {
    pub algebra: FinAlgebra,
    /// Element `i` of the pullback is the pair `pairs[i]`, in lexicographic order.
    pub pairs: Vec<(usize, usize)>,
    pub p1: FinMap,
    pub p2: FinMap,
}

pub fn pullback(a: &FinAlgebra, f: &FinMap, b: &FinAlgebra, g: &FinMap) -> Result<Pullback> {
    a.same_signature(b)?;
    check_size("pullback: first map source", a.size(), f.src())?;
    check_size("pullback: second map source", b.size(), g.src())?;
    check_size("pullback: common codomain", f.dst(), g.dst())?;
    let pairs: Vec<(usize, usize)> = (0..a.size())
        .flat_map(|x| (0..b.size()).filter(move |&y| f.apply(x) == g.apply(y)).map(move |y| (x, y)))
        .collect();
    let index = |p: (usize, usize)| pairs.binary_search(&p).ok();
    let m = pairs.len();
    let mut tables = Vec::new();
    for ((op, ta), tb) in a.ops().zip(b.tables()) {
        let mut values = Vec::new();
        for args in tuples(m, ta.arity()) {
            let left: Vec<usize> = args.iter().map(|&i| pairs[i].0).collect();
            let right: Vec<usize> = args.iter().map(|&i| pairs[i].1).collect();
            let v = index((ta.apply(&left), tb.apply(&right))).ok_or_else(|| {
                Error::InvalidArgument(format!("maps do not preserve `{}`; pullback is not a subalgebra", op.name))
            })?;
            values.push(v);
        }
        tables.push(OpTable::new(ta.arity(), m, values)?);
    }
    let algebra = FinAlgebra::new(
        format!("{}x_{}", a.name(), b.name()),
        FinCarrier::new(m),
        a.signature().clone(),
        tables,
    )?;
    let p1 = FinMap::new(a.size(), pairs.iter().map(|p| p.0).collect())?;
    let p2 = FinMap::new(b.size(), pairs.iter().map(|p| p.1).collect())?;
    Ok(Pullback { algebra, pairs, p1, p2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bare_set, cyclic, direct_product, symmetric};

    #[test]
    fn homomorphism_examples() {
        let z4 = cyclic(4).unwrap();
        let z2 = cyclic(2).unwrap();
        assert!(is_homomorphism(&FinMap::identity(4), &z4, &z4).unwrap().holds);
        let mod2 = FinMap::new(2, vec![0, 1, 0, 1]).unwrap();
        assert!(is_homomorphism(&mod2, &z4, &z2).unwrap().holds);

        let zero = FinMap::new(2, vec![0, 0]).unwrap();
        assert!(is_homomorphism(&zero, &z2, &z2).unwrap().holds);
        let swap = FinMap::new(2, vec![1, 0]).unwrap();
        let check = is_homomorphism(&swap, &z2, &z2).unwrap();
        assert_eq!(check.witness, Some(("mul".to_string(), vec![0, 0])));

        assert!(matches!(
            is_homomorphism(&FinMap::identity(2), &z2, &bare_set(2).unwrap()),
            Err(Error::SignatureMismatch(_))
        ));
    }

    #[test]
    fn homomorphism_enumeration_matches_filter() {
        let z2 = cyclic(2).unwrap();
        let cases = [
            (cyclic(4).unwrap(), z2.clone()),
            (direct_product(&z2, &z2).unwrap(), cyclic(4).unwrap()),
            (symmetric(3).unwrap(), z2.clone()),
            (bare_set(2).unwrap(), bare_set(3).unwrap()),
        ];
        for (a, b) in &cases {
            let fast = all_homomorphisms(a, b).unwrap();
            let slow: Vec<FinMap> = tuples(b.size(), a.size())
                .map(|t| FinMap::new(b.size(), t).unwrap())
                .filter(|f| is_homomorphism(f, a, b).unwrap().holds)
                .collect();
            assert_eq!(fast, slow, "{} -> {}", a.name(), b.name());
        }
        // Z4 → Z2: trivial and mod-2.
        assert_eq!(all_homomorphisms(&cyclic(4).unwrap(), &z2).unwrap().len(), 2);
    }

    #[test]
    fn subalgebra_and_pullback() {
        let z4 = cyclic(4).unwrap();
        let (sub, incl) = subalgebra(&z4, &[2, 0]).unwrap();
        assert_eq!(sub.tables(), cyclic(2).unwrap().tables());
        assert_eq!(incl.table(), &[0, 2]);
        assert!(subalgebra(&z4, &[0, 1]).is_err());

        let z2 = cyclic(2).unwrap();
        let mod2 = FinMap::new(2, vec![0, 1, 0, 1]).unwrap();
        let pb = pullback(&z4, &mod2, &z2, &FinMap::identity(2)).unwrap();
        assert_eq!(pb.pairs, vec![(0, 0), (1, 1), (2, 0), (3, 1)]);
        assert!(is_homomorphism(&pb.p1, &pb.algebra, &z4).unwrap().holds);
    }
}
