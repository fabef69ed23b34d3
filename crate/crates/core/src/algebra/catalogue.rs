//! Built-in instances: cyclic groups, direct products, small permutation
//! groups, the quaternion group, and bare sets (empty signature).

use std::collections::BTreeSet;

use super::{FinAlgebra, OpTable, Signature};
use crate::error::{Error, Result};
use crate::relcalc::FinCarrier;

/// Operation names of the group signature, in table order.
pub const GROUP_SIGNATURE: [(&str, usize); 3] = [("mul", 2), ("inv", 1), ("e", 0)];

pub fn bare_set(n: usize) -> Result<FinAlgebra> {
    FinAlgebra::new(format!("Set{n}"), FinCarrier::new(n), Signature::empty(), vec![])
}

/// Build a group from its multiplication table; identity and inverses are
/// derived and the group axioms checked.
pub fn group_from_cayley(name: impl Into<String>, mul: Vec<Vec<usize>>) -> Result<FinAlgebra> {
    let name = name.into();
    let n = mul.len();
    if n == 0 || mul.iter().any(|row| row.len() != n) {
        return Err(Error::Malformed(format!("`{name}`: Cayley table must be square and non-empty")));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| mul[e][x] == x && mul[x][e] == x))
        .ok_or_else(|| Error::InvalidArgument(format!("`{name}` has no identity")))?;
    let mut inv = vec![usize::MAX; n];
    for x in 0..n {
        inv[x] = (0..n)
            .find(|&y| mul[x][y] == identity && mul[y][x] == identity)
            .ok_or_else(|| Error::InvalidArgument(format!("`{name}`: element {x} has no inverse")))?;
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                    return Err(Error::InvalidArgument(format!("`{name}` is not associative at ({a},{b},{c})")));
                }
            }
        }
    }
    let sig = Signature::new(GROUP_SIGNATURE)?;
    let tables = vec![
        OpTable::new(2, n, mul.into_iter().flatten().collect())?,
        OpTable::new(1, n, inv)?,
        OpTable::new(0, n, vec![identity])?,
    ];
    FinAlgebra::new(name, FinCarrier::new(n), sig, tables)
}

pub fn cyclic(n: usize) -> Result<FinAlgebra> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclic group of order 0".into()));
    }
    let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    group_from_cayley(format!("Z{n}"), mul)
}

/// Direct product over the same signature; `(a, b)` is element `a * |B| + b`.
pub fn direct_product(a: &FinAlgebra, b: &FinAlgebra) -> Result<FinAlgebra> {
    a.same_signature(b)?;
    let (na, nb) = (a.size(), b.size());
    let n = na * nb;
    let mut tables = Vec::new();
    for (ta, tb) in a.tables().iter().zip(b.tables()) {
        let k = ta.arity();
        let t = OpTable::from_fn(k, n, |args| {
            let left: Vec<usize> = args.iter().map(|x| x / nb).collect();
            let right: Vec<usize> = args.iter().map(|x| x % nb).collect();
            ta.apply(&left) * nb + tb.apply(&right)
        })?;
        tables.push(t);
    }
    FinAlgebra::new(
        format!("{}x{}", a.name(), b.name()),
        FinCarrier::new(n),
        a.signature().clone(),
        tables,
    )
}

type Perm = Vec<usize>;

fn compose_perm(p: &Perm, q: &Perm) -> Perm {
    // (p·q)(i) = p(q(i))
    q.iter().map(|&i| p[i]).collect()
}

/// Group generated by permutations; elements sorted lexicographically, so the
/// identity permutation is element 0.
fn permutation_group(name: String, degree: usize, generators: &[Perm]) -> Result<FinAlgebra> {
    let identity: Perm = (0..degree).collect();
    let mut elems: BTreeSet<Perm> = BTreeSet::new();
    elems.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(p) = frontier.pop() {
        for g in generators {
            let q = compose_perm(g, &p);
            if elems.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    let elems: Vec<Perm> = elems.into_iter().collect();
    let index = |p: &Perm| elems.binary_search(p).expect("closed under products");
    let mul = elems
        .iter()
        .map(|p| elems.iter().map(|q| index(&compose_perm(p, q))).collect())
        .collect();
    group_from_cayley(name, mul)
}

pub fn symmetric(degree: usize) -> Result<FinAlgebra> {
    if degree == 0 {
        return Err(Error::InvalidArgument("symmetric group of degree 0".into()));
    }
    let mut gens = Vec::new();
    if degree >= 2 {
        let mut swap: Perm = (0..degree).collect();
        swap.swap(0, 1);
        gens.push(swap);
        gens.push((0..degree).map(|i| (i + 1) % degree).collect());
    }
    permutation_group(format!("S{degree}"), degree, &gens)
}

/// Symmetry group of the regular `n`-gon, of order `2n`.
pub fn dihedral(n: usize) -> Result<FinAlgebra> {
    if n < 3 {
        return Err(Error::InvalidArgument("dihedral groups need at least 3 vertices".into()));
    }
    let rotation: Perm = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Perm = (0..n).map(|i| (n - i) % n).collect();
    permutation_group(format!("D{n}"), n, &[rotation, reflection])
}

/// The quaternion group `Q8`; element `2u + s` is `(-1)^s · u` with
/// `u ∈ {1, i, j, k}`.
pub fn quaternion() -> Result<FinAlgebra> {
    // Unit products: sign and unit of u·v for u, v ∈ {1, i, j, k}.
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mul = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (ua, sa) = (a / 2, a % 2);
                    let (ub, sb) = (b / 2, b % 2);
                    let (s, u) = UNIT[ua][ub];
                    2 * u + (s + sa + sb) % 2
                })
                .collect()
        })
        .collect();
    group_from_cayley("Q8", mul)
}

/// One representative of every isomorphism type of group of order at most
/// `max_order` (supported up to 8).
pub fn small_groups(max_order: usize) -> Result<Vec<FinAlgebra>> {
    if max_order > 8 {
        return Err(Error::BoundExceeded {
            size: max_order,
            bound: 8,
        });
    }
    let z = cyclic;
    let mut out = Vec::new();
    for order in 1..=max_order {
        match order {
            4 => {
                out.push(z(4)?);
                out.push(direct_product(&z(2)?, &z(2)?)?);
            }
            6 => {
                out.push(z(6)?);
                out.push(symmetric(3)?);
            }
            8 => {
                out.push(z(8)?);
                out.push(direct_product(&z(4)?, &z(2)?)?);
                out.push(direct_product(&direct_product(&z(2)?, &z(2)?)?, &z(2)?)?);
                out.push(dihedral(4)?);
                out.push(quaternion()?);
            }
            n => out.push(z(n)?),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_abelian(g: &FinAlgebra) -> bool {
        let mul = g.table("mul").unwrap();
        (0..g.size()).all(|a| (0..g.size()).all(|b| mul.apply(&[a, b]) == mul.apply(&[b, a])))
    }

    fn element_orders(g: &FinAlgebra) -> Vec<usize> {
        let mul = g.table("mul").unwrap();
        let mut orders: Vec<usize> = (0..g.size())
            .map(|x| {
                let (mut y, mut k) = (x, 1);
                while y != 0 {
                    y = mul.apply(&[y, x]);
                    k += 1;
                }
                k
            })
            .collect();
        orders.sort();
        orders
    }

    #[test]
    fn catalogue_of_small_groups() {
        let groups = small_groups(8).unwrap();
        assert_eq!(groups.len(), 14);
        let names: Vec<&str> = groups.iter().map(|g| g.name()).collect();
        assert_eq!(
            names,
            ["Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3", "Z7", "Z8", "Z4xZ2", "Z2xZ2xZ2", "D4", "Q8"]
        );
        // Order-8 types are distinguished by commutativity and element orders.
        let d4 = &groups[12];
        let q8 = &groups[13];
        assert!(!is_abelian(d4) && !is_abelian(q8));
        assert_eq!(element_orders(d4), vec![1, 2, 2, 2, 2, 2, 4, 4]);
        assert_eq!(element_orders(q8), vec![1, 2, 4, 4, 4, 4, 4, 4]);
        assert!(!is_abelian(&groups[7]));
        for g in &groups {
            assert_eq!(g.table("e").unwrap().apply(&[]), 0, "{} identity", g.name());
        }
    }

    #[test]
    fn product_layout() {
        let p = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()).unwrap();
        let mul = p.table("mul").unwrap();
        // (1,2)·(1,2) = (0,1)
        assert_eq!(mul.apply(&[5, 5]), 1);
        assert!(direct_product(&cyclic(2).unwrap(), &bare_set(2).unwrap()).is_err());
    }

    #[test]
    fn rejects_non_groups() {
        assert!(group_from_cayley("bad", vec![vec![0, 0], vec![0, 0]]).is_err());
    }
}
