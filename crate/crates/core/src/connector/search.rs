//! Backtracking search for connectors with constraint propagation.
//!
//! Values forced by the unit laws are seeded first. Axiom 1 restricts each
//! cell to `[x]_S ∩ [z]_R`. Axiom 4 instances and (in algebra mode) the
//! homomorphism equations are propagated as soon as their inner cells are
//! known; equalities between two still-unknown cells are kept as links and
//! fire when either side is assigned. Branching picks the first unknown
//! triple in domain order and tries values in ascending order.

use super::{Connector, PullbackDomain};
use crate::algebra::{check_compatible, tuples, FinAlgebra};
use crate::error::{check_size, Result};
use crate::relcalc::EquivRelation;

#[derive(Clone)]
struct State {
    table: Vec<Option<usize>>,
    links: Vec<Vec<usize>>,
}

struct Search<'a> {
    dom: &'a PullbackDomain,
    alg: Option<&'a FinAlgebra>,
    /// Triples indexed by their last component.
    by_last: Vec<Vec<usize>>,
    /// Triples indexed by their first component.
    by_first: Vec<Vec<usize>>,
    limit: usize,
    found: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(dom: &'a PullbackDomain, alg: Option<&'a FinAlgebra>, limit: usize) -> Self {
        let n = dom.size();
        let mut by_last = vec![Vec::new(); n];
        let mut by_first = vec![Vec::new(); n];
        for (i, &(x, _, z)) in dom.triples().iter().enumerate() {
            by_last[z].push(i);
            by_first[x].push(i);
        }
        Search {
            dom,
            alg,
            by_last,
            by_first,
            limit,
            found: Vec::new(),
        }
    }

    fn admissible(&self, t: usize, v: usize) -> bool {
        let (x, _, z) = self.dom.triples()[t];
        self.dom.s().related(x, v) && self.dom.r().related(v, z)
    }

    fn assign(&self, st: &mut State, t: usize, v: usize, queue: &mut Vec<usize>) -> bool {
        match st.table[t] {
            Some(w) => w == v,
            None => {
                if !self.admissible(t, v) {
                    return false;
                }
                st.table[t] = Some(v);
                queue.push(t);
                true
            }
        }
    }

    fn equate(&self, st: &mut State, a: usize, b: usize, queue: &mut Vec<usize>) -> bool {
        match (st.table[a], st.table[b]) {
            (Some(u), Some(v)) => u == v,
            (Some(u), None) => self.assign(st, b, u, queue),
            (None, Some(v)) => self.assign(st, a, v, queue),
            (None, None) => {
                if a != b {
                    st.links[a].push(b);
                    st.links[b].push(a);
                }
                true
            }
        }
    }

    fn propagate(&self, st: &mut State, queue: &mut Vec<usize>) -> bool {
        let triples = self.dom.triples();
        while let Some(t) = queue.pop() {
            let w = st.table[t].expect("queued cells are assigned");
            for l in st.links[t].clone() {
                if !self.assign(st, l, w, queue) {
                    return false;
                }
            }
            let (a, b, c) = triples[t];
            // t as the inner triple (z,u,v) of p(x,y,p(z,u,v)) = p(p(x,y,z),u,v).
            for &i in &self.by_last[a] {
                if let Some(w1) = st.table[i] {
                    let (x, y, _) = triples[i];
                    if let (Some(o1), Some(o2)) = (self.dom.index_of(x, y, w), self.dom.index_of(w1, b, c)) {
                        if !self.equate(st, o1, o2, queue) {
                            return false;
                        }
                    }
                }
            }
            // t as the inner triple (x,y,z).
            for &j in &self.by_first[c] {
                if let Some(w2) = st.table[j] {
                    let (_, u, v) = triples[j];
                    if let (Some(o1), Some(o2)) = (self.dom.index_of(a, b, w2), self.dom.index_of(w, u, v)) {
                        if !self.equate(st, o1, o2, queue) {
                            return false;
                        }
                    }
                }
            }
            if let Some(alg) = self.alg {
                if !self.propagate_homomorphism(alg, st, t, queue) {
                    return false;
                }
            }
        }
        true
    }

    /// Equations `p(g(t_1..t_k)) = g(p(t_1)..p(t_k))` in which `t` occurs and
    /// all other arguments are known.
    fn propagate_homomorphism(&self, alg: &FinAlgebra, st: &mut State, t: usize, queue: &mut Vec<usize>) -> bool {
        let triples = self.dom.triples();
        let known: Vec<usize> = (0..triples.len()).filter(|&i| st.table[i].is_some()).collect();
        for table in alg.tables() {
            let k = table.arity();
            if k == 0 {
                continue;
            }
            for pos in 0..k {
                for others in tuples(known.len(), k - 1) {
                    let mut args: Vec<usize> = others.iter().map(|&i| known[i]).collect();
                    args.insert(pos, t);
                    let comp = |c: usize| -> Vec<usize> {
                        args.iter()
                            .map(|&i| {
                                let (x, y, z) = triples[i];
                                [x, y, z][c]
                            })
                            .collect()
                    };
                    let target = self
                        .dom
                        .index_of(table.apply(&comp(0)), table.apply(&comp(1)), table.apply(&comp(2)))
                        .expect("domain of congruences is a subalgebra");
                    let values: Vec<usize> = args.iter().map(|&i| st.table[i].expect("known")).collect();
                    if !self.assign(st, target, table.apply(&values), queue) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn seed(&self) -> Option<State> {
        let len = self.dom.len();
        let mut st = State {
            table: vec![None; len],
            links: vec![Vec::new(); len],
        };
        let mut queue = Vec::new();
        for (i, &(x, y, z)) in self.dom.triples().iter().enumerate() {
            let forced = if x == y {
                Some(z)
            } else if y == z {
                Some(x)
            } else {
                None
            };
            if let Some(v) = forced {
                if !self.assign(&mut st, i, v, &mut queue) {
                    return None;
                }
            }
        }
        if let Some(alg) = self.alg {
            for table in alg.tables().iter().filter(|t| t.arity() == 0) {
                let c = table.apply(&[]);
                let i = self.dom.index_of(c, c, c).expect("diagonal triples are in the domain");
                if !self.assign(&mut st, i, c, &mut queue) {
                    return None;
                }
            }
        }
        self.propagate(&mut st, &mut queue).then_some(st)
    }

    fn run(&mut self, st: State) {
        if self.found.len() >= self.limit {
            return;
        }
        let Some(t) = st.table.iter().position(Option::is_none) else {
            self.found.push(st.table.iter().map(|v| v.expect("complete")).collect());
            return;
        };
        for v in 0..self.dom.size() {
            if !self.admissible(t, v) {
                continue;
            }
            let mut next = st.clone();
            let mut queue = Vec::new();
            if self.assign(&mut next, t, v, &mut queue) && self.propagate(&mut next, &mut queue) {
                self.run(next);
                if self.found.len() >= self.limit {
                    return;
                }
            }
        }
    }
}

fn search(r: &EquivRelation, s: &EquivRelation, alg: Option<&FinAlgebra>, limit: usize) -> Result<Vec<Connector>> {
    let dom = PullbackDomain::new(r, s)?;
    if let Some(a) = alg {
        check_size("connector search carrier", a.size(), dom.size())?;
        check_compatible(a, r)?;
        check_compatible(a, s)?;
    }
    let mut search = Search::new(&dom, alg, limit);
    if limit > 0 {
        if let Some(st) = search.seed() {
            search.run(st);
        }
    }
    let found = std::mem::take(&mut search.found);
    found.into_iter().map(|t| Connector::new(dom.clone(), t)).collect()
}

/// Up to `limit` connectors between `R` and `S` on a bare set, in search order.
pub fn find_connectors(r: &EquivRelation, s: &EquivRelation, limit: usize) -> Result<Vec<Connector>> {
    search(r, s, None, limit)
}

/// Up to `limit` connectors that are also homomorphisms `R ×_X S → X` for the
/// given algebra. `R` and `S` must be congruences.
pub fn find_connectors_in(alg: &FinAlgebra, r: &EquivRelation, s: &EquivRelation, limit: usize) -> Result<Vec<Connector>> {
    search(r, s, Some(alg), limit)
}

/// Whether at most one connector exists (over the algebra when one is given).
pub fn connectors_unique(r: &EquivRelation, s: &EquivRelation, alg: Option<&FinAlgebra>) -> Result<bool> {
    Ok(search(r, s, alg, 2)?.len() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bare_set, cyclic, direct_product, symmetric};
    use crate::connector::verify_connector;

    fn part(n: usize, blocks: &[&[usize]]) -> EquivRelation {
        let b: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
        EquivRelation::from_partition(n, &b).unwrap()
    }

    /// Oracle: unit laws fixed, every other cell ranging over `[x]_S ∩ [z]_R`,
    /// each complete table filtered by the verifier.
    fn brute_force(r: &EquivRelation, s: &EquivRelation) -> Vec<Vec<usize>> {
        fn fill(i: usize, choices: &[Vec<usize>], table: &mut Vec<usize>, dom: &PullbackDomain, out: &mut Vec<Vec<usize>>) {
            if i == choices.len() {
                let p = Connector::new(dom.clone(), table.clone()).unwrap();
                if verify_connector(&p, None).unwrap().holds {
                    out.push(table.clone());
                }
                return;
            }
            for &v in &choices[i] {
                table[i] = v;
                fill(i + 1, choices, table, dom, out);
            }
        }
        let dom = PullbackDomain::new(r, s).unwrap();
        let choices: Vec<Vec<usize>> = dom
            .triples()
            .iter()
            .map(|&(x, y, z)| match (x == y, y == z) {
                (true, _) => vec![z],
                (false, true) => vec![x],
                _ => (0..dom.size()).filter(|&v| s.related(x, v) && r.related(v, z)).collect(),
            })
            .collect();
        let mut out = Vec::new();
        fill(0, &choices, &mut vec![0; dom.len()], &dom, &mut out);
        out
    }

    #[test]
    fn no_connector_instance() {
        let r = part(3, &[&[0, 1], &[2]]);
        let s = part(3, &[&[0, 2], &[1]]);
        assert!(find_connectors(&r, &s, 10).unwrap().is_empty());
        assert!(brute_force(&r, &s).is_empty());
    }

    #[test]
    fn discrete_has_one() {
        let d = EquivRelation::discrete(4);
        let found = find_connectors(&d, &d, 10).unwrap();
        assert_eq!(found.len(), 1);
        assert!(connectors_unique(&d, &d, None).unwrap());
    }

    #[test]
    fn product_square_fourth_corner() {
        // (a, b) is element 2a + b.
        let r = part(4, &[&[0, 1], &[2, 3]]);
        let s = part(4, &[&[0, 2], &[1, 3]]);
        let found = find_connectors(&r, &s, 10).unwrap();
        assert_eq!(found.len(), 1);
        let p = &found[0];
        for ((x, _, z), w) in p.entries() {
            assert_eq!(w, 2 * (z / 2) + x % 2);
        }
    }

    #[test]
    fn search_matches_brute_force_on_three_elements() {
        let parts = [
            EquivRelation::discrete(3),
            EquivRelation::full(3),
            part(3, &[&[0, 1], &[2]]),
            part(3, &[&[0, 2], &[1]]),
            part(3, &[&[0], &[1, 2]]),
        ];
        for r in &parts {
            for s in &parts {
                let fast: Vec<Vec<usize>> = find_connectors(r, s, usize::MAX)
                    .unwrap()
                    .into_iter()
                    .map(|p| p.table().to_vec())
                    .collect();
                let mut sorted = fast.clone();
                sorted.sort();
                assert_eq!(sorted, brute_force(r, s), "R={r} S={s}");
            }
        }
    }

    #[test]
    fn two_element_full_pair() {
        // On two elements the only associative Mal'tsev operation is x ⊕ y ⊕ z.
        let full = EquivRelation::full(2);
        let found = find_connectors(&full, &full, usize::MAX).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].table(), &[0, 1, 1, 0, 1, 0, 0, 1]);
        assert!(connectors_unique(&full, &full, None).unwrap());
    }

    #[test]
    fn algebra_mode_on_groups() {
        let z2 = cyclic(2).unwrap();
        for g in [cyclic(4).unwrap(), direct_product(&z2, &z2).unwrap()] {
            let n = g.size();
            let full = EquivRelation::full(n);
            let found = find_connectors_in(&g, &full, &full, 2).unwrap();
            assert_eq!(found.len(), 1, "{}", g.name());
            let (mul, inv) = (g.table("mul").unwrap(), g.table("inv").unwrap());
            for ((x, y, z), w) in found[0].entries() {
                assert_eq!(w, mul.apply(&[mul.apply(&[x, inv.apply(&[y])]), z]));
            }
        }
        // x·y⁻¹·z is not a homomorphism on a nonabelian group.
        let s3 = symmetric(3).unwrap();
        let full = EquivRelation::full(6);
        assert!(find_connectors_in(&s3, &full, &full, 2).unwrap().is_empty());
        assert!(find_connectors_in(&bare_set(2).unwrap(), &EquivRelation::full(2), &EquivRelation::full(2), 2)
            .unwrap()
            .len()
            == 1);
    }
}
