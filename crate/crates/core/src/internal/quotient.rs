use serde::{Deserialize, Serialize};

use super::{verify_category, verify_groupoid, GraphViolation, InternalCategory, InternalGroupoid, ReflexiveGraph};
use crate::algebra::{check_compatible, is_homomorphism, quotient};
use crate::error::{check_size, Error, Result};
use crate::relcalc::{EquivRelation, FinMap};

/// A morphism of reflexive graphs: `f` on objects, `g` on arrows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RGMorphism {
    pub f: FinMap,
    pub g: FinMap,
    pub surjective_objects: bool,
    pub surjective_arrows: bool,
}

impl RGMorphism {
    /// Checks `f∘d = d'∘g`, `f∘c = c'∘g`, `g∘e = e'∘f` and, in algebra mode,
    /// that both levels are homomorphisms.
    pub fn new(src: &ReflexiveGraph, dst: &ReflexiveGraph, f: FinMap, g: FinMap) -> Result<Self> {
        check_size("object map source", src.objects(), f.src())?;
        check_size("object map target", dst.objects(), f.dst())?;
        check_size("arrow map source", src.arrows(), g.src())?;
        check_size("arrow map target", dst.arrows(), g.dst())?;
        for a in 0..src.arrows() {
            if f.apply(src.d().apply(a)) != dst.d().apply(g.apply(a)) {
                return Err(Error::NonCommutingSquare(format!("f∘d and d'∘g differ at arrow {a}")));
            }
            if f.apply(src.c().apply(a)) != dst.c().apply(g.apply(a)) {
                return Err(Error::NonCommutingSquare(format!("f∘c and c'∘g differ at arrow {a}")));
            }
        }
        for x in 0..src.objects() {
            if g.apply(src.e().apply(x)) != dst.e().apply(f.apply(x)) {
                return Err(Error::NonCommutingSquare(format!("g∘e and e'∘f differ at object {x}")));
            }
        }
        for (name, map, a, b) in [("f", &f, src.x0(), dst.x0()), ("g", &g, src.x1(), dst.x1())] {
            if let Some((op, args)) = is_homomorphism(map, a, b)?.witness {
                return Err(Error::InvalidArgument(format!("{name} does not preserve `{op}` at {args:?}")));
            }
        }
        Ok(RGMorphism {
            surjective_objects: f.is_surjective(),
            surjective_arrows: g.is_surjective(),
            f,
            g,
        })
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective_objects && self.surjective_arrows
    }
}

/// Levelwise quotient of `src` by `theta1` on arrows and `theta0` on objects.
///
/// The kernels must be respected by `d`, `c` and `e`; in algebra mode they
/// must also be congruences.
pub fn quotient_rg(
    src: &ReflexiveGraph,
    theta1: &EquivRelation,
    theta0: &EquivRelation,
) -> Result<(ReflexiveGraph, RGMorphism)> {
    check_size("arrow kernel", src.arrows(), theta1.size())?;
    check_size("object kernel", src.objects(), theta0.size())?;
    for (a, b) in theta1.pairs() {
        for (name, m) in [("d", src.d()), ("c", src.c())] {
            if !theta0.related(m.apply(a), m.apply(b)) {
                return Err(Error::IncompatibleKernels(format!(
                    "arrows {a} and {b} are identified but their images under {name} are not"
                )));
            }
        }
    }
    for (x, y) in theta0.pairs() {
        if !theta1.related(src.e().apply(x), src.e().apply(y)) {
            return Err(Error::IncompatibleKernels(format!(
                "objects {x} and {y} are identified but their identity arrows are not"
            )));
        }
    }
    for (theta, alg) in [(theta1, src.x1()), (theta0, src.x0())] {
        check_compatible(alg, theta).map_err(|e| Error::IncompatibleKernels(e.to_string()))?;
    }
    let (x1, g) = quotient(src.x1(), theta1)?;
    let (x0, f) = quotient(src.x0(), theta0)?;
    let (f, g) = (f.into_map(), g.into_map());
    let reps1: Vec<usize> = theta1.blocks().iter().map(|b| b[0]).collect();
    let reps0: Vec<usize> = theta0.blocks().iter().map(|b| b[0]).collect();
    let through = |m: &FinMap, reps: &[usize], q: &FinMap| -> Result<FinMap> {
        FinMap::new(q.dst(), reps.iter().map(|&r| q.apply(m.apply(r))).collect())
    };
    let dst = ReflexiveGraph::new(
        x0,
        x1,
        through(src.d(), &reps1, &f)?,
        through(src.c(), &reps1, &f)?,
        through(src.e(), &reps0, &g)?,
    )?;
    let mor = RGMorphism::new(src, &dst, f, g)?;
    Ok((dst, mor))
}

/// Two composable lifts of one composable pair of the quotient whose
/// composites have different images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftConflict {
    pub pair: (usize, usize),
    pub lifts: [(usize, usize); 2],
    pub images: [usize; 2],
}

/// Outcome of pushing a groupoid structure along a surjective graph morphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedReport {
    /// Every composable pair of the target has a lift and all lifts agree.
    pub well_defined: bool,
    pub category: bool,
    pub groupoid: bool,
    pub conflict: Option<LiftConflict>,
    /// A composable pair of the target with no composable lift.
    pub unlifted: Option<(usize, usize)>,
    pub violation: Option<GraphViolation>,
    #[serde(skip)]
    pub structure: Option<InternalGroupoid>,
}

impl InducedReport {
    fn undefined(conflict: Option<LiftConflict>, unlifted: Option<(usize, usize)>) -> Self {
        InducedReport {
            well_defined: false,
            category: false,
            groupoid: false,
            conflict,
            unlifted,
            violation: None,
            structure: None,
        }
    }

    /// Entries `[g', h', g'∘h']` of the induced composition, when defined.
    pub fn composition(&self) -> Option<Vec<[usize; 3]>> {
        let s = self.structure.as_ref()?;
        Some(s.category().entries().map(|(g, h, k)| [g, h, k]).collect())
    }
}

/// Tries `m'([a], [b]) := [m(a, b)]` and `i'([a]) := [i(a)]` on `dst`.
///
/// Reports the first pair of disagreeing lifts, or a pair with no lift, and
/// otherwise checks the category and groupoid laws of the induced structure.
pub fn induced_structure_search(dst: &ReflexiveGraph, from: &InternalGroupoid, mor: &RGMorphism) -> Result<InducedReport> {
    let src = from.graph();
    let mor = RGMorphism::new(src, dst, mor.f.clone(), mor.g.clone())?;
    if !mor.is_surjective() {
        return Err(Error::InvalidArgument("graph morphism must be surjective on both levels".into()));
    }
    let g = &mor.g;
    let mut table: Vec<Option<(usize, (usize, usize))>> = vec![None; dst.composable().len()];
    for (a, b, k) in from.category().entries() {
        let pair = (g.apply(a), g.apply(b));
        let idx = dst.pair_index(pair.0, pair.1).expect("graph morphisms preserve composability");
        let image = g.apply(k);
        match table[idx] {
            None => table[idx] = Some((image, (a, b))),
            Some((first, lift)) if first != image => {
                return Ok(InducedReport::undefined(
                    Some(LiftConflict {
                        pair,
                        lifts: [lift, (a, b)],
                        images: [first, image],
                    }),
                    None,
                ));
            }
            Some(_) => {}
        }
    }
    if let Some(i) = table.iter().position(Option::is_none) {
        return Ok(InducedReport::undefined(None, Some(dst.composable()[i])));
    }
    let m = table.into_iter().map(|v| v.unwrap().0).collect();
    let cat = InternalCategory::new(dst.clone(), m)?;
    let check = verify_category(&cat)?;
    if !check.holds {
        return Ok(InducedReport {
            well_defined: true,
            category: false,
            groupoid: false,
            conflict: None,
            unlifted: None,
            violation: check.violation,
            structure: None,
        });
    }
    let mut inv = vec![None; dst.arrows()];
    for a in 0..src.arrows() {
        inv[g.apply(a)].get_or_insert(g.apply(from.inverse().apply(a)));
    }
    let inv = FinMap::new(dst.arrows(), inv.into_iter().map(Option::unwrap).collect())?;
    let grpd = InternalGroupoid::new(cat, inv)?;
    let check = verify_groupoid(&grpd)?;
    Ok(InducedReport {
        well_defined: true,
        category: true,
        groupoid: check.holds,
        conflict: None,
        unlifted: None,
        violation: check.violation,
        structure: check.holds.then_some(grpd),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bare_set, cyclic};

    fn one_object_group(n: usize) -> InternalGroupoid {
        let graph = ReflexiveGraph::one_object(&cyclic(n).unwrap(), 0).unwrap();
        let cat = InternalCategory::from_fn(graph, |g, h| (g + h) % n).unwrap();
        InternalGroupoid::from_category(cat).unwrap()
    }

    #[test]
    fn trivial_quotient_is_isomorphic() {
        let grpd = one_object_group(4);
        let (dst, mor) =
            quotient_rg(grpd.graph(), &EquivRelation::discrete(4), &EquivRelation::discrete(1)).unwrap();
        assert_eq!(mor.g, FinMap::identity(4));
        let rep = induced_structure_search(&dst, &grpd, &mor).unwrap();
        assert!(rep.groupoid);
        assert_eq!(rep.structure.unwrap().category().table(), grpd.category().table());
    }

    #[test]
    fn cyclic_four_to_two() {
        let grpd = one_object_group(4);
        let theta1 = EquivRelation::from_key(4, |x| x % 2);
        let (dst, mor) = quotient_rg(grpd.graph(), &theta1, &EquivRelation::discrete(1)).unwrap();
        assert_eq!((dst.objects(), dst.arrows()), (1, 2));
        assert_eq!(mor.g.table(), &[0, 1, 0, 1]);
        let rep = induced_structure_search(&dst, &grpd, &mor).unwrap();
        assert!(rep.well_defined && rep.category && rep.groupoid);
        assert_eq!(rep.composition().unwrap(), vec![[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]);
    }

    #[test]
    fn non_congruence_rejected_in_algebra_mode() {
        let grpd = one_object_group(4);
        let theta1 = EquivRelation::from_partition(4, &[vec![0], vec![1, 2], vec![3]]).unwrap();
        let err = quotient_rg(grpd.graph(), &theta1, &EquivRelation::discrete(1)).unwrap_err();
        assert!(matches!(err, Error::IncompatibleKernels(_)));
    }

    #[test]
    fn set_mode_lift_conflict() {
        let graph = ReflexiveGraph::one_object(&bare_set(3).unwrap(), 0).unwrap();
        let cat = InternalCategory::from_fn(graph, |g, h| (g + h) % 3).unwrap();
        let grpd = InternalGroupoid::from_category(cat).unwrap();
        let theta1 = EquivRelation::from_partition(3, &[vec![0], vec![1, 2]]).unwrap();
        let (dst, mor) = quotient_rg(grpd.graph(), &theta1, &EquivRelation::discrete(1)).unwrap();
        let rep = induced_structure_search(&dst, &grpd, &mor).unwrap();
        assert!(!rep.well_defined);
        assert_eq!(
            rep.conflict,
            Some(LiftConflict {
                pair: (1, 1),
                lifts: [(1, 1), (1, 2)],
                images: [1, 0],
            })
        );
    }

    #[test]
    fn pair_groupoid_glued_objects() {
        // Pair groupoid on {0,1,2}; glue objects 1 and 2 and arrows with the
        // same glued endpoints.
        let arrows: Vec<(usize, usize)> = (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).collect();
        let graph = ReflexiveGraph::of_pairs(3, &arrows).unwrap();
        let cat = InternalCategory::from_fn(graph, |g, h| (h / 3) * 3 + g % 3).unwrap();
        let grpd = InternalGroupoid::from_category(cat).unwrap();
        let f = [0, 1, 1];
        let theta0 = EquivRelation::from_key(3, |x| f[x]);
        let theta1 = EquivRelation::from_key(9, |a| (f[a / 3], f[a % 3]));
        let (dst, mor) = quotient_rg(grpd.graph(), &theta1, &theta0).unwrap();
        assert_eq!((dst.objects(), dst.arrows()), (2, 4));
        assert!(dst.is_relation());
        let rep = induced_structure_search(&dst, &grpd, &mor).unwrap();
        assert!(rep.groupoid);
    }

    #[test]
    fn incompatible_kernels() {
        let arrows: Vec<(usize, usize)> = (0..2).flat_map(|x| (0..2).map(move |y| (x, y))).collect();
        let graph = ReflexiveGraph::of_pairs(2, &arrows).unwrap();
        // Gluing the two identities forces gluing the objects.
        let theta1 = EquivRelation::from_partition(4, &[vec![0, 3], vec![1], vec![2]]).unwrap();
        let err = quotient_rg(&graph, &theta1, &EquivRelation::discrete(2)).unwrap_err();
        assert!(matches!(err, Error::IncompatibleKernels(_)));
    }
}
