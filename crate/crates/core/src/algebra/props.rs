use proptest::prelude::*;

use super::*;
use crate::relcalc::{EquivRelation, FinCarrier};

/// A random algebra with one unary and one binary operation on at most four
/// points.
fn algebra() -> impl Strategy<Value = FinAlgebra> {
    (1..=4usize).prop_flat_map(|n| {
        (proptest::collection::vec(0..n, n), proptest::collection::vec(0..n, n * n)).prop_map(move |(u, b)| {
            let sig = Signature::new([("u", 1), ("b", 2)]).unwrap();
            let tables = vec![OpTable::new(1, n, u).unwrap(), OpTable::new(2, n, b).unwrap()];
            FinAlgebra::new("random", FinCarrier::new(n), sig, tables).unwrap()
        })
    })
}

fn group() -> impl Strategy<Value = FinAlgebra> {
    let groups = small_groups(8).unwrap();
    (0..groups.len()).prop_map(move |k| groups[k].clone())
}

/// Oracle: an equivalence is a congruence when every operation maps related
/// argument tuples to related values, checked one argument at a time.
fn compatible(alg: &FinAlgebra, e: &EquivRelation) -> bool {
    let n = alg.size();
    alg.ops().all(|(_, t)| {
        tuples(n, t.arity()).all(|args| {
            (0..t.arity()).all(|k| {
                (0..n).filter(|&v| e.related(args[k], v)).all(|v| {
                    let mut moved = args.clone();
                    moved[k] = v;
                    e.related(t.apply(&args), t.apply(&moved))
                })
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn congruences_are_compatible_and_form_a_lattice(alg in algebra()) {
        let congs = all_congruences(&alg).unwrap();
        let set: Vec<&EquivRelation> = congs.iter().map(|c| c.equiv()).collect();
        prop_assert!(set.iter().any(|e| e.is_discrete()));
        prop_assert!(set.iter().any(|e| e.is_full()));
        for a in &set {
            prop_assert!(compatible(&alg, a));
            for b in &set {
                prop_assert!(set.contains(&&a.meet(b).unwrap()));
                prop_assert!(set.contains(&&a.join(b).unwrap()));
            }
        }
    }

    #[test]
    fn quotient_map_is_a_surjective_homomorphism(alg in algebra(), pick in any::<prop::sample::Index>()) {
        let congs = all_congruences(&alg).unwrap();
        let theta = congs[pick.index(congs.len())].equiv();
        let (q, f) = quotient(&alg, theta).unwrap();
        prop_assert_eq!(q.size(), theta.num_blocks());
        prop_assert!(f.map().is_surjective());
        prop_assert!(is_homomorphism(f.map(), &alg, &q).unwrap().holds);
        prop_assert_eq!(&f.map().kernel_pair(), theta);
    }

    #[test]
    fn generated_congruence_is_least(alg in algebra(), x in 0..4usize, y in 0..4usize) {
        let n = alg.size();
        let (x, y) = (x % n, y % n);
        let generated = congruence_generated(&alg, [(x, y)]).unwrap();
        for c in all_congruences(&alg).unwrap() {
            if c.equiv().related(x, y) {
                prop_assert!(generated.equiv().refines(c.equiv()));
            }
        }
    }

    #[test]
    fn algebra_json_round_trips(alg in algebra()) {
        let text = serde_json::to_string(&alg).unwrap();
        prop_assert_eq!(serde_json::from_str::<FinAlgebra>(&text).unwrap(), alg);
    }

    #[test]
    fn groups_satisfy_their_terms_and_are_modular(g in group()) {
        let terms = group_hm_terms(&g).unwrap();
        prop_assert!(verify_hm_terms(&g, &terms).unwrap().holds);
        prop_assert!(modularity_check(&g).unwrap().modular);
        prop_assert!(check_goursat_instance(&g).unwrap().holds);
    }
}
