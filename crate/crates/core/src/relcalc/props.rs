use proptest::prelude::*;

use super::*;

fn relation(n: usize, m: usize) -> impl Strategy<Value = Relation> {
    proptest::collection::vec(any::<bool>(), n * m)
        .prop_map(move |bits| Relation::from_pairs(n, m, (0..n * m).filter(|&k| bits[k]).map(|k| (k / m, k % m))).unwrap())
}

fn square(max: usize) -> impl Strategy<Value = Relation> {
    (1..=max).prop_flat_map(|n| relation(n, n))
}

/// A random equivalence via block labels.
fn equiv(n: usize) -> impl Strategy<Value = EquivRelation> {
    proptest::collection::vec(0..n, n).prop_map(move |labels| EquivRelation::from_key(n, |x| labels[x]))
}

fn equiv_pair(max: usize) -> impl Strategy<Value = (EquivRelation, EquivRelation)> {
    (1..=max).prop_flat_map(|n| (equiv(n), equiv(n)))
}

/// Naive transitive closure by repeated squaring of the pair set.
fn naive_closure(r: &Relation) -> Relation {
    let n = r.src();
    let mut pairs: Vec<(usize, usize)> = r.pairs().chain((0..n).map(|x| (x, x))).collect();
    pairs.extend(r.pairs().map(|(x, y)| (y, x)));
    loop {
        let cur = Relation::from_pairs(n, n, pairs.iter().copied()).unwrap();
        let next = cur.compose(&cur).unwrap();
        if next == cur {
            return cur;
        }
        pairs = next.pairs().collect();
    }
}

proptest! {
    #[test]
    fn compose_is_associative((a, b, c) in (1..4usize, 1..4usize, 1..4usize, 1..4usize)
        .prop_flat_map(|(n, m, k, l)| (relation(n, m), relation(m, k), relation(k, l)))) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_is_neutral(r in (1..5usize, 1..5usize).prop_flat_map(|(n, m)| relation(n, m))) {
        prop_assert_eq!(Relation::identity(r.src()).compose(&r).unwrap(), r.clone());
        prop_assert_eq!(r.compose(&Relation::identity(r.dst())).unwrap(), r);
    }

    #[test]
    fn opposite_reverses_composites((a, b) in (1..4usize, 1..4usize, 1..4usize)
        .prop_flat_map(|(n, m, k)| (relation(n, m), relation(m, k)))) {
        let lhs = a.compose(&b).unwrap().opposite();
        prop_assert_eq!(lhs, b.opposite().compose(&a.opposite()).unwrap());
        prop_assert_eq!(a.opposite().opposite(), a);
    }

    #[test]
    fn compose_distributes_over_union((a, b, c) in (1..4usize, 1..4usize, 1..4usize)
        .prop_flat_map(|(n, m, k)| (relation(n, m), relation(n, m), relation(m, k)))) {
        let lhs = a.union(&b).unwrap().compose(&c).unwrap();
        let rhs = a.compose(&c).unwrap().union(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn closure_is_least_equivalence(r in square(5)) {
        let e = equivalence_closure(&r).unwrap();
        prop_assert!(r.is_subset(&e.to_relation()));
        prop_assert!(is_equivalence(&e.to_relation()).unwrap().is_equivalence());
        prop_assert_eq!(e.to_relation(), naive_closure(&r));
        prop_assert_eq!(equivalence_closure(&e.to_relation()).unwrap(), e);
    }

    #[test]
    fn canonical_form_ignores_presentation(e in (1..6usize).prop_flat_map(equiv), rot in 0..6usize) {
        let mut blocks = e.blocks();
        for b in &mut blocks {
            b.reverse();
        }
        let k = rot % blocks.len();
        blocks.rotate_left(k);
        prop_assert_eq!(EquivRelation::from_partition(e.size(), &blocks).unwrap(), e.clone());
        prop_assert_eq!(EquivRelation::from_relation(&e.to_relation()).unwrap(), e.clone());
        let text = serde_json::to_string(&e).unwrap();
        prop_assert_eq!(serde_json::from_str::<EquivRelation>(&text).unwrap(), e);
    }

    #[test]
    fn relation_json_round_trips(r in (1..5usize, 1..5usize).prop_flat_map(|(n, m)| relation(n, m))) {
        let text = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<Relation>(&text).unwrap(), r);
    }

    #[test]
    fn permutability_is_monotone_in_length((r, s) in equiv_pair(5), n in 2..5usize) {
        if permutability(&r, &s, n).unwrap().holds {
            prop_assert!(permutability(&r, &s, n + 1).unwrap().holds);
        }
    }

    #[test]
    fn join_is_closure_of_union((r, s) in equiv_pair(5)) {
        let union = r.to_relation().union(&s.to_relation()).unwrap();
        prop_assert_eq!(r.join(&s).unwrap(), equivalence_closure(&union).unwrap());
        let meet = r.to_relation().intersection(&s.to_relation()).unwrap();
        prop_assert_eq!(r.meet(&s).unwrap().to_relation(), meet);
    }

    #[test]
    fn kernel_pair_is_f_then_f_opposite(table in (1..5usize).prop_flat_map(|n| proptest::collection::vec(0..n, 1..6))) {
        let n = table.iter().max().unwrap() + 1;
        let f = FinMap::new(n, table).unwrap();
        let graph = Relation::from_pairs(f.src(), f.dst(), (0..f.src()).map(|x| (x, f.apply(x)))).unwrap();
        prop_assert_eq!(kernel_pair(&f).to_relation(), graph.compose(&graph.opposite()).unwrap());
    }

    #[test]
    fn image_of_equivalence_is_reflexive_and_symmetric_on_image(
        (e, table) in (1..6usize).prop_flat_map(|n| (equiv(n), proptest::collection::vec(0..n, n)))
    ) {
        let f = FinMap::new(e.size(), table).unwrap();
        let image = regular_image(&f, &e.to_relation()).unwrap();
        let (_, mono) = image_factorization(&f);
        for y in mono.table() {
            prop_assert!(image.contains(*y, *y));
        }
        prop_assert_eq!(image.opposite(), image);
    }
}
