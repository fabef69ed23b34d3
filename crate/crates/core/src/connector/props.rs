use proptest::prelude::*;

use super::*;
use crate::algebra::small_groups;
use crate::relcalc::{EquivRelation, FinMap};

fn equiv(n: usize) -> impl Strategy<Value = EquivRelation> {
    proptest::collection::vec(0..n, n).prop_map(move |labels| EquivRelation::from_key(n, |x| labels[x]))
}

fn equiv_pair(max: usize) -> impl Strategy<Value = (EquivRelation, EquivRelation)> {
    (1..=max).prop_flat_map(|n| (equiv(n), equiv(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn found_connectors_verify_and_round_trip((r, s) in equiv_pair(4)) {
        for p in find_connectors(&r, &s, 4).unwrap() {
            prop_assert!(verify_connector(&p, None).unwrap().holds);
            let double = connector_to_centralizing(&p).unwrap();
            prop_assert!(is_centralizing(&double).holds);
            prop_assert_eq!(centralizing_to_connector(&double).unwrap(), p.clone());
            let text = serde_json::to_string(&p).unwrap();
            prop_assert_eq!(serde_json::from_str::<Connector>(&text).unwrap(), p.clone());
            let text = serde_json::to_string(&double).unwrap();
            prop_assert_eq!(serde_json::from_str::<DoubleRelation>(&text).unwrap(), double);
        }
    }

    #[test]
    fn mirrored_connector_swaps_the_relations((r, s) in equiv_pair(4)) {
        for p in find_connectors(&r, &s, 2).unwrap() {
            let m = p.mirror().unwrap();
            prop_assert_eq!((m.r(), m.s()), (p.s(), p.r()));
            prop_assert!(verify_connector(&m, None).unwrap().holds);
        }
    }

    #[test]
    fn connected_relations_commute((r, s) in equiv_pair(4)) {
        // A connector forces RS = SR.
        if !find_connectors(&r, &s, 1).unwrap().is_empty() {
            let (rr, sr) = (r.to_relation(), s.to_relation());
            prop_assert_eq!(rr.compose(&sr).unwrap(), sr.compose(&rr).unwrap());
        }
    }

    #[test]
    fn group_connectors_survive_quotients(k in 0..14usize, r in any::<prop::sample::Index>(), t in any::<prop::sample::Index>()) {
        let groups = small_groups(8).unwrap();
        let g = &groups[k % groups.len()];
        let congs = crate::algebra::all_congruences(g).unwrap();
        let r = congs[r.index(congs.len())].equiv().clone();
        let theta = congs[t.index(congs.len())].equiv();
        let (q, f) = crate::algebra::quotient(g, theta).unwrap();
        let f: &FinMap = f.map();
        for p in find_connectors_in(g, &r, &r, 2).unwrap() {
            prop_assert!(verify_connector(&p, Some(g)).unwrap().holds);
            let image = image_connector(f, &p, Some(&q)).unwrap();
            prop_assert!(verify_connector(&image, Some(&q)).unwrap().holds);
        }
    }
}
