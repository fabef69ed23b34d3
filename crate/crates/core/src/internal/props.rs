use proptest::prelude::*;

use super::*;

/// Set-mode graphs whose first `n0` arrows are the identities.
fn graph() -> impl Strategy<Value = ReflexiveGraph> {
    (1..=3usize, 0..=3usize).prop_flat_map(|(n0, extra)| {
        (proptest::collection::vec(0..n0, extra), proptest::collection::vec(0..n0, extra)).prop_map(move |(ds, cs)| {
            let d = (0..n0).chain(ds).collect();
            let c = (0..n0).chain(cs).collect();
            ReflexiveGraph::set(n0, n0 + extra, d, c, (0..n0).collect()).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn groupoids_match_connectors(g in graph()) {
        let connectors = crate::connector::find_connectors(&g.kernel_d(), &g.kernel_c(), usize::MAX).unwrap();
        let groupoids = groupoid_structures(&g, usize::MAX).unwrap();
        prop_assert_eq!(connectors.len(), groupoids.len());
        for p in &connectors {
            let grpd = groupoid_from_connector(&g, p).unwrap();
            prop_assert!(verify_groupoid(&grpd).unwrap().holds);
            prop_assert!(groupoids.contains(&grpd));
            prop_assert_eq!(&connector_from_groupoid(&grpd).unwrap(), p);
        }
    }

    #[test]
    fn structure_json_round_trips(g in graph()) {
        let text = serde_json::to_string(&InternalStructure::Graph(g.clone())).unwrap();
        prop_assert_eq!(InternalStructure::parse(&text).unwrap(), InternalStructure::Graph(g.clone()));
        for grpd in groupoid_structures(&g, 2).unwrap() {
            let text = serde_json::to_string(&grpd).unwrap();
            prop_assert_eq!(serde_json::from_str::<InternalGroupoid>(&text).unwrap(), grpd);
        }
    }

    #[test]
    fn categories_include_groupoids(g in graph()) {
        let cats = category_structures(&g, usize::MAX).unwrap();
        for grpd in groupoid_structures(&g, usize::MAX).unwrap() {
            prop_assert!(cats.contains(grpd.category()));
        }
        for c in &cats {
            prop_assert!(verify_category(c).unwrap().holds);
        }
    }
}
