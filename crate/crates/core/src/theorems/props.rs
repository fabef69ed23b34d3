use proptest::prelude::*;

use super::*;
use crate::algebra::{bare_set, small_groups};

fn registry_index() -> impl Strategy<Value = usize> {
    0..Registry::standard().ids().len()
}

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn certificates_round_trip_and_replay(k in registry_index(), n in 1..=4usize) {
        let registry = Registry::standard();
        let check = registry.iter().nth(k).unwrap();
        let found = check.check(&Instance::new(bare_set(n).unwrap(), None), &CheckOptions::default()).unwrap();
        for cert in found.certificates {
            let text = serde_json::to_string(&cert).unwrap();
            let back: Certificate = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(&back, &cert);
            prop_assert!(back.replay().unwrap(), "{} does not replay", cert.kind());
        }
    }

    #[test]
    fn reports_do_not_depend_on_thread_count(
        k in registry_index(),
        kind in prop::sample::select(vec![FamilyKind::BareSet, FamilyKind::Cyclic, FamilyKind::SmallGroups]),
        max in 1..=4usize,
        collect_all in any::<bool>(),
    ) {
        let registry = Registry::standard();
        let check = registry.iter().nth(k).unwrap();
        let family = InstanceFamily::new(kind, max);
        let opts = CheckOptions { collect_all, ..CheckOptions::default() };
        let one = pool(1).install(|| run_check(check, &family, &opts)).unwrap();
        let three = pool(3).install(|| run_check(check, &family, &opts)).unwrap();
        prop_assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&three).unwrap());
    }

    #[test]
    fn sampling_is_a_seeded_subsequence(seed in any::<u64>(), size in 1..6usize) {
        let full = InstanceFamily::new(FamilyKind::Cyclic, 8).instances().unwrap();
        let names = |f: &InstanceFamily| f.instances().unwrap().into_iter().map(|i| i.name).collect::<Vec<_>>();
        let sampled = InstanceFamily::new(FamilyKind::Cyclic, 8).with_seed(seed).with_sample(Some(size));
        let picked = names(&sampled);
        prop_assert_eq!(&picked, &names(&sampled));
        prop_assert_eq!(picked.len(), size);
        let mut it = full.iter().map(|i| &i.name);
        prop_assert!(picked.iter().all(|p| it.any(|n| n == p)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    /// An instance that passes the Hagemann–Mitschke check passes every
    /// other Goursat-category check too.
    #[test]
    fn hm_instances_pass_the_other_checks(k in 0..14usize) {
        let groups = small_groups(8).unwrap();
        let inst = Instance::group(groups[k % groups.len()].clone()).unwrap();
        let opts = CheckOptions::default();
        let registry = Registry::standard();
        let hm = registry.get("hm-modularity").unwrap().check(&inst, &opts).unwrap();
        prop_assume!(hm.certificates.is_empty());
        for id in ["ckp", "goursat-pushout", "connector-quotient", "grpd-closure"] {
            let found = registry.get(id).unwrap().check(&inst, &opts).unwrap();
            prop_assert!(found.certificates.is_empty(), "{id} fails on {}", inst.name);
        }
    }
}
