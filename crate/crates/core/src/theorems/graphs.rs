use crate::algebra::{all_homomorphisms, subalgebra, tuples, FinAlgebra};
use crate::error::Result;
use crate::internal::ReflexiveGraph;
use crate::relcalc::FinMap;

/// Every reflexive graph with arrows `alg`: one per ordered pair of
/// idempotent endomorphisms `(d, c)` with the same image, the objects being
/// that image as a subalgebra and `e` its inclusion.
pub fn group_graphs(alg: &FinAlgebra) -> Result<Vec<ReflexiveGraph>> {
    let idempotents: Vec<FinMap> = all_homomorphisms(alg, alg)?
        .into_iter()
        .filter(|f| f.then(f).is_ok_and(|ff| ff == *f))
        .collect();
    let image = |f: &FinMap| {
        let mut im = f.table().to_vec();
        im.sort_unstable();
        im.dedup();
        im
    };
    let mut out = Vec::new();
    for d in &idempotents {
        let objects = image(d);
        for c in idempotents.iter().filter(|c| image(c) == objects) {
            let (x0, e) = subalgebra(alg, &objects)?;
            let onto = |f: &FinMap| {
                FinMap::new(
                    objects.len(),
                    f.table().iter().map(|v| objects.binary_search(v).unwrap()).collect(),
                )
            };
            out.push(ReflexiveGraph::new(x0, alg.clone(), onto(d)?, onto(c)?, e)?);
        }
    }
    Ok(out)
}

/// Every set-mode reflexive graph with `arrows` arrows and at most
/// `max_objects` objects, up to relabelling identities: the first
/// `|X0|` arrows are the identities.
pub fn set_graphs(arrows: usize, max_objects: usize) -> Result<Vec<ReflexiveGraph>> {
    let mut out = Vec::new();
    for n0 in 1..=arrows.min(max_objects) {
        let rest = arrows - n0;
        for d in tuples(n0, rest) {
            for c in tuples(n0, rest) {
                let ids = 0..n0;
                out.push(ReflexiveGraph::set(
                    n0,
                    arrows,
                    ids.clone().chain(d.iter().copied()).collect(),
                    ids.clone().chain(c.iter().copied()).collect(),
                    ids.collect(),
                )?);
            }
        }
    }
    Ok(out)
}
