use super::{verify_groupoid, InternalCategory, InternalGroupoid, Mode, ReflexiveGraph};
use crate::connector::{verify_connector, Connector};
use crate::error::{Error, Result};
use crate::relcalc::FinMap;

fn algebra_of(graph: &ReflexiveGraph) -> Option<&crate::algebra::FinAlgebra> {
    (graph.mode() == Mode::Algebra).then(|| graph.x1())
}

/// The groupoid structure encoded by a connector `p` on `Eq(d)` and `Eq(c)`:
/// `g ∘ h = p(g, e(d(g)), h)` and `i(g) = p(e(d(g)), g, e(c(g)))`.
///
/// The result is checked against every groupoid law before it is returned.
pub fn groupoid_from_connector(graph: &ReflexiveGraph, p: &Connector) -> Result<InternalGroupoid> {
    if *p.r() != graph.kernel_d() || *p.s() != graph.kernel_c() {
        return Err(Error::InvalidArgument(
            "connector must be defined on Eq(d) ×_X1 Eq(c) of the graph".into(),
        ));
    }
    if let Some(v) = verify_connector(p, algebra_of(graph))?.violation {
        return Err(Error::InvalidConnector(v.to_string()));
    }
    let (d, c, e) = (graph.d(), graph.c(), graph.e());
    let cat = InternalCategory::from_fn(graph.clone(), |g, h| p.at(g, e.apply(d.apply(g)), h))?;
    let i = (0..graph.arrows())
        .map(|g| p.at(e.apply(d.apply(g)), g, e.apply(c.apply(g))))
        .collect();
    let grpd = InternalGroupoid::new(cat, FinMap::new(graph.arrows(), i)?)?;
    match verify_groupoid(&grpd)?.violation {
        None => Ok(grpd),
        Some(v) => Err(Error::ConstructionFailed(format!("induced structure is not a groupoid: {v}"))),
    }
}

/// The connector `p(x, y, z) = x ∘ i(y) ∘ z` on `Eq(d)` and `Eq(c)`.
pub fn connector_from_groupoid(grpd: &InternalGroupoid) -> Result<Connector> {
    if let Some(v) = verify_groupoid(grpd)?.violation {
        return Err(Error::InvalidArgument(format!("not a groupoid: {v}")));
    }
    let graph = grpd.graph();
    let i = grpd.inverse();
    let p = Connector::from_fn(&graph.kernel_d(), &graph.kernel_c(), |x, y, z| {
        // x ~d y and y ~c z make both composites defined.
        let yz = grpd.compose(i.apply(y), z).unwrap();
        grpd.compose(x, yz).unwrap()
    })?;
    match verify_connector(&p, algebra_of(graph))?.violation {
        None => Ok(p),
        Some(v) => Err(Error::ConstructionFailed(format!("groupoid yields no connector: {v}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic, symmetric};
    use crate::connector::{find_connectors, find_connectors_in};

    fn pair_graph(n: usize) -> ReflexiveGraph {
        let arrows: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
        ReflexiveGraph::of_pairs(n, &arrows).unwrap()
    }

    #[test]
    fn pair_groupoid_from_unique_connector() {
        for n in 1..=3 {
            let graph = pair_graph(n);
            let ps = find_connectors(&graph.kernel_d(), &graph.kernel_c(), usize::MAX).unwrap();
            assert_eq!(ps.len(), 1);
            let grpd = groupoid_from_connector(&graph, &ps[0]).unwrap();
            for (g, h, k) in grpd.category().entries() {
                // (y → z) ∘ (x → y) = x → z
                assert_eq!(k, (h / n) * n + g % n);
            }
            assert_eq!(connector_from_groupoid(&grpd).unwrap(), ps[0]);
        }
    }

    #[test]
    fn discrete_graph() {
        let graph = ReflexiveGraph::set(2, 2, vec![0, 1], vec![0, 1], vec![0, 1]).unwrap();
        let ps = find_connectors(&graph.kernel_d(), &graph.kernel_c(), usize::MAX).unwrap();
        assert_eq!(ps.len(), 1);
        let grpd = groupoid_from_connector(&graph, &ps[0]).unwrap();
        assert_eq!(grpd.category().table(), &[0, 1]);
        assert_eq!(grpd.inverse().table(), &[0, 1]);
    }

    #[test]
    fn cyclic_group_round_trip() {
        let z4 = cyclic(4).unwrap();
        let graph = ReflexiveGraph::one_object(&z4, 0).unwrap();
        let ps = find_connectors_in(&z4, &graph.kernel_d(), &graph.kernel_c(), usize::MAX).unwrap();
        assert_eq!(ps.len(), 1);
        let grpd = groupoid_from_connector(&graph, &ps[0]).unwrap();
        for (g, h, k) in grpd.category().entries() {
            assert_eq!(k, (g + h) % 4);
        }
        assert_eq!(connector_from_groupoid(&grpd).unwrap(), ps[0]);
    }

    #[test]
    fn symmetric_group_connector_is_maltsev_operation() {
        // Set-mode: S3 as a one-object groupoid over its bare carrier.
        let s3 = symmetric(3).unwrap();
        let (mul, inv) = (s3.table("mul").unwrap(), s3.table("inv").unwrap());
        let bare = crate::algebra::bare_set(6).unwrap();
        let graph = ReflexiveGraph::one_object(&bare, 0).unwrap();
        let cat = InternalCategory::from_fn(graph, |g, h| mul.apply(&[g, h])).unwrap();
        let grpd = InternalGroupoid::from_category(cat).unwrap();
        let p = connector_from_groupoid(&grpd).unwrap();
        for ((x, y, z), v) in p.entries() {
            assert_eq!(v, mul.apply(&[mul.apply(&[x, inv.apply(&[y])]), z]));
        }
        assert_eq!(groupoid_from_connector(grpd.graph(), &p).unwrap(), grpd);
    }

    #[test]
    fn wrong_relations_rejected() {
        let graph = pair_graph(2);
        let ps = find_connectors(&graph.kernel_c(), &graph.kernel_d(), 1).unwrap();
        let err = groupoid_from_connector(&graph, &ps[0]).unwrap_err();
        assert!(matches!(err, Error::InvalidArgument(_)));
    }
}
