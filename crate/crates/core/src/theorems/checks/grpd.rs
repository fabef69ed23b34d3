use crate::connector::{find_connectors, find_connectors_in, image_connector};
use crate::error::{Error, Result};
use crate::internal::{category_structures, groupoid_from_connector, induced_structure_search, quotient_rg, ReflexiveGraph};
use crate::relcalc::{is_equivalence, regular_image};
use crate::theorems::enumerate::{congruences, quotient_map};
use crate::theorems::graphs::{group_graphs, set_graphs};
use crate::theorems::{Certificate, CheckOptions, Findings, Instance, TheoremCheck};

/// Groupoids on the graphs with arrow object the instance, pushed along
/// every compatible pair of levelwise quotients; also checks that image
/// relations carrying a category structure are equivalence relations.
pub struct GrpdClosure;

impl GrpdClosure {
    fn image_relations(&self, instance: &Instance, opts: &CheckOptions, out: &mut Findings) -> Result<bool> {
        let alg = &instance.algebra;
        let congs = congruences(alg)?;
        for theta in &congs {
            let (_, f) = quotient_map(alg, theta)?;
            for r in &congs {
                let image = regular_image(&f, &r.to_relation())?;
                let pairs: Vec<(usize, usize)> = image.pairs().collect();
                let graph = ReflexiveGraph::of_pairs(f.dst(), &pairs)?;
                out.checks += 1;
                let Some(cat) = category_structures(&graph, 1)?.into_iter().next() else { continue };
                if !is_equivalence(&image)?.is_equivalence() {
                    let cert = Certificate::CategoryNotEquivalence {
                        size: f.dst(),
                        pairs,
                        composition: cat.entries().map(|(g, h, k)| [g, h, k]).collect(),
                    };
                    if out.record(cert, opts).is_break() {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    }

    fn quotients(&self, graph: &ReflexiveGraph, opts: &CheckOptions, out: &mut Findings) -> Result<bool> {
        let algebra_mode = !graph.x1().is_bare_set();
        let (r, s) = (graph.kernel_d(), graph.kernel_c());
        let connectors = if algebra_mode {
            find_connectors_in(graph.x1(), &r, &s, opts.connector_limit)?
        } else {
            find_connectors(&r, &s, opts.connector_limit)?
        };
        if connectors.is_empty() {
            return Ok(false);
        }
        let (arrow_congs, object_congs) = (congruences(graph.x1())?, congruences(graph.x0())?);
        for p in &connectors {
            let grpd = groupoid_from_connector(graph, p)?;
            for theta1 in &arrow_congs {
                for theta0 in &object_congs {
                    let (dst, mor) = match quotient_rg(graph, theta1, theta0) {
                        Err(Error::IncompatibleKernels(_)) => continue,
                        other => other?,
                    };
                    out.checks += 1;
                    let mut induced = induced_structure_search(&dst, &grpd, &mor)?;
                    let cert = if !induced.groupoid {
                        induced.structure = None;
                        Certificate::GroupoidQuotient {
                            groupoid: Box::new(grpd.clone()),
                            theta1: theta1.clone(),
                            theta0: theta0.clone(),
                            induced: Box::new(induced),
                        }
                    } else if let (true, Err(e)) = (algebra_mode, image_connector(&mor.g, p, Some(dst.x1()))) {
                        Certificate::ConnectorImage {
                            connector: p.clone(),
                            map: mor.g.clone(),
                            codomain: Some(dst.x1().clone()),
                            error: e.to_string(),
                        }
                    } else {
                        continue;
                    };
                    if out.record(cert, opts).is_break() {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    }
}

impl TheoremCheck for GrpdClosure {
    fn id(&self) -> &'static str {
        "grpd-closure"
    }

    fn statement(&self) -> &'static str {
        "internal groupoids are closed under quotients in reflexive graphs"
    }

    fn check(&self, instance: &Instance, opts: &CheckOptions) -> Result<Findings> {
        let alg = &instance.algebra;
        let mut out = Findings::default();
        if self.image_relations(instance, opts, &mut out)? {
            return Ok(out);
        }
        let graphs = if alg.is_bare_set() {
            set_graphs(alg.size(), alg.size())?
        } else {
            group_graphs(alg)?
        };
        for graph in &graphs {
            if self.quotients(graph, opts, &mut out)? {
                break;
            }
        }
        Ok(out)
    }
}
