use crate::connector::{find_connectors, find_connectors_in, image_connector};
use crate::error::Result;
use crate::theorems::enumerate::{congruences, quotient_map};
use crate::theorems::{Certificate, CheckOptions, Findings, Instance, TheoremCheck};

/// Connectors between pairs of congruences, pushed along every quotient.
pub struct ConnectorQuotient;

impl TheoremCheck for ConnectorQuotient {
    fn id(&self) -> &'static str {
        "connector-quotient"
    }

    fn statement(&self) -> &'static str {
        "a connector between R and S induces a connector between f(R) and f(S) along any quotient f"
    }

    fn check(&self, instance: &Instance, opts: &CheckOptions) -> Result<Findings> {
        let alg = &instance.algebra;
        let algebra_mode = !alg.is_bare_set();
        let congs = congruences(alg)?;
        let quotients = congs.iter().map(|c| quotient_map(alg, c)).collect::<Result<Vec<_>>>()?;
        let mut out = Findings::default();
        for r in &congs {
            for s in &congs {
                let connectors = if algebra_mode {
                    find_connectors_in(alg, r, s, opts.connector_limit)?
                } else {
                    find_connectors(r, s, opts.connector_limit)?
                };
                for p in &connectors {
                    for (q, f) in &quotients {
                        out.checks += 1;
                        let codomain = algebra_mode.then_some(q);
                        if let Err(e) = image_connector(f, p, codomain) {
                            let cert = Certificate::ConnectorImage {
                                connector: p.clone(),
                                map: f.clone(),
                                codomain: codomain.cloned(),
                                error: e.to_string(),
                            };
                            if out.record(cert, opts).is_break() {
                                return Ok(out);
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}
