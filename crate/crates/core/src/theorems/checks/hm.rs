use crate::algebra::{all_congruences, check_goursat_congruences, modularity_of, verify_hm_terms};
use crate::error::Result;
use crate::theorems::{Certificate, CheckOptions, Findings, Instance, TheoremCheck};

/// Shipped Hagemann–Mitschke terms, 3-permutability of all congruence pairs
/// and modularity of the congruence lattice.
pub struct HmModularity;

impl TheoremCheck for HmModularity {
    fn id(&self) -> &'static str {
        "hm-modularity"
    }

    fn statement(&self) -> &'static str {
        "Hagemann–Mitschke terms give 3-permutable congruences and a modular congruence lattice"
    }

    fn check(&self, instance: &Instance, opts: &CheckOptions) -> Result<Findings> {
        let alg = &instance.algebra;
        let mut out = Findings::default();
        if let Some(terms) = &instance.hm_terms {
            out.checks += 1;
            if let Some((identity, x, y)) = verify_hm_terms(alg, terms)?.witness {
                let cert = Certificate::HmFailure {
                    algebra: alg.clone(),
                    terms: terms.clone(),
                    identity,
                    x,
                    y,
                };
                if out.record(cert, opts).is_break() {
                    return Ok(out);
                }
            }
        }
        let congs = all_congruences(alg)?;
        let goursat = check_goursat_congruences(&congs, opts.collect_all)?;
        out.checks += goursat.pairs_checked;
        for failure in goursat.failures {
            if out.record(Certificate::Nonpermutable(failure), opts).is_break() {
                return Ok(out);
            }
        }
        out.checks += 1;
        if let Some(pentagon) = modularity_of(&congs)?.pentagon {
            let _ = out.record(
                Certificate::Pentagon {
                    algebra: alg.clone(),
                    pentagon,
                },
                opts,
            );
        }
        Ok(out)
    }
}
