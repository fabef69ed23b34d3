use crate::error::Result;
use crate::internal::{induced_kernel_map, SplitSquare};
use crate::theorems::enumerate::{congruences, factor, quotient_map, sections};
use crate::theorems::{Certificate, CheckOptions, Findings, Instance, TheoremCheck};

/// Squares of a split epi `f: X → Y` against surjections `α`, `β`, with `g`
/// and its section `t` forced by commutativity.
///
/// Up to isomorphism every such square arises from congruences `θ_f`, `θ_α`
/// on `X`, a section `s` of `X → X/θ_f` and a congruence `θ_β` on `Y`.
pub struct GoursatPushout;

impl TheoremCheck for GoursatPushout {
    fn id(&self) -> &'static str {
        "goursat-pushout"
    }

    fn statement(&self) -> &'static str {
        "in a commuting square of split epis with surjective horizontals, λ: Eq(f) → Eq(g) is surjective"
    }

    fn check(&self, instance: &Instance, opts: &CheckOptions) -> Result<Findings> {
        let x = &instance.algebra;
        let algebra_mode = !x.is_bare_set();
        let congs = congruences(x)?;
        let mut out = Findings::default();
        for theta_f in &congs {
            let (y, f) = quotient_map(x, theta_f)?;
            let y_congs = congruences(&y)?;
            for s in sections(&f, x, &y)? {
                for theta_a in &congs {
                    let (u, alpha) = quotient_map(x, theta_a)?;
                    for theta_b in &y_congs {
                        let (w, beta) = quotient_map(&y, theta_b)?;
                        let Some(g) = factor(&alpha, &f.then(&beta)?) else { continue };
                        let Some(t) = factor(&beta, &s.then(&alpha)?) else { continue };
                        let algebras = algebra_mode.then_some([x, &y, &u, &w]);
                        let square = SplitSquare::new(f.clone(), s.clone(), alpha.clone(), g, t, beta, algebras)?;
                        out.checks += 1;
                        if let Some(missing) = induced_kernel_map(&square).missing {
                            let cert = Certificate::NonSurjectiveKernelMap { square, missing };
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
