use crate::algebra::all_homomorphisms;
use crate::error::Result;
use crate::theorems::enumerate::{congruences, factor, quotient_map, sections};
use crate::theorems::{Certificate, CheckOptions, Cube, Findings, Instance, TheoremCheck};

/// Cubes with `Z = X`: `p` ranges over the canonical quotients of `X`, `q`
/// over every split surjective homomorphism onto the same `Y`, and the
/// horizontals over quotient maps whose induced right-face maps exist.
pub struct CubeCheck;

impl TheoremCheck for CubeCheck {
    fn id(&self) -> &'static str {
        "cube"
    }

    fn statement(&self) -> &'static str {
        "a cube of split epis with pullback left face and surjective horizontals has a pullback right face"
    }

    fn check(&self, instance: &Instance, opts: &CheckOptions) -> Result<Findings> {
        let x = &instance.algebra;
        if x.size() > opts.cube_max {
            return Ok(Findings::skipped(format!("carrier larger than the cube bound {}", opts.cube_max)));
        }
        let congs = congruences(x)?;
        let quotients = congs.iter().map(|c| quotient_map(x, c)).collect::<Result<Vec<_>>>()?;
        let mut out = Findings::default();
        for (y, p) in &quotients {
            let y_quotients = congruences(y)?.iter().map(|c| quotient_map(y, c)).collect::<Result<Vec<_>>>()?;
            let qs: Vec<_> = all_homomorphisms(x, y)?.into_iter().filter(|q| q.is_surjective()).collect();
            for s in sections(p, x, y)? {
                for q in &qs {
                    for r in sections(q, x, y)? {
                        for (_, alpha) in &quotients {
                            for (_, gamma) in &quotients {
                                for (_, beta) in &y_quotients {
                                    let (Some(g), Some(t), Some(h), Some(u)) = (
                                        factor(alpha, &p.then(beta)?),
                                        factor(beta, &s.then(alpha)?),
                                        factor(gamma, &q.then(beta)?),
                                        factor(beta, &r.then(gamma)?),
                                    ) else {
                                        continue;
                                    };
                                    let cube = Cube {
                                        p: p.clone(),
                                        s: s.clone(),
                                        q: q.clone(),
                                        r: r.clone(),
                                        alpha: alpha.clone(),
                                        gamma: gamma.clone(),
                                        beta: beta.clone(),
                                        g,
                                        t,
                                        h,
                                        u,
                                    };
                                    out.checks += 1;
                                    if let Some(missing) = cube.right_face_gap()? {
                                        if out.record(Certificate::NonPullbackCube { cube: Box::new(cube), missing }, opts).is_break() {
                                            return Ok(out);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bare_set, cyclic, direct_product};

    #[test]
    fn small_groups_have_pullback_right_faces() {
        let z2 = cyclic(2).unwrap();
        for g in [cyclic(4).unwrap(), direct_product(&z2, &z2).unwrap()] {
            let found = CubeCheck.check(&Instance::group(g).unwrap(), &CheckOptions::default()).unwrap();
            assert!(found.certificates.is_empty());
            assert!(found.checks > 0);
        }
    }

    #[test]
    fn set_failure_within_four_points() {
        let found = (1..=4)
            .map(|n| CubeCheck.check(&Instance::new(bare_set(n).unwrap(), None), &CheckOptions::default()).unwrap())
            .find(|f| !f.certificates.is_empty())
            .expect("some carrier of size ≤ 4 fails");
        assert!(found.certificates[0].replay().unwrap());
    }

    #[test]
    fn large_carriers_skipped() {
        let found = CubeCheck.check(&Instance::new(bare_set(5).unwrap(), None), &CheckOptions::default()).unwrap();
        assert!(found.skipped.is_some());
    }
}
