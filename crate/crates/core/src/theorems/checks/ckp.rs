use crate::error::Result;
use crate::relcalc::regular_image;
use crate::theorems::enumerate::{congruences, quotient_map};
use crate::theorems::{Certificate, CheckOptions, Findings, Instance, TheoremCheck};

/// Regular images of congruences along quotient maps.
pub struct Ckp;

impl TheoremCheck for Ckp {
    fn id(&self) -> &'static str {
        "ckp"
    }

    fn statement(&self) -> &'static str {
        "the regular image f(R) of a congruence R along a surjection f is an equivalence relation"
    }

    fn check(&self, instance: &Instance, opts: &CheckOptions) -> Result<Findings> {
        let alg = &instance.algebra;
        let congs = congruences(alg)?;
        let mut out = Findings::default();
        for theta in &congs {
            let (_, f) = quotient_map(alg, theta)?;
            for r in &congs {
                out.checks += 1;
                let image = regular_image(&f, &r.to_relation())?;
                if let Some(missing) = image.compose(&image)?.first_difference(&image) {
                    let cert = Certificate::NonTransitiveImage {
                        relation: r.clone(),
                        map: f.clone(),
                        missing,
                    };
                    if out.record(cert, opts).is_break() {
                        return Ok(out);
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
    use crate::algebra::{bare_set, cyclic};
    use crate::relcalc::{EquivRelation, FinMap};

    #[test]
    fn four_point_set_fails() {
        let inst = Instance::new(bare_set(4).unwrap(), None);
        let found = Ckp.check(&inst, &CheckOptions::default()).unwrap();
        assert_eq!(found.certificates.len(), 1);
        assert!(found.certificates[0].replay().unwrap());
    }

    #[test]
    fn known_certificate_is_collected() {
        let inst = Instance::new(bare_set(4).unwrap(), None);
        let opts = CheckOptions {
            collect_all: true,
            ..CheckOptions::default()
        };
        let found = Ckp.check(&inst, &opts).unwrap();
        let known = Certificate::NonTransitiveImage {
            relation: EquivRelation::from_partition(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
            map: FinMap::new(3, vec![0, 1, 1, 2]).unwrap(),
            missing: (0, 2),
        };
        assert!(known.replay().unwrap());
        assert!(found.certificates.contains(&known));
    }

    #[test]
    fn small_sets_and_groups_pass() {
        for n in 1..=3 {
            let inst = Instance::new(bare_set(n).unwrap(), None);
            assert!(Ckp.check(&inst, &CheckOptions::default()).unwrap().certificates.is_empty());
        }
        let z4 = Instance::group(cyclic(4).unwrap()).unwrap();
        let found = Ckp.check(&z4, &CheckOptions::default()).unwrap();
        assert!(found.certificates.is_empty());
        assert_eq!(found.checks, 9);
    }
}
