use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{bare_set, cyclic, direct_product, group_hm_terms, small_groups, symmetric, FinAlgebra, HmTerms};
use crate::error::{Error, Result};

/// One finite algebra to run a check on. It counts as a Goursat instance
/// exactly when it ships Hagemann–Mitschke terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub name: String,
    pub algebra: FinAlgebra,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hm_terms: Option<HmTerms>,
}

impl Instance {
    pub fn new(algebra: FinAlgebra, hm_terms: Option<HmTerms>) -> Self {
        Instance {
            name: algebra.name().to_string(),
            algebra,
            hm_terms,
        }
    }

    /// A group together with its witnesses `x·y⁻¹·z` and `z`.
    pub fn group(algebra: FinAlgebra) -> Result<Self> {
        let terms = group_hm_terms(&algebra)?;
        Ok(Instance::new(algebra, Some(terms)))
    }

    pub fn is_goursat(&self) -> bool {
        self.hm_terms.is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    BareSet,
    Cyclic,
    DirectProduct,
    Symmetric,
    SmallGroups,
    Custom,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::BareSet,
        FamilyKind::Cyclic,
        FamilyKind::DirectProduct,
        FamilyKind::Symmetric,
        FamilyKind::SmallGroups,
        FamilyKind::Custom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::BareSet => "bare-set",
            FamilyKind::Cyclic => "cyclic",
            FamilyKind::DirectProduct => "direct-product",
            FamilyKind::Symmetric => "symmetric",
            FamilyKind::SmallGroups => "small-groups",
            FamilyKind::Custom => "custom",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family `{s}`")))
    }
}

/// A deterministic list of instances: a kind, a size bound and, optionally,
/// a seeded random subsample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFamily {
    pub kind: FamilyKind,
    /// Largest carrier size (group order for group families).
    pub max_size: usize,
    pub seed: u64,
    /// Keep only this many instances, drawn with a ChaCha stream seeded by
    /// `seed`; enumeration order is preserved.
    pub sample: Option<usize>,
    custom: Vec<Instance>,
}

impl InstanceFamily {
    pub fn new(kind: FamilyKind, max_size: usize) -> Self {
        InstanceFamily {
            kind,
            max_size,
            seed: 0,
            sample: None,
            custom: Vec::new(),
        }
    }

    pub fn custom(instances: Vec<Instance>) -> Self {
        InstanceFamily {
            max_size: instances.iter().map(|i| i.algebra.size()).max().unwrap_or(0),
            custom: instances,
            ..InstanceFamily::new(FamilyKind::Custom, 0)
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_sample(mut self, sample: Option<usize>) -> Self {
        self.sample = sample;
        self
    }

    pub fn label(&self) -> String {
        match self.kind {
            FamilyKind::Custom => format!("custom[{}]", self.custom.len()),
            k => format!("{k}(≤{})", self.max_size),
        }
    }

    pub fn instances(&self) -> Result<Vec<Instance>> {
        let n = self.max_size;
        let all = match self.kind {
            FamilyKind::BareSet => (1..=n).map(|k| Ok(Instance::new(bare_set(k)?, None))).collect::<Result<Vec<_>>>()?,
            FamilyKind::Cyclic => (1..=n).map(|k| Instance::group(cyclic(k)?)).collect::<Result<_>>()?,
            FamilyKind::DirectProduct => {
                let mut out = Vec::new();
                for a in 2..=n {
                    for b in a..=n / a {
                        out.push(Instance::group(direct_product(&cyclic(a)?, &cyclic(b)?)?)?);
                    }
                }
                out
            }
            FamilyKind::Symmetric => (1..=5)
                .map_while(|d| {
                    let order: usize = (1..=d).product();
                    (order <= n).then(|| symmetric(d).and_then(Instance::group))
                })
                .collect::<Result<_>>()?,
            FamilyKind::SmallGroups => small_groups(n)?.into_iter().map(Instance::group).collect::<Result<_>>()?,
            FamilyKind::Custom => self.custom.clone(),
        };
        Ok(match self.sample {
            Some(k) if k < all.len() => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                let mut keep = sample(&mut rng, all.len(), k).into_vec();
                keep.sort_unstable();
                keep.into_iter().map(|i| all[i].clone()).collect()
            }
            _ => all,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(f: &InstanceFamily) -> Vec<String> {
        f.instances().unwrap().into_iter().map(|i| i.name).collect()
    }

    #[test]
    fn family_sizes() {
        assert_eq!(InstanceFamily::new(FamilyKind::BareSet, 4).instances().unwrap().len(), 4);
        assert_eq!(InstanceFamily::new(FamilyKind::Cyclic, 8).instances().unwrap().len(), 8);
        assert_eq!(InstanceFamily::new(FamilyKind::SmallGroups, 8).instances().unwrap().len(), 14);
        // Z2×Z2, Z2×Z3, Z2×Z4
        assert_eq!(InstanceFamily::new(FamilyKind::DirectProduct, 8).instances().unwrap().len(), 3);
        // S1, S2, S3
        assert_eq!(InstanceFamily::new(FamilyKind::Symmetric, 8).instances().unwrap().len(), 3);
    }

    #[test]
    fn goursat_means_shipped_terms() {
        let sets = InstanceFamily::new(FamilyKind::BareSet, 3).instances().unwrap();
        assert!(sets.iter().all(|i| !i.is_goursat()));
        let groups = InstanceFamily::new(FamilyKind::SmallGroups, 6).instances().unwrap();
        assert!(groups.iter().all(Instance::is_goursat));
    }

    #[test]
    fn sampling_is_seeded_and_ordered() {
        let base = InstanceFamily::new(FamilyKind::Cyclic, 8).with_sample(Some(3));
        let a = names(&base.clone().with_seed(7));
        assert_eq!(a, names(&base.clone().with_seed(7)));
        assert_eq!(a.len(), 3);
        let full = names(&InstanceFamily::new(FamilyKind::Cyclic, 8));
        let pos: Vec<usize> = a.iter().map(|n| full.iter().position(|m| m == n).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in FamilyKind::ALL {
            assert_eq!(k.name().parse::<FamilyKind>().unwrap(), k);
        }
        assert!("groups".parse::<FamilyKind>().is_err());
    }
}
