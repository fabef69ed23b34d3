//! JSON encodings: relations as `{"src", "dst", "pairs"}`, equivalence
//! relations alternatively as `{"partition": [[..], ..]}`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{EquivRelation, Relation};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RelationJson {
    Pairs {
        src: usize,
        dst: usize,
        pairs: Vec<[usize; 2]>,
    },
    Partition {
        partition: Vec<Vec<usize>>,
    },
}

fn partition_size(blocks: &[Vec<usize>]) -> usize {
    blocks.iter().map(Vec::len).sum()
}

impl Serialize for Relation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RelationJson::Pairs {
            src: self.src(),
            dst: self.dst(),
            pairs: self.pairs().map(|(x, y)| [x, y]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Relation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match RelationJson::deserialize(d)? {
            RelationJson::Pairs { src, dst, pairs } => {
                Relation::from_pairs(src, dst, pairs.into_iter().map(|[x, y]| (x, y))).map_err(D::Error::custom)
            }
            RelationJson::Partition { partition } => {
                EquivRelation::from_partition(partition_size(&partition), &partition)
                    .map(|e| e.to_relation())
                    .map_err(D::Error::custom)
            }
        }
    }
}

impl Serialize for EquivRelation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RelationJson::Partition {
            partition: self.blocks(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EquivRelation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match RelationJson::deserialize(d)? {
            RelationJson::Partition { partition } => {
                EquivRelation::from_partition(partition_size(&partition), &partition).map_err(D::Error::custom)
            }
            RelationJson::Pairs { src, dst, pairs } => {
                let r = Relation::from_pairs(src, dst, pairs.into_iter().map(|[x, y]| (x, y)))
                    .map_err(D::Error::custom)?;
                EquivRelation::from_relation(&r).map_err(D::Error::custom)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn relation_formats() {
        let r: Relation = serde_json::from_value(json!({"src": 2, "dst": 3, "pairs": [[0, 2], [1, 0]]})).unwrap();
        assert!(r.contains(0, 2) && r.contains(1, 0) && r.len() == 2);
        assert_eq!(serde_json::to_value(&r).unwrap(), json!({"src": 2, "dst": 3, "pairs": [[0, 2], [1, 0]]}));

        let e: Relation = serde_json::from_value(json!({"partition": [[0, 2], [1]]})).unwrap();
        assert_eq!(e.len(), 5);
    }

    #[test]
    fn equivalence_formats() {
        let e: EquivRelation = serde_json::from_value(json!({"partition": [[2, 0], [1]]})).unwrap();
        assert_eq!(serde_json::to_value(&e).unwrap(), json!({"partition": [[0, 2], [1]]}));
        let from_pairs: EquivRelation =
            serde_json::from_value(json!({"src": 2, "dst": 2, "pairs": [[0, 0], [1, 1], [0, 1], [1, 0]]})).unwrap();
        assert_eq!(from_pairs, EquivRelation::full(2));
        let bad = json!({"src": 2, "dst": 2, "pairs": [[0, 1]]});
        assert!(serde_json::from_value::<EquivRelation>(bad).is_err());
        assert!(serde_json::from_value::<EquivRelation>(json!({"partition": [[0, 1], [1]]})).is_err());
    }
}
