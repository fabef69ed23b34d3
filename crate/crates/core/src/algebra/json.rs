//! Algebra files: `{"name", "carrier", "ops": [{"name", "arity", "table"}]}`
//! with tables as nested arrays (a bare number for constants), plus an
//! optional `"hm_terms": {"r": .., "s": ..}` witness.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use super::{FinAlgebra, HmTerms, OpTable, Signature, TernaryTable};
use crate::error::{Error, Result};
use crate::relcalc::FinCarrier;

fn nest(values: &[usize], n: usize, arity: usize) -> Value {
    if arity == 0 {
        return Value::from(values[0]);
    }
    let stride = values.len() / n.max(1);
    Value::Array(
        (0..n)
            .map(|i| nest(&values[i * stride..(i + 1) * stride], n, arity - 1))
            .collect(),
    )
}

fn flatten(value: &Value, n: usize, arity: usize, out: &mut Vec<usize>) -> Result<()> {
    if arity == 0 {
        let v = value
            .as_u64()
            .ok_or_else(|| Error::Parse(format!("expected a table entry, found {value}")))?;
        out.push(v as usize);
        return Ok(());
    }
    let rows = value
        .as_array()
        .filter(|rows| rows.len() == n)
        .ok_or_else(|| Error::Parse(format!("expected an array of {n} rows in an arity-{arity} table")))?;
    rows.iter().try_for_each(|row| flatten(row, n, arity - 1, out))
}

fn parse_table(value: &Value, n: usize, arity: usize) -> Result<OpTable> {
    let mut values = Vec::new();
    flatten(value, n, arity, &mut values)?;
    OpTable::new(arity, n, values)
}

fn parse_ternary(value: &Value) -> Result<TernaryTable> {
    let n = value
        .as_array()
        .map(Vec::len)
        .ok_or_else(|| Error::Parse("term table must be a nested array".into()))?;
    TernaryTable::new(parse_table(value, n, 3)?)
}

#[derive(Serialize, Deserialize)]
struct OpJson {
    name: String,
    arity: usize,
    table: Value,
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    name: String,
    carrier: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    #[serde(default)]
    ops: Vec<OpJson>,
}

impl TryFrom<AlgebraJson> for FinAlgebra {
    type Error = Error;

    fn try_from(raw: AlgebraJson) -> Result<Self> {
        let n = raw.carrier;
        let carrier = match raw.labels {
            Some(labels) => FinCarrier::with_labels(labels)?,
            None => FinCarrier::new(n),
        };
        if carrier.size != n {
            return Err(Error::Parse(format!("{} labels given for a carrier of size {n}", carrier.size)));
        }
        let signature = Signature::new(raw.ops.iter().map(|o| (o.name.clone(), o.arity)))?;
        let tables = raw
            .ops
            .iter()
            .map(|o| parse_table(&o.table, n, o.arity))
            .collect::<Result<Vec<_>>>()?;
        FinAlgebra::new(raw.name, carrier, signature, tables)
    }
}

impl From<&FinAlgebra> for AlgebraJson {
    fn from(a: &FinAlgebra) -> Self {
        AlgebraJson {
            name: a.name().to_string(),
            carrier: a.size(),
            labels: a.carrier().labels.clone(),
            ops: a
                .ops()
                .map(|(op, t)| OpJson {
                    name: op.name.clone(),
                    arity: op.arity,
                    table: nest(t.values(), a.size(), op.arity),
                })
                .collect(),
        }
    }
}

impl Serialize for FinAlgebra {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AlgebraJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinAlgebra {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        FinAlgebra::try_from(AlgebraJson::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for HmTerms {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.r.size();
        serde_json::json!({
            "r": nest(self.r.table().values(), n, 3),
            "s": nest(self.s.table().values(), n, 3),
        })
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HmTerms {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            r: Value,
            s: Value,
        }
        let raw = Raw::deserialize(d)?;
        let r = parse_ternary(&raw.r).map_err(D::Error::custom)?;
        let s = parse_ternary(&raw.s).map_err(D::Error::custom)?;
        Ok(HmTerms { r, s })
    }
}

/// An algebra together with an optional shipped term witness.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    #[serde(flatten)]
    pub algebra: FinAlgebra,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hm_terms: Option<HmTerms>,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}
