//! Finite universal algebras given by operation tables.

mod catalogue;
mod congruence;
mod hom;
mod json;
mod lattice;
mod terms;
#[cfg(test)]
mod props;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use catalogue::{
    bare_set, cyclic, dihedral, direct_product, group_from_cayley, quaternion, small_groups, symmetric,
    GROUP_SIGNATURE,
};
pub use congruence::{
    all_congruences, all_congruences_bounded, check_compatible, congruence_generated, quotient, Congruence,
    DEFAULT_CONGRUENCE_BOUND,
};
pub use hom::{all_homomorphisms, is_homomorphism, pullback, subalgebra, HomCheck, Homomorphism, Pullback};
pub use json::AlgebraFile;
pub use lattice::{
    check_goursat_congruences, check_goursat_instance, modularity_check, modularity_of, GoursatReport,
    ModularityReport, Pentagon, PermutabilityFailure,
};
pub use terms::{group_hm_terms, verify_hm_terms, HmCheck, HmIdentity, HmTerms, TernaryTable};

use crate::error::{check_index, Error, Result};
use crate::relcalc::FinCarrier;

pub const MAX_ARITY: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OpSymbol {
    pub name: String,
    pub arity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Signature {
    pub ops: Vec<OpSymbol>,
}

impl Signature {
    pub fn new<S: Into<String>>(ops: impl IntoIterator<Item = (S, usize)>) -> Result<Self> {
        let ops: Vec<OpSymbol> = ops
            .into_iter()
            .map(|(name, arity)| OpSymbol {
                name: name.into(),
                arity,
            })
            .collect();
        let mut names = std::collections::HashSet::new();
        for op in &ops {
            if op.arity > MAX_ARITY {
                return Err(Error::InvalidArgument(format!(
                    "operation `{}` has arity {} (at most {MAX_ARITY} supported)",
                    op.name, op.arity
                )));
            }
            if !names.insert(op.name.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate operation name `{}`", op.name)));
            }
        }
        Ok(Signature { ops })
    }

    pub fn empty() -> Self {
        Signature::default()
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }
}

/// A dense table for one operation, indexed row-major by its arguments.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OpTable {
    arity: usize,
    n: usize,
    values: Vec<usize>,
}

impl OpTable {
    pub fn new(arity: usize, n: usize, values: Vec<usize>) -> Result<Self> {
        if arity > MAX_ARITY {
            return Err(Error::InvalidArgument(format!("arity {arity} exceeds {MAX_ARITY}")));
        }
        let expected = n.pow(arity as u32);
        if values.len() != expected {
            return Err(Error::Malformed(format!(
                "table of arity {arity} over {n} elements needs {expected} entries, found {}",
                values.len()
            )));
        }
        for &v in &values {
            check_index(v, n)?;
        }
        Ok(OpTable { arity, n, values })
    }

    pub fn from_fn(arity: usize, n: usize, f: impl Fn(&[usize]) -> usize) -> Result<Self> {
        let values = tuples(n, arity).map(|t| f(&t)).collect();
        OpTable::new(arity, n, values)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Size of the carrier the table is defined over.
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    #[inline]
    pub fn index(&self, args: &[usize]) -> usize {
        args.iter().fold(0, |acc, &a| acc * self.n + a)
    }

    #[inline]
    pub fn apply(&self, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        self.values[self.index(args)]
    }
}

/// All `k`-tuples over `0..n` in lexicographic order.
pub fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if k == 0 { 1 } else { n.pow(k as u32) };
    (0..total).map(move |mut i| {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = i % n.max(1);
            i /= n.max(1);
        }
        t
    })
}

/// A finite algebra: a non-empty carrier with one total table per operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinAlgebra {
    name: String,
    carrier: FinCarrier,
    signature: Signature,
    tables: Vec<OpTable>,
}

impl FinAlgebra {
    pub fn new(name: impl Into<String>, carrier: FinCarrier, signature: Signature, tables: Vec<OpTable>) -> Result<Self> {
        if carrier.size == 0 {
            return Err(Error::InvalidArgument("algebras must have a non-empty carrier".into()));
        }
        if tables.len() != signature.len() {
            return Err(Error::Malformed(format!(
                "signature has {} operations but {} tables were given",
                signature.len(),
                tables.len()
            )));
        }
        for (op, table) in signature.ops.iter().zip(&tables) {
            if op.arity != table.arity || table.n != carrier.size {
                return Err(Error::Malformed(format!("table for `{}` does not match its arity or carrier", op.name)));
            }
        }
        Ok(FinAlgebra {
            name: name.into(),
            carrier,
            signature,
            tables,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.carrier.size
    }

    pub fn carrier(&self) -> &FinCarrier {
        &self.carrier
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn tables(&self) -> &[OpTable] {
        &self.tables
    }

    pub fn ops(&self) -> impl Iterator<Item = (&OpSymbol, &OpTable)> {
        self.signature.ops.iter().zip(&self.tables)
    }

    pub fn op_index(&self, name: &str) -> Option<usize> {
        self.signature.ops.iter().position(|o| o.name == name)
    }

    pub fn table(&self, name: &str) -> Option<&OpTable> {
        self.op_index(name).map(|i| &self.tables[i])
    }

    pub fn is_bare_set(&self) -> bool {
        self.signature.is_empty()
    }

    pub fn same_signature(&self, other: &FinAlgebra) -> Result<()> {
        if self.signature == other.signature {
            Ok(())
        } else {
            Err(Error::SignatureMismatch(format!(
                "`{}` and `{}` have different signatures",
                self.name, other.name
            )))
        }
    }
}

impl fmt::Display for FinAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.size())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_are_lexicographic() {
        let t: Vec<Vec<usize>> = tuples(2, 2).collect();
        assert_eq!(t, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(tuples(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn signature_validation() {
        assert!(Signature::new([("f", 4)]).is_err());
        assert!(Signature::new([("f", 1), ("f", 2)]).is_err());
        assert_eq!(Signature::new([("f", 1), ("g", 0)]).unwrap().len(), 2);
    }

    #[test]
    fn empty_algebra_rejected() {
        assert!(FinAlgebra::new("empty", FinCarrier::new(0), Signature::empty(), vec![]).is_err());
    }

    #[test]
    fn table_shape_checked() {
        assert!(OpTable::new(2, 2, vec![0, 1, 1]).is_err());
        assert!(OpTable::new(1, 2, vec![0, 2]).is_err());
        let t = OpTable::from_fn(3, 2, |a| a[0] ^ a[1] ^ a[2]).unwrap();
        assert_eq!(t.apply(&[1, 1, 0]), 0);
        assert_eq!(t.apply(&[1, 0, 0]), 1);
    }
}
