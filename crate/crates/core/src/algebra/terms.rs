//! Ternary term tables and the Hagemann–Mitschke identities
//! `r(x,y,y) = x`, `r(x,x,y) = s(x,y,y)`, `s(x,x,y) = y`.

use serde::{Deserialize, Serialize};

use super::{FinAlgebra, OpTable};
use crate::error::{check_size, Error, Result};

/// A total ternary operation table over a carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TernaryTable(OpTable);

impl TernaryTable {
    pub fn new(table: OpTable) -> Result<Self> {
        if table.arity() != 3 {
            return Err(Error::InvalidArgument(format!(
                "term table must be ternary, found arity {}",
                table.arity()
            )));
        }
        Ok(TernaryTable(table))
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize, usize) -> usize) -> Result<Self> {
        Self::new(OpTable::from_fn(3, n, |a| f(a[0], a[1], a[2]))?)
    }

    /// Carrier size the table is defined over.
    pub fn size(&self) -> usize {
        self.0.size()
    }

    #[inline]
    pub fn at(&self, x: usize, y: usize, z: usize) -> usize {
        self.0.apply(&[x, y, z])
    }

    pub fn table(&self) -> &OpTable {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HmTerms {
    pub r: TernaryTable,
    pub s: TernaryTable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HmIdentity {
    #[serde(rename = "r(x,y,y)=x")]
    RxyyIsX,
    #[serde(rename = "r(x,x,y)=s(x,y,y)")]
    RxxyIsSxyy,
    #[serde(rename = "s(x,x,y)=y")]
    SxxyIsY,
}

impl HmIdentity {
    pub const ALL: [HmIdentity; 3] = [HmIdentity::RxyyIsX, HmIdentity::RxxyIsSxyy, HmIdentity::SxxyIsY];

    pub fn holds_at(self, terms: &HmTerms, x: usize, y: usize) -> bool {
        let (r, s) = (&terms.r, &terms.s);
        match self {
            HmIdentity::RxyyIsX => r.at(x, y, y) == x,
            HmIdentity::RxxyIsSxyy => r.at(x, x, y) == s.at(x, y, y),
            HmIdentity::SxxyIsY => s.at(x, x, y) == y,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HmCheck {
    pub holds: bool,
    pub witness: Option<(HmIdentity, usize, usize)>,
}

/// Checks the three identities over all `(x, y)`, identity by identity.
pub fn verify_hm_terms(alg: &FinAlgebra, terms: &HmTerms) -> Result<HmCheck> {
    let n = alg.size();
    check_size("term table r", n, terms.r.size())?;
    check_size("term table s", n, terms.s.size())?;
    let witness = HmIdentity::ALL.into_iter().find_map(|id| {
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| !id.holds_at(terms, x, y))
            .map(|(x, y)| (id, x, y))
    });
    Ok(HmCheck {
        holds: witness.is_none(),
        witness,
    })
}

/// The group witnesses `r(x,y,z) = x·y⁻¹·z` and `s(x,y,z) = z`.
pub fn group_hm_terms(alg: &FinAlgebra) -> Result<HmTerms> {
    let (mul, inv) = match (alg.table("mul"), alg.table("inv")) {
        (Some(m), Some(i)) if m.arity() == 2 && i.arity() == 1 => (m, i),
        _ => {
            return Err(Error::SignatureMismatch(format!(
                "`{}` has no binary `mul` and unary `inv`",
                alg.name()
            )))
        }
    };
    let n = alg.size();
    let r = TernaryTable::from_fn(n, |x, y, z| mul.apply(&[mul.apply(&[x, inv.apply(&[y])]), z]))?;
    let s = TernaryTable::from_fn(n, |_, _, z| z)?;
    Ok(HmTerms { r, s })
}
