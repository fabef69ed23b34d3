use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Connector, Triple};
use crate::algebra::{tuples, FinAlgebra};
use crate::error::{check_size, Error, Result};

/// First failing connector law found by [`verify_connector`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum Violation {
    /// `x S p(x,y,z) R z` fails.
    Edges { triple: Triple, value: usize },
    /// `p(x,x,y) = y` fails.
    LeftUnit { x: usize, y: usize, value: usize },
    /// `p(x,y,y) = x` fails.
    RightUnit { x: usize, y: usize, value: usize },
    /// `p(x,y,p(z,u,v)) = p(p(x,y,z),u,v)` fails.
    Associativity {
        args: [usize; 5],
        lhs: usize,
        rhs: usize,
    },
    /// `p` does not commute with operation `op` on the listed triples.
    Homomorphism {
        op: String,
        args: Vec<Triple>,
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Edges { triple: (x, y, z), value } => {
                write!(f, "axiom 1 fails: p({x},{y},{z}) = {value} is not S-related to {x} and R-related to {z}")
            }
            Violation::LeftUnit { x, y, value } => write!(f, "axiom 2 fails: p({x},{x},{y}) = {value}, expected {y}"),
            Violation::RightUnit { x, y, value } => write!(f, "axiom 3 fails: p({x},{y},{y}) = {value}, expected {x}"),
            Violation::Associativity { args: [x, y, z, u, v], lhs, rhs } => write!(
                f,
                "axiom 4 fails at x={x} y={y} z={z} u={u} v={v}: p(x,y,p(z,u,v)) = {lhs} but p(p(x,y,z),u,v) = {rhs}"
            ),
            Violation::Homomorphism { op, args, expected, found } => {
                write!(f, "not a homomorphism for `{op}` at {args:?}: expected {expected}, found {found}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectorCheck {
    pub holds: bool,
    pub violation: Option<Violation>,
}

impl ConnectorCheck {
    fn from(violation: Option<Violation>) -> Self {
        ConnectorCheck {
            holds: violation.is_none(),
            violation,
        }
    }
}

fn axiom_violation(p: &Connector) -> Option<Violation> {
    let (r, s) = (p.r(), p.s());
    for ((x, y, z), w) in p.entries() {
        if !(s.related(x, w) && r.related(w, z)) {
            return Some(Violation::Edges { triple: (x, y, z), value: w });
        }
    }
    let n = p.domain().size();
    for x in 0..n {
        for y in s.class(x) {
            let value = p.at(x, x, y);
            if value != y {
                return Some(Violation::LeftUnit { x, y, value });
            }
        }
    }
    for x in 0..n {
        for y in r.class(x) {
            let value = p.at(x, y, y);
            if value != x {
                return Some(Violation::RightUnit { x, y, value });
            }
        }
    }
    for ((x, y, z), pxyz) in p.entries() {
        for u in r.class(z) {
            for v in s.class(u) {
                let inner = p.at(z, u, v);
                if let (Some(lhs), Some(rhs)) = (p.get(x, y, inner), p.get(pxyz, u, v)) {
                    if lhs != rhs {
                        return Some(Violation::Associativity {
                            args: [x, y, z, u, v],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
    }
    None
}

/// Checks that `p`, viewed as a map `R ×_X S → X` of algebras, commutes with
/// every operation applied componentwise.
fn homomorphism_violation(p: &Connector, alg: &FinAlgebra) -> Option<Violation> {
    let dom = p.domain();
    let triples = dom.triples();
    for (op, t) in alg.ops() {
        for args in tuples(dom.len(), t.arity()) {
            let column = |c: usize| -> Vec<usize> {
                args.iter()
                    .map(|&i| {
                        let (x, y, z) = triples[i];
                        [x, y, z][c]
                    })
                    .collect()
            };
            let image = (t.apply(&column(0)), t.apply(&column(1)), t.apply(&column(2)));
            let values: Vec<usize> = args.iter().map(|&i| p.table()[i]).collect();
            let expected = t.apply(&values);
            // R and S are congruences, so the image triple stays in the domain.
            let found = p.at(image.0, image.1, image.2);
            if found != expected {
                return Some(Violation::Homomorphism {
                    op: op.name.clone(),
                    args: args.iter().map(|&i| triples[i]).collect(),
                    expected,
                    found,
                });
            }
        }
    }
    None
}

/// Checks axioms 1–4 and, when an algebra is given, that `R` and `S` are
/// congruences and `p` is a homomorphism. Axiom 4 is checked whenever both
/// outer triples lie in the domain.
pub fn verify_connector(p: &Connector, alg: Option<&FinAlgebra>) -> Result<ConnectorCheck> {
    if let Some(v) = axiom_violation(p) {
        return Ok(ConnectorCheck::from(Some(v)));
    }
    match alg {
        None => Ok(ConnectorCheck::from(None)),
        Some(a) => {
            check_size("connector carrier", a.size(), p.domain().size())?;
            crate::algebra::check_compatible(a, p.r())?;
            crate::algebra::check_compatible(a, p.s())?;
            Ok(ConnectorCheck::from(homomorphism_violation(p, a)))
        }
    }
}

/// Verification that returns an error describing the first violation.
pub(crate) fn require_connector(p: &Connector, alg: Option<&FinAlgebra>) -> Result<()> {
    match verify_connector(p, alg)?.violation {
        None => Ok(()),
        Some(v) => Err(Error::InvalidConnector(v.to_string())),
    }
}
