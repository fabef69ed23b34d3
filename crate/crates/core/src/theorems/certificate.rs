use std::fmt;

use serde::{Deserialize, Serialize};

use super::cube::Cube;
use crate::algebra::{check_compatible, verify_hm_terms, FinAlgebra, HmIdentity, HmTerms, PermutabilityFailure, Pentagon};
use crate::connector::{image_connector, verify_connector, Connector};
use crate::error::{Error, Result};
use crate::internal::{
    induced_kernel_map, induced_structure_search, quotient_rg, verify_category, InducedReport, InternalCategory,
    InternalGroupoid, ReflexiveGraph, SplitSquare,
};
use crate::relcalc::{is_equivalence, permutability, regular_image, EquivRelation, FinMap, Relation};

/// Raw data for one failure. [`Certificate::replay`] rebuilds the failure
/// from these fields using only the base modules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `f(R)` is not transitive; `missing` is the first pair of
    /// `f(R)∘f(R)` outside `f(R)`.
    NonTransitiveImage {
        relation: EquivRelation,
        map: FinMap,
        missing: (usize, usize),
    },
    Nonpermutable(PermutabilityFailure),
    Pentagon {
        algebra: FinAlgebra,
        pentagon: Pentagon,
    },
    HmFailure {
        algebra: FinAlgebra,
        terms: HmTerms,
        identity: HmIdentity,
        x: usize,
        y: usize,
    },
    /// `λ: Eq(f) → Eq(g)` misses `missing`.
    NonSurjectiveKernelMap {
        square: SplitSquare,
        missing: (usize, usize),
    },
    /// The pair `missing` of `U ×_W V` is not the image of any pair of the
    /// left-face pullback.
    NonPullbackCube {
        cube: Box<Cube>,
        missing: (usize, usize),
    },
    /// `image_connector` refused `map`; `error` is the exact message.
    ConnectorImage {
        connector: Connector,
        map: FinMap,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        codomain: Option<FinAlgebra>,
        error: String,
    },
    /// Pushing `groupoid` along its quotient by `(theta1, theta0)` gives no
    /// groupoid structure.
    GroupoidQuotient {
        groupoid: Box<InternalGroupoid>,
        theta1: EquivRelation,
        theta0: EquivRelation,
        induced: Box<InducedReport>,
    },
    /// A reflexive relation carrying a category structure that is not an
    /// equivalence relation.
    CategoryNotEquivalence {
        size: usize,
        pairs: Vec<(usize, usize)>,
        composition: Vec<[usize; 3]>,
    },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::NonTransitiveImage { .. } => "non_transitive_image",
            Certificate::Nonpermutable(_) => "nonpermutable",
            Certificate::Pentagon { .. } => "pentagon",
            Certificate::HmFailure { .. } => "hm_failure",
            Certificate::NonSurjectiveKernelMap { .. } => "non_surjective_kernel_map",
            Certificate::NonPullbackCube { .. } => "non_pullback_cube",
            Certificate::ConnectorImage { .. } => "connector_image",
            Certificate::GroupoidQuotient { .. } => "groupoid_quotient",
            Certificate::CategoryNotEquivalence { .. } => "category_not_equivalence",
        }
    }

    /// Recomputes the failure. `Ok(true)` means it reproduces exactly;
    /// `Err` means the certificate data itself is inconsistent.
    pub fn replay(&self) -> Result<bool> {
        match self {
            Certificate::NonTransitiveImage { relation, map, missing } => {
                let image = regular_image(map, &relation.to_relation())?;
                let twice = image.compose(&image)?;
                Ok(twice.first_difference(&image) == Some(*missing))
            }
            Certificate::Nonpermutable(f) => {
                let rep = permutability(&f.r, &f.s, 3)?;
                Ok(rep.witness == Some(f.witness) && rep.lhs.contains(f.witness.0, f.witness.1) == f.in_rsr)
            }
            Certificate::Pentagon { algebra, pentagon } => {
                let p = pentagon;
                for theta in [&p.bottom, &p.low, &p.high, &p.side, &p.top] {
                    check_compatible(algebra, theta)?;
                }
                Ok(p.is_valid())
            }
            Certificate::HmFailure { algebra, terms, identity, x, y } => {
                Ok(verify_hm_terms(algebra, terms)?.witness == Some((*identity, *x, *y)))
            }
            Certificate::NonSurjectiveKernelMap { square, missing } => {
                let sq = square.clone();
                let sq = SplitSquare::new(sq.f, sq.s, sq.alpha, sq.g, sq.t, sq.beta, None)?;
                Ok(induced_kernel_map(&sq).missing == Some(*missing))
            }
            Certificate::NonPullbackCube { cube, missing } => Ok(cube.right_face_gap()? == Some(*missing)),
            Certificate::ConnectorImage {
                connector,
                map,
                codomain,
                error,
            } => {
                if !verify_connector(connector, None)?.holds {
                    return Err(Error::InvalidConnector("certificate connector fails the axioms".into()));
                }
                Ok(match image_connector(map, connector, codomain.as_ref()) {
                    Ok(_) => false,
                    Err(e) => e.to_string() == *error,
                })
            }
            Certificate::GroupoidQuotient {
                groupoid,
                theta1,
                theta0,
                induced,
            } => {
                let (dst, mor) = quotient_rg(groupoid.graph(), theta1, theta0)?;
                let mut rep = induced_structure_search(&dst, groupoid, &mor)?;
                rep.structure = None;
                Ok(!rep.groupoid && rep == **induced)
            }
            Certificate::CategoryNotEquivalence {
                size,
                pairs,
                composition,
            } => {
                let graph = ReflexiveGraph::of_pairs(*size, pairs)?;
                let mut m = vec![None; graph.composable().len()];
                for &[g, h, k] in composition {
                    let idx = graph
                        .pair_index(g, h)
                        .ok_or_else(|| Error::Malformed(format!("({g},{h}) is not composable")))?;
                    m[idx] = Some(k);
                }
                let m = m
                    .into_iter()
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| Error::Malformed("composition table is incomplete".into()))?;
                let cat = InternalCategory::new(graph, m)?;
                let relation = Relation::from_pairs(*size, *size, pairs.iter().copied())?;
                Ok(verify_category(&cat)?.holds && !is_equivalence(&relation)?.is_equivalence())
            }
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::NonTransitiveImage { relation, map, missing } => write!(
                f,
                "image of R = {relation} along f = {:?} is not transitive: {missing:?} is missing",
                map.table()
            ),
            Certificate::Nonpermutable(p) => write!(
                f,
                "RSR ≠ SRS for R = {}, S = {}: witness {:?} lies only in {}",
                p.r,
                p.s,
                p.witness,
                if p.in_rsr { "RSR" } else { "SRS" }
            ),
            Certificate::Pentagon { pentagon: p, .. } => write!(
                f,
                "pentagon N5: {} < {} < {} < {}, side {}",
                p.bottom, p.low, p.high, p.top, p.side
            ),
            Certificate::HmFailure { identity, x, y, .. } => {
                write!(f, "term identity {} fails at x = {x}, y = {y}", serde_json::to_string(identity).unwrap_or_default())
            }
            Certificate::NonSurjectiveKernelMap { square, missing } => write!(
                f,
                "λ: Eq(f) → Eq(g) misses {missing:?} (f = {:?}, α = {:?}, g = {:?})",
                square.f.table(),
                square.alpha.table(),
                square.g.table()
            ),
            Certificate::NonPullbackCube { cube, missing } => write!(
                f,
                "right face is not a pullback: {missing:?} has no preimage (α = {:?}, γ = {:?}, β = {:?})",
                cube.alpha.table(),
                cube.gamma.table(),
                cube.beta.table()
            ),
            Certificate::ConnectorImage { map, error, .. } => {
                write!(f, "no image connector along f = {:?}: {error}", map.table())
            }
            Certificate::GroupoidQuotient { theta1, theta0, induced, .. } => {
                write!(f, "quotient by θ1 = {theta1}, θ0 = {theta0} has no induced groupoid")?;
                if let Some(c) = &induced.conflict {
                    write!(
                        f,
                        ": lifts {:?} and {:?} of {:?} compose to {} and {}",
                        c.lifts[0], c.lifts[1], c.pair, c.images[0], c.images[1]
                    )?;
                } else if let Some(p) = induced.unlifted {
                    write!(f, ": pair {p:?} has no composable lift")?;
                } else if let Some(v) = &induced.violation {
                    write!(f, ": {v}")?;
                }
                Ok(())
            }
            Certificate::CategoryNotEquivalence { pairs, .. } => {
                write!(f, "relation {pairs:?} is a category but not an equivalence relation")
            }
        }
    }
}
