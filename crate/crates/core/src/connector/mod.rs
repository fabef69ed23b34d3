//! Connectors between equivalence relations and centralizing double relations.
//!
//! A connector between `R` and `S` on `X` is a map `p: R ×_X S → X` with
//!
//! 1. `x S p(x,y,z) R z`,
//! 2. `p(x,x,y) = y`,
//! 3. `p(x,y,y) = x`,
//! 4. `p(x,y,p(z,u,v)) = p(p(x,y,z),u,v)` whenever both sides are defined.

mod domain;
mod double;
mod search;
mod shifting;
mod verify;
#[cfg(test)]
mod props;

pub use domain::{Connector, PullbackDomain, Triple};
pub use double::{
    centralizing_to_connector, connector_to_centralizing, image_connector, is_centralizing, CentralizingReport, Corner,
    CornerFailure, DoubleRelation, Square,
};
pub use search::{connectors_unique, find_connectors, find_connectors_in};
pub use shifting::{shifting_lemma_check, ShiftingReport};
pub use verify::{verify_connector, ConnectorCheck, Violation};
