//! Reflexive graphs, internal categories and groupoids over finite sets and
//! finite algebras.
//!
//! Arrows `g` run from `d(g)` to `c(g)`. A pair `(g, h)` is composable when
//! `d(g) = c(h)`, and `m(g, h)` is `g` after `h`. Groupoid structures on a
//! graph correspond to connectors on `Eq(d)` and `Eq(c)`.

mod bridge;
mod category;
mod graph;
mod json;
mod kernel;
mod quotient;
#[cfg(test)]
mod props;

pub use bridge::{connector_from_groupoid, groupoid_from_connector};
pub use category::{
    category_structures, groupoid_structures, verify_category, verify_groupoid, GraphCheck, GraphViolation,
    InternalCategory, InternalGroupoid,
};
pub use graph::{Mode, ReflexiveGraph};
pub use json::InternalStructure;
pub use kernel::{
    factor_equiv_morphism, induced_kernel_map, EquivFactorization, EquivMorphism, KernelMapReport, SplitSquare,
};
pub use quotient::{induced_structure_search, quotient_rg, InducedReport, LiftConflict, RGMorphism};
