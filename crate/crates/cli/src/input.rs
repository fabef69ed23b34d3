use std::fs;
use std::path::Path;

use anyhow::Context;
use goursat_core::algebra::{AlgebraFile, FinAlgebra};
use serde::de::DeserializeOwned;

/// Reads and parses a JSON file, naming the file in any error.
pub fn read<T: DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("cannot parse {}", path.display()))
}

pub fn algebra(path: &Path) -> anyhow::Result<AlgebraFile> {
    read(path)
}

pub fn algebra_opt(path: Option<&Path>) -> anyhow::Result<Option<FinAlgebra>> {
    path.map(|p| algebra(p).map(|f| f.algebra)).transpose()
}
