use std::collections::BTreeMap;
use std::fs;

use anyhow::{anyhow, Context, Result};

use pedigree_core::cycle::{parse_history_text, parse_tour_text, CycleEdge, InsertionHistory};
use pedigree_core::Tour;

/// Inline text, or the contents of `path` when written as `@path`.
pub fn read_arg(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path}")),
        None => Ok(arg.to_owned()),
    }
}

pub fn tour(arg: &str, what: &str) -> Result<Tour> {
    let text = read_arg(arg)?;
    parse_tour_text(&text).map_err(|e| anyhow!("{what}: {e}"))
}

/// A history as `"n: i j"` lines or as a JSON object `{"4": [i, j], ...}`.
pub fn history(arg: &str, what: &str) -> Result<InsertionHistory> {
    let text = read_arg(arg)?;
    if text.trim_start().starts_with('{') {
        let map: BTreeMap<String, [u32; 2]> =
            serde_json::from_str(&text).map_err(|e| anyhow!("{what}: line {}, column {}: {e}", e.line(), e.column()))?;
        let mut entries = Vec::with_capacity(map.len());
        for (k, [a, b]) in map {
            let node: u32 = k.parse().map_err(|_| anyhow!("{what}: key {k:?} is not a node label"))?;
            let edge = CycleEdge::from_labels(a, b).map_err(|e| anyhow!("{what}: node {node}: {e}"))?;
            entries.push((node, edge));
        }
        return InsertionHistory::from_entries(entries).map_err(|e| anyhow!("{what}: {e}"));
    }
    parse_history_text(&text).map_err(|e| anyhow!("{what}: {e}"))
}
