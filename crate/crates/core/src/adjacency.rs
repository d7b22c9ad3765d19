use serde::Serialize;

use crate::cycle::{decode_tour, Lineage, Tour};
use crate::error::{PedigreeError, Result};
use crate::graph::{build_from_lineages, PedigreeGraph};

/// Verdict of the pedigree adjacency test with the graph that decided it.
#[derive(Debug, Clone, Serialize)]
pub struct Adjacency {
    pub adjacent: bool,
    #[serde(rename = "graph")]
    pub witness: PedigreeGraph,
}

/// Two distinct tours on `[n]`, `n >= 4`, are adjacent vertices of the
/// Pedigree polytope iff their pedigree graph `G_n` has at most one
/// component.
///
/// Tours are canonical by construction, so any rotation or reflection of
/// the inputs gives the same verdict.
pub fn pedigree_adjacent(a: &Tour, b: &Tour) -> Result<Adjacency> {
    if a.len() != b.len() {
        return Err(PedigreeError::NodeSetMismatch(a.len(), b.len()));
    }
    if a.len() < 4 {
        return Err(PedigreeError::AdjacencyNeedsFourNodes(a.len()));
    }
    if a == b {
        return Err(PedigreeError::SameVertex);
    }
    let la = Lineage::from_history(&decode_tour(a));
    let lb = Lineage::from_history(&decode_tour(b));
    adjacent_lineages(&la, &lb, a.len())
}

/// Adjacency for already-decoded tours, used by the skeleton census to avoid
/// decoding each tour once per pair.
pub fn adjacent_lineages(a: &Lineage, b: &Lineage, n: usize) -> Result<Adjacency> {
    let witness = build_from_lineages(a, b, n)?;
    Ok(Adjacency {
        adjacent: witness.is_connected(),
        witness,
    })
}
