//! Tours on `[n]`, their insertion histories, and the conversions between
//! the two.
//!
//! A tour grows one node at a time: starting from the triangle `(1, 2, 3)`,
//! node `n` subdivides one cycle-edge of the tour on `[n-1]`. The sequence of
//! subdivided edges is the tour's [`InsertionHistory`]. Histories and
//! canonical [`Tour`]s are in bijection ([`replay_history`] /
//! [`decode_tour`]).
//!
//! Throughout, the *positive direction* of a cycle is the one in which,
//! walking from node 1, node 2 is met before node 3. Inserting nodes never
//! changes the relative order of 1, 2 and 3, so the orientation is stable
//! over time.

mod history;
mod lineage;
mod linked;
mod text;
mod tour;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{PedigreeError, Result};

pub use history::{decode_tour, nu_of, replay_history, sample_uniform_history, InsertionHistory, NuPair};
pub use lineage::Lineage;
pub use linked::LinkedCycle;
pub use text::{parse_history_text, parse_tour_text, ParseError};
pub use tour::{edge_at_index, find_inserter, segment_between, Tour};

/// Largest node count accepted anywhere in the crate.
pub const MAX_NODES: usize = 1_000_000;

/// A node label in `[n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Node(u32);

impl Node {
    pub fn new(label: u32) -> Result<Self> {
        if label == 0 {
            return Err(PedigreeError::ZeroNode);
        }
        Ok(Node(label))
    }

    /// Caller guarantees `label >= 1`.
    pub(crate) const fn raw(label: u32) -> Self {
        Node(label)
    }

    pub const fn label(self) -> u32 {
        self.0
    }

    pub(crate) const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<Node> for u32 {
    fn from(n: Node) -> u32 {
        n.0
    }
}

/// An unordered pair of distinct nodes, stored smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[u32; 2]", try_from = "[u32; 2]")]
pub struct CycleEdge {
    lo: Node,
    hi: Node,
}

impl CycleEdge {
    pub fn new(a: Node, b: Node) -> Result<Self> {
        if a == b {
            return Err(PedigreeError::LoopEdge(a));
        }
        Ok(Self::ordered(a, b))
    }

    /// Builds an edge from raw labels.
    pub fn from_labels(a: u32, b: u32) -> Result<Self> {
        Self::new(Node::new(a)?, Node::new(b)?)
    }

    /// Caller guarantees `a != b`.
    pub(crate) fn ordered(a: Node, b: Node) -> Self {
        debug_assert_ne!(a, b);
        if a < b {
            CycleEdge { lo: a, hi: b }
        } else {
            CycleEdge { lo: b, hi: a }
        }
    }

    pub fn lo(self) -> Node {
        self.lo
    }

    pub fn hi(self) -> Node {
        self.hi
    }

    pub fn contains(self, v: Node) -> bool {
        self.lo == v || self.hi == v
    }

    /// Number of shared endpoints (0, 1 or 2).
    pub fn overlap(self, other: CycleEdge) -> usize {
        usize::from(other.contains(self.lo)) + usize::from(other.contains(self.hi))
    }

    pub fn is_disjoint(self, other: CycleEdge) -> bool {
        self.overlap(other) == 0
    }
}

impl fmt::Display for CycleEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

impl From<CycleEdge> for [u32; 2] {
    fn from(e: CycleEdge) -> [u32; 2] {
        [e.lo.0, e.hi.0]
    }
}

impl TryFrom<[u32; 2]> for CycleEdge {
    type Error = PedigreeError;

    fn try_from(v: [u32; 2]) -> Result<Self> {
        CycleEdge::from_labels(v[0], v[1])
    }
}
