use std::fmt;

use serde::{Serialize, Serializer};

use crate::cycle::{CycleEdge, Node, MAX_NODES};
use crate::error::{PedigreeError, Result};

/// A cycle on `[n]`, `n >= 3`, stored in canonical form: starting at node 1
/// and walking in the positive direction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tour {
    order: Vec<Node>,
}

impl Tour {
    /// Validates `order` as a permutation of `[n]` and canonicalizes it. Any
    /// rotation or reflection of the same cycle gives the same tour.
    pub fn new(order: Vec<Node>) -> Result<Self> {
        let n = order.len();
        if n < 3 {
            return Err(PedigreeError::TooFewNodes(n));
        }
        if n > MAX_NODES {
            return Err(PedigreeError::TooManyNodes(n));
        }
        let mut seen = vec![false; n + 1];
        for &v in &order {
            let i = v.index();
            if i > n {
                return Err(PedigreeError::NotAPermutation {
                    n,
                    reason: format!("label {v} is larger than {n}"),
                });
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(PedigreeError::NotAPermutation {
                    n,
                    reason: format!("label {v} appears twice"),
                });
            }
        }
        Ok(Self::canonicalize(order))
    }

    pub fn from_labels(labels: &[u32]) -> Result<Self> {
        let order = labels.iter().map(|&l| Node::new(l)).collect::<Result<Vec<_>>>()?;
        Self::new(order)
    }

    pub(crate) fn from_canonical_unchecked(order: Vec<Node>) -> Self {
        debug_assert_eq!(order[0], Node::raw(1));
        Tour { order }
    }

    fn canonicalize(mut order: Vec<Node>) -> Self {
        let n = order.len();
        let start = order.iter().position(|v| v.label() == 1).expect("permutation contains 1");
        order.rotate_left(start);
        let p2 = order.iter().position(|v| v.label() == 2).unwrap();
        let p3 = order.iter().position(|v| v.label() == 3).unwrap();
        if p3 < p2 {
            order[1..n].reverse();
        }
        Tour { order }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[Node] {
        &self.order
    }

    pub fn labels(&self) -> Vec<u32> {
        self.order.iter().map(|v| v.label()).collect()
    }

    /// `positions()[v]` is the index of node `v` in the canonical order.
    /// Index 0 is unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.len() + 1];
        for (i, v) in self.order.iter().enumerate() {
            pos[v.index()] = i;
        }
        pos
    }

    pub fn contains_node(&self, v: Node) -> bool {
        (1..=self.len()).contains(&v.index())
    }

    pub fn contains_edge(&self, e: CycleEdge) -> bool {
        if !self.contains_node(e.hi()) {
            return false;
        }
        let pos = self.positions();
        let d = pos[e.lo().index()].abs_diff(pos[e.hi().index()]);
        d == 1 || d == self.len() - 1
    }

    /// Cycle-edges in positive order from node 1.
    pub fn edges(&self) -> impl Iterator<Item = CycleEdge> + '_ {
        let n = self.len();
        (0..n).map(move |i| CycleEdge::ordered(self.order[i], self.order[(i + 1) % n]))
    }
}

impl fmt::Display for Tour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.order.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Serialize for Tour {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.order.serialize(s)
    }
}

/// The `k`-th cycle-edge (1-based), counted in positive direction with the
/// first one incident on node 1.
pub fn edge_at_index(t: &Tour, k: usize) -> Result<CycleEdge> {
    let n = t.len();
    if k == 0 || k > n {
        return Err(PedigreeError::EdgeIndexOutOfRange { index: k, n });
    }
    let o = t.order();
    Ok(CycleEdge::ordered(o[k - 1], o[k % n]))
}

/// The open arc between `i` and `j` that avoids `min({1,2,3} \ {i,j})`,
/// listed walking away from `i`.
pub fn segment_between(t: &Tour, i: Node, j: Node) -> Result<Vec<Node>> {
    let n = t.len();
    for v in [i, j] {
        if !t.contains_node(v) {
            return Err(PedigreeError::NodeOutOfRange { node: v.label(), n });
        }
    }
    if i == j {
        return Err(PedigreeError::LoopEdge(i));
    }
    let reference = reference_node(i, j);
    let pos = t.positions();
    let (pi, pj, pr) = (pos[i.index()], pos[j.index()], pos[reference.index()]);
    let o = t.order();
    // arc walking forward from i to j
    let forward_len = (pj + n - pi) % n - 1;
    let forward_has_ref = (pr + n - pi) % n < (pj + n - pi) % n;
    let seg = if forward_has_ref {
        let len = n - 2 - forward_len;
        (1..=len).map(|s| o[(pi + n - s) % n]).collect()
    } else {
        (1..=forward_len).map(|s| o[(pi + s) % n]).collect()
    };
    Ok(seg)
}

/// `min({1,2,3} \ {i,j})`.
fn reference_node(i: Node, j: Node) -> Node {
    (1..=3)
        .map(Node::raw)
        .find(|&r| r != i && r != j)
        .expect("two nodes cannot cover {1,2,3}")
}

/// Finds the node `k` whose insertion subdivided `e`, if any, by inspecting
/// the segment between the endpoints of `e`: such a `k` exists iff that
/// segment is nonempty and all of its nodes exceed both endpoints, and then
/// it is the segment minimum.
pub fn find_inserter(t: &Tour, e: CycleEdge) -> Option<Node> {
    let seg = segment_between(t, e.lo(), e.hi()).ok()?;
    let min = seg.iter().copied().min()?;
    (min > e.hi()).then_some(min)
}
