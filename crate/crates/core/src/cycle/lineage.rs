use crate::cycle::{CycleEdge, InsertionHistory, LinkedCycle, Node, NuPair};

/// Oriented `nu` maps of one history plus an edge -> inserter index.
///
/// Every cycle-edge ever present has the form `{hi, lo}` with `lo` one of
/// the two neighbours `hi` had when it was inserted, so the inserter index
/// needs only two slots per node. Lookups are O(1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lineage {
    // index k; entries 0 unused
    nu_neg: Vec<u32>,
    nu_pos: Vec<u32>,
    // split[hi] = [k with nu(k) = {nu_pos[hi], hi}, k with nu(k) = {nu_neg[hi], hi}], 0 = none
    split: Vec<[u32; 2]>,
}

impl Lineage {
    /// Lineage of the triangle: only the fixed values for nodes 1..=3.
    pub fn triangle() -> Self {
        Self::with_capacity(3)
    }

    pub fn with_capacity(n: usize) -> Self {
        let mut nu_neg = Vec::with_capacity(n + 1);
        let mut nu_pos = Vec::with_capacity(n + 1);
        let mut split = Vec::with_capacity(n + 1);
        nu_neg.extend_from_slice(&[0, 0, 1, 2]);
        nu_pos.extend_from_slice(&[0, 0, 1, 1]);
        split.resize(4, [0, 0]);
        Lineage { nu_neg, nu_pos, split }
    }

    pub fn from_history(h: &InsertionHistory) -> Self {
        let mut cycle = LinkedCycle::with_capacity(h.horizon());
        let mut lineage = Self::with_capacity(h.horizon());
        for (_, e) in h.entries() {
            let (neg, pos) = cycle.insert_next(e).expect("history was validated");
            lineage.push(neg, pos);
        }
        lineage
    }

    /// Largest node recorded.
    pub fn horizon(&self) -> usize {
        self.nu_pos.len() - 1
    }

    /// Records the next node, inserted between `neg` and `pos`.
    pub fn push(&mut self, neg: Node, pos: Node) {
        let k = self.nu_pos.len() as u32;
        self.nu_neg.push(neg.label());
        self.nu_pos.push(pos.label());
        self.split.push([0, 0]);
        let e = CycleEdge::ordered(neg, pos);
        let slot = self.slot(e).expect("a cycle-edge {lo, hi} always has lo in nu(hi)");
        debug_assert_eq!(self.split[e.hi().index()][slot], 0, "edge subdivided twice");
        self.split[e.hi().index()][slot] = k;
    }

    fn slot(&self, e: CycleEdge) -> Option<usize> {
        let hi = e.hi().index();
        let lo = e.lo().label();
        if hi < 2 || hi > self.horizon() {
            None
        } else if self.nu_pos[hi] == lo {
            Some(0)
        } else if self.nu_neg[hi] == lo {
            Some(1)
        } else {
            None
        }
    }

    pub fn nu_pair(&self, k: Node) -> NuPair {
        let i = k.index();
        if i < 2 {
            return NuPair { neg: None, pos: None };
        }
        NuPair {
            neg: Some(Node::raw(self.nu_neg[i])),
            pos: Some(Node::raw(self.nu_pos[i])),
        }
    }

    /// `nu(k)` as an edge, for `k >= 3`.
    pub fn nu(&self, k: Node) -> CycleEdge {
        let i = k.index();
        debug_assert!(i >= 3);
        CycleEdge::ordered(Node::raw(self.nu_neg[i]), Node::raw(self.nu_pos[i]))
    }

    /// Whether `nu(k)` shares a node with `e`, for `k >= 2`.
    pub fn nu_meets(&self, k: Node, e: CycleEdge) -> bool {
        let i = k.index();
        e.contains(Node::raw(self.nu_neg[i])) || e.contains(Node::raw(self.nu_pos[i]))
    }

    /// The node `k >= 4` with `nu(k) = e`, if any.
    pub fn inserter_of(&self, e: CycleEdge) -> Option<Node> {
        let slot = self.slot(e)?;
        match self.split[e.hi().index()][slot] {
            0 => None,
            k => Some(Node::raw(k)),
        }
    }
}
