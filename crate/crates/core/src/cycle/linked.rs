use crate::cycle::{CycleEdge, Node, Tour};
use crate::error::{PedigreeError, Result};

/// Mutable cycle on `[n]` stored as successor/predecessor arrays in the
/// positive direction. Supports O(1) insertion of node `n + 1` and O(1)
/// edge membership, which is what replay and the game loop need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkedCycle {
    // index 0 unused
    succ: Vec<u32>,
    pred: Vec<u32>,
}

impl LinkedCycle {
    /// The unique cycle on `{1, 2, 3}`.
    pub fn triangle() -> Self {
        Self::with_capacity(3)
    }

    pub fn with_capacity(n: usize) -> Self {
        let mut succ = Vec::with_capacity(n + 1);
        let mut pred = Vec::with_capacity(n + 1);
        succ.extend_from_slice(&[0, 2, 3, 1]);
        pred.extend_from_slice(&[0, 3, 1, 2]);
        LinkedCycle { succ, pred }
    }

    pub fn from_tour(tour: &Tour) -> Self {
        let order = tour.order();
        let n = order.len();
        let mut succ = vec![0u32; n + 1];
        let mut pred = vec![0u32; n + 1];
        for (i, &v) in order.iter().enumerate() {
            let w = order[(i + 1) % n];
            succ[v.index()] = w.label();
            pred[w.index()] = v.label();
        }
        LinkedCycle { succ, pred }
    }

    /// Current number of nodes.
    pub fn len(&self) -> usize {
        self.succ.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Next node in the positive direction.
    pub fn succ(&self, v: Node) -> Node {
        Node::raw(self.succ[v.index()])
    }

    /// Next node in the negative direction.
    pub fn pred(&self, v: Node) -> Node {
        Node::raw(self.pred[v.index()])
    }

    pub fn contains_node(&self, v: Node) -> bool {
        v.index() <= self.len()
    }

    pub fn contains_edge(&self, e: CycleEdge) -> bool {
        let (a, b) = (e.lo().index(), e.hi().index());
        b <= self.len() && (self.succ[a] as usize == b || self.pred[a] as usize == b)
    }

    /// The cycle-edge leaving `v` in the positive direction.
    pub fn edge_after(&self, v: Node) -> CycleEdge {
        CycleEdge::ordered(v, self.succ(v))
    }

    /// Orients `e` as `(tail, head)` with `succ(tail) == head`.
    pub fn orient(&self, e: CycleEdge) -> Option<(Node, Node)> {
        if !self.contains_edge(e) {
            return None;
        }
        if self.succ(e.lo()) == e.hi() {
            Some((e.lo(), e.hi()))
        } else {
            Some((e.hi(), e.lo()))
        }
    }

    /// Inserts node `n + 1` into the cycle-edge `e`. Returns the new node's
    /// `(negative, positive)` neighbours.
    pub fn insert_next(&mut self, e: CycleEdge) -> Result<(Node, Node)> {
        let (tail, head) = self
            .orient(e)
            .ok_or(PedigreeError::NotACycleEdge { edge: e })?;
        let new = self.len() as u32 + 1;
        self.succ.push(head.label());
        self.pred.push(tail.label());
        self.succ[tail.index()] = new;
        self.pred[head.index()] = new;
        Ok((tail, head))
    }

    /// Removes the largest node `n`, joining its two neighbours. Returns the
    /// cycle-edge that `n` had subdivided.
    pub fn contract_last(&mut self) -> CycleEdge {
        let last = self.len();
        debug_assert!(last > 3);
        let (p, s) = (self.pred[last], self.succ[last]);
        self.succ[p as usize] = s;
        self.pred[s as usize] = p;
        self.succ.pop();
        self.pred.pop();
        CycleEdge::ordered(Node::raw(p), Node::raw(s))
    }

    /// Walks the cycle in the positive direction from node 1.
    pub fn iter_positive(&self) -> impl Iterator<Item = Node> + '_ {
        let n = self.len();
        let mut cur = 1u32;
        (0..n).map(move |_| {
            let v = cur;
            cur = self.succ[v as usize];
            Node::raw(v)
        })
    }

    /// All cycle-edges, the `k`-th one being the `k`-th in positive direction
    /// from node 1.
    pub fn edges_positive(&self) -> impl Iterator<Item = CycleEdge> + '_ {
        self.iter_positive().map(|v| self.edge_after(v))
    }

    pub fn to_tour(&self) -> Tour {
        Tour::from_canonical_unchecked(self.iter_positive().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: u32, b: u32) -> CycleEdge {
        CycleEdge::from_labels(a, b).unwrap()
    }

    #[test]
    fn triangle_walks_positive() {
        let c = LinkedCycle::triangle();
        let order: Vec<u32> = c.iter_positive().map(Node::label).collect();
        assert_eq!(order, vec![1, 2, 3]);
        assert!(c.contains_edge(e(1, 3)));
    }

    #[test]
    fn insert_and_contract_are_inverse() {
        let mut c = LinkedCycle::triangle();
        assert_eq!(c.insert_next(e(1, 2)).unwrap(), (Node::raw(1), Node::raw(2)));
        assert_eq!(c.insert_next(e(3, 1)).unwrap(), (Node::raw(3), Node::raw(1)));
        let order: Vec<u32> = c.iter_positive().map(Node::label).collect();
        assert_eq!(order, vec![1, 4, 2, 3, 5]);
        assert_eq!(c.contract_last(), e(1, 3));
        assert_eq!(c.contract_last(), e(1, 2));
        assert_eq!(c, LinkedCycle::triangle());
    }

    #[test]
    fn insert_rejects_non_edge() {
        let mut c = LinkedCycle::triangle();
        c.insert_next(e(1, 2)).unwrap();
        assert!(c.insert_next(e(1, 2)).is_err());
        assert!(c.insert_next(e(1, 7)).is_err());
    }
}
