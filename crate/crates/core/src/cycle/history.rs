use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use crate::cycle::{CycleEdge, LinkedCycle, Node, Tour, MAX_NODES};
use crate::error::{PedigreeError, Result};

/// The pedigree encoding of a tour: for each node `n = 4..=N`, the
/// cycle-edge `nu(n)` that `n` subdivided when it was added.
///
/// Construction replays the history, so every stored entry is a cycle-edge
/// of the tour at the time of insertion.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct InsertionHistory {
    // edges[i] = nu(i + 4)
    edges: Vec<CycleEdge>,
}

/// The two neighbours of `k` at the moment it was inserted, named by the
/// direction in which they follow `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NuPair {
    pub neg: Option<Node>,
    pub pos: Option<Node>,
}

impl InsertionHistory {
    /// The empty history (the triangle on `{1,2,3}`).
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates and stores `nu(4), nu(5), ...` in order.
    pub fn new(edges: Vec<CycleEdge>) -> Result<Self> {
        if edges.len() + 3 > MAX_NODES {
            return Err(PedigreeError::TooManyNodes(edges.len() + 3));
        }
        let mut cycle = LinkedCycle::with_capacity(edges.len() + 3);
        for (i, &e) in edges.iter().enumerate() {
            cycle.insert_next(e).map_err(|_| PedigreeError::InvalidInsertion {
                node: i as u32 + 4,
                edge: e,
            })?;
        }
        Ok(InsertionHistory { edges })
    }

    /// Builds a history from `(node, edge)` entries, which must cover the
    /// nodes `4..=N` exactly once.
    pub fn from_entries(entries: impl IntoIterator<Item = (u32, CycleEdge)>) -> Result<Self> {
        let map: BTreeMap<u32, CycleEdge> = entries.into_iter().collect();
        let mut expected = 4;
        for &k in map.keys() {
            if k != expected {
                return Err(PedigreeError::HistoryGap { expected, found: k });
            }
            expected += 1;
        }
        Self::new(map.into_values().collect())
    }

    /// Caller guarantees every edge was valid at its insertion time.
    pub(crate) fn from_edges_unchecked(edges: Vec<CycleEdge>) -> Self {
        InsertionHistory { edges }
    }

    /// Largest node `N` covered by the history.
    pub fn horizon(&self) -> usize {
        self.edges.len() + 3
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `nu(k)` for `4 <= k <= N`.
    pub fn nu(&self, k: usize) -> Option<CycleEdge> {
        k.checked_sub(4).and_then(|i| self.edges.get(i)).copied()
    }

    /// `(k, nu(k))` for `k = 4..=N`.
    pub fn entries(&self) -> impl Iterator<Item = (u32, CycleEdge)> + '_ {
        self.edges.iter().enumerate().map(|(i, &e)| (i as u32 + 4, e))
    }

    pub fn edges(&self) -> &[CycleEdge] {
        &self.edges
    }

    /// The history restricted to nodes `4..=n`.
    pub fn truncated(&self, n: usize) -> Self {
        let keep = n.saturating_sub(3).min(self.edges.len());
        InsertionHistory {
            edges: self.edges[..keep].to_vec(),
        }
    }

    pub(crate) fn push_unchecked(&mut self, e: CycleEdge) {
        self.edges.push(e);
    }

    /// Map form `{k: [lo, hi]}` used by the JSON interface.
    pub fn to_map(&self) -> BTreeMap<u32, CycleEdge> {
        self.entries().collect()
    }

    /// Line form `"k: lo hi"`, one entry per line.
    pub fn to_text(&self) -> String {
        self.entries()
            .map(|(k, e)| format!("{k}: {} {}\n", e.lo(), e.hi()))
            .collect()
    }

    fn check_time(&self, n: usize) -> Result<()> {
        if n < 3 || n > self.horizon() {
            return Err(PedigreeError::TimeOutOfRange {
                requested: n,
                horizon: self.horizon(),
            });
        }
        Ok(())
    }

    /// Replays through time `n` into a linked cycle.
    pub(crate) fn replay_linked(&self, n: usize) -> Result<LinkedCycle> {
        self.check_time(n)?;
        let mut cycle = LinkedCycle::with_capacity(n);
        for (k, e) in self.entries().take(n - 3) {
            cycle
                .insert_next(e)
                .map_err(|_| PedigreeError::InvalidInsertion { node: k, edge: e })?;
        }
        Ok(cycle)
    }
}

/// The canonical tour `A_n` obtained by starting from `(1,2,3)` and
/// subdividing `nu(k)` with `k` for `k = 4..=n`.
pub fn replay_history(h: &InsertionHistory, n: usize) -> Result<Tour> {
    Ok(h.replay_linked(n)?.to_tour())
}

/// Inverse of [`replay_history`]: repeatedly peel the largest node, whose two
/// neighbours are then both smaller and form the edge it subdivided.
pub fn decode_tour(t: &Tour) -> InsertionHistory {
    let mut cycle = LinkedCycle::from_tour(t);
    let mut edges = Vec::with_capacity(t.len().saturating_sub(3));
    while cycle.len() > 3 {
        edges.push(cycle.contract_last());
    }
    edges.reverse();
    InsertionHistory::from_edges_unchecked(edges)
}

/// `(nu-(k), nu+(k))`. Nodes 1..=3 use the fixed extension
/// `nu(3) = (2, 1)`, `nu(2) = (1, 1)`, `nu(1) = (none, none)`.
pub fn nu_of(h: &InsertionHistory, k: Node) -> Result<NuPair> {
    let n = h.horizon();
    match k.label() {
        1 => Ok(NuPair { neg: None, pos: None }),
        2 => Ok(NuPair {
            neg: Some(Node::raw(1)),
            pos: Some(Node::raw(1)),
        }),
        3 => Ok(NuPair {
            neg: Some(Node::raw(2)),
            pos: Some(Node::raw(1)),
        }),
        _ if k.index() > n => Err(PedigreeError::NodeOutOfRange { node: k.label(), n }),
        _ => {
            let cycle = h.replay_linked(k.index())?;
            Ok(NuPair {
                neg: Some(cycle.pred(k)),
                pos: Some(cycle.succ(k)),
            })
        }
    }
}

/// Draws `nu(n)` uniformly among the `n - 1` cycle-edges of the current
/// tour, independently for `n = 4..=horizon`. The tour at every prefix is
/// then uniform over all cycles on its node set.
///
/// The edge is chosen by drawing its tail node (in positive direction)
/// uniformly from `[n - 1]`.
pub fn sample_uniform_history<R: Rng + ?Sized>(rng: &mut R, horizon: usize) -> InsertionHistory {
    assert!((3..=MAX_NODES).contains(&horizon), "horizon {horizon} outside 3..={MAX_NODES}");
    let mut cycle = LinkedCycle::with_capacity(horizon);
    let mut edges = Vec::with_capacity(horizon - 3);
    for n in 4..=horizon as u32 {
        let tail = Node::raw(rng.gen_range(1..n));
        let e = cycle.edge_after(tail);
        cycle.insert_next(e).expect("edge taken from the cycle");
        edges.push(e);
    }
    InsertionHistory::from_edges_unchecked(edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{alice_example, bob_example, e};

    #[test]
    fn empty_history_is_triangle() {
        let h = InsertionHistory::empty();
        assert_eq!(replay_history(&h, 3).unwrap().labels(), vec![1, 2, 3]);
    }

    #[test]
    fn worked_example_replays() {
        assert_eq!(
            replay_history(&alice_example(), 10).unwrap().labels(),
            vec![1, 4, 7, 5, 2, 6, 8, 3, 10, 9]
        );
        assert_eq!(
            replay_history(&bob_example(), 10).unwrap().labels(),
            vec![1, 5, 2, 10, 6, 3, 7, 4, 8, 9]
        );
    }

    #[test]
    fn destroyed_edge_is_rejected() {
        let err = InsertionHistory::new(vec![e(1, 2), e(1, 2)]).unwrap_err();
        assert!(matches!(err, PedigreeError::InvalidInsertion { node: 5, .. }));
    }

    #[test]
    fn entries_must_be_consecutive() {
        let err = InsertionHistory::from_entries([(4, e(1, 2)), (6, e(1, 3))]).unwrap_err();
        assert_eq!(err, PedigreeError::HistoryGap { expected: 5, found: 6 });
    }

    #[test]
    fn decode_examples() {
        assert!(decode_tour(&Tour::from_labels(&[1, 2, 3]).unwrap()).is_empty());
        let a = Tour::from_labels(&[1, 4, 7, 5, 2, 6, 8, 3, 10, 9]).unwrap();
        assert_eq!(decode_tour(&a), alice_example());
        let b = Tour::from_labels(&[1, 5, 2, 10, 6, 3, 7, 4, 8, 9]).unwrap();
        assert_eq!(decode_tour(&b), bob_example());
    }

    #[test]
    fn nu_examples() {
        let k = |l| Node::new(l).unwrap();
        let a8 = nu_of(&alice_example(), k(8)).unwrap();
        assert_eq!((a8.pos, a8.neg), (Some(k(3)), Some(k(6))));
        let b9 = nu_of(&bob_example(), k(9)).unwrap();
        let pair = CycleEdge::new(b9.pos.unwrap(), b9.neg.unwrap()).unwrap();
        assert_eq!(pair, e(1, 8));
        let three = nu_of(&InsertionHistory::empty(), k(3)).unwrap();
        assert_eq!((three.pos, three.neg), (Some(k(1)), Some(k(2))));
        let two = nu_of(&InsertionHistory::empty(), k(2)).unwrap();
        assert_eq!((two.pos, two.neg), (Some(k(1)), Some(k(1))));
        assert_eq!(nu_of(&InsertionHistory::empty(), k(1)).unwrap().pos, None);
        assert!(nu_of(&alice_example(), k(11)).is_err());
    }

    #[test]
    fn replay_range_is_checked() {
        assert!(replay_history(&alice_example(), 11).is_err());
        assert!(replay_history(&alice_example(), 2).is_err());
    }

    #[test]
    fn text_form_lists_entries() {
        let h = InsertionHistory::new(vec![e(1, 2), e(2, 4)]).unwrap();
        assert_eq!(h.to_text(), "4: 1 2\n5: 2 4\n");
    }
}
