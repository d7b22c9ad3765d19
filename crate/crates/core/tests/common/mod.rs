#![allow(dead_code)]

use proptest::prelude::*;

use pedigree_core::cycle::{CycleEdge, InsertionHistory, LinkedCycle, Node};

/// History whose `i`-th insertion goes after tail node `choices[i] mod m`,
/// `m` being the current cycle length.
pub fn history_from_choices(choices: &[u32]) -> InsertionHistory {
    let mut cycle = LinkedCycle::with_capacity(choices.len() + 3);
    let mut edges = Vec::with_capacity(choices.len());
    for &c in choices {
        let m = cycle.len() as u32;
        let e = cycle.edge_after(Node::new(c % m + 1).unwrap());
        cycle.insert_next(e).unwrap();
        edges.push(e);
    }
    InsertionHistory::new(edges).unwrap()
}

pub fn history(max_nodes: usize) -> impl Strategy<Value = InsertionHistory> {
    prop::collection::vec(any::<u32>(), 0..=max_nodes - 3).prop_map(|c| history_from_choices(&c))
}

/// Two histories with a common horizon `n` in `4..=max_nodes`.
pub fn history_pair(max_nodes: usize) -> impl Strategy<Value = (InsertionHistory, InsertionHistory, usize)> {
    (4..=max_nodes).prop_flat_map(|n| {
        (
            prop::collection::vec(any::<u32>(), n - 3),
            prop::collection::vec(any::<u32>(), n - 3),
        )
            .prop_map(move |(a, b)| (history_from_choices(&a), history_from_choices(&b), n))
    })
}

/// Like [`history_pair`], but B agrees with A on a random share of steps,
/// which makes common edges and non-vertices frequent.
pub fn correlated_pair(max_nodes: usize) -> impl Strategy<Value = (InsertionHistory, InsertionHistory, usize)> {
    (4..=max_nodes).prop_flat_map(|n| {
        (
            prop::collection::vec(any::<u32>(), n - 3),
            prop::collection::vec((any::<bool>(), any::<u32>()), n - 3),
        )
            .prop_map(move |(a, b)| {
                let ha = history_from_choices(&a);
                let mut cycle = LinkedCycle::with_capacity(n);
                let mut edges = Vec::new();
                for (i, &(copy, c)) in b.iter().enumerate() {
                    let own = ha.edges()[i];
                    let e = if copy && cycle.contains_edge(own) {
                        own
                    } else {
                        cycle.edge_after(Node::new(c % cycle.len() as u32 + 1).unwrap())
                    };
                    cycle.insert_next(e).unwrap();
                    edges.push(e);
                }
                (ha, InsertionHistory::new(edges).unwrap(), n)
            })
    })
}

pub fn e(a: u32, b: u32) -> CycleEdge {
    CycleEdge::from_labels(a, b).unwrap()
}
