//! The two histories of the ten-node worked example, whose pedigree graph
//! `G_10` has vertices `{4,5,7,8,9,10}` and is connected.

use crate::cycle::{CycleEdge, InsertionHistory};

fn history(pairs: &[(u32, u32)]) -> InsertionHistory {
    let edges = pairs
        .iter()
        .map(|&(a, b)| CycleEdge::from_labels(a, b).expect("distinct labels"))
        .collect();
    InsertionHistory::new(edges).expect("fixture history is valid")
}

/// Alice's insertions for nodes 4..=10; replays to `(1,4,7,5,2,6,8,3,10,9)`.
pub fn alice_example() -> InsertionHistory {
    history(&[(1, 2), (2, 4), (2, 3), (4, 5), (3, 6), (1, 3), (3, 9)])
}

/// Bob's insertions for nodes 4..=10; replays to `(1,5,2,10,6,3,7,4,8,9)`.
pub fn bob_example() -> InsertionHistory {
    history(&[(1, 3), (1, 2), (2, 3), (3, 4), (1, 4), (1, 8), (2, 6)])
}
