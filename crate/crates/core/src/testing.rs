pub use crate::fixtures::{alice_example, bob_example};

use crate::cycle::CycleEdge;

pub fn e(a: u32, b: u32) -> CycleEdge {
    CycleEdge::from_labels(a, b).unwrap()
}
