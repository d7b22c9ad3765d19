//! Pedigree encodings of tours and the pedigree-graph adjacency test for
//! vertices of the Pedigree polytope, together with the adjacency game
//! (an adversarial Alice against a uniformly random Bob) and an experiment
//! harness for exact enumeration and Monte Carlo estimates.

pub mod adjacency;
pub mod cycle;
pub mod dsu;
mod error;
pub mod experiments;
pub mod fixtures;
pub mod game;
pub mod graph;

#[cfg(test)]
mod testing;

pub use adjacency::{pedigree_adjacent, Adjacency};
pub use cycle::{CycleEdge, InsertionHistory, Lineage, Node, Tour};
pub use error::{PedigreeError, Result};
pub use graph::{EdgeType, PedigreeGraph};
pub use game::{run_game, AliceStrategy, GameState, MoveClass, StepRecord, StrategyKind};
