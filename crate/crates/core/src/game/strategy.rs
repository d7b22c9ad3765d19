use std::fmt;

use rand::{Rng, RngCore};

use crate::cycle::{CycleEdge, InsertionHistory, Node};
use crate::game::GameState;

/// Alice's decision rule: given the full state at time `n`, return the
/// cycle-edge of her cycle that node `n + 1` goes into. `None` means the
/// strategy has no move left.
pub trait AliceStrategy {
    fn choose(&mut self, state: &GameState, rng: &mut dyn RngCore) -> Option<CycleEdge>;
}

/// Uniform over the cycle-edges of Alice's cycle.
#[derive(Debug, Clone, Copy, Default)]
pub struct UniformRandomAlice;

impl AliceStrategy for UniformRandomAlice {
    fn choose(&mut self, state: &GameState, rng: &mut dyn RngCore) -> Option<CycleEdge> {
        let tail = Node::raw(rng.gen_range(1..=state.n() as u32));
        Some(state.cycle_a().edge_after(tail))
    }
}

/// Plays the lexicographically smallest common cycle-edge whenever one
/// exists, otherwise the lexicographically smallest edge of her cycle.
#[derive(Debug, Clone, Copy, Default)]
pub struct GreedyCommonAlice;

impl AliceStrategy for GreedyCommonAlice {
    fn choose(&mut self, state: &GameState, _rng: &mut dyn RngCore) -> Option<CycleEdge> {
        if let Some(&e) = state.common_edges().first() {
            return Some(e);
        }
        // smallest edge overall is incident on node 1
        let one = Node::raw(1);
        let a = state.cycle_a();
        Some(CycleEdge::ordered(one, a.succ(one).min(a.pred(one))))
    }
}

/// Replays a fixed insertion history.
#[derive(Debug, Clone)]
pub struct ScriptedAlice {
    history: InsertionHistory,
}

impl ScriptedAlice {
    pub fn new(history: InsertionHistory) -> Self {
        ScriptedAlice { history }
    }
}

impl AliceStrategy for ScriptedAlice {
    fn choose(&mut self, state: &GameState, _rng: &mut dyn RngCore) -> Option<CycleEdge> {
        self.history.nu(state.n() + 1)
    }
}

/// A strategy by name, instantiated fresh for each trial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrategyKind {
    UniformRandom,
    GreedyCommon,
    Scripted(InsertionHistory),
}

impl StrategyKind {
    pub fn instantiate(&self) -> Box<dyn AliceStrategy + Send> {
        match self {
            StrategyKind::UniformRandom => Box::new(UniformRandomAlice),
            StrategyKind::GreedyCommon => Box::new(GreedyCommonAlice),
            StrategyKind::Scripted(h) => Box::new(ScriptedAlice::new(h.clone())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            StrategyKind::UniformRandom => "random",
            StrategyKind::GreedyCommon => "greedy-common",
            StrategyKind::Scripted(_) => "scripted",
        }
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
