//! The adjacency game.
//!
//! At each time both players hold a cycle on `[n]`. Alice picks a cycle-edge
//! of her cycle for node `n + 1`, then Bob picks one of his. The state keeps
//! both cycles, both lineages, the common cycle-edges `E∩` (`S = |E∩|`) and
//! the pedigree graph (`T` components).

mod strategy;
mod transition;

use std::collections::BTreeSet;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cycle::{CycleEdge, InsertionHistory, Lineage, LinkedCycle, Node, Tour};
use crate::error::{PedigreeError, Result};
use crate::graph::{rule_edges, PedigreeGraph};

pub use strategy::{AliceStrategy, GreedyCommonAlice, ScriptedAlice, StrategyKind, UniformRandomAlice};
pub use transition::{
    check_transition_table, sample_reachable_states, OutcomeCounts, SampledState, TableCheck, Violation,
};

/// Whether Alice inserts into a common cycle-edge (c-move) or not (d-move).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MoveClass {
    #[serde(rename = "C_MOVE")]
    CMove,
    #[serde(rename = "D_MOVE")]
    DMove,
}

impl MoveClass {
    pub fn name(self) -> &'static str {
        match self {
            MoveClass::CMove => "C_MOVE",
            MoveClass::DMove => "D_MOVE",
        }
    }
}

/// Effect of one round on `(S, T)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Outcome {
    pub delta_s: i32,
    pub delta_t: i32,
    pub vertex_created: bool,
    pub isolated_created: bool,
}

/// One Bob edge and the outcome it would produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BobOutcome {
    pub bob_edge: CycleEdge,
    pub delta_s: i32,
    pub delta_t: i32,
}

/// Telemetry for one round. `s_star` and `r` are measured before the
/// round, `s` and `t` after it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    /// The node inserted in this round.
    pub n: usize,
    pub move_class: MoveClass,
    pub alice_edge: CycleEdge,
    pub bob_edge: CycleEdge,
    pub delta_s: i32,
    pub delta_t: i32,
    pub vertex_created: bool,
    pub isolated_created: bool,
    pub s_star: usize,
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

/// Full game state at time `n`.
#[derive(Debug, Clone)]
pub struct GameState {
    cycle_a: LinkedCycle,
    cycle_b: LinkedCycle,
    history_a: InsertionHistory,
    history_b: InsertionHistory,
    lineage_a: Lineage,
    lineage_b: Lineage,
    common: BTreeSet<CycleEdge>,
    graph: PedigreeGraph,
}

impl Default for GameState {
    fn default() -> Self {
        Self::new()
    }
}

impl GameState {
    /// Time 3: both players hold the triangle, all three edges are common.
    pub fn new() -> Self {
        Self::with_capacity(3)
    }

    pub fn with_capacity(n: usize) -> Self {
        let cycle = LinkedCycle::with_capacity(n);
        let common = cycle.edges_positive().collect();
        GameState {
            cycle_a: cycle.clone(),
            cycle_b: cycle,
            history_a: InsertionHistory::empty(),
            history_b: InsertionHistory::empty(),
            lineage_a: Lineage::with_capacity(n),
            lineage_b: Lineage::with_capacity(n),
            common,
            graph: PedigreeGraph::with_capacity(n),
        }
    }

    /// Replays two histories through time `n` round by round.
    pub fn from_histories(ha: &InsertionHistory, hb: &InsertionHistory, n: usize) -> Result<Self> {
        let horizon = ha.horizon().min(hb.horizon());
        if n < 3 || n > horizon {
            return Err(PedigreeError::TimeOutOfRange { requested: n, horizon });
        }
        let mut state = Self::with_capacity(n);
        for k in 4..=n {
            state.apply_step(ha.nu(k).unwrap(), hb.nu(k).unwrap())?;
        }
        Ok(state)
    }

    /// Current time (number of nodes in each cycle).
    pub fn n(&self) -> usize {
        self.cycle_a.len()
    }

    /// Number of common cycle-edges.
    pub fn s(&self) -> usize {
        self.common.len()
    }

    /// Number of components of the pedigree graph.
    pub fn t(&self) -> usize {
        self.graph.component_count()
    }

    pub fn common_edges(&self) -> &BTreeSet<CycleEdge> {
        &self.common
    }

    pub fn graph(&self) -> &PedigreeGraph {
        &self.graph
    }

    pub fn cycle_a(&self) -> &LinkedCycle {
        &self.cycle_a
    }

    pub fn cycle_b(&self) -> &LinkedCycle {
        &self.cycle_b
    }

    pub fn tour_a(&self) -> Tour {
        self.cycle_a.to_tour()
    }

    pub fn tour_b(&self) -> Tour {
        self.cycle_b.to_tour()
    }

    pub fn history_a(&self) -> &InsertionHistory {
        &self.history_a
    }

    pub fn history_b(&self) -> &InsertionHistory {
        &self.history_b
    }

    /// `E(A_n) ∩ E(B_n)` recomputed by walking Alice's cycle.
    pub fn recompute_common(&self) -> BTreeSet<CycleEdge> {
        self.cycle_a
            .edges_positive()
            .filter(|&e| self.cycle_b.contains_edge(e))
            .collect()
    }

    fn is_common(&self, e: CycleEdge) -> bool {
        self.cycle_a.contains_edge(e) && self.cycle_b.contains_edge(e)
    }

    fn check_alice(&self, e: CycleEdge) -> Result<()> {
        if self.cycle_a.contains_edge(e) {
            Ok(())
        } else {
            Err(PedigreeError::NotACycleEdge { edge: e })
        }
    }

    fn check_bob(&self, e: CycleEdge) -> Result<()> {
        if self.cycle_b.contains_edge(e) {
            Ok(())
        } else {
            Err(PedigreeError::NotACycleEdge { edge: e })
        }
    }

    pub fn classify_move(&self, alice_edge: CycleEdge) -> Result<MoveClass> {
        self.check_alice(alice_edge)?;
        Ok(if self.common.contains(&alice_edge) {
            MoveClass::CMove
        } else {
            MoveClass::DMove
        })
    }

    /// `S*`: common cycle-edges disjoint from Alice's edge.
    pub fn s_star(&self, alice_edge: CycleEdge) -> usize {
        self.common.iter().filter(|e| e.is_disjoint(alice_edge)).count()
    }

    /// `R`: Bob's non-common cycle-edges disjoint from Alice's edge.
    pub fn r(&self, alice_edge: CycleEdge) -> usize {
        let mut touching = [alice_edge; 4];
        let mut len = 0;
        for v in [alice_edge.lo(), alice_edge.hi()] {
            for w in [self.cycle_b.succ(v), self.cycle_b.pred(v)] {
                let e = CycleEdge::ordered(v, w);
                if !touching[..len].contains(&e) {
                    touching[len] = e;
                    len += 1;
                }
            }
        }
        let touching_bob_only = touching[..len].iter().filter(|&&e| !self.is_common(e)).count();
        self.n() - self.s() - touching_bob_only
    }

    /// Outcome of the round `(alice_edge, bob_edge)` without playing it.
    pub fn preview(&self, alice_edge: CycleEdge, bob_edge: CycleEdge) -> Result<Outcome> {
        self.check_alice(alice_edge)?;
        self.check_bob(bob_edge)?;
        Ok(self.outcome(alice_edge, bob_edge).0)
    }

    fn outcome(&self, alice_edge: CycleEdge, bob_edge: CycleEdge) -> (Outcome, Option<crate::graph::IncidentEdges>) {
        let new = Node::raw(self.n() as u32 + 1);
        let lost = usize::from(self.is_common(alice_edge))
            + usize::from(bob_edge != alice_edge && self.is_common(bob_edge));
        let gained = alice_edge.overlap(bob_edge);
        let rule = rule_edges(&self.lineage_a, alice_edge, &self.lineage_b, bob_edge, new);
        let delta_t = rule.as_ref().map_or(0, |r| self.graph.delta_for(r));
        let outcome = Outcome {
            delta_s: gained as i32 - lost as i32,
            delta_t,
            vertex_created: rule.is_some(),
            isolated_created: rule.as_ref().map_or(false, |r| r.is_empty()),
        };
        (outcome, rule)
    }

    /// Plays one round: inserts node `n + 1` into `alice_edge` of A and
    /// `bob_edge` of B, extends the pedigree graph and updates `E∩`.
    pub fn apply_step(&mut self, alice_edge: CycleEdge, bob_edge: CycleEdge) -> Result<StepRecord> {
        let move_class = self.classify_move(alice_edge)?;
        self.check_bob(bob_edge)?;
        let s_star = self.s_star(alice_edge);
        let r = self.r(alice_edge);
        let (outcome, rule) = self.outcome(alice_edge, bob_edge);

        self.common.remove(&alice_edge);
        self.common.remove(&bob_edge);
        let (a_neg, a_pos) = self.cycle_a.insert_next(alice_edge)?;
        let (b_neg, b_pos) = self.cycle_b.insert_next(bob_edge)?;
        let new = Node::raw(self.n() as u32);
        for v in [alice_edge.lo(), alice_edge.hi()] {
            if bob_edge.contains(v) {
                self.common.insert(CycleEdge::ordered(v, new));
            }
        }
        self.lineage_a.push(a_neg, a_pos);
        self.lineage_b.push(b_neg, b_pos);
        self.history_a.push_unchecked(alice_edge);
        self.history_b.push_unchecked(bob_edge);
        let ext = self.graph.push_node(rule);
        debug_assert_eq!(ext.delta_components, outcome.delta_t);

        Ok(StepRecord {
            n: self.n(),
            move_class,
            alice_edge,
            bob_edge,
            delta_s: outcome.delta_s,
            delta_t: outcome.delta_t,
            vertex_created: outcome.vertex_created,
            isolated_created: outcome.isolated_created,
            s_star,
            r,
            s: self.s(),
            t: self.t(),
        })
    }

    /// Every one of Bob's `n` possible replies to `alice_edge`, in positive
    /// order of his cycle from node 1, with the exact `(ΔS, ΔT)` each causes.
    /// Under uniform Bob each has probability `1/n`.
    pub fn bob_outcome_distribution(&self, alice_edge: CycleEdge) -> Result<Vec<BobOutcome>> {
        self.check_alice(alice_edge)?;
        Ok(self
            .cycle_b
            .edges_positive()
            .map(|bob_edge| {
                let (o, _) = self.outcome(alice_edge, bob_edge);
                BobOutcome {
                    bob_edge,
                    delta_s: o.delta_s,
                    delta_t: o.delta_t,
                }
            })
            .collect())
    }

    /// A uniformly random cycle-edge of Bob's cycle.
    pub fn random_bob_edge<R: Rng + ?Sized>(&self, rng: &mut R) -> CycleEdge {
        let tail = Node::raw(rng.gen_range(1..=self.n() as u32));
        self.cycle_b.edge_after(tail)
    }

    /// Plays one round with Alice's strategy against uniform Bob.
    pub fn play_round(&mut self, alice: &mut dyn AliceStrategy, rng: &mut dyn RngCore) -> Result<StepRecord> {
        let time = self.n();
        let alice_edge = alice
            .choose(self, rng)
            .ok_or(PedigreeError::StrategyExhausted { time })?;
        if !self.cycle_a.contains_edge(alice_edge) {
            return Err(PedigreeError::StrategyReturnedNonEdge { edge: alice_edge, time });
        }
        let bob_edge = self.random_bob_edge(rng);
        self.apply_step(alice_edge, bob_edge)
    }

    /// Keeps playing until time `n_max`, returning one record per round.
    pub fn play_until(
        &mut self,
        alice: &mut dyn AliceStrategy,
        rng: &mut dyn RngCore,
        n_max: usize,
    ) -> Result<Vec<StepRecord>> {
        let mut records = Vec::with_capacity(n_max.saturating_sub(self.n()));
        while self.n() < n_max {
            records.push(self.play_round(alice, rng)?);
        }
        Ok(records)
    }
}

/// Plays rounds `4..=n_max` from the triangle with Alice's strategy against
/// uniform Bob. Deterministic given the strategy and the RNG state.
pub fn run_game(alice: &mut dyn AliceStrategy, rng: &mut dyn RngCore, n_max: usize) -> Result<Vec<StepRecord>> {
    if n_max < 4 {
        return Err(PedigreeError::OutOfRange {
            what: "n_max",
            value: n_max,
            range: ">= 4",
        });
    }
    GameState::with_capacity(n_max).play_until(alice, rng, n_max)
}

/// Independent RNG for trial `trial` of an experiment seeded with `seed`:
/// the ChaCha8 stream `trial` under key `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}
