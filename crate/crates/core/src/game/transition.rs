use std::collections::BTreeMap;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cycle::{CycleEdge, Node};
use crate::error::Result;
use crate::game::{trial_rng, AliceStrategy, GameState, GreedyCommonAlice, MoveClass, UniformRandomAlice};

/// Number of Bob replies per `(ΔS, ΔT)` cell.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OutcomeCounts(BTreeMap<(i32, i32), usize>);

impl OutcomeCounts {
    pub fn get(&self, delta_s: i32, delta_t: i32) -> usize {
        self.0.get(&(delta_s, delta_t)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn count_where(&self, mut pred: impl FnMut(i32, i32) -> bool) -> usize {
        self.0.iter().filter(|(&(s, t), _)| pred(s, t)).map(|(_, &c)| c).sum()
    }

    pub fn cells(&self) -> impl Iterator<Item = ((i32, i32), usize)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    fn add(&mut self, delta_s: i32, delta_t: i32) {
        *self.0.entry((delta_s, delta_t)).or_default() += 1;
    }
}

/// A failed table constraint. `bound` is what the table demands, `observed`
/// what the enumeration gave; `relation` says how they were compared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub constraint: &'static str,
    pub relation: &'static str,
    pub observed: i64,
    pub bound: i64,
}

/// Exact one-step law of `(ΔS, ΔT)` for a fixed Alice edge, checked against
/// the transition table for its move class.
#[derive(Debug, Clone, Serialize)]
pub struct TableCheck {
    pub n: usize,
    pub alice_edge: CycleEdge,
    pub move_class: MoveClass,
    pub s: usize,
    pub s_star: usize,
    pub r: usize,
    pub t: usize,
    pub counts: OutcomeCounts,
    pub violations: Vec<Violation>,
}

impl TableCheck {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

struct Checker<'a> {
    counts: &'a OutcomeCounts,
    out: Vec<Violation>,
}

impl Checker<'_> {
    fn eq(&mut self, constraint: &'static str, observed: usize, bound: usize) {
        if observed != bound {
            self.push(constraint, "==", observed, bound as i64);
        }
    }

    fn le(&mut self, constraint: &'static str, observed: usize, bound: i64) {
        if observed as i64 > bound {
            self.push(constraint, "<=", observed, bound);
        }
    }

    fn ge(&mut self, constraint: &'static str, observed: usize, bound: i64) {
        if (observed as i64) < bound {
            self.push(constraint, ">=", observed, bound);
        }
    }

    fn push(&mut self, constraint: &'static str, relation: &'static str, observed: usize, bound: i64) {
        self.out.push(Violation {
            constraint,
            relation,
            observed: observed as i64,
            bound,
        });
    }

    fn cell(&self, s: i32, t: i32) -> usize {
        self.counts.get(s, t)
    }
}

/// Enumerates all of Bob's replies to `alice_edge` and checks the counts
/// against the table for the move's class.
///
/// c-move: `(+1,0) = 1`, `(-2,+1) = S*`, `(-1,0) = R`, `(-1,+1) <= 2`,
/// `(0,0) <= 2`, every other cell empty.
///
/// d-move: `(-1,0) = S*`, `(0,0) <= R - T + 1`, `(+1,0) <= 4`,
/// `#{ΔT = -1} >= T - 1`, no `ΔT = +1`, no `ΔS = -2`, cells limited to
/// `ΔS in {-1,0,+1}` and `ΔT in {-1,0}`.
pub fn check_transition_table(state: &GameState, alice_edge: CycleEdge) -> Result<TableCheck> {
    let move_class = state.classify_move(alice_edge)?;
    let mut counts = OutcomeCounts::default();
    for o in state.bob_outcome_distribution(alice_edge)? {
        counts.add(o.delta_s, o.delta_t);
    }
    let s_star = state.s_star(alice_edge);
    let r = state.r(alice_edge);
    let t = state.t();
    let mut c = Checker { counts: &counts, out: Vec::new() };
    match move_class {
        MoveClass::CMove => {
            c.eq("C:(+1,0)", c.cell(1, 0), 1);
            c.eq("C:(-2,+1)", c.cell(-2, 1), s_star);
            c.eq("C:(-1,0)", c.cell(-1, 0), r);
            c.le("C:(-1,+1)", c.cell(-1, 1), 2);
            c.le("C:(0,0)", c.cell(0, 0), 2);
            let listed = [(1, 0), (-2, 1), (-1, 0), (-1, 1), (0, 0)];
            let other = counts.count_where(|s, t| !listed.contains(&(s, t)));
            c.eq("C:other", other, 0);
        }
        MoveClass::DMove => {
            c.eq("D:(-1,0)", c.cell(-1, 0), s_star);
            c.le("D:(0,0)", c.cell(0, 0), r as i64 - t as i64 + 1);
            c.le("D:(+1,0)", c.cell(1, 0), 4);
            c.ge("D:dT=-1", counts.count_where(|_, dt| dt == -1), t as i64 - 1);
            c.eq("D:dT=+1", counts.count_where(|_, dt| dt == 1), 0);
            c.eq("D:dS=-2", counts.count_where(|ds, _| ds == -2), 0);
            let other = counts.count_where(|ds, dt| !(-1..=1).contains(&ds) || !(-1..=0).contains(&dt));
            c.eq("D:other", other, 0);
        }
    }
    let violations = c.out;
    Ok(TableCheck {
        n: state.n(),
        alice_edge,
        move_class,
        s: state.s(),
        s_star,
        r,
        t,
        counts,
        violations,
    })
}

/// A state reached by play together with the Alice edge to test there.
#[derive(Debug, Clone)]
pub struct SampledState {
    pub state: GameState,
    pub alice_edge: CycleEdge,
}

/// `count` states reached by actual play from the triangle. Sample `i` uses
/// `trial_rng(seed, i)`: a horizon uniform in `5..=200`, greedy Alice on even
/// `i` and uniform Alice on odd `i`. The tested Alice edge is uniform over
/// her cycle, except that on greedy samples it is the greedy choice half the
/// time so that c-moves are well represented.
pub fn sample_reachable_states(count: usize, seed: u64) -> Vec<SampledState> {
    (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed, i);
            let n = rng.gen_range(5..=200usize);
            let greedy = i % 2 == 0;
            let mut alice: Box<dyn AliceStrategy> = if greedy {
                Box::new(GreedyCommonAlice)
            } else {
                Box::new(UniformRandomAlice)
            };
            let mut state = GameState::with_capacity(n);
            state
                .play_until(alice.as_mut(), &mut rng, n)
                .expect("built-in strategies always return a cycle-edge");
            let alice_edge = if greedy && rng.gen_bool(0.5) {
                GreedyCommonAlice.choose(&state, &mut rng).expect("greedy always moves")
            } else {
                let tail = Node::raw(rng.gen_range(1..=n as u32));
                state.cycle_a().edge_after(tail)
            };
            SampledState { state, alice_edge }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::InsertionHistory;
    use crate::testing::e;

    #[test]
    fn agreeing_state_c_move() {
        let h = InsertionHistory::new(vec![e(1, 2)]).unwrap();
        let st = GameState::from_histories(&h, &h, 4).unwrap();
        let check = check_transition_table(&st, e(1, 4)).unwrap();
        assert_eq!(check.move_class, MoveClass::CMove);
        assert_eq!(check.s_star, 1);
        assert_eq!(check.r, 0);
        assert_eq!(check.counts.total(), 4);
        assert!(check.passes(), "{:?}", check.violations);
    }

    #[test]
    fn sampling_is_deterministic_and_in_range() {
        let a = sample_reachable_states(20, 9);
        let b = sample_reachable_states(20, 9);
        for (x, y) in a.iter().zip(&b) {
            assert!((5..=200).contains(&x.state.n()));
            assert_eq!(x.state.n(), y.state.n());
            assert_eq!(x.alice_edge, y.alice_edge);
            assert_eq!(x.state.tour_b(), y.state.tour_b());
        }
    }

    #[test]
    fn c_move_cells_hold_on_sampled_states() {
        for s in sample_reachable_states(200, 3) {
            let check = check_transition_table(&s.state, s.alice_edge).unwrap();
            assert_eq!(check.counts.total(), s.state.n());
            if check.move_class == MoveClass::CMove {
                assert!(check.passes(), "{check:?}");
            }
        }
    }
}
