use std::collections::BTreeMap;

use anyhow::{bail, Result};
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use pedigree_core::cycle::{sample_uniform_history, MAX_NODES};
use pedigree_core::experiments::{
    common_edge_statistics, connectivity_frequency, dmove_trajectory_stats, estimate_expected_isolations,
    exact_isolated_probability, MAX_EXACT_N,
};
use pedigree_core::game::{check_transition_table, sample_reachable_states, trial_rng, StrategyKind, TableCheck};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// exact isolation probability at one n
    Lemma10,
    /// expected number of isolated vertices
    Lemma7,
    /// transition-table conformance, aggregated
    Lemma8,
    /// transition-table checks, one record per sampled state
    Transition,
    /// connectivity frequency
    Connectivity,
    /// mean and tail of the common-edge count
    CommonEdges,
    /// Alice's d-move counts over (n0, 2 n0]
    Dmoves,
}

pub struct Params {
    pub seed: u64,
    pub trials: Option<usize>,
    pub n: Option<usize>,
    pub strategy: Option<StrategyKind>,
}

pub struct Outcome {
    pub pass: bool,
    pub report: Value,
}

fn outcome(pass: bool, report: impl Serialize) -> Result<Outcome> {
    let mut report = serde_json::to_value(report)?;
    if let Value::Object(map) = &mut report {
        map.insert("pass".into(), Value::Bool(pass));
    }
    Ok(Outcome { pass, report })
}

pub fn run(suite: Suite, p: &Params) -> Result<Outcome> {
    let strategy = |default: StrategyKind| p.strategy.clone().unwrap_or(default);
    match suite {
        Suite::Lemma10 => {
            let n = p.n.unwrap_or(6);
            let mut rng = trial_rng(p.seed, 0);
            let alice = sample_uniform_history(&mut rng, n.clamp(4, MAX_EXACT_N));
            let observed = exact_isolated_probability(&alice, n)?;
            let expected = num_rational::Ratio::new(4, ((n - 1) * (n - 2)) as u64);
            outcome(
                observed == expected,
                json!({ "expected": expected.to_string(), "observed": observed.to_string(), "n": n }),
            )
        }
        Suite::Lemma7 => {
            let k = strategy(StrategyKind::UniformRandom);
            let r = estimate_expected_isolations(&k, p.n.unwrap_or(1000), p.trials.unwrap_or(10_000), p.seed)?;
            // sum of P(I_n) over n = 4..=horizon is 2 - 4/(horizon - 1)
            let expected = 2.0 - r.bias_bound.unwrap_or(0.0);
            let pass = (r.estimate - expected).abs() <= 4.0 * r.std_error;
            outcome(pass, json!({ "expected": expected, "report": r }))
        }
        Suite::Lemma8 | Suite::Transition => {
            let states = sample_reachable_states(p.trials.unwrap_or(10_000), p.seed);
            let checks = states
                .iter()
                .map(|s| check_transition_table(&s.state, s.alice_edge))
                .collect::<pedigree_core::Result<Vec<TableCheck>>>()?;
            let pass = checks.iter().all(TableCheck::passes);
            if suite == Suite::Transition {
                return outcome(pass, json!({ "states": checks }));
            }
            let mut violations = BTreeMap::<&str, usize>::new();
            for v in checks.iter().flat_map(|c| &c.violations) {
                *violations.entry(v.constraint).or_default() += 1;
            }
            let c_moves = checks.iter().filter(|c| c.move_class == pedigree_core::MoveClass::CMove).count();
            outcome(
                pass,
                json!({
                    "states": checks.len(),
                    "c_moves": c_moves,
                    "d_moves": checks.len() - c_moves,
                    "states_with_violations": checks.iter().filter(|c| !c.passes()).count(),
                    "violations_by_constraint": violations,
                }),
            )
        }
        Suite::Connectivity => {
            let k = strategy(StrategyKind::UniformRandom);
            let r = connectivity_frequency(&k, p.n.unwrap_or(100), p.trials.unwrap_or(100_000), p.seed)?;
            outcome(r.within(0.82, 0.86), json!({ "expected": [0.82, 0.86], "report": r }))
        }
        Suite::CommonEdges => {
            let n = p.n.unwrap_or(100);
            if !(4..=MAX_NODES).contains(&n) {
                bail!("--n must be in 4..={MAX_NODES}");
            }
            let k = strategy(StrategyKind::Scripted(sample_uniform_history(&mut trial_rng(p.seed, 1), n)));
            let r = common_edge_statistics(&k, n, p.trials.unwrap_or(100_000), p.seed)?;
            let exact = 2.0 * n as f64 / (n as f64 - 1.0);
            let bound = 3.0 / (n as f64).ln();
            let pass = (r.mean.estimate - exact).abs() <= 0.03 && r.exceeds_log.estimate <= bound;
            outcome(pass, json!({ "expected_mean": exact, "tail_bound": bound, "report": r }))
        }
        Suite::Dmoves => {
            let k = strategy(StrategyKind::GreedyCommon);
            let r = dmove_trajectory_stats(&k, p.n.unwrap_or(900), p.trials.unwrap_or(1000), p.seed)?;
            let pass = r.partition_holds && r.d_at_least_third.estimate >= 0.99;
            outcome(pass, r)
        }
    }
}
