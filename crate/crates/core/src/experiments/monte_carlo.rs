use rayon::prelude::*;
use serde::Serialize;

use crate::error::{PedigreeError, Result};
use crate::game::{trial_rng, GameState, MoveClass, StepRecord, StrategyKind};

// plays one round of the trial's game
type Step<'a> = dyn FnMut(&mut GameState) -> Result<StepRecord> + 'a;

/// A Monte Carlo point estimate with its standard error.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EstimateReport {
    pub quantity: String,
    pub strategy: String,
    pub estimate: f64,
    pub std_error: f64,
    pub trials: usize,
    pub horizon: usize,
    pub seed: u64,
    /// Known bound on the bias from stopping at `horizon`, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bias_bound: Option<f64>,
}

impl EstimateReport {
    fn from_samples(quantity: &str, strategy: &StrategyKind, horizon: usize, seed: u64, xs: &[f64]) -> Self {
        let trials = xs.len();
        let mean = xs.iter().sum::<f64>() / trials as f64;
        let var = if trials > 1 {
            xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (trials - 1) as f64
        } else {
            0.0
        };
        EstimateReport {
            quantity: quantity.to_owned(),
            strategy: strategy.name().to_owned(),
            estimate: mean,
            std_error: (var / trials as f64).sqrt(),
            trials,
            horizon,
            seed,
            bias_bound: None,
        }
    }

    /// Whether `[lo, hi]` contains the estimate.
    pub fn within(&self, lo: f64, hi: f64) -> bool {
        (lo..=hi).contains(&self.estimate)
    }
}

fn check_args(horizon: usize, trials: usize) -> Result<()> {
    if horizon < 4 {
        return Err(PedigreeError::OutOfRange {
            what: "horizon",
            value: horizon,
            range: ">= 4",
        });
    }
    if trials == 0 {
        return Err(PedigreeError::OutOfRange {
            what: "trials",
            value: 0,
            range: ">= 1",
        });
    }
    Ok(())
}

/// Runs `trials` independent games to `horizon` and maps each to a value.
/// Results come back in trial order, so sums are reproducible.
fn per_trial<T: Send>(
    strategy: &StrategyKind,
    horizon: usize,
    trials: usize,
    seed: u64,
    f: impl Fn(&mut GameState, &mut Step<'_>) -> Result<T> + Sync,
) -> Result<Vec<T>> {
    (0..trials as u64)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(seed, trial);
            let mut alice = strategy.instantiate();
            let mut state = GameState::with_capacity(horizon);
            let mut step = |st: &mut GameState| st.play_round(alice.as_mut(), &mut rng);
            f(&mut state, &mut step)
        })
        .collect()
}

fn play_to(horizon: usize, state: &mut GameState, step: &mut Step<'_>) -> Result<()> {
    while state.n() < horizon {
        step(state)?;
    }
    Ok(())
}

/// `Y`: the number of nodes that enter the pedigree graph as isolated
/// vertices during rounds `4..=horizon`. The tail beyond `horizon`
/// contributes at most `4 / (horizon - 1)` in expectation.
pub fn estimate_expected_isolations(
    strategy: &StrategyKind,
    horizon: usize,
    trials: usize,
    seed: u64,
) -> Result<EstimateReport> {
    check_args(horizon, trials)?;
    let ys = per_trial(strategy, horizon, trials, seed, |state, step| {
        let mut y = 0u32;
        while state.n() < horizon {
            y += u32::from(step(state)?.isolated_created);
        }
        Ok(f64::from(y))
    })?;
    let mut report = EstimateReport::from_samples("isolated_vertices", strategy, horizon, seed, &ys);
    report.bias_bound = Some(4.0 / (horizon - 1) as f64);
    Ok(report)
}

/// Fraction of games whose pedigree graph `G_n` has at most one component.
pub fn connectivity_frequency(strategy: &StrategyKind, n: usize, trials: usize, seed: u64) -> Result<EstimateReport> {
    check_args(n, trials)?;
    let xs = per_trial(strategy, n, trials, seed, |state, step| {
        play_to(n, state, step)?;
        Ok(if state.graph().is_connected() { 1.0 } else { 0.0 })
    })?;
    Ok(EstimateReport::from_samples("connected", strategy, n, seed, &xs))
}

/// Mean of `S_n` and the frequency of `S_n > ln n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommonEdgeReport {
    pub mean: EstimateReport,
    pub exceeds_log: EstimateReport,
    pub log_threshold: f64,
}

pub fn common_edge_statistics(strategy: &StrategyKind, n: usize, trials: usize, seed: u64) -> Result<CommonEdgeReport> {
    check_args(n, trials)?;
    let ss = per_trial(strategy, n, trials, seed, |state, step| {
        play_to(n, state, step)?;
        Ok(state.s() as f64)
    })?;
    let log_threshold = (n as f64).ln();
    let exceed: Vec<f64> = ss.iter().map(|&s| f64::from(u8::from(s > log_threshold))).collect();
    Ok(CommonEdgeReport {
        mean: EstimateReport::from_samples("common_edges", strategy, n, seed, &ss),
        exceeds_log: EstimateReport::from_samples("common_edges_exceed_ln_n", strategy, n, seed, &exceed),
        log_threshold,
    })
}

/// Alice's move mix over the window `(n0, 2 n0]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DMoveReport {
    pub n0: usize,
    /// Mean number of d-moves in the window.
    pub d_moves: EstimateReport,
    /// Fraction of trials with at least `n0 / 3` d-moves.
    pub d_at_least_third: EstimateReport,
    /// Fraction of trials in which `T` decreased at least once.
    pub t_decrease: EstimateReport,
    pub min_d: usize,
    pub max_d: usize,
    /// Every trial had `d + c = n0`.
    pub partition_holds: bool,
}

pub fn dmove_trajectory_stats(strategy: &StrategyKind, n0: usize, trials: usize, seed: u64) -> Result<DMoveReport> {
    if n0 < 8 {
        return Err(PedigreeError::OutOfRange {
            what: "n0",
            value: n0,
            range: ">= 8",
        });
    }
    check_args(2 * n0, trials)?;
    let rows = per_trial(strategy, 2 * n0, trials, seed, |state, step| {
        play_to(n0, state, step)?;
        let (mut d, mut c, mut dropped) = (0usize, 0usize, false);
        while state.n() < 2 * n0 {
            let rec = step(state)?;
            match rec.move_class {
                MoveClass::DMove => d += 1,
                MoveClass::CMove => c += 1,
            }
            dropped |= rec.delta_t < 0;
        }
        Ok((d, c, dropped))
    })?;
    let third = n0 as f64 / 3.0;
    let ds: Vec<f64> = rows.iter().map(|r| r.0 as f64).collect();
    let big: Vec<f64> = rows.iter().map(|r| f64::from(u8::from(r.0 as f64 >= third))).collect();
    let drops: Vec<f64> = rows.iter().map(|r| f64::from(u8::from(r.2))).collect();
    Ok(DMoveReport {
        n0,
        d_moves: EstimateReport::from_samples("d_moves", strategy, 2 * n0, seed, &ds),
        d_at_least_third: EstimateReport::from_samples("d_moves_at_least_n0_over_3", strategy, 2 * n0, seed, &big),
        t_decrease: EstimateReport::from_samples("components_decreased", strategy, 2 * n0, seed, &drops),
        min_d: rows.iter().map(|r| r.0).min().unwrap_or(0),
        max_d: rows.iter().map(|r| r.0).max().unwrap_or(0),
        partition_holds: rows.iter().all(|r| r.0 + r.1 == n0),
    })
}
