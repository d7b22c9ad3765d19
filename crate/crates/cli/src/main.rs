//! `pedigree`: adjacency tests, game simulation, validation suites and
//! skeleton census from the command line.

mod input;
mod validate;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use pedigree_core::cycle::{decode_tour, replay_history};
use pedigree_core::experiments::enumerate_skeleton;
use pedigree_core::game::{trial_rng, GameState, StrategyKind};
use pedigree_core::pedigree_adjacent;

const VERSION: &str = env!("PEDIGREE_VERSION");

#[derive(Parser)]
#[command(name = "pedigree", version = VERSION, about = "Pedigree-graph adjacency and the Alice/Bob adjacency game")]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test two tours for adjacency. Exit status 0 if adjacent, 1 if not.
    Adjacency {
        /// Tour as space-separated labels, or @file.
        #[arg(long)]
        tour_a: String,
        #[arg(long)]
        tour_b: String,
        /// Include the pedigree graph in the output.
        #[arg(long)]
        dump_graph: bool,
    },
    /// Play games of Alice against a uniformly random Bob.
    Simulate {
        /// random, greedy-common, or scripted:<history file>
        #[arg(long, value_parser = parse_strategy)]
        strategy: StrategyKind,
        /// Horizon: play rounds 4..=n.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Also write per-step telemetry as CSV.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Run one validation suite. Exit status 0 on pass, 1 on fail.
    Validate {
        #[arg(long, value_enum)]
        suite: validate::Suite,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<usize>,
        /// Node count, horizon or n0, depending on the suite.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_parser = parse_strategy)]
        strategy: Option<StrategyKind>,
        /// Write the JSON report to this file as well.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Census of the polytope graph on n cities.
    Skeleton {
        #[arg(long)]
        n: usize,
        /// Write tour,degree rows to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Permit n above 8.
        #[arg(long)]
        allow_large: bool,
    },
    /// Print the insertion history of a tour as JSON.
    Decode {
        #[arg(long)]
        tour: String,
    },
    /// Print the tour an insertion history replays to.
    Replay {
        /// "n: i j" lines, a JSON object {"4": [i, j], ...}, or @file.
        #[arg(long)]
        history: String,
    },
}

fn parse_strategy(s: &str) -> Result<StrategyKind, String> {
    match s {
        "random" => Ok(StrategyKind::UniformRandom),
        "greedy-common" => Ok(StrategyKind::GreedyCommon),
        _ => match s.strip_prefix("scripted:") {
            Some(path) => input::history(&format!("@{path}"), "scripted history")
                .map(StrategyKind::Scripted)
                .map_err(|e| format!("{e:#}")),
            None => Err(format!("unknown strategy {s:?}; use random, greedy-common or scripted:<file>")),
        },
    }
}

fn seed_or_fresh(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        let s = rand::random();
        eprintln!("seed: {s}");
        s
    })
}

fn writer(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit_json(out: Option<&PathBuf>, value: &impl Serialize) -> Result<()> {
    let mut w = writer(out)?;
    serde_json::to_writer(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn with_meta(mut report: Value, seed: Option<u64>) -> Value {
    if let Value::Object(map) = &mut report {
        map.insert("version".into(), json!(VERSION));
        if let Some(seed) = seed {
            map.insert("seed".into(), json!(seed));
        }
    }
    report
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("PEDIGREE_THREADS") {
        let threads: usize = v.parse().with_context(|| format!("PEDIGREE_THREADS={v:?} is not a number"))?;
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    configure_threads()?;
    let out = cli.out.as_ref();
    match cli.command {
        Command::Adjacency {
            tour_a,
            tour_b,
            dump_graph,
        } => {
            let a = input::tour(&tour_a, "--tour-a")?;
            let b = input::tour(&tour_b, "--tour-b")?;
            let verdict = pedigree_adjacent(&a, &b)?;
            let mut report = json!({
                "adjacent": verdict.adjacent,
                "n": a.len(),
                "components": verdict.witness.component_count(),
                "vertices": verdict.witness.vertices().len(),
            });
            if dump_graph {
                report["graph"] = serde_json::to_value(&verdict.witness)?;
            }
            emit_json(out, &with_meta(report, None))?;
            Ok(if verdict.adjacent { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Simulate {
            strategy,
            n,
            trials,
            seed,
            emit,
        } => {
            anyhow::ensure!(n >= 4, "--n must be at least 4");
            let seed = seed_or_fresh(seed);
            let mut csv = emit.as_ref().map(|p| writer(Some(p))).transpose()?;
            if let Some(w) = csv.as_mut() {
                writeln!(w, "trial,n,move_class,dS,dT,S,T,isolated")?;
            }
            let mut runs = Vec::with_capacity(trials);
            for trial in 0..trials {
                let mut rng = trial_rng(seed, trial as u64);
                let mut alice = strategy.instantiate();
                let mut state = GameState::with_capacity(n);
                let records = state.play_until(alice.as_mut(), &mut rng, n)?;
                if let Some(w) = csv.as_mut() {
                    for r in &records {
                        writeln!(
                            w,
                            "{trial},{},{},{},{},{},{},{}",
                            r.n,
                            r.move_class.name(),
                            r.delta_s,
                            r.delta_t,
                            r.s,
                            r.t,
                            u8::from(r.isolated_created)
                        )?;
                    }
                }
                runs.push(json!({
                    "trial": trial,
                    "S": state.s(),
                    "T": state.t(),
                    "connected": state.graph().is_connected(),
                    "isolated": records.iter().filter(|r| r.isolated_created).count(),
                    "d_moves": records.iter().filter(|r| r.move_class == pedigree_core::MoveClass::DMove).count(),
                }));
            }
            if let Some(mut w) = csv {
                w.flush()?;
            }
            let report = json!({ "strategy": strategy.name(), "n": n, "trials": trials, "runs": runs });
            emit_json(out, &with_meta(report, Some(seed)))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate {
            suite,
            seed,
            trials,
            n,
            strategy,
            json,
        } => {
            let seed = seed_or_fresh(seed);
            let params = validate::Params {
                seed,
                trials,
                n,
                strategy,
            };
            let outcome = validate::run(suite, &params)?;
            let report = with_meta(outcome.report.clone(), Some(seed));
            if let Some(path) = json.as_ref() {
                emit_json(Some(path), &report)?;
            }
            emit_json(out, &report)?;
            Ok(if outcome.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Skeleton { n, csv, allow_large } => {
            let report = enumerate_skeleton(n, allow_large)?;
            if let Some(path) = csv.as_ref() {
                let mut w = writer(Some(path))?;
                writeln!(w, "tour,degree")?;
                for (t, d) in report.tours.iter().zip(&report.degrees) {
                    writeln!(w, "{t},{d}")?;
                }
                w.flush()?;
            }
            emit_json(out, &with_meta(serde_json::to_value(&report)?, None))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Decode { tour } => {
            let t = input::tour(&tour, "--tour")?;
            emit_json(out, &decode_tour(&t).to_map())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Replay { history } => {
            let h = input::history(&history, "--history")?;
            emit_json(out, &replay_history(&h, h.horizon())?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
