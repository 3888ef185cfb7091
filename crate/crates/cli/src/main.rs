//! `ramsey` — red-cycle / blue-copy certificates on coloured complete
//! graphs.
//!
//! Every subcommand prints one JSON report on stdout (schema in
//! `schema/report.schema.json`) and exits with:
//!
//! * `0` — a witness was produced, or verification succeeded;
//! * `1` — a definite negative: extraction exhausted, a counterexample
//!   colouring, or no verified order within the budget;
//! * `2` — usage, file, or format errors.

#![forbid(unsafe_code)]

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use ramsey_cli::graph6::emit_graph6;
use ramsey_cli::report::{Report, WitnessReport};
use ramsey_cli::targets::{parse_target, read_coloring, write_coloring};
use ramsey_core::extractor::{Config, Extraction, extract_witness};
use ramsey_core::matching_case::{lower_bound_coloring, matching_witness};
use ramsey_core::oracle::{DEFAULT_VERIFY_BITS, check_witness, exhaustive_verify, ramsey_number_exact};
use ramsey_core::path_ramsey::{bound_chi, bound_sqrt};
use ramsey_core::{ColoredComplete, Error, Graph, TargetGraph, Witness};
use serde_json::{Map, Value, json};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

/// Default RNG seed for the extraction pipeline: fixed, so repeated runs
/// on the same inputs produce the same report.
const DEFAULT_SEED: u64 = 0x5EED_0001;

#[derive(Parser)]
#[command(
    name = "ramsey",
    version,
    about = "Extract red odd cycles or blue target copies from coloured complete graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the staged pipeline on a colouring file: find a red k-cycle
    /// or a blue copy of the target.
    Extract {
        /// Odd cycle length to hunt in red.
        #[arg(long)]
        k: usize,
        /// Target graph to hunt in blue (P5, C4, K4, 3K2, K2,3,
        /// edges:0-1,..., g6:..., or raw graph6).
        #[arg(long)]
        target: String,
        /// Colouring file: order on the first line, red subgraph in
        /// graph6 on the second.
        #[arg(long)]
        coloring: PathBuf,
        /// Edge-count threshold below which the pipeline goes straight
        /// to exact search.
        #[arg(long, default_value_t = 4)]
        m0: usize,
        /// Additive slack in the order target 2m + max(B - ceil(sqrt(m)), k/2).
        #[arg(long = "B", default_value_t = 10)]
        b: usize,
        /// Board order at or below which exact search replaces the
        /// staged pipeline.
        #[arg(long, default_value_t = 12)]
        fallback_limit: usize,
        /// RNG seed for the balanced-separation sampling.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Matching targets mK2: extract at the guaranteed order, or print
    /// the extremal colouring one vertex below it.
    MatchingCase {
        /// Odd cycle length to hunt in red.
        #[arg(long)]
        k: usize,
        /// Matching size (number of disjoint blue edges wanted).
        #[arg(long)]
        m: usize,
        /// Colouring file to extract from.
        #[arg(long, conflicts_with = "lower_bound", required_unless_present = "lower_bound")]
        coloring: Option<PathBuf>,
        /// Print the witness-free colouring of order 2m + (k-1)/2 - 1
        /// instead of extracting.
        #[arg(long)]
        lower_bound: bool,
    },
    /// Check every red/blue colouring of a small complete graph for a
    /// red k-cycle or blue target copy.
    Verify {
        /// Odd cycle length to hunt in red.
        #[arg(long)]
        k: usize,
        /// Target graph to hunt in blue.
        #[arg(long)]
        target: String,
        /// Order of the complete graph to sweep.
        #[arg(long)]
        order: usize,
        /// Worker threads for the sweep.
        #[arg(long, env = "RAMSEY_JOBS", default_value_t = 1)]
        jobs: usize,
        /// Largest colouring-space exponent the sweep will accept.
        #[arg(long, default_value_t = DEFAULT_VERIFY_BITS)]
        max_bits: usize,
    },
    /// Print the order guarantees the library offers for a target.
    Bounds {
        /// Odd cycle length to hunt in red.
        #[arg(long)]
        k: usize,
        /// Target graph to hunt in blue.
        #[arg(long)]
        target: String,
    },
    /// Exact smallest order at which every colouring has a witness,
    /// found by exhaustive sweeps up to a budget.
    RamseyNumber {
        /// Odd cycle length to hunt in red.
        #[arg(long)]
        k: usize,
        /// Target graph to hunt in blue.
        #[arg(long)]
        target: String,
        /// Largest order to sweep.
        #[arg(long)]
        max_order: usize,
        /// Worker threads for the sweeps.
        #[arg(long, env = "RAMSEY_JOBS", default_value_t = 1)]
        jobs: usize,
        /// Largest colouring-space exponent any single sweep may use.
        #[arg(long, default_value_t = DEFAULT_VERIFY_BITS)]
        max_bits: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(cli.command, started) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Unwraps the object inside a `json!({...})` literal.
fn input_map(value: Value) -> Map<String, Value> {
    match value {
        Value::Object(map) => map,
        _ => unreachable!("inputs are always JSON objects"),
    }
}

fn target_graph(spec: &str) -> Result<TargetGraph, String> {
    let graph = parse_target(spec)?;
    TargetGraph::new(graph).map_err(|e| format!("target {spec:?} rejected: {e}"))
}

fn run(command: Command, started: Instant) -> Result<u8, String> {
    match command {
        Command::Extract {
            k,
            target,
            coloring,
            m0,
            b,
            fallback_limit,
            seed,
        } => {
            let h = target_graph(&target)?;
            let board = read_coloring(&coloring)?;
            let cfg = Config::new(k, m0, b, fallback_limit).map_err(|e| e.to_string())?;
            let mut report = Report::new(
                "extract",
                input_map(json!({
                    "k": k,
                    "target": target,
                    "coloring": coloring.display().to_string(),
                    "m0": m0,
                    "B": b,
                    "fallback_limit": fallback_limit,
                    "seed": seed,
                    "board_order": board.order(),
                    "target_order": h.order(),
                    "target_size": h.size(),
                })),
            );
            match extract_witness(&board, &cfg, &h, seed).map_err(|e| e.to_string())? {
                Extraction::Witness(witness) => {
                    finish_with_witness(report, started, &board, k, &h, witness)
                }
                Extraction::Exhausted(why) => {
                    report.stage = Some(why.stage.to_string());
                    report.details = Some(json!({ "check": why.check }));
                    report.finish(started);
                    Ok(1)
                }
            }
        }

        Command::MatchingCase {
            k,
            m,
            coloring,
            lower_bound,
        } => {
            let mut report = Report::new(
                "matching-case",
                input_map(json!({
                    "k": k,
                    "m": m,
                    "mode": if lower_bound { "lower-bound" } else { "extract" },
                })),
            );
            if lower_bound {
                let board = lower_bound_coloring(k, m).map_err(|e| e.to_string())?;
                report.details = Some(json!({
                    "order": board.order(),
                    "red_graph6": emit_graph6(board.red()),
                    "coloring_file": write_coloring(&board),
                    "witness_exists": false,
                }));
                report.finish(started);
                return Ok(1);
            }
            let path = coloring.expect("clap guarantees --coloring without --lower-bound");
            let board = read_coloring(&path)?;
            report
                .inputs
                .insert("coloring".into(), path.display().to_string().into());
            report
                .inputs
                .insert("board_order".into(), board.order().into());
            let witness = matching_witness(&board, k, m).map_err(|e| e.to_string())?;
            let h = TargetGraph::new(Graph::matching(m)).map_err(|e| e.to_string())?;
            finish_with_witness(report, started, &board, k, &h, witness)
        }

        Command::Verify {
            k,
            target,
            order,
            jobs,
            max_bits,
        } => {
            let h = target_graph(&target)?;
            let mut report = Report::new(
                "verify",
                input_map(json!({
                    "k": k,
                    "target": target,
                    "order": order,
                    "jobs": jobs,
                    "max_bits": max_bits,
                })),
            );
            let outcome = exhaustive_verify(k, &h, order, jobs, max_bits).map_err(|e| e.to_string())?;
            report.validated = Some(outcome.verified);
            let mut details = json!({
                "space": outcome.space,
                "verified": outcome.verified,
            });
            if let Some((index, board)) = &outcome.counterexample {
                details["counterexample"] = json!({
                    "index": index,
                    "order": board.order(),
                    "red_graph6": emit_graph6(board.red()),
                });
            }
            report.details = Some(details);
            report.finish(started);
            Ok(if outcome.verified { 0 } else { 1 })
        }

        Command::Bounds { k, target } => {
            if k < 3 || k % 2 == 0 {
                return Err(format!("cycle length k must be odd and at least 3, got {k}"));
            }
            let h = target_graph(&target)?;
            let (n, m, chi) = (h.order(), h.size(), h.chromatic_number());
            let report_details = json!({
                "target_order": n,
                "target_size": m,
                "target_chromatic_number": chi,
                "path_bound": bound_chi(k, n, chi),
                "neighborhood_bound": bound_sqrt(k, n, m),
                "main_order_bound": 2 * m + (k - 1) / 2,
                "dense_bound": dense_bound(k, n).to_string(),
                "guaranteed_regime": guaranteed_regime(k),
            });
            let mut report = Report::new(
                "bounds",
                input_map(json!({ "k": k, "target": target })),
            );
            report.details = Some(report_details);
            report.finish(started);
            Ok(0)
        }

        Command::RamseyNumber {
            k,
            target,
            max_order,
            jobs,
            max_bits,
        } => {
            let h = target_graph(&target)?;
            let mut report = Report::new(
                "ramsey-number",
                input_map(json!({
                    "k": k,
                    "target": target,
                    "max_order": max_order,
                    "jobs": jobs,
                    "max_bits": max_bits,
                })),
            );
            match ramsey_number_exact(k, &h, 1..=max_order, jobs, max_bits) {
                Ok(number) => {
                    report.details = Some(json!({ "number": number }));
                    report.finish(started);
                    Ok(0)
                }
                Err(Error::RangeExhausted(message)) => {
                    report.details = Some(json!({ "message": message }));
                    report.finish(started);
                    Ok(1)
                }
                Err(other) => Err(other.to_string()),
            }
        }
    }
}

/// Re-checks a witness against the board, then prints the report.  A
/// witness that fails the independent check is an internal error, not a
/// result, so it aborts with exit code 2.
fn finish_with_witness(
    mut report: Report,
    started: Instant,
    board: &ColoredComplete,
    k: usize,
    h: &TargetGraph,
    witness: Witness,
) -> Result<u8, String> {
    if !check_witness(board, k, h, &witness) {
        return Err(format!(
            "internal error: produced {} failed independent validation",
            witness.kind()
        ));
    }
    report.witness = Some(WitnessReport::from_witness(&witness));
    report.validated = Some(true);
    report.finish(started);
    Ok(0)
}

/// `3k * ceil(n^((k+1)/(k-1)))`: the order that guarantees a witness for
/// complete targets `K_n`, computed exactly in big integers.
fn dense_bound(k: usize, n: usize) -> BigUint {
    let power = BigUint::from(n).pow(k as u32 + 1);
    let mut root = power.nth_root(k as u32 - 1);
    if root.clone().pow(k as u32 - 1) < power {
        root += 1u32;
    }
    root * (3 * k)
}

/// The fully-guaranteed parameter regime: the smallest edge-count
/// threshold `2^63 * k^18` and the additive constant `(2 m0)^3` it
/// induces — astronomically beyond desk scale, which is why the
/// pipeline reports `Exhausted` instead of looping forever below it.
fn guaranteed_regime(k: usize) -> Value {
    let m0 = BigUint::from(2u32).pow(63) * BigUint::from(k).pow(18);
    let additive = (BigUint::from(2u32) * &m0).pow(3);
    json!({
        "m0_min": m0.to_string(),
        "additive_constant": additive.to_string(),
    })
}
