//! The acceptance suite: one check per criterion, one PASS/FAIL line each, then a
//! single assertion that all of them passed. Run with
//! `cargo test --release -p pairforge-cli --test acceptance -- --nocapture`.

#[path = "../../core/tests/common/mod.rs"]
mod common;
mod pipeline;

use common::criteria::{self, Outcome};

type Check = (&'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let checks: [Check; 11] = [
        ("filter thresholds", criteria::filter_thresholds),
        ("dedup equivalence", criteria::dedup_equivalence),
        ("alignment fidelity", criteria::alignment_fidelity),
        ("tokenizer round trip", criteria::tokenizer_round_trip),
        ("corpus construction", criteria::corpus_construction),
        ("aligned-pair signal", criteria::signal_experiment),
        ("reference LM correctness", criteria::lm_correctness),
        ("prompt inverse", criteria::prompt_inverse),
        ("lexical metric oracles", criteria::metric_oracles),
        ("harness end to end", criteria::harness_end_to_end),
        ("determinism", pipeline::determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in checks.iter().enumerate() {
        let n = i + 1;
        match check() {
            Ok(detail) => println!("PASS criterion {n}: {name}: {detail}"),
            Err(why) => {
                println!("FAIL criterion {n}: {name}: {why}");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
