//! Runs the `pairforge` binary over the bundled corpus.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub const STAGES: &[&[&str]] = &[
    &["ingest"],
    &["filter"],
    &["align"],
    &["tokenize"],
    &["corpus"],
    &["stats"],
    &["lm-train"],
    &["lm-ppl"],
    &["prompts"],
    &["lm-sample"],
    &["evaluate"],
    &["report"],
    &["signal-exp", "--train-pairs", "300", "--heldout-pairs", "60", "--seeds", "2"],
];

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn pairforge(work: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pairforge"))
        .arg("--config")
        .arg(fixtures().join("pipeline.toml"))
        .arg("--work")
        .arg(work)
        .args(args)
        .output()
        .expect("binary runs")
}

/// Every stage in order; the first failure is reported with its stderr.
pub fn run_pipeline(work: &Path) -> Result<(), String> {
    for args in STAGES {
        let out = pairforge(work, args);
        if !out.status.success() {
            return Err(format!("{} exited with {:?}: {}", args[0], out.status.code(), String::from_utf8_lossy(&out.stderr)));
        }
    }
    Ok(())
}

/// Relative path to contents of every file below `dir`.
pub fn tree(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    walkdir::WalkDir::new(dir)
        .sort_by_file_name()
        .into_iter()
        .map(Result::unwrap)
        .filter(|e| e.file_type().is_file())
        .map(|e| (e.path().strip_prefix(dir).unwrap().display().to_string(), std::fs::read(e.path()).unwrap()))
        .collect()
}

/// Config digest recorded in each stage's run-log.
pub fn config_digests(work: &Path) -> Vec<String> {
    let mut out = Vec::new();
    for (name, bytes) in tree(&work.join("logs")) {
        let v: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
        out.push(format!("{name}:{}", v["config_digest"].as_str().unwrap_or("")));
    }
    out
}

pub fn determinism() -> Result<String, String> {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    run_pipeline(a.path())?;
    run_pipeline(b.path())?;
    let (ta, tb) = (tree(a.path()), tree(b.path()));
    if config_digests(a.path()) != config_digests(b.path()) {
        return Err("config digests differ between runs".into());
    }
    let names: Vec<&String> = ta.keys().collect();
    if names != tb.keys().collect::<Vec<_>>() {
        return Err(format!("runs wrote different files: {names:?} vs {:?}", tb.keys().collect::<Vec<_>>()));
    }
    if let Some(name) = ta.keys().find(|k| ta[*k] != tb[*k]) {
        return Err(format!("{name} differs between runs"));
    }
    for want in ["outcomes.jsonl", "scores.jsonl", "report.json", "report.txt", "signal.json", "samples.jsonl"] {
        if !ta.contains_key(want) {
            return Err(format!("{want} was not written"));
        }
    }
    let bytes: usize = ta.values().map(Vec::len).sum();
    Ok(format!("{} files ({bytes} bytes) byte-identical across two runs", ta.len()))
}
