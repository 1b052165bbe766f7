//! One function per subcommand. Each reads its upstream artifacts, checks their
//! config digests, writes its outputs and a run-log.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};

use pairforge_core::align::{align_all, CodeTestPair};
use pairforge_core::config::Stage;
use pairforge_core::corpus::{
    build_documents, compute_stats, pack_sequences, read_corpus, write_corpus, CorpusHeader, DocKind, StatsReport, TrainingDocument,
};
use pairforge_core::filterdedup::{dedup_by_hash, filter_files, FilterReport, FilterVerdict};
use pairforge_core::harness::{build_eval_set, evaluate_all, EvalJob, Evaluator, HarnessError, ProjectManifest};
use pairforge_core::ingest::{assign_split, scan_repositories, Diagnostic, ExcludedRepo, RepoRecord, SourceFile, Split};
use pairforge_core::metrics::{aggregate, lexical_scores, EvalReport, RuntimeOutcome, SampleKey, ScoredSample};
use pairforge_core::promptgen::{
    generation_path, make_prompts, method_end, method_end_detector, read_generations, SkippedPrompt, Task, TaskPrompt,
};
use pairforge_core::reflm::{perplexity, sample, train_lm, MethodEndFn, NGramModel, SignalReport, StopCriterion};
use pairforge_core::synthetic::toy_signal_experiment;
use pairforge_core::tokenizer::{train_vocab, Vocabulary, CODETESTPAIR};
use serde::{Deserialize, Serialize};

use crate::error::{exec, CliError};
use crate::workspace::{RunLog, Workspace};

const REPOS: &str = "repos.jsonl";
const FILES: &str = "files.jsonl";
const FILTERED: &str = "filtered.jsonl";
const PAIRS: &str = "pairs.jsonl";
const VOCAB: &str = "vocab.txt";
const VOCAB_META: &str = "vocab.meta.json";
const DOCUMENTS: &str = "documents.jsonl";
const CORPUS: &str = "corpus.bin";
const CORPUS_META: &str = "corpus.meta.json";
const LM: &str = "lm.json";
const LM_META: &str = "lm.meta.json";
const EVAL_PAIRS: &str = "eval_pairs.jsonl";
const PROMPTS: &str = "prompts.jsonl";
const SAMPLES: &str = "samples.jsonl";
const GENERATIONS: &str = "generations";
const OUTCOMES: &str = "outcomes.jsonl";
const SCORES: &str = "scores.jsonl";

/// Digest of a binary or text artifact that lives next to a stamped metadata file.
#[derive(Debug, Serialize, Deserialize)]
struct BlobMeta {
    vocab_digest: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct CorpusMeta {
    vocab_digest: String,
    seq_len: usize,
    sequences: usize,
    documents: usize,
    tokens: u64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PerplexityRecord {
    pub pair_id: String,
    pub test_tokens: usize,
    pub ppl_with_code: f64,
    pub ppl_without_code: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SampleRecord {
    #[serde(flatten)]
    pub key: SampleKey,
    pub path: String,
    pub tokens: usize,
    pub stop: StopCriterion,
}

fn ingest_root(ws: &Workspace) -> Result<&Path, CliError> {
    ws.cfg.ingest.root.as_deref().ok_or_else(|| CliError::Config("no corpus root: pass --root or set ingest.root".into()))
}

fn load_contents(ws: &Workspace, files: &mut [SourceFile]) -> Result<(), CliError> {
    let root = ingest_root(ws)?;
    for f in files.iter_mut() {
        f.load_content(root).map_err(|e| CliError::Upstream(format!("{}: {e}", f.content_path)))?;
    }
    Ok(())
}

fn split_of(repos: &[RepoRecord]) -> HashMap<String, Split> {
    repos.iter().filter_map(|r| r.split.map(|s| (r.repo_id.clone(), s))).collect()
}

fn in_split(splits: &HashMap<String, Split>, repo: &str, want: Split) -> bool {
    splits.get(repo) == Some(&want)
}

pub fn ingest(ws: &Workspace) -> Result<(), CliError> {
    let mut log = ws.start_log("ingest", Stage::Ingest);
    let root = ingest_root(ws)?;
    let scan = scan_repositories(root, &ws.cfg.ingest).map_err(|e| CliError::Config(e.to_string()))?;
    let split = &ws.cfg.split;
    let repos = assign_split(&scan.records(), split.test_repos_per_language, split.seed, &split.pinned_test)
        .map_err(|e| CliError::Config(e.to_string()))?;
    let files: Vec<SourceFile> = scan.files().cloned().collect();
    ws.write(REPOS, "repo", Stage::Ingest, &repos, &mut log)?;
    ws.write(FILES, "source_file", Stage::Ingest, &files, &mut log)?;
    ws.write::<ExcludedRepo>("excluded.jsonl", "excluded_repo", Stage::Ingest, &scan.excluded, &mut log)?;
    ws.write::<Diagnostic>("diagnostics.jsonl", "diagnostic", Stage::Ingest, &scan.diagnostics, &mut log)?;
    println!("ingest: {} repositories retained, {} excluded, {} files", repos.len(), scan.excluded.len(), files.len());
    ws.finish_log(log)
}

pub fn filter(ws: &Workspace) -> Result<(), CliError> {
    let mut log = ws.start_log("filter", Stage::Filter);
    let mut files: Vec<SourceFile> = ws.read(FILES, "source_file", Stage::Ingest, &mut log)?;
    load_contents(ws, &mut files)?;
    let (kept, verdicts, mut report) = filter_files(files, &ws.cfg.filter);
    let deduped = dedup_by_hash(kept.clone());
    report.record_dedup(&kept, &deduped);
    ws.write(FILTERED, "source_file", Stage::Filter, &deduped, &mut log)?;
    ws.write::<FilterVerdict>("filter_verdicts.jsonl", "filter_verdict", Stage::Filter, &verdicts, &mut log)?;
    ws.write_stamped::<FilterReport>("filter_report.json", "filter_report", Stage::Filter, &report, &mut log)?;
    println!("filter: {} of {} files kept, {} after dedup", kept.len(), verdicts.len(), deduped.len());
    ws.finish_log(log)
}

pub fn align(ws: &Workspace) -> Result<(), CliError> {
    let mut log = ws.start_log("align", Stage::Align);
    let files: Vec<SourceFile> = ws.read(FILTERED, "source_file", Stage::Filter, &mut log)?;
    let pairs = align_all(&files, ws.cfg.align.fuzzy_threshold);
    ws.write(PAIRS, "pair", Stage::Align, &pairs, &mut log)?;
    println!("align: {} pairs at threshold {}", pairs.len(), ws.cfg.align.fuzzy_threshold);
    ws.finish_log(log)
}

/// Filtered files and pairs of one split, with content loaded.
fn split_inputs(ws: &Workspace, want: Split, log: &mut RunLog) -> Result<(Vec<SourceFile>, Vec<CodeTestPair>), CliError> {
    let repos: Vec<RepoRecord> = ws.read(REPOS, "repo", Stage::Ingest, log)?;
    let splits = split_of(&repos);
    let mut files: Vec<SourceFile> = ws.read(FILTERED, "source_file", Stage::Filter, log)?;
    files.retain(|f| in_split(&splits, &f.repo_id, want));
    load_contents(ws, &mut files)?;
    let mut pairs: Vec<CodeTestPair> = ws.read(PAIRS, "pair", Stage::Align, log)?;
    pairs.retain(|p| in_split(&splits, &p.repo_id, want));
    Ok((files, pairs))
}

fn load_vocab(ws: &Workspace, log: &mut RunLog) -> Result<Vocabulary, CliError> {
    let meta: BlobMeta = ws.read_stamped(VOCAB_META, "vocab", Stage::Tokenize, log)?;
    let vocab = Vocabulary::from_text(&ws.read_text(VOCAB, log)?).map_err(|e| CliError::Upstream(e.to_string()))?;
    if vocab.digest() != meta.vocab_digest {
        return Err(CliError::Upstream(format!("{VOCAB} does not match the digest recorded in {VOCAB_META}")));
    }
    Ok(vocab)
}

pub fn tokenize(ws: &Workspace) -> Result<(), CliError> {
    let mut log = ws.start_log("tokenize", Stage::Tokenize);
    let (files, _) = split_inputs(ws, Split::Train, &mut log)?;
    let vocab = train_vocab(&files, &ws.cfg.tokenizer).map_err(|e| CliError::Config(e.to_string()))?;
    ws.write_text(VOCAB, &vocab.to_text(), &mut log)?;
    ws.write_stamped(VOCAB_META, "vocab", Stage::Tokenize, &BlobMeta { vocab_digest: vocab.digest() }, &mut log)?;
    log.counts.insert("vocab_size".into(), vocab.size() as u64);
    println!("tokenize: vocabulary of {} ids from {} training files", vocab.size(), files.len());
    ws.finish_log(log)
}

pub fn corpus(ws: &Workspace) -> Result<(), CliError> {
    let mut log = ws.start_log("corpus", Stage::Corpus);
    let vocab = load_vocab(ws, &mut log)?;
    let (files, pairs) = split_inputs(ws, Split::Train, &mut log)?;
    let docs = build_documents(&files, &pairs, &vocab).map_err(|e| CliError::Upstream(e.to_string()))?;
    let seq_len = ws.cfg.corpus.seq_len;
    let seqs = pack_sequences(&docs, seq_len, ws.cfg.corpus.seed).map_err(exec)?;
    let header = CorpusHeader { seq_len: seq_len as u32, vocab_digest: vocab.digest() };
    let mut bin = Vec::new();
    write_corpus(&mut bin, &header, &seqs).map_err(exec)?;
    ws.write(DOCUMENTS, "document", Stage::Corpus, &docs, &mut log)?;
    ws.write_bytes(CORPUS, &bin, &mut log)?;
    let meta = CorpusMeta {
        vocab_digest: vocab.digest(),
        seq_len,
        sequences: seqs.len(),
        documents: docs.len(),
        tokens: docs.iter().map(|d| d.token_ids.len() as u64).sum(),
    };
    ws.write_stamped(CORPUS_META, "corpus", Stage::Corpus, &meta, &mut log)?;
    let paired = docs.iter().filter(|d| d.kind == DocKind::Paired).count();
    println!("corpus: {} documents ({paired} paired) packed into {} sequences of {seq_len}", docs.len(), seqs.len());
    ws.finish_log(log)
}

pub fn stats(ws: &Workspace) -> Result<(), CliError> {
    let mut log = ws.start_log("stats", Stage::Corpus);
    let docs: Vec<TrainingDocument> = ws.read(DOCUMENTS, "document", Stage::Corpus, &mut log)?;
    let stats = compute_stats(&docs);
    let report = StatsReport::new(&stats);
    ws.write_stamped("stats.json", "stats", Stage::Corpus, &report, &mut log)?;
    println!("documents: {}", report.documents);
    for (kind, n) in &report.per_kind_counts {
        println!("  {kind:?}: {n}");
    }
    println!("paired fraction_within(2048): {:.4}", report.paired_fraction_within_2048);
    println!("paired fraction_within(8192): {:.4}", report.paired_fraction_within_8192);
    println!("all fraction_within(2048): {:.4}", report.all_fraction_within_2048);
    println!("all fraction_within(8192): {:.4}", report.all_fraction_within_8192);
    ws.finish_log(log)
}

pub fn lm_train(ws: &Workspace) -> Result<(), CliError> {
    let mut log = ws.start_log("lm-train", Stage::Lm);
    let vocab = load_vocab(ws, &mut log)?;
    let meta: CorpusMeta = ws.read_stamped(CORPUS_META, "corpus", Stage::Corpus, &mut log)?;
    let (header, seqs) = read_corpus(&ws.read_bytes(CORPUS, &mut log)?[..]).map_err(|e| CliError::Upstream(e.to_string()))?;
    if header.vocab_digest != vocab.digest() || meta.vocab_digest != vocab.digest() {
        return Err(CliError::Upstream(format!("{CORPUS} was built with a different vocabulary than {VOCAB}")));
    }
    let mut model = train_lm(&seqs, vocab.size(), ws.cfg.lm.order, ws.cfg.lm.discount).map_err(exec)?;
    model.set_vocab_digest(vocab.digest());
    ws.write_text(LM, &model.to_json(), &mut log)?;
    ws.write_stamped(LM_META, "lm", Stage::Lm, &BlobMeta { vocab_digest: vocab.digest() }, &mut log)?;
    println!("lm-train: order {} model over {} sequences", model.order(), seqs.len());
    ws.finish_log(log)
}

fn load_model(ws: &Workspace, vocab: &Vocabulary, log: &mut RunLog) -> Result<NGramModel, CliError> {
    let meta: BlobMeta = ws.read_stamped(LM_META, "lm", Stage::Lm, log)?;
    let model = NGramModel::from_json(&ws.read_text(LM, log)?).map_err(|e| CliError::Upstream(e.to_string()))?;
    if model.vocab_digest() != vocab.digest() || meta.vocab_digest != vocab.digest() {
        return Err(CliError::Upstream(format!("{LM} was trained with a different vocabulary than {VOCAB}")));
    }
    Ok(model)
}

pub fn lm_ppl(ws: &Workspace) -> Result<(), CliError> {
    let mut log = ws.start_log("lm-ppl", Stage::Lm);
    let vocab = load_vocab(ws, &mut log)?;
    let model = load_model(ws, &vocab, &mut log)?;
    let (files, pairs) = split_inputs(ws, Split::Test, &mut log)?;
    let by_id: HashMap<&str, &SourceFile> = files.iter().map(|f| (f.file_id.as_str(), f)).collect();
    let mut out = Vec::new();
    for p in &pairs {
        let (Some(code), Some(test)) = (by_id.get(p.code_file_id.as_str()), by_id.get(p.test_file_id.as_str())) else {
            continue;
        };
        let test_ids = vocab.encode(&test.content);
        if test_ids.is_empty() {
            continue;
        }
        let mut prefix = vocab.encode(&code.content);
        prefix.push(CODETESTPAIR);
        out.push(PerplexityRecord {
            pair_id: p.pair_id.clone(),
            test_tokens: test_ids.len(),
            ppl_with_code: perplexity(&model, &test_ids, &prefix),
            ppl_without_code: perplexity(&model, &test_ids, &[]),
        });
    }
    ws.write("ppl.jsonl", "perplexity", Stage::Lm, &out, &mut log)?;
    for r in &out {
        println!("{}  tokens {:>6}  with code {:>10.3}  without {:>10.3}", r.pair_id, r.test_tokens, r.ppl_with_code, r.ppl_without_code);
    }
    ws.finish_log(log)
}

/// Cuts a raw sample to the unit the task asks for: one method, or one line for
/// statement completion.
pub fn trim_generation(text: &str, prompt: &TaskPrompt) -> String {
    match prompt.task {
        Task::Completion => text.split_inclusive('\n').next().unwrap_or("").to_string(),
        _ => match method_end(text, prompt.subject_language) {
            Some(end) => text[..end].to_string(),
            None => text.to_string(),
        },
    }
}

pub fn lm_sample(ws: &Workspace) -> Result<(), CliError> {
    let mut log = ws.start_log("lm-sample", Stage::Samples);
    let vocab = load_vocab(ws, &mut log)?;
    let model = load_model(ws, &vocab, &mut log)?;
    let prompts: Vec<TaskPrompt> = ws.read(PROMPTS, "task_prompt", Stage::Prompts, &mut log)?;
    let cfg = &ws.cfg.sampling;
    let gen_root = ws.path(GENERATIONS);
    if gen_root.exists() {
        std::fs::remove_dir_all(&gen_root).map_err(exec)?;
    }
    let mut records = Vec::new();
    for prompt in &prompts {
        let detector = method_end_detector(&vocab, prompt.subject_language);
        let stop: Option<&MethodEndFn<'_>> =
            (cfg.stop == StopCriterion::OnMethodEnd && prompt.task != Task::Completion).then_some(&detector);
        let samples = sample(&model, &prompt.prompt_tokens(&vocab), cfg, stop).map_err(exec)?;
        for (k, ids) in samples.into_iter().enumerate() {
            let raw = String::from_utf8_lossy(&vocab.decode_bytes(&ids).map_err(exec)?).into_owned();
            let text = trim_generation(&raw, prompt);
            let path = generation_path(&gen_root, &prompt.pair_id, prompt.task, prompt.context_mode, k);
            let rel = path.strip_prefix(&ws.dir).unwrap_or(&path).to_string_lossy().replace('\\', "/");
            ws.write_text(&rel, &text, &mut RunLog::default())?;
            records.push(SampleRecord {
                key: SampleKey { pair_id: prompt.pair_id.clone(), task: prompt.task, context_mode: prompt.context_mode, sample_k: k },
                path: rel,
                tokens: ids.len(),
                stop: cfg.stop,
            });
        }
    }
    ws.write(SAMPLES, "sample", Stage::Samples, &records, &mut log)?;
    log.notes.push(format!("stop criterion: {:?}", cfg.stop));
    println!("lm-sample: {} samples for {} prompts (stop {:?})", records.len(), prompts.len(), cfg.stop);
    ws.finish_log(log)
}

pub fn signal_exp(ws: &Workspace) -> Result<(), CliError> {
    let mut log = ws.start_log("signal-exp", Stage::Signal);
    let s = &ws.cfg.signal;
    let report = toy_signal_experiment(s.train_pairs, s.heldout_pairs, s.dependent, &s.lm).map_err(exec)?;
    ws.write_stamped::<SignalReport>("signal.json", "signal", Stage::Signal, &report, &mut log)?;
    println!("seed  aligned_ppl  shuffled_ppl  relative_delta");
    for r in &report.per_seed {
        println!("{:>4}  {:>11.4}  {:>12.4}  {:>14.4}", r.seed, r.aligned_ppl, r.shuffled_ppl, r.relative_delta);
    }
    println!(
        "aligned better in {}/{} seeds, mean relative delta {:.4}",
        report.seeds_aligned_better,
        report.per_seed.len(),
        report.mean_relative_delta
    );
    ws.finish_log(log)
}

pub fn prompts(ws: &Workspace) -> Result<(), CliError> {
    let mut log = ws.start_log("prompts", Stage::Prompts);
    let (files, pairs) = split_inputs(ws, Split::Test, &mut log)?;
    let by_id: HashMap<String, SourceFile> = files.into_iter().map(|f| (f.file_id.clone(), f)).collect();
    let e = &ws.cfg.eval;
    let chosen = build_eval_set(&pairs, &by_id, e.max_pairs_per_project, e.seed);
    let mut prompts = Vec::new();
    let mut skipped: Vec<SkippedPrompt> = Vec::new();
    for p in &chosen {
        let (code, test) = (&by_id[&p.code_file_id], &by_id[&p.test_file_id]);
        let (ps, sk) = make_prompts(p, &code.content, &test.content, &ws.cfg.prompts.tasks);
        prompts.extend(ps);
        skipped.extend(sk);
    }
    ws.write(EVAL_PAIRS, "pair", Stage::Prompts, &chosen, &mut log)?;
    ws.write(PROMPTS, "task_prompt", Stage::Prompts, &prompts, &mut log)?;
    ws.write("skipped.jsonl", "skipped_prompt", Stage::Prompts, &skipped, &mut log)?;
    println!("prompts: {} prompts over {} pairs, {} skipped", prompts.len(), chosen.len(), skipped.len());
    ws.finish_log(log)
}

/// Manifest for one pair: the project's manifest with the pair's files swapped in.
fn pair_manifest(dir: &Path, pair: &CodeTestPair, files: &HashMap<String, SourceFile>) -> Result<Option<ProjectManifest>, CliError> {
    let path = dir.join(&pair.repo_id).join("manifest.toml");
    if !path.exists() {
        return Ok(None);
    }
    let mut m = ProjectManifest::load(&path).map_err(|e| CliError::Config(e.to_string()))?;
    let rel = |id: &str| files.get(id).map(|f| f.rel_path.clone()).ok_or_else(|| CliError::Upstream(format!("unknown file {id}")));
    m.code_file = rel(&pair.code_file_id)?;
    m.test_file = rel(&pair.test_file_id)?;
    m.validate().map_err(|e| CliError::Config(e.to_string()))?;
    Ok(Some(m))
}

pub fn evaluate(ws: &Workspace) -> Result<(), CliError> {
    let mut log = ws.start_log("evaluate", Stage::Evaluate);
    let e = &ws.cfg.eval;
    let manifest_dir = e
        .manifest_dir
        .clone()
        .ok_or_else(|| CliError::Config("no manifest directory: pass --manifest-dir or set eval.manifest_dir".into()))?;
    let prompts: Vec<TaskPrompt> = ws.read(PROMPTS, "task_prompt", Stage::Prompts, &mut log)?;
    let pairs: Vec<CodeTestPair> = ws.read(EVAL_PAIRS, "pair", Stage::Prompts, &mut log)?;
    let files: Vec<SourceFile> = ws.read(FILTERED, "source_file", Stage::Filter, &mut log)?;
    let files: HashMap<String, SourceFile> = files.into_iter().map(|f| (f.file_id.clone(), f)).collect();
    let gen_root: PathBuf = match &e.generations_dir {
        Some(d) => {
            log.notes.push("generations read from eval.generations_dir".into());
            d.clone()
        }
        None => {
            let _: Vec<SampleRecord> = ws.read(SAMPLES, "sample", Stage::Samples, &mut log)?;
            ws.path(GENERATIONS)
        }
    };

    let mut by_pair: BTreeMap<&str, Vec<&TaskPrompt>> = BTreeMap::new();
    for p in &prompts {
        by_pair.entry(p.pair_id.as_str()).or_default().push(p);
    }
    let mut outcomes: Vec<RuntimeOutcome> = Vec::new();
    let mut scores: Vec<ScoredSample> = Vec::new();
    let mut no_manifest = 0u64;
    for pair in &pairs {
        let Some(ps) = by_pair.get(pair.pair_id.as_str()) else { continue };
        let Some(manifest) = pair_manifest(&manifest_dir, pair, &files)? else {
            log::warn!("no manifest for project {}; skipping pair {}", pair.repo_id, pair.pair_id);
            no_manifest += 1;
            continue;
        };
        let mut gens: Vec<(&TaskPrompt, usize, String)> = Vec::new();
        for p in ps {
            for (k, text) in read_generations(&gen_root, p).map_err(exec)? {
                gens.push((p, k, text));
            }
        }
        let jobs: Vec<EvalJob> = gens.iter().map(|(p, k, text)| EvalJob { prompt: p, sample_k: *k, generated: text.clone() }).collect();
        let evaluator = Evaluator::new(&manifest);
        outcomes.extend(evaluate_all(&evaluator, &jobs, e.workers).map_err(harness_err)?);
        for (p, k, text) in &gens {
            if let Some(gold) = &p.ground_truth {
                scores.push(ScoredSample {
                    key: SampleKey { pair_id: p.pair_id.clone(), task: p.task, context_mode: p.context_mode, sample_k: *k },
                    scores: lexical_scores(text, gold, p.subject_language),
                });
            }
        }
    }
    outcomes.sort_by(|a, b| a.key.cmp(&b.key));
    scores.sort_by(|a, b| a.key.cmp(&b.key));
    ws.write(OUTCOMES, "runtime_outcome", Stage::Evaluate, &outcomes, &mut log)?;
    ws.write(SCORES, "scored_sample", Stage::Evaluate, &scores, &mut log)?;
    log.counts.insert("pairs_without_manifest".into(), no_manifest);
    println!("evaluate: {} samples run, {} scored lexically", outcomes.len(), scores.len());
    ws.finish_log(log)
}

fn harness_err(e: HarnessError) -> CliError {
    match e {
        HarnessError::Manifest { .. } | HarnessError::InvalidManifest(_) | HarnessError::PathEscape(_) => CliError::Config(e.to_string()),
        other => exec(other),
    }
}

pub fn report(ws: &Workspace) -> Result<(), CliError> {
    let mut log = ws.start_log("report", Stage::Evaluate);
    let outcomes: Vec<RuntimeOutcome> = ws.read(OUTCOMES, "runtime_outcome", Stage::Evaluate, &mut log)?;
    let scores: Vec<ScoredSample> = ws.read(SCORES, "scored_sample", Stage::Evaluate, &mut log)?;
    let report = aggregate(&outcomes, &scores).map_err(|e| CliError::Upstream(e.to_string()))?;
    let table = report.table();
    ws.write_stamped::<EvalReport>("report.json", "eval_report", Stage::Evaluate, &report, &mut log)?;
    ws.write_text("report.txt", &table, &mut log)?;
    print!("{table}");
    ws.finish_log(log)
}
