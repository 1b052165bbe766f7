//! Checks behind the acceptance criteria. Each returns a one-line summary on
//! success and a description of the first violation on failure. The core
//! integration tests assert on them; the `acceptance` target prints them.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::Path;
use std::time::{Duration, Instant};

use pairforge_core::filterdedup::{apply_filters, dedup_by_hash, FilterRule, FilterRuleSet};
use pairforge_core::ingest::SourceFile;
use pairforge_core::SubjectLanguage;

use super::fixtures;

pub type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if $cond {
        } else {
            return Err(format!($($arg)+));
        }
    };
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

// ---- filter thresholds ----------------------------------------------------

/// One file per (rule, offset) with every other statistic well inside its bound,
/// plus the expected verdict.
pub fn adversarial_filter_set() -> Vec<(SourceFile, Option<FilterRule>)> {
    let mut out = Vec::new();
    let mut push = |name: String, text: String, want: Option<FilterRule>| {
        out.push((SourceFile::from_text("adv", &name, SubjectLanguage::Python, &text), want));
    };

    // 10485 lines of 100 bytes, then a tail line bringing the total to 1 MiB + d.
    for d in [-1i64, 0, 1] {
        let mut text = format!("{}\n", "a".repeat(99)).repeat(10_485);
        text.push_str(&"a".repeat((75 + d) as usize));
        text.push('\n');
        assert_eq!(text.len() as i64, 1_048_576 + d);
        push(format!("size{d:+}.py"), text, (d > 0).then_some(FilterRule::Size));
    }
    // one long line among twenty short ones keeps the mean near 57
    for d in [-1i64, 0, 1] {
        let mut text = "a".repeat((1000 + d) as usize);
        text.push('\n');
        text.push_str(&format!("{}\n", "b".repeat(10)).repeat(20));
        push(format!("maxline{d:+}.py"), text, (d > 0).then_some(FilterRule::MaxLine));
    }
    // ten lines of 100 chars, one of them changed by d
    for d in [-1i64, 0, 1] {
        let mut lines = vec!["c".repeat(100); 10];
        lines[3] = "c".repeat((100 + d) as usize);
        let text = lines.join("\n") + "\n";
        push(format!("mean{d:+}.py"), text, (d > 0).then_some(FilterRule::MeanLine));
    }
    // 100 chars in total (newline included), 25 + d of them symbols
    for d in [-1i64, 0, 1] {
        let symbols = (25 + d) as usize;
        let text = format!("{}{}\n", "+".repeat(symbols), "x".repeat(99 - symbols));
        push(format!("nonalnum{d:+}.py"), text, (d > 0).then_some(FilterRule::NonAlnum));
    }
    // the marker on line 5 is seen, on line 6 it is not
    for line in [5usize, 6] {
        let mut lines: Vec<String> = (0..8).map(|i| format!("x{i} = {i}")).collect();
        lines[line - 1] = "# Auto-Generated by a tool".into();
        let text = lines.join("\n") + "\n";
        push(format!("autogen_line{line}.py"), text, (line <= 5).then_some(FilterRule::Autogen));
    }
    // violates size and max-line: the first rule in order wins
    let both = format!("{}\n", "z".repeat(1001)).repeat(1100);
    push("size_and_maxline.py".into(), both, Some(FilterRule::Size));
    out
}

pub fn filter_thresholds() -> Outcome {
    let set = adversarial_filter_set();
    let files: Vec<SourceFile> = set.iter().map(|(f, _)| f.clone()).collect();
    let rules = FilterRuleSet::default();
    let (verdicts, took) = timed(|| apply_filters(&files, &rules));
    let wrong: Vec<String> = set
        .iter()
        .zip(&verdicts)
        .filter(|((_, want), v)| v.rejected_by != *want || v.kept != want.is_none())
        .map(|((f, want), v)| format!("{}: want {want:?}, got {:?}", f.rel_path, v.rejected_by))
        .collect();
    ensure!(wrong.is_empty(), "misclassified: {}", wrong.join("; "));
    ensure!(took < Duration::from_secs(1), "took {took:?}");
    Ok(format!("{} adversarial files, 0 misclassified, {took:?}", set.len()))
}

// ---- dedup ----------------------------------------------------------------

/// The committed 100-file tree: the first path component is the repository.
pub fn dedup_fixture() -> Vec<SourceFile> {
    let root = fixtures().join("dedup/repos");
    let mut files = Vec::new();
    for e in walkdir::WalkDir::new(&root).sort_by_file_name() {
        let e = e.unwrap();
        if !e.file_type().is_file() {
            continue;
        }
        let rel = e.path().strip_prefix(&root).unwrap().to_string_lossy().replace('\\', "/");
        let (repo, path) = rel.split_once('/').unwrap();
        let bytes = std::fs::read(e.path()).unwrap();
        files.push(SourceFile::from_bytes(repo, path, SubjectLanguage::Python, &rel, &bytes));
    }
    files
}

/// Sort-and-unique over raw bytes, keeping the smallest `(repo, path)` per content.
pub fn dedup_oracle(root: &Path, files: &[SourceFile]) -> BTreeMap<Vec<u8>, Vec<(String, String)>> {
    let mut groups: BTreeMap<Vec<u8>, Vec<(String, String)>> = BTreeMap::new();
    for f in files {
        let bytes = std::fs::read(root.join(&f.content_path)).unwrap();
        groups.entry(bytes).or_default().push((f.repo_id.clone(), f.rel_path.clone()));
    }
    for g in groups.values_mut() {
        g.sort();
    }
    groups
}

pub fn dedup_equivalence() -> Outcome {
    let files = dedup_fixture();
    ensure!(files.len() == 100, "fixture has {} files", files.len());
    let groups = dedup_oracle(&fixtures().join("dedup/repos"), &files);
    let dup_groups = groups.values().filter(|g| g.len() > 1).count();
    ensure!(dup_groups == 17, "fixture has {dup_groups} duplicate groups");

    let (once, took) = timed(|| dedup_by_hash(files.clone()));
    let mut got: Vec<(String, String)> = once.iter().map(|f| (f.repo_id.clone(), f.rel_path.clone())).collect();
    got.sort();
    let mut want: Vec<(String, String)> = groups.values().map(|g| g[0].clone()).collect();
    want.sort();
    ensure!(got == want, "survivors differ from the oracle: {} vs {}", got.len(), want.len());
    let twice = dedup_by_hash(once.clone());
    ensure!(twice == once, "dedup is not idempotent");
    ensure!(took < Duration::from_secs(1), "took {took:?}");
    Ok(format!("100 files, 17 groups, {} survivors match the oracle, idempotent, {took:?}", once.len()))
}

// ---- alignment ------------------------------------------------------------

#[derive(serde::Deserialize)]
pub struct LabelCase {
    pub case: usize,
    pub files: Vec<String>,
    pub pairs: Vec<(String, String, String)>,
}

pub fn label_cases() -> Vec<LabelCase> {
    let text = std::fs::read_to_string(fixtures().join("align/labels.jsonl")).unwrap();
    text.lines().filter(|l| !l.trim().is_empty()).map(|l| serde_json::from_str(l).unwrap()).collect()
}

pub fn case_files(case: &LabelCase) -> Vec<SourceFile> {
    case.files
        .iter()
        .map(|p| {
            let lang = SubjectLanguage::from_path(Path::new(p)).unwrap();
            SourceFile::from_text(&format!("case{}", case.case), p, lang, "")
        })
        .collect()
}

type Triple = (String, String, String);

pub fn aligned(case: &LabelCase, threshold: f64) -> Vec<Triple> {
    let repo = format!("case{}::", case.case);
    let mut got: Vec<Triple> = pairforge_core::align::align_pairs(&case_files(case), threshold)
        .into_iter()
        .map(|p| {
            let kind = match p.match_kind {
                pairforge_core::align::MatchKind::ExactPattern => "exact_pattern",
                pairforge_core::align::MatchKind::Fuzzy => "fuzzy",
            };
            (
                p.code_file_id.strip_prefix(&repo).unwrap().to_string(),
                p.test_file_id.strip_prefix(&repo).unwrap().to_string(),
                kind.to_string(),
            )
        })
        .collect();
    got.sort();
    got
}

pub fn alignment_fidelity() -> Outcome {
    let cases = label_cases();
    ensure!(cases.len() == 50, "{} labeled cases", cases.len());
    let (mut gold_n, mut got_n, mut hit) = (0usize, 0usize, 0usize);
    let (mut dropped_fuzzy, mut dropped_exact) = (0usize, 0usize);
    for c in &cases {
        let mut gold = c.pairs.clone();
        gold.sort();
        let got = aligned(c, 0.85);
        gold_n += gold.len();
        got_n += got.len();
        hit += got.iter().filter(|p| gold.contains(p)).count();
        let strict = aligned(c, 0.95);
        ensure!(strict.iter().all(|p| got.contains(p)), "case {}: 0.95 added a pair: {strict:?} vs {got:?}", c.case);
        for p in got.iter().filter(|p| !strict.contains(p)) {
            if p.2 == "fuzzy" {
                dropped_fuzzy += 1;
            } else {
                dropped_exact += 1;
            }
        }
    }
    let precision = hit as f64 / got_n as f64;
    let recall = hit as f64 / gold_n as f64;
    ensure!(hit == got_n && hit == gold_n, "precision {precision:.4}, recall {recall:.4}");
    ensure!(dropped_exact == 0, "{dropped_exact} exact-pattern pairs dropped at 0.95");
    ensure!(dropped_fuzzy > 0, "0.95 dropped nothing; the fixture does not exercise the threshold");
    Ok(format!("50 cases, {gold_n} gold pairs, P = R = 1.0 at 0.85; 0.95 drops {dropped_fuzzy} fuzzy and 0 exact pairs"))
}

// ---- tokenizer ------------------------------------------------------------

#[derive(serde::Deserialize)]
pub struct TokenizerGolden {
    pub target_size: usize,
    pub pieces: usize,
    pub merges: Vec<[u32; 3]>,
    pub total_tokens: usize,
    pub files: usize,
}

/// `(file name, text)` for every file of the generated tokenizer corpus, sorted by name.
pub fn tokenizer_corpus() -> Vec<(String, String)> {
    let dir = fixtures().join("tokenizer/files");
    let mut names: Vec<String> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    names
        .into_iter()
        .map(|n| {
            let text = std::fs::read_to_string(dir.join(&n)).unwrap();
            (n, text)
        })
        .collect()
}

pub fn tokenizer_golden() -> TokenizerGolden {
    let text = std::fs::read_to_string(fixtures().join("tokenizer/golden.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

/// Vocabulary trained on every line of the tokenizer corpus, as the reference trainer does.
pub fn trained_fixture_vocab() -> &'static pairforge_core::tokenizer::Vocabulary {
    static V: std::sync::OnceLock<pairforge_core::tokenizer::Vocabulary> = std::sync::OnceLock::new();
    V.get_or_init(|| {
        let files = tokenizer_corpus();
        let lines: Vec<&str> = files.iter().flat_map(|(_, t)| t.split_inclusive('\n')).collect();
        pairforge_core::tokenizer::train_on_lines(&lines, tokenizer_golden().target_size).unwrap()
    })
}

pub fn random_utf8(rng: &mut rand_chacha::ChaCha8Rng) -> String {
    use rand::Rng;
    let len = rng.gen_range(0..64);
    (0..len)
        .map(|_| match rng.gen_range(0..4) {
            0 => rng.gen_range(0x20u32..0x7f),
            1 => rng.gen_range(0u32..0x20),
            2 => rng.gen_range(0x80u32..0xd800),
            _ => rng.gen_range(0xe000u32..0x110000),
        })
        .filter_map(char::from_u32)
        .collect()
}

pub fn tokenizer_round_trip() -> Outcome {
    use pairforge_core::tokenizer::Vocabulary;
    use rand::SeedableRng;
    let files = tokenizer_corpus();
    ensure!(files.len() >= 200, "only {} corpus files", files.len());
    let v = trained_fixture_vocab();
    let check = |label: &str, text: &str| -> Result<(), String> {
        let ids = v.encode(text);
        ensure!(!ids.iter().any(|&id| Vocabulary::is_special(id)), "{label}: special id emitted");
        let back = v.decode(&ids).map_err(|e| format!("{label}: {e}"))?;
        ensure!(back == text, "{label}: round trip differs");
        Ok(())
    };
    for (name, text) in &files {
        check(name, text)?;
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for i in 0..10_000 {
        check(&format!("random string {i}"), &random_utf8(&mut rng))?;
    }
    Ok(format!("{} corpus files and 10000 random strings round trip, no special ids", files.len()))
}

// ---- corpus ---------------------------------------------------------------

pub struct FixtureCorpus {
    pub files: Vec<SourceFile>,
    pub pairs: Vec<pairforge_core::align::CodeTestPair>,
    pub vocab: pairforge_core::tokenizer::Vocabulary,
}

/// The bundled repository corpus taken through ingest, filter, dedup and align,
/// with a small vocabulary trained on all surviving files.
pub fn fixture_corpus() -> FixtureCorpus {
    use pairforge_core::ingest::{scan_repositories, IngestConfig};
    use pairforge_core::tokenizer::{train_vocab, TrainConfig};
    let scan = scan_repositories(&fixtures().join("corpus"), &IngestConfig::default()).unwrap();
    let files: Vec<SourceFile> = scan.files().cloned().collect();
    let (kept, _, _) = pairforge_core::filterdedup::filter_files(files, &FilterRuleSet::default());
    let files = dedup_by_hash(kept);
    let pairs = pairforge_core::align::align_all(&files, 0.85);
    let vocab = train_vocab(&files, &TrainConfig { target_size: 512, lines_per_file: 40, seed: 3, byte_budget: None }).unwrap();
    FixtureCorpus { files, pairs, vocab }
}

/// Splits the non-PAD stream of packed sequences back into documents at EOS.
pub fn unpack(seqs: &[pairforge_core::corpus::PackedSequence]) -> Vec<Vec<u32>> {
    use pairforge_core::tokenizer::EOS;
    let stream: Vec<u32> = seqs.iter().flat_map(|s| s.non_pad().copied()).collect();
    let mut docs = vec![Vec::new()];
    for t in stream {
        if t == EOS {
            docs.push(Vec::new());
        } else {
            docs.last_mut().unwrap().push(t);
        }
    }
    docs.pop();
    docs
}

pub fn corpus_construction() -> Outcome {
    use pairforge_core::corpus::{build_documents, pack_sequences, DocKind, LengthStats};
    let fc = fixture_corpus();
    let docs = build_documents(&fc.files, &fc.pairs, &fc.vocab).map_err(|e| e.to_string())?;
    let by_id: std::collections::HashMap<&str, &SourceFile> = fc.files.iter().map(|f| (f.file_id.as_str(), f)).collect();
    let mut paired = 0;
    for d in docs.iter().filter(|d| d.kind == DocKind::Paired) {
        let code = fc.vocab.encode(&by_id[d.provenance.code_file_id.as_deref().unwrap()].content);
        let test = fc.vocab.encode(&by_id[d.provenance.test_file_id.as_deref().unwrap()].content);
        ensure!(d.has_paired_order(&code, &test), "order violated in {:?}", d.provenance);
        paired += 1;
    }
    ensure!(paired == fc.pairs.len() && paired > 0, "{paired} paired documents for {} pairs", fc.pairs.len());

    let doc_tokens: usize = docs.iter().map(|d| d.token_ids.len()).sum();
    let mut want: Vec<Vec<u32>> = docs.iter().map(|d| d.token_ids.clone()).collect();
    want.sort();
    for (len, seed) in [(64usize, 0u64), (512, 1), (1024, 2), (100_000, 3)] {
        let seqs = pack_sequences(&docs, len, seed).map_err(|e| e.to_string())?;
        ensure!(seqs.iter().all(|s| s.token_ids.len() == len), "L={len}: a window has the wrong length");
        let non_pad: usize = seqs.iter().map(|s| s.non_pad().count()).sum();
        ensure!(non_pad == doc_tokens + docs.len(), "L={len}: {non_pad} non-PAD tokens, want {}", doc_tokens + docs.len());
        let mut got = unpack(&seqs);
        got.sort();
        ensure!(got == want, "L={len}: unpacked documents differ");
    }

    let lengths = [1000usize, 3000, 9000];
    let stats = LengthStats::from_lengths(lengths);
    let direct = |l: usize| lengths.iter().filter(|&&n| n <= l).count() as f64 / lengths.len() as f64;
    let (a, b) = (stats.fraction_within(2048), stats.fraction_within(8192));
    ensure!(a == direct(2048) && b == direct(8192), "fraction_within disagrees with counting");
    ensure!(a == 1.0 / 3.0 && b == 2.0 / 3.0, "fraction_within gave ({a}, {b})");
    Ok(format!(
        "{paired} paired documents in order, {} documents conserved through packing at 4 lengths, fraction_within = (1/3, 2/3)",
        docs.len()
    ))
}

// ---- reference LM ----------------------------------------------------------

pub fn signal_experiment() -> Outcome {
    use pairforge_core::reflm::SignalConfig;
    let cfg = SignalConfig::default();
    ensure!(cfg.seeds.len() == 5, "default runs {} seeds", cfg.seeds.len());
    let (report, took) = timed(|| pairforge_core::synthetic::toy_signal_experiment(2000, 200, true, &cfg));
    let report = report.map_err(|e| e.to_string())?;
    for r in &report.per_seed {
        ensure!(r.aligned_ppl < r.shuffled_ppl, "seed {}: aligned {} >= shuffled {}", r.seed, r.aligned_ppl, r.shuffled_ppl);
        ensure!(r.relative_delta > 0.05, "seed {}: relative delta {:.4}", r.seed, r.relative_delta);
    }
    ensure!(took < Duration::from_secs(120), "took {took:?}");
    let min = report.per_seed.iter().map(|r| r.relative_delta).fold(f64::INFINITY, f64::min);
    Ok(format!(
        "aligned < shuffled in {}/5 seeds, relative delta min {min:.4} mean {:.4}, {took:?}",
        report.seeds_aligned_better, report.mean_relative_delta
    ))
}

/// An order-4 model trained on the aligned toy corpus for seed 0.
pub fn toy_model() -> pairforge_core::reflm::NGramModel {
    use pairforge_core::corpus::pack_sequences;
    let toy = pairforge_core::synthetic::toy_corpus(500, 0, 0, true);
    let seqs = pack_sequences(&toy.aligned, 128, 0).unwrap();
    pairforge_core::reflm::train_lm(&seqs, pairforge_core::synthetic::VOCAB_SIZE, 4, 0.75).unwrap()
}

/// Every token's count within 3 sigma of its binomial expectation n * p. Tokens
/// with n * p < 10 are pooled into one bucket, where the band is meaningful.
fn within_three_sigma(counts: &[usize], probs: &[f64], n: usize) -> Result<(), String> {
    let mut buckets: Vec<(String, usize, f64)> = Vec::new();
    let (mut rare_c, mut rare_p) = (0usize, 0.0f64);
    for (t, (&c, &p)) in counts.iter().zip(probs).enumerate() {
        if n as f64 * p >= 10.0 {
            buckets.push((format!("token {t}"), c, p));
        } else {
            rare_c += c;
            rare_p += p;
        }
    }
    buckets.push(("pooled rare tokens".into(), rare_c, rare_p));
    for (label, c, p) in buckets {
        let mean = n as f64 * p;
        let sigma = (n as f64 * p * (1.0 - p)).sqrt();
        ensure!((c as f64 - mean).abs() <= 3.0 * sigma, "{label}: {c} draws, expected {mean:.1} +- {:.1}", 3.0 * sigma);
    }
    Ok(())
}

pub fn lm_correctness() -> Outcome {
    use pairforge_core::reflm::{greedy, perplexity, sample, train_on_streams, NGramModel, SampleConfig, StopCriterion};
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);

    // uniform perplexity
    for v in [2usize, 260, 1000] {
        let m = NGramModel::uniform(v, 3);
        let toks: Vec<u32> = (0..500).map(|_| rng.gen_range(0..v as u32)).collect();
        let ppl = perplexity(&m, &toks, &[]);
        ensure!((ppl - v as f64).abs() < 1e-9, "uniform V={v}: ppl {ppl}");
    }

    // normalization over random contexts, half of them seen in training
    let m = toy_model();
    let seen: Vec<Vec<u32>> = m.contexts(3);
    for i in 0..1000 {
        let ctx: Vec<u32> = if i % 2 == 0 {
            seen[rng.gen_range(0..seen.len())].clone()
        } else {
            (0..rng.gen_range(0..6)).map(|_| rng.gen_range(0..m.vocab_size() as u32)).collect()
        };
        let d = m.distribution(&ctx);
        let z: f64 = d.iter().sum();
        ensure!((z - 1.0).abs() < 1e-9, "context {ctx:?}: mass {z}");
        let probe = rng.gen_range(0..m.vocab_size() as u32);
        ensure!((m.prob(&ctx, probe) - d[probe as usize]).abs() < 1e-12, "prob and distribution disagree");
    }

    // temperature -> 0 is greedy decoding
    let toy = pairforge_core::synthetic::toy_corpus(0, 20, 99, true);
    for (i, p) in toy.heldout.iter().enumerate() {
        let mut prompt = p.code.clone();
        prompt.push(pairforge_core::tokenizer::CODETESTPAIR);
        let cfg = SampleConfig { temperature: 1e-6, max_tokens: 30, num_samples: 3, seed: i as u64, stop: StopCriterion::OnEos };
        let want = greedy(&m, &prompt, 30);
        for s in sample(&m, &prompt, &cfg, None).map_err(|e| e.to_string())? {
            ensure!(s == want, "held-out prompt {i}: T=1e-6 sample {s:?} differs from greedy {want:?}");
        }
    }

    // temperature 1: first-token frequencies against the binomial oracle
    let n = 10_000;
    let two = train_on_streams(&[&[0, 0, 0, 0, 1]], 2, 1, 0.75).map_err(|e| e.to_string())?;
    let p = two.distribution(&[]);
    ensure!((p[0] - 0.8).abs() < 1e-12 && (p[1] - 0.2).abs() < 1e-12, "two-token model gives {p:?}");
    for (label, model, prompt) in [("two-token", &two, vec![]), ("toy", &m, toy.heldout[0].code.clone())] {
        let probs = model.distribution(&prompt);
        let cfg = SampleConfig { temperature: 1.0, max_tokens: 1, num_samples: n, seed: 5, stop: StopCriterion::OnEos };
        let draws = sample(model, &prompt, &cfg, None).map_err(|e| e.to_string())?;
        let mut counts = vec![0usize; probs.len()];
        for d in &draws {
            // an empty draw is EOS
            let t = d.first().copied().unwrap_or(pairforge_core::tokenizer::EOS);
            counts[t as usize] += 1;
        }
        within_three_sigma(&counts, &probs, n).map_err(|e| format!("{label}: {e}"))?;
    }
    Ok("uniform ppl = V, 1000 contexts normalized, T->0 equals greedy, T=1 within 3 sigma over 10000 draws".into())
}

// ---- prompt inverse --------------------------------------------------------

/// `(file id, language, text)` for the outline fixture files and every test file
/// of the bundled corpus.
pub fn prompt_fixture_files() -> Vec<(String, SubjectLanguage, String)> {
    let mut out = Vec::new();
    for lang in ["python", "java"] {
        let dir = fixtures().join("outline").join(lang);
        let mut names: Vec<String> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
        names.sort();
        for n in names {
            let language = SubjectLanguage::from_path(Path::new(&n)).unwrap();
            out.push((format!("{lang}/{n}"), language, std::fs::read_to_string(dir.join(&n)).unwrap()));
        }
    }
    let fc = fixture_corpus();
    for f in fc.files.iter().filter(|f| pairforge_core::align::is_test_file(f)) {
        out.push((f.file_id.clone(), f.subject_language, f.content.clone()));
    }
    out
}

pub fn dummy_pair(test_id: &str, language: SubjectLanguage) -> pairforge_core::align::CodeTestPair {
    pairforge_core::align::CodeTestPair {
        pair_id: format!("p::{test_id}"),
        repo_id: "r".into(),
        subject_language: language,
        code_file_id: "r::code".into(),
        test_file_id: test_id.to_string(),
        match_kind: pairforge_core::align::MatchKind::ExactPattern,
        score: 1.0,
    }
}

pub fn prompt_inverse() -> Outcome {
    use pairforge_core::promptgen::{extract, inject_generation, make_prompt, outline_text, ContextMode, SkipReason, Task};
    let files = prompt_fixture_files();
    let (mut first_n, mut last_n, mut skipped_n) = (0, 0, 0);
    for (id, lang, text) in &files {
        let outline = outline_text(id, *lang, text).map_err(|e| format!("{id}: {e}"))?;
        let tests = outline.test_indices();
        let pair = dummy_pair(id, *lang);
        for (task, idx) in [(Task::FirstTest, tests.first()), (Task::LastTest, tests.last())] {
            let prompt = make_prompt(&pair, "code", text, &outline, task, ContextMode::WithCode, None);
            if task == Task::LastTest && tests.len() < 2 {
                ensure!(
                    matches!(prompt, Err(SkipReason::FewerThanTwoTests | SkipReason::NoTestMethods)),
                    "{id}: LastTest prompt built for a file with {} tests",
                    tests.len()
                );
                skipped_n += 1;
                continue;
            }
            let Some(&i) = idx else {
                ensure!(prompt.is_err(), "{id}: {task} prompt without tests");
                continue;
            };
            let prompt = prompt.map_err(|r| format!("{id}: {task} skipped: {r:?}"))?;
            let span = outline.methods[i].span.clone();
            let (rest, point, gt) = extract(text, span.clone());
            ensure!(prompt.ground_truth.as_deref() == Some(gt.as_str()), "{id}: {task} ground truth differs");
            ensure!(prompt.test_context == text[..span.start], "{id}: {task} context is not the prefix");
            let back = inject_generation(&rest, point, &gt, *lang, &prompt.insertion_indent).map_err(|e| e.to_string())?;
            ensure!(back == *text, "{id}: {task} re-injection is not byte-exact");
            if task == Task::LastTest {
                // a class emptied by the removal keeps its `pass` placeholder after the
                // re-injected method; anything else must come back unchanged
                let base = &prompt.baseline_file;
                let filler = if *base == rest {
                    ""
                } else {
                    let f = base.strip_prefix(&rest[..point]).and_then(|b| b.strip_suffix(&rest[point..]));
                    ensure!(
                        f.is_some_and(|f| f.trim_start_matches([' ', '\t']) == "pass\n"),
                        "{id}: baseline differs from the extracted file by more than a placeholder"
                    );
                    f.unwrap()
                };
                let want = format!("{}{}{}", &text[..span.end], filler, &text[span.end..]);
                let back = prompt.inject(&gt).map_err(|e| e.to_string())?;
                ensure!(back == want, "{id}: LastTest baseline + ground truth is not the file");
                last_n += 1;
            } else {
                first_n += 1;
            }
        }
    }
    Ok(format!(
        "{} test files: {first_n} first-test and {last_n} last-test round trips byte-exact, {skipped_n} single-test files skipped for LastTest",
        files.len()
    ))
}

// ---- lexical metrics -------------------------------------------------------

/// LCS length by trying every subsequence of `a`, longest first.
pub fn brute_lcs(a: &[u8], b: &[u8]) -> usize {
    let is_subseq = |s: &[u8]| {
        let mut it = b.iter();
        s.iter().all(|x| it.any(|y| y == x))
    };
    let n = a.len();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let sub: Vec<u8> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| a[i]).collect();
        if is_subseq(&sub) {
            best = k;
        }
    }
    best
}

fn f_measure(lcs: usize, gen: usize, gold: usize) -> f64 {
    if lcs == 0 {
        return 0.0;
    }
    let (p, r) = (lcs as f64 / gen as f64, lcs as f64 / gold as f64);
    2.0 * p * r / (p + r)
}

#[derive(serde::Deserialize)]
pub struct CodeBleuCase {
    pub name: String,
    pub language: String,
    pub gen: String,
    pub gold: String,
    pub gen_len: usize,
    pub gold_len: usize,
    pub ngram: [[u32; 2]; 4],
    pub keyword_unigram: [u32; 2],
    pub syntax: [u32; 2],
    pub subtrees_gold: Vec<String>,
}

pub fn codebleu_cases() -> Vec<CodeBleuCase> {
    #[derive(serde::Deserialize)]
    struct File {
        cases: Vec<CodeBleuCase>,
    }
    let text = std::fs::read_to_string(fixtures().join("metrics/codebleu_cases.json")).unwrap();
    serde_json::from_str::<File>(&text).unwrap().cases
}

/// Component values from the hand counts: `(ngram, weighted_ngram, syntax)`.
pub fn hand_components(c: &CodeBleuCase) -> (f64, f64, f64) {
    let bp = if c.gen_len > c.gold_len { 1.0 } else { (1.0 - c.gold_len as f64 / c.gen_len as f64).exp() };
    let smoothed = |[m, t]: [u32; 2]| (m as f64 + 1.0) / (t as f64 + 1.0);
    let higher: f64 = c.ngram[1..].iter().map(|&x| smoothed(x)).product();
    let bleu = bp * (smoothed(c.ngram[0]) * higher).powf(0.25);
    let weighted = bp * (smoothed(c.keyword_unigram) * higher).powf(0.25);
    (bleu, weighted, c.syntax[0] as f64 / c.syntax[1] as f64)
}

fn language(name: &str) -> SubjectLanguage {
    match name {
        "python" => SubjectLanguage::Python,
        "java" => SubjectLanguage::Java,
        other => panic!("unknown language {other}"),
    }
}

/// A code-like snippet with irregular whitespace.
pub fn random_snippet(rng: &mut impl rand::Rng) -> String {
    const WORDS: &[&str] = &["assert", "x", "==", "f(", ")", "self", ".", "assertEqual(", "1", ",", "return", ":", "{", "}", ";", "int"];
    const SPACE: &[&str] = &[" ", "  ", "\n", "\t", "\n    ", ""];
    let n = rng.gen_range(1..30);
    let mut s = String::new();
    for _ in 0..n {
        s.push_str(WORDS[rng.gen_range(0..WORDS.len())]);
        s.push_str(SPACE[rng.gen_range(0..SPACE.len())]);
    }
    s
}

pub fn metric_oracles() -> Outcome {
    use pairforge_core::metrics::{codebleu_lite, exact_match, lexical_scores, rouge_l_tokens};
    use pairforge_core::promptgen::block_tree;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
    let mut worst = 0f64;
    for trial in 0..1000 {
        let alphabet = rng.gen_range(1..=5u8);
        let a: Vec<u8> = (0..rng.gen_range(0..=12)).map(|_| rng.gen_range(0..alphabet)).collect();
        let b: Vec<u8> = (0..rng.gen_range(0..=12)).map(|_| rng.gen_range(0..alphabet)).collect();
        let want = f_measure(brute_lcs(&a, &b), a.len(), b.len());
        let got = rouge_l_tokens(&a, &b);
        worst = worst.max((got - want).abs());
        ensure!((got - want).abs() <= 1e-12, "rouge trial {trial}: {got} vs brute force {want} for {a:?} / {b:?}");
    }
    let cases = codebleu_cases();
    ensure!(cases.len() == 3, "expected 3 codebleu fixtures");
    for c in &cases {
        let lang = language(&c.language);
        let subtrees = block_tree(&c.gold, lang).subtree_signatures();
        ensure!(subtrees == c.subtrees_gold, "{}: gold subtrees {subtrees:?}", c.name);
        let (n, w, s) = hand_components(c);
        let (score, got) = codebleu_lite(&c.gen, &c.gold, lang);
        for (what, g, h) in [("ngram", got.ngram, n), ("weighted", got.weighted_ngram, w), ("syntax", got.syntax_match, s)] {
            ensure!((g - h).abs() <= 1e-9, "{}: {what} {g} vs hand {h}", c.name);
        }
        ensure!((score - (n + w + s) / 3.0).abs() <= 1e-9, "{}: score {score}", c.name);
    }
    for i in 0..1000 {
        let gold = random_snippet(&mut rng);
        // the same code with its whitespace runs redrawn
        let gen: String = gold.split_whitespace().collect::<Vec<_>>().join(if i % 2 == 0 { " " } else { "\n  " });
        let lang = if i % 3 == 0 { SubjectLanguage::Java } else { SubjectLanguage::Python };
        for (g, r) in [(&gold, &gold), (&gen, &gold)] {
            ensure!(exact_match(g, r), "self-pair {i} not an exact match");
            let s = lexical_scores(g, r, lang);
            ensure!(s.rouge_l == 1.0 && s.codebleu == 1.0, "self-pair {i}: rouge {} codebleu {}", s.rouge_l, s.codebleu);
        }
    }
    Ok(format!("1000 rouge trials (max error {worst:.1e}), 3 codebleu fixtures within 1e-9, 2000 self-pairs score 1"))
}

// ---- harness ---------------------------------------------------------------

/// Hand counts for one micro-project: statement lines in the code file, lines the
/// shipped tests reach, and lines reached once the known-good test is added.
pub struct HandCount {
    pub project: &'static str,
    pub compiler: &'static str,
    pub coverable: f64,
    pub baseline: f64,
    pub with_gen: f64,
}

/// pycalc's `calc.py` has 14 statement lines; the two shipped tests reach 9 of them
/// (module-level lines plus `add` and `scale`) and `test_clamp` reaches the other 5.
/// `Calc.java` has 10 statement lines; `testAdd` and `testScale` reach 5.
pub const HAND_COUNTS: [HandCount; 2] = [
    HandCount { project: "pycalc", compiler: "python3", coverable: 14.0, baseline: 9.0, with_gen: 14.0 },
    HandCount { project: "javacalc", compiler: "javac", coverable: 10.0, baseline: 5.0, with_gen: 10.0 },
];

pub fn micro_project_checks(h: &HandCount) -> Outcome {
    use pairforge_core::harness::{filter_generations, run_baseline, Evaluator};
    use pairforge_core::promptgen::Task;

    use super::{micro_prompt, tool_available, MicroProject};

    if !tool_available(h.compiler) {
        return Err(format!("{}: `{}` not found on PATH, the project cannot be built", h.project, h.compiler));
    }
    let p = MicroProject::load(h.project);
    let e = |e: pairforge_core::harness::HarnessError| format!("{}: {e}", h.project);
    let run = run_baseline(&p.manifest, &p.manifest.read_test_file().map_err(e)?).map_err(e)?;
    ensure!(run.coverage == Some(h.baseline / h.coverable), "{}: baseline coverage {:?}", h.project, run.coverage);

    let prompt = micro_prompt(&p, Task::ExtraTest);
    let ev = Evaluator::new(&p.manifest);
    let good = ev.evaluate_generation(&prompt, 0, &p.generation("known_good")).map_err(e)?;
    ensure!(good.compiled && good.passed && good.has_assertion, "{}: known-good test {good:?}", h.project);
    let want = (h.with_gen - h.baseline) / h.coverable;
    ensure!(
        good.coverage_delta.is_some_and(|d| (d - want).abs() < 1e-12),
        "{}: coverage delta {:?}, hand count {want}",
        h.project,
        good.coverage_delta
    );
    let garbage = ev.evaluate_generation(&prompt, 1, &p.generation("garbage")).map_err(e)?;
    ensure!(!garbage.compiled, "{}: garbage compiled", h.project);
    let no_assert = ev.evaluate_generation(&prompt, 2, &p.generation("no_assert")).map_err(e)?;
    ensure!(no_assert.compiled && no_assert.passed && !no_assert.has_assertion, "{}: assert-free test {no_assert:?}", h.project);
    let kept = filter_generations(&[good, garbage, no_assert]);
    ensure!(kept.len() == 1 && kept[0].key.sample_k == 0, "{}: filter kept {kept:?}", h.project);
    Ok(format!("{}: baseline {}/{}, delta {want:.4}", h.project, h.baseline, h.coverable))
}

pub fn harness_end_to_end() -> Outcome {
    let (results, took) = timed(|| HAND_COUNTS.iter().map(micro_project_checks).collect::<Vec<_>>());
    let all_ok = results.iter().all(Result::is_ok);
    let summary = results.into_iter().map(|r| r.unwrap_or_else(|e| format!("FAILED {e}"))).collect::<Vec<_>>().join("; ");
    ensure!(all_ok, "{summary}");
    ensure!(took < Duration::from_secs(120), "took {took:?}");
    Ok(format!("{summary} in {:.1}s", took.as_secs_f64()))
}
