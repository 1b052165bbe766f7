//! Lexical similarity between generations and ground truth, and aggregation of
//! runtime outcomes into a per-task report.
//!
//! All lexical metrics tokenize with [`crate::lexer::code_tokens`] (word runs and
//! single punctuation characters), so values do not depend on the BPE vocabulary.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexer::code_tokens;
use crate::promptgen::{block_tree, ContextMode, Task};
use crate::SubjectLanguage;

pub const PYTHON_KEYWORDS: &[&str] = &[
    "False",
    "None",
    "True",
    "and",
    "as",
    "assert",
    "async",
    "await",
    "break",
    "class",
    "continue",
    "def",
    "del",
    "elif",
    "else",
    "except",
    "finally",
    "for",
    "from",
    "global",
    "if",
    "import",
    "in",
    "is",
    "lambda",
    "nonlocal",
    "not",
    "or",
    "pass",
    "raise",
    "return",
    "try",
    "while",
    "with",
    "yield",
    "self",
    "assertEqual",
    "assertTrue",
    "assertFalse",
    "assertRaises",
    "assertIn",
    "assertIsNone",
];

pub const JAVA_KEYWORDS: &[&str] = &[
    "abstract",
    "assert",
    "boolean",
    "break",
    "byte",
    "case",
    "catch",
    "char",
    "class",
    "continue",
    "default",
    "do",
    "double",
    "else",
    "enum",
    "extends",
    "final",
    "finally",
    "float",
    "for",
    "if",
    "implements",
    "import",
    "instanceof",
    "int",
    "interface",
    "long",
    "new",
    "null",
    "private",
    "protected",
    "public",
    "return",
    "short",
    "static",
    "super",
    "switch",
    "this",
    "throw",
    "throws",
    "try",
    "void",
    "while",
    "true",
    "false",
    "Test",
    "assertEquals",
    "assertTrue",
    "assertFalse",
    "assertNull",
    "assertNotNull",
    "assertThrows",
];

/// Weight of a keyword unigram relative to any other token in the weighted n-gram
/// component.
pub const KEYWORD_WEIGHT: f64 = 5.0;

pub fn default_keywords(language: SubjectLanguage) -> &'static [&'static str] {
    match language {
        SubjectLanguage::Python => PYTHON_KEYWORDS,
        SubjectLanguage::Java => JAVA_KEYWORDS,
    }
}

/// Equality after collapsing whitespace runs and dropping leading and trailing blanks.
pub fn exact_match(gen: &str, gold: &str) -> bool {
    gen.split_whitespace().eq(gold.split_whitespace())
}

pub fn lcs_len<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    for x in a {
        for (j, y) in b.iter().enumerate() {
            cur[j + 1] = if x == y { prev[j] + 1 } else { prev[j + 1].max(cur[j]) };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// ROUGE-L F-measure over token sequences; 0 when either side is empty.
pub fn rouge_l_tokens<T: PartialEq>(gen: &[T], gold: &[T]) -> f64 {
    let lcs = lcs_len(gen, gold);
    if lcs == 0 {
        return 0.0;
    }
    let p = lcs as f64 / gen.len() as f64;
    let r = lcs as f64 / gold.len() as f64;
    2.0 * p * r / (p + r)
}

pub fn rouge_l(gen: &str, gold: &str) -> f64 {
    rouge_l_tokens(&code_tokens(gen), &code_tokens(gold))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CodeBleuComponents {
    pub ngram: f64,
    pub weighted_ngram: f64,
    pub syntax_match: f64,
}

fn ngram_counts<'a>(toks: &[&'a str], n: usize) -> HashMap<Vec<&'a str>, usize> {
    let mut m = HashMap::new();
    if toks.len() >= n {
        for w in toks.windows(n) {
            *m.entry(w.to_vec()).or_insert(0) += 1;
        }
    }
    m
}

/// `(clipped matches, candidate total)` for order `n`, each n-gram weighted by `w`.
fn ngram_stats(gen: &[&str], gold: &[&str], n: usize, w: &dyn Fn(&[&str]) -> f64) -> (f64, f64) {
    let g = ngram_counts(gen, n);
    let r = ngram_counts(gold, n);
    let mut matched = 0.0;
    let mut total = 0.0;
    for (gram, &c) in &g {
        let weight = w(gram);
        total += weight * c as f64;
        matched += weight * c.min(r.get(gram).copied().unwrap_or(0)) as f64;
    }
    (matched, total)
}

fn brevity_penalty(c: usize, r: usize) -> f64 {
    if c == 0 {
        0.0
    } else if c > r {
        1.0
    } else {
        (1.0 - r as f64 / c as f64).exp()
    }
}

/// BLEU-4 with add-one smoothing on every n-gram precision and uniform weights.
/// `unigram_weight` weights unigrams (higher orders have weight 1).
fn smoothed_bleu(gen: &[&str], gold: &[&str], unigram_weight: &dyn Fn(&str) -> f64) -> f64 {
    if gen.is_empty() {
        return 0.0;
    }
    let mut log_sum = 0.0;
    for n in 1..=4 {
        let (m, t) = if n == 1 {
            ngram_stats(gen, gold, 1, &|g: &[&str]| unigram_weight(g[0]))
        } else {
            ngram_stats(gen, gold, n, &|_: &[&str]| 1.0)
        };
        log_sum += ((m + 1.0) / (t + 1.0)).ln();
    }
    brevity_penalty(gen.len(), gold.len()) * (log_sum / 4.0).exp()
}

pub fn bleu4(gen: &[&str], gold: &[&str]) -> f64 {
    smoothed_bleu(gen, gold, &|_| 1.0)
}

pub fn weighted_bleu4(gen: &[&str], gold: &[&str], keywords: &[&str]) -> f64 {
    smoothed_bleu(gen, gold, &|t| if keywords.contains(&t) { KEYWORD_WEIGHT } else { 1.0 })
}

/// Clipped fraction of the gold block tree's subtrees that also occur in the
/// generation's tree.
pub fn syntax_match(gen: &str, gold: &str, language: SubjectLanguage) -> f64 {
    let gold_sigs = block_tree(gold, language).subtree_signatures();
    let mut avail: HashMap<String, usize> = HashMap::new();
    for s in block_tree(gen, language).subtree_signatures() {
        *avail.entry(s).or_insert(0) += 1;
    }
    let mut matched = 0usize;
    for s in &gold_sigs {
        if let Some(c) = avail.get_mut(s) {
            if *c > 0 {
                *c -= 1;
                matched += 1;
            }
        }
    }
    matched as f64 / gold_sigs.len() as f64
}

/// Thirds of smoothed BLEU-4, keyword-weighted BLEU-4 and block-tree syntax match.
pub fn codebleu_lite(gen: &str, gold: &str, language: SubjectLanguage) -> (f64, CodeBleuComponents) {
    codebleu_with_keywords(gen, gold, language, default_keywords(language))
}

pub fn codebleu_with_keywords(gen: &str, gold: &str, language: SubjectLanguage, keywords: &[&str]) -> (f64, CodeBleuComponents) {
    if exact_match(gen, gold) {
        return (1.0, CodeBleuComponents { ngram: 1.0, weighted_ngram: 1.0, syntax_match: 1.0 });
    }
    let g = code_tokens(gen);
    if g.is_empty() {
        return (0.0, CodeBleuComponents { ngram: 0.0, weighted_ngram: 0.0, syntax_match: 0.0 });
    }
    let r = code_tokens(gold);
    let c = CodeBleuComponents {
        ngram: bleu4(&g, &r),
        weighted_ngram: weighted_bleu4(&g, &r, keywords),
        syntax_match: syntax_match(gen, gold, language),
    };
    ((c.ngram + c.weighted_ngram + c.syntax_match) / 3.0, c)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LexicalScores {
    pub exact_match: bool,
    pub rouge_l: f64,
    pub codebleu: f64,
    pub codebleu_components: CodeBleuComponents,
}

pub fn lexical_scores(gen: &str, gold: &str, language: SubjectLanguage) -> LexicalScores {
    let em = exact_match(gen, gold);
    let (codebleu, components) = codebleu_lite(gen, gold, language);
    LexicalScores { exact_match: em, rouge_l: if em { 1.0 } else { rouge_l(gen, gold) }, codebleu, codebleu_components: components }
}

/// Key of one generated sample.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SampleKey {
    pub pair_id: String,
    pub task: Task,
    pub context_mode: ContextMode,
    pub sample_k: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoredSample {
    #[serde(flatten)]
    pub key: SampleKey,
    pub scores: LexicalScores,
}

/// How the pass verdict was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictSource {
    /// The runner reported the injected test's own result.
    PerTest,
    /// Only the suite exit code was available.
    SuiteExit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuntimeOutcome {
    #[serde(flatten)]
    pub key: SampleKey,
    pub compiled: bool,
    pub passed: bool,
    pub has_assertion: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coverage_baseline: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coverage_with_gen: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coverage_delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verdict_source: Option<VerdictSource>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub failure: Option<String>,
}

impl RuntimeOutcome {
    pub fn not_compiled(key: SampleKey, has_assertion: bool, failure: impl Into<String>) -> Self {
        RuntimeOutcome {
            key,
            compiled: false,
            passed: false,
            has_assertion,
            coverage_baseline: None,
            coverage_with_gen: None,
            coverage_delta: None,
            verdict_source: None,
            failure: Some(failure.into()),
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum MetricsError {
    #[error("lexical score for {0:?} has no matching runtime outcome")]
    UnmatchedScore(SampleKey),
    #[error("duplicate entry for {0:?}")]
    Duplicate(SampleKey),
}

/// Additive per-(task, context) tallies. Means are derived on demand, so shards
/// merge by adding rows.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub samples: usize,
    pub compiled: usize,
    pub passed: usize,
    pub lexical_samples: usize,
    pub exact_matches: usize,
    pub rouge_sum: f64,
    pub codebleu_sum: f64,
    pub coverage_samples: usize,
    pub coverage_delta_sum: f64,
}

impl ReportRow {
    pub fn mean_rouge(&self) -> Option<f64> {
        (self.lexical_samples > 0).then(|| self.rouge_sum / self.lexical_samples as f64)
    }

    pub fn mean_codebleu(&self) -> Option<f64> {
        (self.lexical_samples > 0).then(|| self.codebleu_sum / self.lexical_samples as f64)
    }

    pub fn exact_match_rate(&self) -> Option<f64> {
        (self.lexical_samples > 0).then(|| self.exact_matches as f64 / self.lexical_samples as f64)
    }

    pub fn mean_coverage_delta(&self) -> Option<f64> {
        (self.coverage_samples > 0).then(|| self.coverage_delta_sum / self.coverage_samples as f64)
    }

    fn add(&mut self, o: &ReportRow) {
        self.samples += o.samples;
        self.compiled += o.compiled;
        self.passed += o.passed;
        self.lexical_samples += o.lexical_samples;
        self.exact_matches += o.exact_matches;
        self.rouge_sum += o.rouge_sum;
        self.codebleu_sum += o.codebleu_sum;
        self.coverage_samples += o.coverage_samples;
        self.coverage_delta_sum += o.coverage_delta_sum;
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    /// Always `codebleu_lite`: n-gram, weighted n-gram and syntax match in thirds,
    /// without a dataflow component.
    pub codebleu_variant: String,
    pub rows: BTreeMap<String, ReportRow>,
}

fn row_key(task: Task, mode: ContextMode) -> String {
    format!("{}/{}", task.as_str(), mode.as_str())
}

impl EvalReport {
    pub fn row(&self, task: Task, mode: ContextMode) -> Option<&ReportRow> {
        self.rows.get(&row_key(task, mode))
    }

    pub fn merge(&mut self, other: &EvalReport) {
        for (k, r) in &other.rows {
            self.rows.entry(k.clone()).or_default().add(r);
        }
    }

    /// Plain-text table with CodeBLEU, exact match, ROUGE-L, compile and pass
    /// columns, plus mean coverage delta of passing samples.
    pub fn table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<12} {:<13} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}",
            "task", "context", "samples", "CodeBLEU", "XMatch", "Rouge", "Compile", "Pass", "CovDelta"
        );
        let fmt = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{:.2}", 100.0 * x));
        for task in Task::ALL {
            for mode in ContextMode::ALL {
                let Some(r) = self.row(task, mode) else { continue };
                let _ = writeln!(
                    s,
                    "{:<12} {:<13} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8} {:>8}",
                    task.as_str(),
                    mode.as_str(),
                    r.samples,
                    fmt(r.mean_codebleu()),
                    fmt(r.exact_match_rate()),
                    fmt(r.mean_rouge()),
                    r.compiled,
                    r.passed,
                    fmt(r.mean_coverage_delta()),
                );
            }
        }
        let _ = writeln!(s, "codebleu variant: {}", self.codebleu_variant);
        s
    }
}

/// Folds outcomes and scores into per-(task, context) rows. Inputs are sorted by
/// sample key first, so the result does not depend on their order.
pub fn aggregate(outcomes: &[RuntimeOutcome], scores: &[ScoredSample]) -> Result<EvalReport, MetricsError> {
    let mut by_key: BTreeMap<&SampleKey, &RuntimeOutcome> = BTreeMap::new();
    for o in outcomes {
        if by_key.insert(&o.key, o).is_some() {
            return Err(MetricsError::Duplicate(o.key.clone()));
        }
    }
    let mut score_by_key: BTreeMap<&SampleKey, &ScoredSample> = BTreeMap::new();
    for s in scores {
        if !by_key.contains_key(&s.key) {
            return Err(MetricsError::UnmatchedScore(s.key.clone()));
        }
        if score_by_key.insert(&s.key, s).is_some() {
            return Err(MetricsError::Duplicate(s.key.clone()));
        }
    }
    let mut report = EvalReport { codebleu_variant: "codebleu_lite".into(), rows: BTreeMap::new() };
    for (key, o) in by_key {
        let row = report.rows.entry(row_key(key.task, key.context_mode)).or_default();
        row.samples += 1;
        row.compiled += o.compiled as usize;
        row.passed += (o.compiled && o.passed) as usize;
        if o.passed {
            if let Some(d) = o.coverage_delta {
                row.coverage_samples += 1;
                row.coverage_delta_sum += d;
            }
        }
        if let Some(s) = score_by_key.get(key) {
            row.lexical_samples += 1;
            row.exact_matches += s.scores.exact_match as usize;
            row.rouge_sum += s.scores.rouge_l;
            row.codebleu_sum += s.scores.codebleu;
        }
    }
    Ok(report)
}
