//! Interpolated absolute-discount n-gram model.
//!
//! For a context `h` seen `T(h)` times with `N1(h)` distinct followers,
//!
//! ```text
//! P(w | h) = max(c(h, w) - D, 0) / T(h) + D * N1(h) / T(h) * P(w | h')
//! ```
//!
//! where `h'` drops the oldest token. Unseen contexts use `P(w | h')` unchanged and
//! the recursion bottoms out at the uniform distribution over the vocabulary, so
//! every probability is positive and every distribution sums to one (counts are
//! integers >= 1 and `0 < D < 1`).

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{pack_sequences, DocKind, PackedSequence, TrainingDocument};
use crate::tokenizer::{TokenId, CODETESTPAIR, EOS, FIRST_MERGE_ID, PAD};

pub const DEFAULT_ORDER: usize = 4;
pub const DEFAULT_DISCOUNT: f64 = 0.75;

#[derive(Debug, Error, PartialEq)]
pub enum LmError {
    #[error("model order must be at least 1, got {0}")]
    BadOrder(usize),
    #[error("discount must lie in (0, 1), got {0}")]
    BadDiscount(f64),
    #[error("training corpus contains no tokens")]
    EmptyCorpus,
    #[error("token {token} outside vocabulary of size {size}")]
    TokenOutOfRange { token: TokenId, size: usize },
    #[error("temperature must be positive, got {0}")]
    BadTemperature(f64),
    #[error("aligned and shuffled corpora hold different file sets")]
    FileSetMismatch,
    #[error("model file: {0}")]
    Format(String),
    #[error("no held-out pairs to evaluate")]
    NoHeldout,
}

#[derive(Debug, Clone, Default, PartialEq)]
struct ContextCounts {
    total: u64,
    followers: HashMap<TokenId, u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NGramModel {
    order: usize,
    discount: f64,
    vocab_size: usize,
    vocab_digest: String,
    /// `tables[k]` maps contexts of length `k` to follower counts.
    tables: Vec<HashMap<Vec<TokenId>, ContextCounts>>,
}

impl NGramModel {
    /// A model without counts: uniform over the vocabulary.
    pub fn uniform(vocab_size: usize, order: usize) -> Self {
        NGramModel {
            order: order.max(1),
            discount: DEFAULT_DISCOUNT,
            vocab_size,
            vocab_digest: String::new(),
            tables: vec![HashMap::new(); order.max(1)],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn discount(&self) -> f64 {
        self.discount
    }

    pub fn vocab_size(&self) -> usize {
        self.vocab_size
    }

    pub fn vocab_digest(&self) -> &str {
        &self.vocab_digest
    }

    pub fn set_vocab_digest(&mut self, digest: impl Into<String>) {
        self.vocab_digest = digest.into();
    }

    /// Raw count of `token` after `context` (context length < order).
    pub fn count(&self, context: &[TokenId], token: TokenId) -> u64 {
        self.tables.get(context.len()).and_then(|t| t.get(context)).and_then(|c| c.followers.get(&token)).copied().unwrap_or(0)
    }

    /// Number of distinct contexts of length `k` with counts.
    pub fn context_count(&self, k: usize) -> usize {
        self.tables.get(k).map_or(0, HashMap::len)
    }

    /// Seen contexts of length `k`, sorted.
    pub fn contexts(&self, k: usize) -> Vec<Vec<TokenId>> {
        let mut v: Vec<_> = self.tables.get(k).map(|t| t.keys().cloned().collect()).unwrap_or_default();
        v.sort();
        v
    }

    /// Drops all counts for one context, leaving lower orders untouched.
    pub fn forget_context(&mut self, context: &[TokenId]) {
        if let Some(t) = self.tables.get_mut(context.len()) {
            t.remove(context);
        }
    }

    fn history<'a>(&self, context: &'a [TokenId]) -> &'a [TokenId] {
        let keep = context.len().min(self.order - 1);
        &context[context.len() - keep..]
    }

    pub fn prob(&self, context: &[TokenId], token: TokenId) -> f64 {
        let h = self.history(context);
        let mut p = 1.0 / self.vocab_size as f64;
        for k in 0..=h.len() {
            if let Some(c) = self.tables[k].get(&h[h.len() - k..]) {
                let t = c.total as f64;
                let cw = c.followers.get(&token).copied().unwrap_or(0) as f64;
                p = (cw - self.discount).max(0.0) / t + self.discount * c.followers.len() as f64 / t * p;
            }
        }
        p
    }

    /// Full next-token distribution after `context`.
    pub fn distribution(&self, context: &[TokenId]) -> Vec<f64> {
        let h = self.history(context);
        let mut p = vec![1.0 / self.vocab_size as f64; self.vocab_size];
        for k in 0..=h.len() {
            if let Some(c) = self.tables[k].get(&h[h.len() - k..]) {
                let t = c.total as f64;
                let backoff = self.discount * c.followers.len() as f64 / t;
                for x in p.iter_mut() {
                    *x *= backoff;
                }
                for (&w, &cw) in &c.followers {
                    p[w as usize] += (cw as f64 - self.discount).max(0.0) / t;
                }
            }
        }
        p
    }

    fn to_file(&self) -> ModelFile {
        let tables = self
            .tables
            .iter()
            .map(|t| {
                let mut rows: Vec<ContextRow> = t
                    .iter()
                    .map(|(ctx, c)| {
                        let followers: BTreeMap<TokenId, u64> = c.followers.iter().map(|(&k, &v)| (k, v)).collect();
                        ContextRow { context: ctx.clone(), followers: followers.into_iter().collect() }
                    })
                    .collect();
                rows.sort_by(|a, b| a.context.cmp(&b.context));
                rows
            })
            .collect();
        ModelFile {
            format: MODEL_FORMAT.to_string(),
            order: self.order,
            discount: self.discount,
            vocab_size: self.vocab_size,
            vocab_digest: self.vocab_digest.clone(),
            tables,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("model serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, LmError> {
        let f: ModelFile = serde_json::from_str(s).map_err(|e| LmError::Format(e.to_string()))?;
        if f.format != MODEL_FORMAT {
            return Err(LmError::Format(format!("unsupported format `{}`", f.format)));
        }
        if f.tables.len() != f.order {
            return Err(LmError::Format("table count does not match order".into()));
        }
        let tables = f
            .tables
            .into_iter()
            .map(|rows| {
                rows.into_iter()
                    .map(|r| {
                        let total = r.followers.iter().map(|(_, n)| n).sum();
                        (r.context, ContextCounts { total, followers: r.followers.into_iter().collect() })
                    })
                    .collect()
            })
            .collect();
        Ok(NGramModel { order: f.order, discount: f.discount, vocab_size: f.vocab_size, vocab_digest: f.vocab_digest, tables })
    }
}

const MODEL_FORMAT: &str = "pairforge-ngram v1";

#[derive(Serialize, Deserialize)]
struct ContextRow {
    context: Vec<TokenId>,
    followers: Vec<(TokenId, u64)>,
}

#[derive(Serialize, Deserialize)]
struct ModelFile {
    format: String,
    order: usize,
    discount: f64,
    vocab_size: usize,
    vocab_digest: String,
    tables: Vec<Vec<ContextRow>>,
}

type Tables = Vec<HashMap<Vec<TokenId>, ContextCounts>>;

fn count_sequence(tables: &mut Tables, tokens: &[TokenId], order: usize) {
    for i in 0..tokens.len() {
        let w = tokens[i];
        for k in 0..order.min(i + 1) {
            let c = tables[k].entry(tokens[i - k..i].to_vec()).or_default();
            c.total += 1;
            *c.followers.entry(w).or_default() += 1;
        }
    }
}

fn merge_tables(mut a: Tables, b: Tables) -> Tables {
    for (ta, tb) in a.iter_mut().zip(b) {
        for (ctx, cb) in tb {
            let ca = ta.entry(ctx).or_default();
            ca.total += cb.total;
            for (w, n) in cb.followers {
                *ca.followers.entry(w).or_default() += n;
            }
        }
    }
    a
}

/// Counts every n-gram (orders 1..=order) inside each sequence's non-PAD tokens.
pub fn train_lm(seqs: &[PackedSequence], vocab_size: usize, order: usize, discount: f64) -> Result<NGramModel, LmError> {
    let streams: Vec<&[TokenId]> = seqs
        .iter()
        .map(|s| {
            let end = s.token_ids.iter().rposition(|&t| t != PAD).map_or(0, |i| i + 1);
            &s.token_ids[..end]
        })
        .collect();
    train_on_streams(&streams, vocab_size, order, discount)
}

pub fn train_on_streams(streams: &[&[TokenId]], vocab_size: usize, order: usize, discount: f64) -> Result<NGramModel, LmError> {
    if order < 1 {
        return Err(LmError::BadOrder(order));
    }
    if !(discount > 0.0 && discount < 1.0) {
        return Err(LmError::BadDiscount(discount));
    }
    if streams.iter().all(|s| s.is_empty()) {
        return Err(LmError::EmptyCorpus);
    }
    if let Some(&token) = streams.iter().flat_map(|s| s.iter()).find(|&&t| t as usize >= vocab_size) {
        return Err(LmError::TokenOutOfRange { token, size: vocab_size });
    }
    let tables = streams
        .par_iter()
        .fold(
            || vec![HashMap::new(); order],
            |mut t, s| {
                count_sequence(&mut t, s, order);
                t
            },
        )
        .reduce(|| vec![HashMap::new(); order], merge_tables);
    Ok(NGramModel { order, discount, vocab_size, vocab_digest: String::new(), tables })
}

/// `exp(-mean ln P(token | prefix + preceding tokens))`.
pub fn perplexity(m: &NGramModel, toks: &[TokenId], prefix: &[TokenId]) -> f64 {
    let (sum, n) = log_prob_sum(m, toks, prefix);
    (-sum / n as f64).exp()
}

/// Sum of natural-log probabilities of `toks` and their count.
pub fn log_prob_sum(m: &NGramModel, toks: &[TokenId], prefix: &[TokenId]) -> (f64, usize) {
    let mut ctx: Vec<TokenId> = prefix.to_vec();
    let mut sum = 0.0;
    for &t in toks {
        sum += m.prob(&ctx, t).ln();
        ctx.push(t);
    }
    (sum, toks.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopCriterion {
    OnEos,
    OnMethodEnd,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SampleConfig {
    pub temperature: f64,
    pub max_tokens: usize,
    pub num_samples: usize,
    pub seed: u64,
    pub stop: StopCriterion,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { temperature: 0.2, max_tokens: 256, num_samples: 10, seed: 0, stop: StopCriterion::OnEos }
    }
}

/// `p^(1/T)` renormalized, computed in log space.
pub fn apply_temperature(probs: &[f64], temperature: f64) -> Vec<f64> {
    let logits: Vec<f64> = probs.iter().map(|&p| if p > 0.0 { p.ln() / temperature } else { f64::NEG_INFINITY }).collect();
    let max = logits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let w: Vec<f64> = logits.iter().map(|&l| (l - max).exp()).collect();
    let z: f64 = w.iter().sum();
    w.into_iter().map(|x| x / z).collect()
}

pub fn entropy(probs: &[f64]) -> f64 {
    probs.iter().filter(|&&p| p > 0.0).map(|&p| -p * p.ln()).sum()
}

/// Index of the largest probability; ties go to the lowest id.
pub fn argmax(probs: &[f64]) -> TokenId {
    let mut best = 0;
    for (i, &p) in probs.iter().enumerate() {
        if p > probs[best] {
            best = i;
        }
    }
    best as TokenId
}

fn draw(weights: &[f64], rng: &mut ChaCha8Rng) -> TokenId {
    let u: f64 = rng.gen::<f64>();
    let mut acc = 0.0;
    for (i, &w) in weights.iter().enumerate() {
        acc += w;
        if u < acc {
            return i as TokenId;
        }
    }
    // rounding left `u` above the final partial sum
    weights.iter().rposition(|&w| w > 0.0).unwrap_or(0) as TokenId
}

/// Draws `cfg.num_samples` continuations of `prompt`.
///
/// Sample `k` uses its own generator seeded with `cfg.seed + k`. Generation stops at
/// `max_tokens`, at EOS (not included) or, for [`StopCriterion::OnMethodEnd`], when
/// `method_end` reports that the generated tokens hold a complete method.
/// Stop predicate over the tokens generated so far.
pub type MethodEndFn<'a> = dyn Fn(&[TokenId]) -> bool + Sync + 'a;

pub fn sample(
    m: &NGramModel,
    prompt: &[TokenId],
    cfg: &SampleConfig,
    method_end: Option<&MethodEndFn<'_>>,
) -> Result<Vec<Vec<TokenId>>, LmError> {
    if !(cfg.temperature > 0.0) {
        return Err(LmError::BadTemperature(cfg.temperature));
    }
    let out = (0..cfg.num_samples as u64)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(k));
            let mut ctx = prompt.to_vec();
            let mut generated = Vec::new();
            for _ in 0..cfg.max_tokens {
                let weights = apply_temperature(&m.distribution(&ctx), cfg.temperature);
                let t = draw(&weights, &mut rng);
                if t == EOS {
                    break;
                }
                generated.push(t);
                ctx.push(t);
                if cfg.stop == StopCriterion::OnMethodEnd && method_end.is_some_and(|f| f(&generated)) {
                    break;
                }
            }
            generated
        })
        .collect();
    Ok(out)
}

/// Argmax continuation, with the same stopping rules as [`sample`] under [`StopCriterion::OnEos`].
pub fn greedy(m: &NGramModel, prompt: &[TokenId], max_tokens: usize) -> Vec<TokenId> {
    let mut ctx = prompt.to_vec();
    let mut out = Vec::new();
    for _ in 0..max_tokens {
        let t = argmax(&m.distribution(&ctx));
        if t == EOS {
            break;
        }
        out.push(t);
        ctx.push(t);
    }
    out
}

/// A held-out code/test pair as token sequences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeldoutPair {
    pub code: Vec<TokenId>,
    pub test: Vec<TokenId>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SignalConfig {
    pub order: usize,
    pub discount: f64,
    pub vocab_size: usize,
    pub seq_len: usize,
    pub seeds: Vec<u64>,
}

impl Default for SignalConfig {
    fn default() -> Self {
        SignalConfig {
            order: DEFAULT_ORDER,
            discount: DEFAULT_DISCOUNT,
            vocab_size: FIRST_MERGE_ID as usize,
            seq_len: 128,
            seeds: (0..5).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedResult {
    pub seed: u64,
    pub aligned_ppl: f64,
    pub shuffled_ppl: f64,
    /// `shuffled_ppl - aligned_ppl`
    pub delta: f64,
    /// `delta / shuffled_ppl`
    pub relative_delta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignalReport {
    pub config: SignalConfig,
    /// Summed over seeds when each seed has its own held-out set.
    pub heldout_pairs: usize,
    pub heldout_test_tokens: usize,
    pub per_seed: Vec<SeedResult>,
    pub mean_aligned_ppl: f64,
    pub mean_shuffled_ppl: f64,
    pub mean_delta: f64,
    pub mean_relative_delta: f64,
    pub seeds_aligned_better: usize,
}

fn file_sets(docs: &[TrainingDocument]) -> (Vec<&str>, Vec<&str>) {
    let mut code: Vec<&str> = docs.iter().filter_map(|d| d.provenance.code_file_id.as_deref()).collect();
    let mut test: Vec<&str> = docs.iter().filter_map(|d| d.provenance.test_file_id.as_deref()).collect();
    code.sort_unstable();
    test.sort_unstable();
    (code, test)
}

/// Perplexity of held-out test tokens conditioned on `code + separator`, for a model
/// trained on the aligned corpus versus one trained on the pairing-broken corpus.
pub fn alignment_signal_experiment(
    aligned: &[TrainingDocument],
    shuffled: &[TrainingDocument],
    heldout: &[HeldoutPair],
    cfg: &SignalConfig,
) -> Result<SignalReport, LmError> {
    if file_sets(aligned) != file_sets(shuffled) {
        return Err(LmError::FileSetMismatch);
    }
    if heldout.is_empty() {
        return Err(LmError::NoHeldout);
    }
    let eval = |m: &NGramModel| {
        let (sum, n) = heldout
            .iter()
            .map(|p| {
                let mut prefix = p.code.clone();
                prefix.push(CODETESTPAIR);
                log_prob_sum(m, &p.test, &prefix)
            })
            .fold((0.0, 0usize), |a, b| (a.0 + b.0, a.1 + b.1));
        (-sum / n as f64).exp()
    };
    let per_seed = cfg
        .seeds
        .iter()
        .map(|&seed| {
            let train = |docs: &[TrainingDocument]| -> Result<NGramModel, LmError> {
                let seqs = pack_sequences(docs, cfg.seq_len, seed).map_err(|e| LmError::Format(e.to_string()))?;
                train_lm(&seqs, cfg.vocab_size, cfg.order, cfg.discount)
            };
            let aligned_ppl = eval(&train(aligned)?);
            let shuffled_ppl = eval(&train(shuffled)?);
            let delta = shuffled_ppl - aligned_ppl;
            Ok(SeedResult { seed, aligned_ppl, shuffled_ppl, delta, relative_delta: delta / shuffled_ppl })
        })
        .collect::<Result<Vec<_>, LmError>>()?;
    Ok(SignalReport::from_seeds(cfg, heldout.len(), heldout.iter().map(|p| p.test.len()).sum(), per_seed))
}

impl SignalReport {
    /// Summary over per-seed results.
    pub fn from_seeds(cfg: &SignalConfig, heldout_pairs: usize, heldout_test_tokens: usize, per_seed: Vec<SeedResult>) -> Self {
        let n = per_seed.len().max(1) as f64;
        let mean = |f: fn(&SeedResult) -> f64| per_seed.iter().map(f).sum::<f64>() / n;
        SignalReport {
            config: cfg.clone(),
            heldout_pairs,
            heldout_test_tokens,
            mean_aligned_ppl: mean(|r| r.aligned_ppl),
            mean_shuffled_ppl: mean(|r| r.shuffled_ppl),
            mean_delta: mean(|r| r.delta),
            mean_relative_delta: mean(|r| r.relative_delta),
            seeds_aligned_better: per_seed.iter().filter(|r| r.aligned_ppl < r.shuffled_ppl).count(),
            per_seed,
        }
    }
}

/// Re-pairs the test halves of paired documents by a seeded cyclic shift, so every
/// test file follows some other code file. The file set is unchanged.
pub fn derange_pairs(docs: &[TrainingDocument], seed: u64) -> Vec<TrainingDocument> {
    let paired: Vec<usize> = (0..docs.len()).filter(|&i| docs[i].kind == DocKind::Paired).collect();
    let mut out = docs.to_vec();
    if paired.len() < 2 {
        return out;
    }
    let shift = ChaCha8Rng::seed_from_u64(seed).gen_range(1..paired.len());
    let split = |d: &TrainingDocument| {
        let s = d.separator_position().expect("paired document has a separator");
        (d.token_ids[..s].to_vec(), d.token_ids[s + 1..].to_vec())
    };
    for (j, &i) in paired.iter().enumerate() {
        let donor = &docs[paired[(j + shift) % paired.len()]];
        let (code, _) = split(&docs[i]);
        let (_, test) = split(donor);
        out[i] = TrainingDocument::paired(
            &docs[i].provenance.repo_id,
            docs[i].provenance.code_file_id.as_deref().unwrap_or_default(),
            donor.provenance.test_file_id.as_deref().unwrap_or_default(),
            &code,
            &test,
        );
    }
    out
}
