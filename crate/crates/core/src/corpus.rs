//! Training documents, token-length statistics and fixed-length packing.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::io::{self, Read, Write};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::align::{is_test_file, CodeTestPair};
use crate::ingest::SourceFile;
use crate::tokenizer::{TokenId, Vocabulary, CODETESTPAIR, EOS, PAD};

pub const DEFAULT_CONTEXT_LENGTH: usize = 8192;
/// Short-context reference point used in length reports.
pub const SHORT_CONTEXT_LENGTH: usize = 2048;

const CORPUS_MAGIC: &[u8; 8] = b"PFCORPUS";
const INDEX_MAGIC: &[u8; 8] = b"PFINDEX\0";
const CORPUS_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("pair {pair_id} references file `{file_id}` that is not in the (filtered, deduplicated) file set")]
    MissingFile { pair_id: String, file_id: String },
    #[error("file `{0}` appears in more than one pair")]
    FileInTwoPairs(String),
    #[error("context length must be positive")]
    ZeroLength,
    #[error("corpus file: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DocKind {
    Paired,
    CodeOnly,
    TestOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub repo_id: String,
    pub code_file_id: Option<String>,
    pub test_file_id: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrainingDocument {
    pub kind: DocKind,
    pub token_ids: Vec<TokenId>,
    pub provenance: Provenance,
}

impl TrainingDocument {
    /// Code tokens, the separator, then test tokens.
    pub fn paired(repo_id: &str, code_id: &str, test_id: &str, code: &[TokenId], test: &[TokenId]) -> Self {
        let mut token_ids = Vec::with_capacity(code.len() + test.len() + 1);
        token_ids.extend_from_slice(code);
        token_ids.push(CODETESTPAIR);
        token_ids.extend_from_slice(test);
        TrainingDocument {
            kind: DocKind::Paired,
            token_ids,
            provenance: Provenance {
                repo_id: repo_id.to_string(),
                code_file_id: Some(code_id.to_string()),
                test_file_id: Some(test_id.to_string()),
            },
        }
    }

    pub fn single(kind: DocKind, repo_id: &str, file_id: &str, tokens: Vec<TokenId>) -> Self {
        let (code_file_id, test_file_id) = match kind {
            DocKind::TestOnly => (None, Some(file_id.to_string())),
            _ => (Some(file_id.to_string()), None),
        };
        TrainingDocument { kind, token_ids: tokens, provenance: Provenance { repo_id: repo_id.to_string(), code_file_id, test_file_id } }
    }

    /// Position of the single separator of a paired document.
    pub fn separator_position(&self) -> Option<usize> {
        self.token_ids.iter().position(|&t| t == CODETESTPAIR)
    }

    /// Code-before-separator-before-test: exactly one separator, and it splits
    /// the document into the given code and test encodings.
    pub fn has_paired_order(&self, code: &[TokenId], test: &[TokenId]) -> bool {
        let seps = self.token_ids.iter().filter(|&&t| t == CODETESTPAIR).count();
        seps == 1
            && self.token_ids.len() == code.len() + 1 + test.len()
            && self.token_ids[..code.len()] == *code
            && self.token_ids[code.len()] == CODETESTPAIR
            && self.token_ids[code.len() + 1..] == *test
    }
}

/// One paired document per pair, then one unpaired document per remaining file.
pub fn build_documents(files: &[SourceFile], pairs: &[CodeTestPair], vocab: &Vocabulary) -> Result<Vec<TrainingDocument>, CorpusError> {
    let by_id: HashMap<&str, &SourceFile> = files.iter().map(|f| (f.file_id.as_str(), f)).collect();
    let mut paired_ids: HashSet<&str> = HashSet::new();
    let mut resolved = Vec::with_capacity(pairs.len());
    for p in pairs {
        let get = |id: &str| {
            by_id.get(id).copied().ok_or_else(|| CorpusError::MissingFile { pair_id: p.pair_id.clone(), file_id: id.to_string() })
        };
        let (code, test) = (get(&p.code_file_id)?, get(&p.test_file_id)?);
        for id in [&p.code_file_id, &p.test_file_id] {
            if !paired_ids.insert(id.as_str()) {
                return Err(CorpusError::FileInTwoPairs(id.clone()));
            }
        }
        resolved.push((code, test));
    }
    let mut docs: Vec<TrainingDocument> = resolved
        .par_iter()
        .map(|(code, test)| {
            TrainingDocument::paired(
                &code.repo_id,
                &code.file_id,
                &test.file_id,
                &vocab.encode(&code.content),
                &vocab.encode(&test.content),
            )
        })
        .collect();
    let mut unpaired: Vec<&SourceFile> = files.iter().filter(|f| !paired_ids.contains(f.file_id.as_str())).collect();
    unpaired.sort_by(|a, b| a.file_id.cmp(&b.file_id));
    docs.par_extend(unpaired.par_iter().map(|f| {
        let kind = if is_test_file(f) { DocKind::TestOnly } else { DocKind::CodeOnly };
        TrainingDocument::single(kind, &f.repo_id, &f.file_id, vocab.encode(&f.content))
    }));
    Ok(docs)
}

/// Exact length distribution of a set of documents.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthStats {
    pub count: usize,
    pub total_tokens: u64,
    /// token length -> number of documents
    pub histogram: BTreeMap<usize, usize>,
}

impl LengthStats {
    pub fn from_lengths(lengths: impl IntoIterator<Item = usize>) -> Self {
        let mut s = LengthStats::default();
        for n in lengths {
            s.add(n);
        }
        s
    }

    fn add(&mut self, n: usize) {
        self.count += 1;
        self.total_tokens += n as u64;
        *self.histogram.entry(n).or_default() += 1;
    }

    /// Fraction of documents with at most `len` tokens; 1 for an empty set.
    pub fn fraction_within(&self, len: usize) -> f64 {
        if self.count == 0 {
            return 1.0;
        }
        let within: usize = self.histogram.range(..=len).map(|(_, c)| c).sum();
        within as f64 / self.count as f64
    }

    /// `(length, cumulative fraction)` at each distinct length.
    pub fn cdf(&self) -> Vec<(usize, f64)> {
        let mut acc = 0usize;
        self.histogram
            .iter()
            .map(|(&len, &c)| {
                acc += c;
                (len, acc as f64 / self.count as f64)
            })
            .collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusStats {
    pub all: LengthStats,
    pub per_kind: BTreeMap<DocKind, LengthStats>,
}

impl CorpusStats {
    pub fn paired(&self) -> LengthStats {
        self.per_kind.get(&DocKind::Paired).cloned().unwrap_or_default()
    }
}

pub fn compute_stats(docs: &[TrainingDocument]) -> CorpusStats {
    let mut stats = CorpusStats::default();
    for d in docs {
        stats.all.add(d.token_ids.len());
        stats.per_kind.entry(d.kind).or_default().add(d.token_ids.len());
    }
    stats
}

/// Summary written by the `stats` stage.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub documents: usize,
    pub per_kind_counts: BTreeMap<DocKind, usize>,
    pub paired_fraction_within_2048: f64,
    pub paired_fraction_within_8192: f64,
    pub all_fraction_within_2048: f64,
    pub all_fraction_within_8192: f64,
    pub paired_cdf: Vec<(usize, f64)>,
    /// Full-scale reference values for the paired subset; informational only.
    pub reference_paired_within_2048: f64,
    pub reference_paired_within_8192: f64,
}

impl StatsReport {
    pub fn new(stats: &CorpusStats) -> Self {
        let paired = stats.paired();
        StatsReport {
            documents: stats.all.count,
            per_kind_counts: stats.per_kind.iter().map(|(k, s)| (*k, s.count)).collect(),
            paired_fraction_within_2048: paired.fraction_within(SHORT_CONTEXT_LENGTH),
            paired_fraction_within_8192: paired.fraction_within(DEFAULT_CONTEXT_LENGTH),
            all_fraction_within_2048: stats.all.fraction_within(SHORT_CONTEXT_LENGTH),
            all_fraction_within_8192: stats.all.fraction_within(DEFAULT_CONTEXT_LENGTH),
            paired_cdf: paired.cdf(),
            reference_paired_within_2048: 0.35,
            reference_paired_within_8192: 0.82,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackedSequence {
    pub token_ids: Vec<TokenId>,
    /// Offsets within this sequence at which a document starts.
    pub doc_boundary_offsets: Vec<usize>,
}

impl PackedSequence {
    pub fn non_pad(&self) -> impl Iterator<Item = &TokenId> {
        self.token_ids.iter().filter(|&&t| t != PAD)
    }
}

/// Shuffles documents by `seed`, joins them with an EOS after each one and cuts the
/// stream into windows of exactly `len` tokens, PAD-filling only the last window.
///
/// A document longer than `len` is therefore split on a grid whose offset is its
/// (seeded, shuffled) position in the stream modulo `len`.
pub fn pack_sequences(docs: &[TrainingDocument], len: usize, seed: u64) -> Result<Vec<PackedSequence>, CorpusError> {
    if len == 0 {
        return Err(CorpusError::ZeroLength);
    }
    let mut order: Vec<usize> = (0..docs.len()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));

    let fresh = || PackedSequence { token_ids: Vec::with_capacity(len), doc_boundary_offsets: Vec::new() };
    let mut out = Vec::new();
    let mut cur = fresh();
    for i in order {
        let tokens = docs[i].token_ids.iter().copied().chain(std::iter::once(EOS));
        for (k, t) in tokens.enumerate() {
            if cur.token_ids.len() == len {
                out.push(std::mem::replace(&mut cur, fresh()));
            }
            if k == 0 {
                cur.doc_boundary_offsets.push(cur.token_ids.len());
            }
            cur.token_ids.push(t);
        }
    }
    if !cur.token_ids.is_empty() {
        cur.token_ids.resize(len, PAD);
        out.push(cur);
    }
    Ok(out)
}

/// Header of the binary corpus file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusHeader {
    pub seq_len: u32,
    /// SHA-256 of the vocabulary text, hex.
    pub vocab_digest: String,
}

/// Layout (all integers little-endian):
/// `PFCORPUS`, version u32, seq_len u32, vocab digest (32 raw bytes), sequence count u64;
/// then `count * seq_len` u32 token ids; then `PFINDEX\0`, document count u64 and one
/// u64 global token offset per document start.
pub fn write_corpus<W: Write>(mut w: W, header: &CorpusHeader, seqs: &[PackedSequence]) -> Result<(), CorpusError> {
    let digest = hex::decode(&header.vocab_digest).map_err(|e| CorpusError::Format(e.to_string()))?;
    if digest.len() != 32 {
        return Err(CorpusError::Format("vocabulary digest must be 32 bytes".into()));
    }
    w.write_all(CORPUS_MAGIC)?;
    w.write_all(&CORPUS_VERSION.to_le_bytes())?;
    w.write_all(&header.seq_len.to_le_bytes())?;
    w.write_all(&digest)?;
    w.write_all(&(seqs.len() as u64).to_le_bytes())?;
    let mut offsets = Vec::new();
    for (si, s) in seqs.iter().enumerate() {
        if s.token_ids.len() != header.seq_len as usize {
            return Err(CorpusError::Format(format!("sequence {si} has length {}", s.token_ids.len())));
        }
        for t in &s.token_ids {
            w.write_all(&t.to_le_bytes())?;
        }
        offsets.extend(s.doc_boundary_offsets.iter().map(|&o| (si * s.token_ids.len() + o) as u64));
    }
    w.write_all(INDEX_MAGIC)?;
    w.write_all(&(offsets.len() as u64).to_le_bytes())?;
    for o in offsets {
        w.write_all(&o.to_le_bytes())?;
    }
    Ok(())
}

pub fn read_corpus<R: Read>(mut r: R) -> Result<(CorpusHeader, Vec<PackedSequence>), CorpusError> {
    let mut buf = Vec::new();
    r.read_to_end(&mut buf)?;
    let mut pos = 0usize;
    let mut take = |n: usize| -> Result<&[u8], CorpusError> {
        let s = buf.get(pos..pos + n).ok_or_else(|| CorpusError::Format("truncated file".into()))?;
        pos += n;
        Ok(s)
    };
    if take(8)? != CORPUS_MAGIC {
        return Err(CorpusError::Format("bad magic".into()));
    }
    let version = u32::from_le_bytes(take(4)?.try_into().unwrap());
    if version != CORPUS_VERSION {
        return Err(CorpusError::Format(format!("unsupported version {version}")));
    }
    let seq_len = u32::from_le_bytes(take(4)?.try_into().unwrap());
    let vocab_digest = hex::encode(take(32)?);
    let count = u64::from_le_bytes(take(8)?.try_into().unwrap()) as usize;
    let mut seqs = Vec::with_capacity(count);
    for _ in 0..count {
        let raw = take(seq_len as usize * 4)?;
        let token_ids = raw.chunks_exact(4).map(|c| u32::from_le_bytes(c.try_into().unwrap())).collect();
        seqs.push(PackedSequence { token_ids, doc_boundary_offsets: Vec::new() });
    }
    if take(8)? != INDEX_MAGIC {
        return Err(CorpusError::Format("missing document index".into()));
    }
    let n_docs = u64::from_le_bytes(take(8)?.try_into().unwrap()) as usize;
    for _ in 0..n_docs {
        let o = u64::from_le_bytes(take(8)?.try_into().unwrap()) as usize;
        let (si, off) = (o / seq_len as usize, o % seq_len as usize);
        seqs.get_mut(si).ok_or_else(|| CorpusError::Format("document offset past end".into()))?.doc_boundary_offsets.push(off);
    }
    Ok((CorpusHeader { seq_len, vocab_digest }, seqs))
}
