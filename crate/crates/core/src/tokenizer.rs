//! Byte-level BPE with reserved special tokens.
//!
//! Ids `0..256` are the raw bytes, so every byte sequence is encodable. Ids
//! `256..260` are the specials, fixed regardless of vocabulary size. Learned merges
//! follow from id 260 on. Encoding never emits a special id: a literal
//! `<|codetestpair|>` in the input is encoded as ordinary bytes.
//!
//! Text is pre-split into chunks before training and encoding, and merges never
//! cross a chunk boundary:
//! - a run of word bytes (ASCII alphanumerics, `_`, any byte >= 0x80), taking one
//!   preceding space if there is one;
//! - a run of whitespace;
//! - a run of other punctuation bytes.
//!
//! Chunks longer than [`MAX_CHUNK`] bytes are cut into `MAX_CHUNK` pieces.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};
use std::fmt::Write as _;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::ingest::SourceFile;

pub type TokenId = u32;

pub const PAD: TokenId = 256;
pub const BOS: TokenId = 257;
pub const EOS: TokenId = 258;
pub const CODETESTPAIR: TokenId = 259;
pub const FIRST_MERGE_ID: TokenId = 260;
pub const SPECIALS: [(TokenId, &str); 4] = [(PAD, "<|pad|>"), (BOS, "<|bos|>"), (EOS, "<|endoftext|>"), (CODETESTPAIR, "<|codetestpair|>")];
pub const SEPARATOR_TEXT: &str = "<|codetestpair|>";
pub const MAX_CHUNK: usize = 64;

const FORMAT_HEADER: &str = "pairforge-vocab v1";

#[derive(Debug, Error, PartialEq)]
pub enum TokenizerError {
    #[error("target vocabulary size {0} must exceed {FIRST_MERGE_ID} (bytes plus specials)")]
    TargetTooSmall(usize),
    #[error("training corpus is empty")]
    EmptyCorpus,
    #[error("token id {id} out of range for vocabulary of size {size}")]
    IdOutOfRange { id: TokenId, size: usize },
    #[error("malformed vocabulary file: {0}")]
    Format(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    pieces: Vec<Vec<u8>>,
    piece_ids: HashMap<Vec<u8>, TokenId>,
    /// Merge rules in rank order: `(left, right) -> result`.
    merges: Vec<((TokenId, TokenId), TokenId)>,
    merge_rank: HashMap<(TokenId, TokenId), (usize, TokenId)>,
}

impl Vocabulary {
    /// Bytes and specials only.
    pub fn base() -> Self {
        let mut pieces: Vec<Vec<u8>> = (0..=255u8).map(|b| vec![b]).collect();
        for (_, text) in SPECIALS {
            pieces.push(text.as_bytes().to_vec());
        }
        // Specials share bytes with their literal spelling; the inverse map only
        // covers byte and merge pieces so that raw text never resolves to a special.
        let piece_ids = (0..=255u8).map(|b| (vec![b], b as TokenId)).collect();
        Vocabulary { pieces, piece_ids, merges: Vec::new(), merge_rank: HashMap::new() }
    }

    pub fn size(&self) -> usize {
        self.pieces.len()
    }

    pub fn merge_count(&self) -> usize {
        self.merges.len()
    }

    pub fn piece(&self, id: TokenId) -> Option<&[u8]> {
        self.pieces.get(id as usize).map(Vec::as_slice)
    }

    /// Id of a non-special piece with exactly these bytes.
    pub fn id_of(&self, bytes: &[u8]) -> Option<TokenId> {
        self.piece_ids.get(bytes).copied()
    }

    pub fn is_special(id: TokenId) -> bool {
        (PAD..FIRST_MERGE_ID).contains(&id)
    }

    fn push_merge(&mut self, pair: (TokenId, TokenId)) -> TokenId {
        let mut bytes = self.pieces[pair.0 as usize].clone();
        bytes.extend_from_slice(&self.pieces[pair.1 as usize]);
        let id = match self.piece_ids.get(&bytes) {
            Some(&id) => id,
            None => {
                let id = self.pieces.len() as TokenId;
                self.piece_ids.insert(bytes.clone(), id);
                self.pieces.push(bytes);
                id
            }
        };
        self.merge_rank.insert(pair, (self.merges.len(), id));
        self.merges.push((pair, id));
        id
    }

    pub fn encode(&self, text: &str) -> Vec<TokenId> {
        self.encode_bytes(text.as_bytes())
    }

    pub fn encode_bytes(&self, bytes: &[u8]) -> Vec<TokenId> {
        let mut out = Vec::with_capacity(bytes.len() / 2);
        for chunk in pretokenize(bytes) {
            let mut symbols: Vec<TokenId> = chunk.iter().map(|&b| b as TokenId).collect();
            self.apply_merges(&mut symbols);
            out.extend(symbols);
        }
        out
    }

    fn apply_merges(&self, symbols: &mut Vec<TokenId>) {
        while symbols.len() > 1 {
            let best = symbols
                .windows(2)
                .filter_map(|w| self.merge_rank.get(&(w[0], w[1])).map(|&(rank, id)| (rank, (w[0], w[1]), id)))
                .min_by_key(|&(rank, _, _)| rank);
            let Some((_, pair, id)) = best else { break };
            merge_in_place(symbols, pair, id);
        }
    }

    pub fn decode_bytes(&self, ids: &[TokenId]) -> Result<Vec<u8>, TokenizerError> {
        let mut out = Vec::new();
        for &id in ids {
            let piece = self.piece(id).ok_or(TokenizerError::IdOutOfRange { id, size: self.size() })?;
            out.extend_from_slice(piece);
        }
        Ok(out)
    }

    /// Specials render as their `<|...|>` spelling; invalid UTF-8 is replaced.
    pub fn decode(&self, ids: &[TokenId]) -> Result<String, TokenizerError> {
        let bytes = self.decode_bytes(ids)?;
        Ok(match String::from_utf8(bytes) {
            Ok(s) => s,
            Err(e) => String::from_utf8_lossy(e.as_bytes()).into_owned(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{FORMAT_HEADER}").unwrap();
        let specials: Vec<String> = SPECIALS.iter().map(|(id, text)| format!("{id}={text}")).collect();
        writeln!(s, "specials {}", specials.join(" ")).unwrap();
        writeln!(s, "pieces {}", self.pieces.len()).unwrap();
        writeln!(s, "merges {}", self.merges.len()).unwrap();
        for p in &self.pieces {
            writeln!(s, "{}", hex::encode(p)).unwrap();
        }
        for ((l, r), id) in &self.merges {
            writeln!(s, "{l} {r} {id}").unwrap();
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self, TokenizerError> {
        let bad = |m: &str| TokenizerError::Format(m.to_string());
        let mut lines = text.lines();
        if lines.next() != Some(FORMAT_HEADER) {
            return Err(bad("missing header"));
        }
        let expected_specials: Vec<String> = SPECIALS.iter().map(|(id, t)| format!("{id}={t}")).collect();
        match lines.next().and_then(|l| l.strip_prefix("specials ")) {
            Some(rest) if rest.split(' ').eq(expected_specials.iter().map(String::as_str)) => {}
            _ => return Err(bad("special token table does not match")),
        }
        let count = |l: Option<&str>, key: &str| -> Result<usize, TokenizerError> {
            l.and_then(|l| l.strip_prefix(key))
                .and_then(|n| n.trim().parse().ok())
                .ok_or_else(|| bad(&format!("missing `{}` count", key.trim())))
        };
        let n_pieces = count(lines.next(), "pieces ")?;
        let n_merges = count(lines.next(), "merges ")?;
        let mut v = Vocabulary::base();
        for i in 0..n_pieces {
            let line = lines.next().ok_or_else(|| bad("truncated piece list"))?;
            let bytes = hex::decode(line).map_err(|e| bad(&e.to_string()))?;
            if i < v.pieces.len() {
                if v.pieces[i] != bytes {
                    return Err(bad(&format!("base piece {i} differs")));
                }
            } else {
                v.piece_ids.insert(bytes.clone(), i as TokenId);
                v.pieces.push(bytes);
            }
        }
        for _ in 0..n_merges {
            let line = lines.next().ok_or_else(|| bad("truncated merge list"))?;
            let nums: Vec<TokenId> = line.split(' ').map(|t| t.parse().map_err(|_| bad("bad merge line"))).collect::<Result<_, _>>()?;
            let [l, r, id] = nums[..] else { return Err(bad("bad merge line")) };
            if (id as usize) >= v.pieces.len() || (l as usize) >= v.pieces.len() || (r as usize) >= v.pieces.len() {
                return Err(bad("merge references unknown piece"));
            }
            v.merge_rank.insert((l, r), (v.merges.len(), id));
            v.merges.push(((l, r), id));
        }
        Ok(v)
    }

    /// SHA-256 of the serialized form, hex encoded.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.to_text().as_bytes()))
    }
}

fn merge_in_place(symbols: &mut Vec<TokenId>, pair: (TokenId, TokenId), id: TokenId) {
    let mut w = 0;
    let mut r = 0;
    while r < symbols.len() {
        if r + 1 < symbols.len() && symbols[r] == pair.0 && symbols[r + 1] == pair.1 {
            symbols[w] = id;
            r += 2;
        } else {
            symbols[w] = symbols[r];
            r += 1;
        }
        w += 1;
    }
    symbols.truncate(w);
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ByteClass {
    Word,
    Space,
    Punct,
}

fn class_of(b: u8) -> ByteClass {
    if b.is_ascii_alphanumeric() || b == b'_' || b >= 0x80 {
        ByteClass::Word
    } else if b.is_ascii_whitespace() {
        ByteClass::Space
    } else {
        ByteClass::Punct
    }
}

/// Splits bytes into merge-isolated chunks. Concatenating the chunks gives back the input.
pub fn pretokenize(bytes: &[u8]) -> Vec<&[u8]> {
    let mut chunks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        let class = class_of(bytes[i]);
        match class {
            ByteClass::Space => {
                while i < bytes.len() && class_of(bytes[i]) == ByteClass::Space {
                    i += 1;
                }
                // leave one trailing space to lead the following word
                if i < bytes.len() && class_of(bytes[i]) == ByteClass::Word && bytes[i - 1] == b' ' && i - start > 1 {
                    i -= 1;
                } else if i < bytes.len() && class_of(bytes[i]) == ByteClass::Word && bytes[i - 1] == b' ' {
                    i += 1;
                    while i < bytes.len() && class_of(bytes[i]) == ByteClass::Word {
                        i += 1;
                    }
                }
            }
            _ => {
                while i < bytes.len() && class_of(bytes[i]) == class {
                    i += 1;
                }
            }
        }
        let mut s = start;
        while i - s > MAX_CHUNK {
            chunks.push(&bytes[s..s + MAX_CHUNK]);
            s += MAX_CHUNK;
        }
        chunks.push(&bytes[s..i]);
    }
    chunks
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct TrainConfig {
    pub target_size: usize,
    pub lines_per_file: usize,
    pub seed: u64,
    /// Stop sampling once this many bytes have been collected.
    pub byte_budget: Option<usize>,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig { target_size: 64_000, lines_per_file: 10, seed: 0, byte_budget: None }
    }
}

/// Samples up to `lines_per_file` random lines (newline kept) from each file, in
/// `file_id` order, with one seeded generator.
pub fn sample_training_lines(files: &[SourceFile], cfg: &TrainConfig) -> Vec<String> {
    let mut order: Vec<&SourceFile> = files.iter().collect();
    order.sort_by(|a, b| a.file_id.cmp(&b.file_id));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    let mut budget = cfg.byte_budget.unwrap_or(usize::MAX);
    for f in order {
        let lines: Vec<&str> = f.content.split_inclusive('\n').collect();
        if lines.is_empty() {
            continue;
        }
        let k = cfg.lines_per_file.min(lines.len());
        let mut picked = index::sample(&mut rng, lines.len(), k).into_vec();
        picked.sort_unstable();
        for i in picked {
            let line = lines[i];
            if line.len() > budget {
                return out;
            }
            budget -= line.len();
            out.push(line.to_string());
        }
    }
    out
}

/// Trains a vocabulary on sampled lines of `files`.
pub fn train_vocab(files: &[SourceFile], cfg: &TrainConfig) -> Result<Vocabulary, TokenizerError> {
    let lines = sample_training_lines(files, cfg);
    train_on_lines(&lines, cfg.target_size)
}

/// Greedy BPE: repeatedly merges the most frequent adjacent pair (ties go to the
/// smallest `(left, right)` ids) until `target_size` pieces exist or no pair occurs
/// at least twice.
pub fn train_on_lines<S: AsRef<str> + Sync>(lines: &[S], target_size: usize) -> Result<Vocabulary, TokenizerError> {
    if target_size <= FIRST_MERGE_ID as usize {
        return Err(TokenizerError::TargetTooSmall(target_size));
    }
    if lines.iter().all(|l| l.as_ref().is_empty()) {
        return Err(TokenizerError::EmptyCorpus);
    }

    let chunk_counts: HashMap<Vec<u8>, u64> = lines
        .par_iter()
        .fold(HashMap::new, |mut m: HashMap<Vec<u8>, u64>, line| {
            for c in pretokenize(line.as_ref().as_bytes()) {
                *m.entry(c.to_vec()).or_default() += 1;
            }
            m
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    let mut words: Vec<(Vec<TokenId>, i64)> =
        chunk_counts.into_iter().map(|(bytes, n)| (bytes.iter().map(|&b| b as TokenId).collect(), n as i64)).collect();
    words.sort();

    let mut pair_counts: HashMap<(TokenId, TokenId), i64> = HashMap::new();
    let mut where_found: HashMap<(TokenId, TokenId), HashSet<usize>> = HashMap::new();
    for (wi, (syms, n)) in words.iter().enumerate() {
        for w in syms.windows(2) {
            *pair_counts.entry((w[0], w[1])).or_default() += n;
            where_found.entry((w[0], w[1])).or_default().insert(wi);
        }
    }
    let mut heap: BinaryHeap<(i64, Reverse<(TokenId, TokenId)>)> = pair_counts.iter().map(|(&p, &c)| (c, Reverse(p))).collect();

    let mut vocab = Vocabulary::base();
    while vocab.size() < target_size {
        let Some((count, Reverse(pair))) = heap.pop() else { break };
        if pair_counts.get(&pair).copied().unwrap_or(0) != count {
            continue;
        }
        if count < 2 {
            break;
        }
        let id = vocab.push_merge(pair);
        let mut touched: Vec<usize> = where_found.remove(&pair).unwrap_or_default().into_iter().collect();
        touched.sort_unstable();
        let mut changed: HashSet<(TokenId, TokenId)> = HashSet::new();
        for wi in touched {
            let (syms, n) = &mut words[wi];
            let n = *n;
            for w in syms.windows(2) {
                let p = (w[0], w[1]);
                *pair_counts.get_mut(&p).expect("counted pair") -= n;
                changed.insert(p);
            }
            merge_in_place(syms, pair, id);
            for w in syms.windows(2) {
                let p = (w[0], w[1]);
                *pair_counts.entry(p).or_default() += n;
                where_found.entry(p).or_default().insert(wi);
                changed.insert(p);
            }
        }
        pair_counts.remove(&pair);
        for p in changed {
            if let Some(&c) = pair_counts.get(&p) {
                if c > 0 {
                    heap.push((c, Reverse(p)));
                }
            }
        }
    }
    Ok(vocab)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pretokenize_is_a_partition() {
        let s = b"def  foo(x):\n    return x+1  # done\n";
        let chunks = pretokenize(s);
        assert_eq!(chunks.concat(), s.to_vec());
        assert!(chunks.contains(&&b" foo"[..]));
        assert!(chunks.contains(&&b"):"[..]));
        let long = vec![b'a'; 200];
        assert!(pretokenize(&long).iter().all(|c| c.len() <= MAX_CHUNK));
    }

    #[test]
    fn abab_learns_ab() {
        let lines = vec!["abab\n"; 4];
        let v = train_on_lines(&lines, 261).unwrap();
        assert_eq!(v.size(), 261);
        assert_eq!(v.piece(FIRST_MERGE_ID), Some(&b"ab"[..]));
        assert_eq!(v.encode("abab"), vec![FIRST_MERGE_ID, FIRST_MERGE_ID]);
    }

    #[test]
    fn target_below_floor_rejected() {
        assert_eq!(train_on_lines(&["x"], 260), Err(TokenizerError::TargetTooSmall(260)));
        assert_eq!(train_on_lines::<&str>(&[], 300), Err(TokenizerError::EmptyCorpus));
    }

    #[test]
    fn empty_round_trip() {
        let v = Vocabulary::base();
        assert!(v.encode("").is_empty());
        assert_eq!(v.decode(&[]).unwrap(), "");
    }

    #[test]
    fn decode_rejects_unknown_ids() {
        let v = Vocabulary::base();
        assert_eq!(v.decode(&[5000]), Err(TokenizerError::IdOutOfRange { id: 5000, size: 260 }));
    }

    #[test]
    fn literal_separator_is_not_special() {
        let v = train_on_lines(&["x = 1 <|codetestpair|> y\n"; 3], 400).unwrap();
        let ids = v.encode("a<|codetestpair|>b");
        assert!(ids.iter().all(|&i| !Vocabulary::is_special(i)));
        assert_eq!(v.decode(&ids).unwrap(), "a<|codetestpair|>b");
        assert_eq!(v.decode(&[CODETESTPAIR]).unwrap(), SEPARATOR_TEXT);
    }

    #[test]
    fn text_format_round_trip() {
        let v = train_on_lines(&["hello world hello\n", "world wide web\n", "hello hello\n"], 300).unwrap();
        let back = Vocabulary::from_text(&v.to_text()).unwrap();
        assert_eq!(back, v);
        assert_eq!(back.digest(), v.digest());
        assert!(Vocabulary::from_text("nope").is_err());
    }
}
