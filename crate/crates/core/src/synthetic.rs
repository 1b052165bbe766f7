//! Toy token language for the code-to-test conditioning experiment.
//!
//! A code document declares a function named by an identifier token and ends by
//! returning it. Its test document opens with an identifier: the same one when the
//! corpus is *dependent*, an independent draw otherwise. Ids stay below
//! [`crate::tokenizer::FIRST_MERGE_ID`] so the special tokens keep their meaning.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::corpus::TrainingDocument;
use crate::reflm::{alignment_signal_experiment, derange_pairs, HeldoutPair, LmError, SignalConfig, SignalReport};
use crate::tokenizer::{TokenId, FIRST_MERGE_ID};

pub const VOCAB_SIZE: usize = FIRST_MERGE_ID as usize;

const DEF: TokenId = 0;
const LPAREN: TokenId = 1;
const RPAREN: TokenId = 2;
const COLON: TokenId = 3;
const RETURN: TokenId = 4;
const DOT: TokenId = 5;
const TEST: TokenId = 6;
const ASSERT: TokenId = 7;
const EQ: TokenId = 8;
const FILLER: std::ops::Range<TokenId> = 10..30;
const NUMBERS: std::ops::Range<TokenId> = 30..40;
const IDENTIFIERS: std::ops::Range<TokenId> = 40..104;

#[derive(Debug, Clone)]
pub struct ToyCorpus {
    pub aligned: Vec<TrainingDocument>,
    /// Same files with test halves re-paired to other code files.
    pub shuffled: Vec<TrainingDocument>,
    pub heldout: Vec<HeldoutPair>,
}

fn pick(rng: &mut ChaCha8Rng, r: std::ops::Range<TokenId>) -> TokenId {
    rng.gen_range(r)
}

/// `(code, test)` token sequences.
pub fn toy_pair(rng: &mut ChaCha8Rng, dependent: bool) -> (Vec<TokenId>, Vec<TokenId>) {
    let name = pick(rng, IDENTIFIERS);
    let mut code = vec![DEF, name, LPAREN, RPAREN, COLON];
    let body = rng.gen_range(3..7);
    code.extend((0..body).map(|_| pick(rng, FILLER)));
    code.extend([RETURN, name]);

    let subject = if dependent { name } else { pick(rng, IDENTIFIERS) };
    let mut test = vec![subject, DOT, TEST, LPAREN, RPAREN, COLON, ASSERT];
    let mut ops = vec![pick(rng, FILLER), pick(rng, FILLER)];
    ops.shuffle(rng);
    test.extend(ops);
    test.extend([EQ, pick(rng, NUMBERS)]);
    (code, test)
}

pub fn toy_corpus(train_pairs: usize, heldout_pairs: usize, seed: u64, dependent: bool) -> ToyCorpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let aligned: Vec<TrainingDocument> = (0..train_pairs)
        .map(|i| {
            let (code, test) = toy_pair(&mut rng, dependent);
            TrainingDocument::paired("toy", &format!("toy::code{i}"), &format!("toy::test{i}"), &code, &test)
        })
        .collect();
    let heldout = (0..heldout_pairs)
        .map(|_| {
            let (code, test) = toy_pair(&mut rng, dependent);
            HeldoutPair { code, test }
        })
        .collect();
    let shuffled = derange_pairs(&aligned, seed ^ 0x5eed);
    ToyCorpus { aligned, shuffled, heldout }
}

/// The signal experiment with a fresh toy corpus per seed: seed `s` generates the
/// corpus, derangement and held-out pairs, and orders the packing.
pub fn toy_signal_experiment(
    train_pairs: usize,
    heldout_pairs: usize,
    dependent: bool,
    cfg: &SignalConfig,
) -> Result<SignalReport, LmError> {
    let mut per_seed = Vec::with_capacity(cfg.seeds.len());
    let mut test_tokens = 0;
    for &seed in &cfg.seeds {
        let toy = toy_corpus(train_pairs, heldout_pairs, seed, dependent);
        let one = SignalConfig { seeds: vec![seed], ..cfg.clone() };
        let r = alignment_signal_experiment(&toy.aligned, &toy.shuffled, &toy.heldout, &one)?;
        test_tokens += r.heldout_test_tokens;
        per_seed.extend(r.per_seed);
    }
    Ok(SignalReport::from_seeds(cfg, heldout_pairs * cfg.seeds.len(), test_tokens, per_seed))
}
