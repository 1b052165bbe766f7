//! Lexical metrics against brute force and hand counts, and report aggregation.

mod common;

use pairforge_core::metrics::{
    aggregate, codebleu_lite, lcs_len, rouge_l, rouge_l_tokens, LexicalScores, MetricsError, RuntimeOutcome, SampleKey, ScoredSample,
};
use pairforge_core::promptgen::{ContextMode, Task};
use pairforge_core::SubjectLanguage;
use proptest::prelude::*;

use common::criteria::{self, brute_lcs};

#[test]
fn metric_oracles() {
    criteria::metric_oracles().unwrap();
}

#[test]
fn four_of_seven() {
    // gen a b c d x y z, gold a b c d: LCS 4, P = 4/7, R = 1
    let r = rouge_l("a b c d x y z", "a b c d");
    assert!((r - 2.0 * (4.0 / 7.0) / (4.0 / 7.0 + 1.0)).abs() < 1e-12);
    assert_eq!(rouge_l("", "a"), 0.0);
}

#[test]
fn hand_components_are_not_trivial() {
    // the fixtures exercise the brevity penalty, keyword weighting and partial syntax
    let cases = criteria::codebleu_cases();
    let comps: Vec<_> = cases.iter().map(criteria::hand_components).collect();
    assert!(comps[0].0 < comps[0].1);
    assert!(cases[1].gen_len < cases[1].gold_len);
    assert!(comps.iter().any(|c| c.2 > 0.0 && c.2 < 1.0));
}

#[test]
fn empty_generation_scores_zero() {
    let (s, c) = codebleu_lite("", "assert x\n", SubjectLanguage::Python);
    assert_eq!(s, 0.0);
    assert_eq!(c.ngram, 0.0);
}

fn key(pair: usize, task: Task, mode: ContextMode, k: usize) -> SampleKey {
    SampleKey { pair_id: format!("p{pair}"), task, context_mode: mode, sample_k: k }
}

fn outcome(key: SampleKey, compiled: bool, passed: bool, delta: Option<f64>) -> RuntimeOutcome {
    RuntimeOutcome {
        key,
        compiled,
        passed,
        has_assertion: true,
        coverage_baseline: delta.map(|_| 0.5),
        coverage_with_gen: delta.map(|d| 0.5 + d),
        coverage_delta: delta,
        verdict_source: None,
        failure: None,
    }
}

fn scored(key: SampleKey, em: bool, rouge: f64, codebleu: f64) -> ScoredSample {
    let c = pairforge_core::metrics::CodeBleuComponents { ngram: codebleu, weighted_ngram: codebleu, syntax_match: codebleu };
    ScoredSample { key, scores: LexicalScores { exact_match: em, rouge_l: rouge, codebleu, codebleu_components: c } }
}

#[test]
fn aggregation_by_hand() {
    let (f, w) = (Task::FirstTest, ContextMode::WithCode);
    let outcomes = vec![
        outcome(key(0, f, w, 0), true, true, Some(0.25)),
        outcome(key(0, f, w, 1), true, false, None),
        outcome(key(1, f, w, 0), false, false, None),
        outcome(key(1, f, w, 1), true, true, Some(0.0)),
        outcome(key(1, Task::LastTest, w, 0), true, true, None),
    ];
    let scores = vec![scored(key(0, f, w, 0), true, 1.0, 1.0), scored(key(1, f, w, 1), false, 0.5, 0.25)];
    let r = aggregate(&outcomes, &scores).unwrap();
    let row = r.row(f, w).unwrap();
    assert_eq!((row.samples, row.compiled, row.passed), (4, 3, 2));
    assert_eq!(row.mean_coverage_delta(), Some(0.125));
    assert_eq!(row.mean_rouge(), Some(0.75));
    assert_eq!(row.mean_codebleu(), Some(0.625));
    assert_eq!(row.exact_match_rate(), Some(0.5));
    let last = r.row(Task::LastTest, w).unwrap();
    assert_eq!((last.samples, last.passed, last.mean_rouge()), (1, 1, None));
    assert_eq!(r.codebleu_variant, "codebleu_lite");
    assert!(r.table().contains("first_test"));

    let stray = scored(key(9, f, w, 0), false, 0.0, 0.0);
    assert_eq!(aggregate(&outcomes, std::slice::from_ref(&stray)), Err(MetricsError::UnmatchedScore(stray.key)));
    let dup = vec![outcomes[0].clone(), outcomes[0].clone()];
    assert!(matches!(aggregate(&dup, &[]), Err(MetricsError::Duplicate(_))));
}

fn samples() -> impl Strategy<Value = Vec<(RuntimeOutcome, Option<ScoredSample>)>> {
    let one = (
        0..4usize,
        0..4usize,
        0..2usize,
        any::<bool>(),
        any::<bool>(),
        prop::option::of(0..8u8),
        prop::option::of((any::<bool>(), 0..=8u8)),
    );
    prop::collection::vec(one, 0..40).prop_map(|v| {
        let mut seen = std::collections::BTreeSet::new();
        v.into_iter()
            .filter_map(|(pair, t, m, compiled, passed, delta, lex)| {
                let k = key(pair, Task::ALL[t], ContextMode::ALL[m], pair + t);
                if !seen.insert(k.clone()) {
                    return None;
                }
                // quarters keep the sums exact, so shard order cannot change them
                let o = outcome(k.clone(), compiled, compiled && passed, delta.map(|d| d as f64 / 4.0));
                let s = lex.map(|(em, x)| scored(k, em, x as f64 / 8.0, x as f64 / 8.0));
                Some((o, s))
            })
            .collect()
    })
}

proptest! {
    #[test]
    fn rouge_matches_brute_force(a in prop::collection::vec(0u8..4, 0..10), b in prop::collection::vec(0u8..4, 0..10)) {
        prop_assert_eq!(lcs_len(&a, &b), brute_lcs(&a, &b));
        let (ab, ba) = (rouge_l_tokens(&a, &b), rouge_l_tokens(&b, &a));
        prop_assert!((ab - ba).abs() < 1e-15);
        prop_assert!((0.0..=1.0).contains(&ab));
    }

    #[test]
    fn aggregation_ignores_order_and_shards_add(v in samples(), cut in 0usize..40, rot in 0usize..40) {
        let outcomes: Vec<_> = v.iter().map(|(o, _)| o.clone()).collect();
        let scores: Vec<_> = v.iter().filter_map(|(_, s)| s.clone()).collect();
        let whole = aggregate(&outcomes, &scores).unwrap();
        let mut shuffled = outcomes.clone();
        if !shuffled.is_empty() {
            let n = shuffled.len();
            shuffled.rotate_left(rot % n);
            shuffled.reverse();
        }
        prop_assert_eq!(&aggregate(&shuffled, &scores).unwrap(), &whole);
        let cut = cut.min(v.len());
        let (a, b) = v.split_at(cut);
        let part = |s: &[(RuntimeOutcome, Option<ScoredSample>)]| {
            let o: Vec<_> = s.iter().map(|(o, _)| o.clone()).collect();
            let l: Vec<_> = s.iter().filter_map(|(_, l)| l.clone()).collect();
            aggregate(&o, &l).unwrap()
        };
        let mut merged = part(a);
        merged.merge(&part(b));
        prop_assert_eq!(merged, whole);
    }

    #[test]
    fn codebleu_in_unit_interval(seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (criteria::random_snippet(&mut rng), criteria::random_snippet(&mut rng));
        for lang in [SubjectLanguage::Python, SubjectLanguage::Java] {
            let (s, c) = codebleu_lite(&a, &b, lang);
            prop_assert!((0.0..=1.0).contains(&s), "{}", s);
            prop_assert!((0.0..=1.0).contains(&c.syntax_match));
        }
    }
}
