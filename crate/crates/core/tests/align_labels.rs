//! The 50-case labeled filename fixture and the alignment properties.

mod common;

use std::collections::HashSet;

use pairforge_core::align::{align_pairs, name_similarity, MatchKind};
use pairforge_core::ingest::SourceFile;
use pairforge_core::SubjectLanguage;
use proptest::prelude::*;

use common::criteria;

#[test]
fn labeled_fixture_has_full_precision_and_recall() {
    criteria::alignment_fidelity().unwrap();
}

/// Plain recursive edit distance over chars, memoized.
fn edit_distance(a: &[char], b: &[char]) -> usize {
    fn go(a: &[char], b: &[char], memo: &mut Vec<Vec<Option<usize>>>) -> usize {
        if a.is_empty() || b.is_empty() {
            return a.len() + b.len();
        }
        if let Some(d) = memo[a.len()][b.len()] {
            return d;
        }
        let sub = go(&a[1..], &b[1..], memo) + usize::from(a[0] != b[0]);
        let del = go(&a[1..], b, memo) + 1;
        let ins = go(a, &b[1..], memo) + 1;
        let d = sub.min(del).min(ins);
        memo[a.len()][b.len()] = Some(d);
        d
    }
    let mut memo = vec![vec![None; b.len() + 1]; a.len() + 1];
    go(a, b, &mut memo)
}

fn oracle_similarity(a: &str, b: &str) -> f64 {
    let a: Vec<char> = a.to_lowercase().chars().collect();
    let b: Vec<char> = b.to_lowercase().chars().collect();
    let m = a.len().max(b.len());
    if m == 0 {
        1.0
    } else {
        1.0 - edit_distance(&a, &b) as f64 / m as f64
    }
}

#[test]
fn utilities_vs_utils() {
    assert!((name_similarity("utilities", "utils") - 5.0 / 9.0).abs() < 1e-12);
    assert!((oracle_similarity("utilities", "utils") - 5.0 / 9.0).abs() < 1e-12);
}

fn repo_files() -> impl Strategy<Value = Vec<SourceFile>> {
    let stem = prop::sample::select(vec!["calc", "calcs", "parser", "parse", "util", "utils", "io", "model", "models"]);
    let dir = prop::sample::select(vec!["", "src/", "tests/", "pkg/sub/"]);
    let kind = prop::sample::select(vec!["", "test_", "_test"]);
    prop::collection::vec((dir, kind, stem), 1..12).prop_map(|v| {
        let mut seen = HashSet::new();
        v.into_iter()
            .map(|(d, k, s)| match k {
                "_test" => format!("{d}{s}_test.py"),
                k => format!("{d}{k}{s}.py"),
            })
            .filter(|p| seen.insert(p.clone()))
            .map(|p| SourceFile::from_text("r", &p, SubjectLanguage::Python, ""))
            .collect()
    })
}

proptest! {
    #[test]
    fn similarity_matches_edit_distance_oracle(a in "[a-zA-Z_]{0,10}", b in "[a-zA-Z_]{0,10}") {
        prop_assert!((name_similarity(&a, &b) - oracle_similarity(&a, &b)).abs() < 1e-12);
    }

    #[test]
    fn underlying_distance_satisfies_triangle(a in "[a-c]{0,8}", b in "[a-c]{0,8}", c in "[a-c]{0,8}") {
        let d = |x: &str, y: &str| {
            let m = x.len().max(y.len()) as f64;
            ((1.0 - name_similarity(x, y)) * m).round() as usize
        };
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c));
        prop_assert_eq!(d(&a, &b), d(&b, &a));
    }

    #[test]
    fn matching_is_a_partial_injection(files in repo_files(), t in 0.5f64..1.0) {
        let pairs = align_pairs(&files, t);
        let codes: HashSet<_> = pairs.iter().map(|p| &p.code_file_id).collect();
        let tests: HashSet<_> = pairs.iter().map(|p| &p.test_file_id).collect();
        prop_assert_eq!(codes.len(), pairs.len());
        prop_assert_eq!(tests.len(), pairs.len());
        prop_assert!(codes.is_disjoint(&tests));
    }

    #[test]
    fn raising_the_threshold_never_adds_pairs(files in repo_files(), lo in 0.3f64..0.9, step in 0.0f64..0.5) {
        let loose = align_pairs(&files, lo);
        let strict = align_pairs(&files, lo + step);
        let exact = |v: &[pairforge_core::align::CodeTestPair]| -> Vec<String> {
            v.iter().filter(|p| p.match_kind == MatchKind::ExactPattern).map(|p| p.pair_id.clone()).collect()
        };
        prop_assert!(strict.iter().all(|p| loose.contains(p)));
        prop_assert_eq!(exact(&loose), exact(&strict));
    }
}
