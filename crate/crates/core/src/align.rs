//! Test-file detection and code/test pairing.
//!
//! Pairing runs within one repository. Exact naming patterns (`test_<CFN>`,
//! `<CFN>_test`, `<CFN>Test`, `Test<CFN>`) are claimed first; the remaining test
//! files are then matched against the remaining code files by normalized
//! Levenshtein similarity of their stems and kept when the score is strictly above
//! the threshold. Both phases claim greedily by descending score, breaking ties by
//! directory distance and then by path.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

use md5::{Digest, Md5};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ingest::SourceFile;
use crate::SubjectLanguage;

pub const DEFAULT_FUZZY_THRESHOLD: f64 = 0.85;

const TEST_DIRS: [&str; 2] = ["test", "tests"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchKind {
    ExactPattern,
    Fuzzy,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeTestPair {
    pub pair_id: String,
    pub repo_id: String,
    pub subject_language: SubjectLanguage,
    pub code_file_id: String,
    pub test_file_id: String,
    pub match_kind: MatchKind,
    pub score: f64,
}

impl CodeTestPair {
    pub fn make_id(code_file_id: &str, test_file_id: &str) -> String {
        let mut h = Md5::new();
        h.update(code_file_id.as_bytes());
        h.update([0u8]);
        h.update(test_file_id.as_bytes());
        hex::encode(&h.finalize()[..6])
    }
}

/// Test-ness by file name or by a `test/` or `tests/` directory segment.
///
/// Python uses snake patterns (`test_x`, `x_test`); Java uses camel patterns
/// (`TestX`, `XTest`, `XTests`).
pub fn is_test_path(rel_path: &str, language: SubjectLanguage) -> bool {
    let mut segments: Vec<&str> = rel_path.split('/').collect();
    let name = segments.pop().unwrap_or_default();
    if segments.iter().any(|s| TEST_DIRS.iter().any(|d| s.eq_ignore_ascii_case(d))) {
        return true;
    }
    let stem = stem_of(name);
    match language {
        SubjectLanguage::Python => {
            let lower = stem.to_ascii_lowercase();
            (lower.starts_with("test_") && lower.len() > 5) || (lower.ends_with("_test") && lower.len() > 5)
        }
        SubjectLanguage::Java => java_test_prefix(stem).is_some() || java_test_suffix(stem).is_some(),
    }
}

pub fn is_test_file(file: &SourceFile) -> bool {
    is_test_path(&file.rel_path, file.subject_language)
}

fn stem_of(name: &str) -> &str {
    match name.rfind('.') {
        Some(i) if i > 0 => &name[..i],
        _ => name,
    }
}

/// `TestFoo` -> `Foo`.
fn java_test_prefix(stem: &str) -> Option<&str> {
    let rest = stem.strip_prefix("Test")?;
    rest.chars().next().filter(|c| c.is_ascii_uppercase() || c.is_ascii_digit()).map(|_| rest)
}

/// `FooTest` / `FooTests` -> `Foo`.
fn java_test_suffix(stem: &str) -> Option<&str> {
    stem.strip_suffix("Tests").or_else(|| stem.strip_suffix("Test")).filter(|s| !s.is_empty())
}

/// The test stem with its test marker removed, or the stem itself when it has none
/// (files that are tests only by directory).
pub fn strip_test_markers(stem: &str, language: SubjectLanguage) -> &str {
    let stripped = match language {
        SubjectLanguage::Python => {
            let lower = stem.to_ascii_lowercase();
            if lower.starts_with("test_") {
                Some(&stem[5..])
            } else if lower.ends_with("_test") {
                Some(&stem[..stem.len() - 5])
            } else {
                None
            }
        }
        SubjectLanguage::Java => java_test_prefix(stem).or_else(|| java_test_suffix(stem)),
    };
    match stripped {
        Some(s) if !s.is_empty() => s,
        _ => stem,
    }
}

/// `1 - levenshtein / max_len` over case-folded stems.
pub fn name_similarity(code_stem: &str, test_stem: &str) -> f64 {
    let a = code_stem.to_lowercase();
    let b = test_stem.to_lowercase();
    let max_len = a.chars().count().max(b.chars().count());
    if max_len == 0 {
        return 1.0;
    }
    1.0 - strsim::levenshtein(&a, &b) as f64 / max_len as f64
}

fn is_exact_pattern(code_stem: &str, test_stem: &str) -> bool {
    test_stem.strip_prefix("test_") == Some(code_stem)
        || test_stem.strip_suffix("_test") == Some(code_stem)
        || test_stem.strip_suffix("Test") == Some(code_stem)
        || test_stem.strip_prefix("Test") == Some(code_stem)
}

/// Files that never take part in pairing (package markers and pytest plumbing).
fn is_pairable(file: &SourceFile) -> bool {
    let stem = file.stem();
    !(stem.starts_with("__") || stem == "conftest")
}

fn dir_segments(rel_path: &str) -> Vec<&str> {
    let mut s: Vec<&str> = rel_path.split('/').collect();
    s.pop();
    s
}

/// Tree distance between the directories of two repository paths.
pub fn directory_distance(a: &str, b: &str) -> usize {
    let (da, db) = (dir_segments(a), dir_segments(b));
    let common = da.iter().zip(&db).take_while(|(x, y)| x == y).count();
    da.len() + db.len() - 2 * common
}

struct Candidate<'a> {
    code: &'a SourceFile,
    test: &'a SourceFile,
    score: f64,
    distance: usize,
}

fn rank(a: &Candidate, b: &Candidate) -> Ordering {
    b.score
        .partial_cmp(&a.score)
        .unwrap_or(Ordering::Equal)
        .then(a.distance.cmp(&b.distance))
        .then(a.code.rel_path.cmp(&b.code.rel_path))
        .then(a.test.rel_path.cmp(&b.test.rel_path))
}

fn claim<'a>(
    mut cands: Vec<Candidate<'a>>,
    kind: MatchKind,
    used_code: &mut HashSet<&'a str>,
    used_test: &mut HashSet<&'a str>,
    out: &mut Vec<CodeTestPair>,
) {
    cands.sort_by(rank);
    for c in cands {
        if used_code.contains(c.code.file_id.as_str()) || used_test.contains(c.test.file_id.as_str()) {
            continue;
        }
        used_code.insert(&c.code.file_id);
        used_test.insert(&c.test.file_id);
        out.push(CodeTestPair {
            pair_id: CodeTestPair::make_id(&c.code.file_id, &c.test.file_id),
            repo_id: c.code.repo_id.clone(),
            subject_language: c.code.subject_language,
            code_file_id: c.code.file_id.clone(),
            test_file_id: c.test.file_id.clone(),
            match_kind: kind,
            score: c.score,
        });
    }
}

/// Pairs code and test files of a single repository.
pub fn align_pairs(files: &[SourceFile], fuzzy_threshold: f64) -> Vec<CodeTestPair> {
    let (tests, codes): (Vec<&SourceFile>, Vec<&SourceFile>) = files.iter().filter(|f| is_pairable(f)).partition(|f| is_test_file(f));

    let compatible = |c: &SourceFile, t: &SourceFile| c.repo_id == t.repo_id && c.subject_language == t.subject_language;

    let mut used_code = HashSet::new();
    let mut used_test = HashSet::new();
    let mut out = Vec::new();

    let exact: Vec<Candidate> = tests
        .iter()
        .flat_map(|t| codes.iter().map(move |c| (*c, *t)))
        .filter(|(c, t)| compatible(c, t) && is_exact_pattern(c.stem(), t.stem()))
        .map(|(code, test)| Candidate { code, test, score: 1.0, distance: directory_distance(&code.rel_path, &test.rel_path) })
        .collect();
    claim(exact, MatchKind::ExactPattern, &mut used_code, &mut used_test, &mut out);

    let fuzzy: Vec<Candidate> = tests
        .iter()
        .filter(|t| !used_test.contains(t.file_id.as_str()))
        .flat_map(|t| codes.iter().filter(|c| !used_code.contains(c.file_id.as_str())).map(move |c| (*c, *t)))
        .filter(|(c, t)| compatible(c, t))
        .filter_map(|(code, test)| {
            let score = name_similarity(code.stem(), strip_test_markers(test.stem(), test.subject_language));
            (score > fuzzy_threshold).then(|| Candidate { code, test, score, distance: directory_distance(&code.rel_path, &test.rel_path) })
        })
        .collect();
    claim(fuzzy, MatchKind::Fuzzy, &mut used_code, &mut used_test, &mut out);

    out.sort_by(|a, b| (&a.code_file_id, &a.test_file_id).cmp(&(&b.code_file_id, &b.test_file_id)));
    out
}

/// Aligns every repository independently (in parallel); output ordered by repo then code file.
pub fn align_all(files: &[SourceFile], fuzzy_threshold: f64) -> Vec<CodeTestPair> {
    let mut by_repo: BTreeMap<&str, Vec<SourceFile>> = BTreeMap::new();
    for f in files {
        by_repo.entry(f.repo_id.as_str()).or_default().push(f.clone());
    }
    let groups: Vec<Vec<CodeTestPair>> = by_repo.into_par_iter().map(|(_, files)| align_pairs(&files, fuzzy_threshold)).collect();
    groups.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(path: &str) -> SourceFile {
        let lang = if path.ends_with(".java") { SubjectLanguage::Java } else { SubjectLanguage::Python };
        SourceFile::from_text("r", path, lang, "")
    }

    #[test]
    fn test_path_patterns() {
        assert!(is_test_path("test_foo.py", SubjectLanguage::Python));
        assert!(!is_test_path("foo.py", SubjectLanguage::Python));
        assert!(is_test_path("src/test/java/FooTest.java", SubjectLanguage::Java));
        assert!(is_test_path("FooTest.java", SubjectLanguage::Java));
        assert!(is_test_path("TestFoo.java", SubjectLanguage::Java));
        assert!(is_test_path("FooTests.java", SubjectLanguage::Java));
        assert!(!is_test_path("Testing.java", SubjectLanguage::Java));
        assert!(!is_test_path("Latest.java", SubjectLanguage::Java));
        assert!(is_test_path("pkg/foo_test.py", SubjectLanguage::Python));
        assert!(is_test_path("tests/helpers.py", SubjectLanguage::Python));
        assert!(!is_test_path("contest.py", SubjectLanguage::Python));
        assert!(!is_test_path("test_.py", SubjectLanguage::Python));
    }

    #[test]
    fn similarity_examples() {
        assert_eq!(name_similarity("foo", "foo"), 1.0);
        assert_eq!(name_similarity("abc", "xyz"), 0.0);
        assert!((name_similarity("utilities", "utils") - 5.0 / 9.0).abs() < 1e-12);
        assert_eq!(name_similarity("Foo", "foo"), 1.0);
    }

    #[test]
    fn marker_stripping() {
        assert_eq!(strip_test_markers("test_parser", SubjectLanguage::Python), "parser");
        assert_eq!(strip_test_markers("parser_test", SubjectLanguage::Python), "parser");
        assert_eq!(strip_test_markers("StringUtilTest", SubjectLanguage::Java), "StringUtil");
        assert_eq!(strip_test_markers("TestFoo", SubjectLanguage::Java), "Foo");
        assert_eq!(strip_test_markers("helpers", SubjectLanguage::Python), "helpers");
    }

    #[test]
    fn exact_java_pair() {
        let pairs = align_pairs(&[f("Foo.java"), f("FooTest.java")], 0.85);
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].match_kind, MatchKind::ExactPattern);
        assert_eq!(pairs[0].score, 1.0);
    }

    #[test]
    fn unmatched_code_left_out() {
        let pairs = align_pairs(&[f("foo.py"), f("bar.py"), f("test_foo.py")], 0.85);
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].code_file_id, "r::foo.py");
        assert_eq!(pairs[0].test_file_id, "r::test_foo.py");
    }

    #[test]
    fn fuzzy_needs_strictly_greater_score() {
        // parsers vs parser: 1 - 1/7 = 0.857 > 0.85
        let pairs = align_pairs(&[f("parser.py"), f("tests/test_parsers.py")], 0.85);
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].match_kind, MatchKind::Fuzzy);
        // util vs utils: 1 - 1/5 = 0.8
        assert!(align_pairs(&[f("util.py"), f("tests/test_utils.py")], 0.85).is_empty());
    }

    #[test]
    fn tie_broken_by_directory_distance() {
        let files = [f("a/b/foo.py"), f("a/c/d/foo.py"), f("a/b/test_foo.py")];
        let pairs = align_pairs(&files, 0.85);
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].code_file_id, "r::a/b/foo.py");
    }

    #[test]
    fn package_markers_not_paired() {
        assert!(align_pairs(&[f("pkg/__init__.py"), f("tests/__init__.py")], 0.85).is_empty());
    }

    #[test]
    fn directory_distance_counts_tree_hops() {
        assert_eq!(directory_distance("a/b/x.py", "a/b/y.py"), 0);
        assert_eq!(directory_distance("src/main/java/X.java", "src/test/java/XTest.java"), 4);
        assert_eq!(directory_distance("x.py", "tests/y.py"), 1);
    }
}
