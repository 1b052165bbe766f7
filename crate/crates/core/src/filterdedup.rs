//! Quality filters and exact-hash deduplication.
//!
//! Pipeline order is filter first, then dedup. Rules are checked in the fixed order
//! size, max-line, mean-line, non-alnum, autogen and a verdict names only the first
//! failing rule. Every threshold is an upper bound that is itself allowed: a file is
//! rejected when its statistic is strictly greater than the threshold.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ingest::{ContentHash, SourceFile};
use crate::SubjectLanguage;

/// Number of leading lines searched for generator markers.
pub const AUTOGEN_SCAN_LINES: usize = 5;

#[derive(Debug, Error, PartialEq)]
pub enum RuleSetError {
    #[error("threshold `{0}` must be strictly positive")]
    NonPositive(&'static str),
    #[error("autogen marker list is empty")]
    NoMarkers,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct FilterRuleSet {
    pub max_file_bytes: u64,
    pub max_line_chars: usize,
    pub max_mean_line_chars: f64,
    pub max_non_alnum_fraction: f64,
    pub autogen_markers: Vec<String>,
}

impl Default for FilterRuleSet {
    fn default() -> Self {
        FilterRuleSet {
            max_file_bytes: 1_048_576,
            max_line_chars: 1000,
            max_mean_line_chars: 100.0,
            max_non_alnum_fraction: 0.25,
            autogen_markers: vec!["auto-generated".into(), "autogenerated".into(), "do not edit".into()],
        }
    }
}

impl FilterRuleSet {
    pub fn validate(&self) -> Result<(), RuleSetError> {
        if self.max_file_bytes == 0 {
            return Err(RuleSetError::NonPositive("max_file_bytes"));
        }
        if self.max_line_chars == 0 {
            return Err(RuleSetError::NonPositive("max_line_chars"));
        }
        if !(self.max_mean_line_chars > 0.0) {
            return Err(RuleSetError::NonPositive("max_mean_line_chars"));
        }
        if !(self.max_non_alnum_fraction > 0.0) {
            return Err(RuleSetError::NonPositive("max_non_alnum_fraction"));
        }
        if self.autogen_markers.is_empty() {
            return Err(RuleSetError::NoMarkers);
        }
        Ok(())
    }

    /// First failing rule, if any.
    pub fn check(&self, file: &SourceFile) -> Option<FilterRule> {
        if file.byte_size > self.max_file_bytes {
            return Some(FilterRule::Size);
        }
        if file.stats.max_line_chars > self.max_line_chars {
            return Some(FilterRule::MaxLine);
        }
        if file.stats.mean_line_chars > self.max_mean_line_chars {
            return Some(FilterRule::MeanLine);
        }
        if file.stats.non_alnum_fraction > self.max_non_alnum_fraction {
            return Some(FilterRule::NonAlnum);
        }
        if self.looks_generated(&file.content) {
            return Some(FilterRule::Autogen);
        }
        None
    }

    fn looks_generated(&self, content: &str) -> bool {
        let head: String = content.lines().take(AUTOGEN_SCAN_LINES).collect::<Vec<_>>().join("\n").to_lowercase();
        self.autogen_markers.iter().any(|m| head.contains(&m.to_lowercase()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FilterRule {
    Size,
    MaxLine,
    MeanLine,
    NonAlnum,
    Autogen,
}

impl FilterRule {
    pub const ORDER: [FilterRule; 5] =
        [FilterRule::Size, FilterRule::MaxLine, FilterRule::MeanLine, FilterRule::NonAlnum, FilterRule::Autogen];

    pub fn as_str(self) -> &'static str {
        match self {
            FilterRule::Size => "size",
            FilterRule::MaxLine => "max-line",
            FilterRule::MeanLine => "mean-line",
            FilterRule::NonAlnum => "non-alnum",
            FilterRule::Autogen => "autogen",
        }
    }
}

impl fmt::Display for FilterRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterVerdict {
    pub file_id: String,
    pub kept: bool,
    pub rejected_by: Option<FilterRule>,
}

impl FilterVerdict {
    fn new(file_id: &str, rejected_by: Option<FilterRule>) -> Self {
        FilterVerdict { file_id: file_id.to_string(), kept: rejected_by.is_none(), rejected_by }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LanguageCounts {
    pub input: usize,
    pub kept: usize,
    pub rejected: BTreeMap<String, usize>,
    pub deduplicated: usize,
    pub after_dedup: usize,
}

/// Contents of `filter-report.json`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterReport {
    pub rule_order: Vec<String>,
    pub per_language: BTreeMap<SubjectLanguage, LanguageCounts>,
}

impl FilterReport {
    pub fn record_filter(&mut self, files: &[SourceFile], verdicts: &[FilterVerdict]) {
        self.rule_order = FilterRule::ORDER.iter().map(|r| r.as_str().to_string()).collect();
        for (f, v) in files.iter().zip(verdicts) {
            let c = self.per_language.entry(f.subject_language).or_default();
            c.input += 1;
            match v.rejected_by {
                None => c.kept += 1,
                Some(rule) => *c.rejected.entry(rule.as_str().to_string()).or_default() += 1,
            }
        }
    }

    pub fn record_dedup(&mut self, before: &[SourceFile], after: &[SourceFile]) {
        let mut b: BTreeMap<SubjectLanguage, usize> = BTreeMap::new();
        for f in before {
            *b.entry(f.subject_language).or_default() += 1;
        }
        for (lang, n) in b {
            let survivors = after.iter().filter(|f| f.subject_language == lang).count();
            let c = self.per_language.entry(lang).or_default();
            c.deduplicated = n - survivors;
            c.after_dedup = survivors;
        }
    }
}

/// Emits a verdict for every input file, in input order.
pub fn apply_filters(files: &[SourceFile], rules: &FilterRuleSet) -> Vec<FilterVerdict> {
    files.par_iter().map(|f| FilterVerdict::new(&f.file_id, rules.check(f))).collect()
}

/// Convenience: filter and return only the kept files together with the report.
pub fn filter_files(files: Vec<SourceFile>, rules: &FilterRuleSet) -> (Vec<SourceFile>, Vec<FilterVerdict>, FilterReport) {
    let verdicts = apply_filters(&files, rules);
    let mut report = FilterReport::default();
    report.record_filter(&files, &verdicts);
    let kept = files.into_iter().zip(&verdicts).filter(|(_, v)| v.kept).map(|(f, _)| f).collect();
    (kept, verdicts, report)
}

/// Keeps one file per distinct content hash: the first in `(repo_id, rel_path)` order.
///
/// Per-chunk first-occurrence maps are built in parallel and merged by taking the
/// smallest position, so the result does not depend on thread scheduling.
pub fn dedup_by_hash(mut files: Vec<SourceFile>) -> Vec<SourceFile> {
    files.sort_by(|a, b| (&a.repo_id, &a.rel_path).cmp(&(&b.repo_id, &b.rel_path)));
    let firsts: HashMap<ContentHash, usize> = files
        .par_iter()
        .enumerate()
        .fold(HashMap::new, |mut m: HashMap<ContentHash, usize>, (i, f)| {
            m.entry(f.content_hash).and_modify(|j| *j = (*j).min(i)).or_insert(i);
            m
        })
        .reduce(HashMap::new, |mut a, b| {
            for (h, i) in b {
                a.entry(h).and_modify(|j| *j = (*j).min(i)).or_insert(i);
            }
            a
        });
    files.into_iter().enumerate().filter(|(i, f)| firsts[&f.content_hash] == *i).map(|(_, f)| f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(name: &str, text: &str) -> SourceFile {
        SourceFile::from_text("r", name, SubjectLanguage::Python, text)
    }

    #[test]
    fn oversized_file_rejected_by_size() {
        let mut f = file("big.py", "x = 1\n");
        f.byte_size = 2_000_000;
        assert_eq!(FilterRuleSet::default().check(&f), Some(FilterRule::Size));
    }

    #[test]
    fn tiny_file_kept() {
        assert_eq!(FilterRuleSet::default().check(&file("a.py", "x = 1\n")), None);
    }

    #[test]
    fn long_line_then_truncated() {
        // 1500 chars of "ab" is all alphanumeric; mean = max = 1500 so max-line wins by order.
        let long = "ab".repeat(750);
        assert_eq!(FilterRuleSet::default().check(&file("a.py", &long)), Some(FilterRule::MaxLine));
        // 900 chars is under max-line but the single line still has mean 900 > 100.
        let short = "ab".repeat(450);
        assert_eq!(FilterRuleSet::default().check(&file("a.py", &short)), Some(FilterRule::MeanLine));
        // One long line among 30 lines of 40 chars: mean (1500 + 1200) / 31 ~ 87.1,
        // then (900 + 1200) / 31 ~ 67.7 once the long line is cut to 900.
        let body = format!("{}\n", "c".repeat(40)).repeat(30);
        let with_long = format!("{long}\n{body}");
        assert_eq!(FilterRuleSet::default().check(&file("a.py", &with_long)), Some(FilterRule::MaxLine));
        let with_cut = format!("{short}\n{body}");
        assert_eq!(FilterRuleSet::default().check(&file("a.py", &with_cut)), None);
    }

    #[test]
    fn autogen_marker_only_in_head() {
        let rules = FilterRuleSet::default();
        let generated = "# Code AUTO-GENERATED by protoc\nx = 1\n";
        assert_eq!(rules.check(&file("g.py", generated)), Some(FilterRule::Autogen));
        let late = format!("{}# do not edit\n", "x = 1\n".repeat(5));
        assert_eq!(rules.check(&file("g.py", &late)), None);
    }

    #[test]
    fn rule_set_validation() {
        let mut r = FilterRuleSet::default();
        assert!(r.validate().is_ok());
        r.max_non_alnum_fraction = 0.0;
        assert_eq!(r.validate(), Err(RuleSetError::NonPositive("max_non_alnum_fraction")));
        let r = FilterRuleSet { autogen_markers: vec![], ..Default::default() };
        assert_eq!(r.validate(), Err(RuleSetError::NoMarkers));
    }

    #[test]
    fn dedup_keeps_first_in_repo_path_order() {
        let a = SourceFile::from_text("b-repo", "x.py", SubjectLanguage::Python, "same\n");
        let b = SourceFile::from_text("a-repo", "z.py", SubjectLanguage::Python, "same\n");
        let c = SourceFile::from_text("a-repo", "y.py", SubjectLanguage::Python, "same!\n");
        let out = dedup_by_hash(vec![a, b, c]);
        let ids: Vec<_> = out.iter().map(|f| f.file_id.as_str()).collect();
        assert_eq!(ids, vec!["a-repo::y.py", "a-repo::z.py"]);
    }

    #[test]
    fn report_counts() {
        let files = vec![file("a.py", "x = 1\n"), file("b.py", &"ab".repeat(750))];
        let (kept, verdicts, report) = filter_files(files, &FilterRuleSet::default());
        assert_eq!(kept.len(), 1);
        assert!(verdicts[0].kept && verdicts[0].rejected_by.is_none());
        let c = &report.per_language[&SubjectLanguage::Python];
        assert_eq!((c.input, c.kept), (2, 1));
        assert_eq!(c.rejected["max-line"], 1);
    }
}
