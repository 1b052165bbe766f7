//! Repository scanning, per-file statistics and project-level train/test split.
//!
//! Checkouts live under a scan root next to a `repos.jsonl` sidecar holding one
//! [`RepoMeta`] record per repository. Files are classified strictly by extension;
//! anything without a mapped extension (configs, READMEs, extensionless files) is
//! not emitted.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::io::{self, BufRead};
use std::path::{Component, Path, PathBuf};

use md5::{Digest, Md5};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use walkdir::WalkDir;

use crate::SubjectLanguage;

pub const REPOS_SIDECAR: &str = "repos.jsonl";

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("scan root {0} does not exist or is not a directory")]
    MissingRoot(PathBuf),
    #[error("cannot read metadata sidecar {path}: {source}")]
    Sidecar { path: PathBuf, source: io::Error },
    #[error("malformed metadata record on line {line} of {path}: {message}")]
    MalformedSidecar { path: PathBuf, line: usize, message: String },
    #[error("duplicate repo_id `{0}` in metadata sidecar")]
    DuplicateRepo(String),
    #[error("not enough {language} repositories for the test split: have {available}, need {requested}")]
    InsufficientRepos { language: SubjectLanguage, available: usize, requested: usize },
    #[error("split already assigned for repository `{0}`")]
    SplitAlreadyAssigned(String),
    #[error("pinned test repository `{0}` is not among the retained repositories")]
    UnknownPinnedRepo(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Test,
}

/// One line of the `repos.jsonl` sidecar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepoMeta {
    /// Defaults to `path` when absent.
    #[serde(default)]
    pub repo_id: Option<String>,
    /// Checkout directory relative to the scan root.
    pub path: String,
    pub owner_name: String,
    pub star_count: u64,
    #[serde(default)]
    pub is_fork: bool,
    pub subject_language: SubjectLanguage,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepoRecord {
    pub repo_id: String,
    pub owner_name: String,
    pub star_count: u64,
    pub subject_language: SubjectLanguage,
    pub is_fork: bool,
    /// `None` until [`assign_split`] runs; never reassigned afterwards.
    pub split: Option<Split>,
    pub root_path: PathBuf,
}

/// 128-bit MD5 digest of a file's raw bytes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContentHash(pub [u8; 16]);

impl ContentHash {
    pub fn of(bytes: &[u8]) -> Self {
        ContentHash(Md5::digest(bytes).into())
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }
}

impl fmt::Debug for ContentHash {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ContentHash({})", self.to_hex())
    }
}

impl fmt::Display for ContentHash {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for ContentHash {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for ContentHash {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let bytes = hex::decode(&s).map_err(serde::de::Error::custom)?;
        let arr: [u8; 16] = bytes.try_into().map_err(|_| serde::de::Error::custom("content hash must be 16 bytes"))?;
        Ok(ContentHash(arr))
    }
}

/// Line statistics computed from decoded content.
///
/// Lines are the pieces of `content.split('\n')`, minus the empty piece after a
/// final newline. Character counts are Unicode scalar values and exclude the
/// `'\n'` terminator (a `'\r'` before it is counted). Hence
/// `mean_line_chars * line_count == char_count - newline_count`, where
/// `newline_count` is `line_count` or `line_count - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LineStats {
    pub line_count: usize,
    pub max_line_chars: usize,
    pub mean_line_chars: f64,
    /// Symbol characters (neither `[A-Za-z0-9]` nor whitespace) over all
    /// characters; 0 for an empty file.
    pub non_alnum_fraction: f64,
}

impl LineStats {
    pub fn compute(content: &str) -> Self {
        let body = content.strip_suffix('\n').unwrap_or(content);
        let (mut line_count, mut max_line, mut line_chars_total) = (0usize, 0usize, 0usize);
        if !content.is_empty() {
            for line in body.split('\n') {
                let n = line.chars().count();
                line_count += 1;
                line_chars_total += n;
                max_line = max_line.max(n);
            }
        }
        let (mut total, mut symbols) = (0usize, 0usize);
        for c in content.chars() {
            total += 1;
            if !c.is_whitespace() && !c.is_ascii_alphanumeric() {
                symbols += 1;
            }
        }
        LineStats {
            line_count,
            max_line_chars: max_line,
            mean_line_chars: if line_count == 0 { 0.0 } else { line_chars_total as f64 / line_count as f64 },
            non_alnum_fraction: if total == 0 { 0.0 } else { symbols as f64 / total as f64 },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SourceFile {
    pub file_id: String,
    pub repo_id: String,
    /// Repository-relative path, `/`-separated.
    pub rel_path: String,
    pub subject_language: SubjectLanguage,
    /// Location of the bytes relative to the scan root; content is not inlined in artifacts.
    pub content_path: String,
    pub byte_size: u64,
    #[serde(flatten)]
    pub stats: LineStats,
    pub content_hash: ContentHash,
    #[serde(skip)]
    pub content: String,
}

impl SourceFile {
    pub fn make_id(repo_id: &str, rel_path: &str) -> String {
        format!("{repo_id}::{rel_path}")
    }

    /// Builds a record from raw bytes, decoding lossily.
    pub fn from_bytes(repo_id: &str, rel_path: &str, language: SubjectLanguage, content_path: &str, bytes: &[u8]) -> Self {
        let content = String::from_utf8_lossy(bytes).into_owned();
        SourceFile {
            file_id: Self::make_id(repo_id, rel_path),
            repo_id: repo_id.to_string(),
            rel_path: rel_path.to_string(),
            subject_language: language,
            content_path: content_path.to_string(),
            byte_size: bytes.len() as u64,
            stats: LineStats::compute(&content),
            content_hash: ContentHash::of(bytes),
            content,
        }
    }

    /// In-memory file, used by tests and synthetic corpora.
    pub fn from_text(repo_id: &str, rel_path: &str, language: SubjectLanguage, text: &str) -> Self {
        Self::from_bytes(repo_id, rel_path, language, rel_path, text.as_bytes())
    }

    /// Re-reads content for a record deserialized from `files.jsonl`.
    pub fn load_content(&mut self, root: &Path) -> io::Result<()> {
        let bytes = fs::read(root.join(&self.content_path))?;
        if ContentHash::of(&bytes) != self.content_hash {
            return Err(io::Error::new(io::ErrorKind::InvalidData, format!("{} changed since ingestion", self.content_path)));
        }
        self.content = String::from_utf8_lossy(&bytes).into_owned();
        Ok(())
    }

    pub fn file_name(&self) -> &str {
        self.rel_path.rsplit('/').next().unwrap_or(&self.rel_path)
    }

    pub fn stem(&self) -> &str {
        let name = self.file_name();
        match name.rfind('.') {
            Some(i) if i > 0 => &name[..i],
            _ => name,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct IngestConfig {
    /// Directory holding `repos.jsonl` and the checkouts.
    pub root: Option<PathBuf>,
    pub min_stars: u64,
    pub drop_forks: bool,
    /// Extension (without dot) to subject language.
    pub extensions: BTreeMap<String, SubjectLanguage>,
    /// Name of the content digest; only `md5` is implemented.
    pub hash_algorithm: String,
}

impl Default for IngestConfig {
    fn default() -> Self {
        let mut extensions = BTreeMap::new();
        extensions.insert("py".to_string(), SubjectLanguage::Python);
        extensions.insert("java".to_string(), SubjectLanguage::Java);
        IngestConfig { root: None, min_stars: 10, drop_forks: true, extensions, hash_algorithm: "md5".to_string() }
    }
}

impl IngestConfig {
    fn language_of(&self, path: &Path) -> Option<SubjectLanguage> {
        let ext = path.extension()?.to_str()?;
        self.extensions.get(ext).copied()
    }
}

/// A non-fatal problem encountered while scanning.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub repo_id: String,
    pub path: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedRepo {
    pub repo_id: String,
    pub reason: String,
}

#[derive(Debug, Default)]
pub struct ScanOutput {
    /// Retained repositories with their files in sorted path order.
    pub repos: Vec<(RepoRecord, Vec<SourceFile>)>,
    pub excluded: Vec<ExcludedRepo>,
    pub diagnostics: Vec<Diagnostic>,
}

impl ScanOutput {
    pub fn records(&self) -> Vec<RepoRecord> {
        self.repos.iter().map(|(r, _)| r.clone()).collect()
    }

    pub fn files(&self) -> impl Iterator<Item = &SourceFile> {
        self.repos.iter().flat_map(|(_, files)| files.iter())
    }
}

pub fn read_sidecar(root: &Path) -> Result<Vec<RepoMeta>, IngestError> {
    let path = root.join(REPOS_SIDECAR);
    let file = fs::File::open(&path).map_err(|source| IngestError::Sidecar { path: path.clone(), source })?;
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, line) in io::BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|source| IngestError::Sidecar { path: path.clone(), source })?;
        if line.trim().is_empty() {
            continue;
        }
        let meta: RepoMeta = serde_json::from_str(&line).map_err(|e| IngestError::MalformedSidecar {
            path: path.clone(),
            line: i + 1,
            message: e.to_string(),
        })?;
        let id = meta.repo_id.clone().unwrap_or_else(|| meta.path.clone());
        if !seen.insert(id.clone()) {
            return Err(IngestError::DuplicateRepo(id));
        }
        out.push(meta);
    }
    Ok(out)
}

/// Scans every repository listed in the sidecar under `root`.
///
/// Repositories are processed in parallel; output is ordered by `repo_id` and each
/// repository's files by relative path. Unreadable directories or files produce a
/// [`Diagnostic`] and are skipped.
pub fn scan_repositories(root: &Path, config: &IngestConfig) -> Result<ScanOutput, IngestError> {
    if !root.is_dir() {
        return Err(IngestError::MissingRoot(root.to_path_buf()));
    }
    let metas = read_sidecar(root)?;
    let mut out = ScanOutput::default();
    let mut retained = Vec::new();
    for meta in metas {
        let repo_id = meta.repo_id.clone().unwrap_or_else(|| meta.path.clone());
        if meta.star_count < config.min_stars {
            out.excluded
                .push(ExcludedRepo { repo_id, reason: format!("star_count {} below minimum {}", meta.star_count, config.min_stars) });
            continue;
        }
        if config.drop_forks && meta.is_fork {
            out.excluded.push(ExcludedRepo { repo_id, reason: "fork".to_string() });
            continue;
        }
        retained.push(RepoRecord {
            repo_id,
            owner_name: meta.owner_name,
            star_count: meta.star_count,
            subject_language: meta.subject_language,
            is_fork: meta.is_fork,
            split: None,
            root_path: PathBuf::from(meta.path),
        });
    }
    retained.sort_by(|a, b| a.repo_id.cmp(&b.repo_id));

    let scanned: Vec<_> = retained
        .into_par_iter()
        .map(|repo| {
            let (files, diags) = scan_one(root, &repo, config);
            (repo, files, diags)
        })
        .collect();
    for (repo, files, diags) in scanned {
        out.diagnostics.extend(diags);
        match files {
            Some(files) => out.repos.push((repo, files)),
            None => out.excluded.push(ExcludedRepo { repo_id: repo.repo_id, reason: "checkout unreadable".to_string() }),
        }
    }
    Ok(out)
}

fn scan_one(root: &Path, repo: &RepoRecord, config: &IngestConfig) -> (Option<Vec<SourceFile>>, Vec<Diagnostic>) {
    let mut diags = Vec::new();
    let repo_dir = root.join(&repo.root_path);
    if let Err(e) = fs::read_dir(&repo_dir) {
        log::warn!("skipping repository {}: {e}", repo.repo_id);
        diags.push(Diagnostic { repo_id: repo.repo_id.clone(), path: repo.root_path.display().to_string(), message: e.to_string() });
        return (None, diags);
    }
    let mut files = Vec::new();
    let walker = WalkDir::new(&repo_dir).follow_links(false).sort_by_file_name();
    for entry in walker {
        let entry = match entry {
            Ok(e) => e,
            Err(e) => {
                log::warn!("{}: {e}", repo.repo_id);
                diags.push(Diagnostic {
                    repo_id: repo.repo_id.clone(),
                    path: e.path().map(|p| p.display().to_string()).unwrap_or_default(),
                    message: e.to_string(),
                });
                continue;
            }
        };
        if !entry.file_type().is_file() {
            continue;
        }
        let Some(language) = config.language_of(entry.path()) else { continue };
        let Ok(rel) = entry.path().strip_prefix(&repo_dir) else { continue };
        let rel_path = slash_path(rel);
        let content_path = slash_path(&repo.root_path.join(rel));
        match fs::read(entry.path()) {
            Ok(bytes) => files.push(SourceFile::from_bytes(&repo.repo_id, &rel_path, language, &content_path, &bytes)),
            Err(e) => {
                log::warn!("skipping {}/{rel_path}: {e}", repo.repo_id);
                diags.push(Diagnostic { repo_id: repo.repo_id.clone(), path: rel_path, message: e.to_string() });
            }
        }
    }
    files.sort_by(|a, b| a.rel_path.cmp(&b.rel_path));
    (Some(files), diags)
}

pub(crate) fn slash_path(p: &Path) -> String {
    p.components()
        .filter_map(|c| match c {
            Component::Normal(s) => Some(s.to_string_lossy().into_owned()),
            Component::ParentDir => Some("..".to_string()),
            _ => None,
        })
        .collect::<Vec<_>>()
        .join("/")
}

/// Marks exactly `test_count_per_language` repositories of each subject language as
/// [`Split::Test`] and the rest as [`Split::Train`].
///
/// `pinned_test` repositories are placed in the test split first and count toward
/// the quota; the remainder is drawn by a seeded shuffle of the id-sorted list.
pub fn assign_split(
    repos: &[RepoRecord],
    test_count_per_language: usize,
    seed: u64,
    pinned_test: &[String],
) -> Result<Vec<RepoRecord>, IngestError> {
    if let Some(r) = repos.iter().find(|r| r.split.is_some()) {
        return Err(IngestError::SplitAlreadyAssigned(r.repo_id.clone()));
    }
    for pinned in pinned_test {
        if !repos.iter().any(|r| &r.repo_id == pinned) {
            return Err(IngestError::UnknownPinnedRepo(pinned.clone()));
        }
    }
    let mut out: Vec<RepoRecord> = repos.to_vec();
    out.sort_by(|a, b| a.repo_id.cmp(&b.repo_id));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for language in SubjectLanguage::ALL {
        let idx: Vec<usize> = (0..out.len()).filter(|&i| out[i].subject_language == language).collect();
        if idx.is_empty() && test_count_per_language > 0 {
            continue;
        }
        if idx.len() < test_count_per_language {
            return Err(IngestError::InsufficientRepos { language, available: idx.len(), requested: test_count_per_language });
        }
        let (mut pinned, mut rest): (Vec<usize>, Vec<usize>) = idx.into_iter().partition(|&i| pinned_test.contains(&out[i].repo_id));
        pinned.truncate(test_count_per_language);
        rest.shuffle(&mut rng);
        let need = test_count_per_language - pinned.len();
        let test: BTreeSet<usize> = pinned.iter().copied().chain(rest.iter().copied().take(need)).collect();
        for i in pinned.into_iter().chain(rest) {
            out[i].split = Some(if test.contains(&i) { Split::Test } else { Split::Train });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn repo(id: &str, lang: SubjectLanguage) -> RepoRecord {
        RepoRecord {
            repo_id: id.to_string(),
            owner_name: "o".into(),
            star_count: 50,
            subject_language: lang,
            is_fork: false,
            split: None,
            root_path: PathBuf::from(id),
        }
    }

    #[test]
    fn line_stats_are_consistent() {
        let s = LineStats::compute("ab\ncde\n");
        assert_eq!(s.line_count, 2);
        assert_eq!(s.max_line_chars, 3);
        assert_eq!(s.mean_line_chars, 2.5);

        let s = LineStats::compute("ab\ncde");
        assert_eq!(s.line_count, 2);
        assert_eq!(s.mean_line_chars, 2.5);

        let empty = LineStats::compute("");
        assert_eq!(empty.line_count, 0);
        assert_eq!(empty.non_alnum_fraction, 0.0);

        // "x = 1\n": six characters, one symbol
        let s = LineStats::compute("x = 1\n");
        assert!((s.non_alnum_fraction - 1.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn lossy_decode_keeps_raw_hash() {
        let bytes = b"print('\xff')\n";
        let f = SourceFile::from_bytes("r", "a.py", SubjectLanguage::Python, "r/a.py", bytes);
        assert!(f.content.contains('\u{FFFD}'));
        assert_eq!(f.content_hash, ContentHash::of(bytes));
        assert_eq!(f.byte_size, bytes.len() as u64);
    }

    #[test]
    fn hash_matches_known_md5() {
        assert_eq!(ContentHash::of(b"").to_hex(), "d41d8cd98f00b204e9800998ecf8427e");
    }

    #[test]
    fn split_is_deterministic_and_exact() {
        let repos: Vec<_> = (0..10).map(|i| repo(&format!("py{i}"), SubjectLanguage::Python)).collect();
        let a = assign_split(&repos, 2, 7, &[]).unwrap();
        let b = assign_split(&repos, 2, 7, &[]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.iter().filter(|r| r.split == Some(Split::Test)).count(), 2);
        assert!(a.iter().all(|r| r.split.is_some()));
    }

    #[test]
    fn split_rejects_insufficient_repos() {
        let repos: Vec<_> = (0..3).map(|i| repo(&format!("j{i}"), SubjectLanguage::Java)).collect();
        let err = assign_split(&repos, 5, 1, &[]).unwrap_err();
        assert!(matches!(err, IngestError::InsufficientRepos { language: SubjectLanguage::Java, available: 3, requested: 5 }));
        assert!(err.to_string().contains("java"));
    }

    #[test]
    fn split_never_reassigned() {
        let repos: Vec<_> = (0..3).map(|i| repo(&format!("p{i}"), SubjectLanguage::Python)).collect();
        let once = assign_split(&repos, 1, 1, &[]).unwrap();
        assert!(matches!(assign_split(&once, 1, 1, &[]), Err(IngestError::SplitAlreadyAssigned(_))));
    }

    #[test]
    fn pinned_repos_count_toward_quota() {
        let repos: Vec<_> = (0..6).map(|i| repo(&format!("p{i}"), SubjectLanguage::Python)).collect();
        for seed in 0..20 {
            let out = assign_split(&repos, 1, seed, &["p4".to_string()]).unwrap();
            let test: Vec<_> = out.iter().filter(|r| r.split == Some(Split::Test)).map(|r| r.repo_id.as_str()).collect();
            assert_eq!(test, vec!["p4"]);
        }
    }

    #[test]
    fn stem_and_name() {
        let f = SourceFile::from_text("r", "src/test/java/FooTest.java", SubjectLanguage::Java, "");
        assert_eq!(f.file_name(), "FooTest.java");
        assert_eq!(f.stem(), "FooTest");
    }
}
