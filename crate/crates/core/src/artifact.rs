//! JSON-lines artifacts with a metadata header.
//!
//! The first line of every artifact is `{"_meta": {...}}` naming the artifact kind
//! and the digest of the config that produced it. Readers compare the digest against
//! the current config and refuse mixed inputs.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ArtifactError {
    #[error("missing upstream artifact {0}")]
    Missing(PathBuf),
    #[error("i/o error on {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}: {message}")]
    Malformed { path: PathBuf, line: usize, message: String },
    #[error("{path} was produced under config digest {found}, current config digest is {expected}")]
    DigestMismatch { path: PathBuf, expected: String, found: String },
    #[error("{path} holds `{found}` records, expected `{expected}`")]
    KindMismatch { path: PathBuf, expected: String, found: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtifactMeta {
    pub kind: String,
    pub config_digest: String,
    pub records: usize,
}

#[derive(Serialize, Deserialize)]
struct MetaLine {
    #[serde(rename = "_meta")]
    meta: ArtifactMeta,
}

fn io(path: &Path) -> impl FnOnce(std::io::Error) -> ArtifactError + '_ {
    move |source| ArtifactError::Io { path: path.to_path_buf(), source }
}

/// Renders records as JSON lines under a metadata header.
pub fn to_jsonl<T: Serialize>(kind: &str, config_digest: &str, records: &[T]) -> String {
    let meta = MetaLine { meta: ArtifactMeta { kind: kind.into(), config_digest: config_digest.into(), records: records.len() } };
    let mut out = serde_json::to_string(&meta).expect("meta serializes");
    out.push('\n');
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("record serializes"));
        out.push('\n');
    }
    out
}

pub fn write_jsonl<T: Serialize>(path: &Path, kind: &str, config_digest: &str, records: &[T]) -> Result<(), ArtifactError> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(io(dir))?;
    }
    let mut w = BufWriter::new(File::create(path).map_err(io(path))?);
    w.write_all(to_jsonl(kind, config_digest, records).as_bytes()).map_err(io(path))?;
    w.flush().map_err(io(path))
}

/// Reads an artifact, checking kind and, when `expected_digest` is given, the
/// config digest.
pub fn read_jsonl<T: DeserializeOwned>(
    path: &Path,
    kind: &str,
    expected_digest: Option<&str>,
) -> Result<(ArtifactMeta, Vec<T>), ArtifactError> {
    if !path.exists() {
        return Err(ArtifactError::Missing(path.to_path_buf()));
    }
    let reader = BufReader::new(File::open(path).map_err(io(path))?);
    let malformed = |line: usize, message: String| ArtifactError::Malformed { path: path.to_path_buf(), line, message };
    let mut lines = reader.lines();
    let first = lines.next().ok_or_else(|| malformed(1, "empty artifact".into()))?.map_err(io(path))?;
    let meta: MetaLine = serde_json::from_str(&first).map_err(|e| malformed(1, format!("bad metadata header: {e}")))?;
    let meta = meta.meta;
    if meta.kind != kind {
        return Err(ArtifactError::KindMismatch { path: path.to_path_buf(), expected: kind.into(), found: meta.kind });
    }
    if let Some(d) = expected_digest {
        if meta.config_digest != d {
            return Err(ArtifactError::DigestMismatch { path: path.to_path_buf(), expected: d.into(), found: meta.config_digest });
        }
    }
    let mut records = Vec::with_capacity(meta.records);
    for (i, line) in lines.enumerate() {
        let line = line.map_err(io(path))?;
        if line.trim().is_empty() {
            continue;
        }
        records.push(serde_json::from_str(&line).map_err(|e| malformed(i + 2, e.to_string()))?);
    }
    if records.len() != meta.records {
        return Err(malformed(0, format!("header announces {} records, found {}", meta.records, records.len())));
    }
    Ok((meta, records))
}

/// Reads only the metadata header.
pub fn read_meta(path: &Path) -> Result<ArtifactMeta, ArtifactError> {
    if !path.exists() {
        return Err(ArtifactError::Missing(path.to_path_buf()));
    }
    let mut first = String::new();
    BufReader::new(File::open(path).map_err(io(path))?).read_line(&mut first).map_err(io(path))?;
    let meta: MetaLine =
        serde_json::from_str(&first).map_err(|e| ArtifactError::Malformed { path: path.to_path_buf(), line: 1, message: e.to_string() })?;
    Ok(meta.meta)
}
