//! Artifact directory of one pipeline run.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use pairforge_core::artifact::{read_jsonl, write_jsonl, ArtifactError};
use pairforge_core::config::{PipelineConfig, Stage};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// A JSON document stamped with the stage digest it was produced under.
#[derive(Debug, Serialize, Deserialize)]
pub struct Stamped<T> {
    pub kind: String,
    pub config_digest: String,
    pub body: T,
}

/// Record of one stage invocation. Holds no timestamps or absolute paths so that
/// reruns under the same config write identical logs.
#[derive(Debug, Default, Serialize)]
pub struct RunLog {
    pub stage: String,
    pub config_digest: String,
    pub stage_digest: String,
    pub inputs: Vec<String>,
    pub outputs: Vec<String>,
    pub counts: BTreeMap<String, u64>,
    pub notes: Vec<String>,
}

pub struct Workspace {
    pub dir: PathBuf,
    pub cfg: PipelineConfig,
}

impl Workspace {
    pub fn path(&self, name: &str) -> PathBuf {
        self.dir.join(name)
    }

    pub fn digest(&self, stage: Stage) -> String {
        self.cfg.stage_digest(stage)
    }

    pub fn read<T: DeserializeOwned>(&self, name: &str, kind: &str, stage: Stage, log: &mut RunLog) -> Result<Vec<T>, CliError> {
        let (_, records) = read_jsonl(&self.path(name), kind, Some(&self.digest(stage))).map_err(upstream)?;
        log.inputs.push(name.to_string());
        Ok(records)
    }

    pub fn write<T: Serialize>(&self, name: &str, kind: &str, stage: Stage, records: &[T], log: &mut RunLog) -> Result<(), CliError> {
        write_jsonl(&self.path(name), kind, &self.digest(stage), records).map_err(|e| CliError::Exec(e.into()))?;
        log.outputs.push(name.to_string());
        log.counts.insert(name.to_string(), records.len() as u64);
        Ok(())
    }

    pub fn write_stamped<T: Serialize>(&self, name: &str, kind: &str, stage: Stage, body: &T, log: &mut RunLog) -> Result<(), CliError> {
        let doc = Stamped { kind: kind.to_string(), config_digest: self.digest(stage), body };
        let mut text = serde_json::to_string_pretty(&doc).map_err(|e| CliError::Exec(e.into()))?;
        text.push('\n');
        self.write_text(name, &text, log)
    }

    pub fn read_stamped<T: DeserializeOwned>(&self, name: &str, kind: &str, stage: Stage, log: &mut RunLog) -> Result<T, CliError> {
        let path = self.path(name);
        let text = self.read_text(name, log)?;
        let doc: Stamped<T> = serde_json::from_str(&text)
            .map_err(|e| upstream(ArtifactError::Malformed { path: path.clone(), line: 0, message: e.to_string() }))?;
        if doc.kind != kind {
            return Err(upstream(ArtifactError::KindMismatch { path, expected: kind.into(), found: doc.kind }));
        }
        let expected = self.digest(stage);
        if doc.config_digest != expected {
            return Err(upstream(ArtifactError::DigestMismatch { path, expected, found: doc.config_digest }));
        }
        Ok(doc.body)
    }

    pub fn write_text(&self, name: &str, text: &str, log: &mut RunLog) -> Result<(), CliError> {
        self.write_bytes(name, text.as_bytes(), log)
    }

    pub fn write_bytes(&self, name: &str, bytes: &[u8], log: &mut RunLog) -> Result<(), CliError> {
        let path = self.path(name);
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).map_err(|e| CliError::Exec(e.into()))?;
        }
        std::fs::write(&path, bytes).map_err(|e| CliError::Exec(e.into()))?;
        log.outputs.push(name.to_string());
        Ok(())
    }

    pub fn read_text(&self, name: &str, log: &mut RunLog) -> Result<String, CliError> {
        let bytes = self.read_bytes(name, log)?;
        String::from_utf8(bytes).map_err(|e| upstream(ArtifactError::Malformed { path: self.path(name), line: 0, message: e.to_string() }))
    }

    pub fn read_bytes(&self, name: &str, log: &mut RunLog) -> Result<Vec<u8>, CliError> {
        let path = self.path(name);
        if !path.exists() {
            return Err(upstream(ArtifactError::Missing(path)));
        }
        log.inputs.push(name.to_string());
        std::fs::read(&path).map_err(|e| upstream(ArtifactError::Io { path, source: e }))
    }

    pub fn start_log(&self, stage_name: &str, stage: Stage) -> RunLog {
        RunLog { stage: stage_name.to_string(), config_digest: self.cfg.digest(), stage_digest: self.digest(stage), ..Default::default() }
    }

    pub fn finish_log(&self, log: RunLog) -> Result<(), CliError> {
        let path = self.path(&format!("logs/{}.json", log.stage));
        std::fs::create_dir_all(path.parent().expect("log path has a parent")).map_err(|e| CliError::Exec(e.into()))?;
        let mut text = serde_json::to_string_pretty(&log).map_err(|e| CliError::Exec(e.into()))?;
        text.push('\n');
        std::fs::write(path, text).map_err(|e| CliError::Exec(e.into()))
    }
}

pub fn upstream(e: ArtifactError) -> CliError {
    match e {
        ArtifactError::Io { .. } => CliError::Exec(e.into()),
        other => CliError::Upstream(other.to_string()),
    }
}

/// Resolves a path given on the command line against the current directory.
pub fn absolute(p: &Path) -> PathBuf {
    std::path::absolute(p).unwrap_or_else(|_| p.to_path_buf())
}
