//! Versioned pipeline configuration.
//!
//! Every section has defaults, so a config file only lists what it changes. The
//! digest is taken over the canonical re-serialization, not the file bytes, so
//! formatting and comments do not change it.
//!
//! Artifacts pin a [`Stage`] digest rather than the whole-config digest: it covers
//! only the sections that feed that stage, so changing a sampling knob does not
//! invalidate an ingested corpus, while changing the tokenizer does invalidate
//! every corpus built with the old vocabulary.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::align::DEFAULT_FUZZY_THRESHOLD;
use crate::filterdedup::FilterRuleSet;
use crate::ingest::IngestConfig;
use crate::promptgen::Task;
use crate::reflm::{SampleConfig, SignalConfig, DEFAULT_DISCOUNT, DEFAULT_ORDER};
use crate::tokenizer::TrainConfig;

pub const CONFIG_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid config: {0}")]
    Parse(String),
    #[error("unsupported config version {found} (expected {CONFIG_VERSION})")]
    Version { found: u32 },
    #[error("invalid value for {field}: {reason}")]
    Invalid { field: &'static str, reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SplitConfig {
    pub test_repos_per_language: usize,
    pub seed: u64,
    /// Repositories always placed in the test split.
    pub pinned_test: Vec<String>,
}

impl Default for SplitConfig {
    fn default() -> Self {
        SplitConfig { test_repos_per_language: 1, seed: 0, pinned_test: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct AlignConfig {
    pub fuzzy_threshold: f64,
}

impl Default for AlignConfig {
    fn default() -> Self {
        AlignConfig { fuzzy_threshold: DEFAULT_FUZZY_THRESHOLD }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct CorpusConfig {
    /// Context length L of packed sequences.
    pub seq_len: usize,
    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig { seq_len: 8192, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct LmConfig {
    pub order: usize,
    pub discount: f64,
}

impl Default for LmConfig {
    fn default() -> Self {
        LmConfig { order: DEFAULT_ORDER, discount: DEFAULT_DISCOUNT }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SignalExpConfig {
    pub train_pairs: usize,
    pub heldout_pairs: usize,
    /// `false` runs the control corpus whose tests do not depend on their code.
    pub dependent: bool,
    #[serde(flatten)]
    pub lm: SignalConfig,
}

impl Default for SignalExpConfig {
    fn default() -> Self {
        SignalExpConfig { train_pairs: 2000, heldout_pairs: 200, dependent: true, lm: SignalConfig::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PromptConfig {
    pub tasks: Vec<Task>,
}

impl Default for PromptConfig {
    fn default() -> Self {
        PromptConfig { tasks: Task::ALL.to_vec() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct EvalConfig {
    /// Directory holding one `<project>/manifest.toml` per evaluated project.
    pub manifest_dir: Option<PathBuf>,
    /// Generations to evaluate; defaults to the ones `lm-sample` writes.
    pub generations_dir: Option<PathBuf>,
    pub max_pairs_per_project: usize,
    pub seed: u64,
    pub workers: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { manifest_dir: None, generations_dir: None, max_pairs_per_project: 10, seed: 0, workers: 4 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PipelineConfig {
    pub version: u32,
    pub ingest: IngestConfig,
    pub split: SplitConfig,
    pub filter: FilterRuleSet,
    pub align: AlignConfig,
    pub tokenizer: TrainConfig,
    pub corpus: CorpusConfig,
    pub lm: LmConfig,
    pub sampling: SampleConfig,
    pub signal: SignalExpConfig,
    pub prompts: PromptConfig,
    pub eval: EvalConfig,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            version: CONFIG_VERSION,
            ingest: IngestConfig::default(),
            split: SplitConfig::default(),
            filter: FilterRuleSet::default(),
            align: AlignConfig::default(),
            tokenizer: TrainConfig::default(),
            corpus: CorpusConfig::default(),
            lm: LmConfig::default(),
            sampling: SampleConfig::default(),
            signal: SignalExpConfig::default(),
            prompts: PromptConfig::default(),
            eval: EvalConfig::default(),
        }
    }
}

/// Pipeline stages whose outputs carry a config digest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stage {
    Ingest,
    Filter,
    Align,
    Tokenize,
    Corpus,
    Lm,
    Signal,
    Prompts,
    Samples,
    Evaluate,
}

impl Stage {
    /// Config sections an artifact of this stage depends on, upstream included.
    pub fn sections(self) -> &'static [&'static str] {
        const INGEST: &[&str] = &["version", "ingest", "split"];
        match self {
            Stage::Ingest => INGEST,
            Stage::Filter => &["version", "ingest", "split", "filter"],
            Stage::Align => &["version", "ingest", "split", "filter", "align"],
            Stage::Tokenize => &["version", "ingest", "split", "filter", "align", "tokenizer"],
            Stage::Corpus => &["version", "ingest", "split", "filter", "align", "tokenizer", "corpus"],
            Stage::Lm => &["version", "ingest", "split", "filter", "align", "tokenizer", "corpus", "lm"],
            Stage::Signal => &["version", "signal"],
            Stage::Prompts => &["version", "ingest", "split", "filter", "align", "prompts", "eval"],
            Stage::Samples => {
                &["version", "ingest", "split", "filter", "align", "tokenizer", "corpus", "lm", "prompts", "eval", "sampling"]
            }
            Stage::Evaluate => {
                &["version", "ingest", "split", "filter", "align", "tokenizer", "corpus", "lm", "prompts", "eval", "sampling"]
            }
        }
    }
}

impl PipelineConfig {
    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        let cfg: PipelineConfig = toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Reads a config file; relative data paths in it are taken relative to the
    /// file's directory.
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.to_path_buf(), source })?;
        let mut cfg = Self::from_toml(&text)?;
        let base = path.parent().unwrap_or(Path::new(""));
        for p in [&mut cfg.ingest.root, &mut cfg.eval.manifest_dir, &mut cfg.eval.generations_dir].into_iter().flatten() {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        }
        Ok(cfg)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes to TOML")
    }

    /// SHA-256 of the canonical TOML rendering, hex encoded.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.to_toml().as_bytes()))
    }

    /// SHA-256 over the canonical TOML of the sections `stage` depends on.
    pub fn stage_digest(&self, stage: Stage) -> String {
        let full: toml::Table = toml::Table::try_from(self).expect("config serializes to a table");
        let mut part = toml::Table::new();
        for key in stage.sections() {
            if let Some(v) = full.get(*key) {
                part.insert(key.to_string(), v.clone());
            }
        }
        let mut tagged = toml::Table::new();
        tagged.insert("stage".into(), toml::Value::String(format!("{stage:?}")));
        tagged.insert("config".into(), toml::Value::Table(part));
        hex::encode(Sha256::digest(toml::to_string(&tagged).expect("table serializes").as_bytes()))
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.version != CONFIG_VERSION {
            return Err(ConfigError::Version { found: self.version });
        }
        self.filter.validate().map_err(|e| ConfigError::Invalid { field: "filter", reason: e.to_string() })?;
        let invalid = |field, reason: &str| Err(ConfigError::Invalid { field, reason: reason.to_string() });
        if !(0.0..=1.0).contains(&self.align.fuzzy_threshold) {
            return invalid("align.fuzzy_threshold", "must lie in [0, 1]");
        }
        if self.corpus.seq_len == 0 {
            return invalid("corpus.seq_len", "must be positive");
        }
        if self.lm.order == 0 {
            return invalid("lm.order", "must be at least 1");
        }
        if !(self.lm.discount > 0.0 && self.lm.discount < 1.0) {
            return invalid("lm.discount", "must lie in (0, 1)");
        }
        if !(self.sampling.temperature > 0.0) {
            return invalid("sampling.temperature", "must be positive");
        }
        if self.eval.workers == 0 {
            return invalid("eval.workers", "must be positive");
        }
        Ok(())
    }
}
