//! Corpus engineering and generated-test evaluation for aligned code/test pairs.
//!
//! The pipeline runs in stages, each usable on its own:
//!
//! 1. [`ingest`] scans local repository checkouts and records per-file statistics.
//! 2. [`filterdedup`] applies quality filters and exact content-hash deduplication.
//! 3. [`align`] pairs code files with their test files.
//! 4. [`tokenizer`] trains a byte-level BPE vocabulary with reserved special tokens.
//! 5. [`corpus`] builds paired/unpaired training documents, length statistics and packed sequences.
//! 6. [`reflm`] is a small interpolated n-gram model used to measure the code-to-test
//!    conditioning signal and to sample test generations on toy corpora.
//! 7. [`promptgen`] outlines test files and builds task prompts, ground truths and baselines.
//! 8. [`metrics`] scores generations lexically and aggregates runtime outcomes.
//! 9. [`harness`] runs baseline and injected test suites in sandboxed subprocesses.
//!
//! [`config`] holds the versioned pipeline configuration and [`artifact`] the on-disk
//! record formats shared between stages.

// Range checks are written `!(x > 0.0)` on purpose so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod align;
pub mod artifact;
pub mod config;
pub mod corpus;
pub mod filterdedup;
pub mod harness;
pub mod ingest;
pub mod lexer;
pub mod metrics;
pub mod promptgen;
pub mod reflm;
pub mod synthetic;
pub mod tokenizer;

mod lang;

pub use lang::SubjectLanguage;
