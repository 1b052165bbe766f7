//! `pairforge`: runs the corpus and evaluation pipeline one stage at a time.
//!
//! Every flag overrides the config key named in its help text. The effective
//! config is saved as `<work>/config.toml` and is the default for later stages.

mod error;
mod stages;
mod workspace;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pairforge_core::config::PipelineConfig;
use pairforge_core::promptgen::Task;
use pairforge_core::reflm::StopCriterion;

use crate::error::CliError;
use crate::workspace::{absolute, Workspace};

#[derive(Parser)]
#[command(name = "pairforge", version, about = "Code/test corpus construction and generated-test evaluation")]
struct Cli {
    /// Pipeline config (TOML). Defaults to <work>/config.toml, then built-in defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Directory for artifacts and run-logs.
    #[arg(long, global = true, default_value = "work")]
    work: PathBuf,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Stop {
    OnEos,
    OnMethodEnd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Scan repositories and assign the train/test split.
    Ingest {
        /// ingest.root
        #[arg(long)]
        root: Option<PathBuf>,
        /// ingest.min_stars
        #[arg(long)]
        min_stars: Option<u64>,
        /// split.seed
        #[arg(long)]
        split_seed: Option<u64>,
        /// split.test_repos_per_language
        #[arg(long)]
        test_repos_per_language: Option<usize>,
    },
    /// Apply the file filters, then drop exact duplicates.
    Filter {
        /// filter.max_file_bytes
        #[arg(long)]
        max_file_bytes: Option<u64>,
        /// filter.max_line_chars
        #[arg(long)]
        max_line_chars: Option<usize>,
        /// filter.max_mean_line_chars
        #[arg(long)]
        max_mean_line_chars: Option<f64>,
        /// filter.max_non_alnum_fraction
        #[arg(long)]
        max_non_alnum_fraction: Option<f64>,
    },
    /// Pair code files with their test files.
    Align {
        /// align.fuzzy_threshold
        #[arg(long)]
        fuzzy_threshold: Option<f64>,
    },
    /// Train the BPE vocabulary on the training split.
    Tokenize {
        /// tokenizer.target_size
        #[arg(long)]
        vocab_size: Option<usize>,
        /// tokenizer.seed
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Build training documents and pack them into fixed-length sequences.
    Corpus {
        /// corpus.seq_len
        #[arg(long)]
        seq_len: Option<usize>,
        /// corpus.seed
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Document length statistics.
    Stats,
    /// Train the n-gram reference model on the packed corpus.
    LmTrain {
        /// lm.order
        #[arg(long)]
        order: Option<usize>,
        /// lm.discount
        #[arg(long)]
        discount: Option<f64>,
    },
    /// Test-file perplexity of held-out pairs, with and without the code prefix.
    LmPpl,
    /// Sample generations for every prompt.
    LmSample {
        /// sampling.temperature
        #[arg(long)]
        temperature: Option<f64>,
        /// sampling.num_samples
        #[arg(long)]
        num_samples: Option<usize>,
        /// sampling.max_tokens
        #[arg(long)]
        max_tokens: Option<usize>,
        /// sampling.seed
        #[arg(long)]
        seed: Option<u64>,
        /// sampling.stop
        #[arg(long, value_enum)]
        stop: Option<Stop>,
    },
    /// Aligned versus shuffled training on the synthetic dependent-token corpus.
    SignalExp {
        /// signal.train_pairs
        #[arg(long)]
        train_pairs: Option<usize>,
        /// signal.heldout_pairs
        #[arg(long)]
        heldout_pairs: Option<usize>,
        /// signal.seeds, as 0..N
        #[arg(long)]
        seeds: Option<u64>,
        /// signal.dependent = false
        #[arg(long)]
        independent: bool,
    },
    /// Build task prompts for the evaluation pairs of the test split.
    Prompts {
        /// prompts.tasks, comma separated
        #[arg(long, value_delimiter = ',')]
        tasks: Option<Vec<Task>>,
        /// eval.max_pairs_per_project
        #[arg(long)]
        max_pairs_per_project: Option<usize>,
        /// eval.seed
        #[arg(long)]
        eval_seed: Option<u64>,
    },
    /// Compile, run and measure coverage of every generation.
    Evaluate {
        /// eval.manifest_dir
        #[arg(long)]
        manifest_dir: Option<PathBuf>,
        /// eval.generations_dir
        #[arg(long)]
        generations: Option<PathBuf>,
        /// eval.workers
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Aggregate outcomes and scores into the summary table.
    Report,
}

fn set<T>(slot: &mut T, v: Option<T>) {
    if let Some(v) = v {
        *slot = v;
    }
}

fn load_config(cli: &Cli) -> Result<PipelineConfig, CliError> {
    let saved = cli.work.join("config.toml");
    let path = cli.config.clone().or_else(|| saved.exists().then_some(saved));
    match path {
        Some(p) => PipelineConfig::load(&p).map_err(|e| CliError::Config(e.to_string())),
        None => Ok(PipelineConfig::default()),
    }
}

fn apply_flags(cfg: &mut PipelineConfig, cmd: &Cmd) {
    match cmd {
        Cmd::Ingest { root, min_stars, split_seed, test_repos_per_language } => {
            if let Some(r) = root {
                cfg.ingest.root = Some(absolute(r));
            }
            set(&mut cfg.ingest.min_stars, *min_stars);
            set(&mut cfg.split.seed, *split_seed);
            set(&mut cfg.split.test_repos_per_language, *test_repos_per_language);
        }
        Cmd::Filter { max_file_bytes, max_line_chars, max_mean_line_chars, max_non_alnum_fraction } => {
            set(&mut cfg.filter.max_file_bytes, *max_file_bytes);
            set(&mut cfg.filter.max_line_chars, *max_line_chars);
            set(&mut cfg.filter.max_mean_line_chars, *max_mean_line_chars);
            set(&mut cfg.filter.max_non_alnum_fraction, *max_non_alnum_fraction);
        }
        Cmd::Align { fuzzy_threshold } => set(&mut cfg.align.fuzzy_threshold, *fuzzy_threshold),
        Cmd::Tokenize { vocab_size, seed } => {
            set(&mut cfg.tokenizer.target_size, *vocab_size);
            set(&mut cfg.tokenizer.seed, *seed);
        }
        Cmd::Corpus { seq_len, seed } => {
            set(&mut cfg.corpus.seq_len, *seq_len);
            set(&mut cfg.corpus.seed, *seed);
        }
        Cmd::LmTrain { order, discount } => {
            set(&mut cfg.lm.order, *order);
            set(&mut cfg.lm.discount, *discount);
        }
        Cmd::LmSample { temperature, num_samples, max_tokens, seed, stop } => {
            set(&mut cfg.sampling.temperature, *temperature);
            set(&mut cfg.sampling.num_samples, *num_samples);
            set(&mut cfg.sampling.max_tokens, *max_tokens);
            set(&mut cfg.sampling.seed, *seed);
            if let Some(s) = stop {
                cfg.sampling.stop = match s {
                    Stop::OnEos => StopCriterion::OnEos,
                    Stop::OnMethodEnd => StopCriterion::OnMethodEnd,
                };
            }
        }
        Cmd::SignalExp { train_pairs, heldout_pairs, seeds, independent } => {
            set(&mut cfg.signal.train_pairs, *train_pairs);
            set(&mut cfg.signal.heldout_pairs, *heldout_pairs);
            if let Some(n) = seeds {
                cfg.signal.lm.seeds = (0..*n).collect();
            }
            if *independent {
                cfg.signal.dependent = false;
            }
        }
        Cmd::Prompts { tasks, max_pairs_per_project, eval_seed } => {
            set(&mut cfg.prompts.tasks, tasks.clone());
            set(&mut cfg.eval.max_pairs_per_project, *max_pairs_per_project);
            set(&mut cfg.eval.seed, *eval_seed);
        }
        Cmd::Evaluate { manifest_dir, generations, workers } => {
            if let Some(d) = manifest_dir {
                cfg.eval.manifest_dir = Some(absolute(d));
            }
            if let Some(d) = generations {
                cfg.eval.generations_dir = Some(absolute(d));
            }
            set(&mut cfg.eval.workers, *workers);
        }
        Cmd::Stats | Cmd::LmPpl | Cmd::Report => {}
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let mut cfg = load_config(&cli)?;
    apply_flags(&mut cfg, &cli.cmd);
    cfg.validate().map_err(|e| CliError::Config(e.to_string()))?;
    std::fs::create_dir_all(&cli.work).map_err(error::exec)?;
    std::fs::write(cli.work.join("config.toml"), cfg.to_toml()).map_err(error::exec)?;
    let ws = Workspace { dir: cli.work.clone(), cfg };
    match cli.cmd {
        Cmd::Ingest { .. } => stages::ingest(&ws),
        Cmd::Filter { .. } => stages::filter(&ws),
        Cmd::Align { .. } => stages::align(&ws),
        Cmd::Tokenize { .. } => stages::tokenize(&ws),
        Cmd::Corpus { .. } => stages::corpus(&ws),
        Cmd::Stats => stages::stats(&ws),
        Cmd::LmTrain { .. } => stages::lm_train(&ws),
        Cmd::LmPpl => stages::lm_ppl(&ws),
        Cmd::LmSample { .. } => stages::lm_sample(&ws),
        Cmd::SignalExp { .. } => stages::signal_exp(&ws),
        Cmd::Prompts { .. } => stages::prompts(&ws),
        Cmd::Evaluate { .. } => stages::evaluate(&ws),
        Cmd::Report => stages::report(&ws),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pairforge: {e}");
            e.exit_code()
        }
    }
}
