//! Build, test and coverage runs of a project in a throwaway copy of its workdir.
//!
//! Each run copies the project into a fresh temporary directory, writes the test
//! file variant there and runs the manifest's commands with a cleared environment.
//! The source checkout is never written to.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::Read;
use std::os::unix::process::CommandExt;
use std::path::{Component, Path, PathBuf};
use std::process::{Command, Stdio};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;
use wait_timeout::ChildExt;

use crate::align::CodeTestPair;
use crate::ingest::SourceFile;
use crate::lexer::code_tokens;
use crate::metrics::{RuntimeOutcome, SampleKey, VerdictSource};
use crate::promptgen::{generated_method_name, outline_text, InjectError, TaskPrompt};
use crate::SubjectLanguage;

/// Exit code recorded for a phase killed at its deadline.
pub const TIMEOUT_EXIT: i32 = 124;

const ENV_ALLOWLIST: [&str; 4] = ["PATH", "LANG", "LC_ALL", "JAVA_HOME"];

const PY_COMPILE_CHECK: &str = r#"
import ast, importlib.util, os, sys
sys.dont_write_bytecode = True
path = sys.argv[1]
with open(path, encoding="utf-8") as fh:
    src = fh.read()
try:
    ast.parse(src, path)
except SyntaxError as e:
    print("SyntaxError: %s" % e, file=sys.stderr)
    sys.exit(1)
sys.path.insert(0, os.path.dirname(os.path.abspath(path)))
name = os.path.splitext(os.path.basename(path))[0]
spec = importlib.util.spec_from_file_location(name, path)
mod = importlib.util.module_from_spec(spec)
try:
    spec.loader.exec_module(mod)
except (ImportError, SyntaxError) as e:
    print("%s: %s" % (type(e).__name__, e), file=sys.stderr)
    sys.exit(1)
"#;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("cannot read manifest {path}: {message}")]
    Manifest { path: PathBuf, message: String },
    #[error("invalid manifest: {0}")]
    InvalidManifest(String),
    #[error("path `{0}` leaves the project workdir")]
    PathEscape(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot parse coverage report: {0}")]
    CoverageParse(String),
    #[error(transparent)]
    Inject(#[from] InjectError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverageFormat {
    XmlLineReport,
    JsonLineReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProjectManifest {
    pub project_id: String,
    pub subject_language: SubjectLanguage,
    /// Project directory, relative to the manifest file.
    pub workdir: PathBuf,
    /// Paired code file, relative to the workdir.
    pub code_file: String,
    /// Test file replaced by each variant, relative to the workdir.
    pub test_file: String,
    #[serde(default)]
    pub build_cmd: Vec<String>,
    pub test_cmd: Vec<String>,
    pub coverage_cmd: Vec<String>,
    pub coverage_format: CoverageFormat,
    /// Coverage report written by `coverage_cmd`, relative to the workdir.
    pub coverage_report: String,
    /// Optional per-test verdicts written by `test_cmd`: a JSON object mapping test
    /// method names to `passed` / `failed` / `skipped`.
    #[serde(default)]
    pub test_results: Option<String>,
    pub timeout_secs: u64,
    #[serde(default)]
    pub env: BTreeMap<String, String>,
    /// Interpreter substituted for `{python}` in commands.
    #[serde(default = "default_python")]
    pub python: String,
    /// Prefix for every command, for running inside an external container.
    #[serde(default)]
    pub runner: Vec<String>,
}

fn default_python() -> String {
    "python3".to_string()
}

fn check_relative(p: &str) -> Result<(), HarnessError> {
    let path = Path::new(p);
    if p.is_empty() || path.is_absolute() || path.components().any(|c| !matches!(c, Component::Normal(_) | Component::CurDir)) {
        return Err(HarnessError::PathEscape(p.to_string()));
    }
    Ok(())
}

impl ProjectManifest {
    pub fn from_toml(text: &str) -> Result<Self, HarnessError> {
        let m: ProjectManifest = toml::from_str(text).map_err(|e| HarnessError::InvalidManifest(e.to_string()))?;
        m.validate()?;
        Ok(m)
    }

    /// Loads a manifest and resolves its workdir against the manifest's directory.
    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| HarnessError::Manifest { path: path.to_path_buf(), message: e.to_string() })?;
        let mut m = Self::from_toml(&text)?;
        if m.workdir.is_relative() {
            m.workdir = path.parent().unwrap_or(Path::new(".")).join(&m.workdir);
        }
        Ok(m)
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.timeout_secs == 0 {
            return Err(HarnessError::InvalidManifest("timeout_secs must be positive".into()));
        }
        if self.test_cmd.is_empty() || self.coverage_cmd.is_empty() {
            return Err(HarnessError::InvalidManifest("test_cmd and coverage_cmd must be non-empty".into()));
        }
        if self.subject_language == SubjectLanguage::Java && self.build_cmd.is_empty() {
            return Err(HarnessError::InvalidManifest("java projects need a build_cmd".into()));
        }
        for p in [&self.code_file, &self.test_file, &self.coverage_report] {
            check_relative(p)?;
        }
        if let Some(p) = &self.test_results {
            check_relative(p)?;
        }
        Ok(())
    }

    pub fn read_test_file(&self) -> Result<String, HarnessError> {
        Ok(std::fs::read_to_string(self.workdir.join(&self.test_file))?)
    }

    pub fn read_code_file(&self) -> Result<String, HarnessError> {
        Ok(std::fs::read_to_string(self.workdir.join(&self.code_file))?)
    }

    fn expand(&self, arg: &str) -> String {
        arg.replace("{python}", &self.python).replace("{test_file}", &self.test_file).replace("{code_file}", &self.code_file)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    Build,
    Test,
    Coverage,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExecutionResult {
    pub phase: Phase,
    pub argv: Vec<String>,
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
    pub duration_ms: u64,
    pub timed_out: bool,
}

impl ExecutionResult {
    pub fn success(&self) -> bool {
        self.exit_code == 0 && !self.timed_out
    }
}

fn copy_tree(from: &Path, to: &Path) -> std::io::Result<()> {
    for entry in walkdir::WalkDir::new(from).follow_links(false) {
        let entry = entry.map_err(std::io::Error::other)?;
        let rel = entry.path().strip_prefix(from).expect("walk stays below its root");
        let dest = to.join(rel);
        let ft = entry.file_type();
        if ft.is_dir() {
            std::fs::create_dir_all(&dest)?;
        } else if ft.is_file() {
            std::fs::copy(entry.path(), &dest)?;
        }
    }
    Ok(())
}

fn drain<R: Read + Send + 'static>(r: Option<R>) -> std::thread::JoinHandle<String> {
    std::thread::spawn(move || {
        let mut buf = Vec::new();
        if let Some(mut r) = r {
            let _ = r.read_to_end(&mut buf);
        }
        String::from_utf8_lossy(&buf).into_owned()
    })
}

/// A pristine copy of a project's workdir.
pub struct Sandbox<'m> {
    manifest: &'m ProjectManifest,
    dir: tempfile::TempDir,
}

impl<'m> Sandbox<'m> {
    pub fn new(manifest: &'m ProjectManifest, test_variant: &str) -> Result<Self, HarnessError> {
        let dir = tempfile::Builder::new().prefix("pairforge-run-").tempdir()?;
        copy_tree(&manifest.workdir, dir.path())?;
        std::fs::write(dir.path().join(&manifest.test_file), test_variant)?;
        Ok(Sandbox { manifest, dir })
    }

    pub fn path(&self) -> &Path {
        self.dir.path()
    }

    /// Runs `argv` in the copy with the allowlisted environment, killing the whole
    /// process group at the deadline.
    pub fn run(&self, phase: Phase, argv: &[String]) -> Result<ExecutionResult, HarnessError> {
        let m = self.manifest;
        let full: Vec<String> = m.runner.iter().chain(argv).map(|a| m.expand(a)).collect();
        let mut cmd = Command::new(&full[0]);
        cmd.args(&full[1..])
            .current_dir(self.path())
            .env_clear()
            .env("HOME", self.path())
            .env("PYTHONDONTWRITEBYTECODE", "1")
            .stdin(Stdio::null())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .process_group(0);
        for k in ENV_ALLOWLIST {
            if let Ok(v) = std::env::var(k) {
                cmd.env(k, v);
            }
        }
        cmd.envs(&m.env);
        let start = Instant::now();
        let mut child = match cmd.spawn() {
            Ok(c) => c,
            Err(e) => {
                return Ok(ExecutionResult {
                    phase,
                    argv: full,
                    exit_code: 127,
                    stdout: String::new(),
                    stderr: format!("cannot start command: {e}"),
                    duration_ms: 0,
                    timed_out: false,
                })
            }
        };
        let out = drain(child.stdout.take());
        let err = drain(child.stderr.take());
        let status = child.wait_timeout(Duration::from_secs(m.timeout_secs))?;
        let (exit_code, timed_out) = match status {
            Some(s) => (s.code().unwrap_or_else(|| 128 + std::os::unix::process::ExitStatusExt::signal(&s).unwrap_or(0)), false),
            None => {
                // SAFETY: killpg only sends a signal to the group the child leads.
                unsafe {
                    libc::killpg(child.id() as libc::pid_t, libc::SIGKILL);
                }
                let _ = child.wait();
                (TIMEOUT_EXIT, true)
            }
        };
        Ok(ExecutionResult {
            phase,
            argv: full,
            exit_code,
            stdout: out.join().unwrap_or_default(),
            stderr: err.join().unwrap_or_default(),
            duration_ms: start.elapsed().as_millis() as u64,
            timed_out,
        })
    }

    /// Syntax check and import dry-run of the test module (Python), then the
    /// manifest's build command if any.
    pub fn build(&self) -> Result<Vec<ExecutionResult>, HarnessError> {
        let m = self.manifest;
        let mut results = Vec::new();
        if m.subject_language == SubjectLanguage::Python {
            let argv = vec!["{python}".to_string(), "-c".to_string(), PY_COMPILE_CHECK.to_string(), m.test_file.clone()];
            let r = self.run(Phase::Build, &argv)?;
            let ok = r.success();
            results.push(r);
            if !ok {
                return Ok(results);
            }
        }
        if !m.build_cmd.is_empty() {
            results.push(self.run(Phase::Build, &m.build_cmd)?);
        }
        Ok(results)
    }

    pub fn per_test_results(&self) -> Option<BTreeMap<String, String>> {
        let p = self.path().join(self.manifest.test_results.as_ref()?);
        let text = std::fs::read_to_string(p).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn coverage(&self) -> Result<f64, HarnessError> {
        let m = self.manifest;
        let path = self.path().join(&m.coverage_report);
        let text = std::fs::read_to_string(&path).map_err(|e| HarnessError::CoverageParse(format!("{}: {e}", m.coverage_report)))?;
        let report = match m.coverage_format {
            CoverageFormat::JsonLineReport => parse_json_coverage(&text)?,
            CoverageFormat::XmlLineReport => parse_xml_coverage(&text)?,
        };
        Ok(report.ratio_for(&m.code_file))
    }
}

/// Covered and coverable line numbers of one source file.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileCoverage {
    pub covered: BTreeSet<u32>,
    pub coverable: BTreeSet<u32>,
}

/// Normalized line coverage: file path to its lines.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport(pub BTreeMap<String, FileCoverage>);

impl CoverageReport {
    /// Entry for `code_file`, matched by whole trailing path components. JaCoCo
    /// entries are `package/dir/File.java`, so any suffix match counts.
    pub fn find(&self, code_file: &str) -> Option<&FileCoverage> {
        let want: Vec<&str> = code_file.split('/').filter(|s| !s.is_empty() && *s != ".").collect();
        let mut best: Option<(usize, &FileCoverage)> = None;
        for (name, cov) in &self.0 {
            let have: Vec<&str> = name.split(['/', '\\']).filter(|s| !s.is_empty() && *s != ".").collect();
            let common = want.iter().rev().zip(have.iter().rev()).take_while(|(a, b)| a == b).count();
            if common > 0 && (common == want.len() || common == have.len()) && best.is_none_or(|(c, _)| common > c) {
                best = Some((common, cov));
            }
        }
        best.map(|(_, c)| c)
    }

    /// `covered / coverable` for `code_file`; 0 when the file is absent or has no
    /// coverable lines.
    pub fn ratio_for(&self, code_file: &str) -> f64 {
        match self.find(code_file) {
            Some(c) if !c.coverable.is_empty() => c.covered.len() as f64 / c.coverable.len() as f64,
            _ => 0.0,
        }
    }
}

fn line_list(v: &serde_json::Value, key: &str) -> Result<BTreeSet<u32>, HarnessError> {
    let Some(arr) = v.get(key) else { return Ok(BTreeSet::new()) };
    let arr = arr.as_array().ok_or_else(|| HarnessError::CoverageParse(format!("`{key}` is not a list")))?;
    arr.iter()
        .map(|x| x.as_u64().map(|n| n as u32).ok_or_else(|| HarnessError::CoverageParse(format!("bad line number in `{key}`"))))
        .collect()
}

/// Reads either the coverage.py JSON layout (`files` → `executed_lines` /
/// `missing_lines`) or the normalized layout (`file` → `covered` / `coverable`).
pub fn parse_json_coverage(text: &str) -> Result<CoverageReport, HarnessError> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| HarnessError::CoverageParse(e.to_string()))?;
    let mut out = BTreeMap::new();
    if let Some(files) = v.get("files").and_then(|f| f.as_object()) {
        for (name, f) in files {
            let covered = line_list(f, "executed_lines")?;
            let mut coverable = line_list(f, "missing_lines")?;
            coverable.extend(&covered);
            out.insert(name.clone(), FileCoverage { covered, coverable });
        }
    } else if let Some(files) = v.as_object() {
        for (name, f) in files {
            let covered = line_list(f, "covered")?;
            let mut coverable = line_list(f, "coverable")?;
            coverable.extend(&covered);
            out.insert(name.clone(), FileCoverage { covered, coverable });
        }
    } else {
        return Err(HarnessError::CoverageParse("expected a JSON object".into()));
    }
    Ok(CoverageReport(out))
}

fn attr_u32(n: roxmltree::Node, name: &str) -> Result<u32, HarnessError> {
    n.attribute(name)
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| HarnessError::CoverageParse(format!("<{}> lacks numeric `{name}`", n.tag_name().name())))
}

/// Reads Cobertura (`class[@filename]/lines/line[@number,@hits]`) or JaCoCo
/// (`package[@name]/sourcefile[@name]/line[@nr,@mi,@ci]`) XML.
pub fn parse_xml_coverage(text: &str) -> Result<CoverageReport, HarnessError> {
    let opts = roxmltree::ParsingOptions { allow_dtd: true, ..Default::default() };
    let doc = roxmltree::Document::parse_with_options(text, opts).map_err(|e| HarnessError::CoverageParse(e.to_string()))?;
    let root = doc.root_element();
    let mut out: BTreeMap<String, FileCoverage> = BTreeMap::new();
    match root.tag_name().name() {
        "coverage" => {
            for class in root.descendants().filter(|n| n.has_tag_name("class")) {
                let name = class.attribute("filename").ok_or_else(|| HarnessError::CoverageParse("<class> without filename".into()))?;
                let entry = out.entry(name.to_string()).or_default();
                for line in class.descendants().filter(|n| n.has_tag_name("line")) {
                    let nr = attr_u32(line, "number")?;
                    entry.coverable.insert(nr);
                    if attr_u32(line, "hits")? > 0 {
                        entry.covered.insert(nr);
                    }
                }
            }
        }
        "report" => {
            for pkg in root.descendants().filter(|n| n.has_tag_name("package")) {
                let pkg_name = pkg.attribute("name").unwrap_or("");
                for sf in pkg.children().filter(|n| n.has_tag_name("sourcefile")) {
                    let file = sf.attribute("name").ok_or_else(|| HarnessError::CoverageParse("<sourcefile> without name".into()))?;
                    let key = if pkg_name.is_empty() { file.to_string() } else { format!("{pkg_name}/{file}") };
                    let entry = out.entry(key).or_default();
                    for line in sf.children().filter(|n| n.has_tag_name("line")) {
                        let nr = attr_u32(line, "nr")?;
                        let (mi, ci) = (attr_u32(line, "mi")?, attr_u32(line, "ci")?);
                        if mi + ci > 0 {
                            entry.coverable.insert(nr);
                        }
                        if ci > 0 {
                            entry.covered.insert(nr);
                        }
                    }
                }
            }
        }
        other => return Err(HarnessError::CoverageParse(format!("unknown coverage root <{other}>"))),
    }
    Ok(CoverageReport(out))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineRun {
    pub results: Vec<ExecutionResult>,
    /// Line coverage of the code file; absent when an earlier phase failed.
    pub coverage: Option<f64>,
}

/// Build, test and coverage of a test file variant; later phases are skipped after a
/// failure.
pub fn run_baseline(manifest: &ProjectManifest, test_variant: &str) -> Result<BaselineRun, HarnessError> {
    let sb = Sandbox::new(manifest, test_variant)?;
    let mut results = sb.build()?;
    if !results.iter().all(ExecutionResult::success) {
        return Ok(BaselineRun { results, coverage: None });
    }
    let test = sb.run(Phase::Test, &manifest.test_cmd)?;
    let ok = test.success();
    results.push(test);
    if !ok {
        return Ok(BaselineRun { results, coverage: None });
    }
    let cov = sb.run(Phase::Coverage, &manifest.coverage_cmd)?;
    let ok = cov.success();
    results.push(cov);
    if !ok {
        return Ok(BaselineRun { results, coverage: None });
    }
    let coverage = sb.coverage()?;
    Ok(BaselineRun { results, coverage: Some(coverage) })
}

/// Per-language assertion lexemes: word tokens starting with `assert`, plus `fail`
/// (Java) and `raises` (pytest).
pub fn contains_assertion(text: &str, language: SubjectLanguage) -> bool {
    code_tokens(text).into_iter().any(|t| {
        t.starts_with("assert")
            || t.starts_with("Assert")
            || match language {
                SubjectLanguage::Python => t == "raises",
                SubjectLanguage::Java => t == "fail",
            }
    })
}

/// Evaluates generations against one project, caching baseline coverage per
/// baseline file variant.
pub struct Evaluator<'m> {
    pub manifest: &'m ProjectManifest,
    baselines: Mutex<HashMap<String, Option<f64>>>,
}

impl<'m> Evaluator<'m> {
    pub fn new(manifest: &'m ProjectManifest) -> Self {
        Evaluator { manifest, baselines: Mutex::new(HashMap::new()) }
    }

    pub fn baseline_coverage(&self, baseline_file: &str) -> Result<Option<f64>, HarnessError> {
        if let Some(c) = self.baselines.lock().expect("baseline cache").get(baseline_file) {
            return Ok(*c);
        }
        let c = run_baseline(self.manifest, baseline_file)?.coverage;
        self.baselines.lock().expect("baseline cache").insert(baseline_file.to_string(), c);
        Ok(c)
    }

    /// Injects one generation into the prompt's baseline file and classifies it.
    pub fn evaluate_generation(&self, prompt: &TaskPrompt, sample_k: usize, generated: &str) -> Result<RuntimeOutcome, HarnessError> {
        let m = self.manifest;
        let key = SampleKey { pair_id: prompt.pair_id.clone(), task: prompt.task, context_mode: prompt.context_mode, sample_k };
        let has_assertion = contains_assertion(generated, m.subject_language);
        let injected = match prompt.inject(generated) {
            Ok(t) => t,
            Err(InjectError::EmptyGeneration) => return Ok(RuntimeOutcome::not_compiled(key, has_assertion, "empty generation")),
            Err(e) => return Err(e.into()),
        };
        let sb = Sandbox::new(m, &injected)?;
        let build = sb.build()?;
        if let Some(bad) = build.iter().find(|r| !r.success()) {
            let why = if bad.timed_out { "timeout in build" } else { "build failed" };
            return Ok(RuntimeOutcome::not_compiled(key, has_assertion, why));
        }
        let test = sb.run(Phase::Test, &m.test_cmd)?;
        let mut outcome = RuntimeOutcome {
            key,
            compiled: true,
            passed: false,
            has_assertion,
            coverage_baseline: None,
            coverage_with_gen: None,
            coverage_delta: None,
            verdict_source: None,
            failure: None,
        };
        if test.timed_out {
            outcome.failure = Some("timeout in test".into());
            return Ok(outcome);
        }
        let name = generated_method_name(generated, m.subject_language);
        let (passed, source) = match (sb.per_test_results(), &name) {
            (Some(results), Some(name)) => (results.get(name).is_some_and(|s| s == "passed"), VerdictSource::PerTest),
            _ => (test.success(), VerdictSource::SuiteExit),
        };
        outcome.passed = passed;
        outcome.verdict_source = Some(source);
        if !passed {
            outcome.failure = Some("test failed".into());
            return Ok(outcome);
        }
        let cov = sb.run(Phase::Coverage, &m.coverage_cmd)?;
        if !cov.success() {
            outcome.failure = Some(if cov.timed_out { "timeout in coverage" } else { "coverage run failed" }.into());
            return Ok(outcome);
        }
        let with_gen = sb.coverage()?;
        let baseline = self.baseline_coverage(&prompt.baseline_file)?;
        outcome.coverage_with_gen = Some(with_gen);
        outcome.coverage_baseline = baseline;
        outcome.coverage_delta = baseline.map(|b| with_gen - b);
        Ok(outcome)
    }
}

/// One generation to evaluate.
#[derive(Debug, Clone)]
pub struct EvalJob<'a> {
    pub prompt: &'a TaskPrompt,
    pub sample_k: usize,
    pub generated: String,
}

/// Evaluates jobs on a pool of `workers` threads; results keep the job order.
pub fn evaluate_all(evaluator: &Evaluator, jobs: &[EvalJob], workers: usize) -> Result<Vec<RuntimeOutcome>, HarnessError> {
    use rayon::prelude::*;
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build().map_err(|e| HarnessError::Io(std::io::Error::other(e)))?;
    pool.install(|| jobs.par_iter().map(|j| evaluator.evaluate_generation(j.prompt, j.sample_k, &j.generated)).collect())
}

/// Samples that compiled, passed and contain an assertion, in input order.
pub fn filter_generations(outcomes: &[RuntimeOutcome]) -> Vec<RuntimeOutcome> {
    outcomes.iter().filter(|o| o.compiled && o.passed && o.has_assertion).cloned().collect()
}

/// Pairs eligible for evaluation: both files outline with more than one method and
/// more than one test. At most `max_per_project` pairs per repository, chosen by a
/// seeded shuffle; output sorted by pair id.
pub fn build_eval_set(pairs: &[CodeTestPair], files: &HashMap<String, SourceFile>, max_per_project: usize, seed: u64) -> Vec<CodeTestPair> {
    let count = |id: &str, tests_only: bool| -> usize {
        let Some(f) = files.get(id) else { return 0 };
        match outline_text(&f.file_id, f.subject_language, &f.content) {
            Ok(o) if tests_only => o.test_count(),
            Ok(o) => o.methods.len(),
            Err(_) => 0,
        }
    };
    let mut by_repo: BTreeMap<&str, Vec<&CodeTestPair>> = BTreeMap::new();
    for p in pairs {
        if count(&p.code_file_id, false) > 1 && count(&p.test_file_id, true) > 1 {
            by_repo.entry(&p.repo_id).or_default().push(p);
        }
    }
    let mut out = Vec::new();
    for (repo, mut ps) in by_repo {
        ps.sort_by(|a, b| a.pair_id.cmp(&b.pair_id));
        let repo_seed = repo.bytes().fold(seed, |h, b| h.wrapping_mul(1_099_511_628_211).wrapping_add(b as u64));
        ps.shuffle(&mut ChaCha8Rng::seed_from_u64(repo_seed));
        out.extend(ps.into_iter().take(max_per_project).cloned());
    }
    out.sort_by(|a, b| a.pair_id.cmp(&b.pair_id));
    out
}
