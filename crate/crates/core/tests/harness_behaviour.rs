//! Harness phases, isolation and verdicts on the Python micro-project. Coverage
//! numbers are hand counts over `calc.py`'s 14 statement lines: module level
//! reaches 4, `add` 1 more, `scale` 4 more.

mod common;

use std::collections::BTreeMap;

use pairforge_core::harness::{evaluate_all, filter_generations, run_baseline, EvalJob, Evaluator, Phase};
use pairforge_core::promptgen::Task;

use common::{micro_prompt, MicroProject};

fn tree_digest(dir: &std::path::Path) -> BTreeMap<String, Vec<u8>> {
    walkdir::WalkDir::new(dir)
        .sort_by_file_name()
        .into_iter()
        .map(Result::unwrap)
        .filter(|e| e.file_type().is_file())
        .map(|e| (e.path().strip_prefix(dir).unwrap().display().to_string(), std::fs::read(e.path()).unwrap()))
        .collect()
}

#[test]
fn failed_build_skips_later_phases() {
    let mut p = MicroProject::load("pycalc");
    p.manifest.build_cmd = vec!["{python}".into(), "-c".into(), "import sys; sys.exit(3)".into()];
    let run = run_baseline(&p.manifest, &p.manifest.read_test_file().unwrap()).unwrap();
    assert_eq!(run.coverage, None);
    assert!(run.results.iter().all(|r| r.phase == Phase::Build), "{:#?}", run.results);
    assert_eq!(run.results.last().unwrap().exit_code, 3);
}

#[test]
fn variants_without_tests_cover_module_level_only() {
    let p = MicroProject::load("pycalc");
    let none = run_baseline(&p.manifest, "import unittest\n").unwrap();
    assert_eq!(none.coverage, Some(0.0));
    let import_only = run_baseline(&p.manifest, "import unittest\n\nimport calc\n").unwrap();
    assert_eq!(import_only.coverage, Some(4.0 / 14.0));
}

#[test]
fn ground_truth_reinjection_restores_full_coverage() {
    let p = MicroProject::load("pycalc");
    let prompt = micro_prompt(&p, Task::LastTest);
    let ev = Evaluator::new(&p.manifest);
    let o = ev.evaluate_generation(&prompt, 0, prompt.ground_truth.as_deref().unwrap()).unwrap();
    assert!(o.compiled && o.passed && o.has_assertion, "{o:?}");
    assert_eq!(o.coverage_baseline, Some(5.0 / 14.0));
    assert_eq!(o.coverage_with_gen, Some(9.0 / 14.0));
}

#[test]
fn failing_and_timed_out_tests_do_not_pass() {
    let mut p = MicroProject::load("pycalc");
    p.manifest.timeout_secs = 2;
    let prompt = micro_prompt(&p, Task::ExtraTest);
    let ev = Evaluator::new(&p.manifest);
    let wrong = "def test_wrong(self):\n    self.assertEqual(add(1, 1), 3)\n";
    let o = ev.evaluate_generation(&prompt, 0, wrong).unwrap();
    assert!(o.compiled && !o.passed && o.coverage_delta.is_none(), "{o:?}");
    let spin = "def test_spin(self):\n    while True:\n        pass\n    assert False\n";
    let o = ev.evaluate_generation(&prompt, 1, spin).unwrap();
    assert!(o.compiled && !o.passed, "{o:?}");
    assert_eq!(o.failure.as_deref(), Some("timeout in test"));
}

#[test]
fn evaluation_leaves_the_project_untouched() {
    let p = MicroProject::load("pycalc");
    let before = tree_digest(&p.manifest.workdir);
    let prompt = micro_prompt(&p, Task::ExtraTest);
    let ev = Evaluator::new(&p.manifest);
    ev.evaluate_generation(&prompt, 0, &p.generation("known_good")).unwrap();
    ev.evaluate_generation(&prompt, 1, "def test_x(self):\n    open('calc.py', 'w').write('')\n").unwrap();
    assert_eq!(tree_digest(&p.manifest.workdir), before);
}

#[test]
fn ten_sample_verdicts_in_parallel() {
    let p = MicroProject::load("pycalc");
    let prompt = micro_prompt(&p, Task::ExtraTest);
    let ev = Evaluator::new(&p.manifest);
    let kinds = ["known_good", "garbage", "no_assert"];
    let jobs: Vec<EvalJob> = (0..10).map(|k| EvalJob { prompt: &prompt, sample_k: k, generated: p.generation(kinds[k % 3]) }).collect();
    let parallel = evaluate_all(&ev, &jobs, 4).unwrap();
    let serial = evaluate_all(&ev, &jobs, 1).unwrap();
    assert_eq!(parallel, serial);
    let table: Vec<(bool, bool, bool)> = parallel.iter().map(|o| (o.compiled, o.passed, o.has_assertion)).collect();
    for (k, row) in table.iter().enumerate() {
        let want = match k % 3 {
            0 => (true, true, true),
            1 => (false, false, false),
            _ => (true, true, false),
        };
        assert_eq!(*row, want, "sample {k}");
    }
    let kept: Vec<usize> = filter_generations(&parallel).iter().map(|o| o.key.sample_k).collect();
    assert_eq!(kept, vec![0, 3, 6, 9]);
}
