#![allow(dead_code)]

use std::path::PathBuf;

use pairforge_core::align::{CodeTestPair, MatchKind};
use pairforge_core::harness::ProjectManifest;
use pairforge_core::promptgen::{make_prompt, outline_text, ContextMode, Task, TaskPrompt};

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn tool_available(name: &str) -> bool {
    std::env::var_os("PATH").map(|p| std::env::split_paths(&p).any(|d| d.join(name).is_file())).unwrap_or(false)
}

pub struct MicroProject {
    pub name: &'static str,
    pub manifest: ProjectManifest,
}

impl MicroProject {
    pub fn load(name: &'static str) -> Self {
        let path = fixtures().join("microprojects").join(name).join("manifest.toml");
        MicroProject { name, manifest: ProjectManifest::load(&path).unwrap() }
    }

    pub fn generation(&self, which: &str) -> String {
        let p = fixtures().join("microprojects").join(self.name).join("generations").join(format!("{which}.txt"));
        std::fs::read_to_string(p).unwrap()
    }
}

pub fn micro_prompt(p: &MicroProject, task: Task) -> TaskPrompt {
    let m = &p.manifest;
    let code = m.read_code_file().unwrap();
    let test = m.read_test_file().unwrap();
    let test_id = format!("{}::{}", m.project_id, m.test_file);
    let pair = CodeTestPair {
        pair_id: "micro".into(),
        repo_id: m.project_id.clone(),
        subject_language: m.subject_language,
        code_file_id: format!("{}::{}", m.project_id, m.code_file),
        test_file_id: test_id.clone(),
        match_kind: MatchKind::ExactPattern,
        score: 1.0,
    };
    let outline = outline_text(&test_id, m.subject_language, &test).unwrap();
    make_prompt(&pair, &code, &test, &outline, task, ContextMode::WithCode, None).unwrap()
}

pub mod criteria;
