//! Test-file outlines, task prompts and generation injection.
//!
//! Outlines come from span-preserving scanners ([`python`], [`java`]) rather than a
//! full parser, so every byte of a test file belongs to exactly one span or gap and
//! a method can be cut out and spliced back byte-exactly.

pub mod java;
pub mod python;

use std::fmt;
use std::ops::Range;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::align::CodeTestPair;
use crate::ingest::SourceFile;
use crate::lexer::code_tokens;
use crate::tokenizer::{TokenId, Vocabulary, CODETESTPAIR, SEPARATOR_TEXT};
use crate::SubjectLanguage;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OutlineError {
    #[error("unparseable test file: {0}")]
    Unparseable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InjectError {
    #[error("insertion point {point} is outside the baseline file ({len} bytes) or not on a character boundary")]
    BadInsertionPoint { point: usize, len: usize },
    #[error("generated text is empty")]
    EmptyGeneration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodSpan {
    pub name: String,
    pub span: Range<usize>,
    pub is_test: bool,
    /// Body statements, each covering whole physical lines.
    #[serde(skip)]
    pub statements: Vec<Range<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestFileOutline {
    pub file_id: String,
    pub subject_language: SubjectLanguage,
    pub preamble_span: Range<usize>,
    pub methods: Vec<MethodSpan>,
    pub trailing_span: Range<usize>,
}

impl TestFileOutline {
    pub fn test_indices(&self) -> Vec<usize> {
        self.methods.iter().enumerate().filter(|(_, m)| m.is_test).map(|(i, _)| i).collect()
    }

    pub fn test_count(&self) -> usize {
        self.methods.iter().filter(|m| m.is_test).count()
    }

    /// Preamble, then each method followed by the gap after it, then the trailing
    /// span. Concatenated, the pieces are the file.
    pub fn pieces(&self) -> Vec<Range<usize>> {
        let mut out = vec![self.preamble_span.clone()];
        for (i, m) in self.methods.iter().enumerate() {
            out.push(m.span.clone());
            if let Some(next) = self.methods.get(i + 1) {
                out.push(m.span.end..next.span.start);
            }
        }
        if !self.methods.is_empty() {
            out.push(self.trailing_span.clone());
        }
        out
    }
}

pub fn outline_text(file_id: &str, language: SubjectLanguage, text: &str) -> Result<TestFileOutline, OutlineError> {
    let methods = match language {
        SubjectLanguage::Python => {
            let lines = python::logical_lines(text, false)?;
            python::check_indentation(&lines)?;
            python::find_methods(text, &lines)
        }
        SubjectLanguage::Java => java::find_methods(text)?,
    };
    let first = methods.first().map_or(text.len(), |m| m.span.start);
    let last = methods.last().map_or(text.len(), |m| m.span.end);
    Ok(TestFileOutline {
        file_id: file_id.to_string(),
        subject_language: language,
        preamble_span: 0..first,
        methods,
        trailing_span: last..text.len(),
    })
}

pub fn outline_test_file(file: &SourceFile) -> Result<TestFileOutline, OutlineError> {
    outline_text(&file.file_id, file.subject_language, &file.content)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    FirstTest,
    LastTest,
    ExtraTest,
    Completion,
}

impl Task {
    pub const ALL: [Task; 4] = [Task::FirstTest, Task::LastTest, Task::ExtraTest, Task::Completion];

    pub fn as_str(self) -> &'static str {
        match self {
            Task::FirstTest => "first_test",
            Task::LastTest => "last_test",
            Task::ExtraTest => "extra_test",
            Task::Completion => "completion",
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Task {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Task::ALL.into_iter().find(|t| t.as_str() == s).ok_or_else(|| format!("unknown task `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContextMode {
    WithCode,
    WithoutCode,
}

impl ContextMode {
    pub const ALL: [ContextMode; 2] = [ContextMode::WithCode, ContextMode::WithoutCode];

    pub fn as_str(self) -> &'static str {
        match self {
            ContextMode::WithCode => "with_code",
            ContextMode::WithoutCode => "without_code",
        }
    }
}

impl fmt::Display for ContextMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ContextMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ContextMode::ALL.into_iter().find(|t| t.as_str() == s).ok_or_else(|| format!("unknown context mode `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SkipReason {
    NoTestMethods,
    FewerThanTwoTests,
    NoStatement,
    Unparseable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedPrompt {
    pub pair_id: String,
    pub task: Task,
    pub reason: SkipReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskPrompt {
    pub pair_id: String,
    pub task: Task,
    pub context_mode: ContextMode,
    pub subject_language: SubjectLanguage,
    pub test_file_id: String,
    /// Full code file; present only for [`ContextMode::WithCode`].
    pub code_context: Option<String>,
    pub test_context: String,
    pub ground_truth: Option<String>,
    /// Test file variant the generation is spliced into.
    pub baseline_file: String,
    pub insertion_point: usize,
    /// Indentation of the method the generation replaces or follows.
    pub insertion_indent: String,
}

impl TaskPrompt {
    /// Prompt rendered as text, with the separator token written out.
    pub fn prompt_text(&self) -> String {
        match &self.code_context {
            Some(code) => format!("{code}{SEPARATOR_TEXT}{}", self.test_context),
            None => self.test_context.clone(),
        }
    }

    /// Prompt tokens; the separator is the special token, never its spelling.
    pub fn prompt_tokens(&self, vocab: &Vocabulary) -> Vec<TokenId> {
        let mut out = Vec::new();
        if let Some(code) = &self.code_context {
            out.extend(vocab.encode(code));
            out.push(CODETESTPAIR);
        }
        out.extend(vocab.encode(&self.test_context));
        out
    }

    pub fn inject(&self, generated: &str) -> Result<String, InjectError> {
        inject_generation(&self.baseline_file, self.insertion_point, generated, self.subject_language, &self.insertion_indent)
    }
}

/// Method and body-statement indices for a completion prompt.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompletionTarget {
    pub method: usize,
    pub statement: usize,
}

/// Final statement of the last test method that has a body.
pub fn default_completion_target(outline: &TestFileOutline) -> Option<CompletionTarget> {
    outline
        .test_indices()
        .into_iter()
        .rev()
        .find(|&i| !outline.methods[i].statements.is_empty())
        .map(|i| CompletionTarget { method: i, statement: outline.methods[i].statements.len() - 1 })
}

/// `text` with `span` removed, returning the removed text and where it was.
pub fn extract(text: &str, span: Range<usize>) -> (String, usize, String) {
    let mut rest = String::with_capacity(text.len() - span.len());
    rest.push_str(&text[..span.start]);
    rest.push_str(&text[span.end..]);
    (rest, span.start, text[span].to_string())
}

fn remove_spans(text: &str, spans: &[Range<usize>]) -> String {
    let mut out = String::with_capacity(text.len());
    let mut at = 0;
    for s in spans {
        out.push_str(&text[at..s.start]);
        at = s.end;
    }
    out.push_str(&text[at..]);
    out
}

/// Gives every Python block that lost its whole body a `pass` so the baseline still
/// parses. A placeholder at the insertion point goes after any injected text.
fn fill_empty_blocks(language: SubjectLanguage, mut text: String, mut point: usize) -> (String, usize) {
    if language != SubjectLanguage::Python {
        return (text, point);
    }
    let mut blocks = python::empty_blocks(&text);
    blocks.reverse();
    for (at, indent) in blocks {
        let mut filler = format!("{indent}pass\n");
        if at == text.len() && !text.ends_with('\n') {
            filler.insert(0, '\n');
        }
        text.insert_str(at, &filler);
        if at < point {
            point += filler.len();
        }
    }
    (text, point)
}

fn indent_of(text: &str, span: &Range<usize>) -> String {
    let s = &text[span.clone()];
    // the method span starts at its line start; skip any decorator lines' content
    let n = s.len() - s.trim_start_matches([' ', '\t']).len();
    s[..n].to_string()
}

/// Builds the prompt for one task and context mode.
pub fn make_prompt(
    pair: &CodeTestPair,
    code_text: &str,
    test_text: &str,
    outline: &TestFileOutline,
    task: Task,
    mode: ContextMode,
    completion: Option<CompletionTarget>,
) -> Result<TaskPrompt, SkipReason> {
    let tests = outline.test_indices();
    let language = outline.subject_language;
    let (test_context, ground_truth, baseline_file, insertion_point, indent_span) = match task {
        Task::FirstTest => {
            let first = *tests.first().ok_or(SkipReason::NoTestMethods)?;
            let span = outline.methods[first].span.clone();
            let all: Vec<_> = tests.iter().map(|&i| outline.methods[i].span.clone()).collect();
            let (baseline, point) = fill_empty_blocks(language, remove_spans(test_text, &all), span.start);
            (test_text[..span.start].to_string(), Some(test_text[span.clone()].to_string()), baseline, point, span)
        }
        Task::LastTest => {
            if tests.len() < 2 {
                return Err(if tests.is_empty() { SkipReason::NoTestMethods } else { SkipReason::FewerThanTwoTests });
            }
            let span = outline.methods[*tests.last().unwrap()].span.clone();
            let (rest, point, gt) = extract(test_text, span.clone());
            let (baseline, point) = fill_empty_blocks(language, rest, point);
            (test_text[..span.start].to_string(), Some(gt), baseline, point, span)
        }
        Task::ExtraTest => {
            let last = *tests.last().ok_or(SkipReason::NoTestMethods)?;
            let span = outline.methods[last].span.clone();
            (test_text[..span.end].to_string(), None, test_text.to_string(), span.end, span)
        }
        Task::Completion => {
            let target = completion.or_else(|| default_completion_target(outline)).ok_or(SkipReason::NoStatement)?;
            let method = outline.methods.get(target.method).filter(|m| m.is_test).ok_or(SkipReason::NoStatement)?;
            let stmt = method.statements.get(target.statement).ok_or(SkipReason::NoStatement)?.clone();
            let (rest, point, gt) = extract(test_text, stmt.clone());
            let (baseline, point) = fill_empty_blocks(language, rest, point);
            (test_text[..stmt.start].to_string(), Some(gt), baseline, point, stmt)
        }
    };
    Ok(TaskPrompt {
        pair_id: pair.pair_id.clone(),
        task,
        context_mode: mode,
        subject_language: language,
        test_file_id: pair.test_file_id.clone(),
        code_context: (mode == ContextMode::WithCode).then(|| code_text.to_string()),
        test_context,
        ground_truth,
        insertion_indent: indent_of(test_text, &indent_span),
        baseline_file,
        insertion_point,
    })
}

/// All tasks in both context modes for one pair; tasks whose preconditions fail are
/// reported once per task.
pub fn make_prompts(pair: &CodeTestPair, code_text: &str, test_text: &str, tasks: &[Task]) -> (Vec<TaskPrompt>, Vec<SkippedPrompt>) {
    let mut prompts = Vec::new();
    let mut skipped = Vec::new();
    let outline = match outline_text(&pair.test_file_id, pair.subject_language, test_text) {
        Ok(o) => o,
        Err(_) => {
            for &task in tasks {
                skipped.push(SkippedPrompt { pair_id: pair.pair_id.clone(), task, reason: SkipReason::Unparseable });
            }
            return (prompts, skipped);
        }
    };
    for &task in tasks {
        for mode in ContextMode::ALL {
            match make_prompt(pair, code_text, test_text, &outline, task, mode, None) {
                Ok(p) => prompts.push(p),
                Err(reason) => {
                    skipped.push(SkippedPrompt { pair_id: pair.pair_id.clone(), task, reason });
                    break;
                }
            }
        }
    }
    (prompts, skipped)
}

/// Re-indents Python text so its first line starts with `indent`; lines sharing the
/// first line's indentation prefix keep their relative depth, other lines (string
/// continuations) are left alone.
fn reindent(generated: &str, indent: &str) -> String {
    let first = generated.lines().next().unwrap_or("");
    let current = &first[..first.len() - first.trim_start_matches([' ', '\t']).len()];
    if current == indent {
        return generated.to_string();
    }
    let mut out = String::with_capacity(generated.len() + 16);
    for line in generated.split_inclusive('\n') {
        match line.strip_prefix(current) {
            Some(rest) if !line.trim().is_empty() => {
                out.push_str(indent);
                out.push_str(rest);
            }
            _ => out.push_str(line),
        }
    }
    out
}

/// Splices `generated` into `baseline` at `point`.
///
/// For Python the generation is re-indented to `indent` after dropping leading blank
/// lines, and a line break is added where the splice would otherwise join lines.
/// Everything outside the splice is unchanged.
pub fn inject_generation(
    baseline: &str,
    point: usize,
    generated: &str,
    language: SubjectLanguage,
    indent: &str,
) -> Result<String, InjectError> {
    if point > baseline.len() || !baseline.is_char_boundary(point) {
        return Err(InjectError::BadInsertionPoint { point, len: baseline.len() });
    }
    if generated.trim().is_empty() {
        return Err(InjectError::EmptyGeneration);
    }
    let mut body = generated.to_string();
    if language == SubjectLanguage::Python {
        let skip: usize = generated.split_inclusive('\n').take_while(|l| l.trim().is_empty()).map(str::len).sum();
        body = reindent(&generated[skip..], indent);
        if point > 0 && !baseline[..point].ends_with('\n') {
            body.insert(0, '\n');
        }
        if point < baseline.len() && !body.ends_with('\n') {
            body.push('\n');
        }
    }
    let mut out = String::with_capacity(baseline.len() + body.len());
    out.push_str(&baseline[..point]);
    out.push_str(&body);
    out.push_str(&baseline[point..]);
    Ok(out)
}

/// Name of the first method in a generated snippet.
pub fn generated_method_name(generated: &str, language: SubjectLanguage) -> Option<String> {
    match language {
        SubjectLanguage::Python => {
            let lines = python::logical_lines(generated, true).ok()?;
            lines.iter().find_map(|l| python::def_name(l.head(generated)).map(str::to_string))
        }
        SubjectLanguage::Java => {
            let toks = java::tokens(generated, true).ok()?;
            let open = toks.iter().position(|t| t.kind == java::Tok::Punct(b'('))?;
            (open > 0 && toks[open - 1].kind == java::Tok::Ident).then(|| generated[toks[open - 1].start..toks[open - 1].end].to_string())
        }
    }
}

/// Offset at which a generated snippet holds one complete method, if it does.
pub fn method_end(generated: &str, language: SubjectLanguage) -> Option<usize> {
    match language {
        SubjectLanguage::Python => {
            let skip: usize = generated.split_inclusive('\n').take_while(|l| l.trim().is_empty()).map(str::len).sum();
            python::method_end(&generated[skip..]).map(|e| e + skip)
        }
        SubjectLanguage::Java => java::method_end(generated),
    }
}

/// Stop predicate over generated token ids for the sampler.
pub fn method_end_detector(vocab: &Vocabulary, language: SubjectLanguage) -> impl Fn(&[TokenId]) -> bool + Sync + '_ {
    move |ids: &[TokenId]| {
        let text = vocab.decode(ids).unwrap_or_default();
        method_end(&text, language).is_some()
    }
}

/// Node of a block tree: a statement or block labelled by its first lexical token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockNode {
    pub label: String,
    pub children: Vec<BlockNode>,
}

impl BlockNode {
    fn leaf(label: &str) -> Self {
        BlockNode { label: label.to_string(), children: Vec::new() }
    }

    /// Canonical signature: `(label child child ...)`.
    pub fn signature(&self) -> String {
        let mut s = format!("({}", self.label);
        for c in &self.children {
            s.push(' ');
            s.push_str(&c.signature());
        }
        s.push(')');
        s
    }

    /// Signatures of every subtree, root included.
    pub fn subtree_signatures(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<String>) {
        out.push(self.signature());
        for c in &self.children {
            c.collect(out);
        }
    }
}

fn first_token(s: &str) -> &str {
    code_tokens(s).into_iter().next().unwrap_or("")
}

/// Block tree of possibly malformed text; scanning stops at the first point it
/// cannot follow.
pub fn block_tree(text: &str, language: SubjectLanguage) -> BlockNode {
    let mut root = BlockNode::leaf("root");
    match language {
        SubjectLanguage::Python => {
            let lines = python::logical_lines(text, true).unwrap_or_default();
            // stack of (indent, path of child indices from the root)
            let mut stack: Vec<(usize, Vec<usize>)> = Vec::new();
            for l in &lines {
                while stack.last().is_some_and(|(ind, _)| *ind >= l.indent) {
                    stack.pop();
                }
                let path = stack.last().map(|(_, p)| p.clone()).unwrap_or_default();
                let parent = node_at(&mut root, &path);
                parent.children.push(BlockNode::leaf(first_token(l.head(text))));
                let mut child = path;
                child.push(parent.children.len() - 1);
                stack.push((l.indent, child));
            }
        }
        SubjectLanguage::Java => {
            let toks = java::tokens(text, true).unwrap_or_default();
            let mut path: Vec<usize> = Vec::new();
            let mut head: Option<usize> = None;
            let mut parens = 0i64;
            for t in &toks {
                if head.is_none() && !matches!(t.kind, java::Tok::Punct(b'}') | java::Tok::Punct(b';')) {
                    head = Some(t.start);
                }
                match t.kind {
                    java::Tok::Punct(b'(') => parens += 1,
                    java::Tok::Punct(b')') => parens -= 1,
                    java::Tok::Punct(b';') if parens <= 0 => {
                        if let Some(h) = head.take() {
                            node_at(&mut root, &path).children.push(BlockNode::leaf(first_token(&text[h..])));
                        }
                    }
                    java::Tok::Punct(b'{') => {
                        let label = head.take().map_or("{", |h| first_token(&text[h..]));
                        let parent = node_at(&mut root, &path);
                        parent.children.push(BlockNode::leaf(label));
                        path.push(parent.children.len() - 1);
                        parens = 0;
                    }
                    java::Tok::Punct(b'}') => {
                        if let Some(h) = head.take() {
                            node_at(&mut root, &path).children.push(BlockNode::leaf(first_token(&text[h..])));
                        }
                        if path.pop().is_none() {
                            break;
                        }
                    }
                    _ => {}
                }
            }
            if let Some(h) = head {
                node_at(&mut root, &path).children.push(BlockNode::leaf(first_token(&text[h..])));
            }
        }
    }
    root
}

fn node_at<'a>(root: &'a mut BlockNode, path: &[usize]) -> &'a mut BlockNode {
    let mut n = root;
    for &i in path {
        n = &mut n.children[i];
    }
    n
}

/// `<root>/<pair_id>/<task>/<context_mode>/<k>.txt`
pub fn generation_path(root: &Path, pair_id: &str, task: Task, mode: ContextMode, k: usize) -> PathBuf {
    root.join(pair_id).join(task.as_str()).join(mode.as_str()).join(format!("{k}.txt"))
}

/// Generations stored for a prompt, ordered by sample index. Files whose stem is not
/// an integer are ignored.
pub fn read_generations(root: &Path, prompt: &TaskPrompt) -> std::io::Result<Vec<(usize, String)>> {
    let dir = root.join(&prompt.pair_id).join(prompt.task.as_str()).join(prompt.context_mode.as_str());
    if !dir.is_dir() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for entry in std::fs::read_dir(&dir)? {
        let path = entry?.path();
        if path.extension().and_then(|e| e.to_str()) != Some("txt") {
            continue;
        }
        let Some(k) = path.file_stem().and_then(|s| s.to_str()).and_then(|s| s.parse::<usize>().ok()) else {
            continue;
        };
        let bytes = std::fs::read(&path)?;
        out.push((k, String::from_utf8_lossy(&bytes).into_owned()));
    }
    out.sort_by_key(|(k, _)| *k);
    Ok(out)
}
