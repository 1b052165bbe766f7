//! Span-preserving Python scanner: logical lines, indentation blocks and
//! function definitions at module or class level.

use std::ops::Range;

use super::{MethodSpan, OutlineError};

/// A logical line: one or more physical lines joined by open brackets, open
/// strings or backslash continuations. Blank and comment-only lines are not logical
/// lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicalLine {
    /// Start of the first physical line (including indentation).
    pub start: usize,
    /// End of the last physical line, after its `'\n'` when there is one.
    pub end: usize,
    /// Offset of the first non-whitespace byte.
    pub text_start: usize,
    /// Indentation width (tabs advance to the next multiple of 8).
    pub indent: usize,
    /// Last significant byte (outside comments) is `:`.
    pub opens_block: bool,
}

impl LogicalLine {
    pub fn head<'a>(&self, text: &'a str) -> &'a str {
        &text[self.text_start..self.end]
    }
}

fn indent_width(line: &[u8]) -> (usize, usize) {
    let mut width = 0;
    let mut n = 0;
    for &b in line {
        match b {
            b' ' => width += 1,
            b'\t' => width = (width / 8 + 1) * 8,
            b'\x0c' => width = 0,
            _ => break,
        }
        n += 1;
    }
    (width, n)
}

/// Splits `text` into logical lines.
///
/// With `partial` set, malformed or unfinished input ends the scan and the logical
/// lines completed so far are returned; otherwise it is an error.
pub fn logical_lines(text: &str, partial: bool) -> Result<Vec<LogicalLine>, OutlineError> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    // (quote byte, triple)
    let mut string: Option<(u8, bool)> = None;
    let mut depth: i64 = 0;
    let mut current: Option<LogicalLine> = None;

    while i < b.len() {
        let line_start = i;
        let line_end = b[i..].iter().position(|&c| c == b'\n').map_or(b.len(), |p| i + p + 1);
        let mut j = line_start;
        if current.is_none() {
            let (width, n) = indent_width(&b[line_start..line_end]);
            let first = line_start + n;
            let blank = first >= line_end || matches!(b[first], b'\n' | b'\r' | b'#');
            if blank {
                i = line_end;
                continue;
            }
            current = Some(LogicalLine { start: line_start, end: line_end, text_start: first, indent: width, opens_block: false });
            j = first;
        }
        let line = current.as_mut().expect("logical line in progress");
        let mut continued = false;
        while j < line_end {
            let c = b[j];
            if let Some((q, triple)) = string {
                if c == b'\\' {
                    j += 2;
                    continue;
                }
                if c == q {
                    if !triple {
                        string = None;
                        line.opens_block = false;
                    } else if b.get(j + 1) == Some(&q) && b.get(j + 2) == Some(&q) {
                        string = None;
                        line.opens_block = false;
                        j += 3;
                        continue;
                    }
                } else if c == b'\n' && !triple {
                    if partial {
                        return Ok(out);
                    }
                    return Err(OutlineError::Unparseable(format!("unterminated string on line starting at byte {line_start}")));
                }
                j += 1;
                continue;
            }
            match c {
                b'#' => break,
                b'\'' | b'"' => {
                    if b.get(j + 1) == Some(&c) && b.get(j + 2) == Some(&c) {
                        string = Some((c, true));
                        j += 3;
                        continue;
                    }
                    string = Some((c, false));
                }
                b'(' | b'[' | b'{' => depth += 1,
                b')' | b']' | b'}' => {
                    depth -= 1;
                    if depth < 0 {
                        if partial {
                            return Ok(out);
                        }
                        return Err(OutlineError::Unparseable(format!("unbalanced `{}` at byte {j}", c as char)));
                    }
                }
                b'\\' if matches!(b.get(j + 1), Some(b'\n')) || (b.get(j + 1) == Some(&b'\r') && b.get(j + 2) == Some(&b'\n')) => {
                    continued = true;
                }
                _ => {}
            }
            if !c.is_ascii_whitespace() && c != b'\\' {
                line.opens_block = c == b':';
            }
            j += 1;
        }
        line.end = line_end;
        i = line_end;
        if string.is_none() && depth == 0 && !continued {
            out.push(current.take().expect("logical line in progress"));
        }
    }
    if current.is_some() || string.is_some() || depth != 0 {
        if partial {
            return Ok(out);
        }
        return Err(OutlineError::Unparseable("input ends inside a string, bracket or continuation".into()));
    }
    Ok(out)
}

/// Checks that every indent matches an enclosing level and that indentation only
/// grows after a block opener.
pub fn check_indentation(lines: &[LogicalLine]) -> Result<(), OutlineError> {
    let mut stack = vec![0usize];
    let mut prev_opens = false;
    for l in lines {
        let top = *stack.last().expect("indent stack never empty");
        if l.indent > top {
            if !prev_opens {
                return Err(OutlineError::Unparseable(format!("unexpected indent at byte {}", l.start)));
            }
            stack.push(l.indent);
        } else {
            if prev_opens {
                return Err(OutlineError::Unparseable(format!("expected an indented block before byte {}", l.start)));
            }
            while *stack.last().unwrap() > l.indent {
                stack.pop();
            }
            if *stack.last().unwrap() != l.indent {
                return Err(OutlineError::Unparseable(format!("dedent does not match any outer level at byte {}", l.start)));
            }
        }
        prev_opens = l.opens_block;
    }
    if prev_opens {
        return Err(OutlineError::Unparseable("block opener at end of file".into()));
    }
    Ok(())
}

fn word_after<'a>(head: &'a str, keyword: &str) -> Option<&'a str> {
    let rest = head.strip_prefix(keyword)?;
    if !rest.starts_with([' ', '\t']) {
        return None;
    }
    let rest = rest.trim_start();
    let end = rest.find(|c: char| !(c.is_alphanumeric() || c == '_')).unwrap_or(rest.len());
    (end > 0).then(|| &rest[..end])
}

/// Function name when the logical line is a `def` / `async def` header.
pub fn def_name(head: &str) -> Option<&str> {
    word_after(head, "def").or_else(|| head.strip_prefix("async").and_then(|r| word_after(r.trim_start(), "def")))
}

fn is_class(head: &str) -> bool {
    word_after(head, "class").is_some()
}

#[derive(Clone, Copy, PartialEq)]
enum Scope {
    Class,
    Other,
}

/// Functions defined at module level or directly inside (possibly nested) classes,
/// with their decorators. Each span runs to the end of the last logical line of the
/// body; trailing blank and comment lines are left to the gap that follows.
pub fn find_methods(text: &str, lines: &[LogicalLine]) -> Vec<MethodSpan> {
    let mut methods = Vec::new();
    let mut scopes: Vec<(usize, Scope)> = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let l = &lines[i];
        while scopes.last().is_some_and(|&(ind, _)| ind >= l.indent) {
            scopes.pop();
        }
        let head = l.head(text);
        let in_class_chain = scopes.iter().all(|&(_, s)| s == Scope::Class);
        if head.starts_with('@') && in_class_chain {
            // decorators followed by a def at the same indent
            let mut k = i;
            while k < lines.len() && lines[k].indent == l.indent && lines[k].head(text).starts_with('@') {
                k += 1;
            }
            if k < lines.len() && lines[k].indent == l.indent {
                if let Some(name) = def_name(lines[k].head(text)) {
                    let end_idx = block_end(lines, k);
                    methods.push(make_span(name, l.start..lines[end_idx].end, &lines[i..=end_idx]));
                    i = end_idx + 1;
                    continue;
                }
            }
            i = k;
            continue;
        }
        if let Some(name) = def_name(head) {
            if in_class_chain {
                let end_idx = block_end(lines, i);
                methods.push(make_span(name, l.start..lines[end_idx].end, &lines[i..=end_idx]));
                i = end_idx + 1;
                continue;
            }
        }
        if l.opens_block {
            scopes.push((l.indent, if is_class(head) { Scope::Class } else { Scope::Other }));
        }
        i += 1;
    }
    methods
}

fn make_span(name: &str, span: Range<usize>, lines: &[LogicalLine]) -> MethodSpan {
    let body_from = lines.iter().position(|l| l.opens_block).map_or(lines.len(), |p| p + 1);
    MethodSpan {
        name: name.to_string(),
        span,
        is_test: name.starts_with("test"),
        statements: lines[body_from..].iter().map(|l| l.start..l.end).collect(),
    }
}

/// Index of the last logical line in the block opened at `header`.
fn block_end(lines: &[LogicalLine], header: usize) -> usize {
    if !lines[header].opens_block {
        return header;
    }
    let indent = lines[header].indent;
    let mut end = header;
    for (k, l) in lines.iter().enumerate().skip(header + 1) {
        if l.indent <= indent {
            break;
        }
        end = k;
    }
    end
}

/// For text that starts with a function definition, the offset at which it is
/// complete: the start of the first later logical line that is not indented past
/// the definition.
pub fn method_end(text: &str) -> Option<usize> {
    let lines = logical_lines(text, true).ok()?;
    let first = lines.first()?;
    let mut k = 0;
    while k < lines.len() && lines[k].head(text).starts_with('@') {
        k += 1;
    }
    def_name(lines.get(k)?.head(text))?;
    let indent = first.indent;
    let mut saw_body = false;
    for l in &lines[k + 1..] {
        if l.indent <= indent {
            return saw_body.then_some(l.start);
        }
        saw_body = true;
    }
    None
}

/// Indentation string of the line containing `offset`.
pub fn line_indent(text: &str, offset: usize) -> &str {
    let start = text[..offset].rfind('\n').map_or(0, |p| p + 1);
    let rest = &text[start..];
    let n = rest.len() - rest.trim_start_matches([' ', '\t']).len();
    &rest[..n]
}

/// Block openers with no indented body, as offsets just past the opener line,
/// paired with the indentation a body would need.
pub fn empty_blocks(text: &str) -> Vec<(usize, String)> {
    let Ok(lines) = logical_lines(text, false) else { return Vec::new() };
    let mut out = Vec::new();
    for (k, l) in lines.iter().enumerate() {
        if !l.opens_block {
            continue;
        }
        let next_deeper = lines.get(k + 1).is_some_and(|n| n.indent > l.indent);
        if !next_deeper {
            let indent = line_indent(text, l.text_start);
            out.push((l.end, format!("{indent}    ")));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn logical_lines_join_brackets_and_strings() {
        let src = "x = (1,\n     2)\n\n# c\ns = '''a\nb'''\ny = 1 \\\n  + 2\n";
        let lines = logical_lines(src, false).unwrap();
        assert_eq!(lines.len(), 3);
        assert_eq!(&src[lines[0].start..lines[0].end], "x = (1,\n     2)\n");
        assert_eq!(&src[lines[1].start..lines[1].end], "s = '''a\nb'''\n");
        assert_eq!(&src[lines[2].start..lines[2].end], "y = 1 \\\n  + 2\n");
    }

    #[test]
    fn opener_ignores_comments_and_strings() {
        let lines = logical_lines("if x:  # note\n    d = {'a': 1}\n", false).unwrap();
        assert!(lines[0].opens_block);
        assert!(!lines[1].opens_block);
        let lines = logical_lines("s = 'a:'\n", false).unwrap();
        assert!(!lines[0].opens_block);
    }

    #[test]
    fn errors_on_unterminated_and_bad_dedent() {
        assert!(logical_lines("x = (1,\n", false).is_err());
        assert!(logical_lines("s = 'abc\n", false).is_err());
        let lines = logical_lines("def f():\n    x = 1\n  y = 2\n", false).unwrap();
        assert!(check_indentation(&lines).is_err());
        let lines = logical_lines("x = 1\n    y = 2\n", false).unwrap();
        assert!(check_indentation(&lines).is_err());
    }

    #[test]
    fn finds_class_methods_not_nested_functions() {
        let src = "import os\n\nclass T:\n    @dec\n    def test_a(self):\n        def inner():\n            pass\n        inner()\n\n    def helper(self):\n        pass\n\ndef test_top():\n    assert True\n";
        let lines = logical_lines(src, false).unwrap();
        let m = find_methods(src, &lines);
        let names: Vec<_> = m.iter().map(|s| s.name.as_str()).collect();
        assert_eq!(names, vec!["test_a", "helper", "test_top"]);
        assert!(src[m[0].span.clone()].starts_with("    @dec\n"));
        assert!(src[m[0].span.clone()].ends_with("inner()\n"));
    }

    #[test]
    fn method_end_detection() {
        let gen = "def test_x(self):\n    assert 1\n\ndef other";
        assert_eq!(method_end(gen), Some(gen.find("def other").unwrap()));
        assert_eq!(method_end("def test_x(self):\n    assert 1\n"), None);
        assert_eq!(method_end("x = 1\n"), None);
    }

    #[test]
    fn empty_block_detection() {
        let src = "class T(object):\n\nif True:\n    pass\n";
        assert_eq!(empty_blocks(src), vec![(17, "    ".to_string())]);
    }
}
