//! Span-preserving Java scanner: a comment/literal-aware token stream and brace
//! matching over class bodies.

use std::ops::Range;

use super::{MethodSpan, OutlineError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tok {
    Ident,
    Literal,
    Punct(u8),
}

#[derive(Debug, Clone, Copy)]
pub struct Token {
    pub kind: Tok,
    pub start: usize,
    pub end: usize,
}

/// Tokens of `text`, skipping comments and whitespace. With `partial`, an
/// unterminated comment or literal ends the stream instead of failing.
pub fn tokens(text: &str, partial: bool) -> Result<Vec<Token>, OutlineError> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let fail = |what: &str, at: usize| OutlineError::Unparseable(format!("unterminated {what} at byte {at}"));
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if b[i..].starts_with(b"//") {
            i = b[i..].iter().position(|&x| x == b'\n').map_or(b.len(), |p| i + p + 1);
        } else if b[i..].starts_with(b"/*") {
            match text[i + 2..].find("*/") {
                Some(p) => i = i + 2 + p + 2,
                None if partial => break,
                None => return Err(fail("comment", i)),
            }
        } else if b[i..].starts_with(b"\"\"\"") {
            let mut j = i + 3;
            let mut closed = false;
            while j < b.len() {
                if b[j] == b'\\' {
                    j += 2;
                } else if b[j..].starts_with(b"\"\"\"") {
                    j += 3;
                    closed = true;
                    break;
                } else {
                    j += 1;
                }
            }
            if !closed {
                if partial {
                    break;
                }
                return Err(fail("text block", i));
            }
            out.push(Token { kind: Tok::Literal, start: i, end: j });
            i = j;
        } else if c == b'"' || c == b'\'' {
            let mut j = i + 1;
            let mut closed = false;
            while j < b.len() && b[j] != b'\n' {
                if b[j] == b'\\' {
                    j += 2;
                } else if b[j] == c {
                    j += 1;
                    closed = true;
                    break;
                } else {
                    j += 1;
                }
            }
            if !closed {
                if partial {
                    break;
                }
                return Err(fail("literal", i));
            }
            out.push(Token { kind: Tok::Literal, start: i, end: j });
            i = j;
        } else if c.is_ascii_alphanumeric() || c == b'_' || c == b'$' || c >= 0x80 {
            let mut j = i + 1;
            while j < b.len() && (b[j].is_ascii_alphanumeric() || b[j] == b'_' || b[j] == b'$' || b[j] >= 0x80) {
                j += 1;
            }
            out.push(Token { kind: Tok::Ident, start: i, end: j });
            i = j;
        } else {
            out.push(Token { kind: Tok::Punct(c), start: i, end: i + 1 });
            i += 1;
        }
    }
    Ok(out)
}

/// Index of the token closing the brace opened at `open`, or `None` if unbalanced.
pub fn matching_brace(toks: &[Token], open: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (k, t) in toks.iter().enumerate().skip(open) {
        match t.kind {
            Tok::Punct(b'{') => depth += 1,
            Tok::Punct(b'}') => {
                depth -= 1;
                if depth == 0 {
                    return Some(k);
                }
            }
            _ => {}
        }
    }
    None
}

const TYPE_KEYWORDS: [&str; 5] = ["class", "interface", "enum", "record", "@interface"];
const NOT_METHOD: [&str; 8] = ["if", "for", "while", "switch", "catch", "synchronized", "try", "new"];

struct Parser<'a> {
    text: &'a str,
    toks: Vec<Token>,
    methods: Vec<MethodSpan>,
}

/// Annotations that mark a method as a test (JUnit 4 and 5).
const TEST_ANNOTATIONS: &[&str] = &["Test", "ParameterizedTest", "RepeatedTest", "TestFactory", "TestTemplate"];

impl<'a> Parser<'a> {
    fn s(&self, k: usize) -> &'a str {
        &self.text[self.toks[k].start..self.toks[k].end]
    }

    fn is(&self, k: usize, p: u8) -> bool {
        self.toks.get(k).is_some_and(|t| t.kind == Tok::Punct(p))
    }

    /// Members between token `from` and `to` (exclusive).
    fn members(&mut self, from: usize, to: usize) -> Result<(), OutlineError> {
        let mut header = from;
        let mut k = from;
        let mut parens = 0i64;
        while k < to {
            match self.toks[k].kind {
                Tok::Punct(b'(') => parens += 1,
                Tok::Punct(b')') => parens -= 1,
                Tok::Punct(b';') if parens == 0 => header = k + 1,
                Tok::Punct(b'}') if parens == 0 => {
                    return Err(OutlineError::Unparseable(format!("unbalanced `}}` at byte {}", self.toks[k].start)));
                }
                Tok::Punct(b'{') if parens == 0 => {
                    let close = matching_brace(&self.toks, k)
                        .filter(|&c| c < to)
                        .ok_or_else(|| OutlineError::Unparseable(format!("unbalanced `{{` at byte {}", self.toks[k].start)))?;
                    match self.classify(header, k) {
                        Header::Type => {
                            self.members(k + 1, close)?;
                            header = close + 1;
                        }
                        Header::Method(name_tok) => {
                            self.push_method(header, name_tok, k, close);
                            header = close + 1;
                        }
                        Header::Initializer => header = close + 1,
                        // expression braces (array initializers, anonymous classes) run
                        // until the declaration's `;`
                        Header::Expression => {}
                    }
                    k = close + 1;
                    continue;
                }
                _ => {}
            }
            k += 1;
        }
        Ok(())
    }

    fn classify(&self, header: usize, brace: usize) -> Header {
        if header == brace {
            return Header::Initializer;
        }
        let mut parens = 0i64;
        let mut last_group: Option<usize> = None;
        let mut after_group_throws = false;
        for k in header..brace {
            match self.toks[k].kind {
                Tok::Punct(b'(') => {
                    if parens == 0 {
                        last_group = Some(k);
                        after_group_throws = false;
                    }
                    parens += 1;
                }
                Tok::Punct(b')') => parens -= 1,
                Tok::Punct(b'=') | Tok::Punct(b'-') if parens == 0 => return Header::Expression,
                Tok::Ident if parens == 0 => {
                    let s = self.s(k);
                    if TYPE_KEYWORDS.contains(&s) && !(k > header && self.is(k - 1, b'.')) {
                        return Header::Type;
                    }
                    if s == "throws" {
                        after_group_throws = true;
                    }
                    if s == "new" {
                        return Header::Expression;
                    }
                }
                _ => {}
            }
        }
        if let Some(open) = last_group {
            let close_ok = self.closing_paren(open).is_some_and(|c| c + 1 == brace || after_group_throws);
            if close_ok && open > header && self.toks[open - 1].kind == Tok::Ident {
                let name = self.s(open - 1);
                if !NOT_METHOD.contains(&name) && !(open >= header + 2 && self.is(open - 2, b'@')) {
                    return Header::Method(open - 1);
                }
            }
        }
        if brace == header + 1 && self.s(header) == "static" {
            return Header::Initializer;
        }
        Header::Expression
    }

    fn closing_paren(&self, open: usize) -> Option<usize> {
        let mut depth = 0i64;
        for k in open..self.toks.len() {
            match self.toks[k].kind {
                Tok::Punct(b'(') => depth += 1,
                Tok::Punct(b')') => {
                    depth -= 1;
                    if depth == 0 {
                        return Some(k);
                    }
                }
                _ => {}
            }
        }
        None
    }

    fn is_test_annotated(&self, header: usize, name_tok: usize) -> bool {
        let mut k = header;
        while k < name_tok {
            if self.is(k, b'@') {
                let mut last = None;
                let mut j = k + 1;
                while j < name_tok && self.toks[j].kind == Tok::Ident {
                    last = Some(self.s(j));
                    if self.is(j + 1, b'.') {
                        j += 2;
                    } else {
                        break;
                    }
                }
                if last.is_some_and(|a| TEST_ANNOTATIONS.contains(&a)) {
                    return true;
                }
            }
            k += 1;
        }
        false
    }

    fn push_method(&mut self, header: usize, name_tok: usize, open: usize, close: usize) {
        let text = self.text;
        let first = self.toks[header].start;
        let line_start = text[..first].rfind('\n').map_or(0, |p| p + 1);
        let start = if text[line_start..first].trim().is_empty() { line_start } else { first };
        let end = line_end_after(text, self.toks[close].end);
        let name = self.s(name_tok).to_string();
        let is_test = self.is_test_annotated(header, name_tok) || name.starts_with("test");
        let statements = self.statements(open, close);
        self.methods.push(MethodSpan { name, span: start..end, is_test, statements });
    }

    /// Statements of a method body: each ends at a `;` outside parentheses, or at a
    /// block brace. A statement's range covers whole physical lines.
    fn statements(&self, open: usize, close: usize) -> Vec<Range<usize>> {
        let text = self.text;
        let mut out = Vec::new();
        let mut begin: Option<usize> = None;
        let mut parens = 0i64;
        for k in open + 1..close {
            let t = self.toks[k];
            match t.kind {
                Tok::Punct(b'(') => parens += 1,
                Tok::Punct(b')') => parens -= 1,
                _ => {}
            }
            let ends = parens == 0 && matches!(t.kind, Tok::Punct(b';') | Tok::Punct(b'{') | Tok::Punct(b'}'));
            if begin.is_none() {
                begin = Some(t.start);
            }
            if ends {
                let b = begin.take().expect("statement start");
                let line_start = text[..b].rfind('\n').map_or(0, |p| p + 1);
                let end = line_end_after(text, t.end);
                if matches!(t.kind, Tok::Punct(b';')) && text[line_start..b].trim().is_empty() && end != t.end {
                    out.push(line_start..end);
                }
            }
        }
        // drop statements sharing lines with a neighbour
        let mut clean: Vec<Range<usize>> = Vec::new();
        for r in out {
            if clean.last().is_some_and(|p| p.end > r.start) {
                continue;
            }
            clean.push(r);
        }
        clean
    }
}

enum Header {
    Type,
    Method(usize),
    Initializer,
    Expression,
}

/// When only whitespace follows `pos` on its line, the offset after that line's
/// newline; otherwise `pos`.
fn line_end_after(text: &str, pos: usize) -> usize {
    let rest = &text[pos..];
    match rest.find('\n') {
        Some(p) if rest[..p].trim().is_empty() => pos + p + 1,
        None if rest.trim().is_empty() => text.len(),
        _ => pos,
    }
}

/// Methods of every class in the file, in source order.
pub fn find_methods(text: &str) -> Result<Vec<MethodSpan>, OutlineError> {
    let toks = tokens(text, false)?;
    let n = toks.len();
    let mut p = Parser { text, toks, methods: Vec::new() };
    p.members(0, n)?;
    let mut methods = p.methods;
    methods.sort_by_key(|m| m.span.start);
    Ok(methods)
}

/// For text that starts with a method declaration, the offset just past the brace
/// closing its body.
pub fn method_end(text: &str) -> Option<usize> {
    let toks = tokens(text, true).ok()?;
    let open = toks.iter().position(|t| matches!(t.kind, Tok::Punct(b'{') | Tok::Punct(b';')))?;
    if toks[open].kind != Tok::Punct(b'{') {
        return None;
    }
    matching_brace(&toks, open).map(|c| toks[c].end)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SRC: &str = r#"package a;

import org.junit.Test;
import static org.junit.Assert.*;

public class CalcTest {
    private final int[] xs = {1, 2};
    private Runnable r = new Runnable() { public void run() {} };

    static { init(); }

    @Test(expected = IllegalStateException.class)
    public void addsNumbers() throws Exception {
        // a } in a comment
        String s = "}";
        assertEquals(3, Calc.add(1, 2));
    }

    private int helper(int x) {
        if (x > 0) { return 1; }
        return 0;
    }

    @org.junit.Test
    public void scales() {
        char c = '{';
        assertEquals(4,
            Calc.scale(2, 2));
    }

    static class Inner {
        void testNested() {}
    }
}
"#;

    #[test]
    fn finds_methods_and_tests() {
        let m = find_methods(SRC).unwrap();
        let got: Vec<_> = m.iter().map(|s| (s.name.as_str(), s.is_test)).collect();
        assert_eq!(got, vec![("addsNumbers", true), ("helper", false), ("scales", true), ("testNested", true)]);
        assert!(SRC[m[0].span.clone()].starts_with("    @Test(expected"));
        assert!(SRC[m[0].span.clone()].ends_with("    }\n"));
    }

    #[test]
    fn statements_cover_whole_lines() {
        let m = find_methods(SRC).unwrap();
        let st: Vec<_> = m[2].statements.iter().map(|r| &SRC[r.clone()]).collect();
        assert_eq!(st, vec!["        char c = '{';\n", "        assertEquals(4,\n            Calc.scale(2, 2));\n"]);
    }

    #[test]
    fn unbalanced_is_an_error() {
        assert!(find_methods("class A { void f() { }").is_err());
        assert!(find_methods("class A { } }").is_err());
        assert!(find_methods("class A { String s = \"abc; }").is_err());
    }

    #[test]
    fn method_end_stops_at_the_closing_brace() {
        let g = "@Test\npublic void testX() {\n  if (a) { b(); }\n}\n@Test public void more";
        assert_eq!(method_end(g), Some(g.find("}\n@Test").unwrap() + 1));
        assert_eq!(method_end("public void testX() {\n  a();"), None);
    }
}
