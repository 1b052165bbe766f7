//! Whitespace-and-punctuation lexing used by the lexical metrics.
//!
//! A token is a maximal run of word characters (alphanumerics and `_`, Unicode
//! included) or a single other non-whitespace character. Whitespace only separates.
//! The result is independent of any trained vocabulary.

pub fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

pub fn code_tokens(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in text.char_indices() {
        if is_word_char(c) {
            start.get_or_insert(i);
            continue;
        }
        if let Some(s) = start.take() {
            out.push(&text[s..i]);
        }
        if !c.is_whitespace() {
            out.push(&text[i..i + c.len_utf8()]);
        }
    }
    if let Some(s) = start {
        out.push(&text[s..]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_words_and_punctuation() {
        assert_eq!(
            code_tokens("assertEquals(3, add(1,2));"),
            vec!["assertEquals", "(", "3", ",", "add", "(", "1", ",", "2", ")", ")", ";"]
        );
        assert_eq!(code_tokens("  x_1 == y\n"), vec!["x_1", "=", "=", "y"]);
        assert!(code_tokens(" \n\t").is_empty());
        assert_eq!(code_tokens("naïve+1"), vec!["naïve", "+", "1"]);
    }
}
