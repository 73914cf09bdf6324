//! Small hand-rolled cursor shared by the element parsers.

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    /// Offset of `src` inside the text the user supplied, so that nested
    /// parsers report absolute positions.
    base: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str, base: usize) -> Self {
        Cursor { src, pos: 0, base }
    }

    pub(crate) fn position(&self) -> usize {
        self.base + self.pos
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> Error {
        Error::syntax(self.position(), message)
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    pub(crate) fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn peek_digit(&mut self) -> bool {
        self.skip_ws();
        matches!(self.peek(), Some(c) if c.is_ascii_digit())
    }

    pub(crate) fn unsigned(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a digit"));
        }
        Ok(self.src[start..self.pos].parse().expect("digits parse"))
    }

    pub(crate) fn small_unsigned(&mut self) -> Result<usize> {
        let at = self.position();
        let n = self.unsigned()?;
        usize::try_from(n).map_err(|_| Error::syntax(at, "index too large"))
    }

    pub(crate) fn identifier(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let mut len = 0;
        for (i, c) in rest.char_indices() {
            let ok = if i == 0 {
                c.is_ascii_alphabetic() || c == '_'
            } else {
                c.is_ascii_alphanumeric() || c == '_' || c == '^'
            };
            if !ok {
                break;
            }
            len = i + c.len_utf8();
        }
        if len == 0 {
            None
        } else {
            self.pos += len;
            Some(&rest[..len])
        }
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

/// Splits `src` at top-level occurrences of `sep`, ignoring separators nested
/// inside brackets. Returns each piece with its byte offset.
pub(crate) fn split_top_level(src: &str, sep: char) -> Vec<(usize, &str)> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    for (i, c) in src.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ if c == sep && depth == 0 => {
                out.push((start, &src[start..i]));
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push((start, &src[start..]));
    out
}

/// Strips one pair of enclosing delimiters, returning the inner text and its
/// offset relative to `src`.
pub(crate) fn strip_delimiters(src: &str, base: usize, open: char, close: char) -> Result<(usize, &str)> {
    let lead = src.len() - src.trim_start().len();
    let trimmed = src.trim();
    if !trimmed.starts_with(open) {
        return Err(Error::syntax(base + lead, format!("expected `{open}`")));
    }
    if !trimmed.ends_with(close) || trimmed.len() < 2 {
        return Err(Error::syntax(
            base + lead + trimmed.len(),
            format!("expected `{close}`"),
        ));
    }
    let inner = &trimmed[open.len_utf8()..trimmed.len() - close.len_utf8()];
    Ok((base + lead + open.len_utf8(), inner))
}

/// Joins signed terms the way every carrier prints sums: `a + b - c`.
pub(crate) fn join_signed(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (negative, body)) in terms.into_iter().enumerate() {
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}
