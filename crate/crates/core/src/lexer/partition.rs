use serde::Serialize;

use super::profile::{LanguageProfile, StringDelimiter};
use crate::text::{LineIndex, Span};
use crate::unicode::is_paragraph_separator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RegionKind {
    Code,
    String,
    LineComment,
    BlockComment,
}

impl RegionKind {
    pub fn is_comment(self) -> bool {
        matches!(self, RegionKind::LineComment | RegionKind::BlockComment)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Region {
    pub kind: RegionKind,
    pub span: Span,
    pub start_line: usize,
    pub start_col: usize,
    /// Opening delimiter; `None` for code.
    pub opener: Option<Span>,
    /// Closing delimiter; `None` for code, line comments and anything left
    /// open at end of input.
    pub closer: Option<Span>,
}

impl Region {
    /// A string or block comment whose closer never arrived.
    pub fn is_unterminated(&self) -> bool {
        matches!(self.kind, RegionKind::String | RegionKind::BlockComment) && self.closer.is_none()
    }

    pub fn text<'a>(&self, source: &'a str) -> &'a str {
        &source[self.span.start..self.span.end]
    }
}

#[derive(Clone, Copy)]
enum OpenerKind {
    Line,
    Block(usize),
    Str(usize),
}

struct Opener<'p> {
    text: &'p str,
    kind: OpenerKind,
}

struct Lexer<'p> {
    profile: &'p LanguageProfile,
    openers: Vec<Opener<'p>>,
    first_byte: [bool; 256],
}

fn utf8_len(lead: u8) -> usize {
    match lead {
        0x00..=0x7F => 1,
        0xC0..=0xDF => 2,
        0xE0..=0xEF => 3,
        _ => 4,
    }
}

fn is_word_boundary(prev: Option<char>) -> bool {
    match prev {
        None => true,
        Some(c) => c.is_whitespace() || ";|&()<>".contains(c),
    }
}

impl<'p> Lexer<'p> {
    fn new(profile: &'p LanguageProfile) -> Self {
        let mut openers = Vec::new();
        for o in &profile.line_comment_openers {
            openers.push(Opener {
                text: o,
                kind: OpenerKind::Line,
            });
        }
        for (i, b) in profile.block_comment_pairs.iter().enumerate() {
            openers.push(Opener {
                text: &b.opener,
                kind: OpenerKind::Block(i),
            });
        }
        for (i, d) in profile.string_delimiters.iter().enumerate() {
            openers.push(Opener {
                text: &d.opener,
                kind: OpenerKind::Str(i),
            });
        }
        // Longest match first; the sort is stable so profile order breaks ties.
        openers.sort_by(|a, b| b.text.len().cmp(&a.text.len()));
        let mut first_byte = [false; 256];
        for o in &openers {
            if let Some(&b) = o.text.as_bytes().first() {
                first_byte[b as usize] = true;
            }
        }
        Lexer {
            profile,
            openers,
            first_byte,
        }
    }

    fn find_opener(&self, source: &str, at: usize) -> Option<&Opener<'p>> {
        let tail = &source[at..];
        let mut prev: Option<Option<char>> = None;
        let mut prev_char = || *prev.get_or_insert_with(|| source[..at].chars().next_back());
        for o in &self.openers {
            if !tail.starts_with(o.text) {
                continue;
            }
            let first = o.text.chars().next().unwrap_or(' ');
            if self.profile.identifier_rule.is_continue(first) {
                if let Some(p) = prev_char() {
                    if self.profile.identifier_rule.is_continue(p) {
                        continue;
                    }
                }
            }
            if matches!(o.kind, OpenerKind::Line)
                && self.profile.line_comment_at_word_start
                && !is_word_boundary(prev_char())
            {
                continue;
            }
            return Some(o);
        }
        None
    }

    fn run(&self, source: &str) -> Vec<(RegionKind, Span, Option<Span>, Option<Span>)> {
        let bytes = source.as_bytes();
        let mut out = Vec::new();
        let mut code_start = 0;
        let mut i = 0;
        if self.profile.shebang && source.starts_with("#!") {
            let end = line_end(source, 2);
            out.push((RegionKind::LineComment, Span::new(0, end), Some(Span::new(0, 2)), None));
            i = end;
            code_start = end;
        }
        while i < bytes.len() {
            let b = bytes[i];
            if self.first_byte[b as usize] {
                if let Some(op) = self.find_opener(source, i) {
                    let open = Span::new(i, i + op.text.len());
                    let found = match op.kind {
                        OpenerKind::Line => Some((RegionKind::LineComment, line_end(source, open.end), None)),
                        OpenerKind::Block(idx) => {
                            let (end, closer) = self.block_end(source, open.end, idx);
                            Some((RegionKind::BlockComment, end, closer))
                        }
                        OpenerKind::Str(idx) => {
                            let d = &self.profile.string_delimiters[idx];
                            string_end(source, open.end, d).map(|(end, closer)| (RegionKind::String, end, closer))
                        }
                    };
                    if let Some((kind, end, closer)) = found {
                        if code_start < i {
                            out.push((RegionKind::Code, Span::new(code_start, i), None, None));
                        }
                        out.push((kind, Span::new(i, end), Some(open), closer));
                        i = end;
                        code_start = end;
                        continue;
                    }
                }
            }
            i += utf8_len(b);
        }
        if code_start < bytes.len() {
            out.push((RegionKind::Code, Span::new(code_start, bytes.len()), None, None));
        }
        out
    }

    fn block_end(&self, source: &str, from: usize, idx: usize) -> (usize, Option<Span>) {
        let pair = &self.profile.block_comment_pairs[idx];
        let bytes = source.as_bytes();
        let mut depth = 1usize;
        let mut j = from;
        while j < bytes.len() {
            let tail = &source[j..];
            if tail.starts_with(pair.closer.as_str()) {
                depth -= 1;
                let end = j + pair.closer.len();
                if depth == 0 {
                    return (end, Some(Span::new(j, end)));
                }
                j = end;
                continue;
            }
            if pair.nesting && tail.starts_with(pair.opener.as_str()) {
                depth += 1;
                j += pair.opener.len();
                continue;
            }
            j += utf8_len(bytes[j]);
        }
        (bytes.len(), None)
    }
}

/// Byte offset of the first paragraph separator at or after `from`.
fn line_end(source: &str, from: usize) -> usize {
    source[from..]
        .char_indices()
        .find(|&(_, c)| is_paragraph_separator(c))
        .map_or(source.len(), |(k, _)| from + k)
}

/// End of a string literal whose opener ends at `from`. `None` means the
/// opener does not start a literal here (an unmatched char-literal quote).
fn string_end(source: &str, from: usize, d: &StringDelimiter) -> Option<(usize, Option<Span>)> {
    if d.char_literal {
        return char_literal_end(source, from, d);
    }
    let closer = d.closer.as_str();
    let mut j = from;
    while j < source.len() {
        let tail = &source[j..];
        let c = tail.chars().next().expect("non-empty tail");
        if Some(c) == d.escape_char {
            j += c.len_utf8();
            if let Some(next) = source[j..].chars().next() {
                j += next.len_utf8();
            }
            continue;
        }
        if tail.starts_with(closer) {
            if d.escape_by_doubling && tail[closer.len()..].starts_with(closer) {
                j += 2 * closer.len();
                continue;
            }
            let end = j + closer.len();
            return Some((end, Some(Span::new(j, end))));
        }
        if !d.multiline && (c == '\n' || c == '\r') {
            return Some((j, None));
        }
        j += c.len_utf8();
    }
    Some((source.len(), None))
}

const MAX_ESCAPE_CHARS: usize = 12;

fn char_literal_end(source: &str, from: usize, d: &StringDelimiter) -> Option<(usize, Option<Span>)> {
    let closer = d.closer.as_str();
    let tail = &source[from..];
    let mut chars = tail.char_indices();
    let (_, first) = chars.next()?;
    if first == '\n' || first == '\r' || tail.starts_with(closer) {
        return None;
    }
    if Some(first) == d.escape_char {
        // Skip the escaped character itself, then look for the closer a
        // short distance ahead on the same line.
        chars.next()?;
        for (k, c) in chars.take(MAX_ESCAPE_CHARS) {
            if c == '\n' || c == '\r' {
                return None;
            }
            if tail[k..].starts_with(closer) {
                let start = from + k;
                return Some((start + closer.len(), Some(Span::new(start, start + closer.len()))));
            }
        }
        return None;
    }
    let k = first.len_utf8();
    if tail[k..].starts_with(closer) {
        let start = from + k;
        return Some((start + closer.len(), Some(Span::new(start, start + closer.len()))));
    }
    None
}

/// Splits `source` into Code, String, LineComment and BlockComment regions
/// that tile the whole text.
pub fn partition(source: &str, profile: &LanguageProfile) -> Vec<Region> {
    let raw = Lexer::new(profile).run(source);
    let index = LineIndex::new(source);
    raw.into_iter()
        .map(|(kind, span, opener, closer)| {
            let (start_line, start_col) = index.line_col(source, span.start);
            Region {
                kind,
                span,
                start_line,
                start_col,
                opener,
                closer,
            }
        })
        .collect()
}
