//! Open/close balance of directional formatting characters inside strings
//! and comments, and any such character in code.

use serde::{Deserialize, Serialize};

use crate::finding::{CheckId, Finding, Severity};
use crate::lexer::{Region, RegionKind};
use crate::text::{LineIndex, Span};
use crate::unicode::{classify_bidi, code_point_label, is_paragraph_separator, BidiControlKind, ControlRole};

use super::FindingBuilder;

/// One directional control occurrence. Offsets are relative to the text
/// passed to [`extract_controls`]; line and column are 1-based within it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ControlEvent {
    pub kind: BidiControlKind,
    pub byte_offset: usize,
    pub char_offset: usize,
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    UnterminatedOpener,
    StrayCloser,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BidiViolation {
    pub kind: ViolationKind,
    pub event: ControlEvent,
    pub expected_closer: Option<BidiControlKind>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BidiMode {
    /// PDF closes only embeddings and overrides, PDI only isolates.
    #[default]
    Strict,
    /// Like strict, but a PDI also closes every embedding or override opened
    /// after the isolate it matches.
    Ucd,
}

impl std::str::FromStr for BidiMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(BidiMode::Strict),
            "ucd" => Ok(BidiMode::Ucd),
            other => Err(format!("unknown bidi mode `{other}` (expected strict or ucd)")),
        }
    }
}

pub fn extract_controls(text: &str) -> Vec<ControlEvent> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let mut prev_cr = false;
    for (char_offset, (byte_offset, c)) in text.char_indices().enumerate() {
        if let Some(kind) = classify_bidi(c) {
            out.push(ControlEvent {
                kind,
                byte_offset,
                char_offset,
                line,
                col,
            });
        }
        match c {
            '\n' if prev_cr => col = 0,
            '\n' | '\r' => {
                line += 1;
                col = 0;
            }
            _ => {}
        }
        prev_cr = c == '\r';
        col += 1;
    }
    out
}

/// Violations of one paragraph segment, in event order.
pub fn check_balance(events: &[ControlEvent], mode: BidiMode) -> Vec<BidiViolation> {
    // Stacks hold event indices; indices grow with position, so comparing
    // them tells which opener came first.
    let mut embeddings: Vec<usize> = Vec::new();
    let mut isolates: Vec<usize> = Vec::new();
    let mut stray: Vec<usize> = Vec::new();
    for (i, ev) in events.iter().enumerate() {
        match ev.kind.role() {
            ControlRole::EmbeddingOpener => embeddings.push(i),
            ControlRole::IsolateOpener => isolates.push(i),
            ControlRole::Closer => {
                if ev.kind == BidiControlKind::Pdf {
                    if embeddings.pop().is_none() {
                        stray.push(i);
                    }
                } else {
                    match isolates.pop() {
                        Some(opener) => {
                            if mode == BidiMode::Ucd {
                                while embeddings.last().is_some_and(|&e| e > opener) {
                                    embeddings.pop();
                                }
                            }
                        }
                        None => stray.push(i),
                    }
                }
            }
        }
    }
    let mut out: Vec<(usize, BidiViolation)> = embeddings
        .into_iter()
        .chain(isolates)
        .map(|i| {
            (
                i,
                BidiViolation {
                    kind: ViolationKind::UnterminatedOpener,
                    event: events[i],
                    expected_closer: events[i].kind.expected_closer(),
                },
            )
        })
        .chain(stray.into_iter().map(|i| {
            (
                i,
                BidiViolation {
                    kind: ViolationKind::StrayCloser,
                    event: events[i],
                    expected_closer: None,
                },
            )
        }))
        .collect();
    out.sort_by_key(|(i, _)| *i);
    out.into_iter().map(|(_, v)| v).collect()
}

/// Violations of a whole string or comment body: each paragraph is checked
/// on its own. Event offsets are relative to `text`.
pub fn check_text(text: &str, mode: BidiMode) -> Vec<BidiViolation> {
    let mut out = Vec::new();
    for seg in segments(text, Span::new(0, text.len())) {
        let base_chars = text[..seg.start].chars().count();
        let events = extract_controls(&text[seg.start..seg.end]);
        let first_line = LineIndex::new(text).line_col(text, seg.start).0;
        for mut v in check_balance(&events, mode) {
            v.event.byte_offset += seg.start;
            v.event.char_offset += base_chars;
            v.event.line += first_line - 1;
            out.push(v);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BidiOptions {
    pub mode: BidiMode,
    /// Report balanced controls in strings and comments as info findings.
    pub flag_all: bool,
}

/// Splits `span` of `source` at paragraph separators.
fn segments(source: &str, span: Span) -> Vec<Span> {
    let mut out = Vec::new();
    let mut start = span.start;
    for (k, c) in source[span.start..span.end].char_indices() {
        if is_paragraph_separator(c) {
            out.push(Span::new(start, span.start + k));
            start = span.start + k + c.len_utf8();
        }
    }
    out.push(Span::new(start, span.end));
    out
}

fn describe(kind: BidiControlKind) -> String {
    format!("{} ({})", kind.name(), code_point_label(kind.code_point()))
}

pub fn scan_bidi(source: &str, regions: &[Region], options: BidiOptions) -> Vec<Finding> {
    let index = LineIndex::new(source);
    let builder = FindingBuilder::new(source, &index);
    let mut out = Vec::new();
    for region in regions {
        match region.kind {
            RegionKind::Code => {
                for ev in extract_controls(region.text(source)) {
                    let at = region.span.start + ev.byte_offset;
                    out.push(builder.finding(
                        CheckId::BidiInCode,
                        Span::new(at, at + ev.kind.code_point().len_utf8()),
                        vec![ev.kind.code_point()],
                        format!("{} outside any string or comment", describe(ev.kind)),
                    ));
                }
            }
            kind => {
                let (unterminated_id, place) = if kind == RegionKind::String {
                    (CheckId::BidiUnterminatedString, "string literal")
                } else {
                    (CheckId::BidiUnterminatedComment, "comment")
                };
                for seg in segments(source, region.span) {
                    let events = extract_controls(&source[seg.start..seg.end]);
                    if events.is_empty() {
                        continue;
                    }
                    let violations = check_balance(&events, options.mode);
                    for v in &violations {
                        let at = seg.start + v.event.byte_offset;
                        let span = Span::new(at, at + v.event.kind.code_point().len_utf8());
                        let f = match v.kind {
                            ViolationKind::UnterminatedOpener => builder.finding(
                                unterminated_id,
                                span,
                                vec![v.event.kind.code_point()],
                                format!(
                                    "unterminated {} in {place}; expected {} before the end of the line",
                                    describe(v.event.kind),
                                    v.expected_closer.map_or("a closer", BidiControlKind::name)
                                ),
                            ),
                            ViolationKind::StrayCloser => builder.finding(
                                CheckId::BidiStrayCloser,
                                span,
                                vec![v.event.kind.code_point()],
                                format!("{} in {place} closes nothing", describe(v.event.kind)),
                            ),
                        };
                        out.push(f);
                    }
                    if options.flag_all {
                        for ev in events.iter().filter(|e| !violations.iter().any(|v| v.event == **e)) {
                            let at = seg.start + ev.byte_offset;
                            let mut f = builder.finding(
                                unterminated_id,
                                Span::new(at, at + ev.kind.code_point().len_utf8()),
                                vec![ev.kind.code_point()],
                                format!("balanced {} in {place}", describe(ev.kind)),
                            );
                            f.severity = Severity::Info;
                            out.push(f);
                        }
                    }
                }
            }
        }
    }
    out
}
