//! Detectors: directional-control balance, invisible characters and
//! homoglyph identifiers.

pub mod bidi;
pub mod chars;

use crate::finding::{CheckId, Finding};
use crate::render::render_preview;
use crate::text::{LineIndex, Span};
use crate::unicode::code_point_label;

/// Fills in location and preview fields from a byte span.
pub(crate) struct FindingBuilder<'a> {
    source: &'a str,
    index: &'a LineIndex,
}

impl<'a> FindingBuilder<'a> {
    pub(crate) fn new(source: &'a str, index: &'a LineIndex) -> Self {
        FindingBuilder { source, index }
    }

    pub(crate) fn finding(&self, check_id: CheckId, span: Span, code_points: Vec<char>, message: String) -> Finding {
        let (line, col) = self.index.line_col(self.source, span.start);
        let preview = render_preview(self.index.line_text(self.source, line));
        Finding {
            check_id,
            severity: check_id.default_severity(),
            path: String::new(),
            line,
            col,
            byte_span: span,
            code_points: code_points.into_iter().map(code_point_label).collect(),
            message,
            preview,
        }
    }
}
