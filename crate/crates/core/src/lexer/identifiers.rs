use serde::Serialize;

use super::partition::{Region, RegionKind};
use super::profile::LanguageProfile;
use crate::text::{LineIndex, Span};
use crate::unicode::InvisibleSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentifierToken {
    pub text: String,
    pub span: Span,
    pub line: usize,
    pub col: usize,
}

/// Maximal identifier runs inside Code regions. Invisible characters from
/// `invisibles` continue a run (but never start one), so a name with a
/// hidden character comes back as a single token with the character kept.
pub fn extract_identifiers(
    source: &str,
    regions: &[Region],
    profile: &LanguageProfile,
    invisibles: &InvisibleSet,
) -> Vec<IdentifierToken> {
    let rule = &profile.identifier_rule;
    let index = LineIndex::new(source);
    let mut out = Vec::new();
    for region in regions.iter().filter(|r| r.kind == RegionKind::Code) {
        let text = region.text(source);
        let base = region.span.start;
        let mut iter = text.char_indices().peekable();
        while let Some((k, c)) = iter.next() {
            let starts = rule.is_start(c);
            if !starts && !rule.is_continue(c) {
                continue;
            }
            let mut end = k + c.len_utf8();
            while let Some(&(k2, c2)) = iter.peek() {
                if rule.is_continue(c2) || invisibles.contains(c2) {
                    end = k2 + c2.len_utf8();
                    iter.next();
                } else {
                    break;
                }
            }
            if !starts {
                // A run that begins with a continue-only character (a number
                // literal such as `1abc`) is not an identifier.
                continue;
            }
            let span = Span::new(base + k, base + end);
            let (line, col) = index.line_col(source, span.start);
            out.push(IdentifierToken {
                text: source[span.start..span.end].to_string(),
                span,
                line,
                col,
            });
        }
    }
    out
}
