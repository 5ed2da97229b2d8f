use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::text::Span;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Info,
    Warning,
    Error,
}

impl Severity {
    pub const ALL: [Severity; 3] = [Severity::Error, Severity::Warning, Severity::Info];

    pub const fn as_str(self) -> &'static str {
        match self {
            Severity::Info => "info",
            Severity::Warning => "warning",
            Severity::Error => "error",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Severity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Severity::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| format!("unknown severity `{s}` (expected error, warning or info)"))
    }
}

/// The fixed catalog of check identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckId {
    BidiUnterminatedString,
    BidiUnterminatedComment,
    BidiStrayCloser,
    BidiInCode,
    InvisibleInIdentifier,
    InvisibleInCode,
    InvisibleTerminatorSplit,
    HomoglyphMixedScript,
    HomoglyphConfusablePair,
    EncodingError,
}

impl CheckId {
    pub const ALL: [CheckId; 10] = [
        CheckId::BidiUnterminatedString,
        CheckId::BidiUnterminatedComment,
        CheckId::BidiStrayCloser,
        CheckId::BidiInCode,
        CheckId::InvisibleInIdentifier,
        CheckId::InvisibleInCode,
        CheckId::InvisibleTerminatorSplit,
        CheckId::HomoglyphMixedScript,
        CheckId::HomoglyphConfusablePair,
        CheckId::EncodingError,
    ];

    pub const fn as_str(self) -> &'static str {
        match self {
            CheckId::BidiUnterminatedString => "BIDI_UNTERMINATED_STRING",
            CheckId::BidiUnterminatedComment => "BIDI_UNTERMINATED_COMMENT",
            CheckId::BidiStrayCloser => "BIDI_STRAY_CLOSER",
            CheckId::BidiInCode => "BIDI_IN_CODE",
            CheckId::InvisibleInIdentifier => "INVISIBLE_IN_IDENTIFIER",
            CheckId::InvisibleInCode => "INVISIBLE_IN_CODE",
            CheckId::InvisibleTerminatorSplit => "INVISIBLE_TERMINATOR_SPLIT",
            CheckId::HomoglyphMixedScript => "HOMOGLYPH_MIXED_SCRIPT",
            CheckId::HomoglyphConfusablePair => "HOMOGLYPH_CONFUSABLE_PAIR",
            CheckId::EncodingError => "ENCODING_ERROR",
        }
    }

    pub const fn default_severity(self) -> Severity {
        match self {
            CheckId::HomoglyphMixedScript => Severity::Warning,
            _ => Severity::Error,
        }
    }

    pub const fn description(self) -> &'static str {
        match self {
            CheckId::BidiUnterminatedString => "Directional formatting character left open inside a string literal",
            CheckId::BidiUnterminatedComment => "Directional formatting character left open inside a comment",
            CheckId::BidiStrayCloser => "PDF or PDI with no matching opener in the same string or comment",
            CheckId::BidiInCode => "Directional formatting character outside any string or comment",
            CheckId::InvisibleInIdentifier => "Invisible character inside an identifier",
            CheckId::InvisibleInCode => "Invisible character in code outside identifiers",
            CheckId::InvisibleTerminatorSplit => "Invisible character splitting a block comment delimiter",
            CheckId::HomoglyphMixedScript => "Identifier mixes Latin, Cyrillic or Greek letters",
            CheckId::HomoglyphConfusablePair => "Two distinct identifiers look the same",
            CheckId::EncodingError => "File is not valid UTF-8",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown check id `{s}`"))
    }
}

/// The logical line with visible code point tokens, and how it displays.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Preview {
    pub annotated: String,
    pub rendered: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub check_id: CheckId,
    pub severity: Severity,
    pub path: String,
    pub line: usize,
    pub col: usize,
    pub byte_span: Span,
    /// `U+XXXX` labels of the code points involved.
    pub code_points: Vec<String>,
    pub message: String,
    pub preview: Preview,
}

impl Finding {
    /// Report order: path, line, column, check id.
    pub fn sort_key(&self) -> (&str, usize, usize, CheckId, usize) {
        (&self.path, self.line, self.col, self.check_id, self.byte_span.start)
    }
}
