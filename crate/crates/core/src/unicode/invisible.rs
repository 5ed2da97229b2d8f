use std::collections::BTreeSet;

use thiserror::Error;

use super::bidi::classify_bidi;

/// Default members: zero-width characters, word joiner, implicit
/// directional marks, byte order mark and soft hyphen.
pub const BUILTIN_INVISIBLES: [char; 9] = [
    '\u{200B}', // ZERO WIDTH SPACE
    '\u{200C}', // ZERO WIDTH NON-JOINER
    '\u{200D}', // ZERO WIDTH JOINER
    '\u{2060}', // WORD JOINER
    '\u{200E}', // LEFT-TO-RIGHT MARK
    '\u{200F}', // RIGHT-TO-LEFT MARK
    '\u{061C}', // ARABIC LETTER MARK
    '\u{FEFF}', // ZERO WIDTH NO-BREAK SPACE
    '\u{00AD}', // SOFT HYPHEN
];

pub const SOFT_HYPHEN: char = '\u{00AD}';

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvisibleSource {
    Builtin,
    ConfigExtended,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvisibleSetError {
    #[error("U+{0:04X} is a directional formatting character and cannot be listed as invisible")]
    BidiControl(u32),
    #[error("invalid code point `{0}` (expected U+XXXX or a bare hex value)")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvisibleSet {
    members: BTreeSet<char>,
    source: InvisibleSource,
}

impl Default for InvisibleSet {
    fn default() -> Self {
        InvisibleSet::builtin()
    }
}

impl InvisibleSet {
    pub fn builtin() -> Self {
        InvisibleSet {
            members: BUILTIN_INVISIBLES.into_iter().collect(),
            source: InvisibleSource::Builtin,
        }
    }

    /// The builtin set plus `extra`. Directional formatting characters are
    /// rejected because the bidi detector owns them.
    pub fn extended<I: IntoIterator<Item = char>>(extra: I) -> Result<Self, InvisibleSetError> {
        let mut set = InvisibleSet::builtin();
        for c in extra {
            if classify_bidi(c).is_some() {
                return Err(InvisibleSetError::BidiControl(c as u32));
            }
            if set.members.insert(c) {
                set.source = InvisibleSource::ConfigExtended;
            }
        }
        Ok(set)
    }

    /// Parses `U+200B`, `u+200b` or `200B`.
    pub fn parse_code_point(text: &str) -> Result<char, InvisibleSetError> {
        let t = text.trim();
        let hex = t
            .strip_prefix("U+")
            .or_else(|| t.strip_prefix("u+"))
            .unwrap_or(t);
        u32::from_str_radix(hex, 16)
            .ok()
            .and_then(char::from_u32)
            .ok_or_else(|| InvisibleSetError::Invalid(text.to_string()))
    }

    pub fn contains(&self, cp: char) -> bool {
        self.members.contains(&cp)
    }

    pub fn source(&self) -> InvisibleSource {
        self.source
    }

    pub fn iter(&self) -> impl Iterator<Item = char> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn is_invisible(cp: char, set: &InvisibleSet) -> bool {
    set.contains(cp)
}
