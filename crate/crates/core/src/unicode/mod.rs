//! Code point classification: directional controls, paragraph separators,
//! invisibles, scripts, confusable skeletons and mirrored punctuation.

pub mod bidi;
pub mod confusables;
pub mod invisible;
pub mod mirror;
pub mod script;
mod script_table;

pub use bidi::{classify_bidi, is_paragraph_separator, BidiControlKind, ControlRole};
pub use confusables::{skeleton, ConfusableParseError, ConfusableTable};
pub use invisible::{is_invisible, InvisibleSet, InvisibleSetError, InvisibleSource, BUILTIN_INVISIBLES};
pub use mirror::mirror;
pub use script::{script_of, Script};

/// `U+XXXX` notation, at least four uppercase hex digits.
pub fn code_point_label(cp: char) -> String {
    format!("U+{:04X}", cp as u32)
}
