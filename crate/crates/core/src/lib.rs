//! Detection of source code whose displayed form differs from what a
//! compiler reads: directional formatting characters left open inside
//! strings and comments, invisible characters, and look-alike identifiers.
//!
//! The pipeline for one file is [`lexer::partition`] into regions,
//! [`lexer::extract_identifiers`], then the detectors in [`detect`]. The
//! [`scan`] module drives it over files and formats reports; [`render`]
//! simulates how a line is displayed.

pub mod corpus;
pub mod detect;
pub mod finding;
pub mod lexer;
pub mod oracle;
pub mod render;
pub mod scan;
pub mod text;
pub mod unicode;

pub use finding::{CheckId, Finding, Preview, Severity};
pub use text::Span;
