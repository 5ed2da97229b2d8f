//! Language-profile driven partitioning of source text into code, string
//! and comment regions, plus identifier extraction.

pub mod identifiers;
pub mod partition;
pub mod profile;

pub use identifiers::{extract_identifiers, IdentifierToken};
pub use partition::{partition, Region, RegionKind};
pub use profile::{
    load_profile, BlockCommentPair, IdentifierRule, LanguageProfile, ProfileError, ProfileRegistry, StringDelimiter,
    BUILTIN_LANGUAGE_IDS,
};
