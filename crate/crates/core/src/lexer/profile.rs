use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockCommentPair {
    pub opener: String,
    pub closer: String,
    #[serde(default)]
    pub nesting: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StringDelimiter {
    pub opener: String,
    pub closer: String,
    #[serde(default)]
    pub escape_char: Option<char>,
    #[serde(default)]
    pub multiline: bool,
    /// A doubled closer stands for one literal closer (`'it''s'`).
    #[serde(default)]
    pub escape_by_doubling: bool,
    /// Only a literal when it closes after a single character or escape;
    /// otherwise the opener is ordinary code (Rust lifetimes).
    #[serde(default)]
    pub char_literal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentifierRule {
    /// ASCII characters that may start an identifier.
    pub ascii_start: String,
    /// ASCII characters that may continue an identifier.
    pub ascii_continue: String,
    /// Whether non-ASCII XID_Start / XID_Continue characters are accepted.
    pub allow_nonascii_letters: bool,
}

const LETTERS: &str = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
const DIGITS: &str = "0123456789";

impl IdentifierRule {
    pub fn with_extra(extra: &str) -> Self {
        IdentifierRule {
            ascii_start: format!("{LETTERS}_{extra}"),
            ascii_continue: format!("{LETTERS}{DIGITS}_{extra}"),
            allow_nonascii_letters: true,
        }
    }

    pub fn is_start(&self, c: char) -> bool {
        if c.is_ascii() {
            self.ascii_start.contains(c)
        } else {
            self.allow_nonascii_letters && unicode_ident::is_xid_start(c)
        }
    }

    pub fn is_continue(&self, c: char) -> bool {
        if c.is_ascii() {
            self.ascii_continue.contains(c)
        } else {
            self.allow_nonascii_letters && unicode_ident::is_xid_continue(c)
        }
    }
}

impl Default for IdentifierRule {
    fn default() -> Self {
        IdentifierRule::with_extra("")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LanguageProfile {
    pub id: String,
    #[serde(default)]
    pub line_comment_openers: Vec<String>,
    #[serde(default)]
    pub block_comment_pairs: Vec<BlockCommentPair>,
    #[serde(default)]
    pub string_delimiters: Vec<StringDelimiter>,
    #[serde(default)]
    pub identifier_rule: IdentifierRule,
    #[serde(default)]
    pub file_extensions: Vec<String>,
    /// Line comments only start at the beginning of a word (shell `#`).
    #[serde(default)]
    pub line_comment_at_word_start: bool,
    /// A `#!` at the very start of the file is a line comment.
    #[serde(default)]
    pub shebang: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProfileError {
    #[error("unknown language `{0}`")]
    UnknownLanguage(String),
    #[error("profile `{id}`: {reason}")]
    Invalid { id: String, reason: String },
}

impl LanguageProfile {
    /// Checks the structural invariants: no empty opener or closer and no
    /// two string delimiters with the same opener.
    pub fn validate(&self) -> Result<(), ProfileError> {
        let invalid = |reason: String| ProfileError::Invalid {
            id: self.id.clone(),
            reason,
        };
        if self.id.is_empty() {
            return Err(invalid("empty id".into()));
        }
        if self.line_comment_openers.iter().any(String::is_empty) {
            return Err(invalid("empty line comment opener".into()));
        }
        for pair in &self.block_comment_pairs {
            if pair.opener.is_empty() || pair.closer.is_empty() {
                return Err(invalid("empty block comment delimiter".into()));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for d in &self.string_delimiters {
            if d.opener.is_empty() || d.closer.is_empty() {
                return Err(invalid("empty string delimiter".into()));
            }
            if !seen.insert(d.opener.as_str()) {
                return Err(invalid(format!("duplicate string opener `{}`", d.opener)));
            }
        }
        Ok(())
    }
}

fn s(opener: &str, escape: Option<char>, multiline: bool) -> StringDelimiter {
    StringDelimiter {
        opener: opener.to_string(),
        closer: opener.to_string(),
        escape_char: escape,
        multiline,
        escape_by_doubling: false,
        char_literal: false,
    }
}

fn pair(opener: &str, closer: &str, escape: Option<char>, multiline: bool) -> StringDelimiter {
    StringDelimiter {
        closer: closer.to_string(),
        ..s(opener, escape, multiline)
    }
}

fn c_block() -> Vec<BlockCommentPair> {
    vec![BlockCommentPair {
        opener: "/*".into(),
        closer: "*/".into(),
        nesting: false,
    }]
}

fn strs(items: &[&str]) -> Vec<String> {
    items.iter().map(|x| x.to_string()).collect()
}

const BS: Option<char> = Some('\\');

fn base(id: &str, exts: &[&str]) -> LanguageProfile {
    LanguageProfile {
        id: id.to_string(),
        line_comment_openers: strs(&["//"]),
        block_comment_pairs: c_block(),
        string_delimiters: vec![s("\"", BS, false), s("'", BS, false)],
        identifier_rule: IdentifierRule::default(),
        file_extensions: strs(exts),
        line_comment_at_word_start: false,
        shebang: false,
    }
}

pub const BUILTIN_LANGUAGE_IDS: [&str; 12] = [
    "c",
    "cpp",
    "csharp",
    "javascript",
    "java",
    "rust",
    "go",
    "python",
    "sql",
    "bash",
    "assembly",
    "solidity",
];

fn builtin(id: &str) -> Option<LanguageProfile> {
    let p = match id {
        "c" => base("c", &["c", "h"]),
        "cpp" => {
            let mut p = base("cpp", &["cpp", "cc", "cxx", "hpp", "hh", "hxx"]);
            p.string_delimiters.push(pair("R\"(", ")\"", None, true));
            p
        }
        "csharp" => {
            let mut p = base("csharp", &["cs"]);
            p.string_delimiters.push(StringDelimiter {
                escape_by_doubling: true,
                ..pair("@\"", "\"", None, true)
            });
            p
        }
        "javascript" => {
            let mut p = base("javascript", &["js", "mjs", "cjs", "jsx", "ts", "tsx"]);
            p.string_delimiters.push(s("`", BS, true));
            p.identifier_rule = IdentifierRule::with_extra("$");
            p.shebang = true;
            p
        }
        "java" => {
            let mut p = base("java", &["java"]);
            p.string_delimiters.push(s("\"\"\"", BS, true));
            p.identifier_rule = IdentifierRule::with_extra("$");
            p
        }
        "rust" => {
            let mut p = base("rust", &["rs"]);
            p.block_comment_pairs[0].nesting = true;
            p.string_delimiters = vec![
                s("\"", BS, true),
                StringDelimiter {
                    char_literal: true,
                    ..s("'", BS, false)
                },
                pair("r\"", "\"", None, true),
                pair("r#\"", "\"#", None, true),
                pair("br\"", "\"", None, true),
                pair("br#\"", "\"#", None, true),
            ];
            p
        }
        "go" => {
            let mut p = base("go", &["go"]);
            p.string_delimiters.push(s("`", None, true));
            p
        }
        "python" => LanguageProfile {
            line_comment_openers: strs(&["#"]),
            block_comment_pairs: vec![],
            string_delimiters: vec![
                s("'''", BS, true),
                s("\"\"\"", BS, true),
                s("'", BS, false),
                s("\"", BS, false),
            ],
            ..base("python", &["py", "pyw", "pyi"])
        },
        "sql" => LanguageProfile {
            line_comment_openers: strs(&["--"]),
            string_delimiters: vec![
                StringDelimiter {
                    escape_by_doubling: true,
                    ..s("'", None, true)
                },
                StringDelimiter {
                    escape_by_doubling: true,
                    ..s("\"", None, true)
                },
            ],
            ..base("sql", &["sql"])
        },
        "bash" => LanguageProfile {
            line_comment_openers: strs(&["#"]),
            block_comment_pairs: vec![],
            string_delimiters: vec![s("\"", BS, true), s("'", None, true)],
            identifier_rule: IdentifierRule::with_extra(""),
            line_comment_at_word_start: true,
            ..base("bash", &["sh", "bash", "zsh"])
        },
        "assembly" => LanguageProfile {
            line_comment_openers: strs(&["#", ";"]),
            block_comment_pairs: vec![],
            string_delimiters: vec![s("\"", BS, false)],
            identifier_rule: IdentifierRule::with_extra(".$"),
            ..base("assembly", &["s", "S", "asm"])
        },
        "solidity" => base("solidity", &["sol"]),
        _ => return None,
    };
    Some(p)
}

/// Builtin profiles for the twelve supported languages.
pub fn load_profile(language_id: &str) -> Result<LanguageProfile, ProfileError> {
    builtin(language_id).ok_or_else(|| ProfileError::UnknownLanguage(language_id.to_string()))
}

/// Builtin profiles plus user-supplied ones, with extension lookup.
#[derive(Debug, Clone)]
pub struct ProfileRegistry {
    profiles: BTreeMap<String, LanguageProfile>,
    by_extension: BTreeMap<String, String>,
}

impl Default for ProfileRegistry {
    fn default() -> Self {
        ProfileRegistry::builtin()
    }
}

impl ProfileRegistry {
    pub fn builtin() -> Self {
        let mut reg = ProfileRegistry {
            profiles: BTreeMap::new(),
            by_extension: BTreeMap::new(),
        };
        for id in BUILTIN_LANGUAGE_IDS {
            reg.register(builtin(id).expect("builtin id"))
                .expect("builtin profiles are valid");
        }
        reg
    }

    /// Adds or replaces a profile; its extensions take over any previous
    /// mapping.
    pub fn register(&mut self, profile: LanguageProfile) -> Result<(), ProfileError> {
        profile.validate()?;
        for ext in &profile.file_extensions {
            self.by_extension.insert(ext.clone(), profile.id.clone());
        }
        self.profiles.insert(profile.id.clone(), profile);
        Ok(())
    }

    /// Maps `ext` (without the dot) to a registered language.
    pub fn map_extension(&mut self, ext: &str, language_id: &str) -> Result<(), ProfileError> {
        if !self.profiles.contains_key(language_id) {
            return Err(ProfileError::UnknownLanguage(language_id.to_string()));
        }
        self.by_extension
            .insert(ext.trim_start_matches('.').to_string(), language_id.to_string());
        Ok(())
    }

    pub fn get(&self, language_id: &str) -> Result<&LanguageProfile, ProfileError> {
        self.profiles
            .get(language_id)
            .ok_or_else(|| ProfileError::UnknownLanguage(language_id.to_string()))
    }

    pub fn for_extension(&self, ext: &str) -> Option<&LanguageProfile> {
        self.by_extension.get(ext).and_then(|id| self.profiles.get(id))
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.profiles.keys().map(String::as_str)
    }
}
