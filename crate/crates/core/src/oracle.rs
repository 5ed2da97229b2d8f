//! An independent, pattern-based check for unbalanced directional controls
//! in quoted or comment-delimited spans of a single line.
//!
//! The pattern has two groups. Isolates: LRI, RLI, FSI opened, PDI closes.
//! Embeddings and overrides: LRE, RLE, LRO, RLO opened, PDF closes. For a
//! group, `bal` is an opener, any mix of non-group characters and nested
//! `bal`, then a closer. `unbal` is any prefix, an opener, then only
//! non-group characters, further openers or balanced sub-spans up to the end
//! of the span, so that opener can never be closed. A line matches when a
//! span delimited as `'...'`, `"..."`, `/*...*/`, `//...` to end of line or
//! `#...` to end of line is `unbal` for either group. Delimiters are taken
//! literally wherever they occur; no language grammar is applied.

use std::sync::OnceLock;

use pcre2::bytes::{Regex, RegexBuilder};

const ISO_OPEN: &str = r"[\x{2066}\x{2067}\x{2068}]";
const ISO_CLOSE: &str = r"\x{2069}";
const ISO_OTHER: &str = r"[^\x{2066}\x{2067}\x{2068}\x{2069}]";
const EMB_OPEN: &str = r"[\x{202A}\x{202B}\x{202D}\x{202E}]";
const EMB_CLOSE: &str = r"\x{202C}";
const EMB_OTHER: &str = r"[^\x{202A}\x{202B}\x{202C}\x{202D}\x{202E}]";

/// Source text of the pattern.
pub fn pattern_source() -> String {
    let group = |name: &str, open: &str, close: &str, other: &str| {
        format!(
            "(?<{name}bal>{open}(?:{other}|(?&{name}bal))*{close})\
             (?<{name}unbal>.*?{open}(?:{other}|{open}|(?&{name}bal))*)"
        )
    };
    format!(
        "(?(DEFINE){}{}\
         (?<unbal>(?&isounbal)|(?&embunbal))\
         (?<string>'(?&unbal)'|\"(?&unbal)\")\
         (?<comment>/\\*(?&unbal)\\*/|//(?&unbal)$|\\#(?&unbal)$))\
         (?&string)|(?&comment)",
        group("iso", ISO_OPEN, ISO_CLOSE, ISO_OTHER),
        group("emb", EMB_OPEN, EMB_CLOSE, EMB_OTHER),
    )
}

#[derive(Debug)]
pub struct OraclePattern {
    regex: Regex,
}

impl OraclePattern {
    pub fn compile() -> Result<Self, pcre2::Error> {
        let regex = RegexBuilder::new()
            .utf(true)
            .jit_if_available(true)
            .build(&pattern_source())?;
        Ok(OraclePattern { regex })
    }

    pub fn shared() -> &'static OraclePattern {
        static PATTERN: OnceLock<OraclePattern> = OnceLock::new();
        PATTERN.get_or_init(|| OraclePattern::compile().expect("oracle pattern compiles"))
    }

    /// Match result, or the engine error (for example a hit resource
    /// limit on a pathological line).
    pub fn try_detect(&self, text: &str) -> Result<bool, pcre2::Error> {
        self.regex.is_match(text.as_bytes())
    }
}

/// True when some quoted or comment-delimited span of `text` leaves an
/// opener of either group unclosed. An engine error counts as a match.
pub fn oracle_detect(text: &str) -> bool {
    OraclePattern::shared().try_detect(text).unwrap_or(true)
}
