//! Proof-of-concept attack fixtures with matched clean controls, plus a
//! benign internationalized sample set.
//!
//! Templates keep every control and invisible character as a readable
//! placeholder (`{RLI}`, `{ZWSP}`, `{U+041D}`, ...) so this source tree
//! carries none of the bytes it describes. [`write_corpus`] emits real
//! files and a `manifest.json` into a directory of the caller's choice.

mod benign;
mod templates;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::finding::CheckId;
use crate::unicode::{classify_bidi, skeleton, BidiControlKind, ConfusableTable, InvisibleSet};

pub use benign::{BenignSample, BENIGN_SAMPLES};
use templates::{Template, TEMPLATES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Technique {
    EarlyReturn,
    CommentingOut,
    StretchedString,
    InvisibleTerminator,
    HomoglyphFunction,
}

impl Technique {
    pub const ALL: [Technique; 5] = [
        Technique::EarlyReturn,
        Technique::CommentingOut,
        Technique::StretchedString,
        Technique::InvisibleTerminator,
        Technique::HomoglyphFunction,
    ];

    pub const fn as_str(self) -> &'static str {
        match self {
            Technique::EarlyReturn => "early-return",
            Technique::CommentingOut => "commenting-out",
            Technique::StretchedString => "stretched-string",
            Technique::InvisibleTerminator => "invisible-terminator",
            Technique::HomoglyphFunction => "homoglyph-function",
        }
    }
}

impl fmt::Display for Technique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Technique {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Technique::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown technique `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Attack,
    Clean,
}

impl Variant {
    pub const fn as_str(self) -> &'static str {
        match self {
            Variant::Attack => "attack",
            Variant::Clean => "clean",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PocSpec {
    pub technique: Technique,
    pub language: String,
    pub variant: Variant,
}

impl PocSpec {
    pub fn new(technique: Technique, language: &str, variant: Variant) -> Self {
        PocSpec {
            technique,
            language: language.to_string(),
            variant,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("no {technique} fixture for language `{language}`")]
    Unsupported { technique: Technique, language: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExpectedFinding {
    pub check_id: CheckId,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    #[serde(flatten)]
    pub spec: PocSpec,
    /// Relative path, `<technique>/<language>/<variant>.<ext>`.
    pub path: String,
    pub expected_findings: Vec<ExpectedFinding>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub entry: ManifestEntry,
    pub text: String,
}

impl Fixture {
    pub fn bytes(&self) -> &[u8] {
        self.text.as_bytes()
    }
}

/// One attack line with its reference display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderGolden {
    /// Path of the attack fixture holding the line.
    pub path: String,
    pub language: &'static str,
    pub line: usize,
    /// The attack line as stored, controls included.
    pub attack_line: String,
    pub expected: &'static str,
    pub limitation: Option<&'static str>,
}

pub const LANGUAGES: [&str; 12] = [
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

/// File extension used for a language's fixtures.
pub fn language_extension(language: &str) -> Option<&'static str> {
    Some(match language {
        "c" => "c",
        "cpp" => "cpp",
        "csharp" => "cs",
        "javascript" => "js",
        "java" => "java",
        "rust" => "rs",
        "go" => "go",
        "python" => "py",
        "sql" => "sql",
        "bash" => "sh",
        "assembly" => "s",
        "solidity" => "sol",
        _ => return None,
    })
}

fn named_placeholder(name: &str) -> Option<char> {
    if let Some(kind) = BidiControlKind::from_name(name) {
        return Some(kind.code_point());
    }
    Some(match name {
        "ZWSP" => '\u{200B}',
        "ZWNJ" => '\u{200C}',
        "ZWJ" => '\u{200D}',
        "WJ" => '\u{2060}',
        "SHY" => '\u{00AD}',
        "LRM" => '\u{200E}',
        "RLM" => '\u{200F}',
        "ALM" => '\u{061C}',
        "BOM" => '\u{FEFF}',
        _ => {
            let hex = name.strip_prefix("U+")?;
            if hex.len() < 4 || hex.len() > 6 {
                return None;
            }
            char::from_u32(u32::from_str_radix(hex, 16).ok()?)?
        }
    })
}

/// What a placeholder becomes in a clean variant: controls and invisible
/// characters vanish, anything else is replaced by its skeleton.
fn clean_replacement(c: char) -> String {
    if classify_bidi(c).is_some() || InvisibleSet::builtin().contains(c) {
        String::new()
    } else {
        skeleton(&c.to_string(), ConfusableTable::builtin())
    }
}

/// Replaces `{NAME}` placeholders. A `{` that does not start a known
/// placeholder is kept as is, so format strings such as `{}` survive.
pub fn expand_placeholders(template: &str) -> String {
    expand_with(template, |c| c.to_string())
}

/// Expansion for the clean variant of a template.
pub fn expand_clean(template: &str) -> String {
    expand_with(template, clean_replacement)
}

fn expand_with(template: &str, mut replace: impl FnMut(char) -> String) -> String {
    let mut out = String::with_capacity(template.len());
    let mut rest = template;
    while let Some(pos) = rest.find('{') {
        out.push_str(&rest[..pos]);
        let tail = &rest[pos + 1..];
        let hit = tail
            .find('}')
            .and_then(|end| named_placeholder(&tail[..end]).map(|c| (c, end)));
        match hit {
            Some((c, end)) => {
                out.push_str(&replace(c));
                rest = &tail[end + 1..];
            }
            None => {
                out.push('{');
                rest = tail;
            }
        }
    }
    out.push_str(rest);
    out
}

fn template_for(technique: Technique, language: &str) -> Option<&'static Template> {
    TEMPLATES
        .iter()
        .find(|t| t.technique == technique && t.language == language)
}

pub fn is_supported(technique: Technique, language: &str) -> bool {
    template_for(technique, language).is_some()
}

fn fixture_path(technique: Technique, language: &str, variant: Variant) -> String {
    format!(
        "{}/{}/{}.{}",
        technique.as_str(),
        language,
        variant.as_str(),
        language_extension(language).unwrap_or("txt")
    )
}

fn build(t: &Template, variant: Variant) -> Fixture {
    let (text, expected_findings) = match variant {
        Variant::Attack => (
            expand_placeholders(t.attack),
            t.expected
                .iter()
                .map(|&(check_id, line)| ExpectedFinding { check_id, line })
                .collect(),
        ),
        Variant::Clean => (
            match t.clean {
                Some(c) => expand_placeholders(c),
                None => expand_clean(t.attack),
            },
            Vec::new(),
        ),
    };
    Fixture {
        entry: ManifestEntry {
            spec: PocSpec::new(t.technique, t.language, variant),
            path: fixture_path(t.technique, t.language, variant),
            expected_findings,
        },
        text,
    }
}

/// The fixture for one (technique, language, variant).
pub fn generate(spec: &PocSpec) -> Result<Fixture, CorpusError> {
    template_for(spec.technique, &spec.language)
        .map(|t| build(t, spec.variant))
        .ok_or_else(|| CorpusError::Unsupported {
            technique: spec.technique,
            language: spec.language.clone(),
        })
}

/// Every supported fixture, attack before clean, ordered by technique
/// then language.
pub fn fixtures_all() -> Vec<Fixture> {
    let mut out = Vec::new();
    for technique in Technique::ALL {
        for language in LANGUAGES {
            if let Some(t) = template_for(technique, language) {
                out.push(build(t, Variant::Attack));
                out.push(build(t, Variant::Clean));
            }
        }
    }
    out
}

pub fn manifest_all() -> Vec<ManifestEntry> {
    fixtures_all().into_iter().map(|f| f.entry).collect()
}

/// Attack lines with a known reference display.
pub fn render_goldens() -> Vec<RenderGolden> {
    let mut out = Vec::new();
    for t in TEMPLATES.iter().filter(|t| !t.goldens.is_empty()) {
        let attack = expand_placeholders(t.attack);
        let lines: Vec<&str> = attack.lines().collect();
        for g in t.goldens {
            out.push(RenderGolden {
                path: fixture_path(t.technique, t.language, Variant::Attack),
                language: t.language,
                line: g.line,
                attack_line: lines[g.line - 1].to_string(),
                expected: g.expected,
                limitation: g.limitation,
            });
        }
    }
    out.sort_by(|a, b| (&a.path, a.line).cmp(&(&b.path, b.line)));
    out
}

/// Trailing whitespace dropped and runs of spaces after the indentation
/// collapsed to one, for comparing a display against typeset text.
pub fn normalize_whitespace(line: &str) -> String {
    let line = line.trim_end();
    let body_start = line.len() - line.trim_start().len();
    let mut out = line[..body_start].to_string();
    let mut prev_space = false;
    for c in line[body_start..].chars() {
        if c == ' ' {
            if !prev_space {
                out.push(c);
            }
            prev_space = true;
        } else {
            out.push(c);
            prev_space = false;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenignFixture {
    pub name: String,
    pub language: String,
    /// Relative path, `benign/<name>.<ext>`.
    pub path: String,
    #[serde(skip)]
    pub text: String,
}

pub fn benign_fixtures() -> Vec<BenignFixture> {
    BENIGN_SAMPLES
        .iter()
        .map(|s| BenignFixture {
            name: s.name.to_string(),
            language: s.language.to_string(),
            path: format!("benign/{}.{}", s.name, language_extension(s.language).unwrap_or("txt")),
            text: expand_placeholders(s.template),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusManifest {
    pub fixtures: Vec<ManifestEntry>,
    pub benign: Vec<BenignFixture>,
}

/// Writes every fixture, the benign samples and `manifest.json` under
/// `dir`.
pub fn write_corpus(dir: &Path) -> std::io::Result<CorpusManifest> {
    let fixtures = fixtures_all();
    let benign = benign_fixtures();
    let writes = fixtures
        .iter()
        .map(|f| (&f.entry.path, &f.text))
        .chain(benign.iter().map(|b| (&b.path, &b.text)));
    for (rel, text) in writes {
        let path = dir.join(rel);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(path, text)?;
    }
    let manifest = CorpusManifest {
        fixtures: fixtures.into_iter().map(|f| f.entry).collect(),
        benign,
    };
    let json = serde_json::to_string_pretty(&manifest).map_err(std::io::Error::other)?;
    std::fs::write(dir.join("manifest.json"), json + "\n")?;
    Ok(manifest)
}
