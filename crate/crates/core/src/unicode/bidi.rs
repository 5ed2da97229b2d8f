use std::fmt;

use serde::{Deserialize, Serialize};

/// One of the nine explicit directional formatting characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum BidiControlKind {
    Lre,
    Rle,
    Lro,
    Rlo,
    Lri,
    Rli,
    Fsi,
    Pdf,
    Pdi,
}

/// How a control takes part in open/close balancing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ControlRole {
    /// LRE, RLE, LRO, RLO: closed by PDF.
    EmbeddingOpener,
    /// LRI, RLI, FSI: closed by PDI.
    IsolateOpener,
    /// PDF or PDI.
    Closer,
}

impl BidiControlKind {
    pub const ALL: [BidiControlKind; 9] = [
        BidiControlKind::Lre,
        BidiControlKind::Rle,
        BidiControlKind::Lro,
        BidiControlKind::Rlo,
        BidiControlKind::Lri,
        BidiControlKind::Rli,
        BidiControlKind::Fsi,
        BidiControlKind::Pdf,
        BidiControlKind::Pdi,
    ];

    pub const fn code_point(self) -> char {
        match self {
            BidiControlKind::Lre => '\u{202A}',
            BidiControlKind::Rle => '\u{202B}',
            BidiControlKind::Lro => '\u{202D}',
            BidiControlKind::Rlo => '\u{202E}',
            BidiControlKind::Lri => '\u{2066}',
            BidiControlKind::Rli => '\u{2067}',
            BidiControlKind::Fsi => '\u{2068}',
            BidiControlKind::Pdf => '\u{202C}',
            BidiControlKind::Pdi => '\u{2069}',
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            BidiControlKind::Lre => "LRE",
            BidiControlKind::Rle => "RLE",
            BidiControlKind::Lro => "LRO",
            BidiControlKind::Rlo => "RLO",
            BidiControlKind::Lri => "LRI",
            BidiControlKind::Rli => "RLI",
            BidiControlKind::Fsi => "FSI",
            BidiControlKind::Pdf => "PDF",
            BidiControlKind::Pdi => "PDI",
        }
    }

    pub const fn role(self) -> ControlRole {
        match self {
            BidiControlKind::Lre | BidiControlKind::Rle | BidiControlKind::Lro | BidiControlKind::Rlo => {
                ControlRole::EmbeddingOpener
            }
            BidiControlKind::Lri | BidiControlKind::Rli | BidiControlKind::Fsi => ControlRole::IsolateOpener,
            BidiControlKind::Pdf | BidiControlKind::Pdi => ControlRole::Closer,
        }
    }

    pub const fn is_opener(self) -> bool {
        !matches!(self.role(), ControlRole::Closer)
    }

    /// The closer that terminates this opener; `None` for closers.
    pub const fn expected_closer(self) -> Option<BidiControlKind> {
        match self.role() {
            ControlRole::EmbeddingOpener => Some(BidiControlKind::Pdf),
            ControlRole::IsolateOpener => Some(BidiControlKind::Pdi),
            ControlRole::Closer => None,
        }
    }

    pub fn from_name(name: &str) -> Option<BidiControlKind> {
        BidiControlKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for BidiControlKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn classify_bidi(cp: char) -> Option<BidiControlKind> {
    match cp {
        '\u{202A}' => Some(BidiControlKind::Lre),
        '\u{202B}' => Some(BidiControlKind::Rle),
        '\u{202C}' => Some(BidiControlKind::Pdf),
        '\u{202D}' => Some(BidiControlKind::Lro),
        '\u{202E}' => Some(BidiControlKind::Rlo),
        '\u{2066}' => Some(BidiControlKind::Lri),
        '\u{2067}' => Some(BidiControlKind::Rli),
        '\u{2068}' => Some(BidiControlKind::Fsi),
        '\u{2069}' => Some(BidiControlKind::Pdi),
        _ => None,
    }
}

/// Code points with Bidi class B or the vertical separators that editors
/// treat as line breaks; each one resets open directional formatting.
pub fn is_paragraph_separator(cp: char) -> bool {
    matches!(
        cp,
        '\u{000A}' | '\u{000D}' | '\u{000B}' | '\u{000C}' | '\u{0085}' | '\u{2028}' | '\u{2029}'
    )
}
