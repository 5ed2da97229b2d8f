use std::fmt;

use serde::Serialize;

use super::script_table::SCRIPT_RANGES;

/// Script membership for the scripts the detectors care about. Every other
/// code point is `Unknown`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Script {
    Latin,
    Greek,
    Cyrillic,
    Arabic,
    Hebrew,
    Han,
    Common,
    Inherited,
    Unknown,
}

impl Script {
    pub const fn name(self) -> &'static str {
        match self {
            Script::Latin => "Latin",
            Script::Greek => "Greek",
            Script::Cyrillic => "Cyrillic",
            Script::Arabic => "Arabic",
            Script::Hebrew => "Hebrew",
            Script::Han => "Han",
            Script::Common => "Common",
            Script::Inherited => "Inherited",
            Script::Unknown => "Unknown",
        }
    }

    /// Sorted, disjoint code-point intervals of this script. `Unknown` has
    /// no explicit intervals; it is the complement of the others.
    pub fn ranges(self) -> impl Iterator<Item = (u32, u32)> {
        SCRIPT_RANGES
            .iter()
            .filter(move |r| r.2 == self)
            .map(|r| (r.0, r.1))
    }

    /// True for the three scripts whose letters are routinely mistaken for
    /// one another.
    pub const fn is_confusable_triangle(self) -> bool {
        matches!(self, Script::Latin | Script::Greek | Script::Cyrillic)
    }

    pub const fn is_rtl(self) -> bool {
        matches!(self, Script::Arabic | Script::Hebrew)
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn script_of(cp: char) -> Script {
    let cp = cp as u32;
    match SCRIPT_RANGES.binary_search_by(|&(lo, hi, _)| {
        if hi < cp {
            std::cmp::Ordering::Less
        } else if lo > cp {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    }) {
        Ok(i) => SCRIPT_RANGES[i].2,
        Err(_) => Script::Unknown,
    }
}
