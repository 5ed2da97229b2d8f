use std::collections::HashMap;
use std::sync::OnceLock;

use thiserror::Error;
use unicode_normalization::UnicodeNormalization;

const BUILTIN_DATA: &str = include_str!("../../data/confusables.txt");

#[derive(Debug, Error, PartialEq, Eq)]
#[error("confusables data line {line}: {reason}")]
pub struct ConfusableParseError {
    pub line: usize,
    pub reason: String,
}

/// Mapping from a code point to its prototype sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfusableTable {
    entries: HashMap<char, Vec<char>>,
    provenance: String,
}

impl ConfusableTable {
    /// The embedded curated subset.
    pub fn builtin() -> &'static ConfusableTable {
        static TABLE: OnceLock<ConfusableTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            ConfusableTable::parse(BUILTIN_DATA, "builtin").expect("embedded confusables data is well-formed")
        })
    }

    /// Parses `<hex>;<hex list>` lines. `#` starts a comment. A
    /// `# Source: ...` header line, if present, is kept as provenance.
    /// The full Unicode `confusables.txt` format is also accepted, since its
    /// first two fields have the same shape.
    pub fn parse(text: &str, fallback_provenance: &str) -> Result<ConfusableTable, ConfusableParseError> {
        let mut entries = HashMap::new();
        let mut provenance = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let raw = raw.trim_start_matches('\u{FEFF}');
            if provenance.is_none() {
                if let Some(src) = raw.trim().strip_prefix("# Source:") {
                    provenance = Some(src.trim().to_string());
                }
            }
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut fields = content.split(';');
            let src = fields.next().unwrap_or("");
            let tgt = fields.next().ok_or_else(|| ConfusableParseError {
                line: line_no,
                reason: "missing `;` separator".to_string(),
            })?;
            let src = parse_hex(src.trim(), line_no)?;
            let tgt = tgt
                .split_whitespace()
                .map(|h| parse_hex(h, line_no))
                .collect::<Result<Vec<_>, _>>()?;
            if tgt.is_empty() {
                return Err(ConfusableParseError {
                    line: line_no,
                    reason: "empty replacement sequence".to_string(),
                });
            }
            entries.insert(src, tgt);
        }
        Ok(ConfusableTable {
            entries,
            provenance: provenance.unwrap_or_else(|| fallback_provenance.to_string()),
        })
    }

    pub fn get(&self, cp: char) -> Option<&[char]> {
        self.entries.get(&cp).map(Vec::as_slice)
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (char, &[char])> {
        self.entries.iter().map(|(k, v)| (*k, v.as_slice()))
    }

    /// True when no replacement sequence contains a mapped code point, so a
    /// second pass over any skeleton is a no-op.
    pub fn is_idempotent(&self) -> bool {
        self.entries
            .values()
            .all(|tgt| tgt.iter().all(|c| !self.entries.contains_key(c)))
    }
}

fn parse_hex(field: &str, line: usize) -> Result<char, ConfusableParseError> {
    u32::from_str_radix(field, 16)
        .ok()
        .and_then(char::from_u32)
        .ok_or_else(|| ConfusableParseError {
            line,
            reason: format!("invalid code point `{field}`"),
        })
}

/// Canonical decomposition, table mapping, canonical decomposition.
pub fn skeleton(text: &str, table: &ConfusableTable) -> String {
    let mut mapped = String::with_capacity(text.len());
    for c in text.nfd() {
        match table.get(c) {
            Some(rep) => mapped.extend(rep.iter()),
            None => mapped.push(c),
        }
    }
    mapped.nfd().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unicode::script::{script_of, Script};

    #[test]
    fn builtin_table_shape() {
        let table = ConfusableTable::builtin();
        assert!(table.len() >= 80);
        assert!(table.is_idempotent());
        assert!(table.provenance().contains("confusables"));
        assert_eq!(table.get('\u{041D}'), Some(&['H'][..]));
    }

    #[test]
    fn replacement_letters_have_known_script() {
        for (_, rep) in ConfusableTable::builtin().entries() {
            for &c in rep {
                if c.is_alphabetic() {
                    assert_ne!(script_of(c), Script::Unknown);
                }
            }
        }
    }

    #[test]
    fn skeleton_examples() {
        let table = ConfusableTable::builtin();
        assert_eq!(skeleton("sayHello", table), "sayHello");
        assert_eq!(skeleton("say\u{041D}ello", table), "sayHello");
        assert_eq!(skeleton("", table), "");
    }

    #[test]
    fn parse_errors_carry_line() {
        let err = ConfusableTable::parse("# c\n0041;\n", "t").unwrap_err();
        assert_eq!(err.line, 2);
        let err = ConfusableTable::parse("zz;0041\n", "t").unwrap_err();
        assert_eq!(err.line, 1);
        let t = ConfusableTable::parse("0430 ;\t0061 ;\tMA\t# full-format line\n", "t").unwrap();
        assert_eq!(t.get('\u{0430}'), Some(&['a'][..]));
        assert_eq!(t.provenance(), "t");
    }
}
