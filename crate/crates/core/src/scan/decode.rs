use crate::finding::{CheckId, Finding, Preview};
use crate::text::{LineIndex, Span};

const BOM: &str = "\u{FEFF}";
const BINARY_SAMPLE: usize = 8 * 1024;
const BINARY_INVALID_RATIO: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodedText {
    /// Text with any leading byte order mark removed.
    pub text: String,
    /// Whether a byte order mark was stripped.
    pub bom: bool,
}

impl DecodedText {
    /// Byte length of the stripped prefix, to map text offsets back to file
    /// offsets.
    pub fn prefix_len(&self) -> usize {
        if self.bom {
            BOM.len()
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeError {
    /// First invalid sequence, as a file byte offset and its length.
    Invalid { offset: usize, len: usize },
}

/// Strict UTF-8 decoding.
pub fn decode_file(bytes: &[u8]) -> Result<DecodedText, DecodeError> {
    match std::str::from_utf8(bytes) {
        Ok(text) => Ok(match text.strip_prefix(BOM) {
            Some(rest) => DecodedText {
                text: rest.to_string(),
                bom: true,
            },
            None => DecodedText {
                text: text.to_string(),
                bom: false,
            },
        }),
        Err(e) => {
            let offset = e.valid_up_to();
            let len = e.error_len().unwrap_or(bytes.len() - offset);
            Err(DecodeError::Invalid { offset, len })
        }
    }
}

/// More than 5% of the first 8 KiB is not valid UTF-8.
pub fn looks_binary(bytes: &[u8]) -> bool {
    let sample = &bytes[..bytes.len().min(BINARY_SAMPLE)];
    if sample.is_empty() {
        return false;
    }
    let mut invalid: usize = sample.utf8_chunks().map(|c| c.invalid().len()).sum();
    if sample.len() < bytes.len() {
        // A character cut by the sample boundary is not an error.
        if let Some(last) = sample.utf8_chunks().last() {
            if last.valid().is_empty() || sample.ends_with(last.invalid()) {
                invalid = invalid.saturating_sub(last.invalid().len().min(3));
            }
        }
    }
    invalid as f64 > sample.len() as f64 * BINARY_INVALID_RATIO
}

/// The ENCODING_ERROR finding for an invalid file. The location is taken
/// from the valid prefix.
pub fn encoding_error_finding(path: &str, bytes: &[u8], offset: usize, len: usize) -> Finding {
    let prefix = std::str::from_utf8(&bytes[..offset]).unwrap_or("");
    let skip = if prefix.starts_with(BOM) { BOM.len() } else { 0 };
    let text = &prefix[skip..];
    let index = LineIndex::new(text);
    let (line, col) = index.line_col(text, text.len());
    Finding {
        check_id: CheckId::EncodingError,
        severity: CheckId::EncodingError.default_severity(),
        path: path.to_string(),
        line,
        col,
        byte_span: Span::new(offset, offset + len),
        code_points: Vec::new(),
        message: format!(
            "invalid UTF-8 at byte {offset} ({}); file not scanned",
            bytes[offset..offset + len]
                .iter()
                .map(|b| format!("0x{b:02X}"))
                .collect::<Vec<_>>()
                .join(" ")
        ),
        preview: Preview::default(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii_decodes() {
        let d = decode_file(b"int x;\n").unwrap();
        assert_eq!(d.text, "int x;\n");
        assert!(!d.bom);
    }

    #[test]
    fn invalid_leading_byte() {
        assert_eq!(decode_file(&[0xFF, 0xFE]), Err(DecodeError::Invalid { offset: 0, len: 1 }));
    }

    #[test]
    fn bom_stripped_and_noted() {
        let d = decode_file("\u{FEFF}x".as_bytes()).unwrap();
        assert_eq!(d.text, "x");
        assert!(d.bom);
        assert_eq!(d.prefix_len(), 3);
    }

    #[test]
    fn rli_survives_decoding() {
        let d = decode_file("a\u{2067}b".as_bytes()).unwrap();
        assert!(d.text.contains('\u{2067}'));
    }

    #[test]
    fn binary_heuristic() {
        let mut bytes = vec![0u8; 100];
        bytes.extend(std::iter::repeat(0xFF).take(50));
        assert!(looks_binary(&bytes));
        let mut mostly_text = b"a".repeat(1000);
        mostly_text.push(0xFF);
        assert!(!looks_binary(&mostly_text));
        // A multibyte character cut at the sample edge does not count.
        let mut edge = b"a".repeat(BINARY_SAMPLE - 1);
        edge.extend("\u{2067}".as_bytes());
        assert!(!looks_binary(&edge));
    }

    #[test]
    fn encoding_error_location() {
        let bytes = b"ab\ncd\xFFx";
        let f = encoding_error_finding("f.c", bytes, 5, 1);
        assert_eq!((f.line, f.col), (2, 3));
        assert_eq!(f.byte_span, Span::new(5, 6));
    }
}
