//! Display-order simulation for a line of source text.
//!
//! Only the explicit part of the bidirectional algorithm is modeled:
//! embeddings, overrides and isolates with their level stack, plus a strong
//! direction taken from script membership. Weak types (numbers), neutral
//! resolution between strong runs and bracket pairing are left out; a
//! neutral character keeps the level of the embedding it sits in.

use crate::finding::Preview;
use crate::unicode::{
    classify_bidi, code_point_label, is_paragraph_separator, mirror, script_of, BidiControlKind, InvisibleSet,
};

pub const MAX_DEPTH: u8 = 125;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Ltr,
    Rtl,
    Neutral,
}

/// Strong direction of a character: Hebrew and Arabic letters and the RTL
/// marks are right-to-left, other letters and the LRM are left-to-right,
/// everything else (digits included) is neutral.
pub fn strong_direction(c: char) -> Direction {
    match c {
        '\u{200F}' | '\u{061C}' => return Direction::Rtl,
        '\u{200E}' => return Direction::Ltr,
        _ => {}
    }
    let script = script_of(c);
    if script.is_rtl() && (c.is_alphabetic() || c.is_numeric()) {
        Direction::Rtl
    } else if c.is_alphabetic() {
        Direction::Ltr
    } else {
        Direction::Neutral
    }
}

/// Per-character levels of one paragraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelRun {
    /// Level of the innermost embedding or isolate around each character.
    pub explicit: Vec<u8>,
    /// Display level after strong-direction adjustment: a right-to-left
    /// character at an even level and a left-to-right one at an odd level
    /// each move up by one. Overrides force the direction.
    pub levels: Vec<u8>,
    /// Formatting characters, which take no part in display.
    pub removed: Vec<bool>,
    pub paragraph_level: u8,
}

#[derive(Clone, Copy)]
struct Entry {
    level: u8,
    force: Option<Direction>,
    isolate: bool,
}

fn next_odd(level: u8) -> u8 {
    if level % 2 == 0 {
        level + 1
    } else {
        level + 2
    }
}

fn next_even(level: u8) -> u8 {
    if level % 2 == 0 {
        level + 2
    } else {
        level + 1
    }
}

/// Direction of the first strong character after an FSI, stopping at its
/// matching PDI and skipping nested isolates.
fn first_strong_after(paragraph: &[char], from: usize) -> Direction {
    let mut depth = 0usize;
    for &c in &paragraph[from..] {
        match classify_bidi(c) {
            Some(BidiControlKind::Lri | BidiControlKind::Rli | BidiControlKind::Fsi) => depth += 1,
            Some(BidiControlKind::Pdi) => {
                if depth == 0 {
                    break;
                }
                depth -= 1;
            }
            _ if depth == 0 => match strong_direction(c) {
                Direction::Neutral => {}
                d => return d,
            },
            _ => {}
        }
    }
    Direction::Ltr
}

pub fn resolve_levels(paragraph: &[char]) -> LevelRun {
    let n = paragraph.len();
    let mut explicit = Vec::with_capacity(n);
    let mut levels = Vec::with_capacity(n);
    let mut removed = Vec::with_capacity(n);
    let mut stack = vec![Entry {
        level: 0,
        force: None,
        isolate: false,
    }];
    let mut overflow_isolates = 0usize;
    let mut overflow_embeddings = 0usize;
    let mut valid_isolates = 0usize;

    for (i, &c) in paragraph.iter().enumerate() {
        let top = *stack.last().expect("stack keeps its base entry");
        let Some(kind) = classify_bidi(c) else {
            explicit.push(top.level);
            let dir = top.force.unwrap_or_else(|| strong_direction(c));
            let level = match dir {
                Direction::Rtl if top.level % 2 == 0 => top.level + 1,
                Direction::Ltr if top.level % 2 == 1 => top.level + 1,
                _ => top.level,
            };
            levels.push(level);
            removed.push(false);
            continue;
        };
        let mut own_level = top.level;
        match kind {
            BidiControlKind::Rle | BidiControlKind::Lre | BidiControlKind::Rlo | BidiControlKind::Lro => {
                let rtl = matches!(kind, BidiControlKind::Rle | BidiControlKind::Rlo);
                let new_level = if rtl { next_odd(top.level) } else { next_even(top.level) };
                if new_level <= MAX_DEPTH && overflow_isolates == 0 && overflow_embeddings == 0 {
                    let force = match kind {
                        BidiControlKind::Rlo => Some(Direction::Rtl),
                        BidiControlKind::Lro => Some(Direction::Ltr),
                        _ => None,
                    };
                    stack.push(Entry {
                        level: new_level,
                        force,
                        isolate: false,
                    });
                } else if overflow_isolates == 0 {
                    overflow_embeddings += 1;
                }
            }
            BidiControlKind::Rli | BidiControlKind::Lri | BidiControlKind::Fsi => {
                let rtl = match kind {
                    BidiControlKind::Rli => true,
                    BidiControlKind::Lri => false,
                    _ => first_strong_after(paragraph, i + 1) == Direction::Rtl,
                };
                let new_level = if rtl { next_odd(top.level) } else { next_even(top.level) };
                if new_level <= MAX_DEPTH && overflow_isolates == 0 && overflow_embeddings == 0 {
                    valid_isolates += 1;
                    stack.push(Entry {
                        level: new_level,
                        force: None,
                        isolate: true,
                    });
                } else {
                    overflow_isolates += 1;
                }
            }
            BidiControlKind::Pdi => {
                if overflow_isolates > 0 {
                    overflow_isolates -= 1;
                } else if valid_isolates > 0 {
                    overflow_embeddings = 0;
                    while stack.last().is_some_and(|e| !e.isolate) {
                        stack.pop();
                    }
                    stack.pop();
                    valid_isolates -= 1;
                }
                own_level = stack.last().expect("base entry is never an isolate").level;
            }
            BidiControlKind::Pdf => {
                if overflow_isolates > 0 {
                } else if overflow_embeddings > 0 {
                    overflow_embeddings -= 1;
                } else if !top.isolate && stack.len() >= 2 {
                    stack.pop();
                }
            }
        }
        explicit.push(own_level);
        levels.push(own_level);
        removed.push(true);
    }
    LevelRun {
        explicit,
        levels,
        removed,
        paragraph_level: 0,
    }
}

fn is_embedding_control(c: char) -> bool {
    classify_bidi(c).is_some_and(|k| {
        !matches!(k, BidiControlKind::Lri | BidiControlKind::Rli | BidiControlKind::Fsi | BidiControlKind::Pdi)
    })
}

/// Reverses runs from the highest level down to the lowest odd level, then
/// drops formatting characters and mirrors paired punctuation at odd levels.
/// Embedding controls are removed before reversal; isolate controls stay
/// until after it, since their levels separate the runs they enclose.
pub fn reorder(paragraph: &[char], levels: &[u8]) -> String {
    assert_eq!(paragraph.len(), levels.len(), "one level per character");
    let mut items: Vec<(char, u8)> = paragraph
        .iter()
        .zip(levels)
        .filter(|(c, _)| !is_embedding_control(**c))
        .map(|(c, l)| (*c, *l))
        .collect();
    reverse_runs(&mut items);
    items
        .into_iter()
        .filter(|(c, _)| classify_bidi(*c).is_none())
        .map(|(c, l)| if l % 2 == 1 { mirror(c) } else { c })
        .collect()
}

fn reverse_runs(items: &mut [(char, u8)]) {
    let Some(max) = items.iter().map(|x| x.1).max() else {
        return;
    };
    let min = items.iter().map(|x| x.1).min().unwrap_or(0);
    let lowest_odd = if min % 2 == 1 { min } else { min + 1 };
    let mut level = max;
    while level >= lowest_odd {
        let mut i = 0;
        while i < items.len() {
            if items[i].1 >= level {
                let start = i;
                while i < items.len() && items[i].1 >= level {
                    i += 1;
                }
                items[start..i].reverse();
            } else {
                i += 1;
            }
        }
        level -= 1;
    }
}

/// Display form of `line`: each paragraph is resolved and reordered on its
/// own, separators stay in place, and invisible characters are dropped.
pub fn render_line(line: &str, invisibles: &InvisibleSet) -> String {
    let mut out = String::with_capacity(line.len());
    let mut paragraph: Vec<char> = Vec::new();
    let flush = |paragraph: &mut Vec<char>, out: &mut String| {
        if !paragraph.is_empty() {
            let run = resolve_levels(paragraph);
            out.extend(
                reorder(paragraph, &run.levels)
                    .chars()
                    .filter(|&c| !invisibles.contains(c)),
            );
            paragraph.clear();
        }
    };
    for c in line.chars() {
        if is_paragraph_separator(c) {
            flush(&mut paragraph, &mut out);
            out.push(c);
        } else {
            paragraph.push(c);
        }
    }
    flush(&mut paragraph, &mut out);
    out
}

/// Logical order with every directional control and invisible shown as a
/// `<U+XXXX>` token.
pub fn annotate(line: &str, invisibles: &InvisibleSet) -> String {
    let mut out = String::with_capacity(line.len());
    for c in line.chars() {
        if classify_bidi(c).is_some() || invisibles.contains(c) {
            out.push('<');
            out.push_str(&code_point_label(c));
            out.push('>');
        } else {
            out.push(c);
        }
    }
    out
}

pub fn render_preview(line: &str) -> Preview {
    render_preview_with(line, &InvisibleSet::builtin())
}

pub fn render_preview_with(line: &str, invisibles: &InvisibleSet) -> Preview {
    Preview {
        annotated: annotate(line, invisibles),
        rendered: render_line(line, invisibles),
    }
}

/// True when the line holds anything the preview would change.
pub fn needs_preview(line: &str, invisibles: &InvisibleSet) -> bool {
    line.chars()
        .any(|c| classify_bidi(c).is_some() || invisibles.contains(c))
}
