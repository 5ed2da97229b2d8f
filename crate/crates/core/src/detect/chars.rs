//! Invisible characters in code, identifiers and comment delimiters, and
//! look-alike identifiers.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::finding::{CheckId, Finding, Severity};
use crate::lexer::{IdentifierToken, LanguageProfile, Region, RegionKind};
use crate::render::annotate;
use crate::text::{LineIndex, Span};
use crate::unicode::invisible::SOFT_HYPHEN;
use crate::unicode::{code_point_label, script_of, skeleton, ConfusableTable, InvisibleSet, Script};

use super::FindingBuilder;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct InvisibleOptions {
    /// Also report invisibles inside string literals.
    pub string_invisibles: bool,
}

fn soft_hyphen_only(cps: &[char]) -> bool {
    cps.iter().all(|&c| c == SOFT_HYPHEN)
}

fn labels(cps: &[char]) -> String {
    cps.iter().map(|&c| code_point_label(c)).collect::<Vec<_>>().join(", ")
}

fn dedup(cps: impl IntoIterator<Item = char>) -> Vec<char> {
    let mut seen = BTreeSet::new();
    cps.into_iter().filter(|c| seen.insert(*c)).collect()
}

/// Maximal runs of invisible characters in `span`.
fn invisible_runs(source: &str, span: Span, set: &InvisibleSet) -> Vec<(Span, Vec<char>)> {
    let mut out: Vec<(Span, Vec<char>)> = Vec::new();
    let mut current: Option<(Span, Vec<char>)> = None;
    for (k, c) in source[span.start..span.end].char_indices() {
        let at = span.start + k;
        if set.contains(c) {
            match current.as_mut() {
                Some((s, cps)) if s.end == at => {
                    s.end = at + c.len_utf8();
                    cps.push(c);
                }
                _ => {
                    if let Some(run) = current.take() {
                        out.push(run);
                    }
                    current = Some((Span::new(at, at + c.len_utf8()), vec![c]));
                }
            }
        }
    }
    out.extend(current);
    out
}

/// Block comment delimiters of the profile that are at least two
/// characters long, as char vectors.
fn delimiter_tokens(profile: &LanguageProfile) -> Vec<Vec<char>> {
    let mut toks: Vec<Vec<char>> = profile
        .block_comment_pairs
        .iter()
        .flat_map(|p| [p.opener.chars().collect::<Vec<_>>(), p.closer.chars().collect()])
        .filter(|t: &Vec<char>| t.len() >= 2)
        .collect();
    toks.sort();
    toks.dedup();
    toks
}

/// Whether an invisible run between `left` and `right` (visible
/// neighbours, invisibles skipped, nearest first) splits one of `tokens`.
fn splits_token(left: &[char], right: &[char], tokens: &[Vec<char>]) -> Option<String> {
    for tok in tokens {
        for cut in 1..tok.len() {
            let (head, tail) = tok.split_at(cut);
            let left_ok = head.len() <= left.len() && head.iter().rev().zip(left).all(|(a, b)| a == b);
            let right_ok = tail.len() <= right.len() && tail.iter().zip(right).all(|(a, b)| a == b);
            if left_ok && right_ok {
                return Some(tok.iter().collect());
            }
        }
    }
    None
}

pub fn scan_invisible(
    source: &str,
    regions: &[Region],
    identifiers: &[IdentifierToken],
    profile: &LanguageProfile,
    set: &InvisibleSet,
    options: InvisibleOptions,
) -> Vec<Finding> {
    let index = LineIndex::new(source);
    let builder = FindingBuilder::new(source, &index);
    let mut out = Vec::new();
    let finish = |mut f: Finding, cps: &[char]| {
        if soft_hyphen_only(cps) {
            f.severity = Severity::Warning;
        }
        f
    };

    for tok in identifiers {
        let runs = invisible_runs(source, tok.span, set);
        if let Some((first, _)) = runs.first() {
            let cps = dedup(runs.iter().flat_map(|(_, c)| c.iter().copied()));
            let msg = format!(
                "identifier `{}` contains invisible {}",
                annotate(&tok.text, set),
                labels(&cps)
            );
            out.push(finish(
                builder.finding(CheckId::InvisibleInIdentifier, *first, cps.clone(), msg),
                &cps,
            ));
        }
    }

    let tokens = delimiter_tokens(profile);
    let max_tok = tokens.iter().map(Vec::len).max().unwrap_or(0);
    for region in regions {
        match region.kind {
            RegionKind::Code => {
                for (span, cps) in invisible_runs(source, region.span, set) {
                    if identifiers.iter().any(|t| t.span.covers(span)) {
                        continue;
                    }
                    let cps = dedup(cps);
                    let msg = format!("invisible {} in code", labels(&cps));
                    out.push(finish(builder.finding(CheckId::InvisibleInCode, span, cps.clone(), msg), &cps));
                }
            }
            RegionKind::String => {
                if options.string_invisibles {
                    for (span, cps) in invisible_runs(source, region.span, set) {
                        let cps = dedup(cps);
                        let msg = format!("invisible {} in string literal", labels(&cps));
                        out.push(finish(builder.finding(CheckId::InvisibleInCode, span, cps.clone(), msg), &cps));
                    }
                }
            }
            RegionKind::LineComment | RegionKind::BlockComment => {
                if max_tok < 2 {
                    continue;
                }
                let text = region.text(source);
                for (span, cps) in invisible_runs(source, region.span, set) {
                    let rel_start = span.start - region.span.start;
                    let rel_end = span.end - region.span.start;
                    let left: Vec<char> = text[..rel_start]
                        .chars()
                        .rev()
                        .filter(|c| !set.contains(*c))
                        .take(max_tok - 1)
                        .collect();
                    let right: Vec<char> = text[rel_end..]
                        .chars()
                        .filter(|c| !set.contains(*c))
                        .take(max_tok - 1)
                        .collect();
                    if let Some(tok) = splits_token(&left, &right, &tokens) {
                        let cps = dedup(cps);
                        let msg = format!("invisible {} splits the comment delimiter `{tok}`", labels(&cps));
                        out.push(finish(
                            builder.finding(CheckId::InvisibleTerminatorSplit, span, cps.clone(), msg),
                            &cps,
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Identifiers grouped by confusable skeleton.
#[derive(Debug, Clone, Default)]
pub struct IdentifierIndex {
    map: BTreeMap<String, Vec<IdentifierToken>>,
}

impl IdentifierIndex {
    pub fn build(tokens: &[IdentifierToken], table: &ConfusableTable) -> Self {
        let mut idx = IdentifierIndex::default();
        idx.extend(tokens, table);
        idx
    }

    pub fn extend(&mut self, tokens: &[IdentifierToken], table: &ConfusableTable) {
        let mut cache: HashMap<&str, String> = HashMap::new();
        for tok in tokens {
            let key = cache
                .entry(tok.text.as_str())
                .or_insert_with(|| skeleton(&tok.text, table))
                .clone();
            self.map.entry(key).or_default().push(tok.clone());
        }
    }

    pub fn get(&self, skeleton: &str) -> Option<&[IdentifierToken]> {
        self.map.get(skeleton).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[IdentifierToken])> {
        self.map.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Letters of `text` by script, restricted to Latin, Greek and Cyrillic.
pub fn confusable_scripts(text: &str) -> BTreeSet<Script> {
    text.chars()
        .filter(|c| c.is_alphabetic())
        .map(script_of)
        .filter(|s| s.is_confusable_triangle())
        .collect()
}

/// Pairs of distinct identifier texts with equal skeletons, in sequence
/// order. Each element of `seq` is `(group, token)`; every distinct text is
/// represented by its first occurrence. Returns `(later, earlier)` indexes
/// into `seq`, at most once per unordered pair of texts. Pairs made only of
/// ASCII characters are skipped: ASCII look-alikes such as `l`/`1` are
/// ordinary naming choices, not hidden characters.
pub fn confusable_pairs(seq: &[(usize, &IdentifierToken)], table: &ConfusableTable) -> Vec<(usize, usize)> {
    let mut first_seen: HashMap<&str, usize> = HashMap::new();
    let mut by_skeleton: HashMap<String, Vec<usize>> = HashMap::new();
    let mut out = Vec::new();
    for (i, (_, tok)) in seq.iter().enumerate() {
        if first_seen.contains_key(tok.text.as_str()) {
            continue;
        }
        first_seen.insert(tok.text.as_str(), i);
        let group = by_skeleton.entry(skeleton(&tok.text, table)).or_default();
        for &earlier in group.iter() {
            if tok.text.is_ascii() && seq[earlier].1.text.is_ascii() {
                continue;
            }
            out.push((i, earlier));
        }
        group.push(i);
    }
    out
}

pub(crate) fn pair_message(later: &IdentifierToken, earlier: &IdentifierToken, earlier_place: &str) -> String {
    format!(
        "identifier `{}` looks like `{}` at {earlier_place}{}:{}",
        later.text, earlier.text, earlier.line, earlier.col
    )
}

pub(crate) fn pair_code_points(later: &IdentifierToken, earlier: &IdentifierToken) -> Vec<char> {
    let theirs: BTreeSet<char> = earlier.text.chars().collect();
    dedup(later.text.chars().filter(|c| !theirs.contains(c)))
}

pub fn scan_homoglyphs(source: &str, identifiers: &[IdentifierToken], table: &ConfusableTable) -> Vec<Finding> {
    let index = LineIndex::new(source);
    let builder = FindingBuilder::new(source, &index);
    let mut out = Vec::new();

    let mut seen = BTreeSet::new();
    for tok in identifiers {
        if !seen.insert(tok.text.as_str()) || tok.text.is_ascii() {
            continue;
        }
        let scripts = confusable_scripts(&tok.text);
        if scripts.len() >= 2 {
            let names: Vec<&str> = scripts.iter().map(|s| s.name()).collect();
            let cps = dedup(tok.text.chars().filter(|c| !c.is_ascii() && c.is_alphabetic()));
            out.push(builder.finding(
                CheckId::HomoglyphMixedScript,
                tok.span,
                cps,
                format!("identifier `{}` mixes {} letters", tok.text, names.join(" and ")),
            ));
        }
    }

    let seq: Vec<(usize, &IdentifierToken)> = identifiers.iter().map(|t| (0, t)).collect();
    for (later, earlier) in confusable_pairs(&seq, table) {
        let (l, e) = (seq[later].1, seq[earlier].1);
        out.push(builder.finding(
            CheckId::HomoglyphConfusablePair,
            l.span,
            pair_code_points(l, e),
            pair_message(l, e, "line "),
        ));
    }
    out
}
