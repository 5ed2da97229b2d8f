//! Scanning files and directory trees, configuration and report output.

pub mod config;
pub mod decode;
pub mod report;
pub mod sarif;

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use thiserror::Error;
use walkdir::WalkDir;

use crate::detect::bidi::scan_bidi;
use crate::detect::chars::{confusable_pairs, pair_code_points, pair_message, scan_homoglyphs, scan_invisible};
use crate::finding::{CheckId, Finding};
use crate::lexer::{extract_identifiers, partition, IdentifierToken, LanguageProfile};
use crate::render::render_preview;
use crate::text::{LineIndex, Span};
use crate::unicode::{code_point_label, ConfusableTable};

pub use config::{ConfigError, ScanConfig, Settings};
pub use decode::{decode_file, looks_binary, DecodeError, DecodedText};
pub use report::{exit_code, FileEntry, FileStatus, ReportFormat, ScanReport, Summary};

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("path does not exist: {0}")]
    MissingPath(PathBuf),
    #[error("cannot build worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Findings and identifiers for one decoded source text.
#[derive(Debug, Clone, Default)]
pub struct SourceScan {
    pub findings: Vec<Finding>,
    pub identifiers: Vec<IdentifierToken>,
}

/// Runs every enabled detector over `text`. Paths are left empty; findings
/// carry configured severities and are sorted.
pub fn scan_source(text: &str, profile: &LanguageProfile, settings: &Settings) -> SourceScan {
    let regions = partition(text, profile);
    let identifiers = extract_identifiers(text, &regions, profile, &settings.invisibles);
    let mut findings = scan_bidi(text, &regions, settings.bidi);
    findings.extend(scan_invisible(
        text,
        &regions,
        &identifiers,
        profile,
        &settings.invisibles,
        settings.invisible,
    ));
    findings.extend(scan_homoglyphs(text, &identifiers, ConfusableTable::builtin()));
    let mut findings = apply_settings(findings, settings);
    findings.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    SourceScan { findings, identifiers }
}

fn apply_settings(findings: Vec<Finding>, settings: &Settings) -> Vec<Finding> {
    findings
        .into_iter()
        .filter(|f| settings.checks.contains(&f.check_id))
        .map(|mut f| {
            if let Some(&s) = settings.severity_overrides.get(&f.check_id) {
                f.severity = s;
            }
            f
        })
        .collect()
}

#[derive(Debug, Clone)]
struct Candidate {
    path: PathBuf,
    display: String,
}

#[derive(Debug, Default)]
struct FileOutcome {
    entry: Option<FileEntry>,
    findings: Vec<Finding>,
    identifiers: Vec<IdentifierToken>,
    text: String,
}

fn display_path(p: &Path) -> String {
    p.to_string_lossy().replace('\\', "/")
}

/// Files under `roots` in a stable order. Ignore globs and the `.git`
/// exclusion apply inside directory walks; an explicitly named file is
/// always taken. Walk errors become IO entries.
fn discover(roots: &[PathBuf], settings: &Settings) -> Result<(Vec<Candidate>, Vec<FileEntry>), ScanError> {
    let mut files = Vec::new();
    let mut errors = Vec::new();
    let mut seen = HashSet::new();
    for root in roots {
        if !root.exists() {
            return Err(ScanError::MissingPath(root.clone()));
        }
        if !root.is_dir() {
            if seen.insert(root.clone()) {
                files.push(Candidate {
                    path: root.clone(),
                    display: display_path(root),
                });
            }
            continue;
        }
        let walker = WalkDir::new(root).sort_by_file_name().into_iter().filter_entry(|e| {
            if e.depth() == 0 {
                return true;
            }
            if e.file_type().is_dir() && e.file_name() == ".git" {
                return false;
            }
            let rel = e.path().strip_prefix(root).unwrap_or(e.path());
            !settings.ignore.is_match(rel)
        });
        for entry in walker {
            match entry {
                Ok(e) if e.file_type().is_file() => {
                    let path = e.into_path();
                    if seen.insert(path.clone()) {
                        files.push(Candidate {
                            display: display_path(&path),
                            path,
                        });
                    }
                }
                Ok(_) => {}
                Err(err) => {
                    let path = err.path().map(display_path).unwrap_or_else(|| display_path(root));
                    errors.push(FileEntry::new(path, FileStatus::IoError).with_reason(err.to_string()));
                }
            }
        }
    }
    Ok((files, errors))
}

fn scan_one(c: &Candidate, settings: &Settings) -> FileOutcome {
    let entry = |status| FileEntry::new(c.display.clone(), status);
    let ext = c.path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let Some(profile) = settings.registry.for_extension(ext) else {
        return FileOutcome {
            entry: Some(entry(FileStatus::Skipped).with_reason("unknown extension".into())),
            ..FileOutcome::default()
        };
    };
    match std::fs::metadata(&c.path) {
        Ok(m) if m.len() > settings.max_file_bytes => {
            return FileOutcome {
                entry: Some(entry(FileStatus::Skipped).with_reason(format!(
                    "larger than {} bytes",
                    settings.max_file_bytes
                ))),
                ..FileOutcome::default()
            };
        }
        Ok(_) => {}
        Err(e) => {
            return FileOutcome {
                entry: Some(entry(FileStatus::IoError).with_reason(e.to_string())),
                ..FileOutcome::default()
            }
        }
    }
    let bytes = match std::fs::read(&c.path) {
        Ok(b) => b,
        Err(e) => {
            return FileOutcome {
                entry: Some(entry(FileStatus::IoError).with_reason(e.to_string())),
                ..FileOutcome::default()
            }
        }
    };
    if looks_binary(&bytes) {
        return FileOutcome {
            entry: Some(entry(FileStatus::Skipped).with_reason("binary".into())),
            ..FileOutcome::default()
        };
    }
    let decoded = match decode_file(&bytes) {
        Ok(d) => d,
        Err(DecodeError::Invalid { offset, len }) => {
            let f = decode::encoding_error_finding(&c.display, &bytes, offset, len);
            return FileOutcome {
                entry: Some(entry(FileStatus::EncodingError).with_reason(f.message.clone())),
                findings: apply_settings(vec![f], settings),
                ..FileOutcome::default()
            };
        }
    };
    let SourceScan {
        mut findings,
        identifiers,
    } = scan_source(&decoded.text, profile, settings);
    let shift = decoded.prefix_len();
    for f in &mut findings {
        f.path = c.display.clone();
        f.byte_span = Span::new(f.byte_span.start + shift, f.byte_span.end + shift);
    }
    let mut e = entry(FileStatus::Scanned);
    e.bom = decoded.bom;
    let keep = settings.project_index && settings.checks.contains(&CheckId::HomoglyphConfusablePair);
    FileOutcome {
        entry: Some(e),
        findings,
        identifiers: if keep { identifiers } else { Vec::new() },
        text: if keep { decoded.text } else { String::new() },
    }
}

/// Confusable pairs whose two identifiers live in different files. A pair
/// already reported inside the later file is not repeated.
fn cross_file_pairs(outcomes: &[FileOutcome], settings: &Settings) -> Vec<Finding> {
    let seq: Vec<(usize, &IdentifierToken)> = outcomes
        .iter()
        .enumerate()
        .flat_map(|(i, o)| o.identifiers.iter().map(move |t| (i, t)))
        .collect();
    let texts: Vec<HashSet<&str>> = outcomes
        .iter()
        .map(|o| o.identifiers.iter().map(|t| t.text.as_str()).collect())
        .collect();
    let mut out = Vec::new();
    for (later, earlier) in confusable_pairs(&seq, ConfusableTable::builtin()) {
        let (lf, l) = seq[later];
        let (ef, e) = seq[earlier];
        if lf == ef || texts[lf].contains(e.text.as_str()) {
            continue;
        }
        let o = &outcomes[lf];
        let path = o.entry.as_ref().map(|e| e.path.clone()).unwrap_or_default();
        let earlier_path = outcomes[ef].entry.as_ref().map(|e| e.path.as_str()).unwrap_or("");
        let index = LineIndex::new(&o.text);
        out.push(Finding {
            check_id: CheckId::HomoglyphConfusablePair,
            severity: CheckId::HomoglyphConfusablePair.default_severity(),
            path,
            line: l.line,
            col: l.col,
            byte_span: l.span,
            code_points: pair_code_points(l, e).into_iter().map(code_point_label).collect(),
            message: pair_message(l, e, &format!("{earlier_path}:")),
            preview: render_preview(index.line_text(&o.text, l.line)),
        });
    }
    apply_settings(out, settings)
}

/// Scans files and directory trees. `jobs` of `None` uses one worker per
/// CPU. Output order does not depend on the worker count.
pub fn scan_paths(roots: &[PathBuf], settings: &Settings, jobs: Option<usize>) -> Result<ScanReport, ScanError> {
    let (candidates, walk_errors) = discover(roots, settings)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder.build()?;
    let outcomes: Vec<FileOutcome> =
        pool.install(|| candidates.par_iter().map(|c| scan_one(c, settings)).collect());

    let mut findings: Vec<Finding> = outcomes.iter().flat_map(|o| o.findings.iter().cloned()).collect();
    if settings.project_index {
        findings.extend(cross_file_pairs(&outcomes, settings));
    }
    let mut files: Vec<FileEntry> = outcomes.into_iter().filter_map(|o| o.entry).collect();
    files.extend(walk_errors);
    Ok(ScanReport::new(findings, files))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finding::Severity;
    use crate::lexer::load_profile;

    #[test]
    fn source_scan_applies_overrides_and_filters() {
        let src = "int say\u{200B}Hello;\nint \u{0441}ount; int count;\n";
        let profile = load_profile("c").unwrap();
        let all = scan_source(src, &profile, &Settings::default());
        let ids: Vec<CheckId> = all.findings.iter().map(|f| f.check_id).collect();
        assert!(ids.contains(&CheckId::InvisibleInIdentifier));
        assert!(ids.contains(&CheckId::HomoglyphConfusablePair));

        let cfg = ScanConfig {
            checks: Some([CheckId::InvisibleInIdentifier].into()),
            severity_overrides: [(CheckId::InvisibleInIdentifier, Severity::Info)].into(),
            ..ScanConfig::default()
        };
        let only = scan_source(src, &profile, &cfg.prepare().unwrap());
        assert_eq!(only.findings.len(), 1);
        assert_eq!(only.findings[0].severity, Severity::Info);
    }
}
