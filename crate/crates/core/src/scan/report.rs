use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::finding::{CheckId, Finding, Severity};

pub const TOOL_NAME: &str = "trojan-sentinel";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl Default for ToolInfo {
    fn default() -> Self {
        ToolInfo {
            name: TOOL_NAME.to_string(),
            version: TOOL_VERSION.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FileStatus {
    Scanned,
    Skipped,
    EncodingError,
    IoError,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileEntry {
    pub path: String,
    pub status: FileStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub bom: bool,
}

impl FileEntry {
    pub fn new(path: String, status: FileStatus) -> Self {
        FileEntry {
            path,
            status,
            reason: None,
            bom: false,
        }
    }

    pub fn with_reason(mut self, reason: String) -> Self {
        self.reason = Some(reason);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    /// Every check id, including those with zero findings.
    pub by_check: BTreeMap<CheckId, usize>,
    pub by_severity: BTreeMap<Severity, usize>,
}

impl Summary {
    pub fn of(findings: &[Finding]) -> Self {
        let mut by_check: BTreeMap<CheckId, usize> = CheckId::ALL.into_iter().map(|c| (c, 0)).collect();
        let mut by_severity: BTreeMap<Severity, usize> = Severity::ALL.into_iter().map(|s| (s, 0)).collect();
        for f in findings {
            *by_check.entry(f.check_id).or_default() += 1;
            *by_severity.entry(f.severity).or_default() += 1;
        }
        Summary {
            total: findings.len(),
            by_check,
            by_severity,
        }
    }
}

/// Everything a scan produced, in report order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub findings: Vec<Finding>,
    pub files: Vec<FileEntry>,
    pub summary: Summary,
    pub tool: ToolInfo,
}

impl ScanReport {
    pub fn new(mut findings: Vec<Finding>, mut files: Vec<FileEntry>) -> Self {
        findings.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        findings.dedup();
        files.sort_by(|a, b| a.path.cmp(&b.path));
        ScanReport {
            summary: Summary::of(&findings),
            findings,
            files,
            tool: ToolInfo::default(),
        }
    }

    pub fn io_failures(&self) -> usize {
        self.files.iter().filter(|f| f.status == FileStatus::IoError).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        for f in &self.findings {
            let _ = writeln!(
                out,
                "{}:{}:{}: {}[{}] {}",
                f.path,
                f.line,
                f.col,
                f.severity,
                f.check_id,
                f.message
            );
            if !f.preview.annotated.is_empty() || !f.preview.rendered.is_empty() {
                let _ = writeln!(out, "    logical:  {}", f.preview.annotated);
                let _ = writeln!(out, "    rendered: {}", f.preview.rendered);
            }
        }
        for file in &self.files {
            if matches!(file.status, FileStatus::IoError) {
                let _ = writeln!(
                    out,
                    "{}: io error: {}",
                    file.path,
                    file.reason.as_deref().unwrap_or("unknown")
                );
            }
        }
        let s = &self.summary;
        let scanned = self.files.iter().filter(|f| f.status == FileStatus::Scanned).count();
        let _ = writeln!(
            out,
            "{} finding(s): {} error, {} warning, {} info; {} file(s) scanned, {} not scanned",
            s.total,
            s.by_severity.get(&Severity::Error).copied().unwrap_or(0),
            s.by_severity.get(&Severity::Warning).copied().unwrap_or(0),
            s.by_severity.get(&Severity::Info).copied().unwrap_or(0),
            scanned,
            self.files.len() - scanned
        );
        out
    }

    pub fn format(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Human => self.to_human(),
            ReportFormat::Json => self.to_json(),
            ReportFormat::Sarif => super::sarif::to_sarif(self),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Human,
    Json,
    Sarif,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "human" => Ok(ReportFormat::Human),
            "json" => Ok(ReportFormat::Json),
            "sarif" => Ok(ReportFormat::Sarif),
            _ => Err(format!("unknown format `{s}`")),
        }
    }
}

/// 1 when any finding is at or above `fail_on`, or when `strict_io` is set
/// and some file could not be read; otherwise 0. Usage errors (2) are
/// decided before a report exists.
pub fn exit_code(report: &ScanReport, fail_on: Severity, strict_io: bool) -> i32 {
    let failing = report.findings.iter().any(|f| f.severity >= fail_on);
    if failing || (strict_io && report.io_failures() > 0) {
        1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finding::Preview;
    use crate::text::Span;

    fn finding(path: &str, line: usize, check_id: CheckId, severity: Severity) -> Finding {
        Finding {
            check_id,
            severity,
            path: path.into(),
            line,
            col: 1,
            byte_span: Span::new(0, 1),
            code_points: vec![],
            message: "m".into(),
            preview: Preview::default(),
        }
    }

    #[test]
    fn empty_report_json() {
        let r = ScanReport::new(vec![], vec![]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["findings"], serde_json::json!([]));
        assert_eq!(v["summary"]["total"], 0);
        assert_eq!(v["summary"]["by_check"].as_object().unwrap().len(), 10);
        assert_eq!(v["tool"]["name"], TOOL_NAME);
        assert_eq!(exit_code(&r, Severity::Warning, false), 0);
    }

    #[test]
    fn findings_sorted() {
        let r = ScanReport::new(
            vec![
                finding("b.c", 1, CheckId::BidiInCode, Severity::Error),
                finding("a.c", 9, CheckId::BidiInCode, Severity::Error),
                finding("a.c", 2, CheckId::InvisibleInCode, Severity::Error),
            ],
            vec![],
        );
        let order: Vec<(&str, usize)> = r.findings.iter().map(|f| (f.path.as_str(), f.line)).collect();
        assert_eq!(order, [("a.c", 2), ("a.c", 9), ("b.c", 1)]);
    }

    #[test]
    fn exit_codes() {
        let warn = ScanReport::new(
            vec![finding("a", 1, CheckId::HomoglyphMixedScript, Severity::Warning)],
            vec![],
        );
        assert_eq!(exit_code(&warn, Severity::Warning, false), 1);
        assert_eq!(exit_code(&warn, Severity::Error, false), 0);
        let info = ScanReport::new(vec![finding("a", 1, CheckId::BidiUnterminatedString, Severity::Info)], vec![]);
        assert_eq!(exit_code(&info, Severity::Warning, false), 0);
        let io = ScanReport::new(vec![], vec![FileEntry::new("x".into(), FileStatus::IoError)]);
        assert_eq!(exit_code(&io, Severity::Warning, false), 0);
        assert_eq!(exit_code(&io, Severity::Warning, true), 1);
    }
}
