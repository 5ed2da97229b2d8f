//! SARIF 2.1.0 output.

use serde_json::{json, Value};

use super::report::ScanReport;
use crate::finding::{CheckId, Severity};

pub const SARIF_SCHEMA_URI: &str = "https://json.schemastore.org/sarif-2.1.0.json";

fn level(s: Severity) -> &'static str {
    match s {
        Severity::Error => "error",
        Severity::Warning => "warning",
        Severity::Info => "note",
    }
}

fn uri(path: &str) -> String {
    let mut out = String::with_capacity(path.len());
    for c in path.chars() {
        match c {
            ' ' => out.push_str("%20"),
            '%' => out.push_str("%25"),
            '#' => out.push_str("%23"),
            '?' => out.push_str("%3F"),
            _ => out.push(c),
        }
    }
    out
}

pub fn sarif_value(report: &ScanReport) -> Value {
    let rules: Vec<Value> = CheckId::ALL
        .iter()
        .map(|c| {
            json!({
                "id": c.as_str(),
                "shortDescription": {"text": c.description()},
                "defaultConfiguration": {"level": level(c.default_severity())},
            })
        })
        .collect();
    let results: Vec<Value> = report
        .findings
        .iter()
        .map(|f| {
            let rule_index = CheckId::ALL.iter().position(|c| *c == f.check_id).unwrap_or(0);
            let mut region = json!({
                "startLine": f.line,
                "startColumn": f.col,
                "byteOffset": f.byte_span.start,
                "byteLength": f.byte_span.len(),
            });
            if !f.preview.annotated.is_empty() {
                region["snippet"] = json!({"text": f.preview.annotated});
            }
            json!({
                "ruleId": f.check_id.as_str(),
                "ruleIndex": rule_index,
                "level": level(f.severity),
                "message": {"text": f.message},
                "locations": [{
                    "physicalLocation": {
                        "artifactLocation": {"uri": uri(&f.path)},
                        "region": region,
                    }
                }],
                "properties": {
                    "codePoints": f.code_points,
                    "rendered": f.preview.rendered,
                },
            })
        })
        .collect();
    json!({
        "$schema": SARIF_SCHEMA_URI,
        "version": "2.1.0",
        "runs": [{
            "tool": {
                "driver": {
                    "name": report.tool.name,
                    "version": report.tool.version,
                    "rules": rules,
                }
            },
            "columnKind": "unicodeCodePoints",
            "results": results,
        }],
    })
}

pub fn to_sarif(report: &ScanReport) -> String {
    serde_json::to_string_pretty(&sarif_value(report)).expect("sarif serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_run() {
        let v = sarif_value(&ScanReport::new(vec![], vec![]));
        assert_eq!(v["version"], "2.1.0");
        assert_eq!(v["runs"][0]["results"], json!([]));
        assert_eq!(v["runs"][0]["tool"]["driver"]["rules"].as_array().unwrap().len(), 10);
    }

    #[test]
    fn uri_escaping() {
        assert_eq!(uri("a b/c#1.c"), "a%20b/c%231.c");
    }
}
