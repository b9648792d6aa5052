//! Invariants of the front end itself, appended to the core suite by
//! `verify`.

use std::path::PathBuf;

use santalo::fixtures::random_body;
use santalo::BodyJson;

use crate::commands::{canonical_body_json, SCAN_CSV_HEADER, SCHEMA_VERSION};
use crate::execute;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub fn cli_checks() -> Vec<CliCheck> {
    vec![determinism(), schema(), echo_round_trip()]
}

struct TempFile(PathBuf);

impl TempFile {
    fn new(tag: &str, contents: &str) -> std::io::Result<Self> {
        let p = std::env::temp_dir().join(format!("santalo-{}-{tag}.json", std::process::id()));
        std::fs::write(&p, contents)?;
        Ok(Self(p))
    }

    fn path(&self) -> String {
        self.0.to_string_lossy().into_owned()
    }
}

impl Drop for TempFile {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.0);
    }
}

fn determinism() -> CliCheck {
    let args = ["santalo", "scan-gamma", "--n", "1", "--alpha", "4", "--beta", "3", "--gammas", "10:1e3:6", "--nodes", "16"];
    let a = execute(args);
    let b = execute(args);
    let passed = a.code == 0 && a.stdout == b.stdout && a.stdout.starts_with(SCAN_CSV_HEADER);
    CliCheck { name: "csv_determinism", passed, detail: format!("{} bytes, identical: {}", a.stdout.len(), a.stdout == b.stdout) }
}

fn schema() -> CliCheck {
    let fail = |d: String| CliCheck { name: "report_schema", passed: false, detail: d };
    let body = match TempFile::new("schema", r#"{"kind":"rhombus","a":[1,1]}"#) {
        Ok(f) => f,
        Err(e) => return fail(format!("temp file: {e}")),
    };
    let ex = execute(["santalo", "integrate", "--body", &body.path(), "--alpha", "2", "--nodes", "8"]);
    let v: serde_json::Value = match serde_json::from_str(&ex.stdout) {
        Ok(v) => v,
        Err(e) => return fail(format!("report is not JSON: {e}")),
    };
    let has_schema = v["schema"] == SCHEMA_VERSION;
    let finite = v["results"]["value"].as_f64().is_some_and(f64::is_finite) && v["wall_time_s"].as_f64().is_some();
    CliCheck { name: "report_schema", passed: ex.code == 0 && has_schema && finite, detail: format!("schema {}", v["schema"]) }
}

fn echo_round_trip() -> CliCheck {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 1..=3 {
        for i in 0..5 {
            let Ok(spec) = random_body(7, i, n) else { continue };
            count += 1;
            let tag = format!("echo-{n}-{i}");
            let Ok(file) = TempFile::new(&tag, &canonical_body_json(&spec)) else {
                bad.push(tag);
                continue;
            };
            let ex = execute(["santalo", "integrate", "--body", &file.path(), "--alpha", "1", "--echo-body"]);
            let back = serde_json::from_str::<BodyJson>(&ex.stdout).ok().and_then(|j| j.to_spec::<f64>().ok());
            if ex.code != 0 || back.as_ref() != Some(&spec) {
                bad.push(tag);
            }
        }
    }
    CliCheck { name: "echo_body_round_trip", passed: bad.is_empty() && count > 0, detail: format!("{count} bodies, mismatches {bad:?}") }
}
