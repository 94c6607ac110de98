//! Text, JSON and CSV renderings of a suite run.

use serde::Serialize;

use super::{CheckResult, CheckStatus, Suite};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub results: Vec<CheckResult>,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl SuiteReport {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for r in &self.results {
            match r.status {
                CheckStatus::Pass => s.pass += 1,
                CheckStatus::Fail => s.fail += 1,
                CheckStatus::Skipped => s.skipped += 1,
            }
        }
        s
    }

    pub fn passed(&self) -> bool {
        self.summary().fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.status == CheckStatus::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let status = match r.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            out.push_str(&format!("{status} {:<44} {}", r.check, r.ring));
            if let Some(reason) = &r.reason {
                out.push_str(&format!(" ({reason})"));
            }
            if let Some(w) = &r.witness {
                out.push_str(&format!(" [{w}]"));
            }
            out.push('\n');
        }
        let s = self.summary();
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} skipped\n",
            s.pass, s.fail, s.skipped
        ));
        out
    }

    /// Array of check results.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.results).expect("report serializes") + "\n"
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,ring,fingerprint,status,reason,witness\n");
        for r in &self.results {
            let status = serde_json::to_value(r.status).expect("status serializes");
            let fields = [
                r.check.as_str(),
                r.ring.as_str(),
                r.fingerprint.as_str(),
                status.as_str().unwrap_or_default(),
                r.reason.as_deref().unwrap_or_default(),
                r.witness.as_deref().unwrap_or_default(),
            ];
            out.push_str(&fields.map(csv_field).join(","));
            out.push('\n');
        }
        out
    }
}
