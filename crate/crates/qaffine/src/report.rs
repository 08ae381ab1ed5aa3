//! Verification reports: deterministic, serializable, with exact witnesses
//! on failure.
//!
//! Reports never embed timing or other run-dependent data, so identical
//! configurations produce byte-identical JSON whatever the thread count.
//! Timing goes to the human-readable text rendering only.

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub task: String,
    pub params: serde_json::Value,
    pub checks: Vec<CheckOutcome>,
    pub summary: Summary,
    /// Free-form exact values worth publishing (e.g. computed normalization
    /// constants of vertex operators).
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub notes: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
}

impl Report {
    pub fn new(task: &str, params: serde_json::Value, mut checks: Vec<CheckOutcome>) -> Report {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let pass = checks.iter().filter(|c| c.status == Status::Pass).count();
        let fail = checks.len() - pass;
        Report {
            schema_version: SCHEMA_VERSION,
            task: task.to_string(),
            params,
            summary: Summary {
                total: checks.len(),
                pass,
                fail,
            },
            checks,
            notes: serde_json::Value::Null,
        }
    }

    pub fn with_notes(mut self, notes: serde_json::Value) -> Report {
        self.notes = notes;
        self
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn render_text(&self, elapsed: std::time::Duration) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "task {}: {} checks, {} pass, {} fail ({:.2?})\n",
            self.task, self.summary.total, self.summary.pass, self.summary.fail, elapsed
        ));
        for c in &self.checks {
            if c.status == Status::Fail {
                out.push_str(&format!(
                    "  FAIL {}  {}\n",
                    c.id,
                    c.witness.as_deref().unwrap_or("")
                ));
            }
        }
        out
    }

    /// Merge several reports into one (ids namespaced by the sub-task).
    pub fn merge(task: &str, params: serde_json::Value, parts: Vec<Report>) -> Report {
        let mut checks = vec![];
        let mut notes = serde_json::Map::new();
        for p in parts {
            for mut c in p.checks {
                c.id = format!("{}/{}", p.task, c.id);
                checks.push(c);
            }
            if !p.notes.is_null() {
                notes.insert(p.task.clone(), p.notes);
            }
        }
        let notes = if notes.is_empty() {
            serde_json::Value::Null
        } else {
            serde_json::Value::Object(notes)
        };
        Report::new(task, params, checks).with_notes(notes)
    }
}
