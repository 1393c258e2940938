//! Rendering of a command outcome as text or as a machine-readable document.

use crossed_hopf::{Report, Status};
use serde_json::{json, Value};

use crate::format::write_pretty;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum ReportMode {
    #[default]
    Text,
    Machine,
}

/// Checks and named result values produced by one command.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub command: String,
    pub report: Report,
    pub results: Vec<(String, Value)>,
}

impl Outcome {
    pub fn new(command: &str) -> Outcome {
        Outcome { command: command.into(), ..Outcome::default() }
    }

    pub fn result(&mut self, name: impl Into<String>, value: Value) {
        self.results.push((name.into(), value));
    }

    /// 0 when no check failed; skipped checks do not count as failures.
    pub fn exit_code(&self) -> i32 {
        if self.report.all_pass() {
            0
        } else {
            1
        }
    }

    fn status(&self) -> &'static str {
        if self.report.all_pass() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn render(&self, mode: ReportMode) -> String {
        match mode {
            ReportMode::Text => self.render_text(),
            ReportMode::Machine => write_pretty(&self.to_json()),
        }
    }

    fn render_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for c in self.report.checks() {
            out.push_str(&format!("{:<7} {}", c.status.as_str(), c.name));
            if c.instances > 0 || c.skipped > 0 {
                out.push_str(&format!(" [{} instances", c.instances));
                if c.skipped > 0 {
                    out.push_str(&format!(", {} skipped", c.skipped));
                }
                out.push(']');
            }
            if let Some(w) = &c.witness {
                let tag = if c.status == Status::Fail { "witness" } else { "note" };
                out.push_str(&format!("\n        {tag}: {w}"));
            }
            out.push('\n');
        }
        for (name, value) in &self.results {
            let shown = match value {
                Value::String(s) => s.clone(),
                v => v.to_string(),
            };
            out.push_str(&format!("result  {name} = {shown}\n"));
        }
        out.push_str(&format!("status: {}\n", self.status()));
        out
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .report
            .checks()
            .map(|c| {
                json!({
                    "name": c.name,
                    "status": c.status.as_str(),
                    "instances": c.instances,
                    "skipped": c.skipped,
                    "witness": c.witness,
                })
            })
            .collect();
        let results: Vec<Value> = self.results.iter().map(|(n, v)| json!({ "name": n, "value": v })).collect();
        json!({
            "command": self.command,
            "status": self.status(),
            "exit_code": self.exit_code(),
            "checks": checks,
            "results": results,
        })
    }
}
