use std::fmt::Write;
use std::time::Duration;

use jordan_core::jordanmaps::CheckReport;
use serde::Serialize;
use serde_json::Value;

/// One pass/fail line of a run.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cases: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhaustive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<String>,
}

/// Everything a command computed. Exact values are kept as strings so
/// rationals print as `p/q`.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: String,
    pub parameters: Vec<(String, String)>,
    pub checks: Vec<CheckResult>,
    pub values: Vec<(String, Value)>,
    pub duration_ms: f64,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            parameters: Vec::new(),
            checks: Vec::new(),
            values: Vec::new(),
            duration_ms: 0.0,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.push((key.into(), value.to_string()));
        self
    }

    pub fn value(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.values.push((key.into(), value.into()));
        self
    }

    pub fn check(&mut self, name: &str, passed: bool) -> &mut CheckResult {
        self.checks.push(CheckResult {
            name: name.into(),
            passed,
            cases: None,
            exhaustive: None,
            detail: None,
            witness: Vec::new(),
        });
        self.checks.last_mut().expect("just pushed")
    }

    /// Passes when there is no failure description.
    pub fn check_absent(&mut self, name: &str, failure: Option<String>) {
        let passed = failure.is_none();
        self.check(name, passed).detail = failure;
    }

    pub fn fail(&mut self, name: &str, detail: impl ToString) {
        self.check(name, false).detail = Some(detail.to_string());
    }

    pub fn add_report(&mut self, r: &CheckReport) {
        let c = self.check(&r.name, r.passed);
        c.cases = Some(r.cases);
        c.exhaustive = Some(r.exhaustive);
        if let Some(v) = &r.violation {
            c.detail = Some(v.detail.clone());
            c.witness = v.formatted.clone();
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.values.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn find_check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn finish(&mut self, elapsed: Duration) {
        self.duration_ms = elapsed.as_secs_f64() * 1e3;
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let obj = serde_json::json!({
            "command": self.command,
            "parameters": self.parameters.iter()
                .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                .collect::<serde_json::Map<_, _>>(),
            "checks": self.checks,
            "values": self.values.iter().cloned().collect::<serde_json::Map<_, _>>(),
            "passed": self.passed(),
            "duration_ms": self.duration_ms,
        });
        serde_json::to_string_pretty(&obj).expect("serializable")
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(s, "{} {}", self.command, params.join(" "));
        for c in &self.checks {
            let _ = write!(s, "  [{}] {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
            if let Some(n) = c.cases {
                let _ = write!(s, " ({n} cases{})", if c.exhaustive == Some(true) { ", exhaustive" } else { "" });
            }
            if let Some(d) = &c.detail {
                let _ = write!(s, ": {d}");
            }
            if !c.witness.is_empty() {
                let _ = write!(s, " at ({})", c.witness.join(", "));
            }
            s.push('\n');
        }
        for (k, v) in &self.values {
            let shown = match v {
                Value::String(t) => t.clone(),
                other => other.to_string(),
            };
            let _ = writeln!(s, "  {k}: {shown}");
        }
        let _ = writeln!(
            s,
            "{} in {:.1} ms",
            if self.passed() { "all checks passed" } else { "some checks FAILED" },
            self.duration_ms
        );
        s
    }
}
