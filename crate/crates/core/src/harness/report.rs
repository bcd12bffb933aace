use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Exact checks decide pass/fail. Diagnostics are recorded for inspection
/// and never fail a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Exact,
    Diagnostic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub kind: CheckKind,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub expected: Value,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub actual: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    /// Passes when `expected == actual`.
    pub fn exact(id: impl Into<String>, expected: impl Serialize, actual: impl Serialize) -> Self {
        let expected = to_value(expected);
        let actual = to_value(actual);
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        Check { id: id.into(), kind: CheckKind::Exact, status, expected, actual, tolerance: None, note: None }
    }

    pub fn holds(id: impl Into<String>, ok: bool, actual: impl Serialize) -> Self {
        Check {
            id: id.into(),
            kind: CheckKind::Exact,
            status: if ok { Status::Pass } else { Status::Fail },
            expected: Value::Null,
            actual: to_value(actual),
            tolerance: None,
            note: None,
        }
    }

    pub fn within(id: impl Into<String>, expected: f64, actual: f64, tolerance: f64) -> Self {
        let ok = (expected - actual).abs() <= tolerance;
        Check {
            id: id.into(),
            kind: CheckKind::Exact,
            status: if ok { Status::Pass } else { Status::Fail },
            expected: to_value(expected),
            actual: to_value(actual),
            tolerance: Some(tolerance),
            note: None,
        }
    }

    pub fn info(id: impl Into<String>, actual: impl Serialize) -> Self {
        Check {
            id: id.into(),
            kind: CheckKind::Diagnostic,
            status: Status::Info,
            expected: Value::Null,
            actual: to_value(actual),
            tolerance: None,
            note: None,
        }
    }

    pub fn with_expected(mut self, expected: impl Serialize) -> Self {
        self.expected = to_value(expected);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), ..Report::default() }
    }

    pub fn input(mut self, key: &str, value: impl Serialize) -> Self {
        self.inputs.insert(key.into(), to_value(value));
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn passed(&self) -> bool {
        !self.checks.iter().any(Check::failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.failed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// One row per check: `id,kind,status,expected,actual`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,kind,status,expected,actual\n");
        for c in &self.checks {
            let kind = match c.kind {
                CheckKind::Exact => "exact",
                CheckKind::Diagnostic => "diagnostic",
            };
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                csv_field(&c.id),
                kind,
                status_word(c.status),
                csv_field(&compact(&c.expected)),
                csv_field(&compact(&c.actual))
            ));
        }
        out
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Info => "info",
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.command)?;
        for (k, v) in &self.inputs {
            writeln!(f, "  {k} = {}", compact(v))?;
        }
        for c in &self.checks {
            write!(f, "  [{:>4}] {}", status_word(c.status), c.id)?;
            if !c.expected.is_null() {
                write!(f, "  expected {}", compact(&c.expected))?;
            }
            if !c.actual.is_null() {
                write!(f, "  got {}", compact(&c.actual))?;
            }
            if let Some(t) = c.tolerance {
                write!(f, "  (tol {t:e})")?;
            }
            if let Some(n) = &c.note {
                write!(f, "  -- {n}")?;
            }
            writeln!(f)?;
        }
        let fails = self.failures().count();
        if fails == 0 {
            write!(f, "all exact checks pass")
        } else {
            write!(f, "{fails} exact check(s) FAILED")
        }
    }
}
