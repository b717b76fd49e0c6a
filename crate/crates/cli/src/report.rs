use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Info,
    Pass,
    Indeterminate,
    Fail,
}

impl Outcome {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Outcome::Info => "info",
            Outcome::Pass => "pass",
            Outcome::Indeterminate => "indeterminate",
            Outcome::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Section {
    pub title: String,
    pub lines: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub sections: Vec<Section>,
    pub data: Value,
    pub exit_code: i32,
}

impl RunReport {
    pub fn new(command: String) -> Self {
        RunReport {
            command,
            checks: Vec::new(),
            sections: Vec::new(),
            data: Value::Null,
            exit_code: 0,
        }
    }

    pub fn check(&mut self, name: &str, outcome: Outcome, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            outcome,
            detail: detail.into(),
        });
    }

    pub fn section(&mut self, title: &str, lines: Vec<String>) {
        self.sections.push(Section {
            title: title.to_string(),
            lines,
        });
    }

    /// Exit status: any failure wins over indeterminate results.
    pub fn finish(mut self) -> Self {
        let worst = self.checks.iter().map(|c| c.outcome).max().unwrap_or(Outcome::Info);
        self.exit_code = match worst {
            Outcome::Fail => 1,
            Outcome::Indeterminate => 2,
            _ => 0,
        };
        self
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for c in &self.checks {
            if c.detail.is_empty() {
                out.push_str(&format!("[{}] {}\n", c.outcome.tag(), c.name));
            } else {
                out.push_str(&format!("[{}] {}: {}\n", c.outcome.tag(), c.name, c.detail));
            }
        }
        for s in &self.sections {
            out.push_str(&format!("{}:\n", s.title));
            for l in &s.lines {
                out.push_str(&format!("  {l}\n"));
            }
        }
        out.push_str(&format!("exit: {}\n", self.exit_code));
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
