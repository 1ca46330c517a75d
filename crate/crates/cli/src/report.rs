use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::input::Document;

/// One answer produced by the toolkit, tagged with the module that computed
/// it and the test it applies.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub module: &'static str,
    pub criterion: &'static str,
    pub name: &'static str,
    pub value: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Verdict {
    pub fn new(module: &'static str, criterion: &'static str, name: &'static str, value: impl Into<Value>) -> Self {
        Verdict {
            module,
            criterion,
            name,
            value: value.into(),
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: Option<String>) -> Self {
        self.witness = witness;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    /// The command line that produced the report, without the program name.
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<Document>,
    pub verdicts: Vec<Verdict>,
    pub timing_ms: f64,
}

impl Report {
    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        if let Some(doc) = &self.presentation {
            let count = match (&doc.relation, &doc.relations) {
                (Some(_), _) => 1,
                (None, Some(rs)) => rs.len(),
                (None, None) => 0,
            };
            writeln!(out, "presentation: n = {}, N = {}, {count} relation(s)", doc.n, doc.big_n).unwrap();
        }
        for v in &self.verdicts {
            writeln!(out, "[{}/{}] {} = {}", v.module, v.criterion, v.name, plain(&v.value)).unwrap();
            if let Some(w) = &v.witness {
                writeln!(out, "    witness: {w}").unwrap();
            }
        }
        writeln!(out, "timing: {:.3} ms", self.timing_ms).unwrap();
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}
