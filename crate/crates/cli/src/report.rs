use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use sgcrit::io::{parse_graph, parse_graph_json, serialize_graph, serialize_graph_json};
use sgcrit::SignedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Serialize)]
pub struct Input {
    pub path: PathBuf,
    pub sha256: String,
}

/// What a command prints. Keys of `result` are sorted on output because
/// `serde_json` maps are ordered.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub input: Option<Input>,
    pub certified: bool,
    pub verdict: Verdict,
    pub result: Value,
    #[serde(skip)]
    pub text: String,
    /// Written to stdout as-is in text mode (a graph for `gen` and `reduce`).
    #[serde(skip)]
    pub payload: Option<String>,
}

impl Report {
    pub fn new(command: &'static str, input: Option<Input>) -> Self {
        Report {
            command,
            input,
            certified: true,
            verdict: Verdict::Pass,
            result: Value::Null,
            text: String::new(),
            payload: None,
        }
    }

    pub fn line(&mut self, args: std::fmt::Arguments<'_>) {
        self.text.write_fmt(args).expect("writing to a string");
        self.text.push('\n');
    }

    pub fn exit_code(&self) -> u8 {
        match self.verdict {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
        }
    }

    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("reports serialize");
        serde_json::to_string_pretty(&v).expect("values serialize")
    }
}

/// Any failure that ends a command with exit code 2.
#[derive(Debug)]
pub struct Failure {
    pub kind: &'static str,
    pub message: String,
    pub detail: Value,
}

impl From<sgcrit::Error> for Failure {
    fn from(e: sgcrit::Error) -> Self {
        use sgcrit::Error::*;
        let (kind, detail) = match &e {
            MalformedInput(_) => ("malformed-input", Value::Null),
            Parse { line, .. } => ("parse", json!({ "line": line })),
            BudgetExceeded { what, cap, hint } => ("budget", json!({ "what": what, "cap": cap, "hint": hint })),
            Precondition(_) => ("precondition", Value::Null),
            Certificate(_) => ("certificate", Value::Null),
            Internal(_) => ("internal", Value::Null),
        };
        Failure {
            kind,
            message: e.to_string(),
            detail,
        }
    }
}

impl Failure {
    pub fn io(path: &Path, e: std::io::Error) -> Self {
        Failure {
            kind: "io",
            message: format!("{}: {e}", path.display()),
            detail: Value::Null,
        }
    }

    pub fn to_json(&self, command: &str) -> String {
        let v = json!({
            "command": command,
            "error": { "kind": self.kind, "message": self.message, "detail": self.detail },
        });
        serde_json::to_string_pretty(&v).expect("values serialize")
    }
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

pub fn read_graph(path: &Path) -> Result<(SignedGraph, Input), Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::io(path, e))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Failure {
        kind: "parse",
        message: format!("{}: not valid UTF-8", path.display()),
        detail: Value::Null,
    })?;
    let g = if is_json(path) { parse_graph_json(&text) } else { parse_graph(&text) }?;
    let input = Input {
        path: path.to_owned(),
        sha256: hex::encode(Sha256::digest(&bytes)),
    };
    Ok((g, input))
}

pub fn render_graph(g: &SignedGraph, path: Option<&Path>) -> String {
    match path {
        Some(p) if is_json(p) => serialize_graph_json(g) + "\n",
        _ => serialize_graph(g),
    }
}

pub fn write_graph(g: &SignedGraph, path: &Path) -> Result<(), Failure> {
    std::fs::write(path, render_graph(g, Some(path))).map_err(|e| Failure::io(path, e))
}
