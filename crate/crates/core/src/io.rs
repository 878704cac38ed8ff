//! The `sg1` text format and its JSON mirror.
//!
//! ```text
//! sg1
//! # comments run to the end of the line
//! v a
//! v b
//! e e1 a b -
//! ```
//!
//! The first line is `sg1`. Vertex lines `v <name>` precede the edge lines
//! `e <id> <u> <v> <+|->` that use them. Names match `[A-Za-z0-9_.-]+`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{is_valid_name, Edge, Sign, SignedGraph};

pub const FORMAT: &str = "sg1";

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn name(tok: &str, line: usize) -> Result<&str> {
    if is_valid_name(tok) {
        Ok(tok)
    } else {
        Err(parse_err(line, format!("invalid name `{tok}`")))
    }
}

/// Parses `sg1` text. Errors carry 1-based line numbers.
pub fn parse_graph(text: &str) -> Result<SignedGraph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    match lines.next() {
        Some((_, first)) if first.trim() == FORMAT => {}
        Some((_, first)) => return Err(parse_err(1, format!("expected `{FORMAT}` header, found `{}`", first.trim()))),
        None => return Err(parse_err(1, "empty input")),
    }
    let mut vertices: BTreeSet<String> = BTreeSet::new();
    let mut edge_ids: BTreeSet<String> = BTreeSet::new();
    let mut edges = Vec::new();
    for (n, raw) in lines {
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            ["v", v] => {
                if !edges.is_empty() {
                    return Err(parse_err(n, "vertex declared after the first edge"));
                }
                if !vertices.insert(name(v, n)?.to_owned()) {
                    return Err(parse_err(n, format!("duplicate vertex `{v}`")));
                }
            }
            ["e", id, u, v, s] => {
                let sign = match *s {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    other => return Err(parse_err(n, format!("unknown sign token `{other}`"))),
                };
                for x in [u, v] {
                    if !vertices.contains(name(x, n)?) {
                        return Err(parse_err(n, format!("unknown vertex `{x}`")));
                    }
                }
                if !edge_ids.insert(name(id, n)?.to_owned()) {
                    return Err(parse_err(n, format!("duplicate edge id `{id}`")));
                }
                edges.push(Edge::new(*id, *u, *v, sign));
            }
            ["v", ..] => return Err(parse_err(n, "expected `v <name>`")),
            ["e", ..] => return Err(parse_err(n, "expected `e <id> <u> <v> <+|->`")),
            [other, ..] => return Err(parse_err(n, format!("unknown record `{other}`"))),
        }
    }
    SignedGraph::new(vertices, edges)
}

/// Canonical `sg1` text: vertices then edges, each sorted by id, endpoints in
/// stored order.
pub fn serialize_graph(g: &SignedGraph) -> String {
    let mut out = String::from(FORMAT);
    out.push('\n');
    for v in g.vertices() {
        out.push_str(&format!("v {v}\n"));
    }
    for e in g.edges() {
        out.push_str(&format!("e {} {} {} {}\n", e.id, e.u, e.v, e.sign.symbol()));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: String,
    pub u: String,
    pub v: String,
    pub sign: Sign,
}

/// The JSON mirror of `sg1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub format: String,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
}

impl From<SignedGraph> for GraphDocument {
    fn from(g: SignedGraph) -> Self {
        GraphDocument::from(&g)
    }
}

impl From<&SignedGraph> for GraphDocument {
    fn from(g: &SignedGraph) -> Self {
        GraphDocument {
            format: FORMAT.to_owned(),
            vertices: g.vertices().iter().map(|v| v.to_string()).collect(),
            edges: g
                .edges()
                .map(|e| EdgeRecord {
                    id: e.id.to_string(),
                    u: e.u.to_string(),
                    v: e.v.to_string(),
                    sign: e.sign,
                })
                .collect(),
        }
    }
}

impl TryFrom<GraphDocument> for SignedGraph {
    type Error = Error;

    fn try_from(d: GraphDocument) -> Result<Self> {
        if d.format != FORMAT {
            return Err(Error::malformed(format!("unsupported format `{}`", d.format)));
        }
        for n in d.vertices.iter().chain(d.edges.iter().flat_map(|e| [&e.id, &e.u, &e.v])) {
            if !is_valid_name(n) {
                return Err(Error::malformed(format!("invalid name `{n}`")));
            }
        }
        SignedGraph::new(d.vertices, d.edges.into_iter().map(|e| Edge::new(e.id, e.u, e.v, e.sign)))
    }
}

pub fn parse_graph_json(text: &str) -> Result<SignedGraph> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    SignedGraph::try_from(doc)
}

pub fn serialize_graph_json(g: &SignedGraph) -> String {
    serde_json::to_string_pretty(&GraphDocument::from(g)).expect("documents serialize")
}
