use serde::{Deserialize, Serialize};

use super::isomorphism::switch_isomorphic;
use super::subdivision::suppress_vertex;
use crate::criticality::{is_critical, CriticalityMethod};
use crate::error::{Error, Result};
use crate::frustration::SolveOptions;
use crate::model::{Edge, SignedGraph, VertexId};

/// The irreducible 1- and 2-critical signed graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Archetype {
    /// One vertex with a negative loop.
    NegativeLoop,
    /// Two vertices, each with a negative loop.
    TwoNegativeLoops,
    /// One vertex with two negative loops.
    DoubleNegativeLoop,
    /// `K_4` with all edges negative.
    AntiK4,
}

impl Archetype {
    pub const ALL: [Archetype; 4] = [
        Archetype::NegativeLoop,
        Archetype::TwoNegativeLoops,
        Archetype::DoubleNegativeLoop,
        Archetype::AntiK4,
    ];

    pub fn index(self) -> usize {
        match self {
            Archetype::NegativeLoop => 1,
            _ => 2,
        }
    }

    pub fn graph(self) -> SignedGraph {
        let g = match self {
            Archetype::NegativeLoop => SignedGraph::new(["a"], [Edge::negative("l", "a", "a")]),
            Archetype::TwoNegativeLoops => SignedGraph::new(
                ["a", "b"],
                [Edge::negative("la", "a", "a"), Edge::negative("lb", "b", "b")],
            ),
            Archetype::DoubleNegativeLoop => SignedGraph::new(
                ["a"],
                [Edge::negative("l1", "a", "a"), Edge::negative("l2", "a", "a")],
            ),
            Archetype::AntiK4 => {
                let vs = ["a", "b", "c", "d"];
                let es = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j)));
                SignedGraph::new(vs, es.map(|(i, j)| Edge::negative(format!("{}{}", vs[i], vs[j]), vs[i], vs[j])).collect::<Vec<_>>())
            }
        };
        g.expect("archetype graphs are well formed")
    }
}

impl std::fmt::Display for Archetype {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Archetype::NegativeLoop => "-C1",
            Archetype::TwoNegativeLoops => "-C1 + -C1",
            Archetype::DoubleNegativeLoop => "-2C1",
            Archetype::AntiK4 => "-K4",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub index: usize,
    pub archetype: Archetype,
    /// Vertices suppressed in order, starting from the input with isolated
    /// vertices removed.
    pub suppressions: Vec<VertexId>,
    pub reduced: SignedGraph,
}

/// Reduces a certified 1- or 2-critical graph and names the irreducible
/// graph it subdivides.
pub fn classify_low_critical(g: &SignedGraph, opts: &SolveOptions) -> Result<ClassificationResult> {
    let g = g.without_isolated_vertices();
    let r = is_critical(&g, CriticalityMethod::Auto, opts)?;
    if !r.certified || !r.critical || !(1..=2).contains(&r.index) {
        return Err(Error::precondition(format!(
            "classification needs a critical graph of index 1 or 2 (index {}, critical {})",
            r.index, r.critical
        )));
    }
    let mut cur = g;
    let mut suppressions = Vec::new();
    while cur.vertex_count() > 1 {
        let next = cur
            .vertices()
            .iter()
            .find_map(|v| suppress_vertex(&cur, v.as_str()).ok().map(|h| (v.clone(), h)));
        match next {
            Some((v, h)) => {
                suppressions.push(v);
                cur = h;
            }
            None => break,
        }
    }
    for a in Archetype::ALL.into_iter().filter(|a| a.index() == r.index) {
        if switch_isomorphic(&cur, &a.graph())? {
            return Ok(ClassificationResult {
                index: r.index,
                archetype: a,
                suppressions,
                reduced: cur,
            });
        }
    }
    Err(Error::Internal(format!(
        "irreducible {}-critical graph with {} vertices and {} edges matches no known archetype",
        r.index,
        cur.vertex_count(),
        cur.edge_count()
    )))
}
