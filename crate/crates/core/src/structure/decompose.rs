use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::criticality::{is_critical, CriticalityMethod};
use crate::error::{Error, Result};
use crate::frustration::{certified_frustration, SolveOptions};
use crate::model::{EdgeId, SignedGraph};

/// Edge-disjoint critical subgraphs covering `E(G)` whose indices add up to
/// `l(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionWitness {
    pub parts: Vec<Vec<EdgeId>>,
    pub indices: Vec<usize>,
}

/// A 1-critical piece that can be split off a critical graph: a negative
/// loop, or a positive and a negative edge joining the same two vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivialSplit {
    pub part: Vec<EdgeId>,
    pub rest_index: usize,
}

/// Looks for a negative loop or a `±` parallel pair in a critical graph of
/// index at least 2.
pub fn trivially_decomposable(g: &SignedGraph, opts: &SolveOptions) -> Result<Option<TrivialSplit>> {
    let k = certified_frustration(g, opts)?.index;
    if k < 2 {
        return Ok(None);
    }
    let edges: Vec<_> = g.edges().collect();
    if let Some(l) = edges.iter().find(|e| e.is_loop() && e.sign.is_negative()) {
        return Ok(Some(TrivialSplit {
            part: vec![l.id.clone()],
            rest_index: k - 1,
        }));
    }
    for p in edges.iter().filter(|e| !e.is_loop() && !e.sign.is_negative()) {
        if let Some(n) = edges
            .iter()
            .find(|n| n.sign.is_negative() && ((n.u == p.u && n.v == p.v) || (n.u == p.v && n.v == p.u)))
        {
            let mut part = vec![p.id.clone(), n.id.clone()];
            part.sort();
            return Ok(Some(TrivialSplit { part, rest_index: k - 1 }));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecomposeCaps {
    pub max_edges: usize,
    pub max_index: usize,
}

impl Default for DecomposeCaps {
    fn default() -> Self {
        DecomposeCaps {
            max_edges: 16,
            max_index: 4,
        }
    }
}

/// Parts of a partition as (edge mask, index) pairs.
type Parts = Vec<(u64, usize)>;

struct Search<'a> {
    g: &'a SignedGraph,
    opts: &'a SolveOptions,
    /// Index of each critical edge subset, `None` when not critical.
    critical: HashMap<u64, Option<usize>>,
    memo: HashMap<(u64, usize), Option<Parts>>,
}

impl Search<'_> {
    fn ids(&self, mask: u64) -> Vec<EdgeId> {
        (0..self.g.edge_count())
            .filter(|e| mask >> e & 1 == 1)
            .map(|e| self.g.edge_id_at(e).clone())
            .collect()
    }

    /// Cheap necessary condition: every vertex touched has degree >= 2.
    fn min_degree_ok(&self, mask: u64) -> bool {
        let mut deg = vec![0usize; self.g.vertex_count()];
        for (e, r) in self.g.raw_edges().iter().enumerate() {
            if mask >> e & 1 == 1 {
                deg[r.u] += 1;
                deg[r.v] += 1;
            }
        }
        deg.iter().all(|&d| d == 0 || d >= 2)
    }

    fn critical_index(&mut self, mask: u64) -> Result<Option<usize>> {
        if let Some(&c) = self.critical.get(&mask) {
            return Ok(c);
        }
        let c = if self.min_degree_ok(mask) {
            let h = self.g.edge_subgraph(&self.ids(mask))?.without_isolated_vertices();
            let r = is_critical(&h, CriticalityMethod::Auto, self.opts)?;
            if !r.certified {
                return Err(Error::budget("branch-and-bound time budget", 0));
            }
            r.critical.then_some(r.index)
        } else {
            None
        };
        self.critical.insert(mask, c);
        Ok(c)
    }

    /// Partitions `rest` into critical parts with indices summing to
    /// `target`, using at least `min_parts` parts.
    fn split(&mut self, rest: u64, target: usize, min_parts: usize) -> Result<Option<Parts>> {
        if min_parts <= 1 && self.critical_index(rest)? == Some(target) {
            return Ok(Some(vec![(rest, target)]));
        }
        if target < 2 {
            return Ok(None);
        }
        let key = (rest, target);
        if let Some(m) = self.memo.get(&key) {
            return Ok(m.clone());
        }
        let low = rest & rest.wrapping_neg();
        let others = rest & !low;
        let free: Vec<u64> = (0..64).map(|b| 1u64 << b).filter(|b| others & b != 0).collect();
        let mut found = None;
        // parts containing the lowest remaining edge, excluding `rest` itself
        for sel in 0..(1u64 << free.len()) - 1 {
            let mut part = low;
            for (i, b) in free.iter().enumerate() {
                if sel >> i & 1 == 1 {
                    part |= b;
                }
            }
            let Some(a) = self.critical_index(part)? else { continue };
            if a == 0 || a >= target {
                continue;
            }
            if let Some(mut tail) = self.split(rest & !part, target - a, 1)? {
                tail.insert(0, (part, a));
                found = Some(tail);
                break;
            }
        }
        self.memo.insert(key, found.clone());
        Ok(found)
    }
}

/// Exhaustive search for a decomposition into at least two critical parts.
///
/// `Ok(None)` certifies non-decomposability. Graphs above the caps give a
/// budget error, never a negative verdict.
pub fn decompose_exhaustive(g: &SignedGraph, caps: DecomposeCaps, opts: &SolveOptions) -> Result<Option<DecompositionWitness>> {
    if g.edge_count() > caps.max_edges.min(63) {
        return Err(Error::budget("decomposition search edges", caps.max_edges as u64));
    }
    let k = certified_frustration(g, opts)?.index;
    if k > caps.max_index {
        return Err(Error::budget("decomposition search index", caps.max_index as u64));
    }
    let all = if g.edge_count() == 0 { 0 } else { u64::MAX >> (64 - g.edge_count()) };
    let mut s = Search {
        g,
        opts,
        critical: HashMap::new(),
        memo: HashMap::new(),
    };
    let found = if all == 0 { None } else { s.split(all, k, 2)? };
    Ok(found.map(|parts| DecompositionWitness {
        parts: parts.iter().map(|&(m, _)| s.ids(m)).collect(),
        indices: parts.iter().map(|&(_, a)| a).collect(),
    }))
}
