//! `k`-criticality: `l(G - e) < l(G)` for every edge `e`.
//!
//! Equivalently every edge lies in some minimum signature, or every positive
//! edge of a minimum signature crosses an equilibrated cut. Both the per-edge
//! definition and the union of all minimum signatures are implemented, and
//! witnesses are produced for each edge.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::balance::{is_balanced, BalanceCertificate};
use crate::error::{Error, Result};
use crate::frustration::{
    bnb_with_target, certified_frustration, frustration, switch_enum, FrustrationResult, Method, SolveOptions,
    DEFAULT_SIGNATURE_CAP,
};
use crate::model::{cut_summary, CutSummary, EdgeId, Signature, SignedGraph, SwitchSet};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriticalityMethod {
    /// Recompute `l(G - e)` for every edge.
    PerEdge,
    /// Check that the minimum signatures cover `E(G)`.
    #[default]
    Union,
    /// Union when the graph is small enough to enumerate, per-edge otherwise.
    Auto,
}

impl std::str::FromStr for CriticalityMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "per-edge" => Ok(CriticalityMethod::PerEdge),
            "union" => Ok(CriticalityMethod::Union),
            "auto" => Ok(CriticalityMethod::Auto),
            _ => Err(Error::malformed(format!("unknown criticality method `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub index: usize,
    pub critical: bool,
    /// For each edge checked, a minimum signature containing it.
    pub per_edge: BTreeMap<EdgeId, Signature>,
    /// Present iff not critical: an edge with `l(G - e) = l(G)`.
    pub failing_edge: Option<EdgeId>,
    /// False if some branch-and-bound call ran out of time; the verdict is
    /// then unreliable.
    pub certified: bool,
    pub method: CriticalityMethod,
}

/// Solves `h` knowing `l(h) >= floor`, so branch and bound may stop as soon as
/// it meets the floor.
fn solve_with_floor(h: &SignedGraph, opts: &SolveOptions, floor: usize) -> Result<FrustrationResult> {
    if opts.method == Method::Oracle || opts.uses_enumeration(h) {
        frustration(h, opts)
    } else {
        Ok(bnb_with_target(h, opts.budget, Some(floor)))
    }
}

/// A minimum signature of `g` containing `e`, given `l = l(g)`. Uses
/// `l(G - e) >= l - 1`, with equality exactly when such a signature exists.
fn containing_with_index(
    g: &SignedGraph,
    e: &EdgeId,
    l: usize,
    opts: &SolveOptions,
) -> Result<(Option<Signature>, bool)> {
    let h = g.remove_edge(e)?;
    let r = solve_with_floor(&h, opts, l.saturating_sub(1))?;
    if l > 0 && r.index + 1 == l {
        let mut s = r.witness;
        s.insert(e.clone());
        Ok((Some(s), r.certified))
    } else {
        Ok((None, r.certified))
    }
}

/// A minimum signature of `g` containing `e`, if one exists.
pub fn min_signature_containing(g: &SignedGraph, e: &EdgeId, opts: &SolveOptions) -> Result<Option<Signature>> {
    if !g.has_edge(e.as_str()) {
        return Err(Error::precondition(format!("`{e}` is not an edge")));
    }
    let l = certified_frustration(g, opts)?.index;
    let (s, certified) = containing_with_index(g, e, l, opts)?;
    if !certified {
        return Err(Error::budget("branch-and-bound time budget", opts.budget.map_or(0, |d| d.as_secs())));
    }
    Ok(s)
}

pub fn is_critical(g: &SignedGraph, method: CriticalityMethod, opts: &SolveOptions) -> Result<CriticalityReport> {
    let method = match method {
        CriticalityMethod::Auto if opts.uses_enumeration(g) => CriticalityMethod::Union,
        CriticalityMethod::Auto => CriticalityMethod::PerEdge,
        m => m,
    };
    match method {
        CriticalityMethod::Union => by_union(g, opts),
        _ => by_edge(g, opts),
    }
}

fn by_edge(g: &SignedGraph, opts: &SolveOptions) -> Result<CriticalityReport> {
    let base = frustration(g, opts)?;
    let l = base.index;
    let mut certified = base.certified;
    let mut per_edge = BTreeMap::new();
    let mut failing_edge = None;
    for e in g.edge_ids() {
        let (s, c) = containing_with_index(g, e, l, opts)?;
        certified &= c;
        match s {
            Some(s) => {
                per_edge.insert(e.clone(), s);
            }
            None => {
                failing_edge = Some(e.clone());
                break;
            }
        }
    }
    Ok(CriticalityReport {
        index: l,
        critical: l > 0 && failing_edge.is_none(),
        per_edge,
        failing_edge,
        certified,
        method: CriticalityMethod::PerEdge,
    })
}

fn by_union(g: &SignedGraph, opts: &SolveOptions) -> Result<CriticalityReport> {
    let sigs = switch_enum(g, true, opts.max_component_vertices, DEFAULT_SIGNATURE_CAP)?
        .all_min_signatures
        .expect("collected");
    let l = sigs.first().map_or(0, Signature::len);
    let mut per_edge = BTreeMap::new();
    for s in &sigs {
        for e in s {
            per_edge.entry(e.clone()).or_insert_with(|| s.clone());
        }
    }
    let failing_edge = g.edge_ids().iter().find(|e| !per_edge.contains_key(*e)).cloned();
    Ok(CriticalityReport {
        index: l,
        critical: l > 0 && failing_edge.is_none(),
        per_edge,
        failing_edge,
        certified: true,
        method: CriticalityMethod::Union,
    })
}

/// An edge cut through `edge` with as many negative as positive edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquilibratedCutWitness {
    pub edge: EdgeId,
    pub switch_set: SwitchSet,
    pub summary: CutSummary,
}

/// Checks that `gamma` is a minimum signature of `g` and returns `l(g)`.
fn check_minimum(g: &SignedGraph, gamma: &Signature, opts: &SolveOptions) -> Result<usize> {
    gamma.check_in(g)?;
    let diff = g.signature().symmetric_difference(gamma);
    if !is_balanced(&g.with_signature(&diff)?).is_balanced() {
        return Err(Error::precondition("the given set is not a signature of the graph"));
    }
    let l = certified_frustration(g, opts)?.index;
    if gamma.len() != l {
        return Err(Error::precondition(format!(
            "the signature has {} edges but the index is {l}",
            gamma.len()
        )));
    }
    Ok(l)
}

/// For `e` outside the minimum signature `gamma`, finds `U` with `e` in
/// `∂(U)` and `∂(U)` equilibrated under `gamma`. The cut is `gamma Δ gamma'`
/// for a minimum signature `gamma'` containing `e`, so the answer is absent
/// exactly when no minimum signature contains `e`.
pub fn equilibrated_cut_for_edge(
    g: &SignedGraph,
    gamma: &Signature,
    e: &EdgeId,
    opts: &SolveOptions,
) -> Result<Option<EquilibratedCutWitness>> {
    if !g.has_edge(e.as_str()) {
        return Err(Error::precondition(format!("`{e}` is not an edge")));
    }
    if gamma.contains(e.as_str()) {
        return Err(Error::precondition(format!("`{e}` is already in the signature")));
    }
    let l = check_minimum(g, gamma, opts)?;
    let (other, certified) = containing_with_index(g, e, l, opts)?;
    if !certified {
        return Err(Error::budget("branch-and-bound time budget", opts.budget.map_or(0, |d| d.as_secs())));
    }
    let Some(other) = other else { return Ok(None) };
    let diff = gamma.symmetric_difference(&other);
    let BalanceCertificate::Balanced { switch_set } = is_balanced(&g.with_signature(&diff)?) else {
        return Err(Error::Internal("two signatures differ by a non-cut".into()));
    };
    let summary = cut_summary(g, gamma, &switch_set)?;
    if !summary.is_equilibrated() {
        return Err(Error::Internal("cut between minimum signatures is not equilibrated".into()));
    }
    Ok(Some(EquilibratedCutWitness {
        edge: e.clone(),
        switch_set,
        summary,
    }))
}

/// An `m`-critical subgraph of `g` for `1 <= m <= l(g)`.
///
/// First `l - m` edges of a minimum signature are deleted, bringing the index
/// to `m`. Then edges are scanned in canonical order and each one whose
/// deletion keeps the index at `m` is removed. An edge that survives a scan
/// stays indispensable in every later subgraph, so one pass suffices.
/// Isolated vertices are dropped from the result.
pub fn extract_critical_subgraph(g: &SignedGraph, m: usize, opts: &SolveOptions) -> Result<SignedGraph> {
    let base = certified_frustration(g, opts)?;
    let l = base.index;
    if m == 0 || m > l {
        return Err(Error::precondition(format!("target index {m} is outside 1..={l}")));
    }
    let drop: Vec<EdgeId> = base.witness.iter().take(l - m).cloned().collect();
    let mut h = g.remove_edges(&drop)?;
    let ids: Vec<EdgeId> = h.edge_ids().to_vec();
    for e in &ids {
        let trial = h.remove_edge(e)?;
        let r = solve_with_floor(&trial, opts, m - 1)?;
        if !r.certified {
            return Err(Error::budget("branch-and-bound time budget", opts.budget.map_or(0, |d| d.as_secs())));
        }
        if r.index == m {
            h = trial;
        }
    }
    let h = h.without_isolated_vertices();
    let check = is_critical(&h, CriticalityMethod::PerEdge, opts)?;
    if !check.critical || check.index != m {
        return Err(Error::Internal(format!(
            "extracted subgraph has index {} and critical = {}",
            check.index, check.critical
        )));
    }
    Ok(h)
}

/// Edge connectivity by unit-capacity max flow from the first vertex to every
/// other; loops are ignored and parallel edges add capacity.
pub fn edge_connectivity(g: &SignedGraph) -> usize {
    let n = g.vertex_count();
    if n < 2 {
        return 0;
    }
    let mut cap = vec![vec![0i64; n]; n];
    for r in g.raw_edges() {
        if !r.is_loop() {
            cap[r.u][r.v] += 1;
            cap[r.v][r.u] += 1;
        }
    }
    (1..n).map(|t| max_flow(&cap, 0, t)).min().unwrap_or(0)
}

fn max_flow(cap: &[Vec<i64>], s: usize, t: usize) -> usize {
    let n = cap.len();
    let mut res: Vec<Vec<i64>> = cap.to_vec();
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for y in 0..n {
                if prev[y] == usize::MAX && res[x][y] > 0 {
                    prev[y] = x;
                    q.push_back(y);
                }
            }
        }
        if prev[t] == usize::MAX {
            return flow;
        }
        let mut y = t;
        while y != s {
            let x = prev[y];
            res[x][y] -= 1;
            res[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaBounds {
    pub lambda: usize,
    pub index: usize,
    pub holds: bool,
}

/// Confirms `2 <= λ(G) <= 2k` for a connected `k`-critical graph with at
/// least two vertices.
pub fn check_lambda_bounds(g: &SignedGraph, opts: &SolveOptions) -> Result<LambdaBounds> {
    if g.vertex_count() < 2 || !g.is_connected() {
        return Err(Error::precondition("the graph must be connected with at least two vertices"));
    }
    let report = is_critical(g, CriticalityMethod::Auto, opts)?;
    if !report.certified || !report.critical {
        return Err(Error::precondition("the graph is not certified critical"));
    }
    let lambda = edge_connectivity(g);
    let k = report.index;
    Ok(LambdaBounds {
        lambda,
        index: k,
        holds: (2..=2 * k).contains(&lambda),
    })
}
