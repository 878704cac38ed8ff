//! The frustration index `l(G, Σ)`: the least number of edges whose deletion
//! balances a signed graph.
//!
//! Every minimum deletion set is itself a signature of the graph, so
//! `l(G, Σ) = min_U |Σ Δ ∂(U)|`. The solvers here search over switch sets
//! `U`, one vertex pinned per component, and return the minimising signature
//! as a certificate. [`frustration_deletion_oracle`] works straight from the
//! definition and is kept only as a cross-check.

mod bnb;
mod enumerate;
mod oracle;

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Signature, SignedGraph};

pub use bnb::frustration_bnb;
pub(crate) use bnb::bnb_with_target;
pub(crate) use enumerate::switch_enum;
pub use enumerate::{all_min_signatures, frustration_switch_enum, DEFAULT_MAX_COMPONENT_VERTICES};
pub use oracle::{frustration_deletion_oracle, DEFAULT_ORACLE_MAX_EDGES};

/// Default cap on the number of minimum signatures collected.
pub const DEFAULT_SIGNATURE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct SolverStats {
    pub nodes: u64,
    #[serde(with = "secs")]
    pub elapsed: Duration,
}

mod secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        f64::deserialize(d).map(Duration::from_secs_f64)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrustrationResult {
    pub index: usize,
    /// A minimum signature; deleting it balances the graph.
    pub witness: Signature,
    pub all_min_signatures: Option<Vec<Signature>>,
    pub stats: SolverStats,
    /// False only when a branch-and-bound search ran out of time; `index` is
    /// then an upper bound.
    pub certified: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Exhaustive switch-set enumeration.
    Enum,
    /// Branch and bound over vertex spins.
    Bnb,
    /// Definition-level edge-subset search.
    Oracle,
    /// Enumeration for small components, branch and bound otherwise.
    Auto,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enum" => Ok(Method::Enum),
            "bnb" => Ok(Method::Bnb),
            "oracle" => Ok(Method::Oracle),
            "auto" => Ok(Method::Auto),
            _ => Err(Error::malformed(format!("unknown method `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOptions {
    pub method: Method,
    /// Wall-clock budget for branch and bound.
    pub budget: Option<Duration>,
    pub max_component_vertices: usize,
    /// Under [`Method::Auto`], components up to this size are enumerated.
    pub auto_enum_vertices: usize,
    pub oracle_max_edges: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            method: Method::Auto,
            budget: None,
            max_component_vertices: DEFAULT_MAX_COMPONENT_VERTICES,
            auto_enum_vertices: 20,
            oracle_max_edges: DEFAULT_ORACLE_MAX_EDGES,
        }
    }
}

impl SolveOptions {
    pub fn with_method(method: Method) -> Self {
        SolveOptions {
            method,
            ..SolveOptions::default()
        }
    }

    pub fn with_budget(mut self, budget: Option<Duration>) -> Self {
        self.budget = budget;
        self
    }

    pub(crate) fn uses_enumeration(&self, g: &SignedGraph) -> bool {
        match self.method {
            Method::Enum => true,
            Method::Bnb | Method::Oracle => false,
            Method::Auto => largest_component(g) <= self.auto_enum_vertices,
        }
    }
}

pub(crate) fn largest_component(g: &SignedGraph) -> usize {
    g.component_vertex_sets().iter().map(Vec::len).max().unwrap_or(0)
}

/// Solves with the configured method.
pub fn frustration(g: &SignedGraph, opts: &SolveOptions) -> Result<FrustrationResult> {
    match opts.method {
        Method::Oracle => {
            let start = std::time::Instant::now();
            let witness = oracle::minimum_deletion_set(g, opts.oracle_max_edges)?;
            Ok(FrustrationResult {
                index: witness.len(),
                witness,
                all_min_signatures: None,
                stats: SolverStats {
                    nodes: 0,
                    elapsed: start.elapsed(),
                },
                certified: true,
            })
        }
        _ if opts.uses_enumeration(g) => enumerate::switch_enum(g, false, opts.max_component_vertices, usize::MAX),
        _ => Ok(frustration_bnb(g, opts.budget)),
    }
}

/// Like [`frustration`], but an uncertified result is turned into a budget
/// error so callers never mistake an upper bound for the index.
pub fn certified_frustration(g: &SignedGraph, opts: &SolveOptions) -> Result<FrustrationResult> {
    let r = frustration(g, opts)?;
    if !r.certified {
        return Err(Error::BudgetExceeded {
            what: "branch-and-bound time budget".into(),
            cap: opts.budget.map(|d| d.as_secs()).unwrap_or(0),
            hint: Some(format!("best signature found has {} edges", r.index)),
        });
    }
    Ok(r)
}

/// Shorthand for a certified index with default options.
pub fn frustration_index(g: &SignedGraph) -> Result<usize> {
    certified_frustration(g, &SolveOptions::default()).map(|r| r.index)
}

/// One component of a graph in local coordinates.
pub(crate) struct LocalComponent {
    /// Global vertex indices, canonical order.
    pub vertices: Vec<usize>,
    /// Non-loop edges as (local u, local v, negative?, global edge index).
    pub edges: Vec<(usize, usize, bool, usize)>,
    /// Global indices of negative loops.
    pub negative_loops: Vec<usize>,
}

impl LocalComponent {
    pub fn split(g: &SignedGraph) -> Vec<LocalComponent> {
        let sets = g.component_vertex_sets();
        let mut local = vec![0usize; g.vertex_count()];
        let mut comp_of = vec![0usize; g.vertex_count()];
        for (c, vs) in sets.iter().enumerate() {
            for (i, &v) in vs.iter().enumerate() {
                local[v] = i;
                comp_of[v] = c;
            }
        }
        let mut out: Vec<LocalComponent> = sets
            .into_iter()
            .map(|vertices| LocalComponent {
                vertices,
                edges: Vec::new(),
                negative_loops: Vec::new(),
            })
            .collect();
        for (e, r) in g.raw_edges().iter().enumerate() {
            let c = &mut out[comp_of[r.u]];
            if r.is_loop() {
                if r.sign.is_negative() {
                    c.negative_loops.push(e);
                }
            } else {
                c.edges.push((local[r.u], local[r.v], r.sign.is_negative(), e));
            }
        }
        out
    }

    pub fn adjacency(&self) -> Vec<Vec<(usize, bool, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (k, &(a, b, neg, _)) in self.edges.iter().enumerate() {
            adj[a].push((b, neg, k));
            adj[b].push((a, neg, k));
        }
        adj
    }

    /// Global edge indices frustrated by the spin assignment (`true` = in U).
    pub fn frustrated_edges(&self, in_u: impl Fn(usize) -> bool) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter(|&&(a, b, neg, _)| neg != (in_u(a) != in_u(b)))
            .map(|&(_, _, _, e)| e)
            .collect();
        out.extend(&self.negative_loops);
        out
    }
}
