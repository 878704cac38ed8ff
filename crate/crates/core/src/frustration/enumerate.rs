use std::collections::BTreeSet;
use std::time::Instant;

use super::{FrustrationResult, LocalComponent, SolverStats, DEFAULT_SIGNATURE_CAP};
use crate::error::{Error, Result};
use crate::model::{Signature, SignedGraph};

pub const DEFAULT_MAX_COMPONENT_VERTICES: usize = 24;

struct ComponentScan {
    best: usize,
    first: Vec<usize>,
    /// Every minimising assignment, as a bit mask over local vertices 1..n.
    minimisers: Vec<u64>,
    nodes: u64,
}

/// Walks all `2^(n-1)` switch sets of a component in Gray-code order, with
/// local vertex 0 pinned outside `U`, updating the cost in `O(deg)` per step.
fn scan_component(c: &LocalComponent, collect: bool, cap: usize) -> Result<ComponentScan> {
    let n = c.vertices.len();
    let adj = c.adjacency();
    let mut frustrated: Vec<bool> = c.edges.iter().map(|&(_, _, neg, _)| neg).collect();
    let mut cost = frustrated.iter().filter(|&&f| f).count();
    let mut mask: u64 = 0;
    let mut best = cost;
    let mut best_mask = 0u64;
    let mut minimisers = vec![0u64];
    let steps: u64 = if n <= 1 { 1 } else { 1u64 << (n - 1) };
    for i in 1..steps {
        let v = i.trailing_zeros() as usize + 1;
        mask ^= 1 << v;
        for &(_, _, k) in &adj[v] {
            if frustrated[k] {
                cost -= 1;
            } else {
                cost += 1;
            }
            frustrated[k] = !frustrated[k];
        }
        if cost < best {
            best = cost;
            best_mask = mask;
            if collect {
                minimisers.clear();
                minimisers.push(mask);
            }
        } else if collect && cost == best {
            if minimisers.len() >= cap {
                return Err(Error::budget("minimum signature enumeration", cap as u64));
            }
            minimisers.push(mask);
        }
    }
    let first = c.frustrated_edges(|v| best_mask >> v & 1 == 1);
    Ok(ComponentScan {
        best: best + c.negative_loops.len(),
        first,
        minimisers,
        nodes: steps,
    })
}

pub(crate) fn switch_enum(
    g: &SignedGraph,
    collect_all: bool,
    max_component_vertices: usize,
    cap: usize,
) -> Result<FrustrationResult> {
    let start = Instant::now();
    let comps = LocalComponent::split(g);
    if let Some(big) = comps.iter().find(|c| c.vertices.len() > max_component_vertices) {
        return Err(Error::BudgetExceeded {
            what: format!("switch-set enumeration of a {}-vertex component", big.vertices.len()),
            cap: max_component_vertices as u64,
            hint: Some("use frustration_bnb".into()),
        });
    }
    if max_component_vertices > 64 {
        return Err(Error::precondition("switch-set enumeration supports at most 64 vertices per component"));
    }
    let mut index = 0;
    let mut witness = Vec::new();
    let mut nodes = 0;
    let mut per_component: Vec<Vec<Vec<usize>>> = Vec::new();
    for c in &comps {
        let scan = scan_component(c, collect_all, cap)?;
        index += scan.best;
        witness.extend(scan.first);
        nodes += scan.nodes;
        if collect_all {
            let sigs: BTreeSet<Vec<usize>> = scan
                .minimisers
                .iter()
                .map(|&m| {
                    let mut s = c.frustrated_edges(|v| m >> v & 1 == 1);
                    s.sort_unstable();
                    s
                })
                .collect();
            per_component.push(sigs.into_iter().collect());
        }
    }
    let all_min_signatures = if collect_all {
        let total = per_component
            .iter()
            .try_fold(1usize, |acc, s| acc.checked_mul(s.len()))
            .unwrap_or(usize::MAX);
        if total > cap {
            return Err(Error::budget("minimum signature enumeration", cap as u64));
        }
        let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
        for sigs in &per_component {
            combos = combos
                .iter()
                .flat_map(|base| {
                    sigs.iter().map(move |s| {
                        let mut v = base.clone();
                        v.extend(s);
                        v
                    })
                })
                .collect();
        }
        let mut out: Vec<Signature> = combos.into_iter().map(|c| Signature::from_indices(g, c)).collect();
        out.sort();
        out.dedup();
        Some(out)
    } else {
        None
    };
    Ok(FrustrationResult {
        index,
        witness: Signature::from_indices(g, witness),
        all_min_signatures,
        stats: SolverStats {
            nodes,
            elapsed: start.elapsed(),
        },
        certified: true,
    })
}

/// Exact index by exhaustive switch-set enumeration, per component.
///
/// Components above [`DEFAULT_MAX_COMPONENT_VERTICES`] are refused. With
/// `collect_all`, every distinct minimum signature is returned as well.
pub fn frustration_switch_enum(g: &SignedGraph, collect_all: bool) -> Result<FrustrationResult> {
    switch_enum(g, collect_all, DEFAULT_MAX_COMPONENT_VERTICES, DEFAULT_SIGNATURE_CAP)
}

/// The complete, sorted set `{Σ Δ ∂(U) : |Σ Δ ∂(U)| = l}`.
pub fn all_min_signatures(g: &SignedGraph, cap: usize) -> Result<Vec<Signature>> {
    let r = switch_enum(g, true, DEFAULT_MAX_COMPONENT_VERTICES, cap)?;
    Ok(r.all_min_signatures.expect("collected"))
}
