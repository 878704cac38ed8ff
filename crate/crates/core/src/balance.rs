//! Balance testing with certificates, and negative-circuit enumeration.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{EdgeId, Sign, SignedGraph, SwitchSet};

/// Default cap for [`negative_circuits`].
pub const DEFAULT_CIRCUIT_CAP: usize = 1_000_000;

/// Outcome of [`is_balanced`], with a witness that can be checked without
/// trusting this module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum BalanceCertificate {
    /// Switching at `switch_set` makes every edge positive.
    Balanced { switch_set: SwitchSet },
    /// A negative circuit, edges listed in walk order.
    Unbalanced { circuit: Vec<EdgeId> },
}

impl BalanceCertificate {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceCertificate::Balanced { .. })
    }
}

/// Decides balance by propagating vertex potentials along a BFS forest.
///
/// A non-tree edge that disagrees with the potentials closes a negative
/// circuit through the tree path between its endpoints. In each component the
/// first canonical vertex lies outside the returned switch set.
pub fn is_balanced(g: &SignedGraph) -> BalanceCertificate {
    match potentials(g, None) {
        Ok(pot) => BalanceCertificate::Balanced {
            switch_set: SwitchSet::from_mask(g, &pot.iter().map(|s| s.is_negative()).collect::<Vec<_>>()),
        },
        Err(circuit) => BalanceCertificate::Unbalanced {
            circuit: circuit.into_iter().map(|e| g.edge_id_at(e).clone()).collect(),
        },
    }
}

/// Index-level balance check of `g` restricted to edges with `alive[e]`.
pub(crate) fn is_balanced_masked(g: &SignedGraph, alive: &[bool]) -> bool {
    potentials(g, Some(alive)).is_ok()
}

/// Either a potential per vertex, or the edge indices of a negative circuit.
pub(crate) fn potentials(g: &SignedGraph, alive: Option<&[bool]>) -> std::result::Result<Vec<Sign>, Vec<usize>> {
    let n = g.vertex_count();
    let live = |e: usize| alive.is_none_or(|a| a[e]);
    for (e, r) in g.raw_edges().iter().enumerate() {
        if r.is_loop() && r.sign.is_negative() && live(e) {
            return Err(vec![e]);
        }
    }
    let mut pot = vec![Sign::Positive; n];
    let mut seen = vec![false; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            for &e in g.incidence(x) {
                if !live(e) {
                    continue;
                }
                let r = g.raw_edge(e);
                if r.is_loop() {
                    continue;
                }
                let y = r.other(x);
                if !seen[y] {
                    seen[y] = true;
                    pot[y] = pot[x] * r.sign;
                    parent_edge[y] = e;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                } else if e != parent_edge[y] && e != parent_edge[x] && pot[x] * pot[y] * r.sign == Sign::Negative {
                    return Err(tree_circuit(g, &parent_edge, &depth, x, y, e));
                }
            }
        }
    }
    Ok(pot)
}

fn tree_circuit(g: &SignedGraph, parent_edge: &[usize], depth: &[usize], x: usize, y: usize, closing: usize) -> Vec<usize> {
    let (mut a, mut b) = (x, y);
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a] > depth[b] {
        left.push(parent_edge[a]);
        a = g.raw_edge(parent_edge[a]).other(a);
    }
    while depth[b] > depth[a] {
        right.push(parent_edge[b]);
        b = g.raw_edge(parent_edge[b]).other(b);
    }
    while a != b {
        left.push(parent_edge[a]);
        a = g.raw_edge(parent_edge[a]).other(a);
        right.push(parent_edge[b]);
        b = g.raw_edge(parent_edge[b]).other(b);
    }
    // walk: lca -> x, closing edge, y -> lca
    let mut walk: Vec<usize> = left.into_iter().rev().collect();
    walk.push(closing);
    walk.extend(right);
    walk
}

/// Visits every circuit of `g` exactly once as a list of edge indices.
///
/// Each circuit is traversed from its smallest vertex; of its two traversal
/// directions only the one whose first edge index is below its closing edge
/// index is reported. Loops are reported on their own.
pub(crate) fn for_each_circuit<F>(g: &SignedGraph, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    for (e, r) in g.raw_edges().iter().enumerate() {
        if r.is_loop() {
            f(&[e])?;
        }
    }
    let n = g.vertex_count();
    let mut on_path = vec![false; n];
    let mut path = Vec::new();
    for s in 0..n {
        on_path[s] = true;
        dfs_circuits(g, s, s, &mut on_path, &mut path, &mut f)?;
        on_path[s] = false;
    }
    ControlFlow::Continue(())
}

fn dfs_circuits<F>(
    g: &SignedGraph,
    start: usize,
    x: usize,
    on_path: &mut [bool],
    path: &mut Vec<usize>,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    for &e in g.incidence(x) {
        let r = g.raw_edge(e);
        if r.is_loop() {
            continue;
        }
        let y = r.other(x);
        if y == start {
            if let Some(&first) = path.first() {
                if first < e && !path.contains(&e) {
                    path.push(e);
                    let res = f(path);
                    path.pop();
                    res?;
                }
            }
        } else if y > start && !on_path[y] {
            on_path[y] = true;
            path.push(e);
            let res = dfs_circuits(g, start, y, on_path, path, f);
            path.pop();
            on_path[y] = false;
            res?;
        }
    }
    ControlFlow::Continue(())
}

pub(crate) fn circuit_is_negative(g: &SignedGraph, circuit: &[usize]) -> bool {
    circuit.iter().filter(|&&e| g.raw_edge(e).sign.is_negative()).count() % 2 == 1
}

/// Index-level negative circuits, each sorted, in enumeration order.
pub(crate) fn negative_circuit_indices(g: &SignedGraph, cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let flow = for_each_circuit(g, |c| {
        if circuit_is_negative(g, c) {
            if out.len() == cap {
                return ControlFlow::Break(());
            }
            let mut c = c.to_vec();
            c.sort_unstable();
            out.push(c);
        }
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(Error::budget("negative circuit enumeration", cap as u64));
    }
    Ok(out)
}

/// All negative circuits as sorted edge-id lists, ordered by length and then
/// lexicographically. Fails once more than `cap` circuits exist.
pub fn negative_circuits(g: &SignedGraph, cap: usize) -> Result<Vec<Vec<EdgeId>>> {
    if cap == 0 {
        return Err(Error::precondition("circuit cap must be at least 1"));
    }
    let mut cs = negative_circuit_indices(g, cap)?;
    cs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(cs
        .into_iter()
        .map(|c| c.into_iter().map(|e| g.edge_id_at(e).clone()).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{switch, Edge, Signature};

    fn cycle(n: usize, negatives: &[usize]) -> SignedGraph {
        let vs: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
        let es = (0..n).map(|i| {
            let s = if negatives.contains(&i) { Sign::Negative } else { Sign::Positive };
            Edge::new(format!("e{i}"), vs[i].clone(), vs[(i + 1) % n].clone(), s)
        });
        SignedGraph::new(vs.clone(), es).unwrap()
    }

    fn k4(sign: Sign) -> SignedGraph {
        let vs = ["u", "v", "x", "y"];
        let mut es = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                es.push(Edge::new(format!("{}{}", vs[i], vs[j]), vs[i], vs[j], sign));
            }
        }
        SignedGraph::new(vs, es).unwrap()
    }

    #[test]
    fn positive_k4_is_balanced_with_empty_switch() {
        match is_balanced(&k4(Sign::Positive)) {
            BalanceCertificate::Balanced { switch_set } => assert!(switch_set.is_empty()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn negative_loop_is_its_own_witness() {
        let g = SignedGraph::new(["a"], [Edge::negative("l", "a", "a")]).unwrap();
        assert_eq!(
            is_balanced(&g),
            BalanceCertificate::Unbalanced { circuit: vec!["l".into()] }
        );
    }

    #[test]
    fn single_negative_edge_on_c4() {
        let g = cycle(4, &[2]);
        match is_balanced(&g) {
            BalanceCertificate::Unbalanced { circuit } => {
                let mut c: Vec<_> = circuit.iter().map(|e| e.as_str()).collect();
                c.sort();
                assert_eq!(c, ["e0", "e1", "e2", "e3"]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn balanced_witness_switches_to_empty() {
        let g = cycle(6, &[1, 4]);
        let BalanceCertificate::Balanced { switch_set } = is_balanced(&g) else {
            panic!("two negatives on a circuit are balanced");
        };
        assert!(!switch_set.contains("c0"));
        assert_eq!(switch(&g, &g.signature(), &switch_set).unwrap(), Signature::new());
    }

    #[test]
    fn circuit_counts() {
        let loop_graph = SignedGraph::new(["a"], [Edge::negative("l", "a", "a")]).unwrap();
        assert_eq!(negative_circuits(&loop_graph, 10).unwrap().len(), 1);
        // switching-invariant: only the four triangles of -K4 are negative
        assert_eq!(negative_circuits(&k4(Sign::Negative), 10).unwrap().len(), 4);
        assert!(negative_circuits(&k4(Sign::Positive), 10).unwrap().is_empty());
    }

    #[test]
    fn circuit_cap_is_enforced() {
        let err = negative_circuits(&k4(Sign::Negative), 3).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { cap: 3, .. }));
        assert!(negative_circuits(&k4(Sign::Negative), 0).is_err());
    }

    #[test]
    fn parallel_edges_form_digons() {
        let g = SignedGraph::new(
            ["a", "b"],
            [Edge::positive("p", "a", "b"), Edge::negative("n", "a", "b"), Edge::negative("m", "a", "b")],
        )
        .unwrap();
        let cs = negative_circuits(&g, 10).unwrap();
        assert_eq!(cs.len(), 2);
        let mut all = 0;
        let _ = for_each_circuit(&g, |_| {
            all += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(all, 3);
    }
}
