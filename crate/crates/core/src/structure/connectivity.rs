use itertools::Itertools;

use crate::error::{Error, Result};
use crate::model::SignedGraph;

/// Default vertex cap for [`cyclic_edge_connectivity`].
pub const DEFAULT_CYCLIC_CAP: usize = 40;

/// Number of components of `G - F` that contain a circuit.
fn cyclic_components(g: &SignedGraph, removed: &[bool]) -> usize {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut cyclic = vec![false; n];
    for (e, r) in g.raw_edges().iter().enumerate() {
        if removed[e] {
            continue;
        }
        let (a, b) = (find(&mut parent, r.u), find(&mut parent, r.v));
        if a == b {
            cyclic[a] = true;
        } else {
            parent[a] = b;
            cyclic[b] |= cyclic[a];
        }
    }
    (0..n).filter(|&v| find(&mut parent, v) == v && cyclic[v]).count()
}

fn girth_cut(g: &SignedGraph) -> Option<Vec<bool>> {
    // vertices of a shortest closed walk found by BFS; the caller only uses
    // the resulting cut after checking that it is cyclic
    let n = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    let mut best_len: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![(usize::MAX, usize::MAX); n];
        dist[s] = 0;
        let mut q = std::collections::VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for &e in g.incidence(x) {
                let r = g.raw_edge(e);
                if r.is_loop() {
                    continue;
                }
                let y = r.other(x);
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = (x, e);
                    q.push_back(y);
                } else if parent[x].1 != e {
                    let len = dist[x] + dist[y] + 1;
                    if best_len.is_none_or(|b| len < b) {
                        let mut vs = Vec::new();
                        for mut z in [x, y] {
                            while z != s {
                                vs.push(z);
                                z = parent[z].0;
                            }
                        }
                        vs.push(s);
                        vs.sort_unstable();
                        vs.dedup();
                        best = Some(vs);
                        best_len = Some(len);
                    }
                }
            }
        }
    }
    let vs = best?;
    let mut inside = vec![false; n];
    for v in vs {
        inside[v] = true;
    }
    Some(g.raw_edges().iter().map(|r| inside[r.u] != inside[r.v]).collect())
}

/// Smallest number of edges whose removal leaves at least two components
/// that contain a circuit. Graphs without such a cut get their cycle rank
/// `m - n + 1` (so `K_4` has value 3).
///
/// Edge subsets are tried in increasing size, bounded above by the cut around
/// a shortest circuit when that cut is cyclic.
pub fn cyclic_edge_connectivity(g: &SignedGraph, cap: usize) -> Result<usize> {
    if !g.is_cubic() {
        return Err(Error::precondition("cyclic edge connectivity is only computed for cubic graphs"));
    }
    if g.vertex_count() > cap {
        return Err(Error::budget("cyclic edge connectivity", cap as u64));
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let m = g.edge_count();
    let rank = m + 1 - g.vertex_count();
    let upper = match girth_cut(g) {
        Some(cut) if cyclic_components(g, &cut) >= 2 => cut.iter().filter(|&&c| c).count().min(rank),
        _ => rank,
    };
    for size in 1..upper {
        let mut removed = vec![false; m];
        for f in (0..m).combinations(size) {
            for &e in &f {
                removed[e] = true;
            }
            let hit = cyclic_components(g, &removed) >= 2;
            for &e in &f {
                removed[e] = false;
            }
            if hit {
                return Ok(size);
            }
        }
    }
    Ok(upper)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Edge;

    fn simple(n: usize, pairs: &[(usize, usize)]) -> SignedGraph {
        let vs: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let es = pairs
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| Edge::positive(format!("e{i}"), vs[a].clone(), vs[b].clone()));
        SignedGraph::new(vs.clone(), es).unwrap()
    }

    #[test]
    fn k4_and_prism() {
        let k4 = simple(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(cyclic_edge_connectivity(&k4, 40).unwrap(), 3);
        let prism = simple(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]);
        assert_eq!(cyclic_edge_connectivity(&prism, 40).unwrap(), 3);
        let cube = simple(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        );
        assert_eq!(cyclic_edge_connectivity(&cube, 40).unwrap(), 4);
    }

    #[test]
    fn two_triangles_joined_by_a_bridge_pair() {
        // two K4 minus an edge, joined at their divalent vertices
        let g = simple(
            8,
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7), (0, 4), (3, 7)],
        );
        assert_eq!(cyclic_edge_connectivity(&g, 40).unwrap(), 2);
    }

    #[test]
    fn preconditions() {
        let path = simple(3, &[(0, 1), (1, 2)]);
        assert!(cyclic_edge_connectivity(&path, 40).is_err());
        let k4 = simple(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(matches!(cyclic_edge_connectivity(&k4, 3), Err(Error::BudgetExceeded { .. })));
    }
}
