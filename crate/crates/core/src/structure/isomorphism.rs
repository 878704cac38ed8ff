use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{SignedGraph, SwitchSet, VertexId};

/// Largest vertex count accepted by [`switch_isomorphic`].
pub const DEFAULT_ISOMORPHISM_MAX_VERTICES: usize = 14;

/// A vertex bijection `G1 -> G2` together with a switch set `U` of `G1`:
/// switching `G1` at `U` and relabelling gives `G2` up to parallel-edge ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchIsomorphism {
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    pub switch_set: SwitchSet,
}

struct Profile {
    n: usize,
    /// (positive, negative) edge counts per vertex pair; loops on the diagonal.
    counts: Vec<Vec<(usize, usize)>>,
    degree: Vec<usize>,
}

impl Profile {
    fn new(g: &SignedGraph) -> Profile {
        let n = g.vertex_count();
        let mut counts = vec![vec![(0, 0); n]; n];
        for r in g.raw_edges() {
            let c = &mut counts[r.u][r.v];
            if r.sign.is_negative() {
                c.1 += 1;
            } else {
                c.0 += 1;
            }
            if r.u != r.v {
                counts[r.v][r.u] = counts[r.u][r.v];
            }
        }
        let degree = (0..n).map(|v| g.degree_at(v)).collect();
        Profile { n, counts, degree }
    }

    fn multiplicity(&self, a: usize, b: usize) -> usize {
        self.counts[a][b].0 + self.counts[a][b].1
    }
}

/// Parity union-find: `find` returns the root and the parity to it.
struct Parity {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl Parity {
    fn new(n: usize) -> Parity {
        Parity {
            parent: (0..n).collect(),
            parity: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            return (x, false);
        }
        let (r, p) = self.find(self.parent[x]);
        self.parent[x] = r;
        self.parity[x] ^= p;
        (r, self.parity[x])
    }

    /// Records `s(a) xor s(b) = want`; false on contradiction.
    fn union(&mut self, a: usize, b: usize, want: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == want;
        }
        self.parent[ra] = rb;
        self.parity[ra] = pa ^ pb ^ want;
        true
    }
}

struct Matcher<'a> {
    a: &'a Profile,
    b: &'a Profile,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn compatible(&self, x: usize, y: usize, depth: usize) -> bool {
        if self.used[y] || self.a.degree[x] != self.b.degree[y] || self.a.counts[x][x] != self.b.counts[y][y] {
            return false;
        }
        self.order[..depth]
            .iter()
            .all(|&w| self.a.multiplicity(x, w) == self.b.multiplicity(y, self.map[w]))
    }

    fn search(&mut self, depth: usize) -> Option<Vec<bool>> {
        if depth == self.order.len() {
            return self.switching();
        }
        let x = self.order[depth];
        for y in 0..self.b.n {
            if self.compatible(x, y, depth) {
                self.map[x] = y;
                self.used[y] = true;
                let found = self.search(depth + 1);
                self.used[y] = false;
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }

    /// Under the current bijection, each vertex pair's sign counts must agree
    /// either directly (same switch side) or swapped (opposite sides).
    fn switching(&self) -> Option<Vec<bool>> {
        let n = self.a.n;
        let mut uf = Parity::new(n);
        for x in 0..n {
            for w in x + 1..n {
                let (p, q) = self.a.counts[x][w];
                if p == q {
                    continue;
                }
                let target = self.b.counts[self.map[x]][self.map[w]];
                let want = if target == (p, q) {
                    false
                } else if target == (q, p) {
                    true
                } else {
                    return None;
                };
                if !uf.union(x, w, want) {
                    return None;
                }
            }
        }
        Some((0..n).map(|v| uf.find(v).1).collect())
    }
}

/// Searches for a switching isomorphism from `g1` to `g2` by backtracking
/// over vertex bijections, pruned by degree, loop signs and pair
/// multiplicities, then solving the switching parities per vertex pair.
pub fn find_switch_isomorphism(g1: &SignedGraph, g2: &SignedGraph, max_vertices: usize) -> Result<Option<SwitchIsomorphism>> {
    let n = g1.vertex_count();
    if n > max_vertices || g2.vertex_count() > max_vertices {
        return Err(Error::budget("switching-isomorphism search", max_vertices as u64));
    }
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let (a, b) = (Profile::new(g1), Profile::new(g2));
    let mut da = a.degree.clone();
    let mut db = b.degree.clone();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(None);
    }
    // breadth-first order keeps each new vertex adjacent to mapped ones
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut q = std::collections::VecDeque::from([root]);
        while let Some(x) = q.pop_front() {
            order.push(x);
            for (y, s) in seen.iter_mut().enumerate() {
                if !*s && a.multiplicity(x, y) > 0 {
                    *s = true;
                    q.push_back(y);
                }
            }
        }
    }
    let mut m = Matcher {
        a: &a,
        b: &b,
        order,
        map: vec![0; n],
        used: vec![false; n],
    };
    let Some(switch) = m.search(0) else { return Ok(None) };
    Ok(Some(SwitchIsomorphism {
        vertex_map: (0..n)
            .map(|x| (g1.vertex_at(x).clone(), g2.vertex_at(m.map[x]).clone()))
            .collect(),
        switch_set: SwitchSet::from_mask(g1, &switch),
    }))
}

/// True iff some isomorphism carries the signature of `g1` to one switching
/// equivalent to the signature of `g2`. Refuses graphs above 14 vertices.
pub fn switch_isomorphic(g1: &SignedGraph, g2: &SignedGraph) -> Result<bool> {
    Ok(find_switch_isomorphism(g1, g2, DEFAULT_ISOMORPHISM_MAX_VERTICES)?.is_some())
}
