//! Multiedge subdivision and its inverse, vertex suppression.
//!
//! Subdividing a signed `t`-multiedge `E_xy` inserts a vertex `v` joined to
//! `x` by `t` positive edges and to `y` by `t` edges of the multiedge's sign.
//! Fresh ids are derived from the old ones (`e` becomes `e.x` and `e.y`), and
//! suppression restores `e` when it sees such a pair, so the two operations
//! undo each other exactly on ids produced here.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::{Edge, EdgeId, Sign, SignedGraph, VertexId};

fn fresh_vertex(g: &SignedGraph, base: String, taken: &BTreeSet<String>) -> String {
    if !g.has_vertex(&base) && !taken.contains(&base) {
        return base;
    }
    (1..)
        .map(|i| format!("{base}.{i}"))
        .find(|c| !g.has_vertex(c) && !taken.contains(c))
        .expect("unbounded")
}

fn fresh_edge(g: &SignedGraph, base: String, removed: &BTreeSet<&str>, taken: &BTreeSet<String>) -> String {
    let free = |c: &str| (!g.has_edge(c) || removed.contains(c)) && !taken.contains(c);
    if free(&base) {
        return base;
    }
    (1..).map(|i| format!("{base}.{i}")).find(|c| free(c)).expect("unbounded")
}

/// Replaces the multiedge between `x` and `y` (the loops at `x` if `x == y`)
/// by a path of two multiedges through a new vertex. Returns the new graph
/// and the name of the inserted vertex.
pub fn subdivide_multiedge(g: &SignedGraph, x: &str, y: &str) -> Result<(SignedGraph, VertexId)> {
    if !g.has_vertex(x) || !g.has_vertex(y) {
        return Err(Error::precondition(format!("`{x}` or `{y}` is not a vertex")));
    }
    let multi = g.edges_between(x, y);
    if multi.is_empty() {
        return Err(Error::precondition(format!("no edge joins `{x}` and `{y}`")));
    }
    let signs: BTreeSet<Sign> = multi.iter().map(|e| g.edge(e.as_str()).expect("edge").sign).collect();
    if signs.len() != 1 {
        return Err(Error::precondition(format!(
            "the multiedge between `{x}` and `{y}` has mixed signs"
        )));
    }
    let sign = *signs.iter().next().expect("nonempty");
    let v = fresh_vertex(g, format!("{x}.{y}"), &BTreeSet::new());
    let removed: BTreeSet<&str> = multi.iter().map(|e| e.as_str()).collect();
    let mut taken = BTreeSet::new();
    let mut edges: Vec<Edge> = g.edges().filter(|e| !removed.contains(e.id.as_str())).collect();
    for e in &multi {
        let ex = fresh_edge(g, format!("{e}.x"), &removed, &taken);
        taken.insert(ex.clone());
        let ey = fresh_edge(g, format!("{e}.y"), &removed, &taken);
        taken.insert(ey.clone());
        edges.push(Edge::new(ex, v.as_str(), x, Sign::Positive));
        edges.push(Edge::new(ey, v.as_str(), y, sign));
    }
    let vs = g.vertices().iter().cloned().chain(std::iter::once(VertexId::new(v.clone())));
    Ok((SignedGraph::new(vs, edges)?, VertexId::new(v)))
}

fn stem_pair(a: &str, b: &str) -> Option<String> {
    let (sa, ta) = a.rsplit_once('.')?;
    let (sb, tb) = b.rsplit_once('.')?;
    (sa == sb && ((ta == "x" && tb == "y") || (ta == "y" && tb == "x"))).then(|| sa.to_owned())
}

/// Pairs up two equally long id lists, matching `s.x`/`s.y` partners first
/// and the remainder in sorted order.
fn pair_ids(left: &[EdgeId], right: &[EdgeId]) -> Vec<(EdgeId, EdgeId, Option<String>)> {
    let mut rest_r: Vec<EdgeId> = right.to_vec();
    let mut out = Vec::new();
    let mut rest_l = Vec::new();
    for a in left {
        if let Some(pos) = rest_r.iter().position(|b| stem_pair(a.as_str(), b.as_str()).is_some()) {
            let b = rest_r.remove(pos);
            let stem = stem_pair(a.as_str(), b.as_str());
            out.push((a.clone(), b, stem));
        } else {
            rest_l.push(a.clone());
        }
    }
    out.extend(rest_l.into_iter().zip(rest_r).map(|(a, b)| (a, b, None)));
    out
}

/// Inverse of [`subdivide_multiedge`].
///
/// `v` must carry no loops and either
/// * have exactly two neighbours `x`, `y` with `E_vx` and `E_vy` each of a
///   single sign and of equal size `t`, giving `t` edges `xy` of sign
///   `s(E_vx)·s(E_vy)`; or
/// * have exactly one neighbour `x` whose `2t` edges split evenly into
///   positive and negative (giving `t` negative loops at `x`) or are all of
///   one sign (giving `t` positive loops).
pub fn suppress_vertex(g: &SignedGraph, v: &str) -> Result<SignedGraph> {
    let not = |why: &str| Err(Error::precondition(format!("vertex `{v}` is not suppressible: {why}")));
    let Some(nbrs) = g.neighbors(v) else {
        return not("unknown vertex");
    };
    if !g.edges_between(v, v).is_empty() {
        return not("it carries a loop");
    }
    let sign_of = |e: &EdgeId| g.edge(e.as_str()).expect("edge").sign;
    let nbrs: Vec<VertexId> = nbrs.into_iter().collect();
    let mut new_edges: Vec<(String, VertexId, VertexId, Sign)> = Vec::new();
    let removed_ids: Vec<EdgeId> = match nbrs.as_slice() {
        [x, y] => {
            let ex = g.edges_between(v, x.as_str());
            let ey = g.edges_between(v, y.as_str());
            let sx: BTreeSet<Sign> = ex.iter().map(sign_of).collect();
            let sy: BTreeSet<Sign> = ey.iter().map(sign_of).collect();
            if sx.len() != 1 || sy.len() != 1 {
                return not("a side multiedge has mixed signs");
            }
            if ex.len() != ey.len() {
                return not("the two side multiedges differ in size");
            }
            let s = *sx.iter().next().expect("one") * *sy.iter().next().expect("one");
            for (a, b, stem) in pair_ids(&ex, &ey) {
                let id = stem.unwrap_or_else(|| format!("{a}_{b}"));
                new_edges.push((id, x.clone(), y.clone(), s));
            }
            ex.into_iter().chain(ey).collect()
        }
        [x] => {
            let all = g.edges_between(v, x.as_str());
            let (pos, neg): (Vec<EdgeId>, Vec<EdgeId>) =
                all.iter().cloned().partition(|e| sign_of(e) == Sign::Positive);
            if pos.len() == neg.len() {
                for (a, b, stem) in pair_ids(&pos, &neg) {
                    let id = stem.unwrap_or_else(|| format!("{a}_{b}"));
                    new_edges.push((id, x.clone(), x.clone(), Sign::Negative));
                }
            } else if (pos.is_empty() || neg.is_empty()) && all.len().is_multiple_of(2) {
                let (l, r) = all.split_at(all.len() / 2);
                for (a, b, stem) in pair_ids(l, r) {
                    let id = stem.unwrap_or_else(|| format!("{a}_{b}"));
                    new_edges.push((id, x.clone(), x.clone(), Sign::Positive));
                }
            } else {
                return not("its edges cannot be split into two signed halves");
            }
            all
        }
        [] => return not("it has no neighbours"),
        _ => return not("it has more than two neighbours"),
    };
    let removed: BTreeSet<&str> = removed_ids.iter().map(|e| e.as_str()).collect();
    let mut taken = BTreeSet::new();
    let mut edges: Vec<Edge> = g.edges().filter(|e| !removed.contains(e.id.as_str())).collect();
    for (id, a, b, s) in new_edges {
        let id = fresh_edge(g, id, &removed, &taken);
        taken.insert(id.clone());
        edges.push(Edge::new(id, a, b, s));
    }
    SignedGraph::new(g.vertices().iter().filter(|w| w.as_str() != v).cloned(), edges)
}

/// True iff the graph has one vertex or no vertex can be suppressed.
pub fn irreducible(g: &SignedGraph) -> bool {
    g.vertex_count() == 1 || g.vertices().iter().all(|v| suppress_vertex(g, v.as_str()).is_err())
}

/// Suppresses vertices, first suppressible canonical vertex each round, until
/// the graph is irreducible.
pub fn reduce_to_irreducible(g: &SignedGraph) -> SignedGraph {
    let mut cur = g.clone();
    loop {
        if cur.vertex_count() <= 1 {
            return cur;
        }
        let next = cur.vertices().iter().find_map(|v| suppress_vertex(&cur, v.as_str()).ok());
        match next {
            Some(h) => cur = h,
            None => return cur,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_xvy() -> SignedGraph {
        SignedGraph::new(
            ["v", "x", "y"],
            [Edge::positive("a", "v", "x"), Edge::negative("b", "v", "y")],
        )
        .unwrap()
    }

    #[test]
    fn subdividing_a_negative_edge() {
        let g = SignedGraph::new(["x", "y"], [Edge::negative("e", "x", "y")]).unwrap();
        let (h, v) = subdivide_multiedge(&g, "x", "y").unwrap();
        assert_eq!(h.vertex_count(), 3);
        let ex = h.edge("e.x").unwrap();
        let ey = h.edge("e.y").unwrap();
        assert_eq!(ex.sign, Sign::Positive);
        assert_eq!(ey.sign, Sign::Negative);
        assert!(ex.u == v || ex.v == v);
        assert_eq!(suppress_vertex(&h, v.as_str()).unwrap(), g);
    }

    #[test]
    fn subdividing_loops_gives_a_signed_digon_bundle() {
        let g = SignedGraph::new(
            ["a"],
            [Edge::negative("l1", "a", "a"), Edge::negative("l2", "a", "a"), Edge::negative("l3", "a", "a")],
        )
        .unwrap();
        let (h, v) = subdivide_multiedge(&g, "a", "a").unwrap();
        assert_eq!(h.vertex_count(), 2);
        let between = h.edges_between("a", v.as_str());
        assert_eq!(between.len(), 6);
        let negs = between.iter().filter(|e| h.edge(e.as_str()).unwrap().sign.is_negative()).count();
        assert_eq!(negs, 3);
        assert_eq!(suppress_vertex(&h, v.as_str()).unwrap(), g);
    }

    #[test]
    fn mixed_multiedge_cannot_be_subdivided() {
        let g = SignedGraph::new(
            ["x", "y"],
            [Edge::negative("n", "x", "y"), Edge::positive("p", "x", "y")],
        )
        .unwrap();
        assert!(matches!(subdivide_multiedge(&g, "x", "y"), Err(Error::Precondition(_))));
    }

    #[test]
    fn suppressing_a_path_vertex() {
        let h = suppress_vertex(&path_xvy(), "v").unwrap();
        assert_eq!(h.vertex_count(), 2);
        let e: Vec<Edge> = h.edges().collect();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].sign, Sign::Negative);
        assert_eq!(e[0].id.as_str(), "a_b");
    }

    #[test]
    fn unequal_sides_are_not_suppressible() {
        let g = SignedGraph::new(
            ["v", "x", "y"],
            [
                Edge::positive("a", "v", "x"),
                Edge::positive("a2", "v", "x"),
                Edge::negative("b", "v", "y"),
            ],
        )
        .unwrap();
        assert!(suppress_vertex(&g, "v").is_err());
        assert!(irreducible(&g) == g.vertices().iter().all(|v| suppress_vertex(&g, v.as_str()).is_err()));
    }

    #[test]
    fn long_unbalanced_circuit_reduces_to_a_negative_loop() {
        let n = 7;
        let vs: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
        let es = (0..n).map(|i| {
            let s = if i == 3 { Sign::Negative } else { Sign::Positive };
            Edge::new(format!("e{i}"), vs[i].clone(), vs[(i + 1) % n].clone(), s)
        });
        let g = SignedGraph::new(vs.clone(), es).unwrap();
        let r = reduce_to_irreducible(&g);
        assert_eq!(r.vertex_count(), 1);
        assert_eq!(r.edge_count(), 1);
        assert_eq!(r.signature().len(), 1);
        assert!(irreducible(&r));
    }

    #[test]
    fn single_vertex_is_irreducible() {
        let g = SignedGraph::new(["a"], [Edge::negative("l", "a", "a")]).unwrap();
        assert!(irreducible(&g));
        assert_eq!(reduce_to_irreducible(&g), g);
    }
}
