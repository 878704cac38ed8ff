//! 2- and 3-edge-sums. Vertices and edges of the two summands are prefixed
//! with `a.` and `b.`; the joining edges are named `j1`, `j2`, `j3`.

use crate::error::{Error, Result};
use crate::model::{prefixed, Edge, EdgeId, Sign, SignedGraph, VertexId};

fn positive_link(g: &SignedGraph, e: &EdgeId) -> Result<Edge> {
    let edge = g
        .edge(e.as_str())
        .ok_or_else(|| Error::precondition(format!("`{e}` is not an edge")))?;
    if edge.sign.is_negative() {
        return Err(Error::precondition(format!("`{e}` is negative")));
    }
    if edge.is_loop() {
        return Err(Error::precondition(format!("`{e}` is a loop")));
    }
    Ok(edge)
}

fn join(
    h1: &SignedGraph,
    drop1: impl Fn(&Edge) -> bool,
    keep_v1: impl Fn(&VertexId) -> bool,
    h2: &SignedGraph,
    drop2: impl Fn(&Edge) -> bool,
    keep_v2: impl Fn(&VertexId) -> bool,
    links: &[(VertexId, VertexId)],
) -> Result<SignedGraph> {
    let a = prefixed(h1, "a.");
    let b = prefixed(h2, "b.");
    let strip = |v: &VertexId, p: &str| VertexId::new(v.as_str().strip_prefix(p).expect("prefixed"));
    let vertices = a
        .vertices()
        .iter()
        .filter(|v| keep_v1(&strip(v, "a.")))
        .chain(b.vertices().iter().filter(|v| keep_v2(&strip(v, "b."))))
        .cloned();
    let unprefixed = |e: &Edge, p: &str| Edge {
        id: EdgeId::new(e.id.as_str().strip_prefix(p).expect("prefixed")),
        u: strip(&e.u, p),
        v: strip(&e.v, p),
        sign: e.sign,
    };
    let mut edges: Vec<Edge> = a.edges().filter(|e| !drop1(&unprefixed(e, "a."))).collect();
    edges.extend(b.edges().filter(|e| !drop2(&unprefixed(e, "b."))));
    for (i, (x, y)) in links.iter().enumerate() {
        edges.push(Edge::new(
            format!("j{}", i + 1),
            format!("a.{x}"),
            format!("b.{y}"),
            Sign::Positive,
        ));
    }
    SignedGraph::new(vertices, edges)
}

/// `H1 ⊕2 H2`: deletes the positive edges `v1w1` and `v2w2` and adds the
/// positive edges `v1v2` and `w1w2`, where `v`, `w` are the stored endpoints
/// of each chosen edge.
pub fn edge_sum_2(h1: &SignedGraph, e1: &EdgeId, h2: &SignedGraph, e2: &EdgeId) -> Result<SignedGraph> {
    let l1 = positive_link(h1, e1)?;
    let l2 = positive_link(h2, e2)?;
    join(
        h1,
        |e| e.id == l1.id,
        |_| true,
        h2,
        |e| e.id == l2.id,
        |_| true,
        &[(l1.u.clone(), l2.u.clone()), (l1.v.clone(), l2.v.clone())],
    )
}

fn trivalent_positive(g: &SignedGraph, u: &str) -> Result<Vec<VertexId>> {
    let inc = g
        .incident_edges(u)
        .ok_or_else(|| Error::precondition(format!("`{u}` is not a vertex")))?;
    if g.degree(u) != Some(3) {
        return Err(Error::precondition(format!("`{u}` does not have degree 3")));
    }
    let mut nbrs = Vec::new();
    for e in inc {
        let e = g.edge(e.as_str()).expect("incident edge");
        if e.sign.is_negative() {
            return Err(Error::precondition(format!("`{u}` has a negative edge `{}`", e.id)));
        }
        if e.is_loop() {
            return Err(Error::precondition(format!("`{u}` carries a loop")));
        }
        nbrs.push(if e.u.as_str() == u { e.v } else { e.u });
    }
    nbrs.sort();
    Ok(nbrs)
}

/// `H1 ⊕3 H2` with the neighbour triples of `u1` and `u2` paired in
/// canonical order.
pub fn edge_sum_3(h1: &SignedGraph, u1: &str, h2: &SignedGraph, u2: &str) -> Result<SignedGraph> {
    edge_sum_3_with(h1, u1, h2, u2, [0, 1, 2])
}

/// `H1 ⊕3 H2` where the `i`-th neighbour of `u1` is joined to neighbour
/// `pairing[i]` of `u2`, both triples in canonical order.
pub fn edge_sum_3_with(h1: &SignedGraph, u1: &str, h2: &SignedGraph, u2: &str, pairing: [usize; 3]) -> Result<SignedGraph> {
    let mut sorted = pairing;
    sorted.sort_unstable();
    if sorted != [0, 1, 2] {
        return Err(Error::precondition("pairing must be a permutation of 0, 1, 2"));
    }
    let n1 = trivalent_positive(h1, u1)?;
    let n2 = trivalent_positive(h2, u2)?;
    let links: Vec<(VertexId, VertexId)> = (0..3).map(|i| (n1[i].clone(), n2[pairing[i]].clone())).collect();
    let touches = |e: &Edge, u: &str| e.u.as_str() == u || e.v.as_str() == u;
    join(
        h1,
        |e| touches(e, u1),
        |v| v.as_str() != u1,
        h2,
        |e| touches(e, u2),
        |v| v.as_str() != u2,
        &links,
    )
}
