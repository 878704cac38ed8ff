//! Independent checkers for the certificates the solvers emit.
//!
//! Nothing here calls into the solvers or the balance module: every check
//! works from the public edge list with its own union-find, so a report can
//! be re-verified without trusting the code that produced it.

use std::collections::{BTreeMap, BTreeSet};

use crate::criticality::EquilibratedCutWitness;
use crate::error::{Error, Result};
use crate::model::{EdgeId, Signature, SignedGraph, SwitchSet};
use crate::structure::DisjointCircuitWitness;

fn reject(msg: impl Into<String>) -> Error {
    Error::Certificate(msg.into())
}

/// Union-find carrying the parity of each vertex relative to its root.
struct Parity {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl Parity {
    fn new(n: usize) -> Self {
        Parity {
            parent: (0..n).collect(),
            parity: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, up) = self.find(p);
        self.parent[x] = root;
        self.parity[x] ^= up;
        (root, self.parity[x])
    }

    /// Records `side(a) xor side(b) = odd`; false on contradiction.
    fn relate(&mut self, a: usize, b: usize, odd: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == odd;
        }
        self.parent[ra] = rb;
        self.parity[ra] = pa ^ pb ^ odd;
        true
    }
}

fn vertex_index(g: &SignedGraph) -> BTreeMap<&str, usize> {
    g.vertices().iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect()
}

fn known_edges<'a>(g: &SignedGraph, ids: impl IntoIterator<Item = &'a EdgeId>) -> Result<BTreeSet<&'a str>> {
    let mut out = BTreeSet::new();
    for e in ids {
        if !g.has_edge(e.as_str()) {
            return Err(reject(format!("unknown edge `{e}`")));
        }
        if !out.insert(e.as_str()) {
            return Err(reject(format!("edge `{e}` listed twice")));
        }
    }
    Ok(out)
}

/// Accepts `gamma` iff it equals `Σ Δ ∂(U)` for some `U`.
pub fn check_signature(g: &SignedGraph, gamma: &Signature) -> Result<()> {
    let gamma = known_edges(g, gamma.iter())?;
    let idx = vertex_index(g);
    let mut uf = Parity::new(idx.len());
    for e in g.edges() {
        let flipped = e.sign.is_negative() != gamma.contains(e.id.as_str());
        if e.is_loop() {
            if flipped {
                return Err(reject(format!("loop `{}` changes sign", e.id)));
            }
        } else if !uf.relate(idx[e.u.as_str()], idx[e.v.as_str()], flipped) {
            return Err(reject(format!("no switch set turns the signature into the claimed one (at `{}`)", e.id)));
        }
    }
    Ok(())
}

/// Accepts a set whose deletion leaves a balanced graph.
pub fn check_balancing_set<'a>(g: &SignedGraph, set: impl IntoIterator<Item = &'a EdgeId>) -> Result<()> {
    let set = known_edges(g, set)?;
    let idx = vertex_index(g);
    let mut uf = Parity::new(idx.len());
    for e in g.edges().filter(|e| !set.contains(e.id.as_str())) {
        let ok = if e.is_loop() {
            !e.sign.is_negative()
        } else {
            uf.relate(idx[e.u.as_str()], idx[e.v.as_str()], e.sign.is_negative())
        };
        if !ok {
            return Err(reject(format!("graph minus the set is unbalanced (at `{}`)", e.id)));
        }
    }
    Ok(())
}

/// Accepts a minimum signature: a signature of size `index` whose deletion
/// balances the graph. Minimality itself is the solver's claim.
pub fn check_minimum_signature(g: &SignedGraph, gamma: &Signature, index: usize) -> Result<()> {
    if gamma.len() != index {
        return Err(reject(format!("signature has {} edges, index is {index}", gamma.len())));
    }
    check_signature(g, gamma)?;
    check_balancing_set(g, gamma.iter())
}

/// Accepts `claimed == Σ Δ ∂(U)`.
pub fn check_switch(g: &SignedGraph, u: &SwitchSet, claimed: &Signature) -> Result<()> {
    for v in u.iter() {
        if !g.has_vertex(v.as_str()) {
            return Err(reject(format!("unknown vertex `{v}`")));
        }
    }
    let expected: BTreeSet<EdgeId> = g
        .edges()
        .filter(|e| e.sign.is_negative() != (u.contains(e.u.as_str()) != u.contains(e.v.as_str())))
        .map(|e| e.id)
        .collect();
    known_edges(g, claimed.iter())?;
    let got: BTreeSet<EdgeId> = claimed.iter().cloned().collect();
    if expected != got {
        return Err(reject("switched signature differs from the claim"));
    }
    Ok(())
}

/// Accepts a negative circuit given by its edge set: connected, every touched
/// vertex of degree two, odd number of negative edges.
pub fn check_negative_circuit(g: &SignedGraph, circuit: &[EdgeId]) -> Result<()> {
    if circuit.is_empty() {
        return Err(reject("empty circuit"));
    }
    known_edges(g, circuit)?;
    let mut deg: BTreeMap<&str, usize> = BTreeMap::new();
    let mut negatives = 0;
    let edges: Vec<_> = circuit.iter().map(|id| g.edge(id.as_str()).expect("checked")).collect();
    for e in &edges {
        *deg.entry(e.u.as_str()).or_default() += 1;
        *deg.entry(e.v.as_str()).or_default() += 1;
        negatives += usize::from(e.sign.is_negative());
    }
    if let Some((v, d)) = deg.iter().find(|(_, &d)| d != 2) {
        return Err(reject(format!("vertex `{v}` has degree {d} in the circuit")));
    }
    let names: Vec<&str> = deg.keys().copied().collect();
    let pos = |v: &str| names.binary_search(&v).expect("touched");
    let mut uf = Parity::new(names.len());
    for e in &edges {
        uf.relate(pos(e.u.as_str()), pos(e.v.as_str()), false);
    }
    let root = uf.find(0).0;
    if (0..names.len()).any(|i| uf.find(i).0 != root) {
        return Err(reject("circuit is not connected"));
    }
    if negatives % 2 == 0 {
        return Err(reject("circuit is positive"));
    }
    Ok(())
}

/// Accepts two edge-disjoint negative circuits.
pub fn check_disjoint_circuits(g: &SignedGraph, w: &DisjointCircuitWitness) -> Result<()> {
    check_negative_circuit(g, &w.first)?;
    check_negative_circuit(g, &w.second)?;
    if w.first.iter().any(|e| w.second.contains(e)) {
        return Err(reject("circuits share an edge"));
    }
    Ok(())
}

/// Accepts an equilibrated cut through `w.edge` under `gamma`: the cut
/// `∂(U)` contains the edge and as many `gamma` edges as others.
pub fn check_equilibrated_cut(g: &SignedGraph, gamma: &Signature, w: &EquilibratedCutWitness) -> Result<()> {
    let gamma = known_edges(g, gamma.iter())?;
    let cut: Vec<_> = g
        .edges()
        .filter(|e| w.switch_set.contains(e.u.as_str()) != w.switch_set.contains(e.v.as_str()))
        .collect();
    if !cut.iter().any(|e| e.id == w.edge) {
        return Err(reject(format!("edge `{}` is not in the cut", w.edge)));
    }
    let negatives = cut.iter().filter(|e| gamma.contains(e.id.as_str())).count();
    if 2 * negatives != cut.len() {
        return Err(reject(format!("cut has {negatives} of {} edges in the signature", cut.len())));
    }
    if (w.summary.total, w.summary.negatives) != (cut.len(), negatives) {
        return Err(reject("cut summary does not match the cut"));
    }
    Ok(())
}
