//! Signed multigraphs, signatures, switching and edge cuts.
//!
//! A [`SignedGraph`] owns its vertex and edge identifiers in canonical
//! (sorted) order. The negative edges of a graph form its native
//! [`Signature`]; any other signature of the same graph can be attached with
//! [`SignedGraph::with_signature`].

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

macro_rules! string_id {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(String);

        impl $name {
            pub fn new(s: impl Into<String>) -> Self {
                $name(s.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl Borrow<str> for $name {
            fn borrow(&self) -> &str {
                &self.0
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                $name(s.to_owned())
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                $name(s)
            }
        }

        impl From<&String> for $name {
            fn from(s: &String) -> Self {
                $name(s.clone())
            }
        }

        impl From<&$name> for $name {
            fn from(s: &$name) -> Self {
                s.clone()
            }
        }
    };
}

string_id!(
    /// Opaque, caller-chosen vertex name.
    VertexId
);
string_id!(
    /// Stable edge name. Parallel edges differ only by id.
    EdgeId
);

/// Returns true if `s` is a legal vertex or edge name.
pub fn is_valid_name(s: &str) -> bool {
    !s.is_empty()
        && s.bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'.' || b == b'-')
}

/// An edge record as supplied by callers and returned by iteration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub sign: Sign,
}

impl Edge {
    pub fn new(
        id: impl Into<EdgeId>,
        u: impl Into<VertexId>,
        v: impl Into<VertexId>,
        sign: Sign,
    ) -> Self {
        Edge {
            id: id.into(),
            u: u.into(),
            v: v.into(),
            sign,
        }
    }

    pub fn positive(id: impl Into<EdgeId>, u: impl Into<VertexId>, v: impl Into<VertexId>) -> Self {
        Edge::new(id, u, v, Sign::Positive)
    }

    pub fn negative(id: impl Into<EdgeId>, u: impl Into<VertexId>, v: impl Into<VertexId>) -> Self {
        Edge::new(id, u, v, Sign::Negative)
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct RawEdge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl RawEdge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// A signed multigraph. Loops and parallel edges are allowed.
///
/// Vertices and edges are kept sorted by id, so every index-based
/// enumeration over a graph is deterministic.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "crate::io::GraphDocument", into = "crate::io::GraphDocument")]
pub struct SignedGraph {
    vertices: Vec<VertexId>,
    vertex_index: BTreeMap<VertexId, usize>,
    edge_ids: Vec<EdgeId>,
    edge_index: BTreeMap<EdgeId, usize>,
    raw: Vec<RawEdge>,
    incidence: Vec<Vec<usize>>,
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SignedGraph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl SignedGraph {
    /// Validates and builds a graph. Endpoints of every edge are stored in
    /// canonical order (`u <= v`).
    pub fn new<V, I, E>(vertices: I, edges: E) -> Result<Self>
    where
        V: Into<VertexId>,
        I: IntoIterator<Item = V>,
        E: IntoIterator<Item = Edge>,
    {
        let mut vs: Vec<VertexId> = vertices.into_iter().map(Into::into).collect();
        vs.sort();
        for w in vs.windows(2) {
            if w[0] == w[1] {
                return Err(Error::malformed(format!("duplicate vertex id `{}`", w[0])));
            }
        }
        let vertex_index: BTreeMap<VertexId, usize> =
            vs.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();

        let mut es: Vec<Edge> = edges.into_iter().collect();
        es.sort_by(|a, b| a.id.cmp(&b.id));
        for w in es.windows(2) {
            if w[0].id == w[1].id {
                return Err(Error::malformed(format!("duplicate edge id `{}`", w[0].id)));
            }
        }
        let mut raw = Vec::with_capacity(es.len());
        let mut incidence = vec![Vec::new(); vs.len()];
        let mut edge_ids = Vec::with_capacity(es.len());
        for (i, e) in es.into_iter().enumerate() {
            let lookup = |x: &VertexId| {
                vertex_index.get(x).copied().ok_or_else(|| {
                    Error::malformed(format!("edge `{}` references unknown vertex `{}`", e.id, x))
                })
            };
            let a = lookup(&e.u)?;
            let b = lookup(&e.v)?;
            let (u, v) = if a <= b { (a, b) } else { (b, a) };
            raw.push(RawEdge { u, v, sign: e.sign });
            incidence[u].push(i);
            if u != v {
                incidence[v].push(i);
            }
            edge_ids.push(e.id);
        }
        let edge_index = edge_ids.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Ok(SignedGraph {
            vertices: vs,
            vertex_index,
            edge_ids,
            edge_index,
            raw,
            incidence,
        })
    }

    pub fn empty() -> Self {
        SignedGraph::new(Vec::<VertexId>::new(), Vec::new()).expect("empty graph is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.raw.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edge_ids
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.raw.len()).map(move |i| self.edge_at(i))
    }

    pub fn edge(&self, id: &str) -> Option<Edge> {
        self.edge_index.get(id).map(|&i| self.edge_at(i))
    }

    pub fn has_vertex(&self, id: &str) -> bool {
        self.vertex_index.contains_key(id)
    }

    pub fn has_edge(&self, id: &str) -> bool {
        self.edge_index.contains_key(id)
    }

    /// Number of edge ends at `v`; a loop counts twice.
    pub fn degree(&self, v: &str) -> Option<usize> {
        self.vertex_index.get(v).map(|&i| self.degree_at(i))
    }

    /// Distinct neighbours of `v`, excluding `v` itself.
    pub fn neighbors(&self, v: &str) -> Option<BTreeSet<VertexId>> {
        let i = *self.vertex_index.get(v)?;
        Some(
            self.incidence[i]
                .iter()
                .map(|&e| self.raw[e].other(i))
                .filter(|&w| w != i)
                .map(|w| self.vertices[w].clone())
                .collect(),
        )
    }

    /// Ids of the edges incident to `v` (each loop once).
    pub fn incident_edges(&self, v: &str) -> Option<Vec<EdgeId>> {
        let i = *self.vertex_index.get(v)?;
        Some(self.incidence[i].iter().map(|&e| self.edge_ids[e].clone()).collect())
    }

    /// Ids of all edges joining `x` and `y` (loops at `x` when `x == y`).
    pub fn edges_between(&self, x: &str, y: &str) -> Vec<EdgeId> {
        let (Some(&a), Some(&b)) = (self.vertex_index.get(x), self.vertex_index.get(y)) else {
            return Vec::new();
        };
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        self.incidence[a]
            .iter()
            .filter(|&&e| self.raw[e].u == a && self.raw[e].v == b)
            .map(|&e| self.edge_ids[e].clone())
            .collect()
    }

    /// The native signature: the set of negative edges.
    pub fn signature(&self) -> Signature {
        Signature(
            self.raw
                .iter()
                .enumerate()
                .filter(|(_, e)| e.sign.is_negative())
                .map(|(i, _)| self.edge_ids[i].clone())
                .collect(),
        )
    }

    /// The same graph with exactly the edges of `sigma` negative.
    pub fn with_signature(&self, sigma: &Signature) -> Result<SignedGraph> {
        let mask = sigma.to_mask(self)?;
        let mut g = self.clone();
        for (e, neg) in g.raw.iter_mut().zip(mask) {
            e.sign = if neg { Sign::Negative } else { Sign::Positive };
        }
        Ok(g)
    }

    /// The all-negative copy of this graph, written `-G`.
    pub fn antibalanced(&self) -> SignedGraph {
        let mut g = self.clone();
        for e in &mut g.raw {
            e.sign = Sign::Negative;
        }
        g
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.degree_at(v) == 3)
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.vertex_count()).map(|v| self.degree_at(v)).min()
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().1 <= 1
    }

    /// The graph without the listed edges. Unknown ids are an error.
    pub fn remove_edges<'a, I>(&self, ids: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = &'a EdgeId>,
    {
        let drop: BTreeSet<&str> = ids.into_iter().map(|e| e.as_str()).collect();
        for e in &drop {
            if !self.has_edge(e) {
                return Err(Error::malformed(format!("unknown edge `{e}`")));
            }
        }
        SignedGraph::new(
            self.vertices.iter().cloned(),
            self.edges().filter(|e| !drop.contains(e.id.as_str())),
        )
    }

    pub fn remove_edge(&self, id: &EdgeId) -> Result<SignedGraph> {
        self.remove_edges(std::iter::once(id))
    }

    /// The subgraph formed by the listed edges and their endpoints.
    pub fn edge_subgraph<'a, I>(&self, ids: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = &'a EdgeId>,
    {
        let mut keep = Vec::new();
        for id in ids {
            keep.push(
                self.edge(id.as_str())
                    .ok_or_else(|| Error::malformed(format!("unknown edge `{id}`")))?,
            );
        }
        let vs: BTreeSet<VertexId> = keep.iter().flat_map(|e| [e.u.clone(), e.v.clone()]).collect();
        SignedGraph::new(vs, keep)
    }

    /// Drops vertices without incident edges.
    pub fn without_isolated_vertices(&self) -> SignedGraph {
        let vs: Vec<VertexId> = (0..self.vertex_count())
            .filter(|&v| !self.incidence[v].is_empty())
            .map(|v| self.vertices[v].clone())
            .collect();
        SignedGraph::new(vs, self.edges()).expect("subgraph of a valid graph")
    }

    // ---- index-level access for the solvers ----

    pub(crate) fn raw_edges(&self) -> &[RawEdge] {
        &self.raw
    }

    pub(crate) fn raw_edge(&self, e: usize) -> RawEdge {
        self.raw[e]
    }

    pub(crate) fn incidence(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub(crate) fn degree_at(&self, v: usize) -> usize {
        self.incidence[v]
            .iter()
            .map(|&e| if self.raw[e].is_loop() { 2 } else { 1 })
            .sum()
    }

    pub(crate) fn vertex_at(&self, v: usize) -> &VertexId {
        &self.vertices[v]
    }

    pub(crate) fn edge_id_at(&self, e: usize) -> &EdgeId {
        &self.edge_ids[e]
    }

    pub(crate) fn vertex_idx(&self, v: &str) -> Option<usize> {
        self.vertex_index.get(v).copied()
    }

    pub(crate) fn edge_idx(&self, e: &str) -> Option<usize> {
        self.edge_index.get(e).copied()
    }

    pub(crate) fn edge_at(&self, i: usize) -> Edge {
        let r = self.raw[i];
        Edge {
            id: self.edge_ids[i].clone(),
            u: self.vertices[r.u].clone(),
            v: self.vertices[r.v].clone(),
            sign: r.sign,
        }
    }

    /// Component label per vertex (numbered by first canonical vertex) and
    /// the number of components.
    pub(crate) fn component_labels(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &e in &self.incidence[x] {
                    let y = self.raw[e].other(x);
                    if label[y] == usize::MAX {
                        label[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Vertex index lists of the components, in canonical order.
    pub(crate) fn component_vertex_sets(&self) -> Vec<Vec<usize>> {
        let (label, count) = self.component_labels();
        let mut out = vec![Vec::new(); count];
        for (v, &c) in label.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// A set of edge identifiers, read as the negative edges of a signing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Signature(BTreeSet<EdgeId>);

impl Signature {
    pub fn new() -> Self {
        Signature(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: &str) -> bool {
        self.0.contains(e)
    }

    pub fn insert(&mut self, e: impl Into<EdgeId>) -> bool {
        self.0.insert(e.into())
    }

    pub fn remove(&mut self, e: &str) -> bool {
        self.0.remove(e)
    }

    pub fn iter(&self) -> impl Iterator<Item = &EdgeId> {
        self.0.iter()
    }

    pub fn as_set(&self) -> &BTreeSet<EdgeId> {
        &self.0
    }

    pub fn symmetric_difference(&self, other: &Signature) -> Signature {
        Signature(self.0.symmetric_difference(&other.0).cloned().collect())
    }

    pub fn is_disjoint(&self, other: &Signature) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// Checks that every member names an edge of `g`.
    pub fn check_in(&self, g: &SignedGraph) -> Result<()> {
        match self.0.iter().find(|e| !g.has_edge(e.as_str())) {
            Some(e) => Err(Error::malformed(format!("signature names unknown edge `{e}`"))),
            None => Ok(()),
        }
    }

    pub(crate) fn to_mask(&self, g: &SignedGraph) -> Result<Vec<bool>> {
        let mut mask = vec![false; g.edge_count()];
        for e in &self.0 {
            let i = g
                .edge_idx(e.as_str())
                .ok_or_else(|| Error::malformed(format!("signature names unknown edge `{e}`")))?;
            mask[i] = true;
        }
        Ok(mask)
    }

    pub(crate) fn from_indices(g: &SignedGraph, idx: impl IntoIterator<Item = usize>) -> Signature {
        Signature(idx.into_iter().map(|i| g.edge_id_at(i).clone()).collect())
    }
}

impl<E: Into<EdgeId>> FromIterator<E> for Signature {
    fn from_iter<T: IntoIterator<Item = E>>(iter: T) -> Self {
        Signature(iter.into_iter().map(Into::into).collect())
    }
}

impl<'a> IntoIterator for &'a Signature {
    type Item = &'a EdgeId;
    type IntoIter = std::collections::btree_set::Iter<'a, EdgeId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(e.as_str())?;
        }
        f.write_str("}")
    }
}

/// A vertex subset `U`; switching at `U` flips the signs on the cut `∂(U)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SwitchSet(BTreeSet<VertexId>);

impl SwitchSet {
    pub fn new() -> Self {
        SwitchSet(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: &str) -> bool {
        self.0.contains(v)
    }

    pub fn insert(&mut self, v: impl Into<VertexId>) -> bool {
        self.0.insert(v.into())
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexId> {
        self.0.iter()
    }

    /// `V(G) ∖ U`.
    pub fn complement(&self, g: &SignedGraph) -> SwitchSet {
        SwitchSet(g.vertices().iter().filter(|v| !self.0.contains(*v)).cloned().collect())
    }

    pub fn symmetric_difference(&self, other: &SwitchSet) -> SwitchSet {
        SwitchSet(self.0.symmetric_difference(&other.0).cloned().collect())
    }

    pub(crate) fn to_mask(&self, g: &SignedGraph) -> Result<Vec<bool>> {
        let mut mask = vec![false; g.vertex_count()];
        for v in &self.0 {
            let i = g
                .vertex_idx(v.as_str())
                .ok_or_else(|| Error::precondition(format!("switch set names unknown vertex `{v}`")))?;
            mask[i] = true;
        }
        Ok(mask)
    }

    pub(crate) fn from_mask(g: &SignedGraph, mask: &[bool]) -> SwitchSet {
        SwitchSet(
            mask.iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| g.vertex_at(i).clone())
                .collect(),
        )
    }
}

impl<V: Into<VertexId>> FromIterator<V> for SwitchSet {
    fn from_iter<T: IntoIterator<Item = V>>(iter: T) -> Self {
        SwitchSet(iter.into_iter().map(Into::into).collect())
    }
}

impl fmt::Display for SwitchSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(v.as_str())?;
        }
        f.write_str("}")
    }
}

/// Edge counts of a cut `∂(U)` relative to a signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutSummary {
    pub total: usize,
    pub negatives: usize,
    pub positives: usize,
}

impl CutSummary {
    pub fn is_equilibrated(&self) -> bool {
        self.negatives == self.positives
    }
}

/// Edge indices of `∂(U)`. Loops never cross a cut.
pub(crate) fn cut_indices(g: &SignedGraph, in_u: &[bool]) -> Vec<usize> {
    g.raw_edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| in_u[e.u] != in_u[e.v])
        .map(|(i, _)| i)
        .collect()
}

/// The edge cut `∂(U)`.
pub fn cut(g: &SignedGraph, u: &SwitchSet) -> Result<Vec<EdgeId>> {
    let mask = u.to_mask(g)?;
    Ok(cut_indices(g, &mask).into_iter().map(|i| g.edge_id_at(i).clone()).collect())
}

/// `Σ Δ ∂(U)`.
pub fn switch(g: &SignedGraph, sigma: &Signature, u: &SwitchSet) -> Result<Signature> {
    let mut mask = sigma.to_mask(g)?;
    let in_u = u.to_mask(g)?;
    for i in cut_indices(g, &in_u) {
        mask[i] = !mask[i];
    }
    Ok(Signature::from_indices(g, mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)))
}

/// Counts `d(U)`, `d⁻(U)` and `d⁺(U)` with respect to `sigma`.
pub fn cut_summary(g: &SignedGraph, sigma: &Signature, u: &SwitchSet) -> Result<CutSummary> {
    let neg = sigma.to_mask(g)?;
    let in_u = u.to_mask(g)?;
    let cut = cut_indices(g, &in_u);
    let negatives = cut.iter().filter(|&&i| neg[i]).count();
    Ok(CutSummary {
        total: cut.len(),
        negatives,
        positives: cut.len() - negatives,
    })
}

/// Connected components in canonical order; loops stay with their vertex.
pub fn components(g: &SignedGraph) -> Vec<SignedGraph> {
    let (label, count) = g.component_labels();
    let mut vs = vec![Vec::new(); count];
    let mut es = vec![Vec::new(); count];
    for (v, &c) in label.iter().enumerate() {
        vs[c].push(g.vertex_at(v).clone());
    }
    for (i, e) in g.raw_edges().iter().enumerate() {
        es[label[e.u]].push(g.edge_at(i));
    }
    vs.into_iter()
        .zip(es)
        .map(|(v, e)| SignedGraph::new(v, e).expect("component of a valid graph"))
        .collect()
}

/// Disjoint union; ids of the second graph must not clash with the first.
pub fn disjoint_union(a: &SignedGraph, b: &SignedGraph) -> Result<SignedGraph> {
    SignedGraph::new(
        a.vertices().iter().chain(b.vertices()).cloned(),
        a.edges().chain(b.edges()),
    )
}

/// Copy of `g` with every vertex and edge id prefixed.
pub fn prefixed(g: &SignedGraph, prefix: &str) -> SignedGraph {
    SignedGraph::new(
        g.vertices().iter().map(|v| format!("{prefix}{v}")),
        g.edges().map(|e| Edge::new(format!("{prefix}{}", e.id), format!("{prefix}{}", e.u), format!("{prefix}{}", e.v), e.sign)),
    )
    .expect("prefixing preserves validity")
}
