//! Brick walls with `k` negative edges between boundary terminals.
//!
//! A wall is laid out on a grid of columns `1..=2k-1`. Rows of bricks are
//! stacked centred, each row one column narrower on both sides than its
//! neighbour towards the middle. Horizontal paths separate consecutive rows;
//! path `p` spans the wider of the two rows it borders. A row with `L` bricks
//! carries `L + 1` vertical edges on alternating columns.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Edge, Sign, SignedGraph, VertexId};
use crate::structure::suppress_vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Top,
    Middle,
    Bottom,
}

impl Side {
    fn letter(self) -> char {
        match self {
            Side::Top => 't',
            Side::Middle => 'm',
            Side::Bottom => 'b',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RowPath {
    P,
    Q,
}

/// Grid position of a wall vertex: the row that owns it, which of the row's
/// two paths it lies on, and its position along that path (from 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WallLabel {
    pub side: Side,
    pub row: usize,
    pub path: RowPath,
    pub position: usize,
}

impl WallLabel {
    fn name(&self) -> String {
        let p = match self.path {
            RowPath::P => 'P',
            RowPath::Q => 'Q',
        };
        format!("{}{}{}{:03}", self.side.letter(), self.row, p, self.position)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallCoordinates {
    pub labels: BTreeMap<VertexId, WallLabel>,
    /// The outer face, in cyclic order starting at `x[0]`.
    pub boundary: Vec<VertexId>,
    pub x: Vec<VertexId>,
    pub y: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Wall {
    pub graph: SignedGraph,
    pub coordinates: WallCoordinates,
}

struct RowSpec {
    side: Side,
    index: usize,
    inset: usize,
    verticals: Vec<usize>,
}

struct Layout {
    width: usize,
    rows: Vec<RowSpec>,
}

impl Layout {
    fn paths(&self) -> usize {
        self.rows.len() + 1
    }

    fn path_inset(&self, p: usize) -> usize {
        let above = p.checked_sub(1).map(|r| self.rows[r].inset);
        let below = self.rows.get(p).map(|r| r.inset);
        above.into_iter().chain(below).min().expect("a path borders a row")
    }

    fn extent(&self, p: usize) -> (usize, usize) {
        let d = self.path_inset(p);
        (1 + d, self.width - d)
    }

    /// The lower row owns the vertex when it spans the column, otherwise the
    /// row above does.
    fn label(&self, p: usize, col: usize) -> WallLabel {
        match self.rows.get(p) {
            Some(r) if col > r.inset && col <= self.width - r.inset => WallLabel {
                side: r.side,
                row: r.index,
                path: RowPath::P,
                position: col - r.inset,
            },
            _ => {
                let r = &self.rows[p - 1];
                WallLabel {
                    side: r.side,
                    row: r.index,
                    path: RowPath::Q,
                    position: col - r.inset,
                }
            }
        }
    }

    fn name(&self, p: usize, col: usize) -> String {
        self.label(p, col).name()
    }

    fn boundary(&self) -> Vec<(usize, usize)> {
        let last = self.paths() - 1;
        let mut out = Vec::new();
        let (s0, e0) = self.extent(0);
        out.extend((s0..=e0).map(|c| (0, c)));
        for p in 0..last {
            let v = *self.rows[p].verticals.last().expect("row has verticals");
            let e = self.extent(p).1;
            out.extend((v..e).rev().map(|c| (p, c)));
            let e1 = self.extent(p + 1).1;
            out.extend((v..=e1).map(|c| (p + 1, c)));
        }
        let (sl, el) = self.extent(last);
        out.extend((sl..el).rev().map(|c| (last, c)));
        for p in (0..last).rev() {
            let f = self.rows[p].verticals[0];
            let s1 = self.extent(p + 1).0;
            out.extend((s1 + 1..=f).map(|c| (p + 1, c)));
            let s = self.extent(p).0;
            out.extend((s..=f).rev().map(|c| (p, c)));
        }
        // the walk revisits the corner vertices where it turns; keep first visits
        let mut seen = std::collections::BTreeSet::new();
        out.retain(|x| seen.insert(*x));
        out
    }

    fn build(&self, terminals: usize, suppressed_terminal: bool) -> Result<Wall> {
        let paths = self.paths();
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut labels = BTreeMap::new();
        let edge = |a: String, b: String, s: Sign, id: String, edges: &mut Vec<Edge>| {
            edges.push(Edge::new(id, a, b, s));
        };
        for p in 0..paths {
            let (s, e) = self.extent(p);
            for c in s..=e {
                let n = self.name(p, c);
                labels.insert(VertexId::new(n.clone()), self.label(p, c));
                vertices.push(n);
                if c < e {
                    let (a, b) = (self.name(p, c), self.name(p, c + 1));
                    edge(a.clone(), b.clone(), Sign::Positive, format!("{a}-{b}"), &mut edges);
                }
            }
        }
        for (r, row) in self.rows.iter().enumerate() {
            for &c in &row.verticals {
                let (a, b) = (self.name(r, c), self.name(r + 1, c));
                edge(a.clone(), b.clone(), Sign::Positive, format!("{a}-{b}"), &mut edges);
            }
        }
        let x: Vec<String> = (0..paths).map(|p| self.name(p, self.extent(p).0)).collect();
        let y: Vec<String> = (0..paths)
            .map(|i| {
                let p = paths - 1 - i;
                self.name(p, self.extent(p).1)
            })
            .collect();
        for i in 0..terminals {
            edge(x[i].clone(), y[i].clone(), Sign::Negative, format!("s{:02}", i + 1), &mut edges);
        }
        let boundary: Vec<String> = self.boundary().into_iter().map(|(p, c)| self.name(p, c)).collect();
        let mut g = SignedGraph::new(vertices, edges)?;
        if suppressed_terminal && (g.degree(&x[terminals]) != Some(2) || g.degree(&y[terminals]) != Some(2)) {
            return Err(Error::Internal("the extra wall terminals are not divalent".into()));
        }
        loop {
            let next = g.vertices().iter().find(|v| g.degree(v.as_str()) == Some(2)).cloned();
            let Some(v) = next else { break };
            g = suppress_vertex(&g, v.as_str())?;
        }
        let g = canonical_edge_names(&g)?;
        let keep = |v: &String| g.has_vertex(v);
        labels.retain(|v, _| g.has_vertex(v.as_str()));
        let coordinates = WallCoordinates {
            labels,
            boundary: boundary.iter().filter(|v| keep(v)).map(VertexId::from).collect(),
            x: x[..terminals].iter().map(VertexId::from).collect(),
            y: y[..terminals].iter().map(VertexId::from).collect(),
        };
        check_wall(&g, &coordinates, terminals)?;
        Ok(Wall { graph: g, coordinates })
    }
}

/// Names every positive edge `u-v` and keeps the `sNN` names of the negative
/// ones.
fn canonical_edge_names(g: &SignedGraph) -> Result<SignedGraph> {
    let edges = g.edges().map(|e| {
        if e.sign.is_negative() {
            e
        } else {
            let id = format!("{}-{}", e.u, e.v);
            Edge::new(id, e.u, e.v, e.sign)
        }
    });
    SignedGraph::new(g.vertices().iter().cloned(), edges)
        .map_err(|e| Error::Internal(format!("wall edge naming collided: {e}")))
}

fn check_wall(g: &SignedGraph, c: &WallCoordinates, k: usize) -> Result<()> {
    let fail = |what: String| Err(Error::Internal(format!("wall self-check failed: {what}")));
    if !g.is_cubic() {
        let bad: Vec<_> = g.vertices().iter().filter(|v| g.degree(v.as_str()) != Some(3)).collect();
        return fail(format!("not cubic at {bad:?}"));
    }
    if g.signature().len() != k {
        return fail(format!("{} negative edges, expected {k}", g.signature().len()));
    }
    if c.x.iter().chain(&c.y).any(|v| !c.boundary.contains(v)) {
        return fail("a terminal is off the boundary".into());
    }
    let mut ends: Vec<&VertexId> = c.x.iter().chain(&c.y).collect();
    ends.sort();
    ends.dedup();
    if ends.len() != 2 * k {
        return fail("terminals are not distinct".into());
    }
    Ok(())
}

fn rows_for(width: usize, insets: &[(Side, usize, usize)], trim: impl Fn(usize) -> Option<usize>) -> Layout {
    let rows = insets
        .iter()
        .map(|&(side, index, inset)| {
            let mut verticals: Vec<usize> = (1 + inset..=width - inset).step_by(2).collect();
            if let Some(keep) = trim(index) {
                if verticals.len() > 2 * keep {
                    let tail = verticals.split_off(verticals.len() - keep);
                    verticals.truncate(keep);
                    verticals.extend(tail);
                }
            }
            RowSpec {
                side,
                index,
                inset,
                verticals,
            }
        })
        .collect();
    Layout { width, rows }
}

/// Rows from top to bottom for a wall with a single middle row `c`.
fn centred_rows(c: usize) -> Vec<(Side, usize, usize)> {
    (1..2 * c)
        .map(|r| {
            let d = r.abs_diff(c);
            let side = match r.cmp(&c) {
                std::cmp::Ordering::Less => Side::Top,
                std::cmp::Ordering::Equal => Side::Middle,
                std::cmp::Ordering::Greater => Side::Bottom,
            };
            (side, c - d, d)
        })
        .collect()
}

/// The wall `E_k` for even `k = 2t >= 4`.
///
/// The middle row has `k - 1` bricks and row `i` counted from the outside has
/// `t + i - 1`; a row with more than `4i` verticals keeps only its first and
/// last `2i`. Divalent vertices are suppressed, so the result is cubic.
pub fn generate_even_wall(k: usize) -> Result<Wall> {
    if k < 4 || !k.is_multiple_of(2) {
        return Err(Error::precondition(format!("even wall needs even k >= 4, got {k}")));
    }
    let t = k / 2;
    let layout = rows_for(2 * k - 1, &centred_rows(t), |i| (t + i > 4 * i).then_some(2 * i));
    layout.build(k, false)
}

/// The wall `E_k` for odd `k = 2t + 1 >= 3`.
///
/// The middle row has `2t` bricks and row `i` has `t + i - 1`; rows with more
/// than `4i - 2` verticals keep their first and last `2i - 1`. The wall has
/// `k + 1` paths; the extra terminals are divalent and suppressed with the
/// rest.
pub fn generate_odd_wall(k: usize) -> Result<Wall> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::precondition(format!("odd wall needs odd k >= 3, got {k}")));
    }
    let t = k / 2;
    let layout = rows_for(2 * k - 1, &centred_rows(t + 1), |i| (t + i > 4 * i - 2).then_some(2 * i - 1));
    layout.build(k, true)
}

/// The wall `E_k'` for odd `k = 2t + 1 >= 3`: a widest row of `2t` bricks with
/// `t - 1` narrowing rows above it and `t` narrowing rows below, `k` paths and
/// no trimming.
pub fn generate_wall_prime(k: usize) -> Result<Wall> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::precondition(format!("primed wall needs odd k >= 3, got {k}")));
    }
    let t = k / 2;
    let mut rows = Vec::new();
    for r in 1..=t {
        rows.push((Side::Top, r, t - r));
    }
    for j in 0..t {
        rows.push((Side::Bottom, t - j, 1 + j));
    }
    let layout = rows_for(4 * t + 1, &rows, |_| None);
    layout.build(k, false)
}
