//! Generators for the named families of critical signed graphs.
//!
//! Every generator is deterministic and names vertices and edges canonically,
//! so the same spec always serializes to the same bytes.

mod walls;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{cut, Edge, Signature, SignedGraph, SwitchSet};

pub use walls::{generate_even_wall, generate_odd_wall, generate_wall_prime, RowPath, Side, Wall, WallCoordinates, WallLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    NegLoops,
    PlusMinus,
    AntiComplete,
    AntiWheel,
    ProjectiveCube,
    EscherWall,
    EscherWallPrime,
    PetersenSigma1,
    PetersenSigma2,
    OctahedronAnti,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 10] = [
        FamilyKind::NegLoops,
        FamilyKind::PlusMinus,
        FamilyKind::AntiComplete,
        FamilyKind::AntiWheel,
        FamilyKind::ProjectiveCube,
        FamilyKind::EscherWall,
        FamilyKind::EscherWallPrime,
        FamilyKind::PetersenSigma1,
        FamilyKind::PetersenSigma2,
        FamilyKind::OctahedronAnti,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::NegLoops => "neg_loops",
            FamilyKind::PlusMinus => "plus_minus",
            FamilyKind::AntiComplete => "anti_complete",
            FamilyKind::AntiWheel => "anti_wheel",
            FamilyKind::ProjectiveCube => "projective_cube",
            FamilyKind::EscherWall => "escher_wall",
            FamilyKind::EscherWallPrime => "escher_wall_prime",
            FamilyKind::PetersenSigma1 => "petersen_sigma1",
            FamilyKind::PetersenSigma2 => "petersen_sigma2",
            FamilyKind::OctahedronAnti => "octahedron_anti",
        }
    }

    pub fn takes_parameter(self) -> bool {
        !matches!(
            self,
            FamilyKind::PetersenSigma1 | FamilyKind::PetersenSigma2 | FamilyKind::OctahedronAnti
        )
    }
}

impl std::fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::malformed(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub k: Option<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, k: usize) -> Self {
        FamilySpec { kind, k: Some(k) }
    }

    pub fn fixed(kind: FamilyKind) -> Self {
        FamilySpec { kind, k: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMeta {
    pub spec: FamilySpec,
    pub expected_index: usize,
    pub expected_critical: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Family {
    pub graph: SignedGraph,
    pub meta: FamilyMeta,
    pub wall: Option<WallCoordinates>,
}

fn range_err(spec: FamilySpec, need: &str) -> Error {
    Error::precondition(format!("{} needs {need}, got {:?}", spec.kind, spec.k))
}

/// Builds a member of a named family together with its expected index.
pub fn generate(spec: FamilySpec) -> Result<Family> {
    let need = |ok: fn(usize) -> bool, what: &str| match spec.k {
        Some(k) if ok(k) => Ok(k),
        _ => Err(range_err(spec, what)),
    };
    if !spec.kind.takes_parameter() && spec.k.is_some() {
        return Err(range_err(spec, "no parameter"));
    }
    let mut wall = None;
    let (graph, expected_index) = match spec.kind {
        FamilyKind::NegLoops => {
            let k = need(|k| k >= 1, "k >= 1")?;
            (neg_loops(k), k)
        }
        FamilyKind::PlusMinus => {
            let n = need(|n| n >= 2, "n >= 2")?;
            (plus_minus_cycle(n), n)
        }
        FamilyKind::AntiComplete => {
            let n = need(|n| n >= 3, "n >= 3")?;
            (anti_complete(n), (n - 1) * (n - 1) / 4)
        }
        FamilyKind::AntiWheel => {
            let k = need(|k| k >= 1, "k >= 1")?;
            (anti_wheel(k), k + 1)
        }
        FamilyKind::ProjectiveCube => {
            let k = need(|k| (1..=20).contains(&k), "1 <= k <= 20")?;
            (projective_cube(k), 1 << (k - 1))
        }
        FamilyKind::EscherWall => {
            let k = need(|k| k >= 3, "k >= 3")?;
            let w = if k % 2 == 0 { generate_even_wall(k)? } else { generate_odd_wall(k)? };
            wall = Some(w.coordinates);
            (w.graph, k)
        }
        FamilyKind::EscherWallPrime => {
            let k = need(|k| k >= 3 && k % 2 == 1, "odd k >= 3")?;
            let w = generate_wall_prime(k)?;
            wall = Some(w.coordinates);
            (w.graph, k)
        }
        FamilyKind::PetersenSigma1 => (petersen_sigma1(), 3),
        FamilyKind::PetersenSigma2 => (petersen_sigma2(), 3),
        FamilyKind::OctahedronAnti => (octahedron_anti(), 4),
    };
    Ok(Family {
        graph,
        meta: FamilyMeta {
            spec,
            expected_index,
            expected_critical: true,
        },
        wall,
    })
}

fn pair_id(a: &str, b: &str) -> String {
    if a <= b {
        format!("{a}-{b}")
    } else {
        format!("{b}-{a}")
    }
}

/// `-kC_1`: one vertex with `k` negative loops.
pub fn neg_loops(k: usize) -> SignedGraph {
    SignedGraph::new(["a"], (1..=k).map(|i| Edge::negative(format!("l{i}"), "a", "a"))).expect("well formed")
}

/// `±C_n`: every edge of the `n`-circuit doubled into a positive and a
/// negative copy.
pub fn plus_minus_cycle(n: usize) -> SignedGraph {
    let vs: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    let es = (0..n).flat_map(|i| {
        let (a, b) = (vs[i].clone(), vs[(i + 1) % n].clone());
        [
            Edge::positive(format!("p{i}"), a.clone(), b.clone()),
            Edge::negative(format!("n{i}"), a, b),
        ]
    });
    SignedGraph::new(vs.clone(), es.collect::<Vec<_>>()).expect("well formed")
}

/// `-K_n`.
pub fn anti_complete(n: usize) -> SignedGraph {
    let vs: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let es = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| Edge::negative(pair_id(&vs[i], &vs[j]), vs[i].clone(), vs[j].clone()))
        .collect::<Vec<_>>();
    SignedGraph::new(vs.clone(), es).expect("well formed")
}

/// `-W_{2k+1}`: hub `h` joined to every vertex of a `(2k+1)`-circuit, all
/// edges negative.
pub fn anti_wheel(k: usize) -> SignedGraph {
    let n = 2 * k + 1;
    let rim: Vec<String> = (0..n).map(|i| format!("r{i}")).collect();
    let mut es: Vec<Edge> = (0..n)
        .map(|i| Edge::negative(pair_id(&rim[i], &rim[(i + 1) % n]), rim[i].clone(), rim[(i + 1) % n].clone()))
        .collect();
    es.extend(rim.iter().map(|r| Edge::negative(pair_id("h", r), "h", r.clone())));
    SignedGraph::new(rim.iter().cloned().chain(["h".to_owned()]), es).expect("well formed")
}

fn cube_label(v: usize, k: usize) -> String {
    let bits: String = (0..k).map(|i| if v >> (k - 1 - i) & 1 == 1 { '1' } else { '0' }).collect();
    format!("v{bits}")
}

/// The signed projective cube of dimension `k`: labels are `k`-bit strings,
/// positive edges join labels at Hamming distance 1 and negative edges join
/// complementary labels (prefixed `x.`).
pub fn projective_cube(k: usize) -> SignedGraph {
    let n = 1usize << k;
    let full = n - 1;
    let vs: Vec<String> = (0..n).map(|v| cube_label(v, k)).collect();
    let mut es = Vec::new();
    for v in 0..n {
        for i in 0..k {
            let w = v ^ (1 << i);
            if v < w {
                es.push(Edge::positive(pair_id(&vs[v], &vs[w]), vs[v].clone(), vs[w].clone()));
            }
        }
        let w = v ^ full;
        if v < w {
            es.push(Edge::negative(format!("x.{}", pair_id(&vs[v], &vs[w])), vs[v].clone(), vs[w].clone()));
        }
    }
    SignedGraph::new(vs.clone(), es).expect("well formed")
}

/// `Σ` and `B_i = ∂(U_i) Δ Σ` for `U_i` the labels with bit `i` equal to 0;
/// `k + 1` pairwise disjoint signatures of size `2^(k-1)`.
pub fn projective_cube_disjoint_signatures(k: usize) -> Result<Vec<Signature>> {
    if !(1..=20).contains(&k) {
        return Err(Error::precondition(format!("projective cube needs 1 <= k <= 20, got {k}")));
    }
    let g = projective_cube(k);
    let sigma = g.signature();
    let mut out = vec![sigma.clone()];
    for i in 0..k {
        let u: SwitchSet = (0..1usize << k)
            .filter(|v| v >> (k - 1 - i) & 1 == 0)
            .map(|v| cube_label(v, k))
            .collect();
        let b: Signature = cut(&g, &u)?.into_iter().collect();
        out.push(b.symmetric_difference(&sigma));
    }
    let size = 1usize << (k - 1);
    for (a, s) in out.iter().enumerate() {
        if s.len() != size || out[..a].iter().any(|t| !t.is_disjoint(s)) {
            return Err(Error::Internal("projective cube signatures are not disjoint".into()));
        }
    }
    Ok(out)
}

/// The Petersen graph with outer circuit `o0..o4`, spokes `oi-ii` and inner
/// pentagram `ii-i(i+2)`; edges are named `a-b` with `a < b`.
pub fn petersen() -> SignedGraph {
    let mut es = Vec::new();
    for i in 0..5 {
        let pairs = [
            (format!("o{i}"), format!("o{}", (i + 1) % 5)),
            (format!("o{i}"), format!("i{i}")),
            (format!("i{i}"), format!("i{}", (i + 2) % 5)),
        ];
        es.extend(pairs.into_iter().map(|(a, b)| Edge::positive(pair_id(&a, &b), a, b)));
    }
    let vs = (0..5).flat_map(|i| [format!("o{i}"), format!("i{i}")]);
    SignedGraph::new(vs, es).expect("well formed")
}

fn petersen_with(negatives: [&str; 3]) -> SignedGraph {
    let s: Signature = negatives.into_iter().collect();
    petersen().with_signature(&s).expect("edges exist")
}

/// Petersen with a 3-signature that has two edge-disjoint negative circuits:
/// the first such 3-subset in canonical order that is 3-critical.
pub fn petersen_sigma1() -> SignedGraph {
    petersen_with(["i0-i2", "i1-o1", "o3-o4"])
}

/// Petersen with the 3-signature carried by the primed wall of size 3.
pub fn petersen_sigma2() -> SignedGraph {
    petersen_with(["i1-o1", "i3-o3", "o0-o4"])
}

/// The octahedron with every edge negative; vertices `v0..v5`, with `v(2i)`
/// and `v(2i+1)` opposite.
pub fn octahedron_anti() -> SignedGraph {
    let vs: Vec<String> = (0..6).map(|i| format!("v{i}")).collect();
    let es = (0..6)
        .flat_map(|i| (i + 1..6).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i % 2 == 0 && j == i + 1))
        .map(|(i, j)| Edge::negative(pair_id(&vs[i], &vs[j]), vs[i].clone(), vs[j].clone()))
        .collect::<Vec<_>>();
    SignedGraph::new(vs.clone(), es).expect("well formed")
}
