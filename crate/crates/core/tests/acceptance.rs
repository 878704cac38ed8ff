//! Acceptance gate: exact indices for the named families plus randomized
//! property suites. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails or overruns its time limit.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use anyhow::{bail, ensure, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sgcrit::certify::{check_disjoint_circuits, check_equilibrated_cut, check_minimum_signature};
use sgcrit::criticality::{equilibrated_cut_for_edge, extract_critical_subgraph, is_critical, CriticalityMethod};
use sgcrit::families::{
    anti_complete, anti_wheel, generate, octahedron_anti, petersen_sigma1, petersen_sigma2, projective_cube,
    projective_cube_disjoint_signatures, FamilyKind, FamilySpec,
};
use sgcrit::frustration::{
    all_min_signatures, certified_frustration, frustration_bnb, frustration_deletion_oracle, frustration_switch_enum,
    Method, SolveOptions,
};
use sgcrit::structure::{
    classify_low_critical, cyclic_edge_connectivity, in_s_star, subdivide_multiedge, switch_isomorphic,
    two_edge_disjoint_negative_circuits,
};
use sgcrit::{Edge, Sign, Signature, SignedGraph, SwitchSet};

const CIRCUIT_CAP: usize = 1_000_000;
const INSTANCES: usize = 100;

fn enum_opts() -> SolveOptions {
    SolveOptions::with_method(Method::Enum)
}

fn index(g: &SignedGraph) -> Result<usize> {
    Ok(certified_frustration(g, &SolveOptions::default())?.index)
}

fn expect_critical(g: &SignedGraph, opts: &SolveOptions, k: usize, method: CriticalityMethod) -> Result<()> {
    let r = is_critical(g, method, opts)?;
    ensure!(r.certified, "criticality verdict not certified");
    ensure!(r.index == k, "index {} != {k}", r.index);
    ensure!(r.critical, "not critical, edge {:?} is redundant", r.failing_edge);
    Ok(())
}

fn perfect_matchings_k4(g: &SignedGraph) -> BTreeSet<Signature> {
    let edges: Vec<Edge> = g.edges().collect();
    let mut out = BTreeSet::new();
    for (i, a) in edges.iter().enumerate() {
        for b in &edges[i + 1..] {
            let vs: BTreeSet<_> = [&a.u, &a.v, &b.u, &b.v].into_iter().collect();
            if vs.len() == 4 {
                out.insert([a.id.clone(), b.id.clone()].into_iter().collect());
            }
        }
    }
    out
}

fn criterion_1() -> Result<()> {
    let g = anti_complete(4);
    ensure!(frustration_deletion_oracle(&g, 20)? == 2);
    expect_critical(&g, &enum_opts(), 2, CriticalityMethod::Union)?;
    expect_critical(&g, &enum_opts(), 2, CriticalityMethod::PerEdge)?;
    let sigs: BTreeSet<Signature> = all_min_signatures(&g, 100)?.into_iter().collect();
    let matchings = perfect_matchings_k4(&g);
    ensure!(matchings.len() == 3);
    ensure!(sigs == matchings, "minimum signatures {sigs:?}");
    Ok(())
}

fn criterion_2() -> Result<()> {
    for n in 4..=7 {
        let want = (n - 1) * (n - 1) / 4;
        let g = anti_complete(n);
        ensure!(index(&g)? == want, "-K{n}");
        expect_critical(&g, &SolveOptions::default(), want, CriticalityMethod::Auto).with_context(|| format!("-K{n}"))?;
    }
    Ok(())
}

fn criterion_3() -> Result<()> {
    for k in 1..=4 {
        let g = anti_wheel(k);
        ensure!(g.vertex_count() == 2 * k + 2);
        ensure!(index(&g)? == k + 1, "-W{}", 2 * k + 1);
        expect_critical(&g, &SolveOptions::default(), k + 1, CriticalityMethod::Auto)
            .with_context(|| format!("-W{}", 2 * k + 1))?;
    }
    Ok(())
}

fn criterion_4() -> Result<()> {
    for k in 2..=4 {
        let g = projective_cube(k);
        let want = 1 << (k - 1);
        let r = frustration_switch_enum(&g, false)?;
        ensure!(r.index == want, "k={k}: index {}", r.index);
        let sigs = projective_cube_disjoint_signatures(k)?;
        ensure!(sigs.len() == k + 1);
        ensure!(sigs[0] == g.signature());
        for (i, s) in sigs.iter().enumerate() {
            check_minimum_signature(&g, s, want)?;
            for t in &sigs[..i] {
                ensure!(s.is_disjoint(t), "k={k}: signatures overlap");
            }
        }
        if k <= 3 {
            let all: BTreeSet<Signature> = all_min_signatures(&g, 10_000)?.into_iter().collect();
            ensure!(sigs.iter().all(|s| all.contains(s)));
        }
    }
    Ok(())
}

fn criterion_5() -> Result<()> {
    let opts = SolveOptions::default();
    let (s1, s2) = (petersen_sigma1(), petersen_sigma2());
    for g in [&s1, &s2] {
        expect_critical(g, &opts, 3, CriticalityMethod::Auto)?;
    }
    ensure!(in_s_star(&s2, &opts, CIRCUIT_CAP)?);
    ensure!(!in_s_star(&s1, &opts, CIRCUIT_CAP)?);
    let w = two_edge_disjoint_negative_circuits(&s1, CIRCUIT_CAP)?.context("no witness for Σ1")?;
    check_disjoint_circuits(&s1, &w)?;
    Ok(())
}

fn criterion_6() -> Result<()> {
    let g = octahedron_anti();
    ensure!(index(&g)? == 4);
    expect_critical(&g, &SolveOptions::default(), 4, CriticalityMethod::Union)?;
    let sigs = all_min_signatures(&g, 10_000)?;
    for (i, a) in sigs.iter().enumerate() {
        for (j, b) in sigs.iter().enumerate().skip(i + 1) {
            if !a.is_disjoint(b) {
                continue;
            }
            if let Some(c) = sigs[j + 1..].iter().find(|c| c.is_disjoint(a) && c.is_disjoint(b)) {
                for s in [a, b, c] {
                    check_minimum_signature(&g, s, 4)?;
                }
                return Ok(());
            }
        }
    }
    bail!("no three pairwise disjoint minimum signatures among {}", sigs.len())
}

fn check_wall(k: usize, opts: &SolveOptions) -> Result<SignedGraph> {
    let fam = generate(FamilySpec::new(FamilyKind::EscherWall, k))?;
    let g = fam.graph;
    let r = certified_frustration(&g, opts)?;
    ensure!(r.index == k, "E{k}: index {}", r.index);
    expect_critical(&g, opts, k, CriticalityMethod::PerEdge).with_context(|| format!("E{k}"))?;
    ensure!(g.is_cubic(), "E{k} not cubic");
    let c = cyclic_edge_connectivity(&g, 40)?;
    ensure!(c >= 4, "E{k}: cyclic edge connectivity {c}");
    ensure!(two_edge_disjoint_negative_circuits(&g, CIRCUIT_CAP)?.is_none(), "E{k} has disjoint negative circuits");
    Ok(g)
}

fn criterion_7() -> Result<()> {
    let e3 = check_wall(3, &enum_opts())?;
    check_wall(4, &SolveOptions::with_method(Method::Bnb))?;
    let bnb = frustration_bnb(&generate(FamilySpec::new(FamilyKind::EscherWall, 4))?.graph, None);
    ensure!(bnb.certified && bnb.index == 4);
    let e3p = generate(FamilySpec::new(FamilyKind::EscherWallPrime, 3))?.graph;
    ensure!(frustration_switch_enum(&e3p, false)?.index == 3);
    let pet = petersen_sigma2();
    ensure!(switch_isomorphic(&e3p, &pet)?, "E3' is not switching-isomorphic to Petersen Σ2");
    ensure!(!switch_isomorphic(&e3, &pet)?, "E3 is switching-isomorphic to Petersen Σ2");
    Ok(())
}

/// Random signed multigraph with loops, at most 8 vertices and 14 edges.
fn random_graph(rng: &mut ChaCha8Rng) -> SignedGraph {
    let n = rng.gen_range(1..=8);
    let m = rng.gen_range(0..=14);
    let vs: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let es = (0..m).map(|i| {
        let a = rng.gen_range(0..n);
        let b = if rng.gen_bool(0.1) { a } else { rng.gen_range(0..n) };
        let s = if rng.gen_bool(0.5) { Sign::Negative } else { Sign::Positive };
        Edge::new(format!("e{i:02}"), vs[a].clone(), vs[b].clone(), s)
    });
    SignedGraph::new(vs.clone(), es.collect::<Vec<_>>()).expect("well formed")
}

fn random_switch(g: &SignedGraph, rng: &mut ChaCha8Rng) -> SwitchSet {
    g.vertices().iter().filter(|_| rng.gen_bool(0.5)).cloned().collect()
}

/// Random critical graphs, obtained by extraction from random graphs.
fn random_critical(rng: &mut ChaCha8Rng, max_index: usize) -> Result<SignedGraph> {
    loop {
        let g = random_graph(rng);
        let l = index(&g)?;
        if l == 0 {
            continue;
        }
        let m = rng.gen_range(1..=l.min(max_index));
        return Ok(extract_critical_subgraph(&g, m, &SolveOptions::default())?);
    }
}

fn suite_a(rng: &mut ChaCha8Rng) -> Result<()> {
    for _ in 0..INSTANCES {
        let g = random_graph(rng);
        let o = frustration_deletion_oracle(&g, 20)?;
        let e = frustration_switch_enum(&g, false)?;
        let b = frustration_bnb(&g, None);
        ensure!(b.certified);
        ensure!(o == e.index && e.index == b.index, "oracle {o}, enum {}, bnb {}", e.index, b.index);
        check_minimum_signature(&g, &e.witness, o)?;
        check_minimum_signature(&g, &b.witness, o)?;
    }
    Ok(())
}

fn suite_b(rng: &mut ChaCha8Rng) -> Result<()> {
    for _ in 0..INSTANCES {
        let g = random_graph(rng);
        let u = random_switch(&g, rng);
        let h = g.with_signature(&sgcrit::switch(&g, &g.signature(), &u)?)?;
        ensure!(index(&g)? == index(&h)?);
    }
    Ok(())
}

fn suite_c(rng: &mut ChaCha8Rng) -> Result<()> {
    for _ in 0..INSTANCES {
        let g = random_graph(rng);
        let l = index(&g)?;
        for e in g.edge_ids() {
            let le = index(&g.remove_edge(e)?)?;
            ensure!(le == l || le + 1 == l, "l = {l}, l(G - {e}) = {le}");
        }
    }
    Ok(())
}

fn suite_d(rng: &mut ChaCha8Rng) -> Result<()> {
    for _ in 0..INSTANCES {
        let g = random_graph(rng);
        let vs = g.vertices().to_vec();
        for gamma in all_min_signatures(&g, 100_000)? {
            for mask in 0u32..1 << vs.len() {
                let u: SwitchSet = vs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, v)| v.clone()).collect();
                let (mut neg, mut pos) = (0, 0);
                for e in g.edges().filter(|e| u.contains(e.u.as_str()) != u.contains(e.v.as_str())) {
                    if gamma.contains(e.id.as_str()) {
                        neg += 1;
                    } else {
                        pos += 1;
                    }
                }
                ensure!(neg <= pos, "cut with {neg} signature edges and {pos} others");
            }
        }
    }
    Ok(())
}

fn suite_e(rng: &mut ChaCha8Rng) -> Result<()> {
    let opts = enum_opts();
    let mut critical_seen = 0;
    for i in 0..2 * INSTANCES {
        let g = if i % 2 == 0 { random_graph(rng) } else { random_critical(rng, usize::MAX)? };
        let a = is_critical(&g, CriticalityMethod::PerEdge, &opts)?;
        let b = is_critical(&g, CriticalityMethod::Union, &opts)?;
        ensure!(a.critical == b.critical && a.index == b.index, "verdicts differ");
        if !a.critical {
            continue;
        }
        critical_seen += 1;
        let gamma = certified_frustration(&g, &opts)?.witness;
        for e in g.edge_ids().iter().filter(|e| !gamma.contains(e.as_str())) {
            let w = equilibrated_cut_for_edge(&g, &gamma, e, &opts)?.with_context(|| format!("no cut through {e}"))?;
            check_equilibrated_cut(&g, &gamma, &w)?;
        }
    }
    ensure!(critical_seen >= INSTANCES, "only {critical_seen} critical instances");
    Ok(())
}

fn suite_f(rng: &mut ChaCha8Rng) -> Result<()> {
    let opts = SolveOptions::default();
    let mut done = 0;
    while done < INSTANCES {
        let g = random_critical(rng, usize::MAX)?;
        let l = index(&g)?;
        let e = &g.edge_ids()[rng.gen_range(0..g.edge_count())];
        let edge = g.edge(e.as_str()).expect("edge");
        let Ok((h, _)) = subdivide_multiedge(&g, edge.u.as_str(), edge.v.as_str()) else { continue };
        ensure!(index(&h)? == l, "subdivision changed the index");
        expect_critical(&h, &opts, l, CriticalityMethod::Auto)?;
        done += 1;
    }
    Ok(())
}

fn suite_g(rng: &mut ChaCha8Rng) -> Result<()> {
    let opts = SolveOptions::default();
    let mut done = 0;
    while done < INSTANCES {
        let g = random_graph(rng);
        let l = index(&g)?;
        if l == 0 {
            continue;
        }
        for m in 1..=l {
            let h = extract_critical_subgraph(&g, m, &opts)?;
            for e in h.edge_ids() {
                ensure!(g.edge(e.as_str()) == h.edge(e.as_str()), "{e} is not an edge of the input");
            }
            expect_critical(&h, &enum_opts(), m, CriticalityMethod::Union)?;
        }
        done += 1;
    }
    Ok(())
}

fn suite_h(rng: &mut ChaCha8Rng) -> Result<()> {
    let opts = SolveOptions::default();
    for _ in 0..INSTANCES {
        let g = random_critical(rng, 2)?;
        let c = classify_low_critical(&g, &opts)?;
        ensure!(c.index == index(&g)?);
        ensure!(switch_isomorphic(&c.reduced, &c.archetype.graph())?);
    }
    Ok(())
}

fn criterion_8() -> Result<()> {
    type Suite = fn(&mut ChaCha8Rng) -> Result<()>;
    let suites: [(&str, Suite); 8] = [
        ("a: solvers agree", suite_a),
        ("b: switching invariance", suite_b),
        ("c: deletion drops the index by at most one", suite_c),
        ("d: minimum signatures never exceed half a cut", suite_d),
        ("e: criticality verdicts agree, equilibrated cuts", suite_e),
        ("f: subdivision preserves index and criticality", suite_f),
        ("g: critical subgraph extraction", suite_g),
        ("h: low-index classification", suite_h),
    ];
    for (seed, (name, suite)) in suites.into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + seed as u64);
        suite(&mut rng).with_context(|| format!("suite {name}"))?;
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Result<()>, u64);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1  -K4 index, criticality and minimum signatures", criterion_1, 1),
        ("2  -Kn for n = 4..7", criterion_2, 10),
        ("3  odd antibalanced wheels", criterion_3, 10),
        ("4  projective cubes and disjoint signatures", criterion_4, 30),
        ("5  Petersen fixtures and S*", criterion_5, 5),
        ("6  antibalanced octahedron", criterion_6, 5),
        ("7  Escher walls E3, E4 and E3'", criterion_7, 60),
        ("8  property suites", criterion_8, 300),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(Ok(())) if elapsed <= Duration::from_secs(limit) => Ok(()),
            Ok(Ok(())) => Err(format!("took longer than {limit} s")),
            Ok(Err(e)) => Err(format!("{e:#}")),
            Err(_) => Err("panicked".to_owned()),
        };
        match verdict {
            Ok(()) => println!("PASS {name} ({:.2} s, limit {limit} s)", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} ({:.2} s, limit {limit} s): {why}", elapsed.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
