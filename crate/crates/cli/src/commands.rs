use std::collections::BTreeSet;
use std::path::Path;

use serde_json::json;
use sgcrit::balance::{is_balanced, BalanceCertificate};
use sgcrit::certify::{
    check_disjoint_circuits, check_equilibrated_cut, check_minimum_signature, check_negative_circuit, check_switch,
};
use sgcrit::criticality::{equilibrated_cut_for_edge, is_critical, CriticalityMethod};
use sgcrit::families::{generate, FamilyKind, FamilySpec};
use sgcrit::frustration::{all_min_signatures, certified_frustration, Method, SolveOptions, DEFAULT_SIGNATURE_CAP};
use sgcrit::structure::{
    classify_low_critical, decompose_exhaustive, reduce_to_irreducible, suppress_vertex, trivially_decomposable,
    verify_s_star_structure, DecomposeCaps, DEFAULT_CYCLIC_CAP,
};
use sgcrit::{EdgeId, Signature, SignedGraph};

use crate::report::{read_graph, render_graph, write_graph, Failure, Report, Verdict};

type Outcome = Result<Report, Failure>;

fn budget_failure(what: &str) -> Failure {
    Failure {
        kind: "budget",
        message: format!("budget exceeded: {what} did not finish within the time budget"),
        detail: json!({ "what": what }),
    }
}

pub fn gen(family: FamilyKind, k: Option<usize>, output: Option<&Path>) -> Outcome {
    let fam = generate(FamilySpec { kind: family, k })?;
    let g = &fam.graph;
    let mut r = Report::new("gen", None);
    r.result = json!({
        "family": family,
        "k": k,
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "negative_edges": g.signature().len(),
        "expected_index": fam.meta.expected_index,
        "expected_critical": fam.meta.expected_critical,
        "output": output,
        "graph": output.is_none().then(|| sgcrit::io::GraphDocument::from(g)),
    });
    match output {
        Some(path) => {
            write_graph(g, path)?;
            r.line(format_args!(
                "wrote {}: {} vertices, {} edges, expected index {}",
                path.display(),
                g.vertex_count(),
                g.edge_count(),
                fam.meta.expected_index
            ));
        }
        None => r.payload = Some(render_graph(g, None)),
    }
    Ok(r)
}

pub fn frustration(path: &Path, all: bool, method: Method, opts: &SolveOptions) -> Outcome {
    let (g, input) = read_graph(path)?;
    let opts = SolveOptions { method, ..opts.clone() };
    let res = certified_frustration(&g, &opts)?;
    check_minimum_signature(&g, &res.witness, res.index)?;
    let mut r = Report::new("frustration", Some(input));
    r.line(format_args!("index {}", res.index));
    r.line(format_args!("witness {}", res.witness));
    let sigs = if all {
        let sigs = all_min_signatures(&g, DEFAULT_SIGNATURE_CAP)?;
        for s in &sigs {
            check_minimum_signature(&g, s, res.index)?;
        }
        r.line(format_args!("{} minimum signatures", sigs.len()));
        for s in &sigs {
            r.line(format_args!("  {s}"));
        }
        Some(sigs)
    } else {
        None
    };
    r.result = json!({
        "index": res.index,
        "witness": res.witness,
        "method": method,
        "all_signatures": sigs,
        "stats": res.stats,
    });
    Ok(r)
}

pub fn balance(path: &Path) -> Outcome {
    let (g, input) = read_graph(path)?;
    let cert = is_balanced(&g);
    let mut r = Report::new("balance", Some(input));
    match &cert {
        BalanceCertificate::Balanced { switch_set } => {
            check_switch(&g, switch_set, &Signature::new())?;
            r.line(format_args!("balanced"));
            r.line(format_args!("switch set {switch_set}"));
        }
        BalanceCertificate::Unbalanced { circuit } => {
            check_negative_circuit(&g, circuit)?;
            r.verdict = Verdict::Fail;
            r.line(format_args!("unbalanced"));
            r.line(format_args!("negative circuit {}", circuit.iter().map(EdgeId::as_str).collect::<Vec<_>>().join(" ")));
        }
    }
    r.result = serde_json::to_value(&cert).expect("certificates serialize");
    Ok(r)
}

pub fn critical(path: &Path, method: CriticalityMethod, cuts: bool, opts: &SolveOptions) -> Outcome {
    let (g, input) = read_graph(path)?;
    let rep = is_critical(&g, method, opts)?;
    if !rep.certified {
        return Err(budget_failure("criticality check"));
    }
    for s in rep.per_edge.values() {
        check_minimum_signature(&g, s, rep.index)?;
    }
    let mut r = Report::new("critical", Some(input));
    r.line(format_args!("index {}", rep.index));
    let mut cut_list = Vec::new();
    if rep.critical {
        r.line(format_args!("{}-critical", rep.index));
        if cuts {
            let gamma = certified_frustration(&g, opts)?.witness;
            r.line(format_args!("equilibrated cuts for {gamma}"));
            for e in g.edge_ids().iter().filter(|e| !gamma.contains(e.as_str())) {
                let w = equilibrated_cut_for_edge(&g, &gamma, e, opts)?
                    .ok_or_else(|| sgcrit::Error::Internal(format!("no equilibrated cut through `{e}`")))?;
                check_equilibrated_cut(&g, &gamma, &w)?;
                r.line(format_args!("  {e}: U = {} ({} edges)", w.switch_set, w.summary.total));
                cut_list.push(w);
            }
        }
    } else {
        r.verdict = Verdict::Fail;
        match &rep.failing_edge {
            Some(e) => r.line(format_args!("not critical: deleting {e} keeps the index")),
            None => r.line(format_args!("not critical: the graph is balanced")),
        }
    }
    r.result = json!({
        "index": rep.index,
        "critical": rep.critical,
        "failing_edge": rep.failing_edge,
        "method": rep.method,
        "per_edge": rep.per_edge,
        "cuts": cuts.then_some(cut_list),
    });
    Ok(r)
}

fn s_star_report(
    g: &SignedGraph,
    r: &mut Report,
    opts: &SolveOptions,
    circuit_cap: usize,
    vertex_cap: usize,
) -> Result<bool, Failure> {
    let s = verify_s_star_structure(g, opts, circuit_cap, vertex_cap)?;
    if let Some(w) = &s.disjoint_circuits {
        check_disjoint_circuits(g, w)?;
    }
    let mark = |b: bool| if b { "yes" } else { "no" };
    r.line(format_args!("index {}", s.index));
    r.line(format_args!("critical {}", mark(s.critical)));
    r.line(format_args!("irreducible {}", mark(s.irreducible)));
    r.line(format_args!("cubic {}", mark(s.cubic)));
    match s.cyclic_edge_connectivity {
        Some(c) => r.line(format_args!("cyclic edge connectivity {c}")),
        None => r.line(format_args!("cyclic edge connectivity not computed")),
    }
    match &s.disjoint_circuits {
        Some(w) => {
            let show = |c: &[EdgeId]| c.iter().map(EdgeId::as_str).collect::<Vec<_>>().join(" ");
            r.line(format_args!("edge-disjoint negative circuits:"));
            r.line(format_args!("  {}", show(&w.first)));
            r.line(format_args!("  {}", show(&w.second)));
        }
        None => r.line(format_args!("no two edge-disjoint negative circuits")),
    }
    let ok = s.applicable() && s.passed();
    r.result = json!({
        "report": s,
        "applicable": s.applicable(),
        "passed": s.passed(),
    });
    Ok(ok)
}

pub fn sstar(path: &Path, circuit_cap: usize, opts: &SolveOptions) -> Outcome {
    let (g, input) = read_graph(path)?;
    let mut r = Report::new("sstar", Some(input));
    if !s_star_report(&g, &mut r, opts, circuit_cap, DEFAULT_CYCLIC_CAP)? {
        r.verdict = Verdict::Fail;
    }
    Ok(r)
}

pub fn verify_wall(path: &Path, circuit_cap: usize, opts: &SolveOptions) -> Outcome {
    let (g, input) = read_graph(path)?;
    let mut r = Report::new("verify-wall", Some(input));
    let sigma = g.signature();
    let ends: Vec<_> = sigma
        .iter()
        .flat_map(|e| {
            let e = g.edge(e.as_str()).expect("signature edges exist");
            [e.u, e.v]
        })
        .collect();
    let matching = ends.iter().collect::<BTreeSet<_>>().len() == ends.len();
    let structure = s_star_report(&g, &mut r, opts, circuit_cap, DEFAULT_CYCLIC_CAP)?;
    let index = r.result["report"]["index"].as_u64().expect("index") as usize;
    r.line(format_args!("{} negative edges, {}", sigma.len(), if matching { "a matching" } else { "not a matching" }));
    let ok = structure && matching && index == sigma.len();
    if !ok {
        r.verdict = Verdict::Fail;
    }
    r.result["negative_edges"] = json!(sigma.len());
    r.result["matching"] = json!(matching);
    Ok(r)
}

pub fn classify(path: &Path, opts: &SolveOptions) -> Outcome {
    let (g, input) = read_graph(path)?;
    let c = classify_low_critical(&g, opts)?;
    // replay the suppressions
    let mut cur = g.without_isolated_vertices();
    for v in &c.suppressions {
        cur = suppress_vertex(&cur, v.as_str())?;
    }
    if cur != c.reduced {
        return Err(sgcrit::Error::Certificate("suppression sequence does not reproduce the reduced graph".into()).into());
    }
    let mut r = Report::new("classify", Some(input));
    r.line(format_args!("index {}", c.index));
    r.line(format_args!("subdivision of {}", c.archetype));
    r.line(format_args!("{} suppressions", c.suppressions.len()));
    r.result = serde_json::to_value(&c).expect("results serialize");
    Ok(r)
}

pub fn decompose(path: &Path, caps: DecomposeCaps, opts: &SolveOptions) -> Outcome {
    let (g, input) = read_graph(path)?;
    let crit = is_critical(&g, CriticalityMethod::Auto, opts)?;
    if !crit.certified {
        return Err(budget_failure("criticality check"));
    }
    if !crit.critical {
        return Err(sgcrit::Error::Precondition("decomposition is defined for critical graphs only".into()).into());
    }
    let trivial = trivially_decomposable(&g, opts)?;
    let w = decompose_exhaustive(&g, caps, opts)?;
    let mut r = Report::new("decompose", Some(input));
    r.line(format_args!("index {}", crit.index));
    if let Some(t) = &trivial {
        let part: Signature = t.part.iter().cloned().collect();
        r.line(format_args!("trivial split {part} + index {}", t.rest_index));
    }
    match &w {
        Some(w) => {
            let mut seen = BTreeSet::new();
            for p in &w.parts {
                for e in p {
                    if !seen.insert(e) {
                        return Err(sgcrit::Error::Certificate(format!("edge `{e}` in two parts")).into());
                    }
                }
            }
            if seen.len() != g.edge_count() || w.indices.iter().sum::<usize>() != crit.index {
                return Err(sgcrit::Error::Certificate("parts do not cover the graph with the right indices".into()).into());
            }
            r.line(format_args!("decomposable into {} parts", w.parts.len()));
            for (p, k) in w.parts.iter().zip(&w.indices) {
                let part: Signature = p.iter().cloned().collect();
                r.line(format_args!("  index {k}: {part}"));
            }
        }
        None => r.line(format_args!("not decomposable")),
    }
    r.result = json!({
        "index": crit.index,
        "decomposable": w.is_some(),
        "trivial": trivial,
        "witness": w,
    });
    Ok(r)
}

pub fn reduce(path: &Path, output: Option<&Path>, opts: &SolveOptions) -> Outcome {
    let (g, input) = read_graph(path)?;
    let h = reduce_to_irreducible(&g);
    let before = is_critical(&g, CriticalityMethod::Auto, opts)?;
    let after = is_critical(&h, CriticalityMethod::Auto, opts)?;
    if !before.certified || !after.certified {
        return Err(budget_failure("index check"));
    }
    if (before.index, before.critical) != (after.index, after.critical) {
        return Err(sgcrit::Error::Internal("reduction changed the index or criticality".into()).into());
    }
    let mut r = Report::new("reduce", Some(input));
    r.result = json!({
        "index": after.index,
        "critical": after.critical,
        "vertices": h.vertex_count(),
        "edges": h.edge_count(),
        "output": output,
        "graph": output.is_none().then(|| sgcrit::io::GraphDocument::from(&h)),
    });
    match output {
        Some(p) => {
            write_graph(&h, p)?;
            r.line(format_args!(
                "wrote {}: {} vertices, {} edges, index {}",
                p.display(),
                h.vertex_count(),
                h.edge_count(),
                after.index
            ));
        }
        None => r.payload = Some(render_graph(&h, None)),
    }
    Ok(r)
}
