use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::balance::{circuit_is_negative, for_each_circuit, potentials};
use crate::criticality::{is_critical, CriticalityMethod};
use crate::error::{Error, Result};
use crate::frustration::SolveOptions;
use crate::model::{EdgeId, SignedGraph};

/// Two edge-disjoint negative circuits, each as a sorted edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisjointCircuitWitness {
    pub first: Vec<EdgeId>,
    pub second: Vec<EdgeId>,
}

/// Looks for a negative circuit `C` with `G - E(C)` still unbalanced; the
/// negative circuit left behind is the second half of the witness. Circuits
/// are visited lazily and at most `cap` negative ones are tried.
pub fn two_edge_disjoint_negative_circuits(g: &SignedGraph, cap: usize) -> Result<Option<DisjointCircuitWitness>> {
    if cap == 0 {
        return Err(Error::precondition("circuit cap must be at least 1"));
    }
    let mut tried = 0usize;
    let mut found = None;
    let mut over_cap = false;
    let _ = for_each_circuit(g, |c| {
        if !circuit_is_negative(g, c) {
            return ControlFlow::Continue(());
        }
        if tried == cap {
            over_cap = true;
            return ControlFlow::Break(());
        }
        tried += 1;
        let mut alive = vec![true; g.edge_count()];
        for &e in c {
            alive[e] = false;
        }
        if let Err(other) = potentials(g, Some(&alive)) {
            found = Some((c.to_vec(), other));
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    if over_cap {
        return Err(Error::budget("negative circuit enumeration", cap as u64));
    }
    Ok(found.map(|(a, b)| {
        let ids = |mut v: Vec<usize>| {
            v.sort_unstable();
            v.into_iter().map(|e| g.edge_id_at(e).clone()).collect()
        };
        DisjointCircuitWitness {
            first: ids(a),
            second: ids(b),
        }
    }))
}

/// Membership in `S*` for a critical graph: no two edge-disjoint negative
/// circuits.
pub fn in_s_star(g: &SignedGraph, opts: &SolveOptions, cap: usize) -> Result<bool> {
    let r = is_critical(g, CriticalityMethod::Auto, opts)?;
    if !r.certified || !r.critical {
        return Err(Error::precondition("membership in S* is defined for critical graphs only"));
    }
    Ok(two_edge_disjoint_negative_circuits(g, cap)?.is_none())
}
