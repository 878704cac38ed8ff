use serde::{Deserialize, Serialize};

use super::circuits::{two_edge_disjoint_negative_circuits, DisjointCircuitWitness};
use super::connectivity::cyclic_edge_connectivity;
use super::subdivision::irreducible;
use crate::criticality::{is_critical, CriticalityMethod};
use crate::error::Result;
use crate::frustration::SolveOptions;
use crate::model::SignedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SStarReport {
    pub index: usize,
    pub critical: bool,
    pub irreducible: bool,
    pub cubic: bool,
    /// Computed only for cubic graphs.
    pub cyclic_edge_connectivity: Option<usize>,
    pub disjoint_circuits: Option<DisjointCircuitWitness>,
}

impl SStarReport {
    /// Whether the preconditions hold: irreducible, critical, index at least 3.
    pub fn applicable(&self) -> bool {
        self.critical && self.irreducible && self.index >= 3
    }

    /// The three checks: cubic, cyclically 4-edge-connected, and no two
    /// edge-disjoint negative circuits.
    pub fn passed(&self) -> bool {
        self.cubic && self.cyclic_edge_connectivity.is_some_and(|c| c >= 4) && self.disjoint_circuits.is_none()
    }
}

/// Runs every check and reports each one; preconditions are reported rather
/// than enforced.
pub fn verify_s_star_structure(
    g: &SignedGraph,
    opts: &SolveOptions,
    circuit_cap: usize,
    vertex_cap: usize,
) -> Result<SStarReport> {
    let crit = is_critical(g, CriticalityMethod::Auto, opts)?;
    let cubic = g.is_cubic();
    let cyclic = if cubic { Some(cyclic_edge_connectivity(g, vertex_cap)?) } else { None };
    Ok(SStarReport {
        index: crit.index,
        critical: crit.critical && crit.certified,
        irreducible: irreducible(g),
        cubic,
        cyclic_edge_connectivity: cyclic,
        disjoint_circuits: two_edge_disjoint_negative_circuits(g, circuit_cap)?,
    })
}
