//! Structural operations on critical signed graphs: disjoint negative
//! circuits and `S*`, decompositions, subdivision and suppression, edge-sums,
//! switching isomorphism, low-index classification and cyclic connectivity.

mod circuits;
mod classify;
mod connectivity;
mod decompose;
mod isomorphism;
mod sstar;
mod subdivision;
mod sums;

pub use circuits::{in_s_star, two_edge_disjoint_negative_circuits, DisjointCircuitWitness};
pub use classify::{classify_low_critical, Archetype, ClassificationResult};
pub use connectivity::{cyclic_edge_connectivity, DEFAULT_CYCLIC_CAP};
pub use decompose::{decompose_exhaustive, trivially_decomposable, DecomposeCaps, DecompositionWitness, TrivialSplit};
pub use isomorphism::{find_switch_isomorphism, switch_isomorphic, SwitchIsomorphism, DEFAULT_ISOMORPHISM_MAX_VERTICES};
pub use sstar::{verify_s_star_structure, SStarReport};
pub use subdivision::{irreducible, reduce_to_irreducible, subdivide_multiedge, suppress_vertex};
pub use sums::{edge_sum_2, edge_sum_3, edge_sum_3_with};
