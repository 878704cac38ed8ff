use itertools::Itertools;

use crate::balance::is_balanced_masked;
use crate::error::{Error, Result};
use crate::model::{Signature, SignedGraph};

pub const DEFAULT_ORACLE_MAX_EDGES: usize = 20;

/// Smallest edge set whose deletion leaves a balanced graph, by trying all
/// subsets in order of size. Used as an independent check on the solvers.
pub fn frustration_deletion_oracle(g: &SignedGraph, cap_edges: usize) -> Result<usize> {
    minimum_deletion_set(g, cap_edges).map(|s| s.len())
}

pub(crate) fn minimum_deletion_set(g: &SignedGraph, cap_edges: usize) -> Result<Signature> {
    let m = g.edge_count();
    if m > cap_edges {
        return Err(Error::budget(format!("deletion oracle on {m} edges"), cap_edges as u64));
    }
    let mut alive = vec![true; m];
    for size in 0..=m {
        for del in (0..m).combinations(size) {
            for &e in &del {
                alive[e] = false;
            }
            let ok = is_balanced_masked(g, &alive);
            for &e in &del {
                alive[e] = true;
            }
            if ok {
                return Ok(Signature::from_indices(g, del));
            }
        }
    }
    unreachable!("deleting every edge leaves a balanced graph")
}
