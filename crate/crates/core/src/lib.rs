//! Exact tools for frustration in signed graphs.
//!
//! ```
//! use sgcrit::certify::check_minimum_signature;
//! use sgcrit::criticality::{is_critical, CriticalityMethod};
//! use sgcrit::frustration::{certified_frustration, SolveOptions};
//! use sgcrit::io::parse_graph;
//!
//! let g = parse_graph("sg1\nv a\nv b\ne p a b +\ne n a b -\ne l b b -\n")?;
//! let opts = SolveOptions::default();
//! let r = certified_frustration(&g, &opts)?;
//! assert_eq!(r.index, 2);
//! check_minimum_signature(&g, &r.witness, r.index)?;
//! assert!(is_critical(&g, CriticalityMethod::Union, &opts)?.critical);
//! # Ok::<(), sgcrit::Error>(())
//! ```

pub mod balance;
pub mod certify;
pub mod criticality;
pub mod error;
pub mod families;
pub mod frustration;
pub mod io;
pub mod model;
pub mod structure;

pub use error::{Error, Result};
pub use model::{
    components, cut, cut_summary, switch, CutSummary, Edge, EdgeId, Sign, Signature, SignedGraph,
    SwitchSet, VertexId,
};
