//! Strong components of directed graphs in linear time.
//!
//! Three algorithms share one depth-first exploration framework:
//!
//! * [`scc_tarjan`]: one pass, `low` values and a follower stack.
//! * [`scc_cycle`]: one pass, contracting cycles with a leader stack.
//! * [`scc_bidirectional`]: a forward pass for postorder, then backward
//!   searches on the reversed graph.
//!
//! Each runs on any [`EngineKind`]; the arc-stack engine is the default and
//! uses no recursion, so path length is bounded only by memory.
//!
//! ```
//! use sccdfs::{build_graph, scc_tarjan, TarjanOptions};
//!
//! let g = build_graph(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
//! let scc = scc_tarjan(&g, TarjanOptions::default()).unwrap();
//! assert_eq!(scc.num_components(), 1);
//! ```

pub mod bidi;
pub mod cycle;
pub mod dfs;
pub mod error;
pub mod extensions;
pub mod graph;
pub mod instrument;
pub mod scc;
pub mod tarjan;
pub mod testkit;

pub use bidi::{forward_reverse_postorder, scc_bidirectional, Backward, BidiOptions};
pub use cycle::{scc_cycle, CycleOptions};
pub use dfs::{explore, EngineKind, Outcome, Visitor};
pub use error::{Error, Result};
pub use extensions::{
    build_in_trees, build_out_trees, condense, derive_certificates, verify_scc, Condensation,
    LowArcForest, OutTreeForest, Verdict,
};
pub use graph::{
    build_graph, parse_graph, reverse_graph, serialize_graph, validate_graph, ArcId, Graph,
    VertexId,
};
pub use scc::{format_scc, parse_scc, OrderKind, SccResult, WithinOrder};
pub use tarjan::{scc_tarjan, TarjanOptions};
