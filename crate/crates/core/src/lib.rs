//! Certifying bipartiteness testing.
//!
//! Every checker in [`algo`] answers with a certificate that can be checked
//! independently: a [`Bipartition`] whose two sides are stable, or an
//! [`OddCycle`] that rules one out. Graphs may contain loops and parallel
//! edges; a loop is reported as an odd cycle of length 1.
//!
//! ```
//! use bicert::{check, Algorithm, Graph};
//!
//! let triangle = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
//! let outcome = check(&triangle, Algorithm::Dsu).unwrap();
//! assert_eq!(outcome.odd_cycle().unwrap().vertices, vec![0, 1, 2]);
//! ```

pub mod algo;
pub mod bench;
pub mod certificate;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod report;

pub use algo::{check, check_with_stats, Algorithm, CheckRun};
pub use certificate::{
    check_path_parity, flip_component, merge_bipartitions, verify_bipartition, verify_odd_cycle,
    Bipartition, CheckOutcome, OddCycle, Side,
};
pub use error::{Error, Result};
pub use graph::{
    connected_components, find_path, induced_subgraph, simplify, ComponentLabeling, Edge, EdgeId,
    Graph, Path, VertexId,
};
