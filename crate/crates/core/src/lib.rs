//! Degree-sequence lower bounds for the largest induced linear forest,
//! caterpillar forest of bounded degree, and star forest of a graph, with
//! constructions certified to meet them and an exact oracle to check both.
//!
//! ```
//! use forestbound::constructors::greedy_linear_forest;
//! use forestbound::graph::Graph;
//!
//! let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
//! let cert = greedy_linear_forest(&k4);
//! assert!(cert.meets_bound());
//! ```

pub mod certificate;
pub mod classes;
pub mod constructors;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod partition;
pub mod weights;

pub use certificate::{verify_certificate, ForestCertificate};
pub use classes::ForestClass;
pub use error::{ConstructError, GenError, GraphError, OracleError, WeightError};
pub use graph::{Graph, Vertex};
pub use partition::{Label, Partition, PartitionMode};
pub use weights::{BoundSpec, Rat};

/// Every snippet in the guide runs as a doctest, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/engine.md")]
    mod engine {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/generators.md")]
    mod generators {}
    #[doc = include_str!("../../../book/src/harness.md")]
    mod harness {}
}
