//! Exact total Roman domination on small graphs.
//!
//! Computes γ, γ_t and γ_tR, classifies graphs as edge-critical,
//! edge-supercritical or edge-stable under edge addition and removal,
//! builds the graph families studied alongside these notions, and checks
//! known characterizations by exhaustive search over small graphs.

pub mod criticality;
pub mod error;
pub mod families;
pub mod graph;
pub mod solvers;
pub mod value;
pub mod verify;

pub use criticality::{
    classify_added_edge, classify_graph, classify_removed_edge, optimal_function_constraints,
    pendant_free_edges, EdgeClass, EdgeVerdict, Evaluator, GraphClass, GraphVerdict, Invariant, Mode,
};
pub use error::{Error, Result};
pub use graph::{parse_graph6, to_graph6, Edge, Graph, VertexSet};
pub use solvers::{gamma, gamma_t, gamma_tr, optimal_trd_functions, Labeling};
pub use value::DomValue;
