//! Simultaneous domination across graph factorings.
//!
//! A *factoring* is a list of graphs — the factors — sharing one vertex
//! set; their edge union is the *combined graph*. A set of vertices is an
//! *SD-set* when it is a dominating set of every factor at once, and the
//! simultaneous domination number γ_sd is the size of a smallest one.
//!
//! The crate provides:
//!
//! - exact branch-and-bound solvers for γ_sd, domination, hypergraph
//!   transversals, degree-bounded covers and independence ([`exact`]);
//! - a certified derandomized sampling routine for hypergraph transversals,
//!   run entirely in rational arithmetic ([`hypergraph`]);
//! - constructions that build verified SD-sets and report the size bound
//!   each is entitled to claim, from general cover- and sampling-based
//!   methods to procedures specific to complete-block, perfect-matching,
//!   and cycle factorings ([`constructive`]);
//! - closed-form bound evaluators with exact rational cores and the
//!   associated coefficient tables ([`bounds`]);
//! - generators for the factoring families with known exact SD numbers and
//!   for random experiment instances ([`extremal`]).

pub mod bounds;
pub mod constructive;
pub mod error;
pub mod exact;
pub mod extremal;
pub mod factoring;
pub mod graph;
pub mod hypergraph;
pub mod numeric;
pub mod vertex_set;

pub use error::{Error, Result};
pub use exact::{sd_number_exact, MethodKind, SDResult, EXACT_CAP};
pub use factoring::Factoring;
pub use graph::Graph;
pub use vertex_set::VertexSet;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
