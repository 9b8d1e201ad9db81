//! Signed graphs, balance, and frustration.
//!
//! The frustration index of a signed graph is the fewest edges whose deletion
//! leaves it balanced; the frustration number is the fewest vertices. This
//! crate computes both exactly, with certificates, and implements the
//! constructive procedures that bound them:
//!
//! * [`certify::vertex_to_edge_set`] turns a balancing vertex set of a subcubic
//!   graph into a balancing edge set that is no larger;
//! * [`certify::degree_sequence_bound`] bounds the index by the degree sequence;
//! * [`certify::matching_switching`] switches a loopless subcubic graph until
//!   its negative edges form a matching;
//! * [`certify::reduce_cubic_girth4`] certifies `l <= 3n/8` for cubic graphs of
//!   girth at least 4.

pub mod balance;
pub mod certify;
pub mod exact;
pub mod families;
pub mod graph;
pub mod io;
pub mod sign;

pub use balance::{
    is_balanced, switch_to_all_positive, Balance, BalanceCertificate, UnbalancedError,
};
pub use exact::{
    frustration_index_exact, frustration_index_oracle, frustration_number_exact,
    frustration_number_oracle, Budget, DeletionCertificate, FrustrationResult, Method, SolveError,
};
pub use graph::{Edge, Girth, GraphError, SignedGraph, Subgraph, SwitchingSet};
pub use sign::Sign;
