//! Constructive bound procedures and certificate checks.
//!
//! Each procedure turns a structural guarantee into a concrete deletion set
//! that can be checked independently with [`verify_certificate`].

mod bounds;
mod reduce;
mod verify;
mod vertex_to_edge;

use thiserror::Error;

use crate::graph::{GraphError, SignedGraph};

pub use bounds::{degree_sequence_bound, matching_switching, MatchingSwitching};
pub use reduce::{
    check_trace, deletion_sets_from_trace, reduce_cubic_girth4, three_eighths_bound, DeletionSets,
    Operation, ReductionStep, ReductionTrace,
};
pub use verify::{verify_certificate, VerificationReport};
pub use vertex_to_edge::{vertex_to_edge_set, VertexToEdgeCertificate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("vertex {vertex} has degree {degree}, more than 3")]
    NotSubcubic { vertex: usize, degree: usize },
    #[error("vertex {vertex} has degree {degree}, not 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("edge {edge} is a loop")]
    HasLoop { edge: usize },
    #[error("circle of length {length} through edges {circle:?}; girth must be at least 4")]
    ShortCircle { length: usize, circle: Vec<usize> },
    #[error("deleting the vertex set leaves a negative circle through edges {witness:?}")]
    NotBalancing { witness: Vec<usize> },
    #[error("k = {k} is out of range for {vertex_count} vertices")]
    KOutOfRange { k: usize, vertex_count: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub(crate) fn require_subcubic(g: &SignedGraph) -> Result<(), CertifyError> {
    match (0..g.vertex_count()).find(|&v| g.degree(v) > 3) {
        Some(vertex) => Err(CertifyError::NotSubcubic {
            vertex,
            degree: g.degree(vertex),
        }),
        None => Ok(()),
    }
}

/// True when no two of the listed edges share an endpoint.
pub(crate) fn is_matching(g: &SignedGraph, edges: &[usize]) -> bool {
    let mut used = vec![false; g.vertex_count()];
    for &i in edges {
        let e = g.edge(i);
        if e.is_loop() || used[e.u] || used[e.v] {
            return false;
        }
        used[e.u] = true;
        used[e.v] = true;
    }
    true
}
