use serde::{Deserialize, Serialize};

use crate::balance::{is_balanced, Balance};
use crate::exact::DeletionCertificate;
use crate::graph::{GraphError, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claimed_size: Option<usize>,
    pub distinct: bool,
    pub size_ok: bool,
    pub balanced: bool,
    /// Negative circle left after deletion, as input edge indices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    pub valid: bool,
}

/// Deletes the certificate from `g` and re-tests balance from scratch.
///
/// `claimed_size`, when given, must equal the number of listed indices.
pub fn verify_certificate(
    g: &SignedGraph,
    cert: &DeletionCertificate,
    claimed_size: Option<usize>,
) -> Result<VerificationReport, GraphError> {
    let rest = match cert {
        DeletionCertificate::Edges(e) => g.delete_edges(e)?,
        DeletionCertificate::Vertices(v) => g.delete_vertices(v)?,
    };
    let mut sorted = cert.indices().to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let distinct = sorted.len() == cert.len();
    let size = cert.len();
    let size_ok = claimed_size.is_none_or(|c| c == size);
    let (balanced, witness) = match is_balanced(&rest.graph) {
        Balance::Balanced(_) => (true, None),
        Balance::Unbalanced { witness } => (
            false,
            Some(witness.iter().map(|&i| rest.edge_map[i]).collect()),
        ),
    };
    Ok(VerificationReport {
        size,
        claimed_size,
        distinct,
        size_ok,
        balanced,
        witness,
        valid: distinct && size_ok && balanced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign::Sign::{Negative as N, Positive as P};

    #[test]
    fn empty_certificate_valid_iff_balanced() {
        let bal = SignedGraph::build(3, [(0, 1, N), (1, 2, N), (2, 0, P)]).unwrap();
        let r = verify_certificate(&bal, &DeletionCertificate::Edges(vec![]), Some(0)).unwrap();
        assert!(r.valid);
        let unbal = SignedGraph::build(3, [(0, 1, N), (1, 2, P), (2, 0, P)]).unwrap();
        let r = verify_certificate(&unbal, &DeletionCertificate::Vertices(vec![]), None).unwrap();
        assert!(!r.valid);
    }

    #[test]
    fn wrong_edge_is_rejected_with_witness() {
        let tri = SignedGraph::build(3, [(0, 1, P), (1, 2, P), (2, 0, N)]).unwrap();
        // any single edge of a triangle leaves a path, so this one is valid
        let r = verify_certificate(&tri, &DeletionCertificate::Edges(vec![0]), Some(1)).unwrap();
        assert!(r.valid);
        // a mixed digon survives deleting the positive edge 1-2
        let g = SignedGraph::build(3, [(0, 1, P), (0, 1, N), (1, 2, P), (2, 0, N)]).unwrap();
        let r = verify_certificate(&g, &DeletionCertificate::Edges(vec![2]), None).unwrap();
        assert!(!r.valid);
        let w = r.witness.unwrap();
        assert_eq!(g.cycle_sign(&w).unwrap(), N);
    }

    #[test]
    fn size_claims_and_duplicates() {
        let tri = SignedGraph::build(3, [(0, 1, P), (1, 2, P), (2, 0, N)]).unwrap();
        let ok = verify_certificate(&tri, &DeletionCertificate::Edges(vec![2]), Some(1)).unwrap();
        assert!(ok.valid);
        let wrong =
            verify_certificate(&tri, &DeletionCertificate::Edges(vec![2]), Some(0)).unwrap();
        assert!(!wrong.valid && !wrong.size_ok);
        let dup = verify_certificate(&tri, &DeletionCertificate::Edges(vec![2, 2]), None).unwrap();
        assert!(!dup.valid && !dup.distinct);
        assert!(verify_certificate(&tri, &DeletionCertificate::Edges(vec![3]), None).is_err());
    }
}
