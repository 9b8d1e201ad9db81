//! Converting a balancing vertex set into a balancing edge set of no larger
//! size, for subcubic graphs.

use serde::{Deserialize, Serialize};

use super::{require_subcubic, CertifyError};
use crate::balance::{is_balanced, switch_to_all_positive, Balance};
use crate::graph::{SignedGraph, SwitchingSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexToEdgeCertificate {
    pub vertex_set: Vec<usize>,
    /// `vertex_set` without the vertices that carried a negative loop.
    pub working_set: Vec<usize>,
    /// Switchings applied after loop removal, in order.
    pub switching_history: Vec<SwitchingSet>,
    /// Negative-edge count after each switching in `switching_history`.
    pub negative_counts: Vec<usize>,
    /// Balancing edge set, as indices into the input graph.
    pub edge_set: Vec<usize>,
    /// Negative loops removed up front, as indices into the input graph.
    pub forced_loop_edges: Vec<usize>,
}

impl VertexToEdgeCertificate {
    /// `edge_set` together with `forced_loop_edges`, sorted.
    pub fn all_edges(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self
            .edge_set
            .iter()
            .chain(&self.forced_loop_edges)
            .copied()
            .collect();
        all.sort_unstable();
        all
    }
}

/// Given `x` whose deletion balances the subcubic graph `g`, produce an edge
/// set of size at most `|x|` whose deletion also balances `g`.
///
/// Negative loops are removed first and reported separately; their vertices
/// are then pendant or isolated and leave the working set. The rest of the
/// graph is switched so that everything outside the working set is positive,
/// then each working vertex with two or more negative links is switched
/// (lowest id first) until every one carries at most one. The remaining
/// negative edges are the answer, and together with the loops they number at
/// most `|x|`.
pub fn vertex_to_edge_set(
    g: &SignedGraph,
    x: &[usize],
) -> Result<VertexToEdgeCertificate, CertifyError> {
    require_subcubic(g)?;
    let mut in_x = g.vertex_mask(x)?;
    let x_set = SwitchingSet::new(x.iter().copied());

    let without_x = g.delete_vertices(x_set.members())?;
    if let Balance::Unbalanced { witness } = is_balanced(&without_x.graph) {
        return Err(CertifyError::NotBalancing {
            witness: witness.iter().map(|&i| without_x.edge_map[i]).collect(),
        });
    }

    let forced_loop_edges: Vec<usize> = (0..g.edge_count())
        .filter(|&i| g.edge(i).is_loop() && g.edge(i).sign.is_negative())
        .collect();
    let work = g.delete_edges(&forced_loop_edges)?;
    // every balancing set contains the loop vertices
    for &i in &forced_loop_edges {
        in_x[g.edge(i).u] = false;
    }
    let working = SwitchingSet::new((0..g.vertex_count()).filter(|&v| in_x[v]));

    let y: Vec<usize> = (0..g.vertex_count()).filter(|&v| !in_x[v]).collect();
    let outside = work.graph.restrict(&y)?;
    let inner = switch_to_all_positive(&outside.graph).map_err(|e| {
        CertifyError::Invariant(format!("restriction to Y is unbalanced: {:?}", e.witness))
    })?;
    let lifted = SwitchingSet::new(inner.members().iter().map(|&v| outside.vertex_map[v]));

    let mut history = Vec::new();
    let mut counts = Vec::new();
    let mut current = work.graph.switch(&lifted)?;
    if !lifted.is_empty() {
        history.push(lifted);
        counts.push(current.negative_count());
    }
    if let Some(i) = current
        .negative_edges()
        .into_iter()
        .find(|&i| !in_x[current.edge(i).u] && !in_x[current.edge(i).v])
    {
        return Err(CertifyError::Invariant(format!(
            "edge {} outside X is negative after switching",
            work.edge_map[i]
        )));
    }

    while let Some(v) = working
        .members()
        .iter()
        .copied()
        .find(|&v| current.negative_links_at(v) >= 2)
    {
        let before = current.negative_count();
        let s = SwitchingSet::single(v);
        current = current.switch(&s)?;
        let after = current.negative_count();
        if after >= before {
            return Err(CertifyError::Invariant(format!(
                "switching at {v} did not reduce negative edges ({before} -> {after})"
            )));
        }
        history.push(s);
        counts.push(after);
    }

    let negatives = current.negative_edges();
    let mut owner_used = vec![false; g.vertex_count()];
    for &i in &negatives {
        let e = current.edge(i);
        if !in_x[e.u] && !in_x[e.v] {
            return Err(CertifyError::Invariant(format!(
                "negative edge {} has no endpoint in X",
                work.edge_map[i]
            )));
        }
        for end in [e.u, e.v] {
            if in_x[end] {
                if owner_used[end] {
                    return Err(CertifyError::Invariant(format!(
                        "two negative edges share X-vertex {end}"
                    )));
                }
                owner_used[end] = true;
            }
        }
    }
    let edge_set: Vec<usize> = negatives.iter().map(|&i| work.edge_map[i]).collect();
    if edge_set.len() > working.len() || edge_set.len() + forced_loop_edges.len() > x_set.len() {
        return Err(CertifyError::Invariant(format!(
            "{} edges and {} loops exceed |X| = {}",
            edge_set.len(),
            forced_loop_edges.len(),
            x_set.len()
        )));
    }

    let cert = VertexToEdgeCertificate {
        vertex_set: x_set.members().to_vec(),
        working_set: working.members().to_vec(),
        switching_history: history,
        negative_counts: counts,
        edge_set,
        forced_loop_edges,
    };
    let rest = g.delete_edges(&cert.all_edges())?;
    if let Balance::Unbalanced { witness } = is_balanced(&rest.graph) {
        return Err(CertifyError::Invariant(format!(
            "edge deletion left negative circle {:?}",
            witness
                .iter()
                .map(|&i| rest.edge_map[i])
                .collect::<Vec<_>>()
        )));
    }
    Ok(cert)
}
