use serde::Serialize;

use super::{is_matching, require_subcubic, CertifyError};
use crate::graph::{SignedGraph, SwitchingSet};

/// Sum of `floor(d / 2)` over the `k` largest degrees. With `k` equal to the
/// frustration number this bounds the frustration index from above.
pub fn degree_sequence_bound(g: &SignedGraph, k: usize) -> Result<usize, CertifyError> {
    if k > g.vertex_count() {
        return Err(CertifyError::KOutOfRange {
            k,
            vertex_count: g.vertex_count(),
        });
    }
    let mut degrees = g.degrees();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    Ok(degrees.iter().take(k).map(|d| d / 2).sum())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingSwitching {
    pub history: Vec<SwitchingSet>,
    pub negative_counts: Vec<usize>,
    #[serde(skip)]
    pub graph: SignedGraph,
}

impl MatchingSwitching {
    /// Negative edges of the final graph; pairwise non-adjacent.
    pub fn negative_edges(&self) -> Vec<usize> {
        self.graph.negative_edges()
    }

    /// Lower-id endpoint of each final negative edge. Deleting these balances
    /// the input, so its size bounds the frustration number.
    pub fn deletion_vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .graph
            .negative_edges()
            .into_iter()
            .map(|i| {
                let e = self.graph.edge(i);
                e.u.min(e.v)
            })
            .collect();
        v.sort_unstable();
        v
    }

    /// Composition of every switching in the history.
    pub fn total_switching(&self) -> SwitchingSet {
        self.history
            .iter()
            .fold(SwitchingSet::empty(), |acc, s| acc.compose(s))
    }
}

/// Switches a loopless subcubic graph until its negative edges form a matching.
pub fn matching_switching(g: &SignedGraph) -> Result<MatchingSwitching, CertifyError> {
    require_subcubic(g)?;
    if let Some(edge) = g.edges().iter().position(|e| e.is_loop()) {
        return Err(CertifyError::HasLoop { edge });
    }
    let mut current = g.clone();
    let mut history = Vec::new();
    let mut counts = Vec::new();
    while let Some(v) = (0..g.vertex_count()).find(|&v| current.negative_links_at(v) >= 2) {
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
    if !is_matching(&current, &current.negative_edges()) {
        return Err(CertifyError::Invariant(
            "negative edges are not a matching".into(),
        ));
    }
    Ok(MatchingSwitching {
        history,
        negative_counts: counts,
        graph: current,
    })
}
