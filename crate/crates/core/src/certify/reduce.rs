//! Negative-edge reduction for cubic signed graphs of girth at least 4.
//!
//! Two moves are applied until neither is possible:
//!
//! 1. switch at a vertex carrying two or more negative edges;
//! 2. only when (1) is impossible, switch at `{u, v, w}` where `uv` and `vw`
//!    are positive and each of `u`, `v`, `w` carries a negative edge.
//!
//! Both moves strictly reduce the number of negative edges. At the end the
//! negative edges form a matching whose endpoint set `X` spans a positive
//! matching, which forces `|X| <= 3/4 |V|`. Deleting one endpoint (or the
//! edge itself) of each negative edge balances the graph, giving at most
//! `3|V|/8` deletions.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{is_matching, CertifyError};
use crate::graph::{Girth, SignedGraph, SwitchingSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Operation {
    /// Switch at one vertex with at least two negative edges.
    SwitchVertex,
    /// Switch at the three vertices of a positive 2-path whose vertices all
    /// carry a negative edge.
    SwitchPath,
}

impl Operation {
    pub fn number(self) -> u8 {
        match self {
            Operation::SwitchVertex => 1,
            Operation::SwitchPath => 2,
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "op{}", self.number())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub op: Operation,
    pub switched: SwitchingSet,
    pub negative_count_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub vertex_count: usize,
    pub initial_negative_count: usize,
    pub steps: Vec<ReductionStep>,
    #[serde(skip)]
    pub final_graph: SignedGraph,
    /// Endpoints of the final negative edges, ascending.
    pub x: Vec<usize>,
}

impl ReductionTrace {
    pub fn final_negative_count(&self) -> usize {
        self.steps
            .last()
            .map_or(self.initial_negative_count, |s| s.negative_count_after)
    }

    /// Composition of every step's switching set.
    pub fn total_switching(&self) -> SwitchingSet {
        self.steps
            .iter()
            .fold(SwitchingSet::empty(), |acc, s| acc.compose(&s.switched))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionSets {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// `floor(3n / 8)`.
pub fn three_eighths_bound(vertex_count: usize) -> usize {
    3 * vertex_count / 8
}

fn require_cubic_girth4(g: &SignedGraph) -> Result<(), CertifyError> {
    if let Some(vertex) = (0..g.vertex_count()).find(|&v| g.degree(v) != 3) {
        return Err(CertifyError::NotCubic {
            vertex,
            degree: g.degree(vertex),
        });
    }
    if let Some(circle) = g.shortest_circle() {
        if !Girth::Finite(circle.len()).at_least(4) {
            return Err(CertifyError::ShortCircle {
                length: circle.len(),
                circle,
            });
        }
    }
    Ok(())
}

fn negative_degree(g: &SignedGraph, v: usize) -> usize {
    g.negative_links_at(v)
}

fn find_vertex_move(g: &SignedGraph) -> Option<usize> {
    (0..g.vertex_count()).find(|&v| negative_degree(g, v) > 1)
}

// Centre v first, then u < w among v's positive neighbours.
fn find_path_move(g: &SignedGraph) -> Option<(usize, usize, usize)> {
    for v in 0..g.vertex_count() {
        if negative_degree(g, v) == 0 {
            continue;
        }
        let mut positive: Vec<usize> = g
            .incident(v)
            .iter()
            .filter(|&&(e, _)| g.edge(e).sign.is_positive())
            .map(|&(_, w)| w)
            .filter(|&w| negative_degree(g, w) > 0)
            .collect();
        positive.sort_unstable();
        positive.dedup();
        if positive.len() >= 2 {
            return Some((positive[0], v, positive[1]));
        }
    }
    None
}

// The negative edge at each of u, v, w must be distinct and leave the triple.
fn check_path_move(g: &SignedGraph, triple: [usize; 3]) -> Result<(), CertifyError> {
    let mut seen = Vec::new();
    for x in triple {
        let &(e, other) = g
            .incident(x)
            .iter()
            .find(|&&(e, _)| g.edge(e).sign.is_negative())
            .ok_or_else(|| CertifyError::Invariant(format!("vertex {x} has no negative edge")))?;
        if triple.contains(&other) || seen.contains(&e) {
            return Err(CertifyError::Invariant(format!(
                "negative edges at {triple:?} are not three distinct edges leaving the triple"
            )));
        }
        seen.push(e);
    }
    Ok(())
}

/// Runs the reduction on a cubic graph of girth at least 4 and checks the
/// resulting trace with [`check_trace`].
pub fn reduce_cubic_girth4(g: &SignedGraph) -> Result<ReductionTrace, CertifyError> {
    require_cubic_girth4(g)?;
    let initial = g.negative_count();
    let mut current = g.clone();
    let mut steps = Vec::new();
    loop {
        let (op, set) = if let Some(v) = find_vertex_move(&current) {
            (Operation::SwitchVertex, SwitchingSet::single(v))
        } else if let Some((u, v, w)) = find_path_move(&current) {
            check_path_move(&current, [u, v, w])?;
            (Operation::SwitchPath, SwitchingSet::new([u, v, w]))
        } else {
            break;
        };
        let before = current.negative_count();
        current = current.switch(&set)?;
        let after = current.negative_count();
        if after >= before {
            return Err(CertifyError::Invariant(format!(
                "{op} at {:?} did not reduce negative edges ({before} -> {after})",
                set.members()
            )));
        }
        steps.push(ReductionStep {
            op,
            switched: set,
            negative_count_after: after,
        });
    }

    let mut x: Vec<usize> = current
        .negative_edges()
        .into_iter()
        .flat_map(|i| [current.edge(i).u, current.edge(i).v])
        .collect();
    x.sort_unstable();
    x.dedup();
    let trace = ReductionTrace {
        vertex_count: g.vertex_count(),
        initial_negative_count: initial,
        steps,
        final_graph: current,
        x,
    };
    check_trace(g, &trace)?;
    Ok(trace)
}

/// Re-checks every structural claim of a trace against the input graph.
pub fn check_trace(g: &SignedGraph, trace: &ReductionTrace) -> Result<(), CertifyError> {
    let fail = |msg: String| Err(CertifyError::Invariant(msg));
    let n = g.vertex_count();

    let mut prev = trace.initial_negative_count;
    if prev != g.negative_count() {
        return fail("initial negative count does not match the input".into());
    }
    let mut replay = g.clone();
    for (i, step) in trace.steps.iter().enumerate() {
        if step.negative_count_after >= prev {
            return fail(format!(
                "negative count not strictly decreasing at step {i}"
            ));
        }
        replay = replay.switch(&step.switched)?;
        if replay.negative_count() != step.negative_count_after {
            return fail(format!("step {i} reports a wrong negative count"));
        }
        prev = step.negative_count_after;
    }
    if replay != trace.final_graph {
        return fail("replaying the steps does not give the final graph".into());
    }

    let fin = &trace.final_graph;
    let negatives = fin.negative_edges();
    if !is_matching(fin, &negatives) {
        return fail("final negative edges are not a matching".into());
    }
    let mut in_x = vec![false; n];
    for &i in &negatives {
        in_x[fin.edge(i).u] = true;
        in_x[fin.edge(i).v] = true;
    }
    let x: Vec<usize> = (0..n).filter(|&v| in_x[v]).collect();
    if x != trace.x {
        return fail("X is not the endpoint set of the final negative edges".into());
    }
    let inside_positive: Vec<usize> = (0..fin.edge_count())
        .filter(|&i| {
            let e = fin.edge(i);
            e.sign.is_positive() && in_x[e.u] && in_x[e.v]
        })
        .collect();
    if !is_matching(fin, &inside_positive) {
        return fail("positive edges inside X are not a matching".into());
    }

    // |X| <= 3 (|V| - |X|), globally and in every component
    if 4 * x.len() > 3 * n {
        return fail(format!("|X| = {} exceeds 3/4 of {n}", x.len()));
    }
    let comp = g.components();
    let count = comp.iter().copied().max().map_or(0, |c| c + 1);
    let mut size = vec![0usize; count];
    let mut x_size = vec![0usize; count];
    for v in 0..n {
        size[comp[v]] += 1;
        if in_x[v] {
            x_size[comp[v]] += 1;
        }
    }
    if let Some(c) = (0..count).find(|&c| 4 * x_size[c] > 3 * size[c]) {
        return fail(format!("component {c} has |X| above 3/4 of its vertices"));
    }
    Ok(())
}

/// One vertex (the lower-id endpoint) and the edge itself for each final
/// negative edge. Either set balances the input graph when deleted.
pub fn deletion_sets_from_trace(trace: &ReductionTrace) -> DeletionSets {
    let fin = &trace.final_graph;
    let edges = fin.negative_edges();
    let mut vertices: Vec<usize> = edges
        .iter()
        .map(|&i| fin.edge(i).u.min(fin.edge(i).v))
        .collect();
    vertices.sort_unstable();
    debug_assert!(edges.len() <= three_eighths_bound(trace.vertex_count));
    DeletionSets { vertices, edges }
}
