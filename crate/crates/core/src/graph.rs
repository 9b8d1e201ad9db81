//! Immutable signed multigraphs.
//!
//! Vertices are `0..n`. Edges keep their construction index, which is the
//! canonical order for every deterministic choice made elsewhere in the crate.
//! Loops and parallel edges are allowed.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sign::Sign;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {index} has endpoint {vertex} out of range for {vertex_count} vertices")]
    EndpointOutOfRange {
        index: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("edge index {index} out of range for {edge_count} edges")]
    EdgeOutOfRange { index: usize, edge_count: usize },
    #[error("walk is not closed and edge-connected at position {position}")]
    BrokenWalk { position: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn new(u: usize, v: usize, sign: Sign) -> Self {
        Edge { u, v, sign }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite `x`. For a loop this is `x` itself.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn has_endpoint(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    fn negated(self) -> Self {
        Edge {
            sign: -self.sign,
            ..self
        }
    }
}

/// Length of a shortest circle. A loop is a circle of length 1 and a pair of
/// parallel edges one of length 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// A set of vertices to switch at, stored sorted and deduplicated.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SwitchingSet(Vec<usize>);

impl SwitchingSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        SwitchingSet(v)
    }

    pub fn empty() -> Self {
        SwitchingSet(Vec::new())
    }

    pub fn single(v: usize) -> Self {
        SwitchingSet(vec![v])
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Symmetric difference: switching at `a` then `b` equals switching at `a ^ b`.
    pub fn compose(&self, other: &SwitchingSet) -> SwitchingSet {
        let a: HashSet<usize> = self.0.iter().copied().collect();
        let b: HashSet<usize> = other.0.iter().copied().collect();
        SwitchingSet::new(a.symmetric_difference(&b).copied())
    }
}

/// Best circle found by one BFS: tree paths from `x` and `y` back to the root
/// plus the non-tree edge `closing`.
struct ClosedCircle {
    len: usize,
    x: usize,
    y: usize,
    closing: usize,
    parent: Vec<Option<usize>>,
}

/// A derived graph together with index maps back to its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: SignedGraph,
    /// `vertex_map[new] = old`
    pub vertex_map: Vec<usize>,
    /// `edge_map[new] = old`
    pub edge_map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    // (edge index, other endpoint) in edge order; a loop appears once.
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl SignedGraph {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (index, e) in edges.iter().enumerate() {
            for vertex in [e.u, e.v] {
                if vertex >= vertex_count {
                    return Err(GraphError::EndpointOutOfRange {
                        index,
                        vertex,
                        vertex_count,
                    });
                }
            }
            adjacency[e.u].push((index, e.v));
            if !e.is_loop() {
                adjacency[e.v].push((index, e.u));
            }
        }
        Ok(SignedGraph {
            vertex_count,
            edges,
            adjacency,
        })
    }

    /// Builds from `(u, v, sign)` triples.
    pub fn build<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        Self::new(
            vertex_count,
            edges
                .into_iter()
                .map(|(u, v, s)| Edge::new(u, v, s))
                .collect(),
        )
    }

    pub fn empty(vertex_count: usize) -> Self {
        SignedGraph {
            vertex_count,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &Edge {
        &self.edges[index]
    }

    /// Incident `(edge index, other endpoint)` pairs of `v` in edge order.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn negative_edges(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.edges[i].sign.is_negative())
            .collect()
    }

    pub fn negative_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_negative()).count()
    }

    /// Number of negative non-loop edges at `v`.
    pub fn negative_links_at(&self, v: usize) -> usize {
        self.adjacency[v]
            .iter()
            .filter(|&&(e, w)| w != v && self.edges[e].sign.is_negative())
            .count()
    }

    fn check_vertex(&self, vertex: usize) -> Result<(), GraphError> {
        if vertex >= self.vertex_count {
            Err(GraphError::VertexOutOfRange {
                vertex,
                vertex_count: self.vertex_count,
            })
        } else {
            Ok(())
        }
    }

    fn check_edge(&self, index: usize) -> Result<(), GraphError> {
        if index >= self.edges.len() {
            Err(GraphError::EdgeOutOfRange {
                index,
                edge_count: self.edges.len(),
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn vertex_mask(&self, vertices: &[usize]) -> Result<Vec<bool>, GraphError> {
        let mut mask = vec![false; self.vertex_count];
        for &v in vertices {
            self.check_vertex(v)?;
            mask[v] = true;
        }
        Ok(mask)
    }

    /// Negates every link with exactly one endpoint in `set`. Loops never change.
    pub fn switch(&self, set: &SwitchingSet) -> Result<SignedGraph, GraphError> {
        let mask = self.vertex_mask(set.members())?;
        Ok(self.switch_by_mask(&mask))
    }

    pub(crate) fn switch_by_mask(&self, mask: &[bool]) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|&e| {
                if mask[e.u] != mask[e.v] {
                    e.negated()
                } else {
                    e
                }
            })
            .collect();
        SignedGraph {
            vertex_count: self.vertex_count,
            edges,
            adjacency: self.adjacency.clone(),
        }
    }

    /// Induced signed subgraph on `keep`.
    pub fn restrict(&self, keep: &[usize]) -> Result<Subgraph, GraphError> {
        let mask = self.vertex_mask(keep)?;
        Ok(self.induced(&mask))
    }

    pub fn delete_vertices(&self, removed: &[usize]) -> Result<Subgraph, GraphError> {
        let mut mask = self.vertex_mask(removed)?;
        mask.iter_mut().for_each(|m| *m = !*m);
        Ok(self.induced(&mask))
    }

    fn induced(&self, keep: &[bool]) -> Subgraph {
        let mut new_id = vec![usize::MAX; self.vertex_count];
        let mut vertex_map = Vec::new();
        for v in 0..self.vertex_count {
            if keep[v] {
                new_id[v] = vertex_map.len();
                vertex_map.push(v);
            }
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if keep[e.u] && keep[e.v] {
                edges.push(Edge::new(new_id[e.u], new_id[e.v], e.sign));
                edge_map.push(i);
            }
        }
        let graph = SignedGraph::new(vertex_map.len(), edges).expect("induced ids are in range");
        Subgraph {
            graph,
            vertex_map,
            edge_map,
        }
    }

    /// Removes the given edges; the vertex set is unchanged.
    pub fn delete_edges(&self, removed: &[usize]) -> Result<Subgraph, GraphError> {
        let mut gone = vec![false; self.edges.len()];
        for &i in removed {
            self.check_edge(i)?;
            gone[i] = true;
        }
        let edge_map: Vec<usize> = (0..self.edges.len()).filter(|&i| !gone[i]).collect();
        let edges = edge_map.iter().map(|&i| self.edges[i]).collect();
        Ok(Subgraph {
            graph: SignedGraph::new(self.vertex_count, edges).expect("same vertex set"),
            vertex_map: (0..self.vertex_count).collect(),
            edge_map,
        })
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted past ours.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let shift = self.vertex_count;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(
                other
                    .edges
                    .iter()
                    .map(|e| Edge::new(e.u + shift, e.v + shift, e.sign)),
            )
            .collect();
        SignedGraph::new(self.vertex_count + other.vertex_count, edges).expect("shifted ids")
    }

    /// Degree of `v`; a loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v]
            .iter()
            .map(|&(_, w)| if w == v { 2 } else { 1 })
            .sum()
    }

    /// Degrees indexed by vertex id.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        (0..self.vertex_count).all(|v| self.degree(v) <= 3)
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.vertex_count).all(|v| self.degree(v) == 3)
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    pub fn has_negative_loop(&self) -> bool {
        self.edges
            .iter()
            .any(|e| e.is_loop() && e.sign.is_negative())
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::new();
        self.edges
            .iter()
            .all(|e| !e.is_loop() && seen.insert((e.u.min(e.v), e.u.max(e.v))))
    }

    /// Component label per vertex, labels assigned in order of lowest vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for root in 0..self.vertex_count {
            if label[root] != usize::MAX {
                continue;
            }
            label[root] = next;
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                for &(_, y) in &self.adjacency[x] {
                    if label[y] == usize::MAX {
                        label[y] = next;
                        queue.push_back(y);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |c| c + 1)
    }

    pub fn girth(&self) -> Girth {
        match self.shortest_circle() {
            Some(c) => Girth::Finite(c.len()),
            None => Girth::Infinite,
        }
    }

    /// A shortest circle as a closed walk of edge indices, or `None` for a forest.
    pub fn shortest_circle(&self) -> Option<Vec<usize>> {
        if let Some(i) = self.edges.iter().position(Edge::is_loop) {
            return Some(vec![i]);
        }
        let mut best: Option<ClosedCircle> = None;
        for root in 0..self.vertex_count {
            let mut dist = vec![usize::MAX; self.vertex_count];
            let mut parent: Vec<Option<usize>> = vec![None; self.vertex_count];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            let mut found: Option<(usize, usize, usize, usize)> = None;
            let mut limit = best.as_ref().map_or(usize::MAX, |b| b.len);
            while let Some(x) = queue.pop_front() {
                // Any circle closed from x has length at least 2 * dist[x].
                if 2 * dist[x] >= limit {
                    break;
                }
                for &(e, y) in &self.adjacency[x] {
                    if parent[x] == Some(e) {
                        continue;
                    }
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = Some(e);
                        queue.push_back(y);
                    } else if dist[x] + dist[y] + 1 < limit {
                        limit = dist[x] + dist[y] + 1;
                        found = Some((limit, x, y, e));
                    }
                }
            }
            if let Some((len, x, y, closing)) = found {
                best = Some(ClosedCircle {
                    len,
                    x,
                    y,
                    closing,
                    parent,
                });
                if len == 2 {
                    break;
                }
            }
        }
        let ClosedCircle {
            x,
            y,
            closing,
            parent,
            ..
        } = best?;
        let path_to_root = |mut v: usize| {
            let mut out = Vec::new();
            while let Some(e) = parent[v] {
                out.push(e);
                v = self.edges[e].other(v);
            }
            out
        };
        let mut from_x = path_to_root(x);
        let mut from_y = path_to_root(y);
        while let (Some(a), Some(b)) = (from_x.last(), from_y.last()) {
            if a != b {
                break;
            }
            from_x.pop();
            from_y.pop();
        }
        let mut walk = from_x;
        walk.extend(from_y.into_iter().rev());
        walk.push(closing);
        Some(walk)
    }

    /// Sign of a closed walk given as consecutive edge indices.
    pub fn cycle_sign(&self, walk: &[usize]) -> Result<Sign, GraphError> {
        for &i in walk {
            self.check_edge(i)?;
        }
        self.trace_closed_walk(walk)?;
        Ok(Sign::product(walk.iter().map(|&i| self.edges[i].sign)))
    }

    /// Vertex sequence of a closed walk (start repeated at the end).
    pub fn trace_closed_walk(&self, walk: &[usize]) -> Result<Vec<usize>, GraphError> {
        let Some(&first) = walk.first() else {
            return Err(GraphError::BrokenWalk { position: 0 });
        };
        let first = self.edges[first];
        'orientation: for start in [first.u, first.v] {
            let mut vertices = vec![start];
            let mut at = start;
            for &i in walk {
                let e = self.edges[i];
                if !e.has_endpoint(at) {
                    continue 'orientation;
                }
                at = e.other(at);
                vertices.push(at);
            }
            if at == start {
                return Ok(vertices);
            }
        }
        // Report the first position that breaks contiguity from either start.
        let mut position = walk.len();
        let mut at = first.v;
        for (p, &i) in walk.iter().enumerate().skip(1) {
            let e = self.edges[i];
            if !e.has_endpoint(at) {
                position = p;
                break;
            }
            at = e.other(at);
        }
        Err(GraphError::BrokenWalk { position })
    }

    /// True when the walk is a circle: closed, no repeated edge, and no
    /// repeated vertex apart from the shared start and end.
    pub fn is_circle(&self, walk: &[usize]) -> bool {
        if walk.iter().any(|&i| i >= self.edges.len()) {
            return false;
        }
        let Ok(vertices) = self.trace_closed_walk(walk) else {
            return false;
        };
        let distinct_edges: HashSet<_> = walk.iter().collect();
        let distinct_vertices: HashSet<_> = vertices[..vertices.len() - 1].iter().collect();
        distinct_edges.len() == walk.len() && distinct_vertices.len() == walk.len()
    }
}
