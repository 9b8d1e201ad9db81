//! Exact frustration index and frustration number.
//!
//! The index is computed as the minimum number of negative edges over all
//! switchings, found by branch and bound over one switching representative per
//! class. The number is computed by increasing-size vertex subset search.
//! Both are paired with brute-force oracles that follow the deletion
//! definitions literally.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::balance::{balanced_without, is_balanced};
use crate::graph::{SignedGraph, SwitchingSet};

/// Hard limits on exhaustive search. Exceeding one is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Free switching bits (vertices minus components) for the index solver.
    pub switching_bits: usize,
    /// Non-forced vertices for the number solver.
    pub subset_vertices: usize,
    pub oracle_vertices: usize,
    pub oracle_edges: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            switching_bits: 30,
            subset_vertices: 24,
            oracle_vertices: 5,
            oracle_edges: 14,
        }
    }
}

impl Budget {
    /// Raises both solver limits to at least `bits`. Oracle caps are unchanged.
    pub fn raised(bits: usize) -> Self {
        let d = Budget::default();
        Budget {
            switching_bits: d.switching_bits.max(bits),
            subset_vertices: d.subset_vertices.max(bits),
            ..d
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("{solver} needs {required} but the budget allows {limit}")]
    BudgetExceeded {
        solver: &'static str,
        required: usize,
        limit: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    SwitchingEnumeration,
    BranchAndBound,
    SubsetEnumeration,
    BruteForceOracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::SwitchingEnumeration => "switching-enumeration",
            Method::BranchAndBound => "branch-and-bound",
            Method::SubsetEnumeration => "subset-enumeration",
            Method::BruteForceOracle => "brute-force-oracle",
        })
    }
}

/// A set whose deletion should leave the graph balanced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "indices", rename_all = "lowercase")]
pub enum DeletionCertificate {
    Edges(Vec<usize>),
    Vertices(Vec<usize>),
}

impl DeletionCertificate {
    pub fn len(&self) -> usize {
        self.indices().len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices().is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        match self {
            DeletionCertificate::Edges(v) | DeletionCertificate::Vertices(v) => v,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrustrationResult {
    pub value: usize,
    pub certificate: DeletionCertificate,
    pub method: Method,
    /// For the index solver: the optimal switching whose negative edges form the certificate.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub switching: Option<SwitchingSet>,
}

fn negative_loops(g: &SignedGraph) -> Vec<usize> {
    (0..g.edge_count())
        .filter(|&i| {
            let e = g.edge(i);
            e.is_loop() && e.sign.is_negative()
        })
        .collect()
}

/// Minimum number of edges whose deletion balances `g`.
pub fn frustration_index_exact(
    g: &SignedGraph,
    budget: &Budget,
) -> Result<FrustrationResult, SolveError> {
    let n = g.vertex_count();
    let components = g.components();
    let mut is_root = vec![false; n];
    let mut seen = vec![false; n];
    for v in 0..n {
        if !seen[components[v]] {
            seen[components[v]] = true;
            is_root[v] = true;
        }
    }
    let free = is_root.iter().filter(|r| !**r).count();
    if free > budget.switching_bits {
        return Err(SolveError::BudgetExceeded {
            solver: "switching search",
            required: free,
            limit: budget.switching_bits,
        });
    }

    let mut search = SwitchingSearch::new(g, is_root);
    search.run(0);
    let switched = search.best_assignment;
    let result_graph = g.switch_by_mask(&switched);

    let mut certificate = negative_loops(g);
    certificate.extend((0..g.edge_count()).filter(|&i| {
        let e = result_graph.edge(i);
        !e.is_loop() && e.sign.is_negative()
    }));
    certificate.sort_unstable();
    Ok(FrustrationResult {
        value: certificate.len(),
        certificate: DeletionCertificate::Edges(certificate),
        method: Method::BranchAndBound,
        switching: Some(SwitchingSet::new((0..n).filter(|&v| switched[v]))),
    })
}

// Depth-first search over vertices in id order, keep (+1) before switch (-1).
// The lower bound is the number of decided negative edges plus, for every
// undecided vertex, the cheaper of its two choices against decided neighbours.
// Pruning only on `bound >= best` keeps the lexicographically first optimum.
struct SwitchingSearch {
    is_root: Vec<bool>,
    // links to higher-id vertices: (neighbour, is negative)
    fwd: Vec<Vec<(usize, bool)>>,
    switched: Vec<bool>,
    // cost if kept / if switched, against already decided neighbours
    cost_keep: Vec<usize>,
    cost_switch: Vec<usize>,
    decided: usize,
    slack: usize,
    best: usize,
    best_assignment: Vec<bool>,
}

impl SwitchingSearch {
    fn new(g: &SignedGraph, is_root: Vec<bool>) -> Self {
        let n = g.vertex_count();
        let mut fwd = vec![Vec::new(); n];
        for e in g.edges() {
            if e.is_loop() {
                continue;
            }
            let (lo, hi) = (e.u.min(e.v), e.u.max(e.v));
            fwd[lo].push((hi, e.sign.is_negative()));
        }
        SwitchingSearch {
            is_root,
            fwd,
            switched: vec![false; n],
            cost_keep: vec![0; n],
            cost_switch: vec![0; n],
            decided: 0,
            slack: 0,
            best: usize::MAX,
            best_assignment: vec![false; n],
        }
    }

    fn run(&mut self, v: usize) {
        let n = self.switched.len();
        if v == n {
            if self.decided < self.best {
                self.best = self.decided;
                self.best_assignment.clone_from(&self.switched);
            }
            return;
        }
        let choices: &[bool] = if self.is_root[v] {
            &[false]
        } else {
            &[false, true]
        };
        let own_min = self.cost_keep[v].min(self.cost_switch[v]);
        for &sv in choices {
            let cost = if sv {
                self.cost_switch[v]
            } else {
                self.cost_keep[v]
            };
            self.switched[v] = sv;
            self.decided += cost;
            self.slack -= own_min;
            for i in 0..self.fwd[v].len() {
                let (w, neg) = self.fwd[v][i];
                let before = self.cost_keep[w].min(self.cost_switch[w]);
                if neg ^ sv {
                    self.cost_keep[w] += 1;
                } else {
                    self.cost_switch[w] += 1;
                }
                self.slack = self.slack + self.cost_keep[w].min(self.cost_switch[w]) - before;
            }

            if self.decided + self.slack < self.best {
                self.run(v + 1);
            }

            for i in 0..self.fwd[v].len() {
                let (w, neg) = self.fwd[v][i];
                let before = self.cost_keep[w].min(self.cost_switch[w]);
                if neg ^ sv {
                    self.cost_keep[w] -= 1;
                } else {
                    self.cost_switch[w] -= 1;
                }
                self.slack = self.slack + self.cost_keep[w].min(self.cost_switch[w]) - before;
            }
            self.slack += own_min;
            self.decided -= cost;
            self.switched[v] = false;
        }
    }
}

/// Minimum number of vertices whose deletion balances `g`.
pub fn frustration_number_exact(
    g: &SignedGraph,
    budget: &Budget,
) -> Result<FrustrationResult, SolveError> {
    let n = g.vertex_count();
    let mut removed = vec![false; n];
    for i in negative_loops(g) {
        removed[g.edge(i).u] = true;
    }
    let forced: Vec<usize> = (0..n).filter(|&v| removed[v]).collect();
    let rest: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    if rest.len() > budget.subset_vertices {
        return Err(SolveError::BudgetExceeded {
            solver: "vertex subset search",
            required: rest.len(),
            limit: budget.subset_vertices,
        });
    }
    for size in 0..=rest.len() {
        for subset in rest.iter().copied().combinations(size) {
            for &v in &subset {
                removed[v] = true;
            }
            let ok = balanced_without(g, &removed);
            for &v in &subset {
                removed[v] = false;
            }
            if ok {
                let mut cert: Vec<usize> = forced.iter().copied().chain(subset).collect();
                cert.sort_unstable();
                return Ok(FrustrationResult {
                    value: cert.len(),
                    certificate: DeletionCertificate::Vertices(cert),
                    method: Method::SubsetEnumeration,
                    switching: None,
                });
            }
        }
    }
    unreachable!("deleting every vertex leaves a balanced graph")
}

/// Smallest edge subset whose deletion balances `g`, by plain enumeration.
pub fn frustration_index_oracle(
    g: &SignedGraph,
    budget: &Budget,
) -> Result<FrustrationResult, SolveError> {
    let m = g.edge_count();
    if m > budget.oracle_edges {
        return Err(SolveError::BudgetExceeded {
            solver: "edge subset oracle",
            required: m,
            limit: budget.oracle_edges,
        });
    }
    for size in 0..=m {
        for subset in (0..m).combinations(size) {
            let rest = g.delete_edges(&subset).expect("indices in range");
            if is_balanced(&rest.graph).is_balanced() {
                return Ok(FrustrationResult {
                    value: size,
                    certificate: DeletionCertificate::Edges(subset),
                    method: Method::BruteForceOracle,
                    switching: None,
                });
            }
        }
    }
    unreachable!("deleting every edge leaves a balanced graph")
}

/// Smallest vertex subset whose deletion balances `g`, by plain enumeration.
pub fn frustration_number_oracle(
    g: &SignedGraph,
    budget: &Budget,
) -> Result<FrustrationResult, SolveError> {
    let n = g.vertex_count();
    if n > budget.oracle_vertices {
        return Err(SolveError::BudgetExceeded {
            solver: "vertex subset oracle",
            required: n,
            limit: budget.oracle_vertices,
        });
    }
    for size in 0..=n {
        for subset in (0..n).combinations(size) {
            let rest = g.delete_vertices(&subset).expect("indices in range");
            if is_balanced(&rest.graph).is_balanced() {
                return Ok(FrustrationResult {
                    value: size,
                    certificate: DeletionCertificate::Vertices(subset),
                    method: Method::BruteForceOracle,
                    switching: None,
                });
            }
        }
    }
    unreachable!("deleting every vertex leaves a balanced graph")
}
