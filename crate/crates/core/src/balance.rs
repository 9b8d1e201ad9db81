//! Balance testing with checkable certificates.
//!
//! A balanced graph admits vertex states `theta` with `sign(uv) = theta(u) * theta(v)`
//! on every link and no negative loop. An unbalanced graph yields a negative circle.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{SignedGraph, SwitchingSet};
use crate::sign::Sign;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceCertificate {
    pub theta: Vec<Sign>,
}

impl BalanceCertificate {
    /// Re-checks the certificate against `g` edge by edge.
    pub fn verify(&self, g: &SignedGraph) -> bool {
        self.theta.len() == g.vertex_count()
            && g.edges().iter().all(|e| {
                if e.is_loop() {
                    e.sign.is_positive()
                } else {
                    e.sign == self.theta[e.u] * self.theta[e.v]
                }
            })
    }

    /// Vertices in state `-1`; switching there makes every edge positive.
    pub fn negative_vertices(&self) -> SwitchingSet {
        SwitchingSet::new(
            self.theta
                .iter()
                .enumerate()
                .filter(|(_, s)| s.is_negative())
                .map(|(v, _)| v),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Balance {
    Balanced(BalanceCertificate),
    /// A negative circle as a closed walk of edge indices.
    Unbalanced {
        witness: Vec<usize>,
    },
}

impl Balance {
    pub fn is_balanced(&self) -> bool {
        matches!(self, Balance::Balanced(_))
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            Balance::Balanced(_) => None,
            Balance::Unbalanced { witness } => Some(witness),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph is unbalanced; negative circle through edges {witness:?}")]
pub struct UnbalancedError {
    pub witness: Vec<usize>,
}

/// Breadth-first state propagation from the lowest vertex of each component,
/// then a scan of all edges in index order. The first inconsistent edge is
/// closed into a negative circle through the search tree.
pub fn is_balanced(g: &SignedGraph) -> Balance {
    let n = g.vertex_count();
    let mut theta = vec![Sign::Positive; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            for &(e, y) in g.incident(x) {
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    parent[y] = Some(e);
                    theta[y] = theta[x] * g.edge(e).sign;
                    queue.push_back(y);
                }
            }
        }
    }

    for (i, e) in g.edges().iter().enumerate() {
        if e.is_loop() {
            if e.sign.is_negative() {
                return Balance::Unbalanced { witness: vec![i] };
            }
            continue;
        }
        if e.sign != theta[e.u] * theta[e.v] {
            return Balance::Unbalanced {
                witness: tree_circle(g, &parent, &depth, e.u, e.v, i),
            };
        }
    }
    Balance::Balanced(BalanceCertificate { theta })
}

// Closed walk u -> lca -> v -> u through the search tree plus the closing edge.
fn tree_circle(
    g: &SignedGraph,
    parent: &[Option<usize>],
    depth: &[usize],
    u: usize,
    v: usize,
    closing: usize,
) -> Vec<usize> {
    let step = |x: usize| {
        let e = parent[x].expect("non-root vertex has a tree edge");
        (e, g.edge(e).other(x))
    };
    let (mut a, mut b) = (u, v);
    let mut up = Vec::new();
    let mut down = Vec::new();
    while depth[a] > depth[b] {
        let (e, p) = step(a);
        up.push(e);
        a = p;
    }
    while depth[b] > depth[a] {
        let (e, p) = step(b);
        down.push(e);
        b = p;
    }
    while a != b {
        let (ea, pa) = step(a);
        let (eb, pb) = step(b);
        up.push(ea);
        down.push(eb);
        a = pa;
        b = pb;
    }
    up.extend(down.into_iter().rev());
    up.push(closing);
    up
}

/// The switching that makes a balanced graph all-positive.
pub fn switch_to_all_positive(g: &SignedGraph) -> Result<SwitchingSet, UnbalancedError> {
    match is_balanced(g) {
        Balance::Balanced(cert) => Ok(cert.negative_vertices()),
        Balance::Unbalanced { witness } => Err(UnbalancedError { witness }),
    }
}

/// Union-find with parity: balance of `g` with the marked vertices removed.
/// Independent of the search in [`is_balanced`].
pub(crate) fn balanced_without(g: &SignedGraph, removed: &[bool]) -> bool {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    // parity[x] = sign of x relative to parent[x], as 0/1
    let mut parity = vec![0u8; n];

    fn find(parent: &mut [usize], parity: &mut [u8], x: usize) -> (usize, u8) {
        let mut path = Vec::new();
        let mut r = x;
        while parent[r] != r {
            path.push(r);
            r = parent[r];
        }
        // compress, accumulating parity from the top down
        let mut acc = 0u8;
        for &y in path.iter().rev() {
            acc ^= parity[y];
            parity[y] = acc;
            parent[y] = r;
        }
        (r, if path.is_empty() { 0 } else { parity[x] })
    }

    for e in g.edges() {
        if removed[e.u] || removed[e.v] {
            continue;
        }
        let want = u8::from(e.sign.is_negative());
        if e.is_loop() {
            if want == 1 {
                return false;
            }
            continue;
        }
        let (ru, pu) = find(&mut parent, &mut parity, e.u);
        let (rv, pv) = find(&mut parent, &mut parity, e.v);
        if ru == rv {
            if pu ^ pv != want {
                return false;
            }
        } else {
            parent[ru] = rv;
            parity[ru] = pu ^ pv ^ want;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign::Sign::{Negative as N, Positive as P};

    #[test]
    fn all_positive_is_balanced_with_trivial_theta() {
        let g = SignedGraph::build(4, [(0, 1, P), (1, 2, P), (2, 3, P), (3, 0, P)]).unwrap();
        match is_balanced(&g) {
            Balance::Balanced(c) => {
                assert_eq!(c.theta, vec![P; 4]);
                assert!(c.verify(&g));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn one_negative_triangle_witness_is_the_triangle() {
        let g = SignedGraph::build(3, [(0, 1, P), (1, 2, P), (2, 0, N)]).unwrap();
        let Balance::Unbalanced { witness } = is_balanced(&g) else {
            panic!("expected unbalanced");
        };
        let mut sorted = witness.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 2]);
        assert!(g.is_circle(&witness));
        assert_eq!(g.cycle_sign(&witness).unwrap(), N);
    }

    #[test]
    fn negative_loop_is_its_own_witness() {
        let g = SignedGraph::build(1, [(0, 0, N)]).unwrap();
        assert_eq!(is_balanced(&g), Balance::Unbalanced { witness: vec![0] });
        let pos = SignedGraph::build(1, [(0, 0, P)]).unwrap();
        assert!(is_balanced(&pos).is_balanced());
    }

    #[test]
    fn mixed_digon_witness() {
        let g = SignedGraph::build(2, [(0, 1, P), (0, 1, P), (0, 1, N)]).unwrap();
        let w = is_balanced(&g).witness().unwrap().to_vec();
        assert_eq!(w, vec![0, 2]);
        assert_eq!(g.cycle_sign(&w).unwrap(), N);
    }

    #[test]
    fn switch_to_all_positive_examples() {
        let pos = SignedGraph::build(3, [(0, 1, P), (1, 2, P)]).unwrap();
        assert_eq!(switch_to_all_positive(&pos).unwrap(), SwitchingSet::empty());

        let one = SignedGraph::build(2, [(0, 1, N)]).unwrap();
        assert_eq!(
            switch_to_all_positive(&one).unwrap(),
            SwitchingSet::single(1)
        );

        // a 4-circle with one negative edge is unbalanced; two negatives are balanced
        let sq1 = SignedGraph::build(4, [(0, 1, N), (1, 2, P), (2, 3, P), (3, 0, P)]).unwrap();
        assert!(switch_to_all_positive(&sq1).is_err());
        let sq2 = SignedGraph::build(4, [(0, 1, N), (1, 2, P), (2, 3, N), (3, 0, P)]).unwrap();
        let s = switch_to_all_positive(&sq2).unwrap();
        let switched = sq2.switch(&s).unwrap();
        assert_eq!(switched.negative_count(), 0);
        assert!(is_balanced(&switched).is_balanced());
    }

    #[test]
    fn path_with_one_negative_edge() {
        let g = SignedGraph::build(4, [(0, 1, P), (1, 2, N), (2, 3, P)]).unwrap();
        let s = switch_to_all_positive(&g).unwrap();
        assert_eq!(s, SwitchingSet::new([2, 3]));
        assert_eq!(g.switch(&s).unwrap().negative_count(), 0);
    }

    #[test]
    fn union_find_route_agrees_on_small_cases() {
        let g = SignedGraph::build(3, [(0, 1, P), (1, 2, P), (2, 0, N)]).unwrap();
        assert!(!balanced_without(&g, &[false; 3]));
        assert!(balanced_without(&g, &[true, false, false]));
        let l = SignedGraph::build(2, [(0, 0, N), (0, 1, P)]).unwrap();
        assert!(!balanced_without(&l, &[false, false]));
        assert!(balanced_without(&l, &[true, false]));
    }
}
