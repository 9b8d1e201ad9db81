//! Named signed graphs and seeded random corpora.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, SignedGraph};
use crate::sign::Sign;

const CUBIC_ATTEMPTS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("no graph accepted after {0} attempts")]
    RejectionBudget(usize),
}

/// Which edge of each triangle in [`book_of_triangles_with`] is negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum PageSign {
    /// The edge not touching the shared vertex.
    #[default]
    Opposite,
    /// The first edge from the shared vertex.
    Spoke,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    K4AllNegative {
        copies: usize,
    },
    ThetaOneNegative {
        copies: usize,
    },
    BookOfTriangles {
        pages: usize,
    },
    WagnerSigned,
    RandomCubicGirth4 {
        vertices: usize,
        seed: u64,
    },
    RandomSubcubic {
        vertices: usize,
        loops: bool,
        seed: u64,
    },
    RandomSigned {
        vertices: usize,
        edges: usize,
        loops: bool,
        parallel: bool,
        seed: u64,
    },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<SignedGraph, FamilyError> {
        match *self {
            FamilySpec::K4AllNegative { copies } => Ok(k4_all_negative(copies)),
            FamilySpec::ThetaOneNegative { copies } => Ok(theta_one_negative(copies)),
            FamilySpec::BookOfTriangles { pages } => Ok(book_of_triangles(pages)),
            FamilySpec::WagnerSigned => Ok(wagner_signed()),
            FamilySpec::RandomCubicGirth4 { vertices, seed } => random_cubic_girth4(vertices, seed),
            FamilySpec::RandomSubcubic {
                vertices,
                loops,
                seed,
            } => Ok(random_subcubic_with(vertices, loops, seed)),
            FamilySpec::RandomSigned {
                vertices,
                edges,
                loops,
                parallel,
                seed,
            } => random_signed(vertices, edges, loops, parallel, seed),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::K4AllNegative { copies } => write!(f, "k4neg k={copies}"),
            FamilySpec::ThetaOneNegative { copies } => write!(f, "theta k={copies}"),
            FamilySpec::BookOfTriangles { pages } => write!(f, "book n={pages}"),
            FamilySpec::WagnerSigned => write!(f, "wagner"),
            FamilySpec::RandomCubicGirth4 { vertices, seed } => {
                write!(f, "cubic-girth4 n={vertices} seed={seed}")
            }
            FamilySpec::RandomSubcubic {
                vertices,
                loops,
                seed,
            } => write!(f, "subcubic n={vertices} loops={loops} seed={seed}"),
            FamilySpec::RandomSigned {
                vertices,
                edges,
                loops,
                parallel,
                seed,
            } => write!(
                f,
                "signed n={vertices} m={edges} loops={loops} parallel={parallel} seed={seed}"
            ),
        }
    }
}

fn disjoint_copies(copies: usize, unit: &SignedGraph) -> SignedGraph {
    (0..copies).fold(SignedGraph::empty(0), |acc, _| acc.disjoint_union(unit))
}

/// `copies` disjoint copies of K4 with every edge negative.
pub fn k4_all_negative(copies: usize) -> SignedGraph {
    let unit = SignedGraph::build(
        4,
        (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v, Sign::Negative))),
    )
    .expect("static");
    disjoint_copies(copies, &unit)
}

/// `copies` disjoint copies of two vertices joined by three links, one negative.
pub fn theta_one_negative(copies: usize) -> SignedGraph {
    let unit = SignedGraph::build(
        2,
        [
            (0, 1, Sign::Positive),
            (0, 1, Sign::Positive),
            (0, 1, Sign::Negative),
        ],
    )
    .expect("static");
    disjoint_copies(copies, &unit)
}

/// `pages` triangles sharing vertex 0, one negative edge each, placed
/// opposite the shared vertex.
pub fn book_of_triangles(pages: usize) -> SignedGraph {
    book_of_triangles_with(pages, PageSign::Opposite)
}

pub fn book_of_triangles_with(pages: usize, placement: PageSign) -> SignedGraph {
    use Sign::{Negative as N, Positive as P};
    let mut edges = Vec::with_capacity(3 * pages);
    for i in 0..pages {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        match placement {
            PageSign::Opposite => edges.extend([(0, a, P), (0, b, P), (a, b, N)]),
            PageSign::Spoke => edges.extend([(0, a, N), (0, b, P), (a, b, P)]),
        }
    }
    SignedGraph::build(2 * pages + 1, edges).expect("static")
}

/// Octagon `0..8` with positive rim edges `i, i+1` (edges 0..8) and negative
/// antipodal diagonals `i, i+4` for `i < 4` (edges 8..12).
pub fn wagner_signed() -> SignedGraph {
    let rim = (0..8).map(|i| (i, (i + 1) % 8, Sign::Positive));
    let diagonals = (0..4).map(|i| (i, i + 4, Sign::Negative));
    SignedGraph::build(8, rim.chain(diagonals)).expect("static")
}

fn random_sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Negative
    } else {
        Sign::Positive
    }
}

/// Uniform random endpoints and signs, `edges` edges on `vertices` vertices.
pub fn random_signed(
    vertices: usize,
    edges: usize,
    loops: bool,
    parallel: bool,
    seed: u64,
) -> Result<SignedGraph, FamilyError> {
    let links = vertices * vertices.saturating_sub(1) / 2;
    let slots = if loops { links + vertices } else { links };
    if edges > 0 && slots == 0 {
        return Err(FamilyError::Infeasible(format!(
            "{edges} edges on {vertices} vertices"
        )));
    }
    if !parallel && edges > slots {
        return Err(FamilyError::Infeasible(format!(
            "{edges} edges exceed {slots} distinct slots"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut used = std::collections::HashSet::new();
    let mut out = Vec::with_capacity(edges);
    while out.len() < edges {
        let u = rng.gen_range(0..vertices);
        let v = rng.gen_range(0..vertices);
        if u == v && !loops {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if !parallel && !used.insert(key) {
            continue;
        }
        out.push(Edge::new(u, v, random_sign(&mut rng)));
    }
    Ok(SignedGraph::new(vertices, out).expect("ids in range"))
}

/// Random signed multigraph of maximum degree 3, with loops and parallel edges.
pub fn random_subcubic(vertices: usize, seed: u64) -> SignedGraph {
    random_subcubic_with(vertices, true, seed)
}

/// Random signed graph of maximum degree 3. Parallel edges may occur; loops
/// only when `loops` is set. Edge count is drawn from `0..=3n/2` and filled
/// greedily while degree capacity allows.
pub fn random_subcubic_with(vertices: usize, loops: bool, seed: u64) -> SignedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; vertices];
    let mut out = Vec::new();
    if vertices == 0 {
        return SignedGraph::empty(0);
    }
    let target = rng.gen_range(0..=3 * vertices / 2);
    let mut attempts = 0;
    while out.len() < target && attempts < 20 * vertices + 20 {
        attempts += 1;
        let u = rng.gen_range(0..vertices);
        if loops && rng.gen_bool(0.1) {
            if degree[u] <= 1 {
                degree[u] += 2;
                out.push(Edge::new(u, u, random_sign(&mut rng)));
            }
            continue;
        }
        let v = rng.gen_range(0..vertices);
        if u == v || degree[u] >= 3 || degree[v] >= 3 {
            continue;
        }
        degree[u] += 1;
        degree[v] += 1;
        out.push(Edge::new(u, v, random_sign(&mut rng)));
    }
    SignedGraph::new(vertices, out).expect("ids in range")
}

/// Random simple cubic graph of girth at least 4 with uniform signs, from the
/// pairing model with rejection. Edges are listed in `(min, max)` order.
pub fn random_cubic_girth4(vertices: usize, seed: u64) -> Result<SignedGraph, FamilyError> {
    if vertices % 2 == 1 {
        return Err(FamilyError::Infeasible(format!(
            "cubic graphs need an even vertex count, got {vertices}"
        )));
    }
    if vertices < 6 {
        return Err(FamilyError::Infeasible(format!(
            "no cubic graph of girth at least 4 on {vertices} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * vertices).map(|p| p / 3).collect();
    for _ in 0..CUBIC_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut pairs: Vec<(usize, usize)> = points
            .chunks_exact(2)
            .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
            .collect();
        pairs.sort_unstable();
        if pairs.iter().any(|&(u, v)| u == v) || pairs.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let unsigned =
            SignedGraph::build(vertices, pairs.iter().map(|&(u, v)| (u, v, Sign::Positive)))
                .expect("ids in range");
        if !unsigned.girth().at_least(4) {
            continue;
        }
        let edges = pairs
            .into_iter()
            .map(|(u, v)| Edge::new(u, v, random_sign(&mut rng)))
            .collect();
        return Ok(SignedGraph::new(vertices, edges).expect("ids in range"));
    }
    Err(FamilyError::RejectionBudget(CUBIC_ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    #[test]
    fn k4_family_shape() {
        let g = k4_all_negative(2);
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.negative_count(), 12);
        assert!(g.is_cubic());
        assert_eq!(k4_all_negative(1).girth(), Girth::Finite(3));
        assert_eq!(k4_all_negative(0).vertex_count(), 0);
    }

    #[test]
    fn theta_family_shape() {
        let g = theta_one_negative(3);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.negative_count(), 3);
        assert!(g.is_cubic() && !g.is_simple());
    }

    #[test]
    fn book_shape() {
        let g = book_of_triangles(4);
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.degree(0), 8);
        for i in g.negative_edges() {
            assert!(!g.edge(i).has_endpoint(0));
        }
        let spoke = book_of_triangles_with(4, PageSign::Spoke);
        assert_eq!(spoke.negative_count(), 4);
        assert!(spoke
            .negative_edges()
            .iter()
            .all(|&i| spoke.edge(i).has_endpoint(0)));
    }

    #[test]
    fn wagner_shape() {
        let g = wagner_signed();
        assert!(g.is_cubic() && g.is_simple());
        assert_eq!(g.girth(), Girth::Finite(4));
        assert_eq!(g.negative_edges(), vec![8, 9, 10, 11]);
    }

    #[test]
    fn random_cubic_postconditions() {
        for seed in 0..20 {
            let g = random_cubic_girth4(8, seed).unwrap();
            assert!(g.is_cubic() && g.is_simple() && g.girth().at_least(4));
        }
        assert!(matches!(
            random_cubic_girth4(7, 0),
            Err(FamilyError::Infeasible(_))
        ));
        assert!(matches!(
            random_cubic_girth4(4, 0),
            Err(FamilyError::Infeasible(_))
        ));
    }

    #[test]
    fn random_subcubic_postconditions() {
        for seed in 0..50 {
            let g = random_subcubic(12, seed);
            assert!(g.max_degree() <= 3);
            let l = random_subcubic_with(12, false, seed);
            assert!(!l.has_loops() && l.is_subcubic());
        }
        assert_eq!(random_subcubic(0, 1).vertex_count(), 0);
    }

    #[test]
    fn seeds_are_deterministic() {
        assert_eq!(random_subcubic(12, 7), random_subcubic(12, 7));
        assert_eq!(random_cubic_girth4(10, 3), random_cubic_girth4(10, 3));
        assert_eq!(
            random_signed(5, 8, true, true, 9),
            random_signed(5, 8, true, true, 9)
        );
    }

    #[test]
    fn random_signed_limits() {
        let g = random_signed(4, 6, false, false, 1).unwrap();
        assert!(g.is_simple());
        assert!(random_signed(4, 7, false, false, 1).is_err());
        assert!(random_signed(1, 1, false, true, 1).is_err());
        assert!(random_signed(1, 3, true, true, 1).unwrap().has_loops());
    }

    #[test]
    fn spec_generates() {
        let spec = FamilySpec::BookOfTriangles { pages: 3 };
        assert_eq!(spec.generate().unwrap(), book_of_triangles(3));
        assert_eq!(spec.to_string(), "book n=3");
    }
}
