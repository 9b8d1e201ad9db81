use frustration_core::certify::{degree_sequence_bound, matching_switching, vertex_to_edge_set};
use frustration_core::{
    frustration_index_exact, frustration_index_oracle, frustration_number_exact,
    frustration_number_oracle, is_balanced, switch_to_all_positive, Balance, Budget,
    DeletionCertificate, Edge, FrustrationResult, Sign, SignedGraph, SwitchingSet,
};
use proptest::prelude::*;

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Positive), Just(Sign::Negative)]
}

/// Multigraphs with loops and parallel edges.
fn graph(max_n: usize, max_m: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n, sign()), 0..=max_m).prop_map(move |es| {
            SignedGraph::new(
                n,
                es.into_iter().map(|(u, v, s)| Edge::new(u, v, s)).collect(),
            )
            .unwrap()
        })
    })
}

fn graph_and_set(max_n: usize, max_m: usize) -> impl Strategy<Value = (SignedGraph, SwitchingSet)> {
    graph(max_n, max_m).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), prop::collection::vec(any::<bool>(), n)).prop_map(|(g, mask)| {
            let s = SwitchingSet::new(mask.iter().enumerate().filter(|(_, b)| **b).map(|(v, _)| v));
            (g, s)
        })
    })
}

/// Subcubic multigraphs built by rejecting over-capacity edges.
fn subcubic(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    graph(max_n, 3 * max_n / 2 + 2).prop_map(|g| {
        let mut deg = vec![0; g.vertex_count()];
        let mut kept = Vec::new();
        for e in g.edges() {
            let add = if e.is_loop() { 2 } else { 1 };
            if deg[e.u] + add <= 3 && (e.is_loop() || deg[e.v] < 3) {
                deg[e.u] += add;
                if !e.is_loop() {
                    deg[e.v] += 1;
                }
                kept.push(*e);
            }
        }
        SignedGraph::new(g.vertex_count(), kept).unwrap()
    })
}

fn deletion_balances(g: &SignedGraph, r: &FrustrationResult) -> bool {
    let rest = match &r.certificate {
        DeletionCertificate::Edges(e) => g.delete_edges(e).unwrap(),
        DeletionCertificate::Vertices(v) => g.delete_vertices(v).unwrap(),
    };
    is_balanced(&rest.graph).is_balanced()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn switching_is_an_involution((g, s) in graph_and_set(8, 14)) {
        let twice = g.switch(&s).unwrap().switch(&s).unwrap();
        prop_assert_eq!(twice, g);
    }

    #[test]
    fn balance_is_switching_invariant((g, s) in graph_and_set(8, 14)) {
        let h = g.switch(&s).unwrap();
        prop_assert_eq!(is_balanced(&g).is_balanced(), is_balanced(&h).is_balanced());
    }

    #[test]
    fn certificates_recheck((g, s) in graph_and_set(8, 14)) {
        match is_balanced(&g) {
            Balance::Balanced(cert) => {
                prop_assert!(cert.verify(&g));
                let h = g.switch(&switch_to_all_positive(&g).unwrap()).unwrap();
                prop_assert_eq!(h.negative_count(), 0);
            }
            Balance::Unbalanced { witness } => {
                prop_assert!(g.is_circle(&witness));
                prop_assert_eq!(g.cycle_sign(&witness).unwrap(), Sign::Negative);
                // the same circle keeps its sign after switching
                let h = g.switch(&s).unwrap();
                prop_assert_eq!(h.cycle_sign(&witness).unwrap(), Sign::Negative);
            }
        }
    }

    #[test]
    fn negative_loop_never_balanced(g in graph(6, 10), v in 0usize..6) {
        let v = v % g.vertex_count();
        let mut edges = g.edges().to_vec();
        edges.push(Edge::new(v, v, Sign::Negative));
        let h = SignedGraph::new(g.vertex_count(), edges).unwrap();
        prop_assert!(!is_balanced(&h).is_balanced());
    }

    #[test]
    fn switched_positive_graph_is_balanced((g, s) in graph_and_set(8, 14)) {
        let positive = SignedGraph::new(
            g.vertex_count(),
            g.edges().iter().map(|e| Edge::new(e.u, e.v, Sign::Positive)).collect(),
        ).unwrap();
        let h = positive.switch(&s).unwrap();
        let back = h.switch(&switch_to_all_positive(&h).unwrap()).unwrap();
        prop_assert_eq!(back.negative_count(), 0);
    }

    #[test]
    fn shortest_circle_is_a_circle(g in graph(8, 12)) {
        if let Some(c) = g.shortest_circle() {
            prop_assert!(g.is_circle(&c));
        }
    }

    #[test]
    fn exact_matches_oracles(g in graph(5, 10)) {
        let b = Budget::default();
        let li = frustration_index_exact(&g, &b).unwrap();
        let lo = frustration_index_oracle(&g, &b).unwrap();
        let ni = frustration_number_exact(&g, &b).unwrap();
        let no = frustration_number_oracle(&g, &b).unwrap();
        prop_assert_eq!(li.value, lo.value);
        prop_assert_eq!(ni.value, no.value);
        prop_assert!(ni.value <= li.value);
        for r in [&li, &lo, &ni, &no] {
            prop_assert_eq!(r.certificate.len(), r.value);
            prop_assert!(deletion_balances(&g, r));
        }
    }

    #[test]
    fn values_are_switching_invariant((g, s) in graph_and_set(7, 12)) {
        let b = Budget::default();
        let h = g.switch(&s).unwrap();
        prop_assert_eq!(
            frustration_index_exact(&g, &b).unwrap().value,
            frustration_index_exact(&h, &b).unwrap().value
        );
        prop_assert_eq!(
            frustration_number_exact(&g, &b).unwrap().value,
            frustration_number_exact(&h, &b).unwrap().value
        );
    }

    #[test]
    fn subcubic_index_equals_number(g in subcubic(10)) {
        let b = Budget::default();
        let l = frustration_index_exact(&g, &b).unwrap();
        let l0 = frustration_number_exact(&g, &b).unwrap();
        prop_assert_eq!(l.value, l0.value);

        let DeletionCertificate::Vertices(x) = &l0.certificate else { unreachable!() };
        let cert = vertex_to_edge_set(&g, x).unwrap();
        prop_assert!(cert.all_edges().len() <= x.len());
        for w in cert.negative_counts.windows(2) {
            prop_assert!(w[1] < w[0]);
        }
        let rest = g.delete_edges(&cert.all_edges()).unwrap();
        prop_assert!(is_balanced(&rest.graph).is_balanced());
    }

    #[test]
    fn degree_bound_dominates_index(g in graph(6, 12)) {
        let b = Budget::default();
        let l0 = frustration_number_exact(&g, &b).unwrap().value;
        let l = frustration_index_exact(&g, &b).unwrap().value;
        prop_assert!(degree_sequence_bound(&g, l0).unwrap() >= l);
    }

    #[test]
    fn matching_switching_invariants(g in subcubic(12)) {
        let loopless = SignedGraph::new(
            g.vertex_count(),
            g.edges().iter().copied().filter(|e| !e.is_loop()).collect(),
        ).unwrap();
        let m = matching_switching(&loopless).unwrap();
        let neg = m.negative_edges();
        for (i, &a) in neg.iter().enumerate() {
            for &b in &neg[i + 1..] {
                let (ea, eb) = (loopless.edge(a), loopless.edge(b));
                prop_assert!(!ea.has_endpoint(eb.u) && !ea.has_endpoint(eb.v));
            }
        }
        prop_assert_eq!(loopless.switch(&m.total_switching()).unwrap(), m.graph.clone());
        prop_assert!(2 * m.deletion_vertices().len() <= loopless.vertex_count());
        let rest = loopless.delete_vertices(&m.deletion_vertices()).unwrap();
        prop_assert!(is_balanced(&rest.graph).is_balanced());
    }
}
