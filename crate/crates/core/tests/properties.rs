use proptest::prelude::*;

use spectough::connectivity::max_independent_set;
use spectough::families::{combinations, complete, extremal_x, lattice, petersen, triangular};
use spectough::spectral::{spectrum, theta, DEFAULT_GROUP_TOL};
use spectough::toughness::{toughness_exact, toughness_naive, ToughnessOptions};
use spectough::{isomorphic_small, Graph, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = combinations(n, 2)
                .into_iter()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(p, _)| (p[0], p[1]))
                .collect();
            Graph::build(n, &edges).unwrap()
        })
    })
}

fn arb_subset(n: usize) -> impl Strategy<Value = VertexSet> {
    proptest::collection::vec(any::<bool>(), n)
        .prop_map(move |bits| VertexSet::from_indices(n, (0..n).filter(|&i| bits[i])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn complement_is_an_involution(g in arb_graph(12)) {
        let c = g.complement();
        prop_assert_eq!(g.edge_count() + c.edge_count(), g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn join_adds_all_cross_edges(g in arb_graph(7), h in arb_graph(7)) {
        let j = Graph::join(&g, &h);
        prop_assert_eq!(j.n(), g.n() + h.n());
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.n() * h.n());
    }

    #[test]
    fn spectrum_moments(g in arb_graph(12)) {
        let sp = spectrum(&g, DEFAULT_GROUP_TOL).unwrap();
        prop_assert!(sp.trace().abs() < 1e-8);
        prop_assert!((sp.sum_of_squares() - 2.0 * g.edge_count() as f64).abs() < 1e-8);
        let m: usize = sp.grouped.iter().map(|e| e.multiplicity).sum();
        prop_assert_eq!(m, g.n());
    }

    #[test]
    fn components_never_exceed_independence_number(
        (g, s) in arb_graph(11).prop_flat_map(|g| { let n = g.n(); (Just(g), arb_subset(n)) })
    ) {
        let alpha = max_independent_set(&g, false).unwrap().alpha;
        let (c, parts) = g.components_after_removal(&s);
        prop_assert!(c <= alpha);
        prop_assert_eq!(parts.iter().map(VertexSet::len).sum::<usize>(), g.n() - s.len());
    }

    #[test]
    fn improvement_trace_descends_to_the_value(g in arb_graph(10)) {
        prop_assume!(g.is_connected() && !g.is_complete());
        let c = toughness_exact(&g, &ToughnessOptions::default()).unwrap();
        let trace = &c.stats.improvements;
        prop_assert!(!trace.is_empty());
        prop_assert!(trace.windows(2).all(|w| w[1] < w[0]));
        prop_assert_eq!(*trace.last().unwrap(), c.value);
        prop_assert_eq!(c.value, toughness_naive(&g).unwrap().value);
    }
}

#[test]
fn line_graph_of_complete_graph() {
    for v in 2..=8 {
        let l = complete(v).unwrap().line_graph();
        assert_eq!(l.n(), v * (v - 1) / 2);
        // Each vertex of K_v contributes C(v - 1, 2) adjacent pairs.
        assert_eq!(l.edge_count(), v * (v - 1) * (v - 2) / 2);
        if v >= 4 {
            assert_eq!(l, triangular(v).unwrap());
        }
    }
}

#[test]
fn disconnected_graph_has_zero_toughness() {
    let g = Graph::disjoint_union(&[lattice(2).unwrap(), petersen()]);
    let c = toughness_exact(&g, &ToughnessOptions::default()).unwrap();
    assert_eq!(c.value, spectough::Rational::from_int(0));
    assert!(c.witness.is_empty());
}

#[test]
fn thread_count_does_not_change_results() {
    for g in [petersen(), lattice(4).unwrap(), triangular(6).unwrap()] {
        let run = |threads| {
            let opts = ToughnessOptions { threads, ..ToughnessOptions::default() }.with_minimizers();
            let c = toughness_exact(&g, &opts).unwrap();
            (c.value, c.minimizers)
        };
        assert_eq!(run(1), run(4));
    }
}

/// Every graph on `n` vertices with the given sorted degree sequence.
fn with_degrees(n: usize, target: &[usize]) -> Vec<Graph> {
    let pairs = combinations(n, 2);
    let m = target.iter().sum::<usize>() / 2;
    combinations(pairs.len(), m)
        .into_iter()
        .filter_map(|pick| {
            let edges: Vec<(usize, usize)> = pick.iter().map(|&i| (pairs[i][0], pairs[i][1])).collect();
            let g = Graph::build(n, &edges).unwrap();
            let mut d = g.degrees();
            d.sort_unstable();
            (d == target).then_some(g)
        })
        .collect()
}

#[test]
fn extremal_graph_minimizes_spectral_radius() {
    for k in [3usize, 4, 5] {
        let th = theta(k).unwrap();
        let xk = extremal_x(k).unwrap();
        let mut d = xk.degrees();
        d.sort_unstable();
        // Graphs sharing the degree sequence of X_k: only X_k reaches theta.
        let mut reached = 0;
        for g in with_degrees(k + 1, &d) {
            let l1 = spectrum(&g, DEFAULT_GROUP_TOL).unwrap().largest();
            assert!(l1 >= th - 1e-9, "k = {k}: {l1} < {th}");
            if l1 <= th + 1e-9 {
                assert!(isomorphic_small(&g, &xk));
                reached += 1;
            }
        }
        assert!(reached > 0, "k = {k}");
        // On k + 2 vertices: all degrees k except one vertex of degree k - 1
        // (odd k) or k - 2 (even k); the radius stays strictly above theta.
        let n = k + 2;
        let short = if k % 2 == 1 { k - 1 } else { k - 2 };
        let mut d = vec![k; n];
        d[0] = short;
        let family = with_degrees(n, &d);
        assert!(!family.is_empty());
        for g in family.into_iter().filter(Graph::is_connected) {
            let l1 = spectrum(&g, DEFAULT_GROUP_TOL).unwrap().largest();
            assert!(l1 > th + 1e-9, "k = {k}, n = {n}: {l1}");
        }
    }
}
