mod common;

use common::arb_graph;
use dompack::format::{parse_order, serialize_order};
use dompack::generate::{random_intervals, random_tree};
use dompack::ordering::{find_strong_elimination, verify, verify_max_neighborhood, verify_strong_elimination};
use dompack::{EliminationOrder, Graph, OrderKind, Search, Violation};
use proptest::prelude::*;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for x in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=p.len()).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, x);
                    q
                })
            })
            .collect();
    }
    out
}

fn any_order_passes(g: &Graph, kind: OrderKind) -> bool {
    permutations(g.n()).into_iter().any(|p| {
        let o = EliminationOrder::new(p, kind).unwrap();
        verify(g, &o).unwrap().is_none()
    })
}

#[test]
fn c4_rejects_every_order() {
    let c4 = Graph::cycle(4).unwrap();
    assert!(!any_order_passes(&c4, OrderKind::StrongElimination));
    assert_eq!(find_strong_elimination(&c4), Search::NotFound { exhaustive: true });
}

#[test]
fn sun_is_chordal_but_not_strongly_chordal() {
    let sun = Graph::sun3();
    assert!(!any_order_passes(&sun, OrderKind::StrongElimination));
    assert!(matches!(find_strong_elimination(&sun), Search::NotFound { .. }));
}

#[test]
fn violation_is_first_in_lexicographic_order() {
    let o = EliminationOrder::new(vec![1, 0, 2], OrderKind::StrongElimination).unwrap();
    let v = verify_strong_elimination(&Graph::path(3), &o).unwrap().unwrap();
    assert_eq!(v, Violation::NotNested { i: 0, j: 0, k: 1, witness: 2 });
}

#[test]
fn missing_maximum_neighbor() {
    // in C4 no closed neighborhood contains another
    let c4 = Graph::cycle(4).unwrap();
    let o = EliminationOrder::natural(4, OrderKind::MaxNeighborhood);
    assert_eq!(verify_max_neighborhood(&c4, &o).unwrap(), Some(Violation::NoMaximumNeighbor { i: 0 }));
}

#[test]
fn long_path_is_found() {
    let g = Graph::path(2000);
    let order = find_strong_elimination(&g).order().unwrap();
    assert_eq!(verify_strong_elimination(&g, &order).unwrap(), None);
}

#[test]
fn order_text() {
    let o = parse_order("c first line\norder 2 3 1\n", OrderKind::MaxNeighborhood).unwrap();
    assert_eq!(o.vertices(), &[1, 2, 0]);
    assert_eq!(o.kind(), OrderKind::MaxNeighborhood);
    assert_eq!(serialize_order(&o), "order 2 3 1\n");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn finder_agrees_with_exhaustive_search(g in arb_graph(7)) {
        let exists = any_order_passes(&g, OrderKind::StrongElimination);
        match find_strong_elimination(&g) {
            Search::Found(o) => {
                prop_assert!(exists);
                prop_assert_eq!(verify_strong_elimination(&g, &o).unwrap(), None);
            }
            Search::NotFound { exhaustive } => {
                prop_assert!(exhaustive);
                prop_assert!(!exists);
            }
        }
    }

    #[test]
    fn strong_orders_have_maximum_neighbors(g in arb_graph(7)) {
        if let Search::Found(o) = find_strong_elimination(&g) {
            let o = EliminationOrder::new(o.vertices().to_vec(), OrderKind::MaxNeighborhood).unwrap();
            prop_assert_eq!(verify_max_neighborhood(&g, &o).unwrap(), None);
        }
    }

    #[test]
    fn trees_and_interval_graphs_are_dually_chordal(n in 1usize..=8, seed in any::<u64>(), tree in any::<bool>()) {
        let g = if tree { random_tree(n, seed).unwrap() } else { random_intervals(n, seed).unwrap().0 };
        prop_assert!(any_order_passes(&g, OrderKind::MaxNeighborhood));
    }

    #[test]
    fn interval_right_endpoint_order_is_strong(n in 1usize..60, seed in any::<u64>()) {
        let (g, iv) = random_intervals(n, seed).unwrap();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| iv[v].1);
        let o = EliminationOrder::new(order, OrderKind::StrongElimination).unwrap();
        prop_assert_eq!(verify_strong_elimination(&g, &o).unwrap(), None);
    }

    #[test]
    fn random_trees_are_found(n in 1usize..200, seed in any::<u64>()) {
        let g = random_tree(n, seed).unwrap();
        let o = find_strong_elimination(&g).order();
        prop_assert!(o.is_some());
        prop_assert_eq!(verify_strong_elimination(&g, &o.unwrap()).unwrap(), None);
    }
}
