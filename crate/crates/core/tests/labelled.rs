mod common;

use common::arb_graph;
use dompack::solve::{brute_force, BruteForce};
use dompack::{Error, Graph, InstanceU32, Label, LabelledInstance, Sense};
use proptest::prelude::*;

fn arb_labelled() -> impl Strategy<Value = LabelledInstance> {
    (arb_graph(5), -1i64..=1, 1i64..=2, 0i64..=2).prop_flat_map(|(g, base, step, levels)| {
        let n = g.n();
        let label = prop_oneof![
            2 => Just(Label::Free),
            1 => (0..=levels).prop_map(move |j| Label::Fixed(base + j * step)),
        ];
        (proptest::collection::vec(label, n), proptest::collection::vec(-3i64..=5, n)).prop_map(move |(t, k)| {
            LabelledInstance::new(g.clone(), base, step, levels, t, k).unwrap()
        })
    })
}

#[test]
fn signed_domination_on_small_graphs() {
    for (g, expected) in [(Graph::complete(3), 1), (Graph::path(3), 3), (Graph::path(4), 4)] {
        let (inst, map) = InstanceU32::from_signed(g).unwrap();
        assert_eq!(map.apply(brute_force(&inst).unwrap().value), expected);
    }
}

#[test]
fn mdom_with_required_vertex() {
    // P3 with quota 1 everywhere, the middle vertex labelled 0
    let l = LabelledInstance::new(
        Graph::path(3),
        0,
        1,
        1,
        vec![Label::Free, Label::Fixed(0), Label::Free],
        vec![1; 3],
    )
    .unwrap();
    assert_eq!(BruteForce::default().solve_labelled(&l, Sense::Dominate).unwrap(), (vec![1, 0, 1], 2));
}

proptest! {
    #[test]
    fn translation_preserves_labelled_optimum(l in arb_labelled()) {
        let direct = BruteForce::default().solve_labelled(&l, Sense::Dominate);
        let (inst, map, lift) = InstanceU32::from_labelled(&l, Sense::Dominate).unwrap();
        match (direct, brute_force(&inst)) {
            (Ok((_, value)), Ok(best)) => {
                prop_assert_eq!(map.apply(best.value), value as i128);
                let f = lift.apply(&best.assignment).unwrap();
                prop_assert!(l.is_feasible(&f, Sense::Dominate));
                prop_assert_eq!(f.iter().sum::<i64>(), value);
            }
            (Err(Error::InfeasibleLabelled), Err(Error::Infeasible { .. })) => {}
            (a, b) => prop_assert!(false, "direct {:?}, translated {:?}", a, b),
        }
    }
}
