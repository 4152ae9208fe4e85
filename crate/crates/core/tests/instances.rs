mod common;

use common::{arb_instance, arb_sense, naive_optimum};
use dompack::format::{parse_instance, parse_labelled, serialize_instance};
use dompack::solve::brute_force;
use dompack::{Assignment, Constraint, Error, Graph, InstanceU32, InstanceU64, Sense};
use proptest::prelude::*;

#[test]
fn domination_on_p3() {
    let inst = InstanceU32::from_domination(Graph::path(3));
    assert!(inst.is_feasible(&Assignment::new(vec![0, 1, 0])).unwrap());
    let gap = inst.check(&Assignment::new(vec![1, 0, 0])).unwrap().unwrap();
    assert_eq!((gap.vertex, gap.constraint), (2, Constraint::Quota));
    assert_eq!(brute_force(&inst).unwrap().value, 1);
}

#[test]
fn two_packing_limited_by_closed_neighborhoods() {
    let inst = InstanceU32::from_braces_k(Graph::complete(2), 2, Sense::Pack);
    assert_eq!(brute_force(&inst).unwrap().value, 2);
    let c5 = InstanceU32::from_two_packing(Graph::cycle(5).unwrap());
    assert_eq!(brute_force(&c5).unwrap().value, 1);
}

#[test]
fn tuple_domination_on_star() {
    let inst = InstanceU32::from_k_tuple(Graph::star(4), 2);
    assert_eq!(brute_force(&inst).unwrap().value, 5);
}

#[test]
fn infeasible_domination_is_reported() {
    let inst = InstanceU32::new(Graph::path(2), vec![3, 1], vec![1, 1], Sense::Dominate).unwrap();
    assert!(matches!(inst.check_feasible(), Err(Error::Infeasible { vertex: 0, .. })));
    assert!(inst.normalize().is_err());
    assert!(brute_force(&inst).is_err());
}

#[test]
fn wide_scalar() {
    let inst = InstanceU64::from_k_tuple(Graph::complete(4), 3);
    assert_eq!(brute_force(&inst).unwrap().value, 3);
}

#[test]
fn size_mismatch() {
    assert!(matches!(
        InstanceU32::new(Graph::path(3), vec![1; 2], vec![1; 3], Sense::Pack),
        Err(Error::SizeMismatch { expected: 3, actual: 2 })
    ));
}

#[test]
fn signed_and_minus_maps() {
    let (signed, map) = InstanceU32::from_signed(Graph::path(3)).unwrap();
    assert_eq!(signed.k(), &[2, 2, 2]);
    assert_eq!(map.apply(brute_force(&signed).unwrap().value), 3);
    let (minus, map) = InstanceU32::from_minus(Graph::path(3)).unwrap();
    assert_eq!(minus.k(), &[3, 4, 3]);
    // (0, 1, 0) is an optimal minus dominating function
    assert_eq!(map.apply(brute_force(&minus).unwrap().value), 1);
}

#[test]
fn labelled_file_solves() {
    let text = "p edge 3 2\ne 1 2\ne 2 3\nlabel 0 1 1\nt 2 0\nk default 1\n";
    let l = parse_labelled(text).unwrap();
    let (inst, map, lift) = InstanceU32::from_labelled(&l, Sense::Dominate).unwrap();
    let best = brute_force(&inst).unwrap();
    assert_eq!(map.apply(best.value), 2);
    assert_eq!(lift.apply(&best.assignment).unwrap(), vec![1, 0, 1]);
}

proptest! {
    #[test]
    fn brute_force_matches_naive_enumeration(inst in arb_instance(6, 3, Sense::Pack)) {
        prop_assert_eq!(Some(brute_force(&inst).unwrap().value as i64), naive_optimum(&inst));
    }

    #[test]
    fn brute_force_matches_naive_domination(inst in arb_instance(6, 3, Sense::Dominate)) {
        let best = brute_force(&inst).unwrap();
        prop_assert_eq!(Some(best.value as i64), naive_optimum(&inst));
        prop_assert!(inst.is_feasible(&best.assignment).unwrap());
    }

    #[test]
    fn normalize_is_idempotent_and_preserves_optimum(inst in arb_sense().prop_flat_map(|s| arb_instance(6, 3, s))) {
        let once = inst.normalize().unwrap();
        prop_assert!(once.is_normalized());
        prop_assert_eq!(once.normalize().unwrap(), once.clone());
        prop_assert_eq!(naive_optimum(&once), naive_optimum(&inst));
    }

    #[test]
    fn instance_text_round_trip(inst in arb_instance(7, 4, Sense::Pack)) {
        let again: InstanceU32 = parse_instance(&serialize_instance(&inst)).unwrap();
        prop_assert_eq!(again, inst);
    }
}
