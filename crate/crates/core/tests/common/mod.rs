#![allow(dead_code)]

use dompack::{Graph, InstanceU32, Sense};
use proptest::prelude::*;

/// Optimum by plain mixed-radix enumeration, no pruning. `None` if infeasible.
pub fn naive_optimum(inst: &InstanceU32) -> Option<i64> {
    let g = inst.graph();
    let n = g.n();
    let mut f = vec![0u32; n];
    let mut best: Option<i64> = None;
    loop {
        let ok = (0..n).all(|v| {
            let load: u32 = g.closed_iter(v).map(|w| f[w]).sum();
            match inst.sense() {
                Sense::Dominate => load >= inst.k()[v],
                Sense::Pack => load <= inst.k()[v],
            }
        });
        if ok {
            let w: i64 = f.iter().map(|&x| x as i64).sum();
            best = Some(match (best, inst.sense()) {
                (None, _) => w,
                (Some(b), Sense::Dominate) => b.min(w),
                (Some(b), Sense::Pack) => b.max(w),
            });
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return best;
            }
            if f[pos] < inst.u()[pos] {
                f[pos] += 1;
                break;
            }
            f[pos] = 0;
            pos += 1;
        }
    }
}

pub fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    let edges: Vec<_> = pairs.enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, e)| e).collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, bits)| graph_from_bits(n, bits))
}

/// Graph with per-vertex `(k, u)` drawn from `0..=max`.
pub fn arb_instance(max_n: usize, max: u32, sense: Sense) -> impl Strategy<Value = InstanceU32> {
    arb_graph(max_n).prop_flat_map(move |g| {
        let n = g.n();
        (proptest::collection::vec(0..=max, n), proptest::collection::vec(0..=max, n)).prop_map(move |(k, u)| {
            let k = match sense {
                Sense::Pack => k,
                Sense::Dominate => (0..n).map(|v| k[v].min(g.closed_iter(v).map(|w| u[w]).sum())).collect(),
            };
            InstanceU32::new(g.clone(), k, u, sense).unwrap()
        })
    })
}

pub fn arb_sense() -> impl Strategy<Value = Sense> {
    prop_oneof![Just(Sense::Dominate), Just(Sense::Pack)]
}
