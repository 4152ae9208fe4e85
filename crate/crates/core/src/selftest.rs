//! Seeded end-to-end checks, one per acceptance criterion.
//!
//! Every check draws fresh instances from an explicit seed and compares the
//! library against an exhaustive oracle. Oracles that only this module uses
//! (subset enumeration, sign enumeration, the literal ordering check) are
//! written here from the definitions, independent of the library code paths.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::generate::{random_graph, random_intervals, random_tree, rng};
use crate::graph::Graph;
use crate::instance::{GenInstance, Sense};
use crate::labelled::{Label, LabelledInstance};
use crate::ordering::{find_strong_elimination, verify_strong_elimination, EliminationOrder, OrderKind, Search};
use crate::solve::{greedy_packing, solve_domination_strongly_chordal, BruteForce, GreedyPacker};
use crate::transform::{dualize, eliminate_fixed_labels, flatten_capacities, free_reduction, uniformize_packing, Reduction};

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct Check {
    pub criterion: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} {}: {} ({}; {:.2}s)",
            self.criterion,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

pub const CRITERIA: [u8; 7] = [1, 2, 3, 4, 5, 6, 7];

const TITLES: [&str; 7] = [
    "duality exactness",
    "greedy packing and dual domination optimality",
    "reduction value maps and lifts",
    "classical problem cross-checks",
    "linear-time greedy scaling",
    "ordering verifier soundness",
    "normalization idempotence and value preservation",
];

/// Runs one criterion. Unknown numbers are an error.
pub fn run(criterion: u8, seed: u64) -> Result<Check> {
    let start = Instant::now();
    let outcome = match criterion {
        1 => duality(seed),
        2 => greedy(seed),
        3 => reductions(seed),
        4 => classical(),
        5 => scaling(),
        6 => orderings(seed),
        7 => normalization(seed),
        _ => return Err(Error::InvalidInput(format!("no criterion {criterion}"))),
    };
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(detail) => (true, detail),
        Err(detail) => (false, detail),
    };
    Ok(Check { criterion, title: TITLES[criterion as usize - 1], passed, detail, elapsed })
}

pub fn run_all(seed: u64) -> Vec<Check> {
    CRITERIA.iter().map(|&c| run(c, seed).expect("known criterion")).collect()
}

type Outcome = std::result::Result<String, String>;

fn fail(context: impl fmt::Display, e: impl fmt::Display) -> String {
    format!("{context}: {e}")
}

fn within(elapsed: Duration, limit_secs: u64, detail: String) -> Outcome {
    if elapsed > Duration::from_secs(limit_secs) {
        return Err(format!("{detail}; took {:.1}s, limit {limit_secs}s", elapsed.as_secs_f64()));
    }
    Ok(detail)
}

fn values(rng: &mut ChaCha8Rng, n: usize, max: u32) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(0..=max)).collect()
}

/// A random G(n,p), tree or interval graph on `1..=max_n` vertices.
fn mixed_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let seed = rng.gen();
    match rng.gen_range(0..3) {
        0 => random_graph(n, rng.gen_range(0.2..0.8), seed),
        1 => random_tree(n, seed),
        _ => random_intervals(n, seed).map(|(g, _)| g),
    }
    .expect("generator arguments are valid")
}

/// Lowers every quota to what the caps can reach, making domination feasible.
fn feasible_quota(g: &Graph, k: Vec<u32>, u: &[u32]) -> Vec<u32> {
    k.into_iter()
        .enumerate()
        .map(|(v, q)| q.min(g.closed_iter(v).map(|w| u[w]).sum()))
        .collect()
}

fn random_instance(rng: &mut ChaCha8Rng, g: Graph, sense: Sense, max: u32) -> GenInstance<u32> {
    let n = g.n();
    let u = values(rng, n, max);
    let mut k = values(rng, n, max);
    if sense == Sense::Dominate {
        k = feasible_quota(&g, k, &u);
    }
    GenInstance::new(g, k, u, sense).expect("lengths match")
}

fn describe(inst: &GenInstance<u32>) -> String {
    format!("{:?} k={:?} u={:?} {}", inst.graph(), inst.k(), inst.u(), inst.sense())
}

fn duality(seed: u64) -> Outcome {
    let start = Instant::now();
    let oracle = BruteForce::default();
    let mut rng = rng(seed ^ 0xd0a1);
    let mut count = 0;
    for i in 0..1000 {
        let sense = if i % 2 == 0 { Sense::Pack } else { Sense::Dominate };
        let g = mixed_graph(&mut rng, 7);
        let inst = random_instance(&mut rng, g, sense, 3).normalize().map_err(|e| fail("normalize", e))?;
        let dual = dualize(&inst).map_err(|e| fail(describe(&inst), e))?;
        let primal = oracle.solve(&inst).map_err(|e| fail(describe(&inst), e))?;
        let other = oracle.solve(&dual.output).map_err(|e| fail(describe(&dual.output), e))?;
        if primal.value != inst.total_cap() - other.value || dual.value_map.apply(other.value) != primal.value {
            return Err(format!(
                "{}: optimum {} but u(V) = {} and dual optimum {}",
                describe(&inst),
                primal.value,
                inst.total_cap(),
                other.value
            ));
        }
        let lifted = dual.lift(&other.assignment).map_err(|e| fail("lift", e))?;
        if inst.check(&lifted).map_err(|e| fail("check", e))?.is_some() || lifted.weight() != primal.value {
            return Err(format!("{}: complemented dual optimum is not optimal", describe(&inst)));
        }
        count += 1;
    }
    within(start.elapsed(), 60, format!("{count} instances, n <= 7, both senses"))
}

/// A tree with a strong elimination order from the finder, or an interval
/// graph ordered by right endpoint.
fn ordered_graph(rng: &mut ChaCha8Rng, max_n: usize) -> std::result::Result<(Graph, EliminationOrder), String> {
    let n = rng.gen_range(1..=max_n);
    let seed = rng.gen();
    if rng.gen_bool(0.5) {
        let g = random_tree(n, seed).map_err(|e| fail("tree", e))?;
        match find_strong_elimination(&g) {
            Search::Found(order) => Ok((g, order)),
            Search::NotFound { .. } => Err(format!("no strong elimination order found for tree {g:?}")),
        }
    } else {
        let (g, intervals) = random_intervals(n, seed).map_err(|e| fail("intervals", e))?;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (intervals[v].1, intervals[v].0, v));
        let order = EliminationOrder::new(order, OrderKind::StrongElimination).map_err(|e| fail("order", e))?;
        Ok((g, order))
    }
}

fn greedy(seed: u64) -> Outcome {
    let start = Instant::now();
    let oracle = BruteForce::with_budget(100_000_000);
    let mut rng = rng(seed ^ 0x9eed);
    let mut count = 0;
    for _ in 0..300 {
        let (g, order) = ordered_graph(&mut rng, 12)?;
        let pack = random_instance(&mut rng, g.clone(), Sense::Pack, 3).normalize().map_err(|e| fail("normalize", e))?;
        let greedy = greedy_packing(&pack, &order).map_err(|e| fail(describe(&pack), e))?;
        let best = oracle.solve(&pack).map_err(|e| fail(describe(&pack), e))?;
        let feasible = pack.check(&greedy.assignment).map_err(|e| fail("check", e))?.is_none();
        if !feasible || greedy.assignment.weight() != best.value {
            return Err(format!(
                "{}: greedy {:?} (weight {}), optimum {}",
                describe(&pack),
                greedy.assignment.values(),
                greedy.assignment.weight(),
                best.value
            ));
        }
        let raw = random_instance(&mut rng, g, Sense::Dominate, 3);
        let dom = raw.normalize().map_err(|e| fail("normalize", e))?;
        let solved = solve_domination_strongly_chordal(&dom, &order).map_err(|e| fail(describe(&dom), e))?;
        let best = oracle.solve(&raw).map_err(|e| fail(describe(&raw), e))?;
        if solved.weight() != best.value || raw.check(&solved).map_err(|e| fail("check", e))?.is_some() {
            return Err(format!(
                "{}: duality solver gives weight {}, optimum {}",
                describe(&raw),
                solved.weight(),
                best.value
            ));
        }
        count += 1;
    }
    within(start.elapsed(), 120, format!("{count} packing and {count} domination instances, n <= 12"))
}

/// Compares optima across a reduction and checks the lifted optimum.
fn check_reduction(input: &GenInstance<u32>, red: &Reduction<u32>, oracle: &BruteForce) -> std::result::Result<(), String> {
    let before = oracle.solve(input).map_err(|e| fail(describe(input), e))?;
    let after = oracle.solve(&red.output).map_err(|e| fail(describe(&red.output), e))?;
    if red.value_map.apply(after.value) != before.value {
        return Err(format!(
            "{}: optimum {}, transformed optimum {} maps to {} under {}",
            describe(input),
            before.value,
            after.value,
            red.value_map.apply(after.value),
            red.value_map
        ));
    }
    let lifted = red.lift(&after.assignment).map_err(|e| fail("lift", e))?;
    let violation = input.check(&lifted).map_err(|e| fail("check", e))?;
    if violation.is_some() || lifted.weight() != before.value {
        return Err(format!(
            "{}: lifted {:?} is infeasible or has weight {} instead of {}",
            describe(input),
            lifted.values(),
            lifted.weight(),
            before.value
        ));
    }
    Ok(())
}

fn reductions(seed: u64) -> Outcome {
    let oracle = BruteForce::default();
    let mut rng = rng(seed ^ 0x7ed5);
    let per = 100;

    let mut fixed = 0;
    let mut attempts = 0;
    while fixed < per {
        attempts += 1;
        if attempts > 100 * per {
            return Err(format!("only {fixed} feasible labelled inputs generated"));
        }
        let g = mixed_graph(&mut rng, 6);
        let n = g.n();
        let levels = rng.gen_range(1..=3);
        let labels = (0..n)
            .map(|_| if rng.gen_bool(0.4) { Label::Fixed(rng.gen_range(0..=levels)) } else { Label::Free })
            .collect();
        let quota = (0..n).map(|_| rng.gen_range(0..=3)).collect();
        let l = LabelledInstance::new(g, 0, 1, levels, labels, quota).map_err(|e| fail("labelled", e))?;
        let red = eliminate_fixed_labels(&l).map_err(|e| fail("eliminate", e))?;
        let before = oracle.solve_labelled(&l, Sense::Dominate);
        let after = oracle.solve_labelled(&red.output, Sense::Dominate);
        match (before, after) {
            (Err(Error::InfeasibleLabelled), Err(Error::InfeasibleLabelled)) => continue,
            (Ok((_, b)), Ok((values, a))) => {
                if red.value_map.apply(a as i128) != b as i128 {
                    return Err(format!("{l:?}: optimum {b}, eliminated optimum {a}"));
                }
                let lifted = red.lift(&values).map_err(|e| fail("lift", e))?;
                if !l.is_feasible(&lifted, Sense::Dominate) || lifted.iter().sum::<i64>() != b {
                    return Err(format!("{l:?}: lifted {lifted:?} is not optimal"));
                }
            }
            (b, a) => return Err(format!("{l:?}: feasibility differs ({b:?} vs {a:?})")),
        }
        fixed += 1;
    }

    for _ in 0..per {
        let g = mixed_graph(&mut rng, 6);
        let n = g.n();
        let levels = rng.gen_range(1..=3u32);
        let u = (0..n).map(|_| if rng.gen_bool(0.4) { 0 } else { levels }).collect();
        let inst = GenInstance::new(g, values(&mut rng, n, 3), u, Sense::Pack).map_err(|e| fail("instance", e))?;
        let red = free_reduction(&inst, levels).map_err(|e| fail(describe(&inst), e))?;
        check_reduction(&inst, &red, &oracle)?;
    }

    for _ in 0..per {
        let g = mixed_graph(&mut rng, 6);
        let k = (0..g.n()).map(|v| rng.gen_range(0..=(g.degree(v) as u32 + 1).min(3))).collect();
        let inst = GenInstance::new(g.clone(), k, vec![1; g.n()], Sense::Pack).map_err(|e| fail("instance", e))?;
        let red = uniformize_packing(&inst).map_err(|e| fail(describe(&inst), e))?;
        check_reduction(&inst, &red, &oracle)?;
    }

    for _ in 0..per {
        let g = mixed_graph(&mut rng, 6);
        let inst = random_instance(&mut rng, g, Sense::Dominate, 3);
        let red = flatten_capacities(&inst, 3).map_err(|e| fail(describe(&inst), e))?;
        check_reduction(&inst, &red, &oracle)?;
    }

    Ok(format!("{per} inputs each for fixed-label elimination, pendant freeing, quota uniformization, cap flattening"))
}

/// Closed-neighborhood bitmasks of a graph with at most 32 vertices.
fn closed_masks(g: &Graph) -> Vec<u32> {
    (0..g.n()).map(|v| g.closed_iter(v).fold(0, |m, w| m | 1 << w)).collect()
}

/// Smallest dominating set and largest 2-packing by subset enumeration.
fn subset_optima(g: &Graph) -> (u32, u32) {
    let masks = closed_masks(g);
    let mut dom = u32::MAX;
    let mut pack = 0;
    for s in 0u32..1 << g.n() {
        let size = s.count_ones();
        if masks.iter().all(|&m| m & s != 0) {
            dom = dom.min(size);
        }
        if masks.iter().all(|&m| (m & s).count_ones() <= 1) {
            pack = pack.max(size);
        }
    }
    (dom, pack)
}

/// Minimum signed domination weight by enumerating `{-1, 1}^V`.
fn signed_by_signs(g: &Graph) -> i64 {
    let masks = closed_masks(g);
    let n = g.n() as i64;
    let weight = |s: u32| 2 * s.count_ones() as i64 - n;
    (0u32..1 << g.n())
        .filter(|&s| masks.iter().all(|&m| 2 * (m & s).count_ones() as i64 - m.count_ones() as i64 >= 1))
        .map(weight)
        .min()
        .expect("all ones is signed dominating")
}

/// Every labelled graph on `n` vertices.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("distinct pairs")
    })
}

fn classical() -> Outcome {
    for n in 1..=12 {
        let path = Graph::path(n);
        let expected = n.div_ceil(3) as i128;
        let (dom, pack) = subset_optima(&path);
        if (dom as i128, pack as i128) != (expected, expected) {
            return Err(format!("P{n}: enumeration gives γ = {dom}, P2 = {pack}, expected {expected}"));
        }
        let order = EliminationOrder::natural(n, OrderKind::StrongElimination);
        let gamma = solve_domination_strongly_chordal(&GenInstance::<u32>::from_domination(path.clone()), &order)
            .map_err(|e| fail(format!("γ(P{n})"), e))?
            .weight();
        let packing = greedy_packing(&GenInstance::<u32>::from_two_packing(path), &order)
            .map_err(|e| fail(format!("P2(P{n})"), e))?
            .assignment
            .weight();
        if gamma != expected || packing != expected {
            return Err(format!("P{n}: greedy path gives γ = {gamma}, P2 = {packing}, expected {expected}"));
        }
    }
    let oracle = BruteForce::default();
    let mut graphs = 0;
    for n in 1..=5 {
        for g in all_graphs(n) {
            let direct = signed_by_signs(&g) as i128;
            let (inst, map) = GenInstance::<u32>::from_signed(g.clone()).map_err(|e| fail("signed", e))?;
            let best = oracle.solve(&inst).map_err(|e| fail(format!("{g:?}"), e))?;
            if map.apply(best.value) != direct {
                return Err(format!("{g:?}: signed domination {direct}, value map gives {}", map.apply(best.value)));
            }
            graphs += 1;
        }
    }
    Ok(format!("paths P1..P12 and signed domination on {graphs} graphs with n <= 5"))
}

/// Greedy run on a 2-packing path instance: per-run time over `batch`
/// consecutive runs, and the touch count.
fn timed_path(inst: &GenInstance<u32>, order: &EliminationOrder, batch: u32) -> std::result::Result<(Duration, usize), String> {
    let n = inst.n();
    let start = Instant::now();
    let mut touches = 0;
    for _ in 0..batch {
        let outcome = GreedyPacker::new(inst, order).map_err(|e| fail("greedy", e))?.run();
        touches = outcome.touches;
        if outcome.assignment.weight() != n.div_ceil(3) as i128 {
            return Err(format!("P{n}: greedy weight {}", outcome.assignment.weight()));
        }
    }
    Ok((start.elapsed() / batch, touches))
}

fn scaling() -> Outcome {
    let sizes = [(100_000usize, 10u32), (1_000_000, 1)];
    let setups: Vec<_> = sizes
        .iter()
        .map(|&(n, _)| {
            let inst = GenInstance::<u32>::from_two_packing(Graph::path(n));
            (inst, EliminationOrder::natural(n, OrderKind::StrongElimination))
        })
        .collect();
    let mut best = [Duration::MAX; 2];
    // interleaved samples, best of each, so both sizes see the same machine state
    for _ in 0..15 {
        for (slot, ((n, batch), (inst, order))) in sizes.iter().zip(&setups).enumerate() {
            let (time, touches) = timed_path(inst, order, *batch)?;
            if touches != n + 2 * (n - 1) {
                return Err(format!("P{n}: {touches} neighborhood touches, expected {}", n + 2 * (n - 1)));
            }
            best[slot] = best[slot].min(time);
        }
    }
    let (small, large) = (best[0].as_secs_f64(), best[1].as_secs_f64());
    let ratio = large / small;
    let detail = format!("touches exact; {:.2}ms vs {:.2}ms, ratio {ratio:.2}", small * 1e3, large * 1e3);
    if (8.0..=12.0).contains(&ratio) {
        Ok(detail)
    } else {
        Err(format!("{detail} outside [8, 12]"))
    }
}

/// Strong elimination test straight from the definition, on bitmasks.
fn strong_by_definition(g: &Graph, order: &[usize]) -> bool {
    let adj = closed_masks(g);
    let n = order.len();
    for i in 0..n {
        let alive: u32 = order[i..].iter().fold(0, |m, &v| m | 1 << v);
        let nb = |v: usize| adj[v] & alive;
        let vi = order[i];
        let ni = nb(vi);
        // simplicial: every member of N[v_i] sees all of N[v_i]
        if (0..n).filter(|&w| ni >> w & 1 == 1).any(|w| nb(w) & ni != ni) {
            return false;
        }
        for j in i..n {
            for k in j..n {
                let (vj, vk) = (order[j], order[k]);
                if ni >> vj & 1 == 1 && ni >> vk & 1 == 1 && nb(vj) & !nb(vk) != 0 {
                    return false;
                }
            }
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Canonical string of a free tree: the smaller rooted encoding over its centres.
fn tree_code(adj: &[Vec<usize>]) -> String {
    fn rooted(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut parts: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| rooted(adj, w, v)).collect();
        parts.sort();
        format!("({})", parts.concat())
    }
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| rooted(adj, c, usize::MAX)).min().expect("nonempty tree")
}

/// One representative of every free tree on `1..=max_n` vertices.
fn all_trees(max_n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut level = vec![vec![Vec::new()]];
    let mut out = level.clone();
    for _ in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.len() {
                let mut grown = t.clone();
                let leaf = grown.len();
                grown.push(vec![v]);
                grown[v].push(leaf);
                if seen.insert(tree_code(&grown)) {
                    next.push(grown);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

fn orderings(seed: u64) -> Outcome {
    let mut checked = 0usize;
    for n in 1..=5 {
        let perms = permutations(n);
        for g in all_graphs(n) {
            for p in &perms {
                let order = EliminationOrder::new(p.clone(), OrderKind::StrongElimination).map_err(|e| fail("order", e))?;
                let verdict = verify_strong_elimination(&g, &order).map_err(|e| fail("verify", e))?.is_none();
                if verdict != strong_by_definition(&g, p) {
                    return Err(format!("{g:?} with order {p:?}: verifier says {verdict}"));
                }
                checked += 1;
            }
        }
    }
    if let Search::Found(order) = find_strong_elimination(&Graph::sun3()) {
        return Err(format!("3-sun accepted with order {:?}", order.vertices()));
    }
    let mut rng = rng(seed ^ 0x7eee);
    let trees = all_trees(10);
    for adj in &trees {
        let n = adj.len();
        let mut relabel: Vec<usize> = (0..n).collect();
        for shuffled in [false, true] {
            if shuffled {
                relabel.shuffle(&mut rng);
            }
            let edges = (0..n).flat_map(|a| adj[a].iter().filter(move |&&b| a < b).map(move |&b| (a, b)));
            let g = Graph::from_edges(n, edges.map(|(a, b)| (relabel[a], relabel[b]))).map_err(|e| fail("tree", e))?;
            let Search::Found(order) = find_strong_elimination(&g) else {
                return Err(format!("no strong elimination order found for tree {g:?}"));
            };
            if verify_strong_elimination(&g, &order).map_err(|e| fail("verify", e))?.is_some() {
                return Err(format!("finder returned an invalid order for {g:?}"));
            }
        }
    }
    Ok(format!(
        "{checked} (graph, order) pairs with n <= 5; 3-sun rejected; {} trees with n <= 10 accepted",
        trees.len()
    ))
}

fn normalization(seed: u64) -> Outcome {
    let oracle = BruteForce::default();
    let mut rng = rng(seed ^ 0x0a11);
    let mut count = 0;
    for i in 0..200 {
        let sense = if i % 2 == 0 { Sense::Pack } else { Sense::Dominate };
        let g = mixed_graph(&mut rng, 6);
        let inst = random_instance(&mut rng, g, sense, 3);
        let once = inst.normalize().map_err(|e| fail(describe(&inst), e))?;
        let twice = once.normalize().map_err(|e| fail(describe(&once), e))?;
        if once != twice {
            return Err(format!("{}: normalizing twice gives {}", describe(&once), describe(&twice)));
        }
        let before = oracle.solve(&inst).map_err(|e| fail(describe(&inst), e))?;
        let after = oracle.solve(&once).map_err(|e| fail(describe(&once), e))?;
        if before.value != after.value {
            return Err(format!("{}: optimum {} becomes {}", describe(&inst), before.value, after.value));
        }
        if !once.is_feasible(&before.assignment).map_err(|e| fail("check", e))? {
            return Err(format!("{}: an optimum of the input is lost by normalizing", describe(&inst)));
        }
        count += 1;
    }
    Ok(format!("{count} instances, n <= 6, both senses"))
}
