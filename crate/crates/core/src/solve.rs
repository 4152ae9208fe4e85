//! Exact solvers.
//!
//! * [`greedy_packing`]: one pass over a strong elimination ordering gives an
//!   optimal packing function in `O(|V| + |E|)`.
//! * [`solve_domination_strongly_chordal`]: the same pass on the dual packing
//!   instance, complemented against the caps.
//! * [`BruteForce`]: exhaustive enumeration, the reference for everything else.
//! * [`solve`]: picks one of the above.

use std::fmt;

use crate::error::{Error, Result};
use crate::instance::{Assignment, GenInstance, Sense};
use crate::labelled::LabelledInstance;
use crate::ordering::{find_strong_elimination, verify_strong_elimination, EliminationOrder};
use crate::scalar::Weight;
use crate::transform::dualize;

/// Step-by-step greedy packing along an order.
///
/// At step `i` the vertex `v_i` receives
/// `min(u(v_i), min_{v ∈ N[v_i]} (k(v) - f(N[v])))`, where `f` is the
/// partial valuation built so far. Running sums `f(N[v])` are kept per
/// vertex, so every step touches only `N[v_i]`.
///
/// The packer does not verify the order; every partial valuation is
/// feasible for any order, but only a strong elimination ordering makes the
/// final one optimal.
#[derive(Debug, Clone)]
pub struct GreedyPacker<'a, W> {
    inst: &'a GenInstance<W>,
    order: &'a [usize],
    f: Vec<W>,
    load: Vec<W>,
    step: usize,
    touches: usize,
}

impl<'a, W: Weight> GreedyPacker<'a, W> {
    pub fn new(inst: &'a GenInstance<W>, order: &'a EliminationOrder) -> Result<Self> {
        if inst.sense() != Sense::Pack {
            return Err(Error::WrongSense("greedy packing needs a packing instance".into()));
        }
        if order.len() != inst.n() {
            return Err(Error::NotAPermutation(inst.n()));
        }
        let n = inst.n();
        Ok(Self {
            inst,
            order: order.vertices(),
            f: vec![W::zero(); n],
            load: vec![W::zero(); n],
            step: 0,
            touches: 0,
        })
    }

    /// Assigns the next vertex; returns it with its value, or `None` when done.
    pub fn step(&mut self) -> Option<(usize, W)> {
        let &vi = self.order.get(self.step)?;
        let g = self.inst.graph();
        let k = self.inst.k();
        let mut room = self.inst.u()[vi];
        for v in g.closed_iter(vi) {
            // load[v] <= k[v] holds after every step
            room = room.min(k[v] - self.load[v]);
        }
        self.touches += g.degree(vi) + 1;
        if room > W::zero() {
            self.f[vi] = room;
            for v in g.closed_iter(vi) {
                self.load[v] = self.load[v] + room;
            }
        }
        self.step += 1;
        Some((vi, room))
    }

    pub fn partial(&self) -> Assignment<W> {
        Assignment::new(self.f.clone())
    }

    /// Closed-neighborhood entries scanned so far.
    pub fn touches(&self) -> usize {
        self.touches
    }

    pub fn run(mut self) -> GreedyOutcome<W> {
        while self.step().is_some() {}
        GreedyOutcome { assignment: Assignment::new(self.f), touches: self.touches }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyOutcome<W> {
    pub assignment: Assignment<W>,
    /// `Σ |N[v_i]|`, i.e. `n + 2m`.
    pub touches: usize,
}

/// Maximum-weight packing function of `inst` given a strong elimination ordering.
pub fn greedy_packing<W: Weight>(inst: &GenInstance<W>, order: &EliminationOrder) -> Result<GreedyOutcome<W>> {
    let packer = GreedyPacker::new(inst, order)?;
    if let Some(v) = verify_strong_elimination(inst.graph(), order)? {
        return Err(Error::OrderRejected(v));
    }
    Ok(packer.run())
}

/// Minimum-weight dominating function given a strong elimination ordering.
///
/// Solves the dual packing instance `k'(v) = u(N[v]) - k(v)` greedily and
/// returns `g(v) = u(v) - f(v)`.
pub fn solve_domination_strongly_chordal<W: Weight>(
    inst: &GenInstance<W>,
    order: &EliminationOrder,
) -> Result<Assignment<W>> {
    if inst.sense() != Sense::Dominate {
        return Err(Error::WrongSense("duality solver needs a dominating instance".into()));
    }
    inst.check_feasible()?;
    let dual = dualize(inst)?;
    let packed = greedy_packing(&dual.output, order)?;
    let g = dual.lift(&packed.assignment)?;
    assert!(
        inst.check(&g)?.is_none(),
        "complemented greedy packing must dominate"
    );
    Ok(g)
}

/// Exhaustive search over all `f` with `0 <= f(v) <= u(v)`.
#[derive(Debug, Clone, Copy)]
pub struct BruteForce {
    /// Largest admissible `Π (u(v) + 1)`.
    pub budget: u128,
}

impl Default for BruteForce {
    fn default() -> Self {
        Self { budget: 10_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Optimum<W> {
    pub assignment: Assignment<W>,
    pub value: i128,
}

/// [`BruteForce::solve`] with the default budget.
pub fn brute_force<W: Weight>(inst: &GenInstance<W>) -> Result<Optimum<W>> {
    BruteForce::default().solve(inst)
}

impl BruteForce {
    pub fn with_budget(budget: u128) -> Self {
        Self { budget }
    }

    fn check_space(&self, space: u128) -> Result<()> {
        if space > self.budget {
            return Err(Error::BudgetExceeded { space, budget: self.budget });
        }
        Ok(())
    }

    /// Exact optimum; among optimal valuations the lexicographically
    /// smallest is returned.
    pub fn solve<W: Weight>(&self, inst: &GenInstance<W>) -> Result<Optimum<W>> {
        let space = inst
            .u()
            .iter()
            .fold(1u128, |acc, &c| acc.saturating_mul(c.wide() as u128 + 1));
        self.check_space(space)?;
        inst.check_feasible()?;
        let mut search = Dfs::new(inst);
        search.descend(0);
        let (values, value) = search.best.expect("packing admits zero, feasible domination admits u");
        let values = values.into_iter().map(|x| W::from_i64(x)).collect::<Result<Vec<W>>>()?;
        Ok(Optimum { assignment: Assignment::new(values), value: value as i128 })
    }

    /// Exact optimum of a labelled instance by enumerating every free vertex
    /// over the label range. Returns the labelled function and its weight.
    pub fn solve_labelled(&self, l: &LabelledInstance, sense: Sense) -> Result<(Vec<i64>, i64)> {
        let free: Vec<usize> = (0..l.n()).filter(|&v| l.labels()[v].is_free()).collect();
        let radix = l.levels() as u128 + 1;
        let space = free.iter().fold(1u128, |acc, _| acc.saturating_mul(radix));
        self.check_space(space)?;
        let range: Vec<i64> = l.range().collect();
        let mut values: Vec<i64> = l.labels().iter().map(|t| t.fixed().unwrap_or(range[0])).collect();
        let mut digits = vec![0usize; free.len()];
        let mut best: Option<(Vec<i64>, i64)> = None;
        loop {
            if l.is_feasible(&values, sense) {
                let w: i64 = values.iter().sum();
                let better = match (&best, sense) {
                    (None, _) => true,
                    (Some((_, b)), Sense::Dominate) => w < *b,
                    (Some((_, b)), Sense::Pack) => w > *b,
                };
                if better {
                    best = Some((values.clone(), w));
                }
            }
            // odometer, last free vertex fastest
            let mut pos = free.len();
            loop {
                if pos == 0 {
                    return best.ok_or(Error::InfeasibleLabelled);
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < range.len() {
                    values[free[pos]] = range[digits[pos]];
                    break;
                }
                digits[pos] = 0;
                values[free[pos]] = range[0];
            }
        }
    }
}

/// Depth-first enumeration in lexicographic order with feasibility pruning
/// and weight bounds. Works in `i64` internally.
struct Dfs<'a, W> {
    inst: &'a GenInstance<W>,
    k: Vec<i64>,
    u: Vec<i64>,
    f: Vec<i64>,
    /// `f(N[v])` over assigned vertices.
    load: Vec<i64>,
    /// `u(N[v])` over unassigned vertices.
    slack: Vec<i64>,
    /// `Σ u` over unassigned vertices.
    cap_left: i64,
    weight: i64,
    best: Option<(Vec<i64>, i64)>,
}

impl<'a, W: Weight> Dfs<'a, W> {
    fn new(inst: &'a GenInstance<W>) -> Self {
        let n = inst.n();
        let k: Vec<i64> = inst.k().iter().map(|x| x.wide() as i64).collect();
        let u: Vec<i64> = inst.u().iter().map(|x| x.wide() as i64).collect();
        let slack = (0..n).map(|v| inst.graph().closed_iter(v).map(|w| u[w]).sum()).collect();
        let cap_left = u.iter().sum();
        Self { inst, k, u, f: vec![0; n], load: vec![0; n], slack, cap_left, weight: 0, best: None }
    }

    fn dominating(&self) -> bool {
        self.inst.sense() == Sense::Dominate
    }

    fn descend(&mut self, v: usize) {
        if v == self.f.len() {
            let better = match &self.best {
                None => true,
                Some((_, b)) if self.dominating() => self.weight < *b,
                Some((_, b)) => self.weight > *b,
            };
            if better {
                self.best = Some((self.f.clone(), self.weight));
            }
            return;
        }
        let g = self.inst.graph();
        let cap = self.u[v];
        self.cap_left -= cap;
        for w in g.closed_iter(v) {
            self.slack[w] -= cap;
        }
        for x in 0..=cap {
            if let Some((_, b)) = &self.best {
                if self.dominating() && self.weight + x >= *b {
                    break;
                }
                if !self.dominating() && self.weight + x + self.cap_left <= *b {
                    continue;
                }
            }
            self.f[v] = x;
            self.weight += x;
            for w in g.closed_iter(v) {
                self.load[w] += x;
            }
            let viable = g.closed_iter(v).all(|w| {
                if self.dominating() {
                    self.load[w] + self.slack[w] >= self.k[w]
                } else {
                    self.load[w] <= self.k[w]
                }
            });
            if viable {
                self.descend(v + 1);
            }
            for w in g.closed_iter(v) {
                self.load[w] -= x;
            }
            self.weight -= x;
            // packing loads only grow with x
            if !viable && !self.dominating() {
                break;
            }
        }
        self.f[v] = 0;
        self.cap_left += cap;
        for w in g.closed_iter(v) {
            self.slack[w] += cap;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Greedy,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Greedy => "greedy",
            Method::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    pub force_oracle: bool,
    pub oracle: BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution<W> {
    pub assignment: Assignment<W>,
    pub value: i128,
    pub method: Method,
}

/// Solves any instance exactly.
///
/// The instance is normalized first (the returned valuation is feasible for
/// the original). With a supplied order, or one found by
/// [`find_strong_elimination`], the greedy path runs; otherwise brute force
/// within the budget.
pub fn solve<W: Weight>(
    inst: &GenInstance<W>,
    order: Option<&EliminationOrder>,
    options: SolveOptions,
) -> Result<Solution<W>> {
    let norm = inst.normalize()?;
    if !options.force_oracle {
        let found;
        let order = match order {
            Some(o) => Some(o),
            None => {
                found = find_strong_elimination(norm.graph()).order();
                found.as_ref()
            }
        };
        if let Some(o) = order {
            let assignment = match norm.sense() {
                Sense::Pack => greedy_packing(&norm, o)?.assignment,
                Sense::Dominate => solve_domination_strongly_chordal(&norm, o)?,
            };
            let value = assignment.weight();
            return Ok(Solution { assignment, value, method: Method::Greedy });
        }
    }
    let opt = options.oracle.solve(&norm)?;
    Ok(Solution { assignment: opt.assignment, value: opt.value, method: Method::Oracle })
}
