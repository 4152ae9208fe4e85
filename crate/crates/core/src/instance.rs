//! Generalized dominating and packing function instances.
//!
//! An instance is a graph with two nonnegative integer vectors: a quota `k`
//! on every closed neighborhood and a cap `u` on every vertex value. Under
//! [`Sense::Dominate`] a valuation `f` is feasible when `f(v) <= u(v)` and
//! `f(N[v]) >= k(v)` for every vertex, and the goal is the minimum weight.
//! Under [`Sense::Pack`] the quota is an upper bound, `f(N[v]) <= k(v)`, and
//! the goal is the maximum weight.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labelled::{Label, LabelledInstance};
use crate::scalar::{narrow, wide_sum, Weight};
use crate::transform::ValueMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sense {
    /// Minimize `f(V)` subject to `f(N[v]) >= k(v)`.
    Dominate,
    /// Maximize `f(V)` subject to `f(N[v]) <= k(v)`.
    Pack,
}

impl Sense {
    pub fn opposite(self) -> Sense {
        match self {
            Sense::Dominate => Sense::Pack,
            Sense::Pack => Sense::Dominate,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Sense::Dominate => "dominate",
            Sense::Pack => "pack",
        }
    }
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Sense {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dominate" => Ok(Sense::Dominate),
            "pack" => Ok(Sense::Pack),
            other => Err(Error::InvalidInput(format!("unknown sense `{other}`"))),
        }
    }
}

/// A nonnegative integer valuation of the vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment<W> {
    values: Vec<W>,
}

impl<W: Weight> Assignment<W> {
    pub fn new(values: Vec<W>) -> Self {
        Self { values }
    }

    pub fn zeros(n: usize) -> Self {
        Self { values: vec![W::zero(); n] }
    }

    pub fn values(&self) -> &[W] {
        &self.values
    }

    pub fn into_values(self) -> Vec<W> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `f(V)`, always recomputed from the entries.
    pub fn weight(&self) -> i128 {
        wide_sum(self.values.iter().copied())
    }

    /// `f(N[v])`.
    pub fn closed_sum(&self, graph: &Graph, v: usize) -> i128 {
        wide_sum(graph.closed_iter(v).map(|w| self.values[w]))
    }
}

impl<W> std::ops::Index<usize> for Assignment<W> {
    type Output = W;

    fn index(&self, v: usize) -> &W {
        &self.values[v]
    }
}

/// Which constraint a valuation breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// `f(v) > u(v)`.
    Cap,
    /// `f(N[v]) < k(v)` when dominating, `f(N[v]) > k(v)` when packing.
    Quota,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Infeasibility {
    pub vertex: usize,
    pub constraint: Constraint,
    /// `f(v)` or `f(N[v])`.
    pub value: i128,
    /// `u(v)` or `k(v)`.
    pub bound: i128,
}

/// A graph with quotas, caps and an optimization sense.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenInstance<W> {
    graph: Graph,
    k: Vec<W>,
    u: Vec<W>,
    sense: Sense,
}

impl<W: Weight> GenInstance<W> {
    pub fn new(graph: Graph, k: Vec<W>, u: Vec<W>, sense: Sense) -> Result<Self> {
        let n = graph.n();
        for len in [k.len(), u.len()] {
            if len != n {
                return Err(Error::SizeMismatch { expected: n, actual: len });
            }
        }
        Ok(Self { graph, k, u, sense })
    }

    /// Same quota and cap at every vertex.
    pub fn uniform(graph: Graph, k: W, u: W, sense: Sense) -> Self {
        let n = graph.n();
        Self { graph, k: vec![k; n], u: vec![u; n], sense }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn k(&self) -> &[W] {
        &self.k
    }

    pub fn u(&self) -> &[W] {
        &self.u
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    /// `u(N[v])`.
    pub fn reach(&self, v: usize) -> i128 {
        wide_sum(self.graph.closed_iter(v).map(|w| self.u[w]))
    }

    /// `u(V)`.
    pub fn total_cap(&self) -> i128 {
        wide_sum(self.u.iter().copied())
    }

    /// First vertex `v` with `k(v) > u(N[v])`, if any.
    ///
    /// For a dominating instance this is exactly infeasibility.
    pub fn overloaded_vertex(&self) -> Option<usize> {
        (0..self.n()).find(|&v| self.k[v].wide() > self.reach(v))
    }

    /// Errors if a dominating instance has no feasible valuation.
    pub fn check_feasible(&self) -> Result<()> {
        if self.sense == Sense::Dominate {
            if let Some(v) = self.overloaded_vertex() {
                return Err(Error::Infeasible { vertex: v, quota: self.k[v].wide(), reach: self.reach(v) });
            }
        }
        Ok(())
    }

    /// First violated constraint in vertex order (cap before quota), or `None`.
    pub fn check(&self, a: &Assignment<W>) -> Result<Option<Infeasibility>> {
        if a.len() != self.n() {
            return Err(Error::SizeMismatch { expected: self.n(), actual: a.len() });
        }
        for v in 0..self.n() {
            if a[v] > self.u[v] {
                return Ok(Some(Infeasibility {
                    vertex: v,
                    constraint: Constraint::Cap,
                    value: a[v].wide(),
                    bound: self.u[v].wide(),
                }));
            }
            let load = a.closed_sum(&self.graph, v);
            let quota = self.k[v].wide();
            let broken = match self.sense {
                Sense::Dominate => load < quota,
                Sense::Pack => load > quota,
            };
            if broken {
                return Ok(Some(Infeasibility {
                    vertex: v,
                    constraint: Constraint::Quota,
                    value: load,
                    bound: quota,
                }));
            }
        }
        Ok(None)
    }

    pub fn is_feasible(&self, a: &Assignment<W>) -> Result<bool> {
        Ok(self.check(a)?.is_none())
    }

    /// Tightens `k` and `u` without changing the optimum.
    ///
    /// Packing: `u(v) <- min(u(v), k(v))`, then `k(v) <- min(k(v), u(N[v]))`
    /// with the tightened caps. Dominating: `u(v) <- min(u(v), max k(N[v]))`;
    /// the instance must be feasible. The result satisfies
    /// [`is_normalized`](Self::is_normalized) and normalizing again is a no-op.
    pub fn normalize(&self) -> Result<Self> {
        let g = &self.graph;
        let n = self.n();
        match self.sense {
            Sense::Pack => {
                let u: Vec<W> = (0..n).map(|v| self.u[v].min(self.k[v])).collect();
                let k = (0..n)
                    .map(|v| {
                        let reach = wide_sum(g.closed_iter(v).map(|w| u[w]));
                        if self.k[v].wide() > reach {
                            narrow(reach)
                        } else {
                            Ok(self.k[v])
                        }
                    })
                    .collect::<Result<Vec<W>>>()?;
                Ok(Self { graph: g.clone(), k, u, sense: Sense::Pack })
            }
            Sense::Dominate => {
                self.check_feasible()?;
                let u = (0..n)
                    .map(|v| {
                        let top = g.closed_iter(v).map(|w| self.k[w]).max().unwrap_or_else(W::zero);
                        self.u[v].min(top)
                    })
                    .collect();
                Ok(Self { graph: g.clone(), k: self.k.clone(), u, sense: Sense::Dominate })
            }
        }
    }

    /// Whether the instance is in normal form.
    ///
    /// Packing: `u(v) <= k(v) <= u(N[v])`. Dominating: `k(v) <= u(N[v])` and
    /// `u(v) <= max k(N[v])`.
    pub fn is_normalized(&self) -> bool {
        (0..self.n()).all(|v| {
            let reach_ok = self.k[v].wide() <= self.reach(v);
            match self.sense {
                Sense::Pack => reach_ok && self.u[v] <= self.k[v],
                Sense::Dominate => {
                    let top = self.graph.closed_iter(v).map(|w| self.k[w]).max().unwrap_or_else(W::zero);
                    reach_ok && self.u[v] <= top
                }
            }
        })
    }

    /// Minimum dominating set: `k = 1`, `u = 1`.
    pub fn from_domination(graph: Graph) -> Self {
        Self::uniform(graph, W::one(), W::one(), Sense::Dominate)
    }

    /// Maximum 2-packing: `k = 1`, `u = 1`.
    pub fn from_two_packing(graph: Graph) -> Self {
        Self::uniform(graph, W::one(), W::one(), Sense::Pack)
    }

    /// `k`-tuple domination: `|N[v] ∩ D| >= k`.
    pub fn from_k_tuple(graph: Graph, k: W) -> Self {
        Self::uniform(graph, k, W::one(), Sense::Dominate)
    }

    /// `k`-limited packing: `|N[v] ∩ B| <= k`.
    pub fn from_limited_packing(graph: Graph, k: W) -> Self {
        Self::uniform(graph, k, W::one(), Sense::Pack)
    }

    /// `{k}`-dominating or `{k}`-packing functions: values in `[0, k]`, quota `k`.
    pub fn from_braces_k(graph: Graph, k: W, sense: Sense) -> Self {
        Self::uniform(graph, k, k, sense)
    }

    /// Fault tolerant domination with per-vertex requirements.
    pub fn from_fault_tolerant(graph: Graph, k: Vec<W>) -> Result<Self> {
        let n = graph.n();
        Self::new(graph, k, vec![W::one(); n], Sense::Dominate)
    }

    /// Generalized limited packing: sets `B ⊆ allowed` with `|N[v] ∩ B| <= k(v)`.
    pub fn from_generalized_limited_packing(graph: Graph, k: Vec<W>, allowed: &[bool]) -> Result<Self> {
        if allowed.len() != graph.n() {
            return Err(Error::SizeMismatch { expected: graph.n(), actual: allowed.len() });
        }
        let u = allowed.iter().map(|&a| if a { W::one() } else { W::zero() }).collect();
        Self::new(graph, k, u, Sense::Pack)
    }

    /// Signed domination, `f: V -> {-1, 1}` with `f(N[v]) >= 1`.
    ///
    /// The value map turns the optimum of the returned instance into the
    /// signed domination number (`2 f(V) - n`).
    pub fn from_signed(graph: Graph) -> Result<(Self, ValueMap)> {
        let n = graph.n();
        let labelled = LabelledInstance::new(graph, -1, 2, 1, vec![Label::Free; n], vec![1; n])?;
        let (inst, map, _) = Self::from_labelled(&labelled, Sense::Dominate)?;
        Ok((inst, map.described("signed domination")))
    }

    /// Minus domination, `f: V -> {-1, 0, 1}` with `f(N[v]) >= 1`.
    pub fn from_minus(graph: Graph) -> Result<(Self, ValueMap)> {
        let n = graph.n();
        let labelled = LabelledInstance::new(graph, -1, 1, 2, vec![Label::Free; n], vec![1; n])?;
        let (inst, map, _) = Self::from_labelled(&labelled, Sense::Dominate)?;
        Ok((inst, map.described("minus domination")))
    }

    /// M-domination (generalized multiple domination): `D ⊇ required` with
    /// `|N[v] ∩ D| >= k(v)`.
    pub fn from_mdom(graph: Graph, k: Vec<i64>, required: &[bool]) -> Result<(Self, ValueMap)> {
        if required.len() != graph.n() {
            return Err(Error::SizeMismatch { expected: graph.n(), actual: required.len() });
        }
        let labels = required.iter().map(|&r| if r { Label::Fixed(1) } else { Label::Free }).collect();
        let labelled = LabelledInstance::new(graph, 0, 1, 1, labels, k)?;
        let (inst, map, _) = Self::from_labelled(&labelled, Sense::Dominate)?;
        Ok((inst, map.described("M-domination")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3(k: [u32; 3], u: [u32; 3], sense: Sense) -> GenInstance<u32> {
        GenInstance::new(Graph::path(3), k.to_vec(), u.to_vec(), sense).unwrap()
    }

    #[test]
    fn feasibility_examples() {
        let dom = p3([1; 3], [1; 3], Sense::Dominate);
        assert!(dom.is_feasible(&Assignment::new(vec![0, 1, 0])).unwrap());
        let bad = dom.check(&Assignment::new(vec![1, 0, 0])).unwrap().unwrap();
        assert_eq!(bad.vertex, 2);
        assert_eq!(bad.constraint, Constraint::Quota);

        let pack = GenInstance::<u32>::uniform(Graph::complete(3), 1, 1, Sense::Pack);
        let bad = pack.check(&Assignment::new(vec![1, 1, 0])).unwrap().unwrap();
        assert_eq!((bad.vertex, bad.value, bad.bound), (0, 2, 1));

        assert!(matches!(
            dom.check(&Assignment::new(vec![0, 1])),
            Err(Error::SizeMismatch { expected: 3, actual: 2 })
        ));
    }

    #[test]
    fn cap_violation_is_reported() {
        let dom = p3([1; 3], [1; 3], Sense::Dominate);
        let bad = dom.check(&Assignment::new(vec![0, 2, 0])).unwrap().unwrap();
        assert_eq!((bad.vertex, bad.constraint), (1, Constraint::Cap));
    }

    #[test]
    fn normalize_examples() {
        let pack = p3([5; 3], [1; 3], Sense::Pack).normalize().unwrap();
        assert_eq!(pack.k(), &[2, 3, 2]);
        assert_eq!(pack.u(), &[1, 1, 1]);

        let dom = p3([1; 3], [9; 3], Sense::Dominate).normalize().unwrap();
        assert_eq!(dom.k(), &[1, 1, 1]);
        assert_eq!(dom.u(), &[1, 1, 1]);

        let single = GenInstance::<u32>::new(Graph::edgeless(1), vec![2], vec![1], Sense::Dominate).unwrap();
        assert!(matches!(single.normalize(), Err(Error::Infeasible { vertex: 0, quota: 2, reach: 1 })));
    }

    #[test]
    fn pack_normalization_is_idempotent_where_simultaneous_update_is_not() {
        let inst = GenInstance::<u32>::new(Graph::path(2), vec![1, 10], vec![5, 5], Sense::Pack).unwrap();
        let once = inst.normalize().unwrap();
        assert_eq!(once.u(), &[1, 5]);
        assert_eq!(once.k(), &[1, 6]);
        assert!(once.is_normalized());
        assert_eq!(once.normalize().unwrap(), once);
    }

    #[test]
    fn classical_constructors() {
        let d = GenInstance::<u32>::from_domination(Graph::path(3));
        assert_eq!((d.k(), d.u(), d.sense()), (&[1, 1, 1][..], &[1, 1, 1][..], Sense::Dominate));

        let b = GenInstance::<u64>::from_braces_k(Graph::path(2), 2, Sense::Pack);
        assert_eq!((b.k(), b.u()), (&[2u64, 2][..], &[2u64, 2][..]));

        let (s, map) = GenInstance::<u32>::from_signed(Graph::cycle(3).unwrap()).unwrap();
        assert_eq!(s.k(), &[2, 2, 2]);
        assert_eq!(s.u(), &[1, 1, 1]);
        assert_eq!((map.scale, map.offset, map.flip), (2, -3, false));

        let (m, map) = GenInstance::<u32>::from_minus(Graph::path(3)).unwrap();
        assert_eq!(m.k(), &[3, 4, 3]);
        assert_eq!(m.u(), &[2, 2, 2]);
        assert_eq!((map.scale, map.offset), (1, -3));

        let glp = GenInstance::<u32>::from_generalized_limited_packing(
            Graph::path(3),
            vec![1, 2, 1],
            &[true, false, true],
        )
        .unwrap();
        assert_eq!(glp.u(), &[1, 0, 1]);
    }
}
