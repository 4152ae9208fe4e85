//! Labelled domination and packing.
//!
//! A labelling fixes some vertex values in advance and restricts the rest to
//! the arithmetic range `Y = {base + j * step : 0 <= j <= levels}`. These
//! instances translate into [`GenInstance`]s in two steps: shifting and
//! scaling `Y` onto `[0, levels]`, then folding fixed values into the quotas
//! (see [`eliminate_fixed_labels`]).

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Assignment, GenInstance, Sense};
use crate::scalar::Weight;
use crate::transform::{eliminate_fixed_labels, ValueMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Free,
    Fixed(i64),
}

impl Label {
    pub fn fixed(self) -> Option<i64> {
        match self {
            Label::Free => None,
            Label::Fixed(t) => Some(t),
        }
    }

    pub fn is_free(self) -> bool {
        self == Label::Free
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Free => f.write_str("F"),
            Label::Fixed(t) => write!(f, "{t}"),
        }
    }
}

/// Graph plus labelling `(base, step, levels, labels, quota)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabelledInstance {
    graph: Graph,
    base: i64,
    step: i64,
    levels: i64,
    labels: Vec<Label>,
    quota: Vec<i64>,
}

impl LabelledInstance {
    pub fn new(
        graph: Graph,
        base: i64,
        step: i64,
        levels: i64,
        labels: Vec<Label>,
        quota: Vec<i64>,
    ) -> Result<Self> {
        if step <= 0 {
            return Err(Error::InvalidInput(format!("label step must be positive, got {step}")));
        }
        if levels < 0 {
            return Err(Error::InvalidInput(format!("label levels must be nonnegative, got {levels}")));
        }
        let n = graph.n();
        for len in [labels.len(), quota.len()] {
            if len != n {
                return Err(Error::SizeMismatch { expected: n, actual: len });
            }
        }
        let inst = Self { graph, base, step, levels, labels, quota };
        if let Some(v) = (0..n).find(|&v| inst.labels[v].fixed().is_some_and(|t| !inst.in_range(t))) {
            return Err(Error::InvalidInput(format!(
                "label {} of vertex {v} is outside the label range",
                inst.labels[v]
            )));
        }
        Ok(inst)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn step(&self) -> i64 {
        self.step
    }

    pub fn levels(&self) -> i64 {
        self.levels
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn quota(&self) -> &[i64] {
        &self.quota
    }

    /// Whether `value` belongs to `Y`.
    pub fn in_range(&self, value: i64) -> bool {
        let off = value - self.base;
        off >= 0 && off % self.step == 0 && off / self.step <= self.levels
    }

    /// The label range `Y` in increasing order.
    pub fn range(&self) -> impl Iterator<Item = i64> + '_ {
        (0..=self.levels).map(move |j| self.base + j * self.step)
    }

    /// Whether `values` respects every fixed label and lies in `Y`.
    pub fn respects_labels(&self, values: &[i64]) -> bool {
        values.len() == self.n()
            && values.iter().zip(&self.labels).all(|(&x, l)| match l {
                Label::Free => self.in_range(x),
                Label::Fixed(t) => x == *t,
            })
    }

    /// Whether `values` is an L-dominating (or L-packing) function.
    pub fn is_feasible(&self, values: &[i64], sense: Sense) -> bool {
        self.respects_labels(values)
            && (0..self.n()).all(|v| {
                let load: i64 = self.graph.closed_iter(v).map(|w| values[w]).sum();
                match sense {
                    Sense::Dominate => load >= self.quota[v],
                    Sense::Pack => load <= self.quota[v],
                }
            })
    }

    /// Maps `Y` onto `[0, levels]`: labels `t -> (t - base) / step`, quotas
    /// `k(v) -> ceil((k(v) - base * (deg(v) + 1)) / step)`.
    ///
    /// The map is exact for domination: `γ_L = step * γ_L' + base * n`.
    pub fn canonicalize(&self) -> (LabelledInstance, ValueMap) {
        if self.base == 0 && self.step == 1 {
            return (self.clone(), ValueMap::identity());
        }
        let labels = self
            .labels
            .iter()
            .map(|l| match l {
                Label::Free => Label::Free,
                Label::Fixed(t) => Label::Fixed((t - self.base) / self.step),
            })
            .collect();
        let quota = (0..self.n())
            .map(|v| {
                let shift = self.base * (self.graph.degree(v) as i64 + 1);
                ceil_div(self.quota[v] - shift, self.step)
            })
            .collect();
        let out = LabelledInstance {
            graph: self.graph.clone(),
            base: 0,
            step: 1,
            levels: self.levels,
            labels,
            quota,
        };
        let map = ValueMap::affine(
            self.step as i128,
            self.base as i128 * self.n() as i128,
            "label range shifted to [0, levels]",
        );
        (out, map)
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

/// Turns an optimal valuation of a translated instance back into a
/// labelled function: fixed vertices get their label, free vertices
/// `base + step * f(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelLift {
    pub base: i64,
    pub step: i64,
    pub fixed: Vec<Option<i64>>,
}

impl LabelLift {
    pub fn apply<W: Weight>(&self, a: &Assignment<W>) -> Result<Vec<i64>> {
        if a.len() != self.fixed.len() {
            return Err(Error::SizeMismatch { expected: self.fixed.len(), actual: a.len() });
        }
        a.values()
            .iter()
            .zip(&self.fixed)
            .map(|(&x, t)| match t {
                Some(t) => Ok(*t),
                None => {
                    let x = i64::try_from(x.wide()).map_err(|_| Error::Overflow(x.wide()))?;
                    Ok(self.base + self.step * x)
                }
            })
            .collect()
    }
}

impl<W: Weight> GenInstance<W> {
    /// Translates a labelled instance into `(G, k, u)` form.
    ///
    /// Domination accepts any labelling. Packing is only defined for
    /// `base = 0`, `step = 1` and labels in `{0, F}`, with nonnegative quotas.
    /// Free vertices get cap `levels`, fixed vertices cap 0.
    pub fn from_labelled(l: &LabelledInstance, sense: Sense) -> Result<(Self, ValueMap, LabelLift)> {
        let fixed: Vec<Option<i64>> = l.labels.iter().map(|t| t.fixed()).collect();
        let lift = LabelLift { base: l.base, step: l.step, fixed };
        let levels = W::from_i64(l.levels)?;
        let caps = |labels: &[Label]| -> Vec<W> {
            labels.iter().map(|t| if t.is_free() { levels } else { W::zero() }).collect()
        };
        match sense {
            Sense::Pack => {
                if l.base != 0 || l.step != 1 {
                    return Err(Error::Unsupported(
                        "labelled packing is only defined for base 0 and step 1".into(),
                    ));
                }
                if l.labels.iter().any(|t| matches!(t, Label::Fixed(x) if *x != 0)) {
                    return Err(Error::Unsupported("labelled packing only allows fixed label 0".into()));
                }
                let k = l.quota.iter().map(|&q| W::from_i64(q)).collect::<Result<Vec<W>>>()?;
                let inst = Self::new(l.graph.clone(), k, caps(&l.labels), Sense::Pack)?;
                Ok((inst, ValueMap::identity(), lift))
            }
            Sense::Dominate => {
                let (canonical, scale_map) = l.canonicalize();
                let reduced = eliminate_fixed_labels(&canonical)?;
                let out = &reduced.output;
                let k = out.quota.iter().map(|&q| W::from_i64(q.max(0))).collect::<Result<Vec<W>>>()?;
                let inst = Self::new(out.graph.clone(), k, caps(&out.labels), Sense::Dominate)?;
                Ok((inst, scale_map.then(&reduced.value_map), lift))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_division() {
        assert_eq!(ceil_div(3, 2), 2);
        assert_eq!(ceil_div(4, 2), 2);
        assert_eq!(ceil_div(-3, 2), -1);
        assert_eq!(ceil_div(-4, 2), -2);
    }

    #[test]
    fn rejects_bad_labellings() {
        let g = Graph::path(2);
        assert!(LabelledInstance::new(g.clone(), 0, 0, 1, vec![Label::Free; 2], vec![1; 2]).is_err());
        assert!(LabelledInstance::new(g.clone(), 0, 1, -1, vec![Label::Free; 2], vec![1; 2]).is_err());
        assert!(LabelledInstance::new(g.clone(), 0, 1, 1, vec![Label::Fixed(2), Label::Free], vec![1; 2]).is_err());
        assert!(LabelledInstance::new(g, -1, 2, 1, vec![Label::Fixed(0), Label::Free], vec![1; 2]).is_err());
    }

    #[test]
    fn all_free_canonical_is_identity() {
        let l = LabelledInstance::new(Graph::path(3), 0, 1, 2, vec![Label::Free; 3], vec![1, 2, 1]).unwrap();
        let (inst, map, _) = GenInstance::<u32>::from_labelled(&l, Sense::Dominate).unwrap();
        assert_eq!(inst.k(), &[1, 2, 1]);
        assert_eq!(inst.u(), &[2, 2, 2]);
        assert_eq!(map, ValueMap::identity());
    }

    #[test]
    fn shifted_range_on_single_vertex() {
        // Y = {-1, 1, 3}; k* = ceil((1 + 1) / 2) = 1
        let l = LabelledInstance::new(Graph::edgeless(1), -1, 2, 2, vec![Label::Free], vec![1]).unwrap();
        let (inst, map, lift) = GenInstance::<u32>::from_labelled(&l, Sense::Dominate).unwrap();
        assert_eq!(inst.k(), &[1]);
        assert_eq!(inst.u(), &[2]);
        // f* = 1 lifts to f = 1, the true optimum
        assert_eq!(map.apply(1), 1);
        assert_eq!(lift.apply(&Assignment::new(vec![1u32])).unwrap(), vec![1]);
    }

    #[test]
    fn fixed_zero_label_becomes_zero_cap() {
        let l = LabelledInstance::new(
            Graph::path(3),
            0,
            1,
            1,
            vec![Label::Free, Label::Fixed(0), Label::Free],
            vec![1; 3],
        )
        .unwrap();
        let (inst, map, _) = GenInstance::<u32>::from_labelled(&l, Sense::Dominate).unwrap();
        assert_eq!(inst.u(), &[1, 0, 1]);
        assert_eq!(inst.k(), &[1, 1, 1]);
        assert_eq!(map.apply(2), 2);
    }

    #[test]
    fn packing_forms() {
        let g = Graph::path(2);
        let shifted = LabelledInstance::new(g.clone(), 1, 1, 1, vec![Label::Free; 2], vec![1; 2]).unwrap();
        assert!(matches!(
            GenInstance::<u32>::from_labelled(&shifted, Sense::Pack),
            Err(Error::Unsupported(_))
        ));
        let ok = LabelledInstance::new(g, 0, 1, 3, vec![Label::Fixed(0), Label::Free], vec![2, 2]).unwrap();
        let (inst, map, _) = GenInstance::<u32>::from_labelled(&ok, Sense::Pack).unwrap();
        assert_eq!(inst.u(), &[0, 3]);
        assert_eq!(map, ValueMap::identity());
    }
}
