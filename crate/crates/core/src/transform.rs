//! Value-preserving reductions between instances.
//!
//! Every reduction records how the optimum of its output relates to the
//! optimum of its input ([`ValueMap`]) and how to turn an output solution
//! back into an input solution ([`Lift`]).

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMap};
use crate::instance::{Assignment, GenInstance, Sense};
use crate::labelled::{Label, LabelledInstance};
use crate::scalar::{narrow, wide_sum, Weight};

/// Exact affine relation `original = offset ± scale * transformed`.
///
/// With `flip` unset the sign is `+` and both optima have the same direction;
/// with `flip` set the sign is `-` and a minimum maps to a maximum.
#[derive(Debug, Clone)]
pub struct ValueMap {
    pub scale: i128,
    pub offset: i128,
    pub flip: bool,
    pub description: String,
}

/// Equality ignores the description.
impl PartialEq for ValueMap {
    fn eq(&self, other: &Self) -> bool {
        (self.scale, self.offset, self.flip) == (other.scale, other.offset, other.flip)
    }
}

impl Eq for ValueMap {}

impl ValueMap {
    pub fn identity() -> Self {
        Self { scale: 1, offset: 0, flip: false, description: "identity".into() }
    }

    pub fn affine(scale: i128, offset: i128, description: impl Into<String>) -> Self {
        assert!(scale >= 1, "value map scale must be positive");
        Self { scale, offset, flip: false, description: description.into() }
    }

    pub fn flipped(scale: i128, offset: i128, description: impl Into<String>) -> Self {
        assert!(scale >= 1, "value map scale must be positive");
        Self { scale, offset, flip: true, description: description.into() }
    }

    pub fn described(mut self, description: impl Into<String>) -> Self {
        self.description = description.into();
        self
    }

    /// Original optimum from the transformed optimum.
    pub fn apply(&self, transformed: i128) -> i128 {
        if self.flip {
            self.offset - self.scale * transformed
        } else {
            self.offset + self.scale * transformed
        }
    }

    /// Map of a reduction chain: `self` first, then `next` on its output.
    pub fn then(&self, next: &ValueMap) -> ValueMap {
        let sign = if self.flip { -1 } else { 1 };
        ValueMap {
            scale: self.scale * next.scale,
            offset: self.offset + sign * self.scale * next.offset,
            flip: self.flip != next.flip,
            description: format!("{}; {}", self.description, next.description),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

impl fmt::Display for ValueMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "scale={} offset={} flip={}", self.scale, self.offset, u8::from(self.flip))
    }
}

/// Declarative rule mapping an output valuation to an input valuation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lift<W> {
    Identity,
    /// Keep the first `keep` entries.
    Restrict { keep: usize },
    /// `f(v) = caps[v] - g(v)`.
    Complement { caps: Vec<W> },
    /// Raise every listed pendant to 1, exchanging with a unit-valued vertex
    /// of its anchor's original closed neighborhood when one exists, then keep
    /// the first `keep` entries. Only meaningful for 0/1 valuations.
    SaturatePendants { keep: usize, pendants: Vec<(usize, usize)> },
    /// `f(v) = Σ g(w)` over `w ∈ groups[v]`.
    CliqueSum { groups: Vec<Vec<usize>> },
}

impl<W: Weight> Lift<W> {
    /// Applies the rule. `output` is the instance the valuation belongs to.
    pub fn apply(&self, output: &GenInstance<W>, g: &Assignment<W>) -> Result<Assignment<W>> {
        if g.len() != output.n() {
            return Err(Error::SizeMismatch { expected: output.n(), actual: g.len() });
        }
        let values = g.values();
        let lifted = match self {
            Lift::Identity => values.to_vec(),
            Lift::Restrict { keep } => values[..*keep].to_vec(),
            Lift::Complement { caps } => caps
                .iter()
                .zip(values)
                .map(|(&c, &x)| {
                    c.checked_sub(&x).ok_or_else(|| {
                        Error::InvalidInput(format!("value {x} exceeds cap {c}; cannot complement"))
                    })
                })
                .collect::<Result<_>>()?,
            Lift::SaturatePendants { keep, pendants } => {
                let mut h = values.to_vec();
                saturate_pendants(output.graph(), *keep, pendants, &mut h);
                h.truncate(*keep);
                h
            }
            Lift::CliqueSum { groups } => groups
                .iter()
                .map(|grp| narrow(wide_sum(grp.iter().map(|&w| values[w]))))
                .collect::<Result<_>>()?,
        };
        Ok(Assignment::new(lifted))
    }
}

fn saturate_pendants<W: Weight>(g: &Graph, keep: usize, pendants: &[(usize, usize)], h: &mut [W]) {
    for &(leaf, anchor) in pendants {
        if h[leaf] == W::one() {
            continue;
        }
        let donor = g.closed_iter(anchor).filter(|&z| z < keep).find(|&z| h[z] == W::one());
        if let Some(z) = donor {
            h[z] = W::zero();
        }
        h[leaf] = W::one();
    }
}

impl<W> fmt::Display for Lift<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lift::Identity => f.write_str("identity"),
            Lift::Restrict { keep } => write!(f, "restrict keep={keep}"),
            Lift::Complement { .. } => f.write_str("complement f=u-g"),
            Lift::SaturatePendants { keep, pendants } => {
                write!(f, "saturate-pendants keep={keep} pendants={}", pendants.len())
            }
            Lift::CliqueSum { groups } => write!(f, "clique-sum groups={}", groups.len()),
        }
    }
}

/// A transformed instance with its value map, vertex correspondence and lift.
#[derive(Debug, Clone)]
pub struct Reduction<W> {
    pub output: GenInstance<W>,
    pub value_map: ValueMap,
    pub vertex_map: VertexMap,
    pub lift: Lift<W>,
}

impl<W: Weight> Reduction<W> {
    pub fn lift(&self, g: &Assignment<W>) -> Result<Assignment<W>> {
        self.lift.apply(&self.output, g)
    }

    fn identity(inst: &GenInstance<W>, description: &str) -> Self {
        Self {
            output: inst.clone(),
            value_map: ValueMap::identity().described(description),
            vertex_map: VertexMap::identity(inst.n()),
            lift: Lift::Identity,
        }
    }
}

/// Swaps domination and packing: `k'(v) = u(N[v]) - k(v)`, same graph and caps.
///
/// `L_{k,u} = u(V) - γ_{k',u}` and `γ_{k,u} = u(V) - L_{k',u}`. Requires
/// `k(v) <= u(N[v])` everywhere, which [`GenInstance::normalize`] guarantees.
/// Applying it twice returns the input.
pub fn dualize<W: Weight>(inst: &GenInstance<W>) -> Result<Reduction<W>> {
    if let Some(v) = inst.overloaded_vertex() {
        return Err(Error::NotNormalized(v));
    }
    let k = (0..inst.n())
        .map(|v| narrow(inst.reach(v) - inst.k()[v].wide()))
        .collect::<Result<Vec<W>>>()?;
    let output = GenInstance::new(inst.graph().clone(), k, inst.u().to_vec(), inst.sense().opposite())?;
    Ok(Reduction {
        value_map: ValueMap::flipped(1, inst.total_cap(), "duality: original = u(V) - transformed"),
        vertex_map: VertexMap::identity(inst.n()),
        lift: Lift::Complement { caps: inst.u().to_vec() },
        output,
    })
}

/// Result of [`eliminate_fixed_labels`].
#[derive(Debug, Clone)]
pub struct LabelledReduction {
    pub output: LabelledInstance,
    pub value_map: ValueMap,
    /// Fixed values of the input, restored when lifting.
    pub fixed: Vec<Option<i64>>,
}

impl LabelledReduction {
    /// Restores fixed labels on an output labelled function.
    pub fn lift(&self, values: &[i64]) -> Result<Vec<i64>> {
        if values.len() != self.fixed.len() {
            return Err(Error::SizeMismatch { expected: self.fixed.len(), actual: values.len() });
        }
        Ok(values.iter().zip(&self.fixed).map(|(&x, t)| t.unwrap_or(x)).collect())
    }
}

/// Replaces every fixed label by 0 and subtracts the fixed mass from quotas:
/// `k₀(v) = max(0, k(v) - t(N[v] \ F))`. Domination optima differ by the
/// total fixed mass `t(V \ F)`.
pub fn eliminate_fixed_labels(l: &LabelledInstance) -> Result<LabelledReduction> {
    if l.base() != 0 || l.step() != 1 {
        return Err(Error::Unsupported("fixed-label elimination needs base 0 and step 1".into()));
    }
    let g = l.graph();
    let fixed: Vec<Option<i64>> = l.labels().iter().map(|t| t.fixed()).collect();
    let mass = |v: usize| -> i64 { g.closed_iter(v).filter_map(|w| fixed[w]).sum() };
    let quota = (0..l.n()).map(|v| (l.quota()[v] - mass(v)).max(0)).collect();
    let labels = fixed.iter().map(|t| if t.is_some() { Label::Fixed(0) } else { Label::Free }).collect();
    let total: i64 = fixed.iter().flatten().sum();
    let output = LabelledInstance::new(g.clone(), 0, 1, l.levels(), labels, quota)?;
    Ok(LabelledReduction {
        output,
        value_map: ValueMap::affine(1, total as i128, "fixed labels folded into quotas"),
        fixed,
    })
}

/// Frees zero-cap vertices of a packing instance with caps in `{0, levels}`.
///
/// Each zero-cap vertex gets a pendant with quota 0, which forces both to 0;
/// every output vertex then has cap `levels`.
pub fn free_reduction<W: Weight>(inst: &GenInstance<W>, levels: W) -> Result<Reduction<W>> {
    if inst.sense() != Sense::Pack {
        return Err(Error::WrongSense("pendant freeing applies to packing instances".into()));
    }
    if let Some(v) = inst.u().iter().position(|&c| c != W::zero() && c != levels) {
        return Err(Error::InvalidInput(format!(
            "cap {} at vertex {v} is neither 0 nor {levels}",
            inst.u()[v]
        )));
    }
    let counts: Vec<usize> = inst.u().iter().map(|&c| usize::from(c == W::zero())).collect();
    if counts.iter().all(|&c| c == 0) {
        return Ok(Reduction::identity(inst, "no zero caps"));
    }
    let (graph, vertex_map) = inst.graph().add_pendants(&counts)?;
    let mut k = inst.k().to_vec();
    k.resize(graph.n(), W::zero());
    let u = vec![levels; graph.n()];
    Ok(Reduction {
        output: GenInstance::new(graph, k, u, Sense::Pack)?,
        value_map: ValueMap::identity().described("zero caps replaced by quota-0 pendants"),
        vertex_map,
        lift: Lift::Restrict { keep: inst.n() },
    })
}

/// Makes the quota uniform on a 0/1 packing instance by adding
/// `k* - k(v)` pendants to every `v`, `k* = max k`.
///
/// The output optimum exceeds the input optimum by `Σ (k* - k(v))`.
pub fn uniformize_packing<W: Weight>(inst: &GenInstance<W>) -> Result<Reduction<W>> {
    if inst.sense() != Sense::Pack {
        return Err(Error::WrongSense("quota uniformization applies to packing instances".into()));
    }
    if inst.u().iter().any(|&c| c != W::one()) {
        return Err(Error::InvalidInput("quota uniformization needs all caps equal to 1".into()));
    }
    if let Some(v) = inst.overloaded_vertex() {
        return Err(Error::NotNormalized(v));
    }
    let top = inst.k().iter().copied().max().unwrap_or_else(W::zero);
    let counts: Vec<usize> = inst.k().iter().map(|&q| (top - q).to_index()).collect();
    let added: usize = counts.iter().sum();
    if added == 0 {
        return Ok(Reduction::identity(inst, "quota already uniform"));
    }
    let (graph, vertex_map) = inst.graph().add_pendants(&counts)?;
    let anchors = counts.iter().enumerate().flat_map(|(v, &c)| std::iter::repeat_n(v, c));
    let pendants = vertex_map.created.iter().copied().zip(anchors).collect();
    let n = graph.n();
    Ok(Reduction {
        output: GenInstance::uniform(graph, top, W::one(), Sense::Pack),
        value_map: ValueMap::affine(1, -(added as i128), "uniform quota via pendants"),
        vertex_map,
        lift: Lift::SaturatePendants { keep: n - added, pendants },
    })
}

/// Reduces a dominating instance with caps at most `max_cap` to 0/1 caps by
/// replacing every positive-cap vertex `v` with a clique of `u(v)` vertices,
/// each carrying quota `k(v)`. Zero-cap vertices stay as single vertices.
pub fn flatten_capacities<W: Weight>(inst: &GenInstance<W>, max_cap: W) -> Result<Reduction<W>> {
    if inst.sense() != Sense::Dominate {
        return Err(Error::WrongSense("capacity flattening applies to dominating instances".into()));
    }
    if let Some(v) = inst.u().iter().position(|&c| c > max_cap) {
        return Err(Error::InvalidInput(format!(
            "cap {} at vertex {v} exceeds the bound {max_cap}",
            inst.u()[v]
        )));
    }
    let sizes: Vec<usize> = inst.u().iter().map(|&c| c.to_index().max(1)).collect();
    let (graph, vertex_map) = inst.graph().replace_by_cliques(&sizes)?;
    let mut k = vec![W::zero(); graph.n()];
    let mut u = vec![W::zero(); graph.n()];
    for (v, group) in vertex_map.forward.iter().enumerate() {
        for &w in group {
            k[w] = inst.k()[v];
            u[w] = if inst.u()[v] == W::zero() { W::zero() } else { W::one() };
        }
    }
    Ok(Reduction {
        output: GenInstance::new(graph, k, u, Sense::Dominate)?,
        value_map: ValueMap::identity().described("caps flattened into cliques"),
        lift: Lift::CliqueSum { groups: vertex_map.forward.clone() },
        vertex_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_map_composition() {
        let dual = ValueMap::flipped(1, 10, "d");
        let shift = ValueMap::affine(2, -3, "s");
        // original = 10 - (2x - 3)
        let both = dual.then(&shift);
        assert_eq!(both.apply(4), 10 - (2 * 4 - 3));
        assert!(both.flip);
        assert!(dual.then(&dual).is_identity());
    }

    #[test]
    fn dualize_p3_domination() {
        let inst = GenInstance::<u32>::from_domination(Graph::path(3));
        let red = dualize(&inst).unwrap();
        assert_eq!(red.output.k(), &[1, 2, 1]);
        assert_eq!(red.output.sense(), Sense::Pack);
        assert_eq!(red.value_map.apply(2), 1);
        let back = dualize(&red.output).unwrap();
        assert_eq!(back.output, inst);
    }

    #[test]
    fn dualize_rejects_overloaded() {
        let inst = GenInstance::<u32>::uniform(Graph::edgeless(2), 2, 1, Sense::Pack);
        assert_eq!(dualize(&inst).unwrap_err(), Error::NotNormalized(0));
    }

    #[test]
    fn fixed_label_elimination_on_p3() {
        let l = LabelledInstance::new(
            Graph::path(3),
            0,
            1,
            1,
            vec![Label::Fixed(1), Label::Free, Label::Free],
            vec![1, 1, 1],
        )
        .unwrap();
        let red = eliminate_fixed_labels(&l).unwrap();
        assert_eq!(red.output.quota(), &[0, 0, 1]);
        assert_eq!(red.output.labels(), &[Label::Fixed(0), Label::Free, Label::Free]);
        assert_eq!(red.value_map.offset, 1);
        assert_eq!(red.lift(&[0, 0, 1]).unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn free_reduction_shapes() {
        let all_free = GenInstance::<u32>::uniform(Graph::path(3), 1, 1, Sense::Pack);
        let red = free_reduction(&all_free, 1).unwrap();
        assert_eq!(red.output, all_free);

        let inst = GenInstance::<u32>::new(Graph::path(3), vec![1; 3], vec![0, 1, 1], Sense::Pack).unwrap();
        let red = free_reduction(&inst, 1).unwrap();
        assert_eq!(red.output.n(), 4);
        assert_eq!(red.output.k(), &[1, 1, 1, 0]);
        assert_eq!(red.output.u(), &[1; 4]);
        assert!(red.output.graph().has_edge(0, 3));

        let dom = GenInstance::<u32>::from_domination(Graph::path(2));
        assert!(matches!(free_reduction(&dom, 1), Err(Error::WrongSense(_))));
        let mixed = GenInstance::<u32>::new(Graph::path(2), vec![2; 2], vec![1, 2], Sense::Pack).unwrap();
        assert!(matches!(free_reduction(&mixed, 2), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn uniformize_p3() {
        let inst = GenInstance::<u32>::new(Graph::path(3), vec![1, 2, 1], vec![1; 3], Sense::Pack).unwrap();
        let red = uniformize_packing(&inst).unwrap();
        assert_eq!(red.output.n(), 5);
        assert_eq!(red.output.k(), &[2; 5]);
        assert_eq!(red.value_map.apply(4), 2);
        // output optimum (1,0,1,1,1); saturated already, projection keeps (1,0,1)
        let lifted = red.lift(&Assignment::new(vec![1, 0, 1, 1, 1])).unwrap();
        assert_eq!(lifted.values(), &[1, 0, 1]);
        // a pendant at 0 takes the unit of its anchor
        let lifted = red.lift(&Assignment::new(vec![1, 0, 1, 0, 1])).unwrap();
        assert_eq!(lifted.values(), &[0, 0, 1]);

        let uniform = GenInstance::<u32>::uniform(Graph::path(3), 2, 1, Sense::Pack);
        assert_eq!(uniformize_packing(&uniform).unwrap().output, uniform);
    }

    #[test]
    fn flatten_examples() {
        let ones = GenInstance::<u32>::uniform(Graph::path(3), 1, 1, Sense::Dominate);
        assert_eq!(flatten_capacities(&ones, 1).unwrap().output, ones);

        let single = GenInstance::<u32>::new(Graph::edgeless(1), vec![2], vec![2], Sense::Dominate).unwrap();
        let red = flatten_capacities(&single, 2).unwrap();
        assert_eq!(red.output.graph(), &Graph::complete(2));
        assert_eq!(red.output.k(), &[2, 2]);
        assert_eq!(red.output.u(), &[1, 1]);
        assert_eq!(red.lift(&Assignment::new(vec![1, 1])).unwrap().values(), &[2]);

        assert!(flatten_capacities(&single, 1).is_err());
    }
}
