//! Strong elimination orderings and orderings of maximum neighborhoods.
//!
//! For an order `(v_0, …, v_{n-1})` let `G_i` be the subgraph induced by
//! `v_i, …, v_{n-1}`. The order is a strong elimination ordering when for
//! every `i` and every `j <= k` with `v_j, v_k ∈ N_{G_i}[v_i]` we have
//! `N_{G_i}[v_j] ⊆ N_{G_i}[v_k]`. Taking `j = i` makes `v_i` simplicial in
//! `G_i`, so one nested-neighborhood check covers both conditions.
//!
//! Positions in this module are 0-based.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    StrongElimination,
    MaxNeighborhood,
}

impl std::str::FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strong" => Ok(OrderKind::StrongElimination),
            "maxnbr" => Ok(OrderKind::MaxNeighborhood),
            other => Err(Error::InvalidInput(format!("unknown order kind `{other}`"))),
        }
    }
}

/// A vertex permutation tagged with the property it claims.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EliminationOrder {
    order: Vec<usize>,
    kind: OrderKind,
}

impl EliminationOrder {
    pub fn new(order: Vec<usize>, kind: OrderKind) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        Ok(Self { order, kind })
    }

    /// `0, 1, …, n-1`.
    pub fn natural(n: usize, kind: OrderKind) -> Self {
        Self { order: (0..n).collect(), kind }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.order
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `positions()[v]` is the index of `v` in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.order.len() != g.n() {
            return Err(Error::NotAPermutation(g.n()));
        }
        Ok(())
    }
}

/// Why an order fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Violation {
    /// `N_{G_i}[v_j] ⊄ N_{G_i}[v_k]` for `v_j, v_k ∈ N_{G_i}[v_i]`, `j < k`;
    /// `witness` lies in the first set but not the second.
    NotNested { i: usize, j: usize, k: usize, witness: usize },
    /// `v_i` has no maximum neighbor in `G_i`.
    NoMaximumNeighbor { i: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NotNested { i, j, k, witness } => write!(
                f,
                "positions (i={}, j={}, k={}): vertex {} is in the closed neighborhood of position {} \
                 but not of position {} within the suffix starting at position {}",
                i + 1,
                j + 1,
                k + 1,
                witness + 1,
                j + 1,
                k + 1,
                i + 1
            ),
            Violation::NoMaximumNeighbor { i } => {
                write!(f, "position {}: no maximum neighbor in the remaining graph", i + 1)
            }
        }
    }
}

/// `N_{G_i}[v]` sorted by position.
fn suffix_closed(g: &Graph, pos: &[usize], i: usize, v: usize) -> Vec<usize> {
    let mut out: Vec<usize> = g.closed_iter(v).filter(|&w| pos[w] >= i).collect();
    out.sort_unstable_by_key(|&w| pos[w]);
    out
}

/// First `w ∈ N_{G_i}[a]` (by position) outside `N_{G_i}[b]`.
fn escape(g: &Graph, pos: &[usize], i: usize, a: usize, b: usize) -> Option<usize> {
    suffix_closed(g, pos, i, a).into_iter().find(|&w| w != b && !g.has_edge(b, w))
}

/// Checks the strong elimination property; returns the lexicographically
/// first violating `(i, j, k)` when it fails.
pub fn verify_strong_elimination(g: &Graph, o: &EliminationOrder) -> Result<Option<Violation>> {
    o.check_graph(g)?;
    let pos = o.positions();
    for (i, &vi) in o.vertices().iter().enumerate() {
        let nbhd = suffix_closed(g, &pos, i, vi);
        for (x, &a) in nbhd.iter().enumerate() {
            for &b in &nbhd[x + 1..] {
                if let Some(witness) = escape(g, &pos, i, a, b) {
                    return Ok(Some(Violation::NotNested { i, j: pos[a], k: pos[b], witness }));
                }
            }
        }
    }
    Ok(None)
}

/// Checks that every `v_i` has a maximum neighbor in `G_i`.
pub fn verify_max_neighborhood(g: &Graph, o: &EliminationOrder) -> Result<Option<Violation>> {
    o.check_graph(g)?;
    let pos = o.positions();
    for (i, &vi) in o.vertices().iter().enumerate() {
        let nbhd = suffix_closed(g, &pos, i, vi);
        let has_max = nbhd.iter().any(|&m| nbhd.iter().all(|&w| w == m || escape(g, &pos, i, w, m).is_none()));
        if !has_max {
            return Ok(Some(Violation::NoMaximumNeighbor { i }));
        }
    }
    Ok(None)
}

/// Verifies `o` against the property named by its kind.
pub fn verify(g: &Graph, o: &EliminationOrder) -> Result<Option<Violation>> {
    match o.kind() {
        OrderKind::StrongElimination => verify_strong_elimination(g, o),
        OrderKind::MaxNeighborhood => verify_max_neighborhood(g, o),
    }
}

/// Outcome of [`find_strong_elimination`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(EliminationOrder),
    /// `exhaustive` is true when the whole search space was covered, so the
    /// graph is not strongly chordal.
    NotFound { exhaustive: bool },
}

impl Search {
    pub fn order(self) -> Option<EliminationOrder> {
        match self {
            Search::Found(o) => Some(o),
            Search::NotFound { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    /// Graphs with at most this many vertices are searched to completion.
    pub search_cap: usize,
    /// Node budget for larger graphs.
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { search_cap: 10, node_budget: 200_000 }
    }
}

pub fn find_strong_elimination(g: &Graph) -> Search {
    find_strong_elimination_with(g, SearchConfig::default())
}

/// Backtracking search for a strong elimination ordering.
///
/// Placing `v` next requires `v` to be simplicial in the remaining graph and
/// the closed neighborhoods of its remaining neighbors to form a chain under
/// inclusion; a strictly smaller neighborhood must then come earlier, which
/// is recorded as a precedence constraint on the rest of the order.
/// Candidates are tried by remaining degree, then index.
pub fn find_strong_elimination_with(g: &Graph, config: SearchConfig) -> Search {
    let n = g.n();
    let mut s = Searcher {
        g,
        alive: vec![true; n],
        pending: vec![0; n],
        succ: vec![Vec::new(); n],
        nodes: 0,
        budget: if n <= config.search_cap { u64::MAX } else { config.node_budget },
    };
    let mut order = Vec::with_capacity(n);
    // each frame: candidates in trial order, next index to try
    let mut frames: Vec<(Vec<usize>, usize)> = vec![(s.candidates(), 0)];
    let mut placed: Vec<(usize, Vec<(usize, usize)>)> = Vec::with_capacity(n);
    loop {
        if order.len() == n {
            let o = EliminationOrder { order, kind: OrderKind::StrongElimination };
            return Search::Found(o);
        }
        let Some((cands, next)) = frames.last_mut() else {
            return Search::NotFound { exhaustive: true };
        };
        let choice = cands[*next..].iter().position(|&v| s.pending[v] == 0).map(|p| *next + p);
        let advanced = match choice {
            Some(idx) => {
                *next = idx + 1;
                let v = cands[idx];
                s.nodes += 1;
                if s.nodes > s.budget {
                    return Search::NotFound { exhaustive: false };
                }
                match s.place(v) {
                    Some(added) => {
                        order.push(v);
                        placed.push((v, added));
                        true
                    }
                    None => continue,
                }
            }
            None => false,
        };
        if advanced {
            frames.push((s.candidates(), 0));
        } else {
            frames.pop();
            if let Some((v, added)) = placed.pop() {
                order.pop();
                s.unplace(v, &added);
            }
        }
    }
}

struct Searcher<'a> {
    g: &'a Graph,
    alive: Vec<bool>,
    /// Number of remaining vertices that must precede each vertex.
    pending: Vec<usize>,
    /// Precedence edges added when each vertex was placed.
    succ: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
}

impl Searcher<'_> {
    fn live_closed(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.g.closed_iter(v).filter(|&w| self.alive[w])
    }

    /// `N_R[a] ⊆ N_R[b]` in the remaining graph `R`.
    fn nested(&self, a: usize, b: usize) -> bool {
        self.live_closed(a).all(|w| w == b || self.g.has_edge(b, w))
    }

    fn candidates(&self) -> Vec<usize> {
        let mut c: Vec<usize> = (0..self.g.n()).filter(|&v| self.alive[v]).collect();
        c.sort_by_key(|&v| (self.live_closed(v).count(), v));
        c
    }

    /// Places `v` if allowed; returns the precedence edges it introduced.
    fn place(&mut self, v: usize) -> Option<Vec<(usize, usize)>> {
        let nbrs: Vec<usize> = self.live_closed(v).filter(|&w| w != v).collect();
        if !nbrs.iter().all(|&w| self.nested(v, w)) {
            return None;
        }
        let mut edges = Vec::new();
        for (x, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[x + 1..] {
                match (self.nested(a, b), self.nested(b, a)) {
                    (true, true) => {}
                    (true, false) => edges.push((a, b)),
                    (false, true) => edges.push((b, a)),
                    (false, false) => return None,
                }
            }
        }
        self.alive[v] = false;
        for &(a, b) in &edges {
            self.succ[a].push(b);
            self.pending[b] += 1;
        }
        // v's own successors are released
        for &b in &self.succ[v] {
            self.pending[b] -= 1;
        }
        Some(edges)
    }
}

impl Searcher<'_> {
    fn unplace(&mut self, v: usize, added: &[(usize, usize)]) {
        for &b in &self.succ[v] {
            self.pending[b] += 1;
        }
        for &(a, b) in added.iter().rev() {
            self.succ[a].pop();
            self.pending[b] -= 1;
        }
        self.alive[v] = true;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strong(order: &[usize]) -> EliminationOrder {
        EliminationOrder::new(order.to_vec(), OrderKind::StrongElimination).unwrap()
    }

    #[test]
    fn rejects_non_permutations() {
        assert_eq!(EliminationOrder::new(vec![0, 0], OrderKind::MaxNeighborhood), Err(Error::NotAPermutation(2)));
        assert!(EliminationOrder::new(vec![0, 2], OrderKind::MaxNeighborhood).is_err());
        let short = strong(&[0, 1]);
        assert!(verify_strong_elimination(&Graph::path(3), &short).is_err());
    }

    #[test]
    fn path_natural_order_is_strong() {
        assert_eq!(verify_strong_elimination(&Graph::path(4), &strong(&[0, 1, 2, 3])).unwrap(), None);
    }

    #[test]
    fn path_center_first_fails() {
        let v = verify_strong_elimination(&Graph::path(3), &strong(&[1, 0, 2])).unwrap().unwrap();
        // N[1] = {0,1,2} is not inside N[0] = {0,1}; witness is vertex 2
        assert_eq!(v, Violation::NotNested { i: 0, j: 0, k: 1, witness: 2 });
    }

    #[test]
    fn complete_graph_any_order() {
        let k4 = Graph::complete(4);
        assert_eq!(verify_strong_elimination(&k4, &strong(&[2, 0, 3, 1])).unwrap(), None);
        assert_eq!(verify_max_neighborhood(&k4, &strong(&[3, 1, 0, 2])).unwrap(), None);
    }

    #[test]
    fn cycle_has_no_order() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(verify_strong_elimination(&c4, &strong(&[0, 1, 2, 3])).unwrap().is_some());
        assert_eq!(find_strong_elimination(&c4), Search::NotFound { exhaustive: true });
    }

    #[test]
    fn max_neighborhood_on_p3() {
        let o = EliminationOrder::new(vec![0, 2, 1], OrderKind::MaxNeighborhood).unwrap();
        assert_eq!(verify_max_neighborhood(&Graph::path(3), &o).unwrap(), None);
    }

    #[test]
    fn finds_orders_on_trees_and_rejects_sun() {
        let star = Graph::star(4);
        let o = find_strong_elimination(&star).order().unwrap();
        assert_eq!(verify_strong_elimination(&star, &o).unwrap(), None);
        assert_eq!(find_strong_elimination(&Graph::sun3()), Search::NotFound { exhaustive: true });
    }

    #[test]
    fn finds_order_on_long_path_without_recursion() {
        let p = Graph::path(3000);
        let o = find_strong_elimination(&p).order().unwrap();
        assert_eq!(verify_strong_elimination(&p, &o).unwrap(), None);
    }
}
