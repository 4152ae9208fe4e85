//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Graphs are immutable once built. Structural edits (pendant attachment,
//! clique replacement) return a fresh graph together with a [`VertexMap`]
//! describing where every original vertex went.

use std::fmt;

use crate::error::{Error, Result};

/// Simple undirected graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending and never contain the vertex itself.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut lists = vec![Vec::new(); n];
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            lists[a].push(b);
            lists[b].push(a);
        }
        for (v, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(v.min(w[0]), v.max(w[0])));
            }
        }
        Ok(Self::from_lists(lists))
    }

    /// Trusted constructor: lists must already be symmetric, loop-free and deduplicated.
    pub(crate) fn from_lists(mut lists: Vec<Vec<usize>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        let mut targets = Vec::with_capacity(lists.iter().map(Vec::len).sum());
        offsets.push(0);
        for list in &mut lists {
            list.sort_unstable();
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        Self { offsets, targets }
    }

    /// `S_n`: `n` isolated vertices.
    pub fn edgeless(n: usize) -> Self {
        Self::from_lists(vec![Vec::new(); n])
    }

    /// `P_n` with edges `i -- i+1`.
    pub fn path(n: usize) -> Self {
        let lists = (0..n)
            .map(|v| {
                let mut l = Vec::with_capacity(2);
                if v > 0 {
                    l.push(v - 1);
                }
                if v + 1 < n {
                    l.push(v + 1);
                }
                l
            })
            .collect();
        Self::from_lists(lists)
    }

    /// `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInput(format!("cycle needs n >= 3, got {n}")));
        }
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Self {
        Self::from_lists((0..n).map(|v| (0..n).filter(|&w| w != v).collect()).collect())
    }

    /// `K_{1,leaves}` with center `0`.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
    }

    /// The 3-sun: a triangle `0,2,4` on alternate vertices of the 6-cycle `0..6`.
    pub fn sun3() -> Self {
        let cycle = (0..6).map(|v| (v, (v + 1) % 6));
        Self::from_edges(6, cycle.chain([(0, 2), (2, 4), (0, 4)])).expect("3-sun is simple")
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// `Δ(G)`; zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let (small, other) = if self.degree(a) <= self.degree(b) { (a, b) } else { (b, a) };
        self.neighbors(small).binary_search(&other).is_ok()
    }

    /// `N[v]` in ascending order.
    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut out: Vec<usize> = self.closed_iter(v).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// `N[v]` without allocation; `v` first, then its neighbors.
    pub fn closed_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(v).chain(self.neighbors(v).iter().copied())
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |a| {
            self.neighbors(a).iter().filter(move |&&b| b > a).map(move |&b| (a, b))
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Attaches `counts[v]` new degree-one vertices to each `v`.
    ///
    /// Originals keep their indices; new vertices are appended grouped by anchor.
    pub fn add_pendants(&self, counts: &[usize]) -> Result<(Graph, VertexMap)> {
        let n = self.n();
        if counts.len() != n {
            return Err(Error::SizeMismatch { expected: n, actual: counts.len() });
        }
        let total: usize = counts.iter().sum();
        let mut lists: Vec<Vec<usize>> = (0..n).map(|v| self.neighbors(v).to_vec()).collect();
        lists.reserve(total);
        let mut created = Vec::with_capacity(total);
        for (anchor, &count) in counts.iter().enumerate() {
            for _ in 0..count {
                let leaf = lists.len();
                lists.push(vec![anchor]);
                lists[anchor].push(leaf);
                created.push(leaf);
            }
        }
        let map = VertexMap { forward: (0..n).map(|v| vec![v]).collect(), created };
        Ok((Graph::from_lists(lists), map))
    }

    /// Replaces `v` by `K_size`, every clique vertex adjacent to all of `N(v)`.
    pub fn replace_by_clique(&self, v: usize, size: usize) -> Result<(Graph, VertexMap)> {
        self.check_vertex(v)?;
        if size == 0 {
            return Err(Error::InvalidInput("clique replacement size must be at least 1".into()));
        }
        let mut sizes = vec![1; self.n()];
        sizes[v] = size;
        let (g, mut map) = self.replace_by_cliques(&sizes)?;
        map.created = map.forward[v].clone();
        Ok((g, map))
    }

    /// Replaces every vertex `v` by a clique on `sizes[v] >= 1` vertices.
    ///
    /// Cliques are laid out contiguously in original vertex order, and two
    /// cliques are completely joined exactly when their originals were adjacent.
    pub fn replace_by_cliques(&self, sizes: &[usize]) -> Result<(Graph, VertexMap)> {
        let n = self.n();
        if sizes.len() != n {
            return Err(Error::SizeMismatch { expected: n, actual: sizes.len() });
        }
        if let Some(v) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::InvalidInput(format!("clique size 0 at vertex {v}")));
        }
        let mut start = Vec::with_capacity(n + 1);
        start.push(0);
        for &s in sizes {
            start.push(start.last().unwrap() + s);
        }
        let forward: Vec<Vec<usize>> = (0..n).map(|v| (start[v]..start[v + 1]).collect()).collect();
        let mut lists = vec![Vec::new(); start[n]];
        for v in 0..n {
            for (x, list) in lists.iter_mut().enumerate().take(start[v + 1]).skip(start[v]) {
                list.extend((start[v]..start[v + 1]).filter(|&y| y != x));
                for &w in self.neighbors(v) {
                    list.extend(start[w]..start[w + 1]);
                }
            }
        }
        let created = (0..n).filter(|&v| sizes[v] > 1).flat_map(|v| forward[v].clone()).collect();
        Ok((Graph::from_lists(lists), VertexMap { forward, created }))
    }

    /// Induced subgraph on `keep`, relabelled `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            if index[v] != usize::MAX {
                return Err(Error::InvalidInput(format!("vertex {v} listed twice")));
            }
            index[v] = i;
        }
        let lists = keep
            .iter()
            .map(|&v| {
                self.neighbors(v).iter().filter(|&&w| index[w] != usize::MAX).map(|&w| index[w]).collect()
            })
            .collect();
        Ok(Graph::from_lists(lists))
    }
}

/// Correspondence between the vertices of a graph and an edited copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    /// `forward[v]` is the set of new vertices standing for original `v`.
    pub forward: Vec<Vec<usize>>,
    /// Vertices introduced by the edit.
    pub created: Vec<usize>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        Self { forward: (0..n).map(|v| vec![v]).collect(), created: Vec::new() }
    }

    pub fn image(&self, v: usize) -> &[usize] {
        &self.forward[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_neighborhoods() {
        assert_eq!(Graph::complete(3).closed_neighborhood(0).unwrap(), vec![0, 1, 2]);
        assert_eq!(Graph::edgeless(4).closed_neighborhood(2).unwrap(), vec![2]);
        assert_eq!(Graph::path(3).closed_neighborhood(1).unwrap(), vec![0, 1, 2]);
        assert!(matches!(
            Graph::path(3).closed_neighborhood(3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn pendants_on_p2() {
        let (g, map) = Graph::path(2).add_pendants(&[1, 0]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert_eq!(map.created, vec![2]);
    }

    #[test]
    fn zero_pendants_is_identity() {
        let g = Graph::sun3();
        let (h, map) = g.add_pendants(&[0; 6]).unwrap();
        assert_eq!(g, h);
        assert!(map.created.is_empty());
    }

    #[test]
    fn pendants_on_triangle_degrees() {
        let (g, map) = Graph::complete(3).add_pendants(&[2, 1, 0]).unwrap();
        let degrees: Vec<_> = (0..g.n()).map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![4, 3, 2, 1, 1, 1]);
        assert_eq!(map.created, vec![3, 4, 5]);
    }

    #[test]
    fn clique_replacement() {
        // size 1 keeps the graph
        let g = Graph::star(3);
        assert_eq!(g.replace_by_clique(0, 1).unwrap().0, g);

        // P_3 center -> K_2 gives the diamond; leaves 0 and 3 stay non-adjacent
        let (d, map) = Graph::path(3).replace_by_clique(1, 2).unwrap();
        assert_eq!(map.forward[1], vec![1, 2]);
        assert_eq!(d.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert!(!d.has_edge(0, 3));

        let (k3, _) = Graph::edgeless(1).replace_by_clique(0, 3).unwrap();
        assert_eq!(k3, Graph::complete(3));

        assert!(Graph::path(2).replace_by_clique(0, 0).is_err());
    }

    #[test]
    fn sun_shape() {
        let s = Graph::sun3();
        assert_eq!(s.edge_count(), 9);
        assert_eq!((0..6).map(|v| s.degree(v)).collect::<Vec<_>>(), vec![4, 2, 4, 2, 4, 2]);
    }
}
