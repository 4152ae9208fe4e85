//! Seeded random graph generators.
//!
//! All generators draw from `ChaCha8Rng`, so a seed yields the same graph on
//! every platform and release.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random recursive tree on `n` vertices with shuffled labels.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    check_order(n)?;
    let mut rng = rng(seed);
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(&mut rng);
    let edges: Vec<_> = (1..n).map(|i| (labels[rng.gen_range(0..i)], labels[i])).collect();
    Graph::from_edges(n, edges)
}

/// Intersection graph of `n` closed intervals with integer endpoints in `[0, 4n]`.
pub fn random_interval_graph(n: usize, seed: u64) -> Result<Graph> {
    Ok(random_intervals(n, seed)?.0)
}

/// Like [`random_interval_graph`] but also returns the intervals `(left, right)`.
pub fn random_intervals(n: usize, seed: u64) -> Result<(Graph, Vec<(usize, usize)>)> {
    check_order(n)?;
    let mut rng = rng(seed);
    let hi = 4 * n;
    let intervals: Vec<(usize, usize)> = (0..n)
        .map(|_| {
            let a = rng.gen_range(0..=hi);
            let b = rng.gen_range(0..=hi);
            (a.min(b), a.max(b))
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (intervals[i], intervals[j]);
            if a.0 <= b.1 && b.0 <= a.1 {
                edges.push((i, j));
            }
        }
    }
    Ok((Graph::from_edges(n, edges)?, intervals))
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_order(n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidInput(format!("edge probability {p} not in [0, 1]")));
    }
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("generators need n >= 1".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_tree() {
        assert_eq!(random_tree(1, 3).unwrap(), Graph::edgeless(1));
    }

    #[test]
    fn tree_edge_count_and_connectivity() {
        for seed in 0..20 {
            let n = 1 + seed as usize % 15;
            let t = random_tree(n, seed).unwrap();
            assert_eq!(t.edge_count(), n - 1);
            let mut seen = vec![false; n];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for &w in t.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn seed_determinism() {
        assert_eq!(random_tree(30, 9).unwrap(), random_tree(30, 9).unwrap());
        assert_eq!(random_interval_graph(30, 9).unwrap(), random_interval_graph(30, 9).unwrap());
        assert_eq!(random_graph(30, 0.2, 9).unwrap(), random_graph(30, 0.2, 9).unwrap());
    }

    #[test]
    fn gnp_extremes() {
        assert_eq!(random_graph(6, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(random_graph(6, 1.0, 1).unwrap(), Graph::complete(6));
        assert!(random_graph(6, 1.5, 1).is_err());
        assert!(random_tree(0, 1).is_err());
    }
}
