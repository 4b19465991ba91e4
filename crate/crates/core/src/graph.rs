//! Simple undirected graphs on vertices `1..=n`, with the standard families,
//! seeded random connected sampling and the BFS metric queries.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Resamples allowed before `random_connected` gives up.
pub const RANDOM_CONNECTED_RETRY_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    /// Sorted 0-based neighbor lists.
    adj: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
}

/// An exact edge probability `num / den` in `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeProbability {
    num: u32,
    den: u32,
}

impl EdgeProbability {
    pub fn new(num: u32, den: u32) -> Result<Self> {
        if num == 0 || den == 0 || num > den {
            return Err(Error::InvalidProbability { num, den });
        }
        Ok(Self { num, den })
    }

    pub const ONE: EdgeProbability = EdgeProbability { num: 1, den: 1 };
    pub const HALF: EdgeProbability = EdgeProbability { num: 1, den: 2 };

    fn sample<R: Rng>(self, rng: &mut R) -> bool {
        rng.gen_range(0..self.den) < self.num
    }
}

impl Graph {
    /// The edgeless graph of the given order.
    pub fn empty(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Self {
            adj: vec![Vec::new(); order],
        })
    }

    /// Builds a graph from 1-based edge labels. Repeated edges collapse.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(order)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge between 1-based labels `u` and `v`; a repeat is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let order = self.order();
        for label in [u, v] {
            if label == 0 || label > order {
                return Err(Error::InvalidVertex { label, order });
            }
        }
        if u == v {
            return Err(Error::LoopEdge { label: u });
        }
        self.insert_edge(u - 1, v - 1);
        Ok(())
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
    }

    pub fn generate(family: Family, n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        match family {
            Family::Path => {
                for i in 1..n {
                    g.insert_edge(i - 1, i);
                }
            }
            Family::Cycle => {
                if n < 3 {
                    return Err(Error::CycleTooSmall(n));
                }
                for i in 1..n {
                    g.insert_edge(i - 1, i);
                }
                g.insert_edge(0, n - 1);
            }
            Family::Complete => {
                for u in 0..n {
                    for v in u + 1..n {
                        g.insert_edge(u, v);
                    }
                }
            }
        }
        Ok(g)
    }

    /// Samples `G(n, p)` with a ChaCha8 stream seeded by `seed`, rejecting
    /// disconnected draws. Same arguments, same graph.
    pub fn random_connected(n: usize, p: EdgeProbability, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_connected_with(n, p, &mut rng)
    }

    pub(crate) fn random_connected_with<R: Rng>(
        n: usize,
        p: EdgeProbability,
        rng: &mut R,
    ) -> Result<Self> {
        for _ in 0..RANDOM_CONNECTED_RETRY_CAP {
            let mut g = Self::empty(n)?;
            for u in 0..n {
                for v in u + 1..n {
                    if p.sample(rng) {
                        g.insert_edge(u, v);
                    }
                }
            }
            if g.is_connected() {
                return Ok(g);
            }
        }
        Err(Error::RetryCapExhausted {
            attempts: RANDOM_CONNECTED_RETRY_CAP,
        })
    }

    /// Every labeled connected graph of order `n`, in increasing order of the
    /// edge-subset bitmask over pairs `(u, v)`, `u < v`, in lexicographic order.
    pub fn all_connected(n: usize) -> Result<Vec<Self>> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        if pairs.len() >= 32 {
            return Err(Error::OrderCapExceeded { order: n, cap: 8 });
        }
        let mut out = Vec::new();
        for mask in 0u32..1 << pairs.len() {
            let mut g = Self::empty(n)?;
            for (bit, &(u, v)) in pairs.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    g.insert_edge(u, v);
                }
            }
            if g.is_connected() {
                out.push(g);
            }
        }
        Ok(out)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as 1-based `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs.iter().filter(|&&v| v > u) {
                out.push((u + 1, v + 1));
            }
        }
        out
    }

    /// Sorted 0-based neighbors of 0-based vertex `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// 0-based adjacency test.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// `N(v)` for the 1-based label `v`.
    pub fn neighborhood(&self, label: usize) -> Result<VertexSet> {
        let v = self.index_of(label)?;
        VertexSet::from_indices(self.order(), self.adj[v].iter().copied())
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    /// Shortest-path edge count between 1-based labels; `None` when no path.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        let (u, v) = (self.index_of(u)?, self.index_of(v)?);
        Ok(self.bfs(u)[v])
    }

    /// BFS distances from 0-based `source`.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        self.bfs(source)
    }

    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The graph with vertex `i` renamed to `perm[i]` (0-based).
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order());
        let mut g = Self {
            adj: vec![Vec::new(); self.order()],
        };
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs.iter().filter(|&&v| v > u) {
                g.insert_edge(perm[u], perm[v]);
            }
        }
        g
    }

    fn index_of(&self, label: usize) -> Result<usize> {
        if label == 0 || label > self.order() {
            Err(Error::InvalidVertex {
                label,
                order: self.order(),
            })
        } else {
            Ok(label - 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p4() -> Graph {
        Graph::generate(Family::Path, 4).unwrap()
    }

    #[test]
    fn families_use_canonical_labels() {
        assert_eq!(p4().edges(), vec![(1, 2), (2, 3), (3, 4)]);
        assert_eq!(
            Graph::generate(Family::Complete, 3).unwrap().edges(),
            vec![(1, 2), (1, 3), (2, 3)]
        );
        assert_eq!(
            Graph::generate(Family::Cycle, 5).unwrap().edges(),
            vec![(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]
        );
        assert_eq!(
            Graph::generate(Family::Cycle, 2),
            Err(Error::CycleTooSmall(2))
        );
        assert_eq!(Graph::generate(Family::Path, 0), Err(Error::EmptyGraph));
    }

    #[test]
    fn from_edges_validates() {
        let g = Graph::from_edges(3, [(1, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(
            Graph::from_edges(3, [(1, 4)]),
            Err(Error::InvalidVertex { label: 4, order: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, [(2, 2)]),
            Err(Error::LoopEdge { label: 2 })
        );
    }

    #[test]
    fn connectivity() {
        assert!(p4().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        let two_edges = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.distance(1, 4), Ok(None));
    }

    #[test]
    fn distances() {
        assert_eq!(p4().distance(1, 4), Ok(Some(3)));
        assert_eq!(p4().distance(3, 3), Ok(Some(0)));
        let c5 = Graph::generate(Family::Cycle, 5).unwrap();
        assert_eq!(c5.distance(1, 4), Ok(Some(2)));
        assert!(c5.distance(1, 6).is_err());
    }

    #[test]
    fn neighborhoods() {
        assert_eq!(
            p4().neighborhood(2).unwrap(),
            VertexSet::from_labels(4, [1, 3]).unwrap()
        );
        assert!(Graph::empty(1).unwrap().neighborhood(1).unwrap().is_empty());
        let k4 = Graph::generate(Family::Complete, 4).unwrap();
        assert_eq!(
            k4.neighborhood(1).unwrap(),
            VertexSet::from_labels(4, [2, 3, 4]).unwrap()
        );
        assert!(k4.neighborhood(0).is_err());
    }

    #[test]
    fn random_connected_small_cases() {
        assert_eq!(
            Graph::random_connected(1, EdgeProbability::HALF, 9).unwrap(),
            Graph::empty(1).unwrap()
        );
        assert_eq!(
            Graph::random_connected(2, EdgeProbability::ONE, 3).unwrap(),
            Graph::generate(Family::Complete, 2).unwrap()
        );
        let g = Graph::random_connected(6, EdgeProbability::HALF, 42).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_connected());
        assert_eq!(
            g,
            Graph::random_connected(6, EdgeProbability::HALF, 42).unwrap()
        );
        assert!(EdgeProbability::new(0, 3).is_err());
        assert!(EdgeProbability::new(4, 3).is_err());
    }

    #[test]
    fn labeled_connected_counts() {
        // OEIS A001187: 1, 1, 4, 38, 728
        let counts: Vec<usize> = (1..=5)
            .map(|n| Graph::all_connected(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
    }

    proptest! {
        #[test]
        fn distance_is_a_metric(seed in any::<u64>(), n in 1usize..8) {
            let g = Graph::random_connected(n, EdgeProbability::HALF, seed).unwrap();
            for u in 1..=n {
                for v in 1..=n {
                    let duv = g.distance(u, v).unwrap().unwrap();
                    prop_assert_eq!(Some(duv), g.distance(v, u).unwrap());
                    for w in 1..=n {
                        let duw = g.distance(u, w).unwrap().unwrap();
                        let dwv = g.distance(w, v).unwrap().unwrap();
                        prop_assert!(duv <= duw + dwv);
                    }
                }
            }
        }

        #[test]
        fn neighborhood_size_is_degree(seed in any::<u64>(), n in 1usize..8) {
            let g = Graph::random_connected(n, EdgeProbability::HALF, seed).unwrap();
            for v in 1..=n {
                prop_assert_eq!(g.neighborhood(v).unwrap().len(), g.degree(v - 1));
            }
        }
    }
}
