//! Simple undirected graphs on dense integer vertices.

use std::fmt;

use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges are kept sorted and deduplicated, adjacency lists sorted, so every
/// traversal downstream iterates in a deterministic order. Instances are
/// immutable after construction; edit operations return new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops and out-of-range
    /// endpoints. Parallel edges and reversed duplicates collapse to one.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u, v));
            }
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        norm.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: norm, adj })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph is always valid")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle is always valid")
    }

    /// Number of vertices (the order `p`).
    pub fn p(&self) -> usize {
        self.n
    }

    /// Number of edges `q`.
    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// New graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::new(self.n, &edges)
    }

    /// New graph with the given edge removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let key = (u.min(v), u.max(v));
        let edges: Vec<_> = self.edges.iter().copied().filter(|&e| e != key).collect();
        Graph::new(self.n, &edges).expect("removing an edge keeps the graph valid")
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation length {} does not match order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen[p] = true;
        }
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges)
    }

    /// True iff the graph is connected (the empty and one-vertex graphs count
    /// as connected).
    pub fn is_connected(&self) -> bool {
        self.disconnect_witness().is_none()
    }

    /// `None` when connected, otherwise a pair (start, unreachable vertex).
    pub fn disconnect_witness(&self) -> Option<(usize, usize)> {
        if self.n <= 1 {
            return None;
        }
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().position(|&s| !s).map(|w| (0, w))
    }

    /// Degree multiset, sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, q={}, edges={:?})", self.n, self.q(), self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_has_four_vertices_six_edges() {
        let g = Graph::complete(4);
        assert_eq!(g.p(), 4);
        assert_eq!(g.q(), 6);
    }

    #[test]
    fn reversed_duplicate_edges_collapse() {
        let g = Graph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.p(), 2);
        assert_eq!(g.q(), 1);
    }

    #[test]
    fn cube_edge_list() {
        let g = cube_graph();
        assert_eq!(g.p(), 8);
        assert_eq!(g.q(), 12);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn loops_are_rejected() {
        let err = Graph::new(3, &[(1, 1)]).unwrap_err();
        assert!(matches!(err, Error::LoopEdge(1, 1)));
    }

    #[test]
    fn out_of_range_edges_are_rejected() {
        let err = Graph::new(3, &[(0, 3)]).unwrap_err();
        assert!(matches!(err, Error::EdgeOutOfRange { u: 0, v: 3, n: 3 }));
    }

    #[test]
    fn permuted_preserves_counts() {
        let g = cube_graph();
        let perm: Vec<usize> = (0..8).rev().collect();
        let h = g.permuted(&perm).unwrap();
        assert_eq!(h.q(), g.q());
        assert_eq!(h.degree_sequence(), g.degree_sequence());
    }

    pub(crate) fn cube_graph() -> Graph {
        // Outer square 0..3, inner square 4..7, spokes i -- i+4.
        let mut edges = Vec::new();
        for i in 0..4 {
            edges.push((i, (i + 1) % 4));
            edges.push((4 + i, 4 + (i + 1) % 4));
            edges.push((i, i + 4));
        }
        Graph::new(8, &edges).unwrap()
    }
}
