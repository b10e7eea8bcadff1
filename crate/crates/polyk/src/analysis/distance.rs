//! Exact unweighted distances: BFS matrices, distance shells, graph powers.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const UNREACHABLE: usize = usize::MAX;

/// Single-source BFS distances; unreachable vertices get `UNREACHABLE`.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<usize> {
    let mut dist = vec![UNREACHABLE; g.p()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Full distance matrix. Errors on disconnected input, naming an unreachable
/// vertex as witness.
pub fn all_pairs_distances(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if let Some((start, witness)) = g.disconnect_witness() {
        return Err(Error::Disconnected { start, witness });
    }
    Ok(g.vertices().map(|v| bfs_distances(g, v)).collect())
}

/// Largest distance in the graph.
pub fn diameter(g: &Graph) -> Result<usize> {
    let dist = all_pairs_distances(g)?;
    Ok(dist.iter().flatten().copied().max().unwrap_or(0))
}

/// BFS distance classes around a source vertex.
#[derive(Clone, Debug)]
pub struct ShellDecomposition {
    pub source: usize,
    /// `shells[i]` holds the vertices at distance `i + 1`, up to the limit.
    pub shells: Vec<Vec<usize>>,
    /// Vertices farther than the limit (or unreachable).
    pub beyond: Vec<usize>,
}

impl ShellDecomposition {
    pub fn shell(&self, distance: usize) -> &[usize] {
        &self.shells[distance - 1]
    }

    pub fn shell_sizes(&self) -> Vec<usize> {
        self.shells.iter().map(|s| s.len()).collect()
    }
}

/// Decomposes the vertex set into distance shells `1..=limit` around `x`,
/// with everything farther collected into `beyond`.
pub fn distance_shells(g: &Graph, x: usize, limit: usize) -> ShellDecomposition {
    let dist = bfs_distances(g, x);
    let mut shells = vec![Vec::new(); limit];
    let mut beyond = Vec::new();
    for v in g.vertices() {
        match dist[v] {
            0 => {}
            d if d <= limit => shells[d - 1].push(v),
            _ => beyond.push(v),
        }
    }
    ShellDecomposition { source: x, shells, beyond }
}

/// The k-th power: vertices joined iff their distance is between 1 and k.
/// A set is k-independent in `g` exactly when it is independent in `g^k`.
pub fn graph_power(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("graph power needs k >= 1".into()));
    }
    let mut edges = Vec::new();
    for v in g.vertices() {
        let dist = bfs_distances(g, v);
        for w in (v + 1)..g.p() {
            if dist[w] >= 1 && dist[w] <= k {
                edges.push((v, w));
            }
        }
    }
    Graph::new(g.p(), &edges)
}
