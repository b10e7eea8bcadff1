//! Exact maximum independent set by branch and bound on bitsets.
//!
//! Branching picks the candidate vertex with most candidate neighbors; the
//! upper bound is a greedy clique cover of the remaining candidates. Exact
//! for every input within the 64-vertex envelope — the instances here are
//! small and sparse, so this comfortably beats anything fancier.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::distance::graph_power;

const MAX_SOLVER_VERTICES: usize = 64;

/// A maximum independent set (vertex list, sorted). Exact.
pub fn max_independent_set(g: &Graph) -> Result<Vec<usize>> {
    let n = g.p();
    if n > MAX_SOLVER_VERTICES {
        return Err(Error::UnsupportedSize { n, max: MAX_SOLVER_VERTICES });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut rows = vec![0u64; n];
    for &(u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
    let mut solver = Solver { rows: &rows, best: 0, best_size: 0 };
    solver.expand(0, 0, full);
    let mut set: Vec<usize> = (0..n).filter(|&v| solver.best >> v & 1 == 1).collect();
    set.sort_unstable();
    Ok(set)
}

/// α(g): size of a maximum independent set.
pub fn independence_number(g: &Graph) -> Result<usize> {
    Ok(max_independent_set(g)?.len())
}

/// Largest size of a set of vertices pairwise at distance > k; equals the
/// independence number of the k-th graph power.
pub fn k_independence_number(g: &Graph, k: usize) -> Result<usize> {
    if let Some((start, witness)) = g.disconnect_witness() {
        return Err(Error::Disconnected { start, witness });
    }
    independence_number(&graph_power(g, k)?)
}

struct Solver<'a> {
    rows: &'a [u64],
    best: u64,
    best_size: u32,
}

impl Solver<'_> {
    fn expand(&mut self, chosen: u64, size: u32, cand: u64) {
        if cand == 0 {
            if size > self.best_size {
                self.best_size = size;
                self.best = chosen;
            }
            return;
        }
        if size + self.clique_cover_bound(cand) <= self.best_size {
            return;
        }
        // branch vertex: most candidate neighbors, lowest index on ties
        let mut branch = usize::MAX;
        let mut best_deg = 0;
        let mut scan = cand;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let deg = (self.rows[v] & cand).count_ones();
            if branch == usize::MAX || deg > best_deg {
                branch = v;
                best_deg = deg;
            }
        }
        let bit = 1u64 << branch;
        // include
        self.expand(chosen | bit, size + 1, cand & !self.rows[branch] & !bit);
        // exclude
        self.expand(chosen, size, cand & !bit);
    }

    /// Greedy clique cover of the candidate set; its size bounds how many
    /// independent vertices the candidates can still contribute.
    fn clique_cover_bound(&self, cand: u64) -> u32 {
        let mut rest = cand;
        let mut cliques = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // grow a clique from v inside rest
            let mut common = self.rows[v] & rest;
            while common != 0 {
                let u = common.trailing_zeros() as usize;
                rest &= !(1u64 << u);
                common &= self.rows[u] & !(1u64 << u);
            }
            cliques += 1;
        }
        cliques
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive subset oracle (n <= 20 or so).
    fn brute_alpha(g: &Graph, k: usize) -> usize {
        let n = g.p();
        let dist = crate::analysis::distance::all_pairs_distances(g).unwrap();
        let mut best = 0;
        for mask in 0u64..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let ok = members
                .iter()
                .enumerate()
                .all(|(i, &u)| members[i + 1..].iter().all(|&v| dist[u][v] > k));
            if ok {
                best = best.max(members.len());
            }
        }
        best
    }

    #[test]
    fn complete_graph_alpha_is_one() {
        assert_eq!(independence_number(&Graph::complete(4)).unwrap(), 1);
    }

    #[test]
    fn cube_alpha_is_four() {
        let cube = crate::graph::tests::cube_graph();
        let set = max_independent_set(&cube).unwrap();
        assert_eq!(set.len(), 4);
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                assert!(!cube.has_edge(u, v));
            }
        }
    }

    #[test]
    fn cube_k_independence_values() {
        let cube = crate::graph::tests::cube_graph();
        assert_eq!(k_independence_number(&cube, 1).unwrap(), 4);
        assert_eq!(k_independence_number(&cube, 2).unwrap(), 2);
        assert_eq!(k_independence_number(&cube, 3).unwrap(), 1);
    }

    #[test]
    fn solver_matches_subset_oracle_on_small_graphs() {
        let cube = crate::graph::tests::cube_graph();
        for k in 1..=3 {
            assert_eq!(k_independence_number(&cube, k).unwrap(), brute_alpha(&cube, k));
        }
        let wheel = {
            let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
            edges.extend((0..6).map(|i| (i, 6)));
            Graph::new(7, &edges).unwrap()
        };
        assert_eq!(independence_number(&wheel).unwrap(), brute_alpha(&wheel, 1));
    }

    #[test]
    fn oversize_input_is_rejected() {
        let path: Vec<(usize, usize)> = (0..70).map(|i| (i, i + 1)).collect();
        let g = Graph::new(71, &path).unwrap();
        assert!(matches!(
            max_independent_set(&g),
            Err(Error::UnsupportedSize { n: 71, max: 64 })
        ));
    }
}
