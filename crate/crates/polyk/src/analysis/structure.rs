//! Structural face tests: quadrangulations, triangulations, separating
//! 4-cycles.

use std::collections::HashSet;

use crate::bits::{set_bit, AdjBits};
use crate::embedding::Embedding;
use crate::error::Result;
use crate::graph::Graph;

use super::planarity::is_planar;

/// True iff every face of the embedding is a quadrilateral. For a spherical
/// embedding this forces q = 2p - 4, which is double-checked.
pub fn is_quadrangulation(e: &Embedding) -> Result<bool> {
    let faces = e.faces()?;
    let all_quads = faces.iter().all(|f| f.len() == 4);
    let g = e.graph();
    Ok(all_quads && g.q() == 2 * g.p() - 4)
}

/// True iff the graph is planar with the maximum possible q = 3p - 6 edges,
/// i.e. every face of any embedding is a triangle.
pub fn is_maximal_planar(g: &Graph) -> bool {
    g.p() >= 3 && g.q() == 3 * g.p() - 6 && is_planar(g)
}

/// Searches for a 4-cycle whose removal (all four vertices) disconnects the
/// rest. Returns a witness cycle in order `u, x, v, y` if one exists.
///
/// 4-cycles are enumerated through common-neighbor pairs: `u, v` opposite
/// corners, `x, y` two common neighbors. Only the vertex set matters for the
/// separation test, so sets are deduplicated.
pub fn separating_quadrilateral(g: &Graph) -> Option<[usize; 4]> {
    let bits = AdjBits::from_graph(g);
    let words = bits.words;
    let mut tested: HashSet<[usize; 4]> = HashSet::new();
    for u in g.vertices() {
        for v in (u + 1)..g.p() {
            let common: Vec<usize> =
                g.neighbors(u).iter().copied().filter(|&x| g.has_edge(v, x)).collect();
            for (i, &x) in common.iter().enumerate() {
                for &y in &common[i + 1..] {
                    let mut key = [u, v, x, y];
                    key.sort_unstable();
                    if !tested.insert(key) {
                        continue;
                    }
                    if g.p() <= 5 {
                        continue; // at most one vertex left, nothing to separate
                    }
                    let mut removed = vec![0u64; words];
                    for &w in &key {
                        set_bit(&mut removed, w);
                    }
                    if bits.component_count_excluding(&removed) >= 2 {
                        return Some([u, x, v, y]);
                    }
                }
            }
        }
    }
    None
}

/// Boolean form of [`separating_quadrilateral`].
pub fn has_separating_quadrilateral(g: &Graph) -> bool {
    separating_quadrilateral(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::planarity::planar_embedding;

    #[test]
    fn cube_is_a_quadrangulation() {
        let cube = crate::graph::tests::cube_graph();
        let e = planar_embedding(&cube).unwrap();
        assert!(is_quadrangulation(&e).unwrap());
        assert_eq!(cube.q(), 2 * cube.p() - 4);
    }

    #[test]
    fn tetrahedron_is_not_a_quadrangulation() {
        let e = planar_embedding(&Graph::complete(4)).unwrap();
        assert!(!is_quadrangulation(&e).unwrap());
    }

    #[test]
    fn k4_is_maximal_planar() {
        assert!(is_maximal_planar(&Graph::complete(4)));
    }

    #[test]
    fn cube_is_not_maximal_planar() {
        assert!(!is_maximal_planar(&crate::graph::tests::cube_graph()));
    }

    #[test]
    fn triangular_bipyramid_is_maximal_planar() {
        let g = Graph::new(
            5,
            &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)],
        )
        .unwrap();
        assert_eq!(g.q(), 3 * g.p() - 6);
        assert!(is_maximal_planar(&g));
    }

    #[test]
    fn cube_has_no_separating_quadrilateral() {
        let cube = crate::graph::tests::cube_graph();
        assert!(!has_separating_quadrilateral(&cube));
    }

    #[test]
    fn k4_has_no_separating_quadrilateral() {
        assert!(!has_separating_quadrilateral(&Graph::complete(4)));
    }

    #[test]
    fn glued_cubes_have_a_separating_quadrilateral() {
        // two cubes sharing a 4-cycle: removing the shared square separates
        // the two remaining squares
        let mut edges = Vec::new();
        for i in 0..4 {
            let j = (i + 1) % 4;
            edges.push((i, j)); // shared square
            edges.push((4 + i, 4 + j)); // top square
            edges.push((8 + i, 8 + j)); // bottom square
            edges.push((i, 4 + i));
            edges.push((i, 8 + i));
        }
        let g = Graph::new(12, &edges).unwrap();
        let witness = separating_quadrilateral(&g).expect("shared square separates");
        let mut set = witness.to_vec();
        set.sort_unstable();
        assert_eq!(set, vec![0, 1, 2, 3]);
    }
}
