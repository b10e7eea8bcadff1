//! The radial (vertex-face) graph of an embedded polyhedral graph.
//!
//! Vertices of the output are the input's vertices followed by one vertex
//! per face; edges join each face to the vertices on its boundary. For a
//! 3-connected input the face walks are simple, so no multi-edges arise and
//! the result is itself polyhedral: a bipartite quadrangulation with one
//! quadrilateral face per input edge. Face-vertices are colored red.

use crate::analysis::connectivity::is_k_connected;
use crate::colored::ColoredGraph;
use crate::embedding::Embedding;
use crate::error::{Error, Result};

/// Builds the radial graph. Errors when the input is not polyhedral (the
/// embedding must be spherical and the graph 3-connected on >= 4 vertices).
pub fn radial_graph(e: &Embedding) -> Result<ColoredGraph> {
    let g = e.graph();
    if g.p() < 4 {
        return Err(Error::NotPolyhedral(format!("order {} < 4", g.p())));
    }
    e.validate().map_err(|err| Error::NotPolyhedral(err.to_string()))?;
    let conn = is_k_connected(g, 3)?;
    if !conn.holds {
        return Err(Error::NotPolyhedral(format!(
            "vertex cut {:?} of size < 3",
            conn.cut.unwrap_or_default()
        )));
    }

    let n = g.p();
    let (faces, darts) = e.faces_with_map()?;

    // Rotation at an original vertex v: the faces around v, one per corner,
    // in the order opposite to v's own rotation (which keeps the traced
    // radial faces consistent). Rotation at a face-vertex: its walk order.
    let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(n + faces.len());
    for v in g.vertices() {
        let order: Vec<usize> =
            e.rotation_at(v).iter().rev().map(|&u| n + darts.face_of(v, u)).collect();
        rotation.push(order);
    }
    for walk in &faces {
        rotation.push(walk.clone());
    }

    let radial = Embedding::from_rotation(rotation)?;
    debug_assert!(radial.validate().is_ok());
    let red: Vec<usize> = (n..n + faces.len()).collect();
    ColoredGraph::with_embedding(radial, red, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::independence::independence_number;
    use crate::analysis::planarity::planar_embedding;
    use crate::analysis::structure::{has_separating_quadrilateral, is_quadrangulation};
    use crate::analysis::verify::is_polyhedral;
    use crate::canon::are_isomorphic;
    use crate::constructions::formula::minimum_order;
    use crate::graph::Graph;

    #[test]
    fn radial_of_k4_is_the_cube() {
        let e = planar_embedding(&Graph::complete(4)).unwrap();
        let radial = radial_graph(&e).unwrap();
        assert_eq!(radial.graph().p(), 8);
        assert_eq!(radial.red(), &[4, 5, 6, 7]);
        assert!(are_isomorphic(radial.graph(), &crate::graph::tests::cube_graph()));
        assert!(is_quadrangulation(&radial.embedding().unwrap()).unwrap());
    }

    #[test]
    fn radial_of_triangular_bipyramid_has_minimum_order() {
        let g = Graph::new(
            5,
            &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)],
        )
        .unwrap();
        let radial = radial_graph(&planar_embedding(&g).unwrap()).unwrap();
        assert_eq!(radial.graph().p(), 11);
        assert_eq!(radial.graph().p(), minimum_order(1, 6).unwrap());
        assert!(is_polyhedral(radial.graph()).polyhedral);
    }

    #[test]
    fn radial_of_octahedron_is_an_extremal_quadrangulation() {
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in (u + 1)..6 {
                if u + v != 5 {
                    edges.push((u, v));
                }
            }
        }
        let octa = Graph::new(6, &edges).unwrap();
        let radial = radial_graph(&planar_embedding(&octa).unwrap()).unwrap();
        assert_eq!(radial.graph().p(), 14);
        assert_eq!(radial.graph().p(), minimum_order(1, 8).unwrap());
        let e = radial.embedding().unwrap();
        assert!(is_quadrangulation(&e).unwrap());
        assert!(independence_number(radial.graph()).unwrap() >= 8);
        assert!(!has_separating_quadrilateral(radial.graph()));
    }

    #[test]
    fn non_polyhedral_input_is_rejected() {
        let hexagon = Graph::cycle(6);
        let e = planar_embedding(&hexagon).unwrap();
        assert!(matches!(radial_graph(&e), Err(Error::NotPolyhedral(_))));
    }
}
