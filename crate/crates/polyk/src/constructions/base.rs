//! The catalogue of small extremal graphs and the K4 necklace family.
//!
//! Each base graph comes embedded (the embedding is computed once from the
//! planarity test — these graphs are 3-connected, so their face structure is
//! unique) and colored with its red independent set.

use std::fmt;
use std::str::FromStr;

use crate::analysis::planarity::planar_embedding;
use crate::colored::ColoredGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Named starting graphs for the extremal builder.
///
/// Orders 4, 5, 7, 8, 10 with red sets of sizes 1..=5:
/// - `Tetrahedron`: K4, one red vertex.
/// - `SquarePyramid`: apex over a square, two opposite base vertices red.
/// - `G3`: the cube with one edge contracted; seven vertices, three reds,
///   every red of degree 3.
/// - `Cube`: one bipartition class red.
/// - `Pdw10`: the pseudo double wheel; an 8-cycle with two hubs joined to
///   alternating cycle vertices, reds = one hub plus the four cycle vertices
///   adjacent to the other hub.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseGraph {
    Tetrahedron,
    SquarePyramid,
    G3,
    Cube,
    Pdw10,
}

impl BaseGraph {
    pub const ALL: [BaseGraph; 5] = [
        BaseGraph::Tetrahedron,
        BaseGraph::SquarePyramid,
        BaseGraph::G3,
        BaseGraph::Cube,
        BaseGraph::Pdw10,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BaseGraph::Tetrahedron => "tetrahedron",
            BaseGraph::SquarePyramid => "square_pyramid",
            BaseGraph::G3 => "g3",
            BaseGraph::Cube => "cube",
            BaseGraph::Pdw10 => "pdw10",
        }
    }
}

impl fmt::Display for BaseGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BaseGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BaseGraph::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::UnknownBaseGraph(s.to_string()))
    }
}

/// Builds a base graph with its embedding and red coloring.
pub fn base_graph(which: BaseGraph) -> ColoredGraph {
    let (graph, red) = match which {
        BaseGraph::Tetrahedron => (Graph::complete(4), vec![0]),
        BaseGraph::SquarePyramid => {
            let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4), (3, 4)])
                .expect("valid edge list");
            (g, vec![0, 2])
        }
        BaseGraph::G3 => {
            // Cube with the edge between outer vertex 3 and inner vertex 7
            // contracted into vertex 3; the three reds away from the merge
            // keep degree 3.
            let g = Graph::new(
                7,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 0),
                    (4, 5),
                    (5, 6),
                    (6, 3),
                    (3, 4),
                    (0, 4),
                    (1, 5),
                    (2, 6),
                ],
            )
            .expect("valid edge list");
            (g, vec![0, 2, 5])
        }
        BaseGraph::Cube => (cube(), vec![0, 2, 5, 7]),
        BaseGraph::Pdw10 => {
            let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
            edges.extend([(8, 0), (8, 2), (8, 4), (8, 6)]);
            edges.extend([(9, 1), (9, 3), (9, 5), (9, 7)]);
            let g = Graph::new(10, &edges).expect("valid edge list");
            (g, vec![1, 3, 5, 7, 8])
        }
    };
    let embedding = planar_embedding(&graph).expect("base graphs are planar");
    ColoredGraph::with_embedding(embedding, red, 1).expect("base coloring is valid")
}

fn cube() -> Graph {
    let mut edges = Vec::new();
    for i in 0..4 {
        edges.push((i, (i + 1) % 4));
        edges.push((4 + i, 4 + (i + 1) % 4));
        edges.push((i, i + 4));
    }
    Graph::new(8, &edges).expect("valid edge list")
}

/// A ring of `a` copies of K4: copy i has vertices A=4i, B=4i+1, C=4i+2,
/// D=4i+3, with edges B_i B_{i+1} and C_i D_{i+1} joining consecutive copies
/// (indices mod a). The A vertices are pairwise at distance at least 3 and
/// all have degree 3. For a = 1 the ring edges degenerate and the result is
/// K4 itself.
pub fn k4_necklace(a: usize) -> Result<ColoredGraph> {
    if a == 0 {
        return Err(Error::InvalidParameter("necklace needs a >= 1".into()));
    }
    let n = 4 * a;
    let mut edges = Vec::new();
    for i in 0..a {
        let base = 4 * i;
        for u in 0..4 {
            for v in (u + 1)..4 {
                edges.push((base + u, base + v));
            }
        }
        if a > 1 {
            let next = 4 * ((i + 1) % a);
            edges.push((base + 1, next + 1)); // B_i -- B_{i+1}
            edges.push((base + 2, next + 3)); // C_i -- D_{i+1}
        }
    }
    let graph = Graph::new(n, &edges)?;
    let embedding = planar_embedding(&graph)
        .ok_or_else(|| Error::ConstructionCheck("necklace failed to embed".into()))?;
    let red: Vec<usize> = (0..a).map(|i| 4 * i).collect();
    ColoredGraph::with_embedding(embedding, red, 2)
}
