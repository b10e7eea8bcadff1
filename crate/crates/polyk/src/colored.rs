//! Vertex 2-colorings: red vertices form the claimed k-independent set,
//! blue vertices are the rest.

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph with a designated red vertex set and an independence radius `k`.
///
/// The red set is the *claim*: red vertices are supposed to be pairwise at
/// distance greater than `k`. Nothing here checks that claim; the `certified`
/// flag can only be set by the certificate verifier.
#[derive(Clone, Debug)]
pub struct ColoredGraph {
    graph: Graph,
    rotation: Option<Vec<Vec<usize>>>,
    red: Vec<usize>,
    k: usize,
    certified: bool,
}

impl ColoredGraph {
    pub fn new(graph: Graph, red: Vec<usize>, k: usize) -> Result<Self> {
        Self::build(graph, None, red, k)
    }

    /// Colored graph that carries an embedding.
    pub fn with_embedding(embedding: Embedding, red: Vec<usize>, k: usize) -> Result<Self> {
        let rotation = embedding.rotation().to_vec();
        Self::build(embedding.graph().clone(), Some(rotation), red, k)
    }

    fn build(
        graph: Graph,
        rotation: Option<Vec<Vec<usize>>>,
        mut red: Vec<usize>,
        k: usize,
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("independence radius k must be >= 1".into()));
        }
        red.sort_unstable();
        red.dedup();
        if let Some(&v) = red.iter().find(|&&v| v >= graph.p()) {
            return Err(Error::InvalidParameter(format!(
                "red vertex {v} out of range for {} vertices",
                graph.p()
            )));
        }
        Ok(ColoredGraph { graph, rotation, red, k, certified: false })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Red vertices, sorted.
    pub fn red(&self) -> &[usize] {
        &self.red
    }

    pub fn red_count(&self) -> usize {
        self.red.len()
    }

    pub fn is_red(&self, v: usize) -> bool {
        self.red.binary_search(&v).is_ok()
    }

    /// Blue vertices, sorted.
    pub fn blue(&self) -> Vec<usize> {
        self.graph.vertices().filter(|&v| !self.is_red(v)).collect()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn has_embedding(&self) -> bool {
        self.rotation.is_some()
    }

    /// The carried embedding, if any.
    pub fn embedding(&self) -> Result<Embedding> {
        match &self.rotation {
            Some(rot) => Embedding::new(self.graph.clone(), rot.clone()),
            None => Err(Error::MissingEmbedding),
        }
    }

    pub fn rotation(&self) -> Option<&[Vec<usize>]> {
        self.rotation.as_deref()
    }

    /// True once the certificate verifier has validated this instance.
    pub fn certified(&self) -> bool {
        self.certified
    }

    pub(crate) fn mark_certified(&mut self) {
        self.certified = true;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn red_set_is_sorted_and_deduped() {
        let g = Graph::complete(4);
        let c = ColoredGraph::new(g, vec![2, 0, 2], 1).unwrap();
        assert_eq!(c.red(), &[0, 2]);
        assert_eq!(c.blue(), vec![1, 3]);
        assert!(!c.certified());
    }

    #[test]
    fn out_of_range_red_rejected() {
        let g = Graph::complete(4);
        assert!(ColoredGraph::new(g, vec![4], 1).is_err());
    }

    #[test]
    fn zero_radius_rejected() {
        let g = Graph::complete(4);
        assert!(ColoredGraph::new(g, vec![0], 0).is_err());
    }
}
