//! Combinatorial embeddings: a rotation system (cyclic neighbor order per
//! vertex) determines the faces of the graph on an orientable surface. All
//! embeddings produced by this crate are spherical, which is checked through
//! Euler's formula `p - q + r = 2`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph together with a rotation system.
///
/// Faces are recomputed on demand from the rotations; nothing is cached, so
/// local rotation surgery can never leave a stale face list behind.
#[derive(Clone)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
}

impl Embedding {
    /// Wraps a graph and a rotation system, checking that the rotation at
    /// each vertex is a permutation of its neighbor set.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if rotation.len() != graph.p() {
            return Err(Error::InvalidRotation(format!(
                "rotation has {} entries for {} vertices",
                rotation.len(),
                graph.p()
            )));
        }
        for v in graph.vertices() {
            let mut sorted = rotation[v].clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(Error::InvalidRotation(format!(
                    "rotation at vertex {v} is not a permutation of its neighbors"
                )));
            }
        }
        Ok(Embedding { graph, rotation })
    }

    /// Builds the underlying graph from the rotation lists themselves.
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Result<Self> {
        let n = rotation.len();
        let mut edges = Vec::new();
        for (v, neighbors) in rotation.iter().enumerate() {
            for &u in neighbors {
                if v < u {
                    edges.push((v, u));
                }
                if u >= n {
                    return Err(Error::EdgeOutOfRange { u: v, v: u, n });
                }
            }
        }
        let graph = Graph::new(n, &edges)?;
        Embedding::new(graph, rotation)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn rotation_at(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Traces every face of the embedding. Each face is a closed walk given
    /// as its vertex sequence; every directed edge appears in exactly one
    /// walk. Errors on disconnected graphs, where the face structure on a
    /// single sphere is not defined.
    pub fn faces(&self) -> Result<Vec<Vec<usize>>> {
        if let Some((start, witness)) = self.graph.disconnect_witness() {
            return Err(Error::Disconnected { start, witness });
        }
        Ok(self.trace_faces().0)
    }

    /// Faces plus a lookup from directed edge `(u, v)` to the index of the
    /// face whose walk contains it.
    pub(crate) fn faces_with_map(&self) -> Result<(Vec<Vec<usize>>, DartMap)> {
        if let Some((start, witness)) = self.graph.disconnect_witness() {
            return Err(Error::Disconnected { start, witness });
        }
        Ok(self.trace_faces())
    }

    fn trace_faces(&self) -> (Vec<Vec<usize>>, DartMap) {
        let index = DartIndex::new(&self.rotation);
        let mut face_of = vec![usize::MAX; index.total];
        let mut faces = Vec::new();
        for v in self.graph.vertices() {
            for i in 0..self.rotation[v].len() {
                let dart = index.dart_id(v, i);
                if face_of[dart] != usize::MAX {
                    continue;
                }
                let face_id = faces.len();
                let mut walk = Vec::new();
                let (mut a, mut b) = (v, self.rotation[v][i]);
                loop {
                    let id = index.id_of(a, b);
                    if face_of[id] != usize::MAX {
                        break;
                    }
                    face_of[id] = face_id;
                    walk.push(a);
                    // next dart: rotate past `a` in the order around `b`
                    let pos = index.pos(b, a);
                    let next = self.rotation[b][(pos + 1) % self.rotation[b].len()];
                    a = b;
                    b = next;
                }
                faces.push(walk);
            }
        }
        (faces, DartMap { index, face_of })
    }

    /// Number of faces `r`.
    pub fn face_count(&self) -> Result<usize> {
        Ok(self.faces()?.len())
    }

    /// Full structural check: rotation validity is guaranteed on
    /// construction, so this verifies the spherical conditions — the face
    /// walks cover all `2q` directed edges and Euler's formula holds.
    pub fn validate(&self) -> Result<()> {
        let p = self.graph.p();
        let q = self.graph.q();
        if p <= 1 {
            return Ok(());
        }
        let faces = self.faces()?;
        let total: usize = faces.iter().map(|f| f.len()).sum();
        if total != 2 * q {
            return Err(Error::InvalidRotation(format!(
                "face walks cover {total} directed edges, expected {}",
                2 * q
            )));
        }
        let r = faces.len();
        if p + r != q + 2 {
            return Err(Error::InvalidRotation(format!(
                "not spherical: p - q + r = {p} - {q} + {r} != 2"
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Embedding(n={}, q={})", self.graph.p(), self.graph.q())
    }
}

/// Per-vertex positions of neighbors in the rotation, used to walk faces.
pub(crate) struct DartIndex {
    offsets: Vec<usize>,
    // (neighbor, position) pairs sorted by neighbor, per vertex
    lookup: Vec<Vec<(usize, usize)>>,
    total: usize,
}

impl DartIndex {
    fn new(rotation: &[Vec<usize>]) -> Self {
        let mut offsets = Vec::with_capacity(rotation.len() + 1);
        let mut lookup = Vec::with_capacity(rotation.len());
        let mut total = 0;
        for order in rotation {
            offsets.push(total);
            total += order.len();
            let mut pairs: Vec<(usize, usize)> =
                order.iter().enumerate().map(|(i, &u)| (u, i)).collect();
            pairs.sort_unstable();
            lookup.push(pairs);
        }
        offsets.push(total);
        DartIndex { offsets, lookup, total }
    }

    fn pos(&self, v: usize, neighbor: usize) -> usize {
        let pairs = &self.lookup[v];
        let at = pairs.binary_search_by_key(&neighbor, |&(u, _)| u).expect("neighbor present");
        pairs[at].1
    }

    fn dart_id(&self, v: usize, pos: usize) -> usize {
        self.offsets[v] + pos
    }

    fn id_of(&self, v: usize, neighbor: usize) -> usize {
        self.dart_id(v, self.pos(v, neighbor))
    }
}

/// Maps directed edges to the face containing them.
pub(crate) struct DartMap {
    index: DartIndex,
    face_of: Vec<usize>,
}

impl DartMap {
    pub fn face_of(&self, from: usize, to: usize) -> usize {
        self.face_of[self.index.id_of(from, to)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn tetrahedron_embedding() -> Embedding {
        let rotation = vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]];
        Embedding::from_rotation(rotation).unwrap()
    }

    #[test]
    fn tetrahedron_has_four_triangles() {
        let e = tetrahedron_embedding();
        let faces = e.faces().unwrap();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3));
        e.validate().unwrap();
    }

    #[test]
    fn face_lengths_sum_to_twice_edges() {
        let e = tetrahedron_embedding();
        let faces = e.faces().unwrap();
        let total: usize = faces.iter().map(|f| f.len()).sum();
        assert_eq!(total, 2 * e.graph().q());
    }

    #[test]
    fn disconnected_faces_error() {
        let rotation = vec![vec![1], vec![0], vec![3], vec![2]];
        let e = Embedding::from_rotation(rotation).unwrap();
        assert!(matches!(e.faces(), Err(Error::Disconnected { .. })));
    }

    #[test]
    fn bad_rotation_is_rejected() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let err = Embedding::new(g, vec![vec![1, 2], vec![0], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::InvalidRotation(_)));
    }
}
