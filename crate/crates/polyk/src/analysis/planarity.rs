//! Planarity testing that produces a combinatorial embedding.
//!
//! The test embeds each biconnected block by incremental face insertion:
//! start from a cycle, then repeatedly pick a fragment (a chord, or a
//! component of the unembedded rest together with its attachment edges),
//! choose a face whose boundary contains all of its attachments, and lay a
//! path of the fragment into that face. A fragment with no admissible face
//! certifies non-planarity. Block embeddings merge at cut vertices by
//! concatenating their rotation cycles.
//!
//! The contract is correctness plus an explicit rotation system, not speed:
//! everything here is quadratic-ish, which is plenty for the few-hundred
//! vertex graphs the constructions produce.

use std::collections::HashSet;

use crate::bits::{is_subset, set_bit};
use crate::embedding::Embedding;
use crate::graph::Graph;

/// Returns a spherical embedding when `g` is planar, `None` otherwise.
pub fn planar_embedding(g: &Graph) -> Option<Embedding> {
    let n = g.p();
    if n >= 3 && g.q() > 3 * n - 6 {
        return None;
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        let (verts, local_adj) = localize(&block);
        let local_rot = embed_block(verts.len(), &local_adj)?;
        for (local_v, order) in local_rot.into_iter().enumerate() {
            rotation[verts[local_v]].extend(order.into_iter().map(|u| verts[u]));
        }
    }
    Some(Embedding::new(g.clone(), rotation).expect("merged rotations cover all edges"))
}

pub fn is_planar(g: &Graph) -> bool {
    planar_embedding(g).is_some()
}

/// Biconnected components as edge lists (bridges come out as 2-vertex
/// blocks). Classic lowpoint DFS with an edge stack.
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }

    fn dfs(s: &mut State, v: usize, parent: usize) {
        s.time += 1;
        s.disc[v] = s.time;
        s.low[v] = s.time;
        for &w in s.g.neighbors(v) {
            if s.disc[w] == 0 {
                s.stack.push((v, w));
                dfs(s, w, v);
                s.low[v] = s.low[v].min(s.low[w]);
                if s.low[w] >= s.disc[v] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (v, w) {
                            break;
                        }
                    }
                    s.blocks.push(block);
                }
            } else if w != parent && s.disc[w] < s.disc[v] {
                s.stack.push((v, w));
                s.low[v] = s.low[v].min(s.disc[w]);
            }
        }
    }

    let mut s = State {
        g,
        disc: vec![0; g.p()],
        low: vec![0; g.p()],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in g.vertices() {
        if s.disc[v] == 0 {
            dfs(&mut s, v, usize::MAX);
        }
    }
    s.blocks
}

/// Maps a block's edge list into a dense local vertex space.
fn localize(block: &[(usize, usize)]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let index = |v: usize| verts.binary_search(&v).unwrap();
    let mut adj = vec![Vec::new(); verts.len()];
    for &(u, v) in block {
        let (lu, lv) = (index(u), index(v));
        adj[lu].push(lv);
        adj[lv].push(lu);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    (verts, adj)
}

struct Fragment {
    attachments: Vec<usize>,
    path: PathSource,
}

enum PathSource {
    Chord(usize, usize),
    Component(Vec<usize>),
}

/// Embeds one biconnected block, returning local rotations, or `None` when
/// the block is non-planar.
fn embed_block(n: usize, adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    if n == 2 {
        return Some(vec![vec![1], vec![0]]);
    }
    let words = n.div_ceil(64);

    let mut in_h = vec![false; n];
    let mut h_edges: HashSet<(usize, usize)> = HashSet::new();
    let cycle = find_cycle(n, adj);
    for (i, &v) in cycle.iter().enumerate() {
        in_h[v] = true;
        let w = cycle[(i + 1) % cycle.len()];
        h_edges.insert(edge_key(v, w));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut face_masks: Vec<Vec<u64>> = faces.iter().map(|f| mask_of(f, words)).collect();

    loop {
        let fragments = find_fragments(n, adj, &in_h, &h_edges);
        if fragments.is_empty() {
            break;
        }

        // Admissible faces per fragment; a fragment with none kills planarity,
        // a fragment with exactly one is forced and embedded first.
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let att_mask = mask_of(&frag.attachments, words);
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| is_subset(&att_mask, &face_masks[f]))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("nonempty fragment list");
        let frag = &fragments[fi];
        let path = fragment_path(adj, &in_h, frag);

        // Split the face along the path.
        let walk = &faces[face_idx];
        let m = walk.len();
        let i = walk.iter().position(|&v| v == path[0]).expect("attachment on face");
        let j = walk.iter().position(|&v| v == *path.last().unwrap()).expect("attachment on face");
        let mut seg1 = Vec::new();
        let mut at = i;
        loop {
            seg1.push(walk[at]);
            if at == j {
                break;
            }
            at = (at + 1) % m;
        }
        let mut seg2 = Vec::new();
        let mut at = j;
        loop {
            seg2.push(walk[at]);
            if at == i {
                break;
            }
            at = (at + 1) % m;
        }
        let interior = &path[1..path.len() - 1];
        let mut f1 = seg1;
        f1.extend(interior.iter().rev());
        let mut f2 = seg2;
        f2.extend(interior.iter());

        faces[face_idx] = f1;
        faces.push(f2);
        face_masks[face_idx] = mask_of(&faces[face_idx], words);
        face_masks.push(mask_of(faces.last().unwrap(), words));

        for &v in interior {
            in_h[v] = true;
        }
        for pair in path.windows(2) {
            h_edges.insert(edge_key(pair[0], pair[1]));
        }
    }

    Some(rotations_from_faces(n, adj, &faces))
}

/// Any cycle in a biconnected block with >= 3 vertices: DFS until the first
/// back edge, then walk the parent chain.
fn find_cycle(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n]; // 0 unseen, 1 active, 2 done
    let mut stack = vec![(0usize, 0usize)];
    state[0] = 1;
    while let Some(&(v, ei)) = stack.last() {
        if ei >= adj[v].len() {
            state[v] = 2;
            stack.pop();
            continue;
        }
        stack.last_mut().unwrap().1 += 1;
        let w = adj[v][ei];
        if w == parent[v] {
            continue;
        }
        if state[w] == 0 {
            parent[w] = v;
            state[w] = 1;
            stack.push((w, 0));
        } else if state[w] == 1 {
            // back edge v -> w: cycle w .. v
            let mut cycle = vec![v];
            let mut at = v;
            while at != w {
                at = parent[at];
                cycle.push(at);
            }
            return cycle;
        }
    }
    unreachable!("biconnected block with >= 3 vertices contains a cycle")
}

fn find_fragments(
    n: usize,
    adj: &[Vec<usize>],
    in_h: &[bool],
    h_edges: &HashSet<(usize, usize)>,
) -> Vec<Fragment> {
    let mut fragments = Vec::new();
    for v in 0..n {
        if !in_h[v] {
            continue;
        }
        for &w in &adj[v] {
            if v < w && in_h[w] && !h_edges.contains(&(v, w)) {
                fragments
                    .push(Fragment { attachments: vec![v, w], path: PathSource::Chord(v, w) });
            }
        }
    }
    let mut seen = vec![false; n];
    for start in 0..n {
        if in_h[start] || seen[start] {
            continue;
        }
        let mut members = vec![start];
        let mut attach = Vec::new();
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if in_h[w] {
                    attach.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        attach.sort_unstable();
        attach.dedup();
        fragments.push(Fragment { attachments: attach, path: PathSource::Component(members) });
    }
    fragments
}

/// A path through the fragment joining two distinct attachments, interior
/// strictly inside the fragment.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    match &frag.path {
        PathSource::Chord(u, v) => vec![*u, *v],
        PathSource::Component(members) => {
            let a1 = frag.attachments[0];
            let member_set: HashSet<usize> = members.iter().copied().collect();
            let mut parent: std::collections::HashMap<usize, usize> =
                std::collections::HashMap::new();
            let mut queue = std::collections::VecDeque::new();
            for &x in adj[a1].iter().filter(|x| member_set.contains(x)) {
                if !parent.contains_key(&x) {
                    parent.insert(x, usize::MAX);
                    queue.push_back(x);
                }
            }
            while let Some(x) = queue.pop_front() {
                if let Some(&h) = adj[x].iter().find(|&&h| in_h[h] && h != a1) {
                    let mut path = vec![h, x];
                    let mut at = x;
                    while parent[&at] != usize::MAX {
                        at = parent[&at];
                        path.push(at);
                    }
                    path.push(a1);
                    path.reverse();
                    return path;
                }
                for &y in &adj[x] {
                    if member_set.contains(&y) && !parent.contains_key(&y) {
                        parent.insert(y, x);
                        queue.push_back(y);
                    }
                }
            }
            unreachable!("fragment of a biconnected block reaches a second attachment")
        }
    }
}

/// Recovers the rotation system from the directed face walks: in a walk
/// `u -> v -> w`, the successor of `u` around `v` is `w`.
fn rotations_from_faces(n: usize, adj: &[Vec<usize>], faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut succ: Vec<std::collections::HashMap<usize, usize>> =
        vec![std::collections::HashMap::new(); n];
    for walk in faces {
        let m = walk.len();
        for idx in 0..m {
            let prev = walk[(idx + m - 1) % m];
            let v = walk[idx];
            let next = walk[(idx + 1) % m];
            succ[v].insert(prev, next);
        }
    }
    (0..n)
        .map(|v| {
            if adj[v].is_empty() {
                return Vec::new();
            }
            let start = adj[v][0];
            let mut order = vec![start];
            let mut at = succ[v][&start];
            while at != start {
                order.push(at);
                at = succ[v][&at];
            }
            assert_eq!(order.len(), adj[v].len(), "rotation at {v} is a single cycle");
            order
        })
        .collect()
}

fn edge_key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn mask_of(verts: &[usize], words: usize) -> Vec<u64> {
    let mut mask = vec![0u64; words];
    for &v in verts {
        set_bit(&mut mask, v);
    }
    mask
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5_is_not_planar() {
        assert!(!is_planar(&Graph::complete(5)));
    }

    #[test]
    fn k33_is_not_planar() {
        let edges: Vec<(usize, usize)> =
            (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
        let k33 = Graph::new(6, &edges).unwrap();
        assert!(!is_planar(&k33));
    }

    #[test]
    fn cube_embeds_with_six_quadrilateral_faces() {
        let cube = crate::graph::tests::cube_graph();
        let e = planar_embedding(&cube).expect("cube is planar");
        e.validate().unwrap();
        let faces = e.faces().unwrap();
        assert_eq!(faces.len(), 6);
        assert!(faces.iter().all(|f| f.len() == 4));
    }

    #[test]
    fn k4_embeds_with_four_triangles() {
        let e = planar_embedding(&Graph::complete(4)).unwrap();
        e.validate().unwrap();
        assert_eq!(e.face_count().unwrap(), 4);
    }

    #[test]
    fn petersen_graph_is_not_planar() {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        let petersen = Graph::new(10, &edges).unwrap();
        assert!(!is_planar(&petersen));
    }

    #[test]
    fn trees_and_cut_vertices_embed() {
        // two triangles sharing a vertex plus a pendant path
        let g = Graph::new(
            7,
            &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6)],
        )
        .unwrap();
        let e = planar_embedding(&g).expect("planar");
        e.validate().unwrap();
    }

    #[test]
    fn disconnected_planar_graph_is_accepted() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(planar_embedding(&g).is_some());
    }

    #[test]
    fn dense_planar_graphs_embed() {
        // octahedron: 6 vertices, 12 edges, a maximal planar graph
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in (u + 1)..6 {
                if u + v != 5 {
                    edges.push((u, v));
                }
            }
        }
        let octa = Graph::new(6, &edges).unwrap();
        let e = planar_embedding(&octa).expect("octahedron is planar");
        e.validate().unwrap();
        let faces = e.faces().unwrap();
        assert_eq!(faces.len(), 8);
        assert!(faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn edge_bound_prefilter_rejects_dense_graphs() {
        assert!(!is_planar(&Graph::complete(6)));
    }
}
