//! Local expansions that grow extremal graphs.
//!
//! `expand_quad_pair` rewrites two adjacent color-alternating quadrilateral
//! faces (six vertices) into five such faces on nine vertices, adding two red
//! vertices of degree 3 and one blue vertex while leaving every existing red
//! degree unchanged. Applying it never exhausts the supply of sites, so it
//! can be chained indefinitely.
//!
//! `collar_vertex` wraps a degree-3 vertex in a triangle: the vertex keeps
//! degree 3, every other vertex moves exactly one step farther away, and no
//! other distance shrinks.
//!
//! Both operations are pure rotation surgery: they build the successor graph
//! and its embedding directly, without re-running the planarity test.

use crate::colored::ColoredGraph;
use crate::embedding::Embedding;
use crate::error::{Error, Result};

/// Two adjacent quadrilateral faces with alternating colors.
///
/// The faces are `(b1, r1, b2, r2)` and `(b2, r3, b3, r2)`, sharing exactly
/// the blue-red edge `(b2, r2)`; `b*` are blue, `r*` red, all six distinct.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadPairSite {
    pub b1: usize,
    pub r1: usize,
    pub b2: usize,
    pub r2: usize,
    pub r3: usize,
    pub b3: usize,
}

impl QuadPairSite {
    /// The edge shared by the two faces.
    pub fn shared_edge(&self) -> (usize, usize) {
        (self.b2, self.r2)
    }

    fn vertices(&self) -> [usize; 6] {
        [self.b1, self.r1, self.b2, self.r2, self.r3, self.b3]
    }
}

/// Scans the faces of an embedded colored graph for an expansion site.
/// Returns the first site in face-trace order, so repeated searches are
/// deterministic. Absence of a site is a value, not an error.
pub fn find_quad_pair(c: &ColoredGraph) -> Result<Option<QuadPairSite>> {
    let embedding = c.embedding()?;
    let (faces, darts) = embedding.faces_with_map()?;
    for walk in &faces {
        if walk.len() != 4 {
            continue;
        }
        for p in 0..4 {
            let b2 = walk[p];
            let r2 = walk[(p + 1) % 4];
            if c.is_red(b2) || !c.is_red(r2) {
                continue;
            }
            let b1 = walk[(p + 2) % 4];
            let r1 = walk[(p + 3) % 4];
            if c.is_red(b1) || !c.is_red(r1) {
                continue;
            }
            // the face on the other side of the shared edge
            let other = &faces[darts.face_of(r2, b2)];
            if other.len() != 4 {
                continue;
            }
            let p2 = other.iter().position(|&v| v == r2).expect("face contains r2");
            if other[(p2 + 1) % 4] != b2 {
                continue;
            }
            let r3 = other[(p2 + 2) % 4];
            let b3 = other[(p2 + 3) % 4];
            if !c.is_red(r3) || c.is_red(b3) {
                continue;
            }
            let site = QuadPairSite { b1, r1, b2, r2, r3, b3 };
            let mut verts = site.vertices();
            verts.sort_unstable();
            verts.dedup();
            if verts.len() == 6 {
                return Ok(Some(site));
            }
        }
    }
    Ok(None)
}

/// Applies the quad-pair expansion at `site`, returning the grown graph:
/// three new vertices (reds `n`, `n+1`, blue `n+2`), six more edges, three
/// more faces.
pub fn expand_quad_pair(c: &ColoredGraph, site: &QuadPairSite) -> Result<ColoredGraph> {
    let embedding = c.embedding()?;
    validate_site(c, &embedding, site)?;

    let n = c.graph().p();
    let (ra, rb, bn) = (n, n + 1, n + 2);
    let QuadPairSite { b1, r1: _, b2, r2, r3, b3 } = *site;

    let mut rotation = embedding.rotation().to_vec();
    splice(&mut rotation[b2], r2, &[ra, rb]);
    splice(&mut rotation[r2], b2, &[bn]);
    insert_after(&mut rotation[b1], r2, ra);
    insert_after(&mut rotation[b3], r3, rb);
    rotation.push(vec![b2, b1, bn]); // ra
    rotation.push(vec![b3, b2, bn]); // rb
    rotation.push(vec![ra, r2, rb]); // bn

    let grown = Embedding::from_rotation(rotation)?;
    let mut red = c.red().to_vec();
    red.extend([ra, rb]);
    ColoredGraph::with_embedding(grown, red, c.k())
}

/// Checks that `site` describes two current faces with the right colors.
fn validate_site(c: &ColoredGraph, embedding: &Embedding, site: &QuadPairSite) -> Result<()> {
    let QuadPairSite { b1, r1, b2, r2, r3, b3 } = *site;
    let mut verts = site.vertices();
    verts.sort_unstable();
    verts.dedup();
    if verts.len() != 6 {
        return Err(Error::InvalidSite("site vertices are not distinct".into()));
    }
    if verts[5] >= c.graph().p() {
        return Err(Error::InvalidSite("site vertex out of range".into()));
    }
    for (v, want_red) in
        [(b1, false), (r1, true), (b2, false), (r2, true), (r3, true), (b3, false)]
    {
        if c.is_red(v) != want_red {
            return Err(Error::InvalidSite(format!(
                "vertex {v} should be {}",
                if want_red { "red" } else { "blue" }
            )));
        }
    }
    // the two walks must be traced faces: check all eight successor relations
    let successes = [
        (r1, b1, b2),
        (b2, r1, r2),
        (r2, b2, b1),
        (b1, r2, r1),
        (r3, b2, b3),
        (b3, r3, r2),
        (r2, b3, b2),
        (b2, r2, r3),
    ];
    for (at, from, to) in successes {
        let order = embedding.rotation_at(at);
        let pos = order.iter().position(|&u| u == from).ok_or_else(|| {
            Error::InvalidSite(format!("edge ({from}, {at}) missing from the graph"))
        })?;
        let next = order[(pos + 1) % order.len()];
        if next != to {
            return Err(Error::InvalidSite(format!(
                "walk {from} -> {at} -> {to} is not a face corner (found {from} -> {at} -> {next})"
            )));
        }
    }
    Ok(())
}

/// Wraps degree-3 vertex `v` in a triangle of three new blue vertices: the
/// triangle vertices take over `v`'s old edges, `v` connects to the triangle.
pub fn collar_vertex(c: &ColoredGraph, v: usize) -> Result<ColoredGraph> {
    let embedding = c.embedding()?;
    if v >= c.graph().p() || c.graph().degree(v) != 3 {
        return Err(Error::CollarDegree {
            v,
            degree: if v < c.graph().p() { c.graph().degree(v) } else { 0 },
        });
    }
    let n = c.graph().p();
    let (a, b, w) = (n, n + 1, n + 2);
    let mut rotation = embedding.rotation().to_vec();
    let (x, y, z) = (rotation[v][0], rotation[v][1], rotation[v][2]);

    rotation[v] = vec![a, b, w];
    splice(&mut rotation[x], v, &[a]);
    splice(&mut rotation[y], v, &[b]);
    splice(&mut rotation[z], v, &[w]);
    rotation.push(vec![b, v, w, x]); // a
    rotation.push(vec![w, v, a, y]); // b
    rotation.push(vec![a, v, b, z]); // w

    let grown = Embedding::from_rotation(rotation)?;
    ColoredGraph::with_embedding(grown, c.red().to_vec(), c.k())
}

/// Replaces `old` in a rotation by the given run of vertices, in place.
fn splice(order: &mut Vec<usize>, old: usize, run: &[usize]) {
    let pos = order.iter().position(|&u| u == old).expect("vertex present in rotation");
    order.splice(pos..=pos, run.iter().copied());
}

fn insert_after(order: &mut Vec<usize>, anchor: usize, new: usize) {
    let pos = order.iter().position(|&u| u == anchor).expect("anchor present in rotation");
    order.insert(pos + 1, new);
}
