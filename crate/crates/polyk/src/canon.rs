//! Canonical forms and isomorphism testing.
//!
//! Canonical codes come from an individualization-refinement search: color
//! refinement produces an equitable ordered partition, the first non-singleton
//! cell is branched on, and the lexicographically smallest adjacency bit
//! string over all discrete leaves is the code. Two graphs get equal codes
//! exactly when they are isomorphic. The search prunes branches whose fixed
//! prefix already compares worse than the best leaf found.
//!
//! Scale target is the enumeration range (n <= 11) with headroom; anything up
//! to 64 vertices is accepted.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::graph::Graph;

pub(crate) const MAX_CANON_VERTICES: usize = 64;

/// Isomorphism-invariant canonical byte string.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonCode {
    n: usize,
    bytes: Vec<u8>,
}

impl CanonCode {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Lowercase hex rendering used by the CLI.
    pub fn to_hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Canonical code plus one labeling that realizes it: `labeling[i]` is the
/// original vertex placed at position `i`.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub code: CanonCode,
    pub labeling: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> CanonCode {
    canonical(g).code
}

pub fn canonical(g: &Graph) -> Canonical {
    let n = g.p();
    assert!(
        n <= MAX_CANON_VERTICES,
        "canonical form supports at most {MAX_CANON_VERTICES} vertices, got {n}"
    );
    let mut rows = vec![0u64; n];
    for &(u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    canonical_from_rows(n, &rows)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.p() != b.p() || a.q() != b.q() || a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

/// Entry point for callers that already hold bitset adjacency rows.
pub(crate) fn canonical_code_from_rows(n: usize, rows: &[u64]) -> CanonCode {
    canonical_from_rows(n, rows).code
}

fn canonical_from_rows(n: usize, rows: &[u64]) -> Canonical {
    if n == 0 {
        return Canonical { code: CanonCode { n, bytes: vec![0, 0] }, labeling: Vec::new() };
    }
    let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
    let mut search = Search { n, adj: rows, best: None, best_labeling: Vec::new() };
    search.run(vec![full]);
    let words = search.best.expect("search always reaches a leaf");
    let total_bits = n * (n - 1) / 2;
    let mut bytes = Vec::with_capacity(2 + total_bits.div_ceil(8));
    bytes.push((n >> 8) as u8);
    bytes.push((n & 0xff) as u8);
    for byte_idx in 0..total_bits.div_ceil(8) {
        let word = byte_idx / 8;
        let shift = 56 - 8 * (byte_idx % 8);
        bytes.push((words[word] >> shift) as u8);
    }
    Canonical { code: CanonCode { n, bytes }, labeling: search.best_labeling }
}

struct Search<'a> {
    n: usize,
    adj: &'a [u64],
    best: Option<Vec<u64>>,
    best_labeling: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, mut cells: Vec<u64>) {
        refine(self.adj, &mut cells);

        let mut fixed = Vec::new();
        for &cell in &cells {
            if cell.count_ones() != 1 {
                break;
            }
            fixed.push(cell.trailing_zeros() as usize);
        }

        let prefix = code_bits(self.adj, &fixed);
        if let Some(best) = &self.best {
            let prefix_bits = fixed.len() * (fixed.len() - 1) / 2;
            if cmp_bits(&prefix, best, prefix_bits) == Ordering::Greater {
                return;
            }
        }

        if fixed.len() == cells.len() {
            let total_bits = self.n * (self.n - 1) / 2;
            let better = match &self.best {
                None => true,
                Some(best) => cmp_bits(&prefix, best, total_bits) == Ordering::Less,
            };
            if better {
                self.best = Some(prefix);
                self.best_labeling = fixed;
            }
            return;
        }

        let t = fixed.len();
        let target = cells[t];
        let mut rest = target;
        while rest != 0 {
            let v = rest.trailing_zeros() as u64;
            rest &= rest - 1;
            let mut child = cells.clone();
            child[t] = target & !(1 << v);
            child.insert(t, 1 << v);
            self.run(child);
        }
    }
}

/// Color refinement to a stable (equitable) ordered partition. Cells are
/// bit masks; each round splits every cell by the vector of neighbor counts
/// against the cells of the previous round, sub-cells ordered by that vector.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    loop {
        let snapshot = cells.clone();
        let mut next = Vec::with_capacity(cells.len());
        let mut changed = false;
        for &cell in cells.iter() {
            if cell.count_ones() <= 1 {
                next.push(cell);
                continue;
            }
            let mut groups: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
            let mut members = cell;
            while members != 0 {
                let v = members.trailing_zeros() as usize;
                members &= members - 1;
                let sig: Vec<u32> =
                    snapshot.iter().map(|&c| (adj[v] & c).count_ones()).collect();
                *groups.entry(sig).or_insert(0) |= 1 << v;
            }
            if groups.len() > 1 {
                changed = true;
            }
            next.extend(groups.into_values());
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

/// Adjacency bits of the ordered vertices, row by row, packed MSB-first so
/// that word-wise `u64` comparison equals lexicographic bit comparison.
/// Bit index of pair (i, j), j < i, is i*(i-1)/2 + j.
fn code_bits(adj: &[u64], order: &[usize]) -> Vec<u64> {
    let m = order.len();
    let bits = m * (m - 1) / 2;
    let mut words = vec![0u64; bits.div_ceil(64)];
    let mut b = 0;
    for i in 1..m {
        let row = adj[order[i]];
        for &oj in &order[..i] {
            if row >> oj & 1 == 1 {
                words[b / 64] |= 1 << (63 - b % 64);
            }
            b += 1;
        }
    }
    words
}

/// Compares the first `nbits` bits of two MSB-first packed sequences.
fn cmp_bits(a: &[u64], b: &[u64], nbits: usize) -> Ordering {
    let full = nbits / 64;
    for i in 0..full {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    let rem = nbits % 64;
    if rem == 0 {
        return Ordering::Equal;
    }
    let mask = !0u64 << (64 - rem);
    (a[full] & mask).cmp(&(b[full] & mask))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        permute(&mut cur, 0, &mut out);
        out
    }

    fn permute(cur: &mut Vec<usize>, at: usize, out: &mut Vec<Vec<usize>>) {
        if at == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in at..cur.len() {
            cur.swap(at, i);
            permute(cur, at + 1, out);
            cur.swap(at, i);
        }
    }

    /// Exhaustive permutation search, the independent oracle for small n.
    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        if a.p() != b.p() || a.q() != b.q() {
            return false;
        }
        all_permutations(a.p()).iter().any(|perm| &a.permuted(perm).unwrap() == b)
    }

    #[test]
    fn k4_code_is_stable_under_all_relabelings() {
        let g = Graph::complete(4);
        let code = canonical_form(&g);
        for perm in all_permutations(4) {
            assert_eq!(canonical_form(&g.permuted(&perm).unwrap()), code);
        }
    }

    #[test]
    fn cube_code_is_relabeling_invariant() {
        let g = crate::graph::tests::cube_graph();
        let code = canonical_form(&g);
        let perm: Vec<usize> = vec![5, 3, 7, 1, 4, 0, 6, 2];
        assert_eq!(canonical_form(&g.permuted(&perm).unwrap()), code);
    }

    #[test]
    fn different_orders_give_different_codes() {
        let cube = crate::graph::tests::cube_graph();
        let k4 = Graph::complete(4);
        assert_ne!(canonical_form(&cube), canonical_form(&k4));
        assert!(!are_isomorphic(&cube, &k4));
    }

    #[test]
    fn five_vertex_polyhedra_are_distinguished() {
        // square pyramid vs triangular bipyramid
        let pyramid =
            Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4), (3, 4)])
                .unwrap();
        let bipyramid = Graph::new(
            5,
            &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)],
        )
        .unwrap();
        assert!(!are_isomorphic(&pyramid, &bipyramid));
        assert!(!brute_isomorphic(&pyramid, &bipyramid));
    }

    #[test]
    fn code_equality_matches_brute_force_on_small_graphs() {
        // Every labeled graph on 4 vertices, pairwise: code equality must
        // agree with the permutation oracle.
        let mut graphs = Vec::new();
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for mask in 0u32..64 {
            let edges: Vec<_> =
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            graphs.push(Graph::new(4, &edges).unwrap());
        }
        for a in &graphs {
            for b in &graphs {
                assert_eq!(
                    canonical_form(a) == canonical_form(b),
                    brute_isomorphic(a, b),
                    "disagreement on {a:?} vs {b:?}"
                );
            }
        }
    }

    #[test]
    fn labeling_realizes_the_code() {
        let g = crate::graph::tests::cube_graph();
        let canonical = canonical(&g);
        // Rebuild the graph in canonical order; its code must match.
        let mut inverse = vec![0; g.p()];
        for (pos, &v) in canonical.labeling.iter().enumerate() {
            inverse[v] = pos;
        }
        let relabeled = g.permuted(&inverse).unwrap();
        assert_eq!(canonical_form(&relabeled), canonical.code);
    }

    #[test]
    fn hex_rendering_is_lowercase() {
        let hex = canonical_form(&Graph::complete(4)).to_hex();
        assert!(hex.chars().all(|c| c.is_ascii_hexdigit() && !c.is_ascii_uppercase()));
    }
}
