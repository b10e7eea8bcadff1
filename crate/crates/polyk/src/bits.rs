//! Word-parallel bitset helpers shared by connectivity checks and the exact
//! solvers. Vertex sets are packed into `Vec<u64>` rows so that BFS over a
//! few hundred vertices stays a handful of word operations per step.

use crate::graph::Graph;

#[derive(Clone)]
pub(crate) struct AdjBits {
    pub n: usize,
    pub words: usize,
    rows: Vec<u64>,
}

impl AdjBits {
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.p();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for &(u, v) in g.edges() {
            rows[u * words + v / 64] |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
        }
        AdjBits { n, words, rows }
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// True iff the vertices outside `removed` form one connected component
    /// (vacuously true when fewer than two vertices remain).
    pub fn connected_excluding(&self, removed: &[u64]) -> bool {
        self.component_count_excluding(removed) <= 1
    }

    /// Number of connected components among vertices not in `removed`.
    pub fn component_count_excluding(&self, removed: &[u64]) -> usize {
        let mut unseen: Vec<u64> = full_set(self.n, self.words);
        for (w, r) in unseen.iter_mut().zip(removed) {
            *w &= !r;
        }
        let mut components = 0;
        while let Some(start) = first_bit(&unseen) {
            components += 1;
            let mut frontier = vec![0u64; self.words];
            set_bit(&mut frontier, start);
            clear_bit(&mut unseen, start);
            while !is_empty(&frontier) {
                let mut next = vec![0u64; self.words];
                for_each_bit(&frontier, |v| {
                    for (acc, w) in next.iter_mut().zip(self.row(v)) {
                        *acc |= w;
                    }
                });
                for i in 0..self.words {
                    next[i] &= unseen[i];
                    unseen[i] &= !next[i];
                }
                frontier = next;
            }
        }
        components
    }
}

pub(crate) fn full_set(n: usize, words: usize) -> Vec<u64> {
    let mut set = vec![0u64; words];
    for (i, w) in set.iter_mut().enumerate() {
        let lo = i * 64;
        if n >= lo + 64 {
            *w = !0;
        } else if n > lo {
            *w = (1u64 << (n - lo)) - 1;
        }
    }
    set
}

pub(crate) fn set_bit(set: &mut [u64], i: usize) {
    set[i / 64] |= 1 << (i % 64);
}

pub(crate) fn clear_bit(set: &mut [u64], i: usize) {
    set[i / 64] &= !(1 << (i % 64));
}

pub(crate) fn test_bit(set: &[u64], i: usize) -> bool {
    set[i / 64] >> (i % 64) & 1 == 1
}

pub(crate) fn is_empty(set: &[u64]) -> bool {
    set.iter().all(|&w| w == 0)
}

pub(crate) fn first_bit(set: &[u64]) -> Option<usize> {
    for (i, &w) in set.iter().enumerate() {
        if w != 0 {
            return Some(i * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}

/// True iff `sub` is a subset of `sup`.
pub(crate) fn is_subset(sub: &[u64], sup: &[u64]) -> bool {
    sub.iter().zip(sup).all(|(&a, &b)| a & !b == 0)
}

pub(crate) fn for_each_bit(set: &[u64], mut f: impl FnMut(usize)) {
    for (i, &word) in set.iter().enumerate() {
        let mut w = word;
        while w != 0 {
            let b = w.trailing_zeros() as usize;
            f(i * 64 + b);
            w &= w - 1;
        }
    }
}
