//! Canonical forms for small graphs via pruned permutation search.
//!
//! The canonical form of a graph is the lexicographically smallest upper
//! triangle bit-string (in graph6 bit order) over all relabelings that list
//! vertices in nondecreasing degree order. Two graphs have equal canonical
//! forms iff they are isomorphic. Intended for graphs on up to ~10 vertices;
//! larger inputs work but regular graphs degrade toward factorial search.

use crate::graph::Graph;
use crate::graph6;

/// A total-order key for an isomorphism class: vertex count plus the packed
/// canonical adjacency bit-string.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The canonically labeled representative graph.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        let mut bit = 0;
        for j in 1..self.n {
            for i in 0..j {
                let word = bit / 64;
                let mask = 1u64 << (63 - bit % 64);
                if self.bits[word] & mask != 0 {
                    g.add_edge(i, j);
                }
                bit += 1;
            }
        }
        g
    }

    /// graph6 string of the canonical representative.
    pub fn to_graph6(&self) -> String {
        graph6::encode(&self.to_graph()).expect("canonical forms stay within graph6 range")
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    let nbits = n * n.saturating_sub(1) / 2;
    if n <= 1 {
        return CanonicalForm { n, bits: vec![] };
    }

    // Positions are grouped by degree, ascending; a relabeling is admissible
    // when position p receives a vertex of the p-th smallest degree.
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut sorted = degrees.clone();
    sorted.sort_unstable();
    let mut class_mask = [0u64; 65];
    for (v, &d) in degrees.iter().enumerate() {
        class_mask[d] |= 1 << v;
    }

    let mut search = Search {
        g,
        target: &sorted,
        class_mask: &class_mask,
        assigned: [0; 64],
        best_cols: [u64::MAX; 64],
        valid_len: 0,
        complete: false,
    };
    search.place(0, 0);
    debug_assert!(search.complete);

    // Pack per-position columns into the flat big-endian bit-string.
    let mut bits = vec![0u64; nbits.div_ceil(64)];
    let mut bit = 0;
    for pos in 1..n {
        for i in 0..pos {
            let value = search.best_cols[pos] >> (pos - 1 - i) & 1;
            if value == 1 {
                bits[bit / 64] |= 1 << (63 - bit % 64);
            }
            bit += 1;
        }
    }
    CanonicalForm { n, bits }
}

/// The canonically labeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).to_graph()
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

struct Search<'a> {
    g: &'a Graph,
    target: &'a [usize],
    class_mask: &'a [u64; 65],
    assigned: [usize; 64],
    /// Best column values found so far; `best_cols[p]` has the bit for
    /// earlier position `i` at offset `p - 1 - i`. Entries at and beyond
    /// `valid_len` are stale.
    best_cols: [u64; 64],
    valid_len: usize,
    complete: bool,
}

impl Search<'_> {
    fn place(&mut self, pos: usize, used: u64) {
        let n = self.g.n();
        if pos == n {
            self.complete = true;
            return;
        }
        let mut candidates = self.class_mask[self.target[pos]] & !used;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let mut col = 0u64;
            for i in 0..pos {
                col = col << 1 | u64::from(self.g.has_edge(self.assigned[i], v));
            }
            if pos < self.valid_len {
                if col > self.best_cols[pos] {
                    continue;
                }
                if col < self.best_cols[pos] {
                    self.best_cols[pos] = col;
                    self.valid_len = pos + 1;
                }
            } else {
                self.best_cols[pos] = col;
                self.valid_len = pos + 1;
            }
            self.assigned[pos] = v;
            self.place(pos + 1, used | 1 << v);
        }
    }
}
