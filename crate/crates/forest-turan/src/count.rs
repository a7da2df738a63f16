//! Star, copy and subgraph counting.

use crate::combin::binom_u64;
use crate::graph::Graph;
use crate::pattern::PatternGraph;
use num_bigint::BigUint;

/// Number of copies of the star `S_r` in `g`, i.e. `sum_v C(d(v), r)`.
///
/// `r = 0` gives the vertex count and `r = 1` twice the edge count.
pub fn count_stars(g: &Graph, r: usize) -> BigUint {
    BigUint::from(stars_u128(g, r))
}

/// Same as [`count_stars`] but in machine arithmetic. With at most 64
/// vertices the sum is bounded by `64 * C(63, 31) < 2^66`, so `u128` is
/// always exact.
pub(crate) fn stars_u128(g: &Graph, r: usize) -> u128 {
    (0..g.n()).map(|v| binom_u64(g.degree(v), r) as u128).sum()
}

/// Number of copies of `j` in `g`: subgraphs of `g` isomorphic to `j`,
/// not necessarily induced. Computed as injective homomorphisms divided
/// by the automorphism count of the pattern.
pub fn count_copies(j: &PatternGraph, g: &Graph) -> BigUint {
    if j.graph().n() > g.n() {
        return BigUint::from(0u32);
    }
    let homs = injective_homs(j.graph(), g);
    BigUint::from(homs / j.automorphisms())
}

/// True iff `h` contains a subgraph isomorphic to `g` (not necessarily
/// induced).
pub fn is_subgraph_of(g: &Graph, h: &Graph) -> bool {
    if g.n() > h.n() || g.edge_count() > h.edge_count() {
        return false;
    }
    // Sorted-degree dominance: the i-th largest pattern degree needs a host
    // vertex of at least that degree.
    let mut gd = g.degrees();
    let mut hd = h.degrees();
    gd.sort_unstable_by(|a, b| b.cmp(a));
    hd.sort_unstable_by(|a, b| b.cmp(a));
    if gd.iter().zip(&hd).any(|(a, b)| a > b) {
        return false;
    }
    Matcher::new(g, h).run(true) > 0
}

/// Number of injective adjacency-preserving maps from `pat` into `host`.
pub(crate) fn injective_homs(pat: &Graph, host: &Graph) -> u64 {
    if pat.n() > host.n() {
        return 0;
    }
    Matcher::new(pat, host).run(false)
}

struct Matcher<'a> {
    pat: &'a Graph,
    host: &'a Graph,
    /// Pattern vertices in matching order: most-constrained first.
    order: Vec<usize>,
    /// Placed pattern neighbors of `order[k]`, as indices into `order`.
    placed_nbrs: Vec<Vec<usize>>,
}

impl<'a> Matcher<'a> {
    fn new(pat: &'a Graph, host: &'a Graph) -> Self {
        let np = pat.n();
        let mut order = Vec::with_capacity(np);
        let mut in_order = vec![false; np];
        for _ in 0..np {
            // Next vertex: most already-placed neighbors, then highest degree.
            let next = (0..np)
                .filter(|&v| !in_order[v])
                .max_by_key(|&v| {
                    let placed = order.iter().filter(|&&u| pat.has_edge(u, v)).count();
                    (placed, pat.degree(v), std::cmp::Reverse(v))
                })
                .unwrap();
            order.push(next);
            in_order[next] = true;
        }
        let placed_nbrs = order
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                (0..k)
                    .filter(|&earlier| pat.has_edge(order[earlier], v))
                    .collect()
            })
            .collect();
        Matcher {
            pat,
            host,
            order,
            placed_nbrs,
        }
    }

    /// Counts completions; with `stop_at_first` returns at most 1.
    fn run(&self, stop_at_first: bool) -> u64 {
        let mut images = vec![0usize; self.pat.n()];
        self.extend(0, 0, &mut images, stop_at_first)
    }

    fn extend(&self, k: usize, used: u64, images: &mut [usize], stop: bool) -> u64 {
        if k == self.pat.n() {
            return 1;
        }
        let v = self.order[k];
        let need = self.pat.degree(v);
        let mut candidates = if self.placed_nbrs[k].is_empty() {
            self.host.vertex_mask() & !used
        } else {
            let mut mask = !used;
            for &earlier in &self.placed_nbrs[k] {
                mask &= self.host.neighbors(images[earlier]);
            }
            mask
        };
        let mut total = 0;
        while candidates != 0 {
            let w = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            if self.host.degree(w) < need {
                continue;
            }
            images[k] = w;
            total += self.extend(k + 1, used | 1 << w, images, stop);
            if stop && total > 0 {
                return total;
            }
        }
        total
    }
}
