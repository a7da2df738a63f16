//! The edge-shifting operation and its exact star-count delta.

use crate::combin::binom_u64;
use crate::count::stars_u128;
use crate::graph::Graph;
use crate::graph6;
use num_bigint::BigUint;
use rand::SeedableRng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShiftError {
    #[error("shifting needs i < j, got i={i}, j={j}")]
    BadPair { i: usize, j: usize },
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
}

fn check_pair(g: &Graph, i: usize, j: usize) -> Result<(), ShiftError> {
    let order = g.n();
    for vertex in [i, j] {
        if vertex >= order {
            return Err(ShiftError::VertexOutOfRange { vertex, order });
        }
    }
    if i >= j {
        return Err(ShiftError::BadPair { i, j });
    }
    Ok(())
}

/// Applies the `ij`-shift: every edge `{j, x}` with `x != i` and
/// `{i, x}` absent is replaced by `{i, x}`. All membership tests are made
/// against the original graph, so the whole edge set moves simultaneously;
/// the edge `{i, j}` itself, having `i` as an endpoint, never moves.
pub fn shift(g: &Graph, i: usize, j: usize) -> Result<Graph, ShiftError> {
    check_pair(g, i, j)?;
    let mut out = g.clone();
    let moved = g.neighbors(j) & !g.neighbors(i) & !(1 << i);
    let mut rest = moved;
    while rest != 0 {
        let x = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out.remove_edge(j, x);
        out.add_edge(i, x);
    }
    Ok(out)
}

/// The neighborhood statistics of a vertex pair together with the exact
/// star-count change produced by the shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftDelta {
    /// `|N(i) \ N(j) \ {j}|` — private neighbors of `i`.
    pub n_i: usize,
    /// `|N(j) \ N(i) \ {i}|` — private neighbors of `j`; exactly the edges
    /// that move.
    pub n_j: usize,
    /// `|N(i) n N(j)|` — common neighbors.
    pub n_ij: usize,
    /// Whether `{i, j}` is an edge. The pair degrees are the statistics
    /// above plus 1 on each side when it is, which shifts every binomial
    /// argument in the delta by one.
    pub adjacent: bool,
    pub r: usize,
    /// `count_stars(shift(g,i,j), r) - count_stars(g, r)`; never negative.
    pub delta: BigUint,
}

/// Computes the pair statistics and the closed-form star-count delta
///
/// ```text
/// C(n_i + n_j + n_ij + m, r) + C(n_ij + m, r)
///   - C(n_i + n_ij + m, r) - C(n_j + n_ij + m, r)
/// ```
///
/// with `m = 1` when `{i, j}` is an edge and `0` otherwise. Only the degrees
/// of `i` and `j` change under the shift, so this equals the measured
/// difference exactly.
pub fn shift_delta(g: &Graph, i: usize, j: usize, r: usize) -> Result<ShiftDelta, ShiftError> {
    check_pair(g, i, j)?;
    let ni_mask = g.neighbors(i) & !g.neighbors(j) & !(1 << j);
    let nj_mask = g.neighbors(j) & !g.neighbors(i) & !(1 << i);
    let common = g.neighbors(i) & g.neighbors(j);
    let (n_i, n_j, n_ij) = (
        ni_mask.count_ones() as usize,
        nj_mask.count_ones() as usize,
        common.count_ones() as usize,
    );
    let adjacent = g.has_edge(i, j);
    let m = usize::from(adjacent);
    let b = |x: usize| binom_u64(x, r) as i128;
    let delta = b(n_i + n_j + n_ij + m) + b(n_ij + m) - b(n_i + n_ij + m) - b(n_j + n_ij + m);
    debug_assert!(delta >= 0, "shifting never loses stars");
    Ok(ShiftDelta {
        n_i,
        n_j,
        n_ij,
        adjacent,
        r,
        delta: BigUint::from(delta as u128),
    })
}

/// Applies shifts over all pairs `i < j` in lexicographic sweeps until a
/// whole sweep changes nothing.
pub fn shift_closure(g: &Graph) -> Graph {
    shift_closure_with_stats(g).0
}

/// Like [`shift_closure`], also reporting how many shifts moved an edge.
/// Every effective shift strictly decreases the label-weighted degree sum
/// `sum_v v * d(v)`, so the process terminates.
pub fn shift_closure_with_stats(g: &Graph) -> (Graph, u64) {
    let n = g.n();
    let mut current = g.clone();
    let mut effective = 0u64;
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in i + 1..n {
                let next = shift(&current, i, j).expect("valid pair");
                if next != current {
                    effective += 1;
                    changed = true;
                    current = next;
                }
            }
        }
        if !changed {
            return (current, effective);
        }
    }
}

/// A witness for the pair statistics under which a shift kept the
/// `S_r`-count unchanged while producing a non-isomorphic graph.
#[derive(Debug, Clone)]
pub struct EqualityWitness {
    pub graph6: String,
    pub shifted_graph6: String,
    pub i: usize,
    pub j: usize,
    pub r: usize,
}

/// Probes random graphs for shifts with a zero star-count delta whose
/// result is not isomorphic to the input. Findings are reported, not judged:
/// they delimit where "equal counts implies isomorphic" can fail for
/// degenerate low-degree pairs.
pub fn equal_count_noniso_witnesses(
    samples: usize,
    seed: u64,
    r_values: std::ops::RangeInclusive<usize>,
    max_witnesses: usize,
) -> Vec<EqualityWitness> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for sample in 0..samples {
        let n = 4 + sample % 5;
        let p = [0.2, 0.5, 0.8][sample % 3];
        let g = Graph::random(n, p, &mut rng);
        for i in 0..n {
            for j in i + 1..n {
                let shifted = shift(&g, i, j).expect("valid pair");
                if shifted == g {
                    continue;
                }
                for r in r_values.clone() {
                    if stars_u128(&g, r) == stars_u128(&shifted, r)
                        && !crate::canon::is_isomorphic(&g, &shifted)
                    {
                        out.push(EqualityWitness {
                            graph6: graph6::encode(&g).expect("small"),
                            shifted_graph6: graph6::encode(&shifted).expect("small"),
                            i,
                            j,
                            r,
                        });
                        if out.len() >= max_witnesses {
                            return out;
                        }
                    }
                }
            }
        }
    }
    out
}
