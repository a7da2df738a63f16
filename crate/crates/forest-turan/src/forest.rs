//! Linear-forest specifications and containment testing.

use crate::graph::Graph;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ForestParseError {
    #[error("empty forest specification")]
    Empty,
    #[error("cannot parse forest token {0:?}: expected an integer or <t>xP<k>")]
    InvalidToken(String),
    #[error("path order must be at least 1, got {0}")]
    PartTooSmall(u32),
}

/// A linear forest `F = P_{k_1} u ... u P_{k_t}` given by its multiset of
/// path orders, kept sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ForestSpec {
    parts: Vec<u32>,
}

impl ForestSpec {
    pub fn new(mut parts: Vec<u32>) -> Result<ForestSpec, ForestParseError> {
        if parts.is_empty() {
            return Err(ForestParseError::Empty);
        }
        if let Some(&k) = parts.iter().find(|&&k| k < 1) {
            return Err(ForestParseError::PartTooSmall(k));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(ForestSpec { parts })
    }

    /// Parses `"k1,k2,...,kt"`; a token `<t>xP<k>` abbreviates `t` copies
    /// of `P_k`, so `"3xP3"` is `"3,3,3"`.
    pub fn parse(text: &str) -> Result<ForestSpec, ForestParseError> {
        let mut parts = Vec::new();
        for raw in text.split(',') {
            let token = raw.trim();
            if token.is_empty() {
                return Err(ForestParseError::InvalidToken(raw.to_string()));
            }
            if let Some((count, path)) = token.split_once(['x', 'X']) {
                let invalid = || ForestParseError::InvalidToken(token.to_string());
                let count: usize = count.trim().parse().map_err(|_| invalid())?;
                let order: u32 = path
                    .trim()
                    .strip_prefix(['P', 'p'])
                    .ok_or_else(invalid)?
                    .parse()
                    .map_err(|_| invalid())?;
                parts.extend(std::iter::repeat_n(order, count));
            } else {
                let order: u32 = token
                    .parse()
                    .map_err(|_| ForestParseError::InvalidToken(token.to_string()))?;
                parts.push(order);
            }
        }
        ForestSpec::new(parts)
    }

    /// Path orders, descending.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of paths.
    pub fn t(&self) -> usize {
        self.parts.len()
    }

    /// Total number of vertices of the forest.
    pub fn order(&self) -> usize {
        self.parts.iter().map(|&k| k as usize).sum()
    }

    /// `h = sum(floor(k_i / 2)) - 1`. This is -1 exactly when the forest
    /// consists of isolated vertices only.
    pub fn h(&self) -> i64 {
        self.parts.iter().map(|&k| (k / 2) as i64).sum::<i64>() - 1
    }

    /// 1 if every path order is odd, else 0.
    pub fn eta(&self) -> u32 {
        u32::from(self.parts.iter().all(|&k| k % 2 == 1))
    }

    pub fn is_tp3(&self) -> bool {
        self.parts.iter().all(|&k| k == 3)
    }

    /// True when every part has order at least 2 (the hypothesis of the
    /// closed-form results).
    pub fn all_parts_at_least_2(&self) -> bool {
        self.parts.iter().all(|&k| k >= 2)
    }
}

impl std::fmt::Display for ForestSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for k in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
            first = false;
        }
        Ok(())
    }
}

impl serde::Serialize for ForestSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parity correction: 0 if `n - h` is even, 1 otherwise.
pub fn tau(n: usize, h: usize) -> u32 {
    debug_assert!(n >= h);
    ((n - h) % 2) as u32
}

/// Containment search options.
#[derive(Debug, Clone, Copy, Default)]
pub struct ContainsOptions {
    /// Memoize failed `(part index, free mask)` states. Off by default;
    /// worthwhile on dense graphs where many placements of the early parts
    /// reach identical residual vertex sets.
    pub transposition: bool,
}

/// True iff `g` contains vertex-disjoint paths with the orders of `f`.
///
/// Parts are placed largest first; isolated-vertex parts just consume free
/// vertices. For runs of equal orders the minimum vertex of consecutive
/// placements must increase, which removes the permutation symmetry between
/// interchangeable parts.
pub fn contains_forest(g: &Graph, f: &ForestSpec) -> bool {
    contains_forest_with(g, f, ContainsOptions::default())
}

pub fn contains_forest_with(g: &Graph, f: &ForestSpec, opts: ContainsOptions) -> bool {
    if f.order() > g.n() {
        return false;
    }
    let paths: Vec<u32> = f.parts.iter().copied().filter(|&k| k >= 2).collect();
    let singles = f.t() - paths.len();
    // Residual demand including this part, per position.
    let mut demand = vec![0usize; paths.len() + 1];
    demand[paths.len()] = singles;
    for idx in (0..paths.len()).rev() {
        demand[idx] = demand[idx + 1] + paths[idx] as usize;
    }
    let mut search = PackSearch {
        g,
        paths: &paths,
        demand: &demand,
        failed: opts.transposition.then(HashSet::new),
    };
    search.place_part(0, g.vertex_mask(), 0)
}

pub fn is_forest_free(g: &Graph, f: &ForestSpec) -> bool {
    !contains_forest(g, f)
}

/// Bits at positions `floor..64`.
#[inline]
fn high_mask(floor: usize) -> u64 {
    if floor >= 64 {
        0
    } else {
        !((1u64 << floor) - 1)
    }
}

struct PackSearch<'a> {
    g: &'a Graph,
    paths: &'a [u32],
    demand: &'a [usize],
    failed: Option<HashSet<(u8, u8, u64)>>,
}

impl PackSearch<'_> {
    /// Places part `idx` inside `free`; `floor` is one past the minimum
    /// vertex of the previous equal-order part (0 when unconstrained).
    fn place_part(&mut self, idx: usize, free: u64, floor: usize) -> bool {
        if idx == self.paths.len() {
            return (free.count_ones() as usize) >= self.demand[idx];
        }
        if (free.count_ones() as usize) < self.demand[idx] {
            return false;
        }
        // Below-floor vertices stay relevant to later, shorter parts, so the
        // memo key carries the floor as well.
        let key = (idx as u8, floor as u8, free);
        if let Some(failed) = &self.failed {
            if failed.contains(&key) {
                return false;
            }
        }
        let allowed = free & high_mask(floor);
        let k = self.paths[idx] as usize;
        let next_equal = idx + 1 < self.paths.len() && self.paths[idx + 1] == self.paths[idx];
        let mut starts = allowed;
        while starts != 0 {
            let start = starts.trailing_zeros() as usize;
            starts &= starts - 1;
            if self.extend_path(
                idx,
                free,
                allowed,
                start,
                start,
                1u64 << start,
                k - 1,
                next_equal,
            ) {
                return true;
            }
        }
        if let Some(failed) = &mut self.failed {
            failed.insert(key);
        }
        false
    }

    /// Grows a simple path from endpoint `start`, currently ending at
    /// `last` and needing `left` more vertices inside `allowed`.
    #[allow(clippy::too_many_arguments)]
    fn extend_path(
        &mut self,
        idx: usize,
        free: u64,
        allowed: u64,
        start: usize,
        last: usize,
        used: u64,
        left: usize,
        next_equal: bool,
    ) -> bool {
        if left == 0 {
            // Each path is seen once per endpoint; keep the orientation
            // that starts at the smaller one.
            if used.count_ones() > 1 && start > last {
                return false;
            }
            let floor = if next_equal {
                used.trailing_zeros() as usize + 1
            } else {
                0
            };
            return self.place_part(idx + 1, free & !used, floor);
        }
        let mut next = self.g.neighbors(last) & allowed & !used;
        while next != 0 {
            let v = next.trailing_zeros() as usize;
            next &= next - 1;
            if self.extend_path(
                idx,
                free,
                allowed,
                start,
                v,
                used | 1 << v,
                left - 1,
                next_equal,
            ) {
                return true;
            }
        }
        false
    }
}
