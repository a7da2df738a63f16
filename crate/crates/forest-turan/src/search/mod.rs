//! Exhaustive verification engine: enumerate forest-free graphs at desk
//! scale, recompute extremal values independently of the closed forms, and
//! check the structural classification results.

mod brute;
mod classify;
mod problem1;

pub use brute::{brute_force_ex, find_threshold, ExtremalReport, ThresholdReport, ThresholdRow};
pub use classify::{verify_classification, ClassificationReport};
pub use problem1::{
    explore_problem1, ExploreRow, ProbeConfig, Problem1Report, ShiftViolation, DEFAULT_SEED,
};

use crate::canon::{canonical_form, CanonicalForm};
use crate::constructions::ConstructionError;
use crate::forest::{contains_forest, is_forest_free, ForestSpec};
use crate::graph::Graph;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

/// Environment variable consulted for the worker count when the budget does
/// not pin one.
pub const THREADS_ENV: &str = "FOREST_TURAN_THREADS";

/// Hard cap for exhaustive labeled enumeration (`2^21` graphs at n = 7).
pub const LABELED_MAX_N: usize = 7;
/// Hard cap for per-isomorphism-class enumeration.
pub const UP_TO_ISO_MAX_N: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EnumMode {
    #[serde(rename = "labeled")]
    Labeled,
    #[serde(rename = "iso")]
    UpToIso,
}

impl std::fmt::Display for EnumMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EnumMode::Labeled => write!(f, "labeled"),
            EnumMode::UpToIso => write!(f, "iso"),
        }
    }
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("order {n} exceeds the {mode} enumeration budget of {max}")]
    Budget {
        mode: EnumMode,
        n: usize,
        max: usize,
    },
    #[error("node limit {limit} exceeded at level {level}; partial results are unusable")]
    NodeLimit { limit: u64, level: usize },
    #[error("enumeration needs at least one vertex")]
    ZeroOrder,
    #[error("path orders must be at least 2, got {0}")]
    BadPathOrder(u32),
    #[error("star parameter must be at least 1, got 0")]
    ZeroStar,
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Pattern(#[from] crate::pattern::PatternError),
}

/// Limits for the enumeration engine.
#[derive(Debug, Clone)]
pub struct EnumerationBudget {
    pub mode: EnumMode,
    /// Effective order cap; defaults to the mode's hard cap and may only
    /// exceed it together with `allow_unsafe`.
    pub max_n: usize,
    /// Worker threads; 0 means `FOREST_TURAN_THREADS` or the rayon default.
    pub workers: usize,
    /// Optional cap on the total number of one-vertex extensions examined.
    pub node_limit: Option<u64>,
    pub allow_unsafe: bool,
}

impl EnumerationBudget {
    pub fn labeled() -> Self {
        EnumerationBudget {
            mode: EnumMode::Labeled,
            max_n: LABELED_MAX_N,
            workers: 0,
            node_limit: None,
            allow_unsafe: false,
        }
    }

    pub fn up_to_iso() -> Self {
        EnumerationBudget {
            mode: EnumMode::UpToIso,
            max_n: UP_TO_ISO_MAX_N,
            workers: 0,
            node_limit: None,
            allow_unsafe: false,
        }
    }

    fn hard_cap(&self) -> usize {
        match self.mode {
            EnumMode::Labeled => LABELED_MAX_N,
            EnumMode::UpToIso => UP_TO_ISO_MAX_N,
        }
    }

    /// Representation limits that even `allow_unsafe` cannot lift: labeled
    /// edge masks must fit in a `u64`, extensions in a 64-vertex graph.
    fn structural_cap(&self) -> usize {
        match self.mode {
            EnumMode::Labeled => 11,
            EnumMode::UpToIso => 63,
        }
    }

    pub fn check(&self, n: usize) -> Result<(), SearchError> {
        if n == 0 {
            return Err(SearchError::ZeroOrder);
        }
        let cap = if self.allow_unsafe {
            self.max_n.min(self.structural_cap())
        } else {
            self.max_n.min(self.hard_cap())
        };
        if n > cap {
            return Err(SearchError::Budget {
                mode: self.mode,
                n,
                max: cap,
            });
        }
        Ok(())
    }

    pub(crate) fn pool(&self) -> rayon::ThreadPool {
        let workers = if self.workers > 0 {
            self.workers
        } else {
            std::env::var(THREADS_ENV)
                .ok()
                .and_then(|v| v.parse::<usize>().ok())
                .filter(|&v| v > 0)
                .unwrap_or(0)
        };
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool")
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget::up_to_iso()
    }
}

/// One representative per isomorphism class of `F`-free graphs, for every
/// order `1..=n`. `levels[k - 1]` holds order `k`, sorted by canonical form.
///
/// Level `k` is produced by attaching a new vertex to each representative of
/// level `k - 1` with every possible neighbor set, discarding extensions that
/// acquire the forest (freeness is closed under subgraphs, so nothing is
/// lost), and deduplicating by canonical form. Parents are processed in
/// parallel; the per-level merge is an ordered set union, so the output is
/// independent of the worker count.
pub(crate) fn free_levels(
    n: usize,
    f: &ForestSpec,
    budget: &EnumerationBudget,
) -> Result<Vec<Vec<Graph>>, SearchError> {
    budget.check(n)?;
    let pool = budget.pool();
    let mut levels: Vec<Vec<Graph>> = Vec::with_capacity(n);
    let single = Graph::empty(1);
    levels.push(if is_forest_free(&single, f) {
        vec![single]
    } else {
        Vec::new()
    });
    let mut nodes_spent = 0u64;
    for level in 2..=n {
        let parents = &levels[level - 2];
        let extensions = (parents.len() as u64) << (level - 1);
        nodes_spent = nodes_spent.saturating_add(extensions);
        if let Some(limit) = budget.node_limit {
            if nodes_spent > limit {
                return Err(SearchError::NodeLimit { limit, level });
            }
        }
        // Containment can only appear once the forest fits.
        let must_check = f.order() <= level;
        let children: Vec<Vec<CanonicalForm>> = pool.install(|| {
            parents
                .par_iter()
                .map(|parent| {
                    let mut local = Vec::new();
                    for subset in 0u64..1 << (level - 1) {
                        let child = extend(parent, subset);
                        if must_check && contains_forest(&child, f) {
                            continue;
                        }
                        local.push(canonical_form(&child));
                    }
                    local
                })
                .collect()
        });
        let mut merged = BTreeSet::new();
        for batch in children {
            merged.extend(batch);
        }
        levels.push(merged.into_iter().map(|c| c.to_graph()).collect());
    }
    Ok(levels)
}

fn extend(parent: &Graph, neighbor_mask: u64) -> Graph {
    let n = parent.n();
    let mut g = Graph::empty(n + 1);
    for (u, v) in parent.edges() {
        g.add_edge(u, v);
    }
    let mut rest = neighbor_mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        g.add_edge(v, n);
    }
    g
}

/// Stream of `F`-free graphs of order `n`.
///
/// Labeled mode walks all `2^C(n,2)` labeled graphs lazily; up-to-iso mode
/// yields exactly one representative per isomorphism class, canonically
/// labeled and sorted.
pub enum GraphEnumeration {
    Labeled(LabeledFreeGraphs),
    UpToIso(std::vec::IntoIter<Graph>),
}

impl Iterator for GraphEnumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match self {
            GraphEnumeration::Labeled(inner) => inner.next(),
            GraphEnumeration::UpToIso(inner) => inner.next(),
        }
    }
}

pub struct LabeledFreeGraphs {
    n: usize,
    forest: ForestSpec,
    next_mask: u64,
    end: u64,
}

impl Iterator for LabeledFreeGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let g = Graph::from_edge_mask(self.n, self.next_mask);
            self.next_mask += 1;
            if is_forest_free(&g, &self.forest) {
                return Some(g);
            }
        }
        None
    }
}

pub fn enumerate_free_graphs(
    n: usize,
    f: &ForestSpec,
    budget: &EnumerationBudget,
) -> Result<GraphEnumeration, SearchError> {
    budget.check(n)?;
    match budget.mode {
        EnumMode::Labeled => Ok(GraphEnumeration::Labeled(LabeledFreeGraphs {
            n,
            forest: f.clone(),
            next_mask: 0,
            end: 1 << (n * (n - 1) / 2),
        })),
        EnumMode::UpToIso => {
            let mut levels = free_levels(n, f, budget)?;
            Ok(GraphEnumeration::UpToIso(
                levels.pop().expect("n >= 1").into_iter(),
            ))
        }
    }
}

/// Number of isomorphism classes of `F`-free graphs of order `n` via the
/// augmentation engine.
pub fn count_isomorphism_classes(
    n: usize,
    f: &ForestSpec,
    budget: &EnumerationBudget,
) -> Result<u64, SearchError> {
    let levels = free_levels(n, f, budget)?;
    Ok(levels[n - 1].len() as u64)
}

/// Independent class counter: walks every labeled graph of order `n` and
/// deduplicates by canonical form. Only sensible for `n <= 7`, where it
/// cross-validates the augmentation engine.
pub fn count_classes_labeled_dedupe(
    n: usize,
    f: &ForestSpec,
    budget: &EnumerationBudget,
) -> Result<u64, SearchError> {
    let as_labeled = EnumerationBudget {
        mode: EnumMode::Labeled,
        ..budget.clone()
    };
    as_labeled.check(n)?;
    let pool = budget.pool();
    let total: u64 = 1 << (n * (n - 1) / 2);
    let forms = pool.install(|| {
        (0..total)
            .into_par_iter()
            .fold(BTreeSet::new, |mut acc, mask| {
                let g = Graph::from_edge_mask(n, mask);
                if is_forest_free(&g, f) {
                    acc.insert(canonical_form(&g));
                }
                acc
            })
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            })
    });
    Ok(forms.len() as u64)
}

/// Canonical graph6 string for a graph's isomorphism class.
pub(crate) fn canonical_g6(g: &Graph) -> String {
    canonical_form(g).to_graph6()
}
