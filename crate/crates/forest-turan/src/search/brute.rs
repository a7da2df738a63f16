//! Brute-force extremal values and threshold scans.

use super::{canonical_g6, free_levels, EnumMode, EnumerationBudget, SearchError};
use crate::canon::canonical_form;
use crate::constructions::{build_extremal, theorem_value_any_r};
use crate::count::{injective_homs, stars_u128};
use crate::forest::{is_forest_free, ForestSpec};
use crate::graph::Graph;
use crate::pattern::PatternGraph;
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use std::collections::BTreeSet;

pub(crate) fn ser_big<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub(crate) fn ser_big_opt<S: Serializer>(x: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&v.to_string()),
        None => s.serialize_none(),
    }
}

/// Result of maximizing the number of copies of a pattern over all `F`-free
/// graphs of a given order.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub forest: ForestSpec,
    #[serde(rename = "r_or_J")]
    pub pattern: PatternGraph,
    #[serde(rename = "brute", serialize_with = "ser_big")]
    pub max_count: BigUint,
    #[serde(serialize_with = "ser_big_opt")]
    pub formula: Option<BigUint>,
    #[serde(rename = "match")]
    pub matches_formula: Option<bool>,
    /// Canonical graph6 strings of every maximizer, up to isomorphism,
    /// sorted; byte-identical across runs and worker counts.
    pub extremal: Vec<String>,
    /// Whether the extremal set is exactly the built construction.
    #[serde(rename = "iso_to_construction")]
    pub matches_construction: Option<bool>,
}

impl ExtremalReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization")
    }
}

/// Copy counter with a closed-form fast path for stars; the generic matcher
/// route stays available through `count_copies` and is tested against this
/// one separately.
pub(crate) fn copies_u128(j: &PatternGraph, g: &Graph) -> u128 {
    match j.as_star() {
        Some(1) => stars_u128(g, 1) / 2,
        Some(r) => stars_u128(g, r),
        None => {
            if j.graph().n() > g.n() {
                0
            } else {
                u128::from(injective_homs(j.graph(), g)) / u128::from(j.automorphisms())
            }
        }
    }
}

/// The closed-form value for star patterns when the forest and order are in
/// range; `r = 1` is halved because a copy of `K_2` is an edge, not an
/// ordered star.
fn star_formula(j: &PatternGraph, f: &ForestSpec, n: usize) -> Option<BigUint> {
    let r = j.as_star()?;
    if r == 0 {
        return None;
    }
    let stars = theorem_value_any_r(f, n, r).ok()?;
    Some(if r == 1 { stars / 2u32 } else { stars })
}

struct Best {
    count: u128,
    forms: BTreeSet<crate::canon::CanonicalForm>,
    seen_any: bool,
}

impl Best {
    fn empty() -> Best {
        Best {
            count: 0,
            forms: BTreeSet::new(),
            seen_any: false,
        }
    }

    fn offer(&mut self, count: u128, g: &Graph) {
        if !self.seen_any || count > self.count {
            self.count = count;
            self.forms = BTreeSet::from([canonical_form(g)]);
            self.seen_any = true;
        } else if count == self.count {
            self.forms.insert(canonical_form(g));
        }
    }

    fn merge(mut self, other: Best) -> Best {
        if !other.seen_any {
            return self;
        }
        if !self.seen_any || other.count > self.count {
            return other;
        }
        if other.count == self.count {
            self.forms.extend(other.forms);
        }
        self
    }
}

fn maximize_labeled(
    n: usize,
    j: &PatternGraph,
    f: &ForestSpec,
    budget: &EnumerationBudget,
) -> Best {
    let pool = budget.pool();
    let total: u64 = 1 << (n * (n - 1) / 2);
    pool.install(|| {
        (0..total)
            .into_par_iter()
            .fold(Best::empty, |mut acc, mask| {
                let g = Graph::from_edge_mask(n, mask);
                if is_forest_free(&g, f) {
                    acc.offer(copies_u128(j, &g), &g);
                }
                acc
            })
            .reduce(Best::empty, Best::merge)
    })
}

fn maximize_over_reps(reps: &[Graph], j: &PatternGraph, budget: &EnumerationBudget) -> Best {
    let pool = budget.pool();
    pool.install(|| {
        reps.par_iter()
            .fold(Best::empty, |mut acc, g| {
                acc.offer(copies_u128(j, g), g);
                acc
            })
            .reduce(Best::empty, Best::merge)
    })
}

fn report_from_best(n: usize, j: &PatternGraph, f: &ForestSpec, best: Best) -> ExtremalReport {
    let max_count = BigUint::from(best.count);
    let formula = star_formula(j, f, n);
    let matches_formula = formula.as_ref().map(|v| *v == max_count);
    let extremal: Vec<String> = best.forms.iter().map(|c| c.to_graph6()).collect();
    let matches_construction = build_extremal(f, n)
        .ok()
        .map(|g| extremal.len() == 1 && extremal[0] == canonical_g6(&g));
    ExtremalReport {
        n,
        forest: f.clone(),
        pattern: j.clone(),
        max_count,
        formula,
        matches_formula,
        extremal,
        matches_construction,
    }
}

/// Maximizes the number of copies of `j` over `F`-free graphs of order `n`
/// by exhaustive search, collecting every maximizer up to isomorphism.
pub fn brute_force_ex(
    n: usize,
    j: &PatternGraph,
    f: &ForestSpec,
    budget: &EnumerationBudget,
) -> Result<ExtremalReport, SearchError> {
    budget.check(n)?;
    let best = match budget.mode {
        EnumMode::Labeled => maximize_labeled(n, j, f, budget),
        EnumMode::UpToIso => {
            let levels = free_levels(n, f, budget)?;
            maximize_over_reps(&levels[n - 1], j, budget)
        }
    };
    Ok(report_from_best(n, j, f, best))
}

#[derive(Debug, Clone, Serialize)]
pub struct ThresholdRow {
    pub n: usize,
    #[serde(serialize_with = "ser_big")]
    pub brute: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub formula: BigUint,
    /// Exact value agreement.
    #[serde(rename = "match")]
    pub value_match: bool,
    /// The extremal graph is unique and isomorphic to the construction.
    pub unique_and_iso: bool,
}

impl ThresholdRow {
    pub fn agree(&self) -> bool {
        self.value_match && self.unique_and_iso
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ThresholdReport {
    pub forest: ForestSpec,
    pub r: usize,
    pub mode: EnumMode,
    /// `r = 1` counts edges; outside the closed form's hypotheses.
    pub diagnostic: bool,
    pub rows: Vec<ThresholdRow>,
    /// Smallest order from which every row up to `n_max` agrees, if any.
    pub n0: Option<usize>,
}

impl ThresholdReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization")
    }
}

/// Scans orders `order(F)..=n_max`, comparing the brute-force maximum with
/// the closed form and the extremal set with the construction.
pub fn find_threshold(
    f: &ForestSpec,
    r: usize,
    n_max: usize,
    budget: &EnumerationBudget,
) -> Result<ThresholdReport, SearchError> {
    if r == 0 {
        return Err(SearchError::ZeroStar);
    }
    if let Some(&k) = f.parts().iter().find(|&&k| k < 2) {
        return Err(SearchError::BadPathOrder(k));
    }
    budget.check(n_max)?;
    let j = PatternGraph::star(r)?;
    let start = f.order();
    let levels = match budget.mode {
        EnumMode::UpToIso => Some(free_levels(n_max, f, budget)?),
        EnumMode::Labeled => None,
    };
    let mut rows = Vec::new();
    for n in start..=n_max {
        let best = match &levels {
            Some(levels) => maximize_over_reps(&levels[n - 1], &j, budget),
            None => maximize_labeled(n, &j, f, budget),
        };
        let report = report_from_best(n, &j, f, best);
        rows.push(ThresholdRow {
            n,
            brute: report.max_count.clone(),
            formula: report.formula.clone().expect("in range for the formula"),
            value_match: report.matches_formula.unwrap_or(false),
            unique_and_iso: report.matches_construction.unwrap_or(false),
        });
    }
    let mut n0 = None;
    for row in rows.iter().rev() {
        if row.agree() {
            n0 = Some(row.n);
        } else {
            break;
        }
    }
    Ok(ThresholdReport {
        forest: f.clone(),
        r,
        mode: budget.mode,
        diagnostic: r == 1,
        rows,
        n0,
    })
}
