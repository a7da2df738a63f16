//! Does the extremal graph stay the same when stars are replaced by an
//! arbitrary shift-monotone pattern? This explorer tests the premise on
//! random graphs and recomputes the extremal sets for a range of orders.

use super::brute::{brute_force_ex, copies_u128, ser_big};
use super::{EnumerationBudget, SearchError};
use crate::forest::ForestSpec;
use crate::graph::Graph;
use crate::graph6;
use crate::pattern::PatternGraph;
use crate::shifting::shift;
use num_bigint::BigUint;
use rand::SeedableRng;
use serde::Serialize;

/// Default seed for the random-graph probes.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone)]
pub struct ProbeConfig {
    /// Number of random graphs to probe (orders cycle through 4..=9,
    /// densities through 0.2 / 0.5 / 0.8).
    pub samples: usize,
    pub seed: u64,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig {
            samples: 200,
            seed: DEFAULT_SEED,
        }
    }
}

/// A shift that strictly decreased the number of copies of the pattern.
#[derive(Debug, Clone, Serialize)]
pub struct ShiftViolation {
    pub graph6: String,
    pub i: usize,
    pub j: usize,
    #[serde(serialize_with = "ser_big")]
    pub before: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub after: BigUint,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExploreRow {
    pub n: usize,
    #[serde(serialize_with = "ser_big")]
    pub max: BigUint,
    pub extremal: Vec<String>,
    pub iso_to_construction: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Problem1Report {
    pub pattern: PatternGraph,
    pub forest: ForestSpec,
    pub probe_samples: usize,
    pub probe_seed: u64,
    /// Monotonicity violations found by the probe (empty for patterns whose
    /// counts shifting cannot decrease).
    pub violations: Vec<ShiftViolation>,
    pub rows: Vec<ExploreRow>,
    /// True when every scanned order has a unique extremal graph isomorphic
    /// to the construction.
    pub construction_extremal_throughout: bool,
}

impl Problem1Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization")
    }
}

/// Probes shift monotonicity for `j` on random graphs, then brute-forces the
/// extremal sets for each order in `n_lo..=n_hi` and compares them with the
/// construction.
pub fn explore_problem1(
    j: &PatternGraph,
    f: &ForestSpec,
    n_lo: usize,
    n_hi: usize,
    budget: &EnumerationBudget,
    probe: &ProbeConfig,
) -> Result<Problem1Report, SearchError> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(probe.seed);
    let mut violations = Vec::new();
    for sample in 0..probe.samples {
        let n = 4 + sample % 6;
        let p = [0.2, 0.5, 0.8][sample % 3];
        let g = Graph::random(n, p, &mut rng);
        let before = copies_u128(j, &g);
        for i in 0..n {
            for jj in i + 1..n {
                let shifted = shift(&g, i, jj).expect("valid pair");
                let after = copies_u128(j, &shifted);
                if after < before {
                    violations.push(ShiftViolation {
                        graph6: graph6::encode(&g).expect("small graph"),
                        i,
                        j: jj,
                        before: BigUint::from(before),
                        after: BigUint::from(after),
                    });
                }
            }
        }
    }

    let mut rows = Vec::new();
    for n in n_lo..=n_hi {
        let report = brute_force_ex(n, j, f, budget)?;
        rows.push(ExploreRow {
            n,
            max: report.max_count,
            extremal: report.extremal,
            iso_to_construction: report.matches_construction,
        });
    }
    let construction_extremal_throughout =
        !rows.is_empty() && rows.iter().all(|row| row.iso_to_construction == Some(true));
    Ok(Problem1Report {
        pattern: j.clone(),
        forest: f.clone(),
        probe_samples: probe.samples,
        probe_seed: probe.seed,
        violations,
        rows,
        construction_extremal_throughout,
    })
}
