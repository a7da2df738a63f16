//! Exact star counting in graphs that avoid a fixed linear forest.
//!
//! The crate provides:
//!
//! * closed-form evaluators and explicit constructions for the graphs that
//!   maximize the number of stars `S_r` among `F`-free graphs, where `F` is
//!   a disjoint union of paths;
//! * the edge-shifting operation with its exact star-count delta;
//! * an exhaustive search engine that enumerates `F`-free graphs at small
//!   orders (labeled, or one representative per isomorphism class), recomputes
//!   the extremal values independently, and checks the structural
//!   classification of forest-free graphs with large minimum degree.
//!
//! All counts are exact; anything that can overflow machine words is returned
//! as a [`num_bigint::BigUint`].
//!
//! ```
//! use forest_turan::{build_extremal, count_stars, theorem_value, ForestSpec};
//!
//! let f = ForestSpec::parse("4,2")?;
//! let g = build_extremal(&f, 10)?;
//! assert_eq!(count_stars(&g, 2), theorem_value(&f, 10, 2)?); // both 80
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

#![forbid(unsafe_code)]

pub mod canon;
pub mod combin;
pub mod constructions;
pub mod count;
pub mod forest;
pub mod graph;
pub mod graph6;
pub mod pattern;
pub mod search;
pub mod shifting;

pub use canon::{canonical_form, canonical_graph, is_isomorphic, CanonicalForm};
pub use combin::binomial;
pub use constructions::{build_extremal, build_family, family_star_count, theorem_value, Family};
pub use count::{count_copies, count_stars, is_subgraph_of};
pub use forest::{contains_forest, is_forest_free, tau, ForestSpec};
pub use graph::{Graph, GraphError};
pub use pattern::{PatternGraph, PatternKind};
pub use search::{
    brute_force_ex, enumerate_free_graphs, explore_problem1, find_threshold, verify_classification,
    EnumMode, EnumerationBudget,
};
pub use shifting::{shift, shift_closure, shift_delta, ShiftDelta};
