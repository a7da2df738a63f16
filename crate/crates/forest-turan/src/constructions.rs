//! The named graph families and their closed-form star counts.

use crate::combin::binomial;
use crate::forest::{tau, ForestSpec};
use crate::graph::{Graph, MAX_VERTICES};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("every path order must be at least 2, got {0}")]
    PartTooSmall(u32),
    #[error("order {n} is too small: need at least {required}")]
    OrderTooSmall { n: usize, required: usize },
    #[error("order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    OrderTooLarge(usize),
    #[error("star parameter must be at least 2, got {0}")]
    StarTooSmall(usize),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
}

fn check_forest(f: &ForestSpec) -> Result<usize, ConstructionError> {
    if let Some(&k) = f.parts().iter().find(|&&k| k < 2) {
        return Err(ConstructionError::PartTooSmall(k));
    }
    Ok(f.h() as usize)
}

/// Builds the conjectured extremal `F`-free graph of order `n`.
///
/// With `h = sum(floor(k_i/2)) - 1`:
/// * some part even: `K_h v (n-h) K_1`;
/// * all parts odd, not all 3: `K_h v ((n-h-2) K_1 u K_2)`;
/// * all parts equal to 3: `K_h v ((n-h)/2) K_2`, with one left-over
///   isolated vertex when `n - h` is odd.
///
/// Layout is deterministic: hub clique on `0..h`, then attachment pairs,
/// then independent vertices.
pub fn build_extremal(f: &ForestSpec, n: usize) -> Result<Graph, ConstructionError> {
    let required = f.order();
    check_forest(f)?;
    if n < required {
        return Err(ConstructionError::OrderTooSmall { n, required });
    }
    if n > MAX_VERTICES {
        return Err(ConstructionError::OrderTooLarge(n));
    }
    Ok(extremal_shape(f, n))
}

/// The extremal shape without the `n >= order(F)` feasibility check; used
/// internally where the family is compared against graphs of orders where
/// `F` cannot occur at all.
pub(crate) fn extremal_shape(f: &ForestSpec, n: usize) -> Graph {
    let h = f.h() as usize;
    let hub = Graph::complete(h);
    let rest = if f.is_tp3() {
        let pairs = (n - h) / 2;
        let single = (n - h) % 2;
        Graph::matching(pairs).disjoint_union(&Graph::empty(single))
    } else if f.eta() == 1 {
        Graph::matching(1).disjoint_union(&Graph::empty(n - h - 2))
    } else {
        Graph::empty(n - h)
    };
    hub.join(&rest)
}

/// Evaluates the closed-form maximum number of `S_r` copies over `F`-free
/// graphs of order `n`:
///
/// * general case: `h C(n-1,r) + (n-h) C(h,r) + 2 eta C(h,r-1)`;
/// * all parts equal to 3: `h C(n-1,r) + (n-h) C(h+1,r) + tau (C(h,r) - C(h+1,r))`.
pub fn theorem_value(f: &ForestSpec, n: usize, r: usize) -> Result<BigUint, ConstructionError> {
    if r < 2 {
        return Err(ConstructionError::StarTooSmall(r));
    }
    theorem_value_any_r(f, n, r)
}

/// Same formulas without the `r >= 2` restriction; `r = 1` is used by the
/// search module's diagnostic edge-count mode.
pub(crate) fn theorem_value_any_r(
    f: &ForestSpec,
    n: usize,
    r: usize,
) -> Result<BigUint, ConstructionError> {
    let h = check_forest(f)? as i64;
    let required = f.order();
    if n < required {
        return Err(ConstructionError::OrderTooSmall { n, required });
    }
    let n_i = n as i64;
    let r_i = r as i64;
    let value: BigInt = if f.is_tp3() {
        let t = BigInt::from(tau(n, h as usize));
        BigInt::from(binomial(n_i - 1, r_i)) * h
            + BigInt::from(binomial(h + 1, r_i)) * (n_i - h)
            + t * (BigInt::from(binomial(h, r_i)) - BigInt::from(binomial(h + 1, r_i)))
    } else {
        let eta = i64::from(f.eta());
        BigInt::from(binomial(n_i - 1, r_i)) * h
            + BigInt::from(binomial(h, r_i)) * (n_i - h)
            + BigInt::from(binomial(h, r_i - 1)) * (2 * eta)
    };
    Ok(value.try_into().expect("star counts are nonnegative"))
}

/// A named graph family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// The extremal construction for a forest with some part of order != 3.
    Extremal { forest: ForestSpec, n: usize },
    /// The extremal construction for `t` disjoint `P_3`s:
    /// `K_{t-1} v (pairs)`, plus a left-over vertex for odd `n - t + 1`.
    TP3 { t: usize, n: usize },
    /// `L_{t1,t2,h,h+1} = K_1 v (t1 K_h u t2 K_{h+1})`, center at vertex 0.
    L { t1: usize, t2: usize, h: usize },
    /// `L` plus one extra `K_{h+1}` tied to the center by a single edge.
    Fg { t1: usize, t2: usize, h: usize },
    /// `L` plus two extra `K_{h+1}`s, each tied to the center by one edge.
    Tg { t1: usize, t2: usize, h: usize },
    /// `3 K_{h+1}` plus a triangle through one vertex of each clique.
    U3h { h: usize },
    /// `K_2 v (n-4) K_1` with a triangle hung on one dominating vertex.
    H1 { n: usize },
    /// `H1(n-2)` with a second triangle hung on the other dominating vertex.
    H2 { n: usize },
    /// `K_2 v ((n-2)/2) K_2`, `n` even.
    Book2 { n: usize },
    /// `K_3 v ((n-3)/2) K_2`, `n` odd.
    Book3 { n: usize },
}

impl Family {
    /// The exact order of the built graph.
    pub fn order(&self) -> usize {
        match *self {
            Family::Extremal { n, .. } | Family::TP3 { n, .. } => n,
            Family::L { t1, t2, h } => t1 * h + t2 * (h + 1) + 1,
            Family::Fg { t1, t2, h } => t1 * h + (t2 + 1) * (h + 1) + 1,
            Family::Tg { t1, t2, h } => t1 * h + (t2 + 2) * (h + 1) + 1,
            Family::U3h { h } => 3 * h + 3,
            Family::H1 { n } | Family::H2 { n } | Family::Book2 { n } | Family::Book3 { n } => n,
        }
    }

    fn validate(&self) -> Result<(), ConstructionError> {
        let fail = |msg: String| Err(ConstructionError::InvalidFamily(msg));
        match *self {
            Family::Extremal { ref forest, n } => {
                check_forest(forest)?;
                if forest.is_tp3() {
                    return fail("forest has every part equal to 3; use the gtp3 family".into());
                }
                if n < forest.order() {
                    return Err(ConstructionError::OrderTooSmall {
                        n,
                        required: forest.order(),
                    });
                }
                Ok(())
            }
            Family::TP3 { t, n } => {
                if t < 1 {
                    return fail("tP3 needs t >= 1".into());
                }
                if n < 3 * t {
                    return Err(ConstructionError::OrderTooSmall { n, required: 3 * t });
                }
                Ok(())
            }
            Family::L { h, .. } | Family::Fg { h, .. } => {
                if h < 1 {
                    return fail(format!("h must be at least 1, got {h}"));
                }
                Ok(())
            }
            Family::Tg { h, .. } => {
                if h < 2 {
                    return fail(format!("the two-clique family needs h >= 2, got {h}"));
                }
                Ok(())
            }
            Family::U3h { h } => {
                if h < 1 {
                    return fail(format!("h must be at least 1, got {h}"));
                }
                Ok(())
            }
            Family::H1 { n } => {
                if n < 7 {
                    return Err(ConstructionError::OrderTooSmall { n, required: 7 });
                }
                Ok(())
            }
            Family::H2 { n } => {
                if n < 9 {
                    return Err(ConstructionError::OrderTooSmall { n, required: 9 });
                }
                Ok(())
            }
            Family::Book2 { n } => {
                if n < 4 || n % 2 != 0 {
                    return fail(format!("book over K_2 needs even n >= 4, got {n}"));
                }
                Ok(())
            }
            Family::Book3 { n } => {
                if n < 5 || n % 2 != 1 {
                    return fail(format!("book over K_3 needs odd n >= 5, got {n}"));
                }
                Ok(())
            }
        }
    }
}

/// Builds the named family member. Identified/center vertices sit at
/// deterministic low indices (the center, where there is one, is vertex 0).
pub fn build_family(fam: &Family) -> Result<Graph, ConstructionError> {
    fam.validate()?;
    if fam.order() > MAX_VERTICES {
        return Err(ConstructionError::OrderTooLarge(fam.order()));
    }
    let g = match *fam {
        Family::Extremal { ref forest, n } => extremal_shape(forest, n),
        Family::TP3 { t, n } => extremal_shape(&ForestSpec::new(vec![3; t]).expect("t >= 1"), n),
        Family::L { t1, t2, h } => build_l(t1, t2, h),
        Family::Fg { t1, t2, h } => attach_cliques(build_l(t1, t2, h), h + 1, 1),
        Family::Tg { t1, t2, h } => attach_cliques(build_l(t1, t2, h), h + 1, 2),
        Family::U3h { h } => {
            let clique = Graph::complete(h + 1);
            let mut g = clique.disjoint_union(&clique).disjoint_union(&clique);
            let (u, v, w) = (0, h + 1, 2 * (h + 1));
            g.add_edge(u, v);
            g.add_edge(v, w);
            g.add_edge(u, w);
            g
        }
        Family::H1 { n } => build_h1(n),
        Family::H2 { n } => {
            // Vertex 1 is the dominating vertex of H1(n-2) that was not
            // already identified with the first triangle; for n >= 9 it is
            // the unique vertex of second-largest degree there.
            let mut g = build_h1(n - 2).disjoint_union(&Graph::empty(2));
            g.add_edge(1, n - 2);
            g.add_edge(1, n - 1);
            g.add_edge(n - 2, n - 1);
            g
        }
        Family::Book2 { n } => Graph::complete(2).join(&Graph::matching((n - 2) / 2)),
        Family::Book3 { n } => Graph::complete(3).join(&Graph::matching((n - 3) / 2)),
    };
    debug_assert_eq!(g.n(), fam.order());
    Ok(g)
}

fn build_l(t1: usize, t2: usize, h: usize) -> Graph {
    let mut rest = Graph::empty(0);
    for _ in 0..t1 {
        rest = rest.disjoint_union(&Graph::complete(h));
    }
    for _ in 0..t2 {
        rest = rest.disjoint_union(&Graph::complete(h + 1));
    }
    Graph::complete(1).join(&rest)
}

/// Appends `count` cliques `K_size`, each joined to vertex 0 by one edge.
fn attach_cliques(base: Graph, size: usize, count: usize) -> Graph {
    let mut g = base;
    for _ in 0..count {
        let offset = g.n();
        g = g.disjoint_union(&Graph::complete(size));
        g.add_edge(0, offset);
    }
    g
}

fn build_h1(n: usize) -> Graph {
    // K_2 v (n-4) K_1 on 0..n-2, dominating pair {0, 1}; triangle 0, n-2, n-1.
    let mut g = Graph::complete(2)
        .join(&Graph::empty(n - 4))
        .disjoint_union(&Graph::empty(2));
    g.add_edge(0, n - 2);
    g.add_edge(0, n - 1);
    g.add_edge(n - 2, n - 1);
    g
}

/// Evaluates the displayed closed form for the family's number of `S_r`
/// copies. The two hung-triangle families have no displayed formula and are
/// evaluated from their audited degree sequences.
pub fn family_star_count(fam: &Family, r: usize) -> Result<BigUint, ConstructionError> {
    fam.validate()?;
    let r = r as i64;
    let b = |n: i64, k: i64| BigInt::from(binomial(n, k));
    let value: BigInt = match *fam {
        Family::Extremal { ref forest, n } => {
            let h = forest.h();
            let eta = i64::from(forest.eta());
            b(n as i64 - 1, r) * h + b(h, r) * (n as i64 - h) + b(h, r - 1) * (2 * eta)
        }
        Family::TP3 { t, n } => {
            let h = (t - 1) as i64;
            let t_corr = BigInt::from(tau(n, t - 1));
            b(n as i64 - 1, r) * h + b(h + 1, r) * (n as i64 - h) + t_corr * (b(h, r) - b(h + 1, r))
        }
        Family::L { t1, t2, h } => {
            let n = fam.order() as i64;
            let (t1, t2, h) = (t1 as i64, t2 as i64, h as i64);
            b(h, r) * (t1 * h) + b(h + 1, r) * (t2 * (h + 1)) + b(n - 1, r)
        }
        Family::Fg { t1, t2, h } => {
            let n = fam.order() as i64;
            let (t1, t2, h) = (t1 as i64, t2 as i64, h as i64);
            b(h, r) * ((t1 + 1) * h) + b(h + 1, r) * (t2 * (h + 1) + 1) + b(n - h - 1, r)
        }
        Family::Tg { t1, t2, h } => {
            let n = fam.order() as i64;
            let (t1, t2, h) = (t1 as i64, t2 as i64, h as i64);
            b(h, r) * ((t1 + 2) * h) + b(h + 1, r) * (t2 * (h + 1) + 2) + b(n - 2 * h - 1, r)
        }
        Family::U3h { h } => {
            let h = h as i64;
            b(h, r) * 3 + b(h, r - 1) * 6 + b(h, r - 2) * 3 + b(h, r) * (3 * h)
        }
        Family::H1 { n } => {
            // Degrees: n-1, n-3 once each, 2 everywhere else.
            let n = n as i64;
            b(n - 1, r) + b(n - 3, r) + b(2, r) * (n - 2)
        }
        Family::H2 { n } => {
            let n = n as i64;
            b(n - 3, r) * 2 + b(2, r) * (n - 2)
        }
        Family::Book2 { n } => {
            let n = n as i64;
            b(n - 1, r) * 2 + b(3, r) * (n - 2)
        }
        Family::Book3 { n } => {
            let n = n as i64;
            b(n - 1, r) * 3 + b(4, r) * (n - 3)
        }
    };
    debug_assert!(value >= BigInt::zero());
    Ok(value.try_into().expect("star counts are nonnegative"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::count::count_stars;
    use crate::forest::contains_forest;

    fn forest(text: &str) -> ForestSpec {
        ForestSpec::parse(text).unwrap()
    }

    #[test]
    fn extremal_shapes() {
        let g = build_extremal(&forest("4,2"), 10).unwrap();
        assert!(is_isomorphic(
            &g,
            &Graph::complete(2).join(&Graph::empty(8))
        ));

        let g = build_extremal(&forest("5,3"), 10).unwrap();
        let expect = Graph::complete(2).join(&Graph::matching(1).disjoint_union(&Graph::empty(6)));
        assert!(is_isomorphic(&g, &expect));

        let g = build_extremal(&forest("3,3"), 9).unwrap();
        assert!(is_isomorphic(
            &g,
            &Graph::complete(1).join(&Graph::matching(4))
        ));

        let g = build_extremal(&forest("3,3"), 10).unwrap();
        let expect = Graph::complete(1).join(&Graph::matching(4).disjoint_union(&Graph::empty(1)));
        assert!(is_isomorphic(&g, &expect));
    }

    #[test]
    fn extremal_rejects_bad_parameters() {
        assert_eq!(
            build_extremal(&forest("4,2"), 5),
            Err(ConstructionError::OrderTooSmall { n: 5, required: 6 })
        );
        assert_eq!(
            build_extremal(&forest("4,1"), 10),
            Err(ConstructionError::PartTooSmall(1))
        );
        assert!(matches!(
            theorem_value(&forest("4,2"), 10, 1),
            Err(ConstructionError::StarTooSmall(1))
        ));
    }

    #[test]
    fn theorem_values() {
        assert_eq!(theorem_value(&forest("4,2"), 10, 2).unwrap(), 80u32.into());
        assert_eq!(theorem_value(&forest("3,5"), 10, 2).unwrap(), 84u32.into());
        assert_eq!(theorem_value(&forest("3,3"), 9, 2).unwrap(), 36u32.into());
        // Far beyond graph range the formula stays exact:
        // 2 C(9999,2) + 9998 = 9998 * 10000.
        assert_eq!(
            theorem_value(&forest("4,2"), 10_000, 2).unwrap(),
            BigUint::from(99_980_000u64)
        );
    }

    #[test]
    fn single_path_case_reduces_to_the_one_part_formula() {
        // t = 1: h = floor(k/2) - 1 and the general closed form becomes the
        // single-path one.
        for k in [4u32, 5, 6, 7] {
            let f = ForestSpec::new(vec![k]).unwrap();
            let h = (k / 2 - 1) as i64;
            let eta = i64::from(k % 2 == 1);
            for n in f.order()..=30 {
                let g = build_extremal(&f, n).unwrap();
                for r in 2i64..=4 {
                    let direct = binomial(n as i64 - 1, r) * BigUint::from(h as u64)
                        + binomial(h, r) * BigUint::from((n as i64 - h) as u64)
                        + binomial(h, r - 1) * BigUint::from(2 * eta as u64);
                    assert_eq!(theorem_value(&f, n, r as usize).unwrap(), direct);
                    assert_eq!(count_stars(&g, r as usize), direct, "k={k} n={n} r={r}");
                }
            }
        }
    }

    #[test]
    fn formula_matches_direct_count_on_small_battery() {
        for text in ["2,2", "4,2", "3,2", "5,3", "3,3", "3,3,3"] {
            let f = forest(text);
            for n in f.order()..=18 {
                let g = build_extremal(&f, n).unwrap();
                for r in 2..=5 {
                    assert_eq!(
                        theorem_value(&f, n, r).unwrap(),
                        count_stars(&g, r),
                        "F={text} n={n} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn constructions_are_forest_free() {
        for text in ["2,2", "4,2", "5,3", "3,3", "3,3,3"] {
            let f = forest(text);
            for n in f.order()..=14 {
                let g = build_extremal(&f, n).unwrap();
                assert!(!contains_forest(&g, &f), "F={text} n={n}");
            }
        }
    }

    #[test]
    fn attached_pair_identity_for_all_odd_forests() {
        // (n-h) C(h,r) + 2 C(h,r-1) = (n-h-2) C(h,r) + 2 C(h+1,r):
        // both sides count the non-hub stars of the all-odd construction.
        for h in 1i64..=6 {
            for n in (h + 2)..=30 {
                for r in 2i64..=5 {
                    let lhs =
                        binomial(h, r) * BigUint::from((n - h) as u64) + binomial(h, r - 1) * 2u32;
                    let rhs = binomial(h, r) * BigUint::from((n - h - 2) as u64)
                        + binomial(h + 1, r) * 2u32;
                    assert_eq!(lhs, rhs, "h={h} n={n} r={r}");
                }
            }
        }
    }

    #[test]
    fn family_orders_and_audits() {
        let l = build_family(&Family::L { t1: 2, t2: 0, h: 3 }).unwrap();
        assert_eq!(l.n(), 7);
        let mut degs = l.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![3, 3, 3, 3, 3, 3, 6]);

        let u = build_family(&Family::U3h { h: 2 }).unwrap();
        assert_eq!(u.n(), 9);
        let mut degs = u.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 2, 2, 2, 2, 4, 4, 4]);

        let h1 = build_family(&Family::H1 { n: 7 }).unwrap();
        let mut degs = h1.degrees();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![6, 4, 2, 2, 2, 2, 2]);

        for fam in [
            Family::Fg { t1: 1, t2: 1, h: 2 },
            Family::Tg { t1: 2, t2: 1, h: 3 },
            Family::H2 { n: 9 },
            Family::Book2 { n: 10 },
            Family::Book3 { n: 9 },
        ] {
            assert_eq!(build_family(&fam).unwrap().n(), fam.order(), "{fam:?}");
        }
    }

    #[test]
    fn family_formulas_match_direct_counts() {
        assert_eq!(
            family_star_count(&Family::L { t1: 2, t2: 0, h: 3 }, 2).unwrap(),
            33u32.into()
        );
        assert_eq!(
            family_star_count(&Family::U3h { h: 2 }, 2).unwrap(),
            24u32.into()
        );
        assert_eq!(
            family_star_count(&Family::Book2 { n: 10 }, 2).unwrap(),
            96u32.into()
        );

        let families = [
            Family::L { t1: 1, t2: 2, h: 3 },
            Family::Fg { t1: 0, t2: 1, h: 2 },
            Family::Tg { t1: 1, t2: 0, h: 2 },
            Family::U3h { h: 4 },
            Family::H1 { n: 9 },
            Family::H2 { n: 11 },
            Family::Book2 { n: 12 },
            Family::Book3 { n: 11 },
            Family::Extremal {
                forest: ForestSpec::parse("5,3").unwrap(),
                n: 13,
            },
            Family::TP3 { t: 3, n: 12 },
            Family::TP3 { t: 3, n: 13 },
        ];
        for fam in families {
            let g = build_family(&fam).unwrap();
            for r in 0..=5 {
                assert_eq!(
                    family_star_count(&fam, r).unwrap(),
                    count_stars(&g, r),
                    "{fam:?} r={r}"
                );
            }
        }
    }

    #[test]
    fn h2_second_largest_degree_vertex_is_unique() {
        for n in 9..=14 {
            let h1 = build_h1(n - 2);
            let mut degs: Vec<(usize, usize)> = (0..h1.n()).map(|v| (h1.degree(v), v)).collect();
            degs.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(degs[0].1, 0);
            assert_eq!(degs[1].1, 1, "n={n}");
            assert!(
                degs[1].0 > degs[2].0,
                "second-largest degree must be unique"
            );
        }
    }
}
