//! Shared helpers for integration tests: independent oracles and the
//! standing battery of test forests.

#![allow(dead_code)]

use forest_turan::{ForestSpec, Graph};

/// Forest battery: single paths, all-even, mixed, all-odd and all-P_3
/// shapes.
pub fn battery() -> Vec<ForestSpec> {
    let singles = ["3", "6", "7"];
    let all_even = ["2,2", "4,2", "4,4", "6,2"];
    let mixed = ["3,2", "4,3", "5,2"];
    let all_odd = ["5,3", "5,5", "3,3,5"];
    let triples = ["3,3", "3,3,3", "3,3,3,3"];
    singles
        .iter()
        .chain(&all_even)
        .chain(&mixed)
        .chain(&all_odd)
        .chain(&triples)
        .map(|text| ForestSpec::parse(text).expect("battery forests parse"))
        .collect()
}

/// Naive containment oracle, independent of the production search: try every
/// assignment of disjoint vertex subsets to the parts and check each induced
/// subgraph for a spanning path by permuting its vertices.
pub fn naive_contains_forest(g: &Graph, f: &ForestSpec) -> bool {
    fn subsets(
        pool: &[usize],
        k: usize,
        start: usize,
        acc: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if acc.len() == k {
            return f(acc);
        }
        for idx in start..pool.len() {
            acc.push(pool[idx]);
            if subsets(pool, k, idx + 1, acc, f) {
                acc.pop();
                return true;
            }
            acc.pop();
        }
        false
    }

    fn spanning_path_exists(g: &Graph, verts: &[usize]) -> bool {
        if verts.len() <= 1 {
            return true;
        }
        permutations(&mut verts.to_vec(), 0, &mut |order| {
            order.windows(2).all(|w| g.has_edge(w[0], w[1]))
        })
    }

    fn permutations(
        items: &mut Vec<usize>,
        k: usize,
        test: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if k == items.len() {
            return test(items);
        }
        for i in k..items.len() {
            items.swap(k, i);
            if permutations(items, k + 1, test) {
                items.swap(k, i);
                return true;
            }
            items.swap(k, i);
        }
        false
    }

    fn place(g: &Graph, parts: &[u32], idx: usize, used: u64) -> bool {
        if idx == parts.len() {
            return true;
        }
        let free: Vec<usize> = (0..g.n()).filter(|&v| used >> v & 1 == 0).collect();
        let k = parts[idx] as usize;
        if free.len() < k {
            return false;
        }
        let mut acc = Vec::new();
        subsets(&free, k, 0, &mut acc, &mut |chosen| {
            if !spanning_path_exists(g, chosen) {
                return false;
            }
            let mut next_used = used;
            for &v in chosen {
                next_used |= 1 << v;
            }
            place(g, parts, idx + 1, next_used)
        })
    }

    place(g, f.parts(), 0, 0)
}

/// All multisets of path orders (each at least 1) with total order at most
/// `max_order`, as forest specs.
pub fn all_forests_up_to(max_order: u32) -> Vec<ForestSpec> {
    fn partitions(total: u32, max_part: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if total == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=max_part.min(total)).rev() {
            acc.push(part);
            partitions(total - part, part, acc, out);
            acc.pop();
        }
    }
    let mut lists = Vec::new();
    for order in 1..=max_order {
        partitions(order, order, &mut Vec::new(), &mut lists);
    }
    lists
        .into_iter()
        .map(|parts| ForestSpec::new(parts).expect("nonempty"))
        .collect()
}
