#![allow(dead_code)]

//! Shared test support: a naive subgroup oracle that only touches the
//! multiplication table, and the construction corpus used by the property
//! suites.

pub mod checks;

use std::collections::{BTreeSet, HashSet};

use nps_core::census::{formula_sweep, CorpusEntry};
use nps_core::family::{theorem_catalog, FamilySpec};
use nps_core::Group;

/// Members of the subgroup generated by `gens`, as a sorted list.
pub fn naive_closure(g: &Group, gens: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let gens: Vec<u32> = gens.into_iter().collect();
    let mut members: BTreeSet<u32> = BTreeSet::from([0]);
    let mut frontier = vec![0u32];
    while let Some(x) = frontier.pop() {
        for &s in &gens {
            let y = g.mul(x, s);
            if members.insert(y) {
                frontier.push(y);
            }
        }
    }
    members.into_iter().collect()
}

fn naive_pow(g: &Group, x: u32, m: usize) -> u32 {
    (0..m).fold(0, |acc, _| g.mul(acc, x))
}

pub fn naive_exponent(g: &Group) -> usize {
    let mut e = 1usize;
    for x in 0..g.order() as u32 {
        let mut k = 1usize;
        let mut y = x;
        while y != 0 {
            y = g.mul(y, x);
            k += 1;
        }
        e = e / gcd(e, k) * k;
    }
    e
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `G^m` generated by every `m`-th power.
pub fn naive_power_subgroup(g: &Group, m: usize) -> Vec<u32> {
    let powers: BTreeSet<u32> = (0..g.order() as u32).map(|x| naive_pow(g, x, m)).collect();
    naive_closure(g, powers)
}

/// All subgroups, found by joining single elements onto known subgroups
/// starting from the trivial one.
pub fn naive_subgroups(g: &Group) -> HashSet<Vec<u32>> {
    let n = g.order() as u32;
    let mut seen: HashSet<Vec<u32>> = HashSet::from([vec![0]]);
    let mut work = vec![vec![0u32]];
    while let Some(h) = work.pop() {
        let inside: HashSet<u32> = h.iter().copied().collect();
        for x in 0..n {
            if inside.contains(&x) {
                continue;
            }
            let k = naive_closure(g, h.iter().copied().chain([x]));
            if seen.insert(k.clone()) {
                work.push(k);
            }
        }
    }
    seen
}

/// Subgroups found by testing every subset containing the identity for
/// closure. Only practical up to order 16.
pub fn exhaustive_subgroup_count(g: &Group) -> usize {
    let n = g.order();
    assert!(n <= 16, "exhaustive search is limited to order 16");
    let rest = n - 1;
    let mut count = 0;
    for mask in 0u32..(1 << rest) {
        let member = |x: u32| x == 0 || mask & (1 << (x - 1)) != 0;
        let elems: Vec<u32> = (0..n as u32).filter(|&x| member(x)).collect();
        if elems.iter().all(|&a| elems.iter().all(|&b| member(g.mul(a, b)))) {
            count += 1;
        }
    }
    count
}

/// `(s, ps, nps)` from the naive oracle, with `ps` taken over every
/// `m` in `1..=e`.
pub fn oracle_counts(g: &Group) -> (usize, usize, usize) {
    let s = naive_subgroups(g).len();
    let e = naive_exponent(g);
    let powers: HashSet<Vec<u32>> = (1..=e).map(|m| naive_power_subgroup(g, m)).collect();
    (s, powers.len(), s - powers.len())
}

pub fn build(text: &str) -> Group {
    let spec: FamilySpec = text.parse().unwrap_or_else(|e| panic!("{text}: {e}"));
    spec.build().unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// The fixed control corpus shipped with the command-line tool.
pub fn control_corpus() -> Vec<(String, Group)> {
    let text = include_str!("../../../cli/data/controls.json");
    let entries: Vec<CorpusEntry> = serde_json::from_str(text).unwrap();
    entries.iter().map(|e| (e.name.clone(), e.build(600).unwrap())).collect()
}

/// Bucket members at minimal parameters, the formula sweep, and the
/// controls, restricted to order at most `max_order`. Duplicate labels are
/// dropped.
pub fn construction_corpus(max_order: usize) -> Vec<(String, Group)> {
    let mut specs: Vec<FamilySpec> =
        (0..=13).flat_map(|k| theorem_catalog(k).into_iter().map(|m| m.minimal_instance())).collect();
    specs.extend(formula_sweep(3, max_order));
    let mut seen = HashSet::new();
    let mut out: Vec<(String, Group)> = Vec::new();
    for spec in specs {
        if spec.order().is_none_or(|o| o > max_order as u64) || !seen.insert(spec.to_string()) {
            continue;
        }
        out.push((spec.to_string(), spec.build_capped(max_order).unwrap()));
    }
    for (name, g) in control_corpus() {
        if g.order() <= max_order && seen.insert(name.clone()) {
            out.push((name, g));
        }
    }
    out
}
