//! Corpus-wide checks shared by the property tests and the acceptance
//! suite. Each panics on the first violation and returns how many cases it
//! examined.

use nps_core::arith::{factorize, gcd};
use nps_core::census::formula_sweep;
use nps_core::family::{builtin_presentation, theorem_catalog, FamilySpec};
use nps_core::group::{direct_product, quotient};
use nps_core::iso::are_isomorphic;
use nps_core::lattice::{all_subgroups, counts, power_subgroup, CountSummary};
use nps_core::presentation::{coset_enumerate, DEFAULT_MAX_COSETS};
use nps_core::Group;

pub struct Entry {
    pub name: String,
    pub group: Group,
    pub counts: CountSummary,
}

pub fn counted_corpus(max_order: usize) -> Vec<Entry> {
    super::construction_corpus(max_order)
        .into_iter()
        .map(|(name, group)| {
            let counts = counts(&group).unwrap();
            Entry { name, group, counts }
        })
        .collect()
}

/// A cyclic power subgroup of order `p^k` equals `G^(e/p^k)`, so two such
/// subgroups of the same order coincide.
pub fn cyclic_power_uniqueness(corpus: &[Entry]) -> usize {
    let mut checked = 0;
    for e in corpus {
        let g = &e.group;
        let lattice = all_subgroups(g).unwrap();
        let exp = g.exponent();
        for (&m, &i) in lattice.power_index() {
            let h = lattice.get(i);
            if !lattice.is_cyclic(i) || h.size() == 1 {
                continue;
            }
            let f = factorize(h.size() as u64);
            if f.len() != 1 {
                continue;
            }
            let (p, k) = f[0];
            let canonical = exp / p.pow(k) as usize;
            assert_eq!(h, &power_subgroup(g, canonical), "{}: G^{m} vs G^{canonical}", e.name);
            checked += 1;
        }
    }
    checked
}

/// For odd `p` with a noncyclic Sylow `p`-subgroup, at least `pf - k + 1`
/// cyclic nonpower `p`-subgroups.
pub fn cyclic_nonpower_lower_bound(corpus: &[Entry]) -> usize {
    let mut checked = 0;
    for e in corpus {
        let lattice = all_subgroups(&e.group).unwrap();
        for pd in e.counts.primes.iter().filter(|pd| pd.p != 2) {
            if lattice.sylow(pd.p as usize).is_cyclic(&e.group) {
                continue;
            }
            let bound = (pd.p * pd.f as u64) as i64 - pd.k as i64 + 1;
            let count = lattice.cyclic_nonpower_p_count(pd.p as usize);
            assert!(count as i64 >= bound, "{}: p = {}, count {count} < {bound}", e.name, pd.p);
            checked += 1;
        }
    }
    checked
}

/// `nps(A x B) = nps(A) s(B) + ps(A) nps(B)` and `ps(A x B) = ps(A) ps(B)`
/// for nontrivial coprime pairs with `|A||B| <= max_order`.
pub fn coprime_products(corpus: &[Entry], max_order: usize) -> usize {
    let mut pairs = 0;
    for (i, a) in corpus.iter().enumerate() {
        for b in &corpus[i + 1..] {
            let (x, y) = (a.group.order(), b.group.order());
            if x == 1 || y == 1 || x * y > max_order || gcd(x as u64, y as u64) != 1 {
                continue;
            }
            let c = counts(&direct_product(&a.group, &b.group, max_order).unwrap()).unwrap();
            let (ca, cb) = (&a.counts, &b.counts);
            assert_eq!(c.nps, ca.nps * cb.s + ca.ps * cb.nps, "{} x {}", a.name, b.name);
            assert_eq!(c.ps, ca.ps * cb.ps, "{} x {}", a.name, b.name);
            pairs += 1;
        }
    }
    pairs
}

/// `nps(G/N) <= nps(G)` for every normal subgroup of every group of order
/// at most `max_order`.
pub fn quotient_monotonicity(corpus: &[Entry], max_order: usize) -> usize {
    let mut checked = 0;
    for e in corpus.iter().filter(|e| e.group.order() <= max_order) {
        let lattice = all_subgroups(&e.group).unwrap();
        for n in lattice.normal_subgroups() {
            let (q, _) = quotient(&e.group, n).unwrap();
            let qn = counts(&q).unwrap().nps;
            assert!(qn <= e.counts.nps, "{}: quotient by a normal subgroup of order {} has nps {qn}", e.name, n.size());
            checked += 1;
        }
    }
    checked
}

/// `G^m = G^gcd(m, e)` for all `m <= e` on groups of order at most `max_order`.
pub fn power_gcd(corpus: &[Entry], max_order: usize) -> usize {
    let mut checked = 0;
    for e in corpus.iter().filter(|e| e.group.order() <= max_order) {
        let exp = e.group.exponent();
        for m in 1..=exp {
            let d = gcd(m as u64, exp as u64) as usize;
            assert_eq!(power_subgroup(&e.group, m), power_subgroup(&e.group, d), "{}: m = {m}", e.name);
            checked += 1;
        }
    }
    checked
}

/// Family instances of order at most `max_order` that have a built-in
/// presentation, drawn from the formula sweep and the bucket instances.
pub fn presented_instances(max_order: usize) -> Vec<FamilySpec> {
    let mut specs: Vec<FamilySpec> = formula_sweep(4, max_order);
    specs.extend((0..=13).flat_map(|k| theorem_catalog(k).into_iter().flat_map(|m| m.instances(4, max_order as u64))));
    specs.sort_by_key(|s| s.to_string());
    specs.dedup();
    specs.retain(|s| builtin_presentation(s).is_ok());
    specs
}

/// Coset enumeration reproduces the order of every presented instance and
/// a group isomorphic to the explicit construction.
pub fn presentation_round_trip(max_order: usize) -> usize {
    let specs = presented_instances(max_order);
    for spec in &specs {
        let p = builtin_presentation(spec).unwrap();
        let (order, presented) = coset_enumerate(&p, DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(order as u64, spec.order().unwrap(), "{spec}");
        let explicit = spec.build_explicit().unwrap();
        assert!(are_isomorphic(&presented, &explicit).unwrap(), "{spec}");
    }
    specs.len()
}
