//! Full subgroup lattices, power subgroups and the `s / ps / nps` counts.

mod counts;
mod structure;

use std::collections::{BTreeMap, HashMap};

use crate::arith::divisors;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};

pub use counts::{counts, counts_capped, CountSummary, PrimeData};
pub use structure::{frattini, omega, sylow};

/// Default ceiling on the order of groups whose lattice we enumerate.
pub const DEFAULT_LATTICE_CAP: usize = 600;

/// Every subgroup of a group, sorted by `(size, member set)`.
#[derive(Debug)]
pub struct Lattice<'g> {
    group: &'g Group,
    subgroups: Vec<Subgroup>,
    index: HashMap<BitSet, usize>,
    normal: Vec<bool>,
    cyclic: Vec<bool>,
    classes: Vec<Vec<usize>>,
    power_index: BTreeMap<usize, usize>,
}

/// Enumerates all subgroups of `g` with the default order cap.
pub fn all_subgroups(g: &Group) -> Result<Lattice<'_>> {
    all_subgroups_capped(g, DEFAULT_LATTICE_CAP)
}

/// Enumerates all subgroups as the closure of the cyclic subgroups under
/// joins. Every subgroup is a join of cyclic subgroups, so joining each
/// discovered subgroup with each cyclic subgroup reaches all of them.
pub fn all_subgroups_capped(g: &Group, cap: usize) -> Result<Lattice<'_>> {
    if g.order() > cap {
        return Err(Error::LatticeCap { order: g.order(), cap });
    }
    let mut found: Vec<Subgroup> = Vec::new();
    let mut index: HashMap<BitSet, usize> = HashMap::new();
    let mut cyclic_gens: Vec<u32> = Vec::new();
    for x in 0..g.order() as u32 {
        let c = g.subgroup_generated([x]);
        if !index.contains_key(c.members()) {
            index.insert(c.members().clone(), found.len());
            found.push(c);
            cyclic_gens.push(x);
        }
    }
    let mut head = 0;
    while head < found.len() {
        let h = found[head].clone();
        head += 1;
        for &c in &cyclic_gens {
            if h.contains(c) {
                continue;
            }
            let j = g.join_element(&h, c);
            if !index.contains_key(j.members()) {
                index.insert(j.members().clone(), found.len());
                found.push(j);
            }
        }
    }
    Ok(Lattice::from_subgroups(g, found))
}

impl<'g> Lattice<'g> {
    fn from_subgroups(g: &'g Group, mut subgroups: Vec<Subgroup>) -> Lattice<'g> {
        subgroups.sort();
        let index: HashMap<BitSet, usize> =
            subgroups.iter().enumerate().map(|(i, s)| (s.members().clone(), i)).collect();
        let normal = subgroups.iter().map(|s| g.is_normal(s)).collect();
        let cyclic = subgroups.iter().map(|s| s.is_cyclic(g)).collect();

        let mut class_of = vec![usize::MAX; subgroups.len()];
        let mut classes = Vec::new();
        for i in 0..subgroups.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[i] = id;
            let mut orbit = vec![i];
            let mut head = 0;
            while head < orbit.len() {
                let s = &subgroups[orbit[head]];
                head += 1;
                for &x in g.generators() {
                    let c = g.conjugate_subgroup(s, x);
                    let j = index[c.members()];
                    if class_of[j] == usize::MAX {
                        class_of[j] = id;
                        orbit.push(j);
                    }
                }
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }

        let power_index = divisors(g.exponent() as u64)
            .into_iter()
            .map(|m| {
                let p = power_subgroup(g, m as usize);
                (m as usize, index[p.members()])
            })
            .collect();

        Lattice { group: g, subgroups, index, normal, cyclic, classes, power_index }
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    /// Position of a subgroup in the sorted list.
    pub fn position(&self, sub: &Subgroup) -> Option<usize> {
        self.index.get(sub.members()).copied()
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    pub fn is_cyclic(&self, i: usize) -> bool {
        self.cyclic[i]
    }

    /// Conjugacy classes of subgroups as sorted index lists.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Map from each divisor `m` of the exponent to the index of `G^m`.
    pub fn power_index(&self) -> &BTreeMap<usize, usize> {
        &self.power_index
    }

    pub fn is_power(&self, i: usize) -> bool {
        self.power_index.values().any(|&j| j == i)
    }

    /// Indices of the distinct power subgroups, ascending.
    pub fn power_subgroup_indices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.power_index.values().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn normal_subgroups(&self) -> impl Iterator<Item = &Subgroup> + '_ {
        self.subgroups.iter().zip(&self.normal).filter_map(|(s, &n)| n.then_some(s))
    }

    /// Proper subgroups not contained in any other proper subgroup.
    pub fn maximal_subgroups(&self) -> Vec<usize> {
        let top = self.subgroups.len() - 1;
        (0..top)
            .filter(|&i| {
                let s = &self.subgroups[i];
                (i + 1..top).all(|j| {
                    let t = &self.subgroups[j];
                    t.size() == s.size() || !s.is_subgroup_of(t)
                })
            })
            .collect()
    }

    /// Number of cyclic subgroups of order `p^j`, `j >= 1`, that are not
    /// power subgroups.
    pub fn cyclic_nonpower_p_count(&self, p: usize) -> usize {
        (0..self.len())
            .filter(|&i| {
                let size = self.subgroups[i].size();
                size > 1 && is_power_of(size, p) && self.cyclic[i] && !self.is_power(i)
            })
            .count()
    }
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// `G^m`, the subgroup generated by all `m`-th powers.
pub fn power_subgroup(g: &Group, m: usize) -> Subgroup {
    assert!(m >= 1, "power subgroup needs m >= 1");
    let m = m as i64;
    g.subgroup_generated((0..g.order() as u32).map(|x| g.pow(x, m)))
}

/// `G^m` for every divisor `m` of the exponent.
pub fn power_subgroups(g: &Group) -> BTreeMap<usize, Subgroup> {
    divisors(g.exponent() as u64).into_iter().map(|m| (m as usize, power_subgroup(g, m as usize))).collect()
}

/// The distinct conjugates of `h` in `g`, sorted.
pub fn conjugates(g: &Group, h: &Subgroup) -> Result<Vec<Subgroup>> {
    if h.members().capacity() != g.order() {
        return Err(Error::NotSubgroup("subgroup of a different group".into()));
    }
    let mut out: Vec<Subgroup> = vec![h.clone()];
    let mut head = 0;
    while head < out.len() {
        let s = out[head].clone();
        head += 1;
        for &x in g.generators() {
            let c = g.conjugate_subgroup(&s, x);
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    out.sort();
    Ok(out)
}
