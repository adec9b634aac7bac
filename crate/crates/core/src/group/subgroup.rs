use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use super::Group;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A subgroup of some parent [`Group`], stored as a membership bitset over the
/// parent's element indices together with a small generating set.
///
/// The parent is not referenced; operations take it explicitly. Equality,
/// hashing and ordering look only at the member set, ordered by size first.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: BitSet,
    size: usize,
    generators: Vec<u32>,
}

impl Subgroup {
    pub fn trivial(parent: &Group) -> Subgroup {
        let mut members = BitSet::new(parent.order());
        members.insert(0);
        Subgroup { members, size: 1, generators: Vec::new() }
    }

    pub fn whole(parent: &Group) -> Subgroup {
        Subgroup {
            members: BitSet::full(parent.order()),
            size: parent.order(),
            generators: parent.generators().to_vec(),
        }
    }

    /// Wraps a member set after checking it is a subgroup of `parent`.
    pub fn from_members(parent: &Group, members: BitSet) -> Result<Subgroup> {
        if members.capacity() != parent.order() || !members.contains(0) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        let elems: Vec<u32> = members.iter().map(|x| x as u32).collect();
        for &x in &elems {
            if !members.contains(parent.inv(x) as usize) {
                return Err(Error::NotSubgroup(format!("not closed under inverse at {x}")));
            }
            for &y in &elems {
                if !members.contains(parent.mul(x, y) as usize) {
                    return Err(Error::NotSubgroup(format!("{x}*{y} escapes the set")));
                }
            }
        }
        let sub = parent.subgroup_generated(elems.iter().copied());
        Ok(Subgroup { size: elems.len(), members, generators: sub.generators })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.members.contains(x as usize)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().map(|x| x as u32)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.size <= other.size && self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub fn is_cyclic(&self, parent: &Group) -> bool {
        let orders = parent.element_orders();
        self.elements().any(|x| orders[x as usize] as usize == self.size)
    }

    pub fn intersection(&self, parent: &Group, other: &Subgroup) -> Subgroup {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        let gens = parent.subgroup_generated(members.iter().map(|x| x as u32)).generators;
        Subgroup { size: members.count(), members, generators: gens }
    }

    /// The subgroup as a group in its own right, with elements renumbered
    /// in increasing parent-index order.
    pub fn to_group(&self, parent: &Group) -> Group {
        let elems: Vec<u32> = self.elements().collect();
        let mut local = vec![u32::MAX; parent.order()];
        for (i, &x) in elems.iter().enumerate() {
            local[x as usize] = i as u32;
        }
        let n = elems.len();
        let mut table = Vec::with_capacity(n * n);
        for &x in &elems {
            for &y in &elems {
                table.push(local[parent.mul(x, y) as usize]);
            }
        }
        let gens = self.generators.iter().map(|&g| local[g as usize]).collect();
        Group::from_table(n, table, gens).expect("subgroup table is a group")
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size.cmp(&other.size).then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Group {
    /// The subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: impl IntoIterator<Item = u32>) -> Subgroup {
        let mut sub = Subgroup::trivial(self);
        for g in gens {
            if !sub.contains(g) {
                sub = self.join_element(&sub, g);
            }
        }
        sub
    }

    /// `<H, x>` for a subgroup `H` and an element `x`.
    ///
    /// Grows the result one right coset `Hz` at a time, multiplying only coset
    /// representatives by the generators.
    pub fn join_element(&self, sub: &Subgroup, x: u32) -> Subgroup {
        if sub.contains(x) {
            return sub.clone();
        }
        let mut gens = sub.generators.clone();
        gens.push(x);
        let base: Vec<u32> = sub.elements().collect();
        let mut members = sub.members.clone();
        let mut size = sub.size;
        let mut reps = vec![0u32];
        let mut head = 0;
        while head < reps.len() {
            let t = reps[head];
            head += 1;
            for &g in &gens {
                let z = self.mul(t, g);
                if members.contains(z as usize) {
                    continue;
                }
                for &h in &base {
                    members.insert(self.mul(h, z) as usize);
                }
                size += base.len();
                reps.push(z);
            }
        }
        Subgroup { members, size, generators: gens }
    }

    /// The smallest subgroup containing both `a` and `b`.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let (big, small) = if a.size >= b.size { (a, b) } else { (b, a) };
        let mut out = big.clone();
        for &g in &small.generators {
            if !out.contains(g) {
                out = self.join_element(&out, g);
            }
        }
        out
    }

    /// `{ z : zx = xz for all x }`.
    pub fn center(&self) -> Subgroup {
        let gens = self.generators();
        let elems = (0..self.order() as u32).filter(|&z| gens.iter().all(|&g| self.mul(z, g) == self.mul(g, z)));
        self.subgroup_generated(elems)
    }

    /// The subgroup generated by all commutators `[x, y]`.
    pub fn derived_subgroup(&self) -> Subgroup {
        let n = self.order() as u32;
        let mut sub = Subgroup::trivial(self);
        for x in 0..n {
            for y in 0..n {
                let c = self.commutator(x, y);
                if !sub.contains(c) {
                    sub = self.join_element(&sub, c);
                }
            }
        }
        sub
    }

    pub fn conjugate_subgroup(&self, sub: &Subgroup, g: u32) -> Subgroup {
        let mut members = BitSet::new(self.order());
        for h in sub.elements() {
            members.insert(self.conjugate(h, g) as usize);
        }
        let generators = sub.generators.iter().map(|&h| self.conjugate(h, g)).collect();
        Subgroup { members, size: sub.size, generators }
    }

    pub fn is_normal(&self, sub: &Subgroup) -> bool {
        self.generators().iter().all(|&g| sub.generators.iter().all(|&h| sub.contains(self.conjugate(h, g))))
    }

    /// The normaliser `N_G(H)`.
    pub fn normalizer(&self, sub: &Subgroup) -> Subgroup {
        let elems =
            (0..self.order() as u32).filter(|&g| sub.generators.iter().all(|&h| sub.contains(self.conjugate(h, g))));
        self.subgroup_generated(elems)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_product, DEFAULT_ORDER_CAP};

    fn sym3() -> Group {
        Group::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]]).unwrap()
    }

    #[test]
    fn generated_subgroups() {
        let c12 = Group::cyclic(12);
        assert_eq!(c12.subgroup_generated([8]).size(), 3);
        assert_eq!(c12.subgroup_generated([4, 6]).size(), 6);
        assert_eq!(c12.subgroup_generated([]).size(), 1);
        let a = c12.subgroup_generated([4]);
        let b = c12.subgroup_generated([6]);
        assert_eq!(c12.join(&a, &b).size(), 6);
        assert_eq!(a.intersection(&c12, &b).size(), 1);
    }

    #[test]
    fn center_and_derived() {
        let s3 = sym3();
        assert!(s3.center().is_trivial());
        assert_eq!(s3.derived_subgroup().size(), 3);
        let ab = direct_product(&Group::cyclic(4), &Group::cyclic(6), DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(ab.center().size(), 24);
        assert!(ab.derived_subgroup().is_trivial());
    }

    #[test]
    fn normality_and_conjugates() {
        let s3 = sym3();
        let a3 = s3.derived_subgroup();
        assert!(s3.is_normal(&a3));
        let transposition = (0..6).find(|&x| s3.element_order(x).unwrap() == 2).unwrap();
        let t = s3.subgroup_generated([transposition as u32]);
        assert!(!s3.is_normal(&t));
        assert_eq!(s3.normalizer(&t), t);
    }

    #[test]
    fn from_members_checks_closure() {
        let c4 = Group::cyclic(4);
        let mut m = BitSet::new(4);
        m.insert(0);
        m.insert(1);
        assert!(Subgroup::from_members(&c4, m.clone()).is_err());
        m.insert(2);
        m.insert(3);
        assert_eq!(Subgroup::from_members(&c4, m).unwrap().size(), 4);
    }
}
