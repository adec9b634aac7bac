//! Finite groups stored as full multiplication tables.
//!
//! Elements are indices `0..order`; index `0` is always the identity. A
//! [`Group`] is immutable once built and every structural operation returns a
//! fresh value, so groups can be shared freely between threads.

mod morphism;
mod products;
mod subgroup;

use std::collections::HashMap;
use std::hash::Hash;

use crate::arith::lcm;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub use morphism::Morphism;
pub use products::{direct_product, quotient, semidirect_product};
pub use subgroup::Subgroup;

/// Default ceiling on the order of any group built by this crate.
pub const DEFAULT_ORDER_CAP: usize = 4096;

/// A permutation of `0..degree` given as its image array.
pub type Perm = Vec<u32>;

#[derive(Clone, Debug)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    generators: Vec<u32>,
    label: Option<String>,
}

impl Group {
    /// Builds a group from a row-major multiplication table.
    ///
    /// The table must have identity `0` and every row and column must be a
    /// permutation. Associativity is not re-checked here; see
    /// [`Group::check_axioms`].
    pub fn from_table(order: usize, table: Vec<u32>, generators: Vec<u32>) -> Result<Group> {
        if order == 0 || table.len() != order * order {
            return Err(Error::InvalidPermutation(format!(
                "table of length {} does not match order {order}",
                table.len()
            )));
        }
        for x in 0..order {
            if table[x] as usize != x || table[x * order] as usize != x {
                return Err(Error::InvalidPermutation("element 0 is not a two-sided identity".into()));
            }
        }
        let mut inv = vec![u32::MAX; order];
        for x in 0..order {
            let row = &table[x * order..(x + 1) * order];
            let mut seen = BitSet::new(order);
            for (y, &z) in row.iter().enumerate() {
                if z as usize >= order || !seen.insert(z as usize) {
                    return Err(Error::InvalidPermutation(format!("row {x} of the table is not a permutation")));
                }
                if z == 0 {
                    inv[x] = y as u32;
                }
            }
        }
        for (x, &y) in inv.iter().enumerate() {
            if table[y as usize * order + x] != 0 {
                return Err(Error::InvalidPermutation(format!("element {x} has no two-sided inverse")));
            }
        }
        let mut group = Group { order, table, inv, orders: Vec::new(), generators: Vec::new(), label: None };
        group.orders = (0..order).map(|x| group.compute_order(x)).collect();
        group.with_generators(generators)
    }

    /// Breadth-first closure of `gens` under `mul`, starting from `identity`.
    ///
    /// Elements are numbered in discovery order, applying the generators in
    /// the order given. Returns the group together with the concrete element
    /// behind each index.
    pub fn closure<T, F>(identity: T, gens: &[T], mul: F, cap: usize) -> Result<(Group, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<T, u32> = HashMap::from([(identity, 0)]);
        // right[j][x] = x * gens[j]
        let mut right: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
        // parent[y] = (x, j) with y = x * gens[j], the edge that discovered y
        let mut parent: Vec<(u32, usize)> = vec![(0, usize::MAX)];
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            for (j, g) in gens.iter().enumerate() {
                let y = mul(&x, g);
                let idx = match index.get(&y) {
                    Some(&i) => i,
                    None => {
                        if elements.len() >= cap {
                            return Err(Error::SizeLimit { cap });
                        }
                        let i = elements.len() as u32;
                        index.insert(y.clone(), i);
                        elements.push(y);
                        parent.push((head as u32, j));
                        i
                    }
                };
                right[j].push(idx);
            }
            head += 1;
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            table[a * n] = a as u32;
        }
        for b in 1..n {
            let (pb, j) = parent[b];
            for a in 0..n {
                let ap = table[a * n + pb as usize];
                table[a * n + b] = right[j][ap as usize];
            }
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok((Group::from_table(n, table, generators)?, elements))
    }

    /// The group generated by permutations of `0..degree`, composed left to
    /// right (`x * y` applies `x` first).
    pub fn from_permutations(degree: usize, perms: &[Perm]) -> Result<Group> {
        Group::from_permutations_capped(degree, perms, DEFAULT_ORDER_CAP)
    }

    pub fn from_permutations_capped(degree: usize, perms: &[Perm], cap: usize) -> Result<Group> {
        for (i, p) in perms.iter().enumerate() {
            validate_perm(degree, p).map_err(|msg| Error::InvalidPermutation(format!("generator {i}: {msg}")))?;
        }
        let identity: Perm = (0..degree as u32).collect();
        let (group, _) = Group::closure(identity, perms, |x, y| compose(x, y), cap)?;
        Ok(group)
    }

    pub fn cyclic(n: usize) -> Group {
        assert!(n > 0, "cyclic group of order 0");
        let table = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        let gens = if n > 1 { vec![1] } else { vec![] };
        Group::from_table(n, table, gens).expect("cyclic table is valid")
    }

    pub fn trivial() -> Group {
        Group::cyclic(1)
    }

    /// Replaces the distinguished generators, checking that they generate.
    pub fn with_generators(mut self, generators: Vec<u32>) -> Result<Group> {
        if let Some(&g) = generators.iter().find(|&&g| g as usize >= self.order) {
            return Err(Error::OutOfRange { index: g as usize, order: self.order });
        }
        let span = self.subgroup_generated(generators.iter().copied());
        if span.size() != self.order {
            return Err(Error::NotSubgroup(format!("generators span {} of {} elements", span.size(), self.order)));
        }
        self.generators = generators;
        Ok(self)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Group {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.table[x as usize * self.order + y as usize]
    }

    #[inline]
    pub fn inv(&self, x: u32) -> u32 {
        self.inv[x as usize]
    }

    /// `x^k` for any integer `k`.
    pub fn pow(&self, x: u32, k: i64) -> u32 {
        let ord = self.orders[x as usize] as i64;
        let e = k.rem_euclid(ord);
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// `y^-1 x y`.
    pub fn conjugate(&self, x: u32, y: u32) -> u32 {
        self.mul(self.mul(self.inv(y), x), y)
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn element_order(&self, x: usize) -> Result<usize> {
        self.orders.get(x).map(|&o| o as usize).ok_or(Error::OutOfRange { index: x, order: self.order })
    }

    /// Element orders indexed by element.
    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1u64, |acc, &o| lcm(acc, o as u64)) as usize
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, &a)| self.generators[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o as usize == self.order)
    }

    /// Exhaustive check of associativity, identity and inverses.
    pub fn check_axioms(&self) -> bool {
        let n = self.order as u32;
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x || self.mul(x, self.inv(x)) != 0 {
                return false;
            }
        }
        (0..n).all(|x| {
            (0..n).all(|y| {
                let xy = self.mul(x, y);
                (0..n).all(|z| self.mul(xy, z) == self.mul(x, self.mul(y, z)))
            })
        })
    }

    /// Sizes of the conjugacy classes, sorted.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut seen = BitSet::new(self.order);
        let mut sizes = Vec::new();
        for x in 0..self.order as u32 {
            if seen.contains(x as usize) {
                continue;
            }
            let mut size = 0;
            for g in 0..self.order as u32 {
                if seen.insert(self.conjugate(x, g) as usize) {
                    size += 1;
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable();
        sizes
    }

    /// Size of the conjugacy class of each element.
    pub fn class_size_of_each(&self) -> Vec<usize> {
        let mut out = vec![0; self.order];
        let mut class = BitSet::new(self.order);
        for x in 0..self.order as u32 {
            if out[x as usize] != 0 {
                continue;
            }
            let mut members = Vec::new();
            for g in 0..self.order as u32 {
                let c = self.conjugate(x, g);
                if class.insert(c as usize) {
                    members.push(c);
                }
            }
            for c in &members {
                out[*c as usize] = members.len();
            }
        }
        out
    }

    fn compute_order(&self, x: usize) -> u32 {
        let mut acc = x as u32;
        let mut k = 1;
        while acc != 0 {
            acc = self.mul(acc, x as u32);
            k += 1;
        }
        k
    }
}

/// Left-to-right composition: the result maps `i` to `q[p[i]]`.
pub fn compose(p: &[u32], q: &[u32]) -> Perm {
    p.iter().map(|&i| q[i as usize]).collect()
}

fn validate_perm(degree: usize, p: &[u32]) -> std::result::Result<(), String> {
    if p.len() != degree {
        return Err(format!("length {} differs from degree {degree}", p.len()));
    }
    let mut seen = BitSet::new(degree);
    for &i in p {
        if i as usize >= degree || !seen.insert(i as usize) {
            return Err("not a bijection".into());
        }
    }
    Ok(())
}
