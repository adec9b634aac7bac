//! Todd-Coxeter coset enumeration over the trivial subgroup, HLT strategy.
//!
//! Cosets are defined in order of the first undefined table entry and each
//! live coset is scanned against every relator before its row is filled.
//! Coincidences are resolved with a union-find queue.

use super::{Letter, Presentation};
use crate::error::{Error, Result};
use crate::group::{Group, Perm, DEFAULT_ORDER_CAP};

pub const DEFAULT_MAX_COSETS: usize = 100_000;

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationStatus {
    Complete,
    Capped,
}

/// Action of the generators and their inverses on cosets. Row `0` is the
/// subgroup itself; column `2g` is generator `g` and `2g + 1` its inverse.
#[derive(Clone, Debug)]
pub struct CosetTable {
    columns: usize,
    cosets: usize,
    rows: Vec<u32>,
    status: EnumerationStatus,
}

impl CosetTable {
    pub fn status(&self) -> EnumerationStatus {
        self.status
    }

    pub fn len(&self) -> usize {
        self.cosets
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Image of coset `c` under a letter, if defined.
    pub fn get(&self, c: usize, l: Letter) -> Option<usize> {
        let v = self.rows[c * self.columns + l.column()];
        (v != NONE).then_some(v as usize)
    }

    /// Permutation of the cosets induced by generator `g`. Only meaningful
    /// for complete tables.
    pub fn generator_perm(&self, g: usize) -> Perm {
        (0..self.len()).map(|c| self.rows[c * self.columns + 2 * g]).collect()
    }
}

/// Runs the enumeration; a table that hits `max_cosets` comes back capped.
pub fn enumerate_cosets(p: &Presentation, max_cosets: usize) -> CosetTable {
    let columns = 2 * p.generators().len();
    let relators: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .filter(|w| !w.is_empty())
        .map(|w| w.letters().iter().map(|l| l.column()).collect())
        .collect();
    let mut e =
        Enumerator { columns, table: vec![NONE; columns], parent: vec![0], queue: Vec::new(), max: max_cosets.max(1) };
    let status = match e.run(&relators) {
        Ok(()) => EnumerationStatus::Complete,
        Err(Capped) => EnumerationStatus::Capped,
    };
    let (cosets, rows) = match status {
        EnumerationStatus::Complete => e.compact(),
        EnumerationStatus::Capped => (e.cosets(), e.table),
    };
    CosetTable { columns, cosets, rows, status }
}

/// Enumerates the cosets of the trivial subgroup and returns the group
/// order together with the group generated by the regular permutation
/// representation of the generators.
pub fn coset_enumerate(p: &Presentation, max_cosets: usize) -> Result<(usize, Group)> {
    let table = enumerate_cosets(p, max_cosets);
    if table.status() == EnumerationStatus::Capped {
        return Err(Error::CosetLimit(max_cosets));
    }
    let order = table.len();
    let perms: Vec<Perm> = (0..p.generators().len()).map(|g| table.generator_perm(g)).collect();
    let group = Group::from_permutations_capped(order, &perms, DEFAULT_ORDER_CAP.max(order))?;
    debug_assert_eq!(group.order(), order);
    Ok((order, group))
}

struct Capped;

struct Enumerator {
    columns: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    queue: Vec<u32>,
    max: usize,
}

impl Enumerator {
    fn cosets(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.columns + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.columns + x] = v;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> std::result::Result<(), Capped> {
        if self.cosets() >= self.max {
            return Err(Capped);
        }
        let fresh = self.cosets() as u32;
        self.parent.push(fresh);
        self.table.extend(std::iter::repeat_n(NONE, self.columns));
        self.set(c, x, fresh);
        self.set(fresh, x ^ 1, c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = c;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi as usize] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for x in 0..self.columns {
                let d = self.get(dead, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x ^ 1, NONE);
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.get(mu, x);
                if mu_x != NONE {
                    self.merge(nu, mu_x);
                    continue;
                }
                let nu_xi = self.get(nu, x ^ 1);
                if nu_xi != NONE {
                    self.merge(mu, nu_xi);
                } else {
                    self.set(mu, x, nu);
                    self.set(nu, x ^ 1, mu);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, start: u32, w: &[usize]) -> std::result::Result<(), Capped> {
        let (mut f, mut b) = (start, start);
        let (mut i, mut j) = (0, w.len());
        loop {
            while i < j && self.get(f, w[i]) != NONE {
                f = self.get(f, w[i]);
                i += 1;
            }
            if i == j {
                if f != start {
                    self.coincidence(f, start);
                }
                return Ok(());
            }
            while j > i && self.get(b, w[j - 1] ^ 1) != NONE {
                b = self.get(b, w[j - 1] ^ 1);
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn run(&mut self, relators: &[Vec<usize>]) -> std::result::Result<(), Capped> {
        let mut alpha = 0u32;
        while (alpha as usize) < self.cosets() {
            if self.is_live(alpha) {
                for r in relators {
                    self.scan_and_fill(alpha, r)?;
                    if !self.is_live(alpha) {
                        break;
                    }
                }
                if self.is_live(alpha) {
                    for x in 0..self.columns {
                        if self.get(alpha, x) == NONE {
                            self.define(alpha, x)?;
                        }
                    }
                }
            }
            alpha += 1;
        }
        Ok(())
    }

    /// Renumbers live cosets consecutively in increasing order.
    fn compact(&mut self) -> (usize, Vec<u32>) {
        let n = self.cosets();
        let mut new_index = vec![NONE; n];
        let mut live = Vec::new();
        for c in 0..n as u32 {
            if self.is_live(c) {
                new_index[c as usize] = live.len() as u32;
                live.push(c);
            }
        }
        let mut rows = Vec::with_capacity(live.len() * self.columns);
        for &c in &live {
            for x in 0..self.columns {
                let target = self.get(c, x);
                let r = self.rep(target);
                rows.push(new_index[r as usize]);
            }
        }
        (live.len(), rows)
    }
}
