use serde::Serialize;

use super::{all_subgroups_capped, Lattice, DEFAULT_LATTICE_CAP};
use crate::arith::{factorize, valuation};
use crate::error::Result;
use crate::group::Group;

/// Per-prime data: `p^f` is the largest order of a `p`-element and `p^k` the
/// largest order of a cyclic power subgroup of `p`-power order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeData {
    pub p: u64,
    pub f: u32,
    pub k: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountSummary {
    pub order: usize,
    pub exponent: usize,
    pub s: usize,
    pub ps: usize,
    pub nps: usize,
    pub primes: Vec<PrimeData>,
}

pub fn counts(g: &Group) -> Result<CountSummary> {
    counts_capped(g, DEFAULT_LATTICE_CAP)
}

pub fn counts_capped(g: &Group, cap: usize) -> Result<CountSummary> {
    Ok(all_subgroups_capped(g, cap)?.counts())
}

impl Lattice<'_> {
    pub fn counts(&self) -> CountSummary {
        let g = self.group();
        let s = self.len();
        let powers = self.power_subgroup_indices();
        let ps = powers.len();
        let exponent = g.exponent();
        let primes = factorize(g.order() as u64)
            .into_iter()
            .map(|(p, _)| {
                let f = valuation(p, exponent as u64);
                let k = powers
                    .iter()
                    .filter(|&&i| self.is_cyclic(i))
                    .map(|&i| self.get(i).size() as u64)
                    .filter(|&size| p.pow(valuation(p, size)) == size)
                    .map(|size| valuation(p, size))
                    .max()
                    .unwrap_or(0);
                PrimeData { p, f, k }
            })
            .collect();
        CountSummary { order: g.order(), exponent, s, ps, nps: s - ps, primes }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{direct_product, DEFAULT_ORDER_CAP};

    #[test]
    fn abelian_two_by_four() {
        let g = direct_product(&Group::cyclic(2), &Group::cyclic(4), DEFAULT_ORDER_CAP).unwrap();
        let c = counts(&g).unwrap();
        assert_eq!((c.s, c.ps, c.nps), (8, 3, 5));
        assert_eq!(c.primes, vec![PrimeData { p: 2, f: 2, k: 1 }]);
    }

    #[test]
    fn cyclic_has_no_nonpower_subgroups() {
        let c = counts(&Group::cyclic(12)).unwrap();
        assert_eq!((c.s, c.ps, c.nps, c.exponent), (6, 6, 0, 12));
        assert_eq!(c.primes, vec![PrimeData { p: 2, f: 2, k: 2 }, PrimeData { p: 3, f: 1, k: 1 }]);
    }
}
