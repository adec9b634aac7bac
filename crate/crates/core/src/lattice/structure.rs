use super::{all_subgroups_capped, Lattice, DEFAULT_LATTICE_CAP};
use crate::arith::{prime_power, valuation};
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};

/// A Sylow `p`-subgroup: the first subgroup of full `p`-part order in the
/// lattice. Returns the trivial subgroup when `p` does not divide `|G|`.
pub fn sylow(g: &Group, p: usize) -> Result<Subgroup> {
    if !g.order().is_multiple_of(p) {
        return Ok(Subgroup::trivial(g));
    }
    Ok(all_subgroups_capped(g, DEFAULT_LATTICE_CAP)?.sylow(p))
}

/// The Frattini subgroup, the intersection of all maximal subgroups.
pub fn frattini(g: &Group) -> Result<Subgroup> {
    Ok(all_subgroups_capped(g, DEFAULT_LATTICE_CAP)?.frattini())
}

/// `Omega_i(G)` of a `p`-group: generated by the elements with `x^(p^i) = 1`.
pub fn omega(g: &Group, i: u32) -> Result<Subgroup> {
    if g.order() == 1 {
        return Ok(Subgroup::trivial(g));
    }
    let (p, _) = prime_power(g.order() as u64).ok_or(Error::NotPGroup(g.order()))?;
    let bound = p.saturating_pow(i);
    let orders = g.element_orders();
    Ok(g.subgroup_generated((0..g.order() as u32).filter(|&x| bound % orders[x as usize] as u64 == 0)))
}

impl Lattice<'_> {
    pub fn sylow(&self, p: usize) -> Subgroup {
        let order = self.group().order();
        let part = p.pow(valuation(p as u64, order as u64));
        self.subgroups().iter().find(|s| s.size() == part).cloned().expect("Sylow subgroups exist")
    }

    pub fn frattini(&self) -> Subgroup {
        let g = self.group();
        let maximals = self.maximal_subgroups();
        let mut acc = Subgroup::whole(g);
        for i in maximals {
            acc = acc.intersection(g, self.get(i));
        }
        acc
    }
}
