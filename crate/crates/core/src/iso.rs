//! Isomorphism testing for small concrete groups.
//!
//! Cheap invariants are compared first. When they all agree, a generating
//! sequence of the first group is mapped into the second by backtracking,
//! extending each partial assignment to the subgroup it generates and
//! rejecting it as soon as it stops being a well-defined injective
//! homomorphism.

use crate::error::{Error, Result};
use crate::group::{Group, Morphism, Subgroup};
use crate::lattice::counts_capped;

pub const DEFAULT_ISO_CAP: usize = 600;

pub fn are_isomorphic(g: &Group, h: &Group) -> Result<bool> {
    Ok(find_isomorphism_capped(g, h, DEFAULT_ISO_CAP)?.is_some())
}

pub fn are_isomorphic_capped(g: &Group, h: &Group, cap: usize) -> Result<bool> {
    Ok(find_isomorphism_capped(g, h, cap)?.is_some())
}

pub fn find_isomorphism(g: &Group, h: &Group) -> Result<Option<Morphism>> {
    find_isomorphism_capped(g, h, DEFAULT_ISO_CAP)
}

pub fn find_isomorphism_capped(g: &Group, h: &Group, cap: usize) -> Result<Option<Morphism>> {
    for grp in [g, h] {
        if grp.order() > cap {
            return Err(Error::SizeLimit { cap });
        }
    }
    if g.order() != h.order() || g.exponent() != h.exponent() {
        return Ok(None);
    }
    if order_histogram(g) != order_histogram(h) {
        return Ok(None);
    }
    let (gc, hc) = (g.class_size_of_each(), h.class_size_of_each());
    if g.class_sizes() != h.class_sizes() {
        return Ok(None);
    }
    if g.center().size() != h.center().size() || g.derived_subgroup().size() != h.derived_subgroup().size() {
        return Ok(None);
    }
    let (cg, ch) = (counts_capped(g, cap)?, counts_capped(h, cap)?);
    if (cg.s, cg.ps) != (ch.s, ch.ps) {
        return Ok(None);
    }
    Ok(Search::new(g, h, &gc, &hc).run())
}

fn order_histogram(g: &Group) -> Vec<usize> {
    let mut hist = vec![0; g.order() + 1];
    for &o in g.element_orders() {
        hist[o as usize] += 1;
    }
    hist
}

/// Greedy generating sequence: repeatedly take the element of largest order
/// outside the current span.
fn generating_sequence(g: &Group) -> Vec<u32> {
    let mut elems: Vec<u32> = (0..g.order() as u32).collect();
    let orders = g.element_orders();
    elems.sort_by_key(|&x| (std::cmp::Reverse(orders[x as usize]), x));
    let mut span = Subgroup::trivial(g);
    let mut gens = Vec::new();
    for x in elems {
        if span.size() == g.order() {
            break;
        }
        if !span.contains(x) {
            span = g.join_element(&span, x);
            gens.push(x);
        }
    }
    gens
}

struct Search<'a> {
    g: &'a Group,
    h: &'a Group,
    gens: Vec<u32>,
    candidates: Vec<Vec<u32>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Group, h: &'a Group, gc: &[usize], hc: &[usize]) -> Search<'a> {
        let gens = generating_sequence(g);
        let (go, ho) = (g.element_orders(), h.element_orders());
        let candidates = gens
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let key = (go[x as usize], gc[x as usize]);
                let mut c: Vec<u32> =
                    (0..h.order() as u32).filter(|&y| (ho[y as usize], hc[y as usize]) == key).collect();
                if i == 0 {
                    // inner automorphisms of H move the first image anywhere
                    // in its class, so one representative per class suffices
                    let mut seen = vec![false; h.order()];
                    c.retain(|&y| {
                        if seen[y as usize] {
                            return false;
                        }
                        for t in 0..h.order() as u32 {
                            seen[h.conjugate(y, t) as usize] = true;
                        }
                        true
                    });
                }
                c.sort_by_key(|&y| (ho[y as usize], y));
                c
            })
            .collect();
        Search { g, h, gens, candidates }
    }

    fn run(&self) -> Option<Morphism> {
        if self.g.order() == 1 {
            return Some(Morphism::new(vec![0], 1));
        }
        let mut images = Vec::with_capacity(self.gens.len());
        self.extend(&mut images).map(|map| Morphism::new(map, self.h.order()))
    }

    fn extend(&self, images: &mut Vec<u32>) -> Option<Vec<u32>> {
        let level = images.len();
        let previous = if level == 0 { None } else { Some(self.partial_map(images)?) };
        for &y in &self.candidates[level] {
            if previous.as_ref().is_some_and(|(_, used)| used[y as usize]) {
                continue;
            }
            images.push(y);
            if let Some((map, _)) = self.partial_map(images) {
                if level + 1 == self.gens.len() {
                    if map.iter().all(|&v| v != u32::MAX) {
                        return Some(map);
                    }
                } else if let Some(found) = self.extend(images) {
                    return Some(found);
                }
            }
            images.pop();
        }
        None
    }

    /// Extends `gens[i] -> images[i]` to the span of those generators,
    /// returning the map and the set of used images, or `None` if the
    /// assignment is inconsistent or not injective.
    fn partial_map(&self, images: &[u32]) -> Option<(Vec<u32>, Vec<bool>)> {
        let (g, h) = (self.g, self.h);
        let gens = &self.gens[..images.len()];
        let mut map = vec![u32::MAX; g.order()];
        let mut used = vec![false; h.order()];
        map[0] = 0;
        used[0] = true;
        let mut queue = vec![0u32];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let fx = map[x as usize];
            for (&a, &b) in gens.iter().zip(images) {
                let y = g.mul(x, a);
                let fy = h.mul(fx, b);
                match map[y as usize] {
                    u32::MAX => {
                        if used[fy as usize] {
                            return None;
                        }
                        used[fy as usize] = true;
                        map[y as usize] = fy;
                        queue.push(y);
                    }
                    existing if existing != fy => return None,
                    _ => {}
                }
            }
        }
        Some((map, used))
    }
}
