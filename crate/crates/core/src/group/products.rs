use std::collections::VecDeque;

use super::{Group, Morphism, Subgroup};
use crate::error::{Error, Result};

/// `G x H` on pairs `(g, h)`, numbered `g * |H| + h`.
///
/// Generators are those of `G` followed by those of `H`.
pub fn direct_product(g: &Group, h: &Group, cap: usize) -> Result<Group> {
    let (m, n) = (g.order(), h.order());
    let order = m.checked_mul(n).filter(|&o| o <= cap).ok_or(Error::SizeLimit { cap })?;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (ga, ha) = ((a / n) as u32, (a % n) as u32);
        for b in 0..order {
            let (gb, hb) = ((b / n) as u32, (b % n) as u32);
            table.push(g.mul(ga, gb) * n as u32 + h.mul(ha, hb));
        }
    }
    let gens = g.generators().iter().map(|&x| x * n as u32).chain(h.generators().iter().copied()).collect();
    Group::from_table(order, table, gens)
}

/// `N x| K` on pairs `(n, k)`, numbered `n * |K| + k`, with
/// `(n1, k1)(n2, k2) = (n1 * act(k1)(n2), k1 k2)`.
///
/// `action[i]` is the automorphism of `N` (as an element permutation) assigned
/// to the `i`-th generator of `K`. The assignment must extend to a
/// homomorphism `K -> Aut(N)` with `act(k1 k2) = act(k1) . act(k2)`, so
/// `k n k^-1 = act(k)(n)` in the product. Generators are those of `N`
/// followed by those of `K`.
pub fn semidirect_product(normal: &Group, acting: &Group, action: &[Vec<u32>], cap: usize) -> Result<Group> {
    let (nn, nk) = (normal.order(), acting.order());
    let order = nn.checked_mul(nk).filter(|&o| o <= cap).ok_or(Error::SizeLimit { cap })?;
    if action.len() != acting.generators().len() {
        return Err(Error::NotAutomorphism(format!(
            "{} automorphisms given for {} generators",
            action.len(),
            acting.generators().len()
        )));
    }
    for (i, perm) in action.iter().enumerate() {
        check_automorphism(normal, perm).map_err(|msg| Error::NotAutomorphism(format!("generator {i}: {msg}")))?;
    }

    // Extend along the Cayley graph of K; any inconsistency is a relator of K
    // that the assignment fails to respect.
    let mut act: Vec<Option<Vec<u32>>> = vec![None; nk];
    act[0] = Some((0..nn as u32).collect());
    let mut queue = VecDeque::from([0u32]);
    while let Some(x) = queue.pop_front() {
        let ax = act[x as usize].clone().expect("visited");
        for (j, &g) in acting.generators().iter().enumerate() {
            let y = acting.mul(x, g);
            let ay: Vec<u32> = (0..nn).map(|n| ax[action[j][n] as usize]).collect();
            match &act[y as usize] {
                Some(existing) if *existing != ay => return Err(Error::NotHomomorphism),
                Some(_) => {}
                None => {
                    act[y as usize] = Some(ay);
                    queue.push_back(y);
                }
            }
        }
    }
    let act: Vec<Vec<u32>> = act.into_iter().map(|a| a.expect("generators span K")).collect();

    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (n1, k1) = ((a / nk) as u32, (a % nk) as u32);
        let twist = &act[k1 as usize];
        for b in 0..order {
            let (n2, k2) = ((b / nk) as u32, b % nk);
            let n = normal.mul(n1, twist[n2 as usize]);
            let k = acting.mul(k1, k2 as u32);
            table.push(n * nk as u32 + k);
        }
    }
    let gens = normal.generators().iter().map(|&x| x * nk as u32).chain(acting.generators().iter().copied()).collect();
    Group::from_table(order, table, gens)
}

fn check_automorphism(g: &Group, perm: &[u32]) -> std::result::Result<(), String> {
    let n = g.order();
    if perm.len() != n {
        return Err(format!("length {} differs from group order {n}", perm.len()));
    }
    let mut seen = vec![false; n];
    for &x in perm {
        if x as usize >= n || std::mem::replace(&mut seen[x as usize], true) {
            return Err("not a bijection".into());
        }
    }
    let n = n as u32;
    for x in 0..n {
        for y in 0..n {
            if perm[g.mul(x, y) as usize] != g.mul(perm[x as usize], perm[y as usize]) {
                return Err(format!("fails to respect the product {x}*{y}"));
            }
        }
    }
    Ok(())
}

/// `G / N` for a normal subgroup `N`, with cosets numbered by their smallest
/// element, and the canonical projection.
pub fn quotient(g: &Group, normal: &Subgroup) -> Result<(Group, Morphism)> {
    if normal.members().capacity() != g.order() {
        return Err(Error::NotSubgroup("subgroup of a different group".into()));
    }
    if !g.is_normal(normal) {
        return Err(Error::NotNormal);
    }
    let mut coset_of = vec![u32::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() as u32 {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for h in normal.elements() {
            coset_of[g.mul(h, x) as usize] = c;
        }
    }
    let q = reps.len();
    let mut table = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            table.push(coset_of[g.mul(a, b) as usize]);
        }
    }
    let mut gens: Vec<u32> = Vec::new();
    for &x in g.generators() {
        let c = coset_of[x as usize];
        if c != 0 && !gens.contains(&c) {
            gens.push(c);
        }
    }
    let group = Group::from_table(q, table, gens)?;
    Ok((group, Morphism::new(coset_of, q)))
}
