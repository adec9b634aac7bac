use serde::Serialize;

use super::{run_parallel, Status, SweepBounds};
use crate::error::Result;
use crate::family::{theorem_catalog, BucketMember, FamilySpec};
use crate::group::Group;
use crate::iso::are_isomorphic_capped;
use crate::lattice::counts_capped;

/// A bucket member instance and its enumerated count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SoundnessRow {
    pub k: u32,
    pub member: String,
    pub group: String,
    pub order: u64,
    pub computed: Option<usize>,
    pub status: Status,
    pub note: String,
}

/// Two members of one bucket at their smallest parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistinctRow {
    pub k: u32,
    pub left: String,
    pub right: String,
    pub isomorphic: bool,
}

/// A corpus group with at most 13 nonpower subgroups and the bucket
/// member it matched, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletenessRow {
    pub name: String,
    pub order: usize,
    pub nps: usize,
    pub matched: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub soundness: Vec<SoundnessRow>,
    pub distinct: Vec<DistinctRow>,
    pub completeness: Vec<CompletenessRow>,
}

impl TheoremReport {
    /// Soundness and distinctness hold. Unmatched corpus groups are
    /// reported but do not fail the run.
    pub fn passed(&self) -> bool {
        self.soundness.iter().all(|r| r.status == Status::Pass) && self.distinct.iter().all(|r| !r.isomorphic)
    }

    pub fn unmatched(&self) -> impl Iterator<Item = &CompletenessRow> {
        self.completeness.iter().filter(|r| r.matched.is_none())
    }
}

/// Checks every instantiated bucket member for `k` in `ks` and, when a
/// corpus is given, looks for an isomorphic bucket member for each corpus
/// group with at most 13 nonpower subgroups.
pub fn verify_theorems(
    ks: impl IntoIterator<Item = u32>,
    bounds: SweepBounds,
    corpus: &[(String, Group)],
) -> Result<TheoremReport> {
    let cap = bounds.max_order;
    let ks: Vec<u32> = ks.into_iter().collect();
    let mut work: Vec<(u32, BucketMember, FamilySpec)> = Vec::new();
    let mut pairs: Vec<(u32, FamilySpec, FamilySpec)> = Vec::new();
    for &k in &ks {
        let bucket = theorem_catalog(k);
        for m in &bucket {
            for spec in m.instances(bounds.max_n, cap as u64) {
                work.push((k, *m, spec));
            }
        }
        let minimal: Vec<FamilySpec> = bucket
            .iter()
            .map(|m| m.minimal_instance())
            .filter(|s| s.order().is_some_and(|o| o <= cap as u64))
            .collect();
        for (i, a) in minimal.iter().enumerate() {
            for b in &minimal[i + 1..] {
                pairs.push((k, a.clone(), b.clone()));
            }
        }
    }

    let soundness = run_parallel(&work, bounds.jobs, |(k, m, spec)| {
        let order = spec.order().unwrap_or(0);
        let counted = spec.build_capped(cap).and_then(|g| counts_capped(&g, cap));
        let (computed, status, note) = match counted {
            Ok(c) if c.nps == *k as usize => (Some(c.nps), Status::Pass, String::new()),
            Ok(c) => (Some(c.nps), Status::Fail, format!("expected {k}")),
            Err(e) => (None, Status::Fail, e.to_string()),
        };
        SoundnessRow { k: *k, member: m.notation.to_string(), group: spec.to_string(), order, computed, status, note }
    })?;

    let distinct = run_parallel(&pairs, bounds.jobs, |(k, a, b)| {
        let isomorphic = match (a.build_capped(cap), b.build_capped(cap)) {
            (Ok(x), Ok(y)) => are_isomorphic_capped(&x, &y, cap).unwrap_or(true),
            _ => true,
        };
        DistinctRow { k: *k, left: a.to_string(), right: b.to_string(), isomorphic }
    })?;

    let completeness = run_parallel(corpus, bounds.jobs, |(name, g)| -> Result<Option<CompletenessRow>> {
        if g.order() > cap {
            return Ok(None);
        }
        let nps = counts_capped(g, cap)?.nps;
        if nps > 13 {
            return Ok(None);
        }
        let matched = find_member(g, nps as u32, cap)?;
        Ok(Some(CompletenessRow { name: name.clone(), order: g.order(), nps, matched }))
    })?
    .into_iter()
    .filter_map(|r| r.transpose())
    .collect::<Result<Vec<_>>>()?;

    Ok(TheoremReport { soundness, distinct, completeness })
}

/// An instance of a bucket-`k` member isomorphic to `g`.
fn find_member(g: &Group, k: u32, cap: usize) -> Result<Option<String>> {
    for member in theorem_catalog(k) {
        for spec in member.instances_of_order(g.order() as u64) {
            let h = spec.build_capped(cap)?;
            if are_isomorphic_capped(g, &h, cap)? {
                return Ok(Some(spec.to_string()));
            }
        }
    }
    Ok(None)
}
