use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::run_parallel;
use crate::error::{Error, Result};
use crate::group::{Group, Perm};
use crate::lattice::counts_capped;

/// A permutation group given by generators on `0..degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Perm>,
}

impl CorpusEntry {
    pub fn build(&self, cap: usize) -> Result<Group> {
        Ok(Group::from_permutations_capped(self.degree, &self.generators, cap)?.with_label(self.name.clone()))
    }
}

/// Parses a corpus document: a JSON array of entries. A document that is not
/// an array is an error; entries that do not match the schema come back as
/// per-entry errors.
pub fn load_corpus(text: &str) -> Result<Vec<std::result::Result<CorpusEntry, String>>> {
    let values: Vec<serde_json::Value> = serde_json::from_str(text).map_err(|e| Error::Corpus(e.to_string()))?;
    Ok(values
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            let name = v.get("name").and_then(|n| n.as_str()).map(str::to_string);
            serde_json::from_value::<CorpusEntry>(v).map_err(|e| match name {
                Some(n) => format!("entry {i} ({n}): {e}"),
                None => format!("entry {i}: {e}"),
            })
        })
        .collect())
}

/// The right regular representation of `g` as a corpus entry.
pub fn export_entry(name: &str, g: &Group) -> CorpusEntry {
    let n = g.order();
    let generators = g.generators().iter().map(|&x| (0..n as u32).map(|i| g.mul(i, x)).collect()).collect();
    CorpusEntry { name: name.to_string(), degree: n, generators }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub name: String,
    pub order: Option<usize>,
    pub exponent: Option<usize>,
    pub s: Option<usize>,
    pub ps: Option<usize>,
    pub nps: Option<usize>,
    pub error: Option<String>,
}

impl CensusRow {
    fn failed(name: String, error: String) -> CensusRow {
        CensusRow { name, order: None, exponent: None, s: None, ps: None, nps: None, error: Some(error) }
    }
}

/// One row per entry, in input order.
pub fn census(
    entries: &[std::result::Result<CorpusEntry, String>],
    max_order: usize,
    jobs: usize,
) -> Result<Vec<CensusRow>> {
    run_parallel(entries, jobs, |entry| match entry {
        Err(msg) => CensusRow::failed(String::new(), msg.clone()),
        Ok(e) => match e.build(max_order).and_then(|g| counts_capped(&g, max_order)) {
            Ok(c) => CensusRow {
                name: e.name.clone(),
                order: Some(c.order),
                exponent: Some(c.exponent),
                s: Some(c.s),
                ps: Some(c.ps),
                nps: Some(c.nps),
                error: None,
            },
            Err(err) => CensusRow::failed(e.name.clone(), err.to_string()),
        },
    })
}

/// Number of rows with each nonpower count.
pub fn nps_histogram(rows: &[CensusRow]) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for n in rows.iter().filter_map(|r| r.nps) {
        *hist.entry(n).or_insert(0) += 1;
    }
    hist
}
