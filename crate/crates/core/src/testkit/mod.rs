//! Test support: a reachability oracle, graph generators and checkers for
//! exploration traces and the structural lemmas of depth-first search.
//!
//! The oracle uses only the graph and quick search, never the depth-first
//! engines, so it can judge them.

mod gen;
mod lemmas;
mod trace_check;

pub use gen::{corpus, full_corpus, generate, Family, GenSpec, CORPUS_MAX_M, CORPUS_MAX_N};
pub use lemmas::{
    check_cross_arcs, check_emission_order, check_leaders, check_lowarc_forest, check_nesting,
};
pub use trace_check::check_trace;

use crate::dfs::quick_search_from;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Largest graph the oracle accepts by default.
pub const ORACLE_LIMIT: usize = 256;

/// Mutual-reachability classes, numbered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OraclePartition {
    id: Vec<u32>,
    reach: Vec<Vec<u64>>,
}

impl OraclePartition {
    /// Class of `v`; classes are numbered `0..` in order of their smallest vertex.
    pub fn id(&self, v: VertexId) -> u32 {
        self.id[v.index()]
    }

    /// Whether a path (possibly empty) leads from `u` to `v`.
    pub fn reaches(&self, u: VertexId, v: VertexId) -> bool {
        self.reach[u.index()][v.index() / 64] >> (v.index() % 64) & 1 == 1
    }

    /// Classes as sorted vertex lists, sorted by smallest member.
    pub fn classes(&self) -> Vec<Vec<u32>> {
        let k = self
            .id
            .iter()
            .skip(1)
            .map(|&c| c as usize + 1)
            .max()
            .unwrap_or(0);
        let mut out = vec![Vec::new(); k];
        for v in 1..self.id.len() {
            out[self.id[v] as usize].push(v as u32);
        }
        out
    }
}

/// Strong components by brute force: one reachability search per vertex.
pub fn oracle_scc(g: &Graph) -> Result<OraclePartition> {
    oracle_scc_with_limit(g, ORACLE_LIMIT)
}

pub fn oracle_scc_with_limit(g: &Graph, limit: usize) -> Result<OraclePartition> {
    let n = g.n();
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    let words = n / 64 + 1;
    let mut reach = vec![vec![0u64; words]; n + 1];
    for u in g.vertices() {
        let row = &mut reach[u.index()];
        quick_search_from(g, &[u], |v| row[v.index() / 64] |= 1 << (v.index() % 64))?;
    }
    let mut id = vec![u32::MAX; n + 1];
    let mut next = 0;
    let bit = |r: &Vec<Vec<u64>>, u: usize, v: usize| r[u][v / 64] >> (v % 64) & 1 == 1;
    for u in 1..=n {
        if id[u] != u32::MAX {
            continue;
        }
        for (v, slot) in id.iter_mut().enumerate().skip(u) {
            if bit(&reach, u, v) && bit(&reach, v, u) {
                *slot = next;
            }
        }
        next += 1;
    }
    id[0] = 0;
    Ok(OraclePartition { id, reach })
}
