//! Strong-component results shared by all three algorithms.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::VertexId;

/// Order in which components are emitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Every arc leads from a later-emitted component to an earlier one (or stays inside).
    ReverseTopological,
    /// Every arc leads from an earlier-emitted component to a later one (or stays inside).
    Topological,
}

impl OrderKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OrderKind::ReverseTopological => "reverse-topological",
            OrderKind::Topological => "topological",
        }
    }

    pub fn flip(self) -> Self {
        match self {
            OrderKind::ReverseTopological => OrderKind::Topological,
            OrderKind::Topological => OrderKind::ReverseTopological,
        }
    }
}

/// Order of vertices inside each emitted component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WithinOrder {
    Postorder,
    Preorder,
    /// Whatever order the producing search visited them in.
    SearchOrder,
}

/// A partition of `1..=n` into strong components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccResult {
    leader: Vec<VertexId>,
    members: Vec<VertexId>,
    offsets: Vec<usize>,
    order_kind: OrderKind,
    within_order: WithinOrder,
}

impl SccResult {
    /// Assembles a result from emitted components; each entry is `(leader, members)`.
    /// Fails unless the lists partition `1..=n` and each leader is in its own list.
    pub fn from_components(
        n: usize,
        components: impl IntoIterator<Item = (VertexId, Vec<VertexId>)>,
        order_kind: OrderKind,
        within_order: WithinOrder,
    ) -> Result<Self> {
        let mut leader = vec![VertexId::NONE; n + 1];
        let mut members = Vec::with_capacity(n);
        let mut offsets = vec![0];
        for (k, (lead, comp)) in components.into_iter().enumerate() {
            if comp.is_empty() {
                return Err(Error::InvalidPartition(format!(
                    "component {} is empty",
                    k + 1
                )));
            }
            if !comp.contains(&lead) {
                return Err(Error::InvalidPartition(format!(
                    "leader {lead} is not a member of component {}",
                    k + 1
                )));
            }
            for &v in &comp {
                if v.is_none() || v.index() > n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if !leader[v.index()].is_none() {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in two components"
                    )));
                }
                leader[v.index()] = lead;
            }
            members.extend_from_slice(&comp);
            offsets.push(members.len());
        }
        if let Some(v) = (1..=n).find(|&v| leader[v].is_none()) {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} is in no component"
            )));
        }
        Ok(SccResult {
            leader,
            members,
            offsets,
            order_kind,
            within_order,
        })
    }

    /// For producers that already guarantee the partition invariants.
    pub(crate) fn from_parts(
        leader: Vec<VertexId>,
        members: Vec<VertexId>,
        offsets: Vec<usize>,
        order_kind: OrderKind,
        within_order: WithinOrder,
    ) -> Self {
        debug_assert_eq!(members.len() + 1, leader.len());
        debug_assert_eq!(offsets.last().copied(), Some(members.len()));
        SccResult {
            leader,
            members,
            offsets,
            order_kind,
            within_order,
        }
    }

    pub fn n(&self) -> usize {
        self.leader.len() - 1
    }

    #[inline]
    pub fn leader(&self, v: VertexId) -> VertexId {
        self.leader[v.index()]
    }

    /// Leader of every vertex, indexed by vertex id (slot 0 unused).
    pub fn leaders(&self) -> &[VertexId] {
        &self.leader
    }

    pub fn order_kind(&self) -> OrderKind {
        self.order_kind
    }

    pub fn within_order(&self) -> WithinOrder {
        self.within_order
    }

    pub fn num_components(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Members of the `k`-th emitted component (0-based).
    pub fn component(&self, k: usize) -> &[VertexId] {
        &self.members[self.offsets[k]..self.offsets[k + 1]]
    }

    pub fn component_leader(&self, k: usize) -> VertexId {
        self.leader(self.component(k)[0])
    }

    pub fn components(&self) -> impl ExactSizeIterator<Item = &[VertexId]> + '_ {
        (0..self.num_components()).map(move |k| self.component(k))
    }

    /// Emission index of each vertex's component, indexed by vertex id.
    pub fn component_index(&self) -> Vec<usize> {
        let mut idx = vec![usize::MAX; self.leader.len()];
        for (k, comp) in self.components().enumerate() {
            for &v in comp {
                idx[v.index()] = k;
            }
        }
        idx
    }

    /// The same partition emitted in the opposite order.
    pub fn reversed(&self) -> SccResult {
        let comps: Vec<(VertexId, Vec<VertexId>)> = (0..self.num_components())
            .rev()
            .map(|k| (self.component_leader(k), self.component(k).to_vec()))
            .collect();
        SccResult::from_components(self.n(), comps, self.order_kind.flip(), self.within_order)
            .expect("reordering preserves the partition")
    }

    /// Components as sorted vertex lists, in emission order.
    pub fn sorted_components(&self) -> Vec<Vec<u32>> {
        self.components()
            .map(|c| {
                let mut c: Vec<u32> = c.iter().map(|v| v.0).collect();
                c.sort_unstable();
                c
            })
            .collect()
    }

    /// Order-free canonical form: sorted components sorted by smallest member.
    pub fn canonical_partition(&self) -> Vec<Vec<u32>> {
        let mut p = self.sorted_components();
        p.sort_unstable();
        p
    }
}

/// Renders a result as the line format
/// `order=<kind>` followed by `leader: v1 v2 ...` per component.
pub fn format_scc(scc: &SccResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "order={}", scc.order_kind().as_str());
    for (k, comp) in scc.components().enumerate() {
        let _ = write!(out, "{}:", scc.component_leader(k));
        for v in comp {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

/// Parses [`format_scc`] output for a graph with `n` vertices.
pub fn parse_scc(text: &str, n: usize) -> Result<SccResult> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        message: "missing `order=` header".into(),
    })?;
    let order_kind = match header.strip_prefix("order=") {
        Some("reverse-topological") => OrderKind::ReverseTopological,
        Some("topological") => OrderKind::Topological,
        _ => {
            return Err(Error::Parse {
                line: hl,
                message: format!("bad header `{header}`"),
            })
        }
    };
    let mut comps = Vec::new();
    for (line, body) in lines {
        let (lead, rest) = body.split_once(':').ok_or_else(|| Error::Parse {
            line,
            message: "expected `leader: members`".into(),
        })?;
        let num = |tok: &str| -> Result<VertexId> {
            tok.trim()
                .parse::<u32>()
                .map(VertexId)
                .map_err(|_| Error::Parse {
                    line,
                    message: format!("`{tok}` is not a vertex"),
                })
        };
        let lead = num(lead)?;
        let members = rest
            .split_whitespace()
            .map(num)
            .collect::<Result<Vec<_>>>()?;
        comps.push((lead, members));
    }
    SccResult::from_components(n, comps, order_kind, WithinOrder::SearchOrder)
}
