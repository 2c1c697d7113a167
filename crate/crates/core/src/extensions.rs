//! Things built on top of a component partition: the condensation, spanning
//! in- and out-trees certifying strong connectivity, and a verifier.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{build_graph, reverse_graph, serialize_graph, ArcId, Graph, VertexId};
use crate::scc::{OrderKind, SccResult};
use crate::tarjan::TarjanRun;

/// The acyclic graph of components. Vertex `k` (1-based) is the `k`-th
/// component in reverse topological emission order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condensation {
    pub graph: Graph,
    /// Leader of each condensation vertex; slot 0 unused.
    pub leaders: Vec<VertexId>,
}

impl Condensation {
    /// Edge-list text of the condensation graph.
    pub fn serialize(&self) -> String {
        serialize_graph(&self.graph)
    }

    /// One `comp leader` line per condensation vertex.
    pub fn serialize_leaders(&self) -> String {
        let mut out = String::new();
        for (k, l) in self.leaders.iter().enumerate().skip(1) {
            let _ = writeln!(out, "{k} {l}");
        }
        out
    }
}

fn check_partition(g: &Graph, scc: &SccResult) -> Result<()> {
    if scc.n() != g.n() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {}",
            scc.n(),
            g.n()
        )));
    }
    for (k, comp) in scc.components().enumerate() {
        let lead = scc.component_leader(k);
        for &v in comp {
            if scc.leader(v) != lead {
                return Err(Error::InvalidPartition(format!(
                    "vertex {v} listed under leader {lead} but maps to {}",
                    scc.leader(v)
                )));
            }
        }
    }
    Ok(())
}

/// Contracts each component to one vertex, dropping loops and duplicate arcs.
///
/// Components are processed in reverse topological order. While component
/// `c` is built, a bit per earlier component records whether the arc to it
/// already exists; the bits are cleared by walking the arcs just added.
pub fn condense(g: &Graph, scc: &SccResult) -> Result<Condensation> {
    check_partition(g, scc)?;
    let rt;
    let scc = match scc.order_kind() {
        OrderKind::ReverseTopological => scc,
        OrderKind::Topological => {
            rt = scc.reversed();
            &rt
        }
    };
    let k = scc.num_components();
    let mut comp_of = vec![0u32; g.n() + 1];
    for (c, comp) in scc.components().enumerate() {
        for &v in comp {
            comp_of[v.index()] = c as u32 + 1;
        }
    }
    let mut seen = vec![false; k + 1];
    let mut arcs: Vec<(u32, u32)> = Vec::new();
    let mut leaders = vec![VertexId::NONE; k + 1];
    for (c0, comp) in scc.components().enumerate() {
        let c = c0 as u32 + 1;
        leaders[c as usize] = scc.component_leader(c0);
        let added = arcs.len();
        for &v in comp {
            for a in g.out_arcs(v) {
                let y = comp_of[g.tip(a).index()];
                if y > c {
                    return Err(Error::InvalidPartition(format!(
                        "arc {a} leads from component {c} to later component {y}"
                    )));
                }
                if y < c && !seen[y as usize] {
                    seen[y as usize] = true;
                    arcs.push((c, y));
                }
            }
        }
        for &(_, y) in &arcs[added..] {
            seen[y as usize] = false;
        }
    }
    Ok(Condensation {
        graph: build_graph(k, &arcs)?,
        leaders,
    })
}

/// Low arcs: for each follower, an arc toward its leader inside its component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowArcForest {
    /// Indexed by vertex; `NONE` for leaders.
    pub lowarc: Vec<ArcId>,
}

/// Tree arcs of the depth-first forest minus those entering leaders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutTreeForest {
    /// The tree arc entering each follower; `NONE` for leaders.
    pub tree_arc: Vec<ArcId>,
}

impl OutTreeForest {
    /// Arcs of the out-tree spanning the `k`-th emitted component.
    pub fn component_arcs(&self, scc: &SccResult, k: usize) -> Vec<ArcId> {
        scc.component(k)
            .iter()
            .map(|v| self.tree_arc[v.index()])
            .filter(|a| !a.is_none())
            .collect()
    }
}

/// The in-trees recorded by a Tarjan run with `record_lowarcs`.
pub fn build_in_trees(run: &TarjanRun) -> Result<LowArcForest> {
    let lowarc = run
        .lowarcs
        .clone()
        .ok_or_else(|| Error::Unsupported("run did not record low arcs".into()))?;
    Ok(LowArcForest { lowarc })
}

/// Removes tree arcs that enter leaders from the forest `tree_arcs` (indexed
/// by vertex) of the run that produced `scc`.
pub fn build_out_trees(tree_arcs: &[ArcId], scc: &SccResult) -> OutTreeForest {
    let tree_arc = tree_arcs
        .iter()
        .enumerate()
        .map(|(v, &a)| {
            if v == 0 || scc.leader(VertexId::new(v)).index() == v {
                ArcId::NONE
            } else {
                a
            }
        })
        .collect();
    OutTreeForest { tree_arc }
}

/// Certificates found by restricted searches from each leader: an out-tree
/// in `g` and an in-tree via the reversed graph. Members a leader cannot
/// reach (or be reached from) inside its component get no arc.
pub fn derive_certificates(g: &Graph, scc: &SccResult) -> Result<(LowArcForest, OutTreeForest)> {
    check_partition(g, scc)?;
    let rev = reverse_graph(g);
    let n = g.n();
    let mut lowarc = vec![ArcId::NONE; n + 1];
    let mut tree_arc = vec![ArcId::NONE; n + 1];
    for (graph, out) in [(g, &mut tree_arc), (&rev, &mut lowarc)] {
        let mut seen = vec![false; n + 1];
        let mut stack = Vec::new();
        for k in 0..scc.num_components() {
            let lead = scc.component_leader(k);
            seen[lead.index()] = true;
            stack.push(lead);
            while let Some(x) = stack.pop() {
                for a in graph.out_arcs(x) {
                    let y = graph.tip(a);
                    if !seen[y.index()] && scc.leader(y) == lead {
                        seen[y.index()] = true;
                        out[y.index()] = a;
                        stack.push(y);
                    }
                }
            }
        }
    }
    Ok((LowArcForest { lowarc }, OutTreeForest { tree_arc }))
}

/// Outcome of [`verify_scc`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(String),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

/// Checks a claimed partition: every component must be spanned from its
/// leader by the out-tree and reach it through the in-tree using only
/// in-component arcs, and every arc must respect the emission order.
pub fn verify_scc(
    g: &Graph,
    scc: &SccResult,
    in_trees: &LowArcForest,
    out_trees: &OutTreeForest,
) -> Result<Verdict> {
    check_partition(g, scc)?;
    let n = g.n();
    if in_trees.lowarc.len() != n + 1 || out_trees.tree_arc.len() != n + 1 {
        return Ok(Verdict::Reject("certificate size differs from n".into()));
    }
    let tails = g.tails();
    let arc_ok = |a: ArcId| !a.is_none() && a.index() <= g.m();

    // in_tree: following lowarc from v walks tail -> tip toward the leader;
    // out_tree: following tree_arc from v walks tip -> tail toward the leader.
    for (name, arcs, toward_leader) in [
        ("in-tree", &in_trees.lowarc, true),
        ("out-tree", &out_trees.tree_arc, false),
    ] {
        let step = |v: VertexId| -> std::result::Result<VertexId, String> {
            let a = arcs[v.index()];
            if !arc_ok(a) {
                return Err(format!("{name}: follower {v} has no valid arc"));
            }
            let (from, to) = if toward_leader {
                (tails[a.index()], g.tip(a))
            } else {
                (g.tip(a), tails[a.index()])
            };
            if from != v {
                return Err(format!("{name}: arc {a} of {v} is not incident to it"));
            }
            if scc.leader(to) != scc.leader(v) {
                return Err(format!("{name}: arc {a} leaves the component of {v}"));
            }
            Ok(to)
        };
        // 0 = unknown, 1 = on the current walk, 2 = reaches its leader
        let mut state = vec![0u8; n + 1];
        let mut walk = Vec::new();
        for v0 in g.vertices() {
            if scc.leader(v0) == v0 && !arcs[v0.index()].is_none() {
                return Ok(Verdict::Reject(format!("{name}: leader {v0} has an arc")));
            }
            let mut v = v0;
            loop {
                match state[v.index()] {
                    2 => break,
                    1 => return Ok(Verdict::Reject(format!("{name}: cycle through {v}"))),
                    _ => {}
                }
                if scc.leader(v) == v {
                    state[v.index()] = 2;
                    break;
                }
                state[v.index()] = 1;
                walk.push(v);
                match step(v) {
                    Ok(next) => v = next,
                    Err(msg) => return Ok(Verdict::Reject(msg)),
                }
            }
            for x in walk.drain(..) {
                state[x.index()] = 2;
            }
        }
    }

    let idx = scc.component_index();
    for (a, x, y) in g.arcs() {
        let (cx, cy) = (idx[x.index()], idx[y.index()]);
        let ok = match scc.order_kind() {
            OrderKind::ReverseTopological => cx >= cy,
            OrderKind::Topological => cx <= cy,
        };
        if !ok {
            return Ok(Verdict::Reject(format!(
                "arc {a} from {x} to {y} violates the {} order",
                scc.order_kind().as_str()
            )));
        }
    }
    Ok(Verdict::Accept)
}
