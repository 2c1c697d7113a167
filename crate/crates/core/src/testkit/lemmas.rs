//! Checkers for structural facts about depth-first forests and the
//! component results built on them. Each returns one line per violation.

use crate::dfs::{ArcClass, Forest, TimeStamps};
use crate::graph::{ArcId, Graph, VertexId};
use crate::scc::{OrderKind, SccResult};

/// Timestamps are a permutation of `1..=2n`, and `w` is a tree descendant of
/// `v` exactly when `[pre(w), post(w)]` nests inside `[pre(v), post(v)]`.
pub fn check_nesting(forest: &Forest) -> Vec<String> {
    let TimeStamps { pre, post } = &forest.stamps;
    let n = pre.len().saturating_sub(1);
    let mut diags = Vec::new();
    let mut seen = vec![false; 2 * n + 1];
    for v in 1..=n {
        for t in [pre[v], post[v]] {
            if t == 0 || t as usize > 2 * n || std::mem::replace(&mut seen[t as usize], true) {
                diags.push(format!(
                    "time {t} of vertex {v} is not a fresh value in 1..=2n"
                ));
            }
        }
        if pre[v] >= post[v] {
            diags.push(format!(
                "vertex {v}: pre {} not before post {}",
                pre[v], post[v]
            ));
        }
    }
    let is_ancestor = |v: usize, w: usize| {
        let mut x = VertexId::new(w);
        while !x.is_none() {
            if x.index() == v {
                return true;
            }
            x = forest.parent[x.index()];
        }
        false
    };
    for v in 1..=n {
        for w in 1..=n {
            let nested = pre[v] <= pre[w] && pre[w] < post[w] && post[w] <= post[v];
            if nested != is_ancestor(v, w) {
                diags.push(format!(
                    "vertices {v}, {w}: interval nesting disagrees with the tree"
                ));
            }
            let disjoint = post[v] < pre[w] || post[w] < pre[v];
            let inside = nested || (pre[w] <= pre[v] && post[v] <= post[w]);
            if !disjoint && !inside {
                diags.push(format!(
                    "vertices {v}, {w}: intervals overlap without nesting"
                ));
            }
        }
    }
    diags
}

/// Every cross arc `x -> y` has `post(y) < pre(x)`.
pub fn check_cross_arcs(g: &Graph, stamps: &TimeStamps, classes: &[ArcClass]) -> Vec<String> {
    g.arcs()
        .into_iter()
        .filter(|&(a, x, y)| {
            classes[a.index()] == ArcClass::Cross && stamps.post(y) >= stamps.pre(x)
        })
        .map(|(a, x, y)| format!("cross arc {a} from {x} to {y} has post(y) >= pre(x)"))
        .collect()
}

/// Each component's leader has the minimum `pre` and the maximum `post` in it.
pub fn check_leaders(scc: &SccResult, stamps: &TimeStamps) -> Vec<String> {
    let mut diags = Vec::new();
    for (k, comp) in scc.components().enumerate() {
        let lead = scc.component_leader(k);
        let min_pre = comp.iter().min_by_key(|v| stamps.pre(**v)).copied();
        let max_post = comp.iter().max_by_key(|v| stamps.post(**v)).copied();
        if min_pre != Some(lead) {
            diags.push(format!(
                "leader {lead} does not have the minimum pre of its component"
            ));
        }
        if max_post != Some(lead) {
            diags.push(format!(
                "leader {lead} does not have the maximum post of its component"
            ));
        }
    }
    diags
}

/// Every arc runs toward an earlier-emitted component (reverse topological)
/// or a later one (topological), or stays inside its component.
pub fn check_emission_order(g: &Graph, scc: &SccResult) -> Vec<String> {
    let idx = scc.component_index();
    g.arcs()
        .into_iter()
        .filter(|&(_, x, y)| {
            let (cx, cy) = (idx[x.index()], idx[y.index()]);
            match scc.order_kind() {
                OrderKind::ReverseTopological => cx < cy,
                OrderKind::Topological => cx > cy,
            }
        })
        .map(|(a, x, y)| format!("arc {a} from {x} to {y} breaks the emission order"))
        .collect()
}

/// Low arcs stay inside components, contain no cycle, and lead every
/// follower to its leader. Leaders have none.
pub fn check_lowarc_forest(g: &Graph, scc: &SccResult, lowarc: &[ArcId]) -> Vec<String> {
    let tails = g.tails();
    let mut diags = Vec::new();
    for v in g.vertices() {
        let lead = scc.leader(v);
        let a = lowarc[v.index()];
        if lead == v {
            if !a.is_none() {
                diags.push(format!("leader {v} has low arc {a}"));
            }
            continue;
        }
        let mut x = v;
        let mut steps = 0;
        while x != lead {
            let a = lowarc[x.index()];
            if a.is_none() || tails[a.index()] != x {
                diags.push(format!("follower {x} has no low arc leaving it"));
                break;
            }
            x = g.tip(a);
            if scc.leader(x) != lead {
                diags.push(format!("low arc {a} leaves the component of {v}"));
                break;
            }
            steps += 1;
            if steps > g.n() {
                diags.push(format!("low arcs from {v} cycle"));
                break;
            }
        }
    }
    diags
}
