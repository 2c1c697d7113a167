use crate::dfs::{Event, ExplorationTrace};
use crate::graph::{ArcId, Graph, VertexId};

/// Checks that `trace` is a complete depth-first exploration of `g`.
/// Returns one line per violation; empty means the trace is sound.
///
/// Checked: each vertex previsited and postvisited once, in properly nested
/// order; searches start only on an empty path; every arc advanced once from
/// the current vertex and retreated once; a non-tree arc's retreat directly
/// follows its advance; a tree arc's retreat directly follows the postvisit
/// of its tip; every arc out of a vertex is handled before its postvisit.
pub fn check_trace(trace: &ExplorationTrace, g: &Graph) -> Vec<String> {
    let n = g.n();
    let m = g.m();
    let tails = g.tails();
    let mut diags = Vec::new();
    let mut pre = vec![false; n + 1];
    let mut post = vec![false; n + 1];
    let mut advanced = vec![false; m + 1];
    let mut retreated = vec![false; m + 1];
    let mut path: Vec<VertexId> = Vec::new();
    let mut pending_start: Option<VertexId> = None;
    // Arc whose retreat must come next, and the tree arc awaiting TREE_RET.
    let mut expect_retreat: Option<ArcId> = None;
    let mut expect_tree_ret: Option<(ArcId, VertexId)> = None;
    let mut expect_pre: Option<VertexId> = None;
    let mut tree_into = vec![ArcId::NONE; n + 1];

    let in_range_v = |v: VertexId| !v.is_none() && v.index() <= n;
    let arc_matches = |v: VertexId, a: ArcId, w: VertexId| {
        !a.is_none() && a.index() <= m && tails[a.index()] == v && g.tip(a) == w
    };

    for (i, e) in trace.events.iter().enumerate() {
        let at = |msg: String| format!("{msg} (event {i}: {e})");
        if let Some(a) = expect_retreat {
            if !matches!(e, Event::Retreat(_, b, _) if *b == a) {
                diags.push(at(format!(
                    "PAIRING: retreat on {a} does not follow its advance"
                )));
                expect_retreat = None;
            }
        }
        if let Some(w) = expect_pre {
            if *e != Event::Previsit(w) {
                diags.push(at(format!(
                    "PAIRING: tree advance into {w} not followed by PRE({w})"
                )));
            }
            expect_pre = None;
        }
        if let Some((a, _)) = expect_tree_ret {
            if !matches!(e, Event::TreeRetreat(_, b, _) if *b == a) {
                diags.push(at(format!(
                    "PAIRING: tree retreat on {a} does not follow POST"
                )));
                expect_tree_ret = None;
            }
        }
        match *e {
            Event::SearchStart(s) => {
                if !path.is_empty() {
                    diags.push(at(format!("NESTING: search starts at {s} inside a search")));
                }
                if !in_range_v(s) || pre[s.index()] {
                    diags.push(at(format!("COUNT: search starts at visited vertex {s}")));
                }
                pending_start = Some(s);
            }
            Event::Previsit(v) => {
                if !in_range_v(v) {
                    diags.push(at(format!("COUNT: vertex {v} out of range")));
                    continue;
                }
                if std::mem::replace(&mut pre[v.index()], true) {
                    diags.push(at(format!("COUNT: vertex {v} previsited twice")));
                }
                if path.is_empty() && pending_start.take() != Some(v) {
                    diags.push(at(format!(
                        "NESTING: root {v} previsited without a search start"
                    )));
                }
                path.push(v);
            }
            Event::Postvisit(v) => {
                if !in_range_v(v) {
                    diags.push(at(format!("COUNT: vertex {v} out of range")));
                    continue;
                }
                if std::mem::replace(&mut post[v.index()], true) {
                    diags.push(at(format!("COUNT: vertex {v} postvisited twice")));
                }
                if !pre[v.index()] {
                    diags.push(at(format!(
                        "NESTING: vertex {v} postvisited before previsit"
                    )));
                }
                if path.last() != Some(&v) {
                    diags.push(at(format!(
                        "NESTING: POST({v}) while another vertex is current"
                    )));
                }
                for a in g.out_arcs(v) {
                    if !retreated[a.index()] {
                        diags.push(at(format!(
                            "PAIRING: arc {a} of {v} unfinished at POST({v})"
                        )));
                    }
                }
                if let Some(k) = path.iter().rposition(|&x| x == v) {
                    path.truncate(k);
                }
                let a = tree_into[v.index()];
                if !a.is_none() {
                    expect_tree_ret = Some((a, v));
                }
            }
            Event::TreeAdvance(v, a, w) | Event::NontreeTraverse(v, a, w) => {
                let tree = matches!(e, Event::TreeAdvance(..));
                if !arc_matches(v, a, w) {
                    diags.push(at(format!("COUNT: arc {a} does not run from {v} to {w}")));
                    continue;
                }
                if std::mem::replace(&mut advanced[a.index()], true) {
                    diags.push(at(format!("COUNT: arc {a} advanced twice")));
                }
                if path.last() != Some(&v) {
                    diags.push(at(format!(
                        "NESTING: advance on {a} from non-current vertex {v}"
                    )));
                }
                if tree {
                    if pre[w.index()] {
                        diags.push(at(format!("PAIRING: tree advance into visited {w}")));
                    }
                    tree_into[w.index()] = a;
                    expect_pre = Some(w);
                } else {
                    if !pre[w.index()] {
                        diags.push(at(format!("PAIRING: non-tree arc {a} into unvisited {w}")));
                    }
                    expect_retreat = Some(a);
                }
            }
            Event::TreeRetreat(v, a, w) => {
                match expect_tree_ret.take() {
                    Some((b, x)) if b == a && x == w => {}
                    _ => diags.push(at(format!("NESTING: tree retreat on {a} out of order"))),
                }
                if path.last() != Some(&v) {
                    diags.push(at(format!(
                        "NESTING: tree retreat to non-current vertex {v}"
                    )));
                }
                expect_retreat = Some(a);
            }
            Event::Retreat(v, a, w) => {
                if !arc_matches(v, a, w) {
                    diags.push(at(format!("COUNT: arc {a} does not run from {v} to {w}")));
                    continue;
                }
                if !advanced[a.index()] {
                    diags.push(at(format!("PAIRING: retreat on {a} before its advance")));
                }
                if std::mem::replace(&mut retreated[a.index()], true) {
                    diags.push(at(format!("COUNT: arc {a} retreated twice")));
                }
                expect_retreat = None;
            }
        }
    }
    if let Some(a) = expect_retreat {
        diags.push(format!("PAIRING: trace ends before the retreat on {a}"));
    }
    if let Some((a, _)) = expect_tree_ret {
        diags.push(format!(
            "PAIRING: trace ends before the tree retreat on {a}"
        ));
    }
    for v in g.vertices() {
        if pre[v.index()] && !post[v.index()] {
            diags.push(format!("COUNT: vertex {v} never postvisited"));
        }
        if !pre[v.index()] {
            diags.push(format!("COUNT: vertex {v} never previsited"));
        }
    }
    for a in 1..=m {
        if !advanced[a] || !retreated[a] {
            diags.push(format!(
                "COUNT: arc {} not advanced and retreated",
                ArcId::new(a)
            ));
        }
    }
    diags
}
