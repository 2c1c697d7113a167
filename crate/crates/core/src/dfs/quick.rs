//! Quick search: pop a vertex, visit it, push every unseen tip of its arcs.
//!
//! Not a depth-first order. One word per vertex holds a tri-state mark:
//! `UNSEEN`, `VISITED`, or, while the vertex is on the stack, the vertex below
//! it (`BOTTOM` for the lowest entry).

use super::check_start_order;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

const UNSEEN: u32 = 0;
const VISITED: u32 = u32::MAX;
const BOTTOM: u32 = u32::MAX - 1;

/// Explores all of `g`, starting searches at unseen vertices of `start_order`
/// (ascending when `None`). Returns the visit order.
pub fn quick_search<F: FnMut(VertexId)>(
    g: &Graph,
    start_order: Option<&[VertexId]>,
    on_visit: F,
) -> Result<Vec<VertexId>> {
    match start_order {
        Some(order) => {
            check_start_order(g.n(), order)?;
            quick_search_from(g, order, on_visit)
        }
        None => {
            let order: Vec<VertexId> = g.vertices().collect();
            quick_search_from(g, &order, on_visit)
        }
    }
}

/// Searches from each of `sources` in turn, skipping those already seen.
/// Visits exactly the vertices reachable from `sources`.
pub fn quick_search_from<F: FnMut(VertexId)>(
    g: &Graph,
    sources: &[VertexId],
    mut on_visit: F,
) -> Result<Vec<VertexId>> {
    let mut mark = vec![UNSEEN; g.n() + 1];
    let mut order = Vec::new();
    let mut top = BOTTOM;
    for &s in sources {
        if s.is_none() || s.index() > g.n() {
            return Err(Error::OutOfRange {
                vertex: s.0 as u64,
                n: g.n(),
                line: None,
            });
        }
        if mark[s.index()] != UNSEEN {
            continue;
        }
        mark[s.index()] = top;
        top = s.0;
        while top != BOTTOM {
            let v = VertexId(top);
            top = mark[v.index()];
            if top == UNSEEN || top == VISITED {
                return Err(Error::InternalInvariant(
                    "quick-search stack corrupted".into(),
                ));
            }
            mark[v.index()] = VISITED;
            on_visit(v);
            order.push(v);
            for a in g.out_arcs(v) {
                let w = g.tip(a);
                if mark[w.index()] == UNSEEN {
                    mark[w.index()] = top;
                    top = w.0;
                }
            }
        }
    }
    Ok(order)
}
