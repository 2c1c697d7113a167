//! The bidirectional algorithm: a forward depth-first exploration lists the
//! vertices in postorder; backward searches on the reversed graph, started in
//! reverse postorder, each peel off exactly one component.
//!
//! The forward pass leaves every vertex marked visited. The backward pass
//! reuses that mark word as the component assignment, so it needs no second
//! initialization sweep: a vertex still holding the visited mark is
//! unassigned, and pushing it on the backward stack assigns it.

use crate::dfs::{explore, EngineKind, Visitor};
use crate::error::{Error, Result};
use crate::graph::{reverse_graph, Graph, VertexId};
use crate::scc::{OrderKind, SccResult, WithinOrder};

/// How the backward pass searches the reversed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Backward {
    #[default]
    Quick,
    DepthFirst(EngineKind),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BidiOptions {
    pub engine: EngineKind,
    pub backward: Backward,
    /// End the forward pass after the last previsit and the backward pass
    /// after the last assignment.
    pub stop_early: bool,
}

impl Default for BidiOptions {
    fn default() -> Self {
        BidiOptions {
            engine: EngineKind::AStack,
            backward: Backward::Quick,
            stop_early: true,
        }
    }
}

const UNVISITED: u32 = 0;
const VISITED: u32 = u32::MAX;

struct Postorder {
    mark: Vec<u32>,
    post: Vec<VertexId>,
    previsited: usize,
    n: usize,
    stop_early: bool,
}

impl Visitor for Postorder {
    fn start(&mut self, g: &Graph) {
        self.n = g.n();
        self.mark = vec![UNVISITED; g.n() + 1];
        self.post = Vec::with_capacity(g.n());
        self.previsited = 0;
    }
    #[inline]
    fn unvisited(&self, v: VertexId) -> bool {
        self.mark[v.index()] == UNVISITED
    }
    #[inline]
    fn previsit(&mut self, v: VertexId) {
        self.mark[v.index()] = VISITED;
        self.previsited += 1;
    }
    #[inline]
    fn postvisit(&mut self, v: VertexId) {
        self.post.push(v);
    }
    #[inline]
    fn halt(&self) -> bool {
        self.stop_early && self.previsited == self.n
    }
    fn halted(&mut self, path: &[VertexId]) {
        // Nothing is left to previsit, so the path unwinds in order.
        self.post.extend_from_slice(path);
    }
}

fn forward(
    g: &Graph,
    engine: EngineKind,
    start_order: Option<&[VertexId]>,
    stop_early: bool,
) -> Result<Postorder> {
    let mut p = Postorder {
        mark: Vec::new(),
        post: Vec::new(),
        previsited: 0,
        n: 0,
        stop_early,
    };
    explore(g, engine, &mut p, start_order)?;
    p.post.reverse();
    Ok(p)
}

/// Vertices ordered by decreasing postvisit time of a forward exploration.
pub fn forward_reverse_postorder(
    g: &Graph,
    engine: EngineKind,
    start_order: Option<&[VertexId]>,
    stop_early: bool,
) -> Result<Vec<VertexId>> {
    Ok(forward(g, engine, start_order, stop_early)?.post)
}

/// Strong components of `g`, emitted in topological order. `g_rev` must be
/// `reverse_graph(g)` if given.
pub fn scc_bidirectional(g: &Graph, g_rev: Option<&Graph>, opts: BidiOptions) -> Result<SccResult> {
    scc_bidirectional_run(g, g_rev, opts, None)
}

/// [`scc_bidirectional`] with an explicit forward start order.
pub fn scc_bidirectional_run(
    g: &Graph,
    g_rev: Option<&Graph>,
    opts: BidiOptions,
    start_order: Option<&[VertexId]>,
) -> Result<SccResult> {
    let built;
    let rev = match g_rev {
        Some(r) => {
            if r.n() != g.n() || r.m() != g.m() {
                return Err(Error::Unsupported("reversed graph does not match".into()));
            }
            r
        }
        None => {
            built = reverse_graph(g);
            &built
        }
    };
    let Postorder { mark, post, .. } = forward(g, opts.engine, start_order, opts.stop_early)?;
    let mut back = BackwardState {
        assign: mark,
        members: Vec::with_capacity(g.n()),
        offsets: vec![0],
        assigned: 0,
        current: VertexId::NONE,
    };
    match opts.backward {
        Backward::Quick => back.quick(rev, &post, opts.stop_early)?,
        Backward::DepthFirst(engine) => {
            explore(rev, engine, &mut back, Some(&post))?;
            if !back.current.is_none() {
                back.offsets.push(back.members.len());
            }
        }
    }
    // Slot 0 was never marked, so it reads as NONE.
    let leader = back.assign.into_iter().map(VertexId).collect();
    Ok(SccResult::from_parts(
        leader,
        back.members,
        back.offsets,
        OrderKind::Topological,
        WithinOrder::SearchOrder,
    ))
}

struct BackwardState {
    /// `VISITED` from the forward pass until assigned a leader.
    assign: Vec<u32>,
    members: Vec<VertexId>,
    offsets: Vec<usize>,
    assigned: usize,
    current: VertexId,
}

impl BackwardState {
    fn quick(&mut self, rev: &Graph, rev_post: &[VertexId], stop_early: bool) -> Result<()> {
        let n = rev.n();
        let mut stack: Vec<VertexId> = Vec::new();
        for &s in rev_post {
            if self.assign[s.index()] != VISITED {
                continue;
            }
            if stop_early && self.assigned == n {
                break;
            }
            self.assign[s.index()] = s.0;
            self.assigned += 1;
            stack.push(s);
            while let Some(v) = stack.pop() {
                self.members.push(v);
                if stop_early && self.assigned == n {
                    continue;
                }
                for a in rev.out_arcs(v) {
                    let w = rev.tip(a);
                    if self.assign[w.index()] == VISITED {
                        self.assign[w.index()] = s.0;
                        self.assigned += 1;
                        stack.push(w);
                    }
                }
            }
            self.offsets.push(self.members.len());
        }
        if self.assigned != n {
            return Err(Error::InternalInvariant(
                "backward pass left vertices unassigned".into(),
            ));
        }
        Ok(())
    }
}

impl Visitor for BackwardState {
    fn start(&mut self, _g: &Graph) {
        // Marks carry over from the forward pass.
    }
    #[inline]
    fn unvisited(&self, v: VertexId) -> bool {
        self.assign[v.index()] == VISITED
    }
    fn search_start(&mut self, s: VertexId) {
        if !self.current.is_none() {
            self.offsets.push(self.members.len());
        }
        self.current = s;
    }
    #[inline]
    fn previsit(&mut self, v: VertexId) {
        self.assign[v.index()] = self.current.0;
        self.assigned += 1;
        self.members.push(v);
    }
}
