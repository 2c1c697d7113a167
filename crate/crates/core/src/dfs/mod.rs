//! Generic depth-first exploration.
//!
//! An exploration is driven by a [`Visitor`] whose handlers fire at the
//! critical events: previsit, postvisit, advances and retreats on arcs. The
//! same visitor runs unchanged on any of three engines:
//!
//! * [`EngineKind::Recursive`]: the textbook recursive scan. Call-stack depth
//!   grows with the longest tree path, so it is only safe on shallow graphs.
//! * [`EngineKind::VStack`]: an explicit stack of vertices plus a current-arc
//!   slot per stacked vertex.
//! * [`EngineKind::AStack`]: an explicit stack of tree arcs threaded through a
//!   single link slot per vertex. A visitor may own that slot array itself
//!   ([`Visitor::SHARES_LINK`]) and reuse each slot once the engine releases it.
//!
//! All three fire exactly the same event sequence for a given graph and start
//! order; `tests/engines.rs` checks this on random graphs.

mod quick;
mod timestamps;
mod trace;

pub use quick::{quick_search, quick_search_from};
pub use timestamps::{
    classify_arcs, compute_pre_post, depth_first_forest, ArcClass, Forest, TimeStamps,
};
pub use trace::{trace, Event, ExplorationTrace, Recording};

use crate::error::{Error, Result};
use crate::graph::{ArcId, Graph, VertexId};

/// Event handlers for a depth-first exploration.
///
/// `start`, `unvisited` and `previsit` are mandatory: `start` must mark every
/// vertex unvisited, `previsit` must mark its vertex visited and `unvisited`
/// must report exactly the vertices not yet previsited. Every other handler
/// defaults to a no-op that monomorphizes away.
pub trait Visitor {
    fn start(&mut self, g: &Graph);
    fn unvisited(&self, v: VertexId) -> bool;
    fn previsit(&mut self, v: VertexId);

    fn postvisit(&mut self, _v: VertexId) {}
    /// A new search begins at `s` (fires before `previsit(s)`).
    fn search_start(&mut self, _s: VertexId) {}
    fn advance(&mut self, _v: VertexId, _a: ArcId, _w: VertexId) {}
    fn tree_advance(&mut self, _v: VertexId, _a: ArcId, _w: VertexId) {}
    fn tree_retreat(&mut self, _v: VertexId, _a: ArcId, _w: VertexId) {}
    fn nontree_traverse(&mut self, _v: VertexId, _a: ArcId, _w: VertexId) {}
    fn retreat(&mut self, _v: VertexId, _a: ArcId, _w: VertexId) {}

    /// Polled after every previsit and every retreat; `true` ends the
    /// exploration early.
    fn halt(&self) -> bool {
        false
    }

    /// Called once when [`Visitor::halt`] stopped the run, with the current
    /// path listed from the current vertex back to the search start.
    fn halted(&mut self, _path: &[VertexId]) {}

    /// When `true`, the arc-stack engine threads its stack through the
    /// visitor's own per-vertex slot via [`Visitor::set_link`] and
    /// [`Visitor::release_link`] instead of allocating its own.
    const SHARES_LINK: bool = false;

    /// Engine takes slot `v` and stores `x` in it.
    fn set_link(&mut self, _v: VertexId, _x: u32) {
        unreachable!("visitor does not share its link slots")
    }

    /// Engine reads slot `v` for the last time; the slot is the visitor's again.
    fn release_link(&mut self, _v: VertexId) -> u32 {
        unreachable!("visitor does not share its link slots")
    }
}

impl<V: Visitor + ?Sized> Visitor for &mut V {
    fn start(&mut self, g: &Graph) {
        (**self).start(g)
    }
    fn unvisited(&self, v: VertexId) -> bool {
        (**self).unvisited(v)
    }
    fn previsit(&mut self, v: VertexId) {
        (**self).previsit(v)
    }
    fn postvisit(&mut self, v: VertexId) {
        (**self).postvisit(v)
    }
    fn search_start(&mut self, s: VertexId) {
        (**self).search_start(s)
    }
    fn advance(&mut self, v: VertexId, a: ArcId, w: VertexId) {
        (**self).advance(v, a, w)
    }
    fn tree_advance(&mut self, v: VertexId, a: ArcId, w: VertexId) {
        (**self).tree_advance(v, a, w)
    }
    fn tree_retreat(&mut self, v: VertexId, a: ArcId, w: VertexId) {
        (**self).tree_retreat(v, a, w)
    }
    fn nontree_traverse(&mut self, v: VertexId, a: ArcId, w: VertexId) {
        (**self).nontree_traverse(v, a, w)
    }
    fn retreat(&mut self, v: VertexId, a: ArcId, w: VertexId) {
        (**self).retreat(v, a, w)
    }
    fn halt(&self) -> bool {
        (**self).halt()
    }
    fn halted(&mut self, path: &[VertexId]) {
        (**self).halted(path)
    }
    const SHARES_LINK: bool = V::SHARES_LINK;
    fn set_link(&mut self, v: VertexId, x: u32) {
        (**self).set_link(v, x)
    }
    fn release_link(&mut self, v: VertexId) -> u32 {
        (**self).release_link(v)
    }
}

/// The minimal visitor: one visited bit per vertex.
#[derive(Debug, Default, Clone)]
pub struct Marks {
    visited: Vec<bool>,
}

impl Visitor for Marks {
    fn start(&mut self, g: &Graph) {
        self.visited.clear();
        self.visited.resize(g.n() + 1, false);
    }
    fn unvisited(&self, v: VertexId) -> bool {
        !self.visited[v.index()]
    }
    fn previsit(&mut self, v: VertexId) {
        self.visited[v.index()] = true;
    }
}

/// Which stack mechanics carry the exploration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum EngineKind {
    Recursive,
    VStack,
    #[default]
    AStack,
}

impl EngineKind {
    pub const ALL: [EngineKind; 3] = [
        EngineKind::Recursive,
        EngineKind::VStack,
        EngineKind::AStack,
    ];
}

/// Push/pop discipline of the vertex-stack engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VStackVariant {
    /// Pops the parent on every retreat and pushes it again on every advance.
    Basic,
    /// Keeps the current vertex on the stack across advances, so each
    /// non-leaf vertex is pushed and popped exactly once.
    #[default]
    Optimized,
}

/// How an exploration ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Completed,
    Halted,
}

/// Runs a depth-first exploration of `g`. Searches start at unvisited vertices
/// in `start_order` (ascending ids when `None`); arcs are taken in out-list order.
pub fn explore<V: Visitor>(
    g: &Graph,
    engine: EngineKind,
    visitor: &mut V,
    start_order: Option<&[VertexId]>,
) -> Result<Outcome> {
    match engine {
        EngineKind::Recursive => Recursive::new().run(g, visitor, start_order),
        EngineKind::VStack => VStack::new(g, VStackVariant::Optimized).run(g, visitor, start_order),
        EngineKind::AStack => AStack::new(g, V::SHARES_LINK).run(g, visitor, start_order),
    }
}

/// Runs the vertex-stack engine with an explicit variant and reports how often
/// each vertex was pushed.
pub fn explore_vstack<V: Visitor>(
    g: &Graph,
    variant: VStackVariant,
    visitor: &mut V,
    start_order: Option<&[VertexId]>,
) -> Result<(Outcome, Vec<u32>)> {
    let mut engine = VStack::new(g, variant);
    engine.pushes = Some(vec![0; g.n() + 1]);
    let outcome = engine.run(g, visitor, start_order)?;
    Ok((outcome, engine.pushes.unwrap_or_default()))
}

/// Fails unless `order` is a permutation of `1..=n`.
pub fn check_start_order(n: usize, order: &[VertexId]) -> Result<()> {
    if order.len() != n {
        return Err(Error::InvalidStartOrder {
            n,
            reason: format!("length {} differs from n", order.len()),
        });
    }
    let mut seen = vec![false; n + 1];
    for &v in order {
        if v.is_none() || v.index() > n {
            return Err(Error::InvalidStartOrder {
                n,
                reason: format!("vertex {v} out of range"),
            });
        }
        if std::mem::replace(&mut seen[v.index()], true) {
            return Err(Error::InvalidStartOrder {
                n,
                reason: format!("vertex {v} repeated"),
            });
        }
    }
    Ok(())
}

trait Engine {
    /// Depth-first search from unvisited `s`; returns `true` if the visitor halted.
    fn search<V: Visitor>(&mut self, g: &Graph, vis: &mut V, s: VertexId) -> Result<bool>;

    fn run<V: Visitor>(
        &mut self,
        g: &Graph,
        vis: &mut V,
        start_order: Option<&[VertexId]>,
    ) -> Result<Outcome> {
        vis.start(g);
        match start_order {
            None => {
                for s in g.vertices() {
                    if self.begin(g, vis, s)? {
                        return Ok(Outcome::Halted);
                    }
                }
            }
            Some(order) => {
                check_start_order(g.n(), order)?;
                for &s in order {
                    if self.begin(g, vis, s)? {
                        return Ok(Outcome::Halted);
                    }
                }
            }
        }
        Ok(Outcome::Completed)
    }

    #[inline]
    fn begin<V: Visitor>(&mut self, g: &Graph, vis: &mut V, s: VertexId) -> Result<bool> {
        if vis.unvisited(s) {
            vis.search_start(s);
            self.search(g, vis, s)
        } else {
            Ok(false)
        }
    }
}

struct Recursive {
    path: Vec<VertexId>,
}

impl Recursive {
    fn new() -> Self {
        Recursive { path: Vec::new() }
    }

    fn dfs<V: Visitor>(g: &Graph, vis: &mut V, v: VertexId, path: &mut Vec<VertexId>) -> bool {
        vis.previsit(v);
        if vis.halt() {
            path.push(v);
            return true;
        }
        let mut a = g.first(v);
        while !a.is_none() {
            let w = g.tip(a);
            vis.advance(v, a, w);
            if vis.unvisited(w) {
                vis.tree_advance(v, a, w);
                if Self::dfs(g, vis, w, path) {
                    path.push(v);
                    return true;
                }
                vis.tree_retreat(v, a, w);
            } else {
                vis.nontree_traverse(v, a, w);
            }
            vis.retreat(v, a, w);
            if vis.halt() {
                path.push(v);
                return true;
            }
            a = g.next(a);
        }
        vis.postvisit(v);
        false
    }
}

impl Engine for Recursive {
    fn search<V: Visitor>(&mut self, g: &Graph, vis: &mut V, s: VertexId) -> Result<bool> {
        self.path.clear();
        if Self::dfs(g, vis, s, &mut self.path) {
            vis.halted(&self.path);
            return Ok(true);
        }
        Ok(false)
    }
}

/// Vertex stack `P` linked through `ptr`; `arc[u]` is the current arc out of
/// each stacked vertex `u`.
struct VStack {
    variant: VStackVariant,
    ptr: Vec<u32>,
    arc: Vec<ArcId>,
    top: u32,
    pushes: Option<Vec<u32>>,
}

impl VStack {
    fn new(g: &Graph, variant: VStackVariant) -> Self {
        VStack {
            variant,
            ptr: vec![0; g.n() + 1],
            arc: vec![ArcId::NONE; g.n() + 1],
            top: 0,
            pushes: None,
        }
    }

    #[inline]
    fn push(&mut self, v: VertexId) {
        self.ptr[v.index()] = self.top;
        self.top = v.0;
        if let Some(p) = self.pushes.as_mut() {
            p[v.index()] += 1;
        }
    }

    #[inline]
    fn pop(&mut self) -> Result<VertexId> {
        if self.top == 0 {
            return Err(Error::InternalInvariant(
                "pop from empty vertex stack".into(),
            ));
        }
        let v = VertexId(self.top);
        self.top = self.ptr[v.index()];
        Ok(v)
    }

    fn halt_path<V: Visitor>(&mut self, vis: &mut V, v: VertexId) {
        let mut path = vec![v];
        let mut u = self.top;
        while u != 0 {
            if u != v.0 {
                path.push(VertexId(u));
            }
            u = self.ptr[u as usize];
        }
        self.top = 0;
        vis.halted(&path);
    }
}

impl Engine for VStack {
    fn search<V: Visitor>(&mut self, g: &Graph, vis: &mut V, s: VertexId) -> Result<bool> {
        let optimized = self.variant == VStackVariant::Optimized;
        let mut v = s;
        vis.previsit(v);
        if vis.halt() {
            self.halt_path(vis, v);
            return Ok(true);
        }
        let mut a = g.first(v);
        let mut w;
        loop {
            if !a.is_none() {
                w = g.tip(a);
                vis.advance(v, a, w);
                if vis.unvisited(w) {
                    vis.tree_advance(v, a, w);
                    vis.previsit(w);
                    // FORWARD
                    self.arc[v.index()] = a;
                    if !optimized || self.top != v.0 {
                        self.push(v);
                    }
                    v = w;
                    a = g.first(v);
                    if vis.halt() {
                        self.halt_path(vis, v);
                        return Ok(true);
                    }
                    continue;
                }
                vis.nontree_traverse(v, a, w);
            } else {
                vis.postvisit(v);
                if v == s {
                    if optimized && self.top == s.0 {
                        self.pop()?;
                    }
                    debug_assert_eq!(self.top, 0);
                    return Ok(false);
                }
                // BACKWARD
                w = v;
                if optimized {
                    if self.top == v.0 {
                        self.pop()?;
                    }
                    if self.top == 0 {
                        return Err(Error::InternalInvariant(
                            "vertex stack empty below a non-root vertex".into(),
                        ));
                    }
                    v = VertexId(self.top);
                } else {
                    v = self.pop()?;
                }
                a = self.arc[v.index()];
                vis.tree_retreat(v, a, w);
            }
            vis.retreat(v, a, w);
            if vis.halt() {
                self.halt_path(vis, v);
                return Ok(true);
            }
            a = g.next(a);
        }
    }
}

/// Arc stack `P` of tree arcs on the current path. For a path vertex `u` with
/// a grandparent, slot `u` holds the tree arc entering `u`'s parent.
struct AStack {
    own: Vec<u32>,
}

impl AStack {
    fn new(g: &Graph, shared: bool) -> Self {
        AStack {
            own: if shared {
                Vec::new()
            } else {
                vec![0; g.n() + 1]
            },
        }
    }

    #[inline]
    fn set_link<V: Visitor>(&mut self, vis: &mut V, v: VertexId, x: u32) {
        if V::SHARES_LINK {
            vis.set_link(v, x)
        } else {
            self.own[v.index()] = x
        }
    }

    #[inline]
    fn release_link<V: Visitor>(&mut self, vis: &mut V, v: VertexId) -> u32 {
        if V::SHARES_LINK {
            vis.release_link(v)
        } else {
            self.own[v.index()]
        }
    }

    fn halt_path<V: Visitor>(
        &mut self,
        g: &Graph,
        vis: &mut V,
        s: VertexId,
        v: VertexId,
        mut p: ArcId,
    ) {
        let mut path = vec![v];
        while !p.is_none() {
            let x = g.tip(p);
            p = ArcId(self.release_link(vis, x));
            path.push(if p.is_none() { s } else { g.tip(p) });
        }
        vis.halted(&path);
    }
}

impl Engine for AStack {
    fn search<V: Visitor>(&mut self, g: &Graph, vis: &mut V, s: VertexId) -> Result<bool> {
        let mut p = ArcId::NONE;
        let mut v = s;
        vis.previsit(v);
        if vis.halt() {
            self.halt_path(g, vis, s, v, p);
            return Ok(true);
        }
        let mut a = g.first(v);
        let mut w;
        loop {
            if !a.is_none() {
                w = g.tip(a);
                vis.advance(v, a, w);
                if vis.unvisited(w) {
                    vis.tree_advance(v, a, w);
                    vis.previsit(w);
                    // FORWARD
                    self.set_link(vis, w, p.0);
                    p = a;
                    v = w;
                    a = g.first(v);
                    if vis.halt() {
                        self.halt_path(g, vis, s, v, p);
                        return Ok(true);
                    }
                    continue;
                }
                vis.nontree_traverse(v, a, w);
            } else {
                // The tree arc entering v leaves the stack before v's
                // postvisit, so v's slot is free during and after it.
                if v != s {
                    if p.is_none() {
                        return Err(Error::InternalInvariant("pop from empty arc stack".into()));
                    }
                    a = p;
                    p = ArcId(self.release_link(vis, v));
                }
                vis.postvisit(v);
                if v == s {
                    return Ok(false);
                }
                // BACKWARD
                w = v;
                v = if p.is_none() { s } else { g.tip(p) };
                vis.tree_retreat(v, a, w);
            }
            vis.retreat(v, a, w);
            if vis.halt() {
                self.halt_path(g, vis, s, v, p);
                return Ok(true);
            }
            a = g.next(a);
        }
    }
}
