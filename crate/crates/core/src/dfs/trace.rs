use std::fmt;

use super::{explore, EngineKind, Marks, Visitor};
use crate::error::Result;
use crate::graph::{ArcId, Graph, VertexId};

/// One fired exploration event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Event {
    SearchStart(VertexId),
    Previsit(VertexId),
    Postvisit(VertexId),
    TreeAdvance(VertexId, ArcId, VertexId),
    NontreeTraverse(VertexId, ArcId, VertexId),
    TreeRetreat(VertexId, ArcId, VertexId),
    Retreat(VertexId, ArcId, VertexId),
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Event::SearchStart(s) => write!(f, "START({s})"),
            Event::Previsit(v) => write!(f, "PRE({v})"),
            Event::Postvisit(v) => write!(f, "POST({v})"),
            Event::TreeAdvance(v, a, w) => write!(f, "TREE_ADV({v},{a},{w})"),
            Event::NontreeTraverse(v, a, w) => write!(f, "NONTREE({v},{a},{w})"),
            Event::TreeRetreat(v, a, w) => write!(f, "TREE_RET({v},{a},{w})"),
            Event::Retreat(v, a, w) => write!(f, "RET({v},{a},{w})"),
        }
    }
}

/// Events of one exploration in execution order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExplorationTrace {
    pub events: Vec<Event>,
}

impl fmt::Display for ExplorationTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.events.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Wraps a visitor and records every event it sees.
#[derive(Debug, Default)]
pub struct Recording<V> {
    pub inner: V,
    pub trace: ExplorationTrace,
}

impl<V> Recording<V> {
    pub fn new(inner: V) -> Self {
        Recording {
            inner,
            trace: ExplorationTrace::default(),
        }
    }
}

impl<V: Visitor> Visitor for Recording<V> {
    fn start(&mut self, g: &Graph) {
        self.trace.events.clear();
        self.inner.start(g)
    }
    fn unvisited(&self, v: VertexId) -> bool {
        self.inner.unvisited(v)
    }
    fn previsit(&mut self, v: VertexId) {
        self.trace.events.push(Event::Previsit(v));
        self.inner.previsit(v)
    }
    fn postvisit(&mut self, v: VertexId) {
        self.trace.events.push(Event::Postvisit(v));
        self.inner.postvisit(v)
    }
    fn search_start(&mut self, s: VertexId) {
        self.trace.events.push(Event::SearchStart(s));
        self.inner.search_start(s)
    }
    fn advance(&mut self, v: VertexId, a: ArcId, w: VertexId) {
        self.inner.advance(v, a, w)
    }
    fn tree_advance(&mut self, v: VertexId, a: ArcId, w: VertexId) {
        self.trace.events.push(Event::TreeAdvance(v, a, w));
        self.inner.tree_advance(v, a, w)
    }
    fn tree_retreat(&mut self, v: VertexId, a: ArcId, w: VertexId) {
        self.trace.events.push(Event::TreeRetreat(v, a, w));
        self.inner.tree_retreat(v, a, w)
    }
    fn nontree_traverse(&mut self, v: VertexId, a: ArcId, w: VertexId) {
        self.trace.events.push(Event::NontreeTraverse(v, a, w));
        self.inner.nontree_traverse(v, a, w)
    }
    fn retreat(&mut self, v: VertexId, a: ArcId, w: VertexId) {
        self.trace.events.push(Event::Retreat(v, a, w));
        self.inner.retreat(v, a, w)
    }
    fn halt(&self) -> bool {
        self.inner.halt()
    }
    fn halted(&mut self, path: &[VertexId]) {
        self.inner.halted(path)
    }
    const SHARES_LINK: bool = V::SHARES_LINK;
    fn set_link(&mut self, v: VertexId, x: u32) {
        self.inner.set_link(v, x)
    }
    fn release_link(&mut self, v: VertexId) -> u32 {
        self.inner.release_link(v)
    }
}

/// The full event trace of a plain exploration.
pub fn trace(
    g: &Graph,
    engine: EngineKind,
    start_order: Option<&[VertexId]>,
) -> Result<ExplorationTrace> {
    let mut rec = Recording::new(Marks::default());
    explore(g, engine, &mut rec, start_order)?;
    Ok(rec.trace)
}
