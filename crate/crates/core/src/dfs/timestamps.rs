use super::{explore, EngineKind, Visitor};
use crate::error::Result;
use crate::graph::{ArcId, Graph, VertexId};

/// Previsit and postvisit times; the `2n` values are exactly `1..=2n`.
/// Index 0 is unused.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TimeStamps {
    pub pre: Vec<u32>,
    pub post: Vec<u32>,
}

impl TimeStamps {
    #[inline]
    pub fn pre(&self, v: VertexId) -> u32 {
        self.pre[v.index()]
    }

    #[inline]
    pub fn post(&self, v: VertexId) -> u32 {
        self.post[v.index()]
    }

    /// `w` is a (possibly improper) tree descendant of `v`.
    #[inline]
    pub fn is_descendant(&self, w: VertexId, v: VertexId) -> bool {
        self.pre(v) <= self.pre(w) && self.pre(w) < self.post(v)
    }
}

/// Timestamps plus the depth-first forest of one exploration.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Forest {
    pub stamps: TimeStamps,
    /// Tree arc entering each vertex; `NONE` at roots.
    pub tree_arc: Vec<ArcId>,
    /// Parent of each vertex; `NONE` at roots.
    pub parent: Vec<VertexId>,
    pub roots: Vec<VertexId>,
}

impl Forest {
    /// Per-arc membership in the forest, indexed by arc id.
    pub fn tree_arc_set(&self, m: usize) -> Vec<bool> {
        let mut set = vec![false; m + 1];
        for a in &self.tree_arc {
            if !a.is_none() {
                set[a.index()] = true;
            }
        }
        set
    }
}

#[derive(Default)]
struct Clock {
    time: u32,
    forest: Forest,
}

impl Visitor for Clock {
    fn start(&mut self, g: &Graph) {
        let n = g.n();
        self.time = 0;
        self.forest = Forest {
            stamps: TimeStamps {
                pre: vec![0; n + 1],
                post: vec![0; n + 1],
            },
            tree_arc: vec![ArcId::NONE; n + 1],
            parent: vec![VertexId::NONE; n + 1],
            roots: Vec::new(),
        };
    }
    fn unvisited(&self, v: VertexId) -> bool {
        self.forest.stamps.pre[v.index()] == 0
    }
    fn previsit(&mut self, v: VertexId) {
        self.time += 1;
        self.forest.stamps.pre[v.index()] = self.time;
    }
    fn postvisit(&mut self, v: VertexId) {
        self.time += 1;
        self.forest.stamps.post[v.index()] = self.time;
    }
    fn search_start(&mut self, s: VertexId) {
        self.forest.roots.push(s);
    }
    fn tree_advance(&mut self, v: VertexId, a: ArcId, w: VertexId) {
        self.forest.tree_arc[w.index()] = a;
        self.forest.parent[w.index()] = v;
    }
}

/// Assigns consecutive times `1..=2n` to previsits and postvisits.
pub fn compute_pre_post(
    g: &Graph,
    engine: EngineKind,
    start_order: Option<&[VertexId]>,
) -> Result<TimeStamps> {
    Ok(depth_first_forest(g, engine, start_order)?.stamps)
}

/// Timestamps together with the tree arcs of the exploration.
pub fn depth_first_forest(
    g: &Graph,
    engine: EngineKind,
    start_order: Option<&[VertexId]>,
) -> Result<Forest> {
    let mut clock = Clock::default();
    explore(g, engine, &mut clock, start_order)?;
    Ok(clock.forest)
}

/// Arc type relative to a depth-first forest. Loops are their own type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcClass {
    Tree,
    Back,
    Forward,
    Cross,
    Loop,
}

/// Classifies every arc (indexed by arc id; slot 0 is a placeholder) using
/// interval nesting of the timestamps.
pub fn classify_arcs(g: &Graph, stamps: &TimeStamps, tree: &[bool]) -> Vec<ArcClass> {
    let mut classes = vec![ArcClass::Loop; g.m() + 1];
    for (a, v, w) in g.arcs() {
        classes[a.index()] = if v == w {
            ArcClass::Loop
        } else if tree[a.index()] {
            ArcClass::Tree
        } else if stamps.is_descendant(v, w) {
            ArcClass::Back
        } else if stamps.is_descendant(w, v) {
            ArcClass::Forward
        } else {
            ArcClass::Cross
        };
    }
    classes
}
