//! The cycle-finding algorithm: contract cycles as the search finds them.
//!
//! Previsited vertices are grouped into strongly connected sets. The leaders
//! of the live sets sit on stack `L` in current-path order; a non-tree arc to
//! a vertex of an earlier set merges every set above it, moving their leaders
//! from `L` to the follower stack `F`. When a vertex on top of `L` is
//! postvisited, its set is a strong component and its followers are popped.
//!
//! One per-vertex link slot serves `L`, `F` and the final leader map, since a
//! vertex is on at most one stack at a time. `F` has a guard with `pre = 0`;
//! `L` needs none, because slot 0 also has `pre = 0` and nothing has a
//! smaller `pre`. Completed vertices get `pre = 2n + 1`.

use crate::dfs::{explore, EngineKind, Outcome, Visitor};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::scc::{OrderKind, SccResult, WithinOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CycleOptions {
    pub engine: EngineKind,
    /// Finish once every vertex is previsited and `L` holds only the start vertex.
    pub stop_early: bool,
}

/// Strong components of `g`, emitted in reverse topological order with each
/// component's vertices in preorder (leader first).
pub fn scc_cycle(g: &Graph, opts: CycleOptions) -> Result<SccResult> {
    Ok(scc_cycle_run(g, opts, None)?.0)
}

/// [`scc_cycle`] with an explicit start order.
pub fn scc_cycle_run(
    g: &Graph,
    opts: CycleOptions,
    start_order: Option<&[VertexId]>,
) -> Result<(SccResult, Outcome)> {
    let mut c = CycleVisitor::new(opts.stop_early);
    let outcome = explore(g, opts.engine, &mut c, start_order)?;
    Ok((c.finish()?, outcome))
}

/// Algorithm state, usable directly as a [`Visitor`].
#[derive(Debug, Default)]
pub struct CycleVisitor {
    stop_early: bool,
    n: usize,
    pre: Vec<u32>,
    link: Vec<u32>,
    l_top: u32,
    l_len: usize,
    f_top: u32,
    time: u32,
    infinity: u32,
    previsited: usize,
    stop: bool,
    members: Vec<VertexId>,
    offsets: Vec<usize>,
    fault: Option<String>,
}

impl CycleVisitor {
    pub fn new(stop_early: bool) -> Self {
        CycleVisitor {
            stop_early,
            ..Default::default()
        }
    }

    /// Stop-early condition: all vertices previsited and `L` down to one leader.
    pub fn stop_early_trigger(&self) -> bool {
        self.previsited == self.n && self.n > 0 && self.l_len == 1
    }

    /// Leaders on `L`, bottom first.
    pub fn leaders_stack(&self) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.l_len);
        let mut x = self.l_top;
        while x != 0 {
            out.push(VertexId(x));
            x = self.link[x as usize];
        }
        out.reverse();
        out
    }

    /// Pops followers with `pre` above `floor` and assigns them to `leader`.
    /// Emits `leader` first and the followers sorted by `pre`.
    fn emit(&mut self, leader: VertexId, floor: u32) {
        let start = self.members.len();
        self.members.push(leader);
        while floor < self.pre[self.f_top as usize] {
            let x = self.f_top;
            self.f_top = self.link[x as usize];
            self.link[x as usize] = leader.0;
            self.members.push(VertexId(x));
        }
        let pre = &self.pre;
        self.members[start + 1..].sort_unstable_by_key(|x| pre[x.index()]);
        for &x in &self.members[start..] {
            self.pre[x.index()] = self.infinity;
        }
        self.link[leader.index()] = leader.0;
        self.offsets.push(self.members.len());
    }

    fn finish(self) -> Result<SccResult> {
        if let Some(msg) = self.fault {
            return Err(Error::InternalInvariant(msg));
        }
        if self.f_top != 0 || self.l_top != 0 {
            return Err(Error::InternalInvariant(
                "stack not empty at the end".into(),
            ));
        }
        let leader = std::iter::once(VertexId::NONE)
            .chain(self.link[1..].iter().map(|&x| VertexId(x)))
            .collect();
        Ok(SccResult::from_parts(
            leader,
            self.members,
            self.offsets,
            OrderKind::ReverseTopological,
            WithinOrder::Preorder,
        ))
    }
}

impl Visitor for CycleVisitor {
    fn start(&mut self, g: &Graph) {
        let n = g.n();
        self.n = n;
        self.pre = vec![0; n + 1];
        self.link = vec![0; n + 1];
        self.l_top = 0;
        self.l_len = 0;
        self.f_top = 0;
        self.time = 0;
        self.infinity = 2 * n as u32 + 1;
        self.previsited = 0;
        self.stop = false;
        self.members = Vec::with_capacity(n);
        self.offsets = vec![0];
        self.fault = None;
    }

    #[inline]
    fn unvisited(&self, v: VertexId) -> bool {
        self.pre[v.index()] == 0
    }

    #[inline]
    fn previsit(&mut self, v: VertexId) {
        self.time += 1;
        self.pre[v.index()] = self.time;
        self.link[v.index()] = self.l_top;
        self.l_top = v.0;
        self.l_len += 1;
        self.previsited += 1;
        if self.stop_early {
            self.stop = self.stop_early_trigger();
        }
    }

    #[inline]
    fn nontree_traverse(&mut self, _v: VertexId, _a: crate::graph::ArcId, w: VertexId) {
        let pw = self.pre[w.index()];
        while pw < self.pre[self.l_top as usize] {
            let x = self.l_top;
            self.l_top = self.link[x as usize];
            self.l_len -= 1;
            self.link[x as usize] = self.f_top;
            self.f_top = x;
        }
        if self.stop_early {
            self.stop = self.stop_early_trigger();
        }
    }

    #[inline]
    fn postvisit(&mut self, v: VertexId) {
        if v.0 == self.l_top {
            self.l_top = self.link[v.index()];
            self.l_len -= 1;
            let floor = self.pre[v.index()];
            self.emit(v, floor);
        }
    }

    #[inline]
    fn halt(&self) -> bool {
        self.stop
    }

    fn halted(&mut self, path: &[VertexId]) {
        let Some(&s) = path.last() else {
            self.fault = Some("halted with an empty path".into());
            return;
        };
        if self.l_top != s.0 || self.l_len != 1 {
            self.fault = Some(format!("halted with {} leaders on L", self.l_len));
            return;
        }
        self.l_top = 0;
        self.l_len = 0;
        // Every other live vertex, including the rest of the path, is on F.
        self.emit(s, 0);
    }
}

/// Runs the algorithm under a checker that keeps the sets explicitly and
/// asserts the correctness invariants at every previsit, postvisit and
/// non-tree traversal. Returns the result and every violation found.
pub fn audit_cycle(
    g: &Graph,
    engine: EngineKind,
    start_order: Option<&[VertexId]>,
) -> Result<(SccResult, Vec<String>)> {
    let oracle = crate::testkit::oracle_scc(g)?;
    let mut audit = Audit {
        inner: CycleVisitor::new(false),
        g,
        rev: crate::graph::reverse_graph(g),
        oracle,
        set_of: Vec::new(),
        path: Vec::new(),
        violations: Vec::new(),
    };
    explore(g, engine, &mut audit, start_order)?;
    let violations = audit.violations;
    Ok((audit.inner.finish()?, violations))
}

struct Audit<'g> {
    inner: CycleVisitor,
    g: &'g Graph,
    rev: Graph,
    oracle: crate::testkit::OraclePartition,
    /// Leader of each vertex's live set; NONE if unvisited or completed.
    set_of: Vec<VertexId>,
    path: Vec<VertexId>,
    violations: Vec<String>,
}

impl Audit<'_> {
    fn fail(&mut self, what: String) {
        if self.violations.len() < 64 {
            self.violations.push(what);
        }
    }

    fn in_set(&self, x: VertexId) -> bool {
        !self.set_of[x.index()].is_none()
    }

    fn members_of(&self, leader: VertexId) -> Vec<VertexId> {
        self.g
            .vertices()
            .filter(|&x| self.set_of[x.index()] == leader)
            .collect()
    }

    /// Vertices of `set` reachable from `from` inside `set`.
    fn reach_within(g: &Graph, set: &[bool], from: VertexId) -> usize {
        let mut seen = vec![false; g.n() + 1];
        let mut stack = vec![from];
        seen[from.index()] = true;
        let mut count = 0;
        while let Some(x) = stack.pop() {
            count += 1;
            for a in g.out_arcs(x) {
                let y = g.tip(a);
                if set[y.index()] && !seen[y.index()] {
                    seen[y.index()] = true;
                    stack.push(y);
                }
            }
        }
        count
    }

    fn check(&mut self, event: &str) {
        let c = &self.inner;
        let n = self.g.n();
        let pre = |x: VertexId| c.pre[x.index()];
        let live = |x: VertexId| pre(x) != 0 && pre(x) != c.infinity;
        let l = c.leaders_stack();
        let mut errs = Vec::new();

        // (i) the vertices in sets are the live previsited vertices
        for x in self.g.vertices() {
            if live(x) != self.in_set(x) {
                errs.push(format!("(i) vertex {x} set membership disagrees with pre"));
            }
        }
        // (ii) L is a subsequence of the current path
        let mut pos = 0;
        for &u in &l {
            match self.path[pos..].iter().position(|&p| p == u) {
                Some(k) => pos += k + 1,
                None => errs.push(format!("(ii) leader {u} not on the path in order")),
            }
        }
        // (iii) every set's leader has the minimum pre in the set
        for x in self.g.vertices().filter(|&x| self.in_set(x)) {
            let lead = self.set_of[x.index()];
            if pre(x) < pre(lead) {
                errs.push(format!("(iii) {x} precedes its leader {lead}"));
            }
        }
        // (iv) every path vertex belongs to a set whose leader is on L
        for &p in &self.path {
            if !l.contains(&self.set_of[p.index()]) {
                errs.push(format!("(iv) path vertex {p} has no leader on L"));
            }
        }
        // (v) sets are the pre-intervals between consecutive leaders on L
        for (k, &u) in l.iter().enumerate() {
            let hi = l.get(k + 1).map_or(c.infinity, |&w| pre(w));
            for x in self.g.vertices().filter(|&x| live(x)) {
                let inside = pre(u) <= pre(x) && pre(x) < hi;
                if inside != (self.set_of[x.index()] == u) {
                    errs.push(format!("(v) vertex {x} vs interval of leader {u}"));
                }
            }
        }
        // (vi) every set is strongly connected
        for &u in &l {
            let mut mask = vec![false; n + 1];
            let mut size = 0;
            for x in self.members_of(u) {
                mask[x.index()] = true;
                size += 1;
            }
            if Self::reach_within(self.g, &mask, u) != size
                || Self::reach_within(&self.rev, &mask, u) != size
            {
                errs.push(format!("(vi) set of {u} is not strongly connected"));
            }
        }
        for e in errs {
            self.fail(format!("after {event}: {e}"));
        }
    }
}

impl Visitor for Audit<'_> {
    fn start(&mut self, g: &Graph) {
        self.inner.start(g);
        self.set_of = vec![VertexId::NONE; g.n() + 1];
        self.path.clear();
    }

    fn unvisited(&self, v: VertexId) -> bool {
        self.inner.unvisited(v)
    }

    fn previsit(&mut self, v: VertexId) {
        self.inner.previsit(v);
        self.set_of[v.index()] = v;
        self.path.push(v);
        self.check(&format!("previsit {v}"));
    }

    fn nontree_traverse(&mut self, v: VertexId, a: crate::graph::ArcId, w: VertexId) {
        let before = self.inner.leaders_stack();
        self.inner.nontree_traverse(v, a, w);
        let after = self.inner.leaders_stack();
        if after.len() < before.len() {
            let united = &before[after.len() - 1..];
            let u = united[0];
            // Cycle witness: w lies in u's set, and the path from u down to v
            // is a chain of arcs passing every united leader.
            if self.set_of[w.index()] != u {
                self.fail(format!("witness: tip {w} of {a} not in the set of {u}"));
            }
            match self.path.iter().position(|&p| p == u) {
                Some(k) => {
                    let seg = self.path[k..].to_vec();
                    if seg.last() != Some(&v) {
                        self.fail(format!("witness: path from {u} does not end at {v}"));
                    }
                    for pair in seg.windows(2) {
                        if !self.g.out_arcs(pair[0]).any(|b| self.g.tip(b) == pair[1]) {
                            self.fail(format!("witness: no arc {} -> {}", pair[0], pair[1]));
                        }
                    }
                    for x in united {
                        if !seg.contains(x) {
                            self.fail(format!("witness: united leader {x} off the cycle"));
                        }
                    }
                }
                None => self.fail(format!("witness: leader {u} not on the path")),
            }
            for x in 1..self.set_of.len() {
                if united[1..].contains(&self.set_of[x]) {
                    self.set_of[x] = u;
                }
            }
        }
        self.check(&format!("traversal of {a}"));
    }

    fn postvisit(&mut self, v: VertexId) {
        let on_top = self.inner.l_top == v.0;
        let declared = if on_top {
            let set = self.members_of(v);
            // (vii) the popped set is a strong component
            let id = self.oracle.id(v);
            let comp: Vec<VertexId> = self
                .g
                .vertices()
                .filter(|&x| self.oracle.id(x) == id)
                .collect();
            let mut sorted = set.clone();
            sorted.sort_unstable();
            if sorted != comp {
                self.fail(format!("(vii) set of {v} is not its strong component"));
            }
            Some(sorted)
        } else {
            None
        };
        self.inner.postvisit(v);
        if let Some(set) = declared {
            let k = self.inner.offsets.len() - 2;
            let mut emitted =
                self.inner.members[self.inner.offsets[k]..self.inner.offsets[k + 1]].to_vec();
            emitted.sort_unstable();
            if emitted != set {
                self.fail(format!("emitted component of {v} differs from its set"));
            }
            for x in set {
                self.set_of[x.index()] = VertexId::NONE;
            }
        }
        if self.path.pop() != Some(v) {
            self.fail(format!("postvisit of {v} off the path top"));
        }
        self.check(&format!("postvisit {v}"));
    }
}
