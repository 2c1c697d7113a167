//! Tarjan's algorithm in its streamlined one-pass form.
//!
//! Each vertex carries a `low` value: its previsit time while it may still be
//! a leader, then the minimum over the `low`s of arc tips as its arcs retreat.
//! A vertex whose `low` never dropped below its own time is a leader when it
//! is postvisited; otherwise it is pushed on the follower stack `F`. A leader's
//! postvisit pops its followers off `F`, which form the rest of its component.
//!
//! `F` has a guard at slot 0 with `low = 0`, so pops never test for empty.
//! Completed vertices get `low = 2n + 1`, larger than every live value.
//!
//! With [`EngineKind::AStack`] the engine's arc stack, `F` and the final
//! leader map all live in one per-vertex slot array. A slot is the engine's
//! until the tree arc into its vertex is popped (just before postvisit), then
//! a follower link, then the leader. Debug builds tag each slot with its
//! current owner and assert the hand-offs.

use crate::dfs::{explore, EngineKind, Outcome, Visitor};
use crate::error::{Error, Result};
use crate::graph::{ArcId, Graph, VertexId};
use crate::scc::{OrderKind, SccResult, WithinOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TarjanOptions {
    pub engine: EngineKind,
    /// Keep the leader bit in the low-order bit of `low` instead of a separate array.
    pub encode_leader_bits: bool,
    /// Finish as soon as every vertex is previsited and the rest is one component.
    pub stop_early: bool,
    /// Store `leader + n` (`+ 2n` when encoded) in `low` of completed vertices
    /// instead of writing the leader into the link slot.
    pub numeric_components: bool,
    /// Record the low arc of every follower and the tree arc into every vertex.
    pub record_lowarcs: bool,
}

impl TarjanOptions {
    /// Every combination of the four flags under `engine`.
    pub fn all_flag_combinations(engine: EngineKind) -> impl Iterator<Item = TarjanOptions> {
        (0..16u8).map(move |bits| TarjanOptions {
            engine,
            encode_leader_bits: bits & 1 != 0,
            stop_early: bits & 2 != 0,
            numeric_components: bits & 4 != 0,
            record_lowarcs: bits & 8 != 0,
        })
    }
}

/// Output of [`scc_tarjan_run`].
#[derive(Debug, Clone)]
pub struct TarjanRun {
    pub scc: SccResult,
    /// Per vertex: the arc whose retreat last lowered its `low`; `NONE` for leaders.
    pub lowarcs: Option<Vec<ArcId>>,
    /// Per vertex: the tree arc entering it; `NONE` for search roots.
    pub tree_arcs: Option<Vec<ArcId>>,
    pub outcome: Outcome,
}

/// Leader test and previsit time of an encoded `low` value.
#[inline]
pub fn leader_bit_ops(low_encoded: u32) -> (bool, u32) {
    (low_encoded & 1 == 0, low_encoded >> 1)
}

/// Strong components of `g`, emitted in reverse topological order with each
/// component's vertices in postorder (leader last).
pub fn scc_tarjan(g: &Graph, opts: TarjanOptions) -> Result<SccResult> {
    Ok(scc_tarjan_run(g, opts, None)?.scc)
}

/// [`scc_tarjan`] with an explicit start order and the recorded arcs.
pub fn scc_tarjan_run(
    g: &Graph,
    opts: TarjanOptions,
    start_order: Option<&[VertexId]>,
) -> Result<TarjanRun> {
    let mut t = TarjanVisitor::new(opts);
    let outcome = explore(g, opts.engine, &mut t, start_order)?;
    t.finish(outcome)
}

#[cfg(debug_assertions)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Free,
    Engine,
    Released,
    Follower,
    Leader,
}

/// Algorithm state, usable directly as a [`Visitor`].
#[derive(Debug, Default)]
pub struct TarjanVisitor {
    opts: TarjanOptions,
    n: usize,
    low: Vec<u32>,
    lead: Vec<bool>,
    link: Vec<u32>,
    f_top: u32,
    time: u32,
    step: u32,
    infinity: u32,
    offset: u32,
    previsited: usize,
    search_start: VertexId,
    stop: bool,
    lowarc: Vec<ArcId>,
    tree_arc: Vec<ArcId>,
    members: Vec<VertexId>,
    offsets: Vec<usize>,
    fault: Option<String>,
    #[cfg(debug_assertions)]
    slot: Vec<Slot>,
}

impl TarjanVisitor {
    pub fn new(opts: TarjanOptions) -> Self {
        TarjanVisitor {
            opts,
            ..Default::default()
        }
    }

    #[inline]
    fn is_leader(&self, v: VertexId) -> bool {
        if self.opts.encode_leader_bits {
            leader_bit_ops(self.low[v.index()]).0
        } else {
            self.lead[v.index()]
        }
    }

    #[inline]
    fn same_low(&self, x: u32, y: u32) -> bool {
        if self.opts.encode_leader_bits {
            x | 1 == y | 1
        } else {
            x == y
        }
    }

    /// Stop-early condition: all vertices previsited and `low` of a current
    /// vertex other than the search start equal to `low` of the start.
    pub fn stop_early_trigger(&self, current: VertexId, search_start: VertexId) -> bool {
        self.previsited == self.n
            && current != search_start
            && self.same_low(self.low[current.index()], self.low[search_start.index()])
    }

    #[inline]
    fn completed(&self, leader: VertexId) -> u32 {
        if self.opts.numeric_components {
            leader.0 + self.offset
        } else {
            self.infinity
        }
    }

    #[inline]
    fn assign(&mut self, x: VertexId, leader: VertexId) {
        #[cfg(debug_assertions)]
        {
            let s = &mut self.slot[x.index()];
            debug_assert!(
                matches!(*s, Slot::Free | Slot::Released | Slot::Follower),
                "slot {x} assigned a leader while {s:?}"
            );
            *s = Slot::Leader;
        }
        self.low[x.index()] = self.completed(leader);
        if !self.opts.numeric_components {
            self.link[x.index()] = leader.0;
        }
        self.members.push(x);
    }

    fn leader_of(&self, v: VertexId) -> VertexId {
        if self.opts.numeric_components {
            VertexId(self.low[v.index()] - self.offset)
        } else {
            VertexId(self.link[v.index()])
        }
    }

    fn finish(self, outcome: Outcome) -> Result<TarjanRun> {
        if let Some(msg) = self.fault {
            return Err(Error::InternalInvariant(msg));
        }
        if self.f_top != 0 {
            return Err(Error::InternalInvariant(
                "follower stack not empty at the end".into(),
            ));
        }
        let leader: Vec<VertexId> = std::iter::once(VertexId::NONE)
            .chain((1..=self.n).map(|v| self.leader_of(VertexId::new(v))))
            .collect();
        let record = self.opts.record_lowarcs;
        let scc = SccResult::from_parts(
            leader,
            self.members,
            self.offsets,
            OrderKind::ReverseTopological,
            WithinOrder::Postorder,
        );
        Ok(TarjanRun {
            scc,
            lowarcs: record.then_some(self.lowarc),
            tree_arcs: record.then_some(self.tree_arc),
            outcome,
        })
    }
}

impl Visitor for TarjanVisitor {
    fn start(&mut self, g: &Graph) {
        let n = g.n();
        self.n = n;
        self.low = vec![0; n + 1];
        self.lead = if self.opts.encode_leader_bits {
            Vec::new()
        } else {
            vec![false; n + 1]
        };
        self.link = vec![0; n + 1];
        self.f_top = 0;
        self.time = 0;
        self.step = if self.opts.encode_leader_bits { 2 } else { 1 };
        self.infinity = 2 * n as u32 + 1;
        self.offset = if self.opts.encode_leader_bits {
            2 * n as u32
        } else {
            n as u32
        };
        self.previsited = 0;
        self.stop = false;
        if self.opts.record_lowarcs {
            self.lowarc = vec![ArcId::NONE; n + 1];
            self.tree_arc = vec![ArcId::NONE; n + 1];
        }
        self.members = Vec::with_capacity(n);
        self.offsets = vec![0];
        self.fault = None;
        #[cfg(debug_assertions)]
        {
            self.slot = vec![Slot::Free; n + 1];
        }
    }

    #[inline]
    fn unvisited(&self, v: VertexId) -> bool {
        self.low[v.index()] == 0
    }

    #[inline]
    fn search_start(&mut self, s: VertexId) {
        self.search_start = s;
    }

    #[inline]
    fn previsit(&mut self, v: VertexId) {
        self.time += self.step;
        self.low[v.index()] = self.time;
        if !self.opts.encode_leader_bits {
            self.lead[v.index()] = true;
        }
        self.previsited += 1;
        // A last search begun at the last unvisited vertex is a singleton.
        if self.opts.stop_early && self.previsited == self.n {
            self.stop = v == self.search_start;
        }
    }

    #[inline]
    fn tree_advance(&mut self, _v: VertexId, a: ArcId, w: VertexId) {
        if self.opts.record_lowarcs {
            self.tree_arc[w.index()] = a;
        }
    }

    #[inline]
    fn retreat(&mut self, v: VertexId, a: ArcId, w: VertexId) {
        let lw = self.low[w.index()];
        if lw < self.low[v.index()] {
            if self.opts.encode_leader_bits {
                self.low[v.index()] = lw | 1;
            } else {
                self.low[v.index()] = lw;
                self.lead[v.index()] = false;
            }
            if self.opts.record_lowarcs {
                self.lowarc[v.index()] = a;
            }
        }
        if self.opts.stop_early && self.previsited == self.n {
            self.stop = self.stop_early_trigger(v, self.search_start);
        }
    }

    #[inline]
    fn postvisit(&mut self, v: VertexId) {
        if self.is_leader(v) {
            let lv = self.low[v.index()];
            let start = self.members.len();
            while self.low[self.f_top as usize] >= lv {
                let x = VertexId(self.f_top);
                self.f_top = self.link[x.index()];
                self.assign(x, v);
            }
            self.members[start..].reverse();
            self.assign(v, v);
            self.offsets.push(self.members.len());
        } else {
            #[cfg(debug_assertions)]
            {
                let s = &mut self.slot[v.index()];
                debug_assert!(
                    matches!(*s, Slot::Free | Slot::Released),
                    "slot {v} pushed on F while {s:?}"
                );
                *s = Slot::Follower;
            }
            self.link[v.index()] = self.f_top;
            self.f_top = v.0;
        }
    }

    #[inline]
    fn halt(&self) -> bool {
        self.stop
    }

    fn halted(&mut self, path: &[VertexId]) {
        let Some((&s, rest)) = path.split_last() else {
            self.fault = Some("halted with an empty path".into());
            return;
        };
        if s != self.search_start {
            self.fault = Some(format!("halt path ends at {s}, not at the search start"));
            return;
        }
        // Path vertices whose `low` is still above `low(s)` would take the
        // tree arc toward the current vertex as their last decrease.
        if self.opts.record_lowarcs {
            let low_s = self.low[s.index()];
            for &u in rest.iter().skip(1) {
                if !self.same_low(self.low[u.index()], low_s) {
                    let below = path[path.iter().position(|&x| x == u).unwrap() - 1];
                    self.lowarc[u.index()] = self.tree_arc[below.index()];
                }
            }
        }
        let start = self.members.len();
        while self.f_top != 0 {
            let x = VertexId(self.f_top);
            self.f_top = self.link[x.index()];
            self.assign(x, s);
        }
        self.members[start..].reverse();
        for &u in rest {
            self.assign(u, s);
        }
        self.assign(s, s);
        self.offsets.push(self.members.len());
    }

    const SHARES_LINK: bool = true;

    #[inline]
    fn set_link(&mut self, v: VertexId, x: u32) {
        #[cfg(debug_assertions)]
        {
            let s = &mut self.slot[v.index()];
            debug_assert_eq!(*s, Slot::Free, "engine took slot {v}");
            *s = Slot::Engine;
        }
        self.link[v.index()] = x;
    }

    #[inline]
    fn release_link(&mut self, v: VertexId) -> u32 {
        #[cfg(debug_assertions)]
        {
            let s = &mut self.slot[v.index()];
            debug_assert_eq!(*s, Slot::Engine, "engine released slot {v}");
            *s = Slot::Released;
        }
        self.link[v.index()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn comps(r: &SccResult) -> Vec<Vec<u32>> {
        r.components()
            .map(|c| c.iter().map(|v| v.0).collect())
            .collect()
    }

    fn every_option() -> impl Iterator<Item = TarjanOptions> {
        EngineKind::ALL
            .into_iter()
            .flat_map(TarjanOptions::all_flag_combinations)
    }

    #[test]
    fn triangle_postorder() {
        let g = build_graph(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        for opts in every_option() {
            let r = scc_tarjan(&g, opts).unwrap();
            assert_eq!(comps(&r), vec![vec![3, 2, 1]], "{opts:?}");
            assert_eq!(r.component_leader(0), VertexId(1));
            assert_eq!(r.order_kind(), OrderKind::ReverseTopological);
            assert_eq!(r.within_order(), WithinOrder::Postorder);
        }
    }

    #[test]
    fn small_examples() {
        let g = build_graph(2, &[(1, 2)]).unwrap();
        for opts in every_option() {
            assert_eq!(
                comps(&scc_tarjan(&g, opts).unwrap()),
                vec![vec![2], vec![1]]
            );
        }
        let g = build_graph(4, &[(1, 2), (2, 1), (3, 4), (4, 3), (2, 3)]).unwrap();
        for opts in every_option() {
            let r = scc_tarjan(&g, opts).unwrap();
            assert_eq!(
                r.sorted_components(),
                vec![vec![3, 4], vec![1, 2]],
                "{opts:?}"
            );
        }
        let g = build_graph(1, &[(1, 1)]).unwrap();
        assert_eq!(
            comps(&scc_tarjan(&g, TarjanOptions::default()).unwrap()),
            vec![vec![1]]
        );
        let g = build_graph(0, &[]).unwrap();
        assert_eq!(
            scc_tarjan(&g, TarjanOptions::default())
                .unwrap()
                .num_components(),
            0
        );
    }

    #[test]
    fn stop_early_fires_only_when_done() {
        let opts = TarjanOptions {
            stop_early: true,
            ..Default::default()
        };
        let g = build_graph(3, &[(1, 2), (2, 3), (3, 1), (2, 1)]).unwrap();
        let run = scc_tarjan_run(&g, opts, None).unwrap();
        assert_eq!(run.outcome, Outcome::Halted);
        assert_eq!(comps(&run.scc), vec![vec![3, 2, 1]]);

        let g = build_graph(2, &[(1, 2)]).unwrap();
        let run = scc_tarjan_run(&g, opts, None).unwrap();
        assert_eq!(run.outcome, Outcome::Completed);

        let g = build_graph(0, &[]).unwrap();
        assert_eq!(
            scc_tarjan_run(&g, opts, None).unwrap().outcome,
            Outcome::Completed
        );
    }

    #[test]
    fn leader_bits() {
        assert_eq!(leader_bit_ops(6), (true, 3));
        assert_eq!(leader_bit_ops(6 | 1), (false, 3));
    }

    #[test]
    fn triangle_lowarcs() {
        let g = build_graph(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        let opts = TarjanOptions {
            record_lowarcs: true,
            ..Default::default()
        };
        let run = scc_tarjan_run(&g, opts, None).unwrap();
        let low = run.lowarcs.unwrap();
        assert_eq!(&low[1..], &[ArcId::NONE, ArcId(2), ArcId(3)]);
        let tree = run.tree_arcs.unwrap();
        assert_eq!(&tree[1..], &[ArcId::NONE, ArcId(1), ArcId(2)]);
    }

    /// Captures the leader decision at each postvisit alongside the vertex's
    /// own previsit counter, before the visitor overwrites `low`.
    struct LeaderProbe {
        inner: TarjanVisitor,
        own_time: Vec<u32>,
        seen: Vec<(VertexId, bool, bool)>,
    }

    impl Visitor for LeaderProbe {
        fn start(&mut self, g: &Graph) {
            self.inner.start(g);
            self.own_time = vec![0; g.n() + 1];
        }
        fn unvisited(&self, v: VertexId) -> bool {
            self.inner.unvisited(v)
        }
        fn search_start(&mut self, s: VertexId) {
            self.inner.search_start(s)
        }
        fn previsit(&mut self, v: VertexId) {
            self.inner.previsit(v);
            self.own_time[v.index()] = self.inner.low[v.index()];
        }
        fn retreat(&mut self, v: VertexId, a: ArcId, w: VertexId) {
            self.inner.retreat(v, a, w)
        }
        fn postvisit(&mut self, v: VertexId) {
            let low_is_pre = self.inner.low[v.index()] == self.own_time[v.index()];
            self.seen.push((v, self.inner.is_leader(v), low_is_pre));
            self.inner.postvisit(v)
        }
    }

    #[test]
    fn leader_iff_low_equals_pre() {
        let g = build_graph(
            6,
            &[
                (1, 2),
                (2, 3),
                (3, 1),
                (3, 4),
                (4, 5),
                (5, 4),
                (5, 6),
                (6, 6),
                (2, 6),
            ],
        )
        .unwrap();
        for encode in [false, true] {
            let opts = TarjanOptions {
                encode_leader_bits: encode,
                ..Default::default()
            };
            let mut probe = LeaderProbe {
                inner: TarjanVisitor::new(opts),
                own_time: Vec::new(),
                seen: Vec::new(),
            };
            explore(&g, EngineKind::VStack, &mut probe, None).unwrap();
            assert_eq!(probe.seen.len(), 6);
            for (v, lead, low_is_pre) in probe.seen {
                assert_eq!(lead, low_is_pre, "vertex {v}");
            }
        }
    }
}
