//! Memory-access counting under Knuth's cost model.
//!
//! Each executor here is a hand-fused copy of one algorithm on one engine in
//! which every read or write of a per-vertex or per-arc field goes through a
//! [`Tally`]. Values the model keeps in registers are not counted. With
//! [`NoTally`] the counting compiles away.
//!
//! | tag        | algorithm and engine                         | registers (not tallied)                     | bound      |
//! |------------|----------------------------------------------|---------------------------------------------|------------|
//! | `V_STACK`  | timestamps on the vertex stack, basic pushes | `v a w s` stack top, clock                  | `3m + 10n` |
//! | `A_STACK`  | timestamps on the arc stack                  | `v a w s` stack top `p`, clock              | `3m + 9n`  |
//! | `QUICK`    | quick search, stack threaded through marks   | `v a w s` stack top                         | `3m + 5n`  |
//! | `TARJAN_A` | Tarjan, encoded leader bits, arc stack       | as `A_STACK`, plus `low` of `v`, of `s`, `F` top | `3m + 16n` |
//! | `CYCLE_A`  | cycle-finding, arc stack                     | as `A_STACK`, plus `L` top and its `pre`, `F` top | `3m + 18n` |
//! | `BIDI`     | arc-stack forward pass, quick backward pass  | as `A_STACK` and `QUICK`                    | `6m + 14n` |
//!
//! Every arc costs three reads when scanned: its tip, the tip's mark, and
//! its `next` link. The vertex stack is counted in its basic form (push the
//! parent on every advance, pop it on every retreat). Quick search needs no
//! separate visited state: a popped vertex keeps its stale, nonzero link, which
//! already excludes it from being pushed again. The bidirectional backward
//! pass reuses the forward marks as its assignment array, so it does no
//! initialization sweep; it counts its explicit stack. Building the output
//! lists is not counted.
//!
//! The model ignores the memory hierarchy entirely; it counts accesses, not time.

use std::fmt;
use std::str::FromStr;

use crate::dfs::TimeStamps;
use crate::error::{Error, Result};
use crate::graph::{reverse_graph, ArcId, Graph, VertexId};
use crate::scc::{OrderKind, SccResult, WithinOrder};

/// Algorithm/engine pairs with a known access bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    VStack,
    AStack,
    Quick,
    TarjanA,
    CycleA,
    Bidi,
}

impl Tag {
    pub const ALL: [Tag; 6] = [
        Tag::VStack,
        Tag::AStack,
        Tag::Quick,
        Tag::TarjanA,
        Tag::CycleA,
        Tag::Bidi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Tag::VStack => "V_STACK",
            Tag::AStack => "A_STACK",
            Tag::Quick => "QUICK",
            Tag::TarjanA => "TARJAN_A",
            Tag::CycleA => "CYCLE_A",
            Tag::Bidi => "BIDI",
        }
    }

    /// `(c_m, c_n)` of the bound `c_m * m + c_n * n`.
    pub fn coefficients(self) -> (u64, u64) {
        match self {
            Tag::VStack => (3, 10),
            Tag::AStack => (3, 9),
            Tag::Quick => (3, 5),
            Tag::TarjanA => (3, 16),
            Tag::CycleA => (3, 18),
            Tag::Bidi => (6, 14),
        }
    }

    pub fn finds_components(self) -> bool {
        matches!(self, Tag::TarjanA | Tag::CycleA | Tag::Bidi)
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        Tag::ALL
            .into_iter()
            .find(|t| t.name() == norm)
            .ok_or_else(|| Error::UnknownTag(s.to_string()))
    }
}

/// `c_m * m + c_n * n` for `tag`.
pub fn bound(tag: Tag, m: u64, n: u64) -> u64 {
    let (cm, cn) = tag.coefficients();
    cm * m + cn * n
}

/// [`bound`] for a tag given by name.
pub fn bound_by_name(tag: &str, m: u64, n: u64) -> Result<u64> {
    Ok(bound(tag.parse()?, m, n))
}

/// Slack allowed over the bound for search starts and components.
pub fn slack(starts: u64, components: u64) -> u64 {
    8 * (starts + components) + 32
}

/// Phase of an algorithm an access is charged to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    /// Marking every vertex unvisited before the run.
    Init,
    /// The outer loop testing each candidate start vertex.
    Start,
    Previsit,
    /// Reading `first`, and `tip`, mark and `next` of every scanned arc.
    Scan,
    /// Pushing onto the search stack when advancing on a tree arc.
    Forward,
    /// Popping the search stack when retreating on a tree arc.
    Backward,
    Postvisit,
    /// Leader-stack pops on non-tree arcs.
    Merge,
    /// Popping and labeling the vertices of a finished component.
    Component,
    /// Unwinding the path after stopping early.
    Halt,
    /// The second search of the bidirectional algorithm.
    Reverse,
}

impl Phase {
    pub const ALL: [Phase; 11] = [
        Phase::Init,
        Phase::Start,
        Phase::Previsit,
        Phase::Scan,
        Phase::Forward,
        Phase::Backward,
        Phase::Postvisit,
        Phase::Merge,
        Phase::Component,
        Phase::Halt,
        Phase::Reverse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Phase::Init => "init",
            Phase::Start => "start",
            Phase::Previsit => "previsit",
            Phase::Scan => "scan",
            Phase::Forward => "forward",
            Phase::Backward => "backward",
            Phase::Postvisit => "postvisit",
            Phase::Merge => "merge",
            Phase::Component => "component",
            Phase::Halt => "halt",
            Phase::Reverse => "reverse",
        }
    }
}

/// Receives every counted access.
pub trait Tally {
    fn read(&mut self, phase: Phase);
    fn write(&mut self, phase: Phase);
    fn init_writes(&mut self, k: usize);
}

/// Counts nothing.
#[derive(Debug, Default, Clone, Copy)]
pub struct NoTally;

impl Tally for NoTally {
    #[inline(always)]
    fn read(&mut self, _: Phase) {}
    #[inline(always)]
    fn write(&mut self, _: Phase) {}
    #[inline(always)]
    fn init_writes(&mut self, _: usize) {}
}

/// Reads and writes per phase.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Counter {
    reads: [u64; 11],
    writes: [u64; 11],
}

impl Tally for Counter {
    #[inline(always)]
    fn read(&mut self, phase: Phase) {
        self.reads[phase as usize] += 1;
    }
    #[inline(always)]
    fn write(&mut self, phase: Phase) {
        self.writes[phase as usize] += 1;
    }
    #[inline(always)]
    fn init_writes(&mut self, k: usize) {
        self.writes[Phase::Init as usize] += k as u64;
    }
}

impl Counter {
    pub fn reads(&self) -> u64 {
        self.reads.iter().sum()
    }
    pub fn writes(&self) -> u64 {
        self.writes.iter().sum()
    }
    pub fn phase(&self, phase: Phase) -> (u64, u64) {
        (self.reads[phase as usize], self.writes[phase as usize])
    }
}

/// Tallies of one counted run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AccessReport {
    pub tag: Tag,
    pub n: u64,
    pub m: u64,
    pub starts: u64,
    pub components: u64,
    pub reads: u64,
    pub writes: u64,
    pub init_writes: u64,
    pub counter: Counter,
}

impl AccessReport {
    fn new(tag: Tag, g: &Graph, starts: u64, components: u64, counter: Counter) -> Self {
        AccessReport {
            tag,
            n: g.n() as u64,
            m: g.m() as u64,
            starts,
            components,
            reads: counter.reads(),
            writes: counter.writes(),
            init_writes: counter.phase(Phase::Init).1,
            counter,
        }
    }

    pub fn total(&self) -> u64 {
        self.reads + self.writes
    }

    pub fn bound(&self) -> u64 {
        bound(self.tag, self.m, self.n)
    }

    pub fn within_bound(&self) -> bool {
        self.total() <= self.bound() + slack(self.starts, self.components)
    }

    pub const CSV_HEADER: &'static str = "tag,n,m,starts,components,reads,writes,total,bound";

    /// `tag,n,m,starts,components,reads,writes,total,bound`
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.tag,
            self.n,
            self.m,
            self.starts,
            self.components,
            self.reads,
            self.writes,
            self.total(),
            self.bound()
        )
    }

    /// `phase,reads,writes` for every phase with any access.
    pub fn phase_lines(&self) -> Vec<String> {
        Phase::ALL
            .into_iter()
            .filter_map(|p| {
                let (r, w) = self.counter.phase(p);
                (r + w > 0).then(|| format!("{},{r},{w}", p.name()))
            })
            .collect()
    }
}

/// Functional output of a counted run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountedOutput {
    Stamps(TimeStamps),
    Visits(Vec<VertexId>),
    Scc(SccResult),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CountOptions {
    /// Stop early in `TARJAN_A` and `CYCLE_A`; ignored by the other tags.
    pub stop_early: bool,
}

/// Runs the executor for `tag` on `g` and reports its access counts.
pub fn counted_run(
    tag: Tag,
    g: &Graph,
    opts: CountOptions,
) -> Result<(CountedOutput, AccessReport)> {
    let mut c = Counter::default();
    let (out, starts) = run_with(tag, g, opts, &mut c)?;
    let components = match &out {
        CountedOutput::Scc(r) => r.num_components() as u64,
        _ => 0,
    };
    Ok((out, AccessReport::new(tag, g, starts, components, c)))
}

/// Runs the executor for `tag` feeding `tally`; returns its output and the
/// number of search starts.
pub fn run_with<T: Tally>(
    tag: Tag,
    g: &Graph,
    opts: CountOptions,
    tally: &mut T,
) -> Result<(CountedOutput, u64)> {
    Ok(match tag {
        Tag::VStack => {
            let (s, k) = vstack_stamps(g, tally)?;
            (CountedOutput::Stamps(s), k)
        }
        Tag::AStack => {
            let (s, k) = astack_stamps(g, tally)?;
            (CountedOutput::Stamps(s), k)
        }
        Tag::Quick => {
            let (v, k) = quick_visits(g, tally)?;
            (CountedOutput::Visits(v), k)
        }
        Tag::TarjanA => {
            let (r, k) = tarjan_a(g, opts.stop_early, tally)?;
            (CountedOutput::Scc(r), k)
        }
        Tag::CycleA => {
            let (r, k) = cycle_a(g, opts.stop_early, tally)?;
            (CountedOutput::Scc(r), k)
        }
        Tag::Bidi => {
            let rev = reverse_graph(g);
            let (r, k) = bidi(g, &rev, tally)?;
            (CountedOutput::Scc(r), k)
        }
    })
}

/// Graph fields behind a tally.
struct Mem<'g, 't, T> {
    g: &'g Graph,
    t: &'t mut T,
}

impl<T: Tally> Mem<'_, '_, T> {
    #[inline(always)]
    fn first(&mut self, v: VertexId) -> ArcId {
        self.t.read(Phase::Scan);
        self.g.first(v)
    }
    #[inline(always)]
    fn tip(&mut self, a: ArcId, phase: Phase) -> VertexId {
        self.t.read(phase);
        self.g.tip(a)
    }
    #[inline(always)]
    fn next(&mut self, a: ArcId) -> ArcId {
        self.t.read(Phase::Scan);
        self.g.next(a)
    }
    #[inline(always)]
    fn get(&mut self, arr: &[u32], i: usize, phase: Phase) -> u32 {
        self.t.read(phase);
        arr[i]
    }
    #[inline(always)]
    fn set(&mut self, arr: &mut [u32], i: usize, x: u32, phase: Phase) {
        self.t.write(phase);
        arr[i] = x;
    }
}

fn empty_pop() -> Error {
    Error::InternalInvariant("pop from an empty stack".into())
}

fn vstack_stamps<T: Tally>(g: &Graph, t: &mut T) -> Result<(TimeStamps, u64)> {
    let n = g.n();
    let mut mm = Mem { g, t };
    let mut pre = vec![0u32; n + 1];
    let mut post = vec![0u32; n + 1];
    let mut ptr = vec![0u32; n + 1];
    let mut arc = vec![0u32; n + 1];
    mm.t.init_writes(n);
    let (mut time, mut starts, mut top) = (0u32, 0u64, 0u32);
    for s in g.vertices() {
        if mm.get(&pre, s.index(), Phase::Start) != 0 {
            continue;
        }
        starts += 1;
        let mut v = s;
        time += 1;
        mm.set(&mut pre, v.index(), time, Phase::Previsit);
        let mut a = mm.first(v);
        loop {
            if !a.is_none() {
                let w = mm.tip(a, Phase::Scan);
                if mm.get(&pre, w.index(), Phase::Scan) == 0 {
                    time += 1;
                    mm.set(&mut pre, w.index(), time, Phase::Previsit);
                    mm.set(&mut arc, v.index(), a.0, Phase::Forward);
                    mm.set(&mut ptr, v.index(), top, Phase::Forward);
                    top = v.0;
                    v = w;
                    a = mm.first(v);
                    continue;
                }
            } else {
                time += 1;
                mm.set(&mut post, v.index(), time, Phase::Postvisit);
                if v == s {
                    break;
                }
                if top == 0 {
                    return Err(empty_pop());
                }
                v = VertexId(top);
                top = mm.get(&ptr, v.index(), Phase::Backward);
                a = ArcId(mm.get(&arc, v.index(), Phase::Backward));
            }
            a = mm.next(a);
        }
    }
    Ok((TimeStamps { pre, post }, starts))
}

fn astack_stamps<T: Tally>(g: &Graph, t: &mut T) -> Result<(TimeStamps, u64)> {
    let n = g.n();
    let mut mm = Mem { g, t };
    let mut pre = vec![0u32; n + 1];
    let mut post = vec![0u32; n + 1];
    let mut link = vec![0u32; n + 1];
    mm.t.init_writes(n);
    let (mut time, mut starts) = (0u32, 0u64);
    for s in g.vertices() {
        if mm.get(&pre, s.index(), Phase::Start) != 0 {
            continue;
        }
        starts += 1;
        let mut p = ArcId::NONE;
        let mut v = s;
        time += 1;
        mm.set(&mut pre, v.index(), time, Phase::Previsit);
        let mut a = mm.first(v);
        loop {
            if !a.is_none() {
                let w = mm.tip(a, Phase::Scan);
                if mm.get(&pre, w.index(), Phase::Scan) == 0 {
                    time += 1;
                    mm.set(&mut pre, w.index(), time, Phase::Previsit);
                    mm.set(&mut link, w.index(), p.0, Phase::Forward);
                    p = a;
                    v = w;
                    a = mm.first(v);
                    continue;
                }
            } else {
                if v != s {
                    if p.is_none() {
                        return Err(empty_pop());
                    }
                    a = p;
                    p = ArcId(mm.get(&link, v.index(), Phase::Backward));
                }
                time += 1;
                mm.set(&mut post, v.index(), time, Phase::Postvisit);
                if v == s {
                    break;
                }
                v = if p.is_none() {
                    s
                } else {
                    mm.tip(p, Phase::Backward)
                };
            }
            a = mm.next(a);
        }
    }
    Ok((TimeStamps { pre, post }, starts))
}

const BOTTOM: u32 = u32::MAX;

fn quick_visits<T: Tally>(g: &Graph, t: &mut T) -> Result<(Vec<VertexId>, u64)> {
    let n = g.n();
    let mut mm = Mem { g, t };
    // 0 = unseen; otherwise the vertex below on the stack, or a stale link
    // once popped. Either way the vertex is never pushed again.
    let mut mark = vec![0u32; n + 1];
    mm.t.init_writes(n);
    let mut order = Vec::with_capacity(n);
    let mut starts = 0;
    for s in g.vertices() {
        if mm.get(&mark, s.index(), Phase::Start) != 0 {
            continue;
        }
        starts += 1;
        mm.set(&mut mark, s.index(), BOTTOM, Phase::Forward);
        let mut top = s.0;
        while top != BOTTOM {
            let v = VertexId(top);
            top = mm.get(&mark, v.index(), Phase::Backward);
            order.push(v);
            let mut a = mm.first(v);
            while !a.is_none() {
                let w = mm.tip(a, Phase::Scan);
                if mm.get(&mark, w.index(), Phase::Scan) == 0 {
                    mm.set(&mut mark, w.index(), top, Phase::Forward);
                    top = w.0;
                }
                a = mm.next(a);
            }
        }
    }
    Ok((order, starts))
}

/// Tarjan with encoded leader bits on the arc stack; the arc stack, `F` and
/// the leader map share `link`. The current vertex's `low` lives in a
/// register and is written back on every advance and at postvisit.
fn tarjan_a<T: Tally>(g: &Graph, stop_early: bool, t: &mut T) -> Result<(SccResult, u64)> {
    let n = g.n();
    let mut mm = Mem { g, t };
    let inf = 2 * n as u32 + 1;
    let mut low = vec![0u32; n + 1];
    let mut link = vec![0u32; n + 1];
    mm.t.init_writes(n);
    let mut members = Vec::with_capacity(n);
    let mut offsets = vec![0];
    let (mut time, mut starts, mut f_top, mut previsited) = (0u32, 0u64, 0u32, 0usize);

    'searches: for s in g.vertices() {
        if mm.get(&low, s.index(), Phase::Start) != 0 {
            continue;
        }
        starts += 1;
        let mut p = ArcId::NONE;
        let mut v = s;
        time += 2;
        let low_s = time;
        let mut low_v = time;
        mm.set(&mut low, v.index(), time, Phase::Previsit);
        previsited += 1;
        let mut halt = stop_early && previsited == n;
        let mut a = ArcId::NONE;
        if !halt {
            a = mm.first(v);
        }
        while !halt {
            if !a.is_none() {
                let w = mm.tip(a, Phase::Scan);
                let low_w = mm.get(&low, w.index(), Phase::Scan);
                if low_w == 0 {
                    mm.set(&mut low, v.index(), low_v, Phase::Forward);
                    time += 2;
                    low_v = time;
                    mm.set(&mut low, w.index(), time, Phase::Previsit);
                    previsited += 1;
                    mm.set(&mut link, w.index(), p.0, Phase::Forward);
                    p = a;
                    v = w;
                    a = mm.first(v);
                    continue;
                }
                if low_w < low_v {
                    low_v = low_w | 1;
                }
            } else {
                if v != s {
                    if p.is_none() {
                        return Err(empty_pop());
                    }
                    a = p;
                    p = ArcId(mm.get(&link, v.index(), Phase::Backward));
                }
                let child_low;
                if low_v & 1 == 0 {
                    let start = members.len();
                    while mm.get(&low, f_top as usize, Phase::Component) >= low_v {
                        let x = f_top;
                        f_top = mm.get(&link, x as usize, Phase::Component);
                        mm.set(&mut link, x as usize, v.0, Phase::Component);
                        mm.set(&mut low, x as usize, inf, Phase::Component);
                        members.push(VertexId(x));
                    }
                    members[start..].reverse();
                    mm.set(&mut link, v.index(), v.0, Phase::Component);
                    mm.set(&mut low, v.index(), inf, Phase::Component);
                    members.push(v);
                    offsets.push(members.len());
                    child_low = inf;
                } else {
                    mm.set(&mut link, v.index(), f_top, Phase::Postvisit);
                    f_top = v.0;
                    mm.set(&mut low, v.index(), low_v, Phase::Postvisit);
                    child_low = low_v;
                }
                if v == s {
                    continue 'searches;
                }
                v = if p.is_none() {
                    s
                } else {
                    mm.tip(p, Phase::Backward)
                };
                low_v = mm.get(&low, v.index(), Phase::Backward);
                if child_low < low_v {
                    low_v = child_low | 1;
                }
            }
            halt = stop_early && previsited == n && v != s && low_v | 1 == low_s | 1;
            if !halt {
                a = mm.next(a);
            }
        }
        // Stopped early: everything still live forms one component led by s.
        let start = members.len();
        while f_top != 0 {
            let x = f_top;
            f_top = mm.get(&link, x as usize, Phase::Halt);
            mm.set(&mut link, x as usize, s.0, Phase::Halt);
            mm.set(&mut low, x as usize, inf, Phase::Halt);
            members.push(VertexId(x));
        }
        members[start..].reverse();
        let mut x = v;
        while x != s {
            let below = ArcId(mm.get(&link, x.index(), Phase::Halt));
            mm.set(&mut link, x.index(), s.0, Phase::Halt);
            mm.set(&mut low, x.index(), inf, Phase::Halt);
            members.push(x);
            x = if below.is_none() {
                s
            } else {
                mm.tip(below, Phase::Halt)
            };
        }
        mm.set(&mut link, s.index(), s.0, Phase::Halt);
        mm.set(&mut low, s.index(), inf, Phase::Halt);
        members.push(s);
        offsets.push(members.len());
        break;
    }
    if f_top != 0 {
        return Err(Error::InternalInvariant(
            "follower stack not empty at the end".into(),
        ));
    }
    let leader = std::iter::once(VertexId::NONE).chain(link[1..].iter().map(|&x| VertexId(x)));
    Ok((
        SccResult::from_parts(
            leader.collect(),
            members,
            offsets,
            OrderKind::ReverseTopological,
            WithinOrder::Postorder,
        ),
        starts,
    ))
}

/// Cycle-finding on the arc stack. `link` holds `L`, then `F`, then the
/// leader; the engine's arc stack has its own array. `pre` of the top of `L`
/// is cached in a register.
fn cycle_a<T: Tally>(g: &Graph, stop_early: bool, t: &mut T) -> Result<(SccResult, u64)> {
    let n = g.n();
    let mut mm = Mem { g, t };
    let inf = 2 * n as u32 + 1;
    let mut pre = vec![0u32; n + 1];
    let mut link = vec![0u32; n + 1];
    let mut elink = vec![0u32; n + 1];
    mm.t.init_writes(n);
    let mut members = Vec::with_capacity(n);
    let mut offsets = vec![0];
    let (mut time, mut starts, mut previsited) = (0u32, 0u64, 0usize);
    let (mut l_top, mut l_len, mut f_top) = (0u32, 0usize, 0u32);
    let mut l_pre: u32;

    for s in g.vertices() {
        if mm.get(&pre, s.index(), Phase::Start) != 0 {
            continue;
        }
        starts += 1;
        let mut p = ArcId::NONE;
        let mut v = s;
        time += 1;
        mm.set(&mut pre, v.index(), time, Phase::Previsit);
        mm.set(&mut link, v.index(), l_top, Phase::Previsit);
        (l_top, l_pre, l_len) = (v.0, time, l_len + 1);
        previsited += 1;
        let mut halt = stop_early && previsited == n && l_len == 1;
        let mut a = ArcId::NONE;
        if !halt {
            a = mm.first(v);
        }
        while !halt {
            if !a.is_none() {
                let w = mm.tip(a, Phase::Scan);
                let pre_w = mm.get(&pre, w.index(), Phase::Scan);
                if pre_w == 0 {
                    mm.set(&mut elink, w.index(), p.0, Phase::Forward);
                    p = a;
                    v = w;
                    time += 1;
                    mm.set(&mut pre, v.index(), time, Phase::Previsit);
                    mm.set(&mut link, v.index(), l_top, Phase::Previsit);
                    (l_top, l_pre, l_len) = (v.0, time, l_len + 1);
                    previsited += 1;
                    halt = stop_early && previsited == n && l_len == 1;
                    if !halt {
                        a = mm.first(v);
                    }
                    continue;
                }
                while pre_w < l_pre {
                    let x = l_top;
                    l_top = mm.get(&link, x as usize, Phase::Merge);
                    l_len -= 1;
                    mm.set(&mut link, x as usize, f_top, Phase::Merge);
                    f_top = x;
                    l_pre = mm.get(&pre, l_top as usize, Phase::Merge);
                }
                halt = stop_early && previsited == n && l_len == 1;
                if halt {
                    break;
                }
            } else {
                if v != s {
                    if p.is_none() {
                        return Err(empty_pop());
                    }
                    a = p;
                    p = ArcId(mm.get(&elink, v.index(), Phase::Backward));
                }
                if v.0 == l_top {
                    let v_pre = l_pre;
                    l_top = mm.get(&link, v.index(), Phase::Component);
                    l_len -= 1;
                    l_pre = mm.get(&pre, l_top as usize, Phase::Component);
                    emit(
                        &mut mm,
                        &mut pre,
                        &mut link,
                        &mut f_top,
                        v,
                        v_pre,
                        inf,
                        &mut members,
                        Phase::Component,
                    );
                    offsets.push(members.len());
                }
                if v == s {
                    break;
                }
                v = if p.is_none() {
                    s
                } else {
                    mm.tip(p, Phase::Backward)
                };
            }
            a = mm.next(a);
        }
        if halt {
            // Every live vertex other than s is on F.
            l_top = 0;
            l_len = 0;
            emit(
                &mut mm,
                &mut pre,
                &mut link,
                &mut f_top,
                s,
                0,
                inf,
                &mut members,
                Phase::Halt,
            );
            offsets.push(members.len());
            break;
        }
    }
    if f_top != 0 || l_top != 0 || l_len != 0 {
        return Err(Error::InternalInvariant(
            "stack not empty at the end".into(),
        ));
    }
    let leader = std::iter::once(VertexId::NONE).chain(link[1..].iter().map(|&x| VertexId(x)));
    Ok((
        SccResult::from_parts(
            leader.collect(),
            members,
            offsets,
            OrderKind::ReverseTopological,
            WithinOrder::Preorder,
        ),
        starts,
    ))
}

#[allow(clippy::too_many_arguments)]
fn emit<T: Tally>(
    mm: &mut Mem<'_, '_, T>,
    pre: &mut [u32],
    link: &mut [u32],
    f_top: &mut u32,
    leader: VertexId,
    floor: u32,
    inf: u32,
    members: &mut Vec<VertexId>,
    phase: Phase,
) {
    let start = members.len();
    members.push(leader);
    while floor < mm.get(pre, *f_top as usize, phase) {
        let x = *f_top;
        *f_top = mm.get(link, x as usize, phase);
        mm.set(link, x as usize, leader.0, phase);
        members.push(VertexId(x));
    }
    // Preorder is pre order; sorting happens before the pre values are erased.
    members[start + 1..].sort_unstable_by_key(|x| pre[x.index()]);
    for &x in &members[start + 1..] {
        mm.set(pre, x.index(), inf, phase);
    }
    mm.set(link, leader.index(), leader.0, phase);
    mm.set(pre, leader.index(), inf, phase);
}

const VISITED: u32 = u32::MAX;

/// Arc-stack forward pass recording reverse postorder, then quick search on
/// the reversed graph reusing the forward marks as assignments.
fn bidi<T: Tally>(g: &Graph, rev: &Graph, t: &mut T) -> Result<(SccResult, u64)> {
    let n = g.n();
    let mut mark = vec![0u32; n + 1];
    let mut link = vec![0u32; n + 1];
    let mut rev_post = vec![0u32; n];
    let mut starts = 0;
    {
        let mut mm = Mem { g, t: &mut *t };
        mm.t.init_writes(n);
        let mut pos = n;
        for s in g.vertices() {
            if mm.get(&mark, s.index(), Phase::Start) != 0 {
                continue;
            }
            starts += 1;
            let mut p = ArcId::NONE;
            let mut v = s;
            mm.set(&mut mark, v.index(), VISITED, Phase::Previsit);
            let mut a = mm.first(v);
            loop {
                if !a.is_none() {
                    let w = mm.tip(a, Phase::Scan);
                    if mm.get(&mark, w.index(), Phase::Scan) == 0 {
                        mm.set(&mut mark, w.index(), VISITED, Phase::Previsit);
                        mm.set(&mut link, w.index(), p.0, Phase::Forward);
                        p = a;
                        v = w;
                        a = mm.first(v);
                        continue;
                    }
                } else {
                    if v != s {
                        if p.is_none() {
                            return Err(empty_pop());
                        }
                        a = p;
                        p = ArcId(mm.get(&link, v.index(), Phase::Backward));
                    }
                    pos -= 1;
                    mm.set(&mut rev_post, pos, v.0, Phase::Postvisit);
                    if v == s {
                        break;
                    }
                    v = if p.is_none() {
                        s
                    } else {
                        mm.tip(p, Phase::Backward)
                    };
                }
                a = mm.next(a);
            }
        }
    }

    let mut mm = Mem { g: rev, t };
    let mut stack = vec![0u32; n];
    let mut sp = 0usize;
    let mut members = Vec::with_capacity(n);
    let mut offsets = vec![0];
    for i in 0..n {
        let s = VertexId(mm.get(&rev_post, i, Phase::Reverse));
        if mm.get(&mark, s.index(), Phase::Reverse) != VISITED {
            continue;
        }
        mm.set(&mut mark, s.index(), s.0, Phase::Reverse);
        mm.set(&mut stack, sp, s.0, Phase::Reverse);
        sp += 1;
        while sp > 0 {
            sp -= 1;
            let v = VertexId(mm.get(&stack, sp, Phase::Reverse));
            members.push(v);
            let mut a = mm.first(v);
            while !a.is_none() {
                let w = mm.tip(a, Phase::Scan);
                if mm.get(&mark, w.index(), Phase::Scan) == VISITED {
                    mm.set(&mut mark, w.index(), s.0, Phase::Reverse);
                    mm.set(&mut stack, sp, w.0, Phase::Reverse);
                    sp += 1;
                }
                a = mm.next(a);
            }
        }
        offsets.push(members.len());
    }
    let leader = mark.into_iter().map(VertexId).collect();
    Ok((
        SccResult::from_parts(
            leader,
            members,
            offsets,
            OrderKind::Topological,
            WithinOrder::SearchOrder,
        ),
        starts,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    #[test]
    fn bound_table() {
        assert_eq!(bound(Tag::TarjanA, 10, 4), 94);
        assert_eq!(bound(Tag::Quick, 0, 0), 0);
        assert_eq!(bound(Tag::Bidi, 5, 3), 72);
        assert_eq!(bound_by_name("tarjan_a", 10, 4).unwrap(), 94);
        assert!(matches!(
            bound_by_name("Z_STACK", 1, 1),
            Err(Error::UnknownTag(_))
        ));
    }

    #[test]
    fn empty_graph_within_bound() {
        let g = build_graph(0, &[]).unwrap();
        for tag in Tag::ALL {
            let (_, r) = counted_run(tag, &g, CountOptions::default()).unwrap();
            assert!(r.within_bound(), "{tag}");
        }
    }

    #[test]
    fn cycle_of_64_within_bound() {
        let arcs: Vec<(u32, u32)> = (1..=64).map(|v| (v, v % 64 + 1)).collect();
        let g = build_graph(64, &arcs).unwrap();
        let (out, r) = counted_run(Tag::TarjanA, &g, CountOptions::default()).unwrap();
        assert!(r.total() <= 3 * 64 + 16 * 64 + slack(r.starts, r.components));
        match out {
            CountedOutput::Scc(s) => assert_eq!(s.num_components(), 1),
            _ => unreachable!(),
        }
    }

    #[test]
    fn exact_small_counts() {
        // One arc: A_STACK reads first twice, scans one arc (3), stamps 4
        // times, tests 2 starts, pushes and pops one arc (2), inits 2.
        let g = build_graph(2, &[(1, 2)]).unwrap();
        let (_, r) = counted_run(Tag::AStack, &g, CountOptions::default()).unwrap();
        assert_eq!(r.total(), 2 + 3 + 4 + 2 + 2 + 2);
        let (_, r) = counted_run(Tag::Quick, &g, CountOptions::default()).unwrap();
        assert_eq!(r.total(), 5 * 2 + 3);
        let (_, r) = counted_run(Tag::Bidi, &g, CountOptions::default()).unwrap();
        // A child of the root is popped without reading a tip.
        assert_eq!(r.total(), 6 + 14 * 2 - 4);
    }

    #[test]
    fn csv_line() {
        let g = build_graph(2, &[(1, 2)]).unwrap();
        let (_, r) = counted_run(Tag::Quick, &g, CountOptions::default()).unwrap();
        assert_eq!(r.to_csv(), "QUICK,2,1,1,0,9,4,13,13");
        assert!(r.phase_lines().iter().any(|l| l.starts_with("scan,")));
    }
}
