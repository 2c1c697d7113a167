//! Acceptance run: one PASS/FAIL line per criterion, details on stderr.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sccdfs::cycle::{audit_cycle, scc_cycle_run};
use sccdfs::dfs::{
    classify_arcs, compute_pre_post, depth_first_forest, explore_vstack, trace, Recording,
    VStackVariant,
};
use sccdfs::instrument::{counted_run, CountOptions, CountedOutput, Tag};
use sccdfs::tarjan::scc_tarjan_run;
use sccdfs::testkit::{
    check_cross_arcs, check_emission_order, check_leaders, check_lowarc_forest, check_nesting,
    check_trace, corpus, full_corpus, generate, oracle_scc, Family, GenSpec,
};
use sccdfs::*;

const SEED: u64 = 0x5ccd_f500;
const PER_FAMILY: usize = 1000;

type Check = std::result::Result<String, Vec<String>>;
type Criterion = (&'static str, fn() -> Check);

struct Failures(Vec<String>);

impl Failures {
    fn new() -> Self {
        Failures(Vec::new())
    }
    fn push(&mut self, msg: String) {
        if self.0.len() < 20 {
            self.0.push(msg);
        } else if self.0.len() == 20 {
            self.0.push("...".into());
        }
    }
    fn extend(&mut self, ctx: &str, diags: Vec<String>) {
        for d in diags {
            self.push(format!("{ctx}: {d}"));
        }
    }
    fn done(self, summary: String) -> Check {
        if self.0.is_empty() {
            Ok(summary)
        } else {
            Err(self.0)
        }
    }
}

fn ctx(spec: &GenSpec) -> String {
    format!(
        "{} n={} m={} seed={}",
        spec.family.name(),
        spec.n,
        spec.m,
        spec.seed
    )
}

/// `count` graphs taken round-robin across families.
fn sample(count: usize, seed: u64) -> Vec<(GenSpec, Graph)> {
    let per = count.div_ceil(Family::ALL.len());
    let mut by_family: Vec<_> = Family::ALL
        .into_iter()
        .map(|f| corpus(f, per, seed).into_iter())
        .collect();
    let mut out = Vec::with_capacity(count);
    'fill: loop {
        for it in &mut by_family {
            if out.len() == count {
                break 'fill;
            }
            out.push(it.next().expect("enough graphs per family"));
        }
    }
    out
}

fn bidi_options() -> Vec<BidiOptions> {
    let mut v = Vec::new();
    for engine in EngineKind::ALL {
        for backward in
            std::iter::once(Backward::Quick).chain(EngineKind::ALL.map(Backward::DepthFirst))
        {
            for stop_early in [false, true] {
                v.push(BidiOptions {
                    engine,
                    backward,
                    stop_early,
                });
            }
        }
    }
    v
}

fn criterion_1() -> Check {
    let t0 = Instant::now();
    let graphs = full_corpus(PER_FAMILY, SEED);
    let mut f = Failures::new();
    let mut runs = 0usize;
    let mut loops = 0usize;
    let mut parallel = 0usize;
    for (spec, g) in &graphs {
        let pairs = g.arc_pairs();
        loops += pairs.iter().any(|(x, y)| x == y) as usize;
        let mut sorted = pairs.clone();
        sorted.sort_unstable();
        parallel += sorted.windows(2).any(|w| w[0] == w[1]) as usize;
        let want = oracle_scc(g).unwrap().classes();
        let mut check = |name: String, r: Result<SccResult>| {
            runs += 1;
            match r {
                Ok(r) if r.canonical_partition() == want => {}
                Ok(r) => f.push(format!(
                    "{}: {name} gave {:?}, oracle {:?}",
                    ctx(spec),
                    r.canonical_partition(),
                    want
                )),
                Err(e) => f.push(format!("{}: {name} failed: {e}", ctx(spec))),
            }
        };
        for engine in EngineKind::ALL {
            for opts in TarjanOptions::all_flag_combinations(engine) {
                check(format!("{opts:?}"), scc_tarjan(g, opts));
            }
            for stop_early in [false, true] {
                let opts = CycleOptions { engine, stop_early };
                check(format!("{opts:?}"), scc_cycle(g, opts));
            }
        }
        for opts in bidi_options() {
            check(format!("{opts:?}"), scc_bidirectional(g, None, opts));
        }
    }
    let el = t0.elapsed();
    if el > Duration::from_secs(60) {
        f.push(format!("took {el:.1?}, limit 60s"));
    }
    if loops == 0 || parallel == 0 {
        f.push(format!(
            "corpus lacks loops ({loops}) or parallel arcs ({parallel})"
        ));
    }
    f.done(format!(
        "{} graphs ({loops} with loops, {parallel} with parallel arcs), {runs} runs, {el:.1?}",
        graphs.len()
    ))
}

fn criterion_2() -> Check {
    let graphs = sample(1000, SEED + 2);
    let mut f = Failures::new();
    for (spec, g) in &graphs {
        let base = trace(g, EngineKind::Recursive, None).unwrap();
        let d = check_trace(&base, g);
        f.extend(&ctx(spec), d);
        for engine in [EngineKind::VStack, EngineKind::AStack] {
            if trace(g, engine, None).unwrap() != base {
                f.push(format!(
                    "{}: {engine:?} trace differs from recursive",
                    ctx(spec)
                ));
            }
        }
        let mut rec = Recording::new(dfs::Marks::default());
        explore_vstack(g, VStackVariant::Basic, &mut rec, None).unwrap();
        if rec.trace != base {
            f.push(format!("{}: basic vertex-stack trace differs", ctx(spec)));
        }
    }
    f.done(format!(
        "{} graphs, 4 engines, traces identical",
        graphs.len()
    ))
}

fn criterion_3() -> Check {
    let graphs = full_corpus(PER_FAMILY, SEED);
    let mut f = Failures::new();
    for (spec, g) in &graphs {
        let c = ctx(spec);
        for engine in EngineKind::ALL {
            let forest = depth_first_forest(g, engine, None).unwrap();
            f.extend(&c, check_nesting(&forest));
            let classes = classify_arcs(g, &forest.stamps, &forest.tree_arc_set(g.m()));
            f.extend(&c, check_cross_arcs(g, &forest.stamps, &classes));
            f.extend(&c, check_trace(&trace(g, engine, None).unwrap(), g));
            for stop_early in [false, true] {
                let opts = TarjanOptions {
                    engine,
                    stop_early,
                    record_lowarcs: true,
                    ..Default::default()
                };
                let run = scc_tarjan_run(g, opts, None).unwrap();
                f.extend(&c, check_leaders(&run.scc, &forest.stamps));
                f.extend(&c, check_emission_order(g, &run.scc));
                f.extend(
                    &c,
                    check_lowarc_forest(g, &run.scc, run.lowarcs.as_ref().unwrap()),
                );
            }
            let cyc = scc_cycle(
                g,
                CycleOptions {
                    engine,
                    stop_early: false,
                },
            )
            .unwrap();
            f.extend(&c, check_leaders(&cyc, &forest.stamps));
            f.extend(&c, check_emission_order(g, &cyc));
            let b = scc_bidirectional(
                g,
                None,
                BidiOptions {
                    engine,
                    ..Default::default()
                },
            )
            .unwrap();
            f.extend(&c, check_leaders(&b, &forest.stamps));
            f.extend(&c, check_emission_order(g, &b));
        }
    }
    f.done(format!(
        "{} graphs x 3 engines, zero violations",
        graphs.len()
    ))
}

fn criterion_4() -> Check {
    let graphs = sample(500, SEED + 4);
    let mut f = Failures::new();
    for (spec, g) in &graphs {
        for engine in EngineKind::ALL {
            let (r, v) = audit_cycle(g, engine, None).unwrap();
            f.extend(&format!("{} {engine:?}", ctx(spec)), v);
            if r.canonical_partition() != oracle_scc(g).unwrap().classes() {
                f.push(format!("{}: audited run gave a wrong partition", ctx(spec)));
            }
        }
    }
    f.done(format!(
        "{} graphs x 3 engines, invariants hold at every event",
        graphs.len()
    ))
}

fn increasing(comp: &[VertexId], key: impl Fn(VertexId) -> u32) -> bool {
    comp.windows(2).all(|w| key(w[0]) < key(w[1]))
}

fn criterion_5() -> Check {
    let graphs = sample(500, SEED + 5);
    let mut f = Failures::new();
    for (spec, g) in &graphs {
        let c = ctx(spec);
        for engine in EngineKind::ALL {
            let st = compute_pre_post(g, engine, None).unwrap();
            let t = scc_tarjan(
                g,
                TarjanOptions {
                    engine,
                    ..Default::default()
                },
            )
            .unwrap();
            let cy = scc_cycle(
                g,
                CycleOptions {
                    engine,
                    stop_early: false,
                },
            )
            .unwrap();
            f.extend(&c, check_emission_order(g, &t));
            f.extend(&c, check_emission_order(g, &cy));
            if t.order_kind() != OrderKind::ReverseTopological
                || cy.order_kind() != OrderKind::ReverseTopological
            {
                f.push(format!(
                    "{c}: T or C does not report reverse topological order"
                ));
            }
            for comp in t.components() {
                if !increasing(comp, |v| st.post(v)) {
                    f.push(format!(
                        "{c} {engine:?}: T component {comp:?} not in postorder"
                    ));
                }
            }
            for comp in cy.components() {
                if !increasing(comp, |v| st.pre(v)) {
                    f.push(format!(
                        "{c} {engine:?}: C component {comp:?} not in preorder"
                    ));
                }
            }
            let sets = |r: &SccResult| -> Vec<(VertexId, Vec<u32>)> {
                r.components()
                    .enumerate()
                    .map(|(k, comp)| {
                        let mut s: Vec<u32> = comp.iter().map(|v| v.0).collect();
                        s.sort_unstable();
                        (r.component_leader(k), s)
                    })
                    .collect()
            };
            let mut want = sets(&t);
            if sets(&cy) != want {
                f.push(format!("{c} {engine:?}: C emission order differs from T"));
            }
            want.reverse();
            for stop_early in [false, true] {
                let opts = BidiOptions {
                    engine,
                    stop_early,
                    ..Default::default()
                };
                let b = scc_bidirectional(g, None, opts).unwrap();
                if b.order_kind() != OrderKind::Topological || sets(&b) != want {
                    f.push(format!("{c} {opts:?}: B is not the exact reverse of T"));
                }
            }
        }
    }
    f.done(format!("{} graphs x 3 engines", graphs.len()))
}

fn with_extra_arcs(g: &Graph, extra: &[(u32, u32)]) -> Graph {
    let mut arcs = g.arc_pairs();
    arcs.extend_from_slice(extra);
    build_graph(g.n(), &arcs).unwrap()
}

fn criterion_6() -> Check {
    let graphs = full_corpus(PER_FAMILY, SEED);
    let mut f = Failures::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    let mut pairs = 0;
    let total = |tag: Tag, g: &Graph| counted_run(tag, g, CountOptions::default()).unwrap().1;
    for (i, (spec, g)) in graphs.iter().enumerate() {
        let c = ctx(spec);
        let mut reports = Vec::new();
        for tag in Tag::ALL {
            for stop_early in [false, true] {
                let (_, r) = counted_run(tag, g, CountOptions { stop_early }).unwrap();
                if !r.within_bound() {
                    f.push(format!("{c}: {} exceeds bound plus slack", r.to_csv()));
                }
                if !stop_early {
                    reports.push(r);
                }
            }
        }
        let (v, a) = (&reports[0], &reports[1]);
        if a.total() > v.total() {
            f.push(format!(
                "{c}: A_STACK {} > V_STACK {}",
                a.total(),
                v.total()
            ));
        }
        // Controlled pairs on every tenth graph: k loops or repeated arcs appended.
        if i % 10 == 0 && g.n() > 0 {
            pairs += 1;
            let k = rng.gen_range(1..=8u64);
            let existing = g.arc_pairs();
            let extra: Vec<(u32, u32)> = (0..k)
                .map(|_| {
                    if existing.is_empty() || rng.gen_bool(0.5) {
                        let v = rng.gen_range(1..=g.n() as u32);
                        (v, v)
                    } else {
                        *existing.choose(&mut rng).unwrap()
                    }
                })
                .collect();
            let h = with_extra_arcs(g, &extra);
            for (tag, base) in Tag::ALL.into_iter().zip(&reports) {
                let slope = tag.coefficients().0;
                let d = total(tag, &h).total() as i64 - base.total() as i64;
                if d != (slope * k) as i64 {
                    f.push(format!(
                        "{c}: {tag} grew by {d} for {k} extra arcs, want {}",
                        slope * k
                    ));
                }
            }
        }
    }
    f.done(format!(
        "{} graphs x 6 tags, {pairs} controlled pairs",
        graphs.len()
    ))
}

fn criterion_7() -> Check {
    let mut graphs = sample(480, SEED + 7);
    for n in 1..=20 {
        graphs.push((
            GenSpec::new(Family::Complete, n, 0, n as u64),
            generate(GenSpec::new(Family::Complete, n, 0, n as u64)).unwrap(),
        ));
    }
    let mut f = Failures::new();
    let mut strongly = 0;
    for (spec, g) in &graphs {
        let c = ctx(spec);
        strongly += (g.n() > 0 && oracle_scc(g).unwrap().classes().len() == 1) as usize;
        for engine in EngineKind::ALL {
            for opts in TarjanOptions::all_flag_combinations(engine).filter(|o| o.stop_early) {
                let plain = scc_tarjan(
                    g,
                    TarjanOptions {
                        stop_early: false,
                        ..opts
                    },
                )
                .unwrap();
                let early = scc_tarjan(g, opts).unwrap();
                if early.canonical_partition() != plain.canonical_partition() {
                    f.push(format!(
                        "{c}: T {opts:?} partition differs from its full run"
                    ));
                }
            }
            let plain = scc_cycle(
                g,
                CycleOptions {
                    engine,
                    stop_early: false,
                },
            )
            .unwrap();
            let (early, _) = scc_cycle_run(
                g,
                CycleOptions {
                    engine,
                    stop_early: true,
                },
                None,
            )
            .unwrap();
            if early.canonical_partition() != plain.canonical_partition() {
                f.push(format!(
                    "{c}: C {engine:?} partition differs from its full run"
                ));
            }
        }
        for tag in [Tag::TarjanA, Tag::CycleA] {
            let (out_full, full) = counted_run(tag, g, CountOptions { stop_early: false }).unwrap();
            let (out_early, early) =
                counted_run(tag, g, CountOptions { stop_early: true }).unwrap();
            let same = match (&out_full, &out_early) {
                (CountedOutput::Scc(a), CountedOutput::Scc(b)) => {
                    a.canonical_partition() == b.canonical_partition()
                }
                _ => false,
            };
            if !same {
                f.push(format!(
                    "{c}: counted {tag} partition changes with stop-early"
                ));
            }
            if spec.family == Family::Complete && g.n() > 0 && early.total() >= full.total() {
                f.push(format!(
                    "{c}: {tag} stop-early total {} not below {}",
                    early.total(),
                    full.total()
                ));
            }
        }
    }
    f.done(format!(
        "{} graphs ({strongly} strongly connected)",
        graphs.len()
    ))
}

/// Transitive closure of the condensation agrees with the oracle, and the
/// condensation is simple and acyclic.
fn check_condensation(g: &Graph, scc: &SccResult) -> Vec<String> {
    let mut d = Vec::new();
    let cond = condense(g, scc).unwrap();
    let h = &cond.graph;
    let mut pairs = h.arc_pairs();
    if pairs.iter().any(|(x, y)| x == y) {
        d.push("condensation has a loop".into());
    }
    pairs.sort_unstable();
    if pairs.windows(2).any(|w| w[0] == w[1]) {
        d.push("condensation has a repeated arc".into());
    }
    let hc = oracle_scc(h).unwrap();
    if hc.classes().len() != h.n() {
        d.push("condensation has a cycle".into());
    }
    let mut comp_of = vec![VertexId::NONE; g.n() + 1];
    for (k, &l) in cond.leaders.iter().enumerate().skip(1) {
        for v in g.vertices().filter(|&v| scc.leader(v) == l) {
            comp_of[v.index()] = VertexId::new(k);
        }
    }
    let og = oracle_scc(g).unwrap();
    for u in g.vertices() {
        for v in g.vertices() {
            if og.reaches(u, v) != hc.reaches(comp_of[u.index()], comp_of[v.index()]) {
                d.push(format!("reachability {u} -> {v} not preserved"));
            }
        }
    }
    d
}

enum Mutation {
    Merge,
    Split,
    Move,
}

/// One edit to a correct partition; `None` if the graph has no room for it.
fn mutate(scc: &SccResult, kind: &Mutation, rng: &mut ChaCha8Rng) -> Option<SccResult> {
    let mut comps: Vec<(VertexId, Vec<VertexId>)> = scc
        .components()
        .enumerate()
        .map(|(k, c)| (scc.component_leader(k), c.to_vec()))
        .collect();
    match kind {
        Mutation::Merge => {
            if comps.len() < 2 {
                return None;
            }
            let i = rng.gen_range(0..comps.len() - 1);
            let j = rng.gen_range(i + 1..comps.len());
            let (_, moved) = comps.remove(j);
            comps[i].1.extend(moved);
        }
        Mutation::Split => {
            let big: Vec<usize> = (0..comps.len()).filter(|&k| comps[k].1.len() > 1).collect();
            let &k = big.choose(rng)?;
            let v = *comps[k].1.choose(rng).unwrap();
            comps[k].1.retain(|&x| x != v);
            if comps[k].0 == v {
                comps[k].0 = comps[k].1[0];
            }
            comps.insert(k + rng.gen_range(0..=1), (v, vec![v]));
        }
        Mutation::Move => {
            // Reassign one vertex of a multi-vertex component to another leader.
            let big: Vec<usize> = (0..comps.len()).filter(|&k| comps[k].1.len() > 1).collect();
            if comps.len() < 2 {
                return None;
            }
            let &k = big.choose(rng)?;
            let v = *comps[k].1.choose(rng).unwrap();
            comps[k].1.retain(|&x| x != v);
            if comps[k].0 == v {
                comps[k].0 = comps[k].1[0];
            }
            let mut j = rng.gen_range(0..comps.len() - 1);
            if j >= k {
                j += 1;
            }
            comps[j].1.push(v);
        }
    }
    Some(SccResult::from_components(scc.n(), comps, scc.order_kind(), scc.within_order()).unwrap())
}

fn criterion_8() -> Check {
    let graphs: Vec<_> = sample(2000, SEED + 8)
        .into_iter()
        .filter(|(_, g)| g.n() <= 32)
        .take(200)
        .collect();
    let mut f = Failures::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    let mut accepted = 0;
    let mut trials = [0usize; 3];
    for (spec, g) in &graphs {
        let c = ctx(spec);
        let opts = TarjanOptions {
            record_lowarcs: true,
            ..Default::default()
        };
        let run = scc_tarjan_run(g, opts, None).unwrap();
        let inn = build_in_trees(&run).unwrap();
        let out = build_out_trees(run.tree_arcs.as_ref().unwrap(), &run.scc);
        let results = [
            run.scc.clone(),
            scc_cycle(g, CycleOptions::default()).unwrap(),
            scc_bidirectional(g, None, BidiOptions::default()).unwrap(),
        ];
        for r in &results {
            f.extend(&c, check_condensation(g, r));
            let (i2, o2) = derive_certificates(g, r).unwrap();
            match verify_scc(g, r, &i2, &o2).unwrap() {
                Verdict::Accept => accepted += 1,
                Verdict::Reject(why) => f.push(format!("{c}: correct result rejected: {why}")),
            }
        }
        match verify_scc(g, &run.scc, &inn, &out).unwrap() {
            Verdict::Accept => accepted += 1,
            Verdict::Reject(why) => f.push(format!("{c}: recorded certificates rejected: {why}")),
        }
        for (t, kind) in [Mutation::Merge, Mutation::Split, Mutation::Move]
            .iter()
            .enumerate()
        {
            for _ in 0..3 {
                let Some(bad) = mutate(&run.scc, kind, &mut rng) else {
                    continue;
                };
                trials[t] += 1;
                let (i2, o2) = derive_certificates(g, &bad).unwrap();
                for (name, verdict) in [
                    ("derived", verify_scc(g, &bad, &i2, &o2).unwrap()),
                    ("recorded", verify_scc(g, &bad, &inn, &out).unwrap()),
                ] {
                    if verdict.is_accept() {
                        f.push(format!(
                            "{c}: mutated partition {:?} accepted with {name} certificates",
                            bad.canonical_partition()
                        ));
                    }
                }
            }
        }
    }
    let n_trials: usize = trials.iter().sum();
    if graphs.len() < 200 || n_trials < 300 {
        f.push(format!(
            "only {} graphs and {n_trials} mutation trials",
            graphs.len()
        ));
    }
    f.done(format!(
        "{} graphs, {accepted} correct pipelines accepted, {n_trials} mutations rejected (merge {}, split {}, move {})",
        graphs.len(),
        trials[0],
        trials[1],
        trials[2]
    ))
}

fn criterion_9() -> Check {
    let mut f = Failures::new();
    let mut lines = Vec::new();
    let cases = [
        (
            "deep-path n=1e6",
            GenSpec::new(Family::DeepPath, 1_000_000, 0, 0),
        ),
        (
            "gnm n=1e6 m=1e7",
            GenSpec::new(Family::Gnm, 1_000_000, 10_000_000, SEED),
        ),
    ];
    for (name, spec) in cases {
        let g = generate(spec).unwrap();
        let mut counts = Vec::new();
        for alg in ["T", "C", "B"] {
            let t0 = Instant::now();
            let r = match alg {
                "T" => scc_tarjan(&g, TarjanOptions::default()),
                "C" => scc_cycle(&g, CycleOptions::default()),
                _ => scc_bidirectional(&g, None, BidiOptions::default()),
            };
            let el = t0.elapsed();
            match r {
                Ok(r) => counts.push(r.num_components()),
                Err(e) => f.push(format!("{name}: {alg} failed: {e}")),
            }
            if el > Duration::from_secs(10) {
                f.push(format!("{name}: {alg} took {el:.1?}"));
            }
            lines.push(format!("{name} {alg} {el:.2?}"));
        }
        if counts.windows(2).any(|w| w[0] != w[1]) {
            f.push(format!("{name}: component counts disagree: {counts:?}"));
        }
    }
    f.done(lines.join(", "))
}

fn criterion_10() -> Check {
    let graphs = sample(500, SEED + 10);
    let mut f = Failures::new();
    for (spec, g) in &graphs {
        for engine in EngineKind::ALL {
            let base = scc_tarjan(
                g,
                TarjanOptions {
                    engine,
                    ..Default::default()
                },
            )
            .unwrap();
            for (encode, numeric) in [(true, false), (false, true), (true, true)] {
                let opts = TarjanOptions {
                    engine,
                    encode_leader_bits: encode,
                    numeric_components: numeric,
                    ..Default::default()
                };
                let r = scc_tarjan(g, opts).unwrap();
                if r != base {
                    f.push(format!(
                        "{}: {opts:?} differs from the plain run",
                        ctx(spec)
                    ));
                }
            }
        }
    }
    f.done(format!(
        "{} graphs x 3 engines x 3 variants, identical output",
        graphs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("oracle equivalence", criterion_1),
        ("trace equivalence", criterion_2),
        ("lemma suite", criterion_3),
        ("cycle-finding invariants", criterion_4),
        ("order semantics", criterion_5),
        ("memory-access model", criterion_6),
        ("stop-early equivalence", criterion_7),
        ("extensions", criterion_8),
        ("scale smoke test", criterion_9),
        ("encoding variants", criterion_10),
    ];
    let only: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        if !only.is_empty() && !only.contains(&(i + 1)) {
            continue;
        }
        let t0 = Instant::now();
        match run() {
            Ok(summary) => println!("PASS {:>2} {name}: {summary} [{:.1?}]", i + 1, t0.elapsed()),
            Err(diags) => {
                failed += 1;
                println!(
                    "FAIL {:>2} {name}: {} problems [{:.1?}]",
                    i + 1,
                    diags.len(),
                    t0.elapsed()
                );
                for d in diags {
                    eprintln!("    {d}");
                }
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
