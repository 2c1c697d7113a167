//! `sccdfs`: strong components, condensation, verification, generation and
//! access counting on edge-list files.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sccdfs::instrument::{counted_run, CountOptions, CountedOutput, Tag};
use sccdfs::tarjan::scc_tarjan_run;
use sccdfs::testkit::{generate, Family, GenSpec};
use sccdfs::*;

const DEPTH_WARNING_N: usize = 100_000;

#[derive(Parser)]
#[command(
    name = "sccdfs",
    version,
    about = "Strong components by depth-first search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the strong components, one `leader: members` line each.
    Scc(SccArgs),
    /// Print the condensation as an edge list plus its leader table.
    Condense(CondenseArgs),
    /// Check a component listing against a graph; exit 3 if it is wrong.
    Verify(VerifyArgs),
    /// Generate a graph from one of the built-in families.
    Gen(GenArgs),
    /// Print memory-access counts as CSV.
    Count(CountArgs),
    /// Time every algorithm on every engine.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    /// Tarjan's one-pass algorithm.
    T,
    /// Cycle-finding with a leader stack.
    C,
    /// Forward pass, then backward searches on the reversed graph.
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Recursive,
    V,
    A,
}

impl From<Engine> for EngineKind {
    fn from(e: Engine) -> Self {
        match e {
            Engine::Recursive => EngineKind::Recursive,
            Engine::V => EngineKind::VStack,
            Engine::A => EngineKind::AStack,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackwardArg {
    Quick,
    Recursive,
    V,
    A,
}

#[derive(Args)]
struct RunArgs {
    #[arg(short, long, value_enum, default_value = "t")]
    algorithm: Algorithm,
    #[arg(short, long, value_enum, default_value = "a")]
    engine: Engine,
    /// Backward search of algorithm b.
    #[arg(long, value_enum, default_value = "quick")]
    backward: BackwardArg,
    #[arg(long)]
    stop_early: bool,
    /// Algorithm t: keep the leader bit inside `low`.
    #[arg(long)]
    encode_leader_bits: bool,
    /// Algorithm t: mark completed vertices with leader-plus-offset in `low`.
    #[arg(long)]
    numeric_components: bool,
    /// Algorithm t: also print each follower's low arc.
    #[arg(long)]
    record_lowarcs: bool,
    /// Run the access-counting executor and print its CSV line on stderr.
    #[arg(long)]
    counted: bool,
}

#[derive(Args)]
struct SccArgs {
    #[command(flatten)]
    run: RunArgs,
    /// Edge-list file, or `-` for standard input.
    #[arg(default_value = "-")]
    input: String,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CondenseArgs {
    #[command(flatten)]
    run: RunArgs,
    #[arg(default_value = "-")]
    input: String,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Write the `vertex leader` table here instead of as `#` comment lines.
    #[arg(long)]
    leaders: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// The graph.
    #[arg(short, long)]
    graph: String,
    /// Component listing as printed by `scc`; `-` for standard input.
    #[arg(short, long, default_value = "-")]
    scc: String,
}

#[derive(Args)]
struct GenArgs {
    #[arg(short, long)]
    family: Family,
    #[arg(short)]
    n: usize,
    #[arg(short, default_value_t = 0)]
    m: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Number of cycles for `cycle-chain`.
    #[arg(long, default_value_t = 1)]
    cycles: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CountArgs {
    /// Tag to count, or `all`.
    #[arg(short, long, default_value = "all")]
    tag: String,
    /// Let TARJAN_A and CYCLE_A stop early.
    #[arg(long)]
    stop_early: bool,
    /// Also print reads and writes per phase.
    #[arg(long)]
    phases: bool,
    #[arg(default_value = "-")]
    input: String,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Edge-list file; without it a graph is generated.
    input: Option<String>,
    #[arg(short, long, default_value = "gnm")]
    family: Family,
    #[arg(short, default_value_t = 100_000)]
    n: usize,
    #[arg(short, default_value_t = 500_000)]
    m: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Runs per pair; the median is reported.
    #[arg(long, default_value_t = 5)]
    repeat: usize,
}

/// Failure with its exit status.
struct Fail {
    code: u8,
    message: String,
}

impl Fail {
    fn usage(message: impl Into<String>) -> Self {
        Fail {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::OutOfRange { .. } => 2,
            _ => 1,
        };
        Fail {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Self {
        Fail::usage(e.to_string())
    }
}

type CliResult<T = ()> = std::result::Result<T, Fail>;

fn read_input(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Fail::usage(format!("{path}: {e}")))
    }
}

fn read_graph(path: &str) -> CliResult<Graph> {
    let text = read_input(path)?;
    parse_graph(&text).map_err(|e| Fail {
        code: 2,
        message: format!("{path}: {e}"),
    })
}

fn write_output(path: &Option<PathBuf>, text: &str) -> CliResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Fail::usage(format!("{}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

impl RunArgs {
    fn validate(&self, g: &Graph) -> CliResult {
        if self.counted && self.engine != Engine::A {
            return Err(Fail::usage("--counted needs --engine a"));
        }
        if self.counted
            && (self.encode_leader_bits || self.numeric_components || self.record_lowarcs)
        {
            return Err(Fail::usage(
                "--counted runs the fixed counting variant; drop the encoding flags",
            ));
        }
        if self.algorithm != Algorithm::T
            && (self.encode_leader_bits || self.numeric_components || self.record_lowarcs)
        {
            return Err(Fail::usage(
                "encoding and low-arc flags apply to algorithm t only",
            ));
        }
        if self.algorithm != Algorithm::B && self.backward != BackwardArg::Quick {
            return Err(Fail::usage("--backward applies to algorithm b only"));
        }
        let recursive = self.engine == Engine::Recursive || self.backward == BackwardArg::Recursive;
        if recursive && g.n() > DEPTH_WARNING_N {
            eprintln!(
                "warning: recursive engine on {} vertices may exhaust the call stack",
                g.n()
            );
        }
        Ok(())
    }

    /// Components, plus low arcs when recorded.
    fn run(&self, g: &Graph) -> CliResult<(SccResult, Option<Vec<ArcId>>)> {
        self.validate(g)?;
        let engine = self.engine.into();
        if self.counted {
            let tag = match self.algorithm {
                Algorithm::T => Tag::TarjanA,
                Algorithm::C => Tag::CycleA,
                Algorithm::B => Tag::Bidi,
            };
            let (out, report) = counted_run(
                tag,
                g,
                CountOptions {
                    stop_early: self.stop_early,
                },
            )?;
            eprintln!("{}", sccdfs::instrument::AccessReport::CSV_HEADER);
            eprintln!("{}", report.to_csv());
            return match out {
                CountedOutput::Scc(r) => Ok((r, None)),
                _ => Err(Fail::usage("counting executor returned no components")),
            };
        }
        Ok(match self.algorithm {
            Algorithm::T => {
                let opts = TarjanOptions {
                    engine,
                    encode_leader_bits: self.encode_leader_bits,
                    stop_early: self.stop_early,
                    numeric_components: self.numeric_components,
                    record_lowarcs: self.record_lowarcs,
                };
                let run = scc_tarjan_run(g, opts, None)?;
                (run.scc, run.lowarcs)
            }
            Algorithm::C => (
                scc_cycle(
                    g,
                    CycleOptions {
                        engine,
                        stop_early: self.stop_early,
                    },
                )?,
                None,
            ),
            Algorithm::B => {
                let backward = match self.backward {
                    BackwardArg::Quick => Backward::Quick,
                    BackwardArg::Recursive => Backward::DepthFirst(EngineKind::Recursive),
                    BackwardArg::V => Backward::DepthFirst(EngineKind::VStack),
                    BackwardArg::A => Backward::DepthFirst(EngineKind::AStack),
                };
                let opts = BidiOptions {
                    engine,
                    backward,
                    stop_early: self.stop_early,
                };
                (scc_bidirectional(g, None, opts)?, None)
            }
        })
    }
}

fn cmd_scc(a: SccArgs) -> CliResult {
    let g = read_graph(&a.input)?;
    let (scc, lowarcs) = a.run.run(&g)?;
    let mut text = format_scc(&scc);
    if let Some(low) = lowarcs {
        for v in g.vertices().filter(|&v| !low[v.index()].is_none()) {
            let arc = low[v.index()];
            let _ = writeln!(text, "# lowarc {v}: {arc} -> {}", g.tip(arc));
        }
    }
    write_output(&a.output, &text)
}

fn cmd_condense(a: CondenseArgs) -> CliResult {
    let g = read_graph(&a.input)?;
    let (scc, _) = a.run.run(&g)?;
    let cond = condense(&g, &scc)?;
    let mut text = cond.serialize();
    let table = cond.serialize_leaders();
    match &a.leaders {
        Some(p) => {
            fs::write(p, &table).map_err(|e| Fail::usage(format!("{}: {e}", p.display())))?
        }
        None => {
            for line in table.lines() {
                let _ = writeln!(text, "# {line}");
            }
        }
    }
    write_output(&a.output, &text)
}

fn cmd_verify(a: VerifyArgs) -> CliResult {
    if a.graph == "-" && a.scc == "-" {
        return Err(Fail::usage(
            "graph and components cannot both come from standard input",
        ));
    }
    let g = read_graph(&a.graph)?;
    let text = read_input(&a.scc)?;
    let reject = |why: String| Fail {
        code: 3,
        message: format!("REJECT: {why}"),
    };
    let scc = match parse_scc(&text, g.n()) {
        Ok(s) => s,
        Err(e @ Error::Parse { .. }) => return Err(Fail::usage(format!("{}: {e}", a.scc))),
        Err(e) => return Err(reject(e.to_string())),
    };
    let (inn, out) = derive_certificates(&g, &scc).map_err(|e| reject(e.to_string()))?;
    match verify_scc(&g, &scc, &inn, &out).map_err(|e| reject(e.to_string()))? {
        Verdict::Accept => {
            println!("ACCEPT");
            Ok(())
        }
        Verdict::Reject(why) => Err(reject(why)),
    }
}

fn cmd_gen(a: GenArgs) -> CliResult {
    let spec = GenSpec {
        cycles: a.cycles,
        ..GenSpec::new(a.family, a.n, a.m, a.seed)
    };
    let g = generate(spec).map_err(|e| Fail::usage(e.to_string()))?;
    write_output(&a.output, &serialize_graph(&g))
}

fn cmd_count(a: CountArgs) -> CliResult {
    let tags: Vec<Tag> = if a.tag.eq_ignore_ascii_case("all") {
        Tag::ALL.to_vec()
    } else {
        vec![a
            .tag
            .parse()
            .map_err(|e: Error| Fail::usage(e.to_string()))?]
    };
    let g = read_graph(&a.input)?;
    let mut text = format!("{}\n", sccdfs::instrument::AccessReport::CSV_HEADER);
    let mut phases = String::new();
    for tag in tags {
        let (_, r) = counted_run(
            tag,
            &g,
            CountOptions {
                stop_early: a.stop_early,
            },
        )?;
        let _ = writeln!(text, "{}", r.to_csv());
        for line in r.phase_lines() {
            let _ = writeln!(phases, "# {tag},{line}");
        }
    }
    if a.phases {
        text.push_str("# tag,phase,reads,writes\n");
        text.push_str(&phases);
    }
    write_output(&a.output, &text)
}

fn median_millis(mut runs: Vec<f64>) -> f64 {
    runs.sort_by(f64::total_cmp);
    runs[runs.len() / 2]
}

fn cmd_bench(a: BenchArgs) -> CliResult {
    let g = match &a.input {
        Some(p) => read_graph(p)?,
        None => generate(GenSpec::new(a.family, a.n, a.m, a.seed))
            .map_err(|e| Fail::usage(e.to_string()))?,
    };
    if a.repeat == 0 {
        return Err(Fail::usage("--repeat must be at least 1"));
    }
    let rev = reverse_graph(&g);
    println!("algorithm,engine,n,m,components,millis,accesses");
    for alg in [Algorithm::T, Algorithm::C, Algorithm::B] {
        for engine in [Engine::Recursive, Engine::V, Engine::A] {
            if engine == Engine::Recursive && g.n() > DEPTH_WARNING_N {
                eprintln!("skipping the recursive engine on {} vertices", g.n());
                continue;
            }
            let kind: EngineKind = engine.into();
            let mut times = Vec::with_capacity(a.repeat);
            let mut comps = 0;
            for _ in 0..a.repeat {
                let t0 = Instant::now();
                let r = match alg {
                    Algorithm::T => scc_tarjan(
                        &g,
                        TarjanOptions {
                            engine: kind,
                            ..Default::default()
                        },
                    )?,
                    Algorithm::C => scc_cycle(
                        &g,
                        CycleOptions {
                            engine: kind,
                            stop_early: false,
                        },
                    )?,
                    Algorithm::B => {
                        let opts = BidiOptions {
                            engine: kind,
                            ..Default::default()
                        };
                        scc_bidirectional(&g, Some(&rev), opts)?
                    }
                };
                times.push(t0.elapsed().as_secs_f64() * 1e3);
                comps = r.num_components();
            }
            let accesses = match (alg, engine) {
                (Algorithm::T, Engine::A) => Some(Tag::TarjanA),
                (Algorithm::C, Engine::A) => Some(Tag::CycleA),
                (Algorithm::B, Engine::A) => Some(Tag::Bidi),
                _ => None,
            }
            .map(|tag| {
                counted_run(tag, &g, CountOptions::default()).map(|(_, r)| r.total().to_string())
            })
            .transpose()?
            .unwrap_or_else(|| "-".into());
            let alg_name = match alg {
                Algorithm::T => "t",
                Algorithm::C => "c",
                Algorithm::B => "b",
            };
            let engine_name = match engine {
                Engine::Recursive => "recursive",
                Engine::V => "v",
                Engine::A => "a",
            };
            println!(
                "{alg_name},{engine_name},{},{},{comps},{:.3},{accesses}",
                g.n(),
                g.m(),
                median_millis(times)
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Scc(a) => cmd_scc(a),
        Command::Condense(a) => cmd_condense(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Count(a) => cmd_count(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("sccdfs: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
