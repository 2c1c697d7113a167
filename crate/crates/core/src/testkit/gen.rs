use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};

/// Largest `n` and `m` in the default corpus.
pub const CORPUS_MAX_N: usize = 64;
pub const CORPUS_MAX_M: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `m` arcs with uniformly random ends; loops and parallel arcs happen.
    Gnm,
    /// `m` random arcs from lower to higher vertex ids.
    Dag,
    /// `cycles` vertex-disjoint cycles joined in a chain by one arc each,
    /// plus random arcs pointing down the chain up to `m` arcs in total.
    CycleChain,
    /// Every ordered pair of distinct vertices, in shuffled order; `m` is ignored.
    Complete,
    /// Random arcs with many loops and repeated arcs.
    MultiLoop,
    /// The path `1 -> 2 -> ... -> n`; `m` is ignored.
    DeepPath,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Gnm,
        Family::Dag,
        Family::CycleChain,
        Family::Complete,
        Family::MultiLoop,
        Family::DeepPath,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Gnm => "gnm",
            Family::Dag => "dag",
            Family::CycleChain => "cycle-chain",
            Family::Complete => "complete",
            Family::MultiLoop => "multi-loop",
            Family::DeepPath => "deep-path",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::BadSpec(format!("unknown family `{s}`")))
    }
}

/// Everything that determines a generated graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    /// Number of cycles for [`Family::CycleChain`]; ignored otherwise.
    pub cycles: usize,
}

impl GenSpec {
    pub fn new(family: Family, n: usize, m: usize, seed: u64) -> Self {
        GenSpec {
            family,
            n,
            m,
            seed,
            cycles: 1,
        }
    }

    /// Arcs a cycle chain needs before any extra arcs.
    pub fn chain_base_arcs(n: usize, cycles: usize) -> usize {
        if n == 0 {
            0
        } else {
            n + cycles.saturating_sub(1)
        }
    }
}

/// Builds the graph described by `spec`. Same spec, same graph.
pub fn generate(spec: GenSpec) -> Result<Graph> {
    let GenSpec {
        family,
        n,
        m,
        seed,
        cycles,
    } = spec;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nu = n as u32;
    if n > u32::MAX as usize / 2 {
        return Err(Error::BadSpec(format!("n = {n} is too large")));
    }
    let arcs: Vec<(u32, u32)> = match family {
        Family::Gnm => {
            if n == 0 && m > 0 {
                return Err(Error::BadSpec(
                    "arcs requested on an empty vertex set".into(),
                ));
            }
            (0..m)
                .map(|_| (rng.gen_range(1..=nu), rng.gen_range(1..=nu)))
                .collect()
        }
        Family::Dag => {
            if n < 2 && m > 0 {
                return Err(Error::BadSpec(
                    "an acyclic graph with arcs needs n >= 2".into(),
                ));
            }
            (0..m)
                .map(|_| {
                    let x = rng.gen_range(1..nu);
                    (x, rng.gen_range(x + 1..=nu))
                })
                .collect()
        }
        Family::CycleChain => chain(n, m, cycles, &mut rng)?,
        Family::Complete => {
            if n > 1 << 12 {
                return Err(Error::BadSpec(format!(
                    "complete graph on {n} vertices is too big"
                )));
            }
            let mut arcs: Vec<(u32, u32)> = (1..=nu)
                .flat_map(|x| (1..=nu).filter(move |&y| y != x).map(move |y| (x, y)))
                .collect();
            arcs.shuffle(&mut rng);
            arcs
        }
        Family::MultiLoop => {
            if n == 0 && m > 0 {
                return Err(Error::BadSpec(
                    "arcs requested on an empty vertex set".into(),
                ));
            }
            let mut arcs: Vec<(u32, u32)> = Vec::with_capacity(m);
            while arcs.len() < m {
                let arc = match arcs.len() {
                    0 => {
                        let v = rng.gen_range(1..=nu);
                        (v, v)
                    }
                    2 => arcs[1],
                    _ => match rng.gen_range(0..4) {
                        0 => {
                            let v = rng.gen_range(1..=nu);
                            (v, v)
                        }
                        1 => arcs[rng.gen_range(0..arcs.len())],
                        _ => (rng.gen_range(1..=nu), rng.gen_range(1..=nu)),
                    },
                };
                arcs.push(arc);
            }
            arcs
        }
        Family::DeepPath => (1..nu).map(|x| (x, x + 1)).collect(),
    };
    build_graph(n, &arcs)
}

fn chain(n: usize, m: usize, k: usize, rng: &mut ChaCha8Rng) -> Result<Vec<(u32, u32)>> {
    if n == 0 {
        return if m == 0 {
            Ok(Vec::new())
        } else {
            Err(Error::BadSpec(
                "arcs requested on an empty vertex set".into(),
            ))
        };
    }
    if k == 0 || k > n {
        return Err(Error::BadSpec(format!(
            "{k} cycles do not fit in {n} vertices"
        )));
    }
    let base = GenSpec::chain_base_arcs(n, k);
    if m < base {
        return Err(Error::BadSpec(format!(
            "{k} chained cycles on {n} vertices need at least {base} arcs, got {m}"
        )));
    }
    // Block i holds vertices start[i]..start[i+1]; sizes differ by at most one.
    let start: Vec<u32> = (0..=k).map(|i| (i * n / k) as u32 + 1).collect();
    let mut arcs = Vec::with_capacity(m);
    for i in 0..k {
        let (lo, hi) = (start[i], start[i + 1] - 1);
        for x in lo..hi {
            arcs.push((x, x + 1));
        }
        arcs.push((hi, lo));
        if i + 1 < k {
            arcs.push((lo, start[i + 1]));
        }
    }
    let block = |v: u32| start.partition_point(|&s| s <= v) - 1;
    while arcs.len() < m {
        let x = rng.gen_range(1..=n as u32);
        let b = block(x);
        let y = rng.gen_range(start[b]..=n as u32);
        arcs.push((x, y));
    }
    arcs.shuffle(rng);
    Ok(arcs)
}

/// `count` deterministic corpus graphs of one family, with `n <= 64` and
/// `m <= 512` (complete graphs stop at `n = 23`).
pub fn corpus(family: Family, count: usize, seed: u64) -> Vec<(GenSpec, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (family as u64).wrapping_mul(0x9E37_79B9));
    (0..count)
        .map(|_| {
            let spec = match family {
                Family::Complete => GenSpec::new(family, rng.gen_range(0..=23), 0, rng.gen()),
                Family::DeepPath => GenSpec::new(family, rng.gen_range(0..=CORPUS_MAX_N), 0, 0),
                Family::Dag => {
                    let n = rng.gen_range(0..=CORPUS_MAX_N);
                    let m = if n < 2 {
                        0
                    } else {
                        rng.gen_range(0..=CORPUS_MAX_M)
                    };
                    GenSpec::new(family, n, m, rng.gen())
                }
                Family::CycleChain => {
                    let n = rng.gen_range(0..=CORPUS_MAX_N);
                    let cycles = rng.gen_range(1..=n.max(1));
                    let base = GenSpec::chain_base_arcs(n, cycles);
                    let m = if n == 0 {
                        0
                    } else {
                        rng.gen_range(base..=CORPUS_MAX_M)
                    };
                    GenSpec {
                        cycles,
                        ..GenSpec::new(family, n, m, rng.gen())
                    }
                }
                Family::Gnm | Family::MultiLoop => {
                    let n = rng.gen_range(0..=CORPUS_MAX_N);
                    let m = if n == 0 {
                        0
                    } else {
                        rng.gen_range(0..=CORPUS_MAX_M)
                    };
                    GenSpec::new(family, n, m, rng.gen())
                }
            };
            let g = generate(spec).expect("corpus specs are valid");
            (spec, g)
        })
        .collect()
}

/// `per_family` graphs from every family.
pub fn full_corpus(per_family: usize, seed: u64) -> Vec<(GenSpec, Graph)> {
    Family::ALL
        .into_iter()
        .flat_map(|f| corpus(f, per_family, seed))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_graph, serialize_graph};
    use crate::testkit::oracle_scc;

    #[test]
    fn deep_path() {
        let g = generate(GenSpec::new(Family::DeepPath, 5, 0, 0)).unwrap();
        assert_eq!(g.arc_pairs(), vec![(1, 2), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn two_chained_triangles() {
        let spec = GenSpec {
            cycles: 2,
            ..GenSpec::new(Family::CycleChain, 6, 7, 3)
        };
        let g = generate(spec).unwrap();
        assert_eq!(g.m(), 7);
        assert_eq!(
            oracle_scc(&g).unwrap().classes(),
            vec![vec![1, 2, 3], vec![4, 5, 6]]
        );
        let too_few = GenSpec { m: 6, ..spec };
        assert!(matches!(generate(too_few), Err(Error::BadSpec(_))));
    }

    #[test]
    fn deterministic_and_round_trips() {
        for f in Family::ALL {
            let a = corpus(f, 20, 7);
            let b = corpus(f, 20, 7);
            for ((sa, ga), (sb, gb)) in a.iter().zip(&b) {
                assert_eq!(sa, sb);
                assert_eq!(ga, gb);
                assert_eq!(&parse_graph(&serialize_graph(ga)).unwrap(), ga);
                assert!(ga.n() <= CORPUS_MAX_N && ga.m() <= CORPUS_MAX_M);
            }
        }
    }

    #[test]
    fn multi_loop_has_loop_and_parallel_pair() {
        let g = generate(GenSpec::new(Family::MultiLoop, 10, 3, 1)).unwrap();
        let pairs = g.arc_pairs();
        assert!(pairs.iter().any(|(x, y)| x == y));
        assert_eq!(pairs[1], pairs[2]);
    }

    #[test]
    fn chain_components_match_cycles() {
        for (spec, g) in corpus(Family::CycleChain, 50, 11) {
            let k = oracle_scc(&g).unwrap().classes().len();
            assert_eq!(k, if spec.n == 0 { 0 } else { spec.cycles }, "{spec:?}");
        }
    }

    #[test]
    fn bad_specs() {
        assert!(generate(GenSpec::new(Family::Gnm, 0, 1, 0)).is_err());
        assert!(generate(GenSpec::new(Family::Dag, 1, 1, 0)).is_err());
        assert!("nope".parse::<Family>().is_err());
        assert_eq!("cycle-chain".parse::<Family>().unwrap(), Family::CycleChain);
    }
}
