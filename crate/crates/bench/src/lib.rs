//! Fixture graphs shared by the benchmarks.

use sccdfs::testkit::{generate, Family, GenSpec};
use sccdfs::Graph;

/// A named graph to benchmark on.
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
}

/// Random sparse, random dense, one long path, and many small cycles.
pub fn fixtures() -> Vec<Fixture> {
    let specs = [
        ("gnm-sparse", GenSpec::new(Family::Gnm, 20_000, 60_000, 7)),
        ("gnm-dense", GenSpec::new(Family::Gnm, 2_000, 200_000, 7)),
        ("deep-path", GenSpec::new(Family::DeepPath, 100_000, 0, 0)),
        (
            "cycle-chain",
            GenSpec {
                cycles: 2_000,
                ..GenSpec::new(Family::CycleChain, 20_000, 40_000, 7)
            },
        ),
    ];
    specs
        .into_iter()
        .map(|(name, spec)| Fixture {
            name,
            graph: generate(spec).expect("fixture specs are valid"),
        })
        .collect()
}
