//! Immutable directed graphs stored as endogenous singly-linked out-lists.
//!
//! Vertices are `1..=n` and arcs are `1..=m`; id `0` is the `NONE` sentinel.
//! Each vertex holds the id of the first arc on its out-list, and each arc
//! holds its tip and the id of the next arc on the same list. Arc ids follow
//! input order and every out-list is ascending in arc id.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A vertex id in `1..=n`, or [`VertexId::NONE`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexId(pub u32);

impl VertexId {
    pub const NONE: VertexId = VertexId(0);

    #[inline]
    pub fn new(v: usize) -> Self {
        VertexId(v as u32)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_none(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An arc id in `1..=m`, or [`ArcId::NONE`] (the null link).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ArcId(pub u32);

impl ArcId {
    pub const NONE: ArcId = ArcId(0);

    #[inline]
    pub fn new(a: usize) -> Self {
        ArcId(a as u32)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_none(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0)
    }
}

/// Unvalidated link arrays, as they might arrive from outside.
///
/// Index 0 of every array is unused so ids index directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawGraph {
    pub n: usize,
    pub first: Vec<u32>,
    pub tip: Vec<u32>,
    pub next: Vec<u32>,
}

/// A violated graph invariant, reported by [`validate_graph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    /// Array lengths disagree with `n` and `m`.
    Shape(String),
    /// A tip is not a vertex (OUT_OF_RANGE).
    TipOutOfRange { arc: u32, tip: u32 },
    /// A `first` link names no arc.
    FirstOutOfRange { vertex: u32, arc: u32 },
    /// A `next` link names no arc.
    NextOutOfRange { arc: u32, next: u32 },
    /// Walking the list of `vertex` reached `arc` a second time (cycle, or
    /// an arc shared between lists).
    ChainRevisit { vertex: u32, arc: u32 },
    /// An arc lies on no out-list.
    Unreached { arc: u32 },
    /// An out-list is not in ascending arc order.
    OrderViolation { vertex: u32, arc: u32 },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::Shape(s) => write!(f, "shape: {s}"),
            Diagnostic::TipOutOfRange { arc, tip } => {
                write!(f, "OUT_OF_RANGE: arc {arc} has tip {tip}")
            }
            Diagnostic::FirstOutOfRange { vertex, arc } => {
                write!(f, "OUT_OF_RANGE: vertex {vertex} has first arc {arc}")
            }
            Diagnostic::NextOutOfRange { arc, next } => {
                write!(f, "OUT_OF_RANGE: arc {arc} has next arc {next}")
            }
            Diagnostic::ChainRevisit { vertex, arc } => {
                write!(f, "out-list of vertex {vertex} revisits arc {arc}")
            }
            Diagnostic::Unreached { arc } => write!(f, "arc {arc} is on no out-list"),
            Diagnostic::OrderViolation { vertex, arc } => {
                write!(
                    f,
                    "out-list of vertex {vertex} is not ascending at arc {arc}"
                )
            }
        }
    }
}

/// A read-only directed graph. Loops and parallel arcs are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    first: Vec<ArcId>,
    tip: Vec<VertexId>,
    next: Vec<ArcId>,
}

impl Graph {
    /// Builds a graph whose arc `k` is `arcs[k - 1]`; each out-list keeps input order.
    pub fn build(n: usize, arcs: &[(u32, u32)]) -> Result<Graph> {
        Self::build_with_lines(n, arcs.iter().map(|&(t, h)| (t, h, None)))
    }

    fn build_with_lines(
        n: usize,
        arcs: impl ExactSizeIterator<Item = (u32, u32, Option<usize>)>,
    ) -> Result<Graph> {
        let m = arcs.len();
        if n >= u32::MAX as usize || m >= u32::MAX as usize {
            return Err(Error::Unsupported(format!("graph of size n={n}, m={m}")));
        }
        let mut tails = Vec::with_capacity(m);
        let mut tip = Vec::with_capacity(m + 1);
        tip.push(VertexId::NONE);
        for (t, h, line) in arcs {
            for v in [t, h] {
                if v == 0 || v as usize > n {
                    return Err(Error::OutOfRange {
                        vertex: v as u64,
                        n,
                        line,
                    });
                }
            }
            tails.push(t);
            tip.push(VertexId(h));
        }
        let mut first = vec![ArcId::NONE; n + 1];
        let mut next = vec![ArcId::NONE; m + 1];
        // Prepend in reverse so each list ends up in input order.
        for (k, &t) in tails.iter().enumerate().rev() {
            let a = ArcId::new(k + 1);
            next[a.index()] = first[t as usize];
            first[t as usize] = a;
        }
        Ok(Graph {
            n,
            first,
            tip,
            next,
        })
    }

    /// Validates raw link arrays and wraps them.
    pub fn from_raw(raw: RawGraph) -> std::result::Result<Graph, Vec<Diagnostic>> {
        let diags = validate_graph(&raw);
        if !diags.is_empty() {
            return Err(diags);
        }
        Ok(Graph {
            n: raw.n,
            first: raw.first.into_iter().map(ArcId).collect(),
            tip: raw.tip.into_iter().map(VertexId).collect(),
            next: raw.next.into_iter().map(ArcId).collect(),
        })
    }

    pub fn to_raw(&self) -> RawGraph {
        RawGraph {
            n: self.n,
            first: self.first.iter().map(|a| a.0).collect(),
            tip: self.tip.iter().map(|v| v.0).collect(),
            next: self.next.iter().map(|a| a.0).collect(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.tip.len() - 1
    }

    #[inline]
    pub fn first(&self, v: VertexId) -> ArcId {
        self.first[v.index()]
    }

    #[inline]
    pub fn tip(&self, a: ArcId) -> VertexId {
        self.tip[a.index()]
    }

    #[inline]
    pub fn next(&self, a: ArcId) -> ArcId {
        self.next[a.index()]
    }

    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = VertexId> + ExactSizeIterator {
        (1..self.n as u32 + 1).map(VertexId)
    }

    /// Arcs out of `v` in list order.
    pub fn out_arcs(&self, v: VertexId) -> OutArcs<'_> {
        OutArcs {
            graph: self,
            cur: self.first(v),
        }
    }

    /// The tail of every arc, indexed by arc id (index 0 unused).
    pub fn tails(&self) -> Vec<VertexId> {
        let mut tails = vec![VertexId::NONE; self.m() + 1];
        for v in self.vertices() {
            for a in self.out_arcs(v) {
                tails[a.index()] = v;
            }
        }
        tails
    }

    /// All arcs as `(id, tail, head)` in id order.
    pub fn arcs(&self) -> Vec<(ArcId, VertexId, VertexId)> {
        let tails = self.tails();
        (1..=self.m())
            .map(|k| {
                let a = ArcId::new(k);
                (a, tails[k], self.tip(a))
            })
            .collect()
    }

    /// The arc list in id order, suitable for [`Graph::build`].
    pub fn arc_pairs(&self) -> Vec<(u32, u32)> {
        self.arcs()
            .into_iter()
            .map(|(_, t, h)| (t.0, h.0))
            .collect()
    }
}

/// Iterator over an out-list.
pub struct OutArcs<'g> {
    graph: &'g Graph,
    cur: ArcId,
}

impl Iterator for OutArcs<'_> {
    type Item = ArcId;

    #[inline]
    fn next(&mut self) -> Option<ArcId> {
        if self.cur.is_none() {
            return None;
        }
        let a = self.cur;
        self.cur = self.graph.next(a);
        Some(a)
    }
}

/// Builds a graph from an arc list. See [`Graph::build`].
pub fn build_graph(n: usize, arcs: &[(u32, u32)]) -> Result<Graph> {
    Graph::build(n, arcs)
}

/// Swaps the ends of every arc. Arc `k` of the result is arc `k` of `g`
/// reversed, so each new out-list is ascending in original arc id.
pub fn reverse_graph(g: &Graph) -> Graph {
    let reversed: Vec<(u32, u32)> = g.arcs().into_iter().map(|(_, t, h)| (h.0, t.0)).collect();
    Graph::build(g.n(), &reversed).expect("reversal of a valid graph is valid")
}

/// Parses the edge-list format: a header `n m`, then exactly `m` lines
/// `tail head`. Lines starting with `#` and blank lines are skipped.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        message: "missing header `n m`".into(),
    })?;
    let (n, m) = parse_pair(header, header_line)?;
    let n = usize::try_from(n).map_err(|_| Error::Parse {
        line: header_line,
        message: "vertex count too large".into(),
    })?;

    let mut arcs = Vec::with_capacity(m.min(1 << 24) as usize);
    let mut last_line = header_line;
    for (line, body) in lines.by_ref() {
        if arcs.len() as u64 == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {m} arcs"),
            });
        }
        let (t, h) = parse_pair(body, line)?;
        let narrow = |v: u64| -> Result<u32> {
            u32::try_from(v).map_err(|_| Error::OutOfRange {
                vertex: v,
                n,
                line: Some(line),
            })
        };
        arcs.push((narrow(t)?, narrow(h)?, Some(line)));
        last_line = line;
    }
    if (arcs.len() as u64) < m {
        return Err(Error::Parse {
            line: last_line + 1,
            message: format!("expected {m} arcs, found {}", arcs.len()),
        });
    }
    Graph::build_with_lines(n, arcs.into_iter())
}

fn parse_pair(body: &str, line: usize) -> Result<(u64, u64)> {
    let mut it = body.split_whitespace();
    let mut field = |what: &str| -> Result<u64> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("missing {what}"),
        })?;
        tok.parse::<u64>().map_err(|_| Error::Parse {
            line,
            message: format!("{what} `{tok}` is not a non-negative integer"),
        })
    };
    let a = field("first field")?;
    let b = field("second field")?;
    if let Some(extra) = it.next() {
        return Err(Error::Parse {
            line,
            message: format!("unexpected trailing field `{extra}`"),
        });
    }
    Ok((a, b))
}

/// Emits the edge-list format with arcs in id order and a trailing newline.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + g.m() * 12);
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (_, t, h) in g.arcs() {
        let _ = writeln!(out, "{t} {h}");
    }
    out
}

/// Checks every [`Graph`] invariant on raw link arrays.
pub fn validate_graph(raw: &RawGraph) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    let n = raw.n;
    if raw.first.len() != n + 1 {
        diags.push(Diagnostic::Shape(format!(
            "first has {} slots, expected n + 1 = {}",
            raw.first.len(),
            n + 1
        )));
        return diags;
    }
    if raw.tip.is_empty() || raw.tip.len() != raw.next.len() {
        diags.push(Diagnostic::Shape(format!(
            "tip has {} slots and next has {}; both must be m + 1",
            raw.tip.len(),
            raw.next.len()
        )));
        return diags;
    }
    let m = raw.tip.len() - 1;
    for a in 1..=m {
        let t = raw.tip[a];
        if t == 0 || t as usize > n {
            diags.push(Diagnostic::TipOutOfRange {
                arc: a as u32,
                tip: t,
            });
        }
    }
    let mut seen = vec![false; m + 1];
    for v in 1..=n {
        let mut a = raw.first[v];
        let mut prev = 0u32;
        if a as usize > m {
            diags.push(Diagnostic::FirstOutOfRange {
                vertex: v as u32,
                arc: a,
            });
            continue;
        }
        while a != 0 {
            if seen[a as usize] {
                diags.push(Diagnostic::ChainRevisit {
                    vertex: v as u32,
                    arc: a,
                });
                break;
            }
            seen[a as usize] = true;
            if a <= prev {
                diags.push(Diagnostic::OrderViolation {
                    vertex: v as u32,
                    arc: a,
                });
            }
            prev = a;
            let nx = raw.next[a as usize];
            if nx as usize > m {
                diags.push(Diagnostic::NextOutOfRange { arc: a, next: nx });
                break;
            }
            a = nx;
        }
    }
    for (a, &s) in seen.iter().enumerate().skip(1) {
        if !s {
            diags.push(Diagnostic::Unreached { arc: a as u32 });
        }
    }
    diags
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph() {
        let g = build_graph(0, &[]).unwrap();
        assert_eq!((g.n(), g.m()), (0, 0));
        assert_eq!(serialize_graph(&g), "0 0\n");
        assert_eq!(reverse_graph(&g), g);
    }

    #[test]
    fn single_loop() {
        let g = build_graph(1, &[(1, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.out_arcs(VertexId(1)).collect::<Vec<_>>(), vec![ArcId(1)]);
        assert_eq!(g.tip(ArcId(1)), VertexId(1));
    }

    #[test]
    fn out_list_follows_input_order() {
        let g = build_graph(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        let tips: Vec<_> = g.out_arcs(VertexId(1)).map(|a| g.tip(a).0).collect();
        assert_eq!(tips, vec![2, 3]);
        assert_eq!(
            g.out_arcs(VertexId(1)).collect::<Vec<_>>(),
            vec![ArcId(1), ArcId(2)]
        );
        assert_eq!(g.out_arcs(VertexId(3)).count(), 0);
    }

    #[test]
    fn out_of_range_endpoints() {
        assert!(matches!(
            build_graph(2, &[(1, 3)]),
            Err(Error::OutOfRange { vertex: 3, .. })
        ));
        assert!(matches!(
            build_graph(2, &[(0, 1)]),
            Err(Error::OutOfRange { vertex: 0, .. })
        ));
    }

    #[test]
    fn reverse_single_arc() {
        let g = build_graph(2, &[(1, 2)]).unwrap();
        let r = reverse_graph(&g);
        assert_eq!(r.arc_pairs(), vec![(2, 1)]);
    }

    #[test]
    fn reverse_keeps_arc_ids_and_ascending_lists() {
        let g = build_graph(3, &[(1, 2), (3, 2), (2, 2), (1, 2)]).unwrap();
        let r = reverse_graph(&g);
        assert_eq!(r.arc_pairs(), vec![(2, 1), (2, 3), (2, 2), (2, 1)]);
        let list: Vec<_> = r.out_arcs(VertexId(2)).map(|a| a.0).collect();
        assert_eq!(list, vec![1, 2, 3, 4]);
    }

    #[test]
    fn parse_triangle() {
        let g = parse_graph("3 3\n1 2\n2 3\n3 1\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(g.arc_pairs(), vec![(1, 2), (2, 3), (3, 1)]);
    }

    #[test]
    fn parse_isolated_vertex_without_trailing_newline() {
        let g = parse_graph("1 0").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn parse_out_of_range_reports_line() {
        assert_eq!(
            parse_graph("2 1\n1 3\n"),
            Err(Error::OutOfRange {
                vertex: 3,
                n: 2,
                line: Some(2)
            })
        );
    }

    #[test]
    fn parse_skips_comments_and_reports_physical_lines() {
        let g = parse_graph("# a comment\n2 1\n# another\n1 2\n").unwrap();
        assert_eq!(g.arc_pairs(), vec![(1, 2)]);
        match parse_graph("# c\n2 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_arc_count_mismatch() {
        assert!(matches!(
            parse_graph("2 2\n1 2\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_graph("2 1\n1 2\n2 1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_graph(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_graph("2 1 7\n1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn serialize_single_arc() {
        let g = build_graph(2, &[(1, 2)]).unwrap();
        assert_eq!(serialize_graph(&g), "2 1\n1 2\n");
    }

    #[test]
    fn validate_well_formed() {
        let g = build_graph(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(validate_graph(&g.to_raw()).is_empty());
        assert_eq!(Graph::from_raw(g.to_raw()), Ok(g));
    }

    #[test]
    fn validate_reports_chain_cycle() {
        let g = build_graph(2, &[(1, 2), (1, 2)]).unwrap();
        let mut raw = g.to_raw();
        raw.next[2] = 1;
        let diags = validate_graph(&raw);
        assert!(
            diags.contains(&Diagnostic::ChainRevisit { vertex: 1, arc: 1 }),
            "{diags:?}"
        );
    }

    #[test]
    fn validate_reports_zero_tip() {
        let g = build_graph(2, &[(1, 2)]).unwrap();
        let mut raw = g.to_raw();
        raw.tip[1] = 0;
        let diags = validate_graph(&raw);
        assert_eq!(diags, vec![Diagnostic::TipOutOfRange { arc: 1, tip: 0 }]);
        assert!(diags[0].to_string().starts_with("OUT_OF_RANGE"));
    }

    #[test]
    fn validate_reports_unreached_and_order() {
        let g = build_graph(2, &[(1, 2), (1, 1)]).unwrap();
        let mut raw = g.to_raw();
        raw.first[1] = 2;
        raw.next[2] = 0;
        assert_eq!(validate_graph(&raw), vec![Diagnostic::Unreached { arc: 1 }]);

        let mut raw = g.to_raw();
        raw.first[1] = 2;
        raw.next[2] = 1;
        raw.next[1] = 0;
        assert_eq!(
            validate_graph(&raw),
            vec![Diagnostic::OrderViolation { vertex: 1, arc: 1 }]
        );
    }
}
