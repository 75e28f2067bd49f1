//! Exhaustive verification over small connected signed graphs.
//!
//! Underlying graphs come from three sources: every labelled connected
//! graph with a cycle up to `max_n_dense` vertices, every isomorphism class
//! of connected graphs up to `max_n_sparse` vertices with cyclomatic number
//! at most `max_cyclomatic`, and graph6 files. Each underlying graph is
//! signed once per switching class: the edges of a fixed BFS spanning tree
//! stay positive and the co-tree edges run through all sign patterns.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use sigrank_core::invariants::{is_bipartite, is_connected, pendant_vertices, shortest_cycle};
use sigrank_core::rank::{integer_rank, rank_in_place};
use sigrank_core::{rank, rank_oracle, Sign, SignedGraph, UnderlyingShape, Verdict};
use thiserror::Error;

use crate::canon::{self, MAX_ORDER};
use crate::graph6::{self, Graph6Error};
use crate::sgr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    RankGeGirthMinus2,
    Gminus2Iff,
    NoRankGirthMinus1,
    EqualsGIff,
    Girth4Consequence,
    TwoNeighborGirth,
    NullityBound,
    NeighborCoverage,
    PendantIdentity,
    RationalOracle,
    /// Deliberately false: fails on every rank = girth − 2 instance.
    RankGeGirthMinus1,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        CheckId::RankGeGirthMinus2,
        CheckId::Gminus2Iff,
        CheckId::NoRankGirthMinus1,
        CheckId::EqualsGIff,
        CheckId::Girth4Consequence,
        CheckId::TwoNeighborGirth,
        CheckId::NullityBound,
        CheckId::NeighborCoverage,
        CheckId::PendantIdentity,
        CheckId::RationalOracle,
        CheckId::RankGeGirthMinus1,
    ];

    /// Everything except the slow oracle and the self-test.
    pub const DEFAULT: [CheckId; 9] = [
        CheckId::RankGeGirthMinus2,
        CheckId::Gminus2Iff,
        CheckId::NoRankGirthMinus1,
        CheckId::EqualsGIff,
        CheckId::Girth4Consequence,
        CheckId::TwoNeighborGirth,
        CheckId::NullityBound,
        CheckId::NeighborCoverage,
        CheckId::PendantIdentity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::RankGeGirthMinus2 => "rank_ge_girth_minus_2",
            CheckId::Gminus2Iff => "gminus2_iff",
            CheckId::NoRankGirthMinus1 => "no_rank_girth_minus_1",
            CheckId::EqualsGIff => "equals_g_iff",
            CheckId::Girth4Consequence => "girth4_consequence",
            CheckId::TwoNeighborGirth => "two_neighbor_girth",
            CheckId::NullityBound => "nullity_bound",
            CheckId::NeighborCoverage => "neighbor_coverage",
            CheckId::PendantIdentity => "pendant_identity",
            CheckId::RationalOracle => "rational_oracle",
            CheckId::RankGeGirthMinus1 => "rank_ge_girth_minus_1",
        }
    }

    fn index(self) -> usize {
        CheckId::ALL.iter().position(|&c| c == self).expect("listed")
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| SweepError::UnknownCheck(s.to_string()))
    }
}

/// Parses a comma-separated check list; `default` and `all` expand.
pub fn parse_checks(list: &str) -> Result<Vec<CheckId>, SweepError> {
    let mut out = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match name {
            "default" => out.extend(CheckId::DEFAULT),
            "all" => out.extend(CheckId::ALL),
            _ => out.push(name.parse()?),
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("sparse sweep supports at most {MAX_ORDER} vertices, got {0}")]
    SparseTooLarge(usize),
    #[error("dense sweep supports at most 8 vertices, got {0}")]
    DenseTooLarge(usize),
    #[error("could not start worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    /// Largest order of the labelled enumeration; 0 disables it.
    pub max_n_dense: usize,
    /// Largest order of the isomorphism-class enumeration; 0 disables it.
    pub max_n_sparse: usize,
    pub max_cyclomatic: usize,
    pub graph6_sources: Vec<PathBuf>,
    pub parallelism: usize,
    pub checks: Vec<CheckId>,
    /// Counterexamples kept per check; counts are always complete.
    pub max_counterexamples: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n_dense: 7,
            max_n_sparse: 10,
            max_cyclomatic: 3,
            graph6_sources: Vec::new(),
            parallelism: 1,
            checks: CheckId::DEFAULT.to_vec(),
            max_counterexamples: 20,
        }
    }
}

impl SweepConfig {
    fn validate(&self) -> Result<(), SweepError> {
        if self.max_n_dense > 8 {
            return Err(SweepError::DenseTooLarge(self.max_n_dense));
        }
        if self.max_n_sparse > MAX_ORDER {
            return Err(SweepError::SparseTooLarge(self.max_n_sparse));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Dense,
    Sparse,
    Graph6,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub evaluated: u64,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub source: Source,
    /// The signed graph in `.sgr` form.
    pub graph: String,
    pub expected: String,
    pub observed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigSummary {
    pub max_n_dense: usize,
    pub max_n_sparse: usize,
    pub max_cyclomatic: usize,
    pub graph6_sources: Vec<String>,
    pub checks: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub schema: u32,
    pub config: ConfigSummary,
    pub underlying_graphs: u64,
    /// graph6 records that are disconnected or acyclic.
    pub skipped_graphs: u64,
    pub instances_checked: u64,
    /// Signed instances per classifier verdict.
    pub verdicts: BTreeMap<String, u64>,
    pub checks: BTreeMap<String, CheckTally>,
    pub counterexample_count: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.counterexample_count == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn counterexamples_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for c in &self.counterexamples {
            w.serialize(c).expect("counterexample serialises");
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is utf-8")
    }
}

/// Sign representatives of the switching classes of a connected graph.
#[derive(Clone, Debug)]
pub struct Signings {
    base: SignedGraph,
    cotree: Vec<usize>,
    tree: Vec<bool>,
}

/// `tree[i]` marks edge `i` as belonging to the BFS tree grown from vertex
/// 0 with neighbours taken in increasing order.
fn bfs_tree(g: &SignedGraph) -> Vec<bool> {
    let adj = g.adjacency();
    let mut tree = vec![false; g.size()];
    let mut seen = vec![false; g.order()];
    let mut queue = std::collections::VecDeque::new();
    if g.order() > 0 {
        seen[0] = true;
        queue.push_back(0);
    }
    while let Some(u) = queue.pop_front() {
        for &(w, _) in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                tree[g.edge_index(u, w).expect("adjacent")] = true;
                queue.push_back(w);
            }
        }
    }
    tree
}

impl Signings {
    pub fn new(g: &SignedGraph) -> Result<Self, SweepError> {
        if !is_connected(g) {
            return Err(SweepError::Disconnected);
        }
        let base = g.unsigned();
        let tree = bfs_tree(&base);
        let cotree = (0..base.size()).filter(|&i| !tree[i]).collect();
        Ok(Signings { base, cotree, tree })
    }

    pub fn count(&self) -> u64 {
        1 << self.cotree.len()
    }

    /// Bit `i` of `pattern` makes the `i`-th co-tree edge (in sorted edge
    /// order) negative.
    pub fn signs(&self, pattern: u64) -> Vec<Sign> {
        let mut signs = vec![Sign::Positive; self.base.size()];
        for (bit, &e) in self.cotree.iter().enumerate() {
            if pattern >> bit & 1 == 1 {
                signs[e] = Sign::Negative;
            }
        }
        signs
    }

    pub fn signing(&self, pattern: u64) -> SignedGraph {
        self.base.with_signs(&self.signs(pattern)).expect("one sign per edge")
    }

    /// Pattern of the representative switching-equivalent to `g`, which
    /// must have the same underlying graph.
    pub fn pattern_of(&self, g: &SignedGraph) -> u64 {
        assert!(g.same_underlying(&self.base), "graph has a different underlying graph");
        let adj = g.adjacency();
        let mut pot = vec![Sign::Positive; g.order()];
        let mut seen = vec![false; g.order()];
        let mut queue = std::collections::VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &(w, s) in &adj[u] {
                let e = g.edge_index(u, w).expect("adjacent");
                if !seen[w] && self.tree[e] {
                    seen[w] = true;
                    pot[w] = pot[u] * s;
                    queue.push_back(w);
                }
            }
        }
        let mut pattern = 0;
        for (bit, &e) in self.cotree.iter().enumerate() {
            let edge = g.edges()[e];
            if pot[edge.u] * edge.sign * pot[edge.v] == Sign::Negative {
                pattern |= 1 << bit;
            }
        }
        pattern
    }
}

pub fn enumerate_signings(g: &SignedGraph) -> Result<Vec<SignedGraph>, SweepError> {
    let s = Signings::new(g)?;
    Ok((0..s.count()).map(|p| s.signing(p)).collect())
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn mask_is_connected(n: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    let mut rows = [0u32; 8];
    for (k, &(u, v)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
    }
    let mut reached = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        for (v, row) in rows.iter().enumerate().take(n) {
            if frontier >> v & 1 == 1 {
                next |= row;
            }
        }
        frontier = next & !reached;
        reached |= next;
    }
    reached == (1u32 << n) - 1
}

fn dense_graph(n: usize, pairs: &[(usize, usize)], mask: u32) -> Option<SignedGraph> {
    let m = mask.count_ones() as usize;
    if m < n || !mask_is_connected(n, pairs, mask) {
        return None;
    }
    let chosen = pairs
        .iter()
        .enumerate()
        .filter(|&(k, _)| mask >> k & 1 == 1)
        .map(|(_, &p)| p);
    Some(SignedGraph::all_positive(n, chosen).expect("distinct pairs"))
}

/// Every connected labelled graph on `n` vertices containing a cycle, by
/// increasing edge mask over the lexicographic pair order.
pub fn dense_graphs(n: usize) -> impl Iterator<Item = SignedGraph> {
    let p = pairs(n);
    (0..1u32 << p.len()).filter_map(move |mask| dense_graph(n, &p, mask))
}

/// Connected graphs with a cycle on `3..=max_n` vertices and cyclomatic
/// number at most `max_c`, one per isomorphism class.
pub fn sparse_graphs(max_n: usize, max_c: usize) -> Vec<SignedGraph> {
    canon::connected_classes(max_n, max_c)
        .iter()
        .flatten()
        .filter(|g| g.size() >= g.order())
        .map(canon::SmallGraph::to_signed)
        .collect()
}

/// All underlying graphs of a configuration, in sweep order. graph6
/// records that are disconnected or acyclic are left out.
pub fn enumerate_underlying(config: &SweepConfig) -> Result<Vec<(Source, SignedGraph)>, SweepError> {
    config.validate()?;
    let mut out = Vec::new();
    for n in 3..=config.max_n_dense {
        out.extend(dense_graphs(n).map(|g| (Source::Dense, g)));
    }
    out.extend(
        sparse_graphs(config.max_n_sparse, config.max_cyclomatic)
            .into_iter()
            .map(|g| (Source::Sparse, g)),
    );
    for path in &config.graph6_sources {
        for g in graph6::read_file(path)? {
            if is_connected(&g) && g.size() >= g.order() {
                out.push((Source::Graph6, g));
            }
        }
    }
    Ok(out)
}

enum Work {
    Dense { n: usize, masks: std::ops::Range<u32> },
    Listed { source: Source, graphs: Vec<SignedGraph> },
}

#[derive(Default)]
struct Tally {
    underlying: u64,
    skipped: u64,
    instances: u64,
    checks: [CheckTally; CheckId::ALL.len()],
    failures: u64,
    verdicts: [u64; VERDICT_NAMES.len()],
    examples: Vec<Vec<Counterexample>>,
}

const VERDICT_NAMES: [&str; 12] = [
    "GirthMinusTwo(A)",
    "GirthMinusTwo(B)",
    "GirthMinusTwo(C)",
    "EqualsGirth(a)",
    "EqualsGirth(b)",
    "EqualsGirth(c)",
    "EqualsGirth(d)",
    "EqualsGirth(e)",
    "EqualsGirth(f)",
    "EqualsGirth(g)",
    "EqualsGirth(h)",
    "NonExtremal",
];

fn verdict_slot(v: Verdict) -> usize {
    match v {
        Verdict::GirthMinusTwo(c) => c as usize,
        Verdict::EqualsGirth { case, .. } => 3 + case as usize,
        Verdict::NonExtremal => 11,
    }
}

impl Tally {
    fn new() -> Self {
        Tally {
            examples: vec![Vec::new(); CheckId::ALL.len()],
            ..Tally::default()
        }
    }

    fn merge(&mut self, other: Tally, cap: usize) {
        self.underlying += other.underlying;
        self.skipped += other.skipped;
        self.instances += other.instances;
        self.failures += other.failures;
        for (a, b) in self.verdicts.iter_mut().zip(other.verdicts) {
            *a += b;
        }
        for (a, b) in self.checks.iter_mut().zip(other.checks) {
            a.evaluated += b.evaluated;
            a.passed += b.passed;
            a.failed += b.failed;
        }
        for (mine, theirs) in self.examples.iter_mut().zip(other.examples) {
            let room = cap.saturating_sub(mine.len());
            mine.extend(theirs.into_iter().take(room));
        }
    }
}

struct Ctx<'a> {
    enabled: [bool; CheckId::ALL.len()],
    cap: usize,
    source: Source,
    tally: &'a mut Tally,
}

impl Ctx<'_> {
    fn on(&self, id: CheckId) -> bool {
        self.enabled[id.index()]
    }

    fn record<E, O>(&mut self, id: CheckId, ok: bool, g: &SignedGraph, expected: E, observed: O)
    where
        E: FnOnce() -> String,
        O: FnOnce() -> String,
    {
        let t = &mut self.tally.checks[id.index()];
        t.evaluated += 1;
        if ok {
            t.passed += 1;
            return;
        }
        t.failed += 1;
        self.tally.failures += 1;
        let list = &mut self.tally.examples[id.index()];
        if list.len() < self.cap {
            list.push(Counterexample {
                check: id.as_str().to_string(),
                source: self.source,
                graph: sgr::format(g),
                expected: expected(),
                observed: observed(),
            });
        }
    }
}

/// Dense `i64` adjacency with small-order rank helpers.
struct Dense {
    n: usize,
    a: Vec<i64>,
    scratch: Vec<i64>,
}

impl Dense {
    fn new(n: usize) -> Self {
        Dense {
            n,
            a: vec![0; n * n],
            scratch: Vec::with_capacity(n * n),
        }
    }

    fn load(&mut self, g: &SignedGraph) {
        self.a.iter_mut().for_each(|x| *x = 0);
        for e in g.edges() {
            let s = e.sign.value();
            self.a[e.u * self.n + e.v] = s;
            self.a[e.v * self.n + e.u] = s;
        }
    }

    /// Rank of the principal submatrix on `keep`.
    fn rank_on(&mut self, keep: &[usize]) -> usize {
        let k = keep.len();
        self.scratch.clear();
        for &i in keep {
            for &j in keep {
                self.scratch.push(self.a[i * self.n + j]);
            }
        }
        rank_in_place(k, k, &mut self.scratch).unwrap_or_else(|| {
            let copy: Vec<i64> = keep
                .iter()
                .flat_map(|&i| keep.iter().map(move |&j| (i, j)))
                .map(|(i, j)| self.a[i * self.n + j])
                .collect();
            integer_rank(k, k, &copy)
        })
    }
}

fn check_underlying(g: &SignedGraph, ctx: &mut Ctx<'_>) {
    let Ok(shape) = UnderlyingShape::analyze(g) else {
        ctx.tally.skipped += 1;
        return;
    };
    ctx.tally.underlying += 1;
    let n = g.order();
    let m = g.size();
    let girth = shape.girth();
    let c = m + 1 - n;
    let pendants = pendant_vertices(g);
    let bipartite = is_bipartite(g);
    let cycle = shortest_cycle(g).expect("graph has a cycle").vertices;
    let outside: Vec<usize> = (0..n).filter(|v| !cycle.contains(v)).collect();
    let adj = g.adjacency();
    let on_cycle = |u: usize| adj[u].iter().filter(|(w, _)| cycle.contains(w)).count();
    let dominated = outside.iter().all(|&u| on_cycle(u) >= 1);

    if ctx.on(CheckId::TwoNeighborGirth) {
        let crowded = outside.iter().copied().find(|&u| on_cycle(u) >= 2);
        ctx.record(
            CheckId::TwoNeighborGirth,
            crowded.is_none() || girth <= 4,
            g,
            || "girth 3 or 4 when an outside vertex has two neighbours on a shortest cycle".into(),
            || {
                format!(
                    "girth {girth}, vertex {} has {} neighbours on the cycle",
                    crowded.unwrap_or(0),
                    crowded.map(on_cycle).unwrap_or(0)
                )
            },
        );
    }

    let pendant = pendants.first().map(|&u| (u, adj[u][0].0));
    let without_pendant: Vec<usize> = match pendant {
        Some((u, v)) => (0..n).filter(|&w| w != u && w != v).collect(),
        None => Vec::new(),
    };
    let all: Vec<usize> = (0..n).collect();

    let signings = Signings::new(g).expect("connected");
    let mut dense = Dense::new(n);
    for pattern in 0..signings.count() {
        let sg = signings.signing(pattern);
        ctx.tally.instances += 1;
        dense.load(&sg);
        let r = dense.rank_on(&all);

        if ctx.on(CheckId::RankGeGirthMinus2) {
            ctx.record(
                CheckId::RankGeGirthMinus2,
                r + 2 >= girth,
                &sg,
                || format!("rank >= {}", girth - 2),
                || format!("rank {r}"),
            );
        }
        if ctx.on(CheckId::RankGeGirthMinus1) {
            ctx.record(
                CheckId::RankGeGirthMinus1,
                r + 1 >= girth,
                &sg,
                || format!("rank >= {}", girth - 1),
                || format!("rank {r}"),
            );
        }
        if ctx.on(CheckId::NoRankGirthMinus1) {
            ctx.record(
                CheckId::NoRankGirthMinus1,
                r + 1 != girth,
                &sg,
                || format!("rank != {}", girth - 1),
                || format!("rank {r}"),
            );
        }
        let below = shape.girth_minus_two(&sg);
        let equal = shape.equals_girth(&sg, || r);
        let verdict = below
            .as_ref()
            .or(equal.as_ref())
            .map_or(Verdict::NonExtremal, |c| c.verdict);
        ctx.tally.verdicts[verdict_slot(verdict)] += 1;

        if ctx.on(CheckId::Gminus2Iff) {
            let verdict = below;
            let accepted = verdict.is_some();
            ctx.record(
                CheckId::Gminus2Iff,
                accepted == (r + 2 == girth),
                &sg,
                || format!("classifier accepts iff rank = {}", girth - 2),
                || {
                    format!(
                        "rank {r}, classifier {}",
                        verdict.map_or("rejects".into(), |c| c.verdict.to_string())
                    )
                },
            );
        }
        if ctx.on(CheckId::EqualsGIff) {
            let verdict = equal;
            let accepted = verdict.is_some();
            let ok = if girth == 4 {
                !accepted || r == 4
            } else {
                accepted == (r == girth)
            };
            ctx.record(
                CheckId::EqualsGIff,
                ok,
                &sg,
                || format!("classifier accepts iff rank = {girth}"),
                || {
                    format!(
                        "rank {r}, classifier {}",
                        verdict.map_or("rejects".into(), |c| c.verdict.to_string())
                    )
                },
            );
        }
        if ctx.on(CheckId::Girth4Consequence) && girth == 4 && r == 4 {
            let reduced = sg.reduce();
            let reduced_rank = rank(&reduced.adjacency_matrix()).rank;
            ctx.record(
                CheckId::Girth4Consequence,
                bipartite && reduced_rank == 4,
                &sg,
                || "bipartite underlying graph and reduced rank 4".into(),
                || format!("bipartite {bipartite}, reduced rank {reduced_rank}"),
            );
        }
        if ctx.on(CheckId::NullityBound) && !shape.is_cycle() {
            let nullity = n - r;
            let bound = pendants.len() + 2 * c;
            ctx.record(
                CheckId::NullityBound,
                nullity < bound,
                &sg,
                || format!("nullity <= {}", bound as i64 - 1),
                || format!("nullity {nullity}"),
            );
        }
        if ctx.on(CheckId::NeighborCoverage) {
            let rh = dense.rank_on(&cycle);
            ctx.record(
                CheckId::NeighborCoverage,
                dominated || r > rh + 1,
                &sg,
                || "every vertex off a shortest cycle has a neighbour on it when rank <= cycle rank + 1".into(),
                || format!("rank {r}, cycle rank {rh}, undominated vertex present"),
            );
        }
        if ctx.on(CheckId::PendantIdentity) {
            if let Some((u, v)) = pendant {
                let rest = dense.rank_on(&without_pendant);
                ctx.record(
                    CheckId::PendantIdentity,
                    r == rest + 2,
                    &sg,
                    || format!("rank = rank(G - {u} - {v}) + 2 = {}", rest + 2),
                    || format!("rank {r}"),
                );
            }
        }
        if ctx.on(CheckId::RationalOracle) {
            let oracle = rank_oracle(&sg.adjacency_matrix());
            ctx.record(
                CheckId::RationalOracle,
                oracle == r,
                &sg,
                || format!("oracle rank {oracle}"),
                || format!("rank {r}"),
            );
        }
    }
}

const DENSE_CHUNK: u32 = 1 << 13;
const LISTED_CHUNK: usize = 256;

fn plan(config: &SweepConfig) -> Result<Vec<Work>, SweepError> {
    let mut work = Vec::new();
    for n in 3..=config.max_n_dense {
        let total = 1u32 << (n * (n - 1) / 2);
        let mut start = 0;
        while start < total {
            let end = total.min(start + DENSE_CHUNK);
            work.push(Work::Dense { n, masks: start..end });
            start = end;
        }
    }
    let mut listed = |source: Source, graphs: Vec<SignedGraph>| {
        for chunk in graphs.chunks(LISTED_CHUNK) {
            work.push(Work::Listed {
                source,
                graphs: chunk.to_vec(),
            });
        }
    };
    listed(
        Source::Sparse,
        sparse_graphs(config.max_n_sparse, config.max_cyclomatic),
    );
    for path in &config.graph6_sources {
        listed(Source::Graph6, graph6::read_file(path)?);
    }
    Ok(work)
}

fn process(work: &Work, enabled: [bool; CheckId::ALL.len()], cap: usize) -> Tally {
    let mut tally = Tally::new();
    match work {
        Work::Dense { n, masks } => {
            let p = pairs(*n);
            let mut ctx = Ctx {
                enabled,
                cap,
                source: Source::Dense,
                tally: &mut tally,
            };
            for mask in masks.clone() {
                if let Some(g) = dense_graph(*n, &p, mask) {
                    check_underlying(&g, &mut ctx);
                }
            }
        }
        Work::Listed { source, graphs } => {
            let mut ctx = Ctx {
                enabled,
                cap,
                source: *source,
                tally: &mut tally,
            };
            for g in graphs {
                check_underlying(g, &mut ctx);
            }
        }
    }
    tally
}

pub fn run(config: &SweepConfig) -> Result<SweepReport, SweepError> {
    config.validate()?;
    let start = Instant::now();
    let work = plan(config)?;
    let mut enabled = [false; CheckId::ALL.len()];
    for &c in &config.checks {
        enabled[c.index()] = true;
    }
    let cap = config.max_counterexamples;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism.max(1))
        .build()
        .map_err(|e| SweepError::Pool(e.to_string()))?;
    let parts: Vec<Tally> = pool.install(|| work.par_iter().map(|w| process(w, enabled, cap)).collect());
    let mut total = Tally::new();
    for part in parts {
        total.merge(part, cap);
    }

    let mut checks = BTreeMap::new();
    for &c in &config.checks {
        checks.insert(c.as_str().to_string(), total.checks[c.index()]);
    }
    let counterexamples = CheckId::ALL
        .iter()
        .flat_map(|c| total.examples[c.index()].iter().cloned())
        .collect();
    Ok(SweepReport {
        schema: 1,
        config: ConfigSummary {
            max_n_dense: config.max_n_dense,
            max_n_sparse: config.max_n_sparse,
            max_cyclomatic: config.max_cyclomatic,
            graph6_sources: config.graph6_sources.iter().map(|p| p.display().to_string()).collect(),
            checks: config.checks.iter().map(|c| c.as_str().to_string()).collect(),
        },
        underlying_graphs: total.underlying,
        skipped_graphs: total.skipped,
        instances_checked: total.instances,
        verdicts: VERDICT_NAMES
            .iter()
            .zip(total.verdicts)
            .filter(|&(_, k)| k > 0)
            .map(|(name, k)| (name.to_string(), k))
            .collect(),
        checks,
        counterexample_count: total.failures,
        counterexamples,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
