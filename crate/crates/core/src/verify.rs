//! Exhaustive and seeded random sweeps over small labelled graph classes.
//!
//! A class is every labelled graph on a fixed vertex set (all `n * b` cross
//! pairs in bipartite mode, all `C(n, 2)` pairs in general mode), filtered by
//! connectivity and minimum degree. Edge subsets are indexed by bitmasks over
//! "slots":
//!
//! * bipartite: slot `i * b + j` is the edge `(i, n + j)`;
//! * general: slot `j (j - 1) / 2 + i` is the edge `(i, j)`, `i < j`, which is
//!   graph6 bit order.
//!
//! Sweeps are split into a fixed number of contiguous shards (independent of
//! the thread count) and folded back in shard order, so reports do not depend
//! on scheduling.

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CANON_MAX_ORDER};
use crate::counting::{count_kst_u128, CopyCount};
use crate::error::{domain, Error, Result};
use crate::formulas::{classical, BoundParams, Theorem};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::structure::{self, DEFAULT_MAX_ORDER};

/// Default cap on the number of edge subsets an exhaustive sweep may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 26;
/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "EXTURAN_BUDGET";
/// Largest number of edge slots a class may have.
pub const MAX_SLOTS: usize = 128;

const SHARD_BITS: usize = 10;
const RANDOM_SHARD: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum ClassMode {
    /// `X = 0..n`, `Y = n..n + b`.
    Bipartite { n: usize, b: usize },
    General { n: usize },
}

impl ClassMode {
    pub fn order(self) -> usize {
        match self {
            ClassMode::Bipartite { n, b } => n + b,
            ClassMode::General { n } => n,
        }
    }

    pub fn slots(self) -> usize {
        match self {
            ClassMode::Bipartite { n, b } => n * b,
            ClassMode::General { n } => n * n.saturating_sub(1) / 2,
        }
    }

    /// The edge of every slot, in slot order.
    pub fn slot_edges(self) -> Vec<(usize, usize)> {
        match self {
            ClassMode::Bipartite { n, b } => (0..n).flat_map(|i| (0..b).map(move |j| (i, n + j))).collect(),
            ClassMode::General { n } => (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Enumeration {
    Exhaustive,
    /// `count` edge subsets drawn uniformly; sample `i` comes from a fixed
    /// position of the ChaCha8 stream for `seed`.
    Random { count: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphClassSpec {
    #[serde(flatten)]
    pub mode: ClassMode,
    pub connected: bool,
    pub biconnected: bool,
    pub min_degree: usize,
    pub enumeration: Enumeration,
    /// `None` reads [`BUDGET_ENV`], falling back to [`DEFAULT_BUDGET`].
    #[serde(skip)]
    pub budget: Option<u64>,
}

impl GraphClassSpec {
    pub fn bipartite(n: usize, b: usize) -> Self {
        Self::with_mode(ClassMode::Bipartite { n, b })
    }

    pub fn general(n: usize) -> Self {
        Self::with_mode(ClassMode::General { n })
    }

    fn with_mode(mode: ClassMode) -> Self {
        GraphClassSpec {
            mode,
            connected: false,
            biconnected: false,
            min_degree: 0,
            enumeration: Enumeration::Exhaustive,
            budget: None,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn biconnected(mut self) -> Self {
        self.biconnected = true;
        self
    }

    pub fn min_degree(mut self, r: usize) -> Self {
        self.min_degree = r;
        self
    }

    pub fn random(mut self, count: u64, seed: u64) -> Self {
        self.enumeration = Enumeration::Random { count, seed };
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = Some(budget);
        self
    }

    pub fn effective_budget(&self) -> Result<u64> {
        if let Some(b) = self.budget {
            return Ok(b);
        }
        match std::env::var(BUDGET_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| domain(format!("{BUDGET_ENV} must be a non-negative integer, got {v:?}"))),
            Err(_) => Ok(DEFAULT_BUDGET),
        }
    }

    /// Whether every graph of the class is connected.
    fn implies_connected(&self) -> bool {
        self.connected || self.biconnected
    }

    pub fn seed(&self) -> Option<u64> {
        match self.enumeration {
            Enumeration::Exhaustive => None,
            Enumeration::Random { seed, .. } => Some(seed),
        }
    }
}

/// Decodes sample indices into graphs of a class.
#[derive(Clone)]
struct Sampler {
    edges: Vec<(usize, usize)>,
    order: usize,
    spec: GraphClassSpec,
    total: u64,
    rng: Option<ChaCha8Rng>,
    rows: Vec<u64>,
}

impl Sampler {
    fn new(spec: &GraphClassSpec) -> Result<Self> {
        let mode = spec.mode;
        match mode {
            ClassMode::Bipartite { n, b } if n == 0 || b == 0 => {
                return Err(domain(format!("bipartite class needs n, b >= 1, got n = {n}, b = {b}")))
            }
            ClassMode::General { n: 0 } => return Err(domain("general class needs n >= 1")),
            _ => {}
        }
        let slots = mode.slots();
        if slots > MAX_SLOTS || mode.order() > 64 {
            return Err(Error::Scale(format!(
                "class has {slots} edge slots on {} vertices; limits are {MAX_SLOTS} slots and 64 vertices",
                mode.order()
            )));
        }
        let (total, rng) = match spec.enumeration {
            Enumeration::Exhaustive => {
                let budget = spec.effective_budget()?;
                if slots >= 64 || 1u64 << slots > budget {
                    return Err(Error::Scale(format!(
                        "exhaustive space has 2^{slots} edge subsets, budget is {budget}"
                    )));
                }
                (1u64 << slots, None)
            }
            Enumeration::Random { count, seed } => (count, Some(ChaCha8Rng::seed_from_u64(seed))),
        };
        Ok(Sampler {
            edges: mode.slot_edges(),
            order: mode.order(),
            spec: spec.clone(),
            total,
            rng,
            rows: vec![0; mode.order()],
        })
    }

    fn mask(&mut self, i: u64) -> u128 {
        match &mut self.rng {
            None => i as u128,
            Some(rng) => {
                // Four 32-bit words per sample, so sample i is independent of
                // every other index.
                rng.set_word_pos(4 * i as u128);
                let lo = rng.next_u64() as u128;
                let hi = rng.next_u64() as u128;
                let slots = self.edges.len();
                let keep = if slots == 128 { u128::MAX } else { (1u128 << slots) - 1 };
                (hi << 64 | lo) & keep
            }
        }
    }

    /// Loads sample `i` into `g`; returns whether it belongs to the class.
    fn load(&mut self, i: u64, g: &mut Graph) -> bool {
        let mut m = self.mask(i);
        self.rows.fill(0);
        while m != 0 {
            let (u, v) = self.edges[m.trailing_zeros() as usize];
            self.rows[u] |= 1 << v;
            self.rows[v] |= 1 << u;
            m &= m - 1;
        }
        let r = self.spec.min_degree as u32;
        if self.rows.iter().any(|row| row.count_ones() < r) {
            return false;
        }
        g.overwrite_rows64(&self.rows);
        if self.spec.biconnected {
            g.is_biconnected()
        } else if self.spec.connected {
            g.is_connected()
        } else {
            true
        }
    }

    fn fresh_graph(&self) -> Graph {
        Graph::from_rows64(&vec![0; self.order]).expect("empty rows are valid")
    }
}

/// Every graph of the class, in index order.
pub struct ClassIter {
    sampler: Sampler,
    next: u64,
}

impl Iterator for ClassIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let mut g = self.sampler.fresh_graph();
        while self.next < self.sampler.total {
            let i = self.next;
            self.next += 1;
            if self.sampler.load(i, &mut g) {
                return Some(g);
            }
        }
        None
    }
}

/// Streams the class. Fails with a scale error if an exhaustive class
/// exceeds the budget.
pub fn enumerate_class(spec: &GraphClassSpec) -> Result<ClassIter> {
    Ok(ClassIter {
        sampler: Sampler::new(spec)?,
        next: 0,
    })
}

/// The property a claim guarantees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    CycleAtLeast(usize),
    CycleExactly(usize),
    /// A path on this many vertices.
    PathOrder(usize),
    /// A matching of this size, with the first `left` vertices as one side.
    Matching { size: usize, left: usize },
}

impl Conclusion {
    pub fn holds(self, g: &Graph, max_order: usize) -> Result<bool> {
        match self {
            Conclusion::CycleAtLeast(len) => structure::has_cycle_at_least(g, len, max_order),
            Conclusion::CycleExactly(len) => structure::has_cycle_of_length(g, len, max_order),
            Conclusion::PathOrder(k) => Ok(structure::longest_path_order_within(g, max_order, k)? >= k),
            Conclusion::Matching { size, left } => Ok(structure::max_matching_from(g, 0..left) >= size),
        }
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::CycleAtLeast(l) => write!(f, "cycle of length >= {l}"),
            Conclusion::CycleExactly(l) => write!(f, "cycle of length {l}"),
            Conclusion::PathOrder(k) => write!(f, "path on {k} vertices"),
            Conclusion::Matching { size, .. } => write!(f, "matching with {size} edges"),
        }
    }
}

/// The classical results reproduced as baselines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Baseline {
    /// Edges forcing a cycle of length at least `2n - 2k`.
    Jackson,
    /// Edges forcing a cycle of length exactly `2n - 2k`.
    LiNing,
    /// `K_{s,t}` copies forcing a matching of `n - k` edges in `n x n` graphs.
    Wang,
}

impl Baseline {
    pub fn id(self) -> &'static str {
        match self {
            Baseline::Jackson => "jackson_exbip",
            Baseline::LiNing => "li_ning_exbip",
            Baseline::Wang => "wang_matching",
        }
    }
}

/// Open statements searched for counterexamples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Conjecture {
    /// More than `n(n - k - r) + r(k + r)` edges in a balanced bipartite
    /// graph with `δ >= r` forces a cycle of length exactly `2n - 2k`.
    Adamus,
    /// The cycle-bipartite threshold forces a cycle of length exactly
    /// `2n - 2k`.
    Conj41,
}

impl Conjecture {
    pub fn id(self) -> &'static str {
        match self {
            Conjecture::Adamus => "adamus_edges",
            Conjecture::Conj41 => "conj_41",
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Worker threads; never changes the report.
    pub jobs: usize,
    /// Order budget handed to the exact solvers.
    pub max_order: usize,
    /// Record `runtime_ms` (makes reports non-reproducible).
    pub timing: bool,
    pub witness_cap: usize,
    pub violation_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            jobs: 1,
            max_order: DEFAULT_MAX_ORDER,
            timing: false,
            witness_cap: 32,
            violation_cap: 64,
        }
    }
}

impl VerifyOptions {
    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub claim: String,
    pub params: BoundParams,
    pub class: GraphClassSpec,
    /// What graphs above the threshold must contain.
    pub conclusion: String,
    /// Edge subsets visited before filtering.
    pub examined: u64,
    /// Graphs of the class (after filtering).
    pub class_size: u64,
    pub threshold: CopyCount,
    pub violation_count: u64,
    /// Smallest graph6 strings among the violations.
    pub violations: Vec<String>,
    /// Largest count among graphs without the conclusion.
    pub extremal_value: Option<CopyCount>,
    pub tight: bool,
    /// Graphs attaining `extremal_value` without the conclusion.
    pub witnesses: Vec<String>,
    /// Conjecture searches: graphs above the bound with no cycle of length
    /// at least `2n - 2k` either.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weak_violation_count: Option<u64>,
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runtime_ms: Option<u64>,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    claim: &'a str,
    b: usize,
    n: usize,
    k: i64,
    r: usize,
    s: usize,
    t: usize,
    class_size: u64,
    threshold: String,
    violation_count: u64,
    extremal_value: String,
    tight: bool,
    witnesses: usize,
    seed: String,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Writes a header and one summary row per report.
    pub fn write_csv<W: Write>(out: W, reports: &[VerifyReport]) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for r in reports {
            let p = &r.params;
            w.serialize(CsvRow {
                claim: &r.claim,
                b: p.b,
                n: p.n,
                k: p.k,
                r: p.r,
                s: p.s,
                t: p.t,
                class_size: r.class_size,
                threshold: r.threshold.to_string(),
                violation_count: r.violation_count,
                extremal_value: r.extremal_value.as_ref().map(|v| v.to_string()).unwrap_or_default(),
                tight: r.tight,
                witnesses: r.witnesses.len(),
                seed: r.seed.map(|s| s.to_string()).unwrap_or_default(),
            })?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_plain(&self) -> String {
        let extremal = self.extremal_value.as_ref().map_or("none".to_string(), |v| v.to_string());
        format!(
            "{} [{}]: {} graphs, threshold {}, {} violations, extremal {}, tight {}\n",
            self.claim, self.params, self.class_size, self.threshold, self.violation_count, extremal, self.tight
        )
    }

    /// Writes each violation and witness as its own graph6 file; returns the
    /// paths written.
    pub fn write_witness_files(&self, dir: &Path) -> Result<Vec<PathBuf>> {
        fs::create_dir_all(dir)?;
        let mut written = Vec::new();
        let groups = [("violation", &self.violations), ("witness", &self.witnesses)];
        for (kind, list) in groups {
            for (i, g6) in list.iter().enumerate() {
                let path = dir.join(format!("{}-{kind}-{i:03}.g6", self.claim));
                fs::write(&path, format!("{g6}\n"))?;
                written.push(path);
            }
        }
        Ok(written)
    }
}

/// Sorted set keeping only the `cap` smallest keys. Union followed by
/// truncation is associative, which the shard fold relies on.
#[derive(Clone, Debug, Default)]
struct Capped {
    keys: BTreeSet<String>,
    cap: usize,
}

impl Capped {
    fn new(cap: usize) -> Self {
        Capped {
            keys: BTreeSet::new(),
            cap,
        }
    }

    fn insert(&mut self, key: String) {
        self.keys.insert(key);
        while self.keys.len() > self.cap {
            self.keys.pop_last();
        }
    }

    fn absorb(&mut self, other: Capped) {
        for k in other.keys {
            self.insert(k);
        }
    }
}

#[derive(Clone, Debug)]
struct Tally {
    class_size: u64,
    violation_count: u64,
    violations: Capped,
    weak_violations: u64,
    best: Option<u128>,
    witnesses: Capped,
}

impl Tally {
    fn new(opts: &VerifyOptions) -> Self {
        Tally {
            class_size: 0,
            violation_count: 0,
            violations: Capped::new(opts.violation_cap),
            weak_violations: 0,
            best: None,
            witnesses: Capped::new(opts.witness_cap),
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.class_size += other.class_size;
        self.violation_count += other.violation_count;
        self.weak_violations += other.weak_violations;
        self.violations.absorb(other.violations);
        match (self.best, other.best) {
            (_, None) => {}
            (None, Some(_)) => {
                self.best = other.best;
                self.witnesses = other.witnesses;
            }
            (Some(a), Some(b)) if b > a => {
                self.best = other.best;
                self.witnesses = other.witnesses;
            }
            (Some(a), Some(b)) if a == b => self.witnesses.absorb(other.witnesses),
            _ => {}
        }
        self
    }
}

/// Everything a sweep needs to know about one claim.
#[derive(Clone, Debug)]
struct Probe {
    s: usize,
    t: usize,
    threshold: CopyCount,
    conclusion: Conclusion,
    weak: Option<Conclusion>,
}

fn witness_key(g: &Graph, mode: ClassMode) -> Result<String> {
    match mode {
        ClassMode::General { .. } if g.order() <= CANON_MAX_ORDER => Ok(encode_graph6(&canonical_form(g)?)),
        _ => Ok(encode_graph6(g)),
    }
}

fn run_shard(
    sampler: &Sampler,
    range: std::ops::Range<u64>,
    probe: &Probe,
    threshold: u128,
    opts: &VerifyOptions,
) -> Result<Tally> {
    let mut sampler = sampler.clone();
    let mut g = sampler.fresh_graph();
    let mut tally = Tally::new(opts);
    let mode = sampler.spec.mode;
    for i in range {
        if !sampler.load(i, &mut g) {
            continue;
        }
        tally.class_size += 1;
        let value = count_kst_u128(&g, probe.s, probe.t)
            .ok_or_else(|| Error::Scale("copy count overflows 128 bits".into()))?;
        let exceeds = value > threshold;
        if !exceeds && tally.best.is_some_and(|b| value < b) {
            continue;
        }
        if !probe.conclusion.holds(&g, opts.max_order)? {
            if exceeds {
                tally.violation_count += 1;
                tally.violations.insert(witness_key(&g, mode)?);
            }
            match tally.best {
                Some(b) if value < b => {}
                Some(b) if value == b => tally.witnesses.insert(witness_key(&g, mode)?),
                _ => {
                    tally.best = Some(value);
                    tally.witnesses = Capped::new(opts.witness_cap);
                    tally.witnesses.insert(witness_key(&g, mode)?);
                }
            }
        }
        if exceeds {
            if let Some(weak) = probe.weak {
                if !weak.holds(&g, opts.max_order)? {
                    tally.weak_violations += 1;
                }
            }
        }
    }
    Ok(tally)
}

fn sweep(claim: &str, params: BoundParams, spec: &GraphClassSpec, probe: Probe, opts: &VerifyOptions) -> Result<VerifyReport> {
    if opts.jobs == 0 {
        return Err(domain("jobs must be >= 1"));
    }
    let started = Instant::now();
    let sampler = Sampler::new(spec)?;
    let threshold = probe
        .threshold
        .to_u128()
        .ok_or_else(|| Error::Scale("threshold exceeds 128 bits".into()))?;

    let total = sampler.total;
    let ranges: Vec<std::ops::Range<u64>> = match spec.enumeration {
        Enumeration::Exhaustive => {
            let slots = sampler.edges.len();
            let w = slots.min(SHARD_BITS);
            let width = 1u64 << (slots - w);
            (0..1u64 << w).map(|i| i * width..(i + 1) * width).collect()
        }
        Enumeration::Random { .. } => (0..total.div_ceil(RANDOM_SHARD))
            .map(|i| i * RANDOM_SHARD..((i + 1) * RANDOM_SHARD).min(total))
            .collect(),
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let tallies: Vec<Result<Tally>> = pool.install(|| {
        ranges
            .into_par_iter()
            .map(|range| run_shard(&sampler, range, &probe, threshold, opts))
            .collect()
    });
    let mut tally = Tally::new(opts);
    for t in tallies {
        tally = tally.merge(t?);
    }

    let extremal_value = tally.best.map(CopyCount::from);
    let tight = extremal_value.as_ref() == Some(&probe.threshold);
    Ok(VerifyReport {
        claim: claim.to_string(),
        params,
        class: spec.clone(),
        conclusion: probe.conclusion.to_string(),
        examined: total,
        class_size: tally.class_size,
        threshold: probe.threshold,
        violation_count: tally.violation_count,
        violations: tally.violations.keys.into_iter().collect(),
        extremal_value,
        tight,
        witnesses: tally.witnesses.keys.into_iter().collect(),
        weak_violation_count: probe.weak.map(|_| tally.weak_violations),
        seed: spec.seed(),
        runtime_ms: opts.timing.then(|| started.elapsed().as_millis() as u64),
    })
}

/// Sweeps `spec` for an arbitrary claim: every graph with more than
/// `threshold` copies of `K_{s,t}` must satisfy `conclusion`.
pub fn verify_custom(
    claim: &str,
    p: &BoundParams,
    spec: &GraphClassSpec,
    threshold: CopyCount,
    conclusion: Conclusion,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let probe = Probe {
        s: p.s,
        t: p.t,
        threshold,
        conclusion,
        weak: None,
    };
    sweep(claim, *p, spec, probe, opts)
}

fn expect_bipartite(spec: &GraphClassSpec, n: usize, b: usize) -> Result<()> {
    if spec.mode != (ClassMode::Bipartite { n, b }) {
        return Err(domain(format!("class must be bipartite with parts {n} and {b}, got {:?}", spec.mode)));
    }
    Ok(())
}

fn expect_general(spec: &GraphClassSpec, n: usize) -> Result<()> {
    if spec.mode != (ClassMode::General { n }) {
        return Err(domain(format!("class must be general of order {n}, got {:?}", spec.mode)));
    }
    Ok(())
}

fn expect_min_degree(spec: &GraphClassSpec, r: usize) -> Result<()> {
    if spec.min_degree < r {
        return Err(domain(format!("class must require minimum degree >= {r}, got {}", spec.min_degree)));
    }
    Ok(())
}

/// The class matching a theorem's hypotheses exactly.
pub fn theorem_class(theorem: Theorem, p: &BoundParams) -> GraphClassSpec {
    let spec = if theorem.is_bipartite() {
        GraphClassSpec::bipartite(p.n, p.b).connected()
    } else if theorem == Theorem::CycleGeneral {
        GraphClassSpec::general(p.n).biconnected()
    } else {
        GraphClassSpec::general(p.n).connected()
    };
    spec.min_degree(p.r)
}

/// Checks that every graph of `spec` above the threshold has the
/// theorem's conclusion, and tracks the extremal value below it.
pub fn verify_theorem(
    theorem: Theorem,
    p: &BoundParams,
    spec: &GraphClassSpec,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let threshold = theorem.threshold(p)?;
    let target = theorem.target(p)?;
    if theorem.is_bipartite() {
        expect_bipartite(spec, p.n, p.b)?;
    } else {
        expect_general(spec, p.n)?;
    }
    expect_min_degree(spec, p.r)?;
    match theorem {
        Theorem::CycleGeneral if !spec.biconnected => return Err(domain("class must be 2-connected")),
        _ if !spec.implies_connected() => return Err(domain("class must be connected")),
        _ => {}
    }
    let conclusion = match theorem {
        Theorem::CycleBipartite | Theorem::CycleGeneral => Conclusion::CycleAtLeast(target),
        Theorem::PathBipartite | Theorem::PathGeneral => Conclusion::PathOrder(target),
        Theorem::MatchingBipartite => Conclusion::Matching { size: target, left: p.n },
    };
    let probe = Probe {
        s: p.s,
        t: p.t,
        threshold,
        conclusion,
        weak: None,
    };
    sweep(theorem.id(), *p, spec, probe, opts)
}

/// Computes the true extremal value of a classical result over `spec` and
/// compares it with the closed form.
///
/// `p` supplies `(b, n, k)` for the cycle baselines and `(n, k, s, t)` for
/// the matching baseline (with `b = n`); `r` is ignored.
pub fn verify_baseline(
    baseline: Baseline,
    p: &BoundParams,
    spec: &GraphClassSpec,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let k = usize::try_from(p.k).map_err(|_| domain(format!("k must be >= 0, got {}", p.k)))?;
    let (threshold, conclusion, s, t) = match baseline {
        Baseline::Jackson | Baseline::LiNing => {
            let value = classical::long_cycle_bipartite_extremal(p.b, p.n, k)?;
            let len = 2 * (p.n - k);
            let conclusion = if baseline == Baseline::Jackson {
                Conclusion::CycleAtLeast(len)
            } else {
                Conclusion::CycleExactly(len)
            };
            (value, conclusion, 1, 1)
        }
        Baseline::Wang => {
            if p.b != p.n {
                return Err(domain(format!("matching baseline is balanced, got b = {}, n = {}", p.b, p.n)));
            }
            let value = classical::matching_extremal(p.n, k, p.s, p.t)?;
            (value, Conclusion::Matching { size: p.n - k, left: p.n }, p.s, p.t)
        }
    };
    expect_bipartite(spec, p.n, p.b)?;
    let probe = Probe {
        s,
        t,
        threshold,
        conclusion,
        weak: None,
    };
    sweep(baseline.id(), *p, spec, probe, opts)
}

/// Searches `spec` for counterexamples to a conjecture: graphs above the
/// bound without a cycle of length exactly `2n - 2k`.
pub fn search_conjecture(
    conjecture: Conjecture,
    p: &BoundParams,
    spec: &GraphClassSpec,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let k = usize::try_from(p.k).map_err(|_| domain(format!("k must be >= 0, got {}", p.k)))?;
    let (threshold, s, t) = match conjecture {
        Conjecture::Adamus => {
            if p.b != p.n {
                return Err(domain(format!("balanced parts required, got b = {}, n = {}", p.b, p.n)));
            }
            if p.r < 1 || p.n < 2 * k + 2 * p.r {
                return Err(domain(format!(
                    "need r >= 1 and n >= 2k + 2r, got n = {}, k = {k}, r = {}",
                    p.n, p.r
                )));
            }
            (classical::adamus_edge_bound(p.n, k, p.r)?, 1, 1)
        }
        Conjecture::Conj41 => (Theorem::CycleBipartite.threshold(p)?, p.s, p.t),
    };
    expect_bipartite(spec, p.n, p.b)?;
    expect_min_degree(spec, p.r)?;
    if conjecture == Conjecture::Conj41 && !spec.implies_connected() {
        return Err(domain("class must be connected"));
    }
    let len = 2 * (p.n - k);
    let probe = Probe {
        s,
        t,
        threshold,
        conclusion: Conclusion::CycleExactly(len),
        weak: Some(Conclusion::CycleAtLeast(len)),
    };
    sweep(conjecture.id(), *p, spec, probe, opts)
}
