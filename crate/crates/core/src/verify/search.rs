//! Counterexample and witness searches for the open problems.
//!
//! The two conjectures are tested on a pool of edge-supercritical graphs:
//! every one found in the sweep plus the known infinite families. The
//! diameter-2 question runs every connected graph through cheap necessary
//! conditions first and fully classifies only the survivors. A random
//! sample of the discarded graphs is classified anyway to confirm the
//! filters never drop a witness.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::criticality::{Evaluator, GraphVerdict, Invariant, Mode};
use crate::error::{Error, Result};
use crate::families::{complete, corona, g_r};
use crate::graph::{to_graph6, EnumFilter, Graph, GraphSource, VertexSet};
use crate::solvers::{gamma, gamma_t, optimal_trd_functions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConjectureId {
    /// Every vertex of an edge-supercritical graph is positive under some
    /// optimal function.
    VfPlus,
    /// G ∪ K_3 is (k+3)-edge-critical when G is k-edge-supercritical.
    UnionKn,
    /// Connected 6-edge-supercritical graphs of diameter 2.
    Diam2,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 3] = [ConjectureId::VfPlus, ConjectureId::UnionKn, ConjectureId::Diam2];

    pub fn id(self) -> &'static str {
        match self {
            ConjectureId::VfPlus => "conj-1-Vf-plus",
            ConjectureId::UnionKn => "conj-2-union-Kn",
            ConjectureId::Diam2 => "question-diam2-6super",
        }
    }

    /// Whether `found` lists counterexamples (conjectures) rather than
    /// witnesses (the open question).
    pub fn is_conjecture(self) -> bool {
        self != ConjectureId::Diam2
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ConjectureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "conj-1-Vf-plus" | "conj-1" => Ok(ConjectureId::VfPlus),
            "conj-2-union-Kn" | "conj-2" => Ok(ConjectureId::UnionKn),
            "question-diam2-6super" | "question-diam2" => Ok(ConjectureId::Diam2),
            _ => Err(Error::UnknownSearch(s.to_string())),
        }
    }
}

/// Position in a sweep: the next graph to examine is the `index`-th graph
/// of order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Checkpoint {
    pub n: usize,
    pub index: usize,
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub max_n: usize,
    pub source: GraphSource,
    pub resume: Option<Checkpoint>,
    pub seed: u64,
    /// Fraction of filtered-out graphs that are fully classified anyway.
    pub spot_check_rate: f64,
    /// Graphs between progress checkpoints.
    pub checkpoint_every: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_n: 8,
            source: GraphSource::Builtin,
            resume: None,
            seed: 0,
            spot_check_rate: 0.01,
            checkpoint_every: 10_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub id: ConjectureId,
    pub scope: String,
    pub graphs_examined: usize,
    /// Graphs that reached the property test (pool members, or graphs
    /// passing every filter).
    pub candidates: usize,
    /// Counterexamples for a conjecture, witnesses for the question; graph6,
    /// sorted.
    pub found: Vec<String>,
    pub spot_checked: usize,
    /// Discarded graphs that full classification would have kept.
    pub spot_check_failures: Vec<String>,
    pub last_checkpoint: Option<Checkpoint>,
    pub wall_time: Duration,
}

/// Graphs of each order from `min_n` to `max_n`, skipping everything before
/// the resume point. Yields `(n, index, graph)`.
fn sweep(
    opts: &SearchOptions,
    filter: EnumFilter,
    min_n: usize,
) -> Result<Vec<(usize, Vec<(usize, Graph)>)>> {
    let mut out = Vec::new();
    for n in min_n..=opts.max_n {
        if opts.resume.is_some_and(|cp| n < cp.n) {
            continue;
        }
        let start = match opts.resume {
            Some(cp) if cp.n == n => cp.index,
            _ => 0,
        };
        let gs: Vec<(usize, Graph)> = opts
            .source
            .graphs(n, n, filter)?
            .into_iter()
            .enumerate()
            .skip(start)
            .collect();
        out.push((n, gs));
    }
    Ok(out)
}

/// Runs `visit` over the sweep in parallel chunks, logging a checkpoint
/// after each chunk. Returns the results in sweep order and the last
/// checkpoint.
fn run_chunked<T: Send>(
    id: ConjectureId,
    levels: Vec<(usize, Vec<(usize, Graph)>)>,
    every: usize,
    visit: impl Fn(usize, usize, &Graph) -> Result<T> + Sync,
) -> Result<(Vec<T>, Option<Checkpoint>)> {
    let mut out = Vec::new();
    let mut last = None;
    for (n, gs) in levels {
        for chunk in gs.chunks(every.max(1)) {
            let part = chunk
                .par_iter()
                .map(|(i, g)| visit(n, *i, g))
                .collect::<Result<Vec<_>>>()?;
            out.extend(part);
            let (i, g) = chunk.last().expect("chunks are non-empty");
            let cp = Checkpoint { n, index: i + 1 };
            log::info!("{id}: checkpoint n={} index={} last={}", cp.n, cp.index, to_graph6(g));
            last = Some(cp);
        }
    }
    Ok((out, last))
}

/// Edge-supercritical graphs from the sweep (isolate-free, order ≤ max_n)
/// plus G_2..G_4 and cor(K_4)..cor(K_6), each with its value k.
fn supercritical_pool(opts: &SearchOptions) -> Result<(usize, Vec<(Graph, u32)>, Option<Checkpoint>)> {
    let ev = Evaluator::new();
    let levels = sweep(opts, EnumFilter::isolate_free(), 2)?;
    let examined = levels.iter().map(|(_, gs)| gs.len()).sum();
    let (found, last) = run_chunked(ConjectureId::VfPlus, levels, opts.checkpoint_every, |_, _, g| {
        Ok(ev
            .supercritical_value(g, Mode::Addition, Invariant::TotalRoman)?
            .map(|k| (g.clone(), k)))
    })?;
    let mut pool: Vec<(Graph, u32)> = found.into_iter().flatten().collect();
    for r in 2..=4 {
        pool.push((g_r(r)?, 6));
    }
    for n in 4..=6 {
        pool.push((corona(&complete(n)?)?, 2 * n as u32));
    }
    Ok((examined, pool, last))
}

fn positive_cover(g: &Graph) -> Result<VertexSet> {
    Ok(optimal_trd_functions(g)?
        .iter()
        .fold(VertexSet::EMPTY, |acc, f| acc | f.positive()))
}

/// Cheap necessary conditions for a connected 6-edge-supercritical graph
/// of diameter 2.
fn passes_diam2_filters(ev: &Evaluator, g: &Graph) -> Result<bool> {
    Ok(g.diameter() == 2.into()
        && g.min_degree() >= 3
        && gamma(g) == 3
        && gamma_t(g)? == 3
        && ev.critical_value(g, Mode::Addition, Invariant::TotalDomination)? == Some(3)
        && ev.critical_value(g, Mode::Addition, Invariant::Domination)? == Some(3))
}

fn is_diam2_witness(g: &Graph) -> Result<bool> {
    if g.diameter() != 2.into() {
        return Ok(false);
    }
    let class = Evaluator::new().classify_graph(g, Mode::Addition, Invariant::TotalRoman)?;
    Ok(class.verdict == GraphVerdict::EdgeSupercritical && class.k == 6)
}

fn spot_rng(seed: u64, n: usize, index: usize) -> ChaCha8Rng {
    let salt = ((n as u64) << 40) ^ index as u64;
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

#[derive(Default)]
struct Diam2Outcome {
    candidate: bool,
    witness: Option<String>,
    spot_checked: bool,
    spot_failure: Option<String>,
}

pub fn search_counterexample(id: ConjectureId, opts: &SearchOptions) -> Result<SearchReport> {
    if !(0.0..=1.0).contains(&opts.spot_check_rate) {
        return Err(Error::InvalidParameter(format!(
            "spot-check rate {} not in [0, 1]",
            opts.spot_check_rate
        )));
    }
    let start = Instant::now();
    let origin = if opts.source.is_builtin() { "builtin" } else { "external" };
    let mut report = SearchReport {
        id,
        scope: String::new(),
        graphs_examined: 0,
        candidates: 0,
        found: Vec::new(),
        spot_checked: 0,
        spot_check_failures: Vec::new(),
        last_checkpoint: None,
        wall_time: Duration::ZERO,
    };
    match id {
        ConjectureId::VfPlus | ConjectureId::UnionKn => {
            let (examined, pool, last) = supercritical_pool(opts)?;
            report.scope = format!(
                "edge-supercritical isolate-free n<={} ({origin}) + G_2..G_4 + cor(K_4)..cor(K_6)",
                opts.max_n
            );
            report.graphs_examined = examined;
            report.candidates = pool.len();
            report.last_checkpoint = last;
            let k3 = complete(3)?;
            let violations = pool
                .par_iter()
                .map(|(g, k)| {
                    let holds = match id {
                        ConjectureId::VfPlus => positive_cover(g)? == g.vertices(),
                        _ => {
                            let h = g.disjoint_union(&k3)?;
                            Evaluator::new().critical_value(&h, Mode::Addition, Invariant::TotalRoman)?
                                == Some(k + 3)
                        }
                    };
                    Ok((!holds).then(|| to_graph6(g)))
                })
                .collect::<Result<Vec<_>>>()?;
            report.found = violations.into_iter().flatten().collect();
        }
        ConjectureId::Diam2 => {
            report.scope = format!("connected n<={} ({origin}), diameter-2 filters", opts.max_n);
            let levels = sweep(opts, EnumFilter::connected(), 2)?;
            report.graphs_examined = levels.iter().map(|(_, gs)| gs.len()).sum();
            let ev = Evaluator::new();
            let (outcomes, last) = run_chunked(id, levels, opts.checkpoint_every, |n, i, g| {
                let mut out = Diam2Outcome::default();
                if passes_diam2_filters(&ev, g)? {
                    out.candidate = true;
                    if ev.supercritical_value(g, Mode::Addition, Invariant::TotalRoman)? == Some(6)
                        && is_diam2_witness(g)?
                    {
                        out.witness = Some(to_graph6(g));
                    }
                } else if spot_rng(opts.seed, n, i).gen_bool(opts.spot_check_rate) {
                    out.spot_checked = true;
                    if is_diam2_witness(g)? {
                        out.spot_failure = Some(to_graph6(g));
                    }
                }
                Ok(out)
            })?;
            report.last_checkpoint = last;
            for o in outcomes {
                report.candidates += o.candidate as usize;
                report.spot_checked += o.spot_checked as usize;
                report.found.extend(o.witness);
                report.spot_check_failures.extend(o.spot_failure);
            }
        }
    }
    report.found.sort();
    report.spot_check_failures.sort();
    report.wall_time = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in ConjectureId::ALL {
            assert_eq!(id.id().parse::<ConjectureId>().unwrap(), id);
        }
        assert_eq!("question-diam2".parse::<ConjectureId>().unwrap(), ConjectureId::Diam2);
        assert!(matches!("conj-9".parse::<ConjectureId>(), Err(Error::UnknownSearch(_))));
    }

    #[test]
    fn conjectures_hold_on_small_pool() {
        let opts = SearchOptions {
            max_n: 6,
            ..SearchOptions::default()
        };
        for id in [ConjectureId::VfPlus, ConjectureId::UnionKn] {
            let r = search_counterexample(id, &opts).unwrap();
            assert!(r.found.is_empty(), "{id}: {:?}", r.found);
            // K3 u K3 comes from the sweep, on top of the six known graphs
            assert!(r.candidates > 6);
        }
    }

    #[test]
    fn diam2_spot_checks_everything_at_rate_one() {
        let opts = SearchOptions {
            max_n: 6,
            spot_check_rate: 1.0,
            ..SearchOptions::default()
        };
        let r = search_counterexample(ConjectureId::Diam2, &opts).unwrap();
        assert_eq!(r.graphs_examined, 1 + 2 + 6 + 21 + 112);
        assert_eq!(r.spot_checked + r.candidates, r.graphs_examined);
        assert!(r.spot_check_failures.is_empty());
    }

    #[test]
    fn resume_skips_earlier_graphs() {
        let opts = SearchOptions {
            max_n: 5,
            resume: Some(Checkpoint { n: 5, index: 10 }),
            ..SearchOptions::default()
        };
        let r = search_counterexample(ConjectureId::Diam2, &opts).unwrap();
        assert_eq!(r.graphs_examined, 21 - 10);
        assert_eq!(r.last_checkpoint, Some(Checkpoint { n: 5, index: 21 }));
    }

    #[test]
    fn bad_rate_is_rejected() {
        let opts = SearchOptions {
            spot_check_rate: 2.0,
            ..SearchOptions::default()
        };
        assert!(search_counterexample(ConjectureId::Diam2, &opts).is_err());
    }
}
