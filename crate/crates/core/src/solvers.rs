//! Exact domination, total domination and total Roman domination numbers.
//!
//! A total Roman dominating (TRD) function labels each vertex 0, 1 or 2 so
//! that every 0-vertex has a neighbour labelled 2 and the positively
//! labelled vertices induce a subgraph without isolated vertices.
//!
//! `gamma_tr` fixes the set of 2-vertices `S` in order of increasing size.
//! Every vertex outside `N[S]` is then forced to 1, and the only freedom
//! left is which vertices of `N(S) - S` also get a 1; those are needed
//! exactly to give each isolated vertex of the forced positive set a
//! positive neighbour, a small hitting-set problem solved exactly. A
//! candidate `S` is abandoned as soon as `2|S|` plus the forced ones
//! reaches the incumbent.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A function `V(G) -> {0, 1, 2}` stored as the vertices labelled 1 and 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling {
    v1: VertexSet,
    v2: VertexSet,
}

impl Labeling {
    pub fn new(v1: VertexSet, v2: VertexSet) -> Result<Self> {
        if v1.intersects(v2) {
            return Err(Error::InvalidParameter(format!(
                "labelling assigns both 1 and 2 to {}",
                v1 & v2
            )));
        }
        Ok(Labeling { v1, v2 })
    }

    /// Builds a labelling from per-vertex values in `{0, 1, 2}`.
    pub fn from_values(values: &[u8]) -> Result<Self> {
        let mut v1 = VertexSet::EMPTY;
        let mut v2 = VertexSet::EMPTY;
        for (v, &x) in values.iter().enumerate() {
            match x {
                0 => {}
                1 => v1 = v1.with(v),
                2 => v2 = v2.with(v),
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "label {x} at vertex {v} is not in {{0,1,2}}"
                    )))
                }
            }
        }
        Ok(Labeling { v1, v2 })
    }

    pub fn ones(&self) -> VertexSet {
        self.v1
    }

    pub fn twos(&self) -> VertexSet {
        self.v2
    }

    /// `V_f^+`, the positively labelled vertices.
    pub fn positive(&self) -> VertexSet {
        self.v1 | self.v2
    }

    pub fn value(&self, v: usize) -> u8 {
        if self.v2.contains(v) {
            2
        } else if self.v1.contains(v) {
            1
        } else {
            0
        }
    }

    pub fn weight(&self) -> u32 {
        (self.v1.len() + 2 * self.v2.len()) as u32
    }

    /// Per-vertex values for the first `n` vertices.
    pub fn values(&self, n: usize) -> Vec<u8> {
        (0..n).map(|v| self.value(v)).collect()
    }

    /// Compact rendering such as `02120` for the first `n` vertices.
    pub fn render(&self, n: usize) -> String {
        self.values(n).iter().map(|d| char::from(b'0' + d)).collect()
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V1={} V2={}", self.v1, self.v2)
    }
}

/// A minimum dominating set strictly contained in a minimum total
/// dominating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NestedPairWitness {
    pub dominating: VertexSet,
    pub total: VertexSet,
}

fn require_isolate_free(g: &Graph) -> Result<()> {
    match g.isolated_vertices().first() {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// Union of open neighbourhoods of `s`.
fn open_cover(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter().fold(VertexSet::EMPTY, |acc, v| acc | g.nbrs(v))
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    g.vertices().is_subset(open_cover(g, s) | s)
}

pub fn is_total_dominating(g: &Graph, s: VertexSet) -> bool {
    g.vertices().is_subset(open_cover(g, s))
}

/// Checks both TRD conditions. The graph must not have isolated vertices.
pub fn is_trd_function(g: &Graph, f: &Labeling) -> Result<bool> {
    require_isolate_free(g)?;
    Ok(trd_valid(g, f))
}

fn trd_valid(g: &Graph, f: &Labeling) -> bool {
    let all = g.vertices();
    if !f.positive().is_subset(all) {
        return false;
    }
    let zeros = all - f.positive();
    let seen_by_two = open_cover(g, f.v2);
    if !zeros.is_subset(seen_by_two) {
        return false;
    }
    let pos = f.positive();
    pos.iter().all(|v| g.nbrs(v).intersects(pos))
}

// ---------------------------------------------------------------------------
// dominating and total dominating sets

/// Branches on the undominated vertex with the fewest candidate dominators.
/// Calls `found` for every set of exactly `budget` additional vertices that
/// completes `chosen`; returning `true` from `found` stops the search.
fn dom_search(
    g: &Graph,
    total: bool,
    chosen: VertexSet,
    covered: VertexSet,
    budget: usize,
    found: &mut dyn FnMut(VertexSet) -> bool,
) -> bool {
    let missing = g.vertices() - covered;
    if missing.is_empty() {
        return found(chosen);
    }
    if budget == 0 {
        return false;
    }
    let reach = |v: usize| if total { g.nbrs(v) } else { g.nbrs(v).with(v) };
    let max_cover = if total { g.max_degree() } else { g.max_degree() + 1 };
    if missing.len() > budget * max_cover {
        return false;
    }
    let pick = missing
        .iter()
        .min_by_key(|&v| (reach(v) - chosen).len())
        .expect("missing is non-empty");
    for c in reach(pick) - chosen {
        if dom_search(g, total, chosen.with(c), covered | reach(c), budget - 1, found) {
            return true;
        }
    }
    false
}

fn min_dom(g: &Graph, total: bool) -> VertexSet {
    for k in 0..=g.order() {
        let mut best = None;
        dom_search(g, total, VertexSet::EMPTY, VertexSet::EMPTY, k, &mut |s| {
            best = Some(s);
            true
        });
        if let Some(s) = best {
            return s;
        }
    }
    unreachable!("the whole vertex set dominates an isolate-free graph")
}

fn all_min_dom(g: &Graph, total: bool) -> Vec<VertexSet> {
    let k = min_dom(g, total).len();
    let mut sets = BTreeSet::new();
    dom_search(g, total, VertexSet::EMPTY, VertexSet::EMPTY, k, &mut |s| {
        if s.len() == k {
            sets.insert(s);
        }
        false
    });
    sets.into_iter().collect()
}

/// A minimum dominating set.
pub fn min_dominating_set(g: &Graph) -> VertexSet {
    min_dom(g, false)
}

/// A minimum total dominating set.
pub fn min_total_dominating_set(g: &Graph) -> Result<VertexSet> {
    require_isolate_free(g)?;
    Ok(min_dom(g, true))
}

/// γ(G).
pub fn gamma(g: &Graph) -> u32 {
    min_dominating_set(g).len() as u32
}

/// γ_t(G); the graph must not have isolated vertices.
pub fn gamma_t(g: &Graph) -> Result<u32> {
    Ok(min_total_dominating_set(g)?.len() as u32)
}

/// Every γ(G)-set, in increasing bitmask order.
pub fn minimum_dominating_sets(g: &Graph) -> Vec<VertexSet> {
    all_min_dom(g, false)
}

/// Every γ_t(G)-set, in increasing bitmask order.
pub fn minimum_total_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    require_isolate_free(g)?;
    Ok(all_min_dom(g, true))
}

// ---------------------------------------------------------------------------
// total Roman domination

/// Next bitmask with the same popcount (Gosper's hack), restricted to `n` bits.
fn next_combination(x: u64, n: usize) -> Option<u64> {
    if x == 0 {
        return None;
    }
    let c = x & x.wrapping_neg();
    let r = x.checked_add(c)?;
    let next = (((r ^ x) >> 2) / c) | r;
    if n < 64 && next >> n != 0 {
        None
    } else {
        Some(next)
    }
}

/// Iterates over all `k`-subsets of `{0, .., n-1}`.
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let first = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else if k == 64 {
        Some(u64::MAX)
    } else {
        Some((1u64 << k) - 1)
    };
    let mut cur = first;
    std::iter::from_fn(move || {
        let x = cur?;
        cur = if k == 0 { None } else { next_combination(x, n) };
        Some(VertexSet(x))
    })
}

/// Iterates over all `k`-subsets of `pool`.
fn subsets_within(pool: VertexSet, k: usize) -> impl Iterator<Item = VertexSet> {
    let members: Vec<usize> = pool.iter().collect();
    subsets_of_size(members.len(), k).map(move |idx| idx.iter().map(|i| members[i]).collect())
}

/// The part of a TRD-function determined by its set of 2-vertices.
struct Forced {
    /// Vertices that must be labelled 1 (outside `N[S]`).
    ones: VertexSet,
    /// Vertices of `N(S) - S`, free to take 0 or 1.
    free: VertexSet,
    /// Positive vertices still lacking a positive neighbour.
    lonely: VertexSet,
    weight: u32,
}

fn forced(g: &Graph, twos: VertexSet) -> Forced {
    let seen = open_cover(g, twos);
    let ones = g.vertices() - seen - twos;
    let pos = ones | twos;
    let lonely = pos.iter().filter(|&v| !g.nbrs(v).intersects(pos)).collect();
    Forced {
        ones,
        free: seen - twos,
        lonely,
        weight: 2 * twos.len() as u32 + ones.len() as u32,
    }
}

/// Smallest subset of `free` meeting the neighbourhood of every vertex in
/// `lonely`, using at most `budget` vertices.
fn min_hitting(g: &Graph, lonely: VertexSet, free: VertexSet, budget: usize) -> Option<VertexSet> {
    fn rec(g: &Graph, lonely: VertexSet, free: VertexSet, budget: usize) -> Option<VertexSet> {
        if lonely.is_empty() {
            return Some(VertexSet::EMPTY);
        }
        if budget == 0 {
            return None;
        }
        let pick = lonely
            .iter()
            .min_by_key(|&v| (g.nbrs(v) & free).len())
            .expect("non-empty");
        for c in g.nbrs(pick) & free {
            if let Some(rest) = rec(g, lonely - g.nbrs(c), free.without(c), budget - 1) {
                return Some(rest.with(c));
            }
        }
        None
    }
    (0..=budget).find_map(|b| rec(g, lonely, free, b))
}

/// Minimum-weight TRD-function with weight strictly below `limit`, if any.
fn trd_below(g: &Graph, limit: u32) -> Option<Labeling> {
    let n = g.order();
    let mut best: Option<Labeling> = None;
    let mut bound = limit;
    let mut k = 0;
    while 2 * (k as u32) < bound && k <= n {
        for twos in subsets_of_size(n, k) {
            let fz = forced(g, twos);
            if fz.weight >= bound {
                continue;
            }
            let budget = (bound - fz.weight - 1) as usize;
            if let Some(extra) = min_hitting(g, fz.lonely, fz.free, budget) {
                bound = fz.weight + extra.len() as u32;
                best = Some(Labeling {
                    v1: fz.ones | extra,
                    v2: twos,
                });
            }
        }
        k += 1;
    }
    best
}

/// A γ_tR(G)-function.
pub fn optimal_trd_function(g: &Graph) -> Result<Labeling> {
    require_isolate_free(g)?;
    let all_ones = Labeling {
        v1: g.vertices(),
        v2: VertexSet::EMPTY,
    };
    Ok(trd_below(g, g.order() as u32).unwrap_or(all_ones))
}

/// γ_tR(G); the graph must not have isolated vertices.
pub fn gamma_tr(g: &Graph) -> Result<u32> {
    Ok(optimal_trd_function(g)?.weight())
}

/// Whether γ_tR(G) <= `bound`, without computing the exact value when it
/// is larger.
pub fn gamma_tr_at_most(g: &Graph, bound: u32) -> Result<bool> {
    require_isolate_free(g)?;
    if bound as usize >= g.order() {
        return Ok(true);
    }
    Ok(trd_below(g, bound + 1).is_some())
}

/// Every γ_tR(G)-function exactly once, ordered by (2-set, 1-set).
pub fn optimal_trd_functions(g: &Graph) -> Result<Vec<Labeling>> {
    let opt = gamma_tr(g)?;
    let n = g.order();
    let mut out = Vec::new();
    for k in 0..=(opt as usize / 2).min(n) {
        for twos in subsets_of_size(n, k) {
            let fz = forced(g, twos);
            if fz.weight > opt {
                continue;
            }
            let extra = (opt - fz.weight) as usize;
            for add in subsets_within(fz.free, extra) {
                let covered = add.iter().fold(VertexSet::EMPTY, |acc, c| acc | g.nbrs(c));
                if fz.lonely.is_subset(covered) {
                    out.push(Labeling {
                        v1: fz.ones | add,
                        v2: twos,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Searches for a γ(G)-set `S` and a γ_t(G)-set `T` with `S ⊊ T`.
/// The graph must be connected and have at least two vertices.
pub fn exists_nested_pair(g: &Graph) -> Result<Option<NestedPairWitness>> {
    require_isolate_free(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let gt = gamma_t(g)? as usize;
    let gd = gamma(g) as usize;
    if gd >= gt {
        return Ok(None);
    }
    for s in minimum_dominating_sets(g) {
        for extra in subsets_within(g.vertices() - s, gt - gd) {
            if is_total_dominating(g, s | extra) {
                return Ok(Some(NestedPairWitness {
                    dominating: s,
                    total: s | extra,
                }));
            }
        }
    }
    Ok(None)
}
