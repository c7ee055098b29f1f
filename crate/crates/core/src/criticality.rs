//! Edge addition and edge removal classification.
//!
//! For addition a non-edge `e` is critical when the invariant of `G + e` is
//! smaller than that of `G`, supercritical when it drops by at least two,
//! and stable otherwise. For removal an edge is critical when the invariant
//! of `G - e` is larger, supercritical when it grows by at least two.
//! Removing an edge incident with a degree-1 vertex gives an infinite value
//! for γ_t and γ_tR. γ is defined for every graph, so its removal values
//! are always computed exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use dashmap::DashMap;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Edge, Graph};
use crate::solvers::{gamma, gamma_t, gamma_tr, gamma_tr_at_most, optimal_trd_functions, Labeling};
use crate::value::DomValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    Domination,
    TotalDomination,
    TotalRoman,
}

impl Invariant {
    /// Short name used on the command line: `g`, `gt` or `gtr`.
    pub fn short_name(self) -> &'static str {
        match self {
            Invariant::Domination => "g",
            Invariant::TotalDomination => "gt",
            Invariant::TotalRoman => "gtr",
        }
    }

    fn needs_isolate_free(self) -> bool {
        self != Invariant::Domination
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Invariant::Domination => "DOMINATION",
            Invariant::TotalDomination => "TOTAL_DOMINATION",
            Invariant::TotalRoman => "TOTAL_ROMAN",
        })
    }
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "g" | "gamma" | "domination" => Ok(Invariant::Domination),
            "gt" | "gamma_t" | "total_domination" => Ok(Invariant::TotalDomination),
            "gtr" | "gamma_tr" | "total_roman" => Ok(Invariant::TotalRoman),
            _ => Err(Error::InvalidParameter(format!("unknown invariant `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Addition,
    Removal,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Addition => "ADDITION",
            Mode::Removal => "REMOVAL",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "add" | "addition" => Ok(Mode::Addition),
            "remove" | "removal" => Ok(Mode::Removal),
            _ => Err(Error::InvalidParameter(format!("unknown mode `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeVerdict {
    Stable,
    Critical,
    Supercritical,
}

impl EdgeVerdict {
    /// True for both critical and supercritical edges.
    pub fn is_critical(self) -> bool {
        self != EdgeVerdict::Stable
    }
}

impl fmt::Display for EdgeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeVerdict::Stable => "STABLE",
            EdgeVerdict::Critical => "CRITICAL",
            EdgeVerdict::Supercritical => "SUPERCRITICAL",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeClass {
    pub edge: Edge,
    pub before: DomValue,
    pub after: DomValue,
    pub verdict: EdgeVerdict,
}

impl EdgeClass {
    fn new(mode: Mode, edge: Edge, before: u32, after: DomValue) -> Self {
        // positive when the edge operation moves the value in the critical direction
        let gain = match (mode, after) {
            (Mode::Removal, DomValue::Infinite) => i64::MAX,
            (Mode::Addition, DomValue::Infinite) => unreachable!("adding an edge keeps values finite"),
            (Mode::Addition, DomValue::Finite(a)) => before as i64 - a as i64,
            (Mode::Removal, DomValue::Finite(a)) => a as i64 - before as i64,
        };
        let verdict = match gain {
            g if g >= 2 => EdgeVerdict::Supercritical,
            1 => EdgeVerdict::Critical,
            _ => EdgeVerdict::Stable,
        };
        EdgeClass {
            edge,
            before: DomValue::Finite(before),
            after,
            verdict,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphVerdict {
    EdgeCritical,
    EdgeSupercritical,
    EdgeStable,
    Mixed,
    /// No edge to classify: the graph is complete (addition) or edgeless
    /// (removal).
    Vacuous,
}

impl GraphVerdict {
    /// Label used in reports; removal verdicts are prefixed `ER_`.
    pub fn label(self, mode: Mode) -> &'static str {
        match (self, mode) {
            (GraphVerdict::EdgeCritical, Mode::Addition) => "EDGE_CRITICAL",
            (GraphVerdict::EdgeSupercritical, Mode::Addition) => "EDGE_SUPERCRITICAL",
            (GraphVerdict::EdgeStable, Mode::Addition) => "EDGE_STABLE",
            (GraphVerdict::EdgeCritical, Mode::Removal) => "ER_CRITICAL",
            (GraphVerdict::EdgeSupercritical, Mode::Removal) => "ER_SUPERCRITICAL",
            (GraphVerdict::EdgeStable, Mode::Removal) => "ER_STABLE",
            (GraphVerdict::Mixed, _) => "MIXED",
            (GraphVerdict::Vacuous, _) => "VACUOUS",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphClass {
    pub mode: Mode,
    pub invariant: Invariant,
    pub verdict: GraphVerdict,
    pub k: u32,
    pub per_edge: Vec<EdgeClass>,
}

impl GraphClass {
    /// Every edge critical (supercritical graphs included). Never true
    /// for a vacuous classification.
    pub fn is_critical(&self) -> bool {
        matches!(self.verdict, GraphVerdict::EdgeCritical | GraphVerdict::EdgeSupercritical)
    }

    pub fn is_supercritical(&self) -> bool {
        self.verdict == GraphVerdict::EdgeSupercritical
    }

    /// Every edge stable; a vacuous classification counts as stable.
    pub fn is_stable(&self) -> bool {
        matches!(self.verdict, GraphVerdict::EdgeStable | GraphVerdict::Vacuous)
    }
}

fn aggregate(per_edge: &[EdgeClass]) -> GraphVerdict {
    if per_edge.is_empty() {
        GraphVerdict::Vacuous
    } else if per_edge.iter().all(|c| c.verdict == EdgeVerdict::Supercritical) {
        GraphVerdict::EdgeSupercritical
    } else if per_edge.iter().all(|c| c.verdict.is_critical()) {
        GraphVerdict::EdgeCritical
    } else if per_edge.iter().all(|c| c.verdict == EdgeVerdict::Stable) {
        GraphVerdict::EdgeStable
    } else {
        GraphVerdict::Mixed
    }
}

/// Edges with both endpoints of degree at least 2.
pub fn pendant_free_edges(g: &Graph) -> Vec<Edge> {
    g.edges()
        .into_iter()
        .filter(|e| g.deg(e.u()) >= 2 && g.deg(e.v()) >= 2)
        .collect()
}

fn is_pendant(g: &Graph, e: Edge) -> bool {
    g.deg(e.u()) == 1 || g.deg(e.v()) == 1
}

/// Evaluates invariants, optionally memoizing values per isomorphism class.
#[derive(Debug, Default)]
pub struct Evaluator {
    cache: Option<DashMap<(CanonicalForm, Invariant), u32>>,
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// An evaluator that caches every computed value under the canonical
    /// form of the graph.
    pub fn cached() -> Self {
        Evaluator {
            cache: Some(DashMap::new()),
        }
    }

    fn compute(g: &Graph, inv: Invariant) -> Result<u32> {
        match inv {
            Invariant::Domination => Ok(gamma(g)),
            Invariant::TotalDomination => gamma_t(g),
            Invariant::TotalRoman => gamma_tr(g),
        }
    }

    pub fn value(&self, g: &Graph, inv: Invariant) -> Result<u32> {
        let Some(cache) = &self.cache else {
            return Self::compute(g, inv);
        };
        let key = (canonical_form(g), inv);
        if let Some(v) = cache.get(&key) {
            return Ok(*v);
        }
        let v = Self::compute(g, inv)?;
        cache.insert(key, v);
        Ok(v)
    }

    /// Whether the invariant of `g` is at most `bound`.
    pub fn at_most(&self, g: &Graph, inv: Invariant, bound: u32) -> Result<bool> {
        if inv == Invariant::TotalRoman && self.cache.is_none() {
            return gamma_tr_at_most(g, bound);
        }
        Ok(self.value(g, inv)? <= bound)
    }

    fn check_input(g: &Graph, inv: Invariant) -> Result<()> {
        if inv.needs_isolate_free() {
            if let Some(v) = g.isolated_vertices().first() {
                return Err(Error::IsolatedVertex(v));
            }
        }
        Ok(())
    }

    /// Value after removing `e`, with the pendant-edge convention.
    fn removal_value(&self, g: &Graph, e: Edge, inv: Invariant) -> Result<DomValue> {
        if inv.needs_isolate_free() && is_pendant(g, e) {
            return Ok(DomValue::Infinite);
        }
        Ok(DomValue::Finite(self.value(&g.remove_edge(e)?, inv)?))
    }

    pub fn classify_added_edge(&self, g: &Graph, e: Edge, inv: Invariant) -> Result<EdgeClass> {
        Self::check_input(g, inv)?;
        let h = g.add_edge(e)?;
        let before = self.value(g, inv)?;
        Ok(EdgeClass::new(Mode::Addition, e, before, self.value(&h, inv)?.into()))
    }

    pub fn classify_removed_edge(&self, g: &Graph, e: Edge, inv: Invariant) -> Result<EdgeClass> {
        Self::check_input(g, inv)?;
        if !g.contains_edge(e) {
            return Err(Error::EdgeAbsent(e));
        }
        let before = self.value(g, inv)?;
        Ok(EdgeClass::new(Mode::Removal, e, before, self.removal_value(g, e, inv)?))
    }

    pub fn classify_graph(&self, g: &Graph, mode: Mode, inv: Invariant) -> Result<GraphClass> {
        Self::check_input(g, inv)?;
        let k = self.value(g, inv)?;
        let edges = match mode {
            Mode::Addition => g.non_edges(),
            Mode::Removal => g.edges(),
        };
        let per_edge = edges
            .par_iter()
            .map(|&e| {
                let after = match mode {
                    Mode::Addition => DomValue::Finite(self.value(&g.add_edge(e)?, inv)?),
                    Mode::Removal => self.removal_value(g, e, inv)?,
                };
                Ok(EdgeClass::new(mode, e, k, after))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GraphClass {
            mode,
            invariant: inv,
            verdict: aggregate(&per_edge),
            k,
            per_edge,
        })
    }

    /// Whether every edge (removal) or non-edge (addition) changes the
    /// invariant by at least `step` in the critical direction, stopping at
    /// the first edge that does not. Addition requires at least one
    /// non-edge. Returns the invariant value alongside.
    pub fn all_edges_shift(&self, g: &Graph, mode: Mode, inv: Invariant, step: u32) -> Result<(u32, bool)> {
        Self::check_input(g, inv)?;
        let k = self.value(g, inv)?;
        let ok = match mode {
            Mode::Addition => {
                let non_edges = g.non_edges();
                if non_edges.is_empty() || k < step {
                    false
                } else {
                    let mut ok = true;
                    for e in non_edges {
                        if !self.at_most(&g.add_edge(e)?, inv, k - step)? {
                            ok = false;
                            break;
                        }
                    }
                    ok
                }
            }
            Mode::Removal => {
                let mut ok = true;
                for e in g.edges() {
                    if inv.needs_isolate_free() && is_pendant(g, e) {
                        continue;
                    }
                    if self.at_most(&g.remove_edge(e)?, inv, k + step - 1)? {
                        ok = false;
                        break;
                    }
                }
                ok
            }
        };
        Ok((k, ok))
    }

    /// `Some(k)` when `g` is k-edge-critical (addition) or k-ER-critical
    /// (removal).
    pub fn critical_value(&self, g: &Graph, mode: Mode, inv: Invariant) -> Result<Option<u32>> {
        let (k, ok) = self.all_edges_shift(g, mode, inv, 1)?;
        Ok(ok.then_some(k))
    }

    /// `Some(k)` when `g` is k-edge-supercritical (addition) or
    /// k-ER-supercritical (removal).
    pub fn supercritical_value(&self, g: &Graph, mode: Mode, inv: Invariant) -> Result<Option<u32>> {
        let (k, ok) = self.all_edges_shift(g, mode, inv, 2)?;
        Ok(ok.then_some(k))
    }

    /// `Some(k)` when every edge (removal) or non-edge (addition) leaves
    /// the value `k` unchanged; a complete graph is stable under addition.
    pub fn stable_value(&self, g: &Graph, mode: Mode, inv: Invariant) -> Result<Option<u32>> {
        Self::check_input(g, inv)?;
        let k = self.value(g, inv)?;
        let edges = match mode {
            Mode::Addition => g.non_edges(),
            Mode::Removal => g.edges(),
        };
        for e in edges {
            let same = match mode {
                Mode::Addition => self.value(&g.add_edge(e)?, inv)? == k,
                Mode::Removal => self.removal_value(g, e, inv)? == DomValue::Finite(k),
            };
            if !same {
                return Ok(None);
            }
        }
        Ok(Some(k))
    }
}

pub fn classify_added_edge(g: &Graph, e: Edge, inv: Invariant) -> Result<EdgeClass> {
    Evaluator::new().classify_added_edge(g, e, inv)
}

pub fn classify_removed_edge(g: &Graph, e: Edge, inv: Invariant) -> Result<EdgeClass> {
    Evaluator::new().classify_removed_edge(g, e, inv)
}

pub fn classify_graph(g: &Graph, mode: Mode, inv: Invariant) -> Result<GraphClass> {
    Evaluator::new().classify_graph(g, mode, inv)
}

/// An unordered pair of labels, stored smaller first.
pub type LabelPair = (u8, u8);

fn pair_of(f: &Labeling, e: Edge) -> LabelPair {
    let (a, b) = (f.value(e.u()), f.value(e.v()));
    (a.min(b), a.max(b))
}

/// Pairs allowed on a critical added edge in every optimal function of `G + uv`.
pub const ADDED_EDGE_PAIRS: [LabelPair; 4] = [(2, 2), (1, 2), (0, 2), (1, 1)];
/// Pairs allowed on a removal-critical edge in every optimal function of `G`.
pub const REMOVAL_EDGE_PAIRS: [LabelPair; 4] = [(0, 2), (1, 2), (2, 2), (1, 1)];
/// At least one optimal function realises one of these on a supercritical edge.
pub const SUPERCRITICAL_PAIRS: [LabelPair; 3] = [(2, 2), (0, 2), (1, 1)];

/// Label pairs observed on an edge across all optimal TRD-functions of the
/// relevant graph (`G + uv` for addition, `G` for removal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintReport {
    pub edge: Edge,
    pub mode: Mode,
    pub edge_class: EdgeClass,
    pub functions: usize,
    pub pairs: BTreeMap<LabelPair, usize>,
    /// Every observed pair lies in the allowed set for the mode.
    pub allowed_pairs_hold: bool,
    /// For an added edge between two degree-1 vertices of `G`: some
    /// optimal function labels both ends 1.
    pub both_ones_exists: Option<bool>,
    /// For a supercritical edge: some optimal function realises one of
    /// [`SUPERCRITICAL_PAIRS`].
    pub supercritical_pair_exists: Option<bool>,
}

impl ConstraintReport {
    pub fn holds(&self) -> bool {
        self.allowed_pairs_hold
            && self.both_ones_exists != Some(false)
            && self.supercritical_pair_exists != Some(false)
    }
}

/// Checks the label constraints on a TRD-critical added edge, or on a
/// TRD-ER-critical removed edge, against the full set of optimal functions.
pub fn optimal_function_constraints(g: &Graph, e: Edge, mode: Mode) -> Result<ConstraintReport> {
    let ev = Evaluator::new();
    let (edge_class, host, allowed) = match mode {
        Mode::Addition => {
            let c = ev.classify_added_edge(g, e, Invariant::TotalRoman)?;
            (c, g.add_edge(e)?, &ADDED_EDGE_PAIRS)
        }
        Mode::Removal => (
            ev.classify_removed_edge(g, e, Invariant::TotalRoman)?,
            g.clone(),
            &REMOVAL_EDGE_PAIRS,
        ),
    };
    if !edge_class.verdict.is_critical() {
        return Err(Error::Precondition(format!("edge {e} is not critical for {mode}")));
    }
    let functions = optimal_trd_functions(&host)?;
    let mut pairs = BTreeMap::new();
    for f in &functions {
        *pairs.entry(pair_of(f, e)).or_insert(0) += 1;
    }
    let both_ones_exists = (mode == Mode::Addition && g.deg(e.u()) == 1 && g.deg(e.v()) == 1)
        .then(|| pairs.contains_key(&(1, 1)));
    let supercritical_pair_exists = (edge_class.verdict == EdgeVerdict::Supercritical)
        .then(|| SUPERCRITICAL_PAIRS.iter().any(|p| pairs.contains_key(p)));
    Ok(ConstraintReport {
        edge: e,
        mode,
        edge_class,
        functions: functions.len(),
        allowed_pairs_hold: pairs.keys().all(|p| allowed.contains(p)),
        pairs,
        both_ones_exists,
        supercritical_pair_exists,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, corona, cycle, double_star, g_r, path, star};

    fn edge(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    fn k3k3() -> Graph {
        complete(3).unwrap().disjoint_union(&complete(3).unwrap()).unwrap()
    }

    #[test]
    fn pendant_free_edge_sets() {
        assert!(pendant_free_edges(&star(4).unwrap()).is_empty());
        assert_eq!(pendant_free_edges(&cycle(5).unwrap()).len(), 5);
        let ds = double_star(2, 2).unwrap();
        assert_eq!(pendant_free_edges(&ds), vec![edge(0, 1)]);
    }

    #[test]
    fn added_edge_examples() {
        let c = classify_added_edge(&k3k3(), edge(0, 3), Invariant::TotalRoman).unwrap();
        assert_eq!((c.before, c.after, c.verdict), (6.into(), 4.into(), EdgeVerdict::Supercritical));
        // a diagonal makes a vertex universal
        let c = classify_added_edge(&cycle(4).unwrap(), edge(0, 2), Invariant::TotalRoman).unwrap();
        assert_eq!((c.before, c.after, c.verdict), (4.into(), 3.into(), EdgeVerdict::Critical));
        let c = classify_added_edge(&path(4).unwrap(), edge(0, 3), Invariant::TotalRoman).unwrap();
        assert_eq!((c.before, c.after, c.verdict), (4.into(), 4.into(), EdgeVerdict::Stable));
        // u_1 = 5 and w_1 = 7 in G_2
        let c = classify_added_edge(&g_r(2).unwrap(), edge(5, 7), Invariant::TotalRoman).unwrap();
        assert_eq!((c.before, c.after, c.verdict), (6.into(), 4.into(), EdgeVerdict::Supercritical));
        assert!(matches!(
            classify_added_edge(&cycle(4).unwrap(), edge(0, 1), Invariant::TotalRoman),
            Err(Error::EdgePresent(_))
        ));
    }

    #[test]
    fn removed_edge_examples() {
        let c = classify_removed_edge(&star(3).unwrap(), edge(0, 1), Invariant::TotalRoman).unwrap();
        assert_eq!((c.after, c.verdict), (DomValue::Infinite, EdgeVerdict::Supercritical));
        let c = classify_removed_edge(&double_star(2, 2).unwrap(), edge(0, 1), Invariant::TotalRoman).unwrap();
        assert_eq!((c.before, c.after, c.verdict), (4.into(), 6.into(), EdgeVerdict::Supercritical));
        let c = classify_removed_edge(&cycle(4).unwrap(), edge(0, 1), Invariant::TotalRoman).unwrap();
        assert_eq!((c.before, c.after, c.verdict), (4.into(), 4.into(), EdgeVerdict::Stable));
        // γ has no infinity convention
        let c = classify_removed_edge(&star(3).unwrap(), edge(0, 1), Invariant::Domination).unwrap();
        assert_eq!((c.before, c.after), (1.into(), 2.into()));
        assert!(matches!(
            classify_removed_edge(&cycle(4).unwrap(), edge(0, 2), Invariant::TotalRoman),
            Err(Error::EdgeAbsent(_))
        ));
    }

    #[test]
    fn graph_examples() {
        let c = classify_graph(&corona(&complete(4).unwrap()).unwrap(), Mode::Addition, Invariant::TotalRoman).unwrap();
        assert_eq!((c.verdict, c.k), (GraphVerdict::EdgeSupercritical, 8));
        let c = classify_graph(&k3k3(), Mode::Addition, Invariant::TotalRoman).unwrap();
        assert_eq!((c.verdict, c.k), (GraphVerdict::EdgeSupercritical, 6));
        let c = classify_graph(&complete(6).unwrap(), Mode::Addition, Invariant::TotalRoman).unwrap();
        assert_eq!(c.verdict, GraphVerdict::Vacuous);
        assert!(c.is_stable() && !c.is_critical());
        let h = g_r(2).unwrap().disjoint_union(&complete(3).unwrap()).unwrap();
        let c = classify_graph(&h, Mode::Addition, Invariant::TotalRoman).unwrap();
        assert_eq!((c.verdict, c.k), (GraphVerdict::EdgeCritical, 9));
        let c = classify_graph(&star(3).unwrap(), Mode::Removal, Invariant::TotalRoman).unwrap();
        assert_eq!(c.verdict.label(c.mode), "ER_SUPERCRITICAL");
        let c = classify_graph(&cycle(4).unwrap(), Mode::Removal, Invariant::TotalRoman).unwrap();
        assert_eq!(c.verdict, GraphVerdict::EdgeStable);
        let c = classify_graph(&path(5).unwrap(), Mode::Addition, Invariant::TotalRoman).unwrap();
        assert_eq!(c.verdict, GraphVerdict::Mixed);
        let isolated = Graph::empty(3).unwrap();
        assert!(matches!(
            classify_graph(&isolated, Mode::Addition, Invariant::TotalRoman),
            Err(Error::IsolatedVertex(0))
        ));
        assert_eq!(
            classify_graph(&isolated, Mode::Addition, Invariant::Domination).unwrap().k,
            3
        );
    }

    #[test]
    fn early_exit_predicates_agree_with_full_classification() {
        let cached = Evaluator::cached();
        let plain = Evaluator::new();
        for g in crate::graph::enumerate_graphs(6, crate::graph::EnumFilter::isolate_free()).unwrap() {
            for mode in [Mode::Addition, Mode::Removal] {
                for inv in [Invariant::Domination, Invariant::TotalDomination, Invariant::TotalRoman] {
                    let full = classify_graph(&g, mode, inv).unwrap();
                    for ev in [&cached, &plain] {
                        assert_eq!(ev.critical_value(&g, mode, inv).unwrap().is_some(), full.is_critical());
                        assert_eq!(ev.supercritical_value(&g, mode, inv).unwrap().is_some(), full.is_supercritical());
                        assert_eq!(ev.stable_value(&g, mode, inv).unwrap().is_some(), full.is_stable(), "{g:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn constraint_reports() {
        let g = k3k3();
        let r = optimal_function_constraints(&g, edge(0, 3), Mode::Addition).unwrap();
        assert!(r.holds());
        assert_eq!(r.supercritical_pair_exists, Some(true));
        let r = optimal_function_constraints(&star(3).unwrap(), edge(0, 1), Mode::Removal).unwrap();
        assert!(r.holds());
        assert!(optimal_function_constraints(&cycle(4).unwrap(), edge(0, 2), Mode::Addition)
            .unwrap()
            .holds());
        // two pendant vertices of P_4 joined give C_4
        let r = optimal_function_constraints(&path(4).unwrap(), edge(0, 3), Mode::Addition);
        assert!(matches!(r, Err(Error::Precondition(_))));
        // two pendant vertices of cor(K_4)
        let c4 = corona(&complete(4).unwrap()).unwrap();
        let r = optimal_function_constraints(&c4, edge(4, 5), Mode::Addition).unwrap();
        assert_eq!(r.both_ones_exists, Some(true));
        assert!(r.holds());
    }

    #[test]
    fn parse_names() {
        assert_eq!("gtr".parse::<Invariant>().unwrap(), Invariant::TotalRoman);
        assert_eq!("remove".parse::<Mode>().unwrap(), Mode::Removal);
        assert!("x".parse::<Invariant>().is_err());
    }
}
