//! Exhaustive checks of known results over small graphs.
//!
//! Each registered check pairs a statement with a scope (an enumeration
//! sweep or an explicit list of instances) and a per-graph predicate. A
//! report lists every graph on which the predicate failed, as graph6.

mod checks;
mod search;

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{to_graph6, EnumFilter, Graph, GraphSource, MAX_BUILTIN_N};

pub use checks::registry;
pub use search::{search_counterexample, Checkpoint, ConjectureId, SearchOptions, SearchReport};

/// Per-graph predicate: `Ok(None)` on success, `Ok(Some(detail))` on a
/// violation.
pub type Predicate = fn(&Graph) -> Result<Option<String>>;

#[derive(Clone, Copy)]
pub enum Scope {
    /// Every graph from the source with order in `min_n..=max_n`
    /// accepted by `filter`.
    Sweep {
        filter: EnumFilter,
        min_n: usize,
        max_n: usize,
    },
    /// A fixed list of constructed graphs; ignores the source and order caps.
    Instances {
        describe: &'static str,
        build: fn() -> Result<Vec<Graph>>,
    },
}

impl fmt::Debug for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::Sweep { filter, min_n, max_n } => {
                write!(f, "Sweep({filter:?}, {min_n}..={max_n})")
            }
            Scope::Instances { describe, .. } => write!(f, "Instances({describe})"),
        }
    }
}

fn describe_filter(filter: &EnumFilter) -> String {
    let mut parts = Vec::new();
    if filter.trees_only {
        parts.push("trees".to_string());
    } else if filter.connected {
        parts.push("connected".to_string());
    } else if filter.disconnected {
        parts.push("disconnected".to_string());
    }
    if filter.no_isolated && !filter.connected {
        parts.push("isolate-free".to_string());
    }
    if filter.min_degree > 0 {
        parts.push(format!("min-degree>={}", filter.min_degree));
    }
    if parts.is_empty() {
        "all graphs".to_string()
    } else {
        parts.join(" ")
    }
}

#[derive(Debug, Clone, Copy)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub scope: Scope,
    pub predicate: Predicate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub id: String,
    pub scope: String,
    pub graphs_checked: usize,
    /// Sorted by graph6.
    pub failures: Vec<Failure>,
    pub wall_time: Duration,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl TheoremCheck {
    /// Runs the check. For a sweep, `max_n` replaces the default upper
    /// order; instance checks ignore both `max_n` and `source`.
    pub fn run(&self, max_n: Option<usize>, source: &GraphSource) -> Result<TheoremReport> {
        let start = Instant::now();
        let (scope, graphs) = match self.scope {
            Scope::Sweep { filter, min_n, max_n: default_max } => {
                let hi = max_n.unwrap_or(default_max);
                let origin = if source.is_builtin() { "builtin" } else { "external" };
                let scope = format!("{} n={min_n}..={hi} ({origin})", describe_filter(&filter));
                (scope, source.graphs(min_n, hi, filter)?)
            }
            Scope::Instances { describe, build } => (describe.to_string(), build()?),
        };
        let mut failures: Vec<Failure> = graphs
            .par_iter()
            .filter_map(|g| {
                let detail = match (self.predicate)(g) {
                    Ok(None) => return None,
                    Ok(Some(d)) => d,
                    Err(e) => format!("error: {e}"),
                };
                Some(Failure {
                    graph6: to_graph6(g),
                    detail,
                })
            })
            .collect();
        failures.sort_by(|a, b| (&a.graph6, &a.detail).cmp(&(&b.graph6, &b.detail)));
        Ok(TheoremReport {
            id: self.id.to_string(),
            scope,
            graphs_checked: graphs.len(),
            failures,
            wall_time: start.elapsed(),
        })
    }
}

pub fn find_check(id: &str) -> Result<&'static TheoremCheck> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

pub fn run_check(id: &str, max_n: Option<usize>, source: &GraphSource) -> Result<TheoremReport> {
    find_check(id)?.run(max_n, source)
}

/// Runs every registered check at its default scope, with sweep orders
/// capped at `max_n`. Errors are reported as failures of the check.
pub fn run_all(max_n: usize) -> Vec<TheoremReport> {
    run_all_from(max_n, &GraphSource::Builtin)
}

/// [`run_all`] drawing sweep graphs from `source`.
pub fn run_all_from(max_n: usize, source: &GraphSource) -> Vec<TheoremReport> {
    let cap = if source.is_builtin() { max_n.min(MAX_BUILTIN_N) } else { max_n };
    registry()
        .iter()
        .map(|check| {
            let limit = match check.scope {
                Scope::Sweep { max_n: default_max, .. } => Some(default_max.min(cap)),
                Scope::Instances { .. } => None,
            };
            check.run(limit, source).unwrap_or_else(|e| TheoremReport {
                id: check.id.to_string(),
                scope: format!("{:?}", check.scope),
                graphs_checked: 0,
                failures: vec![Failure {
                    graph6: String::new(),
                    detail: format!("error: {e}"),
                }],
                wall_time: Duration::ZERO,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique() {
        let ids: HashSet<_> = registry().iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), registry().len());
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(
            run_check("no-such-check", None, &GraphSource::Builtin),
            Err(Error::UnknownCheck(_))
        ));
    }

    #[test]
    fn run_all_small_passes() {
        let reports = run_all(5);
        assert_eq!(reports.len(), registry().len());
        for r in &reports {
            assert!(r.passed(), "{}: {:?}", r.id, r.failures);
        }
        let tr34 = reports.iter().find(|r| r.id == "tR=34").unwrap();
        assert!(tr34.graphs_checked > 0);
    }

    #[test]
    fn external_source_is_used() {
        let k4 = crate::families::complete(4).unwrap();
        let src = GraphSource::from_graphs(vec![k4]);
        let r = run_check("tR=3", Some(7), &src).unwrap();
        assert_eq!(r.graphs_checked, 1);
        assert!(r.passed());
    }

    #[test]
    fn failures_carry_graph6() {
        let check = TheoremCheck {
            id: "always-fails",
            statement: "",
            scope: Scope::Sweep {
                filter: EnumFilter::connected(),
                min_n: 3,
                max_n: 3,
            },
            predicate: |_| Ok(Some("nope".into())),
        };
        let r = check.run(None, &GraphSource::Builtin).unwrap();
        assert_eq!(r.graphs_checked, 2);
        let g6: Vec<_> = r.failures.iter().map(|f| f.graph6.as_str()).collect();
        assert_eq!(g6.len(), 2);
        assert!(g6.windows(2).all(|w| w[0] <= w[1]));
        assert!(g6.contains(&"Bw"));
    }
}
