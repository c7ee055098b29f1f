//! Isomorph-free enumeration of small graphs.
//!
//! Graphs on `n` vertices are produced from the representatives on `n - 1`
//! vertices by adding a vertex with every possible neighbourhood and
//! keeping one child per canonical form. Connected graphs are grown from
//! connected parents only (every connected graph has a non-cut vertex), and
//! trees from trees by attaching a leaf. Levels are cached per process.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use super::{canonical_form, CanonicalForm, Graph};
use crate::error::{Error, Result};

/// Largest order accepted by the built-in enumerator for general graphs.
pub const MAX_BUILTIN_N: usize = 10;
/// Largest order accepted for tree-only enumeration.
pub const MAX_TREE_N: usize = 20;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumFilter {
    pub connected: bool,
    pub disconnected: bool,
    pub min_degree: usize,
    pub no_isolated: bool,
    pub trees_only: bool,
}

impl EnumFilter {
    pub fn all() -> Self {
        Self::default()
    }

    pub fn connected() -> Self {
        EnumFilter {
            connected: true,
            ..Self::default()
        }
    }

    pub fn isolate_free() -> Self {
        EnumFilter {
            no_isolated: true,
            ..Self::default()
        }
    }

    /// Disconnected graphs without isolated vertices.
    pub fn disconnected_isolate_free() -> Self {
        EnumFilter {
            disconnected: true,
            no_isolated: true,
            ..Self::default()
        }
    }

    pub fn trees() -> Self {
        EnumFilter {
            trees_only: true,
            connected: true,
            ..Self::default()
        }
    }

    pub fn with_min_degree(mut self, d: usize) -> Self {
        self.min_degree = d;
        self
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected())
            && (!self.disconnected || !g.is_connected())
            && (!self.trees_only || g.is_tree())
            && (!self.no_isolated || !g.has_isolated())
            && g.min_degree() >= self.min_degree
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Class {
    All,
    Connected,
    Trees,
}

type LevelCache = Mutex<HashMap<(Class, usize), Arc<Vec<CanonicalForm>>>>;

fn cache() -> &'static LevelCache {
    static CACHE: OnceLock<LevelCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn level(class: Class, n: usize) -> Arc<Vec<CanonicalForm>> {
    if let Some(l) = cache().lock().expect("cache poisoned").get(&(class, n)) {
        return Arc::clone(l);
    }
    let built = Arc::new(build_level(class, n));
    cache()
        .lock()
        .expect("cache poisoned")
        .insert((class, n), Arc::clone(&built));
    built
}

fn build_level(class: Class, n: usize) -> Vec<CanonicalForm> {
    if n == 0 {
        return if class == Class::All {
            vec![canonical_form(&Graph::empty(0).expect("order 0"))]
        } else {
            Vec::new()
        };
    }
    if n == 1 {
        return vec![canonical_form(&Graph::empty(1).expect("order 1"))];
    }
    let parents = level(class, n - 1);
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    for parent in parents.iter() {
        let base = parent.to_graph();
        let new_vertex = n - 1;
        let mut extend = |nbhd: u64| {
            let mut g = base.clone();
            g.push_vertex().expect("order below 64");
            for w in super::VertexSet(nbhd) {
                g.set_edge(w, new_vertex);
            }
            seen.insert(canonical_form(&g));
        };
        match class {
            Class::All => (0..1u64 << (n - 1)).for_each(&mut extend),
            Class::Connected => (1..1u64 << (n - 1)).for_each(&mut extend),
            Class::Trees => (0..n - 1).for_each(|v| extend(1 << v)),
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// One representative per isomorphism class of graphs of order `n`
/// satisfying `filter`, in canonical-form order.
pub fn enumerate_graphs(n: usize, filter: EnumFilter) -> Result<Vec<Graph>> {
    let class = if filter.trees_only {
        if n > MAX_TREE_N {
            return Err(Error::EnumerationTooLarge { n, max: MAX_TREE_N });
        }
        Class::Trees
    } else {
        if n > MAX_BUILTIN_N {
            return Err(Error::EnumerationTooLarge {
                n,
                max: MAX_BUILTIN_N,
            });
        }
        if filter.connected {
            Class::Connected
        } else {
            Class::All
        }
    };
    Ok(level(class, n)
        .iter()
        .map(CanonicalForm::to_graph)
        .filter(|g| filter.accepts(g))
        .collect())
}

/// All trees of order `n` up to isomorphism.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    enumerate_graphs(n, EnumFilter::trees())
}

/// Where a sweep draws its graphs from.
#[derive(Debug, Clone, Default)]
pub enum GraphSource {
    /// Built-in isomorph-free enumeration.
    #[default]
    Builtin,
    /// An externally supplied list, e.g. read from a graph6 stream.
    Graphs(Arc<Vec<Graph>>),
}

impl GraphSource {
    pub fn from_graphs(gs: Vec<Graph>) -> Self {
        GraphSource::Graphs(Arc::new(gs))
    }

    pub fn is_builtin(&self) -> bool {
        matches!(self, GraphSource::Builtin)
    }

    /// Graphs with order in `min_n..=max_n` accepted by `filter`, ordered by
    /// order and then by canonical form (builtin) or input position.
    pub fn graphs(&self, min_n: usize, max_n: usize, filter: EnumFilter) -> Result<Vec<Graph>> {
        match self {
            GraphSource::Builtin => {
                let mut out = Vec::new();
                for n in min_n..=max_n {
                    out.extend(enumerate_graphs(n, filter)?);
                }
                Ok(out)
            }
            GraphSource::Graphs(gs) => Ok(gs
                .iter()
                .filter(|g| (min_n..=max_n).contains(&g.order()) && filter.accepts(g))
                .cloned()
                .collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Canonicalize every labelled graph on `n` vertices and count classes.
    fn brute_count(n: usize, filter: EnumFilter) -> usize {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut seen = HashSet::new();
        for mask in 0u64..1 << pairs.len() {
            let es: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Graph::from_edges(n, &es).unwrap();
            if filter.accepts(&g) {
                seen.insert(canonical_form(&g));
            }
        }
        seen.len()
    }

    #[test]
    fn connected_counts_match_brute_force() {
        for n in 1..=5 {
            assert_eq!(
                enumerate_graphs(n, EnumFilter::connected()).unwrap().len(),
                brute_count(n, EnumFilter::connected())
            );
        }
        assert_eq!(enumerate_graphs(4, EnumFilter::connected()).unwrap().len(), 6);
        assert_eq!(enumerate_graphs(5, EnumFilter::connected()).unwrap().len(), 21);
    }

    #[test]
    fn all_and_tree_counts_match_brute_force() {
        for n in 1..=5 {
            assert_eq!(
                enumerate_graphs(n, EnumFilter::all()).unwrap().len(),
                brute_count(n, EnumFilter::all())
            );
            assert_eq!(enumerate_trees(n).unwrap().len(), brute_count(n, EnumFilter::trees()));
        }
        assert_eq!(enumerate_trees(5).unwrap().len(), 3);
    }

    #[test]
    fn representatives_are_pairwise_non_isomorphic() {
        let gs = enumerate_graphs(6, EnumFilter::all()).unwrap();
        let certs: HashSet<_> = gs.iter().map(canonical_form).collect();
        assert_eq!(certs.len(), gs.len());
    }

    #[test]
    fn filters_apply() {
        let gs = enumerate_graphs(5, EnumFilter::isolate_free().with_min_degree(2)).unwrap();
        assert!(gs.iter().all(|g| g.min_degree() >= 2));
        // K_2 ∪ K_2 is the only disconnected isolate-free graph on 4 vertices
        let gs = enumerate_graphs(4, EnumFilter::disconnected_isolate_free()).unwrap();
        assert_eq!(gs.len(), 1);
        assert_eq!(gs[0].edge_count(), 2);
        assert!(matches!(
            enumerate_graphs(11, EnumFilter::all()),
            Err(Error::EnumerationTooLarge { n: 11, .. })
        ));
        assert!(enumerate_trees(12).is_ok());
    }

    #[test]
    fn external_source_is_filtered() {
        let k3 = crate::families::complete(3).unwrap();
        let e3 = Graph::empty(3).unwrap();
        let src = GraphSource::from_graphs(vec![k3.clone(), e3]);
        let got = src.graphs(1, 5, EnumFilter::connected()).unwrap();
        assert_eq!(got, vec![k3]);
    }
}
