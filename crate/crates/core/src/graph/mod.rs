//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex, so every vertex set
//! fits in a single machine word. Graphs are immutable once built: edge
//! toggles return a modified copy.

mod canon;
mod enumerate;
mod graph6;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use enumerate::{enumerate_graphs, enumerate_trees, EnumFilter, GraphSource, MAX_BUILTIN_N};
pub use graph6::{parse_graph6, read_graph6_stream, to_graph6};

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use crate::error::{Error, Result};
use crate::value::DomValue;

pub const MAX_VERTICES: usize = 64;

/// A set of vertices of a graph with at most 64 vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        vs.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest vertex in the set.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An undirected edge, normalized so that `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::Loop(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A path from a vertex of degree at least 3 to a pendant vertex whose
/// internal vertices all have degree 2. `vertices[0]` is the origin and the
/// last entry is the pendant vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endpath {
    pub vertices: Vec<usize>,
}

impl Endpath {
    pub fn origin(&self) -> usize {
        self.vertices[0]
    }

    pub fn pendant(&self) -> usize {
        *self.vertices.last().expect("endpath has at least two vertices")
    }

    /// Number of edges on the path.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", to_graph6(self))
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if a == b {
                return Err(Error::Loop(a));
            }
            g.set_edge(a, b);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, which must be symmetric and
    /// loop-free.
    pub(crate) fn from_rows(n: usize, rows: &[u64]) -> Self {
        let mut adj = [0; MAX_VERTICES];
        adj[..n].copy_from_slice(&rows[..n]);
        Graph { n, adj }
    }

    pub(crate) fn set_edge(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    pub(crate) fn clear_edge(&mut self, a: usize, b: usize) {
        self.adj[a] &= !(1 << b);
        self.adj[b] &= !(1 << a);
    }

    /// Appends a new isolated vertex and returns its index.
    pub(crate) fn push_vertex(&mut self) -> Result<usize> {
        if self.n == MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n + 1));
        }
        self.n += 1;
        Ok(self.n - 1)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    /// Open neighbourhood without bounds checking beyond a debug assertion.
    #[inline]
    pub(crate) fn nbrs(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet(self.adj[v])
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.nbrs(v))
    }

    pub fn closed_neighbors(&self, v: usize) -> Result<VertexSet> {
        Ok(self.neighbors(v)?.with(v))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in (self.nbrs(u) - VertexSet::full(u + 1)).iter() {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Edges of the complement, in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let all = self.vertices();
        let mut out = Vec::new();
        for u in 0..self.n {
            let missing = all - self.nbrs(u) - VertexSet::full(u + 1);
            for v in missing.iter() {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v] = (all - self.nbrs(v)).without(v).0;
        }
        g
    }

    /// Copy of the graph with `e` inserted. Fails if `e` is already an edge.
    pub fn add_edge(&self, e: Edge) -> Result<Graph> {
        self.check_vertex(e.v)?;
        if self.contains_edge(e) {
            return Err(Error::EdgePresent(e));
        }
        let mut g = self.clone();
        g.set_edge(e.u, e.v);
        Ok(g)
    }

    /// Copy of the graph with `e` deleted. Fails if `e` is not an edge.
    pub fn remove_edge(&self, e: Edge) -> Result<Graph> {
        self.check_vertex(e.v)?;
        if !self.contains_edge(e) {
            return Err(Error::EdgeAbsent(e));
        }
        let mut g = self.clone();
        g.clear_edge(e.u, e.v);
        Ok(g)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    pub(crate) fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degree sequence in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.deg(v)).collect()
    }

    /// δ(G); 0 for the graph on zero vertices.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).min().unwrap_or(0)
    }

    /// Δ(G); 0 for the graph on zero vertices.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).max().unwrap_or(0)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn has_isolated(&self) -> bool {
        self.rows().contains(&0)
    }

    /// Vertices of degree exactly one.
    pub fn pendant_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.deg(v) == 1).collect()
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.deg(v) + 1 == self.n).collect()
    }

    /// Breadth-first distances from `s`; `None` marks unreachable vertices.
    fn bfs(&self, s: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut frontier = VertexSet::singleton(s);
        let mut seen = frontier;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next | self.nbrs(v);
            }
            next = next - seen;
            for v in next {
                dist[v] = Some(d);
            }
            seen = seen | next;
            frontier = next;
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<DomValue> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs(u)[v].map_or(DomValue::Infinite, DomValue::Finite))
    }

    /// Largest distance between two vertices; infinite when disconnected.
    /// The one-vertex graph has diameter 0.
    pub fn diameter(&self) -> DomValue {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.bfs(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return DomValue::Infinite,
                }
            }
        }
        DomValue::Finite(best)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = self.vertices();
        while let Some(s) = left.first() {
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next | self.nbrs(v);
                }
                frontier = next - comp;
                comp = comp | frontier;
            }
            left = left - comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    /// True when every component is a complete graph.
    pub fn is_union_of_cliques(&self) -> bool {
        self.components().into_iter().all(|c| {
            c.iter().all(|v| self.nbrs(v).with(v) == c)
        })
    }

    /// Subgraph induced by `keep`, relabelled in increasing vertex order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let verts: Vec<usize> = keep.iter().collect();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph {
            n: verts.len(),
            adj: [0; MAX_VERTICES],
        };
        for (i, &v) in verts.iter().enumerate() {
            g.adj[i] = (self.nbrs(v) & keep).iter().fold(0, |acc, w| acc | 1 << pos[w]);
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for graph of order {}",
                perm.len(),
                self.n
            )));
        }
        let image: VertexSet = perm.iter().copied().collect();
        if image != self.vertices() {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for v in 0..self.n {
            g.adj[perm[v]] = self.nbrs(v).iter().fold(0, |acc, w| acc | 1 << perm[w]);
        }
        Ok(g)
    }

    /// Side-by-side union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut g = self.clone();
        g.n = n;
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    /// All endpaths, ordered by pendant vertex.
    pub fn endpaths(&self) -> Vec<Endpath> {
        let mut out = Vec::new();
        for p in self.pendant_vertices() {
            let mut path = vec![p];
            let mut prev = p;
            let mut cur = self.nbrs(p).first().expect("pendant vertex has a neighbour");
            loop {
                path.push(cur);
                match self.deg(cur) {
                    2 => {
                        let next = self.nbrs(cur).without(prev).first().expect("degree 2");
                        prev = cur;
                        cur = next;
                    }
                    d if d >= 3 => {
                        path.reverse();
                        out.push(Endpath { vertices: path });
                        break;
                    }
                    // reached another pendant vertex: the component is a path
                    _ => break,
                }
            }
        }
        out
    }

    /// True when two distinct endpaths share their origin.
    pub fn has_adjacent_endpaths(&self) -> bool {
        let mut origins = VertexSet::EMPTY;
        for p in self.endpaths() {
            if origins.contains(p.origin()) {
                return true;
            }
            origins = origins.with(p.origin());
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, corona, cycle, path, star};

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn edge_normalizes_and_rejects_loops() {
        assert_eq!(e(3, 1).endpoints(), (1, 3));
        assert_eq!(Edge::new(2, 2), Err(Error::Loop(2)));
    }

    #[test]
    fn add_and_remove_edge() {
        let p3 = path(3).unwrap();
        let c3 = p3.add_edge(e(0, 2)).unwrap();
        assert_eq!(c3, complete(3).unwrap());
        assert_eq!(p3.edge_count(), 2, "input unchanged");
        assert!(matches!(p3.add_edge(e(0, 1)), Err(Error::EdgePresent(_))));
        assert!(matches!(p3.remove_edge(e(0, 2)), Err(Error::EdgeAbsent(_))));
        assert!(matches!(
            p3.add_edge(e(0, 7)),
            Err(Error::VertexOutOfRange { vertex: 7, n: 3 })
        ));

        let c4 = cycle(4).unwrap();
        let p4 = c4.remove_edge(e(0, 3)).unwrap();
        assert_eq!(p4, path(4).unwrap());
    }

    #[test]
    fn complement_basics() {
        let k3 = complete(3).unwrap();
        assert_eq!(k3.complement(), Graph::empty(3).unwrap());
        let p4 = path(4).unwrap();
        assert_eq!(p4.complement().complement(), p4);
        let c5 = cycle(5).unwrap();
        assert!(is_isomorphic(&c5.complement(), &c5));
    }

    #[test]
    fn degree_queries() {
        let k4 = complete(4).unwrap();
        assert!((0..4).all(|v| k4.degree(v).unwrap() == 3));
        assert!(matches!(k4.degree(4), Err(Error::VertexOutOfRange { .. })));
        let cor = corona(&k4).unwrap();
        assert_eq!(cor.min_degree(), 1);
        assert_eq!(cor.max_degree(), 4);
        let g = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert!(g.has_isolated());
        assert_eq!(g.isolated_vertices(), VertexSet::singleton(0));
    }

    #[test]
    fn distances_and_diameter() {
        let p4 = path(4).unwrap();
        assert_eq!(p4.diameter(), DomValue::Finite(3));
        assert_eq!(p4.distance(0, 2).unwrap(), DomValue::Finite(2));
        let two_triangles = complete(3).unwrap().disjoint_union(&complete(3).unwrap()).unwrap();
        assert_eq!(two_triangles.diameter(), DomValue::Infinite);
        assert_eq!(two_triangles.distance(0, 4).unwrap(), DomValue::Infinite);
        assert_eq!(Graph::empty(1).unwrap().diameter(), DomValue::Finite(0));
    }

    #[test]
    fn components_counts() {
        let k3 = complete(3).unwrap();
        let g = k3.disjoint_union(&k3).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
        assert_eq!(cycle(5).unwrap().components().len(), 1);
        let k2 = complete(2).unwrap();
        let three = k2.disjoint_union(&k2).unwrap().disjoint_union(&k2).unwrap();
        assert_eq!(three.components().len(), 3);
    }

    #[test]
    fn endpaths_of_small_graphs() {
        // spider with three legs of length 2
        let spider = crate::families::subdivided_star(3).unwrap();
        let eps = spider.endpaths();
        assert_eq!(eps.len(), 3);
        assert!(eps.iter().all(|p| p.length() == 2 && p.origin() == 0));
        assert!(spider.has_adjacent_endpaths());

        assert!(cycle(5).unwrap().endpaths().is_empty());

        let cor = corona(&complete(4).unwrap()).unwrap();
        let eps = cor.endpaths();
        assert_eq!(eps.len(), 4);
        assert!(eps.iter().all(|p| p.length() == 1));
        assert!(!cor.has_adjacent_endpaths());

        // a bare path has no vertex of degree >= 3
        assert!(path(5).unwrap().endpaths().is_empty());
        assert!(star(3).unwrap().has_adjacent_endpaths());
    }

    #[test]
    fn induced_and_permute() {
        let c5 = cycle(5).unwrap();
        let p = c5.induced(VertexSet::from_vertices([0, 1, 2]));
        assert_eq!(p, path(3).unwrap());
        let perm = [4, 3, 2, 1, 0];
        let q = c5.permute(&perm).unwrap();
        assert!(is_isomorphic(&q, &c5));
        assert!(c5.permute(&[0, 0, 1, 2, 3]).is_err());
    }

    #[test]
    fn vertex_set_ops() {
        let s = VertexSet::from_vertices([1, 3, 5]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!((s - VertexSet::singleton(3)).to_string(), "{1,5}");
        assert!(VertexSet::singleton(3).is_subset(s));
        assert_eq!(VertexSet::full(64).len(), 64);
    }
}
