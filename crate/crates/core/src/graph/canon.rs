//! Canonical labelling by individualization and refinement.
//!
//! The vertex partition is refined to an equitable partition by neighbour
//! counts, then the first non-singleton cell is individualized vertex by
//! vertex. Every discrete leaf yields a relabelled adjacency matrix; the
//! lexicographically largest one is the canonical form. Leaves that produce
//! identical matrices reveal automorphisms, which prune sibling branches
//! lying in the same orbit of the pointwise stabilizer of the current path.

use std::fmt;

use super::{Graph, VertexSet};

/// Label-invariant certificate: the adjacency rows of the canonically
/// relabelled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Box<[u64]>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Certificate as bytes: the order followed by each row in little-endian.
    pub fn certificate(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(1 + 8 * self.n);
        out.push(self.n as u8);
        for r in self.rows.iter() {
            out.extend_from_slice(&r.to_le_bytes());
        }
        out
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        Graph::from_rows(self.n, &self.rows)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", super::to_graph6(&self.to_graph()))
    }
}

type Cells = Vec<Vec<usize>>;

/// Splits cells by neighbour counts into each splitter cell until stable.
fn refine(g: &Graph, cells: &mut Cells) {
    let mut w = 0;
    while w < cells.len() {
        let splitter: VertexSet = cells[w].iter().copied().collect();
        let mut split_any = false;
        let mut next: Cells = Vec::with_capacity(cells.len() + 1);
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(usize, usize)> = cell
                .iter()
                .map(|&v| ((g.nbrs(v) & splitter).len(), v))
                .collect();
            keyed.sort_by_key(|&(k, _)| k);
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
            if next.last().map(Vec::len) != Some(cell.len()) {
                split_any = true;
            }
        }
        if split_any {
            *cells = next;
            w = 0;
        } else {
            w += 1;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    /// Rows, labelling and individualization path of the best leaf so far.
    best: Option<(Vec<u64>, Vec<usize>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Relabelled rows for a discrete partition, plus the labelling used.
    fn leaf(&self, cells: &Cells) -> (Vec<u64>, Vec<usize>) {
        let n = self.g.order();
        let mut label = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            label[c[0]] = i;
        }
        let mut rows = vec![0u64; n];
        for v in 0..n {
            rows[label[v]] = self.g.nbrs(v).iter().fold(0, |acc, w| acc | 1 << label[w]);
        }
        (rows, label)
    }

    /// Orbit ids under the group generated by the known automorphisms that
    /// fix every vertex of `fixed`.
    fn orbit_ids(&self, fixed: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in &self.automorphisms {
            if fixed.iter().all(|&v| a[v] == v) {
                for v in 0..n {
                    let (x, y) = (find(&mut parent, v), find(&mut parent, a[v]));
                    if x != y {
                        parent[x.max(y)] = x.min(y);
                    }
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    /// Explores the subtree below `path`. Returns `Some(k)` when an
    /// automorphism shows that everything below depth `k` on the current
    /// path is equivalent to an explored subtree.
    fn run(&mut self, mut cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        refine(self.g, &mut cells);
        let Some(t) = cells.iter().position(|c| c.len() > 1) else {
            return self.visit_leaf(&cells, path);
        };
        let depth = path.len();
        let target = cells[t].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &target {
            if !explored.is_empty() {
                let orbit = self.orbit_ids(path);
                if explored.iter().any(|&u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            let mut child: Cells = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(vec![v]);
            child.push(target.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[t + 1..]);
            path.push(v);
            let jump = self.run(child, path);
            path.pop();
            explored.push(v);
            if let Some(k) = jump {
                if k < depth {
                    return Some(k);
                }
            }
        }
        None
    }

    fn visit_leaf(&mut self, cells: &Cells, path: &[usize]) -> Option<usize> {
        let (rows, label) = self.leaf(cells);
        match &self.best {
            Some((best_rows, best_label, best_path)) if *best_rows == rows => {
                // maps each vertex to the vertex holding the same label in the best leaf
                let n = label.len();
                let mut inv = vec![0; n];
                for v in 0..n {
                    inv[best_label[v]] = v;
                }
                let aut: Vec<usize> = (0..n).map(|v| inv[label[v]]).collect();
                let common = path.iter().zip(best_path).take_while(|(a, b)| a == b).count();
                if aut.iter().enumerate().any(|(i, &x)| i != x) {
                    self.automorphisms.push(aut);
                }
                Some(common)
            }
            Some((best_rows, _, _)) if *best_rows > rows => None,
            _ => {
                self.best = Some((rows, label, path.to_vec()));
                None
            }
        }
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    if n == 0 {
        return CanonicalForm {
            n,
            rows: Box::new([]),
        };
    }
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    search.run(vec![(0..n).collect()], &mut Vec::new());
    let (rows, _, _) = search.best.expect("search visits at least one leaf");
    CanonicalForm {
        n,
        rows: rows.into_boxed_slice(),
    }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && {
            let mut da = a.degrees();
            let mut db = b.degrees();
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, star};

    /// Factorial oracle: try every bijection.
    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        fn rec(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let i = map.len();
            if i == a.order() {
                return true;
            }
            for j in 0..b.order() {
                if used[j] {
                    continue;
                }
                if (0..i).all(|k| a.has_edge(k, i) == b.has_edge(map[k], j)) {
                    used[j] = true;
                    map.push(j);
                    if rec(a, b, map, used) {
                        return true;
                    }
                    map.pop();
                    used[j] = false;
                }
            }
            false
        }
        a.order() == b.order() && rec(a, b, &mut Vec::new(), &mut vec![false; b.order()])
    }

    fn all_labeled(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..1 << pairs.len())
            .map(|mask| {
                let es: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                Graph::from_edges(n, &es).unwrap()
            })
            .collect()
    }

    #[test]
    fn relabelled_paths_agree() {
        let p4 = path(4).unwrap();
        let q = p4.permute(&[2, 0, 3, 1]).unwrap();
        assert_ne!(p4, q);
        assert_eq!(canonical_form(&p4), canonical_form(&q));
        assert_ne!(canonical_form(&p4), canonical_form(&star(3).unwrap()));
    }

    #[test]
    fn agrees_with_permutation_brute_force() {
        for n in 1..=5 {
            let gs = all_labeled(n);
            // one representative per certificate, then compare each pair
            let mut reps: Vec<Graph> = Vec::new();
            for g in &gs {
                let c = canonical_form(g);
                assert_eq!(c.to_graph().edge_count(), g.edge_count());
                assert!(brute_isomorphic(g, &c.to_graph()));
                if !reps.iter().any(|r| canonical_form(r) == c) {
                    reps.push(g.clone());
                }
            }
            for (i, a) in reps.iter().enumerate() {
                for b in &reps[i + 1..] {
                    assert!(!brute_isomorphic(a, b), "{a:?} ~ {b:?} but certificates differ");
                }
            }
            let expected = [1, 2, 4, 11, 34][n - 1];
            assert_eq!(reps.len(), expected, "classes on {n} vertices");
        }
    }

    #[test]
    fn symmetric_graphs_terminate() {
        for n in [10, 20, 40, 64] {
            let k = complete(n).unwrap();
            assert_eq!(canonical_form(&k).to_graph(), k);
            let e = Graph::empty(n).unwrap();
            assert_eq!(canonical_form(&e).to_graph(), e);
        }
        let c = cycle(30).unwrap();
        let shifted = c.permute(&(0..30).map(|i| (i * 7) % 30).collect::<Vec<_>>()).unwrap();
        assert_eq!(canonical_form(&c), canonical_form(&shifted));
    }

    #[test]
    fn certificate_bytes() {
        let c = canonical_form(&complete(2).unwrap());
        assert_eq!(c.certificate(), vec![2, 2, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0]);
    }
}
