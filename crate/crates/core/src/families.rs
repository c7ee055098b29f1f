//! Named graph families.
//!
//! Vertex numbering is fixed per constructor so that graph6 output is
//! reproducible:
//!
//! * `path(n)`: `0 - 1 - .. - n-1`; `cycle(n)` adds `n-1 - 0`.
//! * `star(k)`: centre `0`, leaves `1..=k`.
//! * `double_star(a, b)`: centres `0` and `1`, then the `a` leaves of `0`,
//!   then the `b` leaves of `1`.
//! * `subdivided_star(k)`: centre `0`, middle vertices `1..=k`, and the
//!   leaf hanging from middle vertex `i` is `k + i`.
//! * `corona(g)`: the vertices of `g`, then the pendant vertex of `v` at
//!   `n + v`.
//! * `family_g(k1, k2)`: the 4-cycle `0 1 2 3`, then the attached paths
//!   `P_2` as consecutive pairs (the first vertex of each pair is joined to
//!   the cycle), `k1` of them on `0` followed by `k2` on `1`.
//! * `family_h(a, b, r)`: centres `0` and `1`, the `r` subdivision vertices
//!   of the central edge in order from `0` to `1`, then the legs of length 2
//!   as (middle, leaf) pairs, `a` on `0` followed by `b` on `1`.
//! * `family_f(ks)`: centre `c = 0`, `u_i = i` for `1 <= i <= n`, then the
//!   pendant vertices `v_{i,1}, .., v_{i,k_i}` block by block.
//! * `g_r(r)`: `x = 0`, `y = 1`, `z = 2`, `u_0 = 3`, `w_0 = 4`, then
//!   `u_1..u_r` and `w_1..w_r`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_edges(n, edges)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs at least one vertex"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs at least three vertices"));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    build(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("complete graph needs at least one vertex"));
    }
    let edges: Vec<_> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    build(n, &edges)
}

/// The star `K_{1,k}` with `k >= 1` leaves.
pub fn star(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(invalid("star needs at least one leaf"));
    }
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    build(k + 1, &edges)
}

/// Two stars with `a` and `b` leaves whose centres are joined.
pub fn double_star(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(invalid("double star needs at least one leaf on each centre"));
    }
    let mut edges = vec![(0, 1)];
    edges.extend((0..a).map(|i| (0, 2 + i)));
    edges.extend((0..b).map(|i| (1, 2 + a + i)));
    build(2 + a + b, &edges)
}

/// `K_{1,k}` with every edge subdivided once, `k >= 3`.
pub fn subdivided_star(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(invalid("subdivided star needs k >= 3"));
    }
    let mut edges = Vec::with_capacity(2 * k);
    for i in 1..=k {
        edges.push((0, i));
        edges.push((i, k + i));
    }
    build(2 * k + 1, &edges)
}

/// Joins every vertex of `g` to a new pendant vertex.
pub fn corona(g: &Graph) -> Result<Graph> {
    let n = g.order();
    let mut h = g.disjoint_union(&Graph::empty(n)?)?;
    for v in 0..n {
        h.set_edge(v, n + v);
    }
    Ok(h)
}

/// The 4-cycle `v_1 v_2 v_3 v_4` with `k1` pendant paths `P_2` hung from
/// `v_1` and `k2` from `v_2`.
pub fn family_g(k1: usize, k2: usize) -> Result<Graph> {
    if k1 + k2 == 0 {
        return Err(invalid("family G needs k1 + k2 >= 1"));
    }
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
    for (i, anchor) in std::iter::repeat_n(0, k1).chain(std::iter::repeat_n(1, k2)).enumerate() {
        let a = 4 + 2 * i;
        edges.push((anchor, a));
        edges.push((a, a + 1));
    }
    build(4 + 2 * (k1 + k2), &edges)
}

/// A double star with `a` and `b` leaves, every pendant edge subdivided
/// once and the central edge subdivided `r` times.
pub fn family_h(a: usize, b: usize, r: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(invalid("family H needs a, b >= 1"));
    }
    let n = 2 + r + 2 * (a + b);
    let mut edges = Vec::with_capacity(n);
    let mut prev = 0;
    for s in 2..2 + r {
        edges.push((prev, s));
        prev = s;
    }
    edges.push((prev, 1));
    let legs = std::iter::repeat_n(0, a).chain(std::iter::repeat_n(1, b));
    for (i, centre) in legs.enumerate() {
        let m = 2 + r + 2 * i;
        edges.push((centre, m));
        edges.push((m, m + 1));
    }
    build(n, &edges)
}

/// A member of ℱ_n: the star `S_n` with `k_i` pendant vertices appended to
/// its `i`-th leaf. `ks` is sorted into non-increasing order first.
pub fn family_f(ks: &[usize]) -> Result<Graph> {
    let mut ks = ks.to_vec();
    ks.sort_unstable_by(|a, b| b.cmp(a));
    family_f_strict(&ks)
}

/// Like [`family_f`] but rejects `ks` that is not already non-increasing.
pub fn family_f_strict(ks: &[usize]) -> Result<Graph> {
    if ks.is_empty() {
        return Err(invalid("family F needs n >= 1"));
    }
    if ks.windows(2).any(|w| w[0] < w[1]) {
        return Err(invalid("family F parameters must be non-increasing"));
    }
    let n = ks.len();
    let order = 1 + n + ks.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(order);
    let mut next = n + 1;
    for (i, &k) in ks.iter().enumerate() {
        edges.push((0, i + 1));
        for _ in 0..k {
            edges.push((i + 1, next));
            next += 1;
        }
    }
    build(order, &edges)
}

/// The 6-γ_tR-edge-supercritical graph `G_r` on `5 + 2r` vertices, `r >= 2`.
pub fn g_r(r: usize) -> Result<Graph> {
    if r < 2 {
        return Err(invalid("G_r needs r >= 2"));
    }
    let (x, y, z, u0, w0) = (0, 1, 2, 3, 4);
    let u = |i: usize| 4 + i;
    let w = |i: usize| 4 + r + i;
    let mut edges = vec![(x, y), (y, z), (x, z), (u0, x), (w0, y)];
    for i in 1..=r {
        for j in 1..=r {
            if i < j {
                edges.push((u(i), u(j)));
                edges.push((w(i), w(j)));
            }
            if i != j {
                edges.push((u(i), w(j)));
            }
        }
        edges.extend([(z, u(i)), (z, w(i)), (y, u(i)), (u0, u(i)), (w0, w(i))]);
    }
    let mut edges: Vec<_> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    edges.sort_unstable();
    edges.dedup();
    build(5 + 2 * r, &edges)
}

pub fn disjoint_union(a: &Graph, b: &Graph) -> Result<Graph> {
    a.disjoint_union(b)
}

/// All parameter lists `ks` (non-increasing) for which `g` is isomorphic to
/// `family_f(ks)`, one per admissible choice of centre. Empty when `g` is
/// not in any ℱ_n. The graph must be connected.
pub fn family_f_representations(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut reps: Vec<Vec<usize>> = Vec::new();
    if !g.is_tree() || g.order() < 2 {
        return Ok(reps);
    }
    for c in 0..g.order() {
        let inner = g.nbrs(c);
        let outer = g.vertices() - inner.with(c);
        let ok = outer
            .iter()
            .all(|v| g.deg(v) == 1 && g.nbrs(v).is_subset(inner));
        if ok {
            let mut ks: Vec<usize> = inner.iter().map(|u| g.deg(u) - 1).collect();
            ks.sort_unstable_by(|a, b| b.cmp(a));
            if !reps.contains(&ks) {
                reps.push(ks);
            }
        }
    }
    reps.sort();
    Ok(reps)
}

/// Membership in ℱ = ∪ ℱ_n. When several centres are possible, prefers a
/// representation with no `k_i = 1`, then the longest, then the
/// lexicographically largest.
pub fn is_in_family_f(g: &Graph) -> Result<Option<Vec<usize>>> {
    let reps = family_f_representations(g)?;
    Ok(reps
        .into_iter()
        .max_by_key(|ks| (!ks.contains(&1), ks.len(), ks.clone())))
}

/// Membership in 𝒯: a non-trivial star, a double star, or a subdivided
/// star (of a star on at least three vertices) with zero or more pendant
/// edges added at non-leaf vertices. The graph must be connected.
pub fn is_in_family_t(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_tree() || g.order() < 2 {
        return Ok(false);
    }
    let internal: Vec<usize> = (0..g.order()).filter(|&v| g.deg(v) > 1).collect();
    match internal.len() {
        // K_2 or a star
        0 | 1 => return Ok(true),
        2 => return Ok(g.has_edge(internal[0], internal[1])),
        _ => {}
    }
    // subdivided star: a centre whose non-leaf neighbours are exactly the
    // other internal vertices, each of which has only leaves beyond it
    let internal_set: VertexSet = internal.iter().copied().collect();
    Ok(internal.iter().any(|&c| {
        let middles = g.nbrs(c) & internal_set;
        middles == internal_set.without(c)
            && middles.len() >= 2
            && middles
                .iter()
                .all(|m| (g.nbrs(m).without(c)).iter().all(|l| g.deg(l) == 1))
    }))
}

/// A parsed family description, e.g. `gr 2`, `f 3 3 0 0`,
/// `corona complete 4` or `union gr 2 + complete 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    DoubleStar(usize, usize),
    SubdividedStar(usize),
    Corona(Box<FamilySpec>),
    FamilyG(usize, usize),
    FamilyH(usize, usize, usize),
    FamilyF(Vec<usize>),
    GR(usize),
    Union(Vec<FamilySpec>),
}

impl FamilySpec {
    /// Builds the graph. With `strict`, ℱ parameters must already be
    /// non-increasing.
    pub fn build(&self, strict: bool) -> Result<Graph> {
        match self {
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::Star(k) => star(*k),
            FamilySpec::DoubleStar(a, b) => double_star(*a, *b),
            FamilySpec::SubdividedStar(k) => subdivided_star(*k),
            FamilySpec::Corona(inner) => corona(&inner.build(strict)?),
            FamilySpec::FamilyG(k1, k2) => family_g(*k1, *k2),
            FamilySpec::FamilyH(a, b, r) => family_h(*a, *b, *r),
            FamilySpec::FamilyF(ks) if strict => family_f_strict(ks),
            FamilySpec::FamilyF(ks) => family_f(ks),
            FamilySpec::GR(r) => g_r(*r),
            FamilySpec::Union(parts) => {
                let mut it = parts.iter();
                let first = it.next().ok_or_else(|| invalid("empty union"))?;
                it.try_fold(first.build(strict)?, |acc, p| acc.disjoint_union(&p.build(strict)?))
            }
        }
    }

    pub fn parse_tokens(tokens: &[&str]) -> Result<FamilySpec> {
        let parts: Vec<&[&str]> = tokens.split(|t| *t == "+").collect();
        if parts.len() > 1 || tokens.first() == Some(&"union") {
            let mut specs = Vec::new();
            for (i, p) in parts.iter().enumerate() {
                let p = if i == 0 && p.first() == Some(&"union") { &p[1..] } else { p };
                specs.push(Self::parse_single(p)?);
            }
            return Ok(FamilySpec::Union(specs));
        }
        Self::parse_single(tokens)
    }

    fn parse_single(tokens: &[&str]) -> Result<FamilySpec> {
        let (kind, args) = tokens.split_first().ok_or_else(|| invalid("empty family spec"))?;
        if *kind == "corona" || *kind == "cor" {
            return Ok(FamilySpec::Corona(Box::new(Self::parse_single(args)?)));
        }
        let nums: Vec<usize> = args
            .iter()
            .map(|a| a.parse::<usize>().map_err(|_| invalid(format!("`{a}` is not a non-negative integer"))))
            .collect::<Result<_>>()?;
        let want = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(invalid(format!("`{kind}` takes {k} parameter(s), got {}", nums.len())))
            }
        };
        Ok(match *kind {
            "path" | "p" => {
                want(1)?;
                FamilySpec::Path(nums[0])
            }
            "cycle" | "c" => {
                want(1)?;
                FamilySpec::Cycle(nums[0])
            }
            "complete" | "k" => {
                want(1)?;
                FamilySpec::Complete(nums[0])
            }
            "star" => {
                want(1)?;
                FamilySpec::Star(nums[0])
            }
            "double-star" | "doublestar" => {
                want(2)?;
                FamilySpec::DoubleStar(nums[0], nums[1])
            }
            "subdivided-star" | "spider" => {
                want(1)?;
                FamilySpec::SubdividedStar(nums[0])
            }
            "g" => {
                want(2)?;
                FamilySpec::FamilyG(nums[0], nums[1])
            }
            "h" => {
                want(3)?;
                FamilySpec::FamilyH(nums[0], nums[1], nums[2])
            }
            "f" => {
                if nums.is_empty() {
                    return Err(invalid("`f` needs at least one parameter"));
                }
                FamilySpec::FamilyF(nums)
            }
            "gr" => {
                want(1)?;
                FamilySpec::GR(nums[0])
            }
            other => return Err(invalid(format!("unknown family `{other}`"))),
        })
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        Self::parse_tokens(&tokens)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path {n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle {n}"),
            FamilySpec::Complete(n) => write!(f, "complete {n}"),
            FamilySpec::Star(k) => write!(f, "star {k}"),
            FamilySpec::DoubleStar(a, b) => write!(f, "double-star {a} {b}"),
            FamilySpec::SubdividedStar(k) => write!(f, "subdivided-star {k}"),
            FamilySpec::Corona(inner) => write!(f, "corona {inner}"),
            FamilySpec::FamilyG(a, b) => write!(f, "g {a} {b}"),
            FamilySpec::FamilyH(a, b, r) => write!(f, "h {a} {b} {r}"),
            FamilySpec::FamilyF(ks) => {
                f.write_str("f")?;
                for k in ks {
                    write!(f, " {k}")?;
                }
                Ok(())
            }
            FamilySpec::GR(r) => write!(f, "gr {r}"),
            FamilySpec::Union(parts) => {
                f.write_str("union")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" +")?;
                    }
                    write!(f, " {p}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;
    use crate::solvers::gamma_tr;
    use crate::value::DomValue;

    #[test]
    fn orders() {
        assert_eq!(star(3).unwrap().order(), 4);
        let ds = double_star(2, 2).unwrap();
        assert_eq!(ds.order(), 6);
        assert_eq!((ds.degree(0).unwrap(), ds.degree(1).unwrap()), (3, 3));
        assert!(ds.has_edge(0, 1));
        assert_eq!(subdivided_star(3).unwrap().order(), 7);
        assert_eq!(corona(&complete(4).unwrap()).unwrap().order(), 8);
        assert_eq!(corona(&complete(1).unwrap()).unwrap(), complete(2).unwrap());
        assert_eq!(family_g(1, 0).unwrap().order(), 6);
        assert_eq!(family_g(1, 1).unwrap().order(), 8);
        assert_eq!(family_h(1, 1, 0).unwrap().order(), 6);
        assert!(is_isomorphic(&family_h(1, 1, 0).unwrap(), &path(6).unwrap()));
        assert_eq!(family_h(2, 3, 4).unwrap().order(), 2 * 5 + 4 + 2);
        assert_eq!(family_f(&[3, 3, 0, 0]).unwrap().order(), 1 + 4 + 6);
        for r in 2..=6 {
            assert_eq!(g_r(r).unwrap().order(), 5 + 2 * r);
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(family_g(0, 0).is_err());
        assert!(g_r(1).is_err());
        assert!(subdivided_star(2).is_err());
        assert!(cycle(2).is_err());
        assert!(star(0).is_err());
        assert!(double_star(0, 3).is_err());
        assert!(family_h(0, 1, 0).is_err());
        assert!(family_f(&[]).is_err());
        assert!(family_f_strict(&[1, 2]).is_err());
        assert_eq!(family_f(&[1, 2]).unwrap(), family_f_strict(&[2, 1]).unwrap());
        let big = complete(40).unwrap();
        assert!(matches!(disjoint_union(&big, &big), Err(Error::TooManyVertices(80))));
    }

    #[test]
    fn g_r_structure() {
        let r = 3;
        let g = g_r(r).unwrap();
        let (u, w) = (|i: usize| 4 + i, |i: usize| 4 + r + i);
        for i in 1..=r {
            assert!(g.has_edge(2, u(i)) && g.has_edge(2, w(i)));
            assert!(g.has_edge(1, u(i)) && !g.has_edge(1, w(i)));
            for j in 1..=r {
                assert_eq!(g.has_edge(u(i), w(j)), i != j);
            }
        }
        assert_eq!(g.diameter(), DomValue::Finite(3));
        assert_eq!(g_r(2).unwrap().diameter(), DomValue::Finite(3));
        // 5 fixed edges, 2 cliques, r(r-1) cross edges, 5 per index
        assert_eq!(g.edge_count(), 5 + r * (r - 1) + r * (r - 1) + 5 * r);
    }

    #[test]
    fn order_n_families_have_gamma_tr_n() {
        for g in [
            cycle(5).unwrap(),
            corona(&complete(4).unwrap()).unwrap(),
            subdivided_star(3).unwrap(),
            family_g(1, 0).unwrap(),
            family_h(1, 1, 0).unwrap(),
        ] {
            assert_eq!(gamma_tr(&g).unwrap() as usize, g.order(), "{g:?}");
        }
    }

    #[test]
    fn family_f_recognition() {
        assert_eq!(is_in_family_f(&star(4).unwrap()).unwrap(), Some(vec![0, 0, 0, 0]));
        assert_eq!(is_in_family_f(&cycle(5).unwrap()).unwrap(), None);
        assert_eq!(is_in_family_f(&path(6).unwrap()).unwrap(), None);
        let g = family_f(&[3, 3, 0, 0]).unwrap();
        assert_eq!(is_in_family_f(&g).unwrap(), Some(vec![3, 3, 0, 0]));
        // ℱ_1 with k_1 = 1 is P_3, which is also the star S_2
        let reps = family_f_representations(&family_f(&[1]).unwrap()).unwrap();
        assert_eq!(reps, vec![vec![0, 0], vec![1]]);
        let k3 = complete(3).unwrap();
        assert!(is_in_family_f(&k3.disjoint_union(&k3).unwrap()).is_err());
    }

    #[test]
    fn family_t_recognition() {
        assert!(is_in_family_t(&double_star(2, 3).unwrap()).unwrap());
        assert!(is_in_family_t(&star(5).unwrap()).unwrap());
        assert!(is_in_family_t(&subdivided_star(4).unwrap()).unwrap());
        assert!(is_in_family_t(&path(5).unwrap()).unwrap());
        assert!(!is_in_family_t(&path(6).unwrap()).unwrap());
        assert!(!is_in_family_t(&cycle(4).unwrap()).unwrap());
        assert!(is_in_family_t(&family_f(&[2, 2, 0]).unwrap()).unwrap());
    }

    #[test]
    fn spec_parsing() {
        let s: FamilySpec = "gr 2".parse().unwrap();
        assert_eq!(s, FamilySpec::GR(2));
        assert_eq!(s.build(false).unwrap(), g_r(2).unwrap());
        let s: FamilySpec = "union gr 2 + complete 3".parse().unwrap();
        assert_eq!(s.build(false).unwrap().order(), 12);
        assert_eq!(s.to_string().parse::<FamilySpec>().unwrap(), s);
        let s: FamilySpec = "corona complete 4".parse().unwrap();
        assert_eq!(s.build(false).unwrap().order(), 8);
        let s: FamilySpec = "f 0 2".parse().unwrap();
        assert!(s.build(true).is_err());
        assert!(s.build(false).is_ok());
        assert!("hexagon 3".parse::<FamilySpec>().is_err());
        assert!("gr".parse::<FamilySpec>().is_err());
        assert!("gr x".parse::<FamilySpec>().is_err());
    }
}
