//! The registered checks.
//!
//! Predicates only call into the solver, classifier and family modules.
//! Sweeps default to order 7 (8 where the statement is cheap to test,
//! 10 for tree-only sweeps).

use std::sync::OnceLock;

use super::{Predicate, Scope, TheoremCheck};
use crate::criticality::{
    optimal_function_constraints, pendant_free_edges, EdgeVerdict, Evaluator, Invariant, Mode,
};
use crate::error::Result;
use crate::families::{
    complete, corona, cycle, family_f_representations, family_g, family_h, g_r, is_in_family_t,
    path, subdivided_star,
};
use crate::graph::{enumerate_graphs, is_isomorphic, EnumFilter, Graph};
use crate::solvers::{
    exists_nested_pair, gamma, gamma_t, gamma_tr, is_trd_function, optimal_trd_functions,
};
use crate::value::DomValue;

use Invariant::{Domination as D, TotalDomination as TD, TotalRoman as TR};
use Mode::{Addition, Removal};

type Outcome = Result<Option<String>>;

fn expect(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    Ok((!ok).then(detail))
}

fn ev() -> Evaluator {
    Evaluator::new()
}

fn sweep(filter: EnumFilter, min_n: usize, max_n: usize) -> Scope {
    Scope::Sweep { filter, min_n, max_n }
}

fn isolate_free(max_n: usize) -> Scope {
    sweep(EnumFilter::isolate_free(), 2, max_n)
}

fn connected(min_n: usize, max_n: usize) -> Scope {
    sweep(EnumFilter::connected(), min_n, max_n)
}

fn trees(max_n: usize) -> Scope {
    sweep(EnumFilter::trees(), 2, max_n)
}

fn check(id: &'static str, statement: &'static str, scope: Scope, predicate: Predicate) -> TheoremCheck {
    TheoremCheck {
        id,
        statement,
        scope,
        predicate,
    }
}

fn parts(g: &Graph) -> Vec<Graph> {
    g.components().into_iter().map(|c| g.induced(c)).collect()
}

fn is_isomorphic_to_any(g: &Graph, family: &[Graph]) -> bool {
    family.iter().any(|h| is_isomorphic(g, h))
}

/// A union of at least two complete graphs on two or more vertices each.
fn is_union_of_nontrivial_cliques(g: &Graph) -> bool {
    g.components().len() >= 2 && g.is_union_of_cliques() && !g.has_isolated()
}

/// K_2 ∪ K_n with n ≥ 3.
fn is_k2_union_kn(g: &Graph) -> bool {
    let comps = g.components();
    let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    g.is_union_of_cliques() && sizes.len() == 2 && sizes[0] == 2 && sizes[1] >= 3
}

/// K_1,n with n ≥ 1, or a double star whose centres both have degree ≥ 3.
fn is_star_or_wide_double_star(g: &Graph) -> bool {
    if !g.is_tree() || g.order() < 2 {
        return false;
    }
    let internal: Vec<usize> = (0..g.order()).filter(|&v| g.deg(v) > 1).collect();
    match internal[..] {
        [] | [_] => true,
        [a, b] => g.has_edge(a, b) && g.deg(a) >= 3 && g.deg(b) >= 3,
        _ => false,
    }
}

fn in_er_critical_family(g: &Graph) -> Result<bool> {
    Ok(family_f_representations(g)?.iter().any(|ks| !ks.contains(&1)))
}

/// Connected graphs of order `n` with γ_tR = n: paths, cycles, coronas,
/// subdivided stars and the families 𝒢 and ℋ.
fn full_weight_family(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    if n >= 2 {
        out.push(path(n)?);
    }
    if n >= 3 {
        out.push(cycle(n)?);
    }
    if n % 2 == 0 {
        for h in enumerate_graphs(n / 2, EnumFilter::connected())? {
            out.push(corona(&h)?);
        }
    }
    if n % 2 == 1 && n >= 7 {
        out.push(subdivided_star((n - 1) / 2)?);
    }
    out.extend(family_g_members(n)?);
    out.extend(family_h_members(n)?.into_iter().map(|(_, _, g)| g));
    Ok(out)
}

fn family_g_members(n: usize) -> Result<Vec<Graph>> {
    if n < 6 || n % 2 == 1 {
        return Ok(Vec::new());
    }
    let m = (n - 4) / 2;
    (0..=m).map(|k1| family_g(k1, m - k1)).collect()
}

/// Members of ℋ of order `n`, tagged with the subdivision count r and
/// whether the double star is P4 (a = b = 1, so the member is a path).
fn family_h_members(n: usize) -> Result<Vec<(usize, bool, Graph)>> {
    let mut out = Vec::new();
    for a in 1..n {
        for b in a..n {
            let used = 2 * (a + b) + 2;
            if used <= n {
                let r = n - used;
                out.push((r, a + b == 2, family_h(a, b, r)?));
            }
        }
    }
    Ok(out)
}

/// Connected graphs of order `n ≥ 4` that are n-γ_tR-edge-critical.
fn full_weight_critical_family(n: usize) -> Result<Vec<Graph>> {
    let mut out = vec![cycle(n)?];
    if n % 2 == 0 && n >= 6 {
        out.push(corona(&complete(n / 2)?)?);
    }
    if n % 2 == 1 && n >= 7 {
        out.push(subdivided_star((n - 1) / 2)?);
    }
    out.extend(family_g_members(n)?);
    out.extend(
        family_h_members(n)?
            .into_iter()
            // H(1,1,r) is a path, never n-critical: joining its ends gives C_n
            .filter(|(r, path, _)| *r != 0 && *r != 2 && !path)
            .map(|(_, _, g)| g),
    );
    Ok(out)
}

// --- basic bounds ---

fn td_vs_d(g: &Graph) -> Outcome {
    let (d, t) = (gamma(g), gamma_t(g)?);
    expect(d <= t && t <= 2 * d, || format!("gamma={d} gamma_t={t}"))
}

fn trd_vs_d(g: &Graph) -> Outcome {
    let (d, tr) = (gamma(g), gamma_tr(g)?);
    expect(2 * d <= tr && tr <= 3 * d, || format!("gamma={d} gamma_tR={tr}"))
}

fn trd_vs_td(g: &Graph) -> Outcome {
    let (t, tr) = (gamma_t(g)?, gamma_tr(g)?);
    let copies_of_k2 = g.max_degree() == 1;
    expect(t <= tr && tr <= 2 * t && (tr == t) == copies_of_k2, || {
        format!("gamma_t={t} gamma_tR={tr} copies_of_K2={copies_of_k2}")
    })
}

fn tr_t_plus_one(g: &Graph) -> Outcome {
    let (t, tr) = (gamma_t(g)?, gamma_tr(g)?);
    let universal = g.max_degree() + 1 == g.order();
    expect((tr == t + 1) == universal, || {
        format!("gamma_t={t} gamma_tR={tr} universal={universal}")
    })
}

fn tr_three(g: &Graph) -> Outcome {
    let tr = gamma_tr(g)?;
    let universal = g.max_degree() + 1 == g.order();
    expect((tr == 3) == universal, || format!("gamma_tR={tr} universal={universal}"))
}

fn tr_above_t_plus_one(g: &Graph) -> Outcome {
    if g.max_degree() + 2 > g.order() {
        return Ok(None);
    }
    let (t, tr) = (gamma_t(g)?, gamma_tr(g)?);
    expect(t + 2 <= tr && tr <= 2 * t, || format!("gamma_t={t} gamma_tR={tr}"))
}

fn tr_three_four(g: &Graph) -> Outcome {
    let (d, t, tr) = (gamma(g), gamma_t(g)?, gamma_tr(g)?);
    let ok = ((tr == 3 || tr == 4) == (t == 2)) && (tr != 3 || d == 1) && (tr != 4 || d == 2);
    expect(ok, || format!("gamma={d} gamma_t={t} gamma_tR={tr}"))
}

fn addition_bounds(g: &Graph, inv: Invariant) -> Outcome {
    let ev = ev();
    let k = ev.value(g, inv)?;
    for e in g.non_edges() {
        let after = ev.value(&g.add_edge(e)?, inv)?;
        if after > k || after + 2 < k {
            return Ok(Some(format!("{e}: {k} -> {after}")));
        }
    }
    Ok(None)
}

fn t_bounds(g: &Graph) -> Outcome {
    addition_bounds(g, TD)
}

fn tr_bounds(g: &Graph) -> Outcome {
    addition_bounds(g, TR)
}

fn t_super_lemma(g: &Graph) -> Outcome {
    let k = gamma_t(g)?;
    for e in g.non_edges() {
        if g.distance(e.u(), e.v())? == DomValue::Finite(2) {
            let after = gamma_t(&g.add_edge(e)?)?;
            if after + 1 < k {
                return Ok(Some(format!("{e} at distance 2: {k} -> {after}")));
            }
        }
    }
    Ok(None)
}

fn tr_er_bounds(g: &Graph) -> Outcome {
    let k = gamma_tr(g)?;
    for e in pendant_free_edges(g) {
        let after = gamma_tr(&g.remove_edge(e)?)?;
        if after < k || after > k + 2 {
            return Ok(Some(format!("{e}: {k} -> {after}")));
        }
    }
    Ok(None)
}

// --- optimal-function constraints ---

fn pendant_edge(g: &Graph) -> Outcome {
    let fs = optimal_trd_functions(g)?;
    for u in g.pendant_vertices() {
        let v = g.nbrs(u).first().expect("pendant vertex has a neighbour");
        for f in &fs {
            let (fu, fv) = (f.value(u), f.value(v));
            if !((fu == 1 && fv == 1) || (fv == 2 && fu <= 1)) {
                return Ok(Some(format!("pendant {u}-{v} labelled {fu},{fv} by {}", f.render(g.order()))));
            }
        }
        let avoids_one_two = fs.iter().any(|f| {
            let (fu, fv) = (f.value(u), f.value(v));
            !matches!((fu.min(fv), fu.max(fv)), (1, 2))
        });
        if !avoids_one_two {
            return Ok(Some(format!("pendant {u}-{v}: every optimal function labels it {{1,2}}")));
        }
    }
    Ok(None)
}

fn set_added_edge(g: &Graph) -> Outcome {
    let ev = ev();
    for e in g.non_edges() {
        if ev.classify_added_edge(g, e, TR)?.verdict.is_critical() {
            let r = optimal_function_constraints(g, e, Addition)?;
            if !r.allowed_pairs_hold || r.both_ones_exists == Some(false) {
                return Ok(Some(format!("{e}: pairs {:?} both_ones={:?}", r.pairs, r.both_ones_exists)));
            }
        }
    }
    Ok(None)
}

fn super_set(g: &Graph) -> Outcome {
    let ev = ev();
    for e in g.non_edges() {
        if ev.classify_added_edge(g, e, TR)?.verdict == EdgeVerdict::Supercritical {
            let r = optimal_function_constraints(g, e, Addition)?;
            if r.supercritical_pair_exists != Some(true) {
                return Ok(Some(format!("{e}: pairs {:?}", r.pairs)));
            }
        }
    }
    Ok(None)
}

fn er_set(g: &Graph) -> Outcome {
    let ev = ev();
    for e in g.edges() {
        if ev.classify_removed_edge(g, e, TR)?.verdict.is_critical() {
            let r = optimal_function_constraints(g, e, Removal)?;
            if !r.allowed_pairs_hold {
                return Ok(Some(format!("{e}: pairs {:?}", r.pairs)));
            }
        }
    }
    Ok(None)
}

fn super_er_set(g: &Graph) -> Outcome {
    let ev = ev();
    for e in g.edges() {
        if ev.classify_removed_edge(g, e, TR)?.verdict == EdgeVerdict::Supercritical {
            let r = optimal_function_constraints(g, e, Removal)?;
            if r.supercritical_pair_exists != Some(true) {
                return Ok(Some(format!("{e}: pairs {:?}", r.pairs)));
            }
        }
    }
    Ok(None)
}

// --- edge-critical graphs ---

fn is_tr_edge_critical(g: &Graph) -> Result<bool> {
    Ok(ev().critical_value(g, Addition, TR)?.is_some())
}

fn end_deg_three(g: &Graph) -> Outcome {
    let blocked = g.pendant_vertices().iter().any(|w| {
        let x = g.nbrs(w).first().expect("pendant vertex has a neighbour");
        let rest = g.nbrs(x).without(w);
        rest.iter().any(|a| !rest.without(a).is_subset(g.nbrs(a)))
    });
    if !blocked {
        return Ok(None);
    }
    expect(!is_tr_edge_critical(g)?, || "edge-critical despite a non-complete support neighbourhood".into())
}

fn no_long_legs(g: &Graph) -> Outcome {
    let long = g.endpaths().iter().filter(|p| p.length() >= 3).count();
    if long < 2 {
        return Ok(None);
    }
    expect(!is_tr_edge_critical(g)?, || format!("edge-critical with {long} endpaths of length >= 3"))
}

fn tr_equals_n(g: &Graph) -> Outcome {
    let n = g.order();
    let tr = gamma_tr(g)?;
    let member = is_isomorphic_to_any(g, &full_weight_family(n)?);
    expect((tr as usize == n) == member, || format!("gamma_tR={tr} n={n} listed={member}"))
}

fn n_edge_critical(g: &Graph) -> Outcome {
    let n = g.order();
    let critical = ev().critical_value(g, Addition, TR)? == Some(n as u32);
    let member = is_isomorphic_to_any(g, &full_weight_critical_family(n)?);
    expect(critical == member, || format!("n-edge-critical={critical} listed={member}"))
}

// --- edge-supercritical graphs ---

fn t_super(g: &Graph) -> Outcome {
    let sup = ev().supercritical_value(g, Addition, TD)?.is_some();
    let cliques = is_union_of_nontrivial_cliques(g);
    expect(sup == cliques, || format!("gamma_t-supercritical={sup} union_of_cliques={cliques}"))
}

fn no_five_super(g: &Graph) -> Outcome {
    if gamma_tr(g)? != 5 {
        return Ok(None);
    }
    expect(ev().supercritical_value(g, Addition, TR)?.is_none(), || "5-supercritical".into())
}

fn union_of_cliques_super(g: &Graph) -> Outcome {
    let k = 3 * g.components().len() as u32;
    let got = ev().supercritical_value(g, Addition, TR)?;
    expect(got == Some(k), || format!("expected {k}-supercritical, got {got:?}"))
}

fn corona_complete_super(g: &Graph) -> Outcome {
    let k = g.order() as u32;
    let got = ev().supercritical_value(g, Addition, TR)?;
    expect(got == Some(k), || format!("expected {k}-supercritical, got {got:?}"))
}

fn super_endpaths(g: &Graph) -> Outcome {
    if ev().supercritical_value(g, Addition, TR)?.is_none() {
        return Ok(None);
    }
    expect(!g.has_adjacent_endpaths(), || "supercritical with adjacent endpaths".into())
}

fn super_trees(g: &Graph) -> Outcome {
    expect(ev().supercritical_value(g, Addition, TR)?.is_none(), || "supercritical tree".into())
}

// --- 5-critical graphs ---

fn if_five_critical(g: &Graph) -> Outcome {
    let ev = ev();
    if ev.critical_value(g, Addition, TR)? != Some(5) {
        return Ok(None);
    }
    if ev.critical_value(g, Addition, TD)? == Some(3) {
        return Ok(None);
    }
    let ok = is_k2_union_kn(g) && ev.supercritical_value(g, Addition, TD)? == Some(4);
    expect(ok, || "5-edge-critical but neither 3-gamma_t-critical nor K2 u Kn".into())
}

fn has_nested_pair(g: &Graph) -> Result<bool> {
    Ok(g.is_connected() && exists_nested_pair(g)?.is_some())
}

fn tr_five(g: &Graph) -> Outcome {
    let (t, tr) = (gamma_t(g)?, gamma_tr(g)?);
    let nested = has_nested_pair(g)?;
    expect((tr == 5) == (t == 3 && nested), || format!("gamma_t={t} gamma_tR={tr} nested={nested}"))
}

fn five_critical(g: &Graph) -> Outcome {
    let ev = ev();
    let lhs = ev.critical_value(g, Addition, TR)? == Some(5);
    let rhs = (ev.critical_value(g, Addition, TD)? == Some(3) && has_nested_pair(g)?) || is_k2_union_kn(g);
    expect(lhs == rhs, || format!("5-edge-critical={lhs} characterisation={rhs}"))
}

// --- 6-supercritical graphs ---

fn disconnected_six_super(g: &Graph) -> Outcome {
    let sup = ev().supercritical_value(g, Addition, TR)? == Some(6);
    let sizes: Vec<usize> = g.components().iter().map(|c| c.len()).collect();
    let two_cliques = g.is_union_of_cliques() && sizes.len() == 2 && sizes.iter().all(|&s| s >= 3);
    expect(sup == two_cliques, || format!("6-supercritical={sup} K_n u K_m={two_cliques}"))
}

fn diam_six_super(g: &Graph) -> Outcome {
    if ev().supercritical_value(g, Addition, TR)? != Some(6) {
        return Ok(None);
    }
    let d = g.diameter();
    expect(d == 2.into() || d == 3.into(), || format!("6-supercritical with diameter {d}"))
}

fn g_r_super(g: &Graph) -> Outcome {
    let r = (g.order() - 5) / 2;
    let class = ev().classify_graph(g, Addition, TR)?;
    let all_four = class.per_edge.iter().all(|c| c.after == 4.into());
    let ok = g.order() == 5 + 2 * r && g.diameter() == 3.into() && class.k == 6 && all_four;
    expect(ok, || format!("r={r} k={} diameter={} all non-edges to 4: {all_four}", class.k, g.diameter()))
}

// --- removal ---

fn td_er_critical(g: &Graph) -> Outcome {
    let crit = ev().critical_value(g, Removal, TD)?.is_some();
    let member = is_in_family_t(g)?;
    expect(crit == member, || format!("gamma_t-ER-critical={crit} in_T={member}"))
}

fn td_er_critical_components(g: &Graph) -> Outcome {
    let crit = ev().critical_value(g, Removal, TD)?.is_some();
    let mut member = true;
    for h in parts(g) {
        member &= is_in_family_t(&h)?;
    }
    expect(crit == member, || format!("gamma_t-ER-critical={crit} components_in_T={member}"))
}

fn is_er_critical(g: &Graph) -> Result<bool> {
    Ok(ev().critical_value(g, Removal, TR)?.is_some())
}

fn er_critical_min_degree(g: &Graph) -> Outcome {
    if !is_er_critical(g)? {
        return Ok(None);
    }
    if g.min_degree() != 1 {
        return Ok(Some(format!("ER-critical with minimum degree {}", g.min_degree())));
    }
    for f in optimal_trd_functions(g)? {
        let zeros = g.vertices() - f.positive();
        if let Some(u) = zeros.iter().find(|&u| g.deg(u) != 1) {
            return Ok(Some(format!("{} labels {u} (degree {}) with 0", f.render(g.order()), g.deg(u))));
        }
    }
    Ok(None)
}

fn er_critical_trees(g: &Graph) -> Outcome {
    if !is_er_critical(g)? {
        return Ok(None);
    }
    expect(g.is_tree(), || "ER-critical but not a tree".into())
}

fn er_critical_max_dist(g: &Graph) -> Outcome {
    if !is_er_critical(g)? {
        return Ok(None);
    }
    for f in optimal_trd_functions(g)? {
        let pos = f.positive();
        for u in pos {
            for v in pos {
                if u < v && g.distance(u, v)? > 2.into() {
                    return Ok(Some(format!("{} has positive {u},{v} far apart", f.render(g.order()))));
                }
            }
        }
    }
    Ok(None)
}

fn er_critical_max_diam(g: &Graph) -> Outcome {
    if !is_er_critical(g)? {
        return Ok(None);
    }
    let inner: Vec<usize> = (0..g.order()).filter(|&v| g.deg(v) > 1).collect();
    for &u in &inner {
        for &v in &inner {
            if u < v && g.distance(u, v)? > 2.into() {
                return Ok(Some(format!("non-leaves {u},{v} at distance > 2")));
            }
        }
    }
    expect(g.diameter() <= 4.into(), || format!("diameter {}", g.diameter()))
}

fn er_critical_connected(g: &Graph) -> Outcome {
    let crit = is_er_critical(g)?;
    let member = in_er_critical_family(g)?;
    expect(crit == member, || format!("ER-critical={crit} in_F_without_1={member}"))
}

fn er_critical_components(g: &Graph) -> Outcome {
    let crit = is_er_critical(g)?;
    let mut member = true;
    for h in parts(g) {
        member &= in_er_critical_family(&h)?;
    }
    expect(crit == member, || format!("ER-critical={crit} components_in_F={member}"))
}

fn er_super_connected(g: &Graph) -> Outcome {
    let sup = ev().supercritical_value(g, Removal, TR)?.is_some();
    let shape = is_star_or_wide_double_star(g);
    expect(sup == shape, || format!("ER-supercritical={sup} star_or_double_star={shape}"))
}

fn er_super_components(g: &Graph) -> Outcome {
    let sup = ev().supercritical_value(g, Removal, TR)?.is_some();
    let shape = parts(g).iter().all(is_star_or_wide_double_star);
    expect(sup == shape, || format!("ER-supercritical={sup} components_star_or_double_star={shape}"))
}

fn er_super_gives_stable(g: &Graph) -> Outcome {
    let ev = ev();
    let Some(k) = ev.supercritical_value(g, Removal, TR)? else {
        return Ok(None);
    };
    let stable = ev.stable_value(g, Addition, TR)?;
    expect(stable == Some(k), || format!("{k}-ER-supercritical, addition-stable value {stable:?}"))
}

// --- removal-stable ---

fn er_stable_min_degree(g: &Graph) -> Outcome {
    if ev().stable_value(g, Removal, TR)?.is_none() {
        return Ok(None);
    }
    expect(g.min_degree() > 1, || "ER-stable with a pendant vertex".into())
}

fn trd_stable_function(g: &Graph) -> Outcome {
    if ev().stable_value(g, Removal, TR)?.is_none() {
        return Ok(None);
    }
    let fs = optimal_trd_functions(g)?;
    for e in g.edges() {
        let h = g.remove_edge(e)?;
        let mut shared = false;
        for f in &fs {
            if is_trd_function(&h, f)? {
                shared = true;
                break;
            }
        }
        if !shared {
            return Ok(Some(format!("no optimal function of G survives removing {e}")));
        }
    }
    Ok(None)
}

fn super_to_er_stable(g: &Graph) -> Outcome {
    let Some(k) = ev().supercritical_value(g, Addition, TR)? else {
        return Ok(None);
    };
    for e in pendant_free_edges(g) {
        let after = gamma_tr(&g.remove_edge(e)?)?;
        if after != k {
            return Ok(Some(format!("non-pendant {e}: {k} -> {after}")));
        }
    }
    Ok(None)
}

fn super_stable(g: &Graph) -> Outcome {
    let ev = ev();
    if g.min_degree() < 2 {
        return Ok(None);
    }
    let Some(k) = ev.supercritical_value(g, Addition, TR)? else {
        return Ok(None);
    };
    let stable = ev.stable_value(g, Removal, TR)?;
    expect(stable == Some(k), || format!("{k}-supercritical, removal-stable value {stable:?}"))
}

fn g_r_er_stable(g: &Graph) -> Outcome {
    let stable = ev().stable_value(g, Removal, TR)?;
    expect(stable == Some(6), || format!("removal-stable value {stable:?}"))
}

// --- diameter two and G_r ---

fn diam2_degree_bound(g: &Graph) -> Outcome {
    if g.diameter() != 2.into() {
        return Ok(None);
    }
    let k = gamma_tr(g)? as usize;
    expect(g.min_degree() >= k / 2, || format!("gamma_tR={k} min_degree={}", g.min_degree()))
}

fn diam2_super_degree(g: &Graph) -> Outcome {
    if g.diameter() != 2.into() || ev().supercritical_value(g, Addition, TR)?.is_none() {
        return Ok(None);
    }
    expect(g.min_degree() >= 3, || format!("supercritical, min_degree={}", g.min_degree()))
}

fn six_diam2_d_td(g: &Graph) -> Outcome {
    let ev = ev();
    if g.diameter() != 2.into() || ev.supercritical_value(g, Addition, TR)? != Some(6) {
        return Ok(None);
    }
    let t = ev.critical_value(g, Addition, TD)?;
    let d = ev.critical_value(g, Addition, D)?;
    expect(t == Some(3) && d == Some(3), || format!("gamma_t-critical={t:?} gamma-critical={d:?}"))
}

fn g_r_positive_cover(g: &Graph) -> Outcome {
    let covered = optimal_trd_functions(g)?
        .iter()
        .fold(crate::graph::VertexSet::EMPTY, |acc, f| acc | f.positive());
    let missed = g.vertices() - covered;
    expect(missed.is_empty(), || format!("never positive: {:?}", missed.iter().collect::<Vec<_>>()))
}

fn nine_critical(g: &Graph) -> Outcome {
    let got = ev().critical_value(g, Addition, TR)?;
    expect(got == Some(9), || format!("critical value {got:?}"))
}

fn corona_union_critical(g: &Graph) -> Outcome {
    let k = gamma_tr(g)?;
    let got = ev().critical_value(g, Addition, TR)?;
    expect(got == Some(k), || format!("gamma_tR={k} critical value {got:?}"))
}

// --- instance lists ---

fn clique_unions() -> Result<Vec<Graph>> {
    [&[3, 3][..], &[3, 4], &[4, 5], &[3, 3, 3], &[3, 4, 5]]
        .iter()
        .map(|sizes| {
            sizes.iter().try_fold(Graph::empty(0)?, |acc, &s| acc.disjoint_union(&complete(s)?))
        })
        .collect()
}

/// H(a,b,r) with a + b >= 3 and r in {1, 3, 4}, order at most 14.
fn larger_h_members() -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (a, b) in [(1, 2), (1, 3), (2, 2), (2, 3), (1, 4)] {
        for r in [1, 3, 4] {
            if 2 + r + 2 * (a + b) <= 14 {
                out.push(family_h(a, b, r)?);
            }
        }
    }
    Ok(out)
}

fn n_critical_instance(g: &Graph) -> Outcome {
    let n = g.order() as u32;
    let got = ev().critical_value(g, Addition, TR)?;
    expect(got == Some(n), || format!("n={n} critical value {got:?}"))
}

fn complete_coronas() -> Result<Vec<Graph>> {
    (4..=7).map(|n| corona(&complete(n)?)).collect()
}

fn g_r_2_to_5() -> Result<Vec<Graph>> {
    (2..=5).map(g_r).collect()
}

fn g_r_2_to_4() -> Result<Vec<Graph>> {
    (2..=4).map(g_r).collect()
}

fn g_r_with_cliques() -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for r in [2, 3] {
        for n in [3, 4] {
            out.push(g_r(r)?.disjoint_union(&complete(n)?)?);
        }
    }
    Ok(out)
}

fn coronas_with_cliques() -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for m in [4, 5] {
        for n in [3, 4] {
            out.push(corona(&complete(m)?)?.disjoint_union(&complete(n)?)?);
        }
    }
    Ok(out)
}

fn g_r_and_small_supercritical() -> Result<Vec<Graph>> {
    let mut out = g_r_2_to_5()?;
    out.extend(complete_coronas()?);
    out.extend(clique_unions()?);
    Ok(out)
}

fn build_registry() -> Vec<TheoremCheck> {
    let disconnected = sweep(EnumFilter::disconnected_isolate_free(), 4, 8);
    vec![
        check("TD-vs-D", "gamma <= gamma_t <= 2 gamma", isolate_free(7), td_vs_d),
        check("TRD-vs-D", "2 gamma <= gamma_tR <= 3 gamma", isolate_free(7), trd_vs_d),
        check(
            "TRD-vs-TD",
            "gamma_t <= gamma_tR <= 2 gamma_t, with equality on the left iff G is a union of K_2",
            isolate_free(7),
            trd_vs_td,
        ),
        check(
            "tR=t+1",
            "connected, n >= 3: gamma_tR = gamma_t + 1 iff G has a universal vertex",
            connected(3, 7),
            tr_t_plus_one,
        ),
        check(
            "tR=3",
            "n >= 3, no isolated vertex: gamma_tR = 3 iff G has a universal vertex",
            sweep(EnumFilter::isolate_free(), 3, 7),
            tr_three,
        ),
        check(
            "tR>t+1",
            "connected, n >= 3, no universal vertex: gamma_t + 2 <= gamma_tR <= 2 gamma_t",
            connected(3, 7),
            tr_above_t_plus_one,
        ),
        check(
            "tR=34",
            "connected, n >= 3: gamma_tR in {3,4} iff gamma_t = 2; gamma = 1 at 3 and gamma = 2 at 4",
            connected(3, 7),
            tr_three_four,
        ),
        check("t-bounds", "gamma_t(G) - 2 <= gamma_t(G+e) <= gamma_t(G)", isolate_free(7), t_bounds),
        check("tR-bounds", "gamma_tR(G) - 2 <= gamma_tR(G+e) <= gamma_tR(G)", isolate_free(7), tr_bounds),
        check(
            "t-super-lemma",
            "d(u,v) = 2 implies gamma_t(G+uv) >= gamma_t(G) - 1",
            isolate_free(7),
            t_super_lemma,
        ),
        check(
            "tR-ER-bounds",
            "e in E_P: gamma_tR(G) <= gamma_tR(G-e) <= gamma_tR(G) + 2",
            isolate_free(7),
            tr_er_bounds,
        ),
        check(
            "pendant-edge",
            "pendant uv with deg(u) = 1: f(u) = f(v) = 1 or f(v) = 2, and some optimal f avoids {1,2}",
            isolate_free(6),
            pendant_edge,
        ),
        check(
            "set-added-edge",
            "critical non-edge uv: optimal functions of G+uv use {2,2},{2,1},{2,0},{1,1}; (1,1) occurs when both ends are pendant",
            isolate_free(6),
            set_added_edge,
        ),
        check(
            "super-set",
            "supercritical non-edge uv: some optimal function of G+uv uses {2,2},{2,0} or {1,1}",
            isolate_free(6),
            super_set,
        ),
        check(
            "ER-set",
            "ER-critical edge uv: every optimal function uses {0,2},{1,2},{2,2} or {1,1}",
            isolate_free(6),
            er_set,
        ),
        check(
            "super-ER-set",
            "ER-supercritical edge uv: some optimal function uses {2,2},{2,0} or {1,1}",
            isolate_free(6),
            super_er_set,
        ),
        check(
            "end-deg-3",
            "a pendant vertex whose support has a non-complete remaining neighbourhood rules out edge-criticality",
            isolate_free(8),
            end_deg_three,
        ),
        check(
            "no-long-legs",
            "two endpaths of length >= 3 rule out edge-criticality",
            isolate_free(8),
            no_long_legs,
        ),
        check(
            "tR=n",
            "connected, n >= 2: gamma_tR = n iff path, cycle, corona, subdivided star, or in G or H",
            connected(2, 7),
            tr_equals_n,
        ),
        check(
            "n-edge-crit",
            "connected, n >= 4: n-edge-critical iff C_n, cor(K_r) r >= 3, subdivided star of order >= 7, in G, or in H - H_0 - H_2",
            connected(4, 8),
            n_edge_critical,
        ),
        check(
            "n-edge-crit-H",
            "members of H - H_0 - H_2 other than paths are n-edge-critical",
            Scope::Instances {
                describe: "H(a,b,r), a + b >= 3, r in {1,3,4}, n <= 14",
                build: larger_h_members,
            },
            n_critical_instance,
        ),
        check(
            "t-super",
            "gamma_t-edge-supercritical iff a union of >= 2 non-trivial complete graphs",
            isolate_free(7),
            t_super,
        ),
        check("no-5-super", "no graph is 5-edge-supercritical", isolate_free(8), no_five_super),
        check(
            "union-cliques-super",
            "a union of k >= 2 complete graphs of order >= 3 is 3k-edge-supercritical",
            Scope::Instances {
                describe: "K3uK3, K3uK4, K4uK5, K3uK3uK3, K3uK4uK5",
                build: clique_unions,
            },
            union_of_cliques_super,
        ),
        check(
            "super-cor",
            "cor(K_n), n >= 4, is 2n-edge-supercritical",
            Scope::Instances {
                describe: "cor(K_n), n = 4..7",
                build: complete_coronas,
            },
            corona_complete_super,
        ),
        check(
            "super-endpaths",
            "an edge-supercritical graph has no adjacent endpaths",
            isolate_free(7),
            super_endpaths,
        ),
        check(
            "super-endpaths-instances",
            "the known edge-supercritical graphs have no adjacent endpaths",
            Scope::Instances {
                describe: "G_r r = 2..5, cor(K_n) n = 4..7, unions of cliques",
                build: g_r_and_small_supercritical,
            },
            super_endpaths,
        ),
        check("super-trees", "no tree is edge-supercritical", trees(10), super_trees),
        check(
            "if-5tR-edge-crit",
            "5-edge-critical implies 3-gamma_t-edge-critical, or K_2 u K_n (n >= 3) which is 4-gamma_t-edge-supercritical",
            isolate_free(7),
            if_five_critical,
        ),
        check(
            "tR=5",
            "connected: gamma_tR = 5 iff gamma_t = 3 and some gamma-set lies inside a gamma_t-set",
            connected(2, 7),
            tr_five,
        ),
        check(
            "5tR-edge-crit",
            "5-edge-critical iff 3-gamma_t-edge-critical with a nested pair, or K_2 u K_n with n >= 3",
            isolate_free(7),
            five_critical,
        ),
        check(
            "disconnect-6-super",
            "disconnected: 6-edge-supercritical iff K_n u K_m with n, m >= 3",
            disconnected,
            disconnected_six_super,
        ),
        check(
            "diam-6-super",
            "connected 6-edge-supercritical implies 2 <= diam <= 3",
            connected(2, 8),
            diam_six_super,
        ),
        check(
            "diam-6-super-instances",
            "G_r has diameter 2 or 3",
            Scope::Instances {
                describe: "G_r, r = 2..5",
                build: g_r_2_to_5,
            },
            diam_six_super,
        ),
        check(
            "G_r-super",
            "G_r has order 5 + 2r, diameter 3, gamma_tR 6, and every non-edge brings it to 4",
            Scope::Instances {
                describe: "G_r, r = 2..5",
                build: g_r_2_to_5,
            },
            g_r_super,
        ),
        check(
            "TD-ER-crit",
            "connected: gamma_t-ER-critical iff in T",
            connected(2, 7),
            td_er_critical,
        ),
        check(
            "TD-ER-crit-disc",
            "gamma_t-ER-critical iff every component is in T",
            isolate_free(7),
            td_er_critical_components,
        ),
        check(
            "ER-crit-min-deg",
            "connected ER-critical: optimal functions put 0 only on leaves, and delta = 1",
            connected(2, 7),
            er_critical_min_degree,
        ),
        check(
            "ER-crit-trees",
            "connected ER-critical graphs are trees",
            connected(2, 7),
            er_critical_trees,
        ),
        check(
            "ER-crit-max-dist",
            "connected ER-critical: positive vertices of an optimal function are within distance 2",
            trees(10),
            er_critical_max_dist,
        ),
        check(
            "ER-crit-max-diam",
            "connected ER-critical: non-leaves are within distance 2 and diam <= 4",
            trees(10),
            er_critical_max_diam,
        ),
        check(
            "ER-crit-connect",
            "connected: ER-critical iff in F_n with no k_i = 1",
            trees(10),
            er_critical_connected,
        ),
        check(
            "ER-crit",
            "ER-critical iff every component is in some F_n with no k_i = 1",
            isolate_free(7),
            er_critical_components,
        ),
        check(
            "ER-super-connect",
            "connected: ER-supercritical iff a non-trivial star or a double star with both centres of degree >= 3",
            connected(2, 8),
            er_super_connected,
        ),
        check(
            "ER-super",
            "ER-supercritical iff every component is such a star or double star",
            isolate_free(7),
            er_super_components,
        ),
        check(
            "ER-super-gives-stable",
            "connected: k-ER-supercritical implies k-edge-stable",
            connected(2, 7),
            er_super_gives_stable,
        ),
        check(
            "ER-stable-deg>1",
            "ER-stable implies delta > 1",
            isolate_free(7),
            er_stable_min_degree,
        ),
        check(
            "TRD-stable-f",
            "ER-stable: for each edge e some optimal function of G is a TRD-function of G - e",
            isolate_free(6),
            trd_stable_function,
        ),
        check(
            "super-to-ER-stable",
            "edge-supercritical implies every non-pendant edge is ER-stable",
            isolate_free(7),
            super_to_er_stable,
        ),
        check(
            "super-to-ER-stable-instances",
            "the known edge-supercritical graphs have ER-stable non-pendant edges",
            Scope::Instances {
                describe: "G_r r = 2..5, cor(K_n) n = 4..7, unions of cliques",
                build: g_r_and_small_supercritical,
            },
            super_to_er_stable,
        ),
        check(
            "super-stable",
            "edge-supercritical with delta >= 2 implies ER-stable",
            isolate_free(7),
            super_stable,
        ),
        check(
            "G_r-ER-stable",
            "G_r is ER-stable",
            Scope::Instances {
                describe: "G_r, r = 2..5",
                build: g_r_2_to_5,
            },
            g_r_er_stable,
        ),
        check(
            "diam2-deg-bounds",
            "connected, diam 2: delta >= floor(gamma_tR / 2)",
            connected(2, 7),
            diam2_degree_bound,
        ),
        check(
            "diam2-deg>2",
            "connected edge-supercritical with diam 2 implies delta >= 3",
            connected(2, 8),
            diam2_super_degree,
        ),
        check(
            "6-diam2-D-TD",
            "connected 6-edge-supercritical with diam 2 is 3-gamma_t- and 3-gamma-edge-critical",
            connected(2, 8),
            six_diam2_d_td,
        ),
        check(
            "G_r-V+",
            "every vertex of G_r is positive under some optimal function",
            Scope::Instances {
                describe: "G_r, r = 2..4",
                build: g_r_2_to_4,
            },
            g_r_positive_cover,
        ),
        check(
            "G_r-K_n-crit",
            "G_r u K_n is 9-edge-critical",
            Scope::Instances {
                describe: "G_r u K_n, r in {2,3}, n in {3,4}",
                build: g_r_with_cliques,
            },
            nine_critical,
        ),
        check(
            "cor-K_m-union-K_n-crit",
            "cor(K_m) u K_n is edge-critical for m >= 4, n >= 3",
            Scope::Instances {
                describe: "cor(K_m) u K_n, m in {4,5}, n in {3,4}",
                build: coronas_with_cliques,
            },
            corona_union_critical,
        ),
    ]
}

/// Every registered check, in a fixed order.
pub fn registry() -> &'static [TheoremCheck] {
    static REGISTRY: OnceLock<Vec<TheoremCheck>> = OnceLock::new();
    REGISTRY.get_or_init(build_registry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{double_star, star};

    #[test]
    fn full_weight_family_has_the_right_weight() {
        for n in 2..=10 {
            for g in full_weight_family(n).unwrap() {
                assert_eq!(g.order(), n);
                assert_eq!(gamma_tr(&g).unwrap() as usize, n);
            }
        }
    }

    #[test]
    fn shape_helpers() {
        assert!(is_star_or_wide_double_star(&star(1).unwrap()));
        assert!(is_star_or_wide_double_star(&double_star(2, 3).unwrap()));
        assert!(!is_star_or_wide_double_star(&double_star(1, 3).unwrap()));
        assert!(!is_star_or_wide_double_star(&path(5).unwrap()));
        let k2k4 = complete(2).unwrap().disjoint_union(&complete(4).unwrap()).unwrap();
        assert!(is_k2_union_kn(&k2k4));
        assert!(!is_k2_union_kn(&complete(2).unwrap().disjoint_union(&complete(2).unwrap()).unwrap()));
        assert!(is_union_of_nontrivial_cliques(&k2k4));
        assert!(!is_union_of_nontrivial_cliques(&complete(4).unwrap()));
    }

    #[test]
    fn disconnected_er_supercritical_need_not_be_stable() {
        // P_3 u K_2 is 5-ER-supercritical, but joining the two centres gives 4
        let g = path(3).unwrap().disjoint_union(&complete(2).unwrap()).unwrap();
        let ev = ev();
        assert_eq!(ev.supercritical_value(&g, Removal, TR).unwrap(), Some(5));
        assert_eq!(ev.stable_value(&g, Addition, TR).unwrap(), None);
        let e = crate::graph::Edge::new(1, 3).unwrap();
        assert_eq!(gamma_tr(&g.add_edge(e).unwrap()).unwrap(), 4);
        assert!(er_super_gives_stable(&g).unwrap().is_some());
    }

    #[test]
    fn detects_a_planted_violation() {
        // K_4 has a universal vertex, so claiming otherwise must fail
        let p: Predicate = |g| {
            let universal = g.max_degree() + 1 == g.order();
            expect(!universal, || "universal".into())
        };
        assert!(p(&complete(4).unwrap()).unwrap().is_some());
        assert!(tr_three(&complete(4).unwrap()).unwrap().is_none());
    }
}
