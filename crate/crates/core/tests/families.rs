use std::collections::HashSet;

use trdom_core::families::{
    complete, corona, cycle, family_f, family_f_representations, family_g, family_h, g_r, is_in_family_f, path,
    star, subdivided_star,
};
use trdom_core::gamma_tr;
use trdom_core::graph::{canonical_form, enumerate_trees, is_isomorphic};

/// Non-increasing lists of length >= 1 with 1 + len + sum <= max_order.
fn all_ks(max_order: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, cap: usize, budget: usize, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        // a new entry costs one leaf plus its pendant count
        for k in 0..=cap.min(budget.saturating_sub(1)) {
            if budget == 0 {
                break;
            }
            prefix.push(k);
            extend(prefix, k, budget - 1 - k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_order, max_order - 1, &mut out);
    out
}

#[test]
fn order_formulas() {
    for n in 2..=6 {
        let g = path(n).unwrap();
        assert_eq!(corona(&g).unwrap().order(), 2 * n);
    }
    for r in 2..=5 {
        assert_eq!(g_r(r).unwrap().order(), 5 + 2 * r);
    }
    for k in 3..=6 {
        assert_eq!(subdivided_star(k).unwrap().order(), 2 * k + 1);
    }
    for ks in all_ks(12) {
        let order = 1 + ks.len() + ks.iter().sum::<usize>();
        assert_eq!(family_f(&ks).unwrap().order(), order, "{ks:?}");
    }
}

#[test]
fn full_weight_constructions_up_to_14() {
    let mut graphs = Vec::new();
    for n in 2..=14 {
        graphs.push(path(n).unwrap());
    }
    for n in 3..=14 {
        graphs.push(cycle(n).unwrap());
    }
    for n in 1..=7 {
        graphs.push(corona(&complete(n).unwrap()).unwrap());
        graphs.push(corona(&path(n).unwrap()).unwrap());
        if n >= 3 {
            graphs.push(corona(&cycle(n).unwrap()).unwrap());
            graphs.push(corona(&star(n - 1).unwrap()).unwrap());
        }
    }
    for k in 3..=6 {
        graphs.push(subdivided_star(k).unwrap());
    }
    for k1 in 0..=5 {
        for k2 in 0..=5 - k1 {
            if k1 + k2 >= 1 {
                graphs.push(family_g(k1, k2).unwrap());
            }
        }
    }
    for a in 1..=4 {
        for b in a..=4 {
            for r in 0..=8 {
                if 2 + r + 2 * (a + b) <= 14 {
                    graphs.push(family_h(a, b, r).unwrap());
                }
            }
        }
    }
    for g in &graphs {
        assert!(g.order() <= 14);
        assert_eq!(gamma_tr(g).unwrap() as usize, g.order(), "{g:?}");
    }
}

#[test]
fn family_f_parameters_are_recovered() {
    let lists = all_ks(12);
    assert!(lists.len() > 100);
    for ks in lists {
        let g = family_f(&ks).unwrap();
        let reps = family_f_representations(&g).unwrap();
        assert!(reps.contains(&ks), "{ks:?} not among {reps:?}");
        let chosen = is_in_family_f(&g).unwrap().expect("member");
        assert!(is_isomorphic(&family_f(&chosen).unwrap(), &g), "{ks:?} -> {chosen:?}");
    }
}

#[test]
fn family_f_recognition_matches_construction_on_trees() {
    let built: HashSet<_> = all_ks(10)
        .iter()
        .map(|ks| canonical_form(&family_f(ks).unwrap()))
        .collect();
    let mut members = 0;
    for n in 2..=10 {
        for t in enumerate_trees(n).unwrap() {
            let recognized = is_in_family_f(&t).unwrap().is_some();
            assert_eq!(recognized, built.contains(&canonical_form(&t)), "{t:?}");
            members += recognized as usize;
        }
    }
    assert_eq!(members, built.len());
}
