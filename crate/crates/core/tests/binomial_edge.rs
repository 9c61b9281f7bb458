mod common;

use std::collections::BTreeSet;

use common::*;
use koszul_core::binomial_edge::build_context;
use koszul_core::groebner::colon_general;
use koszul_core::koszul::Filtration;
use koszul_core::poly::Polynomial;
use koszul_core::{EdgeRing, Graph, LinearIdeal, QuotientRing};

fn context(g: &Graph) -> EdgeRing {
    build_context(g).unwrap()
}

/// Graph on five vertices where `N^>(1)` reaches three steps past `2`.
fn wide_graph() -> Graph {
    Graph::new(
        5,
        [
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
    )
    .unwrap()
}

#[test]
fn lex_and_revlex_bases_coincide_for_closed_graphs() {
    for g in closed_connected_graphs(5) {
        let e = context(&g);
        let a: BTreeSet<Polynomial<Q>> = e
            .ideal()
            .groebner(e.revlex())
            .unwrap()
            .elements()
            .iter()
            .cloned()
            .collect();
        let b: BTreeSet<Polynomial<Q>> = e
            .ideal()
            .groebner(e.lex())
            .unwrap()
            .elements()
            .iter()
            .cloned()
            .collect();
        assert_eq!(a, b, "{g:?}");
        let gens: BTreeSet<Polynomial<Q>> = e
            .ideal()
            .generators()
            .iter()
            .map(|f| f.monic(e.revlex()))
            .collect();
        assert_eq!(a, gens, "{g:?}");
    }
}

#[test]
fn bases_respect_the_vertex_multigrading() {
    for n in 2..=4 {
        for g in all_graphs(n) {
            let e = context(&g);
            for f in e.ideal().groebner(e.revlex()).unwrap().elements() {
                let weights: BTreeSet<Vec<u16>> = f
                    .terms()
                    .iter()
                    .map(|(m, _)| (0..n).map(|i| m.exponent(i) + m.exponent(n + i)).collect())
                    .collect();
                assert_eq!(weights.len(), 1, "{f} for {g:?}");
            }
        }
    }
}

#[test]
fn non_edge_binomial_is_a_zero_divisor_witness() {
    let e = context(&Graph::path(3));
    let gb = e.ideal().groebner(e.revlex()).unwrap();
    let f13 = &(&e.x(1) * &e.y(3)) - &(&e.x(3) * &e.y(1));
    assert!(!gb.normal_form(&f13).is_zero());
    assert!(gb.normal_form(&(&e.x(2) * &f13)).is_zero());
    assert!(gb.normal_form(&(&e.y(2) * &f13)).is_zero());
    let cu = e.c_universal_necessary().unwrap();
    assert!(!cu.holds);
    let (i, j, k, b) = cu.witness.unwrap();
    assert_eq!((i, j, k), (2, 1, 3));
    assert_eq!(b, f13);
    let colon = colon_general(e.ideal(), &e.x(i)).unwrap();
    assert!(colon.contains(&b).unwrap());
    assert!(!e.ideal().contains(&b).unwrap());
}

#[test]
fn x_colons_match_their_formula() {
    for g in closed_connected_graphs(5) {
        let e = context(&g);
        assert!(e.has_linear_quotients_x().unwrap());
        for i in 1..=g.n() {
            assert_eq!(
                e.colon_x_sequence(i).unwrap().certified,
                Some(true),
                "{g:?} at {i}"
            );
        }
    }
    let claw = context(&Graph::star(4));
    assert!(!claw.has_linear_quotients_x().unwrap());
    assert_eq!(claw.colon_x_sequence(1).unwrap().formula.map(|_| ()), None);
}

fn member(
    e: &EdgeRing,
    host: &std::sync::Arc<QuotientRing>,
    xs: &[usize],
    ys: &[usize],
) -> LinearIdeal {
    let forms = xs
        .iter()
        .map(|&i| e.x(i))
        .chain(ys.iter().map(|&i| e.y(i)))
        .collect();
    LinearIdeal::new(host, forms).unwrap()
}

#[test]
fn filtrations_contain_the_explicit_families() {
    for g in closed_connected_graphs(5) {
        let e = context(&g);
        let f = e.build_koszul_filtration().unwrap();
        let host = f.host().clone();
        let n = g.n();
        for k in 1..=n {
            let xk: Vec<usize> = (k..=n).collect();
            assert!(f.position(&member(&e, &host, &xk, &[])).is_some());
            let all: Vec<usize> = (1..=n).collect();
            let ys: Vec<usize> = (k..=n).collect();
            assert!(f.position(&member(&e, &host, &all, &ys)).is_some());
        }
        for k in 1..n {
            let ell = g.neighbor_intervals(k).unwrap().ell.unwrap();
            let xs: Vec<usize> = (k + 1..=n).collect();
            let ys: Vec<usize> = (k + 1..=ell).collect();
            assert!(f.position(&member(&e, &host, &xs, &ys)).is_some());
        }
        let report = f.verify().unwrap();
        assert!(report.ok, "{g:?}: {:?}", report.failures);
        assert!(f
            .members()
            .iter()
            .all(|m| m.generators().iter().all(|p| p.terms().len() == 1)));
    }
}

#[test]
fn explicit_families_alone_can_miss_a_witness() {
    let g = wide_graph();
    let e = context(&g);
    let full = e.build_koszul_filtration().unwrap();
    assert!(full.verify().unwrap().ok);
    // The three families without the members added for wide neighborhoods.
    let host = full.host().clone();
    let mut f = Filtration::new(&host);
    let n = g.n();
    let mut push = |xs: Vec<usize>, ys: Vec<usize>| {
        f.insert(member(&e, &host, &xs, &ys)).unwrap();
    };
    push(vec![], vec![]);
    for k in 1..=n + 1 {
        push((1..=n).collect(), (k..=n).collect());
        push((k..=n).collect(), vec![]);
    }
    for k in 1..n {
        let nb = g.neighbor_intervals(k).unwrap();
        let (ell, i) = (nb.ell.unwrap(), nb.i_next.unwrap());
        push((k + 1..=n).collect(), (k + 1..=ell).collect());
        push((k + 1..=n).collect(), (k + 2..=ell).collect());
        for s in k + 2..=ell + 1 {
            push((i..=n).collect(), (s..=ell).collect());
        }
    }
    let report = f.verify().unwrap();
    assert!(!report.ok);
    assert!(f.len() < full.len());
}

#[test]
fn filtrations_need_closed_labelings() {
    let e = context(&Graph::new(3, [(1, 3), (2, 3)]).unwrap());
    assert!(e.build_koszul_filtration().is_err());
    assert_eq!(e.closed_iff_quadratic().unwrap(), (false, false));
    let p = context(&Graph::path(4));
    assert_eq!(p.closed_iff_quadratic().unwrap(), (true, true));
    assert!(!p.build_koszul_filtration().unwrap().is_flag().unwrap());
}
