mod common;

use common::*;
use koszul_core::Graph;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &v) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, v);
            out.push(p);
        }
    }
    out
}

#[test]
fn closed_labelings_found_are_closed_and_exhaustive() {
    for n in 1..=5 {
        let perms = permutations(&(1..=n).collect::<Vec<_>>());
        for g in all_graphs(n).filter(|g| g.is_connected()) {
            let brute = perms
                .iter()
                .find(|p| g.relabel(p).unwrap().is_closed_labeling());
            match g.find_closed_labeling().unwrap() {
                Some(order) => {
                    assert!(g.relabel(&order).unwrap().is_closed_labeling());
                    assert_eq!(Some(&order), brute, "not the least order for {g:?}");
                }
                None => assert!(brute.is_none(), "{g:?} misses {brute:?}"),
            }
        }
    }
}

#[test]
fn random_relabelings_of_non_closed_graphs_fail() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    // A claw with a pendant path, the net (a triangle with a pendant at each
    // corner) and a hexagon.
    let graphs = [
        Graph::new(7, [(1, 2), (1, 3), (1, 4), (4, 5), (5, 6), (6, 7)]).unwrap(),
        Graph::new(6, [(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)]).unwrap(),
        Graph::new(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)]).unwrap(),
    ];
    for g in &graphs {
        assert_eq!(g.find_closed_labeling().unwrap(), None);
        let mut order: Vec<usize> = (1..=g.n()).collect();
        for _ in 0..100 {
            order.shuffle(&mut rng);
            let h = g.relabel(&order).unwrap();
            assert!(!h.is_closed_labeling());
            assert!(h.closedness_violation().is_some());
        }
    }
}

#[test]
fn maximal_cliques_of_closed_graphs_are_intervals() {
    for g in closed_connected_graphs(6) {
        let cliques = g.maximal_cliques();
        let mut covered = 0;
        for c in &cliques {
            let (a, b) = (c[0], *c.last().unwrap());
            assert_eq!(c, &(a..=b).collect::<Vec<_>>(), "{g:?}");
            covered += c.len() * (c.len() - 1) / 2;
        }
        assert!(covered >= g.edge_count());
    }
}

#[test]
fn standard_families() {
    assert!(Graph::complete(5).is_closed_labeling());
    assert!(Graph::path(5).is_closed_labeling());
    assert!(!Graph::star(4).is_closed_labeling());
    assert_eq!(Graph::star(4).find_closed_labeling().unwrap(), None);
    assert!(!Graph::empty(3).is_connected());
    let bent = Graph::new(3, [(1, 3), (2, 3)]).unwrap();
    assert_eq!(bent.closedness_violation(), Some((3, 1, 2)));
    assert_eq!(bent.find_closed_labeling().unwrap(), Some(vec![1, 3, 2]));
    assert_eq!(
        Graph::path(4).maximal_cliques(),
        vec![vec![1, 2], vec![2, 3], vec![3, 4]]
    );
}
