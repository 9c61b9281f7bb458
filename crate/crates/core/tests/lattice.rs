mod common;

use std::collections::BTreeSet;

use common::*;
use koszul_core::lattice::{lattice_from_poset, poset_ideals};
use koszul_core::{DistributiveLattice, HibiRing, Poset};

fn lattices() -> Vec<DistributiveLattice> {
    let mut out: Vec<DistributiveLattice> = (1..=4)
        .flat_map(|n| unlabeled_posets(n).into_iter().map(move |r| (n, r)))
        .map(|(n, r)| lattice_from_poset(&poset(n, &r)).unwrap())
        .collect();
    out.push(DistributiveLattice::chain(4));
    out
}

fn isomorphic(a: &Poset, b: &Poset) -> bool {
    fn go(a: &Poset, b: &Poset, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let k = map.len();
        if k == a.len() {
            return true;
        }
        for t in 0..b.len() {
            if used[t] {
                continue;
            }
            let fits =
                (0..k).all(|s| a.leq(s, k) == b.leq(map[s], t) && a.leq(k, s) == b.leq(t, map[s]));
            if fits {
                map.push(t);
                used[t] = true;
                if go(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[t] = false;
            }
        }
        false
    }
    a.len() == b.len() && go(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}

#[test]
fn birkhoff_round_trip() {
    for n in 1..=4 {
        for rel in unlabeled_posets(n) {
            let p = poset(n, &rel);
            let l = lattice_from_poset(&p).unwrap();
            assert_eq!(l.len(), p.down_sets().len());
            assert!(isomorphic(&l.join_irreducibles(), &p), "{p:?}");
            let again = lattice_from_poset(&l.join_irreducibles()).unwrap();
            assert!(isomorphic(&again.as_poset(), &l.as_poset()));
        }
    }
}

#[test]
fn lattices_are_distributive() {
    for l in lattices() {
        let n = l.len();
        for a in 0..n {
            for b in 0..n {
                assert_eq!(l.meet(a, b), l.meet(b, a));
                assert!(l.leq(l.meet(a, b), a) && l.leq(a, l.join(a, b)));
                for c in 0..n {
                    assert_eq!(l.meet(a, l.join(b, c)), l.join(l.meet(a, b), l.meet(a, c)));
                }
            }
        }
        assert!(l.leq(l.bottom(), l.top()));
    }
}

fn member_names(f: &koszul_core::Filtration) -> BTreeSet<BTreeSet<String>> {
    f.members()
        .iter()
        .map(|m| m.generators().iter().map(|g| g.to_string()).collect())
        .collect()
}

#[test]
fn upsets_are_poset_ideals_of_the_reverse() {
    for l in lattices() {
        let h: HibiRing = HibiRing::new(&l).unwrap();
        let up = h.upset_filtration().unwrap();
        let report = up.verify().unwrap();
        assert!(report.ok, "{l:?}: {:?}", report.failures);
        let rev: HibiRing = HibiRing::new(&l.reverse()).unwrap();
        let down = rev.koszul_filtration().unwrap();
        assert!(down.verify().unwrap().ok);
        assert_eq!(member_names(&up), member_names(&down));
        assert_eq!(up.len(), poset_ideals(&l.reverse()).len());
        // A lattice and its reverse have the same join-meet ideal.
        let a: BTreeSet<String> = h
            .ideal()
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        let b: BTreeSet<String> = rev
            .ideal()
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(a, b);
    }
}

#[test]
fn chains_give_polynomial_rings() {
    for m in 1..=5 {
        let l = DistributiveLattice::chain(m);
        let h: HibiRing = HibiRing::new(&l).unwrap();
        assert!(h.ideal().generators().is_empty());
        let f = h.koszul_filtration().unwrap();
        assert_eq!(f.len(), m + 1);
        assert!(f.is_flag().unwrap());
    }
}
