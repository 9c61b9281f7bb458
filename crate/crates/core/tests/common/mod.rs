//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use koszul_core::graphs::Graph;
use koszul_core::poly::Polynomial;
use koszul_core::{Poset, Rational, Ring};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

pub type Q = Rational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// All labeled graphs on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

/// A uniformly random connected labeled graph on `n` vertices.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    loop {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if rng.gen_bool(0.5) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Every closed connected labeled graph on `1..=max_n` vertices.
pub fn closed_connected_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(all_graphs)
        .filter(|g| g.is_connected() && g.is_closed_labeling())
        .collect()
}

/// Strict order relations `i < j` with `i < j` as integers, transitively closed.
fn natural_posets(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let rel: BTreeSet<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let transitive = rel
            .iter()
            .all(|&(a, b)| rel.iter().all(|&(c, d)| c != b || rel.contains(&(a, d))));
        if transitive {
            out.push(rel.into_iter().collect());
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative of each isomorphism class of posets on `n` elements,
/// as strict relations. Every poset has a natural labeling, so scanning those
/// and keeping the least relabeled relation set per class is complete.
pub fn unlabeled_posets(n: usize) -> Vec<Vec<(usize, usize)>> {
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for rel in natural_posets(n) {
        let canon = perms
            .iter()
            .map(|p| {
                let mut r: Vec<(usize, usize)> = rel.iter().map(|&(a, b)| (p[a], p[b])).collect();
                r.sort();
                r
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(rel);
        }
    }
    out
}

pub fn poset(n: usize, rel: &[(usize, usize)]) -> Poset {
    Poset::new((1..=n).map(|i| format!("p{i}")).collect(), rel).unwrap()
}

/// Polynomials as exponent-vector maps, independent of the library's types.
pub type Naive = BTreeMap<Vec<u32>, Q>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NaiveKind {
    Lex,
    RevLex,
}

/// A monomial order given by a kind and a priority list, largest first.
#[derive(Clone, Debug)]
pub struct NaiveOrder {
    pub kind: NaiveKind,
    pub priority: Vec<usize>,
}

impl NaiveOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.kind {
            NaiveKind::Lex => {
                for &v in &self.priority {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            NaiveKind::RevLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                if da != db {
                    return da.cmp(&db);
                }
                for &v in self.priority.iter().rev() {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    fn lead(&self, f: &Naive) -> Option<(Vec<u32>, Q)> {
        f.iter()
            .max_by(|a, b| self.cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
    }
}

pub fn to_naive(p: &Polynomial<Q>) -> Naive {
    p.terms()
        .iter()
        .map(|(m, c)| (m.exponents().iter().map(|&e| e as u32).collect(), c.clone()))
        .collect()
}

fn add_scaled(f: &mut Naive, g: &Naive, c: &Q, shift: &[u32]) {
    for (m, d) in g {
        let key: Vec<u32> = m.iter().zip(shift).map(|(a, b)| a + b).collect();
        let v = f.entry(key.clone()).or_insert_with(Q::zero);
        *v += c * d;
        if v.is_zero() {
            f.remove(&key);
        }
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Full reduction of `f` by `g`, looping until no term is reducible.
fn naive_reduce(f: &Naive, g: &[Naive], ord: &NaiveOrder) -> Naive {
    let mut f = f.clone();
    let leads: Vec<(Vec<u32>, Q)> = g.iter().map(|p| ord.lead(p).unwrap()).collect();
    'again: loop {
        let mut terms: Vec<(Vec<u32>, Q)> = f.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        for (m, c) in terms {
            for (k, (lm, lc)) in leads.iter().enumerate() {
                if divides(lm, &m) {
                    let shift: Vec<u32> = m.iter().zip(lm).map(|(a, b)| a - b).collect();
                    add_scaled(&mut f, &g[k], &(-(c / lc)), &shift);
                    continue 'again;
                }
            }
        }
        return f;
    }
}

fn s_poly(f: &Naive, g: &Naive, ord: &NaiveOrder) -> Naive {
    let (lf, cf) = ord.lead(f).unwrap();
    let (lg, cg) = ord.lead(g).unwrap();
    let lcm: Vec<u32> = lf.iter().zip(&lg).map(|(a, b)| *a.max(b)).collect();
    let mut s = Naive::new();
    let sf: Vec<u32> = lcm.iter().zip(&lf).map(|(a, b)| a - b).collect();
    let sg: Vec<u32> = lcm.iter().zip(&lg).map(|(a, b)| a - b).collect();
    add_scaled(&mut s, f, &(Q::one() / cf), &sf);
    add_scaled(&mut s, g, &(-(Q::one() / cg)), &sg);
    s
}

/// Textbook Buchberger without criteria, then minimized, reduced, made
/// monic and sorted by increasing leading monomial.
pub fn naive_groebner(gens: &[Naive], ord: &NaiveOrder) -> Vec<Naive> {
    let mut g: Vec<Naive> = gens.iter().filter(|p| !p.is_empty()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len())
        .flat_map(|i| (0..i).map(move |j| (j, i)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let r = naive_reduce(&s_poly(&g[i], &g[j], ord), &g, ord);
        if !r.is_empty() {
            let k = g.len();
            g.push(r);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // Drop elements whose leading monomial another element's divides.
    let leads: Vec<Vec<u32>> = g.iter().map(|p| ord.lead(p).unwrap().0).collect();
    let mut keep: Vec<Naive> = Vec::new();
    let mut kept_leads: Vec<Vec<u32>> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let redundant = leads
            .iter()
            .enumerate()
            .any(|(j, l)| j != i && divides(l, &leads[i]) && (l != &leads[i] || j < i));
        if !redundant {
            keep.push(p.clone());
            kept_leads.push(leads[i].clone());
        }
    }
    let mut out: Vec<Naive> = (0..keep.len())
        .map(|i| {
            let others: Vec<Naive> = keep
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let (lm, lc) = ord.lead(&keep[i]).unwrap();
            let mut tail = keep[i].clone();
            tail.remove(&lm);
            let mut r = naive_reduce(&tail, &others, ord);
            r.insert(lm, lc.clone());
            r.into_iter().map(|(m, c)| (m, c / lc.clone())).collect()
        })
        .collect();
    out.sort_by(|a, b| ord.cmp(&ord.lead(a).unwrap().0, &ord.lead(b).unwrap().0));
    out
}

/// A random homogeneous quadratic polynomial with coefficients in {±1, ±2}.
pub fn random_quadric<R: Rng>(rng: &mut R, ring: &Arc<Ring>, terms: usize) -> Polynomial<Q> {
    let n = ring.dim();
    let mut monos: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    monos.shuffle(rng);
    let mut p = Polynomial::zero(ring);
    for &(i, j) in monos.iter().take(terms) {
        let c = *[-2i64, -1, 1, 2].choose(rng).unwrap();
        let m = &Polynomial::var(ring, i) * &Polynomial::var(ring, j);
        p = &p + &m.scale(&q(c));
    }
    p
}

/// `u - v` for two coprime degree-two monomials.
pub fn random_coprime_binomial<R: Rng>(rng: &mut R, ring: &Arc<Ring>) -> Polynomial<Q> {
    let n = ring.dim();
    loop {
        let pick = |rng: &mut R| {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            (i, j)
        };
        let (a, b) = pick(rng);
        let (c, d) = pick(rng);
        if [a, b].iter().any(|x| [c, d].contains(x)) {
            continue;
        }
        let v = |i| Polynomial::<Q>::var(ring, i);
        return &(&v(a) * &v(b)) - &(&v(c) * &v(d));
    }
}
