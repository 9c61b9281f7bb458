//! Buchberger's algorithm with the normal selection strategy and the
//! Gebauer–Möller installation of the coprime and chain criteria.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{
    reduce_terms, sorted_terms, sub_mul, to_polynomial, Monomial, MonomialOrder, Polynomial, Ring,
    Terms,
};

static SPAIR_LIMIT: AtomicUsize = AtomicUsize::new(0);

/// Caps the number of S-pairs a single Buchberger run may reduce.
/// `None` removes the cap.
pub fn set_spair_limit(limit: Option<usize>) {
    SPAIR_LIMIT.store(limit.unwrap_or(0), AtomicOrdering::Relaxed);
}

pub fn spair_limit() -> Option<usize> {
    match SPAIR_LIMIT.load(AtomicOrdering::Relaxed) {
        0 => None,
        n => Some(n),
    }
}

/// A Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<Ring>,
    order: MonomialOrder,
    elements: Vec<Polynomial<F>>,
    leading: Vec<Monomial>,
    sorted: Vec<Terms<F>>,
    reduced: bool,
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.elements == other.elements
    }
}

impl<F: Field> Eq for GroebnerBasis<F> {}

impl<F: Field> GroebnerBasis<F> {
    /// Wraps polynomials that are already known to form a Gröbner basis.
    pub(crate) fn from_elements(
        ring: &Arc<Ring>,
        order: &MonomialOrder,
        elements: Vec<Polynomial<F>>,
        reduced: bool,
    ) -> Self {
        let sorted: Vec<Terms<F>> = elements.iter().map(|p| sorted_terms(p, order)).collect();
        let leading = sorted.iter().map(|t| t[0].0.clone()).collect();
        GroebnerBasis {
            ring: ring.clone(),
            order: order.clone(),
            elements,
            leading,
            sorted,
            reduced,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    /// Largest total degree of an element (0 for the zero ideal).
    pub fn max_degree(&self) -> u32 {
        self.elements
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.leading.iter().any(|m| m.is_one())
    }

    /// Normal form of `f`.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let refs: Vec<&[(Monomial, F)]> = self.sorted.iter().map(|t| t.as_slice()).collect();
        let (rem, _) = reduce_terms(sorted_terms(f, &self.order), &refs, &self.order, None);
        to_polynomial(&self.ring, rem)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// True when some leading monomial divides `m`.
    pub fn leading_ideal_contains(&self, m: &Monomial) -> bool {
        self.leading.iter().any(|l| l.divides(m))
    }

    /// Re-checks Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let refs: Vec<&[(Monomial, F)]> = self.sorted.iter().map(|t| t.as_slice()).collect();
        for i in 0..self.sorted.len() {
            for j in (i + 1)..self.sorted.len() {
                let s = s_polynomial(&self.sorted[i], &self.sorted[j], &self.order);
                let (rem, _) = reduce_terms(s, &refs, &self.order, None);
                if !rem.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Checks the reducedness conditions: monic leading coefficients and no
    /// monomial of an element divisible by another element's leading monomial.
    pub fn check_reduced(&self) -> bool {
        self.sorted.iter().enumerate().all(|(i, t)| {
            t[0].1 == F::one()
                && t.iter().all(|(m, _)| {
                    self.leading
                        .iter()
                        .enumerate()
                        .all(|(j, l)| j == i || !l.divides(m))
                })
        })
    }
}

/// `S(f, g)` for monic, order-sorted `f` and `g`.
fn s_polynomial<F: Field>(
    f: &[(Monomial, F)],
    g: &[(Monomial, F)],
    ord: &MonomialOrder,
) -> Terms<F> {
    let lcm = f[0].0.lcm(&g[0].0);
    let mf = lcm.div(&f[0].0).expect("lcm");
    let mg = lcm.div(&g[0].0).expect("lcm");
    let cf = f[0].1.inv();
    let cg = g[0].1.inv();
    let scaled_f: Terms<F> = f[1..]
        .iter()
        .map(|(m, c)| (m.mul(&mf), c.mul_ref(&cf)))
        .collect();
    sub_mul(&scaled_f, &cg, &mg, &g[1..], ord)
}

fn make_monic<F: Field>(mut t: Terms<F>) -> Terms<F> {
    let inv = t[0].1.inv();
    if inv != F::one() {
        for (_, c) in &mut t {
            *c = c.mul_ref(&inv);
        }
    }
    t
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine<'a, F: Field> {
    ord: &'a MonomialOrder,
    polys: Vec<Terms<F>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<'a, F: Field> Engine<'a, F> {
    fn lm(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    fn active_refs(&self) -> Vec<&[(Monomial, F)]> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p.as_slice())
            .collect()
    }

    fn reduce(&self, p: Terms<F>) -> Terms<F> {
        let refs = self.active_refs();
        reduce_terms(p, &refs, self.ord, None).0
    }

    /// Adds a new monic basis element and updates the pair set.
    fn insert(&mut self, h: Terms<F>) {
        let t = self.polys.len();
        let h_lm = h[0].0.clone();
        self.polys.push(h);
        self.active.push(false);

        let mut candidates: VecDeque<(usize, Monomial)> = (0..t)
            .filter(|&i| self.active[i])
            .map(|i| (i, self.lm(i).lcm(&h_lm)))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((i, l)) = candidates.pop_front() {
            let coprime = self.lm(i).is_coprime(&h_lm);
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|(_, l2)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((i, l));
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|(i, _)| !self.lm(*i).is_coprime(&h_lm))
            .map(|(i, lcm)| Pair { i, j: t, lcm })
            .collect();

        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !h_lm.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i][0].0.lcm(&h_lm);
            let lj = polys[p.j][0].0.lcm(&h_lm);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(fresh);

        for g in 0..t {
            if self.active[g] && h_lm.divides(&self.polys[g][0].0) {
                self.active[g] = false;
            }
        }
        self.active[t] = true;
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        let ord = self.ord;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                ord.cmp(&a.lcm, &b.lcm)
                    .then(a.j.cmp(&b.j))
                    .then(a.i.cmp(&b.i))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `ord`.
///
/// The output is sorted by increasing leading monomial and every element is
/// monic, so it is a canonical form of the ideal.
pub fn buchberger<F: Field>(
    ring: &Arc<Ring>,
    gens: &[Polynomial<F>],
    ord: &MonomialOrder,
) -> Result<GroebnerBasis<F>> {
    if ord.nvars() != ring.dim() {
        return Err(Error::DimensionMismatch {
            expected: ring.dim(),
            found: ord.nvars(),
        });
    }
    for g in gens {
        if !Ring::same(g.ring(), ring) {
            return Err(Error::RingMismatch);
        }
    }
    let limit = spair_limit();
    let mut engine = Engine {
        ord,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };

    let mut input: Vec<Terms<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| sorted_terms(g, ord))
        .collect();
    input.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));
    for g in input {
        let r = engine.reduce(g);
        if !r.is_empty() {
            engine.insert(make_monic(r));
        }
    }

    let mut processed = 0usize;
    while let Some(pair) = engine.pop_pair() {
        processed += 1;
        if let Some(limit) = limit {
            if processed > limit {
                return Err(Error::SpairLimit { limit });
            }
        }
        let s = s_polynomial(&engine.polys[pair.i], &engine.polys[pair.j], ord);
        let r = engine.reduce(s);
        if !r.is_empty() {
            engine.insert(make_monic(r));
        }
    }

    // The active elements form a minimal basis; inter-reduce the tails.
    let minimal: Vec<Terms<F>> = engine
        .polys
        .into_iter()
        .zip(engine.active)
        .filter(|(_, a)| *a)
        .map(|(p, _)| p)
        .collect();
    let mut reduced: Vec<Terms<F>> = Vec::with_capacity(minimal.len());
    for (k, p) in minimal.iter().enumerate() {
        let others: Vec<&[(Monomial, F)]> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, q)| q.as_slice())
            .collect();
        let head = p[0].clone();
        let (tail, _) = reduce_terms(p[1..].to_vec(), &others, ord, None);
        let mut r = Vec::with_capacity(tail.len() + 1);
        r.push(head);
        r.extend(tail);
        reduced.push(r);
    }
    reduced.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));
    let elements: Vec<Polynomial<F>> = reduced
        .iter()
        .map(|t| {
            debug_assert!(!t[0].1.is_zero());
            to_polynomial(ring, t.clone())
        })
        .collect();
    Ok(GroebnerBasis {
        ring: ring.clone(),
        order: ord.clone(),
        leading: reduced.iter().map(|t| t[0].0.clone()).collect(),
        sorted: reduced,
        elements,
        reduced: true,
    })
}
