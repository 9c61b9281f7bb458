//! Multivariate division with respect to a monomial order.
//!
//! Internally polynomials are handled as term vectors sorted decreasingly by
//! the active order. Reduction always rewrites the largest reducible term
//! first and uses the first divisor (in list order) whose leading monomial
//! divides it, so results are deterministic.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

pub(crate) type Terms<F> = Vec<(Monomial, F)>;

/// Terms of `p` sorted decreasingly by `ord`.
pub(crate) fn sorted_terms<F: Field>(p: &Polynomial<F>, ord: &MonomialOrder) -> Terms<F> {
    let mut t = p.terms().to_vec();
    t.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    t
}

pub(crate) fn to_polynomial<F: Field>(ring: &Arc<Ring>, mut terms: Terms<F>) -> Polynomial<F> {
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    Polynomial::from_sorted_terms(ring, terms)
}

/// `a - c * m * b`, all sorted decreasingly by `ord`.
pub(crate) fn sub_mul<F: Field>(
    a: &[(Monomial, F)],
    c: &F,
    m: &Monomial,
    b: &[(Monomial, F)],
    ord: &MonomialOrder,
) -> Terms<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut shifted: Option<Monomial> = None;
    while i < a.len() && j < b.len() {
        let mb = shifted.get_or_insert_with(|| b[j].0.mul(m));
        match ord.cmp(&a[i].0, mb) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let mb = shifted.take().expect("set above");
                out.push((mb, -c.mul_ref(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = a[i].1.sub_ref(&c.mul_ref(&b[j].1));
                if !v.is_zero() {
                    out.push((a[i].0.clone(), v));
                }
                shifted = None;
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    for (k, (mb, cb)) in b[j..].iter().enumerate() {
        let mono = if k == 0 {
            shifted.take().unwrap_or_else(|| mb.mul(m))
        } else {
            mb.mul(m)
        };
        out.push((mono, -c.mul_ref(cb)));
    }
    out
}

/// Fully reduces `p` (sorted) by `divisors` (sorted, nonzero).
///
/// Returns the remainder (sorted) and whether any rewriting happened. When
/// `cofactors` is given, the quotient of each divisor is accumulated there as
/// unsorted term lists.
pub(crate) fn reduce_terms<F: Field>(
    mut p: Terms<F>,
    divisors: &[&[(Monomial, F)]],
    ord: &MonomialOrder,
    mut cofactors: Option<&mut Vec<Terms<F>>>,
) -> (Terms<F>, bool) {
    let mut rem: Terms<F> = Vec::new();
    let mut reduced = false;
    let mut start = 0;
    while start < p.len() {
        let (lm, lc) = &p[start];
        let hit = divisors
            .iter()
            .enumerate()
            .find(|(_, d)| d[0].0.divides(lm));
        match hit {
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
            Some((k, d)) => {
                reduced = true;
                let c = lc.div_ref(&d[0].1);
                let m = lm.div(&d[0].0).expect("divides");
                if let Some(cf) = cofactors.as_deref_mut() {
                    cf[k].push((m.clone(), c.clone()));
                }
                p = sub_mul(&p[start + 1..], &c, &m, &d[1..], ord);
                start = 0;
            }
        }
    }
    (rem, reduced)
}

/// Result of [`reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction<F: Field> {
    pub remainder: Polynomial<F>,
    /// Whether at least one rewriting step happened.
    pub reduced: bool,
}

/// Result of [`reduce_with_cofactors`]: `f = sum cofactors[i] * divisors[i] + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division<F: Field> {
    pub remainder: Polynomial<F>,
    pub cofactors: Vec<Polynomial<F>>,
}

fn prepare<F: Field>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    ord: &MonomialOrder,
) -> Result<Vec<Terms<F>>> {
    if f.ring().dim() != ord.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ord.nvars(),
            found: f.ring().dim(),
        });
    }
    divisors
        .iter()
        .map(|d| {
            if d.is_zero() {
                return Err(Error::ZeroPolynomial("reduce"));
            }
            if !Ring::same(d.ring(), f.ring()) {
                return Err(Error::RingMismatch);
            }
            Ok(sorted_terms(d, ord))
        })
        .collect()
}

/// Multivariate division of `f` by `divisors`.
///
/// No monomial of the remainder is divisible by a divisor's leading monomial.
pub fn reduce<F: Field>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    ord: &MonomialOrder,
) -> Result<Reduction<F>> {
    let ds = prepare(f, divisors, ord)?;
    let refs: Vec<&[(Monomial, F)]> = ds.iter().map(|d| d.as_slice()).collect();
    let (rem, reduced) = reduce_terms(sorted_terms(f, ord), &refs, ord, None);
    Ok(Reduction {
        remainder: to_polynomial(f.ring(), rem),
        reduced,
    })
}

/// Like [`reduce`], also returning the quotients.
pub fn reduce_with_cofactors<F: Field>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    ord: &MonomialOrder,
) -> Result<Division<F>> {
    let ds = prepare(f, divisors, ord)?;
    let refs: Vec<&[(Monomial, F)]> = ds.iter().map(|d| d.as_slice()).collect();
    let mut cf: Vec<Terms<F>> = vec![Vec::new(); ds.len()];
    let (rem, _) = reduce_terms(sorted_terms(f, ord), &refs, ord, Some(&mut cf));
    Ok(Division {
        remainder: to_polynomial(f.ring(), rem),
        cofactors: cf
            .into_iter()
            .map(|t| Polynomial::from_terms(f.ring(), t))
            .collect(),
    })
}
