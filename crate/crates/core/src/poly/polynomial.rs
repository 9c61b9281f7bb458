use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Ring};

/// A polynomial with exact coefficients.
///
/// Terms are kept strictly decreasing in the lexicographic order of exponent
/// vectors (variable-index order), with no zero coefficients, so structural
/// equality is polynomial equality. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial<F> {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: F) -> Self {
        Self::from_terms(ring, [(ring.one_monomial(), c)])
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, F::one())
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.dim(), i), F::one())],
        }
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: F) -> Self {
        Self::from_terms(ring, [(m, c)])
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms<I>(ring: &Arc<Ring>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, F)>,
    {
        let mut raw: Vec<(Monomial, F)> = terms.into_iter().collect();
        debug_assert!(raw.iter().all(|(m, _)| m.nvars() == ring.dim()));
        raw.sort_by(|a, b| b.0.cmp(&a.0));
        let mut terms: Vec<(Monomial, F)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((last, acc)) if *last == m => *acc = acc.add_ref(&c),
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Takes terms already sorted by decreasing exponent vector and nonzero.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<(Monomial, F)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Nonzero and homogeneous of degree one.
    pub fn is_linear_form(&self) -> bool {
        !self.is_zero() && self.terms.iter().all(|(m, _)| m.degree() == 1)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    /// The term with the largest monomial under `ord`.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(F, Monomial)> {
        if let Some((m, _)) = self.terms.first() {
            if m.nvars() != ord.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: ord.nvars(),
                    found: m.nvars(),
                });
            }
        }
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
            .map(|(m, c)| (c.clone(), m.clone()))
            .ok_or(Error::ZeroPolynomial("leading_term"))
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Result<Monomial> {
        self.leading_term(ord).map(|(_, m)| m)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul_ref(c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        // Multiplying by a monomial preserves the lexicographic term order.
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.clone()))
                .collect(),
        }
    }

    /// Divides by the leading coefficient under `ord`.
    pub fn monic(&self, ord: &MonomialOrder) -> Self {
        match self.leading_term(ord) {
            Ok((c, _)) => self.scale(&c.inv()),
            Err(_) => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces variable `var` by `replacement`.
    pub fn substitute(&self, var: usize, replacement: &Polynomial<F>) -> Self {
        let mut powers: Vec<Polynomial<F>> = vec![Self::one(&self.ring)];
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            while powers.len() <= e {
                let next = powers.last().expect("nonempty") * replacement;
                powers.push(next);
            }
            let mut rest = m.clone();
            rest.set_exponent(var, 0);
            out = out + powers[e].mul_monomial(&rest).scale(c);
        }
        out
    }

    /// Re-expresses the polynomial in `target`, matching variables by name.
    pub fn map_to(&self, target: &Arc<Ring>) -> Result<Self> {
        if Ring::same(&self.ring, target) {
            return Ok(Polynomial {
                ring: target.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut map = Vec::with_capacity(self.ring.dim());
        for name in self.ring.names() {
            map.push(target.index_of(name).ok());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; target.dim()];
            for v in m.support() {
                match map[v] {
                    Some(t) => exps[t] = m.exponent(v),
                    None => return Err(Error::UnknownVariable(self.ring.name(v).to_string())),
                }
            }
            terms.push((Monomial::from_exponents(&exps), c.clone()));
        }
        Ok(Self::from_terms(target, terms))
    }

    /// Exact quotient `self / divisor`; fails unless the division leaves no remainder.
    pub fn exact_div(&self, divisor: &Polynomial<F>) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial("exact_div"));
        }
        let ord = self.ring.default_order();
        let red = crate::poly::division::reduce_with_cofactors(
            self,
            std::slice::from_ref(divisor),
            &ord,
        )?;
        if !red.remainder.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(red.cofactors.into_iter().next().expect("one divisor"))
    }

    /// Coefficient vector of a linear form with respect to the variables.
    pub fn linear_coefficients(&self) -> Result<Vec<F>> {
        let mut out = vec![F::zero(); self.ring.dim()];
        for (m, c) in &self.terms {
            if m.degree() != 1 {
                return Err(Error::NotLinear(self.to_string()));
            }
            let v = m.support().next().expect("degree one");
            out[v] = c.clone();
        }
        Ok(out)
    }

    /// The linear form `sum coeffs[i] * v_i`.
    pub fn from_linear_coefficients(ring: &Arc<Ring>, coeffs: &[F]) -> Self {
        Self::from_terms(
            ring,
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Monomial::var(ring.dim(), i), c.clone())),
        )
    }

    /// True if the variable with index `v` occurs.
    pub fn involves(&self, v: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(v) > 0)
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(
            Ring::same(&self.ring, &other.ring),
            "polynomial arithmetic across rings {:?} and {:?}",
            self.ring,
            other.ring
        );
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        self.assert_same_ring(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &F| if negate_other { -c.clone() } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), sign(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        ca.sub_ref(cb)
                    } else {
                        ca.add_ref(cb)
                    };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && Ring::same(&self.ring, &other.ring)
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Hash for Polynomial<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<F: Field> PartialOrd for Polynomial<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> Ord for Polynomial<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.cmp(&other.terms)
    }
}

impl<F: Field> Add<&Polynomial<F>> for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.merge(rhs, false)
    }
}

impl<F: Field> Sub<&Polynomial<F>> for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.merge(rhs, true)
    }
}

impl<F: Field> Add for Polynomial<F> {
    type Output = Polynomial<F>;

    fn add(self, rhs: Polynomial<F>) -> Polynomial<F> {
        self.merge(&rhs, false)
    }
}

impl<F: Field> Sub for Polynomial<F> {
    type Output = Polynomial<F>;

    fn sub(self, rhs: Polynomial<F>) -> Polynomial<F> {
        self.merge(&rhs, true)
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

impl<F: Field> Mul<&Polynomial<F>> for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.assert_same_ring(rhs);
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                terms.push((ma.mul(mb), ca.mul_ref(cb)));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }
}

impl<F: Field> Mul for Polynomial<F> {
    type Output = Polynomial<F>;

    fn mul(self, rhs: Polynomial<F>) -> Polynomial<F> {
        &self * &rhs
    }
}

fn write_term<F: Field>(
    f: &mut fmt::Formatter<'_>,
    ring: &Ring,
    m: &Monomial,
    c: &F,
    first: bool,
) -> fmt::Result {
    let negative = c.is_negative();
    let abs = if negative { -c.clone() } else { c.clone() };
    match (first, negative) {
        (true, true) => write!(f, "-")?,
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
        (true, false) => {}
    }
    if m.is_one() {
        return write!(f, "{abs}");
    }
    let mut sep = "";
    if !abs.is_one() {
        write!(f, "{abs}")?;
        sep = "*";
    }
    for v in m.support() {
        write!(f, "{sep}{}", ring.name(v))?;
        let e = m.exponent(v);
        if e > 1 {
            write!(f, "^{e}")?;
        }
        sep = "*";
    }
    Ok(())
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            write_term(f, &self.ring, m, c, k == 0)?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
