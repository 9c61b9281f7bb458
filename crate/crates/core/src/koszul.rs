//! Quotient rings, ideals generated by linear forms, and a verifier for
//! Koszul filtrations.
//!
//! All degree-one bookkeeping is exact linear algebra on coefficient vectors:
//! for a homogeneous defining ideal `I`, the degree-one part of `I + (forms)`
//! is the span of the forms together with the linear forms already in `I`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{
    colon_by_linear_form, colon_general, degree_one_part, ideal_equal, nonlinear_generator_degree,
    IdealHandle,
};
use crate::linalg::{rref, Rref};
use crate::poly::{MonomialOrder, Polynomial, Ring};

/// Exhaustive subset minimality is only attempted up to this many members.
pub const MINIMALITY_EXHAUSTIVE_BOUND: usize = 12;

/// `S / I` for a homogeneous ideal `I`, with a working order used for keys.
pub struct QuotientRing<F: Field> {
    ring: Arc<Ring>,
    defining: IdealHandle<F>,
    order: MonomialOrder,
    linear_part: Vec<Vec<F>>,
}

impl<F: Field> QuotientRing<F> {
    pub fn new(defining: IdealHandle<F>, order: MonomialOrder) -> Result<Arc<Self>> {
        if !defining.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if order.priority().len() != defining.ring().dim() {
            return Err(Error::DimensionMismatch {
                expected: defining.ring().dim(),
                found: order.priority().len(),
            });
        }
        let linear_part = degree_one_part(&defining)?
            .iter()
            .map(|f| f.linear_coefficients())
            .collect::<Result<_>>()?;
        Ok(Arc::new(QuotientRing {
            ring: defining.ring().clone(),
            defining,
            order,
            linear_part,
        }))
    }

    /// The polynomial ring itself, with its default order.
    pub fn polynomial_ring(ring: &Arc<Ring>) -> Arc<Self> {
        Self::new(IdealHandle::zero(ring), ring.default_order()).expect("zero ideal is homogeneous")
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn defining_ideal(&self) -> &IdealHandle<F> {
        &self.defining
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Dimension of the degree-one part of the maximal ideal.
    pub fn embedding_dim(&self) -> usize {
        self.ring.dim() - self.linear_part.len()
    }

    fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other)
            || (Ring::same(&self.ring, &other.ring)
                && self.order == other.order
                && self.defining.generators() == other.defining.generators())
    }
}

/// An ideal of a quotient ring generated by linear forms.
#[derive(Clone)]
pub struct LinearIdeal<F: Field> {
    host: Arc<QuotientRing<F>>,
    generators: Vec<Polynomial<F>>,
    ideal: IdealHandle<F>,
    key: Vec<Polynomial<F>>,
    space: Rref<F>,
}

impl<F: Field> LinearIdeal<F> {
    pub fn new(host: &Arc<QuotientRing<F>>, forms: Vec<Polynomial<F>>) -> Result<Self> {
        let ring = host.ring();
        let mut rows = host.linear_part.clone();
        let mut generators = Vec::new();
        for f in forms {
            if !Ring::same(f.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if f.is_zero() {
                continue;
            }
            if !f.is_linear_form() {
                return Err(Error::NotLinear(f.to_string()));
            }
            rows.push(f.linear_coefficients()?);
            generators.push(f);
        }
        let ideal = host.defining.extend(generators.iter().cloned())?;
        let key = ideal.groebner(&host.order)?.elements().to_vec();
        Ok(LinearIdeal {
            host: host.clone(),
            generators,
            ideal,
            key,
            space: rref(rows, ring.dim()),
        })
    }

    pub fn zero(host: &Arc<QuotientRing<F>>) -> Self {
        Self::new(host, Vec::new()).expect("no generators")
    }

    pub fn maximal(host: &Arc<QuotientRing<F>>) -> Self {
        Self::new(
            host,
            (0..host.ring().dim())
                .map(|v| Polynomial::var(host.ring(), v))
                .collect(),
        )
        .expect("variables are linear")
    }

    pub fn host(&self) -> &Arc<QuotientRing<F>> {
        &self.host
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    /// `I + (generators)` in the ambient polynomial ring.
    pub fn ideal(&self) -> &IdealHandle<F> {
        &self.ideal
    }

    /// The reduced Gröbner basis of [`LinearIdeal::ideal`] under the host order.
    pub fn key(&self) -> &[Polynomial<F>] {
        &self.key
    }

    /// Dimension of the degree-one component in the quotient.
    pub fn dim(&self) -> usize {
        self.space.rank() - self.host.linear_part.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_maximal(&self) -> bool {
        self.space.rank() == self.host.ring().dim()
    }

    fn check_host(&self, other: &Self) -> Result<()> {
        if self.host.same_as(&other.host) {
            Ok(())
        } else {
            Err(Error::HostMismatch)
        }
    }

    /// True if `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check_host(other)?;
        Ok(other.space.rows.iter().all(|row| self.space.spans(row)))
    }

    /// Whether `self / j` is cyclic, with a generating linear form when it is nonzero.
    pub fn cyclic_over(&self, j: &Self) -> Result<Cyclic<F>> {
        if !self.contains(j)? {
            return Err(Error::NotContained);
        }
        match self.space.rank() - j.space.rank() {
            0 => Ok(Cyclic::Equal),
            1 => {
                let pick = self
                    .generators
                    .iter()
                    .find(|g| !j.space.spans(&g.linear_coefficients().expect("linear")))
                    .cloned()
                    .unwrap_or_else(|| {
                        let row = self
                            .space
                            .rows
                            .iter()
                            .find(|r| !j.space.spans(r))
                            .expect("rank difference one");
                        Polynomial::from_linear_coefficients(self.host.ring(), row)
                    });
                Ok(Cyclic::Generator(pick))
            }
            d => Ok(Cyclic::NotCyclic(d)),
        }
    }

    /// `self : form` in the ambient ring, with its linear description when it has one.
    pub fn colon(&self, form: &Polynomial<F>) -> Result<Colon<F>> {
        let ideal = colon_by_linear_form(&self.ideal, form)?;
        let nonlinear_degree = nonlinear_generator_degree(&self.host.defining, &ideal)?;
        let linear = match nonlinear_degree {
            None => Some(LinearIdeal::new(&self.host, degree_one_part(&ideal)?)?),
            Some(_) => None,
        };
        Ok(Colon {
            ideal,
            linear,
            nonlinear_degree,
        })
    }
}

impl<F: Field> fmt::Debug for LinearIdeal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearIdeal{self}")
    }
}

impl<F: Field> fmt::Display for LinearIdeal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Outcome of [`LinearIdeal::cyclic_over`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cyclic<F: Field> {
    Equal,
    Generator(Polynomial<F>),
    /// The quotient needs this many generators.
    NotCyclic(usize),
}

/// Outcome of [`LinearIdeal::colon`].
#[derive(Clone, Debug)]
pub struct Colon<F: Field> {
    pub ideal: IdealHandle<F>,
    pub linear: Option<LinearIdeal<F>>,
    pub nonlinear_degree: Option<u32>,
}

/// Witness that a member `I` is reached from `J` by one linear form with colon `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate<F: Field> {
    pub member: usize,
    pub smaller: usize,
    pub form: Polynomial<F>,
    pub colon: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub member: Option<usize>,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct VerifyReport<F: Field> {
    pub ok: bool,
    pub certificates: Vec<Certificate<F>>,
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityReport {
    pub removable: Vec<usize>,
    /// `None` when the family is too large for the exhaustive check.
    pub fully_minimal: Option<bool>,
}

/// A finite family of linear ideals of one quotient ring, deduplicated by key.
#[derive(Clone)]
pub struct Filtration<F: Field> {
    host: Arc<QuotientRing<F>>,
    members: Vec<LinearIdeal<F>>,
    index: HashMap<Vec<Polynomial<F>>, usize>,
    hints: BTreeMap<usize, usize>,
}

impl<F: Field> Filtration<F> {
    pub fn new(host: &Arc<QuotientRing<F>>) -> Self {
        Filtration {
            host: host.clone(),
            members: Vec::new(),
            index: HashMap::new(),
            hints: BTreeMap::new(),
        }
    }

    pub fn host(&self) -> &Arc<QuotientRing<F>> {
        &self.host
    }

    pub fn members(&self) -> &[LinearIdeal<F>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Adds a member unless an equal ideal is present; returns its index.
    pub fn insert(&mut self, member: LinearIdeal<F>) -> Result<usize> {
        if !self.host.same_as(&member.host) {
            return Err(Error::HostMismatch);
        }
        if let Some(&i) = self.index.get(&member.key) {
            return Ok(i);
        }
        let i = self.members.len();
        self.index.insert(member.key.clone(), i);
        self.members.push(member);
        Ok(i)
    }

    pub fn insert_forms(&mut self, forms: Vec<Polynomial<F>>) -> Result<usize> {
        let member = LinearIdeal::new(&self.host, forms)?;
        self.insert(member)
    }

    pub fn position(&self, member: &LinearIdeal<F>) -> Option<usize> {
        self.index.get(member.key()).copied()
    }

    /// Suggests `smaller` as the first `J` to try for `member`.
    pub fn set_hint(&mut self, member: usize, smaller: usize) {
        self.hints.insert(member, smaller);
    }

    /// The family with the listed members removed; hints are dropped.
    pub fn without(&self, drop: &[usize]) -> Self {
        let mut out = Filtration::new(&self.host);
        for (i, m) in self.members.iter().enumerate() {
            if !drop.contains(&i) {
                out.insert(m.clone()).expect("same host");
            }
        }
        out
    }

    /// Members (other than `i`) that could serve as `J` for member `i`, hint first.
    fn candidates(&self, i: usize) -> Vec<usize> {
        let target = self.members[i].dim();
        let mut c: Vec<usize> = (0..self.members.len())
            .filter(|&j| j != i && self.members[j].dim() + 1 == target)
            .collect();
        c.sort_by(|&a, &b| self.members[a].key.cmp(&self.members[b].key));
        if let Some(&h) = self.hints.get(&i) {
            if let Some(p) = c.iter().position(|&j| j == h) {
                c.remove(p);
                c.insert(0, h);
            }
        }
        c
    }

    /// Tries `J = members[j]` for `members[i]`; `Err` carries a failure reason.
    fn try_witness(
        &self,
        i: usize,
        j: usize,
    ) -> Result<std::result::Result<Certificate<F>, String>> {
        let (big, small) = (&self.members[i], &self.members[j]);
        if !big.contains(small)? {
            return Ok(Err("no member J with I/J cyclic".into()));
        }
        let form = match big.cyclic_over(small)? {
            Cyclic::Generator(f) => f,
            _ => return Ok(Err("no member J with I/J cyclic".into())),
        };
        let colon = small.colon(&form)?;
        match (colon.linear, colon.nonlinear_degree) {
            (Some(lin), _) => match self.index.get(&lin.key) {
                Some(&c) => Ok(Ok(Certificate {
                    member: i,
                    smaller: j,
                    form,
                    colon: c,
                })),
                None => Ok(Err(format!("colon {lin} is not a member"))),
            },
            (None, d) => Ok(Err(format!(
                "colon not generated by linear forms (degree {})",
                d.unwrap_or(0)
            ))),
        }
    }

    fn certify_member(&self, i: usize) -> Result<std::result::Result<Certificate<F>, Failure>> {
        let mut reason = "no member J with I/J cyclic".to_string();
        for j in self.candidates(i) {
            match self.try_witness(i, j)? {
                Ok(cert) => return Ok(Ok(cert)),
                Err(r) => {
                    if r != "no member J with I/J cyclic" {
                        reason = r;
                    }
                }
            }
        }
        Ok(Err(Failure {
            member: Some(i),
            reason,
        }))
    }

    /// Checks the Koszul filtration axioms, recording one witness per nonzero member.
    pub fn verify(&self) -> Result<VerifyReport<F>> {
        let mut failures = Vec::new();
        if !self.members.iter().any(|m| m.is_zero()) {
            failures.push(Failure {
                member: None,
                reason: "zero ideal absent".into(),
            });
        }
        if !self.members.iter().any(|m| m.is_maximal()) {
            failures.push(Failure {
                member: None,
                reason: "maximal ideal absent".into(),
            });
        }
        let todo: Vec<usize> = (0..self.members.len())
            .filter(|&i| !self.members[i].is_zero())
            .collect();
        let results: Vec<_> = todo.par_iter().map(|&i| self.certify_member(i)).collect();
        let mut certificates = Vec::new();
        for r in results {
            match r? {
                Ok(c) => certificates.push(c),
                Err(f) => failures.push(f),
            }
        }
        Ok(VerifyReport {
            ok: failures.is_empty(),
            certificates,
            failures,
        })
    }

    /// Recomputes a certificate with the general colon instead of the fast path.
    pub fn recheck(&self, cert: &Certificate<F>) -> Result<bool> {
        let big = &self.members[cert.member];
        let small = &self.members[cert.smaller];
        if !big.contains(small)? {
            return Ok(false);
        }
        let ord = self.host.order();
        let sum = small.ideal().extend([cert.form.clone()])?;
        if !ideal_equal(big.ideal(), &sum, ord)? {
            return Ok(false);
        }
        let colon = colon_general(small.ideal(), &cert.form)?;
        ideal_equal(&colon, self.members[cert.colon].ideal(), ord)
    }

    /// True iff the members form a chain `0 ⊂ I_1 ⊂ ... ⊂ m` with one-dimensional
    /// steps and the family verifies.
    pub fn is_flag(&self) -> Result<bool> {
        let mut by_dim: Vec<&LinearIdeal<F>> = self.members.iter().collect();
        by_dim.sort_by_key(|m| m.dim());
        let top = self.host.embedding_dim();
        if by_dim.len() != top + 1 || by_dim.iter().enumerate().any(|(d, m)| m.dim() != d) {
            return Ok(false);
        }
        for w in by_dim.windows(2) {
            if !w[1].contains(w[0])? {
                return Ok(false);
            }
        }
        Ok(self.verify()?.ok)
    }

    /// Members of both families; hints of `self` are kept.
    pub fn union(&self, other: &Self) -> Result<Self> {
        if !self.host.same_as(&other.host) {
            return Err(Error::HostMismatch);
        }
        let mut out = self.clone();
        for m in &other.members {
            out.insert(m.clone())?;
        }
        Ok(out)
    }

    /// For every nonzero member, all `(J, C)` pairs that certify it.
    fn witness_table(&self) -> Result<Vec<Vec<(usize, usize)>>> {
        let all: Vec<usize> = (0..self.members.len()).collect();
        let rows: Vec<Result<Vec<(usize, usize)>>> = all
            .par_iter()
            .map(|&i| {
                if self.members[i].is_zero() {
                    return Ok(Vec::new());
                }
                let mut out = Vec::new();
                for j in self.candidates(i) {
                    if let Ok(c) = self.try_witness(i, j)? {
                        out.push((j, c.colon));
                    }
                }
                Ok(out)
            })
            .collect();
        rows.into_iter().collect()
    }

    /// Which single members can be dropped, and (for small families) whether
    /// no proper subfamily is itself a Koszul filtration.
    pub fn minimality_probe(&self) -> Result<MinimalityReport> {
        let table = self.witness_table()?;
        let n = self.members.len();
        let subset_ok = |keep: &dyn Fn(usize) -> bool| -> bool {
            let has = |p: &dyn Fn(&LinearIdeal<F>) -> bool| {
                (0..n).any(|i| keep(i) && p(&self.members[i]))
            };
            if !has(&|m| m.is_zero()) || !has(&|m| m.is_maximal()) {
                return false;
            }
            (0..n)
                .filter(|&i| keep(i) && !self.members[i].is_zero())
                .all(|i| table[i].iter().any(|&(j, c)| keep(j) && keep(c)))
        };
        let removable = (0..n).filter(|&r| subset_ok(&|i| i != r)).collect();
        let fully_minimal = (n <= MINIMALITY_EXHAUSTIVE_BOUND).then(|| {
            let full = (1u32 << n) - 1;
            !(0..full).any(|mask| subset_ok(&|i| mask >> i & 1 == 1))
        });
        Ok(MinimalityReport {
            removable,
            fully_minimal,
        })
    }
}

impl<F: Field> fmt::Debug for Filtration<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.members).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::poly::parse_polynomial;

    type Q = Rational;

    fn forms(ring: &Arc<Ring>, s: &[&str]) -> Vec<Polynomial<Q>> {
        s.iter()
            .map(|f| parse_polynomial(ring, f).unwrap())
            .collect()
    }

    #[test]
    fn trivial_filtration_of_a_line() {
        let r = Ring::indexed("x", 1);
        let host = QuotientRing::<Q>::polynomial_ring(&r);
        let mut f = Filtration::new(&host);
        f.insert(LinearIdeal::zero(&host)).unwrap();
        f.insert(LinearIdeal::maximal(&host)).unwrap();
        let rep = f.verify().unwrap();
        assert!(rep.ok, "{:?}", rep.failures);
        assert!(f.recheck(&rep.certificates[0]).unwrap());
        assert!(f.is_flag().unwrap());
        assert_eq!(f.minimality_probe().unwrap().fully_minimal, Some(true));
        let no_max = f.without(&[1]);
        let rep = no_max.verify().unwrap();
        assert!(!rep.ok);
        assert_eq!(rep.failures[0].reason, "maximal ideal absent");
    }

    #[test]
    fn keys_and_containment() {
        let r = Ring::indexed("x", 3);
        let idef = IdealHandle::new(&r, forms(&r, &["x1*x3 - x2*x3"])).unwrap();
        let host = QuotientRing::new(idef, r.default_order()).unwrap();
        let l = LinearIdeal::new(&host, forms(&r, &["x1 - x2"])).unwrap();
        assert_eq!(l.dim(), 1);
        let expected = crate::groebner::buchberger(
            &r,
            &forms(&r, &["x1*x3 - x2*x3", "x1 - x2"]),
            &r.default_order(),
        )
        .unwrap();
        assert_eq!(l.key(), expected.elements());
        let m = LinearIdeal::maximal(&host);
        assert!(m.contains(&l).unwrap());
        assert!(l.contains(&LinearIdeal::zero(&host)).unwrap());
        assert!(LinearIdeal::new(&host, forms(&r, &["x1^2"])).is_err());
        let other = QuotientRing::<Q>::polynomial_ring(&r);
        assert_eq!(
            m.contains(&LinearIdeal::zero(&other)).unwrap_err(),
            Error::HostMismatch
        );
    }

    #[test]
    fn cyclicity() {
        let r = Ring::indexed("x", 2);
        let host = QuotientRing::<Q>::polynomial_ring(&r);
        let zero = LinearIdeal::zero(&host);
        let both = LinearIdeal::new(&host, forms(&r, &["x1", "x2"])).unwrap();
        assert_eq!(both.cyclic_over(&zero).unwrap(), Cyclic::NotCyclic(2));
        assert_eq!(both.cyclic_over(&both).unwrap(), Cyclic::Equal);
        let one = LinearIdeal::new(&host, forms(&r, &["x2"])).unwrap();
        assert_eq!(
            both.cyclic_over(&one).unwrap(),
            Cyclic::Generator(forms(&r, &["x1"])[0].clone())
        );
        assert_eq!(one.cyclic_over(&both).unwrap_err(), Error::NotContained);
    }

    #[test]
    fn flag_in_two_variables() {
        let r = Ring::indexed("x", 2);
        let host = QuotientRing::<Q>::polynomial_ring(&r);
        let mut f = Filtration::new(&host);
        for g in [vec![], vec!["x1"], vec!["x1", "x2"]] {
            f.insert_forms(forms(&r, &g)).unwrap();
        }
        assert!(f.is_flag().unwrap());
        let g = f.union(&f).unwrap();
        assert_eq!(g.len(), 3);
        let mut bigger = f.clone();
        bigger.insert_forms(forms(&r, &["x2"])).unwrap();
        let probe = bigger.minimality_probe().unwrap();
        assert_eq!(probe.removable, vec![1, 3]);
        assert_eq!(probe.fully_minimal, Some(false));
        assert!(!bigger.is_flag().unwrap());
    }
}
