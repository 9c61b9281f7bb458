use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{GroebnerBasis, IdealHandle};
use crate::linalg::{kernel_basis, rref};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

fn same_ring<F: Field>(a: &IdealHandle<F>, b: &IdealHandle<F>) -> Result<()> {
    if Ring::same(a.ring(), b.ring()) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Remainder of `f` modulo the reduced basis of `ideal`; zero iff `f` is in the ideal.
pub fn normal_form<F: Field>(
    f: &Polynomial<F>,
    ideal: &IdealHandle<F>,
    ord: &MonomialOrder,
) -> Result<Polynomial<F>> {
    if !Ring::same(f.ring(), ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    Ok(ideal.groebner(ord)?.normal_form(f))
}

/// Ideal equality via identity of reduced bases.
pub fn ideal_equal<F: Field>(
    a: &IdealHandle<F>,
    b: &IdealHandle<F>,
    ord: &MonomialOrder,
) -> Result<bool> {
    same_ring(a, b)?;
    Ok(a.groebner(ord)?.elements() == b.groebner(ord)?.elements())
}

/// The monomial ideal generated by the leading monomials of the reduced basis.
pub fn initial_ideal<F: Field>(
    ideal: &IdealHandle<F>,
    ord: &MonomialOrder,
) -> Result<IdealHandle<F>> {
    let gb = ideal.groebner(ord)?;
    let gens = gb
        .leading_monomials()
        .iter()
        .map(|m| Polynomial::monomial(ideal.ring(), m.clone(), F::one()))
        .collect();
    IdealHandle::new(ideal.ring(), gens)
}

/// True iff every element of the reduced basis has degree at most two.
pub fn is_quadratic_gb<F: Field>(ideal: &IdealHandle<F>, ord: &MonomialOrder) -> Result<bool> {
    Ok(ideal.groebner(ord)?.max_degree() <= 2)
}

/// From a reduced revlex basis of a homogeneous ideal `I`, the basis of
/// `I : x` where `x` is the least variable: elements divisible by `x` are
/// divided by it once, the others are kept.
pub fn colon_by_last_variable<F: Field>(gb: &GroebnerBasis<F>) -> Result<GroebnerBasis<F>> {
    let ord = gb.order();
    if !ord.is_revlex() {
        return Err(Error::NotRevlex);
    }
    if !gb.elements().iter().all(|g| g.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let last = ord.least_variable().ok_or(Error::NotRevlex)?;
    let ring = gb.ring();
    let x = Monomial::var(ring.dim(), last);
    let elements = gb
        .elements()
        .iter()
        .map(|g| {
            if g.terms().iter().all(|(m, _)| m.exponent(last) > 0) {
                Polynomial::from_terms(
                    ring,
                    g.terms()
                        .iter()
                        .map(|(m, c)| (m.div(&x).expect("divisible"), c.clone())),
                )
            } else {
                g.clone()
            }
        })
        .collect();
    Ok(GroebnerBasis::from_elements(ring, ord, elements, false))
}

/// Same as [`colon_by_last_variable`], insisting that `var` is the least variable.
pub fn colon_by_named_last_variable<F: Field>(
    gb: &GroebnerBasis<F>,
    var: usize,
) -> Result<GroebnerBasis<F>> {
    if !gb.order().is_revlex() {
        return Err(Error::NotRevlex);
    }
    if gb.order().least_variable() != Some(var) {
        return Err(Error::WrongLastVariable(gb.ring().name(var).to_string()));
    }
    colon_by_last_variable(gb)
}

/// `I : l` for a homogeneous ideal and a linear form, through a linear change
/// of coordinates that turns `l` into a variable followed by
/// [`colon_by_last_variable`].
pub fn colon_by_linear_form<F: Field>(
    ideal: &IdealHandle<F>,
    form: &Polynomial<F>,
) -> Result<IdealHandle<F>> {
    if !form.is_linear_form() {
        return Err(Error::NotLinear(form.to_string()));
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let ring = ideal.ring();
    let coeffs = form.linear_coefficients()?;
    let pivot = coeffs
        .iter()
        .rposition(|c| !c.is_zero())
        .expect("nonzero form");
    let is_variable = coeffs.iter().filter(|c| !c.is_zero()).count() == 1;
    let ord = ring.default_order().with_least(pivot);

    if is_variable {
        let gb = ideal.groebner(&ord)?;
        let colon = colon_by_last_variable(&gb)?;
        return IdealHandle::new(ring, colon.elements().to_vec());
    }

    // v_p -> (v_p - sum_{k != p} c_k v_k) / c_p sends the form to v_p.
    let cp_inv = coeffs[pivot].inv();
    let mut forward = Polynomial::var(ring, pivot).scale(&cp_inv);
    for (k, c) in coeffs.iter().enumerate() {
        if k != pivot && !c.is_zero() {
            forward = &forward - &Polynomial::var(ring, k).scale(&c.mul_ref(&cp_inv));
        }
    }
    let moved: Vec<Polynomial<F>> = ideal
        .generators()
        .iter()
        .map(|g| g.substitute(pivot, &forward))
        .collect();
    let moved = IdealHandle::new(ring, moved)?;
    let colon = colon_by_last_variable(&*moved.groebner(&ord)?)?;
    let back: Vec<Polynomial<F>> = colon
        .elements()
        .iter()
        .map(|g| g.substitute(pivot, form))
        .collect();
    IdealHandle::new(ring, back)
}

/// `I : v` for the variable with index `v` of a homogeneous ideal.
pub fn colon_by_variable<F: Field>(ideal: &IdealHandle<F>, v: usize) -> Result<IdealHandle<F>> {
    let x = Polynomial::var(ideal.ring(), v);
    colon_by_linear_form(ideal, &x)
}

/// `I ∩ J`, eliminating an auxiliary variable `t` from `t I + (1 - t) J`.
pub fn intersect<F: Field>(a: &IdealHandle<F>, b: &IdealHandle<F>) -> Result<IdealHandle<F>> {
    same_ring(a, b)?;
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(IdealHandle::zero(ring));
    }
    let t_name = ring.fresh_name("t");
    let ext = ring.with_front(&[t_name.as_str()])?;
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(&t * &g.map_to(&ext)?);
    }
    for g in b.generators() {
        gens.push(&one_minus_t * &g.map_to(&ext)?);
    }
    let big = IdealHandle::new(&ext, gens)?;
    let out = eliminate(&big, &[0])?;
    // `eliminate` returns a ring with the same names as `ring`; re-home it.
    let gens = out
        .generators()
        .iter()
        .map(|g| g.map_to(ring))
        .collect::<Result<Vec<_>>>()?;
    IdealHandle::new(ring, gens)
}

/// `I : f`, computed as `(I ∩ (f)) / f`.
pub fn colon_general<F: Field>(
    ideal: &IdealHandle<F>,
    f: &Polynomial<F>,
) -> Result<IdealHandle<F>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("colon_general"));
    }
    if !Ring::same(f.ring(), ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = ideal.ring();
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    if ideal.is_zero() {
        return Ok(IdealHandle::zero(ring));
    }
    let principal = IdealHandle::new(ring, vec![f.clone()])?;
    let meet = intersect(ideal, &principal)?;
    let gens = meet
        .generators()
        .iter()
        .map(|g| g.exact_div(f))
        .collect::<Result<Vec<_>>>()?;
    IdealHandle::new(ring, gens)
}

/// `I : J`, the intersection of the colons by the generators of `J`.
pub fn colon_ideal<F: Field>(
    ideal: &IdealHandle<F>,
    by: &IdealHandle<F>,
) -> Result<IdealHandle<F>> {
    same_ring(ideal, by)?;
    let mut acc: Option<IdealHandle<F>> = None;
    for g in by.generators() {
        let c = colon_general(ideal, g)?;
        acc = Some(match acc {
            None => c,
            Some(prev) => intersect(&prev, &c)?,
        });
    }
    Ok(acc.unwrap_or_else(|| {
        IdealHandle::new(ideal.ring(), vec![Polynomial::one(ideal.ring())]).expect("same ring")
    }))
}

/// `I ∩ K[remaining variables]`, as an ideal of the subring.
pub fn eliminate<F: Field>(ideal: &IdealHandle<F>, block: &[usize]) -> Result<IdealHandle<F>> {
    let ring = ideal.ring();
    if block.is_empty() {
        return Ok(ideal.clone());
    }
    for &v in block {
        if v >= ring.dim() {
            return Err(Error::DimensionMismatch {
                expected: ring.dim(),
                found: v + 1,
            });
        }
    }
    let ord = MonomialOrder::elimination(block.to_vec(), &ring.default_order())?;
    let gb = ideal.groebner(&ord)?;
    let keep: Vec<usize> = (0..ring.dim()).filter(|v| !block.contains(v)).collect();
    let sub = Ring::new(keep.iter().map(|&v| ring.name(v).to_string()))?;
    let gens = gb
        .elements()
        .iter()
        .filter(|g| block.iter().all(|&v| !g.involves(v)))
        .map(|g| g.map_to(&sub))
        .collect::<Result<Vec<_>>>()?;
    // A subset of a reduced elimination basis is the reduced basis of the
    // elimination ideal for the restricted (default) order of the subring.
    let basis = GroebnerBasis::from_elements(&sub, &sub.default_order(), gens, true);
    Ok(IdealHandle::from_basis(basis))
}

/// The toric ideal of the monomial map `source_k -> images[k]`.
pub fn kernel_of_monomial_map<F: Field>(
    source: &Arc<Ring>,
    target: &Arc<Ring>,
    images: &[Monomial],
) -> Result<IdealHandle<F>> {
    if images.len() != source.dim() {
        return Err(Error::DimensionMismatch {
            expected: source.dim(),
            found: images.len(),
        });
    }
    if images.is_empty() {
        return Err(Error::Hypothesis("empty monomial map".into()));
    }
    for m in images {
        if m.nvars() != target.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim(),
                found: m.nvars(),
            });
        }
    }
    let names: Vec<String> = target
        .names()
        .iter()
        .chain(source.names())
        .cloned()
        .collect();
    let both = Ring::new(names)?;
    let nt = target.dim();
    let gens = images
        .iter()
        .enumerate()
        .map(|(k, m)| {
            let mut exps = vec![0u16; both.dim()];
            exps[..nt].copy_from_slice(m.exponents());
            &Polynomial::var(&both, nt + k)
                - &Polynomial::monomial(&both, Monomial::from_exponents(&exps), F::one())
        })
        .collect();
    let big = IdealHandle::new(&both, gens)?;
    let block: Vec<usize> = (0..nt).collect();
    let out = eliminate(&big, &block)?;
    let gens = out
        .generators()
        .iter()
        .map(|g| g.map_to(source))
        .collect::<Result<Vec<_>>>()?;
    let basis = GroebnerBasis::from_elements(source, &source.default_order(), gens, true);
    Ok(IdealHandle::from_basis(basis))
}

/// A basis (in reduced echelon form) of the linear forms contained in the ideal.
pub fn degree_one_part<F: Field>(ideal: &IdealHandle<F>) -> Result<Vec<Polynomial<F>>> {
    let ring = ideal.ring();
    let n = ring.dim();
    let gb = ideal.default_groebner()?;
    // Column k holds the coefficients of NF(v_k); a kernel vector a gives
    // NF(sum a_k v_k) = 0.
    let mut rows: BTreeMap<Monomial, Vec<F>> = BTreeMap::new();
    for k in 0..n {
        let nf = gb.normal_form(&Polynomial::var(ring, k));
        for (m, c) in nf.terms() {
            rows.entry(m.clone()).or_insert_with(|| vec![F::zero(); n])[k] = c.clone();
        }
    }
    let kernel = kernel_basis(rows.into_values().collect(), n);
    let canon = rref(kernel, n);
    Ok(canon
        .rows
        .iter()
        .map(|row| Polynomial::from_linear_coefficients(ring, row))
        .collect())
}

/// True iff `c = base + (linear forms of c)`; requires `base ⊆ c`.
pub fn is_linearly_generated_mod<F: Field>(
    base: &IdealHandle<F>,
    c: &IdealHandle<F>,
) -> Result<bool> {
    Ok(nonlinear_generator_degree(base, c)?.is_none())
}

/// `None` when `c` is generated modulo `base` by linear forms, otherwise the
/// smallest degree of a basis element of `c` outside `base + (linear part)`.
pub fn nonlinear_generator_degree<F: Field>(
    base: &IdealHandle<F>,
    c: &IdealHandle<F>,
) -> Result<Option<u32>> {
    same_ring(base, c)?;
    if !c.contains_ideal(base)? {
        return Err(Error::NotContained);
    }
    let forms = degree_one_part(c)?;
    let lin = base.extend(forms)?;
    let lin_gb = lin.default_groebner()?;
    let c_gb = c.default_groebner()?;
    Ok(c_gb
        .elements()
        .iter()
        .filter(|g| !lin_gb.contains(g))
        .filter_map(|g| g.degree())
        .min())
}

/// True iff each colon `(I, v_1, ..., v_{p-1}) : v_p` along the variable
/// sequence is generated by linear forms modulo `I`.
pub fn has_linear_quotients<F: Field>(ideal: &IdealHandle<F>, sequence: &[usize]) -> Result<bool> {
    let ring = ideal.ring();
    for (p, &v) in sequence.iter().enumerate() {
        if v >= ring.dim() {
            return Err(Error::DimensionMismatch {
                expected: ring.dim(),
                found: v + 1,
            });
        }
        let base = ideal.extend(sequence[..p].iter().map(|&u| Polynomial::var(ring, u)))?;
        if !is_linearly_generated_mod(ideal, &colon_by_variable(&base, v)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For a quadratic ideal and a revlex order, the ideal
/// `(I, x_{i+1}, ..., x_n, {x_j : j <= i, x_j x_i ∈ in(I)})`, where `x_1 > ... > x_n`
/// is the priority of `ord` and `i` a 1-based position in it.
pub fn variable_colon_formula<F: Field>(
    ideal: &IdealHandle<F>,
    ord: &MonomialOrder,
    i: usize,
) -> Result<IdealHandle<F>> {
    if !ord.is_revlex() {
        return Err(Error::NotRevlex);
    }
    let ring = ideal.ring();
    let prio = ord.priority();
    if i == 0 || i > prio.len() {
        return Err(Error::DimensionMismatch {
            expected: prio.len(),
            found: i,
        });
    }
    let gb = ideal.groebner(ord)?;
    let xi = Monomial::var(ring.dim(), prio[i - 1]);
    let mut extra: Vec<Polynomial<F>> = prio[i..]
        .iter()
        .map(|&v| Polynomial::var(ring, v))
        .collect();
    for &v in &prio[..i] {
        if gb.leading_ideal_contains(&xi.mul(&Monomial::var(ring.dim(), v))) {
            extra.push(Polynomial::var(ring, v));
        }
    }
    ideal.extend(extra)
}
