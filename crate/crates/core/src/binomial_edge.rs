//! Binomial edge ideals `J_G ⊂ K[x_1..x_n, y_1..y_n]` and the linear-quotient
//! and filtration structure of their quotients.

use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::Graph;
use crate::groebner::{
    colon_by_variable, colon_general, has_linear_quotients, ideal_equal, is_quadratic_gb,
    IdealHandle,
};
use crate::koszul::{Filtration, LinearIdeal, QuotientRing};
use crate::poly::{MonomialOrder, Polynomial, Ring};

/// A graph with its edge ring, binomial edge ideal and the two standard orders.
#[derive(Clone)]
pub struct EdgeRingContext<F: Field> {
    graph: Graph,
    ring: Arc<Ring>,
    ideal: IdealHandle<F>,
    revlex: MonomialOrder,
    lex: MonomialOrder,
}

pub fn build_context<F: Field>(graph: &Graph) -> Result<EdgeRingContext<F>> {
    let n = graph.n();
    if n == 0 {
        return Err(Error::Hypothesis("graph has no vertices".into()));
    }
    let names = (1..=n)
        .map(|i| format!("x{i}"))
        .chain((1..=n).map(|i| format!("y{i}")));
    let ring = Ring::new(names)?;
    let x = |i: usize| Polynomial::<F>::var(&ring, i - 1);
    let y = |i: usize| Polynomial::<F>::var(&ring, n + i - 1);
    let gens = graph
        .edges()
        .into_iter()
        .map(|(i, j)| &(&x(i) * &y(j)) - &(&x(j) * &y(i)))
        .collect();
    let ideal = IdealHandle::new(&ring, gens)?;
    let revlex = MonomialOrder::revlex((n..2 * n).chain(0..n).collect());
    let lex = MonomialOrder::lex((0..2 * n).collect());
    Ok(EdgeRingContext {
        graph: graph.clone(),
        ring,
        ideal,
        revlex,
        lex,
    })
}

/// Result of [`EdgeRingContext::colon_x_sequence`].
#[derive(Clone, Debug)]
pub struct XColon<F: Field> {
    pub i: usize,
    /// `(J_G, x_n, ..., x_{i+1}) : x_i` computed by elimination.
    pub computed: IdealHandle<F>,
    /// The combinatorial description, present when the labeling is closed.
    pub formula: Option<IdealHandle<F>>,
    /// Whether the two sides agree; `None` without a formula.
    pub certified: Option<bool>,
}

/// Result of [`EdgeRingContext::casetwo_colon`].
#[derive(Clone, Debug)]
pub struct CaseTwoColon<F: Field> {
    pub k: usize,
    pub ell: usize,
    pub i: usize,
    pub lhs: IdealHandle<F>,
    pub rhs: IdealHandle<F>,
    pub equal: bool,
}

/// Result of [`EdgeRingContext::c_universal_necessary`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CUniversal<F: Field> {
    pub holds: bool,
    /// `(i, j, k)` and `x_j y_k - x_k y_j ∈ (J_G : x_i) \ J_G`.
    pub witness: Option<(usize, usize, usize, Polynomial<F>)>,
    /// The exhaustive check over all variable subsets, run for `n ≤ 3`.
    pub full_check: Option<bool>,
}

impl<F: Field> EdgeRingContext<F> {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn ideal(&self) -> &IdealHandle<F> {
        &self.ideal
    }

    /// revlex with `y_1 > ... > y_n > x_1 > ... > x_n`.
    pub fn revlex(&self) -> &MonomialOrder {
        &self.revlex
    }

    /// lex with `x_1 > ... > x_n > y_1 > ... > y_n`.
    pub fn lex(&self) -> &MonomialOrder {
        &self.lex
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// `x_i`, 1-based.
    pub fn x(&self, i: usize) -> Polynomial<F> {
        Polynomial::var(&self.ring, i - 1)
    }

    /// `y_i`, 1-based.
    pub fn y(&self, i: usize) -> Polynomial<F> {
        Polynomial::var(&self.ring, self.n() + i - 1)
    }

    fn all_vars(&self) -> Vec<Polynomial<F>> {
        (0..self.ring.dim())
            .map(|v| Polynomial::var(&self.ring, v))
            .collect()
    }

    fn xs(&self, range: impl Iterator<Item = usize>) -> Vec<Polynomial<F>> {
        range.map(|i| self.x(i)).collect()
    }

    fn ys(&self, range: impl Iterator<Item = usize>) -> Vec<Polynomial<F>> {
        range.map(|i| self.y(i)).collect()
    }

    /// `J_G` plus the given extra generators.
    pub fn with(&self, extra: Vec<Polynomial<F>>) -> Result<IdealHandle<F>> {
        self.ideal.extend(extra)
    }

    fn require_closed(&self) -> Result<()> {
        match self.graph.closedness_violation() {
            None => Ok(()),
            Some((i, j, k)) => Err(Error::NotClosed { i, j, k }),
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            Err(Error::VertexOutOfRange {
                vertex: i,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// `(is_closed, J_G has a quadratic reduced basis for the revlex order)`.
    pub fn closed_iff_quadratic(&self) -> Result<(bool, bool)> {
        Ok((
            self.graph.is_closed_labeling(),
            is_quadratic_gb(&self.ideal, &self.revlex)?,
        ))
    }

    /// The colon `(J_G, x_n, ..., x_{i+1}) : x_i`, certified against
    /// `(J_G, x_n, ..., x_{i+1}, y_j : j ∈ N^>(i))` when the labeling is closed.
    pub fn colon_x_sequence(&self, i: usize) -> Result<XColon<F>> {
        self.check_index(i)?;
        let n = self.n();
        let base = self.with(self.xs(i + 1..=n))?;
        let computed = colon_general(&base, &self.x(i))?;
        let formula = if self.graph.is_closed_labeling() {
            let above = self.graph.neighbor_intervals(i)?.above;
            Some(base.extend(self.ys(above.into_iter()))?)
        } else {
            None
        };
        let certified = match &formula {
            Some(f) => Some(ideal_equal(&computed, f, &self.revlex)?),
            None => None,
        };
        Ok(XColon {
            i,
            computed,
            formula,
            certified,
        })
    }

    /// True iff every colon `(J_G, x_n, ..., x_{i+1}) : x_i` is generated by
    /// linear forms modulo `J_G`.
    pub fn has_linear_quotients_x(&self) -> Result<bool> {
        let seq: Vec<usize> = (0..self.n()).rev().collect();
        has_linear_quotients(&self.ideal, &seq)
    }

    /// `ℓ_k = max N^>(k)` and `i_k = min N^<(k + 1)`, when both sets are
    /// nonempty intervals of the expected shape.
    fn ell_and_i(&self, k: usize) -> Result<(usize, usize)> {
        let nb = self.graph.neighbor_intervals(k)?;
        let ell = match (nb.above.first(), nb.ell) {
            (Some(&a), Some(l)) if a == k + 1 && nb.above_is_interval => l,
            _ => {
                return Err(Error::Hypothesis(format!(
                    "N^>({k}) is not an interval starting at {}",
                    k + 1
                )))
            }
        };
        let next = self.graph.neighbor_intervals(k + 1)?;
        let i = match (next.below.first(), next.below.last()) {
            (Some(&i), Some(&top)) if top == k && next.below_is_interval => i,
            _ => {
                return Err(Error::Hypothesis(format!(
                    "N^<({}) is not an interval ending at {k}",
                    k + 1
                )))
            }
        };
        Ok((ell, i))
    }

    /// `(J_G, x_n..x_{k+1}, y_{k+2}..y_ℓ) : y_{k+1} = (J_G, x_n..x_i, y_{k+2}..y_ℓ)`
    /// with `ℓ = ℓ_k`, `i = i_k`; both sides computed and compared.
    pub fn casetwo_colon(&self, k: usize) -> Result<CaseTwoColon<F>> {
        self.require_closed()?;
        if k == 0 || k >= self.n() {
            return Err(Error::Hypothesis(format!(
                "k = {k} outside 1..{}",
                self.n()
            )));
        }
        let (ell, i) = self.ell_and_i(k)?;
        let n = self.n();
        let mut gens = self.xs(k + 1..=n);
        gens.extend(self.ys(k + 2..=ell));
        let lhs = colon_general(&self.with(gens)?, &self.y(k + 1))?;
        let mut gens = self.xs(i..=n);
        gens.extend(self.ys(k + 2..=ell));
        let rhs = self.with(gens)?;
        let equal = ideal_equal(&lhs, &rhs, &self.revlex)?;
        Ok(CaseTwoColon {
            k,
            ell,
            i,
            lhs,
            rhs,
            equal,
        })
    }

    /// Whether `y_s` is regular modulo `A = (J_G, x_n..x_{i_k}, y_{s+1}..y_{ℓ_k})`,
    /// i.e. `A : y_s = A`.
    pub fn casetwo_regular(&self, k: usize, s: usize) -> Result<bool> {
        self.require_closed()?;
        if k == 0 || k >= self.n() {
            return Err(Error::Hypothesis(format!(
                "k = {k} outside 1..{}",
                self.n()
            )));
        }
        let (ell, i) = self.ell_and_i(k)?;
        if s < k + 2 || s > ell {
            return Err(Error::Hypothesis(format!(
                "s = {s} outside {}..={ell}",
                k + 2
            )));
        }
        let mut gens = self.xs(i..=self.n());
        gens.extend(self.ys(s + 1..=ell));
        let a = self.with(gens)?;
        let colon = colon_general(&a, &self.y(s))?;
        ideal_equal(&colon, &a, &self.revlex)
    }

    /// A Koszul filtration of `S/J_G` made of ideals `(x_n..x_a, y_b..y_c)`.
    ///
    /// Starting from the maximal ideal, each member's witness drops its
    /// smallest y, or its smallest x once no y is left, and the predicted
    /// colon is added as a member too. The closure contains the three
    /// explicit families (full x block with a y tail, x tails, and the
    /// `(x_n..x_i, y_s..y_l)` chains) plus the members those chains' colons
    /// need when `l` is far above `k`.
    pub fn build_koszul_filtration(&self) -> Result<Filtration<F>> {
        self.require_closed()?;
        let n = self.n();
        let host = QuotientRing::new(self.ideal.clone(), self.revlex.clone())?;
        let mut f = Filtration::new(&host);
        // (a, b, c) stands for (x_n..x_a, y_b..y_c); b > c means no y.
        let norm = |a: usize, b: usize, c: usize| if b > c { (a, n + 1, n) } else { (a, b, c) };
        let mut ids: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
        let mut queue = VecDeque::new();
        let mut hints = Vec::new();
        let mut visit = |key: (usize, usize, usize),
                         ids: &mut BTreeMap<_, _>,
                         queue: &mut VecDeque<_>|
         -> Result<usize> {
            if let Some(&id) = ids.get(&key) {
                return Ok(id);
            }
            let (a, b, c) = key;
            let mut forms = self.xs((a..=n).rev());
            forms.extend(self.ys(b..=c));
            let id = f.insert(LinearIdeal::new(&host, forms)?)?;
            ids.insert(key, id);
            queue.push_back(key);
            Ok(id)
        };
        visit(norm(1, 1, n), &mut ids, &mut queue)?;
        while let Some(key @ (a, b, c)) = queue.pop_front() {
            let (j, colon) = if b <= c {
                let low = self.graph.neighbors(b).into_iter().filter(|&v| v < b).min();
                let a2 = low.map_or(a, |v| v.min(a));
                (norm(a, b + 1, c), norm(a2, b + 1, c))
            } else if a <= n {
                let high = self.graph.neighbors(a).into_iter().filter(|&v| v > a).max();
                (norm(a + 1, n + 1, n), norm(a + 1, a + 1, high.unwrap_or(a)))
            } else {
                continue;
            };
            let m = ids[&key];
            let j = visit(j, &mut ids, &mut queue)?;
            visit(colon, &mut ids, &mut queue)?;
            hints.push((m, j));
        }
        for (m, j) in hints {
            f.set_hint(m, j);
        }
        Ok(f)
    }

    /// Checks that every `J_G : x_i` is `J_G` plus the variables it contains,
    /// reporting the standard non-edge binomial on failure.
    pub fn c_universal_necessary(&self) -> Result<CUniversal<F>> {
        let n = self.n();
        let mut witness = None;
        'outer: for i in 1..=n {
            let nb = self.graph.neighbors(i);
            for (a, &j) in nb.iter().enumerate() {
                for &k in &nb[a + 1..] {
                    if !self.graph.has_edge(j, k) {
                        let b = &(&self.x(j) * &self.y(k)) - &(&self.x(k) * &self.y(j));
                        witness = Some((i, j, k, b));
                        break 'outer;
                    }
                }
            }
        }
        let mut holds = true;
        for i in 1..=n {
            let colon = colon_by_variable(&self.ideal, i - 1)?;
            if !self.generated_by_variables_mod(&self.ideal, &colon)? {
                holds = false;
                break;
            }
        }
        if let Some((i, _, _, b)) = &witness {
            // The witness must certify the failure on its own.
            let colon = colon_by_variable(&self.ideal, i - 1)?;
            debug_assert!(colon.contains(b)? && !self.ideal.contains(b)?);
            holds = false;
        }
        let full_check = if n <= 3 {
            Some(self.c_universal_full()?)
        } else {
            None
        };
        Ok(CUniversal {
            holds,
            witness,
            full_check,
        })
    }

    /// `c = base + (variables of c)`.
    fn generated_by_variables_mod(
        &self,
        base: &IdealHandle<F>,
        c: &IdealHandle<F>,
    ) -> Result<bool> {
        let vars: Vec<Polynomial<F>> = self
            .all_vars()
            .into_iter()
            .filter(|v| c.contains(v).unwrap_or(false))
            .collect();
        ideal_equal(c, &base.extend(vars)?, &self.ring.default_order())
    }

    /// Every nonempty variable subset `U` has some `v ∈ U` with
    /// `(J_G + U \ v) : v` generated by variables modulo `J_G`.
    fn c_universal_full(&self) -> Result<bool> {
        let m = self.ring.dim();
        let vars = self.all_vars();
        for mask in 1u32..(1 << m) {
            let members: Vec<usize> = (0..m).filter(|b| mask >> b & 1 == 1).collect();
            let mut found = false;
            for &v in &members {
                let rest = members
                    .iter()
                    .filter(|&&u| u != v)
                    .map(|&u| vars[u].clone())
                    .collect();
                let base = self.with(rest)?;
                let colon = colon_by_variable(&base, v)?;
                if self.generated_by_variables_mod(&self.ideal, &colon)? {
                    found = true;
                    break;
                }
            }
            if !found {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
