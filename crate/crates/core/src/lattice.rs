//! Finite posets, distributive lattices and join-meet (Hibi) ideals.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{colon_by_variable, colon_general, ideal_equal, IdealHandle};
use crate::koszul::{Filtration, LinearIdeal, QuotientRing};
use crate::poly::{is_identifier, MonomialOrder, Polynomial, Ring};

/// Default bound on the size of a poset turned into a lattice.
pub const POSET_BOUND: usize = 6;

/// Poset ideals are bitmasks, so lattices are capped at this many elements.
pub const LATTICE_BOUND: usize = 64;

/// A finite poset with named elements.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
}

fn closure(n: usize, relations: &[(usize, usize)]) -> Result<Vec<Vec<bool>>> {
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in relations {
        if a >= n || b >= n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: a.max(b) + 1,
            });
        }
        leq[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if leq[i][k] {
                let row = leq[k].clone();
                for (dst, &via) in leq[i].iter_mut().zip(&row) {
                    *dst |= via;
                }
            }
        }
    }
    Ok(leq)
}

fn check_names(names: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if !is_identifier(n) {
            return Err(Error::UnknownElement(n.clone()));
        }
        if index.insert(n.clone(), i).is_some() {
            return Err(Error::DuplicateVariable(n.clone()));
        }
    }
    Ok(index)
}

impl Poset {
    /// Builds the poset generated by `a < b` for each pair; cycles are rejected.
    pub fn new(names: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        check_names(&names)?;
        let leq = closure(names.len(), relations)?;
        for i in 0..names.len() {
            for j in 0..i {
                if leq[i][j] && leq[j][i] {
                    return Err(Error::Hypothesis(format!(
                        "cycle through {} and {}",
                        names[i], names[j]
                    )));
                }
            }
        }
        Ok(Poset { names, leq })
    }

    /// `p1 < p2 < ... < pm`.
    pub fn chain(m: usize, prefix: &str) -> Self {
        let names = (1..=m).map(|i| format!("{prefix}{i}")).collect();
        let rel: Vec<(usize, usize)> = (1..m).map(|i| (i - 1, i)).collect();
        Self::new(names, &rel).expect("valid chain")
    }

    pub fn antichain(m: usize, prefix: &str) -> Self {
        Self::new((1..=m).map(|i| format!("{prefix}{i}")).collect(), &[]).expect("valid antichain")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Cover pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && self.leq[a][b]
                    && !(0..n).any(|c| c != a && c != b && self.leq[a][c] && self.leq[c][b])
                {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// All down-sets as bitmasks, sorted by size and then mask.
    pub fn down_sets(&self) -> Vec<u64> {
        down_sets(&self.leq)
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", self.names[a], self.names[b]))
            .collect();
        write!(f, "Poset({:?}; {})", self.names, covers.join(", "))
    }
}

/// Linear extension: repeatedly take the minimal remaining element, ties by name.
fn linear_extension(leq: &[Vec<bool>], names: &[String]) -> Vec<usize> {
    let n = leq.len();
    let mut placed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let next = (0..n)
            .filter(|&x| !placed[x] && (0..n).all(|y| placed[y] || y == x || !leq[y][x]))
            .min_by(|&a, &b| names[a].cmp(&names[b]))
            .expect("acyclic order");
        placed[next] = true;
        out.push(next);
    }
    out
}

fn down_sets(leq: &[Vec<bool>]) -> Vec<u64> {
    let n = leq.len();
    let names: Vec<String> = (0..n).map(|i| format!("{i:03}")).collect();
    let ext = linear_extension(leq, &names);
    let below: Vec<u64> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| y != x && leq[y][x])
                .fold(0u64, |m, y| m | 1 << y)
        })
        .collect();
    let mut out = Vec::new();
    fn go(pos: usize, cur: u64, ext: &[usize], below: &[u64], out: &mut Vec<u64>) {
        if pos == ext.len() {
            out.push(cur);
            return;
        }
        let x = ext[pos];
        go(pos + 1, cur, ext, below, out);
        if below[x] & !cur == 0 {
            go(pos + 1, cur | 1 << x, ext, below, out);
        }
    }
    go(0, 0, &ext, &below, &mut out);
    out.sort_by_key(|&m| (m.count_ones(), m));
    out
}

/// A finite distributive lattice with precomputed meet and join tables.
#[derive(Clone, PartialEq, Eq)]
pub struct DistributiveLattice {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    source: Option<Poset>,
}

/// A down-set of a lattice, as a bitmask over element indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosetIdeal(pub u64);

impl PosetIdeal {
    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn elements(&self) -> Vec<usize> {
        (0..64).filter(|&i| self.contains(i)).collect()
    }

    pub fn is_subset(&self, other: &PosetIdeal) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn from_elements(elems: &[usize]) -> Self {
        PosetIdeal(elems.iter().fold(0, |m, &i| m | 1 << i))
    }
}

impl DistributiveLattice {
    /// Builds a lattice from an order table, checking the lattice axioms and
    /// distributivity exhaustively.
    pub fn from_order(names: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        check_names(&names)?;
        let n = names.len();
        if n == 0 {
            return Err(Error::NotLattice("empty".into()));
        }
        if n > LATTICE_BOUND {
            return Err(Error::SizeBound {
                size: n,
                bound: LATTICE_BOUND,
            });
        }
        let bound = |a: usize, b: usize, upper: bool| -> Result<usize> {
            let cands: Vec<usize> = (0..n)
                .filter(|&c| {
                    if upper {
                        leq[a][c] && leq[b][c]
                    } else {
                        leq[c][a] && leq[c][b]
                    }
                })
                .collect();
            cands
                .iter()
                .copied()
                .find(|&c| {
                    cands
                        .iter()
                        .all(|&d| if upper { leq[c][d] } else { leq[d][c] })
                })
                .ok_or_else(|| {
                    Error::NotLattice(format!(
                        "{} and {} have no {}",
                        names[a],
                        names[b],
                        if upper { "join" } else { "meet" }
                    ))
                })
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                meet[a][b] = bound(a, b, false)?;
                join[a][b] = bound(a, b, true)?;
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]] {
                        return Err(Error::NotLattice(format!(
                            "not distributive at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(DistributiveLattice {
            names,
            leq,
            meet,
            join,
            source: None,
        })
    }

    /// Builds a lattice from cover (or any generating) relations `a < b`.
    pub fn from_relations(names: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let p = Poset::new(names, relations)?;
        Self::from_order(p.names, p.leq)
    }

    /// The chain `c1 < ... < cm`.
    pub fn chain(m: usize) -> Self {
        let p = Poset::chain(m, "c");
        Self::from_order(p.names, p.leq).expect("chains are distributive")
    }

    /// The Boolean lattice of subsets of `{t1, .., tr}`.
    pub fn boolean(r: usize) -> Self {
        lattice_from_poset_bounded(&Poset::antichain(r, "t"), r).expect("within bound")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq[a][b] || self.leq[b][a]
    }

    pub fn bottom(&self) -> usize {
        (0..self.len())
            .find(|&a| (0..self.len()).all(|b| self.leq[a][b]))
            .expect("lattice")
    }

    pub fn top(&self) -> usize {
        (0..self.len())
            .find(|&a| (0..self.len()).all(|b| self.leq[b][a]))
            .expect("lattice")
    }

    /// The poset this lattice was built from, if any.
    pub fn source(&self) -> Option<&Poset> {
        self.source.as_ref()
    }

    /// The same elements with the order reversed.
    pub fn reverse(&self) -> Self {
        let n = self.len();
        let leq = (0..n)
            .map(|a| (0..n).map(|b| self.leq[b][a]).collect())
            .collect();
        DistributiveLattice {
            names: self.names.clone(),
            leq,
            meet: self.join.clone(),
            join: self.meet.clone(),
            source: None,
        }
    }

    /// The underlying order as a poset.
    pub fn as_poset(&self) -> Poset {
        Poset {
            names: self.names.clone(),
            leq: self.leq.clone(),
        }
    }

    /// Non-bottom elements that are not the join of two strictly smaller ones,
    /// with the induced order.
    pub fn join_irreducibles(&self) -> Poset {
        let n = self.len();
        let bot = self.bottom();
        let ji: Vec<usize> = (0..n)
            .filter(|&a| {
                a != bot
                    && !(0..n).any(|b| {
                        (0..n).any(|c| {
                            b != a
                                && c != a
                                && self.leq[b][a]
                                && self.leq[c][a]
                                && self.join[b][c] == a
                        })
                    })
            })
            .collect();
        Poset {
            names: ji.iter().map(|&a| self.names[a].clone()).collect(),
            leq: ji
                .iter()
                .map(|&a| ji.iter().map(|&b| self.leq[a][b]).collect())
                .collect(),
        }
    }

    /// Ascending linear extension, ties broken by name.
    pub fn linear_extension(&self) -> Vec<usize> {
        linear_extension(&self.leq, &self.names)
    }

    pub fn is_poset_ideal(&self, s: PosetIdeal) -> bool {
        (0..self.len())
            .all(|x| !s.contains(x) || (0..self.len()).all(|y| !self.leq[y][x] || s.contains(y)))
    }

    pub fn describe(&self, s: PosetIdeal) -> String {
        let parts: Vec<&str> = s.elements().into_iter().map(|i| self.name(i)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for DistributiveLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice{:?}", self.as_poset())
    }
}

/// Name of the lattice element for a down-set of `p`.
fn ideal_name(p: &Poset, mask: u64) -> String {
    if mask == 0 {
        return "empty".into();
    }
    let parts: Vec<&str> = (0..p.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| p.names[i].as_str())
        .collect();
    parts.join("_")
}

/// The lattice of down-sets of `p` under inclusion.
pub fn lattice_from_poset(p: &Poset) -> Result<DistributiveLattice> {
    lattice_from_poset_bounded(p, POSET_BOUND)
}

pub fn lattice_from_poset_bounded(p: &Poset, bound: usize) -> Result<DistributiveLattice> {
    if p.len() > bound {
        return Err(Error::SizeBound {
            size: p.len(),
            bound,
        });
    }
    let sets = p.down_sets();
    let names: Vec<String> = sets.iter().map(|&m| ideal_name(p, m)).collect();
    let leq = sets
        .iter()
        .map(|&a| sets.iter().map(|&b| a & !b == 0).collect())
        .collect();
    let mut l = DistributiveLattice::from_order(names, leq)?;
    l.source = Some(p.clone());
    Ok(l)
}

/// The polynomial ring with one variable per lattice element.
pub fn lattice_ring(l: &DistributiveLattice) -> Result<Arc<Ring>> {
    Ring::new(l.names.iter().cloned())
}

/// Generators `ab - (a∧b)(a∨b)` over incomparable pairs, in the given ring.
pub fn join_meet_ideal_in<F: Field>(
    l: &DistributiveLattice,
    ring: &Arc<Ring>,
) -> Result<IdealHandle<F>> {
    if ring.dim() != l.len() {
        return Err(Error::DimensionMismatch {
            expected: l.len(),
            found: ring.dim(),
        });
    }
    let v = |i: usize| Polynomial::<F>::var(ring, i);
    let mut gens = Vec::new();
    for a in 0..l.len() {
        for b in a + 1..l.len() {
            if !l.comparable(a, b) {
                gens.push(&(&v(a) * &v(b)) - &(&v(l.meet(a, b)) * &v(l.join(a, b))));
            }
        }
    }
    IdealHandle::new(ring, gens)
}

pub fn join_meet_ideal<F: Field>(l: &DistributiveLattice) -> Result<IdealHandle<F>> {
    join_meet_ideal_in(l, &lattice_ring(l)?)
}

/// The monomial ideal of products of incomparable pairs.
pub fn incomparable_products<F: Field>(
    l: &DistributiveLattice,
    ring: &Arc<Ring>,
) -> Result<IdealHandle<F>> {
    let v = |i: usize| Polynomial::<F>::var(ring, i);
    let mut gens = Vec::new();
    for a in 0..l.len() {
        for b in a + 1..l.len() {
            if !l.comparable(a, b) {
                gens.push(&v(a) * &v(b));
            }
        }
    }
    IdealHandle::new(ring, gens)
}

/// revlex in which larger lattice elements are smaller variables; with
/// `refine`, elements of that ideal come before all others.
pub fn hibi_order(l: &DistributiveLattice, refine: Option<PosetIdeal>) -> MonomialOrder {
    let ext = l.linear_extension();
    let priority = match refine {
        None => ext,
        Some(i) => {
            let (mut inside, outside): (Vec<usize>, Vec<usize>) =
                ext.into_iter().partition(|&x| i.contains(x));
            inside.extend(outside);
            inside
        }
    };
    MonomialOrder::revlex(priority)
}

/// All poset ideals of `l`, sorted by size and then bitmask.
pub fn poset_ideals(l: &DistributiveLattice) -> Vec<PosetIdeal> {
    down_sets(&l.leq).into_iter().map(PosetIdeal).collect()
}

/// `{b : b ≱ a}`.
pub fn cogenerated_ideal(l: &DistributiveLattice, a: usize) -> PosetIdeal {
    PosetIdeal(
        (0..l.len())
            .filter(|&b| !l.leq(a, b))
            .fold(0, |m, b| m | 1 << b),
    )
}

/// `{b : b ≯ a}`, which contains `a` itself.
pub fn cogenerated_ideal_literal(l: &DistributiveLattice, a: usize) -> PosetIdeal {
    PosetIdeal(
        (0..l.len())
            .filter(|&b| b == a || !l.leq(a, b))
            .fold(0, |m, b| m | 1 << b),
    )
}

/// A distributive lattice with its Hibi ring data.
#[derive(Clone)]
pub struct HibiRing<F: Field> {
    lattice: DistributiveLattice,
    ring: Arc<Ring>,
    ideal: IdealHandle<F>,
    host: Arc<QuotientRing<F>>,
}

/// Result of [`HibiRing::colon_cover`].
#[derive(Clone, Debug)]
pub struct CoverColon<F: Field> {
    pub a: usize,
    pub h: PosetIdeal,
    pub colon: IdealHandle<F>,
    pub expected: IdealHandle<F>,
    pub equal: bool,
}

/// Result of [`HibiRing::reduced_family_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedFamily {
    pub holds: bool,
    pub missing_cogenerated: Vec<usize>,
    pub unreachable: Vec<PosetIdeal>,
    /// Whether the induced filtration verifies; only computed when `holds`.
    pub verified: Option<bool>,
}

impl<F: Field> HibiRing<F> {
    pub fn new(lattice: &DistributiveLattice) -> Result<Self> {
        let ring = lattice_ring(lattice)?;
        let ideal = join_meet_ideal_in(lattice, &ring)?;
        let host = QuotientRing::new(ideal.clone(), hibi_order(lattice, None))?;
        Ok(HibiRing {
            lattice: lattice.clone(),
            ring,
            ideal,
            host,
        })
    }

    pub fn lattice(&self) -> &DistributiveLattice {
        &self.lattice
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn ideal(&self) -> &IdealHandle<F> {
        &self.ideal
    }

    pub fn host(&self) -> &Arc<QuotientRing<F>> {
        &self.host
    }

    fn vars(&self, s: PosetIdeal) -> Vec<Polynomial<F>> {
        s.elements()
            .into_iter()
            .map(|i| Polynomial::var(&self.ring, i))
            .collect()
    }

    /// `I_L + (variables of s)`.
    pub fn with_ideal(&self, s: PosetIdeal) -> Result<IdealHandle<F>> {
        self.ideal.extend(self.vars(s))
    }

    fn check_ideal(&self, s: PosetIdeal) -> Result<()> {
        if self.lattice.is_poset_ideal(s) {
            Ok(())
        } else {
            Err(Error::NotPosetIdeal(self.lattice.describe(s)))
        }
    }

    /// For poset ideals `I ⊂ J` with `J \ I = {a}`, computes `(I_L + I) : a`
    /// and compares it with `I_L + H` where `H = {b : b ≱ a}`. With `general`,
    /// the colon goes through elimination instead of the revlex shortcut.
    pub fn colon_cover(
        &self,
        i: PosetIdeal,
        j: PosetIdeal,
        general: bool,
    ) -> Result<CoverColon<F>> {
        self.colon_cover_with(i, j, general, cogenerated_ideal)
    }

    /// [`HibiRing::colon_cover`] with `H = {b : b ≯ a}` instead.
    pub fn colon_cover_literal(&self, i: PosetIdeal, j: PosetIdeal) -> Result<CoverColon<F>> {
        self.colon_cover_with(i, j, true, cogenerated_ideal_literal)
    }

    fn colon_cover_with(
        &self,
        i: PosetIdeal,
        j: PosetIdeal,
        general: bool,
        rule: fn(&DistributiveLattice, usize) -> PosetIdeal,
    ) -> Result<CoverColon<F>> {
        self.check_ideal(i)?;
        self.check_ideal(j)?;
        if !i.is_subset(&j) || j.len() != i.len() + 1 {
            return Err(Error::Hypothesis(format!(
                "{} is not a cover of {}",
                self.lattice.describe(j),
                self.lattice.describe(i)
            )));
        }
        let a = (j.0 & !i.0).trailing_zeros() as usize;
        let h = rule(&self.lattice, a);
        let base = self.with_ideal(i)?;
        let colon = if general {
            colon_general(&base, &Polynomial::var(&self.ring, a))?
        } else {
            colon_by_variable(&base, a)?
        };
        let expected = self.with_ideal(h)?;
        let equal = ideal_equal(&colon, &expected, &self.ring.default_order())?;
        Ok(CoverColon {
            a,
            h,
            colon,
            expected,
            equal,
        })
    }

    /// The family of the given poset ideals, each hinted to drop its last
    /// maximal element.
    pub fn filtration_of(&self, family: &[PosetIdeal]) -> Result<Filtration<F>> {
        let ext = self.lattice.linear_extension();
        let mut f = Filtration::new(&self.host);
        let mut at = HashMap::new();
        for &s in family {
            self.check_ideal(s)?;
            let k = f.insert(LinearIdeal::new(&self.host, self.vars(s))?)?;
            at.insert(s, k);
        }
        for &s in family {
            let Some(&top) = ext.iter().rev().find(|&&x| s.contains(x)) else {
                continue;
            };
            let smaller = PosetIdeal(s.0 & !(1 << top));
            if let Some(&j) = at.get(&smaller) {
                f.set_hint(at[&s], j);
            }
        }
        Ok(f)
    }

    /// All poset ideals as a filtration.
    pub fn koszul_filtration(&self) -> Result<Filtration<F>> {
        self.filtration_of(&poset_ideals(&self.lattice))
    }

    /// Upsets of the lattice, in this ring.
    pub fn upset_filtration(&self) -> Result<Filtration<F>> {
        let rev = self.lattice.reverse();
        let ext = rev.linear_extension();
        let mut f = Filtration::new(&self.host);
        let mut at = HashMap::new();
        let ups = poset_ideals(&rev);
        for &s in &ups {
            at.insert(s, f.insert(LinearIdeal::new(&self.host, self.vars(s))?)?);
        }
        for &s in &ups {
            let Some(&top) = ext.iter().rev().find(|&&x| s.contains(x)) else {
                continue;
            };
            if let Some(&j) = at.get(&PosetIdeal(s.0 & !(1 << top))) {
                f.set_hint(at[&s], j);
            }
        }
        Ok(f)
    }

    /// Checks that the family contains `L` and every cogenerated ideal, and
    /// that each nonempty member drops to another member by one element; when
    /// it does, verifies the induced filtration.
    pub fn reduced_family_check(&self, family: &[PosetIdeal]) -> Result<ReducedFamily> {
        for &s in family {
            self.check_ideal(s)?;
        }
        let n = self.lattice.len();
        let full = PosetIdeal(if n == 64 { u64::MAX } else { (1u64 << n) - 1 });
        let mut missing_cogenerated: Vec<usize> = (0..n)
            .filter(|&a| !family.contains(&cogenerated_ideal(&self.lattice, a)))
            .collect();
        if !family.contains(&full) {
            missing_cogenerated.push(n);
        }
        let unreachable: Vec<PosetIdeal> = family
            .iter()
            .copied()
            .filter(|s| {
                !s.is_empty()
                    && !family
                        .iter()
                        .any(|j| j.is_subset(s) && j.len() + 1 == s.len())
            })
            .collect();
        let holds = missing_cogenerated.is_empty() && unreachable.is_empty();
        let verified = if holds {
            Some(self.filtration_of(family)?.verify()?.ok)
        } else {
            None
        };
        Ok(ReducedFamily {
            holds,
            missing_cogenerated,
            unreachable,
            verified,
        })
    }
}
