use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, GroebnerBasis};
use crate::poly::{MonomialOrder, Polynomial, Ring};

static AUDIT_CACHE: AtomicBool = AtomicBool::new(false);

/// When enabled, every cache hit recomputes the basis and asserts it matches.
pub fn set_cache_audit(on: bool) {
    AUDIT_CACHE.store(on, AtomicOrdering::Relaxed);
}

struct Inner<F: Field> {
    ring: Arc<Ring>,
    generators: Vec<Polynomial<F>>,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis<F>>>>,
}

/// An ideal given by generators, with lazily computed reduced Gröbner bases.
///
/// Clones share the basis cache.
#[derive(Clone)]
pub struct IdealHandle<F: Field> {
    inner: Arc<Inner<F>>,
}

impl<F: Field> IdealHandle<F> {
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial<F>>) -> Result<Self> {
        for g in &generators {
            if !Ring::same(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealHandle {
            inner: Arc::new(Inner {
                ring: ring.clone(),
                generators,
                cache: Mutex::new(HashMap::new()),
            }),
        })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self::new(ring, Vec::new()).expect("no generators")
    }

    /// Seeds the cache with a basis computed elsewhere.
    pub(crate) fn from_basis(basis: GroebnerBasis<F>) -> Self {
        let ring = basis.ring().clone();
        let handle = Self::new(&ring, basis.elements().to_vec()).expect("same ring");
        if basis.is_reduced() {
            handle
                .inner
                .cache
                .lock()
                .expect("cache lock")
                .insert(basis.order().clone(), Arc::new(basis));
        }
        handle
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.inner.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.inner.generators
    }

    /// The ideal generated by these generators and `extra`.
    pub fn extend(&self, extra: impl IntoIterator<Item = Polynomial<F>>) -> Result<Self> {
        let mut gens = self.inner.generators.clone();
        gens.extend(extra);
        Self::new(self.ring(), gens)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.inner.generators.iter().all(|g| g.is_homogeneous())
    }

    /// The reduced Gröbner basis for `ord`, computed at most once per order
    /// (concurrent callers may both compute; the first stored value wins).
    pub fn groebner(&self, ord: &MonomialOrder) -> Result<Arc<GroebnerBasis<F>>> {
        if let Some(gb) = self
            .inner
            .cache
            .lock()
            .expect("cache lock")
            .get(ord)
            .cloned()
        {
            if AUDIT_CACHE.load(AtomicOrdering::Relaxed) {
                let again = buchberger(self.ring(), self.generators(), ord)?;
                assert!(*gb == again, "nondeterministic Gröbner basis");
            }
            return Ok(gb);
        }
        let gb = Arc::new(buchberger(self.ring(), self.generators(), ord)?);
        let mut cache = self.inner.cache.lock().expect("cache lock");
        Ok(cache.entry(ord.clone()).or_insert(gb).clone())
    }

    /// Basis for the ring's default order.
    pub fn default_groebner(&self) -> Result<Arc<GroebnerBasis<F>>> {
        self.groebner(&self.ring().default_order())
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.default_groebner()?.contains(f))
    }

    /// True if every generator of `other` lies in this ideal.
    pub fn contains_ideal(&self, other: &IdealHandle<F>) -> Result<bool> {
        let gb = self.default_groebner()?;
        Ok(other.generators().iter().all(|g| gb.contains(g)))
    }

    pub fn is_zero(&self) -> bool {
        self.inner.generators.is_empty()
    }
}

impl<F: Field> fmt::Debug for IdealHandle<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({self})")
    }
}

impl<F: Field> fmt::Display for IdealHandle<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.inner.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
