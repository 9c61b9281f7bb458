use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// A polynomial ring `K[v_0, ..., v_{n-1}]`, identified by its variable names.
#[derive(Clone)]
pub struct Ring {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// A variable of a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    pub index: usize,
    pub name: String,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => chars.all(|c| c.is_ascii_alphanumeric() || c == '_'),
        _ => false,
    }
}

impl Ring {
    pub fn new<I, S>(names: I) -> Result<Arc<Ring>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::Parse {
                    line: 0,
                    column: 0,
                    message: format!("invalid variable name `{name}`"),
                });
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(Ring { names, index }))
    }

    /// `K[x1, ..., xn]`.
    pub fn indexed(prefix: &str, n: usize) -> Arc<Ring> {
        Ring::new((1..=n).map(|i| format!("{prefix}{i}"))).expect("generated names are valid")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn variable(&self, i: usize) -> Variable {
        Variable {
            index: i,
            name: self.names[i].clone(),
        }
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        (0..self.dim()).map(|i| self.variable(i))
    }

    /// The variable called `name`, as a polynomial.
    pub fn var<F: Field>(self: &Arc<Self>, name: &str) -> Result<Polynomial<F>> {
        let i = self.index_of(name)?;
        Ok(Polynomial::var(self, i))
    }

    /// Graded reverse lexicographic order over the declared variable order.
    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::revlex((0..self.dim()).collect())
    }

    pub fn same(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
        Arc::ptr_eq(a, b) || a.names == b.names
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.dim())
    }

    /// A new ring with `extra` prepended to the variable list.
    pub fn with_front(&self, extra: &[&str]) -> Result<Arc<Ring>> {
        Ring::new(
            extra
                .iter()
                .map(|s| s.to_string())
                .chain(self.names.iter().cloned()),
        )
    }

    /// A variable name of the form `{stem}{k}` not used in this ring.
    pub fn fresh_name(&self, stem: &str) -> String {
        if !self.index.contains_key(stem) {
            return stem.to_string();
        }
        (0..)
            .map(|k| format!("{stem}{k}"))
            .find(|s| !self.index.contains_key(s))
            .expect("infinitely many candidates")
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring[{}]", self.names.join(","))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(matches!(
            Ring::new(["x", "x"]),
            Err(Error::DuplicateVariable(_))
        ));
        assert!(Ring::new(["1x"]).is_err());
        assert!(Ring::new(["a_1", "B2"]).is_ok());
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let r = Ring::new(["t", "t0", "x"]).unwrap();
        assert_eq!(r.fresh_name("t"), "t1");
        assert_eq!(r.fresh_name("s"), "s");
    }
}
