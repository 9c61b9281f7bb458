//! Monomial orders.
//!
//! An order is a sequence of blocks. Each block lists variables by priority
//! (largest first) and compares the restriction of the monomials to those
//! variables, either lexicographically or by graded reverse lexicographic
//! order. The first block that distinguishes two monomials decides. A single
//! block gives the usual `lex` / `revlex` orders; a leading block of
//! variables to eliminate gives an elimination order.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    /// Graded reverse lexicographic.
    RevLex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub kind: OrderKind,
    /// Variable indices, largest first.
    pub vars: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    blocks: Vec<Block>,
    nvars: usize,
}

impl MonomialOrder {
    /// Lexicographic order with `priority[0] > priority[1] > ...`.
    pub fn lex(priority: Vec<usize>) -> Self {
        Self::single(OrderKind::Lex, priority)
    }

    /// Graded reverse lexicographic order with `priority[0] > priority[1] > ...`.
    pub fn revlex(priority: Vec<usize>) -> Self {
        Self::single(OrderKind::RevLex, priority)
    }

    fn single(kind: OrderKind, vars: Vec<usize>) -> Self {
        let nvars = vars.len();
        let order = MonomialOrder {
            blocks: vec![Block { kind, vars }],
            nvars,
        };
        debug_assert!(order.validate().is_ok());
        order
    }

    /// Blocks compared in sequence; together they must cover every variable once.
    pub fn from_blocks(blocks: Vec<Block>) -> Result<Self> {
        let nvars = blocks.iter().map(|b| b.vars.len()).sum();
        let order = MonomialOrder { blocks, nvars };
        order.validate()?;
        Ok(order)
    }

    /// An elimination order: the variables in `eliminate` (graded revlex among
    /// themselves) dominate, ties are broken by `rest`.
    pub fn elimination(eliminate: Vec<usize>, rest: &MonomialOrder) -> Result<Self> {
        let mut blocks = vec![Block {
            kind: OrderKind::RevLex,
            vars: eliminate.clone(),
        }];
        for b in &rest.blocks {
            let vars: Vec<usize> = b
                .vars
                .iter()
                .copied()
                .filter(|v| !eliminate.contains(v))
                .collect();
            if !vars.is_empty() {
                blocks.push(Block { kind: b.kind, vars });
            }
        }
        Self::from_blocks(blocks)
    }

    fn validate(&self) -> Result<()> {
        let mut seen = vec![false; self.nvars];
        for v in self.blocks.iter().flat_map(|b| &b.vars) {
            if *v >= self.nvars || seen[*v] {
                return Err(Error::Hypothesis(
                    "order blocks must partition the variables".into(),
                ));
            }
            seen[*v] = true;
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// All variables, largest first.
    pub fn priority(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .flat_map(|b| b.vars.iter().copied())
            .collect()
    }

    /// True for a single-block graded reverse lexicographic order.
    pub fn is_revlex(&self) -> bool {
        self.blocks.len() == 1 && self.blocks[0].kind == OrderKind::RevLex
    }

    /// The smallest variable, for single-block orders.
    pub fn least_variable(&self) -> Option<usize> {
        match self.blocks.as_slice() {
            [b] => b.vars.last().copied(),
            _ => None,
        }
    }

    /// Same kind of order with `v` moved to the lowest priority.
    pub fn with_least(&self, v: usize) -> MonomialOrder {
        let mut priority: Vec<usize> = self.priority().into_iter().filter(|&u| u != v).collect();
        priority.push(v);
        MonomialOrder::revlex(priority)
    }

    /// Checked comparison.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        a.check_dim(b)?;
        if a.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: a.nvars(),
            });
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison; both monomials must live in this order's ring.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        for block in &self.blocks {
            let ord = match block.kind {
                OrderKind::Lex => block
                    .vars
                    .iter()
                    .map(|&v| ea[v].cmp(&eb[v]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal),
                OrderKind::RevLex => {
                    let (da, db) = if self.blocks.len() == 1 {
                        (a.degree(), b.degree())
                    } else {
                        (a.partial_degree(&block.vars), b.partial_degree(&block.vars))
                    };
                    da.cmp(&db).then_with(|| {
                        block
                            .vars
                            .iter()
                            .rev()
                            .map(|&v| eb[v].cmp(&ea[v]))
                            .find(|o| o.is_ne())
                            .unwrap_or(Ordering::Equal)
                    })
                }
            };
            if ord.is_ne() {
                return ord;
            }
        }
        Ordering::Equal
    }

    /// Renders the order in the `revlex:a>b>c` / `lex:...` / `elim:{t}:then:...` syntax.
    pub fn to_spec(&self, ring: &Ring) -> String {
        let chain = |vars: &[usize]| -> String {
            vars.iter()
                .map(|&v| ring.name(v))
                .collect::<Vec<_>>()
                .join(">")
        };
        let kind = |k: OrderKind| match k {
            OrderKind::Lex => "lex",
            OrderKind::RevLex => "revlex",
        };
        let mut out = String::new();
        let n = self.blocks.len();
        for (i, b) in self.blocks.iter().enumerate() {
            if i + 1 < n {
                let names: Vec<&str> = b.vars.iter().map(|&v| ring.name(v)).collect();
                let _ = write!(out, "elim:{{{}}}:then:", names.join(","));
            } else {
                let _ = write!(out, "{}:{}", kind(b.kind), chain(&b.vars));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn revlex_examples() {
        let ord = MonomialOrder::revlex(vec![0, 1, 2]);
        // x1x3 > x2x3
        assert_eq!(ord.cmp(&m(&[1, 0, 1]), &m(&[0, 1, 1])), Ordering::Greater);
        // x2^2 > x1x3
        assert_eq!(ord.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        // degree dominates
        assert_eq!(ord.cmp(&m(&[0, 0, 3]), &m(&[2, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_examples() {
        let ord = MonomialOrder::lex(vec![2, 1, 0]);
        assert_eq!(ord.cmp(&m(&[5, 0, 0]), &m(&[0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn elimination_block_dominates() {
        let base = MonomialOrder::revlex(vec![0, 1, 2]);
        let ord = MonomialOrder::elimination(vec![2], &base).unwrap();
        assert_eq!(ord.cmp(&m(&[0, 0, 1]), &m(&[4, 4, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn compare_checks_dimension() {
        let ord = MonomialOrder::revlex(vec![0, 1]);
        assert!(matches!(
            ord.compare(&m(&[1, 0]), &m(&[1, 0, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn spec_rendering() {
        let ring = Ring::new(["t", "x", "y"]).unwrap();
        let ord = MonomialOrder::elimination(vec![0], &ring.default_order()).unwrap();
        assert_eq!(ord.to_spec(&ring), "elim:{t}:then:revlex:x>y");
    }
}
