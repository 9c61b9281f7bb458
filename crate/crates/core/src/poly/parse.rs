//! Polynomial text grammar.
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! term   := coeff [['*'] factors] | factors
//! factors:= factor (['*'] factor)*
//! factor := ident ['^' digits]
//! coeff  := digits ['/' digits]
//! ident  := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! Whitespace is allowed between tokens. Printing (via `Display`) produces
//! the canonical form, e.g. `x1*y2 - x2*y1`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, Polynomial, Ring};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col0: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.col0 + self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn ident(&mut self) -> Option<&'a str> {
        let start = self.pos;
        if !matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
            return None;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        Some(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }
}

/// Parses one polynomial; errors report line 1.
pub fn parse_polynomial<F: Field>(ring: &Arc<Ring>, s: &str) -> Result<Polynomial<F>> {
    parse_polynomial_at(ring, s, 1, 0)
}

/// Parses one polynomial that sits on `line` of some file, starting at byte
/// column offset `col0`.
pub fn parse_polynomial_at<F: Field>(
    ring: &Arc<Ring>,
    s: &str,
    line: usize,
    col0: usize,
) -> Result<Polynomial<F>> {
    let mut cur = Cursor {
        src: s.as_bytes(),
        pos: 0,
        line,
        col0,
    };
    let mut terms = Vec::new();
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.err("empty polynomial"));
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') || first {
            false
        } else {
            return Err(cur.err("expected `+` or `-`"));
        };
        first = false;
        cur.skip_ws();
        terms.push(parse_term::<F>(ring, &mut cur, negative)?);
    }
    Ok(Polynomial::from_terms(ring, terms))
}

fn parse_term<F: Field>(
    ring: &Arc<Ring>,
    cur: &mut Cursor<'_>,
    negative: bool,
) -> Result<(Monomial, F)> {
    let mut coeff = F::one();
    let mut exps = vec![0u16; ring.dim()];
    let mut have_coeff = false;
    if let Some(p) = cur.digits() {
        let mut lit = p.to_string();
        if cur.peek() == Some(b'/') {
            cur.pos += 1;
            let q = cur
                .digits()
                .ok_or_else(|| cur.err("expected denominator"))?;
            lit.push('/');
            lit.push_str(q);
        }
        coeff =
            F::parse_literal(&lit).ok_or_else(|| cur.err(format!("bad coefficient `{lit}`")))?;
        have_coeff = true;
    }
    loop {
        cur.skip_ws();
        let star = cur.eat(b'*');
        cur.skip_ws();
        let at = cur.pos;
        match cur.ident() {
            Some(name) => {
                let v = ring.index_of(name).map_err(|_| Error::Parse {
                    line: cur.line,
                    column: cur.col0 + at + 1,
                    message: format!("unknown variable `{name}`"),
                })?;
                let mut e: u16 = 1;
                cur.skip_ws();
                if cur.eat(b'^') {
                    cur.skip_ws();
                    let d = cur.digits().ok_or_else(|| cur.err("expected exponent"))?;
                    e = d.parse().map_err(|_| cur.err("exponent too large"))?;
                }
                exps[v] = exps[v]
                    .checked_add(e)
                    .ok_or_else(|| cur.err("exponent too large"))?;
            }
            None => {
                if star {
                    return Err(cur.err("expected variable"));
                }
                if !have_coeff && exps.iter().all(|&e| e == 0) {
                    return Err(cur.err("expected term"));
                }
                break;
            }
        }
    }
    let coeff = if negative { -coeff } else { coeff };
    Ok((Monomial::from_exponents(&exps), coeff))
}
