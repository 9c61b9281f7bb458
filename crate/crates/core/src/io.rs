//! Plain-text input formats.
//!
//! All formats ignore blank lines and `#` comments. Errors carry 1-based
//! line and column numbers.
//!
//! * ideal: `ring: x1..x3,y1..y3` then one polynomial per line
//! * order: `revlex:a>b>c`, `lex:a>b>c`, `elim:{t,u}:then:<order>`; a bare
//!   `revlex` or `lex` uses the declared variable order
//! * graph: `graph n=<n>` then one edge `i j` per line
//! * filtration: `quotient: <ideal file>`, optional `order: <order>`, then one
//!   member per line: comma-separated linear forms, `0`, or `m`
//! * poset: `poset` then lines `a < b` or a bare element name
//! * lattice: `lattice`, `elements: a, b, c`, then lines `a < b`
//! * family: one poset ideal per line, its elements comma-separated, `0` for empty

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graphs::Graph;
use crate::groebner::IdealHandle;
use crate::koszul::{Filtration, LinearIdeal, QuotientRing};
use crate::lattice::{lattice_from_poset, DistributiveLattice, Poset, PosetIdeal};
use crate::poly::{parse_polynomial_at, Block, MonomialOrder, OrderKind, Polynomial, Ring};

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Content lines as `(line number, column offset, text)` with comments removed.
fn content_lines(text: &str) -> Vec<(usize, usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let trimmed = body.trim_start();
            let offset = body.len() - trimmed.len();
            let trimmed = trimmed.trim_end();
            (!trimmed.is_empty()).then_some((i + 1, offset, trimmed))
        })
        .collect()
}

/// Strips `key:` from a line, returning the rest and its column offset.
fn keyed<'a>(line: &'a str, key: &str) -> Option<(&'a str, usize)> {
    let rest = line.strip_prefix(key)?.trim_start().strip_prefix(':')?;
    let trimmed = rest.trim_start();
    Some((
        trimmed.trim_end(),
        line.len() - rest.len() + (rest.len() - trimmed.len()),
    ))
}

/// Expands `x1..x3,y` into `x1,x2,x3,y`.
pub fn parse_variable_list(s: &str, line: usize, col0: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in s.split(',') {
        let col = col0 + offset + (part.len() - part.trim_start().len()) + 1;
        offset += part.len() + 1;
        let part = part.trim();
        if part.is_empty() {
            return Err(perr(line, col, "empty variable name"));
        }
        match part.split_once("..") {
            None => out.push(part.to_string()),
            Some((a, b)) => {
                let split = |v: &str| -> Option<(String, usize)> {
                    let digits = v.len() - v.trim_end_matches(|c: char| c.is_ascii_digit()).len();
                    let (stem, num) = v.split_at(v.len() - digits);
                    Some((stem.to_string(), num.parse().ok()?))
                };
                let bad = || perr(line, col, format!("bad range `{part}`"));
                let (sa, na) = split(a.trim()).ok_or_else(bad)?;
                let (sb, nb) = split(b.trim()).ok_or_else(bad)?;
                if sa != sb || sa.is_empty() || na > nb {
                    return Err(bad());
                }
                out.extend((na..=nb).map(|k| format!("{sa}{k}")));
            }
        }
    }
    Ok(out)
}

/// A polynomial ring with a list of generators.
#[derive(Clone, Debug)]
pub struct IdealFile<F: Field> {
    pub ring: Arc<Ring>,
    pub generators: Vec<Polynomial<F>>,
}

impl<F: Field> IdealFile<F> {
    pub fn ideal(&self) -> Result<IdealHandle<F>> {
        IdealHandle::new(&self.ring, self.generators.clone())
    }
}

pub fn parse_ideal<F: Field>(text: &str) -> Result<IdealFile<F>> {
    let lines = content_lines(text);
    let Some(&(ln, off, first)) = lines.first() else {
        return Err(perr(1, 1, "missing `ring:` header"));
    };
    let (vars, col) =
        keyed(first, "ring").ok_or_else(|| perr(ln, off + 1, "expected `ring:` header"))?;
    let names = parse_variable_list(vars, ln, off + col)?;
    let ring = Ring::new(names).map_err(|e| perr(ln, off + col + 1, e.to_string()))?;
    let generators = lines[1..]
        .iter()
        .map(|&(l, o, s)| parse_polynomial_at(&ring, s, l, o))
        .collect::<Result<_>>()?;
    Ok(IdealFile { ring, generators })
}

/// Renders an ideal file that [`parse_ideal`] reads back.
pub fn format_ideal<F: Field>(ring: &Ring, generators: &[Polynomial<F>]) -> String {
    let mut out = format!("ring: {}\n", ring.names().join(","));
    for g in generators {
        out.push_str(&format!("{g}\n"));
    }
    out
}

fn parse_chain(ring: &Ring, kind: OrderKind, s: Option<&str>, pool: &[usize]) -> Result<Block> {
    let vars = match s {
        None => pool.to_vec(),
        Some(s) => s
            .split('>')
            .map(|n| ring.index_of(n.trim()))
            .collect::<Result<Vec<_>>>()?,
    };
    let mut sorted = vars.clone();
    sorted.sort_unstable();
    let mut want = pool.to_vec();
    want.sort_unstable();
    if sorted != want {
        return Err(Error::Hypothesis(format!(
            "order must list each of {} exactly once",
            pool.iter()
                .map(|&v| ring.name(v))
                .collect::<Vec<_>>()
                .join(",")
        )));
    }
    Ok(Block { kind, vars })
}

/// Parses a monomial order string; see the module docs.
pub fn parse_order(ring: &Ring, spec: &str) -> Result<MonomialOrder> {
    let mut blocks = Vec::new();
    let mut pool: Vec<usize> = (0..ring.dim()).collect();
    let mut rest = spec.trim();
    while let Some(after) = rest.strip_prefix("elim:") {
        let inner = after
            .strip_prefix('{')
            .and_then(|s| s.split_once('}'))
            .ok_or_else(|| Error::Hypothesis(format!("bad elimination block in `{spec}`")))?;
        let elim = inner
            .0
            .split(',')
            .map(|n| ring.index_of(n.trim()))
            .collect::<Result<Vec<_>>>()?;
        if elim.iter().any(|v| !pool.contains(v)) {
            return Err(Error::Hypothesis(format!("variable repeated in `{spec}`")));
        }
        pool.retain(|v| !elim.contains(v));
        blocks.push(Block {
            kind: OrderKind::RevLex,
            vars: elim,
        });
        rest = inner
            .1
            .strip_prefix(":then:")
            .ok_or_else(|| Error::Hypothesis(format!("expected `:then:` in `{spec}`")))?;
    }
    let (kind, chain) = match rest.split_once(':') {
        Some((k, c)) => (k, Some(c)),
        None => (rest, None),
    };
    let kind = match kind {
        "lex" => OrderKind::Lex,
        "revlex" => OrderKind::RevLex,
        other => return Err(Error::Hypothesis(format!("unknown order kind `{other}`"))),
    };
    if !pool.is_empty() {
        blocks.push(parse_chain(ring, kind, chain, &pool)?);
    }
    MonomialOrder::from_blocks(blocks)
}

fn parse_usize(tok: &str, line: usize, col: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| perr(line, col, format!("expected a number, found `{tok}`")))
}

/// Tokens with their 1-based columns.
fn tokens(s: &str, col0: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(b)) => {
                out.push((col0 + b + 1, &s[b..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((col0 + b + 1, &s[b..]));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let lines = content_lines(text);
    let Some(&(ln, off, head)) = lines.first() else {
        return Err(perr(1, 1, "missing `graph n=<n>` header"));
    };
    let n_str = head
        .strip_prefix("graph")
        .map(str::trim)
        .and_then(|s| s.strip_prefix("n="))
        .ok_or_else(|| perr(ln, off + 1, "expected `graph n=<n>`"))?;
    let n = parse_usize(n_str.trim(), ln, off + head.len() - n_str.len() + 1)?;
    let mut edges = Vec::new();
    for &(l, o, s) in &lines[1..] {
        let toks = tokens(s, o);
        if toks.len() != 2 {
            let col = toks.get(2).map_or(o + 1, |t| t.0);
            return Err(perr(l, col, "expected an edge `i j`"));
        }
        let i = parse_usize(toks[0].1, l, toks[0].0)?;
        let j = parse_usize(toks[1].1, l, toks[1].0)?;
        for (v, col) in [(i, toks[0].0), (j, toks[1].0)] {
            if v == 0 || v > n {
                return Err(perr(l, col, format!("vertex {v} outside 1..={n}")));
            }
        }
        if i == j {
            return Err(perr(l, toks[1].0, "loops are not allowed"));
        }
        edges.push((i, j));
    }
    Graph::new(n, edges)
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("graph n={}\n", g.n());
    for (i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

/// One member line of a filtration file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MemberSpec {
    Zero,
    Maximal,
    /// Comma-separated forms with the line and column offset of the text.
    Forms(String, usize, usize),
}

/// A parsed filtration file; the quotient is resolved by the caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationFile {
    pub quotient: String,
    pub order: Option<String>,
    pub members: Vec<MemberSpec>,
}

pub fn parse_filtration_file(text: &str) -> Result<FiltrationFile> {
    let lines = content_lines(text);
    let Some(&(ln, off, head)) = lines.first() else {
        return Err(perr(1, 1, "missing `quotient:` header"));
    };
    let (quotient, _) =
        keyed(head, "quotient").ok_or_else(|| perr(ln, off + 1, "expected `quotient:` header"))?;
    let mut rest = &lines[1..];
    let mut order = None;
    if let Some(&(_, _, s)) = rest.first() {
        if let Some((o, _)) = keyed(s, "order") {
            order = Some(o.to_string());
            rest = &rest[1..];
        }
    }
    let members = rest
        .iter()
        .map(|&(l, o, s)| match s {
            "0" => MemberSpec::Zero,
            "m" => MemberSpec::Maximal,
            _ => MemberSpec::Forms(s.to_string(), l, o),
        })
        .collect();
    Ok(FiltrationFile {
        quotient: quotient.to_string(),
        order,
        members,
    })
}

/// Splits on top-level commas, keeping column offsets.
fn split_commas(s: &str, col0: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if c == ',' {
            out.push((col0 + start, &s[start..i]));
            start = i + 1;
        }
    }
    out.push((col0 + start, &s[start..]));
    out
}

/// Builds the members of a filtration file in the given host.
pub fn build_filtration<F: Field>(
    host: &Arc<QuotientRing<F>>,
    file: &FiltrationFile,
) -> Result<Filtration<F>> {
    let mut f = Filtration::new(host);
    for m in &file.members {
        let member = match m {
            MemberSpec::Zero => LinearIdeal::zero(host),
            MemberSpec::Maximal => LinearIdeal::maximal(host),
            MemberSpec::Forms(s, line, col0) => {
                let mut forms = Vec::new();
                for (c, part) in split_commas(s, *col0) {
                    let p: Polynomial<F> = parse_polynomial_at(host.ring(), part, *line, c)?;
                    if !p.is_zero() && !p.is_linear_form() {
                        let lead = c + part.len() - part.trim_start().len() + 1;
                        return Err(perr(
                            *line,
                            lead,
                            format!("`{}` is not a linear form", part.trim()),
                        ));
                    }
                    forms.push(p);
                }
                LinearIdeal::new(host, forms)?
            }
        };
        f.insert(member)?;
    }
    Ok(f)
}

/// Renders a filtration file that [`parse_filtration_file`] reads back.
pub fn format_filtration<F: Field>(f: &Filtration<F>, quotient: &str) -> String {
    let ring = f.host().ring();
    let mut out = format!(
        "quotient: {quotient}\norder: {}\n",
        f.host().order().to_spec(ring)
    );
    for m in f.members() {
        if m.is_zero() {
            out.push_str("0\n");
        } else {
            let forms: Vec<String> = m.generators().iter().map(|g| g.to_string()).collect();
            out.push_str(&forms.join(", "));
            out.push('\n');
        }
    }
    out
}

fn relation_names(s: &str, line: usize, col0: usize) -> Result<Vec<(usize, &str)>> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices().chain(std::iter::once((s.len(), '<'))) {
        if c == '<' {
            let part = &s[start..i];
            let name = part.trim();
            let col = col0 + start + (part.len() - part.trim_start().len()) + 1;
            if !crate::poly::is_identifier(name) {
                return Err(perr(line, col, format!("bad element name `{name}`")));
            }
            out.push((col, name));
            start = i + 1;
        }
    }
    Ok(out)
}

/// A poset or lattice file, producing a distributive lattice.
pub fn parse_lattice(text: &str) -> Result<DistributiveLattice> {
    let lines = content_lines(text);
    let Some(&(ln, off, head)) = lines.first() else {
        return Err(perr(1, 1, "missing `poset` or `lattice` header"));
    };
    let explicit = match head {
        "poset" => false,
        "lattice" => true,
        _ => return Err(perr(ln, off + 1, "expected `poset` or `lattice`")),
    };
    let mut names: Vec<String> = Vec::new();
    let mut rest = &lines[1..];
    if explicit {
        let Some(&(l, o, s)) = rest.first() else {
            return Err(perr(ln + 1, 1, "expected `elements:`"));
        };
        let (list, col) =
            keyed(s, "elements").ok_or_else(|| perr(l, o + 1, "expected `elements:`"))?;
        for (c, part) in split_commas(list, o + col) {
            let name = part.trim();
            if !crate::poly::is_identifier(name) {
                return Err(perr(l, c + 1, format!("bad element name `{name}`")));
            }
            if names.iter().any(|n| n == name) {
                return Err(perr(l, c + 1, format!("duplicate element `{name}`")));
            }
            names.push(name.to_string());
        }
        rest = &rest[1..];
    }
    let mut relations = Vec::new();
    for &(l, o, s) in rest {
        let chain = relation_names(s, l, o)?;
        let mut idx = Vec::new();
        for (col, name) in chain {
            let i = match names.iter().position(|n| n == name) {
                Some(i) => i,
                None if !explicit => {
                    names.push(name.to_string());
                    names.len() - 1
                }
                None => return Err(perr(l, col, format!("unknown element `{name}`"))),
            };
            idx.push(i);
        }
        relations.extend(idx.windows(2).map(|w| (w[0], w[1])));
    }
    if explicit {
        DistributiveLattice::from_relations(names, &relations)
    } else {
        lattice_from_poset(&Poset::new(names, &relations)?)
    }
}

/// One poset ideal per line, as element names of `l`.
pub fn parse_family(l: &DistributiveLattice, text: &str) -> Result<Vec<PosetIdeal>> {
    let mut out = Vec::new();
    for (line, off, s) in content_lines(text) {
        if s == "0" {
            out.push(PosetIdeal(0));
            continue;
        }
        let mut mask = 0u64;
        for (c, part) in split_commas(s, off) {
            let name = part.trim();
            let col = c + part.len() - part.trim_start().len() + 1;
            let i = l
                .index_of(name)
                .map_err(|_| perr(line, col, format!("unknown element `{name}`")))?;
            mask |= 1 << i;
        }
        let ideal = PosetIdeal(mask);
        if !l.is_poset_ideal(ideal) {
            return Err(Error::NotPosetIdeal(l.describe(ideal)));
        }
        out.push(ideal);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type Q = Rational;

    #[test]
    fn ideal_round_trip() {
        let text = "# comment\nring: x1..x3, y\n\nx1*y - x2^2  # trailing\n-3/2*x3\n";
        let f = parse_ideal::<Q>(text).unwrap();
        assert_eq!(f.ring.names(), &["x1", "x2", "x3", "y"]);
        assert_eq!(f.generators.len(), 2);
        let again = parse_ideal::<Q>(&format_ideal(&f.ring, &f.generators)).unwrap();
        assert_eq!(again.generators, f.generators);
    }

    #[test]
    fn ideal_errors_have_positions() {
        match parse_ideal::<Q>("ring: x, y\nx + z\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 5)),
            other => panic!("{other:?}"),
        }
        match parse_ideal::<Q>("  ring: x, y\n  x + y\n    x + y)\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_ideal::<Q>("x + y\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_ideal::<Q>("ring: x3..x1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn orders() {
        let r = Ring::new(["t", "x", "y"]).unwrap();
        let o = parse_order(&r, "elim:{t}:then:revlex:y>x").unwrap();
        assert_eq!(o.to_spec(&r), "elim:{t}:then:revlex:y>x");
        assert_eq!(parse_order(&r, &o.to_spec(&r)).unwrap(), o);
        assert_eq!(parse_order(&r, "revlex").unwrap(), r.default_order());
        assert_eq!(
            parse_order(&r, "lex:x>t>y").unwrap(),
            MonomialOrder::lex(vec![1, 0, 2])
        );
        assert!(parse_order(&r, "lex:x>t").is_err());
        assert!(parse_order(&r, "deglex").is_err());
    }

    #[test]
    fn graphs() {
        let g = parse_graph("graph n=3\n1 2\n2 3 # edge\n").unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
        match parse_graph("graph n=3\n1 4\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_graph("graph n=3\n1 2 3\n"),
            Err(Error::Parse {
                line: 2,
                column: 5,
                ..
            })
        ));
    }

    #[test]
    fn lattices_and_families() {
        let l = parse_lattice("poset\na\nb\n").unwrap();
        assert_eq!(l.len(), 4);
        let c = parse_lattice("lattice\nelements: lo, mid, hi\nlo < mid < hi\n").unwrap();
        assert_eq!(c.len(), 3);
        assert!(matches!(
            parse_lattice("lattice\nelements: a, b\n"),
            Err(Error::NotLattice(_))
        ));
        assert!(matches!(
            parse_lattice("lattice\nelements: a\na < q\n"),
            Err(Error::Parse {
                line: 3,
                column: 5,
                ..
            })
        ));
        let fam = parse_family(&l, "0\nempty\nempty, a\n").unwrap();
        assert_eq!(fam, vec![PosetIdeal(0), PosetIdeal(1), PosetIdeal(3)]);
        assert!(matches!(
            parse_family(&l, "a\n"),
            Err(Error::NotPosetIdeal(_))
        ));
    }

    #[test]
    fn filtration_file() {
        let text = "quotient: ring.ideal\norder: revlex:x>y\n0\nx\nm\n";
        let f = parse_filtration_file(text).unwrap();
        assert_eq!(f.quotient, "ring.ideal");
        assert_eq!(f.members.len(), 3);
        let r = Ring::new(["x", "y"]).unwrap();
        let host = QuotientRing::<Q>::polynomial_ring(&r);
        let built = build_filtration(&host, &f).unwrap();
        assert!(built.verify().unwrap().ok);
        let back = parse_filtration_file(&format_filtration(&built, "ring.ideal")).unwrap();
        assert_eq!(back.members.len(), 3);
        let bad = parse_filtration_file("quotient: q\nx, y^2\n").unwrap();
        assert!(matches!(
            build_filtration(&host, &bad),
            Err(Error::Parse {
                line: 2,
                column: 4,
                ..
            })
        ));
    }
}
