//! The line-oriented `.alg` format:
//!
//! ```text
//! field GF 2
//! dim 3
//! basis x y z
//! x*x = z
//! y*z = z
//! z*x = y
//! ```
//!
//! Omitted products are zero; `#` starts a comment.

use std::collections::HashSet;
use std::fmt;

use super::Algebra;
use crate::error::{Error, Result};
use crate::exactfield::{Field, FieldSpec, PrimeField, Rationals, Scalar};

/// An algebra over whichever field its file declares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyAlgebra {
    Rational(Algebra<Rationals>),
    Prime(Algebra<PrimeField>),
}

impl AnyAlgebra {
    pub fn field_spec(&self) -> FieldSpec {
        match self {
            AnyAlgebra::Rational(_) => FieldSpec::Rationals,
            AnyAlgebra::Prime(a) => a.field().spec(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Rational(a) => a.dim(),
            AnyAlgebra::Prime(a) => a.dim(),
        }
    }
}

impl fmt::Display for AnyAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyAlgebra::Rational(a) => a.fmt(f),
            AnyAlgebra::Prime(a) => a.fmt(f),
        }
    }
}

struct Header {
    field: FieldSpec,
    dim: usize,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_header(text: &str) -> Result<Header> {
    let mut lines = content_lines(text);
    let (ln, first) = lines.next().ok_or_else(|| Error::parse(1, "empty algebra description"))?;
    let words: Vec<&str> = first.split_whitespace().collect();
    let field = match words.as_slice() {
        ["field", "Q"] => FieldSpec::Rationals,
        ["field", "GF", p] => {
            let p: u64 = p.parse().map_err(|_| Error::parse(ln, format!("bad modulus `{p}`")))?;
            FieldSpec::prime(p)?
        }
        _ => return Err(Error::parse(ln, "expected `field Q` or `field GF <p>`")),
    };
    let (ln, second) = lines.next().ok_or_else(|| Error::parse(ln + 1, "missing `dim` line"))?;
    let dim = match second.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["dim", n] => n.parse().map_err(|_| Error::parse(ln, format!("bad dimension `{n}`")))?,
        _ => return Err(Error::parse(ln, "expected `dim <n>`")),
    };
    Ok(Header { field, dim })
}

/// Parses a `.alg` description over the field it declares.
pub fn parse_alg(text: &str) -> Result<AnyAlgebra> {
    match parse_header(text)?.field {
        FieldSpec::Rationals => Ok(AnyAlgebra::Rational(parse_alg_as(text, &Rationals)?)),
        FieldSpec::Prime(p) => Ok(AnyAlgebra::Prime(parse_alg_as(text, &PrimeField::new(p as u64)?)?)),
    }
}

/// Parses a `.alg` description that must declare `field`.
pub fn parse_alg_as<F: Field>(text: &str, field: &F) -> Result<Algebra<F>> {
    let header = parse_header(text)?;
    if header.field != field.spec() {
        return Err(Error::FieldMismatch(header.field.to_string(), field.spec().to_string()));
    }
    let n = header.dim;
    let mut lines = content_lines(text).skip(2).peekable();
    let mut names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    if let Some((ln, line)) = lines.peek().copied() {
        if line == "basis" || line.starts_with("basis ") {
            let given: Vec<String> = line.split_whitespace().skip(1).map(String::from).collect();
            if given.len() != n {
                return Err(Error::parse(ln, format!("basis lists {} names, dim is {n}", given.len())));
            }
            let mut seen = HashSet::new();
            for g in &given {
                if g.contains(['*', '+', '=']) || !seen.insert(g) {
                    return Err(Error::parse(ln, format!("bad or repeated basis name `{g}`")));
                }
            }
            names = given;
            lines.next();
        }
    }
    let index = |ln: usize, name: &str| {
        names.iter().position(|x| x == name).ok_or_else(|| Error::parse(ln, format!("unknown basis element `{name}`")))
    };
    let mut a = Algebra::abelian(field, n).with_names(names.clone())?;
    let mut seen = HashSet::new();
    for (ln, line) in lines {
        let (lhs, rhs) = line.split_once('=').ok_or_else(|| Error::parse(ln, "expected `<bi>*<bj> = ...`"))?;
        let (l, r) = lhs.split_once('*').ok_or_else(|| Error::parse(ln, "left side must be `<bi>*<bj>`"))?;
        let (i, j) = (index(ln, l.trim())?, index(ln, r.trim())?);
        if !seen.insert((i, j)) {
            return Err(Error::parse(ln, format!("product {}*{} given twice", names[i], names[j])));
        }
        let mut v = vec![field.zero(); n];
        for term in rhs.split('+').map(str::trim) {
            if term.is_empty() {
                return Err(Error::parse(ln, "empty term"));
            }
            let (coeff, name) = match term.rsplit_once('*') {
                Some((c, b)) => {
                    let s = Scalar::parse(c, field.spec()).map_err(|m| Error::parse(ln, m))?;
                    (field.from_scalar(&s)?, b.trim())
                }
                None if term == "0" => continue,
                None => (field.one(), term),
            };
            let k = index(ln, name)?;
            v[k] = field.add(&v[k], &coeff);
        }
        let start = (i * n + j) * n;
        a.constants[start..start + n].clone_from_slice(&v);
    }
    Ok(a)
}

/// Canonical `.alg` text; parsing it back gives the same algebra.
impl<F: Field> fmt::Display for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}", self.field.spec())?;
        writeln!(f, "dim {}", self.dim)?;
        if self.dim > 0 {
            writeln!(f, "basis {}", self.names.join(" "))?;
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.basis_product(i, j);
                if v.iter().all(|x| self.field.is_zero(x)) {
                    continue;
                }
                let terms: Vec<String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !self.field.is_zero(x))
                    .map(|(k, x)| {
                        if self.field.is_one(x) {
                            self.names[k].clone()
                        } else {
                            format!("{}*{}", self.field.fmt_elem(x), self.names[k])
                        }
                    })
                    .collect();
                writeln!(f, "{}*{} = {}", self.names[i], self.names[j], terms.join(" + "))?;
            }
        }
        Ok(())
    }
}
