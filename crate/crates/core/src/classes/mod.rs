//! Classes of algebras and closure operations on them.
//!
//! A class is described by a [`ClassExpr`]: a built-in predicate, a finite
//! set of universe members, or an operator applied to other classes.
//! Operators that only look inside the algebra at hand (`SnBar`, `D0`,
//! `R0`, `N0`, `EPhi`, `E`, `P`, products and powers) are decided exactly.
//! `S`, `Sn` and `Q` ask for an ambient algebra and so are decided relative
//! to a [`Universe`].

mod analysis;
mod eval;
mod universe;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use analysis::{
    abelian_ideals, class_closure_fixpoint, closedness_check, compare_operator_images, complements_of_ideal,
    is_projector, is_split_on, minimal_ideals_of, projectors, residual, residual_epimorphism_check, residual_fast, residual_generic,
    saturation_check, xc_membership, AlgebraClass, ClosednessReport, Comparison, EpimorphismCheck, ProjectorReport,
    ProjectorTable, ProjectorVerdict, Relation, Residual, SaturationReport, SplitVerdict,
};
pub use eval::{image, member, Evaluator, Membership, Witness};
pub use universe::{Containment, Universe};

use crate::algebra::Algebra;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::exactfield::Field;

/// Built-in, isomorphism-invariant classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassPredicate {
    Abelian,
    Nilpotent,
    /// Nilpotent of index at most `c`: `A^{c} = 0`.
    NilpotentC(usize),
    Solvable,
    Supersolvable,
    All,
    /// Only the zero algebra.
    ZeroOnly,
}

impl ClassPredicate {
    pub fn holds<F: Field>(&self, a: &Algebra<F>, budget: &Budget) -> Result<bool> {
        Ok(match self {
            ClassPredicate::Abelian => a.is_abelian(),
            ClassPredicate::Nilpotent => a.is_nilpotent(),
            ClassPredicate::NilpotentC(c) => a.nilpotency_index().is_some_and(|k| k <= *c),
            ClassPredicate::Solvable => a.is_solvable(),
            ClassPredicate::Supersolvable => a.is_supersolvable(budget)?,
            ClassPredicate::All => true,
            ClassPredicate::ZeroOnly => a.dim() == 0,
        })
    }
}

impl fmt::Display for ClassPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassPredicate::Abelian => write!(f, "abelian"),
            ClassPredicate::Nilpotent => write!(f, "nilpotent"),
            ClassPredicate::NilpotentC(c) => write!(f, "nilpotent{c}"),
            ClassPredicate::Solvable => write!(f, "solvable"),
            ClassPredicate::Supersolvable => write!(f, "supersolvable"),
            ClassPredicate::All => write!(f, "all"),
            ClassPredicate::ZeroOnly => write!(f, "zero"),
        }
    }
}

impl FromStr for ClassPredicate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "abelian" => return Ok(ClassPredicate::Abelian),
            "nilpotent" => return Ok(ClassPredicate::Nilpotent),
            "solvable" => return Ok(ClassPredicate::Solvable),
            "supersolvable" => return Ok(ClassPredicate::Supersolvable),
            "all" => return Ok(ClassPredicate::All),
            "zero" => return Ok(ClassPredicate::ZeroOnly),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("nilpotent") {
            let digits = rest.trim_start_matches(['_', '<']).trim_end_matches('>');
            if let Ok(c) = digits.parse() {
                return Ok(ClassPredicate::NilpotentC(c));
            }
        }
        Err(Error::Unknown { kind: "predicate", name: s.to_string() })
    }
}

/// Closure operations on classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Operator {
    /// Subalgebras of members.
    S,
    /// Subideals of members.
    Sn,
    /// Algebras having a subideal in the class.
    SnBar,
    /// Epimorphic images of members.
    Q,
    /// Finite direct sums of members.
    D0,
    /// Finite subdirect sums of members.
    R0,
    /// Sums of finitely many subideals in the class.
    N0,
    /// Extensions by an ideal inside the Frattini ideal.
    EPhi,
    /// Poly-class algebras: an ideal series with factors in the class.
    E,
    /// Algebras all of whose primitive quotients are in the class.
    P,
}

impl Operator {
    pub const ALL: [Operator; 10] = [
        Operator::S,
        Operator::Sn,
        Operator::SnBar,
        Operator::Q,
        Operator::D0,
        Operator::R0,
        Operator::N0,
        Operator::EPhi,
        Operator::E,
        Operator::P,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Operator::S => "S",
            Operator::Sn => "Sn",
            Operator::SnBar => "SnBar",
            Operator::Q => "Q",
            Operator::D0 => "D0",
            Operator::R0 => "R0",
            Operator::N0 => "N0",
            Operator::EPhi => "EPhi",
            Operator::E => "E",
            Operator::P => "P",
        }
    }

    /// Needs an ambient algebra, hence a universe.
    pub fn is_extrinsic(&self) -> bool {
        matches!(self, Operator::S | Operator::Sn | Operator::Q)
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Operator {
    type Err = Error;
    /// `R` and `N` are accepted for `R0` and `N0`: over finite-dimensional
    /// algebras arbitrary intersections and sums reduce to finite ones.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "S" => Operator::S,
            "Sn" => Operator::Sn,
            "SnBar" => Operator::SnBar,
            "Q" => Operator::Q,
            "D0" => Operator::D0,
            "R0" | "R" => Operator::R0,
            "N0" | "N" => Operator::N0,
            "EPhi" => Operator::EPhi,
            "E" => Operator::E,
            "P" => Operator::P,
            _ => return Err(Error::Unknown { kind: "operator", name: s.to_string() }),
        })
    }
}

/// A class of algebras.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClassExpr {
    Pred(ClassPredicate),
    /// The isomorphism classes of the given universe members.
    Members(BTreeSet<usize>),
    Op(Operator, Box<ClassExpr>),
    /// `XY`: algebras with an ideal in `X` whose quotient is in `Y`.
    Product(Box<ClassExpr>, Box<ClassExpr>),
    /// `X⁰` is the zero algebra, `Xⁿ = Xⁿ⁻¹X`.
    Power(Box<ClassExpr>, usize),
}

impl ClassExpr {
    pub fn pred(p: ClassPredicate) -> Self {
        ClassExpr::Pred(p)
    }

    pub fn members(ids: impl IntoIterator<Item = usize>) -> Self {
        ClassExpr::Members(ids.into_iter().collect())
    }

    /// `op(self)`.
    pub fn apply(self, op: Operator) -> Self {
        ClassExpr::Op(op, Box::new(self))
    }

    /// Applies `ops` innermost-last: `[A, B]` gives `A(B(self))`.
    pub fn under(self, ops: &[Operator]) -> Self {
        ops.iter().rev().fold(self, |x, &op| x.apply(op))
    }

    pub fn product(self, other: ClassExpr) -> Self {
        ClassExpr::Product(Box::new(self), Box::new(other))
    }

    pub fn power(self, n: usize) -> Self {
        ClassExpr::Power(Box::new(self), n)
    }

    /// Whether evaluation needs a universe.
    pub fn needs_universe(&self) -> bool {
        match self {
            ClassExpr::Pred(_) => false,
            ClassExpr::Members(_) => true,
            ClassExpr::Op(op, x) => op.is_extrinsic() || x.needs_universe(),
            ClassExpr::Product(x, y) => x.needs_universe() || y.needs_universe(),
            ClassExpr::Power(x, _) => x.needs_universe(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser { s: text.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassExpr::Pred(p) => p.fmt(f),
            ClassExpr::Members(ids) => {
                let ids: Vec<String> = ids.iter().map(|i| i.to_string()).collect();
                write!(f, "members({})", ids.join(","))
            }
            ClassExpr::Op(op, x) => write!(f, "{op}({x})"),
            ClassExpr::Product(x, y) => write!(f, "prod({x},{y})"),
            ClassExpr::Power(x, n) => write!(f, "pow({x},{n})"),
        }
    }
}

impl FromStr for ClassExpr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ClassExpr::parse(s)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::parse(1, format!("{msg} at column {}", self.pos + 1))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || b"_<>".contains(&self.s[self.pos])) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let w = self.word();
        w.parse().map_err(|_| self.error(&format!("expected a number, found `{w}`")))
    }

    fn expr(&mut self) -> Result<ClassExpr> {
        let w = self.word();
        if w.is_empty() {
            return Err(self.error("expected a class"));
        }
        if !self.eat(b'(') {
            return Ok(ClassExpr::Pred(w.parse()?));
        }
        let e = match w.as_str() {
            "prod" => {
                let x = self.expr()?;
                self.expect(b',')?;
                x.product(self.expr()?)
            }
            "pow" => {
                let x = self.expr()?;
                self.expect(b',')?;
                x.power(self.number()?)
            }
            "members" => {
                let mut ids = BTreeSet::new();
                if !self.eat(b')') {
                    loop {
                        ids.insert(self.number()?);
                        if !self.eat(b',') {
                            break;
                        }
                    }
                } else {
                    return Ok(ClassExpr::Members(ids));
                }
                ClassExpr::Members(ids)
            }
            op => self.expr()?.apply(op.parse()?),
        };
        self.expect(b')')?;
        Ok(e)
    }
}

#[cfg(test)]
mod tests;
