//! Symbolic calculus of closure-operation expressions.
//!
//! Expressions are words over a fixed alphabet of class maps, composed
//! right-to-left (`EPhi.Q` applies `Q` first) and combined with `join`.
//! The prover is closed-world: it derives `≤` and "is a closure operation"
//! only from the seeded facts and a handful of general rules (transitivity,
//! monotone congruence, extensivity of closure operations, joins as least
//! upper bounds, and the commutation criterion for products). "Unknown" means
//! no derivation was found, never "false"; [`empirical_falsify`] is the way
//! to look for counterexamples.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::classes::{compare_operator_images, ClassExpr, Operator, Universe};
use crate::error::{Error, Result};
use crate::exactfield::Field;

/// Generators of the calculus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    S,
    Sn,
    SnBar,
    D0,
    Q,
    R0,
    R,
    N0,
    N,
    EPhi,
    E,
    /// Symbolic only.
    L,
    /// Not a closure operation.
    P,
}

impl Gen {
    pub const ALL: [Gen; 13] = [
        Gen::S,
        Gen::Sn,
        Gen::SnBar,
        Gen::D0,
        Gen::Q,
        Gen::R0,
        Gen::R,
        Gen::N0,
        Gen::N,
        Gen::EPhi,
        Gen::E,
        Gen::L,
        Gen::P,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Gen::S => "S",
            Gen::Sn => "Sn",
            Gen::SnBar => "SnBar",
            Gen::D0 => "D0",
            Gen::Q => "Q",
            Gen::R0 => "R0",
            Gen::R => "R",
            Gen::N0 => "N0",
            Gen::N => "N",
            Gen::EPhi => "EPhi",
            Gen::E => "E",
            Gen::L => "L",
            Gen::P => "P",
        }
    }

    pub fn is_closure(&self) -> bool {
        *self != Gen::P
    }

    /// The evaluable operator, if any. `R` and `N` coincide with `R0` and
    /// `N0` on finite-dimensional algebras.
    pub fn operator(&self) -> Option<Operator> {
        Some(match self {
            Gen::S => Operator::S,
            Gen::Sn => Operator::Sn,
            Gen::SnBar => Operator::SnBar,
            Gen::D0 => Operator::D0,
            Gen::Q => Operator::Q,
            Gen::R0 | Gen::R => Operator::R0,
            Gen::N0 | Gen::N => Operator::N0,
            Gen::EPhi => Operator::EPhi,
            Gen::E => Operator::E,
            Gen::P => Operator::P,
            Gen::L => return None,
        })
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Gen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Gen::ALL
            .into_iter()
            .find(|g| g.tag() == s)
            .ok_or_else(|| Error::Unknown { kind: "generator", name: s.to_string() })
    }
}

/// An expression over class maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpExpr {
    Gen(Gen),
    /// `[C1, C2]` is `C1C2`, i.e. `C1` applied after `C2`.
    Compose(Vec<OpExpr>),
    Join(Vec<OpExpr>),
}

impl OpExpr {
    pub fn compose(parts: impl IntoIterator<Item = OpExpr>) -> Self {
        normalize(&OpExpr::Compose(parts.into_iter().collect()))
    }

    pub fn join(parts: impl IntoIterator<Item = OpExpr>) -> Self {
        OpExpr::Join(parts.into_iter().collect())
    }

    pub fn word(gens: &[Gen]) -> Self {
        OpExpr::compose(gens.iter().map(|&g| OpExpr::Gen(g)))
    }

    /// Factors of a composition; any other expression is its own factor.
    pub fn factors(&self) -> Vec<OpExpr> {
        match self {
            OpExpr::Compose(fs) => fs.iter().flat_map(OpExpr::factors).collect(),
            e => vec![e.clone()],
        }
    }

    fn from_factors(mut fs: Vec<OpExpr>) -> Self {
        if fs.len() == 1 {
            fs.pop().unwrap()
        } else {
            OpExpr::Compose(fs)
        }
    }

    fn gens(&self, out: &mut BTreeSet<Gen>) {
        match self {
            OpExpr::Gen(g) => {
                out.insert(*g);
            }
            OpExpr::Compose(xs) | OpExpr::Join(xs) => xs.iter().for_each(|x| x.gens(out)),
        }
    }

    fn mentions_p(&self) -> bool {
        let mut g = BTreeSet::new();
        self.gens(&mut g);
        g.contains(&Gen::P)
    }

    /// Operators to feed the class evaluator, outermost first.
    pub fn operators(&self) -> Result<Vec<Operator>> {
        self.factors()
            .iter()
            .map(|f| match f {
                OpExpr::Gen(g) => g.operator().ok_or_else(|| Error::NotEvaluable(g.to_string())),
                other => Err(Error::NotEvaluable(other.to_string())),
            })
            .collect()
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

impl fmt::Display for OpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpExpr::Gen(g) => g.fmt(f),
            OpExpr::Compose(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                f.write_str(&parts.join("."))
            }
            OpExpr::Join(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                write!(f, "join({})", parts.join(","))
            }
        }
    }
}

impl FromStr for OpExpr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        OpExpr::parse(s)
    }
}

/// Canonical form: flattened compositions, adjacent repeats of idempotent
/// factors collapsed, joins flattened, deduplicated and sorted.
pub fn normalize(e: &OpExpr) -> OpExpr {
    match e {
        OpExpr::Gen(_) => e.clone(),
        OpExpr::Join(xs) => {
            let mut parts = BTreeSet::new();
            for x in xs {
                match normalize(x) {
                    OpExpr::Join(inner) => parts.extend(inner),
                    y => {
                        parts.insert(y);
                    }
                }
            }
            let mut parts: Vec<OpExpr> = parts.into_iter().collect();
            parts.sort_by_cached_key(|p| p.to_string());
            if parts.len() == 1 {
                parts.pop().unwrap()
            } else {
                OpExpr::Join(parts)
            }
        }
        OpExpr::Compose(xs) => {
            let mut out: Vec<OpExpr> = Vec::new();
            for f in xs.iter().map(normalize).flat_map(|x| x.factors()) {
                if out.last() == Some(&f) && !f.mentions_p() {
                    continue;
                }
                out.push(f);
            }
            OpExpr::from_factors(out)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Leq,
    Eq,
    IsClosure,
}

/// A seeded fact with its justification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact {
    pub lhs: OpExpr,
    pub rel: Rel,
    /// Unused for [`Rel::IsClosure`].
    pub rhs: OpExpr,
    pub source: &'static str,
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rel {
            Rel::Leq => write!(f, "{} <= {}  [{}]", self.lhs, self.rhs, self.source),
            Rel::Eq => write!(f, "{} = {}  [{}]", self.lhs, self.rhs, self.source),
            Rel::IsClosure => write!(f, "{} is a closure operation  [{}]", self.lhs, self.source),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct FactBase {
    facts: Vec<Fact>,
}

impl FactBase {
    pub fn facts(&self) -> &[Fact] {
        &self.facts
    }

    pub fn contains(&self, lhs: &OpExpr, rel: Rel, rhs: &OpExpr) -> bool {
        let (lhs, rhs) = (normalize(lhs), normalize(rhs));
        self.facts.iter().any(|f| f.rel == rel && f.lhs == lhs && (rel == Rel::IsClosure || f.rhs == rhs))
    }

    fn push(&mut self, lhs: OpExpr, rel: Rel, rhs: OpExpr, source: &'static str) {
        self.facts.push(Fact { lhs: normalize(&lhs), rel, rhs: normalize(&rhs), source });
    }

    /// Directed rewrite rules `lhs ≤ rhs` as factor words.
    fn rules(&self) -> Vec<(Vec<OpExpr>, Vec<OpExpr>, &'static str)> {
        let mut out = Vec::new();
        for f in &self.facts {
            match f.rel {
                Rel::Leq => out.push((f.lhs.factors(), f.rhs.factors(), f.source)),
                Rel::Eq => {
                    out.push((f.lhs.factors(), f.rhs.factors(), f.source));
                    out.push((f.rhs.factors(), f.lhs.factors(), f.source));
                }
                Rel::IsClosure => {}
            }
        }
        out
    }
}

const CLOSURE_LEMMA: &str = "every class map except P is extensive, monotone and idempotent";
const DIRECT_SUBDIRECT: &str = "a direct sum is a subdirect sum of its summands";
const SUBIDEAL_SUBALGEBRA: &str = "subideals are subalgebras";
const DIRECT_SUM_OF_IDEALS: &str = "a direct sum is the sum of its summand ideals";
const SD0: &str = "a direct sum of subalgebras is a subalgebra of the direct sum";
const EPHI_D0: &str = "Frattini ideals of the summands lie in the Frattini ideal of a direct sum";
const EPHI_Q: &str = "epimorphisms map Frattini ideals into Frattini ideals";
const Q_R0: &str = "a subdirect sum of quotients is a quotient of a subdirect sum";
const FINITE: &str = "over finite-dimensional algebras arbitrary intersections and sums of ideals reduce to finite ones";

pub fn seed_facts() -> FactBase {
    use Gen::*;
    let g = OpExpr::Gen;
    let w = OpExpr::word;
    let mut fb = FactBase::default();
    for x in Gen::ALL.into_iter().filter(Gen::is_closure) {
        fb.push(g(x), Rel::IsClosure, g(x), CLOSURE_LEMMA);
        fb.push(w(&[x, x]), Rel::Eq, g(x), CLOSURE_LEMMA);
    }
    fb.push(g(D0), Rel::Leq, g(R0), DIRECT_SUBDIRECT);
    fb.push(g(Sn), Rel::Leq, g(S), SUBIDEAL_SUBALGEBRA);
    fb.push(g(D0), Rel::Leq, g(N0), DIRECT_SUM_OF_IDEALS);
    fb.push(w(&[D0, S]), Rel::Leq, w(&[S, D0]), SD0);
    fb.push(w(&[D0, EPhi]), Rel::Leq, w(&[EPhi, D0]), EPHI_D0);
    fb.push(w(&[Q, EPhi]), Rel::Leq, w(&[EPhi, Q]), EPHI_Q);
    fb.push(w(&[R0, Q]), Rel::Leq, w(&[Q, R0]), Q_R0);
    for (x, src) in [(w(&[S, D0]), SD0), (w(&[EPhi, D0]), EPHI_D0), (w(&[EPhi, Q]), EPHI_Q), (w(&[Q, R0]), Q_R0)] {
        fb.push(x.clone(), Rel::IsClosure, x, src);
    }
    fb.push(g(R), Rel::Eq, g(R0), FINITE);
    fb.push(g(N), Rel::Eq, g(N0), FINITE);
    fb
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Provable,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Provable => "provable",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Derivation {
    pub verdict: Verdict,
    pub trace: Vec<String>,
}

impl Derivation {
    pub fn provable(&self) -> bool {
        self.verdict == Verdict::Provable
    }

    fn unknown(why: impl Into<String>) -> Self {
        Derivation { verdict: Verdict::Unknown, trace: vec![why.into()] }
    }

    fn proved(trace: Vec<String>) -> Self {
        Derivation { verdict: Verdict::Provable, trace }
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.verdict)?;
        for step in &self.trace {
            writeln!(f, "  {step}")?;
        }
        Ok(())
    }
}

const SEARCH_LIMIT: usize = 20_000;

/// Tries to prove `e1 ≤ e2`.
pub fn derive_leq(e1: &OpExpr, e2: &OpExpr, facts: &FactBase) -> Derivation {
    derive_leq_depth(e1, e2, facts, 4)
}

fn derive_leq_depth(e1: &OpExpr, e2: &OpExpr, facts: &FactBase, depth: usize) -> Derivation {
    let (a, b) = (normalize(e1), normalize(e2));
    if a == b {
        let mut trace = Vec::new();
        if a != *e1 || b != *e2 {
            trace.push(format!("{e1} and {e2} both normalize to {a} (idempotence)"));
        } else {
            trace.push(format!("{a} <= {a} (reflexivity)"));
        }
        return Derivation::proved(trace);
    }
    if let Some(trace) = rewrite_search(&a, &b, facts) {
        return Derivation::proved(trace);
    }
    if depth == 0 {
        return Derivation::unknown("search depth exhausted");
    }
    if let OpExpr::Join(parts) = &b {
        for p in parts {
            let d = derive_leq_depth(&a, p, facts, depth - 1);
            if d.provable() {
                let mut trace = d.trace;
                trace.push(format!("{p} <= {b} (a join is an upper bound of its components)"));
                return Derivation::proved(trace);
            }
        }
    }
    if let OpExpr::Join(parts) = &a {
        let closure = derive_closure_depth(&b, facts, depth - 1);
        if closure.provable() {
            let mut trace = closure.trace;
            for p in parts {
                let d = derive_leq_depth(p, &b, facts, depth - 1);
                if !d.provable() {
                    return Derivation::unknown(format!("no derivation of {p} <= {b}"));
                }
                trace.extend(d.trace);
            }
            trace.push(format!("{a} <= {b} (a join is the least closure operation above its components)"));
            return Derivation::proved(trace);
        }
    }
    Derivation::unknown(format!("no derivation of {a} <= {b} from the fact base"))
}

/// Breadth-first search over words obtained from `a` by upward steps.
fn rewrite_search(a: &OpExpr, b: &OpExpr, facts: &FactBase) -> Option<Vec<String>> {
    let rules = facts.rules();
    let start = a.factors();
    let target = b.factors();
    let max_len = start.len().max(target.len()) + 2;
    // Generators worth inserting by extensivity, and joins worth widening into.
    let mut wanted = BTreeSet::new();
    b.gens(&mut wanted);
    let inserts: Vec<OpExpr> = wanted.into_iter().filter(Gen::is_closure).map(OpExpr::Gen).collect();
    let joins: Vec<OpExpr> = target.iter().filter(|f| matches!(f, OpExpr::Join(_))).cloned().collect();

    let mut seen: HashMap<Vec<OpExpr>, (Option<Vec<OpExpr>>, String)> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone(), (None, String::new()));
    queue.push_back(start);
    while let Some(w) = queue.pop_front() {
        if w == target {
            let mut trace = Vec::new();
            let mut cur = w;
            while let Some((Some(prev), why)) = seen.get(&cur).cloned() {
                trace.push(format!("{} <= {} ({why})", OpExpr::from_factors(prev.clone()), OpExpr::from_factors(cur)));
                cur = prev;
            }
            trace.reverse();
            return Some(trace);
        }
        if seen.len() > SEARCH_LIMIT {
            return None;
        }
        let mut next: Vec<(Vec<OpExpr>, String)> = Vec::new();
        for (lhs, rhs, src) in &rules {
            if lhs.len() > w.len() {
                continue;
            }
            for i in 0..=w.len() - lhs.len() {
                if w[i..i + lhs.len()] == lhs[..] {
                    let mut v = w[..i].to_vec();
                    v.extend(rhs.iter().cloned());
                    v.extend(w[i + lhs.len()..].iter().cloned());
                    next.push((v, (*src).to_string()));
                }
            }
        }
        if w.len() < max_len {
            for i in 0..=w.len() {
                for g in &inserts {
                    let mut v = w.clone();
                    v.insert(i, g.clone());
                    next.push((v, format!("{g} is extensive")));
                }
            }
        }
        for (i, f) in w.iter().enumerate() {
            for j in &joins {
                if let OpExpr::Join(parts) = j {
                    if parts.contains(f) {
                        let mut v = w.clone();
                        v[i] = j.clone();
                        next.push((v, "join upper bound".to_string()));
                    }
                }
            }
        }
        for (v, why) in next {
            let v = normalize(&OpExpr::from_factors(v)).factors();
            if v.len() <= max_len && !seen.contains_key(&v) {
                seen.insert(v.clone(), (Some(w.clone()), why));
                queue.push_back(v);
            }
        }
    }
    None
}

/// Tries to prove that `e` is a closure operation.
pub fn derive_closure(e: &OpExpr, facts: &FactBase) -> Derivation {
    derive_closure_depth(e, facts, 4)
}

fn derive_closure_depth(e: &OpExpr, facts: &FactBase, depth: usize) -> Derivation {
    let e = normalize(e);
    if let Some(f) = facts.facts.iter().find(|f| f.rel == Rel::IsClosure && f.lhs == e) {
        return Derivation::proved(vec![format!("{e} is a closure operation ({})", f.source)]);
    }
    if depth == 0 {
        return Derivation::unknown("search depth exhausted");
    }
    match &e {
        OpExpr::Gen(g) => Derivation::unknown(format!("{g} is not a closure operation")),
        OpExpr::Join(parts) => {
            let mut trace = Vec::new();
            for p in parts {
                let d = derive_closure_depth(p, facts, depth - 1);
                if !d.provable() {
                    return Derivation::unknown(format!("join component {p} is not known to be a closure operation"));
                }
                trace.extend(d.trace);
            }
            trace.push(format!("{e} is a closure operation (the join of closure operations is one)"));
            Derivation::proved(trace)
        }
        OpExpr::Compose(fs) => {
            for k in 1..fs.len() {
                let c1 = OpExpr::from_factors(fs[..k].to_vec());
                let c2 = OpExpr::from_factors(fs[k..].to_vec());
                let d1 = derive_closure_depth(&c1, facts, depth - 1);
                if !d1.provable() {
                    continue;
                }
                let d2 = derive_closure_depth(&c2, facts, depth - 1);
                if !d2.provable() {
                    continue;
                }
                let swapped = OpExpr::compose([c2.clone(), c1.clone()]);
                let leq = derive_leq_depth(&swapped, &e, facts, depth - 1);
                if leq.provable() {
                    let mut trace = d1.trace;
                    trace.extend(d2.trace);
                    trace.extend(leq.trace);
                    trace.push(format!(
                        "{e} is a closure operation ({swapped} <= {e} with both factors closure operations)"
                    ));
                    return Derivation::proved(trace);
                }
            }
            Derivation::unknown(format!("no factorization of {e} with commuting closure factors"))
        }
    }
}

/// A violation of `lhs ≤ rhs` on a bounded universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Index into the universes passed in.
    pub universe: usize,
    pub generators: ClassExpr,
    /// Universe member in the image of `lhs` but not of `rhs`.
    pub algebra: usize,
}

/// Searches the given universes and generator classes for a member of
/// `lhs(X)` outside `rhs(X)`.
pub fn empirical_falsify<F: Field>(
    lhs: &OpExpr,
    rhs: &OpExpr,
    universes: &[&Universe<F>],
    generator_sets: &[ClassExpr],
) -> Result<Option<Counterexample>> {
    let (l, r) = (lhs.operators()?, rhs.operators()?);
    for (ui, u) in universes.iter().enumerate() {
        for g in generator_sets {
            if let ClassExpr::Members(ids) = g {
                if ids.iter().any(|&i| i >= u.len()) {
                    continue;
                }
            }
            let cmp = compare_operator_images(&l, &r, g, u)?;
            if let Some(&algebra) = cmp.left_only().first() {
                return Ok(Some(Counterexample { universe: ui, generators: g.clone(), algebra }));
            }
        }
    }
    Ok(None)
}

/// One singleton class per nonzero universe member.
pub fn singleton_generators<F: Field>(universe: &Universe<F>) -> Vec<ClassExpr> {
    (0..universe.len()).filter(|&i| universe.member(i).dim() > 0).map(|i| ClassExpr::members([i])).collect()
}

/// `"EXPR <= EXPR"`, `"EXPR ≤ EXPR"` or `"EXPR = EXPR"`.
pub fn parse_claim(text: &str) -> Result<(OpExpr, Rel, OpExpr)> {
    for (sep, rel) in [("<=", Rel::Leq), ("≤", Rel::Leq), ("=", Rel::Eq)] {
        if let Some((l, r)) = text.split_once(sep) {
            return Ok((OpExpr::parse(l)?, rel, OpExpr::parse(r)?));
        }
    }
    Err(Error::parse(1, format!("expected `EXPR <= EXPR`, found `{text}`")))
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

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<OpExpr> {
        let mut parts = vec![self.term()?];
        while self.eat(b'.') {
            parts.push(self.term()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { OpExpr::Compose(parts) })
    }

    fn term(&mut self) -> Result<OpExpr> {
        if self.eat(b'(') {
            let e = self.expr()?;
            return if self.eat(b')') { Ok(e) } else { Err(self.error("expected `)`")) };
        }
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let w = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or_default();
        if w.is_empty() {
            return Err(self.error("expected a generator"));
        }
        if w == "join" {
            if !self.eat(b'(') {
                return Err(self.error("expected `(`"));
            }
            let mut parts = vec![self.expr()?];
            while self.eat(b',') {
                parts.push(self.expr()?);
            }
            if !self.eat(b')') {
                return Err(self.error("expected `)`"));
            }
            return Ok(OpExpr::Join(parts));
        }
        w.parse::<Gen>().map(OpExpr::Gen)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> OpExpr {
        OpExpr::parse(s).unwrap()
    }

    #[test]
    fn normal_forms() {
        assert_eq!(normalize(&e("Q.Q")), e("Q"));
        assert_eq!(normalize(&e("join(S,S,Q)")).to_string(), "join(Q,S)");
        assert_eq!(normalize(&e("S.Q")), e("S.Q"));
        assert_eq!(normalize(&e("P.P")), e("P.P"));
        assert_eq!(normalize(&e("join(Q,join(S,Q))")), e("join(Q,S)"));
    }

    #[test]
    fn seeded_facts() {
        let fb = seed_facts();
        assert!(fb.contains(&e("D0"), Rel::Leq, &e("R0")));
        assert!(fb.contains(&e("EPhi.Q"), Rel::IsClosure, &e("EPhi.Q")));
        assert!(fb.contains(&e("Q.Q"), Rel::Eq, &e("Q")));
        assert!(!fb.contains(&e("P"), Rel::IsClosure, &e("P")));
    }

    #[test]
    fn order_derivations() {
        let fb = seed_facts();
        assert!(derive_leq(&e("D0"), &e("R0"), &fb).provable());
        assert!(derive_leq(&e("Sn"), &e("join(Sn,Q)"), &fb).provable());
        assert!(!derive_leq(&e("Q"), &e("S"), &fb).provable());
        assert!(derive_leq(&e("D0"), &e("R"), &fb).provable());
        // extensivity plus congruence
        assert!(derive_leq(&e("Q"), &e("S.Q"), &fb).provable());
        assert!(derive_leq(&e("D0.Sn"), &e("S.D0"), &fb).provable());
        assert!(derive_leq(&e("join(D0,Sn)"), &e("S.D0"), &fb).provable());
    }

    #[test]
    fn closure_derivations() {
        let fb = seed_facts();
        for s in ["EPhi.Q", "Q.R0", "S.D0", "join(Q,S)"] {
            assert!(derive_closure(&e(s), &fb).provable(), "{s}");
        }
        for g in Gen::ALL {
            assert_eq!(derive_closure(&OpExpr::Gen(g), &fb).provable(), g != Gen::P);
        }
        assert!(!derive_closure(&e("S.Q"), &fb).provable());
    }

    #[test]
    fn claims_parse() {
        let (l, rel, r) = parse_claim("D0.S <= S.D0").unwrap();
        assert_eq!((l.to_string().as_str(), rel, r.to_string().as_str()), ("D0.S", Rel::Leq, "S.D0"));
        assert!(parse_claim("Q ≤ join(Q,S)").is_ok());
        assert!(parse_claim("Q < S").is_err());
        assert!(OpExpr::parse("Foo").is_err());
    }
}
