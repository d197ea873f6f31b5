//! Collections of small algebras: exhaustive isomorphism-class lists,
//! seeded random samples and a handful of named examples, with
//! basis-independent fingerprints and a plain-text file format.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{parse_alg_as, split_null_extension, Algebra, Bimodule};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::exactfield::{Field, FieldSpec};
use crate::linalg::Matrix;

/// Basis-free invariants of an algebra. Subspace counts are `None` over ℚ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub dim: usize,
    pub power_dims: Vec<usize>,
    pub derived_dims: Vec<usize>,
    pub ideal_count: Option<usize>,
    pub subalgebra_count: Option<usize>,
    pub abelian: bool,
    pub nilpotency_index: Option<usize>,
    pub solvability_index: Option<usize>,
}

impl Fingerprint {
    pub fn of<F: Field>(a: &Algebra<F>, budget: &Budget) -> Result<Self> {
        let powers = a.power_series();
        let derived = a.derived_series();
        let (ideal_count, subalgebra_count) = match a.subspaces(budget) {
            Ok(all) => (
                Some(all.iter().filter(|u| a.is_ideal(u).unwrap_or(false)).count()),
                Some(all.iter().filter(|u| a.is_subalgebra(u).unwrap_or(false)).count()),
            ),
            Err(Error::InfiniteField) => (None, None),
            Err(e) => return Err(e),
        };
        Ok(Fingerprint {
            dim: a.dim(),
            power_dims: powers.dims(),
            derived_dims: derived.dims(),
            ideal_count,
            subalgebra_count,
            abelian: a.is_abelian(),
            nilpotency_index: powers.zero_index(),
            solvability_index: derived.zero_index(),
        })
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = |x: Option<usize>| x.map_or("inf".to_string(), |v| v.to_string());
        let cnt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        write!(
            f,
            "dim={} powers={:?} derived={:?} ideals={} subalgebras={} abelian={} nil={} solv={}",
            self.dim,
            self.power_dims,
            self.derived_dims,
            cnt(self.ideal_count),
            cnt(self.subalgebra_count),
            self.abelian,
            idx(self.nilpotency_index),
            idx(self.solvability_index)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry<F: Field> {
    pub algebra: Algebra<F>,
    pub name: Option<String>,
    pub fingerprint: Fingerprint,
}

impl<F: Field> CorpusEntry<F> {
    pub fn new(algebra: Algebra<F>, name: Option<String>) -> Result<Self> {
        let fingerprint = Fingerprint::of(&algebra, &Budget::default())?;
        Ok(CorpusEntry { algebra, name, fingerprint })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled,
    Named,
}

impl Mode {
    fn as_str(self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sampled => "sampled",
            Mode::Named => "named",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "sampled" => Ok(Mode::Sampled),
            "named" => Ok(Mode::Named),
            other => Err(Error::Unknown { kind: "corpus mode", name: other.into() }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus<F: Field> {
    pub field: F,
    pub max_dim: usize,
    pub mode: Mode,
    pub seed: Option<u64>,
    pub entries: Vec<CorpusEntry<F>>,
}

impl<F: Field> Corpus<F> {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn algebras(&self) -> impl Iterator<Item = &Algebra<F>> {
        self.entries.iter().map(|e| &e.algebra)
    }

    pub fn get(&self, name: &str) -> Option<&Algebra<F>> {
        self.entries.iter().find(|e| e.name.as_deref() == Some(name)).map(|e| &e.algebra)
    }

    /// Serializes as a header line followed by `---`-separated `.alg` blocks.
    pub fn to_text(&self) -> String {
        let mut out = format!("corpus {} {} {}", self.field.spec(), self.max_dim, self.mode.as_str());
        if let Some(seed) = self.seed {
            out.push_str(&format!(" {seed}"));
        }
        out.push('\n');
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                out.push_str("---\n");
            }
            if let Some(name) = &e.name {
                out.push_str(&format!("# name: {name}\n"));
            }
            out.push_str(&e.algebra.to_string());
        }
        out
    }

    pub fn parse(text: &str, field: &F) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::parse(1, "empty corpus file"))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        let (spec, rest) = match words.as_slice() {
            ["corpus", "Q", rest @ ..] => (FieldSpec::Rationals, rest),
            ["corpus", "GF", p, rest @ ..] => {
                let p: u64 = p.parse().map_err(|_| Error::parse(1, format!("bad modulus `{p}`")))?;
                (FieldSpec::prime(p)?, rest)
            }
            _ => return Err(Error::parse(1, "expected `corpus <field> <max_dim> <mode> [seed]`")),
        };
        if spec != field.spec() {
            return Err(Error::FieldMismatch(spec.to_string(), field.spec().to_string()));
        }
        let (max_dim, mode, seed) = match rest {
            [d, m] => (*d, *m, None),
            [d, m, s] => (*d, *m, Some(*s)),
            _ => return Err(Error::parse(1, "expected `<max_dim> <mode> [seed]` after the field")),
        };
        let max_dim = max_dim.parse().map_err(|_| Error::parse(1, format!("bad max_dim `{max_dim}`")))?;
        let mode: Mode = mode.parse()?;
        let seed = seed.map(|s| s.parse().map_err(|_| Error::parse(1, format!("bad seed `{s}`")))).transpose()?;

        let mut entries = Vec::new();
        let mut block = String::new();
        let mut block_start = 2;
        let body: Vec<&str> = lines.collect();
        for (offset, line) in body.iter().chain(std::iter::once(&"---")).enumerate() {
            if line.trim() == "---" {
                if block.trim().is_empty() {
                    if offset < body.len() {
                        return Err(Error::parse(block_start, "empty corpus block"));
                    }
                    break;
                }
                let name = block.lines().find_map(|l| l.trim().strip_prefix("# name:").map(|n| n.trim().to_string()));
                let algebra = parse_alg_as(&block, field).map_err(|e| match e {
                    Error::Parse { line, msg } => Error::parse(block_start + line - 1, msg),
                    other => other,
                })?;
                entries.push(CorpusEntry::new(algebra, name)?);
                block.clear();
                block_start = offset + 3;
            } else {
                block.push_str(line);
                block.push('\n');
            }
        }
        Ok(Corpus { field: field.clone(), max_dim, mode, seed, entries })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>, field: &F) -> Result<Self> {
        Corpus::parse(&std::fs::read_to_string(path)?, field)
    }
}

/// Every invertible `n × n` matrix over the field, paired with its inverse.
pub fn general_linear_group<F: Field>(field: &F, n: usize) -> Result<Vec<(Matrix<F>, Matrix<F>)>> {
    let elems = field.elements()?;
    let mut out = Vec::new();
    let total = elems.len().pow((n * n) as u32);
    for code in 0..total {
        let mut c = code;
        let mut rows = vec![Vec::with_capacity(n); n];
        for slot in 0..n * n {
            rows[slot / n].push(elems[c % elems.len()].clone());
            c /= elems.len();
        }
        let m = Matrix::from_rows(field, n, rows)?;
        if let Some(inv) = m.inverse() {
            out.push((m, inv));
        }
    }
    Ok(out)
}

/// Constants of the algebra transported along `p` (with `inv = p⁻¹`).
fn transported<F: Field>(a: &Algebra<F>, p: &Matrix<F>, inv: &Matrix<F>) -> Vec<F::Elem> {
    let n = a.dim();
    let cols: Vec<Vec<F::Elem>> = (0..n).map(|j| inv.column(j)).collect();
    let mut out = Vec::with_capacity(n * n * n);
    for x in &cols {
        for y in &cols {
            out.extend(p.apply(&a.mul_unchecked(x, y)).expect("square matrix"));
        }
    }
    out
}

/// Isomorphism classes of `dim`-dimensional algebras over a finite field.
#[derive(Clone, Debug)]
pub struct Classification<F: Field> {
    /// One algebra per class, the lexicographically least tensor of its
    /// orbit, listed in increasing order of that tensor.
    pub representatives: Vec<Algebra<F>>,
    /// Class index of every structure tensor.
    pub class_of: HashMap<Vec<F::Elem>, usize>,
}

/// Sorts all `q^(n³)` tensors into GL(n, q)-orbits. Tensors are visited in
/// lexicographic order, so the first tensor met in each orbit is its least
/// element and serves as the canonical form.
pub fn classify<F: Field>(field: &F, dim: usize, budget: &Budget) -> Result<Classification<F>> {
    let elems = field.elements()?;
    let q = elems.len() as u64;
    let cube = dim * dim * dim;
    budget.check_enumeration(cube, q)?;
    let group = general_linear_group(field, dim)?;
    let total = (q as usize).pow(cube as u32);
    let mut class_of: HashMap<Vec<F::Elem>, usize> = HashMap::with_capacity(total);
    let mut representatives = Vec::new();
    let mut tensor = vec![elems[0].clone(); cube];
    let mut digits = vec![0usize; cube];
    for _ in 0..total {
        if !class_of.contains_key(&tensor) {
            let id = representatives.len();
            let a = Algebra::new(field, dim, tensor.clone())?;
            for (p, inv) in &group {
                class_of.entry(transported(&a, p, inv)).or_insert(id);
            }
            representatives.push(a);
        }
        // next tensor in lexicographic order: the last coordinate varies fastest
        for pos in (0..cube).rev() {
            digits[pos] += 1;
            if digits[pos] < elems.len() {
                tensor[pos] = elems[digits[pos]].clone();
                break;
            }
            digits[pos] = 0;
            tensor[pos] = elems[0].clone();
        }
    }
    Ok(Classification { representatives, class_of })
}

/// One representative per isomorphism class for every dimension up to
/// `max_dim`, smallest dimension first.
pub fn enumerate_exhaustive<F: Field>(field: &F, max_dim: usize, budget: &Budget) -> Result<Corpus<F>> {
    let mut entries = Vec::new();
    for d in 0..=max_dim {
        for a in classify(field, d, budget)?.representatives {
            entries.push(CorpusEntry::new(a, None)?);
        }
    }
    Ok(Corpus { field: field.clone(), max_dim, mode: Mode::Exhaustive, seed: None, entries })
}

/// `count` uniformly random structure tensors of dimension `dim`,
/// reproducible from `seed`.
pub fn sample<F: Field>(field: &F, dim: usize, count: usize, seed: u64) -> Result<Corpus<F>> {
    let elems = field.elements()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = Vec::with_capacity(count);
    for i in 0..count {
        let constants = (0..dim * dim * dim).map(|_| elems[rng.gen_range(0..elems.len())].clone()).collect();
        entries.push(CorpusEntry::new(Algebra::new(field, dim, constants)?, Some(format!("sample_{i}")))?);
    }
    Ok(Corpus { field: field.clone(), max_dim: dim, mode: Mode::Sampled, seed: Some(seed), entries })
}

/// The three-dimensional algebra with basis `x, y, z` and products
/// `x² = z`, `yz = z`, `zx = y`. It is solvable but not nilpotent, its
/// derived ideal `span{y, z}` is a minimal ideal that is not even
/// nilpotent, and that ideal is also its Frattini ideal.
pub fn xyz_algebra<F: Field>(field: &F) -> Algebra<F> {
    let v = |k: usize| {
        let mut e = vec![field.zero(); 3];
        e[k] = field.one();
        e
    };
    Algebra::from_products(field, 3, &[(0, 0, v(2)), (1, 2, v(2)), (2, 0, v(1))])
        .and_then(|a| a.with_names(["x", "y", "z"]))
        .expect("valid table")
}

/// Small algebras with names, all over `field`:
///
/// * `xyz`: see [`xyz_algebra`];
/// * `xyz_mod_yz`: its quotient by `span{y, z}`;
/// * `idempotent`: `e² = e` in dimension one;
/// * `square_zero_2`: `e₁e₁ = e₂`, other products zero;
/// * `abelian_1_ext`, `idempotent_ext`, `square_zero_2_ext`: split null
///   extensions by a trivial one-dimensional module, the regular module,
///   and the regular module respectively.
pub fn named_examples<F: Field>(field: &F) -> Corpus<F> {
    let xyz = xyz_algebra(field);
    let yz = xyz.span_of_basis(&[1, 2]);
    let quotient = xyz.quotient(&yz).expect("span{y,z} is an ideal").0;
    let idempotent = Algebra::from_products(field, 1, &[(0, 0, vec![field.one()])]).expect("valid table");
    let square_zero =
        Algebra::from_products(field, 2, &[(0, 0, vec![field.zero(), field.one()])]).expect("valid table");
    let ab1 = Algebra::abelian(field, 1);
    let ext = |a: &Algebra<F>, m: &Bimodule<F>| split_null_extension(a, m).expect("module over a");
    let list = vec![
        ("xyz", xyz),
        ("xyz_mod_yz", quotient),
        ("idempotent", idempotent.clone()),
        ("square_zero_2", square_zero.clone()),
        ("abelian_1_ext", ext(&ab1, &Bimodule::trivial(&ab1, 1))),
        ("idempotent_ext", ext(&idempotent, &Bimodule::regular(&idempotent))),
        ("square_zero_2_ext", ext(&square_zero, &Bimodule::regular(&square_zero))),
    ];
    let max_dim = list.iter().map(|(_, a)| a.dim()).max().unwrap_or(0);
    let entries = list
        .into_iter()
        .map(|(name, a)| CorpusEntry::new(a, Some(name.to_string())).expect("fingerprint within budget"))
        .collect();
    Corpus { field: field.clone(), max_dim, mode: Mode::Named, seed: None, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{PrimeField, Rationals};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn small_classifications() {
        let b = Budget::default();
        assert_eq!(classify(&gf(2), 0, &b).unwrap().representatives.len(), 1);
        assert_eq!(classify(&gf(2), 1, &b).unwrap().representatives.len(), 2);
        assert_eq!(classify(&gf(3), 1, &b).unwrap().representatives.len(), 2);
        assert!(matches!(classify(&gf(2), 3, &b), Err(Error::BudgetExceeded(_))));
        assert!(matches!(classify(&Rationals, 1, &b), Err(Error::InfiniteField)));
        assert_eq!(general_linear_group(&gf(2), 2).unwrap().len(), 6);
        assert_eq!(general_linear_group(&gf(3), 2).unwrap().len(), 48);
    }

    #[test]
    fn named_fingerprints() {
        for spec in [2u64, 3] {
            let c = named_examples(&gf(spec));
            assert_eq!(c.get("xyz").map(|a| a.derived_series().dims()), Some(vec![3, 2, 1, 0]));
            let e = &c.entries[0];
            assert_eq!(e.fingerprint.derived_dims, vec![3, 2, 1, 0]);
            assert!(!c.get("idempotent").unwrap().is_solvable());
            let q = c.get("xyz_mod_yz").unwrap();
            assert!(q.is_abelian() && q.dim() == 1);
        }
        let c = named_examples(&Rationals);
        assert_eq!(c.entries[0].fingerprint.ideal_count, None);
        assert_eq!(c.entries[0].fingerprint.solvability_index, Some(4));
    }

    #[test]
    fn sampling_is_reproducible() {
        let a = sample(&gf(2), 3, 20, 7).unwrap();
        assert_eq!(a, sample(&gf(2), 3, 20, 7).unwrap());
        assert!(sample(&gf(2), 3, 0, 7).unwrap().is_empty());
        assert!(matches!(sample(&Rationals, 2, 1, 0), Err(Error::InfiniteField)));
    }

    #[test]
    fn corpus_text_roundtrip() {
        let c = named_examples(&gf(3));
        let text = c.to_text();
        let back = Corpus::parse(&text, &gf(3)).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_text(), text);
        let s = sample(&gf(2), 2, 5, 11).unwrap();
        assert_eq!(Corpus::parse(&s.to_text(), &gf(2)).unwrap(), s);
        let bad = "corpus GF 2 1 named\nfield GF 2\ndim 1\ne1*e1 = e1\ne1*e1 = e1\n";
        assert!(matches!(Corpus::parse(bad, &gf(2)), Err(Error::Parse { line: 5, .. })));
    }
}
