use nonassoc::algebra::{brute_force_isomorphism, Algebra};
use nonassoc::budget::Budget;
use nonassoc::corpus::{classify, enumerate_exhaustive, named_examples, sample, Corpus, Fingerprint};
use nonassoc::exactfield::{Field, PrimeField};
use nonassoc::linalg::Matrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

/// Orbit count of GL(n, p) acting on n×n×n tensors, by Burnside's lemma,
/// with plain modular arithmetic.
fn burnside(p: u32, n: usize) -> usize {
    let cells = n * n;
    let mats: Vec<Vec<u32>> = (0..p.pow(cells as u32))
        .map(|mut c| {
            (0..cells)
                .map(|_| {
                    let d = c % p;
                    c /= p;
                    d
                })
                .collect()
        })
        .collect();
    let mul = |a: &[u32], b: &[u32]| -> Vec<u32> {
        let mut out = vec![0; cells];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = (0..n).map(|k| a[i * n + k] * b[k * n + j]).sum::<u32>() % p;
            }
        }
        out
    };
    let id: Vec<u32> = (0..cells).map(|x| u32::from(x / n == x % n)).collect();
    let group: Vec<(Vec<u32>, Vec<u32>)> = mats
        .iter()
        .filter_map(|g| mats.iter().find(|h| mul(g, h) == id).map(|h| (g.clone(), h.clone())))
        .collect();
    let cube = n * n * n;
    let total = p.pow(cube as u32);
    let mut fixed = 0usize;
    for (g, h) in &group {
        for code in 0..total {
            let mut c = code;
            let t: Vec<u32> = (0..cube)
                .map(|_| {
                    let d = c % p;
                    c /= p;
                    d
                })
                .collect();
            // (g·t)_{ij}^k = Σ g_{kl} t_{ab}^l h_{ai} h_{bj}
            let mut same = true;
            'outer: for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let mut s = 0u32;
                        for a in 0..n {
                            for b in 0..n {
                                for l in 0..n {
                                    s += g[k * n + l] * t[(a * n + b) * n + l] * h[a * n + i] * h[b * n + j];
                                }
                            }
                        }
                        if s % p != t[(i * n + j) * n + k] {
                            same = false;
                            break 'outer;
                        }
                    }
                }
            }
            fixed += usize::from(same);
        }
    }
    assert_eq!(fixed % group.len(), 0);
    fixed / group.len()
}

#[test]
fn class_counts_match_burnside() {
    let b = Budget::default();
    for p in [2u32, 3] {
        for n in 1..=2 {
            let got = classify(&gf(p as u64), n, &b).unwrap().representatives.len();
            assert_eq!(got, burnside(p, n), "GF({p}) dim {n}");
        }
    }
}

#[test]
fn exhaustive_corpus_sizes() {
    let b = Budget::default();
    assert_eq!(enumerate_exhaustive(&gf(2), 0, &b).unwrap().len(), 1);
    assert_eq!(enumerate_exhaustive(&gf(2), 2, &b).unwrap().len(), 1 + 2 + 52);
    assert_eq!(enumerate_exhaustive(&gf(3), 2, &b).unwrap().len(), 1 + 2 + 162);
}

#[test]
fn representatives_pairwise_non_isomorphic() {
    let b = Budget::default();
    let reps = classify(&gf(2), 2, &b).unwrap().representatives;
    for (i, a) in reps.iter().enumerate() {
        for c in &reps[i + 1..] {
            assert!(brute_force_isomorphism(a, c, 3).unwrap().is_none());
        }
    }
}

fn random_invertible<F: Field>(field: &F, n: usize, rng: &mut ChaCha8Rng) -> Matrix<F> {
    let elems = field.elements().unwrap();
    loop {
        let rows = (0..n).map(|_| (0..n).map(|_| elems[rng.gen_range(0..elems.len())].clone()).collect()).collect();
        let m = Matrix::from_rows(field, n, rows).unwrap();
        if m.inverse().is_some() {
            return m;
        }
    }
}

#[test]
fn fingerprints_are_basis_free() {
    let b = Budget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for field in [gf(2), gf(3)] {
        let mut algebras: Vec<Algebra<PrimeField>> = named_examples(&field).algebras().cloned().collect();
        algebras.extend(sample(&field, 3, 30, 99).unwrap().algebras().cloned());
        for a in &algebras {
            let p = random_invertible(&field, a.dim(), &mut rng);
            let moved = a.transport(&p).unwrap();
            assert_eq!(Fingerprint::of(a, &b).unwrap(), Fingerprint::of(&moved, &b).unwrap());
        }
    }
}

#[test]
fn exhaustive_corpus_roundtrips_through_text() {
    let c = enumerate_exhaustive(&gf(3), 2, &Budget::default()).unwrap();
    let text = c.to_text();
    let back = Corpus::parse(&text, &gf(3)).unwrap();
    assert_eq!(back, c);
    assert_eq!(back.to_text(), text);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.txt");
    c.save(&path).unwrap();
    assert_eq!(Corpus::load(&path, &gf(3)).unwrap(), c);
}
