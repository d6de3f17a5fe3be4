#![allow(dead_code)]

//! Oracles shared by the integration tests. None of them reuses the
//! library's rewriting, action or elimination code.

use std::collections::{BTreeMap, BTreeSet};

use jacobi_verma::algebra::{bracket, generators, generators_of_class, BracketResult, Family, GenClass, Generator};
use jacobi_verma::pbw::PbwMonomial;
use jacobi_verma::ring::{PolyQ, Rat, RatFuncQ};
use jacobi_verma::singular::SolutionBranch;
use jacobi_verma::verma::VermaVector;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn gen(name: &str, n: usize) -> Generator {
    generators(n).unwrap().into_iter().find(|g| g.name() == name).unwrap_or_else(|| panic!("no generator {name}"))
}

// Oscillator realization: a±_i as creation/annihilation operators, with
// K+_ij = a+_i a+_j / 2, K-_ij = a-_i a-_j / 2, K0_ij = a+_i a-_j / 2 + δ_ij / 4.

/// Normally ordered Weyl algebra element: (α, β) ↦ coeff of a+^α a-^β.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Weyl {
    pub terms: BTreeMap<(Vec<u32>, Vec<u32>), Rat>,
}

impl Weyl {
    fn add(&mut self, key: (Vec<u32>, Vec<u32>), c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scalar(n: usize, c: Rat) -> Self {
        let mut w = Weyl::default();
        w.add((vec![0; n], vec![0; n]), c);
        w
    }

    pub fn plus(&self, other: &Weyl) -> Weyl {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Weyl {
        let mut out = Weyl::default();
        for (k, c) in &self.terms {
            out.add(k.clone(), c * s);
        }
        out
    }

    pub fn times(&self, other: &Weyl) -> Weyl {
        let mut out = Weyl::default();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                // move a-^b1 past a+^a2 index by index
                let n = a1.len();
                let mut partial: Vec<(Vec<u32>, Rat)> = vec![(Vec::new(), Rat::one())];
                for i in 0..n {
                    let mut next = Vec::new();
                    for (ks, c) in &partial {
                        for k in 0..=b1[i].min(a2[i]) {
                            let w = binom(b1[i], k) * binom(a2[i], k) * fact(k);
                            let mut ks = ks.clone();
                            ks.push(k);
                            next.push((ks, c * Rat::from_integer(w.into())));
                        }
                    }
                    partial = next;
                }
                for (ks, c) in partial {
                    let alpha: Vec<u32> = (0..n).map(|i| a1[i] + a2[i] - ks[i]).collect();
                    let beta: Vec<u32> = (0..n).map(|i| b1[i] + b2[i] - ks[i]).collect();
                    out.add((alpha, beta), &c * c1 * c2);
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Weyl) -> Weyl {
        self.times(other).plus(&other.times(self).scale(&-Rat::one()))
    }
}

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn fact(k: u32) -> i64 {
    (1..=k as i64).product()
}

pub fn realize(g: &Generator) -> Weyl {
    let n = g.dim();
    let (i, j) = g.indices();
    let e = |k: usize| -> Vec<u32> {
        let mut v = vec![0; n];
        v[k - 1] += 1;
        v
    };
    let sum = |a: Vec<u32>, b: Vec<u32>| -> Vec<u32> { a.iter().zip(&b).map(|(x, y)| x + y).collect() };
    let zero = vec![0u32; n];
    let mut w = Weyl::default();
    match g.family() {
        Family::APlus => w.add((e(i), zero), Rat::one()),
        Family::AMinus => w.add((zero, e(i)), Rat::one()),
        Family::KPlus => w.add((sum(e(i), e(j)), zero), rat(1, 2)),
        Family::KMinus => w.add((zero, sum(e(i), e(j))), rat(1, 2)),
        Family::KZero => {
            w.add((e(i), e(j)), rat(1, 2));
            if i == j {
                w.add((zero.clone(), zero), rat(1, 4));
            }
        }
    }
    w
}

pub fn realize_bracket(b: &BracketResult, n: usize) -> Weyl {
    let mut out = Weyl::scalar(n, b.scalar.clone());
    for (g, c) in &b.terms {
        out = out.plus(&realize(g).scale(c));
    }
    out
}

pub fn realize_monomial(m: &PbwMonomial, n: usize) -> Weyl {
    m.word().iter().fold(Weyl::scalar(n, Rat::one()), |acc, g| acc.times(&realize(g)))
}

// Right-to-left normal ordering: insert the first letter into the normal
// form of the rest, commuting it rightwards one factor at a time.

pub type Sorted = BTreeMap<Vec<Generator>, Rat>;

fn put(map: &mut Sorted, k: Vec<Generator>, c: Rat) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(k.clone()).or_insert_with(Rat::zero);
    *slot += c;
    if slot.is_zero() {
        map.remove(&k);
    }
}

fn insert(x: Generator, m: &[Generator]) -> Sorted {
    let mut out = Sorted::new();
    if m.is_empty() || x <= m[0] {
        let mut w = vec![x];
        w.extend_from_slice(m);
        put(&mut out, w, Rat::one());
        return out;
    }
    let (y, tail) = (m[0], &m[1..]);
    for (w, c) in insert(x, tail) {
        for (w2, c2) in insert(y, &w) {
            put(&mut out, w2, &c * &c2);
        }
    }
    let br = bracket(&x, &y).unwrap();
    if !br.scalar.is_zero() {
        put(&mut out, tail.to_vec(), br.scalar.clone());
    }
    for (z, bc) in &br.terms {
        for (w, c) in insert(*z, tail) {
            put(&mut out, w, &c * bc);
        }
    }
    out
}

pub fn reduce_word(word: &[Generator]) -> Sorted {
    if word.is_empty() {
        let mut out = Sorted::new();
        put(&mut out, Vec::new(), Rat::one());
        return out;
    }
    let mut out = Sorted::new();
    for (w, c) in reduce_word(&word[1..]) {
        for (w2, c2) in insert(word[0], &w) {
            put(&mut out, w2, &c * &c2);
        }
    }
    out
}

pub fn to_monomial(w: &[Generator]) -> PbwMonomial {
    let mut powers: Vec<(Generator, u32)> = Vec::new();
    for g in w {
        match powers.last_mut() {
            Some((h, e)) if h == g => *e += 1,
            _ => powers.push((*g, 1)),
        }
    }
    PbwMonomial::from_powers(powers)
}

/// Oracle for `word · v0` in the Verma module.
pub fn oracle_apply(word: &[Generator], coeff: &PolyQ) -> BTreeMap<PbwMonomial, PolyQ> {
    let mut out: BTreeMap<PbwMonomial, PolyQ> = BTreeMap::new();
    for (w, c) in reduce_word(word) {
        if w.iter().any(|g| g.class() == GenClass::Negative) {
            continue;
        }
        let mut p = coeff.scale(&c);
        let mut positive = Vec::new();
        for g in &w {
            if g.class() == GenClass::Cartan {
                p = &p * &PolyQ::var(g.indices().0 - 1);
            } else {
                positive.push(*g);
            }
        }
        let m = to_monomial(&positive);
        let slot = out.entry(m.clone()).or_insert_with(PolyQ::zero);
        *slot = &*slot + &p;
        if slot.is_zero() {
            out.remove(&m);
        }
    }
    out
}

pub fn oracle_act(x: &Generator, v: &VermaVector) -> BTreeMap<PbwMonomial, PolyQ> {
    let mut out: BTreeMap<PbwMonomial, PolyQ> = BTreeMap::new();
    for (m, c) in v.terms() {
        let mut word = vec![*x];
        word.extend(m.word());
        for (b, p) in oracle_apply(&word, c) {
            let slot = out.entry(b.clone()).or_insert_with(PolyQ::zero);
            *slot = &*slot + &p;
            if slot.is_zero() {
                out.remove(&b);
            }
        }
    }
    out
}

pub fn as_map(v: &VermaVector) -> BTreeMap<PbwMonomial, PolyQ> {
    v.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

// Exact numeric linear algebra.

/// Basis of the nullspace, reduced so each vector's last nonzero entry is 1
/// and every such pivot position is zero in the other vectors.
pub fn nullspace(matrix: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let mut a: Vec<Vec<Rat>> = matrix.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..a.len()).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(row, p);
        let inv = a[row][c].recip();
        for x in a[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..a.len() {
            if r != row && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..cols {
                    let d = &f * &a[row][k];
                    a[r][k] -= d;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    let mut basis = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::zero(); cols];
        v[f] = Rat::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[r][f].clone();
        }
        basis.push(v);
    }
    reverse_reduce(basis)
}

fn reverse_reduce(mut vecs: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let Some(cols) = vecs.first().map(Vec::len) else { return vecs };
    let mut done: Vec<(usize, Vec<Rat>)> = Vec::new();
    for col in (0..cols).rev() {
        let Some(k) = vecs.iter().position(|v| !v[col].is_zero()) else { continue };
        let v = vecs.remove(k);
        let inv = v[col].recip();
        let v: Vec<Rat> = v.iter().map(|x| x * &inv).collect();
        let clear = |w: &mut Vec<Rat>| {
            let f = w[col].clone();
            if !f.is_zero() {
                for (a, b) in w.iter_mut().zip(&v) {
                    *a -= &f * b;
                }
            }
        };
        vecs.iter_mut().for_each(clear);
        done.iter_mut().for_each(|(_, w)| clear(w));
        done.push((col, v));
    }
    done.sort_by_key(|(c, _)| *c);
    done.into_iter().map(|(_, v)| v).collect()
}

pub fn eval_kernel(kernel: &[Vec<RatFuncQ>], point: &[Rat]) -> Option<Vec<Vec<Rat>>> {
    kernel.iter().map(|v| v.iter().map(|c| c.eval(point)).collect()).collect()
}

// Random data.

pub fn random_rat(rng: &mut ChaCha8Rng, span: i64) -> Rat {
    let p = rng.gen_range(-span..=span);
    let q = rng.gen_range(1..=span.max(1));
    rat(p, q)
}

pub fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rat> {
    (0..n).map(|_| random_rat(rng, 17)).collect()
}

pub fn random_poly(rng: &mut ChaCha8Rng, n: usize, terms: usize, degree: u32) -> PolyQ {
    let mut p = PolyQ::zero();
    for _ in 0..terms {
        let mut t = PolyQ::constant(random_rat(rng, 5));
        for _ in 0..rng.gen_range(0..=degree) {
            t = &t * &PolyQ::var(rng.gen_range(0..n));
        }
        p = &p + &t;
    }
    p
}

/// A random homogeneous vector whose monomials have degree at most `grade`.
pub fn random_vector(rng: &mut ChaCha8Rng, n: usize, grade: u32) -> VermaVector {
    use jacobi_verma::pbw::monomial_weight;
    use jacobi_verma::singular::enumerate_ansatz;
    let positives = generators_of_class(n, GenClass::Positive).unwrap();
    let len = rng.gen_range(0..=grade);
    let mut seed: Vec<Generator> = (0..len).map(|_| positives[rng.gen_range(0..positives.len())]).collect();
    seed.sort();
    let w = monomial_weight(&to_monomial(&seed), n);
    let candidates: Vec<PbwMonomial> = enumerate_ansatz(&w, n).into_iter().filter(|m| m.degree() <= grade).collect();
    let mut v = VermaVector::zero(n);
    for (k, m) in candidates.iter().enumerate() {
        if k == 0 || rng.gen_bool(0.6) {
            let c = random_poly(rng, n, 2, 1);
            let c = if c.is_zero() { PolyQ::one() } else { c };
            v.add_term(m.clone(), c).unwrap();
        }
    }
    v
}

// Solver oracles.

/// Matrix of the conditions `x · v = 0` at `point`, built with the oracle action.
pub fn oracle_matrix(n: usize, monomials: &[PbwMonomial], point: &[Rat]) -> Vec<Vec<Rat>> {
    let mut rows = Vec::new();
    for x in generators_of_class(n, GenClass::Negative).unwrap() {
        let images: Vec<_> = monomials
            .iter()
            .map(|m| oracle_act(&x, &VermaVector::monomial(n, m.clone(), PolyQ::one()).unwrap()))
            .collect();
        let targets: BTreeSet<&PbwMonomial> = images.iter().flat_map(|i| i.keys()).collect();
        for t in targets {
            rows.push(
                images
                    .iter()
                    .map(|i| i.get(t).map(|p| p.eval(point).unwrap()).unwrap_or_else(Rat::zero))
                    .collect(),
            );
        }
    }
    rows
}

/// A point on the branch, built from its solved form and random free values.
pub fn point_on(branch: &SolutionBranch, rng: &mut ChaCha8Rng, n: usize) -> Option<Vec<Rat>> {
    let subst = branch.constraints.solved_form()?;
    let mut point = random_point(rng, n);
    for _ in 0..=subst.len() {
        for (v, rhs) in subst {
            point[*v] = rhs.eval(&point).unwrap();
        }
    }
    branch.constraints.is_satisfied_by(&point).then_some(point)
}

pub fn generic_at(branch: &SolutionBranch, point: &[Rat]) -> bool {
    branch.genericity.iter().all(|g| !g.eval(point).unwrap().is_zero())
}
