//! The Jacobi algebra `g_n = h_n ⋊ sp(n)`.
//!
//! Basis: Heisenberg generators `a+[i]`, `a-[i]`, symmetric `K+[i,j]`,
//! `K-[i,j]` (stored with `i <= j`) and `K0[i,j]`. Brackets are evaluated
//! from the Kronecker-delta formulas for arbitrary `n`; the Heisenberg
//! bracket `[a-_i, a+_j] = δ_ij` produces the identity, carried as the
//! scalar part of a [`BracketResult`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::ring::{fmt_rat, rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("dimension must be at least 1")]
    InvalidDimension,
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("generators from different algebras: g_{0} and g_{1}")]
    DimensionMismatch(usize, usize),
    #[error("{0} is not an eigenvector of the Cartan subalgebra")]
    NotAnEigenvector(Generator),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    APlus,
    AMinus,
    KPlus,
    KMinus,
    KZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenClass {
    Positive,
    Cartan,
    Negative,
}

/// One basis element of `g_n`. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    family: Family,
    i: usize,
    j: usize,
    n: usize,
}

impl Generator {
    /// Builds a generator, canonicalizing `K±[i,j]` to `i <= j`. The second
    /// index is ignored for the Heisenberg families.
    pub fn new(family: Family, i: usize, j: usize, n: usize) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::InvalidDimension);
        }
        let heis = matches!(family, Family::APlus | Family::AMinus);
        for index in if heis { vec![i] } else { vec![i, j] } {
            if index == 0 || index > n {
                return Err(AlgebraError::IndexOutOfRange { index, n });
            }
        }
        let (i, j) = match family {
            Family::APlus | Family::AMinus => (i, 0),
            Family::KPlus | Family::KMinus => (i.min(j), i.max(j)),
            Family::KZero => (i, j),
        };
        Ok(Generator { family, i, j, n })
    }

    // Unchecked constructors for indices already known to be in range.
    pub(crate) fn a_plus(i: usize, n: usize) -> Self {
        Generator { family: Family::APlus, i, j: 0, n }
    }
    pub(crate) fn a_minus(i: usize, n: usize) -> Self {
        Generator { family: Family::AMinus, i, j: 0, n }
    }
    pub(crate) fn k_plus(i: usize, j: usize, n: usize) -> Self {
        Generator { family: Family::KPlus, i: i.min(j), j: i.max(j), n }
    }
    pub(crate) fn k_minus(i: usize, j: usize, n: usize) -> Self {
        Generator { family: Family::KMinus, i: i.min(j), j: i.max(j), n }
    }
    pub(crate) fn k_zero(i: usize, j: usize, n: usize) -> Self {
        Generator { family: Family::KZero, i, j, n }
    }

    /// The Cartan generator `h_i = K0[i,i]`.
    pub fn cartan(i: usize, n: usize) -> Result<Self, AlgebraError> {
        Self::new(Family::KZero, i, i, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn indices(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn class(&self) -> GenClass {
        classify(self)
    }

    /// The generator with every sign flipped: `a+ <-> a-`, `K+ <-> K-`,
    /// `K0[i,j] <-> K0[j,i]`. Cartan generators are fixed.
    pub fn mirror(&self) -> Generator {
        match self.family {
            Family::APlus => Self::a_minus(self.i, self.n),
            Family::AMinus => Self::a_plus(self.i, self.n),
            Family::KPlus => Self::k_minus(self.i, self.j, self.n),
            Family::KMinus => Self::k_plus(self.i, self.j, self.n),
            Family::KZero => Self::k_zero(self.j, self.i, self.n),
        }
    }

    fn order_key(&self) -> (u8, u8, usize, usize) {
        match (self.family, self.class()) {
            (Family::APlus, _) => (0, 0, self.i, 0),
            (Family::KPlus, _) => (0, 1, self.i, self.j),
            (Family::KZero, GenClass::Positive) => (0, 2, self.i, self.j),
            (Family::KZero, GenClass::Cartan) => (1, 0, self.i, self.i),
            (Family::AMinus, _) => (2, 0, self.i, 0),
            (Family::KMinus, _) => (2, 1, self.i, self.j),
            (Family::KZero, GenClass::Negative) => (2, 2, self.j, self.i),
        }
    }

    /// The `g_2` alias (`b+1`, `c+`, `d-`, `h2`, `a+1`, ...), if there is one.
    pub fn short_name(&self) -> Option<String> {
        if self.n != 2 {
            return None;
        }
        let s = match (self.family, self.i, self.j) {
            (Family::APlus, i, _) => format!("a+{i}"),
            (Family::AMinus, i, _) => format!("a-{i}"),
            (Family::KPlus, i, j) if i == j => format!("b+{i}"),
            (Family::KMinus, i, j) if i == j => format!("b-{i}"),
            (Family::KPlus, _, _) => "c+".into(),
            (Family::KMinus, _, _) => "c-".into(),
            (Family::KZero, i, j) if i == j => format!("h{i}"),
            (Family::KZero, 1, 2) => "d+".into(),
            (Family::KZero, _, _) => "d-".into(),
        };
        Some(s)
    }

    /// Canonical text form: `a+[1]`, `K+[1,2]`, `K0[2,1]`.
    pub fn long_name(&self) -> String {
        match self.family {
            Family::APlus => format!("a+[{}]", self.i),
            Family::AMinus => format!("a-[{}]", self.i),
            Family::KPlus => format!("K+[{},{}]", self.i, self.j),
            Family::KMinus => format!("K-[{},{}]", self.i, self.j),
            Family::KZero => format!("K0[{},{}]", self.i, self.j),
        }
    }

    /// Short name for `g_2`, long name otherwise.
    pub fn name(&self) -> String {
        self.short_name().unwrap_or_else(|| self.long_name())
    }

    pub fn to_latex(&self, short: bool) -> String {
        if short && self.n == 2 {
            return match (self.family, self.i, self.j) {
                (Family::APlus, i, _) => format!("a^+_{i}"),
                (Family::AMinus, i, _) => format!("a^-_{i}"),
                (Family::KPlus, i, j) if i == j => format!("b^+_{i}"),
                (Family::KMinus, i, j) if i == j => format!("b^-_{i}"),
                (Family::KPlus, _, _) => "c^+".into(),
                (Family::KMinus, _, _) => "c^-".into(),
                (Family::KZero, i, j) if i == j => format!("h_{i}"),
                (Family::KZero, 1, 2) => "d^+".into(),
                (Family::KZero, _, _) => "d^-".into(),
            };
        }
        match self.family {
            Family::APlus => format!("a^+_{}", self.i),
            Family::AMinus => format!("a^-_{}", self.i),
            Family::KPlus => format!("K^+_{{{}{}}}", self.i, self.j),
            Family::KMinus => format!("K^-_{{{}{}}}", self.i, self.j),
            Family::KZero => format!("K^0_{{{}{}}}", self.i, self.j),
        }
    }
}

/// Canonical global order: positives (`a+ < K+ < K0[i<j]`), then Cartan,
/// then negatives in mirrored order.
impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key()
            .cmp(&other.order_key())
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// All `2n + n(n+1) + n^2` basis elements of `g_n` in the global order.
pub fn generators(n: usize) -> Result<Vec<Generator>, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidDimension);
    }
    let mut out = Vec::with_capacity(2 * n + n * (n + 1) + n * n);
    for i in 1..=n {
        out.push(Generator::a_plus(i, n));
        out.push(Generator::a_minus(i, n));
        for j in 1..=n {
            if i <= j {
                out.push(Generator::k_plus(i, j, n));
                out.push(Generator::k_minus(i, j, n));
            }
            out.push(Generator::k_zero(i, j, n));
        }
    }
    out.sort();
    Ok(out)
}

/// Generators of one class, in the global order.
pub fn generators_of_class(n: usize, class: GenClass) -> Result<Vec<Generator>, AlgebraError> {
    Ok(generators(n)?.into_iter().filter(|g| g.class() == class).collect())
}

pub fn classify(g: &Generator) -> GenClass {
    match g.family {
        Family::APlus | Family::KPlus => GenClass::Positive,
        Family::AMinus | Family::KMinus => GenClass::Negative,
        Family::KZero => match g.i.cmp(&g.j) {
            Ordering::Less => GenClass::Positive,
            Ordering::Equal => GenClass::Cartan,
            Ordering::Greater => GenClass::Negative,
        },
    }
}

/// `scalar·1 + Σ c_g g`, the value of a bracket of two basis elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BracketResult {
    pub scalar: Rat,
    pub terms: BTreeMap<Generator, Rat>,
}

impl BracketResult {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: Rat) -> Self {
        BracketResult { scalar: c, terms: BTreeMap::new() }
    }

    pub fn generator(g: Generator) -> Self {
        let mut r = Self::zero();
        r.add_term(g, Rat::one());
        r
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.terms.is_empty()
    }

    pub fn add_term(&mut self, g: Generator, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = Self::scalar(&self.scalar * c);
        for (g, x) in &self.terms {
            out.add_term(*g, x * c);
        }
        out
    }

    pub fn coeff(&self, g: &Generator) -> Rat {
        self.terms.get(g).cloned().unwrap_or_else(Rat::zero)
    }

    /// Text rendering, e.g. `1/2 a+2` or `1/2 h2 - 1/2 h1`.
    pub fn to_text(&self) -> String {
        let mut parts: Vec<(bool, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(g, c)| {
                let neg = c < &Rat::zero();
                let a = if neg { -c.clone() } else { c.clone() };
                let body = if a.is_one() { g.name() } else { format!("{} {}", fmt_rat(&a), g.name()) };
                (neg, body)
            })
            .collect();
        if !self.scalar.is_zero() {
            let neg = self.scalar < Rat::zero();
            let a = if neg { -self.scalar.clone() } else { self.scalar.clone() };
            parts.push((neg, fmt_rat(&a)));
        }
        join_signed(parts)
    }
}

pub(crate) fn join_signed(parts: Vec<(bool, String)>) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (neg, body)) in parts.into_iter().enumerate() {
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

impl Add<&BracketResult> for &BracketResult {
    type Output = BracketResult;
    fn add(self, rhs: &BracketResult) -> BracketResult {
        let mut out = self.clone();
        out.scalar += &rhs.scalar;
        for (g, c) in &rhs.terms {
            out.add_term(*g, c.clone());
        }
        out
    }
}

impl Sub<&BracketResult> for &BracketResult {
    type Output = BracketResult;
    fn sub(self, rhs: &BracketResult) -> BracketResult {
        self + &(-rhs)
    }
}

impl Neg for &BracketResult {
    type Output = BracketResult;
    fn neg(self) -> BracketResult {
        self.scale(&-Rat::one())
    }
}

impl fmt::Display for BracketResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Lie bracket `[x, y]` of two basis elements of the same `g_n`.
pub fn bracket(x: &Generator, y: &Generator) -> Result<BracketResult, AlgebraError> {
    if x.n != y.n {
        return Err(AlgebraError::DimensionMismatch(x.n, y.n));
    }
    Ok(bracket_unchecked(x, y))
}

pub(crate) fn bracket_unchecked(x: &Generator, y: &Generator) -> BracketResult {
    match oriented(x, y) {
        Some(r) => r,
        None => -&oriented(y, x).expect("every family pair has one oriented formula"),
    }
}

fn delta(a: usize, b: usize) -> bool {
    a == b
}

/// Brackets written in one orientation per family pair; `None` means the
/// caller should use the reversed pair.
fn oriented(x: &Generator, y: &Generator) -> Option<BracketResult> {
    use Family::*;
    let n = x.n;
    let half = rat(1, 2);
    let mut r = BracketResult::zero();
    let (xi, xj, yi, yj) = (x.i, x.j, y.i, y.j);
    match (x.family, y.family) {
        (APlus, APlus) | (AMinus, AMinus) | (KPlus, KPlus) | (KMinus, KMinus) => {}
        (APlus, KPlus) | (AMinus, KMinus) => {}
        // [a-_i, a+_j] = δ_ij
        (AMinus, APlus) => {
            if delta(xi, yi) {
                r.scalar = Rat::one();
            }
        }
        // [a-_i, K+_kj] = ½δ_ik a+_j + ½δ_ij a+_k
        (AMinus, KPlus) => {
            let (i, k, j) = (xi, yi, yj);
            if delta(i, k) {
                r.add_term(Generator::a_plus(j, n), half.clone());
            }
            if delta(i, j) {
                r.add_term(Generator::a_plus(k, n), half);
            }
        }
        // [K-_kj, a+_i] = ½δ_ik a-_j + ½δ_ij a-_k
        (KMinus, APlus) => {
            let (k, j, i) = (xi, xj, yi);
            if delta(i, k) {
                r.add_term(Generator::a_minus(j, n), half.clone());
            }
            if delta(i, j) {
                r.add_term(Generator::a_minus(k, n), half);
            }
        }
        // [K0_ij, a+_k] = ½δ_jk a+_i
        (KZero, APlus) => {
            if delta(xj, yi) {
                r.add_term(Generator::a_plus(xi, n), half);
            }
        }
        // [a-_k, K0_ij] = ½δ_ik a-_j
        (AMinus, KZero) => {
            if delta(yi, xi) {
                r.add_term(Generator::a_minus(yj, n), half);
            }
        }
        // [K-_ij, K0_kl] = ½(δ_kj K-_il + δ_ki K-_jl)
        (KMinus, KZero) => {
            let (i, j, k, l) = (xi, xj, yi, yj);
            if delta(k, j) {
                r.add_term(Generator::k_minus(i, l, n), half.clone());
            }
            if delta(k, i) {
                r.add_term(Generator::k_minus(j, l, n), half);
            }
        }
        // [K-_ij, K+_kl] = ½(δ_li K0_kj + δ_ki K0_lj + δ_lj K0_ki + δ_kj K0_li)
        (KMinus, KPlus) => {
            let (i, j, k, l) = (xi, xj, yi, yj);
            if delta(l, i) {
                r.add_term(Generator::k_zero(k, j, n), half.clone());
            }
            if delta(k, i) {
                r.add_term(Generator::k_zero(l, j, n), half.clone());
            }
            if delta(l, j) {
                r.add_term(Generator::k_zero(k, i, n), half.clone());
            }
            if delta(k, j) {
                r.add_term(Generator::k_zero(l, i, n), half);
            }
        }
        // [K+_ij, K0_kl] = -½(δ_jl K+_ik + δ_li K+_jk)
        (KPlus, KZero) => {
            let (i, j, k, l) = (xi, xj, yi, yj);
            if delta(j, l) {
                r.add_term(Generator::k_plus(i, k, n), -half.clone());
            }
            if delta(l, i) {
                r.add_term(Generator::k_plus(j, k, n), -half);
            }
        }
        // [K0_ab, K0_cd] = ½(δ_cb K0_ad - δ_ad K0_cb)
        (KZero, KZero) => {
            let (a, b, c, d) = (xi, xj, yi, yj);
            if delta(c, b) {
                r.add_term(Generator::k_zero(a, d, n), half.clone());
            }
            if delta(a, d) {
                r.add_term(Generator::k_zero(c, b, n), -half);
            }
        }
        _ => return None,
    }
    Some(r)
}

/// Weight in the δ-basis: `coords[j] = 2 × (eigenvalue of ad h_{j+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Rat>,
}

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight { coords: vec![Rat::zero(); n] }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight { coords: coords.iter().map(|&c| Rat::from_integer(c.into())).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = Rat::from_integer(k.into());
        Weight { coords: self.coords.iter().map(|c| c * &k).collect() }
    }

    /// Comma-separated coordinates, `2,0` or `3/2,-1`.
    pub fn to_text(&self) -> String {
        self.coords.iter().map(fmt_rat).collect::<Vec<_>>().join(",")
    }

    /// Symbolic form in the δ-basis, e.g. `2δ_1` or `δ_1-δ_2` (ASCII `d`).
    pub fn to_delta_text(&self) -> String {
        let parts: Vec<(bool, String)> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let neg = c < &Rat::zero();
                let a = if neg { -c.clone() } else { c.clone() };
                let coef = if a.is_one() { String::new() } else { fmt_rat(&a) };
                (neg, format!("{coef}d{}", k + 1))
            })
            .collect();
        join_signed(parts).replace(' ', "")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coords.iter().map(fmt_rat).collect::<Vec<_>>().join(", "))
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weights of different rank");
        Weight { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { coords: self.coords.iter().map(|c| -c.clone()).collect() }
    }
}

/// Weight of a basis element, read off from `[h_j, g]` for each Cartan `h_j`.
pub fn weight(g: &Generator) -> Result<Weight, AlgebraError> {
    let n = g.n;
    let mut coords = Vec::with_capacity(n);
    for j in 1..=n {
        let h = Generator::k_zero(j, j, n);
        let r = bracket_unchecked(&h, g);
        let eig = r.coeff(g);
        let rest = r.terms.len() - usize::from(!eig.is_zero());
        if !r.scalar.is_zero() || rest != 0 {
            return Err(AlgebraError::NotAnEigenvector(*g));
        }
        coords.push(eig * Rat::from_integer(2.into()));
    }
    Ok(Weight { coords })
}
