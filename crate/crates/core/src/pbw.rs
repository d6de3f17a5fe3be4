//! PBW-ordered monomials and elements of the universal enveloping algebra.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{bracket_unchecked, weight, GenClass, Generator, Weight};
use crate::ring::{Rat, RatFuncQ};

/// Ordered product of generators with multiplicities, factors sorted by the
/// global generator order. The empty monomial is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PbwMonomial {
    factors: Vec<(Generator, u32)>,
}

impl PbwMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn generator(g: Generator) -> Self {
        PbwMonomial { factors: vec![(g, 1)] }
    }

    /// Builds a monomial from `(generator, multiplicity)` pairs in any order,
    /// merging repeats. This is a commutative collection: it does not
    /// reorder a noncommutative word (use [`normal_order`] for that).
    pub fn from_powers<I: IntoIterator<Item = (Generator, u32)>>(iter: I) -> Self {
        let mut map: BTreeMap<Generator, u32> = BTreeMap::new();
        for (g, e) in iter {
            if e > 0 {
                *map.entry(g).or_insert(0) += e;
            }
        }
        PbwMonomial { factors: map.into_iter().collect() }
    }

    /// The monomial of an already sorted word.
    fn from_sorted_word(word: &[Generator]) -> Self {
        let mut factors: Vec<(Generator, u32)> = Vec::new();
        for g in word {
            match factors.last_mut() {
                Some((h, e)) if h == g => *e += 1,
                _ => factors.push((*g, 1)),
            }
        }
        PbwMonomial { factors }
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, g: &Generator) -> u32 {
        self.factors.iter().find(|(h, _)| h == g).map(|(_, e)| *e).unwrap_or(0)
    }

    /// The monomial as a flat word of generators.
    pub fn word(&self) -> Vec<Generator> {
        self.factors
            .iter()
            .flat_map(|(g, e)| std::iter::repeat(*g).take(*e as usize))
            .collect()
    }

    pub fn is_positive(&self) -> bool {
        self.factors.iter().all(|(g, _)| g.class() == GenClass::Positive)
    }

    /// Splits into the positive, Cartan and negative parts.
    pub fn split_by_class(&self) -> (PbwMonomial, PbwMonomial, PbwMonomial) {
        let part = |class| PbwMonomial {
            factors: self.factors.iter().filter(|(g, _)| g.class() == class).cloned().collect(),
        };
        (part(GenClass::Positive), part(GenClass::Cartan), part(GenClass::Negative))
    }

    /// Text form: `b+2 (d+)^2`, `(a+2)^2 (d+)^2`; the identity renders as `1`.
    pub fn to_text(&self) -> String {
        if self.is_one() {
            return "1".into();
        }
        self.factors
            .iter()
            .map(|(g, e)| if *e == 1 { g.name() } else { format!("({})^{}", g.name(), e) })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_latex(&self, short: bool) -> String {
        if self.is_one() {
            return "1".into();
        }
        self.factors
            .iter()
            .map(|(g, e)| {
                let s = g.to_latex(short);
                if *e == 1 {
                    s
                } else {
                    format!("({s})^{{{e}}}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Additive weight of a monomial in `g_n`.
pub fn monomial_weight(m: &PbwMonomial, n: usize) -> Weight {
    let mut w = Weight::zero(n);
    for (g, e) in &m.factors {
        let gw = weight(g).expect("basis generators are weight vectors");
        w = &w + &gw.scale(*e as i64);
    }
    w
}

/// Finite linear combination of PBW monomials with rational-function
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UElement {
    terms: BTreeMap<PbwMonomial, RatFuncQ>,
}

impl UElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(PbwMonomial::one(), RatFuncQ::one())
    }

    pub fn from_monomial(m: PbwMonomial, c: RatFuncQ) -> Self {
        let mut u = Self::zero();
        u.add_term(m, c);
        u
    }

    pub fn generator(g: Generator) -> Self {
        Self::from_monomial(PbwMonomial::generator(g), RatFuncQ::one())
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: RatFuncQ) {
        if c.is_zero() {
            return;
        }
        let next = match self.terms.remove(&m) {
            Some(old) => &old + &c,
            None => c,
        };
        if !next.is_zero() {
            self.terms.insert(m, next);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &RatFuncQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> RatFuncQ {
        self.terms.get(m).cloned().unwrap_or_else(RatFuncQ::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &UElement) -> UElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &UElement) -> UElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &RatFuncQ) -> UElement {
        let mut out = UElement::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    /// Terms in display order: higher degree first, then the monomial order.
    pub fn display_terms(&self) -> Vec<(&PbwMonomial, &RatFuncQ)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(b.0)));
        v
    }

    pub fn to_text(&self) -> String {
        crate::cli::render::combination_text(self.display_terms().into_iter().map(|(m, c)| (m.to_text(), c)))
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Normal form of a word with rational coefficients.
///
/// Rewrites the leftmost adjacent pair `x y` with `x` after `y` in the
/// global order as `y x + [x, y]` until every word is sorted. Each rewrite
/// either removes one inversion at fixed length or shortens the word, so
/// the process terminates.
pub fn normal_order_word(word: &[Generator]) -> BTreeMap<PbwMonomial, Rat> {
    normal_order_word_with_fuel(word, usize::MAX).expect("unbounded fuel")
}

/// [`normal_order_word`] limited to `fuel` rewrites; `None` if it runs out.
pub fn normal_order_word_with_fuel(word: &[Generator], mut fuel: usize) -> Option<BTreeMap<PbwMonomial, Rat>> {
    let mut out: BTreeMap<PbwMonomial, Rat> = BTreeMap::new();
    let mut stack: Vec<(Vec<Generator>, Rat)> = vec![(word.to_vec(), Rat::one())];
    while let Some((w, c)) = stack.pop() {
        let Some(k) = w.windows(2).position(|p| p[0] > p[1]) else {
            let m = PbwMonomial::from_sorted_word(&w);
            let slot = out.entry(m).or_insert_with(Rat::zero);
            *slot += c;
            continue;
        };
        fuel = fuel.checked_sub(1)?;
        let (x, y) = (w[k], w[k + 1]);
        let br = bracket_unchecked(&x, &y);
        if !br.scalar.is_zero() {
            let mut shorter = Vec::with_capacity(w.len() - 2);
            shorter.extend_from_slice(&w[..k]);
            shorter.extend_from_slice(&w[k + 2..]);
            stack.push((shorter, &c * &br.scalar));
        }
        for (z, bc) in &br.terms {
            let mut shorter = Vec::with_capacity(w.len() - 1);
            shorter.extend_from_slice(&w[..k]);
            shorter.push(*z);
            shorter.extend_from_slice(&w[k + 2..]);
            stack.push((shorter, &c * bc));
        }
        let mut swapped = w;
        swapped.swap(k, k + 1);
        stack.push((swapped, c));
    }
    out.retain(|_, c| !c.is_zero());
    Some(out)
}

/// PBW normal form of `prefactor · word`.
pub fn normal_order(word: &[Generator], prefactor: &RatFuncQ) -> UElement {
    let mut out = UElement::zero();
    if prefactor.is_zero() {
        return out;
    }
    for (m, c) in normal_order_word(word) {
        out.add_term(m, prefactor.scale(&c));
    }
    out
}

/// Product in the enveloping algebra, returned in normal form.
pub fn multiply(a: &UElement, b: &UElement) -> UElement {
    let mut out = UElement::zero();
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let mut word = ma.word();
            word.extend(mb.word());
            let coeff = ca * cb;
            for (m, c) in normal_order_word(&word) {
                out.add_term(m, coeff.scale(&c));
            }
        }
    }
    out
}

/// Normal form of an arbitrary element (terms re-ordered and merged).
pub fn normalize(u: &UElement) -> UElement {
    multiply(&UElement::one(), u)
}
