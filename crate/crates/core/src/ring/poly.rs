use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{fmt_rat, latex_rat, Rat, RingError};

/// Exponent vector of a monomial in `L1, L2, ...`, trailing zeros trimmed.
///
/// Ordered graded-lex with the highest-index variable most significant, so
/// `L2 > L1` and `L2^2 > L1*L2 > L1^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Exponents(Vec<u32>);

impl Exponents {
    pub fn one() -> Self {
        Exponents(Vec::new())
    }

    pub fn var(v: usize) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: usize, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        let mut exps = vec![0; v + 1];
        exps[v] = e;
        Exponents(exps)
    }

    pub fn from_vec(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Exponents(exps)
    }

    pub fn get(&self, v: usize) -> u32 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of variable slots in use (highest variable index + 1).
    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn mul(&self, other: &Exponents) -> Exponents {
        let len = self.0.len().max(other.0.len());
        Exponents::from_vec((0..len).map(|i| self.get(i) + other.get(i)).collect())
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Exponents) -> Option<Exponents> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut out = self.0.clone();
        for (i, &e) in other.0.iter().enumerate() {
            if out[i] < e {
                return None;
            }
            out[i] -= e;
        }
        Some(Exponents::from_vec(out))
    }

    fn with(&self, v: usize, e: u32) -> Exponents {
        let mut out = self.0.clone();
        if out.len() <= v {
            out.resize(v + 1, 0);
        }
        out[v] = e;
        Exponents::from_vec(out)
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let len = self.0.len().max(other.0.len());
            for v in (0..len).rev() {
                match self.get(v).cmp(&other.get(v)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over Q in the variables `L1, L2, ...`.
///
/// No zero coefficients are stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    terms: BTreeMap<Exponents, Rat>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(Exponents::one(), c)
    }

    /// The variable `L{v+1}`.
    pub fn var(v: usize) -> Self {
        Self::monomial(Exponents::var(v), Rat::one())
    }

    pub fn monomial(exps: Exponents, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        PolyQ { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, Rat)>>(iter: I) -> Self {
        let mut p = PolyQ::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exps: Exponents, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Exponents::is_one)
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(&Exponents, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero)
    }

    /// Total degree; zero for constants (including the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Exponents::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e.get(v)).max().unwrap_or(0)
    }

    /// Highest variable index that occurs, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.terms.keys().filter_map(|e| e.width().checked_sub(1)).max()
    }

    pub fn vars(&self) -> Vec<usize> {
        let width = self.terms.keys().map(Exponents::width).max().unwrap_or(0);
        (0..width).filter(|&v| self.degree_in(v) > 0).collect()
    }

    pub fn is_affine(&self) -> bool {
        self.degree() <= 1
    }

    pub fn scale(&self, c: &Rat) -> PolyQ {
        if c.is_zero() {
            return PolyQ::zero();
        }
        PolyQ {
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, exps: &Exponents, c: &Rat) -> PolyQ {
        if c.is_zero() {
            return PolyQ::zero();
        }
        PolyQ {
            terms: self.terms.iter().map(|(e, x)| (e.mul(exps), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> PolyQ {
        let mut acc = PolyQ::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> PolyQ {
        if self.is_zero() {
            return PolyQ::zero();
        }
        self.scale(&self.leading_coeff().recip())
    }

    /// Substitutes values for some variables; `None` leaves a variable free.
    pub fn eval_partial(&self, point: &[Option<Rat>]) -> PolyQ {
        let mut out = PolyQ::zero();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::with_capacity(e.width());
            for (v, &k) in e.as_slice().iter().enumerate() {
                match point.get(v).and_then(Option::as_ref) {
                    Some(x) if k > 0 => {
                        coeff *= num_traits::pow(x.clone(), k as usize);
                        rest.push(0);
                    }
                    _ => rest.push(k),
                }
            }
            out.add_term(Exponents::from_vec(rest), coeff);
        }
        out
    }

    /// Evaluates at a full point. Variables beyond `point.len()` are an error.
    pub fn eval(&self, point: &[Rat]) -> Option<Rat> {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            if e.width() > point.len() {
                return None;
            }
            let mut t = c.clone();
            for (v, &k) in e.as_slice().iter().enumerate() {
                if k > 0 {
                    t *= num_traits::pow(point[v].clone(), k as usize);
                }
            }
            acc += t;
        }
        Some(acc)
    }

    /// Replaces variable `v` by the polynomial `s`.
    pub fn substitute(&self, v: usize, s: &PolyQ) -> PolyQ {
        if self.degree_in(v) == 0 {
            return self.clone();
        }
        let coeffs = self.coeffs_in(v);
        // Horner in v
        let mut acc = PolyQ::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * s) + c;
        }
        acc
    }

    /// Coefficients as a polynomial in `v`: `result[k]` multiplies `v^k`.
    pub fn coeffs_in(&self, v: usize) -> Vec<PolyQ> {
        let mut out = vec![PolyQ::zero(); self.degree_in(v) as usize + 1];
        for (e, c) in &self.terms {
            let k = e.get(v);
            out[k as usize].add_term(e.with(v, 0), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: usize, coeffs: &[PolyQ]) -> PolyQ {
        let mut out = PolyQ::zero();
        for (k, c) in coeffs.iter().enumerate() {
            for (e, x) in &c.terms {
                out.add_term(e.with(v, k as u32), x.clone());
            }
        }
        out
    }

    /// Leading coefficient with respect to `v` (a polynomial free of `v`).
    pub fn lead_in(&self, v: usize) -> PolyQ {
        self.coeffs_in(v).pop().unwrap_or_default()
    }

    pub fn derivative(&self, v: usize) -> PolyQ {
        let mut out = PolyQ::zero();
        for (e, c) in &self.terms {
            let k = e.get(v);
            if k > 0 {
                out.add_term(e.with(v, k - 1), c * Rat::from_integer(k.into()));
            }
        }
        out
    }

    /// Multivariate division by a single divisor: `self = q*d + r` where no
    /// term of `r` is divisible by the leading monomial of `d`.
    pub fn div_rem(&self, d: &PolyQ) -> Result<(PolyQ, PolyQ), RingError> {
        let (lm, lc) = d.leading_term().ok_or(RingError::DivisionByZero)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut q = PolyQ::zero();
        let mut r = PolyQ::zero();
        let mut p = self.clone();
        while let Some((e, c)) = p.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            match e.div(&lm) {
                Some(shift) => {
                    let f = &c / &lc;
                    p = &p - &d.mul_monomial(&shift, &f);
                    q.add_term(shift, f);
                }
                None => {
                    p.terms.remove(&e);
                    r.add_term(e, c);
                }
            }
        }
        Ok((q, r))
    }

    /// `self / d` when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &PolyQ) -> Result<PolyQ, RingError> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(RingError::InexactDivision)
        }
    }

    pub fn divides(&self, other: &PolyQ) -> bool {
        !self.is_zero() && other.div_rem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Text rendering, leading term first: `2*L2^2 - L1 + 3/4`.
    pub fn to_text(&self) -> String {
        self.render(fmt_rat, text_monomial, "*")
    }

    pub fn to_latex(&self) -> String {
        self.render(latex_rat, latex_monomial, " ")
    }

    fn render(&self, num: fn(&Rat) -> String, mono: fn(&Exponents) -> String, times: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if e.is_one() {
                out.push_str(&num(&abs));
            } else if abs.is_one() {
                out.push_str(&mono(e));
            } else {
                out.push_str(&num(&abs));
                out.push_str(times);
                out.push_str(&mono(e));
            }
        }
        out
    }
}

fn text_monomial(e: &Exponents) -> String {
    e.as_slice()
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| if k == 1 { format!("L{}", v + 1) } else { format!("L{}^{}", v + 1, k) })
        .collect::<Vec<_>>()
        .join("*")
}

fn latex_monomial(e: &Exponents) -> String {
    e.as_slice()
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| {
            if k == 1 {
                format!("\\Lambda(H_{})", v + 1)
            } else {
                format!("\\Lambda(H_{})^{{{}}}", v + 1, k)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Compares leading terms first, then the remaining terms in descending order.
impl Ord for PolyQ {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ea, ca)), Some((eb, cb))) => {
                    let ord = ea.cmp(eb).then_with(|| ca.cmp(cb));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
            }
        }
    }
}

impl PartialOrd for PolyQ {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Rat> for PolyQ {
    fn from(c: Rat) -> Self {
        PolyQ::constant(c)
    }
}

impl From<i64> for PolyQ {
    fn from(c: i64) -> Self {
        PolyQ::constant(super::int(c))
    }
}

impl<'a> Add<&'a PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &'a PolyQ) -> PolyQ {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &'a PolyQ) -> PolyQ {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &'a PolyQ) -> PolyQ {
        let mut out = PolyQ::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.mul(eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $m(self, rhs: PolyQ) -> PolyQ {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $m(self, rhs: &'a PolyQ) -> PolyQ {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}
