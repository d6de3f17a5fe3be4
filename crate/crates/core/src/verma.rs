//! Lowest-weight Verma modules with a formal weight `Λ = (L1, ..., Ln)`.
//!
//! A vector is `Σ p_m(Λ) m·v0` over positive PBW monomials `m`. Acting with
//! a generator normal-orders `x·m`; trailing negative factors kill `v0` and
//! each Cartan factor `h_i` contributes `L_i`.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{generators_of_class, GenClass, Generator, Weight};
use crate::pbw::{monomial_weight, normal_order_word, PbwMonomial};
use crate::ring::{squarefree_part, Exponents, PolyQ, Rat, RatFuncQ};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VermaError {
    #[error("inhomogeneous vector: {first} and {second} have different weights")]
    Inhomogeneous { first: String, second: String },
    #[error("the zero vector has no weight")]
    ZeroVector,
    #[error("monomial {0} is not in the positive part")]
    NotPositive(String),
    #[error("inconsistent constraints: {0} = 0")]
    Inconsistent(String),
    #[error("constraint {0} involves L{1} but the module has rank {2}")]
    VariableOutOfRange(String, usize, usize),
}

/// Vector in `V^Λ`: positive monomials applied to `v0` with polynomial
/// coefficients in `L1..Ln`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VermaVector {
    n: usize,
    terms: BTreeMap<PbwMonomial, PolyQ>,
}

impl VermaVector {
    pub fn zero(n: usize) -> Self {
        VermaVector { n, terms: BTreeMap::new() }
    }

    /// The lowest weight vector `v0`.
    pub fn v0(n: usize) -> Self {
        Self::monomial(n, PbwMonomial::one(), PolyQ::one()).expect("identity is positive")
    }

    pub fn monomial(n: usize, m: PbwMonomial, c: PolyQ) -> Result<Self, VermaError> {
        let mut v = Self::zero(n);
        v.add_term(m, c)?;
        Ok(v)
    }

    pub fn from_terms<I: IntoIterator<Item = (PbwMonomial, PolyQ)>>(n: usize, iter: I) -> Result<Self, VermaError> {
        let mut v = Self::zero(n);
        for (m, c) in iter {
            v.add_term(m, c)?;
        }
        Ok(v)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: PolyQ) -> Result<(), VermaError> {
        if !m.is_positive() {
            return Err(VermaError::NotPositive(m.to_text()));
        }
        self.add_unchecked(m, c);
        Ok(())
    }

    fn add_unchecked(&mut self, m: PbwMonomial, c: PolyQ) {
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

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &PolyQ)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> PolyQ {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &VermaVector) -> VermaVector {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_unchecked(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &VermaVector) -> VermaVector {
        self.add(&other.scale(&PolyQ::from(-1)))
    }

    pub fn scale(&self, c: &PolyQ) -> VermaVector {
        let mut out = Self::zero(self.n);
        for (m, x) in &self.terms {
            out.add_unchecked(m.clone(), x * c);
        }
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&PolyQ) -> PolyQ) -> VermaVector {
        let mut out = Self::zero(self.n);
        for (m, x) in &self.terms {
            out.add_unchecked(m.clone(), f(x));
        }
        out
    }

    /// Terms in display order: higher degree first.
    pub fn display_terms(&self) -> Vec<(&PbwMonomial, &PolyQ)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(b.0)));
        v
    }

    /// `P v0` form: `2 a+2 v0`, `((a+2)^2 - 2 b+2) v0`, `v0`, `0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<(String, RatFuncQ)> = self
            .display_terms()
            .into_iter()
            .map(|(m, c)| (m.to_text(), RatFuncQ::from_poly(c.clone())))
            .collect();
        let body = crate::cli::render::combination_text(terms.iter().map(|(m, c)| (m.clone(), c)));
        if terms.len() == 1 {
            if terms[0].0 == "1" && terms[0].1.num().num_terms() > 1 {
                format!("({body}) v0")
            } else if body == "1" {
                "v0".into()
            } else if body == "-1" {
                "-v0".into()
            } else {
                format!("{body} v0")
            }
        } else {
            format!("({body}) v0")
        }
    }
}

impl fmt::Display for VermaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Evaluates a normal-ordered monomial on `v0`: `None` if a negative factor
/// survives, otherwise the positive part and the Cartan eigenvalue.
pub fn project_on_v0(m: &PbwMonomial) -> Option<(PbwMonomial, PolyQ)> {
    let (pos, cartan, neg) = m.split_by_class();
    if !neg.is_one() {
        return None;
    }
    let mut exps = Vec::new();
    for (h, e) in cartan.factors() {
        let v = h.indices().0 - 1;
        if exps.len() <= v {
            exps.resize(v + 1, 0);
        }
        exps[v] += *e;
    }
    Some((pos, PolyQ::monomial(Exponents::from_vec(exps), Rat::from_integer(1.into()))))
}

/// `word · v0` for an arbitrary word of generators.
pub fn apply_word(n: usize, word: &[Generator], coeff: &PolyQ) -> VermaVector {
    let mut out = VermaVector::zero(n);
    for (m, c) in normal_order_word(word) {
        if let Some((pos, eig)) = project_on_v0(&m) {
            out.add_unchecked(pos, (coeff * &eig).scale(&c));
        }
    }
    out
}

/// The action `x · v`.
pub fn act(x: &Generator, v: &VermaVector) -> VermaVector {
    let mut out = VermaVector::zero(v.n);
    for (m, c) in &v.terms {
        let mut word = Vec::with_capacity(m.degree() as usize + 1);
        word.push(*x);
        word.extend(m.word());
        out = out.add(&apply_word(v.n, &word, c));
    }
    out
}

/// Common weight of the support of `v`.
pub fn vector_weight(v: &VermaVector) -> Result<Weight, VermaError> {
    let mut iter = v.terms.keys();
    let first = iter.next().ok_or(VermaError::ZeroVector)?;
    let w = monomial_weight(first, v.n);
    for m in iter {
        if monomial_weight(m, v.n) != w {
            return Err(VermaError::Inhomogeneous { first: first.to_text(), second: m.to_text() });
        }
    }
    Ok(w)
}

/// Polynomial conditions on `Λ` with an optional triangular affine solution
/// `L_k = rhs`, where each `rhs` involves only unsolved variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConstraintSet {
    n: usize,
    equations: Vec<PolyQ>,
    solved: Option<Vec<(usize, PolyQ)>>,
}

impl ConstraintSet {
    pub fn empty(n: usize) -> Self {
        ConstraintSet { n, equations: Vec::new(), solved: Some(Vec::new()) }
    }

    /// Canonicalizes the equations (squarefree, monic, sorted, deduplicated)
    /// and solves them when they reduce to an affine system.
    pub fn from_equations(n: usize, eqs: Vec<PolyQ>) -> Result<Self, VermaError> {
        let mut equations = Vec::new();
        for e in eqs {
            if let Some(v) = e.max_var() {
                if v >= n {
                    return Err(VermaError::VariableOutOfRange(e.to_text(), v + 1, n));
                }
            }
            if e.is_zero() {
                continue;
            }
            if e.is_constant() {
                return Err(VermaError::Inconsistent(e.to_text()));
            }
            equations.push(squarefree_part(&e));
        }
        equations.sort();
        equations.dedup();
        let solved = solve_affine(&equations)?;
        Ok(ConstraintSet { n, equations, solved })
    }

    /// Builds the set from a triangular substitution; the equations are
    /// `L_k - rhs` made monic.
    pub fn from_solved(n: usize, mut subst: Vec<(usize, PolyQ)>) -> Self {
        subst.sort_by(|a, b| b.0.cmp(&a.0));
        let mut equations: Vec<PolyQ> =
            subst.iter().map(|(v, rhs)| (&PolyQ::var(*v) - rhs).monic()).collect();
        equations.sort();
        ConstraintSet { n, equations, solved: Some(subst) }
    }

    /// Equations without a solved form (for nonlinear loci).
    pub fn unsolved(n: usize, mut equations: Vec<PolyQ>) -> Self {
        equations.sort();
        equations.dedup();
        ConstraintSet { n, equations, solved: None }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn equations(&self) -> &[PolyQ] {
        &self.equations
    }

    pub fn solved_form(&self) -> Option<&[(usize, PolyQ)]> {
        self.solved.as_deref()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    /// Applies the solved form. `None` if there is none.
    pub fn reduce(&self, p: &PolyQ) -> Option<PolyQ> {
        let subst = self.solved.as_ref()?;
        Some(subst.iter().fold(p.clone(), |acc, (v, rhs)| acc.substitute(*v, rhs)))
    }

    pub fn reduce_ratfunc(&self, f: &RatFuncQ) -> Option<RatFuncQ> {
        let num = self.reduce(f.num())?;
        let den = self.reduce(f.den())?;
        RatFuncQ::new(num, den).ok()
    }

    /// Whether every equation vanishes at `point`.
    pub fn is_satisfied_by(&self, point: &[Rat]) -> bool {
        self.equations
            .iter()
            .all(|e| e.eval(point).map(|x| x == Rat::from_integer(0.into())).unwrap_or(false))
    }

    /// Text forms of the solved substitutions: `L2 = L1`, `L1 = 3/4`.
    pub fn solved_text(&self) -> Vec<String> {
        self.solved
            .as_ref()
            .map(|s| s.iter().map(|(v, rhs)| format!("L{} = {}", v + 1, rhs.to_text())).collect())
            .unwrap_or_default()
    }
}

fn solve_affine(equations: &[PolyQ]) -> Result<Option<Vec<(usize, PolyQ)>>, VermaError> {
    let mut subst: Vec<(usize, PolyQ)> = Vec::new();
    let mut pending: Vec<PolyQ> = equations.to_vec();
    loop {
        let mut progressed = false;
        let mut still = Vec::new();
        for e in pending {
            let r = subst.iter().fold(e, |acc, (v, rhs)| acc.substitute(*v, rhs));
            if r.is_zero() {
                continue;
            }
            if r.is_constant() {
                return Err(VermaError::Inconsistent(r.to_text()));
            }
            if !r.is_affine() {
                still.push(r);
                continue;
            }
            let x = r.max_var().expect("non-constant");
            let a = r.lead_in(x).constant_value().expect("affine");
            let rhs = (&PolyQ::var(x).scale(&a) - &r).scale(&a.recip());
            for (_, other) in subst.iter_mut() {
                *other = other.substitute(x, &rhs);
            }
            subst.push((x, rhs));
            progressed = true;
        }
        pending = still;
        if pending.is_empty() {
            subst.sort_by(|a, b| b.0.cmp(&a.0));
            return Ok(Some(subst));
        }
        if !progressed {
            return Ok(None);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Singular,
    NotSingular,
    /// The vector vanishes identically on the constraint locus.
    ZeroVector,
    /// Constraints without a solved form.
    Unverifiable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCheck {
    pub generator: Generator,
    pub image: VermaVector,
    pub vanishes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityReport {
    pub checks: Vec<GeneratorCheck>,
    pub verdict: Verdict,
}

impl SingularityReport {
    pub fn is_singular(&self) -> bool {
        self.verdict == Verdict::Singular
    }
}

/// Checks `X v = 0` for every negative basis generator `X` after
/// substituting the solved form of `c`.
pub fn is_singular(v: &VermaVector, c: &ConstraintSet) -> SingularityReport {
    let n = v.n;
    let negatives = generators_of_class(n, GenClass::Negative).expect("n >= 1");
    let reduce = |w: &VermaVector| match c.solved_form() {
        Some(_) => w.map_coeffs(|p| c.reduce(p).expect("solved")),
        None => w.clone(),
    };
    let checks: Vec<GeneratorCheck> = negatives
        .iter()
        .map(|x| {
            let image = reduce(&act(x, v));
            let vanishes = image.is_zero();
            GeneratorCheck { generator: *x, image, vanishes }
        })
        .collect();
    let verdict = if c.solved_form().is_none() {
        Verdict::Unverifiable
    } else if reduce(v).is_zero() {
        Verdict::ZeroVector
    } else if checks.iter().all(|k| k.vanishes) {
        Verdict::Singular
    } else {
        Verdict::NotSingular
    };
    SingularityReport { checks, verdict }
}
