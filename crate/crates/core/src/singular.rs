//! Singular-vector search.
//!
//! For a target weight `w` the ansatz is every positive PBW monomial of
//! weight `w`. Requiring `X (Σ ν_k m_k) v0 = 0` for all negative `X` gives a
//! homogeneous system `M(Λ) ν = 0` with polynomial entries, solved by
//! fraction-free elimination that splits on every pivot whose
//! non-vanishing is not already implied: one branch assumes the pivot is
//! nonzero, the others put one of its factors to zero.

use std::collections::BTreeMap;

use crate::algebra::{generators_of_class, weight, GenClass, Generator, Weight};
use crate::pbw::PbwMonomial;
use crate::ring::{linear_factors, poly_gcd, squarefree_part, PolyQ, Rat, RatFuncQ};
use crate::verma::{act, is_singular, ConstraintSet, SingularityReport, VermaVector, Verdict};

pub const DEFAULT_BRANCH_BUDGET: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("branch budget of {budget} exhausted; unexplored branches: {}", unexplored.join("; "))]
    BudgetExhausted {
        budget: usize,
        completed: Vec<SolutionBranch>,
        unexplored: Vec<String>,
    },
    #[error("weight has rank {0}, expected {1}")]
    RankMismatch(usize, usize),
}

/// All positive monomials of weight `w`.
///
/// Every positive generator has a strictly positive height under the
/// functional `(n, n-1, ..., 1)`, which bounds the search. The result is
/// ordered by the number of Heisenberg factors, then by exponent vectors
/// over the positive generators in decreasing lexicographic order.
pub fn enumerate_ansatz(w: &Weight, n: usize) -> Vec<PbwMonomial> {
    if n == 0 || w.dim() != n || w.coords.iter().any(|c| !c.is_integer()) {
        return Vec::new();
    }
    let positives = generators_of_class(n, GenClass::Positive).expect("n >= 1");
    let target: Vec<i64> = match w.coords.iter().map(|c| c.to_integer().try_into().ok()).collect() {
        Some(t) => t,
        None => return Vec::new(),
    };
    let weights: Vec<Vec<i64>> = positives
        .iter()
        .map(|g| {
            weight(g)
                .expect("basis weight")
                .coords
                .iter()
                .map(|c| c.to_integer().try_into().expect("small weight"))
                .collect()
        })
        .collect();
    let height = |v: &[i64]| -> i64 { v.iter().enumerate().map(|(k, c)| (n - k) as i64 * c).sum() };
    let heights: Vec<i64> = weights.iter().map(|v| height(v)).collect();
    debug_assert!(heights.iter().all(|&h| h > 0));

    let mut found = Vec::new();
    let mut exps = vec![0u32; positives.len()];
    search(0, &target, &weights, &heights, &mut exps, &mut found, height(&target));

    let heis = |e: &[u32]| -> u32 {
        positives
            .iter()
            .zip(e)
            .filter(|(g, _)| g.family() == crate::algebra::Family::APlus)
            .map(|(_, k)| *k)
            .sum()
    };
    found.sort_by(|a, b| heis(a).cmp(&heis(b)).then_with(|| b.cmp(a)));
    found
        .into_iter()
        .map(|e| PbwMonomial::from_powers(positives.iter().cloned().zip(e)))
        .collect()
}

fn search(
    k: usize,
    remaining: &[i64],
    weights: &[Vec<i64>],
    heights: &[i64],
    exps: &mut Vec<u32>,
    found: &mut Vec<Vec<u32>>,
    budget: i64,
) {
    if budget < 0 {
        return;
    }
    if k == weights.len() {
        if remaining.iter().all(|&c| c == 0) {
            found.push(exps.clone());
        }
        return;
    }
    let max = budget / heights[k];
    for e in 0..=max {
        let rest: Vec<i64> = remaining.iter().zip(&weights[k]).map(|(r, w)| r - e * w).collect();
        exps[k] = e as u32;
        search(k + 1, &rest, weights, heights, exps, found, budget - e * heights[k]);
    }
    exps[k] = 0;
}

/// One row of the system: the coefficient of `basis · v0` in `generator · v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowLabel {
    pub generator: Generator,
    pub basis: PbwMonomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnsatzSystem {
    pub n: usize,
    pub weight: Weight,
    pub monomials: Vec<PbwMonomial>,
    pub rows: Vec<RowLabel>,
    /// `matrix[row][k]` multiplies the unknown coefficient of `monomials[k]`.
    pub matrix: Vec<Vec<PolyQ>>,
}

impl AnsatzSystem {
    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// The matrix with `L_i` replaced by `point[i]`.
    pub fn eval(&self, point: &[Rat]) -> Vec<Vec<Rat>> {
        self.matrix
            .iter()
            .map(|row| row.iter().map(|e| e.eval(point).expect("full point")).collect())
            .collect()
    }
}

pub fn assemble_system(w: &Weight, n: usize) -> AnsatzSystem {
    let monomials = enumerate_ansatz(w, n);
    let mut rows = Vec::new();
    let mut matrix = Vec::new();
    if !monomials.is_empty() {
        for x in generators_of_class(n, GenClass::Negative).expect("n >= 1") {
            let mut block: BTreeMap<PbwMonomial, Vec<PolyQ>> = BTreeMap::new();
            for (k, m) in monomials.iter().enumerate() {
                let v = VermaVector::monomial(n, m.clone(), PolyQ::one()).expect("positive");
                for (b, c) in act(&x, &v).terms() {
                    block.entry(b.clone()).or_insert_with(|| vec![PolyQ::zero(); monomials.len()])[k] =
                        c.clone();
                }
            }
            for (basis, row) in block {
                rows.push(RowLabel { generator: x, basis });
                matrix.push(row);
            }
        }
    }
    AnsatzSystem { n, weight: w.clone(), monomials, rows, matrix }
}

/// A locus in Λ-space together with the kernel of the system there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionBranch {
    pub constraints: ConstraintSet,
    /// Basis of the kernel; each vector's last nonzero entry is 1.
    pub kernel: Vec<Vec<RatFuncQ>>,
    /// Polynomials assumed nonzero on this branch.
    pub genericity: Vec<PolyQ>,
}

impl SolutionBranch {
    pub fn describe(&self) -> String {
        describe_constraints(&self.constraints)
    }
}

fn describe_constraints(c: &ConstraintSet) -> String {
    if c.is_empty() {
        "generic".into()
    } else {
        c.equations().iter().map(|e| format!("{e} = 0")).collect::<Vec<_>>().join(", ")
    }
}

#[derive(Debug, Clone)]
struct State {
    n: usize,
    subst: Vec<(usize, PolyQ)>,
    residual: Vec<PolyQ>,
    nonzero: Vec<PolyQ>,
    matrix: Vec<Vec<PolyQ>>,
    pivots: Vec<(usize, usize)>,
    row_used: Vec<bool>,
    col_used: Vec<bool>,
}

enum Step {
    Pivot(usize, usize),
    Split(usize, usize),
    Done,
}

impl State {
    fn reduce(&self, p: &PolyQ) -> PolyQ {
        let r = self.subst.iter().fold(p.clone(), |acc, (v, rhs)| acc.substitute(*v, rhs));
        if self.residual.iter().any(|q| q.divides(&r)) {
            PolyQ::zero()
        } else {
            r
        }
    }

    /// Re-applies the constraints to everything. `false` if the branch is empty.
    fn normalize(&mut self) -> bool {
        for row in 0..self.matrix.len() {
            for col in 0..self.matrix[row].len() {
                if !self.matrix[row][col].is_zero() {
                    let r = self.reduce(&self.matrix[row][col]);
                    self.matrix[row][col] = r;
                }
            }
        }
        let mut kept = Vec::new();
        for f in std::mem::take(&mut self.nonzero) {
            let r = self.reduce(&f);
            if r.is_zero() {
                return false;
            }
            if !r.is_constant() {
                kept.push(squarefree_part(&r));
            }
        }
        kept.sort();
        kept.dedup();
        self.nonzero = kept;
        true
    }

    fn known_nonzero(&self, p: &PolyQ) -> bool {
        if p.is_zero() {
            return false;
        }
        let mut g = squarefree_part(p);
        for f in &self.nonzero {
            if g.is_constant() {
                break;
            }
            let h = poly_gcd(&g, f).expect("nonzero");
            if !h.is_constant() {
                g = g.div_exact(&h).expect("gcd divides");
            }
        }
        g.is_constant()
    }

    /// Drops from `p` every factor already asserted nonzero.
    fn strip_nonzero(&self, p: &PolyQ) -> PolyQ {
        let mut g = squarefree_part(p);
        for f in &self.nonzero {
            let h = poly_gcd(&g, f).expect("nonzero");
            if !h.is_constant() {
                g = g.div_exact(&h).expect("gcd divides");
            }
        }
        g
    }

    fn next_step(&self) -> Step {
        let mut best_known: Option<(u32, usize, usize)> = None;
        let mut best_any: Option<(u32, usize, usize)> = None;
        for (r, row) in self.matrix.iter().enumerate() {
            if self.row_used[r] {
                continue;
            }
            for (c, e) in row.iter().enumerate() {
                if self.col_used[c] || e.is_zero() {
                    continue;
                }
                let key = (e.degree(), c, r);
                if best_any.map_or(true, |b| key < b) {
                    best_any = Some(key);
                }
                if (best_known.is_none() || key < best_known.unwrap()) && self.known_nonzero(e) {
                    best_known = Some(key);
                }
            }
        }
        match (best_known, best_any) {
            (Some((_, c, r)), _) => Step::Pivot(r, c),
            (None, Some((_, c, r))) => Step::Split(r, c),
            (None, None) => Step::Done,
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.matrix[r][c].clone();
        let pivot_row = self.matrix[r].clone();
        for i in 0..self.matrix.len() {
            if self.row_used[i] || i == r || self.matrix[i][c].is_zero() {
                continue;
            }
            let e = self.matrix[i][c].clone();
            let row: Vec<PolyQ> = self.matrix[i]
                .iter()
                .zip(&pivot_row)
                .map(|(x, y)| &(&p * x) - &(&e * y))
                .collect();
            self.matrix[i] = self.simplify_row(row);
        }
        self.row_used[r] = true;
        self.col_used[c] = true;
        self.pivots.push((r, c));
    }

    /// Divides a row by the part of its content that is known to be nonzero.
    fn simplify_row(&self, mut row: Vec<PolyQ>) -> Vec<PolyQ> {
        let mut g = PolyQ::zero();
        for e in &row {
            if !e.is_zero() {
                g = poly_gcd(&g, e).expect("nonzero entry");
                if g.is_constant() {
                    break;
                }
            }
        }
        if g.is_zero() {
            return row;
        }
        let mut divisor = PolyQ::one();
        if !g.is_constant() {
            let mut rest = g.clone();
            for f in &self.nonzero {
                loop {
                    let h = poly_gcd(&rest, f).expect("nonzero");
                    if h.is_constant() {
                        break;
                    }
                    rest = rest.div_exact(&h).expect("gcd divides");
                    divisor = &divisor * &h;
                }
            }
        }
        let first = row.iter().find(|e| !e.is_zero()).expect("nonzero row");
        let lc = first.div_exact(&divisor).expect("divides").leading_coeff();
        let divisor = divisor.scale(&lc);
        for e in row.iter_mut() {
            if !e.is_zero() {
                *e = e.div_exact(&divisor).expect("content divides");
            }
        }
        row
    }

    /// Adds `f = 0` (a monic squarefree factor). `false` if inconsistent.
    fn add_constraint(&mut self, f: &PolyQ) -> bool {
        let f = self.reduce(f);
        if f.is_zero() {
            return true;
        }
        if f.is_constant() {
            return false;
        }
        if !f.is_affine() {
            self.residual.push(squarefree_part(&f));
            return true;
        }
        let x = f.max_var().expect("non-constant");
        let a = f.lead_in(x).constant_value().expect("affine");
        let rhs = (&PolyQ::var(x).scale(&a) - &f).scale(&a.recip());
        for (_, other) in self.subst.iter_mut() {
            *other = other.substitute(x, &rhs);
        }
        self.subst.push((x, rhs));
        let residual = std::mem::take(&mut self.residual);
        for q in residual {
            let q = self.reduce(&q);
            if !q.is_zero() && !self.add_constraint(&q) {
                return false;
            }
        }
        true
    }

    fn constraints(&self) -> ConstraintSet {
        if self.residual.is_empty() {
            ConstraintSet::from_solved(self.n, self.subst.clone())
        } else {
            let mut eqs: Vec<PolyQ> =
                self.subst.iter().map(|(v, rhs)| (&PolyQ::var(*v) - rhs).monic()).collect();
            eqs.extend(self.residual.iter().cloned());
            ConstraintSet::unsolved(self.n, eqs)
        }
    }

    fn kernel(&self) -> Vec<Vec<RatFuncQ>> {
        let cols = self.col_used.len();
        let mut basis = Vec::new();
        for f in (0..cols).filter(|&c| !self.col_used[c]) {
            let mut x = vec![RatFuncQ::zero(); cols];
            x[f] = RatFuncQ::one();
            for &(r, c) in self.pivots.iter().rev() {
                let mut s = RatFuncQ::zero();
                for (j, e) in self.matrix[r].iter().enumerate() {
                    if j != c && !e.is_zero() && !x[j].is_zero() {
                        s = &s + &(&RatFuncQ::from_poly(e.clone()) * &x[j]);
                    }
                }
                x[c] = &(-&s) / &RatFuncQ::from_poly(self.matrix[r][c].clone());
            }
            basis.push(x);
        }
        normalize_kernel(basis)
    }
}

/// Reduced basis with each vector's last nonzero entry equal to 1, ordered
/// by that position.
pub fn normalize_kernel(mut vecs: Vec<Vec<RatFuncQ>>) -> Vec<Vec<RatFuncQ>> {
    let Some(cols) = vecs.first().map(Vec::len) else {
        return vecs;
    };
    let mut done: Vec<(usize, Vec<RatFuncQ>)> = Vec::new();
    for col in (0..cols).rev() {
        let Some(k) = vecs.iter().position(|v| !v[col].is_zero()) else {
            continue;
        };
        let v = vecs.swap_remove(k);
        let inv = &RatFuncQ::one() / &v[col];
        let v: Vec<RatFuncQ> = v.iter().map(|e| e * &inv).collect();
        let clear = |w: &mut Vec<RatFuncQ>| {
            if !w[col].is_zero() {
                let f = w[col].clone();
                for (a, b) in w.iter_mut().zip(&v) {
                    *a = &*a - &(&f * b);
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

/// Parametric solve with case splitting; see the module docs.
pub fn solve_parametric(sys: &AnsatzSystem, budget: usize) -> Result<Vec<SolutionBranch>, SolveError> {
    if sys.monomials.is_empty() {
        return Ok(Vec::new());
    }
    let root = State {
        n: sys.n,
        subst: Vec::new(),
        residual: Vec::new(),
        nonzero: Vec::new(),
        matrix: sys.matrix.clone(),
        pivots: Vec::new(),
        row_used: vec![false; sys.matrix.len()],
        col_used: vec![false; sys.monomials.len()],
    };
    let mut created = 1usize;
    let mut stack = vec![root];
    let mut leaves: Vec<SolutionBranch> = Vec::new();
    while let Some(mut state) = stack.pop() {
        loop {
            if !state.normalize() {
                break;
            }
            match state.next_step() {
                Step::Done => {
                    let kernel = state.kernel();
                    if !kernel.is_empty() {
                        leaves.push(SolutionBranch {
                            constraints: state.constraints(),
                            kernel,
                            genericity: state.nonzero.clone(),
                        });
                    }
                    break;
                }
                Step::Pivot(r, c) => state.pivot(r, c),
                Step::Split(r, c) => {
                    let p = state.matrix[r][c].clone();
                    let stripped = state.strip_nonzero(&p);
                    let (lin, rest) = linear_factors(&stripped);
                    let mut zero_factors = lin;
                    if !rest.is_constant() {
                        zero_factors.push(rest);
                    }
                    created += zero_factors.len();
                    if created > budget {
                        let mut unexplored: Vec<String> =
                            stack.iter().map(|s| describe_constraints(&s.constraints())).collect();
                        let here = state.constraints();
                        let prefix = if here.is_empty() { String::new() } else { format!("{}, ", describe_constraints(&here)) };
                        unexplored.push(format!("{prefix}{stripped} != 0"));
                        for f in &zero_factors {
                            unexplored.push(format!("{prefix}{f} = 0"));
                        }
                        return Err(SolveError::BudgetExhausted {
                            budget,
                            completed: canonical_order(prune(leaves)),
                            unexplored,
                        });
                    }
                    // zero branches go under the nonzero one so it is explored first
                    for f in zero_factors.iter().rev() {
                        let mut child = state.clone();
                        if child.add_constraint(f) {
                            stack.push(child);
                        }
                    }
                    state.nonzero.push(stripped);
                    state.pivot(r, c);
                }
            }
        }
    }
    Ok(canonical_order(prune(leaves)))
}

fn vanishes_on(c: &ConstraintSet, p: &PolyQ) -> bool {
    match c.reduce(p) {
        Some(r) => r.is_zero(),
        None => c.equations().iter().any(|q| q.divides(p)),
    }
}

fn specialize_kernel(kernel: &[Vec<RatFuncQ>], on: &ConstraintSet) -> Option<Vec<Vec<RatFuncQ>>> {
    let mut out = Vec::with_capacity(kernel.len());
    for v in kernel {
        let mut w = Vec::with_capacity(v.len());
        for e in v {
            let num = on.reduce(e.num())?;
            let den = on.reduce(e.den())?;
            if den.is_zero() {
                return None;
            }
            w.push(RatFuncQ::new(num, den).ok()?);
        }
        out.push(w);
    }
    Some(normalize_kernel(out))
}

/// Drops branches contained in another branch's locus whose kernel is just
/// the other kernel restricted there.
fn prune(leaves: Vec<SolutionBranch>) -> Vec<SolutionBranch> {
    let mut keep = vec![true; leaves.len()];
    for b in 0..leaves.len() {
        for a in 0..leaves.len() {
            if a == b || !keep[a] {
                continue;
            }
            let (big, small) = (&leaves[a], &leaves[b]);
            let contained = big.constraints.equations().iter().all(|e| vanishes_on(&small.constraints, e));
            if !contained || big.kernel.len() != small.kernel.len() {
                continue;
            }
            let same_locus = small.constraints.equations().iter().all(|e| vanishes_on(&big.constraints, e));
            if same_locus && a > b {
                continue;
            }
            if specialize_kernel(&big.kernel, &small.constraints).as_deref() == Some(small.kernel.as_slice()) {
                keep[b] = false;
                break;
            }
        }
    }
    leaves.into_iter().zip(keep).filter_map(|(l, k)| k.then_some(l)).collect()
}

fn canonical_order(mut branches: Vec<SolutionBranch>) -> Vec<SolutionBranch> {
    let key = |b: &SolutionBranch| {
        (
            b.constraints.equations().len(),
            b.constraints.equations().to_vec(),
            b.kernel.len(),
            b.kernel.iter().map(|v| v.iter().map(RatFuncQ::to_text).collect::<Vec<_>>()).collect::<Vec<_>>(),
        )
    };
    branches.sort_by(|x, y| key(x).cmp(&key(y)));
    branches
}

/// A branch with its kernel turned into module vectors and re-verified.
#[derive(Debug, Clone)]
pub struct VerifiedBranch {
    pub branch: SolutionBranch,
    /// Kernel vectors with denominators cleared.
    pub vectors: Vec<VermaVector>,
    pub checks: Vec<SingularityReport>,
    pub verified: bool,
}

#[derive(Debug, Clone)]
pub struct SingularReport {
    pub n: usize,
    pub weight: Weight,
    pub monomials: Vec<PbwMonomial>,
    pub conditions: usize,
    pub branches: Vec<VerifiedBranch>,
    /// The weight is zero: the only solution is `v0` itself.
    pub trivial: bool,
}

impl SingularReport {
    pub fn has_singular_vector(&self) -> bool {
        !self.trivial && !self.branches.is_empty()
    }
}

/// Kernel vector as a module vector, with denominators cleared.
pub fn kernel_vector(n: usize, monomials: &[PbwMonomial], coeffs: &[RatFuncQ]) -> VermaVector {
    let mut lcm = PolyQ::one();
    for c in coeffs {
        if !c.is_zero() {
            let g = poly_gcd(&lcm, c.den()).expect("nonzero");
            lcm = (&lcm * &c.den().div_exact(&g).expect("gcd divides")).monic();
        }
    }
    let mut v = VermaVector::zero(n);
    for (m, c) in monomials.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        let scaled = &RatFuncQ::from_poly(lcm.clone()) * c;
        let p = scaled.as_poly().expect("lcm clears denominators");
        v.add_term(m.clone(), p).expect("positive monomial");
    }
    v
}

/// Enumerate, assemble, solve, then re-check every branch with
/// [`is_singular`] under its own constraints.
pub fn find_singular_vectors(w: &Weight, n: usize, budget: usize) -> Result<SingularReport, SolveError> {
    if w.dim() != n {
        return Err(SolveError::RankMismatch(w.dim(), n));
    }
    let sys = assemble_system(w, n);
    let trivial = w.is_zero();
    let branches = if trivial { Vec::new() } else { solve_parametric(&sys, budget)? };
    let branches = branches
        .into_iter()
        .map(|branch| {
            let vectors: Vec<VermaVector> =
                branch.kernel.iter().map(|k| kernel_vector(n, &sys.monomials, k)).collect();
            let checks: Vec<SingularityReport> =
                vectors.iter().map(|v| is_singular(v, &branch.constraints)).collect();
            let verified = checks.iter().all(|c| c.verdict == Verdict::Singular);
            VerifiedBranch { branch, vectors, checks, verified }
        })
        .collect();
    Ok(SingularReport {
        n,
        weight: w.clone(),
        monomials: sys.monomials,
        conditions: sys.matrix.len(),
        branches,
        trivial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    fn texts(ms: &[PbwMonomial]) -> Vec<String> {
        ms.iter().map(PbwMonomial::to_text).collect()
    }

    #[test]
    fn ansatz_for_two_delta_one() {
        let ms = enumerate_ansatz(&Weight::from_ints(&[2, 0]), 2);
        assert_eq!(
            texts(&ms),
            ["b+1", "c+ d+", "b+2 (d+)^2", "(a+1)^2", "a+1 a+2 d+", "(a+2)^2 (d+)^2"]
        );
    }

    #[test]
    fn ansatz_small_cases() {
        assert_eq!(texts(&enumerate_ansatz(&Weight::from_ints(&[1, -1]), 2)), ["d+"]);
        assert_eq!(texts(&enumerate_ansatz(&Weight::from_ints(&[0, 3]), 2)), ["a+2 b+2", "(a+2)^3"]);
        assert_eq!(texts(&enumerate_ansatz(&Weight::from_ints(&[0, 0]), 2)), ["1"]);
        assert_eq!(texts(&enumerate_ansatz(&Weight::from_ints(&[1, 0]), 2)), ["a+1", "a+2 d+"]);
        assert!(enumerate_ansatz(&Weight::from_ints(&[0, -1]), 2).is_empty());
        let half = Weight { coords: vec![rat(1, 2), int(0)] };
        assert!(enumerate_ansatz(&half, 2).is_empty());
    }

    #[test]
    fn delta_two_system_rows() {
        let sys = assemble_system(&Weight::from_ints(&[0, 1]), 2);
        assert_eq!(sys.matrix, vec![vec![PolyQ::one()]]);
        assert!(solve_parametric(&sys, 64).unwrap().is_empty());
    }

    #[test]
    fn d_plus_system() {
        let sys = assemble_system(&Weight::from_ints(&[1, -1]), 2);
        assert_eq!(sys.rows.len(), 1);
        assert_eq!(sys.rows[0].generator.name(), "d-");
        let want = (&PolyQ::var(1) - &PolyQ::var(0)).scale(&rat(1, 2));
        assert_eq!(sys.matrix, vec![vec![want]]);
        let branches = solve_parametric(&sys, 64).unwrap();
        assert_eq!(branches.len(), 1);
        assert_eq!(branches[0].constraints.solved_text(), ["L2 = L1"]);
        assert_eq!(branches[0].kernel, vec![vec![RatFuncQ::one()]]);
    }

    #[test]
    fn two_delta_two_system() {
        let sys = assemble_system(&Weight::from_ints(&[0, 2]), 2);
        let rows: Vec<(String, Vec<PolyQ>)> =
            sys.rows.iter().zip(&sys.matrix).map(|(l, r)| (l.generator.name(), r.clone())).collect();
        assert_eq!(
            rows,
            vec![
                ("a-2".to_string(), vec![PolyQ::one(), PolyQ::from(2)]),
                ("b-2".to_string(), vec![PolyQ::var(1).scale(&int(2)), PolyQ::one()]),
            ]
        );
        let branches = solve_parametric(&sys, 64).unwrap();
        assert_eq!(branches.len(), 1);
        assert_eq!(branches[0].constraints.solved_text(), ["L2 = 1/4"]);
        let k: Vec<RatFuncQ> = vec![RatFuncQ::from_rat(int(-2)), RatFuncQ::one()];
        assert_eq!(branches[0].kernel, vec![k]);
    }

    #[test]
    fn budget_exhaustion_reports_partial_results() {
        let sys = assemble_system(&Weight::from_ints(&[2, 0]), 2);
        match solve_parametric(&sys, 1) {
            Err(SolveError::BudgetExhausted { budget, unexplored, .. }) => {
                assert_eq!(budget, 1);
                assert!(!unexplored.is_empty());
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn kernel_normalization() {
        let one = RatFuncQ::one;
        let z = RatFuncQ::zero;
        let two = || RatFuncQ::from_rat(int(2));
        let vecs = vec![vec![one(), z(), two()], vec![two(), one(), two()]];
        let k = normalize_kernel(vecs);
        // span{(1,0,2),(2,1,2)} = span{(-1/2,... )}: last entries pivot at columns 1 and 2
        assert_eq!(k.len(), 2);
        assert!(k[0][2].is_zero() && k[0][1].is_one());
        assert!(k[1][2].is_one() && k[1][1].is_zero());
    }

    #[test]
    fn zero_weight_is_trivial() {
        let r = find_singular_vectors(&Weight::zero(2), 2, 64).unwrap();
        assert!(r.trivial);
        assert!(r.branches.is_empty());
        assert_eq!(texts(&r.monomials), ["1"]);
    }
}
