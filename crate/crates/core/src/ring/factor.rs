//! gcd, squarefree decomposition and rational linear-factor extraction.
//!
//! The gcd is the recursive content/primitive-part algorithm: view both
//! inputs as univariate in their highest variable over the ring of the
//! remaining variables, take the gcd of contents recursively and run a
//! primitive pseudo-remainder sequence on the primitive parts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Exponents, PolyQ, Rat, RingError};

/// Monic gcd. Errors only when both inputs are zero.
pub fn poly_gcd(a: &PolyQ, b: &PolyQ) -> Result<PolyQ, RingError> {
    if a.is_zero() && b.is_zero() {
        return Err(RingError::ZeroGcd);
    }
    Ok(gcd(a, b))
}

fn gcd(a: &PolyQ, b: &PolyQ) -> PolyQ {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return PolyQ::one();
    }
    let x = a.max_var().max(b.max_var()).expect("non-constant");
    if a.degree_in(x) == 0 {
        return gcd(a, &content_in(b, x));
    }
    if b.degree_in(x) == 0 {
        return gcd(&content_in(a, x), b);
    }
    let (ca, pa) = split_content(a, x);
    let (cb, pb) = split_content(b, x);
    let c = gcd(&ca, &cb);
    let (mut p, mut q) = if pa.degree_in(x) >= pb.degree_in(x) { (pa, pb) } else { (pb, pa) };
    let g = loop {
        let r = prem(&p, &q, x);
        if r.is_zero() {
            break q;
        }
        if r.degree_in(x) == 0 {
            break PolyQ::one();
        }
        p = q;
        q = split_content(&r, x).1;
    };
    (&c * &split_content(&g, x).1).monic()
}

/// gcd of the coefficients of `p` viewed as a polynomial in `x`.
pub(crate) fn content_in(p: &PolyQ, x: usize) -> PolyQ {
    p.coeffs_in(x)
        .iter()
        .filter(|c| !c.is_zero())
        .fold(PolyQ::zero(), |acc, c| gcd(&acc, c))
}

/// `(content, primitive part)` with respect to `x`; the primitive part is monic.
fn split_content(p: &PolyQ, x: usize) -> (PolyQ, PolyQ) {
    let c = content_in(p, x);
    let pp = p.div_exact(&c).expect("content divides").monic();
    (c, pp)
}

/// Pseudo-remainder of `a` by `b` in the variable `x`, up to a factor that
/// does not involve `x`.
fn prem(a: &PolyQ, b: &PolyQ, x: usize) -> PolyQ {
    let db = b.degree_in(x);
    let lb = b.lead_in(x);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(x) >= db {
        let dr = r.degree_in(x);
        let lr = r.lead_in(x);
        let shift = &lr.mul_monomial(&Exponents::var_pow(x, dr - db), &Rat::one()) * b;
        r = (&(&lb * &r) - &shift).monic();
    }
    r
}

/// Product of the distinct irreducible factors, monic. Zero maps to zero.
pub fn squarefree_part(p: &PolyQ) -> PolyQ {
    if p.is_zero() {
        return PolyQ::zero();
    }
    let Some(x) = p.max_var() else {
        return PolyQ::one();
    };
    let (c, pp) = split_content(p, x);
    let g = gcd(&pp, &pp.derivative(x));
    let sq = pp.div_exact(&g).expect("gcd divides");
    (&squarefree_part(&c) * &sq).monic()
}

/// Divides out the rational content: the result has leading coefficient one.
pub fn content_free(p: &PolyQ) -> PolyQ {
    p.monic()
}

/// Splits a nonzero polynomial into its distinct monic rational linear
/// factors and a monic remainder that has none. Multiplicities are dropped,
/// so the product of the output is the squarefree part of the input.
pub fn linear_factors(p: &PolyQ) -> (Vec<PolyQ>, PolyQ) {
    let mut found = Vec::new();
    let rest = extract(&squarefree_part(p), &mut found);
    found.sort();
    found.dedup();
    (found, rest)
}

fn extract(p: &PolyQ, found: &mut Vec<PolyQ>) -> PolyQ {
    if p.is_constant() {
        return PolyQ::one();
    }
    if p.degree() == 1 {
        found.push(p.monic());
        return PolyQ::one();
    }
    let x = p.max_var().expect("non-constant");
    let (c, mut pp) = split_content(p, x);
    let mut rest = extract(&c, found);
    while pp.degree_in(x) > 0 {
        if pp.degree() == 1 {
            found.push(pp.monic());
            pp = PolyQ::one();
            break;
        }
        match find_linear_factor(&pp, x) {
            Some(l) => {
                pp = pp.div_exact(&l).expect("verified factor");
                found.push(l);
            }
            None => break,
        }
    }
    rest = &rest * &pp;
    rest.monic()
}

/// Looks for a factor `x - (c0 + sum c_j y_j)` of `p`, where the `y_j` are
/// the variables below `x`. Roots of `p` along `x` at a base point and at
/// its unit shifts pin down every candidate affine form; each candidate is
/// then checked by substitution.
fn find_linear_factor(p: &PolyQ, x: usize) -> Option<PolyQ> {
    let others: Vec<usize> = (0..x).filter(|&v| p.degree_in(v) > 0).collect();
    let lead = p.lead_in(x);
    let base = choose_base_point(&lead, &others, x)?;
    let restrict = |pt: &[Rat]| -> Vec<Rat> {
        let assign: Vec<Option<Rat>> = (0..x).map(|v| Some(pt[v].clone())).collect();
        rational_roots(&p.eval_partial(&assign), x)
    };
    let roots0 = restrict(&base);
    if roots0.is_empty() {
        return None;
    }
    let mut shifted = Vec::with_capacity(others.len());
    for &v in &others {
        let mut pt = base.clone();
        pt[v] += Rat::one();
        let r = restrict(&pt);
        if r.is_empty() {
            return None;
        }
        shifted.push(r);
    }
    let mut choice = vec![0usize; others.len()];
    for r0 in &roots0 {
        choice.iter_mut().for_each(|c| *c = 0);
        loop {
            // x = r0 + sum (r_j - r0) (y_j - base_j)
            let mut rhs = PolyQ::constant(r0.clone());
            for (k, &v) in others.iter().enumerate() {
                let slope = &shifted[k][choice[k]] - r0;
                let term = &PolyQ::var(v) - &PolyQ::constant(base[v].clone());
                rhs = &rhs + &term.scale(&slope);
            }
            if p.substitute(x, &rhs).is_zero() {
                return Some((&PolyQ::var(x) - &rhs).monic());
            }
            if !advance(&mut choice, &shifted) {
                break;
            }
        }
    }
    None
}

fn advance(choice: &mut [usize], sets: &[Vec<Rat>]) -> bool {
    for k in 0..choice.len() {
        choice[k] += 1;
        if choice[k] < sets[k].len() {
            return true;
        }
        choice[k] = 0;
    }
    false
}

/// A point where the leading coefficient does not vanish, at the point and
/// at each unit shift along `others`.
fn choose_base_point(lead: &PolyQ, others: &[usize], width: usize) -> Option<Vec<Rat>> {
    let offsets = [0i64, 1, -1, 2, -2, 3, -3, 5, 7, -7, 11];
    for (t, &o) in offsets.iter().enumerate() {
        let pt: Vec<Rat> = (0..width)
            .map(|v| Rat::from_integer(BigInt::from(o * (v as i64 + 1) + t as i64 * v as i64)))
            .collect();
        let ok = |pt: &[Rat]| lead.eval(pt).map(|c| !c.is_zero()).unwrap_or(false);
        if !ok(&pt) {
            continue;
        }
        if others.iter().all(|&v| {
            let mut q = pt.clone();
            q[v] += Rat::one();
            ok(&q)
        }) {
            return Some(pt);
        }
    }
    None
}

/// Distinct rational roots of a polynomial that involves only variable `x`,
/// in increasing order. Returns nothing when the coefficients are too large
/// for divisor enumeration.
pub fn rational_roots(p: &PolyQ, x: usize) -> Vec<Rat> {
    if p.is_zero() || p.vars().iter().any(|&v| v != x) {
        return Vec::new();
    }
    let coeffs = p.coeffs_in(x);
    let mut ints: Vec<BigInt> = {
        let lcm = coeffs
            .iter()
            .filter_map(|c| c.constant_value())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        coeffs
            .iter()
            .map(|c| {
                let v = c.constant_value().unwrap_or_else(Rat::zero) * Rat::from_integer(lcm.clone());
                v.to_integer()
            })
            .collect()
    };
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(Rat::zero());
        while ints.first().map(Zero::is_zero).unwrap_or(false) {
            ints.remove(0);
        }
    }
    if ints.len() > 1 {
        let (Some(lo), Some(hi)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
            return roots;
        };
        for pnum in &lo {
            for q in &hi {
                if pnum.gcd(q) != 1 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let num = BigInt::from(sign) * BigInt::from(*pnum);
                    let den = BigInt::from(*q);
                    if homogeneous_horner(&ints, &num, &den).is_zero() {
                        roots.push(Rat::new(num, den));
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

/// `q^d f(p/q)` for integer coefficients, lowest degree first.
fn homogeneous_horner(coeffs: &[BigInt], p: &BigInt, q: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut qpow = BigInt::one();
    for c in coeffs.iter().rev() {
        acc = acc * p + c * &qpow;
        qpow *= q;
    }
    acc
}

const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}
