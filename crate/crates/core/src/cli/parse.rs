//! Parsers for generators, expressions, vectors, weights and constraints.
//!
//! Expressions are sums of products over the free algebra on the basis of
//! `g_n`, with polynomial coefficients in `L1..Ln`. Products are written by
//! juxtaposition or `*`; `^` takes a non-negative integer exponent; `v0`
//! stands for the lowest weight vector and acts as the identity.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Family, Generator, Weight};
use crate::pbw::{normal_order, UElement};
use crate::ring::{PolyQ, Rat, RatFuncQ};
use crate::verma::{apply_word, ConstraintSet, VermaVector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error: {message}")]
pub struct ParseError {
    pub message: String,
}

fn err<T>(message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { message: message.into() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Gen(Generator),
    V0,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str, n: usize) -> Result<Vec<Tok>, ParseError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    let digits = |k: &mut usize| -> Option<String> {
        let start = *k;
        while *k < chars.len() && chars[*k].is_ascii_digit() {
            *k += 1;
        }
        (*k > start).then(|| chars[start..*k].iter().collect())
    };
    while k < chars.len() {
        let c = chars[k];
        let start = k;
        match c {
            ' ' | '\t' | '\n' => k += 1,
            '+' => (out.push(Tok::Plus), k += 1).1,
            '-' => (out.push(Tok::Minus), k += 1).1,
            '*' => (out.push(Tok::Star), k += 1).1,
            '/' => (out.push(Tok::Slash), k += 1).1,
            '^' => (out.push(Tok::Caret), k += 1).1,
            '(' => (out.push(Tok::LParen), k += 1).1,
            ')' => (out.push(Tok::RParen), k += 1).1,
            '0'..='9' => {
                let d = digits(&mut k).expect("digit");
                out.push(Tok::Int(d.parse().expect("digits")));
            }
            'a'..='z' | 'A'..='Z' => {
                k += 1;
                while k < chars.len() && (chars[k].is_ascii_alphanumeric() || "+-[],_".contains(chars[k])) {
                    // a sign only belongs to the token right after the family letter
                    if "+-".contains(chars[k]) && !(k == start + 1 && "abcdK".contains(chars[start])) {
                        break;
                    }
                    // brackets and commas only inside an index list
                    if chars[k] == ',' && !chars[start..k].contains(&'[') {
                        break;
                    }
                    if chars[k] == ']' {
                        k += 1;
                        break;
                    }
                    k += 1;
                }
                let word: String = chars[start..k].iter().collect();
                out.push(ident(&word, n)?);
            }
            _ => return err(format!("unexpected character '{c}'")),
        }
    }
    Ok(out)
}

fn index(s: &str, n: usize, token: &str) -> Result<usize, ParseError> {
    match s.parse::<usize>() {
        Ok(i) if (1..=n).contains(&i) => Ok(i),
        Ok(i) => err(format!("index {i} out of range for n = {n} in '{token}'")),
        Err(_) => err(format!("bad index in '{token}'")),
    }
}

fn ident(word: &str, n: usize) -> Result<Tok, ParseError> {
    if word == "v0" {
        return Ok(Tok::V0);
    }
    if let Some(rest) = word.strip_prefix('L') {
        return Ok(Tok::Var(index(rest, n, word)? - 1));
    }
    parse_generator(word, n).map(Tok::Gen)
}

/// Parses one generator: `a+[i]`, `K0[i,j]`, `a+1`, `h2`, or a `g_2` alias.
pub fn parse_generator(s: &str, n: usize) -> Result<Generator, ParseError> {
    let token = s.trim();
    let make = |f: Family, i: usize, j: usize| {
        Generator::new(f, i, j, n).map_err(|e| ParseError { message: format!("{e} in '{token}'") })
    };
    let bracketed = |rest: &str| -> Option<Vec<String>> {
        rest.strip_prefix('[')?
            .strip_suffix(']')
            .map(|inner| inner.split(',').map(|x| x.trim().to_string()).collect())
    };
    let family = |p: &str| match p {
        "a+" => Some(Family::APlus),
        "a-" => Some(Family::AMinus),
        "K+" => Some(Family::KPlus),
        "K-" => Some(Family::KMinus),
        "K0" => Some(Family::KZero),
        _ => None,
    };
    if token.len() >= 2 && token.is_char_boundary(2) {
        let (head, rest) = token.split_at(2);
        if let Some(f) = family(head) {
            let two = matches!(f, Family::KPlus | Family::KMinus | Family::KZero);
            if let Some(idx) = bracketed(rest) {
                return match (two, idx.as_slice()) {
                    (false, [i]) => make(f, index(i, n, token)?, 0),
                    (true, [i, j]) => make(f, index(i, n, token)?, index(j, n, token)?),
                    _ => err(format!("wrong number of indices in '{token}'")),
                };
            }
            if !two && !rest.is_empty() {
                return make(f, index(rest, n, token)?, 0);
            }
        }
        match (head, rest) {
            ("b+", i) if !i.is_empty() => {
                let i = index(i, n, token)?;
                return make(Family::KPlus, i, i);
            }
            ("b-", i) if !i.is_empty() => {
                let i = index(i, n, token)?;
                return make(Family::KMinus, i, i);
            }
            ("c+", "") | ("c-", "") | ("d+", "") | ("d-", "") => {
                if n != 2 {
                    return err(format!("alias '{token}' only exists for n = 2"));
                }
                return match head {
                    "c+" => make(Family::KPlus, 1, 2),
                    "c-" => make(Family::KMinus, 1, 2),
                    "d+" => make(Family::KZero, 1, 2),
                    _ => make(Family::KZero, 2, 1),
                };
            }
            _ => {}
        }
    }
    if let Some(i) = token.strip_prefix('h') {
        if !i.is_empty() {
            let i = index(i, n, token)?;
            return make(Family::KZero, i, i);
        }
    }
    err(format!("unknown generator '{token}'"))
}

/// Element of the free algebra: words with polynomial coefficients.
type Free = BTreeMap<Vec<Generator>, PolyQ>;

fn free_add(a: &mut Free, w: Vec<Generator>, c: PolyQ) {
    if c.is_zero() {
        return;
    }
    let slot = a.entry(w.clone()).or_insert_with(PolyQ::zero);
    *slot = &*slot + &c;
    if slot.is_zero() {
        a.remove(&w);
    }
}

fn free_mul(a: &Free, b: &Free) -> Free {
    let mut out = Free::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend(wb.iter().copied());
            free_add(&mut out, w, ca * cb);
        }
    }
    out
}

fn free_scalar(c: PolyQ) -> Free {
    let mut f = Free::new();
    free_add(&mut f, Vec::new(), c);
    f
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    saw_v0: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Free, ParseError> {
        let mut acc = Free::new();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            for (w, c) in t {
                free_add(&mut acc, w, if sign < 0 { -&c } else { c });
            }
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_) | Tok::Var(_) | Tok::Gen(_) | Tok::V0 | Tok::LParen))
    }

    fn term(&mut self) -> Result<Free, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            let f = self.factor()?;
            acc = free_mul(&acc, &f);
        }
    }

    fn factor(&mut self) -> Result<Free, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let e = match self.next() {
            Some(Tok::Int(e)) => u32::try_from(e).map_err(|_| ParseError { message: "exponent too large".into() })?,
            other => return err(format!("expected exponent after '^', found {}", describe(other.as_ref()))),
        };
        let mut acc = free_scalar(PolyQ::one());
        for _ in 0..e {
            acc = free_mul(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Free, ParseError> {
        match self.next() {
            Some(Tok::Int(p)) => {
                let mut r = Rat::from_integer(p);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Tok::Int(q)) if !q.is_zero() => r /= Rat::from_integer(q),
                        other => return err(format!("expected nonzero denominator, found {}", describe(other.as_ref()))),
                    }
                }
                Ok(free_scalar(PolyQ::constant(r)))
            }
            Some(Tok::Var(v)) => Ok(free_scalar(PolyQ::var(v))),
            Some(Tok::Gen(g)) => {
                let mut f = Free::new();
                free_add(&mut f, vec![g], PolyQ::one());
                Ok(f)
            }
            Some(Tok::V0) => {
                self.saw_v0 = true;
                Ok(free_scalar(PolyQ::one()))
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    other => err(format!("expected ')', found {}", describe(other.as_ref()))),
                }
            }
            other => err(format!("unexpected {}", describe(other.as_ref()))),
        }
    }
}

fn describe(t: Option<&Tok>) -> String {
    match t {
        None => "end of input".into(),
        Some(Tok::Int(i)) => format!("'{i}'"),
        Some(Tok::Var(v)) => format!("'L{}'", v + 1),
        Some(Tok::Gen(g)) => format!("'{}'", g.name()),
        Some(Tok::V0) => "'v0'".into(),
        Some(Tok::Plus) => "'+'".into(),
        Some(Tok::Minus) => "'-'".into(),
        Some(Tok::Star) => "'*'".into(),
        Some(Tok::Slash) => "'/'".into(),
        Some(Tok::Caret) => "'^'".into(),
        Some(Tok::LParen) => "'('".into(),
        Some(Tok::RParen) => "')'".into(),
    }
}

fn parse_free(s: &str, n: usize) -> Result<(Free, bool), ParseError> {
    if s.trim().is_empty() {
        return err("empty expression");
    }
    let mut p = Parser { toks: lex(s, n)?, pos: 0, saw_v0: false };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return err(format!("unexpected {}", describe(p.peek())));
    }
    Ok((e, p.saw_v0))
}

/// A polynomial in `L1..Ln`, e.g. `L2 - 1/4` or `2*L1^2 - L2`.
pub fn parse_poly(s: &str, n: usize) -> Result<PolyQ, ParseError> {
    let (e, v0) = parse_free(s, n)?;
    if v0 {
        return err(format!("'v0' not allowed in polynomial '{s}'"));
    }
    let mut out = PolyQ::zero();
    for (w, c) in e {
        if let Some(g) = w.first() {
            return err(format!("generator '{}' not allowed in polynomial '{s}'", g.name()));
        }
        out = &out + &c;
    }
    Ok(out)
}

/// An element of `U(g_n)`, normal ordered.
pub fn parse_element(s: &str, n: usize) -> Result<UElement, ParseError> {
    let (e, v0) = parse_free(s, n)?;
    if v0 {
        return err(format!("'v0' not allowed in algebra element '{s}'"));
    }
    let mut out = UElement::zero();
    for (w, c) in e {
        out = out.add(&normal_order(&w, &RatFuncQ::from_poly(c)));
    }
    Ok(out)
}

/// The raw words of an expression, for applying an element to a vector.
pub fn parse_words(s: &str, n: usize) -> Result<Vec<(Vec<Generator>, PolyQ)>, ParseError> {
    let (e, v0) = parse_free(s, n)?;
    if v0 {
        return err(format!("'v0' not allowed in operator '{s}'"));
    }
    Ok(e.into_iter().collect())
}

/// A module vector `P v0`; `P` is evaluated in the Verma module.
pub fn parse_vector(s: &str, n: usize) -> Result<VermaVector, ParseError> {
    let (e, _) = parse_free(s, n)?;
    let mut out = VermaVector::zero(n);
    for (w, c) in e {
        out = out.add(&apply_word(n, &w, &c));
    }
    Ok(out)
}

fn parse_rat(s: &str) -> Result<Rat, ParseError> {
    let t = s.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(b) => (true, b.trim()),
        None => (false, t.strip_prefix('+').unwrap_or(t).trim()),
    };
    let r = match body.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| ParseError { message: format!("bad number '{t}'") })?;
            let q: BigInt = q.trim().parse().map_err(|_| ParseError { message: format!("bad number '{t}'") })?;
            if q.is_zero() {
                return err(format!("zero denominator in '{t}'"));
            }
            Rat::new(p, q)
        }
        None => Rat::from_integer(body.parse().map_err(|_| ParseError { message: format!("bad number '{t}'") })?),
    };
    Ok(if neg { -r } else { r })
}

/// `2,0`, `3/2,0`, or δ-basis forms `2d1`, `d1+d2`, `d1-d2`, `0`.
pub fn parse_weight(s: &str, n: usize) -> Result<Weight, ParseError> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if t.is_empty() {
        return err("empty weight");
    }
    if t.contains(',') || (n == 1 && !t.contains('d')) {
        let coords: Vec<Rat> = t.split(',').map(parse_rat).collect::<Result<_, _>>()?;
        if coords.len() != n {
            return err(format!("weight '{s}' has {} coordinates, expected {n}", coords.len()));
        }
        return Ok(Weight { coords });
    }
    let mut coords = vec![Rat::zero(); n];
    if t == "0" {
        return Ok(Weight { coords });
    }
    let compact: String = t.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms: Vec<String> = Vec::new();
    for (k, c) in compact.char_indices() {
        if (c == '+' || c == '-') && k > 0 {
            terms.push(String::new());
        }
        if terms.is_empty() {
            terms.push(String::new());
        }
        terms.last_mut().expect("term").push(c);
    }
    for term in terms {
        let Some(pos) = term.find('d') else {
            return err(format!("bad weight term '{term}' in '{s}'"));
        };
        let (coef, idx) = term.split_at(pos);
        let coef = match coef {
            "" | "+" => Rat::one(),
            "-" => -Rat::one(),
            c => parse_rat(c)?,
        };
        let i = index(&idx[1..], n, &term)?;
        coords[i - 1] += coef;
    }
    Ok(Weight { coords })
}

/// Equations separated by `,` or `;`; each may be `lhs = rhs` or a
/// polynomial meaning `= 0`.
pub fn parse_constraints(s: &str, n: usize) -> Result<ConstraintSet, ParseError> {
    let mut eqs = Vec::new();
    for piece in s.split([',', ';']) {
        if piece.trim().is_empty() {
            continue;
        }
        let p = match piece.split_once('=') {
            Some((l, r)) => &parse_poly(l, n)? - &parse_poly(r, n)?,
            None => parse_poly(piece, n)?,
        };
        eqs.push(p);
    }
    ConstraintSet::from_equations(n, eqs).map_err(|e| ParseError { message: format!("{e} in '{s}'") })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    #[test]
    fn generator_forms() {
        assert_eq!(parse_generator("a+[1]", 2).unwrap().name(), "a+1");
        assert_eq!(parse_generator("K0[1,2]", 2).unwrap().name(), "d+");
        assert_eq!(parse_generator("K+[2,1]", 3).unwrap().name(), "K+[1,2]");
        assert_eq!(parse_generator("b-2", 2).unwrap().name(), "b-2");
        assert_eq!(parse_generator("h1", 2).unwrap().name(), "h1");
        assert!(parse_generator("a+3", 2).is_err());
        assert!(parse_generator("c+", 3).is_err());
        assert!(parse_generator("x", 2).unwrap_err().message.contains("'x'"));
    }

    #[test]
    fn weights() {
        assert_eq!(parse_weight("2d1", 2).unwrap(), Weight::from_ints(&[2, 0]));
        assert_eq!(parse_weight("d1+d2", 2).unwrap(), Weight::from_ints(&[1, 1]));
        assert_eq!(parse_weight("d1-d2", 2).unwrap(), Weight::from_ints(&[1, -1]));
        assert_eq!(parse_weight("3d2", 2).unwrap(), Weight::from_ints(&[0, 3]));
        assert_eq!(parse_weight("0,0", 2).unwrap(), Weight::zero(2));
        assert_eq!(parse_weight("3/2,0", 2).unwrap().coords, vec![rat(3, 2), int(0)]);
        assert!(parse_weight("d3", 2).is_err());
        assert!(parse_weight("1,2,3", 2).is_err());
    }

    #[test]
    fn polynomials() {
        assert_eq!(parse_poly("L2 - 1/4", 2).unwrap().to_text(), "L2 - 1/4");
        assert_eq!(parse_poly("-(L2-L1)", 2).unwrap().to_text(), "-L2 + L1");
        assert_eq!(parse_poly("2*L1^2 - L2", 2).unwrap().to_text(), "2*L1^2 - L2");
        assert!(parse_poly("L3", 2).is_err());
        assert!(parse_poly("a+1", 2).is_err());
    }

    #[test]
    fn elements_and_vectors() {
        assert_eq!(parse_element("a-1 a+1", 2).unwrap().to_text(), "a+1 a-1 + 1");
        assert_eq!(parse_vector("(a+2)^2 v0 - 2 b+2 v0", 2).unwrap().to_text(), "((a+2)^2 - 2 b+2) v0");
        assert_eq!(parse_vector("h1 v0", 2).unwrap().to_text(), "L1 v0");
        assert_eq!(parse_vector("a-1 a+1 v0", 2).unwrap().to_text(), "v0");
    }

    #[test]
    fn constraints() {
        let c = parse_constraints("L2 = L1", 2).unwrap();
        assert_eq!(c.solved_text(), ["L2 = L1"]);
        let c = parse_constraints("L1 - 3/4; L2 = 1", 2).unwrap();
        assert_eq!(c.solved_text(), ["L2 = 1", "L1 = 3/4"]);
    }
}
