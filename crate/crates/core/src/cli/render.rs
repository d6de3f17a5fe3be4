//! Text and LaTeX rendering of linear combinations.

use crate::algebra::{join_signed, BracketResult};
use crate::pbw::UElement;
use crate::ring::{latex_rat, RatFuncQ};
use crate::verma::{ConstraintSet, VermaVector};

use num_traits::{One, Signed, Zero};

/// Splits a coefficient into a sign and an unsigned body. Multi-term
/// coefficients keep their own signs and are parenthesized when `wrap`.
fn signed_coeff(text: String, single: bool, wrap: Option<(&str, &str)>) -> (bool, String) {
    if single {
        if let Some(rest) = text.strip_prefix('-') {
            return (true, rest.to_string());
        }
        (false, text)
    } else if let Some((open, close)) = wrap {
        (false, format!("{open}{text}{close}"))
    } else {
        (false, text)
    }
}

fn is_single(c: &RatFuncQ) -> bool {
    c.num().num_terms() == 1
}

/// `Σ c_m m` in text form, monomial `1` standing for the scalar part.
/// Terms are rendered in iteration order.
pub fn combination_text<'a, I>(iter: I) -> String
where
    I: Iterator<Item = (String, &'a RatFuncQ)>,
{
    let items: Vec<(String, &RatFuncQ)> = iter.filter(|(_, c)| !c.is_zero()).collect();
    let many = items.len() > 1;
    let parts = items
        .into_iter()
        .map(|(m, c)| {
            if let Some(r) = c.as_poly().and_then(|p| p.constant_value()) {
                let neg = r.is_negative();
                let a = r.abs();
                let body = if m == "1" {
                    crate::ring::fmt_rat(&a)
                } else if a.is_one() {
                    m
                } else {
                    format!("{} {m}", crate::ring::fmt_rat(&a))
                };
                return (neg, body);
            }
            let (neg, coeff) = signed_coeff(c.to_text(), is_single(c), (m != "1" || many).then_some(("(", ")")));
            if m == "1" {
                (neg, coeff)
            } else {
                (neg, format!("{coeff} {m}"))
            }
        })
        .collect();
    join_signed(parts)
}

/// LaTeX counterpart of [`combination_text`].
pub fn combination_latex<'a, I>(iter: I) -> String
where
    I: Iterator<Item = (String, &'a RatFuncQ)>,
{
    let items: Vec<(String, &RatFuncQ)> = iter.filter(|(_, c)| !c.is_zero()).collect();
    let many = items.len() > 1;
    let parts = items
        .into_iter()
        .map(|(m, c)| {
            if let Some(r) = c.as_poly().and_then(|p| p.constant_value()) {
                let neg = r.is_negative();
                let a = r.abs();
                let body = if m == "1" {
                    latex_rat(&a)
                } else if a.is_one() {
                    m
                } else {
                    format!("{} {m}", latex_rat(&a))
                };
                return (neg, body);
            }
            let wrap = (m != "1" || many).then_some(("\\left(", "\\right)"));
            let (neg, coeff) = signed_coeff(c.to_latex(), is_single(c), wrap);
            if m == "1" {
                (neg, coeff)
            } else {
                (neg, format!("{coeff} {m}"))
            }
        })
        .collect();
    join_signed(parts)
}

pub fn bracket_latex(b: &BracketResult, short: bool) -> String {
    let mut items: Vec<(String, RatFuncQ)> = b
        .terms
        .iter()
        .rev()
        .map(|(g, c)| (g.to_latex(short), RatFuncQ::from_rat(c.clone())))
        .collect();
    if !b.scalar.is_zero() {
        items.push(("1".into(), RatFuncQ::from_rat(b.scalar.clone())));
    }
    combination_latex(items.iter().map(|(m, c)| (m.clone(), c)))
}

pub fn element_latex(u: &UElement, short: bool) -> String {
    combination_latex(u.display_terms().into_iter().map(|(m, c)| (m.to_latex(short), c)))
}

fn with_v0(body: String, single: bool, v0: &str) -> String {
    if single {
        match body.as_str() {
            "1" => v0.to_string(),
            "-1" => format!("-{v0}"),
            _ => format!("{body} {v0}"),
        }
    } else {
        format!("\\left({body}\\right) {v0}")
    }
}

pub fn vector_latex(v: &VermaVector, short: bool) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let terms: Vec<(String, RatFuncQ)> = v
        .display_terms()
        .into_iter()
        .map(|(m, c)| (m.to_latex(short), RatFuncQ::from_poly(c.clone())))
        .collect();
    let body = combination_latex(terms.iter().map(|(m, c)| (m.clone(), c)));
    let lone_sum = terms.len() == 1 && terms[0].0 == "1" && terms[0].1.num().num_terms() > 1;
    with_v0(body, terms.len() == 1 && !lone_sum, "v_0")
}

/// A coefficient vector over the ansatz monomials, as `(...) v0`.
pub fn kernel_text(monomials: &[String], coeffs: &[RatFuncQ]) -> String {
    let body = combination_text(monomials.iter().cloned().zip(coeffs).rev());
    let count = coeffs.iter().filter(|c| !c.is_zero()).count();
    if count == 1 {
        match body.as_str() {
            "1" => "v0".into(),
            "-1" => "-v0".into(),
            _ => format!("{body} v0"),
        }
    } else {
        format!("({body}) v0")
    }
}

pub fn kernel_latex(monomials: &[String], coeffs: &[RatFuncQ]) -> String {
    let body = combination_latex(monomials.iter().cloned().zip(coeffs).rev());
    let count = coeffs.iter().filter(|c| !c.is_zero()).count();
    with_v0(body, count == 1, "v_0")
}

/// `L2 = L1`, or the raw equations `... = 0` when there is no solved form.
pub fn constraint_lines(c: &ConstraintSet) -> Vec<String> {
    if c.solved_form().is_some() {
        c.solved_text()
    } else {
        c.equations().iter().map(|e| format!("{e} = 0")).collect()
    }
}

pub fn constraint_latex(c: &ConstraintSet) -> Vec<String> {
    match c.solved_form() {
        Some(s) => s
            .iter()
            .map(|(v, rhs)| format!("\\Lambda(H_{}) = {}", v + 1, rhs.to_latex()))
            .collect(),
        None => c.equations().iter().map(|e| format!("{} = 0", e.to_latex())).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, PolyQ};

    #[test]
    fn scalar_and_signs() {
        let two = RatFuncQ::from_rat(int(2));
        let m1 = RatFuncQ::from_rat(int(-1));
        let one = RatFuncQ::one();
        let items = [("a+1 a-1".to_string(), &one), ("1".to_string(), &one)];
        assert_eq!(combination_text(items.into_iter()), "a+1 a-1 + 1");
        let items = [("(a+2)^2".to_string(), &one), ("b+2".to_string(), &two)];
        assert_eq!(combination_text(items.into_iter()), "(a+2)^2 + 2 b+2");
        let items = [("b+2".to_string(), &m1)];
        assert_eq!(combination_text(items.into_iter()), "-b+2");
    }

    #[test]
    fn polynomial_coefficients() {
        let l2 = RatFuncQ::from_poly(PolyQ::var(1));
        let shifted = RatFuncQ::from_poly(&PolyQ::var(1) - &PolyQ::one());
        let neg = RatFuncQ::from_poly(PolyQ::var(0).scale(&int(-2)));
        let items = [("a+1".to_string(), &shifted), ("1".to_string(), &l2)];
        assert_eq!(combination_text(items.into_iter()), "(L2 - 1) a+1 + L2");
        let items = [("1".to_string(), &neg)];
        assert_eq!(combination_text(items.into_iter()), "-2*L1");
    }

    #[test]
    fn kernel_vector_text() {
        let ms = vec!["b+2".to_string(), "(a+2)^2".to_string()];
        let k = vec![RatFuncQ::from_rat(int(-2)), RatFuncQ::one()];
        assert_eq!(kernel_text(&ms, &k), "((a+2)^2 - 2 b+2) v0");
        let ms = vec!["b^+_2".to_string(), "(a^+_2)^{2}".to_string()];
        assert_eq!(kernel_latex(&ms, &k), "\\left((a^+_2)^{2} - 2 b^+_2\\right) v_0");
    }
}
