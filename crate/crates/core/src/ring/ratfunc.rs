use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{factor::poly_gcd, PolyQ, Rat, RingError};

/// Reduced fraction of polynomials with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFuncQ {
    num: PolyQ,
    den: PolyQ,
}

impl RatFuncQ {
    pub fn new(num: PolyQ, den: PolyQ) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = poly_gcd(&num, &den)?;
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let lc = den.leading_coeff().recip();
        Ok(RatFuncQ { num: num.scale(&lc), den: den.scale(&lc) })
    }

    pub fn zero() -> Self {
        RatFuncQ { num: PolyQ::zero(), den: PolyQ::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(PolyQ::one())
    }

    pub fn from_poly(p: PolyQ) -> Self {
        RatFuncQ { num: p, den: PolyQ::one() }
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::from_poly(PolyQ::constant(c))
    }

    pub fn num(&self) -> &PolyQ {
        &self.num
    }

    pub fn den(&self) -> &PolyQ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_poly(&self) -> Option<PolyQ> {
        self.den
            .constant_value()
            .map(|d| self.num.scale(&d.recip()))
    }

    pub fn recip(&self) -> Result<Self, RingError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Value at a point; `None` where the denominator vanishes.
    pub fn eval(&self, point: &[Rat]) -> Option<Rat> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point)? / d)
    }

    /// Replaces variable `v` by `s`; errors if the denominator becomes zero.
    pub fn substitute(&self, v: usize, s: &PolyQ) -> Result<Self, RingError> {
        Self::new(self.num.substitute(v, s), self.den.substitute(v, s))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFuncQ { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn to_text(&self) -> String {
        if self.den.is_one_poly() {
            return self.num.to_text();
        }
        let wrap = |p: &PolyQ, strict: bool| {
            let t = p.to_text();
            if p.num_terms() > 1 || (strict && t.contains(['*', '/'])) {
                format!("({t})")
            } else {
                t
            }
        };
        format!("{}/{}", wrap(&self.num, false), wrap(&self.den, true))
    }

    pub fn to_latex(&self) -> String {
        if self.den.is_one_poly() {
            return self.num.to_latex();
        }
        format!("\\frac{{{}}}{{{}}}", self.num.to_latex(), self.den.to_latex())
    }
}

impl PolyQ {
    fn is_one_poly(&self) -> bool {
        self.constant_value().map(|c| c.is_one()).unwrap_or(false)
    }
}

impl Default for RatFuncQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFuncQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl From<PolyQ> for RatFuncQ {
    fn from(p: PolyQ) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a RatFuncQ> for &RatFuncQ {
    type Output = RatFuncQ;
    fn add(self, rhs: &'a RatFuncQ) -> RatFuncQ {
        if self.den == rhs.den {
            return RatFuncQ::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero den");
        }
        RatFuncQ::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
            .expect("nonzero den")
    }
}

impl<'a> Sub<&'a RatFuncQ> for &RatFuncQ {
    type Output = RatFuncQ;
    fn sub(self, rhs: &'a RatFuncQ) -> RatFuncQ {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFuncQ> for &RatFuncQ {
    type Output = RatFuncQ;
    fn mul(self, rhs: &'a RatFuncQ) -> RatFuncQ {
        if self.is_zero() || rhs.is_zero() {
            return RatFuncQ::zero();
        }
        RatFuncQ::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero den")
    }
}

/// Panics on division by zero, like integer division.
impl<'a> Div<&'a RatFuncQ> for &RatFuncQ {
    type Output = RatFuncQ;
    fn div(self, rhs: &'a RatFuncQ) -> RatFuncQ {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFuncQ::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("nonzero den")
    }
}

impl Neg for &RatFuncQ {
    type Output = RatFuncQ;
    fn neg(self) -> RatFuncQ {
        RatFuncQ { num: -&self.num, den: self.den.clone() }
    }
}
