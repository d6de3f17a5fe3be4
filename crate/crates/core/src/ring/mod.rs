//! Exact coefficient arithmetic over Q.
//!
//! [`PolyQ`] is a sparse multivariate polynomial in the weight variables
//! `L1, L2, ...` (standing for `Λ(H_1), Λ(H_2), ...`), [`RatFuncQ`] is its
//! fraction field. Variables are indexed from zero internally; `L1` is
//! variable `0`.

mod factor;
mod poly;
mod ratfunc;

pub use factor::{content_free, linear_factors, poly_gcd, rational_roots, squarefree_part};
pub use poly::{Exponents, PolyQ};
pub use ratfunc::RatFuncQ;

use num_bigint::BigInt;
use num_traits::{One, Signed};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rat = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("polynomial does not divide exactly")]
    InexactDivision,
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Renders a rational as `p` or `p/q`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// LaTeX rendering of a rational (`\tfrac{p}{q}`), sign in front.
pub fn latex_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{}\\tfrac{{{}}}{{{}}}", sign, r.numer().abs(), r.denom())
    }
}
