mod common;

use common::{gen, realize, realize_monomial, reduce_word, to_monomial, Weyl};
use jacobi_verma::algebra::{bracket, generators, weight, Generator, Weight};
use jacobi_verma::cli::parse::parse_element;
use jacobi_verma::pbw::{
    monomial_weight, multiply, normal_order, normal_order_word, normal_order_word_with_fuel, normalize, PbwMonomial,
    UElement,
};
use jacobi_verma::ring::{Rat, RatFuncQ};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn word(n: usize, max_len: usize) -> impl Strategy<Value = Vec<Generator>> {
    let basis = generators(n).unwrap();
    prop::collection::vec(prop::sample::select(basis), 0..=max_len)
}

fn element(g: &Generator) -> UElement {
    UElement::generator(*g)
}

fn word_weight(w: &[Generator], n: usize) -> Weight {
    w.iter().fold(Weight::zero(n), |acc, g| &acc + &weight(g).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn agrees_with_the_right_to_left_reducer(w in word(2, 6)) {
        let ours = normal_order_word(&w);
        let oracle: std::collections::BTreeMap<PbwMonomial, Rat> =
            reduce_word(&w).into_iter().map(|(k, c)| (to_monomial(&k), c)).collect();
        prop_assert_eq!(ours, oracle);
    }

    #[test]
    fn agrees_with_the_reducer_in_rank_three(w in word(3, 4)) {
        let ours = normal_order_word(&w);
        let oracle: std::collections::BTreeMap<PbwMonomial, Rat> =
            reduce_word(&w).into_iter().map(|(k, c)| (to_monomial(&k), c)).collect();
        prop_assert_eq!(ours, oracle);
    }

    #[test]
    fn preserves_the_oscillator_image(w in word(2, 5)) {
        let direct = w.iter().fold(Weyl::scalar(2, Rat::one()), |acc, g| acc.times(&realize(g)));
        let mut via = Weyl::default();
        for (m, c) in normal_order_word(&w) {
            via = via.plus(&realize_monomial(&m, 2).scale(&c));
        }
        prop_assert_eq!(direct, via);
    }

    #[test]
    fn is_idempotent(w in word(2, 6)) {
        let once = normal_order(&w, &RatFuncQ::one());
        prop_assert_eq!(normalize(&once), once.clone());
        for (m, _) in once.terms() {
            prop_assert_eq!(normal_order_word(&m.word()).len(), 1);
        }
    }

    #[test]
    fn preserves_weight(w in word(2, 6)) {
        let target = word_weight(&w, 2);
        for (m, _) in normal_order_word(&w) {
            prop_assert_eq!(monomial_weight(&m, 2), target.clone());
            if m.is_one() {
                prop_assert!(target.is_zero());
            }
        }
    }

    #[test]
    fn terminates_within_fuel(w in word(2, 8)) {
        prop_assert!(normal_order_word_with_fuel(&w, 5_000_000).is_some());
    }

    #[test]
    fn monomial_text_round_trip(w in word(2, 5)) {
        for (m, _) in normal_order_word(&w) {
            let parsed = parse_element(&m.to_text(), 2).unwrap();
            prop_assert_eq!(parsed, UElement::from_monomial(m.clone(), RatFuncQ::one()));
        }
    }
}

#[test]
fn multiplication_is_associative_on_basis_triples() {
    let basis = generators(2).unwrap();
    for x in &basis {
        for y in &basis {
            let xy = multiply(&element(x), &element(y));
            for z in &basis {
                let left = multiply(&xy, &element(z));
                let right = multiply(&element(x), &multiply(&element(y), &element(z)));
                assert_eq!(left, right, "({x} {y}) {z}");
            }
        }
    }
}

#[test]
fn commutator_lifts_the_bracket() {
    for n in [2, 3] {
        let basis = generators(n).unwrap();
        for x in &basis {
            for y in &basis {
                let c = multiply(&element(x), &element(y)).sub(&multiply(&element(y), &element(x)));
                let b = bracket(x, y).unwrap();
                let mut want = UElement::zero();
                if !b.scalar.is_zero() {
                    want.add_term(PbwMonomial::one(), RatFuncQ::from_rat(b.scalar.clone()));
                }
                for (g, k) in &b.terms {
                    want.add_term(PbwMonomial::generator(*g), RatFuncQ::from_rat(k.clone()));
                }
                assert_eq!(c, want, "[{x}, {y}]");
            }
        }
    }
}

#[test]
fn examples() {
    let n = 2;
    let u = normal_order(&[gen("a-1", n), gen("a+1", n)], &RatFuncQ::one());
    assert_eq!(u.to_text(), "a+1 a-1 + 1");
    let u = normal_order(&[gen("b-1", n), gen("a+1", n), gen("a+1", n)], &RatFuncQ::one());
    assert_eq!(u.to_text(), "(a+1)^2 b-1 + 2 a+1 a-1 + 1");
    let ordered = [gen("a+2", n), gen("b+2", n), gen("h1", n)];
    let u = normal_order(&ordered, &RatFuncQ::one());
    assert_eq!(u.len(), 1);
    assert!(u.coeff(&to_monomial(&ordered)).is_one());
    assert_eq!(multiply(&UElement::one(), &element(&gen("c+", n))), element(&gen("c+", n)));
    let heis = multiply(&element(&gen("a-1", n)), &element(&gen("a+1", n)))
        .sub(&multiply(&element(&gen("a+1", n)), &element(&gen("a-1", n))));
    assert_eq!(heis, UElement::one());
    let m = to_monomial(&[gen("b+2", n), gen("d+", n), gen("d+", n)]);
    assert_eq!(monomial_weight(&m, n), Weight::from_ints(&[2, 0]));
    assert_eq!(monomial_weight(&PbwMonomial::one(), n), Weight::zero(n));
    let m = to_monomial(&[gen("a+1", n), gen("a+2", n), gen("d+", n)]);
    assert_eq!(monomial_weight(&m, n), Weight::from_ints(&[2, 0]));
}

#[test]
fn d_commutator_follows_the_symplectic_relation() {
    // 2 [K0_12, K0_21] = K0_11 - K0_22
    let n = 2;
    let c = multiply(&element(&gen("d+", n)), &element(&gen("d-", n)))
        .sub(&multiply(&element(&gen("d-", n)), &element(&gen("d+", n))));
    assert_eq!(c.to_text(), "1/2 h1 - 1/2 h2");
    assert!(c.coeff(&PbwMonomial::one()).is_zero());
}
