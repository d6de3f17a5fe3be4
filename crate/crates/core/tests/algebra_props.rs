mod common;

use common::{gen, rat, realize, realize_bracket};
use jacobi_verma::algebra::{bracket, classify, generators, weight, BracketResult, Family, GenClass, Generator, Weight};
use jacobi_verma::cli::parse::parse_generator;
use num_traits::Zero;

fn is_heisenberg(g: &Generator) -> bool {
    matches!(g.family(), Family::APlus | Family::AMinus)
}

/// `[x, r]` for a bracket value `r`, extended linearly; scalars are central.
fn bracket_with(x: &Generator, r: &BracketResult) -> BracketResult {
    let mut out = BracketResult::zero();
    for (g, c) in &r.terms {
        out = &out + &bracket(x, g).unwrap().scale(c);
    }
    out
}

#[test]
fn structure_constants_match_the_oscillator_realization() {
    for n in 1..=3 {
        let basis = generators(n).unwrap();
        for x in &basis {
            for y in &basis {
                let b = bracket(x, y).unwrap();
                let want = realize(x).commutator(&realize(y));
                assert_eq!(realize_bracket(&b, n), want, "[{x}, {y}] in g_{n}");
            }
        }
    }
}

#[test]
fn basis_sizes() {
    for (n, size) in [(1, 5), (2, 14), (3, 27), (4, 44)] {
        assert_eq!(generators(n).unwrap().len(), size);
        assert_eq!(generators(n).unwrap().len(), 2 * n + n * (n + 1) + n * n);
    }
}

#[test]
fn antisymmetry() {
    for n in 1..=3 {
        let basis = generators(n).unwrap();
        for x in &basis {
            for y in &basis {
                assert_eq!(bracket(x, y).unwrap(), -&bracket(y, x).unwrap(), "[{x}, {y}]");
            }
        }
    }
}

#[test]
fn jacobi_identity() {
    for n in [2, 3] {
        let basis = generators(n).unwrap();
        for x in &basis {
            for y in &basis {
                let xy = bracket(x, y).unwrap();
                for z in &basis {
                    let a = bracket_with(x, &bracket(y, z).unwrap());
                    let b = bracket_with(y, &bracket(z, x).unwrap());
                    let c = bracket_with(z, &xy);
                    assert!((&(&a + &b) + &c).is_zero(), "Jacobi fails on ({x}, {y}, {z})");
                }
            }
        }
    }
}

#[test]
fn heisenberg_part_is_an_ideal() {
    for n in 1..=3 {
        let basis = generators(n).unwrap();
        for x in basis.iter().filter(|g| is_heisenberg(g)) {
            for y in &basis {
                let b = bracket(x, y).unwrap();
                assert!(b.terms.keys().all(is_heisenberg), "[{x}, {y}] = {b}");
            }
        }
    }
}

#[test]
fn weights_add_under_brackets() {
    for n in [2, 3] {
        let basis = generators(n).unwrap();
        for x in &basis {
            for y in &basis {
                let b = bracket(x, y).unwrap();
                let sum = &weight(x).unwrap() + &weight(y).unwrap();
                for z in b.terms.keys() {
                    assert_eq!(weight(z).unwrap(), sum, "[{x}, {y}] contains {z}");
                }
                if !b.scalar.is_zero() {
                    assert!(sum.is_zero());
                }
            }
        }
    }
}

#[test]
fn cartan_elements_act_diagonally() {
    for n in [2, 3] {
        let basis = generators(n).unwrap();
        for h in basis.iter().filter(|g| classify(g) == GenClass::Cartan) {
            for g in basis.iter().filter(|g| classify(g) != GenClass::Cartan) {
                let b = bracket(h, g).unwrap();
                assert!(b.scalar.is_zero());
                assert!(b.terms.keys().all(|z| z == g), "[{h}, {g}] = {b}");
            }
        }
    }
}

#[test]
fn cartan_eigenvalues_on_positive_generators() {
    // h_1 : (b+1, b+2, c+, d+, a+1, a+2) -> (1, 0, 1/2, 1/2, 1/2, 0)
    // h_2 : (b+1, b+2, c+, d+, a+1, a+2) -> (0, 1, 1/2, -1/2, 0, 1/2)
    let names = ["b+1", "b+2", "c+", "d+", "a+1", "a+2"];
    let h1 = [rat(1, 1), rat(0, 1), rat(1, 2), rat(1, 2), rat(1, 2), rat(0, 1)];
    let h2 = [rat(0, 1), rat(1, 1), rat(1, 2), rat(-1, 2), rat(0, 1), rat(1, 2)];
    for (k, name) in names.iter().enumerate() {
        let g = gen(name, 2);
        assert_eq!(bracket(&gen("h1", 2), &g).unwrap().coeff(&g), h1[k], "h1 on {name}");
        assert_eq!(bracket(&gen("h2", 2), &g).unwrap().coeff(&g), h2[k], "h2 on {name}");
    }
    let gradings = [[2, 0], [0, 2], [1, 1], [1, -1], [1, 0], [0, 1]];
    for (name, w) in names.iter().zip(gradings) {
        assert_eq!(weight(&gen(name, 2)).unwrap(), Weight::from_ints(&w), "{name}");
    }
}

#[test]
fn heisenberg_relations() {
    assert_eq!(bracket(&gen("a-1", 2), &gen("a+1", 2)).unwrap().to_text(), "1");
    assert!(bracket(&gen("a-1", 2), &gen("a+2", 2)).unwrap().is_zero());
    assert!(bracket(&gen("a+1", 2), &gen("a+2", 2)).unwrap().is_zero());
    assert!(bracket(&gen("a-1", 2), &gen("a-2", 2)).unwrap().is_zero());
}

#[test]
fn generator_text_round_trip() {
    for n in 1..=3 {
        for g in generators(n).unwrap() {
            assert_eq!(parse_generator(&g.name(), n).unwrap(), g);
            assert_eq!(parse_generator(&g.long_name(), n).unwrap(), g);
        }
    }
}

#[test]
fn frozen_bracket_table_of_g2() {
    let basis = generators(2).unwrap();
    let mut table = String::new();
    for x in &basis {
        for y in &basis {
            table.push_str(&format!("[{x}, {y}] = {}\n", bracket(x, y).unwrap()));
        }
    }
    let golden = include_str!("golden/bracket_table_g2.txt");
    assert_eq!(table, golden);
}
