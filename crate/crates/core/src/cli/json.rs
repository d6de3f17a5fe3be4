//! Serializable views of results. Every coefficient is a text string.

use serde::Serialize;

use crate::algebra::{BracketResult, Generator};
use crate::pbw::UElement;
use crate::singular::SingularReport;
use crate::verma::{ConstraintSet, SingularityReport, Verdict, VermaVector};

use super::render::{constraint_lines, kernel_text};

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Term {
    pub monomial: String,
    pub coeff: String,
}

pub fn vector_terms(v: &VermaVector) -> Vec<Term> {
    v.display_terms()
        .into_iter()
        .map(|(m, c)| Term { monomial: m.to_text(), coeff: c.to_text() })
        .collect()
}

pub fn element_terms(u: &UElement) -> Vec<Term> {
    u.display_terms()
        .into_iter()
        .map(|(m, c)| Term { monomial: m.to_text(), coeff: c.to_text() })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct BracketJson {
    pub x: String,
    pub y: String,
    pub scalar: String,
    pub terms: Vec<Term>,
    pub text: String,
}

impl BracketJson {
    pub fn new(x: &Generator, y: &Generator, b: &BracketResult) -> Self {
        BracketJson {
            x: x.name(),
            y: y.name(),
            scalar: crate::ring::fmt_rat(&b.scalar),
            terms: b
                .terms
                .iter()
                .rev()
                .map(|(g, c)| Term { monomial: g.name(), coeff: crate::ring::fmt_rat(c) })
                .collect(),
            text: b.to_text(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ElementJson {
    pub terms: Vec<Term>,
    pub text: String,
}

impl ElementJson {
    pub fn new(u: &UElement) -> Self {
        ElementJson { terms: element_terms(u), text: u.to_text() }
    }
}

#[derive(Debug, Serialize)]
pub struct VectorJson {
    pub terms: Vec<Term>,
    pub text: String,
}

impl VectorJson {
    pub fn new(v: &VermaVector) -> Self {
        VectorJson { terms: vector_terms(v), text: v.to_text() }
    }
}

#[derive(Debug, Serialize)]
pub struct ConstraintJson {
    pub equations: Vec<String>,
    pub solved_form: Option<Vec<String>>,
}

impl ConstraintJson {
    pub fn new(c: &ConstraintSet) -> Self {
        ConstraintJson {
            equations: c.equations().iter().map(|e| e.to_text()).collect(),
            solved_form: c.solved_form().map(|_| c.solved_text()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub generator: String,
    pub image: Vec<Term>,
    pub vanishes: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifyJson {
    pub vector: Vec<Term>,
    pub constraints: ConstraintJson,
    pub checks: Vec<CheckJson>,
    pub verdict: &'static str,
    pub singular: bool,
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Singular => "singular",
        Verdict::NotSingular => "not singular",
        Verdict::ZeroVector => "zero vector",
        Verdict::Unverifiable => "unverifiable constraints",
    }
}

impl VerifyJson {
    pub fn new(v: &VermaVector, c: &ConstraintSet, r: &SingularityReport) -> Self {
        VerifyJson {
            vector: vector_terms(v),
            constraints: ConstraintJson::new(c),
            checks: r
                .checks
                .iter()
                .map(|k| CheckJson { generator: k.generator.name(), image: vector_terms(&k.image), vanishes: k.vanishes })
                .collect(),
            verdict: verdict_name(r.verdict),
            singular: r.is_singular(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BranchJson {
    pub constraints: Vec<String>,
    pub solved_form: Vec<String>,
    pub genericity: Vec<String>,
    pub vectors: Vec<Vec<String>>,
    pub rendered: Vec<String>,
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub n: usize,
    pub weight: String,
    pub monomials: Vec<String>,
    pub branches: Vec<BranchJson>,
    pub trivial: bool,
}

impl ReportJson {
    pub fn new(r: &SingularReport) -> Self {
        let monomials: Vec<String> = r.monomials.iter().map(|m| m.to_text()).collect();
        ReportJson {
            n: r.n,
            weight: r.weight.to_text(),
            monomials: monomials.clone(),
            branches: r
                .branches
                .iter()
                .map(|b| BranchJson {
                    constraints: b.branch.constraints.equations().iter().map(|e| e.to_text()).collect(),
                    solved_form: constraint_lines(&b.branch.constraints)
                        .into_iter()
                        .filter(|_| b.branch.constraints.solved_form().is_some())
                        .collect(),
                    genericity: b.branch.genericity.iter().map(|g| g.to_text()).collect(),
                    vectors: b.branch.kernel.iter().map(|k| k.iter().map(|c| c.to_text()).collect()).collect(),
                    rendered: b.branch.kernel.iter().map(|k| kernel_text(&monomials, k)).collect(),
                    verified: b.verified,
                })
                .collect(),
            trivial: r.trivial,
        }
    }
}
