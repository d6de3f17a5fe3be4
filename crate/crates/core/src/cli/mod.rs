//! The `jv` command line: argument model, dispatch and output rendering.

pub mod json;
pub mod parse;
pub mod render;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{bracket, Weight};
use crate::singular::{find_singular_vectors, SingularReport, SolveError, DEFAULT_BRANCH_BUDGET};
use crate::verma::{is_singular, VermaVector};

use self::parse::{parse_constraints, parse_element, parse_generator, parse_vector, parse_weight, parse_words, ParseError};
use self::render::{
    bracket_latex, constraint_latex, constraint_lines, element_latex, kernel_latex, kernel_text, vector_latex,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Latex,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "jv", version, about = "Brackets, normal ordering and singular vectors for the Jacobi algebra g_n")]
pub struct Cli {
    /// Rank n of g_n.
    #[arg(long, global = true, default_value_t = 2)]
    pub n: usize,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Use the b, c, d, h aliases of g_2 in LaTeX output.
    #[arg(long, global = true)]
    pub short_names: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Lie bracket [X, Y] of two basis elements.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// PBW normal form of an expression in U(g_n).
    NormalOrder {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Apply an element of U(g_n) to a Verma module vector.
    Act {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        vector: String,
    },
    /// Search for singular vectors of the given weight.
    Singular {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value_t = DEFAULT_BRANCH_BUDGET)]
        branch_budget: usize,
    },
    /// Check that a vector is annihilated by every lowering generator.
    Verify {
        #[arg(allow_hyphen_values = true)]
        vector: String,
        #[arg(long, default_value = "")]
        constraints: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("error: {0}")]
    Solve(#[from] SolveError),
    #[error("error: {0}")]
    Other(String),
}

/// Runs a parsed command. Exit codes: 0 success, 2 parse error, 3 branch
/// budget exhausted, 1 anything else.
pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(out) => Outcome::ok(out),
        Err(e) => {
            let code = match &e {
                CliError::Parse(_) => 2,
                CliError::Solve(SolveError::BudgetExhausted { .. }) => 3,
                CliError::Solve(_) | CliError::Other(_) => 1,
            };
            Outcome::fail(code, format!("{e}\n"))
        }
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn dispatch(cli: &Cli) -> Result<String, CliError> {
    let n = cli.n;
    if n == 0 {
        return Err(ParseError { message: "--n must be at least 1".into() }.into());
    }
    let short = cli.short_names;
    match &cli.command {
        Command::Bracket { x, y } => {
            let gx = parse_generator(x, n)?;
            let gy = parse_generator(y, n)?;
            let b = bracket(&gx, &gy).map_err(|e| CliError::Other(e.to_string()))?;
            Ok(match cli.format {
                OutputFormat::Text => format!("{}\n", b.to_text()),
                OutputFormat::Latex => format!(
                    "[{}, {}] = {}\n",
                    gx.to_latex(short),
                    gy.to_latex(short),
                    bracket_latex(&b, short)
                ),
                OutputFormat::Json => json(&json::BracketJson::new(&gx, &gy, &b)),
            })
        }
        Command::NormalOrder { word } => {
            let u = parse_element(word, n)?;
            Ok(match cli.format {
                OutputFormat::Text => format!("{}\n", u.to_text()),
                OutputFormat::Latex => format!("{}\n", element_latex(&u, short)),
                OutputFormat::Json => json(&json::ElementJson::new(&u)),
            })
        }
        Command::Act { x, vector } => {
            let words = parse_words(x, n)?;
            let v = parse_vector(vector, n)?;
            let result = apply_element(n, &words, &v);
            Ok(match cli.format {
                OutputFormat::Text => format!("{}\n", result.to_text()),
                OutputFormat::Latex => format!("{}\n", vector_latex(&result, short)),
                OutputFormat::Json => json(&json::VectorJson::new(&result)),
            })
        }
        Command::Verify { vector, constraints } => {
            let v = parse_vector(vector, n)?;
            let c = parse_constraints(constraints, n)?;
            let r = is_singular(&v, &c);
            Ok(match cli.format {
                OutputFormat::Json => json(&json::VerifyJson::new(&v, &c, &r)),
                OutputFormat::Text => {
                    let mut out = format!("{}\n", json::verdict_name(r.verdict));
                    for k in &r.checks {
                        out.push_str(&format!("{} v = {}\n", k.generator.name(), k.image.to_text()));
                    }
                    out
                }
                OutputFormat::Latex => {
                    let mut out = format!("% {}\n", json::verdict_name(r.verdict));
                    for k in &r.checks {
                        out.push_str(&format!("{} v = {}\n", k.generator.to_latex(short), vector_latex(&k.image, short)));
                    }
                    out
                }
            })
        }
        Command::Singular { weight, branch_budget } => {
            let w = parse_weight(weight, n)?;
            let report = find_singular_vectors(&w, n, *branch_budget)?;
            Ok(match cli.format {
                OutputFormat::Json => json(&json::ReportJson::new(&report)),
                OutputFormat::Text => singular_text(&report),
                OutputFormat::Latex => singular_latex(&report, short),
            })
        }
    }
}

fn apply_element(n: usize, words: &[(Vec<crate::algebra::Generator>, crate::ring::PolyQ)], v: &VermaVector) -> VermaVector {
    let mut out = VermaVector::zero(n);
    for (w, c) in words {
        for (m, d) in v.terms() {
            let mut word = w.clone();
            word.extend(m.word());
            out = out.add(&crate::verma::apply_word(n, &word, &(c * d)));
        }
    }
    out
}

fn weight_latex(w: &Weight) -> String {
    let mut s = w.to_delta_text();
    for k in (1..=w.dim()).rev() {
        s = s.replace(&format!("d{k}"), &format!("\\delta_{k}"));
    }
    s
}

fn singular_text(r: &SingularReport) -> String {
    let mut out = format!("weight {} = {}\n", r.weight.to_delta_text(), r.weight);
    let monomials: Vec<String> = r.monomials.iter().map(|m| m.to_text()).collect();
    out.push_str(&format!("ansatz ({}): {}\n", monomials.len(), monomials.join(", ")));
    if r.trivial {
        out.push_str("trivial: v0 itself\n");
        return out;
    }
    if r.branches.is_empty() {
        out.push_str(&format!("no singular vector of weight {}\n", r.weight.to_delta_text()));
        return out;
    }
    for (k, b) in r.branches.iter().enumerate() {
        let lines = constraint_lines(&b.branch.constraints);
        let head = if lines.is_empty() { "generic Λ".to_string() } else { lines.join(", ") };
        out.push_str(&format!("branch {}: {}\n", k + 1, head));
        if !b.branch.genericity.is_empty() {
            let g: Vec<String> = b.branch.genericity.iter().map(|p| format!("{p} != 0")).collect();
            out.push_str(&format!("  assuming {}\n", g.join(", ")));
        }
        for v in &b.branch.kernel {
            out.push_str(&format!("  vector: {}\n", kernel_text(&monomials, v)));
        }
        let status = if b.verified { "verified" } else { "not verified" };
        out.push_str(&format!("  {status}\n"));
    }
    out
}

fn singular_latex(r: &SingularReport, short: bool) -> String {
    let mut out = format!("% weight ${}$\n", weight_latex(&r.weight));
    let monomials: Vec<String> = r.monomials.iter().map(|m| m.to_latex(short)).collect();
    if r.trivial {
        out.push_str("% trivial: $v_0$ itself\n");
        return out;
    }
    if r.branches.is_empty() {
        out.push_str(&format!("% no singular vector of weight ${}$\n", weight_latex(&r.weight)));
        return out;
    }
    for b in &r.branches {
        let cond = constraint_latex(&b.branch.constraints).join(",\\ ");
        for v in &b.branch.kernel {
            out.push_str(&format!("{cond}: \\quad {}\n", kernel_latex(&monomials, v)));
        }
    }
    out
}
