//! Library half of the `pqsym` command: expression parsing, evaluation with
//! explicit ϑ coercion, and the verification suites. `main.rs` only maps
//! command-line arguments onto the `run_*` functions here.

pub mod eval;
pub mod parse;
pub mod suites;

use serde::Serialize;

use pqsym::json::{ElementJson, GeneratorPolynomialJson};
use pqsym::oracle::Element;
use pqsym::structure::{decompose_inductive, decompose_zb, odd_basis_rank, verify_completeness, CompletenessReport};
use pqsym::{GeneratorPolynomial, PQSymElement};

use eval::{Basis, Value};
use parse::ParseError;
use suites::{Suite, SuiteOptions, SuiteReport};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Coercion(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] pqsym::Error),
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
}

/// Outcome of a command: text for stdout and whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    /// leading-term elimination into the ℤ-basis
    Inductive,
    /// linear solve against the weight-n ℤ-basis monomials
    Zb,
    /// the ℚ-basis form with odd-degree generators only
    Odd,
}

fn element_text(e: &Element, json: bool) -> Result<String, CliError> {
    if json {
        Ok(serde_json::to_string(&ElementJson::from(e))?)
    } else {
        Ok(e.to_string())
    }
}

fn value_of(input: &str) -> Result<Value, CliError> {
    if input.trim_start().starts_with('{') {
        let parsed: ElementJson = serde_json::from_str(input)?;
        Ok(match parsed.to_element()? {
            Element::QSym(f) => Value::QSym(f),
            Element::PQSym(f) => Value::PQSym(f),
        })
    } else {
        eval::evaluate(&parse::parse(input)?)
    }
}

/// Evaluate an expression, printing in `basis` or the natural basis of
/// the result.
pub fn run_eval(input: &str, basis: Option<Basis>, json: bool) -> Result<Output, CliError> {
    let value = eval::evaluate(&parse::parse(input)?)?;
    let basis = basis.unwrap_or_else(|| value.natural_basis());
    Ok(Output::ok(element_text(&value.in_basis(basis)?, json)?))
}

/// Re-express an element, given as an expression or as element JSON.
pub fn run_convert(input: &str, basis: Basis, json: bool) -> Result<Output, CliError> {
    Ok(Output::ok(element_text(&value_of(input)?.in_basis(basis)?, json)?))
}

/// Decompose a PQSym element into the generators `Q[n; α]`.
pub fn run_decompose(input: &str, method: Method, json: bool) -> Result<Output, CliError> {
    let f: PQSymElement = match value_of(input)?.in_basis(Basis::L)? {
        Element::PQSym(f) => f,
        Element::QSym(_) => unreachable!("L is a PQSym basis"),
    };
    let p: GeneratorPolynomial = match method {
        Method::Inductive => decompose_inductive(&f)?,
        Method::Zb => decompose_zb(&f)?,
        Method::Odd => decompose_inductive(&f)?.to_odd_generators()?,
    };
    let text = if json { serde_json::to_string(&GeneratorPolynomialJson::from(&p))? } else { p.to_string() };
    Ok(Output::ok(text))
}

#[derive(Debug, Clone, Serialize)]
struct RankRow {
    #[serde(flatten)]
    zb: CompletenessReport,
    odd_monomials: usize,
    odd_rank: usize,
}

/// Dimension table: for each weight, the ℤ-basis rank and lattice
/// determinant, and the rank of the odd-degree ℚ-basis.
pub fn run_rank(max_weight: u32, json: bool) -> Result<Output, CliError> {
    if max_weight == 0 {
        return Err(CliError::Usage("--max-weight must be at least 1".into()));
    }
    let rows: Vec<RankRow> = (1..=max_weight)
        .map(|n| {
            let (odd_monomials, odd_rank) = odd_basis_rank(n);
            RankRow { zb: verify_completeness(n), odd_monomials, odd_rank }
        })
        .collect();
    let passed = rows.iter().all(|r| r.zb.passed() && r.odd_rank as u64 == r.zb.expected && r.odd_monomials == r.odd_rank);
    let text = if json {
        serde_json::to_string_pretty(&rows)?
    } else {
        let mut s = String::from("weight  f(n-1)  zb-monomials  zb-rank  determinant  odd-monomials  odd-rank\n");
        for r in &rows {
            s.push_str(&format!(
                "{:>6}  {:>6}  {:>12}  {:>7}  {:>11}  {:>13}  {:>8}\n",
                r.zb.weight, r.zb.expected, r.zb.monomials, r.zb.rank, r.zb.determinant, r.odd_monomials, r.odd_rank
            ));
        }
        s.truncate(s.trim_end().len());
        s
    };
    Ok(Output { text, passed })
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    passed: bool,
    suites: &'a [SuiteReport],
}

/// Run a verification suite; `passed` is false when any check failed.
pub fn run_verify(suite: Suite, opts: SuiteOptions, json: bool) -> Result<Output, CliError> {
    let reports = suites::run(suite, opts)?;
    let passed = reports.iter().all(|r| r.passed);
    let text = if json {
        serde_json::to_string_pretty(&VerifyJson { passed, suites: &reports })?
    } else {
        let body: String = reports.iter().map(ToString::to_string).collect();
        body.trim_end().to_string()
    };
    Ok(Output { text, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_and_convert_agree() {
        let a = run_eval("K[1,3]", Some(Basis::L), false).unwrap();
        let b = run_convert("K[1,3]", Basis::L, false).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn convert_reads_json() {
        let json = run_eval("L[1]*L[1]", None, true).unwrap().text;
        assert_eq!(json, r#"{"ring":"pqsym","basis":"L","terms":[{"index":[1,1],"coef":"2"}]}"#);
        let back = run_convert(&json, Basis::L, false).unwrap().text;
        assert_eq!(back, "2*L[1,1]");
        assert!(run_convert(r#"{"ring":"pqsym","basis":"L","terms":[{"index":[2],"coef":"1"}]}"#, Basis::L, false).is_err());
    }

    #[test]
    fn decompose_methods() {
        assert_eq!(run_decompose("L[3]", Method::Inductive, false).unwrap().text, "3*Q[3; 1] - Q[2; 1]*Q[1; 1]");
        assert_eq!(run_decompose("L[3]", Method::Zb, false).unwrap().text, "3*Q[3; 1] - Q[2; 1]*Q[1; 1]");
        assert_eq!(run_decompose("L[3]", Method::Odd, false).unwrap().text, "3*Q[3; 1] - 1/2*Q[1; 1]^3");
        assert!(matches!(run_decompose("M[3]", Method::Zb, false), Err(CliError::Coercion(_))));
        let j = run_decompose("L[1]", Method::Zb, true).unwrap().text;
        assert_eq!(j, r#"{"terms":[{"monomial":[{"alpha":[1],"lambda":[1]}],"coef":"1"}]}"#);
    }

    #[test]
    fn rank_table() {
        let out = run_rank(5, false).unwrap();
        assert!(out.passed);
        assert_eq!(out.text.lines().count(), 6);
        assert!(out.text.lines().last().unwrap().trim_start().starts_with("5       5"));
    }
}
