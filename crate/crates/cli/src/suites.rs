//! The verification suites behind `pqsym verify`. Each check that can be
//! written in the expression language carries a reproducer: an expression
//! that must evaluate to zero.

use std::fmt;

use serde::Serialize;

use pqsym::composition::{compositions, fibonacci, odd_compositions};
use pqsym::oracle::{q_generating_series, realize_qsym_with, TruncatedPolynomial};
use pqsym::pqsym::{peak_function_fundamental, peak_function_monomial, theta_map};
use pqsym::qsym::{symmetric_injection, SymmetricFamily};
use pqsym::structure::{
    decompose_inductive, decompose_zb, generator_indices, verify_completeness, verify_euler_relations,
    CompletenessReport,
};
use pqsym::{Algebra, Composition, PQSymElement, QSymElement, Rational};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Euler,
    ThetaHom,
    Adams,
    Ranks,
    Decompose,
    Oracle,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [Suite::Euler, Suite::ThetaHom, Suite::Adams, Suite::Ranks, Suite::Decompose, Suite::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Euler => "euler",
            Suite::ThetaHom => "theta-hom",
            Suite::Adams => "adams",
            Suite::Ranks => "ranks",
            Suite::Decompose => "decompose",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub property: String,
    pub reproducer: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub max_weight: u32,
    pub checks: usize,
    pub failures: Vec<Failure>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimensions: Option<Vec<CompletenessReport>>,
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{verdict} {} (max weight {}): {} checks, {} failures",
            self.suite,
            self.max_weight,
            self.checks,
            self.failures.len()
        )?;
        if let Some(rows) = &self.dimensions {
            writeln!(f, "  weight  f(n-1)  monomials  rank  determinant")?;
            for r in rows {
                writeln!(f, "  {:>6}  {:>6}  {:>9}  {:>4}  {:>11}", r.weight, r.expected, r.monomials, r.rank, r.determinant)?;
            }
        }
        for x in &self.failures {
            writeln!(f, "  failed {}: {} [{}]", x.property, x.detail, x.reproducer)?;
        }
        Ok(())
    }
}

struct Recorder {
    checks: usize,
    failures: Vec<Failure>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, property: &str, reproducer: impl FnOnce() -> String, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure { property: property.into(), reproducer: reproducer(), detail: detail() });
        }
    }

    fn finish(self, suite: Suite, max_weight: u32, dimensions: Option<Vec<CompletenessReport>>) -> SuiteReport {
        SuiteReport {
            suite: suite.name().into(),
            max_weight,
            checks: self.checks,
            passed: self.failures.is_empty(),
            failures: self.failures,
            dimensions,
        }
    }
}

/// Options shared by the suites.
#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub max_weight: u32,
    /// Variable count for the brute-force oracle; defaults to the weight of
    /// each identity.
    pub vars: Option<usize>,
}

/// Run one suite, or every suite for [`Suite::All`].
pub fn run(suite: Suite, opts: SuiteOptions) -> Result<Vec<SuiteReport>, CliError> {
    if opts.max_weight == 0 {
        return Err(CliError::Usage("--max-weight must be at least 1".into()));
    }
    if suite == Suite::All {
        return Suite::EACH.iter().map(|&s| run_one(s, opts)).collect();
    }
    Ok(vec![run_one(suite, opts)?])
}

fn run_one(suite: Suite, opts: SuiteOptions) -> Result<SuiteReport, CliError> {
    let w = opts.max_weight;
    match suite {
        Suite::Euler => euler(w),
        Suite::ThetaHom => theta_hom(w),
        Suite::Adams => adams(w),
        Suite::Ranks => ranks(w),
        Suite::Decompose => decompose(w),
        Suite::Oracle => oracle(w, opts.vars),
        Suite::All => unreachable!("expanded by run"),
    }
}

fn index(alpha: &Composition) -> String {
    alpha.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn euler_expression(alpha: &Composition, n: u32) -> String {
    let a = index(alpha);
    let mut out = String::new();
    for i in 0..=n {
        let sign = if i % 2 == 0 { " + " } else { " - " };
        if i > 0 {
            out.push_str(sign);
        }
        out.push_str(&match (i, n - i) {
            (0, j) | (j, 0) => format!("Q[{j}; {a}]"),
            (i, j) => format!("Q[{i}; {a}]*Q[{j}; {a}]"),
        });
    }
    out
}

fn euler(w: u32) -> Result<SuiteReport, CliError> {
    let mut rec = Recorder::new();
    for alpha in generator_indices(w) {
        for n in (1..).take_while(|n| n * alpha.weight() <= w) {
            let ok = verify_euler_relations(&alpha, n)?;
            rec.check(ok, "Euler relation", || euler_expression(&alpha, n), || format!("degree {n}, alpha = {alpha}"));
        }
    }
    Ok(rec.finish(Suite::Euler, w, None))
}

fn theta_m(alpha: &Composition) -> PQSymElement {
    theta_map(&QSymElement::monomial(alpha.clone()))
}

fn sign(k: usize) -> Rational {
    Rational::from_integer(if k.is_multiple_of(2) { 1 } else { -1 }.into())
}

fn theta_hom(w: u32) -> Result<SuiteReport, CliError> {
    let mut rec = Recorder::new();
    let all: Vec<Composition> = (1..w).flat_map(compositions).collect();
    for (i, a) in all.iter().enumerate() {
        for b in &all[i..] {
            if a.weight() + b.weight() > w {
                continue;
            }
            let lhs = theta_map(&QSymElement::monomial(a.clone()).multiply(&QSymElement::monomial(b.clone())));
            let rhs = theta_m(a).multiply(&theta_m(b));
            rec.check(
                lhs == rhs,
                "theta is multiplicative",
                || format!("theta(M{a}*M{b}) - theta(M{a})*theta(M{b})"),
                || format!("{lhs} != {rhs}"),
            );
        }
    }
    for gamma in (1..=w).flat_map(compositions) {
        let got = theta_m(&gamma);
        let (expected, repro) = match gamma.theta_index() {
            None => (PQSymElement::zero(), format!("theta(M{gamma})")),
            Some(t) => {
                let s = sign(gamma.len() + t.len());
                let l = PQSymElement::monomial(t.clone())?.scale(&s);
                let repro = format!("theta(M{gamma}) - ({l})");
                (l, repro)
            }
        };
        rec.check(got == expected, "kernel law", || repro, || format!("theta(M{gamma}) = {got}, expected {expected}"));
    }
    Ok(rec.finish(Suite::ThetaHom, w, None))
}

fn adams(w: u32) -> Result<SuiteReport, CliError> {
    let mut rec = Recorder::new();
    for alpha in (1..=w).flat_map(compositions) {
        for x in [QSymElement::monomial(alpha.clone()), QSymElement::fundamental(alpha.clone())] {
            let name = format!("{}{alpha}", x.basis().symbol());
            for m in 1..=4 {
                for n in 1..=4 {
                    let ok = x.adams_psi(n).adams_psi(m) == x.adams_psi(m * n);
                    rec.check(ok, "Psi^m Psi^n = Psi^mn", || format!("Psi^{m} Psi^{n} {name}"), || format!("m = {m}, n = {n}"));
                }
            }
            let tx = theta_map(&x);
            for n in 1..=4 {
                let ok = theta_map(&x.adams_psi(n)) == tx.adams_phi(n);
                rec.check(ok, "theta Psi^n = Phi^n theta", || format!("theta(Psi^{n} {name})"), || format!("n = {n}"));
            }
        }
    }
    for beta in (1..=w).flat_map(odd_compositions) {
        let l = PQSymElement::monomial(beta.clone())?;
        for n in [2, 4, 6] {
            rec.check(l.adams_phi(n).is_zero(), "even Phi vanish", || format!("Phi^{n} L{beta}"), || format!("n = {n}"));
        }
    }
    Ok(rec.finish(Suite::Adams, w, None))
}

fn ranks(w: u32) -> Result<SuiteReport, CliError> {
    let mut rec = Recorder::new();
    let mut rows = Vec::new();
    for n in 1..=w {
        let count = odd_compositions(n).len() as u64;
        rec.check(
            count == fibonacci(n - 1),
            "odd compositions are counted by Fibonacci numbers",
            || format!("weight {n}"),
            || format!("{count} odd compositions, expected {}", fibonacci(n - 1)),
        );
        let report = verify_completeness(n);
        rec.check(
            report.passed(),
            "zb-monomials form a Z-basis",
            || format!("weight {n}"),
            || format!("{} monomials, rank {}, determinant {}", report.monomials, report.rank, report.determinant),
        );
        rows.push(report);
    }
    Ok(rec.finish(Suite::Ranks, w, Some(rows)))
}

fn decompose(w: u32) -> Result<SuiteReport, CliError> {
    let mut rec = Recorder::new();
    for beta in (1..=w).flat_map(odd_compositions) {
        let l = PQSymElement::monomial(beta.clone())?;
        let inductive = decompose_inductive(&l)?;
        let zb = decompose_zb(&l)?;
        let back = inductive.expand();
        rec.check(back == l, "round trip", || format!("L{beta} - ({inductive})"), || format!("expands to {back}"));
        rec.check(zb == inductive, "zb agrees with inductive", || format!("({zb}) - ({inductive})"), || format!("L{beta}"));
        rec.check(inductive.is_integral(), "integral coefficients", || format!("L{beta}"), || inductive.to_string());
    }
    Ok(rec.finish(Suite::Decompose, w, None))
}

fn variables(vars: Option<usize>, weight: u32) -> usize {
    vars.unwrap_or(weight as usize)
}

fn realize(f: &QSymElement, k: usize, maxdeg: u32) -> Result<TruncatedPolynomial, CliError> {
    Ok(realize_qsym_with(f, k, Some(maxdeg))?)
}

fn oracle(w: u32, vars: Option<usize>) -> Result<SuiteReport, CliError> {
    let mut rec = Recorder::new();
    let all: Vec<Composition> = (1..w).flat_map(compositions).collect();
    for (i, a) in all.iter().enumerate() {
        for b in &all[i..] {
            let d = a.weight() + b.weight();
            if d > w {
                continue;
            }
            let k = variables(vars, d);
            let (fa, fb) = (QSymElement::monomial(a.clone()), QSymElement::monomial(b.clone()));
            let ok = realize(&fa.multiply(&fb), k, d)? == realize(&fa, k, d)?.mul(&realize(&fb, k, d)?);
            rec.check(ok, "realized M product", || format!("M{a}*M{b}"), || format!("{k} variables"));
        }
    }
    let odd: Vec<Composition> = (1..w).flat_map(odd_compositions).collect();
    for (i, a) in odd.iter().enumerate() {
        for b in &odd[i..] {
            let d = a.weight() + b.weight();
            if d > w {
                continue;
            }
            let k = variables(vars, d);
            let (la, lb) = (PQSymElement::monomial(a.clone())?, PQSymElement::monomial(b.clone())?);
            let lhs = realize(&la.multiply(&lb).embed_to_qsym(), k, d)?;
            let ok = lhs == realize(&la.embed_to_qsym(), k, d)?.mul(&realize(&lb.embed_to_qsym(), k, d)?);
            rec.check(ok, "realized L product", || format!("L{a}*L{b}"), || format!("{k} variables"));
        }
    }
    let k = variables(vars, w);
    let series = q_generating_series(k, w);
    for n in 0..=w {
        let q = realize(&symmetric_injection(SymmetricFamily::SchurQ, n), k, w)?;
        rec.check(series[n as usize] == q, "q generating series", || format!("q[{n}]"), || format!("{k} variables"));
    }
    for n in 1..=w {
        for alpha in odd_compositions(n) {
            let p = alpha.odd_to_peak()?;
            let kn = variables(vars, n);
            let ok = realize(&peak_function_fundamental(&p), kn, n)? == realize(&peak_function_monomial(&p), kn, n)?;
            rec.check(ok, "peak function formulas agree", || format!("K{alpha}"), || format!("peak set {p}"));
        }
    }
    let qs: Vec<TruncatedPolynomial> = (0..=w)
        .map(|i| realize(&symmetric_injection(SymmetricFamily::SchurQ, i), k, w))
        .collect::<Result<_, _>>()?;
    for n in 1..=w as usize {
        let mut acc = TruncatedPolynomial::zero(k, w);
        for i in 0..=n {
            let t = qs[i].mul(&qs[n - i]);
            acc = if i % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
        }
        rec.check(acc.is_zero(), "realized Euler relation", || euler_expression(&Composition::ones(1), n as u32), || format!("{k} variables"));
    }
    Ok(rec.finish(Suite::Oracle, w, None))
}
