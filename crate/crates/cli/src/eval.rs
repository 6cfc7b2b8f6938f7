//! Evaluation of parsed expressions with explicit-only ϑ coercion.
//!
//! PQSym values are embedded into QSym as soon as they meet a QSym value.
//! The reverse direction exists only through `theta(...)`.

use std::fmt;

use pqsym::oracle::Element;
use pqsym::pqsym::{generator, theta_map};
use pqsym::qsym::symmetric_injection;
use pqsym::qsym::SymmetricFamily;
use pqsym::{Algebra, PQSymBasis, PQSymElement, QSymBasis, QSymElement, Rational};

use crate::parse::{Atom, Expr};
use crate::CliError;

/// Output basis selector shared by all subcommands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Basis {
    #[value(name = "M")]
    M,
    #[value(name = "F")]
    F,
    #[value(name = "K")]
    K,
    #[value(name = "L")]
    L,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::M => "M",
            Basis::F => "F",
            Basis::K => "K",
            Basis::L => "L",
        })
    }
}

/// Intermediate value: scalars stay untyped until they meet a ring element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(Rational),
    QSym(QSymElement),
    PQSym(PQSymElement),
}

impl Value {
    fn into_qsym(self) -> QSymElement {
        match self {
            Value::Scalar(c) => QSymElement::scalar(c),
            Value::QSym(f) => f,
            Value::PQSym(f) => f.embed_to_qsym(),
        }
    }

    fn combine(
        self,
        other: Value,
        scalar: impl Fn(Rational, Rational) -> Rational,
        q: impl Fn(&QSymElement, &QSymElement) -> QSymElement,
        pq: impl Fn(&PQSymElement, &PQSymElement) -> PQSymElement,
    ) -> Value {
        match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(scalar(a, b)),
            (Value::PQSym(a), Value::PQSym(b)) => Value::PQSym(pq(&a, &b)),
            (Value::PQSym(a), Value::Scalar(b)) => Value::PQSym(pq(&a, &PQSymElement::scalar(b))),
            (Value::Scalar(a), Value::PQSym(b)) => Value::PQSym(pq(&PQSymElement::scalar(a), &b)),
            (a, b) => Value::QSym(q(&a.into_qsym(), &b.into_qsym())),
        }
    }

    /// Express the value in `basis`. QSym values cannot reach K or L
    /// without an explicit `theta(...)`.
    pub fn in_basis(self, basis: Basis) -> Result<Element, CliError> {
        match basis {
            Basis::M | Basis::F => {
                let target = if basis == Basis::M { QSymBasis::Monomial } else { QSymBasis::Fundamental };
                Ok(Element::QSym(self.into_qsym().in_basis(target)))
            }
            Basis::K | Basis::L => {
                let target = if basis == Basis::L { PQSymBasis::Monomial } else { PQSymBasis::Peak };
                match self {
                    Value::Scalar(c) => Ok(Element::PQSym(PQSymElement::scalar(c).in_basis(target))),
                    Value::PQSym(f) => Ok(Element::PQSym(f.in_basis(target))),
                    Value::QSym(f) => Err(CliError::Coercion(format!(
                        "the expression evaluates to the quasisymmetric function {f}, which is not in the peak \
                         algebra; wrap it in theta(...) to apply the descent-to-peak map explicitly"
                    ))),
                }
            }
        }
    }

    /// The basis a value prints in when none is requested: M for QSym,
    /// L for PQSym and scalars.
    pub fn natural_basis(&self) -> Basis {
        match self {
            Value::QSym(_) => Basis::M,
            Value::Scalar(_) | Value::PQSym(_) => Basis::L,
        }
    }
}

fn atom(a: &Atom) -> Result<Value, CliError> {
    Ok(match a {
        Atom::M(alpha) => Value::QSym(QSymElement::monomial(alpha.clone())),
        Atom::F(alpha) => Value::QSym(QSymElement::fundamental(alpha.clone())),
        Atom::K(alpha) => Value::PQSym(PQSymElement::peak(alpha.clone())?),
        Atom::L(alpha) => Value::PQSym(PQSymElement::monomial(alpha.clone())?),
        Atom::Symmetric(SymmetricFamily::SchurQ, n) => Value::PQSym(PQSymElement::schur_q(*n)),
        Atom::Symmetric(family, n) => Value::QSym(symmetric_injection(*family, *n)),
        Atom::Generator(g) => Value::PQSym((*generator(g.degree, &g.alpha)?).clone()),
    })
}

fn negate(v: Value) -> Value {
    let minus_one = Rational::from_integer((-1).into());
    match v {
        Value::Scalar(c) => Value::Scalar(-c),
        Value::QSym(f) => Value::QSym(f.scale(&minus_one)),
        Value::PQSym(f) => Value::PQSym(f.scale(&minus_one)),
    }
}

/// Pairwise reduction, so a sum of `n` terms costs `O(n log n)` term
/// insertions instead of `O(n²)`.
fn fold_balanced(mut values: Vec<Value>, op: impl Fn(Value, Value) -> Value) -> Value {
    while values.len() > 1 {
        let mut next = Vec::with_capacity(values.len().div_ceil(2));
        let mut it = values.into_iter();
        while let Some(a) = it.next() {
            next.push(match it.next() {
                Some(b) => op(a, b),
                None => a,
            });
        }
        values = next;
    }
    values.pop().expect("nonempty sum or product")
}

/// Evaluate an expression to a value in its natural ring.
pub fn evaluate(e: &Expr) -> Result<Value, CliError> {
    Ok(match e {
        Expr::Number(c) => Value::Scalar(c.clone()),
        Expr::Atom(a) => atom(a)?,
        Expr::Theta(inner) => match evaluate(inner)? {
            Value::Scalar(c) => Value::Scalar(c),
            v => Value::PQSym(theta_map(&v.into_qsym())),
        },
        Expr::Sum(terms) => {
            let values = terms
                .iter()
                .map(|(negative, t)| Ok(if *negative { negate(evaluate(t)?) } else { evaluate(t)? }))
                .collect::<Result<Vec<_>, CliError>>()?;
            fold_balanced(values, |a, b| a.combine(b, |x, y| x + y, QSymElement::add, PQSymElement::add))
        }
        Expr::Product(factors) => {
            let values = factors.iter().map(evaluate).collect::<Result<Vec<_>, CliError>>()?;
            fold_balanced(values, |a, b| a.combine(b, |x, y| x * y, QSymElement::mul, PQSymElement::mul))
        }
        Expr::Pow(base, n) => match evaluate(base)? {
            Value::Scalar(c) => Value::Scalar(num_traits::pow(c, *n as usize)),
            Value::QSym(f) => Value::QSym(f.pow(*n)),
            Value::PQSym(f) => Value::PQSym(f.pow(*n)),
        },
    })
}

/// Parse, evaluate and express in `basis` (or the natural basis).
pub fn eval_str(src: &str, basis: Option<Basis>) -> Result<Element, CliError> {
    let value = evaluate(&crate::parse::parse(src)?)?;
    let basis = basis.unwrap_or_else(|| value.natural_basis());
    value.in_basis(basis)
}
