//! Serializable mirrors of ring elements and generator polynomials.
//! Coefficients travel as exact strings such as `"3/2"`.

use serde::{Deserialize, Serialize};

use crate::algebra::{LinComb, Rational};
use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::oracle::Element;
use crate::pqsym::{PQSymBasis, PQSymElement};
use crate::qsym::{QSymBasis, QSymElement};
use crate::structure::{GeneratorMonomial, GeneratorPolynomial};
use crate::symfun::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub index: Vec<u32>,
    pub coef: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub ring: String,
    pub basis: String,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub alpha: Vec<u32>,
    pub lambda: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorTermJson {
    pub monomial: Vec<FactorJson>,
    pub coef: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorPolynomialJson {
    pub terms: Vec<GeneratorTermJson>,
}

pub fn parse_coefficient(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Error::InvalidInput(format!("{s:?} is not a rational number")))
}

fn terms_json(terms: &LinComb<Composition>) -> Vec<TermJson> {
    terms
        .iter()
        .rev()
        .map(|(a, c)| TermJson { index: a.parts().to_vec(), coef: c.to_string() })
        .collect()
}

fn terms_from_json(terms: &[TermJson]) -> Result<LinComb<Composition>> {
    let mut out = LinComb::new();
    for t in terms {
        out.add_term(Composition::new(t.index.clone())?, parse_coefficient(&t.coef)?);
    }
    Ok(out)
}

impl From<&QSymElement> for ElementJson {
    fn from(f: &QSymElement) -> Self {
        ElementJson { ring: "qsym".into(), basis: f.basis().symbol().into(), terms: terms_json(f.terms()) }
    }
}

impl From<&PQSymElement> for ElementJson {
    fn from(f: &PQSymElement) -> Self {
        ElementJson { ring: "pqsym".into(), basis: f.basis().symbol().into(), terms: terms_json(f.terms()) }
    }
}

impl From<&Element> for ElementJson {
    fn from(e: &Element) -> Self {
        match e {
            Element::QSym(f) => f.into(),
            Element::PQSym(f) => f.into(),
        }
    }
}

impl ElementJson {
    pub fn to_element(&self) -> Result<Element> {
        let terms = terms_from_json(&self.terms)?;
        match (self.ring.as_str(), self.basis.as_str()) {
            ("qsym", "M") => Ok(Element::QSym(QSymElement::new(QSymBasis::Monomial, terms))),
            ("qsym", "F") => Ok(Element::QSym(QSymElement::new(QSymBasis::Fundamental, terms))),
            ("pqsym", "L") => Ok(Element::PQSym(PQSymElement::new(PQSymBasis::Monomial, terms)?)),
            ("pqsym", "K") => Ok(Element::PQSym(PQSymElement::new(PQSymBasis::Peak, terms)?)),
            (ring, basis) => Err(Error::InvalidInput(format!("unknown ring/basis pair {ring}/{basis}"))),
        }
    }
}

impl From<&GeneratorPolynomial> for GeneratorPolynomialJson {
    fn from(p: &GeneratorPolynomial) -> Self {
        GeneratorPolynomialJson {
            terms: p
                .terms()
                .iter()
                .rev()
                .map(|(m, c)| GeneratorTermJson {
                    monomial: m
                        .factors()
                        .iter()
                        .rev()
                        .map(|(a, l)| FactorJson { alpha: a.parts().to_vec(), lambda: l.parts().to_vec() })
                        .collect(),
                    coef: c.to_string(),
                })
                .collect(),
        }
    }
}

impl GeneratorPolynomialJson {
    pub fn to_polynomial(&self) -> Result<GeneratorPolynomial> {
        let mut out = LinComb::new();
        for t in &self.terms {
            let mut factors = Vec::new();
            for f in &t.monomial {
                factors.push((Composition::new(f.alpha.clone())?, Partition::new(f.lambda.clone())?));
            }
            out.add_term(GeneratorMonomial::new(factors)?, parse_coefficient(&t.coef)?);
        }
        Ok(GeneratorPolynomial::from_terms(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, Algebra};

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn element_round_trip() {
        let f = PQSymElement::new(
            PQSymBasis::Monomial,
            [(c(&[1, 3]), ratio(3, 2)), (c(&[5]), ratio(-1, 1))].into_iter().collect(),
        )
        .unwrap();
        let j = ElementJson::from(&f);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(
            text,
            r#"{"ring":"pqsym","basis":"L","terms":[{"index":[5],"coef":"-1"},{"index":[1,3],"coef":"3/2"}]}"#
        );
        let back: ElementJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_element().unwrap(), Element::PQSym(f));
    }

    #[test]
    fn rejects_bad_payloads() {
        let bad = ElementJson { ring: "pqsym".into(), basis: "L".into(), terms: vec![TermJson { index: vec![2], coef: "1".into() }] };
        assert!(matches!(bad.to_element(), Err(Error::NotOdd(_))));
        let bad = ElementJson { ring: "qsym".into(), basis: "M".into(), terms: vec![TermJson { index: vec![1], coef: "x".into() }] };
        assert!(matches!(bad.to_element(), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn generator_round_trip() {
        let p = GeneratorPolynomial::symbol(3, &c(&[1]))
            .unwrap()
            .scale(&ratio(3, 1))
            .sub(&GeneratorPolynomial::symbol(2, &c(&[1])).unwrap().mul(&GeneratorPolynomial::symbol(1, &c(&[1, 3])).unwrap()));
        let j = GeneratorPolynomialJson::from(&p);
        let text = serde_json::to_string(&j).unwrap();
        let back: GeneratorPolynomialJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_polynomial().unwrap(), p);
    }
}
