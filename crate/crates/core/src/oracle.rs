//! Brute-force ground truth: quasisymmetric functions realized as explicit
//! polynomials in `x₁, …, x_k`, truncated at a total degree.

use std::collections::btree_map::{BTreeMap, Entry};
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{rat, LinComb, Rational};
use crate::composition::Composition;
use crate::error::{Error, Result, Violation};
use crate::pqsym::PQSymElement;
use crate::qsym::{QSymBasis, QSymElement};

/// A polynomial in `numvars` variables with every term of total degree at
/// most `maxdeg`. Exponent vectors always have length `numvars`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    numvars: usize,
    maxdeg: u32,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl TruncatedPolynomial {
    pub fn zero(numvars: usize, maxdeg: u32) -> Self {
        TruncatedPolynomial { numvars, maxdeg, terms: BTreeMap::new() }
    }

    pub fn one(numvars: usize, maxdeg: u32) -> Self {
        let mut p = Self::zero(numvars, maxdeg);
        p.add_term(vec![0; numvars], Rational::one());
        p
    }

    /// `x_i` for `0 ≤ i < numvars`, zero-based.
    pub fn variable(numvars: usize, maxdeg: u32, i: usize) -> Self {
        let mut e = vec![0; numvars];
        e[i] = 1;
        Self::from_terms(numvars, maxdeg, [(e, Rational::one())])
    }

    /// Terms above the degree bound are dropped.
    pub fn from_terms(numvars: usize, maxdeg: u32, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(numvars, maxdeg);
        for (e, c) in terms {
            assert_eq!(e.len(), numvars, "exponent vector length must equal the variable count");
            p.add_term(e, c);
        }
        p
    }

    pub fn numvars(&self) -> usize {
        self.numvars
    }

    pub fn maxdeg(&self) -> u32 {
        self.maxdeg
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() || e.iter().sum::<u32>() > self.maxdeg {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_shape(&self, other: &Self) {
        assert_eq!(self.numvars, other.numvars, "variable counts differ");
    }

    /// The result keeps the smaller degree bound.
    pub fn add(&self, other: &Self) -> Self {
        self.check_shape(other);
        let mut out = Self::zero(self.numvars, self.maxdeg.min(other.maxdeg));
        for (e, c) in self.terms.iter().chain(&other.terms) {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.numvars, self.maxdeg);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_shape(other);
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        let maxdeg = self.maxdeg.min(other.maxdeg);
        for (a, x) in &self.terms {
            let da: u32 = a.iter().sum();
            for (b, y) in &other.terms {
                if da + b.iter().sum::<u32>() > maxdeg {
                    continue;
                }
                let e: Vec<u32> = a.iter().zip(b).map(|(i, j)| i + j).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += x * y;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        TruncatedPolynomial { numvars: self.numvars, maxdeg, terms: acc }
    }
}

impl fmt::Display for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |e: &Vec<u32>| {
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                .collect();
            (!factors.is_empty()).then(|| factors.join("*"))
        };
        let terms: LinComb<Vec<u32>> = self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        crate::algebra::write_sum(f, terms.iter().rev(), render)
    }
}

impl fmt::Debug for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Visit every strictly increasing `r`-tuple of `0..k`.
fn increasing_tuples(k: usize, r: usize, mut visit: impl FnMut(&[usize])) {
    if r > k {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        visit(&idx);
        let Some(pos) = (0..r).rev().find(|&i| idx[i] < k - r + i) else {
            return;
        };
        idx[pos] += 1;
        for j in pos + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `M_α = Σ_{i₁<⋯<i_r} x_{i₁}^{α₁}⋯x_{i_r}^{α_r}` over `k` variables.
pub fn realize_monomial(alpha: &Composition, k: usize, maxdeg: u32) -> TruncatedPolynomial {
    let mut p = TruncatedPolynomial::zero(k, maxdeg);
    increasing_tuples(k, alpha.len(), |idx| {
        let mut e = vec![0; k];
        for (&i, &a) in idx.iter().zip(alpha.parts()) {
            e[i] = a;
        }
        p.add_term(e, Rational::one());
    });
    p
}

/// Realize `f` in `k ≥ weight(f)` variables, truncated at degree `maxdeg`
/// (which defaults to the weight of `f`).
pub fn realize_qsym_with(f: &QSymElement, k: usize, maxdeg: Option<u32>) -> Result<TruncatedPolynomial> {
    let weight = f.max_weight();
    if k < weight as usize {
        return Err(Error::TooFewVariables { vars: k, weight });
    }
    let maxdeg = maxdeg.unwrap_or(weight);
    let mut p = TruncatedPolynomial::zero(k, maxdeg);
    for (alpha, c) in f.to_monomial().terms() {
        if alpha.weight() > maxdeg {
            continue;
        }
        for (e, x) in realize_monomial(alpha, k, maxdeg).terms {
            p.add_term(e, x * c);
        }
    }
    Ok(p)
}

pub fn realize_qsym(f: &QSymElement, k: usize) -> Result<TruncatedPolynomial> {
    realize_qsym_with(f, k, None)
}

/// Realize a PQSym element through the inclusion into QSym.
pub fn realize_pqsym(f: &PQSymElement, k: usize) -> Result<TruncatedPolynomial> {
    realize_qsym(&f.embed_to_qsym(), k)
}

/// The M-expansion of a quasisymmetric polynomial, read off at the supports
/// `x₁^{α₁}⋯x_r^{α_r}` and verified by realizing it again.
pub fn extract_qsym(p: &TruncatedPolynomial) -> Result<QSymElement> {
    let k = p.numvars();
    let degree = p.degree();
    if (degree as usize) > k {
        return Err(Error::TooFewVariables { vars: k, weight: degree });
    }
    let mut terms = LinComb::new();
    for e in p.terms().keys() {
        let parts: Vec<u32> = e.iter().copied().filter(|&x| x > 0).collect();
        let alpha = Composition::new(parts.clone())?;
        if terms.coefficient(&alpha).is_zero() {
            let mut canonical = parts;
            canonical.resize(k, 0);
            terms.add_term(alpha, p.coefficient(&canonical));
        }
    }
    let f = QSymElement::new(QSymBasis::Monomial, terms);
    let back = realize_qsym_with(&f, k, Some(p.maxdeg()))?;
    for e in p.terms().keys().chain(back.terms().keys()) {
        let here = p.coefficient(e);
        let expected = back.coefficient(e);
        if here != expected {
            let mut canonical: Vec<u32> = e.iter().copied().filter(|&x| x > 0).collect();
            canonical.resize(k, 0);
            return Err(Error::NotQuasisymmetric(Box::new(Violation {
                support: e.clone(),
                expected: p.coefficient(&canonical),
                canonical,
                found: here,
            })));
        }
    }
    Ok(f)
}

/// `x_j ↦ x_jⁿ`; the degree bound scales by `n`.
pub fn adams_substitute(p: &TruncatedPolynomial, n: u32) -> TruncatedPolynomial {
    TruncatedPolynomial::from_terms(
        p.numvars(),
        p.maxdeg() * n,
        p.terms().iter().map(|(e, c)| (e.iter().map(|x| x * n).collect(), c.clone())),
    )
}

/// An element of either ring, for identity checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    QSym(QSymElement),
    PQSym(PQSymElement),
}

impl Element {
    pub fn weight(&self) -> u32 {
        match self {
            Element::QSym(f) => f.max_weight(),
            Element::PQSym(f) => f.max_weight(),
        }
    }

    pub fn realize(&self, k: usize) -> Result<TruncatedPolynomial> {
        match self {
            Element::QSym(f) => realize_qsym(f, k),
            Element::PQSym(f) => realize_pqsym(f, k),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::QSym(x) => x.fmt(f),
            Element::PQSym(x) => x.fmt(f),
        }
    }
}

/// Compare two elements by realizing both in `k` variables (default: the
/// largest weight involved).
pub fn check_identity(lhs: &Element, rhs: &Element, k: Option<usize>) -> Result<bool> {
    let w = lhs.weight().max(rhs.weight());
    let k = k.unwrap_or(w as usize);
    let a = realize_qsym_with(&as_qsym(lhs), k, Some(w))?;
    let b = realize_qsym_with(&as_qsym(rhs), k, Some(w))?;
    Ok(a == b)
}

fn as_qsym(e: &Element) -> QSymElement {
    match e {
        Element::QSym(f) => f.clone(),
        Element::PQSym(f) => f.embed_to_qsym(),
    }
}

/// Coefficients of `zⁿ`, `n = 0..=maxdeg`, in `Π_{i≤k} (1 + x_i z)/(1 - x_i z)`.
pub fn q_generating_series(k: usize, maxdeg: u32) -> Vec<TruncatedPolynomial> {
    let mut series: Vec<TruncatedPolynomial> = (0..=maxdeg)
        .map(|n| if n == 0 { TruncatedPolynomial::one(k, maxdeg) } else { TruncatedPolynomial::zero(k, maxdeg) })
        .collect();
    for i in 0..k {
        let factor: Vec<TruncatedPolynomial> = (0..=maxdeg)
            .map(|m| {
                let mut e = vec![0; k];
                e[i] = m;
                let c = if m == 0 { rat(1) } else { rat(2) };
                TruncatedPolynomial::from_terms(k, maxdeg, [(e, c)])
            })
            .collect();
        let mut next = vec![TruncatedPolynomial::zero(k, maxdeg); maxdeg as usize + 1];
        for (a, sa) in series.iter().enumerate() {
            for (b, fb) in factor.iter().enumerate().take(maxdeg as usize + 1 - a) {
                next[a + b] = next[a + b].add(&sa.mul(fb));
            }
        }
        series = next;
    }
    series
}
