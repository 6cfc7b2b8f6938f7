//! Polynomial generators `qₙ(α)` of PQSym, indexed by elementary Lyndon odd
//! compositions `α`, and the machinery around the structure theorem:
//! expansion of generator polynomials into the L basis, the inductive and
//! linear-solve decompositions, Euler relations and rank checks.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Signed};
use serde::Serialize;

use crate::algebra::{write_sum, Algebra, LinComb, Rational};
use crate::composition::{fibonacci, odd_compositions, Composition};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pqsym::{generator, PQSymBasis, PQSymElement};
use crate::symfun::{
    adams_from_lambda, odd_partitions, plethysm_pg, q_in_odd_q, q_in_p, straighten_strict, strict_partitions,
    Partition, QPoly,
};

/// `qₙ(α)` with `α` an elementary Lyndon odd composition and `n ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSymbol {
    pub alpha: Composition,
    pub degree: u32,
}

impl GeneratorSymbol {
    pub fn new(degree: u32, alpha: Composition) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        require_generator_index(&alpha)?;
        Ok(GeneratorSymbol { alpha, degree })
    }

    pub fn weight(&self) -> u32 {
        self.degree * self.alpha.weight()
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_symbol(f, self.degree, &self.alpha)
    }
}

fn write_symbol(f: &mut fmt::Formatter<'_>, degree: u32, alpha: &Composition) -> fmt::Result {
    let parts: Vec<String> = alpha.parts().iter().map(u32::to_string).collect();
    write!(f, "Q[{degree}; {}]", parts.join(","))
}

pub fn is_generator_index(alpha: &Composition) -> bool {
    !alpha.is_empty() && alpha.is_odd() && alpha.is_elementary() && alpha.is_lyndon()
}

pub fn require_generator_index(alpha: &Composition) -> Result<()> {
    if is_generator_index(alpha) {
        Ok(())
    } else {
        Err(Error::NotGeneratorIndex(alpha.to_string()))
    }
}

/// Elementary Lyndon odd compositions of weight at most `max_weight`, in
/// increasing wll order.
pub fn generator_indices(max_weight: u32) -> Vec<Composition> {
    let mut out: Vec<Composition> = (1..=max_weight)
        .flat_map(odd_compositions)
        .filter(is_generator_index)
        .collect();
    out.sort();
    out
}

/// `Π_α q_{λ_α}(α)`. Ordered by weight first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GeneratorMonomial(BTreeMap<Composition, Partition>);

impl GeneratorMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// Empty partitions are dropped; indices are validated.
    pub fn new(factors: impl IntoIterator<Item = (Composition, Partition)>) -> Result<Self> {
        let mut map: BTreeMap<Composition, Partition> = BTreeMap::new();
        for (alpha, lambda) in factors {
            require_generator_index(&alpha)?;
            if lambda.is_empty() {
                continue;
            }
            let merged = match map.remove(&alpha) {
                Some(prev) => prev.merge(&lambda),
                None => lambda,
            };
            map.insert(alpha, merged);
        }
        Ok(GeneratorMonomial(map))
    }

    pub(crate) fn from_map(map: BTreeMap<Composition, Partition>) -> Self {
        GeneratorMonomial(map.into_iter().filter(|(_, l)| !l.is_empty()).collect())
    }

    pub fn symbol(s: &GeneratorSymbol) -> Self {
        Self::from_map(BTreeMap::from([(s.alpha.clone(), Partition::single(s.degree))]))
    }

    fn single_factor(alpha: &Composition, lambda: Partition) -> Self {
        Self::from_map(BTreeMap::from([(alpha.clone(), lambda)]))
    }

    pub fn factors(&self) -> &BTreeMap<Composition, Partition> {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|(a, l)| a.weight() * l.weight()).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Every `λ_α` strict: a member of the ℤ-basis.
    pub fn is_strict(&self) -> bool {
        self.0.values().all(Partition::is_strict)
    }

    /// Every part of every `λ_α` odd: a member of the ℚ-basis.
    pub fn is_odd(&self) -> bool {
        self.0.values().all(Partition::all_odd)
    }

    pub fn multiply(&self, other: &GeneratorMonomial) -> GeneratorMonomial {
        let mut map = self.0.clone();
        for (alpha, lambda) in &other.0 {
            let merged = match map.remove(alpha) {
                Some(prev) => prev.merge(lambda),
                None => lambda.clone(),
            };
            map.insert(alpha.clone(), merged);
        }
        GeneratorMonomial(map)
    }
}

impl Ord for GeneratorMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.weight().cmp(&other.weight()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for GeneratorMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GeneratorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (alpha, lambda) in self.0.iter().rev() {
            for (part, mult) in lambda.multiplicities() {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write_symbol(f, part, alpha)?;
                if mult > 1 {
                    write!(f, "^{mult}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GeneratorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A rational polynomial in the generators `qₙ(α)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GeneratorPolynomial {
    terms: LinComb<GeneratorMonomial>,
}

impl GeneratorPolynomial {
    pub fn from_terms(terms: LinComb<GeneratorMonomial>) -> Self {
        GeneratorPolynomial { terms }
    }

    pub fn monomial(m: GeneratorMonomial, c: Rational) -> Self {
        Self::from_terms(LinComb::term(m, c))
    }

    pub fn symbol(degree: u32, alpha: &Composition) -> Result<Self> {
        let s = GeneratorSymbol::new(degree, alpha.clone())?;
        Ok(Self::monomial(GeneratorMonomial::symbol(&s), Rational::one()))
    }

    pub fn terms(&self) -> &LinComb<GeneratorMonomial> {
        &self.terms
    }

    pub fn coefficient(&self, m: &GeneratorMonomial) -> Rational {
        self.terms.coefficient(m)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.is_integral()
    }

    pub fn is_strict(&self) -> bool {
        self.terms.keys().all(GeneratorMonomial::is_strict)
    }

    pub fn homogeneous_component(&self, weight: u32) -> Self {
        Self::from_terms(self.terms.filter(|m| m.weight() == weight))
    }

    /// Substitute `qⱼ ↦ qⱼ(α)` in a polynomial over the single family `qⱼ`.
    pub fn from_q_poly(f: &QPoly, alpha: &Composition) -> Result<Self> {
        require_generator_index(alpha)?;
        Ok(Self::from_terms(
            f.terms()
                .iter()
                .map(|(lambda, c)| (GeneratorMonomial::single_factor(alpha, lambda.clone()), c.clone()))
                .collect(),
        ))
    }

    /// The L-expansion, substituting `qₙ(α) = λ̃ⁿ(L_α)`.
    pub fn expand(&self) -> PQSymElement {
        let mut out = LinComb::new();
        for (m, c) in &self.terms {
            out.add_scaled(expand_monomial(m).terms(), c);
        }
        PQSymElement::new_unchecked(PQSymBasis::Monomial, out)
    }

    /// Rewrite into the ℤ-basis form, every `λ_α` strict, by the Euler
    /// relations.
    pub fn straighten(&self) -> Result<Self> {
        self.rewrite_factors(straighten_partition)
    }

    /// Rewrite into the ℚ-basis form, every generator of odd degree.
    pub fn to_odd_generators(&self) -> Result<Self> {
        self.rewrite_factors(|l| Ok(odd_form_partition(l)))
    }

    fn rewrite_factors(&self, mut rewrite: impl FnMut(&Partition) -> Result<Arc<QPoly>>) -> Result<Self> {
        let mut out = LinComb::new();
        for (m, c) in &self.terms {
            let mut acc: LinComb<GeneratorMonomial> = LinComb::term(GeneratorMonomial::one(), c.clone());
            for (alpha, lambda) in m.factors() {
                let poly = rewrite(lambda)?;
                let mut next = LinComb::new();
                for (base, x) in &acc {
                    for (mu, y) in poly.terms() {
                        next.add_term(base.multiply(&GeneratorMonomial::single_factor(alpha, mu.clone())), x * y);
                    }
                }
                acc = next;
            }
            out.add_assign(&acc);
        }
        Ok(Self::from_terms(out))
    }
}

type Memo<K, V> = OnceLock<RwLock<HashMap<K, Arc<V>>>>;

fn cached<K, V>(memo: &'static Memo<K, V>, key: &K) -> Option<Arc<V>>
where
    K: std::hash::Hash + Eq,
{
    memo.get_or_init(Default::default).read().unwrap().get(key).cloned()
}

fn store<K, V>(memo: &'static Memo<K, V>, key: K, value: V) -> Arc<V>
where
    K: std::hash::Hash + Eq,
{
    memo.get_or_init(Default::default)
        .write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| Arc::new(value))
        .clone()
}

fn straighten_partition(lambda: &Partition) -> Result<Arc<QPoly>> {
    static MEMO: Memo<Partition, QPoly> = OnceLock::new();
    if let Some(hit) = cached(&MEMO, lambda) {
        return Ok(hit);
    }
    let value = straighten_strict(&QPoly::monomial(lambda.clone(), Rational::one()))?;
    Ok(store(&MEMO, lambda.clone(), value))
}

fn odd_form_partition(lambda: &Partition) -> Arc<QPoly> {
    static MEMO: Memo<Partition, QPoly> = OnceLock::new();
    if let Some(hit) = cached(&MEMO, lambda) {
        return hit;
    }
    let value = lambda
        .parts()
        .iter()
        .fold(QPoly::one(), |acc, &m| acc.mul(&q_in_odd_q(m)));
    store(&MEMO, lambda.clone(), value)
}

fn expand_monomial(m: &GeneratorMonomial) -> Arc<PQSymElement> {
    static MEMO: Memo<GeneratorMonomial, PQSymElement> = OnceLock::new();
    if let Some(hit) = cached(&MEMO, m) {
        return hit;
    }
    let mut acc = PQSymElement::one();
    for (alpha, lambda) in m.factors() {
        for &part in lambda.parts() {
            let g = generator(part, alpha).expect("generator indices are validated");
            acc = acc.multiply(&g);
        }
    }
    store(&MEMO, m.clone(), acc)
}

/// The polynomial used to eliminate the leading index `β`. Its L-expansion
/// is `L_β` plus wll-smaller terms of the same weight.
///
/// * `β` Lyndon, `β = gα` with `α` elementary: the Newton polynomial for
///   `Φ^g` in `q₁(α), …, q_g(α)`, which expands to exactly `L_β`.
/// * `β = β₁^{*r}` with `β₁ = gα` Lyndon and `r > 1`: `(q_r ∘ p_g)(α)`,
///   which expands to `λ̃^r(L_{β₁})`.
/// * otherwise `β = β′ * β″` with `β′` the first power block of the
///   factorization: the product of the decompositions of `L_{β′}` and `L_{β″}`.
pub fn reducer(beta: &Composition) -> Result<Arc<GeneratorPolynomial>> {
    static MEMO: Memo<Composition, GeneratorPolynomial> = OnceLock::new();
    beta.require_odd()?;
    if let Some(hit) = cached(&MEMO, beta) {
        return Ok(hit);
    }
    let value = if beta.is_empty() {
        GeneratorPolynomial::one()
    } else {
        let cfl = beta.cfl_factorize();
        let (first, r) = cfl.factors[0].clone();
        if cfl.factors.len() == 1 {
            let (g, alpha) = first.reduce_elementary();
            let poly = if r == 1 {
                newton_polynomial(g)
            } else {
                let in_p = plethysm_pg(&q_in_p(r as u32), g)?;
                straighten_strict(&in_p.to_q_generators()?)?
            };
            GeneratorPolynomial::from_q_poly(&poly, &alpha)?
        } else {
            let head = first.concat_power(r);
            let tail = Composition::new(beta.parts()[head.len()..].to_vec())?;
            decompose_basis(&head)?.mul(&*decompose_basis(&tail)?)
        }
    };
    Ok(store(&MEMO, beta.clone(), value))
}

/// `Ψ^g` written in `λ¹ = q₁, …, λ^g = q_g`.
fn newton_polynomial(g: u32) -> QPoly {
    let lambdas: Vec<QPoly> = (1..=g).map(QPoly::var).collect();
    adams_from_lambda(&lambdas).pop().expect("g ≥ 1")
}

/// Decomposition of a single `L_β`, straightened.
fn decompose_basis(beta: &Composition) -> Result<Arc<GeneratorPolynomial>> {
    static MEMO: Memo<Composition, GeneratorPolynomial> = OnceLock::new();
    if let Some(hit) = cached(&MEMO, beta) {
        return Ok(hit);
    }
    let value = reduce(LinComb::basis(beta.clone()))?.straighten()?;
    Ok(store(&MEMO, beta.clone(), value))
}

/// Repeatedly cancel the wll-largest surviving index with its reducer.
fn reduce(mut remainder: LinComb<Composition>) -> Result<GeneratorPolynomial> {
    let mut out = GeneratorPolynomial::default();
    while let Some((beta, c)) = remainder.leading().map(|(b, c)| (b.clone(), c.clone())) {
        let red = reducer(&beta)?;
        let expanded = red.expand();
        match expanded.leading() {
            Some((lead, one)) if *lead == beta && one.is_one() => {}
            other => {
                return Err(Error::Internal(format!(
                    "reducer for {beta} has leading term {other:?} instead of coefficient 1 at {beta}"
                )))
            }
        }
        remainder.add_scaled(expanded.terms(), &-c.clone());
        if remainder.leading().is_some_and(|(b, _)| *b >= beta) {
            return Err(Error::Internal(format!("elimination of {beta} did not lower the leading index")));
        }
        out.terms.add_scaled(&red.terms, &c);
    }
    Ok(out)
}

/// Express `f` as a polynomial in the generators by induction on the
/// wll-largest index, returned in ℤ-basis form.
pub fn decompose_inductive(f: &PQSymElement) -> Result<GeneratorPolynomial> {
    let mut out = GeneratorPolynomial::default();
    for (beta, c) in f.to_monomial().terms() {
        out.terms.add_scaled(&decompose_basis(beta)?.terms, c);
    }
    Ok(out)
}

/// Every monomial `Π q_{λ_α}(α)` of weight `n` with each `λ_α` strict.
pub fn enumerate_zb_basis(n: u32) -> Vec<GeneratorMonomial> {
    enumerate_monomials(n, strict_partitions)
}

/// Every monomial of weight `n` in odd-degree generators.
pub fn enumerate_odd_basis(n: u32) -> Vec<GeneratorMonomial> {
    enumerate_monomials(n, odd_partitions)
}

fn enumerate_monomials(n: u32, parts: fn(u32) -> Vec<Partition>) -> Vec<GeneratorMonomial> {
    fn go(
        indices: &[Composition],
        rest: u32,
        current: &mut BTreeMap<Composition, Partition>,
        parts: fn(u32) -> Vec<Partition>,
        out: &mut Vec<GeneratorMonomial>,
    ) {
        if rest == 0 {
            out.push(GeneratorMonomial::from_map(current.clone()));
            return;
        }
        let Some((alpha, tail)) = indices.split_first() else {
            return;
        };
        let w = alpha.weight();
        go(tail, rest, current, parts, out);
        for k in 1..=rest / w {
            for lambda in parts(k) {
                current.insert(alpha.clone(), lambda);
                go(tail, rest - k * w, current, parts, out);
            }
        }
        current.remove(alpha);
    }
    let mut out = Vec::new();
    go(&generator_indices(n), n, &mut BTreeMap::new(), parts, &mut out);
    out.sort();
    out
}

/// Rows are the L-expansions of `monomials`, columns the odd compositions
/// of weight `n` in descending wll order.
pub fn expansion_matrix(n: u32, monomials: &[GeneratorMonomial]) -> Matrix {
    let columns = odd_compositions(n);
    Matrix::from_rows(
        monomials
            .iter()
            .map(|m| {
                let e = expand_monomial(m);
                columns.iter().map(|a| e.coefficient(a)).collect()
            })
            .collect(),
    )
}

fn zb_inverse(n: u32) -> Result<Arc<(Vec<GeneratorMonomial>, Matrix)>> {
    static MEMO: Memo<u32, (Vec<GeneratorMonomial>, Matrix)> = OnceLock::new();
    if let Some(hit) = cached(&MEMO, &n) {
        return Ok(hit);
    }
    let basis = enumerate_zb_basis(n);
    let a = expansion_matrix(n, &basis);
    if a.rows() != a.cols() {
        return Err(Error::Singular(n));
    }
    let inv = a.inverse().ok_or(Error::Singular(n))?;
    Ok(store(&MEMO, n, (basis, inv)))
}

/// Coordinates of `f` in the ℤ-basis by an exact linear solve per weight.
/// Integral input must give integral output.
pub fn decompose_zb(f: &PQSymElement) -> Result<GeneratorPolynomial> {
    let l = f.to_monomial();
    let mut out = LinComb::new();
    let mut weights: Vec<u32> = l.terms().keys().map(Composition::weight).collect();
    weights.dedup();
    for n in weights {
        if n == 0 {
            out.add_term(GeneratorMonomial::one(), l.coefficient(&Composition::empty()));
            continue;
        }
        let solve = zb_inverse(n)?;
        let (basis, inv) = (&solve.0, &solve.1);
        let columns = odd_compositions(n);
        let y: Vec<Rational> = columns.iter().map(|a| l.coefficient(a)).collect();
        for (j, m) in basis.iter().enumerate() {
            let x: Rational = y.iter().enumerate().map(|(i, yi)| yi * &inv[(i, j)]).sum();
            out.add_term(m.clone(), x);
        }
    }
    if l.is_integral() {
        if let Some((m, c)) = out.iter().find(|(_, c)| !c.is_integer()) {
            return Err(Error::NonIntegral(c.clone(), m.to_string()));
        }
    }
    Ok(GeneratorPolynomial::from_terms(out))
}

/// Whether `Σ_{i=0}^n (-1)^i qᵢ(α) q_{n-i}(α)` expands to zero.
pub fn verify_euler_relations(alpha: &Composition, n: u32) -> Result<bool> {
    let mut acc = PQSymElement::zero();
    for i in 0..=n {
        let term = generator(i, alpha)?.multiply(&*generator(n - i, alpha)?);
        acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    Ok(acc.is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletenessReport {
    pub weight: u32,
    pub expected: u64,
    pub monomials: usize,
    pub rank: usize,
    pub determinant: String,
    pub unimodular: bool,
}

impl CompletenessReport {
    pub fn passed(&self) -> bool {
        self.monomials as u64 == self.expected && self.rank as u64 == self.expected && self.unimodular
    }
}

/// Rank and lattice index of the weight-`n` ℤ-basis candidates.
pub fn verify_completeness(n: u32) -> CompletenessReport {
    let basis = enumerate_zb_basis(n);
    let a = expansion_matrix(n, &basis);
    let rank = a.rank();
    let det = if a.rows() == a.cols() { a.determinant() } else { Rational::from_integer(0.into()) };
    CompletenessReport {
        weight: n,
        expected: fibonacci(n - 1),
        monomials: basis.len(),
        rank,
        unimodular: a.rows() == a.cols() && det.abs().is_one(),
        determinant: det.to_string(),
    }
}

/// Rank of the L-expansions of the weight-`n` odd-degree monomials.
pub fn odd_basis_rank(n: u32) -> (usize, usize) {
    let basis = enumerate_odd_basis(n);
    (basis.len(), expansion_matrix(n, &basis).rank())
}

impl Algebra for GeneratorPolynomial {
    fn zero() -> Self {
        Self::default()
    }

    fn one() -> Self {
        Self::monomial(GeneratorMonomial::one(), Rational::one())
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.terms.add_assign(&other.terms);
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = LinComb::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.multiply(b), x * y);
            }
        }
        Self::from_terms(out)
    }

    fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.scaled(c))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

impl fmt::Display for GeneratorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().rev(), |m| (!m.is_one()).then(|| m.to_string()))
    }
}

impl fmt::Debug for GeneratorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
