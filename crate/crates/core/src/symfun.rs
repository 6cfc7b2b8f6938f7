//! Symmetric functions in power-sum and q-generator coordinates: the passage
//! between `p_n` and `q_n`, Euler relations and strict straightening,
//! plethysm with `p_g`, and the Newton recursions linking lambda and Adams
//! operations in any commutative ℚ-algebra.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::marker::PhantomData;
use std::sync::{OnceLock, RwLock};

use num_traits::One;

use crate::algebra::{rat, ratio, write_sum, Algebra, LinComb, Rational};
use crate::error::{Error, Result};

/// Nonincreasing sequence of positive integers, read as a monomial
/// `x_{λ₁} x_{λ₂} ⋯` in some family of variables.
///
/// Ordered by weight, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn single(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn all_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn smallest_repeated(&self) -> Option<u32> {
        self.0.windows(2).rev().find(|w| w[0] == w[1]).map(|w| w[0])
    }

    /// Multiplicities of each part, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Rewrite one square `q_m²` (the smallest repeated index) through the
    /// Euler relation of degree `2m`. `None` if already strict.
    pub fn straighten_step(&self) -> Option<Vec<(Partition, Rational)>> {
        let m = self.smallest_repeated()?;
        let pos = self.0.iter().position(|&p| p == m).expect("repeated part present");
        let mut rest = self.0.clone();
        rest.drain(pos..pos + 2);
        let rest = Partition(rest);
        Some(
            euler_square(m)
                .into_iter()
                .map(|(lo, hi, c)| {
                    let mut parts = vec![hi];
                    if lo > 0 {
                        parts.push(lo);
                    }
                    (rest.merge(&Partition(parts)), c)
                })
                .collect(),
        )
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

fn partitions_with(n: u32, max: u32, allowed: &dyn Fn(u32, u32) -> bool, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(prefix.clone()));
        return;
    }
    for p in (1..=max.min(n)).rev() {
        if allowed(p, prefix.last().copied().unwrap_or(u32::MAX)) {
            prefix.push(p);
            partitions_with(n - p, p, allowed, prefix, out);
            prefix.pop();
        }
    }
}

pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    partitions_with(n, n, &|_, _| true, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` with distinct parts.
pub fn strict_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    partitions_with(n, n, &|p, prev| p < prev, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` with odd parts.
pub fn odd_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    partitions_with(n, n, &|p, _| p % 2 == 1, &mut Vec::new(), &mut out);
    out
}

/// Names a family of commuting variables indexed by positive integers.
pub trait Variable {
    const SYMBOL: &'static str;
}

/// Newton power sums `p_n`.
pub enum PowerSum {}
impl Variable for PowerSum {
    const SYMBOL: &'static str = "p";
}

/// The generators `q_n` of Γ.
pub enum QGen {}
impl Variable for QGen {
    const SYMBOL: &'static str = "q";
}

/// Sparse polynomial in the variables of `V`, one monomial per partition.
pub struct PartitionPoly<V> {
    terms: LinComb<Partition>,
    _family: PhantomData<fn() -> V>,
}

pub type PowerSumPoly = PartitionPoly<PowerSum>;
pub type QPoly = PartitionPoly<QGen>;

impl<V> Clone for PartitionPoly<V> {
    fn clone(&self) -> Self {
        Self::from_terms(self.terms.clone())
    }
}

impl<V> PartialEq for PartitionPoly<V> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<V> Eq for PartitionPoly<V> {}

impl<V> Default for PartitionPoly<V> {
    fn default() -> Self {
        Self::from_terms(LinComb::new())
    }
}

impl<V> PartitionPoly<V> {
    pub fn from_terms(terms: LinComb<Partition>) -> Self {
        PartitionPoly { terms, _family: PhantomData }
    }

    /// The variable with index `n`; index 0 is the constant 1.
    pub fn var(n: u32) -> Self {
        Self::from_terms(LinComb::basis(Partition::single(n)))
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms(LinComb::term(Partition::empty(), c))
    }

    pub fn monomial(lambda: Partition, c: Rational) -> Self {
        Self::from_terms(LinComb::term(lambda, c))
    }

    pub fn terms(&self) -> &LinComb<Partition> {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.terms.coefficient(lambda)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn only_odd_indices(&self) -> bool {
        self.terms.keys().all(Partition::all_odd)
    }

    pub fn is_strict(&self) -> bool {
        self.terms.keys().all(Partition::is_strict)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.is_integral()
    }

    /// Substitute `value(n)` for each variable and evaluate in `A`.
    pub fn evaluate<A: Algebra>(&self, mut value: impl FnMut(u32) -> A) -> A {
        let mut memo: HashMap<(u32, u32), A> = HashMap::new();
        let mut base: HashMap<u32, A> = HashMap::new();
        let mut out = A::zero();
        for (lambda, c) in &self.terms {
            let mut term = A::one();
            for (part, mult) in lambda.multiplicities() {
                let power = match memo.get(&(part, mult)) {
                    Some(p) => p.clone(),
                    None => {
                        let x = base.entry(part).or_insert_with(|| value(part)).clone();
                        let p = x.pow(mult);
                        memo.insert((part, mult), p.clone());
                        p
                    }
                };
                term = term.mul(&power);
            }
            out = out.add(&term.scale(c));
        }
        out
    }
}

impl<V> Algebra for PartitionPoly<V> {
    fn zero() -> Self {
        Self::default()
    }

    fn one() -> Self {
        Self::constant(Rational::one())
    }

    fn add(&self, other: &Self) -> Self {
        let mut t = self.terms.clone();
        t.add_assign(&other.terms);
        Self::from_terms(t)
    }

    fn mul(&self, other: &Self) -> Self {
        let mut t = LinComb::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                t.add_term(a.merge(b), x * y);
            }
        }
        Self::from_terms(t)
    }

    fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.scaled(c))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

impl<V: Variable> fmt::Display for PartitionPoly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().rev(), |lambda| {
            if lambda.is_empty() {
                return None;
            }
            let factors: Vec<String> = lambda
                .multiplicities()
                .into_iter()
                .map(|(p, m)| match m {
                    1 => format!("{}[{p}]", V::SYMBOL),
                    _ => format!("{}[{p}]^{m}", V::SYMBOL),
                })
                .collect();
            Some(factors.join("*"))
        })
    }
}

impl<V: Variable> fmt::Debug for PartitionPoly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn q_in_p_table() -> &'static RwLock<Vec<PowerSumPoly>> {
    static TABLE: OnceLock<RwLock<Vec<PowerSumPoly>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![PowerSumPoly::one()]))
}

/// `q_n` in odd power sums, from `n·q_n = Σ_{i odd ≤ n} 2 p_i q_{n-i}`.
pub fn q_in_p(n: u32) -> PowerSumPoly {
    let n = n as usize;
    if let Some(hit) = q_in_p_table().read().unwrap().get(n) {
        return hit.clone();
    }
    let mut table = q_in_p_table().write().unwrap();
    while table.len() <= n {
        let m = table.len();
        let mut acc = PowerSumPoly::zero();
        for i in (1..=m).step_by(2) {
            acc = acc.add(&PowerSumPoly::var(i as u32).mul(&table[m - i]).scale(&rat(2)));
        }
        table.push(acc.scale(&ratio(1, m as i64)));
    }
    table[n].clone()
}

/// `q_m` rewritten in odd-index generators through the Euler relations:
/// `q_{2k} = ½ Σ_{i=1}^{2k-1} (-1)^{i-1} q_i q_{2k-i}`.
pub fn q_in_odd_q(m: u32) -> QPoly {
    fn table() -> &'static RwLock<Vec<QPoly>> {
        static TABLE: OnceLock<RwLock<Vec<QPoly>>> = OnceLock::new();
        TABLE.get_or_init(|| RwLock::new(vec![QPoly::one()]))
    }
    let m = m as usize;
    if let Some(hit) = table().read().unwrap().get(m) {
        return hit.clone();
    }
    let mut t = table().write().unwrap();
    while t.len() <= m {
        let k = t.len();
        let next = if k % 2 == 1 {
            QPoly::var(k as u32)
        } else {
            let mut acc = QPoly::zero();
            for i in 1..k {
                let sign = if i % 2 == 1 { rat(1) } else { rat(-1) };
                acc = acc.add(&t[i].mul(&t[k - i]).scale(&sign));
            }
            acc.scale(&ratio(1, 2))
        };
        t.push(next);
    }
    t[m].clone()
}

/// `p_n` for odd `n` as a rational polynomial in `q₁, q₃, q₅, …`.
pub fn p_in_q(n: u32) -> Result<QPoly> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::EvenPowerSum(n));
    }
    fn table() -> &'static RwLock<HashMap<u32, QPoly>> {
        static TABLE: OnceLock<RwLock<HashMap<u32, QPoly>>> = OnceLock::new();
        TABLE.get_or_init(Default::default)
    }
    if let Some(hit) = table().read().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    // 2 p_n = n q_n - Σ_{k odd < n} 2 p_k q_{n-k}
    let mut acc = QPoly::var(n).scale(&rat(n as i64));
    for k in (1..n).step_by(2) {
        let pk = p_in_q(k)?;
        acc = acc.sub(&pk.mul(&q_in_odd_q(n - k)).scale(&rat(2)));
    }
    let out = acc.scale(&ratio(1, 2));
    table().write().unwrap().insert(n, out.clone());
    Ok(out)
}

/// `Σ_{i=0}^n (-1)^i q_i q_{n-i}` as a formal polynomial, `q₀ = 1`.
pub fn euler_relation(n: u32) -> QPoly {
    let mut out = QPoly::zero();
    for i in 0..=n {
        let sign = if i % 2 == 0 { rat(1) } else { rat(-1) };
        out = out.add(&QPoly::var(i).mul(&QPoly::var(n - i)).scale(&sign));
    }
    out
}

/// `q_m² = 2 Σ_{j=1}^{m} (-1)^{j-1} q_{m-j} q_{m+j}` as `(m-j, m+j, coef)`.
pub fn euler_square(m: u32) -> Vec<(u32, u32, Rational)> {
    (1..=m)
        .map(|j| (m - j, m + j, if j % 2 == 1 { rat(2) } else { rat(-2) }))
        .collect()
}

const STRAIGHTEN_LIMIT: usize = 5_000_000;

/// Rewrite every monomial with a repeated index through the Euler relations
/// until only strict partitions remain. Each rewrite moves a monomial up in
/// dominance order within its weight, which bounds the process.
pub fn straighten_strict(f: &QPoly) -> Result<QPoly> {
    let mut pending = f.terms.clone();
    let mut done = LinComb::new();
    let mut steps = 0;
    while let Some((lambda, c)) = pending.pop_first() {
        steps += 1;
        if steps > STRAIGHTEN_LIMIT {
            return Err(Error::StraighteningDiverged(STRAIGHTEN_LIMIT));
        }
        match lambda.straighten_step() {
            None => done.add_term(lambda, c),
            Some(rewrites) => {
                for (mu, k) in rewrites {
                    pending.add_term(mu, &c * k);
                }
            }
        }
    }
    Ok(QPoly::from_terms(done))
}

/// `f ∘ p_g`: every `p_m` becomes `p_{mg}`.
pub fn plethysm_pg(f: &PowerSumPoly, g: u32) -> Result<PowerSumPoly> {
    if g == 0 || g.is_multiple_of(2) {
        return Err(Error::EvenPlethysm(g));
    }
    Ok(PowerSumPoly::from_terms(
        f.terms
            .iter()
            .map(|(lambda, c)| (Partition::from_sorted(lambda.parts().iter().map(|p| p * g).collect()), c.clone()))
            .collect(),
    ))
}

/// θ: Λ → Γ on power sums, `p_n ↦ (1 - (-1)^n) p_n`.
pub fn theta_power_sums(f: &PowerSumPoly) -> PowerSumPoly {
    f.evaluate(|n| {
        if n % 2 == 1 {
            PowerSumPoly::var(n).scale(&rat(2))
        } else {
            PowerSumPoly::zero()
        }
    })
}

impl QPoly {
    /// Substitute `q_n ↦ q_in_p(n)`.
    pub fn to_power_sums(&self) -> PowerSumPoly {
        self.evaluate(q_in_p)
    }
}

impl PowerSumPoly {
    /// Substitute `p_n ↦ p_in_q(n)`; fails on even indices.
    pub fn to_q_generators(&self) -> Result<QPoly> {
        if let Some(lambda) = self.terms.keys().find(|l| !l.all_odd()) {
            let even = lambda.parts().iter().copied().find(|p| p % 2 == 0).unwrap_or(0);
            return Err(Error::EvenPowerSum(even));
        }
        Ok(self.evaluate(|n| p_in_q(n).expect("odd index")))
    }
}

/// Lambda values `λ¹..λⁿ` from Adams values `Ψ¹..Ψⁿ` by
/// `n·λⁿ = Σ_{i=1}^n (-1)^{i-1} λ^{n-i} Ψⁱ`.
pub fn lambda_from_adams<A: Algebra>(adams: &[A]) -> Vec<A> {
    let mut lambdas = vec![A::one()];
    for n in 1..=adams.len() {
        let mut acc = A::zero();
        for i in 1..=n {
            let term = lambdas[n - i].mul(&adams[i - 1]);
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        lambdas.push(acc.scale(&ratio(1, n as i64)));
    }
    lambdas.remove(0);
    lambdas
}

/// Adams values `Ψ¹..Ψⁿ` from lambda values, the same recursion solved for
/// `Ψⁿ`.
pub fn adams_from_lambda<A: Algebra>(lambdas: &[A]) -> Vec<A> {
    let lam = |k: usize| if k == 0 { A::one() } else { lambdas[k - 1].clone() };
    let mut adams: Vec<A> = Vec::with_capacity(lambdas.len());
    for n in 1..=lambdas.len() {
        let mut acc = lam(n).scale(&rat(n as i64));
        for i in 1..n {
            let term = lam(n - i).mul(&adams[i - 1]);
            acc = if i % 2 == 1 { acc.sub(&term) } else { acc.add(&term) };
        }
        adams.push(if n % 2 == 1 { acc } else { acc.scale(&rat(-1)) });
    }
    adams
}
