//! PQSym, the ring of peak quasisymmetric functions, in the monomial peak
//! basis `L_α` and Stembridge's peak basis `K_α = K_{S_α}`, both indexed by
//! odd compositions.
//!
//! The descent-to-peak map ϑ is computed from `F_α ↦ K_{P(α)}`; products are
//! `L_α L_β = ϑ(M_α M_β)` since `L_α = ϑ(M_α)`. PQSym carries the lambda
//! structure whose Adams operations are `Φⁿ(L_α) = L_{nα}` for odd `n` and
//! zero for even `n`, and the generators `qₙ(α) = λ̃ⁿ(L_α)` of the structure
//! theorem live here.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{rat, write_sum, Algebra, LinComb, Rational};
use crate::composition::{compositions, Composition, PeakSet};
use crate::error::{Error, Result};
use crate::qsym::{QSymBasis, QSymElement};
use crate::quasishuffle::qshuffle_terms;
use crate::symfun::lambda_from_adams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PQSymBasis {
    /// `L_α = ϑ(M_α)`
    Monomial,
    /// `K_α = K_{S_α}`
    Peak,
}

impl PQSymBasis {
    pub fn symbol(self) -> &'static str {
        match self {
            PQSymBasis::Monomial => "L",
            PQSymBasis::Peak => "K",
        }
    }
}

/// An element of PQSym over ℚ. All indices are odd compositions. Equality
/// compares values across bases.
#[derive(Clone)]
pub struct PQSymElement {
    basis: PQSymBasis,
    terms: LinComb<Composition>,
}

impl PQSymElement {
    pub fn new(basis: PQSymBasis, terms: LinComb<Composition>) -> Result<Self> {
        if let Some(bad) = terms.keys().find(|a| !a.is_odd()) {
            return Err(Error::NotOdd(bad.to_string()));
        }
        Ok(Self::new_unchecked(basis, terms))
    }

    pub(crate) fn new_unchecked(basis: PQSymBasis, terms: LinComb<Composition>) -> Self {
        PQSymElement { basis, terms }
    }

    pub fn monomial(alpha: Composition) -> Result<Self> {
        Self::new(PQSymBasis::Monomial, LinComb::basis(alpha))
    }

    pub fn peak(alpha: Composition) -> Result<Self> {
        Self::new(PQSymBasis::Peak, LinComb::basis(alpha))
    }

    /// `K_P` for a peak set `P`.
    pub fn peak_of_set(p: &PeakSet) -> Self {
        Self::new_unchecked(PQSymBasis::Peak, LinComb::basis(p.to_odd_composition()))
    }

    pub fn scalar(c: Rational) -> Self {
        Self::new_unchecked(PQSymBasis::Monomial, LinComb::term(Composition::empty(), c))
    }

    /// `qₙ = K_{∅ₙ} = L_{(1ⁿ)}`.
    pub fn schur_q(n: u32) -> Self {
        Self::new_unchecked(PQSymBasis::Monomial, LinComb::basis(Composition::ones(n as usize)))
    }

    pub fn basis(&self) -> PQSymBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Composition> {
        &self.terms
    }

    pub fn coefficient(&self, alpha: &Composition) -> Rational {
        self.terms.coefficient(alpha)
    }

    /// wll-largest index with its coefficient.
    pub fn leading(&self) -> Option<(&Composition, &Rational)> {
        self.terms.leading()
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(Composition::weight).max().unwrap_or(0)
    }

    pub fn homogeneous_component(&self, weight: u32) -> Self {
        Self::new_unchecked(self.basis, self.terms.filter(|a| a.weight() == weight))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.is_integral()
    }

    pub fn to_monomial(&self) -> Self {
        match self.basis {
            PQSymBasis::Monomial => self.clone(),
            PQSymBasis::Peak => Self::new_unchecked(PQSymBasis::Monomial, self.terms.flat_map(signed_peak_subsets)),
        }
    }

    pub fn to_peak(&self) -> Self {
        match self.basis {
            PQSymBasis::Peak => self.clone(),
            PQSymBasis::Monomial => Self::new_unchecked(PQSymBasis::Peak, self.terms.flat_map(signed_peak_subsets)),
        }
    }

    pub fn in_basis(&self, basis: PQSymBasis) -> Self {
        match basis {
            PQSymBasis::Monomial => self.to_monomial(),
            PQSymBasis::Peak => self.to_peak(),
        }
    }

    /// Coordinates in Hsiao's sign-adjusted basis `η_α = (-1)^{|S_α|} L_α`.
    pub fn eta_coordinates(&self) -> LinComb<Composition> {
        self.to_monomial()
            .terms
            .iter()
            .map(|(a, c)| {
                let flips = (a.weight() as usize - a.len()) / 2;
                (a.clone(), if flips.is_multiple_of(2) { c.clone() } else { -c.clone() })
            })
            .collect()
    }

    /// Product in the L basis.
    pub fn multiply(&self, other: &PQSymElement) -> PQSymElement {
        let (a, b) = (self.to_monomial(), other.to_monomial());
        let mut out = LinComb::new();
        for (alpha, x) in &a.terms {
            for (beta, y) in &b.terms {
                out.add_scaled(&monomial_product(alpha, beta), &(x * y));
            }
        }
        Self::new_unchecked(PQSymBasis::Monomial, out)
    }

    /// The inclusion PQSym ⊂ QSym, through
    /// `K_P = Σ_{P ⊆ D(α) ∪ (D(α)+1)} 2^{ℓ(α)} M_α`.
    pub fn embed_to_qsym(&self) -> QSymElement {
        let k = self.to_peak();
        QSymElement::new(QSymBasis::Monomial, k.terms.flat_map(|a| (*peak_in_monomial(a)).clone()))
    }

    /// `Φⁿ(L_α) = L_{nα}` for odd `n`, `0` for even `n` (constants fixed).
    pub fn adams_phi(&self, n: u32) -> PQSymElement {
        assert!(n > 0, "Adams operations are indexed by positive integers");
        let l = self.to_monomial();
        let terms = if n % 2 == 1 {
            l.terms.iter().map(|(a, c)| (a.dilate(n), c.clone())).collect()
        } else {
            l.terms.filter(Composition::is_empty)
        };
        Self::new_unchecked(PQSymBasis::Monomial, terms)
    }

    /// `λ̃ⁿ(f)` by the Newton recursion on `Φ¹(f), …, Φⁿ(f)`.
    pub fn lambda_tilde(&self, n: u32) -> PQSymElement {
        if n == 0 {
            return Self::one();
        }
        let adams: Vec<PQSymElement> = (1..=n).map(|i| self.adams_phi(i)).collect();
        lambda_from_adams(&adams).pop().expect("n ≥ 1")
    }
}

/// `X_α ↦ Σ_{S_β ⊆ S_α} (-1)^{|S_β|} X_β`, the (involutive) change between
/// the K and L bases in either direction.
fn signed_peak_subsets(alpha: &Composition) -> LinComb<Composition> {
    let s = alpha.odd_to_peak().expect("PQSym indices are odd");
    s.subsets()
        .into_iter()
        .map(|sub| {
            let sign = if sub.len() % 2 == 0 { rat(1) } else { rat(-1) };
            (sub.to_odd_composition(), sign)
        })
        .collect()
}

type Memo<K, V> = OnceLock<RwLock<HashMap<K, Arc<V>>>>;

fn memoized<K, V>(memo: &'static Memo<K, V>, key: &K, compute: impl FnOnce() -> V) -> Arc<V>
where
    K: std::hash::Hash + Eq + Clone,
{
    let lock = memo.get_or_init(Default::default);
    if let Some(hit) = lock.read().unwrap().get(key) {
        return hit.clone();
    }
    let value = Arc::new(compute());
    lock.write().unwrap().entry(key.clone()).or_insert(value).clone()
}

/// ϑ(M_γ) in the L basis, from the definition
/// `ϑ(M_γ) = Σ_{δ ≤ γ} (-1)^{ℓ(δ)-ℓ(γ)} K_{P(δ)}` and
/// `K_P = Σ_{S ⊆ P} (-1)^{|S|} L_S`. The double sum over descent sets
/// `D ⊇ D(γ)` and peak subsets `S ⊆ P(D)` is accumulated one position of
/// `[n-1]` at a time, so no refinement of `γ` is ever listed.
pub fn theta_monomial(gamma: &Composition) -> Arc<LinComb<Composition>> {
    static MEMO: Memo<Composition, LinComb<Composition>> = OnceLock::new();
    memoized(&MEMO, gamma, || theta_transfer(gamma))
}

fn theta_transfer(gamma: &Composition) -> LinComb<Composition> {
    let n = gamma.weight();
    let forced = gamma.descent_set();
    // (i-1 ∈ D, S so far) ↦ signed count
    let mut states: HashMap<(bool, Vec<u32>), i64> = HashMap::from([((false, Vec::new()), 1)]);
    for i in 1..n {
        let mut next: HashMap<(bool, Vec<u32>), i64> = HashMap::with_capacity(states.len() * 2);
        let is_forced = forced.contains(i);
        for ((prev, s), c) in states {
            if !is_forced {
                *next.entry((false, s.clone())).or_insert(0) += c;
            }
            let signed = if is_forced { c } else { -c };
            if i >= 2 && !prev {
                let mut t = s.clone();
                t.push(i);
                *next.entry((true, t)).or_insert(0) -= signed;
            }
            *next.entry((true, s)).or_insert(0) += signed;
        }
        next.retain(|_, c| *c != 0);
        states = next;
    }
    states
        .into_iter()
        .map(|((_, s), c)| {
            let p = PeakSet::new(n, s).expect("peaks of a descent set are spaced");
            (p.to_odd_composition(), rat(c))
        })
        .collect()
}

fn monomial_product(a: &Composition, b: &Composition) -> Arc<LinComb<Composition>> {
    static MEMO: Memo<(Composition, Composition), LinComb<Composition>> = OnceLock::new();
    let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    memoized(&MEMO, &key, || {
        let mut out = LinComb::new();
        for (gamma, m) in qshuffle_terms(&key.0, &key.1).iter() {
            out.add_scaled(&theta_monomial(gamma), &Rational::from_integer(BigInt::from(*m)));
        }
        out
    })
}

fn peak_in_monomial(alpha: &Composition) -> Arc<LinComb<Composition>> {
    static MEMO: Memo<Composition, LinComb<Composition>> = OnceLock::new();
    memoized(&MEMO, alpha, || {
        let p = alpha.odd_to_peak().expect("PQSym indices are odd");
        peak_function_monomial(&p).terms().clone()
    })
}

/// The descent-to-peak map `ϑ: F_α ↦ K_{P(α)}`, result in the K basis.
pub fn theta_map(f: &QSymElement) -> PQSymElement {
    let m = f.to_monomial();
    let l = PQSymElement::new_unchecked(PQSymBasis::Monomial, m.terms().flat_map(|g| (*theta_monomial(g)).clone()));
    l.to_peak()
}

/// `K_P = Σ_{α ⊨ n, P ⊆ D(α) ∪ (D(α)+1)} 2^{ℓ(α)} M_α`.
pub fn peak_function_monomial(p: &PeakSet) -> QSymElement {
    let terms = compositions(p.n())
        .into_iter()
        .filter(|a| {
            let d = a.descent_set();
            p.elements().iter().all(|&i| d.contains(i) || (i > 0 && d.contains(i - 1)))
        })
        .map(|a| {
            let c = Rational::from_integer(BigInt::one() << a.len());
            (a, c)
        })
        .collect();
    QSymElement::new(QSymBasis::Monomial, terms)
}

/// `K_P = 2^{|P|+1} Σ_{α ⊨ n, P ⊆ D(α) △ (D(α)+1)} F_α` (for `n ≥ 1`).
pub fn peak_function_fundamental(p: &PeakSet) -> QSymElement {
    if p.n() == 0 {
        return QSymElement::one();
    }
    let scale = Rational::from_integer(BigInt::one() << (p.len() + 1));
    let terms = compositions(p.n())
        .into_iter()
        .filter(|a| {
            let d = a.descent_set();
            p.elements().iter().all(|&i| d.contains(i) != (i > 0 && d.contains(i - 1)))
        })
        .map(|a| (a, scale.clone()))
        .collect();
    QSymElement::new(QSymBasis::Fundamental, terms)
}

/// `qₙ(α) = λ̃ⁿ(L_α)` for a nonempty odd `α`, from
/// `n·qₙ(α) = Σ_{i odd ≤ n} q_{n-i}(α) L_{iα}` (the even Adams values vanish).
pub fn generator(n: u32, alpha: &Composition) -> Result<Arc<PQSymElement>> {
    static MEMO: Memo<(u32, Composition), PQSymElement> = OnceLock::new();
    alpha.require_odd()?;
    if alpha.is_empty() {
        return Err(Error::NotGeneratorIndex(alpha.to_string()));
    }
    if n == 0 {
        return Ok(Arc::new(PQSymElement::one()));
    }
    let key = (n, alpha.clone());
    if let Some(hit) = MEMO.get_or_init(Default::default).read().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let mut acc = PQSymElement::zero();
    for i in (1..=n).step_by(2) {
        let lower = generator(n - i, alpha)?;
        let adams = PQSymElement::new_unchecked(PQSymBasis::Monomial, LinComb::basis(alpha.dilate(i)));
        acc = acc.add(&lower.multiply(&adams));
    }
    let value = acc.scale(&Rational::new(BigInt::one(), BigInt::from(n)));
    Ok(memoized(&MEMO, &key, || value))
}

impl PartialEq for PQSymElement {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            self.to_monomial().terms == other.to_monomial().terms
        }
    }
}

impl Eq for PQSymElement {}

impl Algebra for PQSymElement {
    fn zero() -> Self {
        Self::new_unchecked(PQSymBasis::Monomial, LinComb::new())
    }

    fn one() -> Self {
        Self::scalar(Rational::one())
    }

    fn add(&self, other: &Self) -> Self {
        let (mut a, b) = if self.basis == other.basis {
            (self.clone(), other.clone())
        } else {
            (self.to_monomial(), other.to_monomial())
        };
        a.terms.add_assign(&b.terms);
        a
    }

    fn mul(&self, other: &Self) -> Self {
        self.multiply(other)
    }

    fn scale(&self, c: &Rational) -> Self {
        Self::new_unchecked(self.basis, self.terms.scaled(c))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

impl fmt::Display for PQSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.basis.symbol();
        write_sum(f, self.terms.iter().rev(), |a| (!a.is_empty()).then(|| format!("{sym}{a}")))
    }
}

impl fmt::Debug for PQSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
