//! QSym over ℚ in the monomial and fundamental bases, with its Adams and
//! lambda operations.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{rat, write_sum, Algebra, LinComb, Rational};
use crate::composition::{compositions, Composition};
use crate::quasishuffle::qshuffle_terms;
use crate::symfun::lambda_from_adams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QSymBasis {
    /// `M_α`
    Monomial,
    /// `F_α`
    Fundamental,
}

impl QSymBasis {
    pub fn symbol(self) -> &'static str {
        match self {
            QSymBasis::Monomial => "M",
            QSymBasis::Fundamental => "F",
        }
    }
}

/// A quasisymmetric function stored in one basis. Equality compares values,
/// converting between bases when needed.
#[derive(Clone)]
pub struct QSymElement {
    basis: QSymBasis,
    terms: LinComb<Composition>,
}

impl QSymElement {
    pub fn new(basis: QSymBasis, terms: LinComb<Composition>) -> Self {
        QSymElement { basis, terms }
    }

    pub fn zero_in(basis: QSymBasis) -> Self {
        Self::new(basis, LinComb::new())
    }

    pub fn monomial(alpha: Composition) -> Self {
        Self::new(QSymBasis::Monomial, LinComb::basis(alpha))
    }

    pub fn fundamental(alpha: Composition) -> Self {
        Self::new(QSymBasis::Fundamental, LinComb::basis(alpha))
    }

    pub fn scalar(c: Rational) -> Self {
        Self::new(QSymBasis::Monomial, LinComb::term(Composition::empty(), c))
    }

    pub fn basis(&self) -> QSymBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Composition> {
        &self.terms
    }

    pub fn coefficient(&self, alpha: &Composition) -> Rational {
        self.terms.coefficient(alpha)
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(Composition::weight).max().unwrap_or(0)
    }

    pub fn homogeneous_component(&self, weight: u32) -> Self {
        Self::new(self.basis, self.terms.filter(|a| a.weight() == weight))
    }

    pub fn to_monomial(&self) -> Self {
        match self.basis {
            QSymBasis::Monomial => self.clone(),
            QSymBasis::Fundamental => Self::new(QSymBasis::Monomial, self.terms.flat_map(fundamental_in_monomial)),
        }
    }

    pub fn to_fundamental(&self) -> Self {
        match self.basis {
            QSymBasis::Fundamental => self.clone(),
            QSymBasis::Monomial => Self::new(QSymBasis::Fundamental, self.terms.flat_map(monomial_in_fundamental)),
        }
    }

    pub fn in_basis(&self, basis: QSymBasis) -> Self {
        match basis {
            QSymBasis::Monomial => self.to_monomial(),
            QSymBasis::Fundamental => self.to_fundamental(),
        }
    }

    /// Product in the M basis, `M_α M_β = Σ c_γ M_γ` for `α ⋈ β = Σ c_γ γ`.
    pub fn multiply(&self, other: &QSymElement) -> QSymElement {
        let (a, b) = (self.to_monomial(), other.to_monomial());
        let mut out = LinComb::new();
        for (alpha, x) in &a.terms {
            for (beta, y) in &b.terms {
                let xy = x * y;
                for (gamma, m) in qshuffle_terms(alpha, beta).iter() {
                    out.add_term(gamma.clone(), &xy * Rational::from_integer(BigInt::from(*m)));
                }
            }
        }
        Self::new(QSymBasis::Monomial, out)
    }

    /// `Ψⁿ: M_α ↦ M_{n·α}`.
    pub fn adams_psi(&self, n: u32) -> QSymElement {
        assert!(n > 0, "Adams operations are indexed by positive integers");
        let m = self.to_monomial();
        Self::new(
            QSymBasis::Monomial,
            m.terms.iter().map(|(a, c)| (a.dilate(n), c.clone())).collect(),
        )
    }

    /// `λⁿ(f)` by the Newton recursion on `Ψ¹(f), …, Ψⁿ(f)`.
    pub fn lambda(&self, n: u32) -> QSymElement {
        if n == 0 {
            return Self::one();
        }
        let adams: Vec<QSymElement> = (1..=n).map(|i| self.adams_psi(i)).collect();
        lambda_from_adams(&adams).pop().expect("n ≥ 1")
    }
}

/// `F_α = Σ_{β ≤ α} M_β`.
fn fundamental_in_monomial(alpha: &Composition) -> LinComb<Composition> {
    alpha.refinements().into_iter().map(|b| (b, Rational::one())).collect()
}

/// `M_α = Σ_{β ≤ α} (-1)^{ℓ(β)-ℓ(α)} F_β`.
fn monomial_in_fundamental(alpha: &Composition) -> LinComb<Composition> {
    alpha
        .refinements()
        .into_iter()
        .map(|b| {
            let sign = if (b.len() - alpha.len()).is_multiple_of(2) { rat(1) } else { rat(-1) };
            (b, sign)
        })
        .collect()
}

/// `eₙ(α) = λⁿ(M_α)`.
pub fn e_alpha(n: u32, alpha: &Composition) -> QSymElement {
    QSymElement::monomial(alpha.clone()).lambda(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetricFamily {
    Elementary,
    Complete,
    PowerSum,
    SchurQ,
}

impl SymmetricFamily {
    pub fn from_symbol(s: &str) -> Option<Self> {
        match s {
            "e" => Some(SymmetricFamily::Elementary),
            "h" => Some(SymmetricFamily::Complete),
            "p" => Some(SymmetricFamily::PowerSum),
            "q" => Some(SymmetricFamily::SchurQ),
            _ => None,
        }
    }
}

/// The symmetric functions `eₙ, hₙ, pₙ, qₙ` inside QSym, in the M basis.
pub fn symmetric_injection(family: SymmetricFamily, n: u32) -> QSymElement {
    if n == 0 {
        return match family {
            SymmetricFamily::PowerSum => QSymElement::scalar(rat(0)),
            _ => QSymElement::one(),
        };
    }
    let terms: LinComb<Composition> = match family {
        SymmetricFamily::Elementary => LinComb::basis(Composition::ones(n as usize)),
        SymmetricFamily::PowerSum => LinComb::basis(Composition::from_parts_unchecked(vec![n])),
        SymmetricFamily::Complete => compositions(n).into_iter().map(|a| (a, rat(1))).collect(),
        SymmetricFamily::SchurQ => compositions(n)
            .into_iter()
            .map(|a| {
                let c = Rational::from_integer(BigInt::from(1u8) << a.len());
                (a, c)
            })
            .collect(),
    };
    QSymElement::new(QSymBasis::Monomial, terms)
}

impl PartialEq for QSymElement {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            self.to_monomial().terms == other.to_monomial().terms
        }
    }
}

impl Eq for QSymElement {}

impl Algebra for QSymElement {
    fn zero() -> Self {
        Self::zero_in(QSymBasis::Monomial)
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
        Self::new(self.basis, self.terms.scaled(c))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }
}

impl fmt::Display for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.basis.symbol();
        write_sum(f, self.terms.iter().rev(), |a| (!a.is_empty()).then(|| format!("{sym}{a}")))
    }
}

impl fmt::Debug for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
