use thiserror::Error;

use crate::algebra::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition parts must be positive, got {0:?}")]
    ZeroPart(Vec<u32>),

    #[error("{0} has an even part; an odd composition is required")]
    NotOdd(String),

    #[error("{elements:?} is not a peak set of [{n}-1]: elements must lie in [2, n-1] with no two consecutive")]
    InvalidPeakSet { n: u32, elements: Vec<u32> },

    #[error("p_{0} has even index; only odd power sums live in Γ")]
    EvenPowerSum(u32),

    #[error("plethysm with p_{0} is only supported for odd index")]
    EvenPlethysm(u32),

    #[error("{0} is not an elementary Lyndon odd composition, so it does not index a generator")]
    NotGeneratorIndex(String),

    #[error("degree must be positive")]
    ZeroDegree,

    #[error("{vars} variables cannot faithfully realize weight {weight}")]
    TooFewVariables { vars: usize, weight: u32 },

    #[error("polynomial is not quasisymmetric: monomial {:?} has coefficient {}, but the canonical support {:?} has {}", .0.support, .0.found, .0.canonical, .0.expected)]
    NotQuasisymmetric(Box<Violation>),

    #[error("expected integral coefficients, found {0} while {1}")]
    NonIntegral(Rational, String),

    #[error("singular system in weight {0}")]
    Singular(u32),

    #[error("straightening did not terminate within {0} rewrite steps")]
    StraighteningDiverged(usize),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// A monomial whose coefficient differs from that of its canonical
/// representative `x₁^{α₁}⋯x_r^{α_r}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub support: Vec<u32>,
    pub canonical: Vec<u32>,
    pub found: Rational,
    pub expected: Rational,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
