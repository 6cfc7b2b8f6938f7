//! Exact computer algebra for quasisymmetric functions (QSym) and peak
//! quasisymmetric functions (PQSym).
//!
//! PQSym is a polynomial ring over ℤ in the generators `qₙ(α) = λ̃ⁿ(L_α)`,
//! `α` elementary Lyndon odd, subject only to the Euler relations
//! `Σ (-1)^i qᵢ(α) q_{n-i}(α) = 0`. The [`structure`] module decomposes
//! any element into these generators two independent ways, and [`oracle`]
//! checks identities by brute-force expansion in finitely many variables.
//!
//! ```
//! use pqsym::{Composition, PQSymElement, structure};
//!
//! let l3 = PQSymElement::monomial("[3]".parse::<Composition>().unwrap()).unwrap();
//! let p = structure::decompose_inductive(&l3).unwrap();
//! assert_eq!(p.to_string(), "3*Q[3; 1] - Q[2; 1]*Q[1; 1]");
//! assert_eq!(p.expand(), l3);
//! ```

pub mod algebra;
pub mod composition;
pub mod error;
pub mod json;
pub mod linalg;
pub mod oracle;
pub mod pqsym;
pub mod qsym;
pub mod quasishuffle;
pub mod structure;
pub mod symfun;

pub use algebra::{rat, ratio, Algebra, LinComb, Rational};
pub use composition::{Composition, PeakSet};
pub use error::{Error, Result, Violation};
pub use pqsym::{PQSymBasis, PQSymElement};
pub use qsym::{QSymBasis, QSymElement};
pub use structure::{GeneratorMonomial, GeneratorPolynomial, GeneratorSymbol};
pub use symfun::{Partition, PowerSumPoly, QPoly};
