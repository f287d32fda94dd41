//! Exact sparse multivariate polynomials over F2 and over the integers.
//!
//! Every cohomology class handled by this crate is one of these polynomials.
//! Variables are graded and interned, so two rings that share a generator
//! name and degree share the variable itself.

mod coeff;
mod monomial;
mod polynomial;
mod ring;
mod symmetric;
mod variable;

pub use coeff::{CoeffRing, Coefficient, F2};
pub use monomial::Monomial;
pub use polynomial::{F2Poly, Polynomial, ZPoly};
pub use ring::{substitute, RingMap, RingPresentation};
pub use symmetric::{elementary_symmetric, express_in_elementary, is_symmetric};
pub use variable::Variable;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable `{0}` must have positive degree")]
    ZeroDegree(String),
    #[error("variable name must not be empty")]
    EmptyName,
    #[error("generator name `{0}` appears twice in one ring")]
    DuplicateName(String),
    #[error("truncation degree must be positive")]
    ZeroTruncation,
    #[error("variable `{0}` is not a generator of the ring")]
    UnknownVariable(String),
    #[error("term of degree {degree} exceeds the truncation degree {truncation}")]
    AboveTruncation { degree: u32, truncation: u32 },
    #[error("no image given for generator `{0}`")]
    MissingImage(String),
    #[error("image of `{variable}` is not homogeneous of degree {expected}")]
    ImageDegree { variable: String, expected: u32 },
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("{variables} variables but {elementary} elementary symmetric symbols")]
    ArityMismatch { variables: usize, elementary: usize },
}
