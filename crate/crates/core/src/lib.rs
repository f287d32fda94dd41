//! Mechanical verification of the polynomial and arithmetic identities behind
//! the statement that CP²-bundles generate the oriented cobordism ring (and
//! RP²-bundles the unoriented one).
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: exact sparse polynomials over F2 and ℤ, ring presentations and
//!   substitution homomorphisms, reduction of symmetric polynomials.
//! * [`symmfunc`]: Newton and Girard polynomials, `s_{p,p}`, the Whitney-sum
//!   coproduct, primitivity, and the restrictions to `B(Z/2)^4`.
//! * [`steenrod`]: `Sq^1` as a derivation and its homology.
//! * [`fiber`]: integration along the fiber for the CP²- and RP²-bundles.
//! * [`arithmetic`]: binomial parity, prime powers, and the `z_n` recursion.
//! * [`generators`]: characteristic numbers `S_n(PE_r)` and the gcd criterion.
//! * [`cli`]: the named verification suites behind the `cobordism` binary.

pub mod arithmetic;
pub mod cli;
pub mod fiber;
pub mod generators;
pub mod poly;
pub mod report;
pub mod steenrod;
pub mod symmfunc;

pub use poly::{F2Poly, Monomial, Polynomial, RingMap, RingPresentation, Variable, ZPoly, F2};
pub use report::{CaseRecord, Verification};
