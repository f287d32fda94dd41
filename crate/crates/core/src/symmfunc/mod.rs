//! Newton polynomials in the elementary symmetric functions, the Whitney-sum
//! coproduct on `Z/2[w1, w2, …]`, and the restriction checks over
//! `Z/2[α, β, γ, δ]`.
//!
//! Elementary symmetric functions are the variables `e1, e2, …` (`e_k` of
//! degree `k`); Stiefel-Whitney classes are `w1, w2, …`.

mod coproduct;
mod newton;
mod restriction;

pub use coproduct::{
    coproduct, coproduct_bso, is_primitive, is_primitive_bso, left_class, right_class, TensorPolynomial,
};
pub use newton::{
    newton_sums, s2t_mod2_quotient, s2t_reduction, s_n_girard, s_n_newton, s_pp, sn_mod2, sn_mod2_bso,
    to_stiefel_whitney, SnPolynomial,
};
pub use restriction::{verify_lemma_analog, verify_lemma_l32, BzRing};

use thiserror::Error;

use crate::poly::{PolyError, RingPresentation, Variable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmError {
    #[error("index must be positive")]
    ZeroIndex,
    #[error("s_{{{p},{p}}}: s_2p - s_p^2 is not divisible by 2")]
    InexactHalving { p: usize },
    #[error("`{0}` is not a Stiefel-Whitney class")]
    NotStiefelWhitney(String),
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("s_{n} fails its invariant: {reason}")]
    Invariant { n: usize, reason: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `e_k`, the k-th elementary symmetric function.
pub fn sigma(k: usize) -> Variable {
    Variable::named(&format!("e{k}"), k as u32)
}

/// `w_k`.
pub fn stiefel_whitney(k: usize) -> Variable {
    Variable::named(&format!("w{k}"), k as u32)
}

/// `k` if `v` is `w_k`.
pub fn stiefel_whitney_index(v: Variable) -> Option<usize> {
    let k = v.degree() as usize;
    (stiefel_whitney(k) == v).then_some(k)
}

/// `Z[e1, …, en]`.
pub fn sigma_ring(n: usize) -> RingPresentation {
    RingPresentation::new((1..=n).map(sigma).collect(), None).expect("distinct names")
}

/// `Z/2[w_from, …, w_to]` truncated above `truncation`.
pub fn stiefel_whitney_ring(from: usize, to: usize, truncation: Option<u32>) -> Result<RingPresentation, PolyError> {
    RingPresentation::new((from..=to).map(stiefel_whitney).collect(), truncation)
}
