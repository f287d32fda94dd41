use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{sigma, stiefel_whitney, SymmError};
use crate::arithmetic::factorial;
use crate::poly::{Coefficient, F2Poly, Monomial, Polynomial, ZPoly};

/// The power-sum polynomials `s_1, …, s_n` (index `k - 1` holds `s_k`) in
/// terms of the supplied elementary symmetric functions, via
/// `s_k = Σ_{i<k} (-1)^{i-1} e_i s_{k-i} + (-1)^{k-1} k e_k`.
pub fn newton_sums<C: Coefficient>(n: usize, elementary: impl Fn(usize) -> Polynomial<C>) -> Vec<Polynomial<C>> {
    let e: Vec<Polynomial<C>> = (1..=n).map(&elementary).collect();
    let mut sums: Vec<Polynomial<C>> = Vec::with_capacity(n);
    for k in 1..=n {
        let sign = |i: usize| if i % 2 == 1 { 1 } else { -1 };
        let mut s = e[k - 1].scale(&C::from_i64(sign(k) * k as i64));
        for i in 1..k {
            if e[i - 1].is_zero() || sums[k - i - 1].is_zero() {
                continue;
            }
            let term = &e[i - 1] * &sums[k - i - 1];
            if sign(i) == 1 {
                s += &term;
            } else {
                s -= &term;
            }
        }
        sums.push(s);
    }
    sums
}

/// `s_n` as an integer polynomial in `e1, …, en`, normalised so that
/// substituting elementary symmetric polynomials gives the power sum.
#[derive(Clone, PartialEq, Eq)]
pub struct SnPolynomial {
    n: usize,
    body: ZPoly,
}

impl SnPolynomial {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn body(&self) -> &ZPoly {
        &self.body
    }

    pub fn into_body(self) -> ZPoly {
        self.body
    }

    /// Weighted homogeneity and the `e_n` coefficient `(-1)^{n-1} n`.
    pub fn check_invariants(&self) -> Result<(), SymmError> {
        let n = self.n;
        if !self.body.is_homogeneous() || self.body.degree() != Some(n as u32) {
            return Err(SymmError::Invariant { n, reason: format!("not homogeneous of degree {n}") });
        }
        let expected = BigInt::from(n) * if n % 2 == 1 { 1 } else { -1 };
        let actual = self.body.coefficient(&Monomial::var(sigma(n)));
        if actual != expected {
            return Err(SymmError::Invariant { n, reason: format!("coefficient of e{n} is {actual}") });
        }
        Ok(())
    }

    /// Reduction mod 2 with `e_k ↦ w_k`.
    pub fn to_stiefel_whitney(&self) -> F2Poly {
        to_stiefel_whitney(&self.body)
    }
}

impl fmt::Display for SnPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.body.fmt(f)
    }
}

impl fmt::Debug for SnPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s_{} = {}", self.n, self.body)
    }
}

fn sigma_sums(n: usize) -> Vec<ZPoly> {
    newton_sums(n, |k| ZPoly::var(sigma(k)))
}

pub fn s_n_newton(n: usize) -> Result<SnPolynomial, SymmError> {
    if n == 0 {
        return Err(SymmError::ZeroIndex);
    }
    let body = sigma_sums(n).pop().expect("n >= 1");
    Ok(SnPolynomial { n, body })
}

/// Multiplicity vectors `(i_1, …, i_n)` with `Σ k i_k = n`.
fn partitions(n: usize) -> Vec<Vec<u32>> {
    fn walk(part: usize, remaining: usize, mult: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(mult.clone());
            return;
        }
        if part == 0 {
            return;
        }
        for i in (0..=remaining / part).rev() {
            mult[part - 1] = i as u32;
            walk(part - 1, remaining - i * part, mult, out);
        }
        mult[part - 1] = 0;
    }
    let mut out = Vec::new();
    walk(n, n, &mut vec![0; n], &mut out);
    out
}

/// Girard's closed form: the coefficient of `Π e_k^{i_k}` is
/// `(-1)^{n + Σi} n (Σi - 1)! / Π i_k!`.
pub fn s_n_girard(n: usize) -> Result<SnPolynomial, SymmError> {
    if n == 0 {
        return Err(SymmError::ZeroIndex);
    }
    let mut body = ZPoly::zero();
    for mult in partitions(n) {
        let total: u32 = mult.iter().sum();
        let num = BigInt::from(n) * factorial(total as u64 - 1);
        let den = mult.iter().fold(<BigInt as One>::one(), |acc, &i| acc * factorial(i as u64));
        let (q, r) = num.div_rem(&den);
        debug_assert!(Zero::is_zero(&r));
        let c = if (n + total as usize) % 2 == 0 { q } else { -q };
        let m = Monomial::from_pairs(mult.iter().enumerate().map(|(k, &i)| (sigma(k + 1), i)));
        body.add_term(m, &c);
    }
    Ok(SnPolynomial { n, body })
}

/// `s_{p,p} = (s_{2p} - s_p^2) / 2` in `Z[e1, …, e2p]`.
pub fn s_pp(p: usize) -> Result<ZPoly, SymmError> {
    if p == 0 {
        return Err(SymmError::ZeroIndex);
    }
    let sums = sigma_sums(2 * p);
    let diff = &sums[2 * p - 1] - &(&sums[p - 1] * &sums[p - 1]);
    diff.exact_div_scalar(&BigInt::from(2)).ok_or(SymmError::InexactHalving { p })
}

/// Reduction mod 2 followed by `e_k ↦ w_k`.
pub fn to_stiefel_whitney(p: &ZPoly) -> F2Poly {
    p.reduce_mod2().rename(|v| stiefel_whitney(v.degree() as usize))
}

/// `s_n(w)` in `Z/2[w1, …, wn]`.
pub fn sn_mod2(n: usize) -> Result<F2Poly, SymmError> {
    if n == 0 {
        return Err(SymmError::ZeroIndex);
    }
    Ok(newton_sums(n, |k| F2Poly::var(stiefel_whitney(k))).pop().expect("n >= 1"))
}

/// `s_n(w)` in `Z/2[w2, …, wn]`, the quotient by `w1`.
pub fn sn_mod2_bso(n: usize) -> Result<F2Poly, SymmError> {
    if n == 0 {
        return Err(SymmError::ZeroIndex);
    }
    let e = |k: usize| if k == 1 { F2Poly::zero() } else { F2Poly::var(stiefel_whitney(k)) };
    Ok(newton_sums(n, e).pop().expect("n >= 1"))
}

/// `s_{2t,2t}` reduced modulo `e1, e3, e5, e6, …` and `e2·e4`, alongside the
/// value `-e2^{2t} + 2(-1)^t e4^t - [t even]·8 e4^t` it should equal.
pub fn s2t_reduction(t: usize) -> Result<(ZPoly, ZPoly), SymmError> {
    if t == 0 {
        return Err(SymmError::ZeroIndex);
    }
    let (e2, e4) = (sigma(2), sigma(4));
    let reduced =
        s_pp(2 * t)?.filter(|m| m.variables().all(|v| v == e2 || v == e4) && !(m.contains(e2) && m.contains(e4)));
    let t32 = t as u32;
    let sign = if t % 2 == 0 { 1 } else { -1 };
    let mut fours = 2 * sign;
    if t % 2 == 0 {
        fours -= 8;
    }
    let expected = -ZPoly::var(e2).pow(2 * t32) + ZPoly::var(e4).pow(t32).scale(&BigInt::from(fours));
    Ok((reduced, expected))
}

/// Image of `s_{2t,2t}` in `Z/2[w2^2, w4^2] / (w2^2 w4^2)`, after killing the
/// odd classes and everything above `w4`.
pub fn s2t_mod2_quotient(t: usize) -> Result<F2Poly, SymmError> {
    if t == 0 {
        return Err(SymmError::ZeroIndex);
    }
    let (w2, w4) = (stiefel_whitney(2), stiefel_whitney(4));
    let kill = Monomial::from_pairs([(w2, 2), (w4, 2)]);
    Ok(to_stiefel_whitney(&s_pp(2 * t)?).filter(|m| m.variables().all(|v| v == w2 || v == w4) && !kill.divides(m)))
}
