use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul};

use super::{stiefel_whitney, stiefel_whitney_index, SymmError};
use crate::poly::{F2Poly, Monomial, Variable};

/// `w_k ⊗ 1`.
pub fn left_class(k: usize) -> Variable {
    Variable::named(&format!("w{k}'"), k as u32)
}

/// `1 ⊗ w_k`.
pub fn right_class(k: usize) -> Variable {
    Variable::named(&format!("w{k}''"), k as u32)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

fn side_of(v: Variable) -> Option<(Side, usize)> {
    let k = v.degree() as usize;
    if left_class(k) == v {
        Some((Side::Left, k))
    } else if right_class(k) == v {
        Some((Side::Right, k))
    } else {
        None
    }
}

/// An element of `Z/2[w] ⊗ Z/2[w]`, stored as a polynomial in the primed
/// (left) and double-primed (right) classes.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct TensorPolynomial {
    poly: F2Poly,
}

impl TensorPolynomial {
    pub fn zero() -> Self {
        TensorPolynomial::default()
    }

    /// `p ⊗ 1` for `p` in the `w`'s.
    pub fn left(p: &F2Poly) -> Result<Self, SymmError> {
        Ok(TensorPolynomial { poly: rename_checked(p, left_class)? })
    }

    /// `1 ⊗ p`.
    pub fn right(p: &F2Poly) -> Result<Self, SymmError> {
        Ok(TensorPolynomial { poly: rename_checked(p, right_class)? })
    }

    /// `a ⊗ b`.
    pub fn pure(a: &F2Poly, b: &F2Poly) -> Result<Self, SymmError> {
        Ok(Self::left(a)? * Self::right(b)?)
    }

    /// Wraps a polynomial in the primed and double-primed classes.
    pub fn from_polynomial(poly: F2Poly) -> Result<Self, SymmError> {
        if let Some(v) = poly.variables().into_iter().find(|&v| side_of(v).is_none()) {
            return Err(SymmError::NotStiefelWhitney(v.name().to_owned()));
        }
        Ok(TensorPolynomial { poly })
    }

    pub fn polynomial(&self) -> &F2Poly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Image in the quotient by `w1 ⊗ 1` and `1 ⊗ w1`.
    pub fn kill_w1(&self) -> Self {
        TensorPolynomial { poly: self.poly.reduce_mod_variables(&[left_class(1), right_class(1)]) }
    }

    /// The part of bidegree `(i, j)`.
    pub fn bidegree_component(&self, i: u32, j: u32) -> Self {
        let poly = self.poly.filter(|m| bidegree(m) == (i, j));
        TensorPolynomial { poly }
    }

    /// Terms as `(left, right)` pairs of `w`-monomials.
    pub fn pairs(&self) -> Vec<(Monomial, Monomial)> {
        let mut out: Vec<_> = self.poly.monomials().map(split).collect();
        out.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.cmp(b)));
        out
    }
}

fn rename_checked(p: &F2Poly, to: fn(usize) -> Variable) -> Result<F2Poly, SymmError> {
    if let Some(v) = p.variables().into_iter().find(|&v| stiefel_whitney_index(v).is_none()) {
        return Err(SymmError::NotStiefelWhitney(v.name().to_owned()));
    }
    Ok(p.rename(|v| to(v.degree() as usize)))
}

fn bidegree(m: &Monomial) -> (u32, u32) {
    let (l, r) = split(m);
    (l.degree(), r.degree())
}

fn split(m: &Monomial) -> (Monomial, Monomial) {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &(v, e) in m.factors() {
        match side_of(v) {
            Some((Side::Left, k)) => left.push((stiefel_whitney(k), e)),
            Some((Side::Right, k)) => right.push((stiefel_whitney(k), e)),
            None => unreachable!("tensor polynomials only hold primed classes"),
        }
    }
    (Monomial::from_pairs(left), Monomial::from_pairs(right))
}

impl Add for TensorPolynomial {
    type Output = TensorPolynomial;
    fn add(self, rhs: TensorPolynomial) -> TensorPolynomial {
        TensorPolynomial { poly: self.poly + rhs.poly }
    }
}

impl Mul for TensorPolynomial {
    type Output = TensorPolynomial;
    fn mul(self, rhs: TensorPolynomial) -> TensorPolynomial {
        TensorPolynomial { poly: self.poly * rhs.poly }
    }
}

impl fmt::Display for TensorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (l, r)) in self.pairs().iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{l}⊗{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn psi_generator(k: usize) -> F2Poly {
    let class = |side: fn(usize) -> Variable, i: usize| {
        if i == 0 {
            F2Poly::one()
        } else {
            F2Poly::var(side(i))
        }
    };
    (0..=k).map(|i| class(left_class, i) * class(right_class, k - i)).sum()
}

/// The Whitney-sum coproduct `ψ(w_k) = Σ_{i+j=k} w_i ⊗ w_j`, extended
/// multiplicatively.
pub fn coproduct(p: &F2Poly) -> Result<TensorPolynomial, SymmError> {
    let mut powers: HashMap<(usize, u32), F2Poly> = HashMap::new();
    let mut out = F2Poly::zero();
    for m in p.monomials() {
        let mut acc = F2Poly::one();
        for &(v, e) in m.factors() {
            let k = stiefel_whitney_index(v).ok_or_else(|| SymmError::NotStiefelWhitney(v.name().to_owned()))?;
            let pw = powers.entry((k, e)).or_insert_with(|| psi_generator(k).pow(e));
            acc = &acc * &*pw;
        }
        out += &acc;
    }
    Ok(TensorPolynomial { poly: out })
}

/// The coproduct on `Z/2[w2, w3, …]`, the quotient by `w1`.
pub fn coproduct_bso(p: &F2Poly) -> Result<TensorPolynomial, SymmError> {
    Ok(coproduct(&p.set_zero(stiefel_whitney(1)))?.kill_w1())
}

fn check_homogeneous(p: &F2Poly) -> Result<(), SymmError> {
    if p.is_homogeneous() {
        Ok(())
    } else {
        Err(SymmError::NotHomogeneous)
    }
}

/// Whether `ψ(p) = p ⊗ 1 + 1 ⊗ p`.
pub fn is_primitive(p: &F2Poly) -> Result<bool, SymmError> {
    check_homogeneous(p)?;
    Ok(coproduct(p)? == TensorPolynomial::left(p)? + TensorPolynomial::right(p)?)
}

/// Primitivity in the quotient by `w1`.
pub fn is_primitive_bso(p: &F2Poly) -> Result<bool, SymmError> {
    check_homogeneous(p)?;
    let p = p.set_zero(stiefel_whitney(1));
    Ok(coproduct_bso(&p)? == TensorPolynomial::left(&p)? + TensorPolynomial::right(&p)?)
}
