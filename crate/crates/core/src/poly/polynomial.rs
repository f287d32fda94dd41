use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;

use super::{Coefficient, Monomial, Variable, F2};

/// A sparse polynomial with coefficients in `C`.
///
/// Terms with a zero coefficient are never stored. Over [`F2`] every stored
/// coefficient is therefore one.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<C: Coefficient> {
    terms: BTreeMap<Monomial, C>,
}

pub type F2Poly = Polynomial<F2>;
pub type ZPoly = Polynomial<BigInt>;

impl<C: Coefficient> Default for Polynomial<C> {
    fn default() -> Self {
        Polynomial::zero()
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn from_i64(c: i64) -> Self {
        Polynomial::constant(C::from_i64(c))
    }

    pub fn var(v: Variable) -> Self {
        Polynomial::term(Monomial::var(v), C::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(m, C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Sums an arbitrary sequence of terms; repeated monomials are combined.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.terms.contains_key(m)
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms.keys().flat_map(|m| m.variables()).collect()
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Polynomial::from_terms(self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial { terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect() }
    }

    /// Product with every term above `max_degree` discarded.
    pub fn mul_truncated(&self, other: &Self, max_degree: Option<u32>) -> Self {
        let mut out = Polynomial::zero();
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                if let Some(t) = max_degree {
                    if m.degree() + n.degree() > t {
                        continue;
                    }
                }
                out.add_term(m.mul(n), &a.mul(b));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        self.pow_truncated(k, None)
    }

    pub fn pow_truncated(&self, mut k: u32, max_degree: Option<u32>) -> Self {
        let mut base = self.truncate_degree(max_degree);
        let mut acc = Polynomial::one().truncate_degree(max_degree);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_truncated(&base, max_degree);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_truncated(&base, max_degree);
            }
        }
        acc
    }

    /// Drops every term of total degree above `max_degree`.
    pub fn truncate_degree(&self, max_degree: Option<u32>) -> Self {
        match max_degree {
            None => self.clone(),
            Some(t) => self.filter(|m| m.degree() <= t),
        }
    }

    /// Keeps the terms whose monomial satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Polynomial { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// The sum of the terms of total degree exactly `d`.
    pub fn graded_component(&self, d: u32) -> Self {
        self.filter(|m| m.degree() == d)
    }

    /// All nonzero graded components, by degree.
    pub fn graded_components(&self) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree()).or_default().terms.insert(m.clone(), c.clone());
        }
        out
    }

    /// Image in the quotient by the ideal generated by `kill`: every term
    /// containing one of those variables is dropped.
    pub fn reduce_mod_variables(&self, kill: &[Variable]) -> Self {
        self.filter(|m| !kill.iter().any(|&v| m.contains(v)))
    }

    /// Image modulo `v^bound`.
    pub fn reduce_mod_power(&self, v: Variable, bound: u32) -> Self {
        self.filter(|m| m.exponent(v) < bound)
    }

    /// Sets `v` to zero in the terms where it appears; same as
    /// `reduce_mod_variables(&[v])`.
    pub fn set_zero(&self, v: Variable) -> Self {
        self.reduce_mod_variables(&[v])
    }

    /// Renames variables termwise.
    pub fn rename(&self, rename: impl Fn(Variable) -> Variable) -> Self {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.rename(&rename), c.clone())))
    }

    pub fn swap_variables(&self, a: Variable, b: Variable) -> Self {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.swap(a, b), c.clone())))
    }

    /// Collects coefficients of powers of `v`: `self = Σ_k coeffs[k] · v^k`.
    pub fn coefficients_in(&self, v: Variable) -> Vec<Self> {
        let mut out: Vec<Self> = Vec::new();
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(v);
            let e = e as usize;
            if out.len() <= e {
                out.resize_with(e + 1, Polynomial::zero);
            }
            out[e].add_term(rest, c);
        }
        out
    }

    /// Substitutes `value` for `v` everywhere.
    pub fn evaluate_variable(&self, v: Variable, value: &Self) -> Self {
        let coeffs = self.coefficients_in(v);
        let mut out = Polynomial::zero();
        let mut power = Polynomial::one();
        for (k, c) in coeffs.iter().enumerate() {
            if k > 0 {
                power = &power * value;
            }
            if !c.is_zero() {
                out += &(c * &power);
            }
        }
        out
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Terms sorted in rendering order (ascending degree, graded-lex within).
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &C)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| a.0.display_cmp(b.0));
        t
    }
}

impl ZPoly {
    /// Coefficientwise reduction modulo two.
    pub fn reduce_mod2(&self) -> F2Poly {
        self.map_coefficients(F2::from_bigint)
    }

    /// Exact division of every coefficient by `d`; `None` if some
    /// coefficient is not divisible.
    pub fn exact_div_scalar(&self, d: &BigInt) -> Option<ZPoly> {
        let mut out = ZPoly::zero();
        for (m, c) in &self.terms {
            let (q, r) = num_integer::Integer::div_rem(c, d);
            if !num_traits::Zero::is_zero(&r) {
                return None;
            }
            out.add_term(m.clone(), &q);
        }
        Some(out)
    }
}

impl F2Poly {
    /// The integer polynomial whose coefficients are the 0/1 representatives.
    pub fn lift(&self) -> ZPoly {
        self.map_coefficients(|_| BigInt::from(1))
    }
}

impl<C: Coefficient> From<Variable> for Polynomial<C> {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

impl<C: Coefficient> From<Monomial> for Polynomial<C> {
    fn from(m: Monomial) -> Self {
        Polynomial::monomial(m)
    }
}

impl<C: Coefficient> AddAssign<&Polynomial<C>> for Polynomial<C> {
    fn add_assign(&mut self, rhs: &Polynomial<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl<C: Coefficient> SubAssign<&Polynomial<C>> for Polynomial<C> {
    fn sub_assign(&mut self, rhs: &Polynomial<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &c.neg());
        }
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Add for Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(mut self, rhs: Polynomial<C>) -> Polynomial<C> {
        self += &rhs;
        self
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coefficient> Sub for Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(mut self, rhs: Polynomial<C>) -> Polynomial<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }
}

impl<C: Coefficient> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.mul_truncated(rhs, None)
    }
}

impl<C: Coefficient> Mul for Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> Add<&Polynomial<C>> for Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(mut self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self += rhs;
        self
    }
}

impl<C: Coefficient> Add<Polynomial<C>> for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, mut rhs: Polynomial<C>) -> Polynomial<C> {
        rhs += self;
        rhs
    }
}

impl<C: Coefficient> Sub<&Polynomial<C>> for Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(mut self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self -= rhs;
        self
    }
}

impl<C: Coefficient> Sub<Polynomial<C>> for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Polynomial<C>) -> Polynomial<C> {
        self - &rhs
    }
}

impl<C: Coefficient> Mul<&Polynomial<C>> for Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        &self * rhs
    }
}

impl<C: Coefficient> Mul<Polynomial<C>> for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Polynomial<C>) -> Polynomial<C> {
        self * &rhs
    }
}

impl<C: Coefficient> std::iter::Sum for Polynomial<C> {
    fn sum<I: Iterator<Item = Polynomial<C>>>(iter: I) -> Self {
        let mut acc = Polynomial::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl<C: Coefficient> std::iter::Product for Polynomial<C> {
    fn product<I: Iterator<Item = Polynomial<C>>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let (negative, magnitude) = c.sign_and_magnitude();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&magnitude)?;
            } else if magnitude == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [{}]", C::RING)
    }
}
