use std::cmp::Ordering;
use std::fmt;

use super::Variable;

/// A power product of variables in canonical sparse form.
///
/// Factors are kept sorted by variable and never carry a zero exponent, so
/// structural equality is mathematical equality. The total degree is cached.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    degree: u32,
    factors: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Monomial {
        Monomial::power(v, 1)
    }

    pub fn power(v: Variable, exponent: u32) -> Monomial {
        if exponent == 0 {
            return Monomial::one();
        }
        Monomial { degree: v.degree() * exponent, factors: vec![(v, exponent)] }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs; repeated
    /// variables are merged and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (Variable, u32)>>(pairs: I) -> Monomial {
        let mut factors: Vec<(Variable, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_by_key(|&(v, _)| v);
        let mut merged: Vec<(Variable, u32)> = Vec::with_capacity(factors.len());
        for (v, e) in factors {
            match merged.last_mut() {
                Some((last, le)) if *last == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|&(v, e)| v.degree() * e).sum();
        Monomial { degree, factors: merged }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.factors.binary_search_by_key(&v, |&(w, _)| w).map(|i| self.factors[i].1).unwrap_or(0)
    }

    pub fn factors(&self) -> &[(Variable, u32)] {
        &self.factors
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.factors.iter().map(|&(v, _)| v)
    }

    pub fn contains(&self, v: Variable) -> bool {
        self.exponent(v) > 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut factors = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    factors.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&a[i..]);
        factors.extend_from_slice(&b[j..]);
        Monomial { degree: self.degree + other.degree, factors }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial { degree: self.degree * k, factors: self.factors.iter().map(|&(v, e)| (v, e * k)).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.factors.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::from_pairs(self.factors.iter().map(|&(v, e)| (v, e - other.exponent(v)))))
    }

    /// Returns the monomial with `v` removed, together with the exponent it had.
    pub fn split_off(&self, v: Variable) -> (Monomial, u32) {
        match self.factors.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => {
                let e = self.factors[i].1;
                let mut factors = self.factors.clone();
                factors.remove(i);
                (Monomial { degree: self.degree - v.degree() * e, factors }, e)
            }
            Err(_) => (self.clone(), 0),
        }
    }

    /// Rewrites variables through `rename`; used to move a monomial between
    /// isomorphic rings (e.g. into the left tensor factor).
    pub fn rename(&self, rename: impl Fn(Variable) -> Variable) -> Monomial {
        Monomial::from_pairs(self.factors.iter().map(|&(v, e)| (rename(v), e)))
    }

    /// Swaps two variables (a transposition acting on exponent vectors).
    pub fn swap(&self, a: Variable, b: Variable) -> Monomial {
        self.rename(|v| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        })
    }

    /// Exponent vector with respect to an ordered list of variables.
    pub fn exponents(&self, order: &[Variable]) -> Vec<u32> {
        order.iter().map(|&v| self.exponent(v)).collect()
    }

    /// Rendering order: ascending degree, then lexicographically descending
    /// exponents with variables compared by name.
    pub(crate) fn display_cmp(&self, other: &Monomial) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let key = |m: &Monomial| {
                let mut f: Vec<_> = m.factors.iter().map(|&(v, e)| (v.display_key(), e)).collect();
                f.sort();
                f
            };
            let (a, b) = (key(self), key(other));
            // lex: the monomial with a larger exponent at the first differing
            // (smallest) variable comes first
            for (x, y) in a.iter().zip(b.iter()) {
                match x.0.cmp(&y.0) {
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Equal => match y.1.cmp(&x.1) {
                        Ordering::Equal => continue,
                        o => return o,
                    },
                }
            }
            b.len().cmp(&a.len())
        })
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut factors = self.factors.clone();
        factors.sort_by_key(|&(v, _)| v.display_key());
        for (i, (v, e)) in factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str, d: u32) -> Variable {
        Variable::named(name, d)
    }

    #[test]
    fn canonical_form_merges_and_drops_zeros() {
        let x = v("mx", 1);
        let y = v("my", 2);
        let m = Monomial::from_pairs([(y, 1), (x, 2), (y, 0), (x, 1)]);
        assert_eq!(m.exponent(x), 3);
        assert_eq!(m.exponent(y), 1);
        assert_eq!(m.factors().len(), 2);
        assert_eq!(m.degree(), 5);
    }

    #[test]
    fn mul_and_division() {
        let x = v("mx", 1);
        let y = v("my", 2);
        let a = Monomial::from_pairs([(x, 2), (y, 1)]);
        let b = Monomial::from_pairs([(x, 1)]);
        let p = a.mul(&b);
        assert_eq!(p.exponent(x), 3);
        assert_eq!(p.degree(), 5);
        assert_eq!(p.checked_div(&a), Some(b.clone()));
        assert_eq!(b.checked_div(&a), None);
    }

    #[test]
    fn rendering_is_name_ordered() {
        let w2 = v("w2", 2);
        let w10 = v("w10", 10);
        let m = Monomial::from_pairs([(w10, 1), (w2, 3)]);
        assert_eq!(m.to_string(), "w2^3*w10");
        assert_eq!(Monomial::one().to_string(), "1");
    }
}
