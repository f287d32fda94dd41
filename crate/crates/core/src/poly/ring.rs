use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use super::{Coefficient, Monomial, PolyError, Polynomial, Variable};

/// A graded polynomial ring on named generators, optionally truncated above a
/// fixed total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    variables: Vec<Variable>,
    truncation: Option<u32>,
}

impl RingPresentation {
    pub fn new(variables: Vec<Variable>, truncation: Option<u32>) -> Result<Self, PolyError> {
        let mut seen = HashSet::new();
        for v in &variables {
            if !seen.insert(v.name()) {
                return Err(PolyError::DuplicateName(v.name().to_owned()));
            }
        }
        if truncation == Some(0) {
            return Err(PolyError::ZeroTruncation);
        }
        Ok(RingPresentation { variables, truncation })
    }

    /// Polynomial ring on `(name, degree)` generators, no truncation.
    pub fn polynomial(generators: &[(&str, u32)]) -> Result<Self, PolyError> {
        let vars = generators.iter().map(|&(n, d)| Variable::new(n, d)).collect::<Result<Vec<_>, _>>()?;
        RingPresentation::new(vars, None)
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    pub fn variable(&self, name: &str) -> Option<Variable> {
        self.variables.iter().copied().find(|v| v.name() == name)
    }

    pub fn has_variable(&self, v: Variable) -> bool {
        self.variables.contains(&v)
    }

    /// Checks that `p` only uses generators of this ring and respects the
    /// truncation.
    pub fn check<C: Coefficient>(&self, p: &Polynomial<C>) -> Result<(), PolyError> {
        for m in p.monomials() {
            if let Some(v) = m.variables().find(|v| !self.has_variable(*v)) {
                return Err(PolyError::UnknownVariable(v.name().to_owned()));
            }
            if let Some(t) = self.truncation {
                if m.degree() > t {
                    return Err(PolyError::AboveTruncation { degree: m.degree(), truncation: t });
                }
            }
        }
        Ok(())
    }

    pub fn contains<C: Coefficient>(&self, p: &Polynomial<C>) -> bool {
        self.check(p).is_ok()
    }

    /// Applies the truncation.
    pub fn reduce<C: Coefficient>(&self, p: &Polynomial<C>) -> Polynomial<C> {
        p.truncate_degree(self.truncation)
    }

    pub fn mul<C: Coefficient>(&self, p: &Polynomial<C>, q: &Polynomial<C>) -> Polynomial<C> {
        p.mul_truncated(q, self.truncation)
    }

    pub fn pow<C: Coefficient>(&self, p: &Polynomial<C>, k: u32) -> Polynomial<C> {
        p.pow_truncated(k, self.truncation)
    }

    /// Graded-lex comparison using this ring's generator order: total degree
    /// first, then the exponent vectors lexicographically.
    pub fn graded_lex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| a.exponents(&self.variables).cmp(&b.exponents(&self.variables)))
    }

    /// Every monomial of total degree `d`, in descending graded-lex order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.variables.len()];
        self.enumerate(0, d, &mut exps, &mut out);
        out.sort_by(|a, b| self.graded_lex_cmp(b, a));
        out
    }

    fn enumerate(&self, idx: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if idx == self.variables.len() {
            if remaining == 0 {
                out.push(Monomial::from_pairs(self.variables.iter().copied().zip(exps.iter().copied())));
            }
            return;
        }
        let deg = self.variables[idx].degree();
        let mut e = 0;
        while e * deg <= remaining {
            exps[idx] = e;
            self.enumerate(idx + 1, remaining - e * deg, exps, out);
            e += 1;
        }
        exps[idx] = 0;
    }
}

/// A graded ring homomorphism given by the images of the source generators.
#[derive(Clone, Debug)]
pub struct RingMap<C: Coefficient> {
    source: RingPresentation,
    target: RingPresentation,
    images: HashMap<Variable, Polynomial<C>>,
}

impl<C: Coefficient> RingMap<C> {
    /// Every source generator needs an image, homogeneous of the generator's
    /// degree (or zero) and living in the target ring.
    pub fn new<I>(source: RingPresentation, target: RingPresentation, images: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Variable, Polynomial<C>)>,
    {
        let images: HashMap<_, _> = images.into_iter().collect();
        for (v, img) in &images {
            if !source.has_variable(*v) {
                return Err(PolyError::UnknownVariable(v.name().to_owned()));
            }
            target.check(img)?;
            if !img.is_zero() && (!img.is_homogeneous() || img.degree() != Some(v.degree())) {
                return Err(PolyError::ImageDegree { variable: v.name().to_owned(), expected: v.degree() });
            }
        }
        if let Some(v) = source.variables().iter().find(|v| !images.contains_key(v)) {
            return Err(PolyError::MissingImage(v.name().to_owned()));
        }
        Ok(RingMap { source, target, images })
    }

    pub fn identity(ring: RingPresentation) -> Self {
        let images = ring.variables().iter().map(|&v| (v, Polynomial::var(v))).collect();
        RingMap { source: ring.clone(), target: ring, images }
    }

    pub fn source(&self) -> &RingPresentation {
        &self.source
    }

    pub fn target(&self) -> &RingPresentation {
        &self.target
    }

    pub fn image(&self, v: Variable) -> Option<&Polynomial<C>> {
        self.images.get(&v)
    }

    /// Applies the homomorphism to `p`.
    pub fn apply(&self, p: &Polynomial<C>) -> Result<Polynomial<C>, PolyError> {
        let trunc = self.target.truncation();
        let mut powers: HashMap<(Variable, u32), Polynomial<C>> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            let mut acc = Polynomial::constant(c.clone());
            for &(v, e) in m.factors() {
                let img = self.images.get(&v).ok_or_else(|| PolyError::UnknownVariable(v.name().to_owned()))?;
                let pw = powers.entry((v, e)).or_insert_with(|| img.pow_truncated(e, trunc));
                acc = acc.mul_truncated(pw, trunc);
                if acc.is_zero() {
                    break;
                }
            }
            out += &acc;
        }
        Ok(out)
    }
}

/// `f(p)` for a ring map `f`.
pub fn substitute<C: Coefficient>(f: &RingMap<C>, p: &Polynomial<C>) -> Result<Polynomial<C>, PolyError> {
    f.apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::F2Poly;

    #[test]
    fn duplicate_names_rejected() {
        let a = Variable::named("rdup", 1);
        let b = Variable::named("rdup", 2);
        assert!(matches!(RingPresentation::new(vec![a, b], None), Err(PolyError::DuplicateName(_))));
    }

    #[test]
    fn monomial_enumeration_counts() {
        let ring = RingPresentation::polynomial(&[("y1", 1), ("y4", 4), ("y6", 6)]).unwrap();
        // degree 6: y1^6, y1^2 y4, y6
        assert_eq!(ring.monomials_of_degree(6).len(), 3);
        assert_eq!(ring.monomials_of_degree(0), vec![Monomial::one()]);
        let first = &ring.monomials_of_degree(6)[0];
        assert_eq!(first.to_string(), "y1^6");
    }

    #[test]
    fn pi_star_of_y4() {
        let base = RingPresentation::polynomial(&[("y1", 1), ("y4", 4), ("y6", 6)]).unwrap();
        let total = RingPresentation::polynomial(&[("x1", 1), ("x2", 2), ("x4", 4)]).unwrap();
        let x = |n| F2Poly::var(total.variable(n).unwrap());
        let y = |n| base.variable(n).unwrap();
        let f = RingMap::new(
            base.clone(),
            total.clone(),
            [(y("y1"), x("x1")), (y("y4"), x("x2").pow(2) + x("x4")), (y("y6"), x("x2") * x("x4"))],
        )
        .unwrap();
        assert_eq!(substitute(&f, &F2Poly::var(y("y4"))).unwrap(), x("x2").pow(2) + x("x4"));
        let id = RingMap::identity(total.clone());
        let p = x("x1") * x("x4") + x("x2");
        assert_eq!(id.apply(&p).unwrap(), p);
        assert!(matches!(f.apply(&x("x1")), Err(PolyError::UnknownVariable(_))));
    }

    #[test]
    fn inhomogeneous_image_rejected() {
        let base = RingPresentation::polynomial(&[("y1", 1)]).unwrap();
        let total = RingPresentation::polynomial(&[("x1", 1), ("x2", 2)]).unwrap();
        let bad = F2Poly::var(total.variable("x1").unwrap()) + F2Poly::var(total.variable("x2").unwrap());
        let r = RingMap::new(base.clone(), total, [(base.variable("y1").unwrap(), bad)]);
        assert!(matches!(r, Err(PolyError::ImageDegree { .. })));
    }
}
