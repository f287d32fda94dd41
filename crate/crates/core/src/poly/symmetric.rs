use std::collections::HashMap;

use super::{Coefficient, Monomial, PolyError, Polynomial, Variable};

/// The `k`-th elementary symmetric polynomial in `xs` (`e_0 = 1`).
pub fn elementary_symmetric<C: Coefficient>(xs: &[Variable], k: usize) -> Polynomial<C> {
    if k > xs.len() {
        return Polynomial::zero();
    }
    let mut out = Polynomial::zero();
    let mut chosen = Vec::with_capacity(k);
    fn walk<C: Coefficient>(
        xs: &[Variable],
        start: usize,
        k: usize,
        chosen: &mut Vec<Variable>,
        out: &mut Polynomial<C>,
    ) {
        if chosen.len() == k {
            out.add_term(Monomial::from_pairs(chosen.iter().map(|&v| (v, 1))), &C::one());
            return;
        }
        for i in start..xs.len() {
            chosen.push(xs[i]);
            walk(xs, i + 1, k, chosen, out);
            chosen.pop();
        }
    }
    walk(xs, 0, k, &mut chosen, &mut out);
    out
}

/// Whether `p` is invariant under the adjacent transpositions of `xs`, which
/// generate the full symmetric group.
pub fn is_symmetric<C: Coefficient>(p: &Polynomial<C>, xs: &[Variable]) -> bool {
    xs.windows(2).all(|w| p.swap_variables(w[0], w[1]) == *p)
}

/// Rewrites a symmetric polynomial in `xs` as a polynomial in the elementary
/// symmetric functions, with `sigmas[k-1]` standing for `e_k(xs)`.
///
/// Repeatedly removes the lex-leading term `c·x^d` (with `d` non-increasing)
/// by subtracting `c · e_1^{d_1-d_2} ⋯ e_N^{d_N}`.
pub fn express_in_elementary<C: Coefficient>(
    p: &Polynomial<C>,
    xs: &[Variable],
    sigmas: &[Variable],
) -> Result<Polynomial<C>, PolyError> {
    if xs.len() != sigmas.len() {
        return Err(PolyError::ArityMismatch { variables: xs.len(), elementary: sigmas.len() });
    }
    if let Some(v) = p.variables().into_iter().find(|v| !xs.contains(v)) {
        return Err(PolyError::UnknownVariable(v.name().to_owned()));
    }
    if !is_symmetric(p, xs) {
        return Err(PolyError::NotSymmetric);
    }

    let n = xs.len();
    let elementary: Vec<Polynomial<C>> = (1..=n).map(|k| elementary_symmetric(xs, k)).collect();
    let mut powers: HashMap<(usize, u32), Polynomial<C>> = HashMap::new();
    let mut rest = p.clone();
    let mut out = Polynomial::zero();

    while !rest.is_zero() {
        let (lead, coeff) = rest
            .terms()
            .max_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.exponents(xs).cmp(&b.0.exponents(xs))))
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("nonzero polynomial has a term");
        let d = lead.exponents(xs);
        if d.windows(2).any(|w| w[0] < w[1]) {
            // Only reachable when the leading term is not of partition shape,
            // which the symmetry check rules out.
            return Err(PolyError::NotSymmetric);
        }
        let mut sigma_exps = Vec::with_capacity(n);
        let mut product = Polynomial::constant(coeff.clone());
        for k in 0..n {
            let e = d[k] - d.get(k + 1).copied().unwrap_or(0);
            sigma_exps.push((sigmas[k], e));
            if e > 0 {
                let pw = powers.entry((k, e)).or_insert_with(|| elementary[k].pow(e));
                product = &product * &*pw;
            }
        }
        rest -= &product;
        out.add_term(Monomial::from_pairs(sigma_exps), &coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{RingMap, RingPresentation, ZPoly};

    fn setup(n: usize) -> (Vec<Variable>, Vec<Variable>) {
        let xs = (1..=n).map(|i| Variable::named(&format!("t{i}"), 1)).collect();
        let ss = (1..=n).map(|i| Variable::named(&format!("e{i}"), i as u32)).collect();
        (xs, ss)
    }

    fn back_substitute(q: &ZPoly, xs: &[Variable], ss: &[Variable]) -> ZPoly {
        let src = RingPresentation::new(ss.to_vec(), None).unwrap();
        let tgt = RingPresentation::new(xs.to_vec(), None).unwrap();
        let f =
            RingMap::new(src, tgt, ss.iter().enumerate().map(|(k, &s)| (s, elementary_symmetric(xs, k + 1)))).unwrap();
        f.apply(q).unwrap()
    }

    #[test]
    fn newton_two_variables() {
        let (xs, ss) = setup(2);
        let p = ZPoly::var(xs[0]).pow(2) + ZPoly::var(xs[1]).pow(2);
        let q = express_in_elementary(&p, &xs, &ss).unwrap();
        let expected = ZPoly::var(ss[0]).pow(2) - ZPoly::var(ss[1]).scale(&2.into());
        assert_eq!(q, expected);
    }

    #[test]
    fn cubes_three_variables() {
        let (xs, ss) = setup(3);
        let p: ZPoly = xs.iter().map(|&x| ZPoly::var(x).pow(3)).sum();
        let q = express_in_elementary(&p, &xs, &ss).unwrap();
        // independent check: expand back into the t's
        assert_eq!(back_substitute(&q, &xs, &ss), p);
        let s = |i: usize| ZPoly::var(ss[i]);
        let expected = s(0).pow(3) - (s(0) * s(1)).scale(&3.into()) + s(2).scale(&3.into());
        assert_eq!(q, expected);
    }

    #[test]
    fn elementary_is_fixed_point() {
        let (xs, ss) = setup(3);
        let e2: ZPoly = elementary_symmetric(&xs, 2);
        assert_eq!(express_in_elementary(&e2, &xs, &ss).unwrap(), ZPoly::var(ss[1]));
    }

    #[test]
    fn asymmetric_input_rejected() {
        let (xs, ss) = setup(2);
        let p = ZPoly::var(xs[0]);
        assert!(matches!(express_in_elementary(&p, &xs, &ss), Err(PolyError::NotSymmetric)));
    }
}
