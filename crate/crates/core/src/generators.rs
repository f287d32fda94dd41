//! The characteristic numbers `S_n(PE_r) = 1 + (-1)^{r+1} C(2n, r)` of the
//! CP²-bundles `PE_r`, an independent computation of them through the
//! antisymmetrization map, and their gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arithmetic::{binomial, factorize, p_adic_valuation, prime_power};
use crate::poly::{Monomial, Variable, ZPoly};
use crate::report::Verification;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("r = {r} outside 1..={n}")]
    OutOfRange { n: u64, r: u64 },
    #[error("division by (x1 - x2) x1 x2 leaves remainder {remainder}")]
    NonzeroRemainder { remainder: String },
}

/// `x_i` in `Z[x1, x2, x3]`, degree 2.
pub fn chern_root(i: usize) -> Variable {
    Variable::named(&format!("x{i}"), 2)
}

fn roots() -> [Variable; 3] {
    [chern_root(1), chern_root(2), chern_root(3)]
}

fn check_range(n: u64, r: u64) -> Result<(), GenError> {
    if n == 0 || r == 0 || r > n {
        return Err(GenError::OutOfRange { n, r });
    }
    Ok(())
}

/// `1 + (-1)^{r+1} C(2n, r)`.
pub fn s_n_pe(n: u64, r: u64) -> Result<BigInt, GenError> {
    check_range(n, r)?;
    let c = binomial(2 * n, r);
    Ok(if r % 2 == 1 { BigInt::one() + c } else { BigInt::one() - c })
}

const PERMUTATIONS: [([usize; 3], i64); 6] =
    [([0, 1, 2], 1), ([1, 0, 2], -1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 2, 0], 1), ([2, 0, 1], 1)];

/// `x1^α x2^β x3^γ ↦ Σ_σ sign(σ) x_{σ(1)}^α x_{σ(2)}^β x_{σ(3)}^γ`.
pub fn antisymmetrize(p: &ZPoly) -> ZPoly {
    let xs = roots();
    let mut out = ZPoly::zero();
    for (perm, sign) in PERMUTATIONS {
        let image = p.rename(|v| match xs.iter().position(|&x| x == v) {
            Some(i) => xs[perm[i]],
            None => v,
        });
        out += &image.scale(&BigInt::from(sign));
    }
    out
}

/// `ω = A(x1 x3²)` with `x3 = 0`.
pub fn omega_restricted() -> ZPoly {
    let [x1, _, x3] = roots().map(ZPoly::var);
    antisymmetrize(&(x1 * x3.pow(2))).set_zero(chern_root(3))
}

/// `A(x1 s_n(τ))` with `x3 = 0`, divided by `(x1 - x2) x1 x2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntisymmetricQuotient {
    pub numerator: ZPoly,
    pub quotient: ZPoly,
    pub remainder_zero: bool,
}

/// `(q, r)` with `p = q·(x1 - x2) x1 x2 + r`, dividing by `x1`, then `x2`,
/// then synthetically by `x1 - x2` over `Z[x2]`. Terms that do not divide
/// at a stage stay in `r`.
pub fn divide_by_omega(p: &ZPoly) -> (ZPoly, ZPoly) {
    let [x1, x2, _] = roots();
    let shift = Monomial::from_pairs([(x1, 1), (x2, 1)]);
    let mut divisible = ZPoly::zero();
    for (m, c) in p.terms() {
        if let Some(q) = m.checked_div(&shift) {
            divisible.add_term(q, c);
        }
    }
    // Horner in x1: q_{k-1} = c_k + x2 q_k
    let coeffs = divisible.coefficients_in(x1);
    let mut quotient = ZPoly::zero();
    let mut carry = ZPoly::zero();
    let y = ZPoly::var(x2);
    for k in (1..coeffs.len()).rev() {
        carry = &coeffs[k] + &(&y * &carry);
        quotient += &carry.mul_monomial(&Monomial::power(x1, k as u32 - 1));
    }
    let omega = (ZPoly::var(x1) - ZPoly::var(x2)) * ZPoly::var(x1) * ZPoly::var(x2);
    let remainder = p - &(&quotient * &omega);
    (quotient, remainder)
}

/// `s_n(τ) = (x1 - x3)^{2n} + (x2 - x3)^{2n}`.
pub fn sn_tau(n: u64) -> ZPoly {
    let [x1, x2, x3] = roots().map(ZPoly::var);
    (&x1 - &x3).pow(2 * n as u32) + (&x2 - &x3).pow(2 * n as u32)
}

pub fn antisymmetric_quotient(n: u64) -> AntisymmetricQuotient {
    let x1 = ZPoly::var(chern_root(1));
    let numerator = antisymmetrize(&(x1 * sn_tau(n))).set_zero(chern_root(3));
    let (quotient, remainder) = divide_by_omega(&numerator);
    AntisymmetricQuotient { numerator, quotient, remainder_zero: remainder.is_zero() }
}

/// The coefficient of `x1^{r-1} x2^{2n-r-1}` in the quotient.
pub fn s_n_pe_oracle(n: u64, r: u64) -> Result<BigInt, GenError> {
    check_range(n, r)?;
    let q = antisymmetric_quotient(n);
    if !q.remainder_zero {
        let (_, remainder) = divide_by_omega(&q.numerator);
        return Err(GenError::NonzeroRemainder { remainder: remainder.to_string() });
    }
    Ok(q.quotient.coefficient(&quotient_monomial(n, r)))
}

fn quotient_monomial(n: u64, r: u64) -> Monomial {
    Monomial::from_pairs([(chern_root(1), r as u32 - 1), (chern_root(2), (2 * n - r - 1) as u32)])
}

/// Which gcd the generator criterion predicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    /// `2n + 1` is not a prime power.
    One,
    /// `2n + 1` is a power of this prime.
    Prime(u64),
}

impl Criterion {
    pub fn for_degree(n: u64) -> Criterion {
        match prime_power(2 * n + 1) {
            Some((p, _)) => Criterion::Prime(p),
            None => Criterion::One,
        }
    }

    pub fn expected_gcd(self) -> BigInt {
        match self {
            Criterion::One => BigInt::one(),
            Criterion::Prime(p) => BigInt::from(p),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorReport {
    pub n: u64,
    /// `S_n(PE_r)` for `r = 1..=n`.
    pub values: Vec<BigInt>,
    pub gcd: BigInt,
    pub criterion: Criterion,
    /// The gcd equals the criterion's prediction.
    pub consistent: bool,
    /// `S_n(PE_r) - S_n(PE_{r+1}) = (-1)^{r+1} C(2n+1, r+1)` for all `r < n`.
    pub difference_identity: bool,
}

pub fn gcd_report(n: u64) -> Result<GeneratorReport, GenError> {
    let values = (1..=n).map(|r| s_n_pe(n, r)).collect::<Result<Vec<_>, _>>()?;
    let gcd = values.iter().fold(BigInt::zero(), |g, v| g.gcd(v)).abs();
    let criterion = Criterion::for_degree(n);
    let consistent = gcd == criterion.expected_gcd();
    let difference_identity = (1..n).all(|r| {
        let diff = &values[r as usize - 1] - &values[r as usize];
        let c = binomial(2 * n + 1, r + 1);
        diff == if r % 2 == 1 { c } else { -c }
    });
    Ok(GeneratorReport { n, values, gcd, criterion, consistent, difference_identity })
}

/// For `2n + 1 = p^s q` with `q > 1` and `p ∤ q`: `p ∤ C(p^s q, p^s)`, for
/// each prime `p` dividing `2n + 1`. For `2n + 1 = p^s`:
/// `p² ∤ C(p^s, p^{s-1})`.
pub fn nondivisibility_witnesses(n: u64) -> Verification {
    let m = 2 * n + 1;
    let mut report = Verification::new();
    match prime_power(m) {
        Some((p, s)) => {
            let c = binomial(m, p.pow(s - 1));
            report.compare(format!("v_{p}(C({m}, {})) < 2", p.pow(s - 1)), &true, &(p_adic_valuation(&c, p) < 2));
        }
        None => {
            for (p, s) in factorize(m) {
                let ps = p.pow(s);
                let c = binomial(m, ps);
                report.compare(format!("v_{p}(C({m}, {ps})) = 0"), &0, &p_adic_valuation(&c, p));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn closed_form_examples() {
        for n in 1..20 {
            assert_eq!(s_n_pe(n, 1).unwrap(), z(2 * n as i64 + 1));
        }
        assert_eq!(s_n_pe(4, 2).unwrap(), z(-27));
        assert_eq!(s_n_pe(4, 3).unwrap(), z(57));
        assert_eq!(s_n_pe(4, 5), Err(GenError::OutOfRange { n: 4, r: 5 }));
        assert!(s_n_pe(4, 0).is_err());
    }

    #[test]
    fn omega_sign() {
        let [x1, x2, _] = roots().map(ZPoly::var);
        assert_eq!(omega_restricted(), (&x1 - &x2) * &x1 * x2);
    }

    #[test]
    fn antisymmetrization_kills() {
        let [x1, x2, x3] = roots().map(ZPoly::var);
        for n in 1..4 {
            assert!(antisymmetrize(&(&x1 * &(&x2 - &x3).pow(2 * n))).is_zero());
        }
        let sym = &x1 * &x2 * x3.clone() + x1.pow(2) + x2.pow(2) + x3.pow(2);
        assert!(antisymmetrize(&sym).is_zero());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(s_n_pe_oracle(1, 1).unwrap(), z(3));
        assert_eq!(s_n_pe_oracle(4, 2).unwrap(), z(-27));
        assert_eq!(s_n_pe_oracle(3, 3).unwrap(), z(21));
    }

    #[test]
    fn oracle_matches_closed_form() {
        for n in 1..=10 {
            let q = antisymmetric_quotient(n);
            assert!(q.remainder_zero);
            for k in 1..2 * n {
                let c = binomial(2 * n, k);
                let expected = if k % 2 == 0 { BigInt::one() - c } else { BigInt::one() + c };
                let m = Monomial::from_pairs([(chern_root(1), k as u32 - 1), (chern_root(2), (2 * n - k - 1) as u32)]);
                assert_eq!(q.quotient.coefficient(&m), expected, "n={n} k={k}");
            }
            for r in 1..=n {
                assert_eq!(s_n_pe_oracle(n, r).unwrap(), s_n_pe(n, r).unwrap());
            }
        }
    }

    #[test]
    fn division_reports_remainder() {
        let x1 = ZPoly::var(chern_root(1));
        let (_, r) = divide_by_omega(&x1.pow(3));
        assert_eq!(r, x1.pow(3));
    }

    #[test]
    fn gcd_examples() {
        let r = gcd_report(4).unwrap();
        assert_eq!(r.values, vec![z(9), z(-27), z(57), z(-69)]);
        assert_eq!(r.gcd, z(3));
        assert_eq!(r.criterion, Criterion::Prime(3));
        assert!(r.consistent && r.difference_identity);
        let r = gcd_report(7).unwrap();
        assert_eq!((r.gcd.clone(), r.criterion), (z(1), Criterion::One));
        let r = gcd_report(1).unwrap();
        assert_eq!((r.values.clone(), r.gcd.clone()), (vec![z(3)], z(3)));
    }

    #[test]
    fn gcd_range() {
        for n in 1..=200 {
            let r = gcd_report(n).unwrap();
            assert!(r.consistent, "n={n}");
            assert!(r.difference_identity, "n={n}");
            assert!(nondivisibility_witnesses(n).passed(), "n={n}");
        }
    }

    fn poly3() -> impl Strategy<Value = ZPoly> {
        proptest::collection::vec(((0u32..5, 0u32..5, 0u32..5), -5i64..5), 0..5).prop_map(|terms| {
            let xs = roots();
            terms
                .into_iter()
                .filter(|((a, b, c), _)| a + b + c <= 6)
                .map(|((a, b, c), k)| {
                    ZPoly::term(Monomial::from_pairs([(xs[0], a), (xs[1], b), (xs[2], c)]), BigInt::from(k))
                })
                .sum()
        })
    }

    proptest! {
        #[test]
        fn antisymmetrize_alternates(p in poly3()) {
            let a = antisymmetrize(&p);
            prop_assert_eq!(a.swap_variables(chern_root(1), chern_root(2)), -&a);
            prop_assert_eq!(a.swap_variables(chern_root(2), chern_root(3)), -&a);
        }
    }
}
