//! Integer kernels: binomial parity, the odd solutions of `2a + 3b = n`,
//! prime-power detection, and the unoriented sequence `z_n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{F2Poly, Variable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("n = {0} must be odd")]
    EvenInput(u64),
    #[error("n = {0} is below the smallest admissible value 5")]
    TooSmall(u64),
    #[error("n = {0} has the form 2^k - 1")]
    MersenneForm(u64),
    #[error("z-sequence needs max_n >= 3, got {0}")]
    ShortSequence(usize),
    #[error("index {n} lies outside the computed sequence (max {max})")]
    OutOfRange { n: usize, max: usize },
    #[error("precondition 3*2^{j} < {n} fails")]
    DoublingPrecondition { n: usize, j: u32 },
    #[error("n = {0} must be at least 2")]
    IaTooSmall(usize),
}

/// `C(n, k) mod 2` by Lucas: odd iff the bits of `k` sit inside those of `n`.
pub fn binom_parity(n: u64, k: u64) -> u8 {
    (k <= n && k & !n == 0) as u8
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Whether `m` is of the form `2^k - 1` (including 1 and 3).
pub fn is_mersenne_form(m: u64) -> bool {
    m != 0 && (m & (m + 1)) == 0
}

/// The coefficient `n (a+b-1)! / (a! b!)` of `w2^a w3^b` in `s_n` (up to
/// sign), or `None` when the division is not exact or `a = b = 0`.
pub fn girard_coefficient(n: u64, a: u64, b: u64) -> Option<BigInt> {
    if a + b == 0 {
        return None;
    }
    let num = BigInt::from(n) * factorial(a + b - 1);
    let den = factorial(a) * factorial(b);
    let (q, r) = num.div_rem(&den);
    r.is_zero().then_some(q)
}

/// `a, b` odd, `2a + 3b = n` and `n (a+b-1)!/(a! b!)` odd.
pub fn satisfies_bed(n: u64, a: u64, b: u64) -> bool {
    a % 2 == 1 && b % 2 == 1 && 2 * a + 3 * b == n && girard_coefficient(n, a, b).is_some_and(|c| c.is_odd())
}

/// The constructive odd-coefficient solution for odd `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BinomSolution {
    pub n: u64,
    pub a: u64,
    pub b: u64,
    pub i: u32,
    pub j: u32,
}

impl BinomSolution {
    /// Big-integer check of every stated property.
    pub fn verify(&self) -> bool {
        satisfies_bed(self.n, self.a, self.b) && self.a + self.b == (1u64 << (self.i - self.j)) * ((1u64 << self.j) - 1)
    }
}

/// Picks `i` with `2^i < n < 2^{i+1}` and `j` with
/// `2^{i+1} - 2^{i-j+1} < n < 2^{i+1} - 2^{i-j}`, then
/// `a = 3·2^i - 3·2^{i-j} - n`, `b = n - 2^{i+1} + 2^{i-j+1}`.
pub fn lemma_binom_solve(n: u64) -> Result<BinomSolution, ArithError> {
    if n % 2 == 0 {
        return Err(ArithError::EvenInput(n));
    }
    if is_mersenne_form(n) {
        return Err(ArithError::MersenneForm(n));
    }
    if n < 5 {
        return Err(ArithError::TooSmall(n));
    }
    let i = 63 - n.leading_zeros();
    let top = 1i128 << (i + 1);
    let n_ = n as i128;
    for j in 1..i {
        let lo = top - (1i128 << (i - j + 1));
        let hi = top - (1i128 << (i - j));
        if lo < n_ && n_ < hi {
            let a = 3 * (1i128 << i) - 3 * (1i128 << (i - j)) - n_;
            let b = n_ - lo;
            return Ok(BinomSolution { n, a: a as u64, b: b as u64, i, j });
        }
    }
    // Odd n in (2^i, 2^{i+1}) lands strictly inside one of the intervals
    // unless n = 2^{i+1} - 1.
    Err(ArithError::MersenneForm(n))
}

/// The `(a, b)` with smallest `b` satisfying [`satisfies_bed`].
pub fn minimal_bed_solution(n: u64) -> Option<(u64, u64)> {
    (1..=n / 3)
        .step_by(2)
        .filter(|&b| (n - 3 * b) % 2 == 0)
        .map(|b| ((n - 3 * b) / 2, b))
        .find(|&(a, b)| satisfies_bed(n, a, b))
}

/// The `(a, b)` with smallest `b`, `a >= 0` arbitrary, `2a + 3b = n` and odd
/// Girard coefficient.
pub fn minimal_odd_girard_pair(n: u64) -> Option<(u64, u64)> {
    (0..=n / 3)
        .filter(|&b| (n - 3 * b) % 2 == 0)
        .map(|b| ((n - 3 * b) / 2, b))
        .find(|&(a, b)| girard_coefficient(n, a, b).is_some_and(|c| c.is_odd()))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(m: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if m < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if m % p == 0 {
            return m == p;
        }
    }
    let s = (m - 1).trailing_zeros();
    let d = (m - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, m);
        if x == 1 || x == m - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, m);
            if x == m - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Largest `r` with `r^k <= m`.
pub fn integer_root(m: u64, k: u32) -> u64 {
    if k == 1 || m < 2 {
        return m;
    }
    let mut r = (m as f64).powf(1.0 / k as f64) as u64;
    let fits = |r: u64| r.checked_pow(k).is_some_and(|v| v <= m);
    while !fits(r) {
        r -= 1;
    }
    while fits(r + 1) {
        r += 1;
    }
    r
}

/// `Some((p, s))` with `m = p^s`, `p` prime, or `None`.
pub fn prime_power(m: u64) -> Option<(u64, u32)> {
    if m < 2 {
        return None;
    }
    let max_s = 63 - m.leading_zeros();
    for s in (1..=max_s.max(1)).rev() {
        let r = integer_root(m, s);
        if r.checked_pow(s) == Some(m) && is_prime(r) {
            return Some((r, s));
        }
    }
    None
}

/// Prime factorisation by trial division, ascending primes.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut s = 0;
            while m % p == 0 {
                m /= p;
                s += 1;
            }
            out.push((p, s));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Exponent of `p` in `x` (`u32::MAX` for zero).
pub fn p_adic_valuation(x: &BigInt, p: u64) -> u32 {
    if x.is_zero() {
        return u32::MAX;
    }
    let p = BigInt::from(p);
    let mut x = x.clone();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

/// The generators `y2`, `y3` of the unoriented base ring.
pub fn y2() -> Variable {
    Variable::named("y2", 2)
}

pub fn y3() -> Variable {
    Variable::named("y3", 3)
}

/// `z_1, …, z_max` from `z_1 = 0, z_2 = 1, z_3 = 0`,
/// `z_n = y2 z_{n-2} + y3 z_{n-3}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSequence {
    values: Vec<F2Poly>,
}

impl ZSequence {
    pub fn max_n(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, n: usize) -> Option<&F2Poly> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    fn at(&self, n: usize) -> Result<&F2Poly, ArithError> {
        self.get(n).ok_or(ArithError::OutOfRange { n, max: self.max_n() })
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &F2Poly)> {
        self.values.iter().enumerate().map(|(i, z)| (i + 1, z))
    }

    /// Indices `n` with `z_n = 0`.
    pub fn vanishing(&self) -> Vec<usize> {
        self.iter().filter(|(_, z)| z.is_zero()).map(|(n, _)| n).collect()
    }
}

pub fn z_sequence(max_n: usize) -> Result<ZSequence, ArithError> {
    if max_n < 3 {
        return Err(ArithError::ShortSequence(max_n));
    }
    let (y2, y3) = (F2Poly::var(y2()), F2Poly::var(y3()));
    let mut values = vec![F2Poly::zero(), F2Poly::one(), F2Poly::zero()];
    for n in 4..=max_n {
        let z = &y2 * &values[n - 3] + &y3 * &values[n - 4];
        values.push(z);
    }
    Ok(ZSequence { values })
}

/// `z_n = y2^{2^j} z_{n-2^{j+1}} + y3^{2^j} z_{n-3·2^j}`.
pub fn verify_mf(seq: &ZSequence, n: usize, j: u32) -> Result<bool, ArithError> {
    let step = 1usize.checked_shl(j).filter(|s| 3 * s < n);
    let Some(step) = step else {
        return Err(ArithError::DoublingPrecondition { n, j });
    };
    let e = step as u32;
    let rhs = F2Poly::var(y2()).pow(e) * seq.at(n - 2 * step)?.clone()
        + F2Poly::var(y3()).pow(e) * seq.at(n - 3 * step)?.clone();
    Ok(*seq.at(n)? == rhs)
}

/// `z_n ≡ y3^{2^i - 1} y2^{α} mod y3^{2^i}` with `i` the number of trailing
/// ones of `n` and `α = (n - 3(2^i - 1) - 2)/2`.
pub fn verify_ia(seq: &ZSequence, n: usize) -> Result<bool, ArithError> {
    if n < 2 {
        return Err(ArithError::IaTooSmall(n));
    }
    if is_mersenne_form(n as u64) {
        return Err(ArithError::MersenneForm(n as u64));
    }
    let i = n.trailing_ones();
    let ones = (1usize << i) - 1;
    let alpha = (n - 3 * ones - 2) / 2;
    let expected = F2Poly::var(y3()).pow(ones as u32) * F2Poly::var(y2()).pow(alpha as u32);
    let reduced = seq.at(n)?.reduce_mod_power(y3(), 1 << i);
    Ok(reduced == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parity_examples() {
        assert_eq!(binom_parity(4, 2), 0);
        assert_eq!(binom_parity(9, 0), 1);
        assert_eq!(binom_parity(3, 5), 0);
        // 2^p m - 1 choose x is odd for x < 2^p
        for p in 1..6u32 {
            for m in 1..5u64 {
                for x in 0..(1u64 << p) {
                    assert_eq!(binom_parity((1 << p) * m - 1, x), 1);
                }
            }
        }
    }

    #[test]
    fn parity_matches_bigint() {
        for n in 0..=300u64 {
            for k in 0..=n {
                let odd = binomial(n, k).is_odd() as u8;
                assert_eq!(binom_parity(n, k), odd, "C({n},{k})");
            }
        }
    }

    #[test]
    fn lemma_binom_small_cases() {
        let s = lemma_binom_solve(9).unwrap();
        assert_eq!((s.a, s.b, s.i, s.j), (3, 1, 3, 1));
        let s = lemma_binom_solve(5).unwrap();
        assert_eq!((s.a, s.b, s.i, s.j), (1, 1, 2, 1));
        assert_eq!(lemma_binom_solve(7), Err(ArithError::MersenneForm(7)));
        assert_eq!(lemma_binom_solve(8), Err(ArithError::EvenInput(8)));
    }

    #[test]
    fn lemma_binom_range() {
        for n in (5..=1001u64).step_by(2).filter(|&n| !is_mersenne_form(n)) {
            let s = lemma_binom_solve(n).unwrap();
            assert!(s.verify(), "{s:?}");
        }
    }

    #[test]
    fn minimal_solution_can_differ_from_construction() {
        assert_eq!(minimal_bed_solution(21), Some((9, 1)));
        let s = lemma_binom_solve(21).unwrap();
        assert_eq!((s.a, s.b), (3, 5));
        assert_eq!(minimal_odd_girard_pair(3), Some((0, 1)));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(15), None);
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(1 << 40), Some((2, 40)));
        assert_eq!(prime_power(3u64.pow(40)), Some((3, 40)));
        assert_eq!(prime_power(18446744073709551557), Some((18446744073709551557, 1)));
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn prime_power_matches_factorization() {
        for m in 2..5000u64 {
            let f = factorize(m);
            let expected = (f.len() == 1).then(|| f[0]);
            assert_eq!(prime_power(m), expected, "{m}");
        }
    }

    #[test]
    fn z_examples() {
        let z = z_sequence(64).unwrap();
        let (y2, y3) = (F2Poly::var(y2()), F2Poly::var(y3()));
        assert_eq!(z.get(5), Some(&y3));
        assert_eq!(z.get(6), Some(&y2.pow(2)));
        assert!(z.get(15).unwrap().is_zero());
        assert_eq!(z.vanishing(), vec![1, 3, 7, 15, 31, 63]);
        for (n, zn) in z.iter().filter(|(_, z)| !z.is_zero()) {
            assert!(zn.is_homogeneous());
            assert_eq!(zn.degree(), Some(n as u32 - 2));
        }
    }

    #[test]
    fn doubling_and_leading_terms() {
        let z = z_sequence(64).unwrap();
        assert!(verify_mf(&z, 10, 1).unwrap());
        assert!(verify_mf(&z, 20, 2).unwrap());
        assert!(verify_mf(&z, 7, 2).is_err());
        for n in 1..=64 {
            for j in 0..6 {
                if 3 << j < n {
                    assert!(verify_mf(&z, n, j).unwrap(), "n={n} j={j}");
                }
            }
        }
        assert!(verify_ia(&z, 2).unwrap());
        assert!(verify_ia(&z, 5).unwrap());
        assert_eq!(z.get(13).unwrap().reduce_mod_power(y3(), 2), F2Poly::var(y3()) * F2Poly::var(y2()).pow(4));
        for n in (2..=64).filter(|&n| !is_mersenne_form(n as u64)) {
            assert!(verify_ia(&z, n).unwrap(), "n={n}");
        }
        assert!(verify_ia(&z, 15).is_err());
    }

    #[test]
    fn valuations() {
        assert_eq!(p_adic_valuation(&BigInt::from(72), 2), 3);
        assert_eq!(p_adic_valuation(&BigInt::from(-27), 3), 3);
        assert_eq!(p_adic_valuation(&BigInt::from(5), 3), 0);
    }

    proptest! {
        #[test]
        fn root_is_floor(m in 0u64..u64::MAX, k in 1u32..8) {
            let r = integer_root(m, k);
            prop_assert!(r.checked_pow(k).unwrap() <= m);
            prop_assert!((r + 1).checked_pow(k).map_or(true, |v| v > m));
        }
    }
}
