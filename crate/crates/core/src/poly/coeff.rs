use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Which coefficient ring a polynomial lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoeffRing {
    F2,
    Integer,
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::F2 => f.write_str("F2"),
            CoeffRing::Integer => f.write_str("Z"),
        }
    }
}

/// Coefficient arithmetic needed by [`Polynomial`](super::Polynomial).
pub trait Coefficient: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    const RING: CoeffRing;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `(is_negative, magnitude)` used by the polynomial renderer.
    fn sign_and_magnitude(&self) -> (bool, String);
}

/// An element of the field with two elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct F2(bool);

impl F2 {
    pub const ZERO: F2 = F2(false);
    pub const ONE: F2 = F2(true);

    pub fn from_parity(odd: bool) -> F2 {
        F2(odd)
    }

    pub fn value(self) -> u8 {
        self.0 as u8
    }
}

impl fmt::Debug for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl Coefficient for F2 {
    const RING: CoeffRing = CoeffRing::F2;

    fn zero() -> Self {
        F2::ZERO
    }
    fn one() -> Self {
        F2::ONE
    }
    fn from_i64(v: i64) -> Self {
        F2(v.rem_euclid(2) == 1)
    }
    fn from_bigint(v: &BigInt) -> Self {
        F2(v.bit(0))
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn add_assign(&mut self, other: &Self) {
        self.0 ^= other.0;
    }
    fn mul(&self, other: &Self) -> Self {
        F2(self.0 & other.0)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn sign_and_magnitude(&self) -> (bool, String) {
        (false, self.value().to_string())
    }
}

impl Coefficient for BigInt {
    const RING: CoeffRing = CoeffRing::Integer;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn sign_and_magnitude(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_arithmetic() {
        let mut a = F2::ONE;
        a.add_assign(&F2::ONE);
        assert!(Coefficient::is_zero(&a));
        assert_eq!(F2::from_i64(-3), F2::ONE);
        assert_eq!(F2::from_i64(4), F2::ZERO);
        assert_eq!(F2::from_bigint(&BigInt::from(-7)), F2::ONE);
    }
}
