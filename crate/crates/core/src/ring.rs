//! Coefficient rings for quaternion arithmetic.
//!
//! Two rings are supported: the exact integers and prime fields `F_q` with
//! `q` odd. Prime-field elements are stored as canonical residues in `[0, q)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Runtime description of a coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "q", rename_all = "snake_case")]
pub enum CoefficientRing {
    ExactIntegers,
    PrimeField(u64),
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::ExactIntegers => f.write_str("Z"),
            CoefficientRing::PrimeField(q) => write!(f, "F_{q}"),
        }
    }
}

/// Arithmetic over a commutative ring whose elements are plain values.
///
/// The ring value carries whatever context the elements need (the modulus for
/// a prime field), so elements themselves stay small.
pub trait Ring: Clone + PartialEq + Eq + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + fmt::Display;

    fn descriptor(&self) -> CoefficientRing;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn lift_i64(&self, v: i64) -> Self::Elem;
    fn lift_bigint(&self, v: &BigInt) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
}

/// The ring of arbitrary-precision integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn descriptor(&self) -> CoefficientRing {
        CoefficientRing::ExactIntegers
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn lift_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn lift_bigint(&self, v: &BigInt) -> BigInt {
        v.clone()
    }
    fn add(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x + y
    }
    fn sub(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x - y
    }
    fn neg(&self, x: &BigInt) -> BigInt {
        -x
    }
    fn mul(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x * y
    }
    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }
}

/// Deterministic primality test by trial division; moduli here are small.
pub fn is_odd_prime(q: u64) -> bool {
    if q < 3 || q.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The prime field `F_q` for an odd prime `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        if !is_odd_prime(q) {
            return Err(Error::NotOddPrime(q));
        }
        Ok(PrimeField { q })
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn pow(&self, base: u64, mut exp: u64) -> u64 {
        let q = self.q as u128;
        let mut acc = 1u128;
        let mut b = base as u128 % q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % q;
            }
            b = b * b % q;
            exp >>= 1;
        }
        acc as u64
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, x: u64) -> Option<u64> {
        let x = x % self.q;
        if x == 0 {
            None
        } else {
            Some(self.pow(x, self.q - 2))
        }
    }

    /// Every element of the field in increasing residue order.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn descriptor(&self) -> CoefficientRing {
        CoefficientRing::PrimeField(self.q)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn lift_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.q as i128) as u64
    }
    fn lift_bigint(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.q));
        debug_assert!(!r.is_negative());
        r.to_u64().expect("residue fits in u64")
    }
    fn add(&self, x: &u64, y: &u64) -> u64 {
        ((*x as u128 + *y as u128) % self.q as u128) as u64
    }
    fn sub(&self, x: &u64, y: &u64) -> u64 {
        ((*x as u128 + self.q as u128 - *y as u128) % self.q as u128) as u64
    }
    fn neg(&self, x: &u64) -> u64 {
        (self.q - x % self.q) % self.q
    }
    fn mul(&self, x: &u64, y: &u64) -> u64 {
        ((*x as u128 * *y as u128) % self.q as u128) as u64
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
}
