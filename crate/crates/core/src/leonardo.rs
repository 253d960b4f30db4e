//! Quaternions whose coefficients are four consecutive terms of a sequence,
//! `X_n + X_{n+1} i + X_{n+2} j + X_{n+3} k`, always in the `(-1, -1)` algebra.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quaternion::{Algebra, Quaternion};
use crate::ring::{Integers, PrimeField, Ring};
use crate::sequences::{self, Residues, SequenceFamily};

/// A ring that can produce the four-term coefficient window of a sequence.
pub trait LiftRing: Ring {
    fn window(&self, family: SequenceFamily, n: i64) -> Result<[Self::Elem; 4]>;
}

impl LiftRing for Integers {
    fn window(&self, family: SequenceFamily, n: i64) -> Result<[BigInt; 4]> {
        let t = sequences::terms(family, n, n.checked_add(3).ok_or(Error::NegativeIndex(n))?)?;
        Ok(std::array::from_fn(|k| t[k].clone()))
    }
}

impl LiftRing for PrimeField {
    fn window(&self, family: SequenceFamily, n: i64) -> Result<[u64; 4]> {
        let start = usize::try_from(n).map_err(|_| Error::NegativeIndex(n))?;
        let mut it = Residues::new(family, self.modulus())?.skip(start);
        Ok(std::array::from_fn(|_| {
            it.next().expect("residue stream is infinite")
        }))
    }
}

/// The quaternion sequence built on a scalar family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct QuaternionFamily {
    base: SequenceFamily,
}

impl QuaternionFamily {
    pub fn new(base: SequenceFamily) -> Self {
        QuaternionFamily { base }
    }

    pub fn base(&self) -> SequenceFamily {
        self.base
    }

    pub fn term<R: LiftRing>(&self, n: i64, ring: &R) -> Result<Quaternion<R>> {
        quaternion_term(*self, n, ring)
    }
}

impl From<SequenceFamily> for QuaternionFamily {
    fn from(base: SequenceFamily) -> Self {
        QuaternionFamily::new(base)
    }
}

/// The `n`-th quaternion of `family` over `ring`.
pub fn quaternion_term<R: LiftRing>(
    family: QuaternionFamily,
    n: i64,
    ring: &R,
) -> Result<Quaternion<R>> {
    let coeffs = ring.window(family.base, n)?;
    Ok(Algebra::standard(ring.clone()).element(coeffs))
}

/// `I = 1 + i + j + k` over the integers.
pub fn unit_i() -> Quaternion<Integers> {
    Algebra::standard(Integers).unit_i()
}

fn fib(n: i64) -> Result<BigInt> {
    sequences::term(SequenceFamily::FIBONACCI, n)
}

fn check_index(n: i64) -> Result<()> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    Ok(())
}

/// Norm of the `n`-th Lucas-Leonardo quaternion (order 1) as
/// `4 (15 F_{2n+3} − 5 F_{n+3} + 1)`.
pub fn norm_closed_form_lucas_leonardo(n: i64) -> Result<BigInt> {
    check_index(n)?;
    Ok(4 * (15 * fib(2 * n + 3)? - 5 * fib(n + 3)? + 1))
}

/// Norm of the `n`-th Francois quaternion as
/// `39 F_{2n+1} + 48 F_{2n+2} − 34 F_{n+1} − 18 F_n + 4`.
pub fn norm_closed_form_francois(n: i64) -> Result<BigInt> {
    check_index(n)?;
    Ok(39 * fib(2 * n + 1)? + 48 * fib(2 * n + 2)? - 34 * fib(n + 1)? - 18 * fib(n)? + 4)
}

/// Leading coefficients of the generating function of the order-`p`
/// Lucas-Leonardo quaternions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesExpansion {
    pub p: u32,
    pub coefficients: Vec<Quaternion<Integers>>,
}

impl SeriesExpansion {
    pub fn count(&self) -> usize {
        self.coefficients.len()
    }
}

fn poly_mul(x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// Power-series quotient `num / den` to `count` terms. `den[0]` must be 1.
fn series_quotient(num: &[BigInt], den: &[BigInt], count: usize) -> Vec<BigInt> {
    debug_assert_eq!(den[0], BigInt::from(1));
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        let mut c = num.get(n).cloned().unwrap_or_default();
        for (k, d) in den.iter().enumerate().skip(1).take(n) {
            c -= d * &out[n - k];
        }
        out.push(c);
    }
    out
}

/// Expands
///
/// ```text
/// G(x) = [QR_0 + Σ_{n=1..p} (QR_n − QR_{n−1}) xⁿ + pI x^{p+1}/(1 − x)] / (1 − x − x^{p+1})
/// ```
///
/// by multiplying through by `(1 − x)(1 − x − x^{p+1})` and solving for the
/// coefficients one at a time. The numerator's initial block comes from the
/// computed quaternion terms.
pub fn gf_coefficients(p: u32, count: usize) -> Result<SeriesExpansion> {
    if count == 0 {
        return Err(Error::domain("series must have at least one coefficient"));
    }
    let family = QuaternionFamily::new(SequenceFamily::lucas_leonardo(p)?);
    let pu = p as usize;
    let initial: Vec<Quaternion<Integers>> = (0..=pu as i64)
        .map(|n| family.term(n, &Integers))
        .collect::<Result<_>>()?;

    let one = BigInt::from(1);
    let minus_one = BigInt::from(-1);
    let one_minus_x = [one.clone(), minus_one.clone()];
    let mut base_den = vec![BigInt::zero(); pu + 2];
    base_den[0] = one.clone();
    base_den[1] = minus_one.clone();
    base_den[pu + 1] = minus_one.clone();
    let den = poly_mul(&one_minus_x, &base_den);

    let component = |t: usize| -> Vec<BigInt> {
        // P(x) = QR_0 + Σ (QR_n − QR_{n−1}) xⁿ
        let mut poly: Vec<BigInt> = vec![initial[0].coeffs()[t].clone()];
        for n in 1..=pu {
            poly.push(&initial[n].coeffs()[t] - &initial[n - 1].coeffs()[t]);
        }
        // (1 − x) P(x) + p x^{p+1}  (every component of I is 1)
        let mut num = poly_mul(&one_minus_x, &poly);
        num.resize(num.len().max(pu + 2), BigInt::zero());
        num[pu + 1] += BigInt::from(p);
        series_quotient(&num, &den, count)
    };
    let parts: Vec<Vec<BigInt>> = (0..4).map(component).collect();
    let algebra = Algebra::standard(Integers);
    let coefficients = (0..count)
        .map(|n| algebra.element(std::array::from_fn(|t| parts[t][n].clone())))
        .collect();
    Ok(SeriesExpansion { p, coefficients })
}

/// Which quaternion recurrence to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuaternionRecurrence {
    /// `QR_n = QR_{n−1} + QR_{n−p−1} + pI` for `n > p`.
    Inhomogeneous,
    /// `QR_n = QR_{n−1} + QR_{n−p} − QR_{n−2p−1}` for `n > 2p`.
    Homogeneous,
}

/// Whether the chosen Lucas-Leonardo quaternion recurrence holds at `(p, n)`.
pub fn quaternion_recurrence_check(p: u32, n: i64, which: QuaternionRecurrence) -> Result<bool> {
    let family = QuaternionFamily::new(SequenceFamily::lucas_leonardo(p)?);
    let p = p as i64;
    let qr = |m: i64| family.term(m, &Integers);
    let rhs = match which {
        QuaternionRecurrence::Inhomogeneous => {
            if n <= p {
                return Err(Error::domain(format!(
                    "inhomogeneous recurrence needs n > p (p={p}, n={n})"
                )));
            }
            qr(n - 1)?
                .add(&qr(n - p - 1)?)?
                .add(&unit_i().scale_i64(p))?
        }
        QuaternionRecurrence::Homogeneous => {
            if n <= 2 * p {
                return Err(Error::domain(format!(
                    "homogeneous recurrence needs n > 2p (p={p}, n={n})"
                )));
            }
            qr(n - 1)?.add(&qr(n - p)?)?.sub(&qr(n - 2 * p - 1)?)?
        }
    };
    Ok(qr(n)? == rhs)
}
