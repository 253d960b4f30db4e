//! Generalized quaternion algebras `(a, b)` over a coefficient ring.
//!
//! A quaternion is `x1 + x2 i + x3 j + x4 k` with `i² = a`, `j² = b` and
//! `k = ij = -ji`. Every quaternion carries its algebra, and binary operations
//! between quaternions of different algebras fail with
//! [`Error::AlgebraMismatch`].

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{CoefficientRing, Integers, PrimeField, Ring};

/// The algebra `(a, b)` over a ring, with `a` and `b` nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<R: Ring> {
    ring: R,
    a: R::Elem,
    b: R::Elem,
}

impl<R: Ring> Algebra<R> {
    pub fn new(ring: R, a: R::Elem, b: R::Elem) -> Result<Self> {
        if ring.is_zero(&a) || ring.is_zero(&b) {
            return Err(Error::ZeroParameter);
        }
        Ok(Algebra { ring, a, b })
    }

    /// The Hamilton-type algebra with `a = b = -1`.
    pub fn standard(ring: R) -> Self {
        let minus_one = ring.lift_i64(-1);
        Algebra {
            a: minus_one.clone(),
            b: minus_one,
            ring,
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }
    pub fn a(&self) -> &R::Elem {
        &self.a
    }
    pub fn b(&self) -> &R::Elem {
        &self.b
    }

    pub fn element(&self, coeffs: [R::Elem; 4]) -> Quaternion<R> {
        Quaternion {
            coeffs,
            algebra: self.clone(),
        }
    }

    pub fn from_i64s(&self, coeffs: [i64; 4]) -> Quaternion<R> {
        self.element(coeffs.map(|c| self.ring.lift_i64(c)))
    }

    pub fn scalar(&self, c: R::Elem) -> Quaternion<R> {
        let z = self.ring.zero();
        self.element([c, z.clone(), z.clone(), z])
    }

    pub fn zero(&self) -> Quaternion<R> {
        self.scalar(self.ring.zero())
    }

    pub fn one(&self) -> Quaternion<R> {
        self.scalar(self.ring.one())
    }

    /// `1 + i + j + k`.
    pub fn unit_i(&self) -> Quaternion<R> {
        self.from_i64s([1, 1, 1, 1])
    }

    /// `[1, a, b, ab]`, the scalars appearing in the basis table.
    fn scales(&self) -> [R::Elem; 4] {
        let r = &self.ring;
        [
            r.one(),
            self.a.clone(),
            self.b.clone(),
            r.mul(&self.a, &self.b),
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Scale {
    One = 0,
    A = 1,
    B = 2,
    AB = 3,
}

/// `e_row * e_col = sign * scale * e_basis` for the basis `(1, i, j, k)`.
#[derive(Clone, Copy, Debug)]
struct BasisProduct {
    negate: bool,
    scale: Scale,
    basis: usize,
}

const fn bp(negate: bool, scale: Scale, basis: usize) -> BasisProduct {
    BasisProduct {
        negate,
        scale,
        basis,
    }
}

#[rustfmt::skip]
const BASIS_TABLE: [[BasisProduct; 4]; 4] = [
    //  · 1                       · i                       · j                       · k
    [bp(false, Scale::One, 0), bp(false, Scale::One, 1), bp(false, Scale::One, 2), bp(false, Scale::One, 3)], // 1
    [bp(false, Scale::One, 1), bp(false, Scale::A, 0),   bp(false, Scale::One, 3), bp(false, Scale::A, 2)],   // i: i² = a, ij = k, ik = aj
    [bp(false, Scale::One, 2), bp(true, Scale::One, 3),  bp(false, Scale::B, 0),   bp(true, Scale::B, 1)],    // j: ji = -k, j² = b, jk = -bi
    [bp(false, Scale::One, 3), bp(true, Scale::A, 2),    bp(false, Scale::B, 1),   bp(true, Scale::AB, 0)],   // k: ki = -aj, kj = bi, k² = -ab
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quaternion<R: Ring> {
    coeffs: [R::Elem; 4],
    algebra: Algebra<R>,
}

impl<R: Ring> Quaternion<R> {
    pub fn coeffs(&self) -> &[R::Elem; 4] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> [R::Elem; 4] {
        self.coeffs
    }

    pub fn algebra(&self) -> &Algebra<R> {
        &self.algebra
    }

    pub fn ring(&self) -> CoefficientRing {
        self.algebra.ring.descriptor()
    }

    pub fn scalar_part(&self) -> &R::Elem {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        let r = &self.algebra.ring;
        self.coeffs.iter().all(|c| r.is_zero(c))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R::Elem, &R::Elem) -> R::Elem) -> Result<Self> {
        self.check_same(other)?;
        let c = std::array::from_fn(|t| f(&self.coeffs[t], &other.coeffs[t]));
        Ok(self.algebra.element(c))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let r = &self.algebra.ring;
        self.zip_with(other, |x, y| r.add(x, y))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let r = &self.algebra.ring;
        self.zip_with(other, |x, y| r.sub(x, y))
    }

    pub fn neg(&self) -> Self {
        let r = &self.algebra.ring;
        self.algebra.element(self.coeffs.clone().map(|c| r.neg(&c)))
    }

    /// Multiply every coefficient by the ring element `s`.
    pub fn scale(&self, s: &R::Elem) -> Self {
        let r = &self.algebra.ring;
        self.algebra
            .element(self.coeffs.clone().map(|c| r.mul(&c, s)))
    }

    pub fn scale_i64(&self, s: i64) -> Self {
        self.scale(&self.algebra.ring.lift_i64(s))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let r = &self.algebra.ring;
        let scales = self.algebra.scales();
        let mut out: [R::Elem; 4] = std::array::from_fn(|_| r.zero());
        for (row, x) in self.coeffs.iter().enumerate() {
            if r.is_zero(x) {
                continue;
            }
            for (col, y) in other.coeffs.iter().enumerate() {
                let entry = BASIS_TABLE[row][col];
                let mut term = r.mul(&r.mul(x, y), &scales[entry.scale as usize]);
                if entry.negate {
                    term = r.neg(&term);
                }
                out[entry.basis] = r.add(&out[entry.basis], &term);
            }
        }
        Ok(self.algebra.element(out))
    }

    pub fn conjugate(&self) -> Self {
        let r = &self.algebra.ring;
        let [x1, x2, x3, x4] = &self.coeffs;
        self.algebra
            .element([x1.clone(), r.neg(x2), r.neg(x3), r.neg(x4)])
    }

    /// `x1² − a·x2² − b·x3² + ab·x4²`.
    pub fn norm(&self) -> R::Elem {
        let r = &self.algebra.ring;
        let [x1, x2, x3, x4] = &self.coeffs;
        let [_, a, b, ab] = self.algebra.scales();
        let sq = |x: &R::Elem| r.mul(x, x);
        let mut n = sq(x1);
        n = r.sub(&n, &r.mul(&a, &sq(x2)));
        n = r.sub(&n, &r.mul(&b, &sq(x3)));
        r.add(&n, &r.mul(&ab, &sq(x4)))
    }
}

impl<R: Ring> fmt::Display for Quaternion<R> {
    /// `a + b i + c j + d k` style with explicit signs and every term shown,
    /// e.g. `3 + 1i - 5j + 0k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x1, x2, x3, x4] = &self.coeffs;
        write!(f, "{x1}")?;
        for (c, unit) in [(x2, "i"), (x3, "j"), (x4, "k")] {
            let s = c.to_string();
            match s.strip_prefix('-') {
                Some(abs) => write!(f, " - {abs}{unit}")?,
                None => write!(f, " + {s}{unit}")?,
            }
        }
        Ok(())
    }
}

impl Quaternion<Integers> {
    /// Reduce the coefficients into `F_q`, keeping the parameters `a`, `b`.
    pub fn reduce_mod(&self, field: &PrimeField) -> Result<Quaternion<PrimeField>> {
        let alg = Algebra::new(
            *field,
            field.lift_bigint(&self.algebra.a),
            field.lift_bigint(&self.algebra.b),
        )?;
        Ok(alg.element(self.coeffs.clone().map(|c| field.lift_bigint(&c))))
    }

    /// Zero divisors are a finite-field notion here.
    pub fn is_zero_divisor(&self) -> Result<bool> {
        Err(Error::NotFiniteField)
    }

    pub fn inverse(&self) -> Result<Self> {
        Err(Error::NotFiniteField)
    }

    pub fn annihilator_witness(&self) -> Result<Self> {
        Err(Error::NotFiniteField)
    }
}

impl Quaternion<PrimeField> {
    fn field(&self) -> &PrimeField {
        &self.algebra.ring
    }

    /// Nonzero with norm zero.
    pub fn is_zero_divisor(&self) -> Result<bool> {
        Ok(!self.is_zero() && self.norm() == 0)
    }

    /// `conj(x) · N(x)⁻¹`.
    pub fn inverse(&self) -> Result<Self> {
        let inv = self.field().inv(self.norm()).ok_or(Error::NotInvertible)?;
        Ok(self.conjugate().scale(&inv))
    }

    /// The conjugate, which annihilates `x` whenever `N(x) = 0`.
    pub fn annihilator_witness(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain(
                "the zero quaternion has no annihilator witness",
            ));
        }
        if self.norm() != 0 {
            return Err(Error::domain(format!(
                "{self} has nonzero norm {}",
                self.norm()
            )));
        }
        Ok(self.conjugate())
    }

    /// Every nonzero quaternion of the algebra, in lexicographic coefficient
    /// order.
    fn nonzero_elements(&self) -> impl Iterator<Item = [u64; 4]> {
        let q = self.field().modulus();
        (1..q.pow(4)).map(move |mut idx| {
            let mut c = [0u64; 4];
            for slot in c.iter_mut().rev() {
                *slot = idx % q;
                idx /= q;
            }
            c
        })
    }

    /// Exhaustive search for the first nonzero `y` with `x·y = 0`.
    pub fn brute_force_annihilator(&self) -> Option<Self> {
        self.nonzero_elements()
            .map(|c| self.algebra.element(c))
            .find(|y| self.mul(y).map(|p| p.is_zero()).unwrap_or(false))
    }

    /// Exhaustive search for the first nonzero `y` with `y·x = 0`.
    pub fn brute_force_left_annihilator(&self) -> Option<Self> {
        self.nonzero_elements()
            .map(|c| self.algebra.element(c))
            .find(|y| y.mul(self).map(|p| p.is_zero()).unwrap_or(false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn zq() -> Algebra<Integers> {
        Algebra::standard(Integers)
    }

    fn fq(q: u64) -> Algebra<PrimeField> {
        Algebra::standard(PrimeField::new(q).unwrap())
    }

    #[test]
    fn addition() {
        let z = zq();
        let x = z.from_i64s([1, 1, 0, 0]);
        let y = z.from_i64s([0, 0, 1, 1]);
        assert_eq!(x.add(&y).unwrap(), z.from_i64s([1, 1, 1, 1]));
        assert_eq!(x.add(&z.zero()).unwrap(), x);
        let f3 = fq(3);
        let v = f3.from_i64s([2, 2, 0, 0]);
        assert_eq!(v.add(&v).unwrap(), f3.from_i64s([1, 1, 0, 0]));
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let f3 = fq(3);
        let f5 = fq(5);
        assert_eq!(f3.one().add(&f5.one()), Err(Error::AlgebraMismatch));
        let other = Algebra::new(Integers, BigInt::from(2), BigInt::from(-1)).unwrap();
        assert_eq!(zq().one().mul(&other.one()), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn zero_parameters_are_rejected() {
        assert_eq!(
            Algebra::new(Integers, BigInt::from(0), BigInt::from(1)),
            Err(Error::ZeroParameter)
        );
        let f = PrimeField::new(5).unwrap();
        assert_eq!(Algebra::new(f, 5 % 5, 1), Err(Error::ZeroParameter));
    }

    #[test]
    fn hamilton_products() {
        let z = zq();
        let i = z.from_i64s([0, 1, 0, 0]);
        let j = z.from_i64s([0, 0, 1, 0]);
        let k = z.from_i64s([0, 0, 0, 1]);
        let minus_one = z.from_i64s([-1, 0, 0, 0]);
        assert_eq!(i.mul(&j).unwrap(), k);
        assert_eq!(j.mul(&i).unwrap(), k.neg());
        assert_eq!(k.mul(&k).unwrap(), minus_one);
        assert_eq!(i.mul(&i).unwrap(), minus_one);
        assert_eq!(j.mul(&j).unwrap(), minus_one);
        assert_eq!(i.mul(&j).unwrap().mul(&k).unwrap(), minus_one);
        let x = z.from_i64s([3, 1, 5, 7]);
        assert_eq!(z.one().mul(&x).unwrap(), x);
        assert_eq!(x.mul(&z.one()).unwrap(), x);
    }

    #[test]
    fn general_parameters_basis_table() {
        // a = 2, b = 3: every table entry against its defining identity.
        let alg = Algebra::new(Integers, BigInt::from(2), BigInt::from(3)).unwrap();
        let e = |t: usize| {
            let mut c = [0i64; 4];
            c[t] = 1;
            alg.from_i64s(c)
        };
        let (one, i, j, k) = (e(0), e(1), e(2), e(3));
        assert_eq!(i.mul(&i).unwrap(), one.scale_i64(2));
        assert_eq!(j.mul(&j).unwrap(), one.scale_i64(3));
        assert_eq!(i.mul(&j).unwrap(), k);
        assert_eq!(j.mul(&i).unwrap(), k.neg());
        assert_eq!(j.mul(&k).unwrap(), i.scale_i64(-3));
        assert_eq!(k.mul(&j).unwrap(), i.scale_i64(3));
        assert_eq!(i.mul(&k).unwrap(), j.scale_i64(2));
        assert_eq!(k.mul(&i).unwrap(), j.scale_i64(-2));
        assert_eq!(k.mul(&k).unwrap(), one.scale_i64(-6));
    }

    #[test]
    fn conjugation() {
        let z = zq();
        let x = z.from_i64s([1, 1, 1, 1]);
        assert_eq!(x.conjugate(), z.from_i64s([1, -1, -1, -1]));
        assert_eq!(x.conjugate().conjugate(), x);
        assert_eq!(
            z.from_i64s([5, 0, 0, 0]).conjugate(),
            z.from_i64s([5, 0, 0, 0])
        );
    }

    #[test]
    fn norms() {
        assert_eq!(zq().from_i64s([3, 1, 5, 7]).norm(), BigInt::from(84));
        assert_eq!(zq().zero().norm(), BigInt::from(0));
        assert_eq!(fq(3).from_i64s([1, 1, 1, 0]).norm(), 0);
        let alg = Algebra::new(Integers, BigInt::from(2), BigInt::from(3)).unwrap();
        // 1 - 2·1 - 3·1 + 6·1
        assert_eq!(alg.from_i64s([1, 1, 1, 1]).norm(), BigInt::from(2));
    }

    #[test]
    fn zero_divisors() {
        assert!(fq(3).from_i64s([1, 1, 1, 0]).is_zero_divisor().unwrap());
        assert!(!fq(5).from_i64s([1, 1, 0, 0]).is_zero_divisor().unwrap());
        assert!(!fq(7).zero().is_zero_divisor().unwrap());
        assert_eq!(zq().one().is_zero_divisor(), Err(Error::NotFiniteField));
    }

    #[test]
    fn inverses() {
        let f5 = fq(5);
        let x = f5.from_i64s([1, 1, 0, 0]);
        let inv = x.inverse().unwrap();
        assert_eq!(inv, f5.from_i64s([3, -3, 0, 0]));
        assert_eq!(x.mul(&inv).unwrap(), f5.one());
        assert_eq!(f5.one().inverse().unwrap(), f5.one());
        assert_eq!(
            fq(3).from_i64s([1, 1, 1, 0]).inverse(),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn witnesses() {
        let f3 = fq(3);
        let x = f3.from_i64s([1, 1, 1, 0]);
        let w = x.annihilator_witness().unwrap();
        assert_eq!(w, f3.from_i64s([1, 2, 2, 0]));
        assert!(x.mul(&w).unwrap().is_zero());
        assert!(matches!(
            f3.one().annihilator_witness(),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            f3.zero().annihilator_witness(),
            Err(Error::Domain(_))
        ));

        let f7 = fq(7);
        let x = f7.from_i64s([1, 2, 3, 5]); // 1 + 4 + 9 + 25 = 39 ≡ 4, not zero
        assert!(x.annihilator_witness().is_err());
        let x = f7.from_i64s([1, 2, 3, 1]); // 1 + 4 + 9 + 1 = 15 ≡ 1
        assert!(x.annihilator_witness().is_err());
        let x = f7.from_i64s([2, 3, 0, 0]); // 4 + 9 = 13 ≡ 6
        assert!(x.annihilator_witness().is_err());
        let x = f7.from_i64s([1, 2, 3, 3]); // 1 + 4 + 9 + 9 = 23 ≡ 2
        assert!(x.annihilator_witness().is_err());
        let x = f7.from_i64s([1, 1, 2, 1]); // 1 + 1 + 4 + 1 = 7 ≡ 0
        let w = x.annihilator_witness().unwrap();
        assert!(!w.is_zero());
        assert!(x.mul(&w).unwrap().is_zero());
    }

    #[test]
    fn brute_force_scans() {
        let f3 = fq(3);
        let y = f3
            .from_i64s([1, 1, 1, 0])
            .brute_force_annihilator()
            .unwrap();
        assert!(f3.from_i64s([1, 1, 1, 0]).mul(&y).unwrap().is_zero());
        assert!(fq(5)
            .from_i64s([1, 1, 0, 0])
            .brute_force_annihilator()
            .is_none());
        // 0·y = 0 for every y; the first nonzero one is k.
        assert_eq!(
            f3.zero().brute_force_annihilator(),
            Some(f3.from_i64s([0, 0, 0, 1]))
        );
    }

    #[test]
    fn display_keeps_every_term() {
        assert_eq!(zq().from_i64s([3, 1, 5, 7]).to_string(), "3 + 1i + 5j + 7k");
        assert_eq!(
            zq().from_i64s([1, -1, 0, -2]).to_string(),
            "1 - 1i + 0j - 2k"
        );
        assert_eq!(
            fq(3).from_i64s([1, -1, -1, 0]).to_string(),
            "1 + 2i + 2j + 0k"
        );
    }

    fn small_int_quat() -> impl Strategy<Value = Quaternion<Integers>> {
        prop::array::uniform4(-9i64..=9).prop_map(|c| zq().from_i64s(c))
    }

    fn general_algebra_quat() -> impl Strategy<Value = [i64; 4]> {
        prop::array::uniform4(-9i64..=9)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn integer_mul_is_associative(x in small_int_quat(), y in small_int_quat(), z in small_int_quat()) {
            prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        }

        #[test]
        fn general_params_associative_and_multiplicative(
            a in prop_oneof![-5i64..=-1, 1i64..=5],
            b in prop_oneof![-5i64..=-1, 1i64..=5],
            x in general_algebra_quat(), y in general_algebra_quat(), z in general_algebra_quat(),
        ) {
            let alg = Algebra::new(Integers, BigInt::from(a), BigInt::from(b)).unwrap();
            let (x, y, z) = (alg.from_i64s(x), alg.from_i64s(y), alg.from_i64s(z));
            prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
            prop_assert_eq!(x.mul(&y).unwrap().norm(), x.norm() * y.norm());
            prop_assert_eq!(x.mul(&x.conjugate()).unwrap(), alg.scalar(x.norm()));
        }

        #[test]
        fn norm_is_multiplicative(x in small_int_quat(), y in small_int_quat()) {
            prop_assert_eq!(x.mul(&y).unwrap().norm(), x.norm() * y.norm());
        }

        #[test]
        fn conjugate_product_is_norm(x in small_int_quat()) {
            let n = zq().scalar(x.norm());
            prop_assert_eq!(x.mul(&x.conjugate()).unwrap(), n.clone());
            prop_assert_eq!(x.conjugate().mul(&x).unwrap(), n);
        }

        #[test]
        fn prime_field_associative(q in prop::sample::select(vec![3u64, 5, 7]),
                                   x in general_algebra_quat(), y in general_algebra_quat(), z in general_algebra_quat()) {
            let alg = fq(q);
            let (x, y, z) = (alg.from_i64s(x), alg.from_i64s(y), alg.from_i64s(z));
            prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
            let f = alg.ring();
            prop_assert_eq!(x.mul(&y).unwrap().norm(), f.mul(&x.norm(), &y.norm()));
        }
    }
}
