//! Which members of a quaternion sequence are zero divisors over `F_q`.
//!
//! Over `F_q` the lifted sequence is periodic with the period of the scalar
//! sequence, so membership is a property of `n mod period`. The period comes
//! from cycle detection, which makes the classification work for any family,
//! any order and any odd prime.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::leonardo::{quaternion_term, QuaternionFamily};
use crate::quaternion::Algebra;
use crate::ring::PrimeField;
use crate::sequences::{pisano_period, sequence_period_mod};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroDivisorClassification {
    pub family: QuaternionFamily,
    pub q: u64,
    /// Period of the scalar sequence modulo `q`; residues are taken modulo it.
    pub modulus: u64,
    /// Sorted residues `r` such that the `n`-th quaternion is a zero divisor
    /// iff `n ≡ r (mod modulus)`.
    pub residues: Vec<u64>,
    pub all_invertible: bool,
    /// Residues where the quaternion itself vanishes mod `q`. Such elements are
    /// neither zero divisors nor invertible.
    pub vanishing: Vec<u64>,
    /// Minimal period of the norm sequence `N(QX_n) mod q`; divides `modulus`.
    pub norm_period: u64,
    /// Pisano period of `q`.
    pub pisano: u64,
}

impl ZeroDivisorClassification {
    pub fn is_zero_divisor_index(&self, n: u64) -> bool {
        self.residues.binary_search(&(n % self.modulus)).is_ok()
    }

    /// The residue set restated modulo a multiple of `modulus`.
    pub fn residues_modulo(&self, m: u64) -> Option<Vec<u64>> {
        if m == 0 || !m.is_multiple_of(self.modulus) {
            return None;
        }
        let mut out: Vec<u64> = (0..m / self.modulus)
            .flat_map(|k| self.residues.iter().map(move |r| r + k * self.modulus))
            .collect();
        out.sort_unstable();
        Some(out)
    }

    /// `(modulus, residues)` modulo the Pisano period when the detected period
    /// divides it, otherwise modulo the detected period.
    pub fn canonical(&self) -> (u64, Vec<u64>) {
        match self.residues_modulo(self.pisano) {
            Some(r) => (self.pisano, r),
            None => (self.modulus, self.residues.clone()),
        }
    }
}

/// Classify the zero divisors among the quaternions of `family` over `F_q`.
pub fn classify(family: QuaternionFamily, q: u64) -> Result<ZeroDivisorClassification> {
    let field = PrimeField::new(q)?;
    let period = sequence_period_mod(family.base(), q)?;
    let len = period.length;
    let algebra = Algebra::standard(field);

    // Zero divisor / vanishing / norm over two full periods.
    let states: Vec<(bool, bool, u64)> = (0..2 * len)
        .map(|n| {
            let x = algebra.element(std::array::from_fn(|t| period.residue(n + t)));
            let zd = x.is_zero_divisor().expect("prime field");
            (zd, x.is_zero(), x.norm())
        })
        .collect();

    if states[..len] != states[len..] {
        return Err(Error::domain(format!(
            "{} mod {q}: classification is not periodic with period {len}",
            family.base()
        )));
    }

    let residues: Vec<u64> = (0..len)
        .filter(|&n| states[n].0)
        .map(|n| n as u64)
        .collect();
    let vanishing: Vec<u64> = (0..len)
        .filter(|&n| states[n].1)
        .map(|n| n as u64)
        .collect();
    let norm_period = (1..=len)
        .filter(|d| len % d == 0)
        .find(|&d| (0..len).all(|n| states[n].2 == states[n + d].2))
        .unwrap_or(len) as u64;

    Ok(ZeroDivisorClassification {
        family,
        q,
        modulus: len as u64,
        all_invertible: residues.is_empty() && vanishing.is_empty(),
        residues,
        vanishing,
        norm_period,
        pisano: pisano_period(q)?.length as u64,
    })
}

/// Direct evaluation at one index, no period shortcut.
pub fn is_zero_divisor_at(family: QuaternionFamily, n: i64, q: u64) -> Result<bool> {
    let field = PrimeField::new(q)?;
    quaternion_term(family, n, &field)?.is_zero_divisor()
}

/// For every `n < horizon`, checks that direct evaluation, the residue
/// classification and an exhaustive annihilator search all agree.
pub fn classify_cross_check(family: QuaternionFamily, q: u64, horizon: u64) -> Result<bool> {
    let c = classify(family, q)?;
    if horizon < 2 * c.modulus {
        return Err(Error::domain(format!(
            "horizon {horizon} is shorter than two periods ({})",
            2 * c.modulus
        )));
    }
    let field = PrimeField::new(q)?;
    for n in 0..horizon {
        let x = quaternion_term(family, n as i64, &field)?;
        let direct = x.is_zero_divisor()?;
        let by_class = c.is_zero_divisor_index(n);
        let by_search = !x.is_zero() && x.brute_force_annihilator().is_some();
        if direct != by_class || direct != by_search {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::SequenceFamily;

    fn ll() -> QuaternionFamily {
        QuaternionFamily::new(SequenceFamily::LUCAS_LEONARDO)
    }
    fn fr() -> QuaternionFamily {
        QuaternionFamily::new(SequenceFamily::FRANCOIS)
    }

    #[test]
    fn lucas_leonardo_classes() {
        let c3 = classify(ll(), 3).unwrap();
        assert_eq!((c3.modulus, c3.residues.clone()), (8, vec![0, 2, 3]));
        assert!(!c3.all_invertible);

        let c5 = classify(ll(), 5).unwrap();
        assert!(c5.all_invertible);
        assert!(c5.residues.is_empty());

        let c7 = classify(ll(), 7).unwrap();
        assert_eq!(c7.canonical(), (16, vec![0, 6, 7, 9]));
    }

    #[test]
    fn francois_classes() {
        assert_eq!(classify(fr(), 3).unwrap().canonical(), (8, vec![0, 1, 6]));
        assert_eq!(
            classify(fr(), 5).unwrap().canonical(),
            (20, vec![5, 8, 10, 19])
        );
    }

    #[test]
    fn residues_restated_modulo_multiples() {
        let c5 = classify(fr(), 5).unwrap();
        assert_eq!(c5.residues_modulo(40).unwrap().len(), 8);
        assert_eq!(c5.residues_modulo(30), None);
        let c3 = classify(ll(), 3).unwrap();
        assert_eq!(c3.residues_modulo(16).unwrap(), vec![0, 2, 3, 8, 10, 11]);
    }

    #[test]
    fn direct_evaluation() {
        assert!(is_zero_divisor_at(ll(), 0, 3).unwrap());
        assert!(!is_zero_divisor_at(ll(), 1, 5).unwrap());
        assert!(is_zero_divisor_at(fr(), 5, 5).unwrap());
        assert_eq!(is_zero_divisor_at(ll(), 0, 4), Err(Error::NotOddPrime(4)));
    }

    #[test]
    fn cross_checks() {
        assert!(classify_cross_check(ll(), 3, 64).unwrap());
        assert!(classify_cross_check(ll(), 7, 64).unwrap());
        assert!(classify_cross_check(fr(), 5, 80).unwrap());
        assert!(classify_cross_check(fr(), 5, 39).is_err());
    }

    #[test]
    fn not_an_odd_prime() {
        assert_eq!(classify(ll(), 9), Err(Error::NotOddPrime(9)));
        assert_eq!(classify(ll(), 2), Err(Error::NotOddPrime(2)));
    }

    #[test]
    fn higher_order_families_are_consistent() {
        for p in 2..=4u32 {
            let family = QuaternionFamily::new(SequenceFamily::lucas_leonardo(p).unwrap());
            for q in [3u64, 5] {
                let c = classify(family, q).unwrap();
                assert_eq!(c.modulus % c.norm_period, 0);
                for n in 0..(2 * c.modulus) {
                    assert_eq!(
                        is_zero_divisor_at(family, n as i64, q).unwrap(),
                        c.is_zero_divisor_index(n)
                    );
                }
            }
        }
    }
}
