//! Property tests. Sequence values are checked against a naive recurrence
//! written here, independent of the library's memoized tables.

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use leoquat::classification::{classify, is_zero_divisor_at};
use leoquat::leonardo::{quaternion_term, QuaternionFamily};
use leoquat::quaternion::Algebra;
use leoquat::ring::{Integers, PrimeField};
use leoquat::sequences::{pisano_period, term, term_mod, SequenceFamily, SequenceKind};
use leoquat::verifier::run_all;

/// Naive oracle: `X_n = X_{n-1} + X_{n-p-1} + c` from the initial block.
fn naive(kind: SequenceKind, p: u32, len: usize) -> Vec<BigInt> {
    let p = p as usize;
    let (mut v, c): (Vec<i64>, i64) = match kind {
        SequenceKind::FibonacciP => ([vec![0], vec![1; p]].concat(), 0),
        SequenceKind::LucasP => ([vec![p as i64 + 1], vec![1; p]].concat(), 0),
        SequenceKind::LeonardoP => (vec![1; p + 1], p as i64),
        SequenceKind::LucasLeonardoP => (
            [vec![(p * p + p + 1) as i64], vec![1; p]].concat(),
            p as i64,
        ),
        SequenceKind::Francois => (vec![2, 1], 1),
    };
    v.truncate(len);
    let mut out: Vec<BigInt> = v.into_iter().map(BigInt::from).collect();
    while out.len() < len {
        let n = out.len();
        let next = &out[n - 1] + &out[n - p - 1] + c;
        out.push(next);
    }
    out
}

fn family(kind: SequenceKind, p: u32) -> SequenceFamily {
    SequenceFamily::new(kind, p).unwrap()
}

fn any_family() -> impl Strategy<Value = SequenceFamily> {
    prop_oneof![
        (1u32..=6).prop_map(|p| family(SequenceKind::FibonacciP, p)),
        (1u32..=6).prop_map(|p| family(SequenceKind::LucasP, p)),
        (1u32..=6).prop_map(|p| family(SequenceKind::LeonardoP, p)),
        (1u32..=6).prop_map(|p| family(SequenceKind::LucasLeonardoP, p)),
        Just(SequenceFamily::FRANCOIS),
    ]
}

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13])
}

proptest! {
    #[test]
    fn terms_match_naive_recurrence(f in any_family(), n in 0usize..=300) {
        let oracle = naive(f.kind(), f.p(), n + 1);
        prop_assert_eq!(term(f, n as i64).unwrap(), oracle[n].clone());
    }

    #[test]
    fn inter_sequence_relations(p in 1u32..=6, n in 0i64..=300) {
        let t = |k: SequenceKind, m: i64| term(family(k, p), m).unwrap();
        let (pi, fib, luc, leo, ll) = (
            i64::from(p),
            SequenceKind::FibonacciP,
            SequenceKind::LucasP,
            SequenceKind::LeonardoP,
            SequenceKind::LucasLeonardoP,
        );
        prop_assert_eq!(t(leo, n), (pi + 1) * t(fib, n + 1) - pi);
        prop_assert_eq!(t(leo, n), t(luc, n + pi + 1) - t(fib, n + pi + 1) - pi);
        prop_assert_eq!(t(ll, n), (pi + 1) * t(luc, n) - pi);
        if n >= 1 {
            prop_assert_eq!(t(ll, n), (pi + 1) * t(leo, n) - pi * t(leo, n - 1));
        }
        if n > 2 * pi {
            prop_assert_eq!(t(ll, n), t(ll, n - 1) + t(ll, n - pi) - t(ll, n - 2 * pi - 1));
        }
    }

    #[test]
    fn order_one_relations(n in 0i64..=300) {
        let t = |f: SequenceFamily, m: i64| term(f, m).unwrap();
        prop_assert_eq!(t(SequenceFamily::LUCAS_LEONARDO, n), 2 * t(SequenceFamily::LUCAS, n) - 1);
        prop_assert_eq!(
            t(SequenceFamily::FRANCOIS, n),
            t(SequenceFamily::LUCAS, n) + t(SequenceFamily::FIBONACCI, n + 1) - 1
        );
    }

    #[test]
    fn classical_fibonacci_lucas_identities(n in 0i64..=200) {
        let f = |m: i64| term(SequenceFamily::FIBONACCI, m).unwrap();
        let l = |m: i64| term(SequenceFamily::LUCAS, m).unwrap();
        prop_assert_eq!(l(n).pow(2) + l(n + 1).pow(2), 5 * f(2 * n + 1));
        prop_assert_eq!(f(n).pow(2) + f(n + 1).pow(2), f(2 * n + 1));
        prop_assert_eq!(f(n) + f(n + 4), 3 * f(n + 2));
        prop_assert_eq!(l(n) * f(n + 1), f(2 * n + 1) + if n % 2 == 0 { 1 } else { -1 });
        prop_assert_eq!(l(n) + l(n + 2), 5 * f(n + 1));
        prop_assert_eq!(f(n) + f(n + 2), l(n + 1));
    }

    #[test]
    fn partial_sums_and_convolution(p in 1u32..=6, n in 0i64..=200) {
        let pi = i64::from(p);
        let fib = naive(SequenceKind::FibonacciP, p, (n + 2 * pi + 2) as usize);
        let luc = naive(SequenceKind::LucasP, p, (n + 2 * pi + 2) as usize);
        let sum: BigInt = fib[..=n as usize].iter().sum();
        prop_assert_eq!(sum, &fib[(n + pi + 1) as usize] - &fib[p as usize]);
        if n >= pi {
            let conv: BigInt = (1..=pi).map(|t| &luc[(n - t) as usize] * &fib[t as usize]).sum();
            let rhs = &luc[(n + pi) as usize] - &fib[(pi + 1) as usize] * &luc[n as usize];
            prop_assert_eq!(conv, rhs);
        }
    }

    #[test]
    fn modular_terms_agree_with_exact(f in any_family(), n in 0i64..=200, q in small_prime()) {
        let exact = term(f, n).unwrap().mod_floor(&BigInt::from(q));
        prop_assert_eq!(BigInt::from(term_mod(f, n, q).unwrap()), exact);
    }

    #[test]
    fn pisano_cycle_repeats_twice(m in 2u64..=300) {
        let pp = pisano_period(m).unwrap();
        for n in 0..2 * pp.length {
            let fib = term(SequenceFamily::FIBONACCI, n as i64).unwrap().mod_floor(&BigInt::from(m));
            prop_assert_eq!(fib, BigInt::from(pp.cycle[n % pp.length]));
        }
        // Minimality: the pair (0, 1) does not recur earlier.
        for d in 1..pp.length {
            prop_assert!(!(pp.cycle[d] == 0 && pp.cycle[(d + 1) % pp.length] == 1));
        }
    }

    #[test]
    fn lifted_quaternions_reduce(f in any_family(), n in 0i64..=200, q in prop::sample::select(vec![3u64, 5, 7])) {
        let field = PrimeField::new(q).unwrap();
        let qf = QuaternionFamily::new(f);
        let exact = quaternion_term(qf, n, &Integers).unwrap();
        prop_assert_eq!(exact.reduce_mod(&field).unwrap(), quaternion_term(qf, n, &field).unwrap());
    }

    #[test]
    fn conjugate_products_are_the_norm(c in prop::array::uniform4(-9i64..=9), q in prop::sample::select(vec![3u64, 5, 7])) {
        let z = Algebra::standard(Integers);
        let x = z.from_i64s(c);
        let n = z.scalar(x.norm());
        prop_assert_eq!(x.mul(&x.conjugate()).unwrap(), n.clone());
        prop_assert_eq!(x.conjugate().mul(&x).unwrap(), n);
        let fq = Algebra::standard(PrimeField::new(q).unwrap());
        let y = fq.from_i64s(c);
        prop_assert_eq!(y.mul(&y.conjugate()).unwrap(), fq.scalar(y.norm()));
    }

    #[test]
    fn classification_is_stable_over_two_periods(
        f in any_family().prop_filter("short periods", |f| f.p() <= 3),
        q in prop::sample::select(vec![3u64, 5, 7]),
    ) {
        let qf = QuaternionFamily::new(f);
        let c = classify(qf, q).unwrap();
        let field = PrimeField::new(q).unwrap();
        for n in 0..2 * c.modulus {
            let x = quaternion_term(qf, n as i64, &Integers).unwrap().reduce_mod(&field).unwrap();
            prop_assert_eq!(x.is_zero_divisor().unwrap(), c.is_zero_divisor_index(n));
        }
        prop_assert_eq!(is_zero_divisor_at(qf, 1, q).unwrap(), c.is_zero_divisor_index(1));
        prop_assert_eq!(c.modulus % c.norm_period, 0);
    }
}

#[test]
fn first_lucas_leonardo_quaternions_for_large_p() {
    let z = Algebra::standard(Integers);
    for p in 4..=8u32 {
        let qf = QuaternionFamily::new(family(SequenceKind::LucasLeonardoP, p));
        let pp = i64::from(p);
        let first = z.from_i64s([1 + pp * (pp + 1), 1, 1, 1]);
        assert_eq!(quaternion_term(qf, 0, &Integers).unwrap(), first);
        for n in 1..=pp - 3 {
            assert_eq!(
                quaternion_term(qf, n, &Integers).unwrap(),
                z.from_i64s([1; 4])
            );
        }
    }
}

#[test]
fn francois_mod_seven_has_a_single_class() {
    let c = classify(QuaternionFamily::new(SequenceFamily::FRANCOIS), 7).unwrap();
    assert_eq!(c.canonical(), (16, vec![2]));
}

#[test]
fn vanishing_terms_are_neither_zero_divisors_nor_invertible() {
    let c = classify(QuaternionFamily::new(family(SequenceKind::LeonardoP, 3)), 5).unwrap();
    assert_eq!((c.modulus, c.vanishing.clone()), (312, vec![234]));
    assert!(!c.all_invertible);
    assert!(!c.is_zero_divisor_index(234));
}

#[test]
fn left_and_right_annihilators_coincide() {
    for q in [3u64, 5] {
        let field = PrimeField::new(q).unwrap();
        let alg = Algebra::standard(field);
        for v in 0..q.pow(4) {
            let x = alg.element([v % q, v / q % q, v / q / q % q, v / q / q / q]);
            if x.is_zero() {
                continue;
            }
            let right = x.brute_force_annihilator().is_some();
            let left = x.brute_force_left_annihilator().is_some();
            assert_eq!(right, left, "{x} over F_{q}");
            assert_eq!(right, x.is_zero_divisor().unwrap(), "{x} over F_{q}");
        }
    }
}

#[test]
fn verification_is_deterministic() {
    let a = run_all(2, 40).unwrap();
    let b = run_all(2, 40).unwrap();
    let key = |r: &leoquat::verifier::VerificationRun| {
        r.reports
            .iter()
            .map(|x| (x.id, x.holds, x.first_counterexample.clone()))
            .collect::<Vec<_>>()
    };
    assert_eq!(key(&a), key(&b));
    assert!(a.success);
}
