use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Check, Expectation, IdentitySpec, NStart, Sides};
use crate::error::Result;
use crate::leonardo::{
    gf_coefficients, norm_closed_form_francois, norm_closed_form_lucas_leonardo, quaternion_term,
    unit_i, QuaternionFamily,
};
use crate::quaternion::{Algebra, Quaternion};
use crate::ring::{Integers, PrimeField, Ring};
use crate::sequences::{self, SequenceFamily, SequenceKind};

use Expectation::*;
use SequenceKind::*;

type Q = Quaternion<Integers>;

fn fam(kind: SequenceKind, p: i64) -> Result<SequenceFamily> {
    SequenceFamily::new(kind, p as u32)
}

fn s(kind: SequenceKind, p: i64, n: i64) -> Result<BigInt> {
    sequences::term(fam(kind, p)?, n)
}

fn qt(kind: SequenceKind, p: i64, n: i64) -> Result<Q> {
    quaternion_term(QuaternionFamily::new(fam(kind, p)?), n, &Integers)
}

/// `c · I`
fn ci(c: &BigInt) -> Q {
    unit_i().scale(c)
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn sides(l: impl Into<super::Value>, r: impl Into<super::Value>) -> Result<Sides> {
    Ok((l.into(), r.into()))
}

// Scalar recurrences and relations.

fn leo(p: i64, n: i64) -> Result<Sides> {
    sides(
        s(LeonardoP, p, n)?,
        s(LeonardoP, p, n - 1)? + s(LeonardoP, p, n - p - 1)? + p,
    )
}

fn luc(p: i64, n: i64) -> Result<Sides> {
    sides(
        s(LucasLeonardoP, p, n)?,
        s(LucasLeonardoP, p, n - 1)? + s(LucasLeonardoP, p, n - p - 1)? + p,
    )
}

fn luc0(p: i64, n: i64) -> Result<Sides> {
    let r = |m| s(LucasLeonardoP, p, m);
    sides(r(n)?, r(n - 1)? + r(n - p)? - r(n - 2 * p - 1)?)
}

fn francois_rec(p: i64, n: i64) -> Result<Sides> {
    let f = |m| s(Francois, p, m);
    sides(f(n)?, f(n - 1)? + f(n - 2)? + 1)
}

fn leo1(p: i64, n: i64) -> Result<Sides> {
    sides(s(LeonardoP, p, n)?, (p + 1) * s(FibonacciP, p, n + 1)? - p)
}

fn leo2(p: i64, n: i64) -> Result<Sides> {
    sides(
        s(LeonardoP, p, n)?,
        s(LucasP, p, n + p + 1)? - s(FibonacciP, p, n + p + 1)? - p,
    )
}

fn luc1(p: i64, n: i64) -> Result<Sides> {
    sides(s(LucasLeonardoP, p, n)?, (p + 1) * s(LucasP, p, n)? - p)
}

fn luc2(p: i64, n: i64) -> Result<Sides> {
    sides(
        s(LucasLeonardoP, p, n)?,
        (p + 1) * s(LeonardoP, p, n)? - p * s(LeonardoP, p, n - 1)?,
    )
}

fn lucas_leonardo_lucas(p: i64, n: i64) -> Result<Sides> {
    sides(s(LucasLeonardoP, p, n)?, 2 * s(LucasP, p, n)? - 1)
}

fn francois_lucas_fibonacci(p: i64, n: i64) -> Result<Sides> {
    sides(
        s(Francois, p, n)?,
        s(LucasP, p, n)? + s(FibonacciP, p, n + 1)? - 1,
    )
}

// Quaternion recurrences and relations.

fn r1(p: i64, n: i64) -> Result<Sides> {
    let q = |m| qt(LucasLeonardoP, p, m);
    sides(q(n)?, q(n - 1)?.add(&q(n - p - 1)?)?.add(&ci(&big(p)))?)
}

fn r2(p: i64, n: i64) -> Result<Sides> {
    let q = |m| qt(LucasLeonardoP, p, m);
    sides(q(n)?, q(n - 1)?.add(&q(n - p)?)?.sub(&q(n - 2 * p - 1)?)?)
}

fn prop22_i(p: i64, n: i64) -> Result<Sides> {
    let rhs = qt(LucasP, p, n)?.scale_i64(p + 1).sub(&ci(&big(p)))?;
    sides(qt(LucasLeonardoP, p, n)?, rhs)
}

fn prop22_ii(p: i64, n: i64) -> Result<Sides> {
    let rhs = qt(LeonardoP, p, n)?
        .scale_i64(p + 1)
        .sub(&qt(LeonardoP, p, n - 1)?.scale_i64(p))?;
    sides(qt(LucasLeonardoP, p, n)?, rhs)
}

fn prop22_iii(p: i64, n: i64, sign: i64) -> Result<Sides> {
    let rhs = qt(LeonardoP, p, n)?
        .add(&qt(LeonardoP, p, n - p - 1)?.scale_i64(p))?
        .add(&ci(&big(sign * p * p)))?;
    sides(qt(LucasLeonardoP, p, n)?, rhs)
}

fn prop22_iii_printed(p: i64, n: i64) -> Result<Sides> {
    prop22_iii(p, n, -1)
}

fn prop22_iii_corrected(p: i64, n: i64) -> Result<Sides> {
    prop22_iii(p, n, 1)
}

fn prop22_iv(p: i64, n: i64, i_coeff: i64) -> Result<Sides> {
    let rhs = qt(LucasP, p, n)?
        .sub(&qt(FibonacciP, p, n)?)?
        .scale_i64(p)
        .add(&qt(LucasP, p, n + p + 1)?)?
        .sub(&qt(FibonacciP, p, n + p + 1)?)?
        .sub(&ci(&big(i_coeff)))?;
    sides(qt(LucasLeonardoP, p, n)?, rhs)
}

fn prop22_iv_printed(p: i64, n: i64) -> Result<Sides> {
    prop22_iv(p, n, p * (p + 1))
}

fn prop22_iv_corrected(p: i64, n: i64) -> Result<Sides> {
    prop22_iv(p, n, p)
}

fn quaternion_sum(kind: SequenceKind, p: i64, n: i64) -> Result<Q> {
    let mut acc = Algebra::standard(Integers).zero();
    for k in 0..=n {
        acc = acc.add(&qt(kind, p, k)?)?;
    }
    Ok(acc)
}

fn sum_prop(p: i64, n: i64) -> Result<Sides> {
    let rhs = qt(LucasP, p, n + p + 1)?
        .sub(&qt(LucasP, p, p)?)?
        .scale_i64(p + 1)
        .sub(&ci(&big(p * (n + 1))))?;
    sides(quaternion_sum(LucasLeonardoP, p, n)?, rhs)
}

fn lucas_quat_sum(p: i64, n: i64) -> Result<Sides> {
    let rhs = qt(LucasP, p, n + p + 1)?.sub(&qt(LucasP, p, p)?)?;
    sides(quaternion_sum(LucasP, p, n)?, rhs)
}

fn conv_prop(p: i64, n: i64) -> Result<Sides> {
    let mut lhs = Algebra::standard(Integers).zero();
    for t in 1..=p {
        lhs = lhs.add(&qt(LucasLeonardoP, p, n - t)?.scale(&s(FibonacciP, p, t)?))?;
    }
    let rhs = qt(LucasP, p, n + p)?
        .sub(&qt(LucasP, p, n)?)?
        .scale_i64(p + 1)
        .sub(&ci(&(p * (s(FibonacciP, p, 2 * p + 1)? - 1))))?;
    sides(lhs, rhs)
}

fn abbad(p: i64, n: i64) -> Result<Sides> {
    let mut lhs = BigInt::from(0);
    for t in 1..=p {
        lhs += s(LucasP, p, n - t)? * s(FibonacciP, p, t)?;
    }
    sides(
        lhs,
        s(LucasP, p, n + p)? - s(FibonacciP, p, p + 1)? * s(LucasP, p, n)?,
    )
}

fn tuglu(p: i64, n: i64) -> Result<Sides> {
    let lhs: BigInt = sequences::terms(fam(FibonacciP, p)?, 0, n)?.iter().sum();
    sides(lhs, s(FibonacciP, p, n + p + 1)? - s(FibonacciP, p, p)?)
}

// Classical Fibonacci / Lucas identities (order 1).

fn fib(n: i64) -> Result<BigInt> {
    s(FibonacciP, 1, n)
}

fn lucas(n: i64) -> Result<BigInt> {
    s(LucasP, 1, n)
}

fn lucas_squares(_: i64, n: i64) -> Result<Sides> {
    sides(lucas(n)?.pow(2) + lucas(n + 1)?.pow(2), 5 * fib(2 * n + 1)?)
}

fn fibonacci_squares(_: i64, n: i64) -> Result<Sides> {
    sides(fib(n)?.pow(2) + fib(n + 1)?.pow(2), fib(2 * n + 1)?)
}

fn fibonacci_skip_four(_: i64, n: i64) -> Result<Sides> {
    sides(fib(n)? + fib(n + 4)?, 3 * fib(n + 2)?)
}

fn lucas_fibonacci_product(_: i64, n: i64) -> Result<Sides> {
    let sign = if n % 2 == 0 { 1 } else { -1 };
    sides(lucas(n)? * fib(n + 1)?, fib(2 * n + 1)? + sign * fib(1)?)
}

fn lucas_skip_two(_: i64, n: i64) -> Result<Sides> {
    sides(lucas(n)? + lucas(n + 2)?, 5 * fib(n + 1)?)
}

fn fibonacci_skip_two(_: i64, n: i64) -> Result<Sides> {
    sides(fib(n)? + fib(n + 2)?, lucas(n + 1)?)
}

// Norms.

fn norm_lucas_leonardo(p: i64, n: i64) -> Result<Sides> {
    sides(
        norm_closed_form_lucas_leonardo(n)?,
        qt(LucasLeonardoP, p, n)?.norm(),
    )
}

fn norm_francois(p: i64, n: i64) -> Result<Sides> {
    sides(norm_closed_form_francois(n)?, qt(Francois, p, n)?.norm())
}

fn gf_series(p: i64, n_lo: i64, n_hi: i64) -> Result<Vec<Sides>> {
    let series = gf_coefficients(p as u32, n_hi as usize + 1)?;
    (n_lo..=n_hi)
        .map(|n| {
            sides(
                series.coefficients[n as usize].clone(),
                qt(LucasLeonardoP, p, n)?,
            )
        })
        .collect()
}

// Finite-field reductions behind the zero-divisor classification.

fn is_zero_mod(v: &BigInt, q: i64) -> bool {
    v.mod_floor(&big(q)) == big(0)
}

fn zd_mod3_reduction(p: i64, n: i64) -> Result<Sides> {
    let norm = qt(LucasLeonardoP, p, n)?.norm();
    sides(
        is_zero_mod(&norm, 3),
        fib(n + 3)?.mod_floor(&big(3)) == big(2),
    )
}

fn zd_mod7_reduction(p: i64, n: i64) -> Result<Sides> {
    let norm = qt(LucasLeonardoP, p, n)?.norm();
    let a: BigInt = fib(n + 1)? + 1;
    let b: BigInt = fib(n + 2)? + 1;
    sides(
        is_zero_mod(&norm, 7),
        is_zero_mod(&(a.pow(2) + b.pow(2) - 1), 7),
    )
}

fn zd_mod5_francois(p: i64, n: i64) -> Result<Sides> {
    let norm = qt(Francois, p, n)?.norm();
    let chain = fib(2 * n + 4)? - fib(n + 2)? - fib(n)? + 1;
    sides(is_zero_mod(&norm, 5), is_zero_mod(&chain, 5))
}

// Randomized algebra properties. Even samples use Z with random nonzero
// (a, b) in [-5, 5]; odd samples cycle through F_3, F_5, F_7 with a = b = -1.

fn random_coeffs(rng: &mut ChaCha8Rng) -> [i64; 4] {
    std::array::from_fn(|_| rng.gen_range(-9..=9))
}

fn random_param(rng: &mut ChaCha8Rng) -> i64 {
    let v = rng.gen_range(1..=5);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

fn norm_multiplicative(seed: u64) -> Result<Sides> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if seed.is_multiple_of(2) {
        let alg = Algebra::new(
            Integers,
            big(random_param(&mut rng)),
            big(random_param(&mut rng)),
        )?;
        let x = alg.from_i64s(random_coeffs(&mut rng));
        let y = alg.from_i64s(random_coeffs(&mut rng));
        sides(x.mul(&y)?.norm(), x.norm() * y.norm())
    } else {
        let field = PrimeField::new([3, 5, 7][(seed / 2 % 3) as usize])?;
        let alg = Algebra::standard(field);
        let x = alg.from_i64s(random_coeffs(&mut rng));
        let y = alg.from_i64s(random_coeffs(&mut rng));
        sides(
            big(x.mul(&y)?.norm() as i64),
            big(field.mul(&x.norm(), &y.norm()) as i64),
        )
    }
}

fn mul_associative(seed: u64) -> Result<Sides> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if seed.is_multiple_of(2) {
        let alg = Algebra::new(
            Integers,
            big(random_param(&mut rng)),
            big(random_param(&mut rng)),
        )?;
        let [x, y, z] = std::array::from_fn(|_| alg.from_i64s(random_coeffs(&mut rng)));
        sides(x.mul(&y)?.mul(&z)?, x.mul(&y.mul(&z)?)?)
    } else {
        let field = PrimeField::new([3, 5, 7][(seed / 2 % 3) as usize])?;
        let alg = Algebra::standard(field);
        let [x, y, z] = std::array::from_fn(|_| alg.from_i64s(random_coeffs(&mut rng)));
        let (l, r) = (x.mul(&y)?.mul(&z)?, x.mul(&y.mul(&z)?)?);
        // compare as lifted integer quaternions so the report prints them
        let lift = |v: &Quaternion<PrimeField>| {
            Algebra::standard(Integers).element(v.coeffs().map(|c| big(c as i64)))
        };
        sides(lift(&l), lift(&r))
    }
}

const ALL_P: (u32, u32) = (1, u32::MAX);
const ORDER_ONE: (u32, u32) = (1, 1);

fn entry(
    id: &'static str,
    description: &'static str,
    formula: &'static str,
    p_range: (u32, u32),
    n_start: NStart,
    check: fn(i64, i64) -> Result<Sides>,
) -> IdentitySpec {
    IdentitySpec {
        id,
        description,
        formula,
        p_range,
        n_start,
        n_cap: None,
        expectation: ExpectHold,
        corrected: None,
        check: Check::Pointwise(check),
    }
}

/// Every registered identity, in a fixed order.
pub fn registry() -> Vec<IdentitySpec> {
    let mut reg = vec![
        entry(
            "leo",
            "Leonardo-p recurrence",
            "Leo(p,n) = Leo(p,n-1) + Leo(p,n-p-1) + p",
            ALL_P,
            NStart::P(1),
            leo,
        ),
        entry(
            "luc",
            "Lucas-Leonardo-p recurrence",
            "R(p,n) = R(p,n-1) + R(p,n-p-1) + p",
            ALL_P,
            NStart::P(1),
            luc,
        ),
        entry(
            "luc0",
            "Lucas-Leonardo-p homogeneous recurrence",
            "R(p,n) = R(p,n-1) + R(p,n-p) - R(p,n-2p-1)",
            ALL_P,
            NStart::TwoP(1),
            luc0,
        ),
        entry(
            "francois-rec",
            "Francois recurrence",
            "Fr(n) = Fr(n-1) + Fr(n-2) + 1",
            ORDER_ONE,
            NStart::Const(2),
            francois_rec,
        ),
        entry(
            "r1",
            "Lucas-Leonardo-p quaternion recurrence",
            "QR(p,n) = QR(p,n-1) + QR(p,n-p-1) + pI",
            ALL_P,
            NStart::P(1),
            r1,
        ),
        entry(
            "r2",
            "Lucas-Leonardo-p quaternion homogeneous recurrence",
            "QR(p,n) = QR(p,n-1) + QR(p,n-p) - QR(p,n-2p-1)",
            ALL_P,
            NStart::TwoP(1),
            r2,
        ),
        entry(
            "leo1",
            "Leonardo-p via Fibonacci-p",
            "Leo(p,n) = (p+1) F(p,n+1) - p",
            ALL_P,
            NStart::Const(0),
            leo1,
        ),
        entry(
            "leo2",
            "Leonardo-p via Lucas-p and Fibonacci-p",
            "Leo(p,n) = L(p,n+p+1) - F(p,n+p+1) - p",
            ALL_P,
            NStart::Const(0),
            leo2,
        ),
        entry(
            "luc1",
            "Lucas-Leonardo-p via Lucas-p",
            "R(p,n) = (p+1) L(p,n) - p",
            ALL_P,
            NStart::Const(0),
            luc1,
        ),
        entry(
            "luc2",
            "Lucas-Leonardo-p via Leonardo-p",
            "R(p,n) = (p+1) Leo(p,n) - p Leo(p,n-1)",
            ALL_P,
            NStart::Const(1),
            luc2,
        ),
        entry(
            "lucas-leonardo-lucas",
            "Lucas-Leonardo via Lucas",
            "R(n) = 2 L(n) - 1",
            ORDER_ONE,
            NStart::Const(0),
            lucas_leonardo_lucas,
        ),
        entry(
            "francois-lucas-fibonacci",
            "Francois via Lucas and Fibonacci",
            "Fr(n) = L(n) + F(n+1) - 1",
            ORDER_ONE,
            NStart::Const(0),
            francois_lucas_fibonacci,
        ),
        entry(
            "prop22-i",
            "Lucas-Leonardo-p quaternions via Lucas-p quaternions",
            "QR(p,n) = (p+1) QL(p,n) - pI",
            ALL_P,
            NStart::P(0),
            prop22_i,
        ),
        entry(
            "prop22-ii",
            "Lucas-Leonardo-p quaternions via Leonardo-p quaternions",
            "QR(p,n) = (p+1) QLeo(p,n) - p QLeo(p,n-1)",
            ALL_P,
            NStart::P(0),
            prop22_ii,
        ),
        IdentitySpec {
            expectation: ExpectFailAsPrinted,
            corrected: Some("prop22-iii-corrected"),
            ..entry(
                "prop22-iii-as-printed",
                "incorrect form, with -p^2 I",
                "QR(p,n) = QLeo(p,n) + p QLeo(p,n-p-1) - p^2 I",
                ALL_P,
                NStart::P(1),
                prop22_iii_printed,
            )
        },
        entry(
            "prop22-iii-corrected",
            "Lucas-Leonardo-p quaternions via shifted Leonardo-p quaternions",
            "QR(p,n) = QLeo(p,n) + p QLeo(p,n-p-1) + p^2 I",
            ALL_P,
            NStart::P(1),
            prop22_iii_corrected,
        ),
        IdentitySpec {
            expectation: ExpectFailAsPrinted,
            corrected: Some("prop22-iv-corrected"),
            ..entry(
                "prop22-iv-as-printed",
                "incorrect form, with -p(p+1) I",
                "QR(p,n) = p (QL(p,n) - QF(p,n)) + QL(p,n+p+1) - QF(p,n+p+1) - p(p+1) I",
                ALL_P,
                NStart::P(1),
                prop22_iv_printed,
            )
        },
        entry(
            "prop22-iv-corrected",
            "Lucas-Leonardo-p quaternions via Lucas-p and Fibonacci-p quaternions",
            "QR(p,n) = p (QL(p,n) - QF(p,n)) + QL(p,n+p+1) - QF(p,n+p+1) - pI",
            ALL_P,
            NStart::P(1),
            prop22_iv_corrected,
        ),
        entry(
            "sum-prop",
            "sum of Lucas-Leonardo-p quaternions",
            "sum_{k=0..n} QR(p,k) = (p+1)(QL(p,n+p+1) - QL(p,p)) - p(n+1) I",
            ALL_P,
            NStart::P(0),
            sum_prop,
        ),
        entry(
            "lucas-quat-sum",
            "sum of Lucas-p quaternions",
            "sum_{r=0..n} QL(p,r) = QL(p,n+p+1) - QL(p,p)",
            ALL_P,
            NStart::Const(0),
            lucas_quat_sum,
        ),
        entry(
            "conv-prop",
            "convolution of Lucas-Leonardo-p quaternions with Fibonacci-p numbers",
            "sum_{t=1..p} QR(p,n-t) F(p,t) = (p+1)(QL(p,n+p) - QL(p,n)) - pI (F(p,2p+1) - 1)",
            ALL_P,
            NStart::P(0),
            conv_prop,
        ),
        entry(
            "abbad",
            "Lucas-p / Fibonacci-p convolution",
            "sum_{t=1..p} L(p,n-t) F(p,t) = L(p,n+p) - F(p,p+1) L(p,n)",
            ALL_P,
            NStart::P(0),
            abbad,
        ),
        entry(
            "tuglu",
            "partial sums of Fibonacci-p numbers",
            "sum_{t=0..n} F(p,t) = F(p,n+p+1) - F(p,p)",
            ALL_P,
            NStart::Const(0),
            tuglu,
        ),
        entry(
            "lucas-squares",
            "sum of consecutive Lucas squares",
            "L(n)^2 + L(n+1)^2 = 5 F(2n+1)",
            ORDER_ONE,
            NStart::Const(0),
            lucas_squares,
        ),
        entry(
            "fibonacci-squares",
            "sum of consecutive Fibonacci squares",
            "F(n)^2 + F(n+1)^2 = F(2n+1)",
            ORDER_ONE,
            NStart::Const(0),
            fibonacci_squares,
        ),
        entry(
            "fibonacci-skip-four",
            "Fibonacci terms four apart",
            "F(n) + F(n+4) = 3 F(n+2)",
            ORDER_ONE,
            NStart::Const(0),
            fibonacci_skip_four,
        ),
        entry(
            "lucas-fibonacci-product",
            "Lucas times Fibonacci",
            "L(n) F(n+1) = F(2n+1) + (-1)^n F(1)",
            ORDER_ONE,
            NStart::Const(0),
            lucas_fibonacci_product,
        ),
        entry(
            "lucas-skip-two",
            "Lucas terms two apart",
            "L(n) + L(n+2) = 5 F(n+1)",
            ORDER_ONE,
            NStart::Const(0),
            lucas_skip_two,
        ),
        entry(
            "fibonacci-skip-two",
            "Fibonacci terms two apart",
            "F(n) + F(n+2) = L(n+1)",
            ORDER_ONE,
            NStart::Const(0),
            fibonacci_skip_two,
        ),
        entry(
            "norm-lucas-leonardo",
            "closed-form norm of Lucas-Leonardo quaternions",
            "4 (15 F(2n+3) - 5 F(n+3) + 1) = N(QR(n))",
            ORDER_ONE,
            NStart::Const(0),
            norm_lucas_leonardo,
        ),
        entry(
            "norm-francois",
            "closed-form norm of Francois quaternions",
            "39 F(2n+1) + 48 F(2n+2) - 34 F(n+1) - 18 F(n) + 4 = N(QFr(n))",
            ORDER_ONE,
            NStart::Const(0),
            norm_francois,
        ),
        IdentitySpec {
            check: Check::Batch(gf_series),
            ..entry(
                "gf-coefficients",
                "generating-function series coefficients",
                "[x^n] G_p(x) = QR(p,n)",
                ALL_P,
                NStart::Const(0),
                leo,
            )
        },
        IdentitySpec {
            n_cap: Some(47),
            ..entry(
                "zd-mod3-reduction",
                "norm criterion mod 3 as a Fibonacci congruence",
                "N(QR(n)) = 0 mod 3 <=> F(n+3) = 2 mod 3",
                ORDER_ONE,
                NStart::Const(0),
                zd_mod3_reduction,
            )
        },
        IdentitySpec {
            n_cap: Some(63),
            ..entry(
                "zd-mod7-reduction",
                "norm criterion mod 7 as a Fibonacci congruence",
                "N(QR(n)) = 0 mod 7 <=> (F(n+1)+1)^2 + (F(n+2)+1)^2 = 1 mod 7",
                ORDER_ONE,
                NStart::Const(0),
                zd_mod7_reduction,
            )
        },
        IdentitySpec {
            n_cap: Some(79),
            ..entry(
                "zd-mod5-francois",
                "Francois norm criterion mod 5 as a Fibonacci congruence",
                "N(QFr(n)) = 0 mod 5 <=> F(2n+4) - F(n+2) - F(n) + 1 = 0 mod 5",
                ORDER_ONE,
                NStart::Const(0),
                zd_mod5_francois,
            )
        },
    ];
    reg.push(IdentitySpec {
        check: Check::Sampled {
            samples: 1000,
            eval: norm_multiplicative,
        },
        ..entry(
            "norm-multiplicative",
            "norm is multiplicative (randomized)",
            "N(xy) = N(x) N(y)",
            ORDER_ONE,
            NStart::Const(0),
            leo,
        )
    });
    reg.push(IdentitySpec {
        check: Check::Sampled {
            samples: 1000,
            eval: mul_associative,
        },
        ..entry(
            "mul-associative",
            "multiplication is associative (randomized)",
            "(xy)z = x(yz)",
            ORDER_ONE,
            NStart::Const(0),
            leo,
        )
    });
    reg
}
