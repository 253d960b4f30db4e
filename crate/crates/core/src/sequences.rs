//! Scalar sequence families, exact and modular.
//!
//! All five families share one shape: an initial block of `p + 1` values
//! followed by `X_n = X_{n-1} + X_{n-p-1} + c` where `c` is `0` for the
//! Fibonacci-p and Lucas-p sequences and `p` for the Leonardo-p,
//! Lucas-Leonardo-p and Francois sequences (Francois exists only at `p = 1`).
//!
//! Exact terms are memoised per family in a process-wide table guarded by a
//! read/write lock: concurrent readers never block each other and growth is
//! serialised.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::is_odd_prime;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SequenceKind {
    FibonacciP,
    LucasP,
    LeonardoP,
    LucasLeonardoP,
    Francois,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 5] = [
        SequenceKind::FibonacciP,
        SequenceKind::LucasP,
        SequenceKind::LeonardoP,
        SequenceKind::LucasLeonardoP,
        SequenceKind::Francois,
    ];

    /// Command-line spelling.
    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::FibonacciP => "fibonacci",
            SequenceKind::LucasP => "lucas",
            SequenceKind::LeonardoP => "leonardo",
            SequenceKind::LucasLeonardoP => "lucas-leonardo",
            SequenceKind::Francois => "francois",
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        SequenceKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown family `{s}` (expected one of: fibonacci, lucas, leonardo, lucas-leonardo, francois)"
                )
            })
    }
}

/// One scalar sequence: a kind plus its order `p >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SequenceFamily {
    kind: SequenceKind,
    p: u32,
}

impl SequenceFamily {
    pub const FIBONACCI: SequenceFamily = SequenceFamily {
        kind: SequenceKind::FibonacciP,
        p: 1,
    };
    pub const LUCAS: SequenceFamily = SequenceFamily {
        kind: SequenceKind::LucasP,
        p: 1,
    };
    pub const LEONARDO: SequenceFamily = SequenceFamily {
        kind: SequenceKind::LeonardoP,
        p: 1,
    };
    pub const LUCAS_LEONARDO: SequenceFamily = SequenceFamily {
        kind: SequenceKind::LucasLeonardoP,
        p: 1,
    };
    pub const FRANCOIS: SequenceFamily = SequenceFamily {
        kind: SequenceKind::Francois,
        p: 1,
    };

    pub fn new(kind: SequenceKind, p: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidOrder(p));
        }
        if kind == SequenceKind::Francois && p != 1 {
            return Err(Error::FrancoisOrder(p));
        }
        Ok(SequenceFamily { kind, p })
    }

    pub fn fibonacci(p: u32) -> Result<Self> {
        Self::new(SequenceKind::FibonacciP, p)
    }
    pub fn lucas(p: u32) -> Result<Self> {
        Self::new(SequenceKind::LucasP, p)
    }
    pub fn leonardo(p: u32) -> Result<Self> {
        Self::new(SequenceKind::LeonardoP, p)
    }
    pub fn lucas_leonardo(p: u32) -> Result<Self> {
        Self::new(SequenceKind::LucasLeonardoP, p)
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Number of values in the initial block, which is also the recurrence lag.
    pub fn order(&self) -> usize {
        self.p as usize + 1
    }

    /// The constant added at every step.
    pub fn constant(&self) -> u64 {
        match self.kind {
            SequenceKind::FibonacciP | SequenceKind::LucasP => 0,
            SequenceKind::LeonardoP | SequenceKind::LucasLeonardoP | SequenceKind::Francois => {
                self.p as u64
            }
        }
    }

    pub fn initial_values(&self) -> Vec<BigInt> {
        let p = self.p as u64;
        let head = match self.kind {
            SequenceKind::FibonacciP => 0,
            SequenceKind::LucasP => p + 1,
            SequenceKind::LeonardoP => 1,
            SequenceKind::LucasLeonardoP => p * p + p + 1,
            SequenceKind::Francois => 2,
        };
        std::iter::once(head)
            .chain(std::iter::repeat_n(1, self.p as usize))
            .map(BigInt::from)
            .collect()
    }
}

impl fmt::Display for SequenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(p={})", self.kind, self.p)
    }
}

fn check_index(n: i64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::NegativeIndex(n))
}

type TermTable = HashMap<SequenceFamily, Vec<BigInt>>;

fn term_table() -> &'static RwLock<TermTable> {
    static TABLE: OnceLock<RwLock<TermTable>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

/// Runs `f` on the memoised terms `0..=upto`, growing the table if needed.
fn with_terms<T>(family: SequenceFamily, upto: usize, f: impl FnOnce(&[BigInt]) -> T) -> T {
    {
        let table = term_table().read().unwrap_or_else(|e| e.into_inner());
        if let Some(terms) = table.get(&family) {
            if terms.len() > upto {
                return f(&terms[..=upto]);
            }
        }
    }
    let mut table = term_table().write().unwrap_or_else(|e| e.into_inner());
    let terms = table
        .entry(family)
        .or_insert_with(|| family.initial_values());
    let lag = family.order();
    let c = BigInt::from(family.constant());
    terms.reserve((upto + 1).saturating_sub(terms.len()));
    while terms.len() <= upto {
        let n = terms.len();
        let next = &terms[n - 1] + &terms[n - lag] + &c;
        terms.push(next);
    }
    f(&terms[..=upto])
}

/// The exact `n`-th term of `family`.
pub fn term(family: SequenceFamily, n: i64) -> Result<BigInt> {
    let n = check_index(n)?;
    Ok(with_terms(family, n, |t| t[n].clone()))
}

/// Terms `n_start..=n_end`.
pub fn terms(family: SequenceFamily, n_start: i64, n_end: i64) -> Result<Vec<BigInt>> {
    let start = check_index(n_start)?;
    let end = check_index(n_end)?;
    if start > end {
        return Err(Error::InvertedRange {
            start: n_start,
            end: n_end,
        });
    }
    Ok(with_terms(family, end, |t| t[start..=end].to_vec()))
}

/// Residues of `family` modulo `m`, produced by running the recurrence in
/// `Z/mZ` with `p + 1` values of state.
#[derive(Clone, Debug)]
pub struct Residues {
    window: Vec<u64>,
    pos: usize,
    modulus: u64,
    constant: u64,
}

impl Residues {
    pub fn new(family: SequenceFamily, modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::ModulusTooSmall(modulus));
        }
        let big_m = BigInt::from(modulus);
        let window = family
            .initial_values()
            .iter()
            .map(|v| {
                let r: BigInt = v % &big_m;
                u64::try_from(r).expect("initial values are non-negative")
            })
            .collect();
        Ok(Residues {
            window,
            pos: 0,
            modulus,
            constant: family.constant() % modulus,
        })
    }
}

impl Iterator for Residues {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let lag = self.window.len();
        // The window is a ring buffer holding X_pos .. X_{pos+p}.
        let slot = self.pos % lag;
        let out = self.window[slot];
        let newest = self.window[(self.pos + lag - 1) % lag];
        let m = self.modulus as u128;
        let next = (newest as u128 + out as u128 + self.constant as u128) % m;
        self.window[slot] = next as u64;
        self.pos += 1;
        Some(out)
    }
}

/// `term(family, n) mod q` without ever forming the exact term.
pub fn term_mod(family: SequenceFamily, n: i64, q: u64) -> Result<u64> {
    if !is_odd_prime(q) {
        return Err(Error::NotOddPrime(q));
    }
    let n = check_index(n)?;
    Ok(Residues::new(family, q)?
        .nth(n)
        .expect("residue stream is infinite"))
}

/// The first `count` residues of `family` modulo `q`.
pub fn terms_mod(family: SequenceFamily, q: u64, count: usize) -> Result<Vec<u64>> {
    if !is_odd_prime(q) {
        return Err(Error::NotOddPrime(q));
    }
    Ok(Residues::new(family, q)?.take(count).collect())
}

/// Fibonacci numbers modulo `m`: one full minimal cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PisanoPeriod {
    pub modulus: u64,
    pub length: usize,
    pub cycle: Vec<u64>,
}

/// The Pisano period of `m`, found by scanning until the state `(0, 1)`
/// recurs.
pub fn pisano_period(m: u64) -> Result<PisanoPeriod> {
    if m < 2 {
        return Err(Error::ModulusTooSmall(m));
    }
    let m128 = m as u128;
    let mut cycle = vec![0u64];
    let (mut a, mut b) = (0u64, 1u64);
    loop {
        let c = ((a as u128 + b as u128) % m128) as u64;
        a = b;
        b = c;
        if a == 0 && b == 1 {
            break;
        }
        cycle.push(a);
    }
    Ok(PisanoPeriod {
        modulus: m,
        length: cycle.len(),
        cycle,
    })
}

/// Minimal period of a sequence modulo an odd prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequencePeriod {
    pub family: SequenceFamily,
    pub modulus: u64,
    pub length: usize,
    pub cycle: Vec<u64>,
}

impl SequencePeriod {
    /// The residue of term `n`, read off the cycle.
    pub fn residue(&self, n: usize) -> u64 {
        self.cycle[n % self.length]
    }
}

/// Brent's cycle detection: returns `(mu, lambda)` for the orbit of `x0`
/// under `f`.
pub(crate) fn brent<T: Clone + Eq>(x0: T, f: impl Fn(&T) -> T) -> (usize, usize) {
    let mut power = 1usize;
    let mut lambda = 1usize;
    let mut tortoise = x0.clone();
    let mut hare = f(&x0);
    while tortoise != hare {
        if power == lambda {
            tortoise = hare.clone();
            power *= 2;
            lambda = 0;
        }
        hare = f(&hare);
        lambda += 1;
    }

    let mut tortoise = x0.clone();
    let mut hare = x0;
    for _ in 0..lambda {
        hare = f(&hare);
    }
    let mut mu = 0;
    while tortoise != hare {
        tortoise = f(&tortoise);
        hare = f(&hare);
        mu += 1;
    }
    (mu, lambda)
}

/// Minimal period of `family` modulo `q`, by cycle detection on the state of
/// the last `p + 1` residues. The additive constant is part of the step, not
/// of the state.
pub fn sequence_period_mod(family: SequenceFamily, q: u64) -> Result<SequencePeriod> {
    if !is_odd_prime(q) {
        return Err(Error::NotOddPrime(q));
    }
    let start: Vec<u64> = Residues::new(family, q)?.take(family.order()).collect();
    let c = family.constant() % q;
    let step = |w: &Vec<u64>| -> Vec<u64> {
        let next = ((w[w.len() - 1] as u128 + w[0] as u128 + c as u128) % q as u128) as u64;
        let mut out = Vec::with_capacity(w.len());
        out.extend_from_slice(&w[1..]);
        out.push(next);
        out
    };
    let (mu, lambda) = brent(start, step);
    // X_{n-p-1} = X_n - X_{n-1} - c, so the step is a bijection on states and
    // every orbit is purely periodic.
    debug_assert_eq!(mu, 0, "state map is invertible");
    if mu != 0 {
        return Err(Error::domain(format!(
            "{family} mod {q} has a preperiod of {mu}"
        )));
    }
    let cycle = Residues::new(family, q)?.take(lambda).collect();
    Ok(SequencePeriod {
        family,
        modulus: q,
        length: lambda,
        cycle,
    })
}
