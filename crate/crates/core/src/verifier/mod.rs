//! Exact evaluation of a registry of identities over `(p, n)` grids.
//!
//! Each registered identity compares a left- and right-hand side at every grid
//! point and stops at the first disagreement. A few statements are registered
//! twice: once in a commonly quoted but incorrect form, which is expected to
//! fail, and once in corrected form, which must hold. The pairs form the
//! discrepancy ledger.

mod audit;
mod registry;

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::ring::Integers;

pub use audit::{initial_display_audit, DisplayCheck, DisplayStatus};
pub use registry::registry;

/// Grid used by the full suite unless overridden.
pub const DEFAULT_P_MAX: u32 = 6;
pub const DEFAULT_N_MAX: i64 = 200;

/// Incorrect statement and its corrected counterpart.
pub const DISCREPANCY_PAIRS: [(&str, &str); 2] = [
    ("prop22-iii-as-printed", "prop22-iii-corrected"),
    ("prop22-iv-as-printed", "prop22-iv-corrected"),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    ExpectHold,
    ExpectFailAsPrinted,
}

/// One side of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(BigInt),
    Quat(Quaternion<Integers>),
    Bool(bool),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Quat(q) => write!(f, "{q}"),
            Value::Bool(b) => write!(f, "{b}"),
        }
    }
}

impl From<BigInt> for Value {
    fn from(v: BigInt) -> Self {
        Value::Int(v)
    }
}

impl From<Quaternion<Integers>> for Value {
    fn from(v: Quaternion<Integers>) -> Self {
        Value::Quat(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

pub(crate) type Sides = (Value, Value);

#[derive(Clone, Copy)]
pub(crate) enum Check {
    /// Evaluated independently at each `(p, n)`.
    Pointwise(fn(i64, i64) -> Result<Sides>),
    /// Evaluated for a whole run of `n` at once: `(p, n_lo, n_hi)`.
    Batch(fn(i64, i64, i64) -> Result<Vec<Sides>>),
    /// Randomized property; `n` is the sample index and seeds the generator.
    Sampled {
        samples: i64,
        eval: fn(u64) -> Result<Sides>,
    },
}

/// Lower end of the `n` range as a function of `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NStart {
    Const(i64),
    /// `p + offset`
    P(i64),
    /// `2p + offset`
    TwoP(i64),
}

impl NStart {
    pub fn at(self, p: i64) -> i64 {
        match self {
            NStart::Const(c) => c,
            NStart::P(c) => p + c,
            NStart::TwoP(c) => 2 * p + c,
        }
    }
}

impl fmt::Display for NStart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let off = |c: i64| match c {
            0 => String::new(),
            c if c > 0 => format!("+{c}"),
            c => c.to_string(),
        };
        match *self {
            NStart::Const(c) => write!(f, "{c}"),
            NStart::P(c) => write!(f, "p{}", off(c)),
            NStart::TwoP(c) => write!(f, "2p{}", off(c)),
        }
    }
}

#[derive(Clone)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub description: &'static str,
    /// `lhs = rhs`, in plain ASCII.
    pub formula: &'static str,
    /// Inclusive range of orders; `p_max` of a run may narrow it further.
    pub p_range: (u32, u32),
    pub n_start: NStart,
    /// Upper bound on `n` that applies regardless of the run's `n_max`.
    pub n_cap: Option<i64>,
    pub expectation: Expectation,
    /// For an incorrect statement, the id of its corrected form.
    pub corrected: Option<&'static str>,
    pub(crate) check: Check,
}

impl fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("id", &self.id)
            .field("formula", &self.formula)
            .field("p_range", &self.p_range)
            .field("n_start", &self.n_start)
            .field("n_cap", &self.n_cap)
            .field("expectation", &self.expectation)
            .finish()
    }
}

impl IdentitySpec {
    pub fn is_sampled(&self) -> bool {
        matches!(self.check, Check::Sampled { .. })
    }
}

pub fn lookup(id: &str) -> Result<IdentitySpec> {
    registry()
        .into_iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// `None` for randomized properties.
    pub p: Option<u32>,
    /// Grid index, or sample index for randomized properties.
    pub n: i64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridSummary {
    pub p_min: Option<u32>,
    pub p_max: Option<u32>,
    pub n_start: String,
    pub n_max: i64,
    pub points: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub id: &'static str,
    pub expectation: Expectation,
    pub formula: &'static str,
    pub grid: GridSummary,
    pub holds: bool,
    pub first_counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn as_expected(&self) -> bool {
        match self.expectation {
            Expectation::ExpectHold => self.holds,
            Expectation::ExpectFailAsPrinted => !self.holds,
        }
    }
}

/// Evaluates `spec` on `p <= p_max`, `n <= n_max`, scanning `(p, n)` in
/// lexicographic order and stopping at the first disagreement.
pub fn run_identity(spec: &IdentitySpec, p_max: u32, n_max: i64) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut points = 0u64;
    let mut first: Option<Counterexample> = None;

    let (grid_p, n_hi) = match spec.check {
        Check::Sampled { samples, eval } => {
            for idx in 0..samples {
                let (lhs, rhs) = eval(idx as u64)?;
                points += 1;
                if lhs != rhs {
                    first = Some(Counterexample {
                        p: None,
                        n: idx,
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    });
                    break;
                }
            }
            ((None, None), samples - 1)
        }
        Check::Pointwise(_) | Check::Batch(_) => {
            let n_hi = spec.n_cap.map_or(n_max, |cap| cap.min(n_max));
            let p_lo = spec.p_range.0;
            let p_hi = spec.p_range.1.min(p_max);
            'grid: for p in p_lo..=p_hi {
                let pi = p as i64;
                let n_lo = spec.n_start.at(pi);
                if n_lo > n_hi {
                    continue;
                }
                let sides: Box<dyn Iterator<Item = Result<Sides>>> = match spec.check {
                    Check::Pointwise(f) => Box::new((n_lo..=n_hi).map(move |n| f(pi, n))),
                    Check::Batch(f) => Box::new(f(pi, n_lo, n_hi)?.into_iter().map(Ok)),
                    Check::Sampled { .. } => unreachable!(),
                };
                for (n, side) in (n_lo..).zip(sides) {
                    let (lhs, rhs) = side?;
                    points += 1;
                    if lhs != rhs {
                        first = Some(Counterexample {
                            p: Some(p),
                            n,
                            lhs: lhs.to_string(),
                            rhs: rhs.to_string(),
                        });
                        break 'grid;
                    }
                }
            }
            ((Some(p_lo), Some(p_hi.max(p_lo))), n_hi)
        }
    };

    Ok(VerificationReport {
        id: spec.id,
        expectation: spec.expectation,
        formula: spec.formula,
        grid: GridSummary {
            p_min: grid_p.0,
            p_max: grid_p.1,
            n_start: spec.n_start.to_string(),
            n_max: n_hi,
            points,
        },
        holds: first.is_none(),
        first_counterexample: first,
        elapsed: started.elapsed(),
    })
}

/// Runs the registered identity `id`.
pub fn run_by_id(id: &str, p_max: u32, n_max: i64) -> Result<VerificationReport> {
    run_identity(&lookup(id)?, p_max, n_max)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub printed: &'static str,
    pub corrected: &'static str,
    pub printed_counterexample: Option<Counterexample>,
    pub corrected_holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationRun {
    pub p_max: u32,
    pub n_max: i64,
    pub success: bool,
    pub reports: Vec<VerificationReport>,
    pub discrepancies: Vec<Discrepancy>,
}

impl VerificationRun {
    pub fn report(&self, id: &str) -> Option<&VerificationReport> {
        self.reports.iter().find(|r| r.id == id)
    }

    pub fn elapsed(&self) -> Duration {
        self.reports.iter().map(|r| r.elapsed).sum()
    }
}

fn validate_grid(p_max: u32, n_max: i64) -> Result<()> {
    if p_max < 1 {
        return Err(Error::InvalidOrder(p_max));
    }
    if n_max < 2 * p_max as i64 + 2 {
        return Err(Error::domain(format!(
            "n_max must be at least 2*p_max + 2 = {} (got {n_max})",
            2 * p_max as i64 + 2
        )));
    }
    Ok(())
}

/// Runs the given specs in parallel and judges the run: every expected-to-hold
/// identity holds, and every as-printed statement fails while its corrected
/// form holds. Corrected forms are pulled in automatically.
pub fn run_specs(specs: &[IdentitySpec], p_max: u32, n_max: i64) -> Result<VerificationRun> {
    validate_grid(p_max, n_max)?;
    let mut selected: Vec<IdentitySpec> = specs.to_vec();
    for spec in specs {
        if let Some(c) = spec.corrected {
            if !selected.iter().any(|s| s.id == c) {
                selected.push(lookup(c)?);
            }
        }
    }
    let reports: Vec<VerificationReport> = selected
        .par_iter()
        .map(|spec| run_identity(spec, p_max, n_max))
        .collect::<Result<_>>()?;

    let mut discrepancies = Vec::new();
    let mut success = true;
    for (spec, report) in selected.iter().zip(&reports) {
        success &= report.as_expected();
        if let Some(corrected) = spec.corrected {
            let corrected_holds = reports
                .iter()
                .find(|r| r.id == corrected)
                .is_some_and(|r| r.holds);
            success &= corrected_holds;
            discrepancies.push(Discrepancy {
                printed: spec.id,
                corrected,
                printed_counterexample: report.first_counterexample.clone(),
                corrected_holds,
            });
        }
    }
    Ok(VerificationRun {
        p_max,
        n_max,
        success,
        reports,
        discrepancies,
    })
}

/// The full registry.
pub fn run_all(p_max: u32, n_max: i64) -> Result<VerificationRun> {
    run_specs(&registry(), p_max, n_max)
}
