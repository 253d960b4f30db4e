//! Checks the closed forms commonly quoted for the first Lucas-Leonardo
//! p-quaternions, and for the expansion of the generating-function numerator,
//! against exact computation.

use serde::Serialize;

use crate::error::Result;
use crate::leonardo::{quaternion_term, QuaternionFamily};
use crate::quaternion::{Algebra, Quaternion};
use crate::ring::Integers;
use crate::sequences::SequenceFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DisplayStatus {
    Holds,
    Fails,
    /// The display only makes sense for larger `p`.
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisplayCheck {
    pub label: &'static str,
    pub p: u32,
    pub status: DisplayStatus,
    /// What the display claims, rendered as quaternion coefficient lists.
    pub displayed: String,
    pub actual: String,
}

type Q = Quaternion<Integers>;

fn quat(c: [i64; 4]) -> Q {
    Algebra::standard(Integers).from_i64s(c)
}

fn render(v: &[Q]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

struct Display {
    label: &'static str,
    min_p: i64,
    claim: fn(i64) -> Vec<Q>,
    actual: fn(i64) -> Result<Vec<Q>>,
}

fn qr(p: i64, n: i64) -> Result<Q> {
    let family = QuaternionFamily::new(SequenceFamily::lucas_leonardo(p as u32)?);
    quaternion_term(family, n, &Integers)
}

/// `I + c` with `I = 1 + i + j + k`.
fn id_plus(c: [i64; 4]) -> Q {
    quat([1 + c[0], 1 + c[1], 1 + c[2], 1 + c[3]])
}

/// Coefficients of `x, x^{p-2}, x^{p-1}, x^p` in `sum_{n=1..p} (QR_n - QR_{n-1}) x^n`.
fn numerator_terms(p: i64) -> Result<Vec<Q>> {
    [1, p - 2, p - 1, p]
        .iter()
        .map(|&n| qr(p, n)?.sub(&qr(p, n - 1)?))
        .collect()
}

fn displays() -> [Display; 6] {
    [
        Display {
            label: "QR(p,0) = I + p(p+1)",
            min_p: 3,
            claim: |p| vec![id_plus([p * (p + 1), 0, 0, 0])],
            actual: |p| Ok(vec![qr(p, 0)?]),
        },
        Display {
            label: "QR(p,n) = I for 1 <= n <= p-3",
            min_p: 4,
            claim: |p| vec![id_plus([0; 4]); (p - 3) as usize],
            actual: |p| (1..=p - 3).map(|n| qr(p, n)).collect(),
        },
        Display {
            label: "QR(p,p-2) = I + (p+1)^2 k",
            min_p: 3,
            claim: |p| vec![id_plus([0, 0, 0, (p + 1) * (p + 1)])],
            actual: |p| Ok(vec![qr(p, p - 2)?]),
        },
        Display {
            label: "QR(p,p-1) = I + (p+1)((p+1)j + (p+2)k)",
            min_p: 2,
            claim: |p| vec![id_plus([0, 0, (p + 1) * (p + 1), (p + 1) * (p + 2)])],
            actual: |p| Ok(vec![qr(p, p - 1)?]),
        },
        Display {
            label: "QR(p,p) = I + (p+1)((p+1)i + (p+2)j + (p+4)k)",
            min_p: 2,
            claim: |p| vec![id_plus([0, (p + 1) * (p + 1), (p + 1) * (p + 2), (p + 1) * (p + 4)])],
            actual: |p| Ok(vec![qr(p, p)?]),
        },
        Display {
            label: "numerator = (p+1)(-px + (p+1)k x^{p-2} + (p+1)(j+k) x^{p-1} + ((p+1)i + j + 2k) x^p)",
            min_p: 4,
            claim: |p| {
                let s = p + 1;
                vec![
                    quat([-p * s, 0, 0, 0]),
                    quat([0, 0, 0, s * s]),
                    quat([0, 0, s * s, s * s]),
                    quat([0, s * s, s, 2 * s]),
                ]
            },
            actual: numerator_terms,
        },
    ]
}

/// Evaluates every display for `p = 1..=p_max`.
pub fn initial_display_audit(p_max: u32) -> Result<Vec<DisplayCheck>> {
    let mut out = Vec::new();
    for d in displays() {
        for p in 1..=p_max {
            let pi = i64::from(p);
            let check = if pi < d.min_p {
                DisplayCheck {
                    label: d.label,
                    p,
                    status: DisplayStatus::NotApplicable,
                    displayed: String::new(),
                    actual: String::new(),
                }
            } else {
                let claim = (d.claim)(pi);
                let actual = (d.actual)(pi)?;
                DisplayCheck {
                    label: d.label,
                    p,
                    status: if claim == actual {
                        DisplayStatus::Holds
                    } else {
                        DisplayStatus::Fails
                    },
                    displayed: render(&claim),
                    actual: render(&actual),
                }
            };
            out.push(check);
        }
    }
    Ok(out)
}
