use std::time::Instant;

use leoquat::classification::classify;
use leoquat::leonardo::{quaternion_term, QuaternionFamily};
use leoquat::quaternion::Quaternion;
use leoquat::ring::{Integers, PrimeField, Ring};
use leoquat::sequences::{pisano_period, terms, SequenceFamily, SequenceKind};
use leoquat::verifier::{self, Counterexample, DisplayStatus, IdentitySpec, VerificationRun};
use serde::Serialize;

use crate::output::{table, Rendered};
use crate::{Cli, CliError, CliResult, Command};

/// Runs the selected command. `Ok(false)` means a verification failure.
pub fn run(cli: &Cli) -> CliResult<bool> {
    let p = cli.p.unwrap_or(1);
    match &cli.command {
        Command::Seq { family, n } => {
            seq(family_of(family.family, p)?, parse_range(n)?)?.emit(cli.format)?
        }
        Command::Quat {
            family, n, modulus, ..
        } => {
            let family = family_of(family.family, p)?;
            let range = parse_range(n)?;
            match modulus {
                None => quat(family, range, &Integers)?.emit(cli.format)?,
                Some(q) => quat(family, range, &PrimeField::new(*q)?)?.emit(cli.format)?,
            }
        }
        Command::Classify { family, q } => {
            classify_cmd(family_of(family.family, p)?, *q)?.emit(cli.format)?
        }
        Command::Pisano { m } => pisano(*m)?.emit(cli.format)?,
        Command::Verify { p_max, n_max, ids } => return verify(*p_max, *n_max, ids, cli),
    }
    Ok(true)
}

fn family_of(kind: SequenceKind, p: u32) -> CliResult<SequenceFamily> {
    Ok(SequenceFamily::new(kind, p)?)
}

/// `N` or the inclusive range `A..B`.
pub fn parse_range(s: &str) -> CliResult<(i64, i64)> {
    let index = |t: &str| -> CliResult<i64> {
        t.trim()
            .parse::<i64>()
            .ok()
            .filter(|v| *v >= 0)
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "invalid index {t:?}: expected a non-negative integer"
                ))
            })
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (index(a)?, index(b)?),
        None => {
            let v = index(s)?;
            (v, v)
        }
    };
    if a > b {
        return Err(CliError::Usage(format!(
            "empty range {s}: start exceeds end"
        )));
    }
    Ok((a, b))
}

#[derive(Serialize)]
struct SeqDocument {
    family: &'static str,
    p: u32,
    terms: Vec<SeqRecord>,
}

#[derive(Clone, Serialize)]
struct SeqRecord {
    n: i64,
    value: String,
}

fn seq(family: SequenceFamily, (a, b): (i64, i64)) -> CliResult<Rendered<SeqDocument, SeqRecord>> {
    let values = terms(family, a, b)?;
    let records: Vec<SeqRecord> = (a..=b)
        .zip(values)
        .map(|(n, v)| SeqRecord {
            n,
            value: v.to_string(),
        })
        .collect();
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| vec![r.n.to_string(), r.value.clone()])
        .collect();
    Ok(Rendered {
        table: table(&["n", "value"], &rows),
        document: SeqDocument {
            family: family.kind().name(),
            p: family.p(),
            terms: records.clone(),
        },
        records,
    })
}

#[derive(Serialize)]
struct QuatDocument {
    family: &'static str,
    p: u32,
    ring: String,
    terms: Vec<QuatRecord>,
}

#[derive(Clone, Serialize)]
struct QuatRecord {
    n: i64,
    quaternion: String,
    x1: String,
    x2: String,
    x3: String,
    x4: String,
    norm: String,
    /// `zero_divisor`, `invertible` or `zero` over F_q; absent over Z.
    verdict: Option<&'static str>,
    /// Nonzero `y` with `x y = y x = 0`.
    witness: Option<String>,
    inverse: Option<String>,
}

/// Per-ring extras: the invertibility verdict only exists over F_q.
pub trait Verdict: Ring {
    fn verdict(
        x: &Quaternion<Self>,
    ) -> CliResult<(Option<&'static str>, Option<String>, Option<String>)>;
}

impl Verdict for Integers {
    fn verdict(
        _: &Quaternion<Self>,
    ) -> CliResult<(Option<&'static str>, Option<String>, Option<String>)> {
        Ok((None, None, None))
    }
}

impl Verdict for PrimeField {
    fn verdict(
        x: &Quaternion<Self>,
    ) -> CliResult<(Option<&'static str>, Option<String>, Option<String>)> {
        if x.is_zero() {
            return Ok((Some("zero"), None, None));
        }
        if x.is_zero_divisor()? {
            Ok((
                Some("zero_divisor"),
                Some(x.annihilator_witness()?.to_string()),
                None,
            ))
        } else {
            Ok((Some("invertible"), None, Some(x.inverse()?.to_string())))
        }
    }
}

fn quat<R>(
    family: SequenceFamily,
    (a, b): (i64, i64),
    ring: &R,
) -> CliResult<Rendered<QuatDocument, QuatRecord>>
where
    R: Verdict + leoquat::leonardo::LiftRing,
    R::Elem: std::fmt::Display,
{
    let qf = QuaternionFamily::new(family);
    let mut records = Vec::new();
    for n in a..=b {
        let x = quaternion_term(qf, n, ring)?;
        let [x1, x2, x3, x4] = x.coeffs().clone().map(|c| c.to_string());
        let (verdict, witness, inverse) = R::verdict(&x)?;
        records.push(QuatRecord {
            n,
            quaternion: x.to_string(),
            x1,
            x2,
            x3,
            x4,
            norm: x.norm().to_string(),
            verdict,
            witness,
            inverse,
        });
    }
    let descriptor = ring.descriptor().to_string();
    let over_field = records.iter().any(|r| r.verdict.is_some());
    let mut header = vec!["n", "quaternion", "norm"];
    if over_field {
        header.extend(["verdict", "witness / inverse"]);
    }
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            let mut row = vec![r.n.to_string(), r.quaternion.clone(), r.norm.clone()];
            if over_field {
                row.push(r.verdict.unwrap_or_default().replace('_', " "));
                row.push(
                    r.witness
                        .clone()
                        .or_else(|| r.inverse.clone())
                        .unwrap_or_default(),
                );
            }
            row
        })
        .collect();
    Ok(Rendered {
        table: format!("{} over {descriptor}\n", family) + &table(&header, &rows),
        document: QuatDocument {
            family: family.kind().name(),
            p: family.p(),
            ring: descriptor,
            terms: records.clone(),
        },
        records,
    })
}

#[derive(Clone, Serialize)]
struct ClassifyDocument {
    family: &'static str,
    p: u32,
    q: u64,
    /// Residues are taken modulo this value.
    modulus: u64,
    zero_divisor_residues: Vec<u64>,
    all_invertible: bool,
    /// Minimal period of the sequence modulo q.
    sequence_period: u64,
    norm_period: u64,
    pisano_period: u64,
    /// Residues, modulo `sequence_period`, where the quaternion is zero.
    vanishing_residues: Vec<u64>,
}

#[derive(Serialize)]
struct ClassifyRecord {
    family: &'static str,
    p: u32,
    q: u64,
    modulus: u64,
    zero_divisor_residues: String,
    all_invertible: bool,
    sequence_period: u64,
    norm_period: u64,
    pisano_period: u64,
}

fn join(v: &[u64], sep: &str) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(sep)
}

fn classify_cmd(
    family: SequenceFamily,
    q: u64,
) -> CliResult<Rendered<ClassifyDocument, ClassifyRecord>> {
    let c = classify(QuaternionFamily::new(family), q)?;
    let (modulus, residues) = c.canonical();
    let doc = ClassifyDocument {
        family: family.kind().name(),
        p: family.p(),
        q,
        modulus,
        zero_divisor_residues: residues,
        all_invertible: c.all_invertible,
        sequence_period: c.modulus,
        norm_period: c.norm_period,
        pisano_period: c.pisano,
        vanishing_residues: c.vanishing.clone(),
    };
    let mut table = format!("{family} over F_{q}\n");
    if doc.all_invertible {
        table += "all invertible\n";
    } else if doc.zero_divisor_residues.is_empty() {
        table += "no zero divisors\n";
    } else {
        table += &format!(
            "zero divisor iff n = {} (mod {modulus})\n",
            join(&doc.zero_divisor_residues, ", ")
        );
    }
    if !doc.vanishing_residues.is_empty() {
        table += &format!(
            "vanishes iff n = {} (mod {})\n",
            join(&doc.vanishing_residues, ", "),
            c.modulus
        );
    }
    table += &format!(
        "sequence period {}, norm period {}, pisano period {}\n",
        doc.sequence_period, doc.norm_period, doc.pisano_period
    );
    let record = ClassifyRecord {
        family: doc.family,
        p: doc.p,
        q,
        modulus,
        zero_divisor_residues: join(&doc.zero_divisor_residues, " "),
        all_invertible: doc.all_invertible,
        sequence_period: doc.sequence_period,
        norm_period: doc.norm_period,
        pisano_period: doc.pisano_period,
    };
    Ok(Rendered {
        document: doc,
        records: vec![record],
        table,
    })
}

#[derive(Serialize)]
struct PisanoDocument {
    m: u64,
    period: usize,
    cycle: Vec<u64>,
}

#[derive(Serialize)]
struct PisanoRecord {
    m: u64,
    period: usize,
    cycle: String,
}

fn pisano(m: u64) -> CliResult<Rendered<PisanoDocument, PisanoRecord>> {
    let pp = pisano_period(m)?;
    let cycle = join(&pp.cycle, ",");
    Ok(Rendered {
        table: format!("pi({m}) = {}\n{cycle}\n", pp.length),
        records: vec![PisanoRecord {
            m,
            period: pp.length,
            cycle: join(&pp.cycle, " "),
        }],
        document: PisanoDocument {
            m,
            period: pp.length,
            cycle: pp.cycle,
        },
    })
}

#[derive(Serialize)]
struct VerifyDocument<'a> {
    #[serde(flatten)]
    run: &'a VerificationRun,
    display_audit: Vec<verifier::DisplayCheck>,
}

#[derive(Serialize)]
struct VerifyRecord {
    id: &'static str,
    expectation: &'static str,
    holds: bool,
    points: u64,
    first_counterexample: String,
    formula: &'static str,
}

fn render_counterexample(c: &Option<Counterexample>) -> String {
    match c {
        None => String::new(),
        Some(Counterexample { p: Some(p), n, .. }) => format!("p={p} n={n}"),
        Some(Counterexample { p: None, n, .. }) => format!("sample={n}"),
    }
}

fn verify(p_max: u32, n_max: i64, ids: &[String], cli: &Cli) -> CliResult<bool> {
    let specs: Vec<IdentitySpec> = if ids.is_empty() {
        verifier::registry()
    } else {
        ids.iter()
            .map(|id| verifier::lookup(id).map_err(|e| CliError::Usage(e.to_string())))
            .collect::<CliResult<_>>()?
    };
    let started = Instant::now();
    let run = verifier::run_specs(&specs, p_max, n_max)?;
    let audit = verifier::initial_display_audit(p_max)?;
    let elapsed = started.elapsed();

    let records: Vec<VerifyRecord> = run
        .reports
        .iter()
        .map(|r| VerifyRecord {
            id: r.id,
            expectation: match r.expectation {
                verifier::Expectation::ExpectHold => "expect_hold",
                verifier::Expectation::ExpectFailAsPrinted => "expect_fail_as_printed",
            },
            holds: r.holds,
            points: r.grid.points,
            first_counterexample: render_counterexample(&r.first_counterexample),
            formula: r.formula,
        })
        .collect();

    let rows: Vec<Vec<String>> = run
        .reports
        .iter()
        .zip(&records)
        .map(|(r, rec)| {
            let verdict = match (r.as_expected(), r.holds) {
                (true, true) => "PASS",
                (true, false) => "XFAIL",
                (false, _) => "FAIL",
            };
            vec![
                verdict.into(),
                rec.id.into(),
                rec.points.to_string(),
                rec.first_counterexample.clone(),
            ]
        })
        .collect();
    let mut text = table(&["status", "id", "points", "first counterexample"], &rows);
    for d in &run.discrepancies {
        text += &format!(
            "ledger: {} fails at {}; {} {}\n",
            d.printed,
            render_counterexample(&d.printed_counterexample),
            d.corrected,
            if d.corrected_holds { "holds" } else { "FAILS" }
        );
    }
    for check in audit.iter().filter(|c| c.status == DisplayStatus::Fails) {
        text += &format!(
            "display: {} fails at p={}: actual {}\n",
            check.label, check.p, check.actual
        );
    }
    text += if run.success {
        "verification succeeded\n"
    } else {
        "verification FAILED\n"
    };

    Rendered {
        document: VerifyDocument {
            run: &run,
            display_audit: audit,
        },
        records,
        table: text,
    }
    .emit(cli.format)?;
    eprintln!(
        "verified {} identities on p <= {p_max}, n <= {n_max} in {elapsed:.2?}",
        run.reports.len()
    );
    Ok(run.success)
}
