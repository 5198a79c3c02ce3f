use clap::{Args, ValueEnum};
use genstirling::numeric::to_f64;
use genstirling::riordan::verify_aseq_identity;
use genstirling::stirling::{
    verify_difference_identity, verify_expansion, verify_pair_inverse, VerifyReport,
};
use genstirling::stirling_fn::egf_coefficients;
use genstirling::{Algorithm, Complex64, ParameterTriple, Rational, StirlingTriangle};
use serde_json::{json, Value};

use crate::error::{exit, CliResult};
use crate::input::{rational, TripleArgs};
use crate::output::{csv_writer, write_json, Format, Metadata};

const EGF_TOL: f64 = 1e-10;
const EGF_MAX_COLUMN: usize = 6;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    PairInverse,
    Expansion,
    Remark22,
    AseqIdentity,
    Egf,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[command(flatten)]
    pub triple: TripleArgs,
    /// Largest order checked
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    /// Sample points for the expansion check
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_value = "-2,-1,0,1/2,1,2,5"
    )]
    pub z: Vec<String>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

/// One suite's outcome in a form shared by exact and floating checks.
struct Outcome {
    suite: &'static str,
    passed: bool,
    checked: usize,
    violation: Option<(String, String, String)>,
}

impl Outcome {
    fn empty(suite: &'static str) -> Self {
        Outcome {
            suite,
            passed: true,
            checked: 0,
            violation: None,
        }
    }

    fn absorb(&mut self, report: VerifyReport) {
        self.checked += report.checked;
        if !report.passed && self.passed {
            self.passed = false;
            self.violation = report.first_violation.map(|v| (v.location, v.lhs, v.rhs));
        }
    }

    fn fail(&mut self, location: String, lhs: String, rhs: String) {
        if self.passed {
            self.passed = false;
            self.violation = Some((location, lhs, rhs));
        }
    }
}

/// EGF Taylor coefficients against the exact triangle, columns `k ≤ 6`.
fn egf_suite(n: usize, triple: &ParameterTriple) -> CliResult<Outcome> {
    let mut outcome = Outcome::empty("egf");
    let triangle = StirlingTriangle::build(Algorithm::Recurrence, n, triple)?;
    for k in 0..=n.min(EGF_MAX_COLUMN) {
        let column = egf_coefficients(Complex64::new(k as f64, 0.0), triple, 0.0, n)?;
        for (m, c) in column.iter().enumerate() {
            outcome.checked += 1;
            let exact = to_f64(&triangle.get(m, k));
            let err = (c - exact).norm();
            let ok = if exact == 0.0 {
                err <= EGF_TOL
            } else {
                err <= EGF_TOL * exact.abs()
            };
            if !ok {
                outcome.fail(format!("S({m},{k})"), format!("{c}"), format!("{exact}"));
            }
        }
    }
    Ok(outcome)
}

fn run_suite(
    suite: Suite,
    n: usize,
    triple: &ParameterTriple,
    zs: &[Rational],
) -> CliResult<Outcome> {
    Ok(match suite {
        Suite::PairInverse => {
            let mut o = Outcome::empty("pair-inverse");
            o.absorb(verify_pair_inverse(n, triple)?);
            o
        }
        Suite::Expansion => {
            let mut o = Outcome::empty("expansion");
            for m in 0..=n {
                o.absorb(verify_expansion(m, triple, zs)?);
            }
            o
        }
        Suite::Remark22 => {
            let mut o = Outcome::empty("remark22");
            for m in 0..=n {
                o.absorb(verify_difference_identity(m, triple)?);
            }
            o
        }
        Suite::AseqIdentity => {
            let mut o = Outcome::empty("aseq-identity");
            o.absorb(verify_aseq_identity(triple, n + 1)?);
            o
        }
        Suite::Egf => egf_suite(n, triple)?,
        Suite::All => unreachable!("expanded by the caller"),
    })
}

fn violation_json(v: &Option<(String, String, String)>) -> Value {
    match v {
        Some((location, lhs, rhs)) => json!({ "location": location, "lhs": lhs, "rhs": rhs }),
        None => Value::Null,
    }
}

fn exit_code(outcomes: &[Outcome]) -> i32 {
    if outcomes.iter().all(|o| o.passed) {
        exit::OK
    } else {
        exit::VERIFY_FAILED
    }
}

pub fn run(args: &VerifyArgs) -> CliResult<i32> {
    let resolved = args.triple.resolve()?;
    let triple = &resolved.triple;
    let zs = args
        .z
        .iter()
        .map(|z| rational(z))
        .collect::<CliResult<Vec<_>>>()?;
    let suites = match args.suite {
        Suite::All => vec![
            Suite::PairInverse,
            Suite::Expansion,
            Suite::Remark22,
            Suite::AseqIdentity,
            Suite::Egf,
        ],
        s => vec![s],
    };
    let outcomes = suites
        .into_iter()
        .map(|s| run_suite(s, args.n, triple, &zs))
        .collect::<CliResult<Vec<_>>>()?;
    let passed = exit_code(&outcomes) == exit::OK;

    match args.format {
        Format::Csv => {
            let mut out = csv_writer();
            out.write_record(["suite", "passed", "checked", "location", "lhs", "rhs"])?;
            for o in &outcomes {
                let (loc, lhs, rhs) = o.violation.clone().unwrap_or_default();
                out.write_record([
                    o.suite.to_string(),
                    o.passed.to_string(),
                    o.checked.to_string(),
                    loc,
                    lhs,
                    rhs,
                ])?;
            }
            out.flush()?;
        }
        Format::Json => {
            let list: Vec<_> = outcomes
                .iter()
                .map(|o| {
                    json!({
                        "suite": o.suite,
                        "passed": o.passed,
                        "checked": o.checked,
                        "first_violation": violation_json(&o.violation),
                    })
                })
                .collect();
            write_json(
                "verify-report",
                Metadata {
                    triple: Some(triple),
                    preset: resolved.preset,
                    algorithm: None,
                },
                json!({ "n": args.n, "passed": passed, "suites": list }),
            )?;
        }
    }
    for o in outcomes.iter().filter(|o| !o.passed) {
        if let Some((loc, lhs, rhs)) = &o.violation {
            eprintln!("{} failed at {loc}: {lhs} != {rhs}", o.suite);
        }
    }
    Ok(exit_code(&outcomes))
}
