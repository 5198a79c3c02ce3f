use clap::{Args, ValueEnum};
use genstirling::stirling_fn::{
    stirling_function, verify_fn_recurrence, Regime, StirlingFunctionQuery, ZeroOrderConvention,
};
use serde_json::json;

use crate::error::{exit, CliError, CliResult};
use crate::input::{complex, TripleArgs};
use crate::output::{complex_json, csv_writer, write_json, Format, Metadata};

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ZeroOrder {
    /// (e^ε − 1)^η / (β^η Γ(η+1))
    #[default]
    ClosedForm,
    /// 1 when η = 0, else 0
    Kronecker,
}

#[derive(Args, Debug)]
pub struct FunctionArgs {
    #[command(flatten)]
    pub triple: TripleArgs,
    /// Upper order γ, e.g. `1.5` or `2-0.5i`
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: String,
    /// Lower order η
    #[arg(long, allow_hyphen_values = true)]
    pub eta: String,
    /// Damping ε ≥ 0
    #[arg(long, default_value_t = 0.0)]
    pub eps: f64,
    /// Series tolerance
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Convention for S(0, η; ε)
    #[arg(long, value_enum, default_value = "closed-form")]
    pub zero_order: ZeroOrder,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

fn regime_name(regime: Regime) -> &'static str {
    match regime {
        Regime::FiniteSum => "finite-sum",
        Regime::Damped => "damped",
        Regime::Undamped => "undamped",
    }
}

pub fn run(args: &FunctionArgs) -> CliResult<i32> {
    let gamma = complex(&args.gamma)?;
    let eta = complex(&args.eta)?;
    if !(args.tol > 0.0) {
        return Err(CliError::usage("--tol must be positive"));
    }
    let resolved = args.triple.resolve()?;
    let convention = match args.zero_order {
        ZeroOrder::ClosedForm => ZeroOrderConvention::ClosedForm,
        ZeroOrder::Kronecker => ZeroOrderConvention::KroneckerDelta,
    };
    let query = StirlingFunctionQuery::new(gamma, eta, resolved.triple.clone())
        .with_epsilon(args.eps)
        .with_tol(args.tol)
        .with_zero_order(convention);
    let value = stirling_function(&query)?;
    // the spot-check needs S at γ−1 as well, which may leave the regime
    let residual = match verify_fn_recurrence(&query) {
        Ok(check) => {
            if !check.passed {
                eprintln!(
                    "warning: recurrence residual {:e} exceeds 10*tol",
                    check.residual
                );
            }
            Some(check.residual)
        }
        Err(err) => {
            eprintln!("note: recurrence spot-check skipped: {err}");
            None
        }
    };
    let regime = regime_name(value.regime);
    match args.format {
        Format::Csv => {
            let mut out = csv_writer();
            out.write_record(["gamma", "eta", "re", "im", "terms", "regime", "residual"])?;
            out.write_record([
                args.gamma.clone(),
                args.eta.clone(),
                value.value.re.to_string(),
                value.value.im.to_string(),
                value.terms.to_string(),
                regime.to_string(),
                residual.map_or_else(String::new, |r| format!("{r:e}")),
            ])?;
            out.flush()?;
        }
        Format::Json => {
            write_json(
                "function-value",
                Metadata {
                    triple: Some(&resolved.triple),
                    preset: resolved.preset,
                    algorithm: Some(regime),
                },
                json!({
                    "gamma": complex_json(gamma),
                    "eta": complex_json(eta),
                    "epsilon": args.eps,
                    "value": complex_json(value.value),
                    "terms": value.terms,
                    "extrapolated": value.extrapolated,
                    "regime": regime,
                    "recurrence_residual": residual,
                }),
            )?;
        }
    }
    Ok(exit::OK)
}
