use clap::{Args, ValueEnum};
use genstirling::asymptotics::{asym_error_study, Scalar, ShiftMode};
use serde_json::{json, Value};

use crate::error::{exit, CliError, CliResult};
use crate::input::TripleArgs;
use crate::output::{csv_writer, fraction, write_json, Format, Metadata};

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Shift {
    /// Study S(n+μ, μ, α, β, μr)
    #[default]
    Scaled,
    /// Study S(n+μ, μ, α, β, r)
    Fixed,
}

#[derive(Args, Debug)]
pub struct AsymArgs {
    #[command(flatten)]
    pub triple: TripleArgs,
    #[arg(long)]
    pub n: usize,
    /// Values of μ, each larger than n
    #[arg(long, value_delimiter = ',', required = true)]
    pub mu: Vec<usize>,
    /// Number of retained terms
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    #[arg(long, default_value_t = 0.0)]
    pub eps: f64,
    #[arg(long, value_enum, default_value = "scaled")]
    pub shift: Shift,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

fn scalar_json(s: &Scalar) -> Value {
    match s {
        Scalar::Exact(q) => json!(fraction(q)),
        Scalar::Float(x) => json!(x),
    }
}

pub fn run(args: &AsymArgs) -> CliResult<i32> {
    let resolved = args.triple.resolve()?;
    if let Some(&mu) = args.mu.iter().find(|&&mu| mu <= args.n) {
        return Err(CliError::usage(format!(
            "every mu must exceed n = {}, got {mu}",
            args.n
        )));
    }
    let shift = match args.shift {
        Shift::Scaled => ShiftMode::Scaled,
        Shift::Fixed => ShiftMode::Fixed,
    };
    let study = asym_error_study(args.n, &args.mu, &resolved.triple, args.eps, args.m, shift)?;
    eprintln!(
        "normalization {}; errors {}",
        study.normalization.name(),
        if study.decreasing {
            "decreasing"
        } else {
            "not decreasing"
        }
    );
    match args.format {
        Format::Csv => {
            let mut out = csv_writer();
            out.write_record(["mu", "exact", "estimate", "rel_error"])?;
            for row in &study.rows {
                out.write_record([
                    row.mu.to_string(),
                    row.exact.to_string(),
                    row.estimate.to_string(),
                    format!("{:e}", row.rel_error),
                ])?;
            }
            out.flush()?;
        }
        Format::Json => {
            let rows: Vec<_> = study
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "mu": row.mu,
                        "exact": scalar_json(&row.exact),
                        "estimate": scalar_json(&row.estimate),
                        "rel_error": row.rel_error,
                    })
                })
                .collect();
            write_json(
                "asym-study",
                Metadata {
                    triple: Some(&resolved.triple),
                    preset: resolved.preset,
                    algorithm: None,
                },
                json!({
                    "n": args.n,
                    "m": args.m,
                    "epsilon": args.eps,
                    "shift": if shift == ShiftMode::Scaled { "scaled" } else { "fixed" },
                    "normalization": study.normalization.name(),
                    "decreasing": study.decreasing,
                    "rows": rows,
                }),
            )?;
        }
    }
    Ok(exit::OK)
}
