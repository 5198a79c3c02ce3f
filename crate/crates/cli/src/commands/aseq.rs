use clap::{Args, ValueEnum};
use genstirling::numeric::rat;
use genstirling::riordan::{a_sequence_closed, a_sequence_generic, stirling_generating_pair};
use serde_json::json;

use crate::error::{exit, CliError, CliResult};
use crate::input::TripleArgs;
use crate::output::{csv_writer, fraction, write_json, Format, Metadata};

pub const ORDER_ENV: &str = "GENSTIRLING_ORDER";

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// Closed form when α ≠ 0, generic otherwise
    #[default]
    Auto,
    /// Recurrence in the weights ⟨α⟩_{k+1,−β}/(k+1)!; needs α ≠ 0
    Closed,
    /// Reciprocal of h̄(t)/t, with h̄ the compositional inverse of h
    Generic,
}

#[derive(Args, Debug)]
pub struct AseqArgs {
    #[command(flatten)]
    pub triple: TripleArgs,
    /// Number of terms a_0, …, a_{terms−1}
    #[arg(long, env = ORDER_ENV, default_value_t = 32)]
    pub terms: usize,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: Method,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

pub fn run(args: &AseqArgs) -> CliResult<i32> {
    if args.terms == 0 {
        return Err(CliError::usage("--terms must be at least 1"));
    }
    let resolved = args.triple.resolve()?;
    let triple = &resolved.triple;
    let alpha_zero = triple.alpha == rat(0);
    let method = match args.method {
        Method::Auto if alpha_zero => Method::Generic,
        Method::Auto => Method::Closed,
        m => m,
    };
    let seq = match method {
        Method::Closed if alpha_zero => {
            return Err(CliError::new(
                exit::DEGENERATE,
                "the closed-form A-sequence needs alpha != 0; use --method generic",
            ))
        }
        Method::Closed => a_sequence_closed(triple, args.terms)?,
        _ => a_sequence_generic(&stirling_generating_pair(triple, args.terms + 1).h)?,
    };
    let terms = &seq.terms()[..args.terms.min(seq.len())];
    let method_name = if method == Method::Closed {
        "closed"
    } else {
        "generic"
    };
    match args.format {
        Format::Csv => {
            let mut out = csv_writer();
            out.write_record(["j", "value"])?;
            for (j, a) in terms.iter().enumerate() {
                out.write_record([j.to_string(), a.to_string()])?;
            }
            out.flush()?;
        }
        Format::Json => {
            let values: Vec<_> = terms.iter().map(fraction).collect();
            write_json(
                "aseq",
                Metadata {
                    triple: Some(triple),
                    preset: resolved.preset,
                    algorithm: Some(method_name),
                },
                json!({ "method": method_name, "terms": values }),
            )?;
        }
    }
    Ok(exit::OK)
}
