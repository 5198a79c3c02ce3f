//! CSV and JSON emitters. Data goes to stdout, diagnostics to stderr.

use std::io::{self, Write};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::ValueEnum;
use genstirling::{Complex64, ParameterTriple, Rational};
use serde_json::{json, Value};

use crate::error::CliResult;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// `"p/q"`, always with the denominator.
pub fn fraction(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn complex_json(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

pub fn triple_json(triple: &ParameterTriple) -> Value {
    json!({
        "alpha": fraction(&triple.alpha),
        "beta": fraction(&triple.beta),
        "r": fraction(&triple.r),
    })
}

/// Seconds since the epoch, or `SOURCE_DATE_EPOCH` when set.
fn generated_at() -> u64 {
    std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or_else(|| {
            SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        })
}

pub struct Metadata<'a> {
    pub triple: Option<&'a ParameterTriple>,
    pub preset: Option<&'a str>,
    pub algorithm: Option<&'a str>,
}

pub fn write_json(kind: &str, metadata: Metadata<'_>, payload: Value) -> CliResult<()> {
    let record = json!({
        "schema": SCHEMA_VERSION,
        "kind": kind,
        "metadata": {
            "tool": "genstirling",
            "version": env!("CARGO_PKG_VERSION"),
            "generated_at": generated_at(),
            "triple": metadata.triple.map(triple_json),
            "preset": metadata.preset,
            "algorithm": metadata.algorithm,
        },
        "payload": payload,
    });
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, &record).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

pub fn csv_writer() -> csv::Writer<io::StdoutLock<'static>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(io::stdout().lock())
}
