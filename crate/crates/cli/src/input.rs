//! Argument parsing shared by the subcommands.

use std::collections::BTreeMap;

use clap::Args;
use genstirling::numeric::{parse_rational, to_f64};
use genstirling::stirling::preset_lookup;
use genstirling::{Complex64, ParameterTriple, Rational};

use crate::error::{CliError, CliResult};

#[derive(Args, Debug, Clone)]
pub struct TripleArgs {
    /// α, as `p/q`, an integer or a finite decimal
    #[arg(long, allow_hyphen_values = true, conflicts_with = "preset")]
    pub alpha: Option<String>,
    /// β
    #[arg(long, allow_hyphen_values = true, conflicts_with = "preset")]
    pub beta: Option<String>,
    /// r
    #[arg(long, allow_hyphen_values = true, conflicts_with = "preset")]
    pub r: Option<String>,
    /// Named special case, see `genstirling presets`
    #[arg(long)]
    pub preset: Option<String>,
    /// Preset parameter, e.g. `--param theta=1/2` (repeatable)
    #[arg(
        long = "param",
        value_name = "NAME=VALUE",
        allow_hyphen_values = true,
        requires = "preset"
    )]
    pub params: Vec<String>,
}

/// The triple after validation, plus the preset it came from.
pub struct ResolvedTriple {
    pub triple: ParameterTriple,
    pub preset: Option<&'static str>,
}

impl TripleArgs {
    pub fn resolve(&self) -> CliResult<ResolvedTriple> {
        let resolved = match &self.preset {
            Some(name) => {
                let mut params = BTreeMap::new();
                for item in &self.params {
                    let (key, value) = item.split_once('=').ok_or_else(|| {
                        CliError::usage(format!("expected NAME=VALUE, got `{item}`"))
                    })?;
                    params.insert(key.trim().to_string(), rational(value)?);
                }
                let preset = preset_lookup(name, &params)?;
                ResolvedTriple {
                    triple: preset.triple,
                    preset: Some(preset.name),
                }
            }
            None => {
                let (Some(a), Some(b), Some(r)) = (&self.alpha, &self.beta, &self.r) else {
                    return Err(CliError::usage("give --alpha, --beta and --r, or --preset"));
                };
                ResolvedTriple {
                    triple: ParameterTriple::new(rational(a)?, rational(b)?, rational(r)?),
                    preset: None,
                }
            }
        };
        resolved.triple.ensure_valid()?;
        Ok(resolved)
    }
}

pub fn rational(text: &str) -> CliResult<Rational> {
    parse_rational(text).map_err(|e| CliError::usage(e.to_string()))
}

fn real(text: &str) -> Option<f64> {
    parse_rational(text)
        .map(|q| to_f64(&q))
        .ok()
        .or_else(|| text.parse::<f64>().ok().filter(|x| x.is_finite()))
}

/// Parses `a`, `bi`, `a+bi` or `a-bi`; each part as in [`rational`].
pub fn complex(text: &str) -> CliResult<Complex64> {
    let err = || CliError::usage(format!("cannot parse `{text}` as a complex number"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = s.strip_suffix('i') else {
        return real(&s).map(|x| Complex64::new(x, 0.0)).ok_or_else(err);
    };
    // split at the last sign that is not leading and not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let re = real(re).ok_or_else(err)?;
    let im = real(im.strip_prefix('+').unwrap_or(im)).ok_or_else(err)?;
    Ok(Complex64::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;
    use genstirling::numeric::ratio;

    #[test]
    fn complex_forms() {
        assert_eq!(complex("1.5").unwrap(), Complex64::new(1.5, 0.0));
        assert_eq!(complex("2+3i").unwrap(), Complex64::new(2.0, 3.0));
        assert_eq!(complex("-2-0.5i").unwrap(), Complex64::new(-2.0, -0.5));
        assert_eq!(complex("i").unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(complex("1e-3+2e+1i").unwrap(), Complex64::new(1e-3, 20.0));
        assert_eq!(complex("1/2 - 3/4i").unwrap(), Complex64::new(0.5, -0.75));
        assert!(complex("2+").is_err());
        assert!(complex("abc").is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(rational("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(rational("0.125").unwrap(), ratio(1, 8));
        assert!(rational("1/0").is_err());
    }
}
