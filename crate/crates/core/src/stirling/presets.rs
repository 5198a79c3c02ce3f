//! Named special cases of `(α, β, r)`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::ParameterTriple;
use crate::error::{Error, Result};
use crate::numeric::{rat, Rational};

type Params = BTreeMap<String, Rational>;

pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    /// Free parameters, in the order they appear in the triple.
    pub params: &'static [&'static str],
    /// Whether the dual `(β, α, −r)` is listed as the partner family.
    pub has_dual: bool,
    build: fn(&Params) -> Result<ParameterTriple>,
}

impl Preset {
    pub fn instantiate(&self, params: &Params) -> Result<PresetTriple> {
        for key in params.keys() {
            if !self.params.contains(&key.as_str()) {
                return Err(Error::InvalidParameter(format!(
                    "preset `{}` has no parameter `{key}`",
                    self.name
                )));
            }
        }
        let triple = (self.build)(params)?;
        Ok(PresetTriple {
            name: self.name,
            dual: self.has_dual.then(|| triple.dual()),
            triple,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PresetTriple {
    pub name: &'static str,
    pub triple: ParameterTriple,
    pub dual: Option<ParameterTriple>,
}

fn get(params: &Params, preset: &str, name: &str) -> Result<Rational> {
    params
        .get(name)
        .cloned()
        .ok_or_else(|| Error::MissingParameter {
            preset: preset.to_string(),
            param: name.to_string(),
        })
}

fn nonzero(value: Rational, preset: &str, name: &str) -> Result<Rational> {
    if value.is_zero() {
        Err(Error::InvalidParameter(format!(
            "`{name}` must be nonzero for `{preset}`"
        )))
    } else {
        Ok(value)
    }
}

fn fixed(a: i64, b: i64, r: i64) -> Result<ParameterTriple> {
    Ok(ParameterTriple::from_ints(a, b, r))
}

pub static PRESETS: &[Preset] = &[
    Preset {
        name: "classical-first-kind",
        description: "signed Stirling numbers of the first kind s(n,k)",
        params: &[],
        has_dual: true,
        build: |_| fixed(1, 0, 0),
    },
    Preset {
        name: "classical-second-kind",
        description: "Stirling numbers of the second kind S(n,k)",
        params: &[],
        has_dual: true,
        build: |_| fixed(0, 1, 0),
    },
    Preset {
        name: "binomial",
        description: "binomial coefficients C(n,k)",
        params: &[],
        has_dual: false,
        build: |_| fixed(0, 0, 1),
    },
    Preset {
        name: "lah",
        description: "Lah numbers n! C(n-1,k-1)/k!",
        params: &[],
        has_dual: true,
        build: |_| fixed(-1, 1, 0),
    },
    Preset {
        name: "signless",
        description: "signless Stirling numbers of the first kind |s(n,k)|",
        params: &[],
        has_dual: true,
        build: |_| fixed(-1, 0, 0),
    },
    Preset {
        name: "carlitz-degenerate",
        description: "Carlitz degenerate Stirling numbers, theta != 0",
        params: &["theta"],
        has_dual: true,
        build: |p| {
            let theta = nonzero(
                get(p, "carlitz-degenerate", "theta")?,
                "carlitz-degenerate",
                "theta",
            )?;
            Ok(ParameterTriple::new(rat(1), theta, rat(0)))
        },
    },
    Preset {
        name: "carlitz-weighted",
        description: "Carlitz weighted Stirling numbers",
        params: &["lambda"],
        has_dual: true,
        build: |p| {
            Ok(ParameterTriple::new(
                rat(1),
                rat(0),
                -get(p, "carlitz-weighted", "lambda")?,
            ))
        },
    },
    Preset {
        name: "howard",
        description: "Howard weighted degenerate Stirling numbers",
        params: &["theta", "lambda"],
        has_dual: true,
        build: |p| {
            Ok(ParameterTriple::new(
                rat(1),
                get(p, "howard", "theta")?,
                -get(p, "howard", "lambda")?,
            ))
        },
    },
    Preset {
        name: "gould-hopper",
        description: "Gould-Hopper non-central Lah numbers",
        params: &["a", "b"],
        has_dual: true,
        build: |p| {
            let r = get(p, "gould-hopper", "b")? - get(p, "gould-hopper", "a")?;
            Ok(ParameterTriple::new(rat(0), rat(1), r))
        },
    },
    Preset {
        name: "charalambides-koutras",
        description: "Charalambides-Koutras non-central C numbers, s != 0",
        params: &["s", "a", "b"],
        has_dual: true,
        build: |p| {
            let s = nonzero(
                get(p, "charalambides-koutras", "s")?,
                "charalambides-koutras",
                "s",
            )?;
            let r = get(p, "charalambides-koutras", "b")? - get(p, "charalambides-koutras", "a")?;
            Ok(ParameterTriple::new(rat(1) / s, rat(1), r))
        },
    },
    Preset {
        name: "riordan-noncentral",
        description: "Riordan non-central Stirling numbers",
        params: &["a", "b"],
        has_dual: true,
        build: |p| {
            let r = get(p, "riordan-noncentral", "b")? - get(p, "riordan-noncentral", "a")?;
            Ok(ParameterTriple::new(rat(1), rat(0), r))
        },
    },
    Preset {
        name: "tsylova",
        description: "Tsylova Stirling numbers A(r,m)",
        params: &["alpha", "beta"],
        has_dual: true,
        build: |p| {
            Ok(ParameterTriple::new(
                get(p, "tsylova", "alpha")?,
                get(p, "tsylova", "beta")?,
                rat(0),
            ))
        },
    },
    Preset {
        name: "hsu-shiue",
        description: "Hsu-Shiue generalized Stirling numbers",
        params: &["alpha", "beta", "r"],
        has_dual: true,
        build: |p| {
            Ok(ParameterTriple::new(
                get(p, "hsu-shiue", "alpha")?,
                get(p, "hsu-shiue", "beta")?,
                get(p, "hsu-shiue", "r")?,
            ))
        },
    },
    Preset {
        name: "todorov",
        description: "Todorov Stirling numbers a_nk(x)",
        params: &["x"],
        has_dual: false,
        build: |p| {
            Ok(ParameterTriple::new(
                rat(1),
                get(p, "todorov", "x")?,
                rat(0),
            ))
        },
    },
    Preset {
        name: "ahuja-enneking",
        description: "Ahuja-Enneking associated Lah numbers B(n,r,k), r != 0",
        params: &["r"],
        has_dual: false,
        build: |p| {
            let r = nonzero(get(p, "ahuja-enneking", "r")?, "ahuja-enneking", "r")?;
            Ok(ParameterTriple::new(-(rat(1) / r), rat(1), rat(0)))
        },
    },
    Preset {
        name: "broder-r",
        description: "Broder r-Stirling numbers, shifted by r",
        params: &["r"],
        has_dual: false,
        build: |p| {
            Ok(ParameterTriple::new(
                rat(-1),
                rat(0),
                get(p, "broder-r", "r")?,
            ))
        },
    },
];

/// Looks up `name` (case-insensitive) and fills in its free parameters.
pub fn preset_lookup(name: &str, params: &Params) -> Result<PresetTriple> {
    let wanted = name.trim().to_ascii_lowercase();
    PRESETS
        .iter()
        .find(|p| p.name == wanted)
        .ok_or_else(|| Error::UnknownPreset(name.to_string()))?
        .instantiate(params)
}
