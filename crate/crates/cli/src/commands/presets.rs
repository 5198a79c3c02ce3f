use clap::Args;
use genstirling::stirling::PRESETS;
use serde_json::json;

use crate::error::{exit, CliResult};
use crate::output::{csv_writer, triple_json, write_json, Format, Metadata};

#[derive(Args, Debug)]
pub struct PresetsArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

pub fn run(args: &PresetsArgs) -> CliResult<i32> {
    let no_params = Default::default();
    // parameter-free presets show their triple
    let fixed = |i: usize| {
        let p = &PRESETS[i];
        p.params
            .is_empty()
            .then(|| p.instantiate(&no_params).ok())
            .flatten()
    };
    match args.format {
        Format::Csv => {
            let mut out = csv_writer();
            out.write_record(["name", "params", "triple", "dual", "description"])?;
            for (i, p) in PRESETS.iter().enumerate() {
                let inst = fixed(i);
                out.write_record([
                    p.name.to_string(),
                    p.params.join(" "),
                    inst.as_ref()
                        .map_or_else(String::new, |t| t.triple.to_string()),
                    inst.and_then(|t| t.dual)
                        .map_or_else(String::new, |d| d.to_string()),
                    p.description.to_string(),
                ])?;
            }
            out.flush()?;
        }
        Format::Json => {
            let list: Vec<_> = PRESETS
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    let inst = fixed(i);
                    json!({
                        "name": p.name,
                        "params": p.params,
                        "has_dual": p.has_dual,
                        "triple": inst.as_ref().map(|t| triple_json(&t.triple)),
                        "dual": inst.as_ref().and_then(|t| t.dual.as_ref()).map(triple_json),
                        "description": p.description,
                    })
                })
                .collect();
            write_json(
                "presets",
                Metadata {
                    triple: None,
                    preset: None,
                    algorithm: None,
                },
                json!({ "presets": list }),
            )?;
        }
    }
    Ok(exit::OK)
}
