use std::thread;

use clap::{Args, ValueEnum};
use genstirling::{Algorithm, StirlingTriangle};
use serde_json::json;

use crate::error::{exit, CliError, CliResult};
use crate::input::TripleArgs;
use crate::output::{csv_writer, fraction, write_json, Format, Metadata};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgoChoice {
    Explicit,
    Dd,
    Horner,
    Recurrence,
    Riordan,
    /// Run all five and require exact agreement
    All,
}

impl AlgoChoice {
    fn single(self) -> Option<Algorithm> {
        Some(match self {
            AlgoChoice::Explicit => Algorithm::Explicit,
            AlgoChoice::Dd => Algorithm::DividedDifference,
            AlgoChoice::Horner => Algorithm::Horner,
            AlgoChoice::Recurrence => Algorithm::Recurrence,
            AlgoChoice::Riordan => Algorithm::Riordan,
            AlgoChoice::All => return None,
        })
    }
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[command(flatten)]
    pub triple: TripleArgs,
    /// Last row
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "explicit")]
    pub algo: AlgoChoice,
    /// Emit only row n
    #[arg(long)]
    pub row: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

/// Exit 4 unless every triangle equals the first one entry for entry.
fn check_agreement(built: &[StirlingTriangle]) -> CliResult<()> {
    let reference = &built[0];
    for other in &built[1..] {
        if let Some((n, k)) = reference.first_difference(other) {
            return Err(CliError::new(
                exit::DISAGREEMENT,
                format!(
                    "{} disagrees with {} at S({n},{k}): {} vs {}",
                    other.algorithm,
                    reference.algorithm,
                    other.get(n, k),
                    reference.get(n, k)
                ),
            ));
        }
    }
    Ok(())
}

pub fn run(args: &TableArgs) -> CliResult<i32> {
    let resolved = args.triple.resolve()?;
    let triple = &resolved.triple;
    let triangle = match args.algo.single() {
        Some(algo) => StirlingTriangle::build(algo, args.n, triple)?,
        None => {
            let built: Vec<_> = thread::scope(|s| {
                let handles: Vec<_> = Algorithm::ALL
                    .iter()
                    .map(|&algo| s.spawn(move || StirlingTriangle::build(algo, args.n, triple)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("triangle build panicked"))
                    .collect()
            });
            let built = built.into_iter().collect::<Result<Vec<_>, _>>()?;
            check_agreement(&built)?;
            let names: Vec<_> = Algorithm::ALL.iter().map(|a| a.name()).collect();
            eprintln!(
                "agreement: {} match exactly on rows 0..={}",
                names.join(", "),
                args.n
            );
            built.into_iter().next().expect("five triangles")
        }
    };

    let rows = if args.row {
        args.n..=args.n
    } else {
        0..=args.n
    };
    match args.format {
        Format::Csv => {
            let mut out = csv_writer();
            out.write_record(["n", "k", "value"])?;
            for n in rows {
                for (k, v) in triangle.row(n).iter().enumerate() {
                    out.write_record([n.to_string(), k.to_string(), v.to_string()])?;
                }
            }
            out.flush()?;
        }
        Format::Json => {
            let algo = args.algo.single().map_or("all", Algorithm::name);
            let metadata = Metadata {
                triple: Some(triple),
                preset: resolved.preset,
                algorithm: Some(algo),
            };
            let fractions = |n: usize| triangle.row(n).iter().map(fraction).collect::<Vec<_>>();
            if args.row {
                write_json(
                    "row",
                    metadata,
                    json!({ "n": args.n, "values": fractions(args.n) }),
                )?;
            } else {
                let all: Vec<_> = rows.map(fractions).collect();
                write_json(
                    "triangle",
                    metadata,
                    json!({ "n_max": args.n, "rows": all }),
                )?;
            }
        }
    }
    Ok(exit::OK)
}

#[cfg(test)]
mod tests {
    use super::*;
    use genstirling::numeric::ratio;
    use genstirling::ParameterTriple;

    #[test]
    fn tampered_triangle_is_a_disagreement() {
        let triple = ParameterTriple::from_ints(1, 2, -1);
        let mut built: Vec<_> = Algorithm::ALL
            .iter()
            .map(|&a| StirlingTriangle::build(a, 5, &triple).unwrap())
            .collect();
        assert!(check_agreement(&built).is_ok());
        built[3].rows[4][2] += ratio(1, 3);
        let err = check_agreement(&built).unwrap_err();
        assert_eq!(err.code, exit::DISAGREEMENT);
        assert!(err.message.contains("S(4,2)"), "{}", err.message);
    }
}
