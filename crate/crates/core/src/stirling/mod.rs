//! Generalized Stirling numbers `S(n,k,α,β,r)`, the connection coefficients
//! in
//!
//! ```text
//! ⟨z⟩_{n,−α} = Σ_k S(n,k,α,β,r) ⟨z−r⟩_{k,−β}
//! ```

mod algorithms;
pub mod presets;
mod verify;

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numeric::Rational;

pub use algorithms::{
    stirling_band, stirling_explicit, stirling_row_horner, stirling_triangle_dd,
    stirling_triangle_recurrence, DividedDifferenceTable,
};
pub use presets::{preset_lookup, Preset, PresetTriple, PRESETS};
pub use verify::{
    verify_difference_identity, verify_expansion, verify_pair_inverse, VerifyReport, Violation,
};

/// The parameters `(α, β, r)`. `(0, 0, 0)` is degenerate and rejected by
/// every computation except `S(0,0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParameterTriple {
    pub alpha: Rational,
    pub beta: Rational,
    pub r: Rational,
}

impl ParameterTriple {
    pub fn new(alpha: Rational, beta: Rational, r: Rational) -> Self {
        ParameterTriple { alpha, beta, r }
    }

    pub fn from_ints(alpha: i64, beta: i64, r: i64) -> Self {
        use crate::numeric::rat;
        Self::new(rat(alpha), rat(beta), rat(r))
    }

    pub fn is_degenerate(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.r.is_zero()
    }

    pub fn ensure_valid(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(Error::DegenerateTriple)
        } else {
            Ok(())
        }
    }

    /// `(β, α, −r)`, whose triangle is the matrix inverse of this one.
    pub fn dual(&self) -> Self {
        Self::new(self.beta.clone(), self.alpha.clone(), -self.r.clone())
    }

    /// The same `(α, β)` with `r` replaced.
    pub fn with_r(&self, r: Rational) -> Self {
        Self::new(self.alpha.clone(), self.beta.clone(), r)
    }
}

impl fmt::Display for ParameterTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.alpha, self.beta, self.r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Explicit,
    DividedDifference,
    Horner,
    Recurrence,
    Riordan,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Explicit,
        Algorithm::DividedDifference,
        Algorithm::Horner,
        Algorithm::Recurrence,
        Algorithm::Riordan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Explicit => "explicit",
            Algorithm::DividedDifference => "dd",
            Algorithm::Horner => "horner",
            Algorithm::Recurrence => "recurrence",
            Algorithm::Riordan => "riordan",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Rows `0..=n_max` of `S(n,k)`; row `n` has `n + 1` entries.
#[derive(Clone, Debug, PartialEq)]
pub struct StirlingTriangle {
    pub triple: ParameterTriple,
    pub rows: Vec<Vec<Rational>>,
    pub algorithm: Algorithm,
}

impl StirlingTriangle {
    /// Builds rows `0..=n_max` with the given algorithm.
    pub fn build(algorithm: Algorithm, n_max: usize, triple: &ParameterTriple) -> Result<Self> {
        triple.ensure_valid()?;
        let rows = match algorithm {
            Algorithm::Explicit => (0..=n_max)
                .map(|n| (0..=n).map(|k| stirling_explicit(n, k, triple)).collect())
                .collect::<Result<_>>()?,
            Algorithm::DividedDifference => (0..=n_max)
                .map(|n| stirling_triangle_dd(n, triple).map(|t| t.diagonal))
                .collect::<Result<_>>()?,
            Algorithm::Horner => (0..=n_max)
                .map(|n| stirling_row_horner(n, triple))
                .collect::<Result<_>>()?,
            Algorithm::Recurrence => return stirling_triangle_recurrence(n_max, triple),
            Algorithm::Riordan => return crate::riordan::riordan_triangle(triple, n_max),
        };
        Ok(StirlingTriangle {
            triple: triple.clone(),
            rows,
            algorithm,
        })
    }

    pub fn n_max(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    /// `S(n,k)`, zero for `k > n`. Panics if `n > n_max`.
    pub fn get(&self, n: usize, k: usize) -> Rational {
        self.rows[n].get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n]
    }

    /// First `(n, k)` where the two triangles differ.
    pub fn first_difference(&self, other: &StirlingTriangle) -> Option<(usize, usize)> {
        let n = self.rows.len().max(other.rows.len());
        for i in 0..n {
            let (a, b) = (self.rows.get(i), other.rows.get(i));
            let width = a.map_or(0, Vec::len).max(b.map_or(0, Vec::len));
            for k in 0..width {
                if a.and_then(|r| r.get(k)) != b.and_then(|r| r.get(k)) {
                    return Some((i, k));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn dual_swaps_and_negates() {
        let t = ParameterTriple::from_ints(1, 2, -3);
        assert_eq!(t.dual(), ParameterTriple::from_ints(2, 1, 3));
        assert_eq!(t.dual().dual(), t);
        assert_eq!(t.to_string(), "(1, 2, -3)");
    }

    #[test]
    fn degenerate_triple_rejected() {
        let zero = ParameterTriple::from_ints(0, 0, 0);
        for algo in Algorithm::ALL {
            assert_eq!(
                StirlingTriangle::build(algo, 3, &zero),
                Err(Error::DegenerateTriple)
            );
        }
    }

    #[test]
    fn all_algorithms_build_the_same_triangle() {
        let t = ParameterTriple::new(rat(2), crate::numeric::ratio(-1, 3), rat(5));
        let reference = StirlingTriangle::build(Algorithm::Recurrence, 7, &t).unwrap();
        for algo in Algorithm::ALL {
            let other = StirlingTriangle::build(algo, 7, &t).unwrap();
            assert_eq!(reference.first_difference(&other), None, "{algo}");
        }
    }
}
