//! Large-`μ` expansions of `S(n+μ, μ)` (for `ε = 0`) and `S(n, μ; ε)`
//! (for `ε ≠ 0`) through the partition weights
//!
//! ```text
//! W(n,j) = Σ_{partitions of n into n−j parts} Π a_i^{k_i} / Π k_i!
//! ```
//!
//! With `g(z) = Σ a_j z^j`, `[zⁿ] g(z)^μ / [μ]_n = Σ_j a₀^{μ−n+j} W(n,j) / [μ−n+j]_j`
//! holds exactly once every `j < n` is kept; truncating after `m` terms leaves
//! an error of order `μ^{−m}`.

pub mod partitions;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{FromPrimitive, Num, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::factorial::gen_factorial;
use crate::numeric::{factorial, rat, to_f64, Rational};
use crate::stirling::{stirling_band, ParameterTriple};
use partitions::{multiplicities, PartitionsIntoParts};

/// `W(n,j)` for base coefficients `a = (a₀, a₁, …)`; `a₀` is not used.
/// `W(0,0) = 1`.
pub fn w_coefficient<T>(n: usize, j: usize, a: &[T]) -> Result<T>
where
    T: Clone + Num + FromPrimitive,
{
    if n == 0 && j == 0 {
        return Ok(T::one());
    }
    if j >= n {
        return Err(Error::Range(format!(
            "W(n,j) needs j < n, got n = {n}, j = {j}"
        )));
    }
    // the largest part of a partition of n into n−j parts is j+1
    if a.len() < j + 2 {
        return Err(Error::Range(format!(
            "W({n},{j}) needs coefficients up to a_{}, got {}",
            j + 1,
            a.len()
        )));
    }
    let factorials: Vec<T> = {
        let mut f = vec![T::one()];
        for i in 1..=n {
            f.push(f[i - 1].clone() * T::from_usize(i).expect("small integer"));
        }
        f
    };
    let mut total = T::zero();
    for partition in PartitionsIntoParts::new(n, n - j) {
        let k = multiplicities(&partition, n);
        let mut term = T::one();
        for (i, &ki) in k.iter().enumerate().skip(1) {
            for _ in 0..ki {
                term = term * a[i].clone();
            }
            term = term / factorials[ki].clone();
        }
        total = total + term;
    }
    Ok(total)
}

/// `W(n,j)` for all `0 ≤ j < n ≤ n_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct PartitionWeightTable<T> {
    pub base: Vec<T>,
    table: BTreeMap<(usize, usize), T>,
}

impl<T: Clone + Num + FromPrimitive> PartitionWeightTable<T> {
    pub fn build(base: Vec<T>, n_max: usize) -> Result<Self> {
        let mut table = BTreeMap::new();
        table.insert((0, 0), T::one());
        for n in 1..=n_max {
            for j in 0..n {
                table.insert((n, j), w_coefficient(n, j, &base)?);
            }
        }
        Ok(PartitionWeightTable { base, table })
    }

    pub fn get(&self, n: usize, j: usize) -> Option<&T> {
        self.table.get(&(n, j))
    }
}

/// A value that is exact when the inputs allow it.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Float(f64),
}

impl Scalar {
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(q) => to_f64(q),
            Scalar::Float(x) => *x,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(q) => write!(f, "{q}"),
            Scalar::Float(x) => write!(f, "{x:e}"),
        }
    }
}

/// Coefficients `a_j` of the expansion.
#[derive(Clone, Debug, PartialEq)]
pub enum BaseCoefficients {
    /// `ε = 0`: `a_j = (⟨r+β⟩_{j+1,−α} − ⟨r⟩_{j+1,−α}) / ((j+1)! β)`, `a₀ = 1`.
    Exact(Vec<Rational>),
    /// `ε ≠ 0`: `a_j = (e^ε ⟨r+β⟩_{j,−α} − ⟨r⟩_{j,−α}) / (j! β)`,
    /// `a₀ = (e^ε − 1)/β`.
    Float(Vec<f64>),
}

impl BaseCoefficients {
    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            BaseCoefficients::Exact(a) => a.iter().map(to_f64).collect(),
            BaseCoefficients::Float(a) => a.clone(),
        }
    }
}

/// `a₀, …, a_{j_max}` for the triple as given (no `μ` scaling of `r`).
pub fn expansion_coefficients(
    triple: &ParameterTriple,
    epsilon: f64,
    j_max: usize,
) -> Result<BaseCoefficients> {
    if triple.beta.is_zero() {
        return Err(Error::Domain("the expansion needs β ≠ 0".into()));
    }
    check_epsilon(epsilon)?;
    let neg_alpha = -triple.alpha.clone();
    let r_beta = &triple.r + &triple.beta;
    if epsilon == 0.0 {
        let a = (0..=j_max)
            .map(|j| {
                let diff = gen_factorial(&r_beta, j + 1, &neg_alpha)
                    - gen_factorial(&triple.r, j + 1, &neg_alpha);
                diff / (factorial(j + 1) * &triple.beta)
            })
            .collect();
        return Ok(BaseCoefficients::Exact(a));
    }
    let e = epsilon.exp();
    let beta = to_f64(&triple.beta);
    let a = (0..=j_max)
        .map(|j| {
            let shifted = to_f64(&gen_factorial(&r_beta, j, &neg_alpha));
            let plain = to_f64(&gen_factorial(&triple.r, j, &neg_alpha));
            let numerator = if j == 0 {
                epsilon.exp_m1()
            } else {
                e * shifted - plain
            };
            numerator / (to_f64(&factorial(j)) * beta)
        })
        .collect();
    Ok(BaseCoefficients::Float(a))
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon >= 0.0 && epsilon.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "ε must be finite and nonnegative, got {epsilon}"
        )))
    }
}

/// How `r` relates to the large parameter `μ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ShiftMode {
    /// Expands `S(·, μ, α, β, μr)`; the coefficients use `r`.
    #[default]
    Scaled,
    /// Expands `S(·, μ, α, β, r)`; the coefficients use `r/μ`.
    Fixed,
}

/// Denominator applied to `S(n+μ, μ)` in the `ε = 0` expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// `[μ]_n [n+μ]_μ`.
    FallingMu,
    /// `[μ]_n [n+μ]_n`, i.e. `[μ]_n (n+μ)!/μ!`.
    FallingN,
}

impl Normalization {
    pub fn name(self) -> &'static str {
        match self {
            Normalization::FallingMu => "[mu]_n [n+mu]_mu",
            Normalization::FallingN => "[mu]_n [n+mu]_n",
        }
    }

    fn denominator(self, n: usize, mu: usize) -> Rational {
        let falling = |x: usize, k: usize| gen_factorial(&rat(x as i64), k, &rat(-1));
        let tail = match self {
            Normalization::FallingMu => falling(n + mu, mu),
            Normalization::FallingN => falling(n + mu, n),
        };
        falling(mu, n) * tail
    }
}

/// `[x]_j` for integer `x`.
fn falling_int(x: i64, j: usize) -> Rational {
    gen_factorial(&rat(x), j, &rat(-1))
}

/// Finds which normalization turns `S(n+μ, μ, α, β, μr)` into the full
/// partition sum, by exact comparison over small `n`, `μ` and a few triples.
pub fn resolve_normalization() -> Result<Normalization> {
    let triples = [
        ParameterTriple::from_ints(0, 1, 0),
        ParameterTriple::from_ints(1, 2, 1),
        ParameterTriple::new(crate::numeric::ratio(-1, 2), rat(3), rat(-2)),
    ];
    let candidates = [Normalization::FallingMu, Normalization::FallingN];
    let mut matching = candidates.to_vec();
    for triple in &triples {
        for n in 1..=4 {
            for mu in n + 1..=n + 5 {
                let full = partition_sum_exact(n, mu, triple, n, ShiftMode::Scaled)?;
                let s = exact_stirling(n, mu, triple, ShiftMode::Scaled)?;
                matching.retain(|c| &s / c.denominator(n, mu) == full);
            }
        }
    }
    match matching.as_slice() {
        [only] => Ok(*only),
        _ => Err(Error::Domain(format!(
            "no unique normalization matches the exact values: {matching:?}"
        ))),
    }
}

fn shifted_triple(
    triple: &ParameterTriple,
    mu: usize,
    shift: ShiftMode,
    for_coefficients: bool,
) -> ParameterTriple {
    let mu_q = rat(mu as i64);
    match (shift, for_coefficients) {
        (ShiftMode::Scaled, false) => triple.with_r(&triple.r * mu_q),
        (ShiftMode::Fixed, true) => triple.with_r(&triple.r / mu_q),
        _ => triple.clone(),
    }
}

/// `S(n+μ, μ)` with `r` shifted per `shift`.
fn exact_stirling(
    n: usize,
    mu: usize,
    triple: &ParameterTriple,
    shift: ShiftMode,
) -> Result<Rational> {
    let t = shifted_triple(triple, mu, shift, false);
    let bands = stirling_band(n, mu, &t)?;
    Ok(bands[n][mu].clone())
}

fn check_orders(n: usize, mu: usize, m: usize) -> Result<()> {
    if mu <= n {
        return Err(Error::Range(format!(
            "the expansion needs μ > n, got n = {n}, μ = {mu}"
        )));
    }
    if m == 0 {
        return Err(Error::Range(
            "at least one term (m ≥ 1) must be kept".into(),
        ));
    }
    Ok(())
}

/// `Σ_{j < min(m, n)} W(n,j) / [μ−n+j]_j` with exact coefficients.
fn partition_sum_exact(
    n: usize,
    mu: usize,
    triple: &ParameterTriple,
    m: usize,
    shift: ShiftMode,
) -> Result<Rational> {
    if n == 0 {
        return Ok(Rational::one());
    }
    let coeff_triple = shifted_triple(triple, mu, shift, true);
    let BaseCoefficients::Exact(a) = expansion_coefficients(&coeff_triple, 0.0, n)? else {
        unreachable!("ε = 0 gives exact coefficients")
    };
    let mut sum = Rational::zero();
    for j in 0..m.min(n) {
        sum += w_coefficient(n, j, &a)? / falling_int((mu + j - n) as i64, j);
    }
    Ok(sum)
}

/// The `m`-term approximation (`m ≥ 1`, keeping `j = 0..m−1`).
///
/// `ε = 0`: approximates `S(n+μ, μ) / ([μ]_n [n+μ]_n)` exactly in rationals.
/// `ε ≠ 0`: approximates `S(n, μ; ε) μ! / (n! [μ]_n)` divided by
/// `(β/(e^ε−1))^{n−μ}`, i.e. returns `Σ_j a₀^j W(n,j) / [μ−n+j]_j`.
pub fn asym_estimate(
    n: usize,
    mu: usize,
    triple: &ParameterTriple,
    epsilon: f64,
    m: usize,
    shift: ShiftMode,
) -> Result<Scalar> {
    check_orders(n, mu, m)?;
    triple.ensure_valid()?;
    if epsilon == 0.0 {
        return partition_sum_exact(n, mu, triple, m, shift).map(Scalar::Exact);
    }
    if n == 0 {
        expansion_coefficients(triple, epsilon, 0)?;
        return Ok(Scalar::Float(1.0));
    }
    let coeff_triple = shifted_triple(triple, mu, shift, true);
    let a = expansion_coefficients(&coeff_triple, epsilon, n)?.to_f64();
    let mut sum = 0.0;
    let mut a0_power = 1.0;
    for j in 0..m.min(n) {
        let w = w_coefficient(n, j, &a)?;
        sum += a0_power * w / to_f64(&falling_int((mu + j - n) as i64, j));
        a0_power *= a[0];
    }
    Ok(Scalar::Float(sum))
}

/// The left-hand side that [`asym_estimate`] approximates, from the exact
/// recurrence.
///
/// For `ε ≠ 0` the value comes from `U(γ,k) = S(γ,k;ε) k! c^k`,
/// `c = β/(e^ε − 1)`, which satisfies
/// `U(γ,k) = (r + kβ − (γ−1)α) U(γ−1,k) + k c U(γ−1,k−1)` with `U(0,k) = 1`
/// and stays in floating-point range for large `μ`.
pub fn exact_normalized(
    n: usize,
    mu: usize,
    triple: &ParameterTriple,
    epsilon: f64,
    shift: ShiftMode,
    normalization: Normalization,
) -> Result<Scalar> {
    if mu <= n {
        return Err(Error::Range(format!(
            "the expansion needs μ > n, got n = {n}, μ = {mu}"
        )));
    }
    triple.ensure_valid()?;
    check_epsilon(epsilon)?;
    if triple.beta.is_zero() {
        return Err(Error::Domain("the expansion needs β ≠ 0".into()));
    }
    if epsilon == 0.0 {
        let s = exact_stirling(n, mu, triple, shift)?;
        return Ok(Scalar::Exact(s / normalization.denominator(n, mu)));
    }
    if normalization != Normalization::FallingN {
        return Err(Error::Domain(format!(
            "normalization {} is not defined for ε ≠ 0",
            normalization.name()
        )));
    }
    let t = shifted_triple(triple, mu, shift, false);
    let (alpha, beta, r) = (to_f64(&t.alpha), to_f64(&t.beta), to_f64(&t.r));
    let c = beta / epsilon.exp_m1();
    let mut u = vec![1.0f64; mu + 1];
    for gamma in 1..=n {
        let mut next = vec![0.0; mu + 1];
        for k in 0..=mu {
            let a = r + k as f64 * beta - (gamma as f64 - 1.0) * alpha;
            next[k] = a * u[k];
            if k > 0 {
                next[k] += k as f64 * c * u[k - 1];
            }
        }
        u = next;
    }
    let value =
        u[mu] / (c.powi(n as i32) * to_f64(&factorial(n)) * to_f64(&falling_int(mu as i64, n)));
    Ok(Scalar::Float(value))
}

#[derive(Clone, Debug, PartialEq)]
pub struct AsymRow {
    pub mu: usize,
    pub exact: Scalar,
    pub estimate: Scalar,
    pub rel_error: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AsymStudy {
    pub rows: Vec<AsymRow>,
    /// Each error is below the previous one (or zero).
    pub decreasing: bool,
    pub normalization: Normalization,
}

/// Exact vs `m`-term estimate along `mu_grid`.
pub fn asym_error_study(
    n: usize,
    mu_grid: &[usize],
    triple: &ParameterTriple,
    epsilon: f64,
    m: usize,
    shift: ShiftMode,
) -> Result<AsymStudy> {
    let normalization = if epsilon == 0.0 {
        resolve_normalization()?
    } else {
        Normalization::FallingN
    };
    let mut rows = Vec::with_capacity(mu_grid.len());
    for &mu in mu_grid {
        let exact = exact_normalized(n, mu, triple, epsilon, shift, normalization)?;
        let estimate = asym_estimate(n, mu, triple, epsilon, m, shift)?;
        let rel_error = match (&exact, &estimate) {
            (Scalar::Exact(x), Scalar::Exact(y)) if !x.is_zero() => to_f64(&((x - y) / x).abs()),
            _ => {
                let (x, y) = (exact.to_f64(), estimate.to_f64());
                (x - y).abs() / x.abs()
            }
        };
        rows.push(AsymRow {
            mu,
            exact,
            estimate,
            rel_error,
        });
    }
    let decreasing = rows
        .windows(2)
        .all(|w| w[1].rel_error < w[0].rel_error || w[1].rel_error == 0.0);
    Ok(AsymStudy {
        rows,
        decreasing,
        normalization,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;
    use crate::numeric::series::TruncatedSeries;
    use crate::stirling_fn::{stirling_function, StirlingFunctionQuery};
    use num_complex::Complex64;

    fn letters(n: usize) -> Vec<Rational> {
        // a_i = 2^i + i, distinct enough to tell monomials apart
        (0..=n).map(|i| rat((1 << i) + i as i64)).collect()
    }

    #[test]
    fn small_weights() {
        let a = letters(5);
        assert_eq!(w_coefficient(3, 1, &a).unwrap(), &a[1] * &a[2]);
        assert_eq!(
            w_coefficient(4, 2, &a).unwrap(),
            &a[1] * &a[3] + &a[2] * &a[2] / rat(2)
        );
        for n in 1..5 {
            assert_eq!(
                w_coefficient(n, 0, &a).unwrap(),
                crate::numeric::pow(&a[1], n) / factorial(n)
            );
        }
        assert_eq!(w_coefficient(0, 0, &a).unwrap(), rat(1));
        assert!(matches!(w_coefficient(3, 3, &a), Err(Error::Range(_))));
        assert!(matches!(w_coefficient(6, 4, &a[..4]), Err(Error::Range(_))));
    }

    #[test]
    fn unit_weights_sum_to_exp_series() {
        // Σ_j W(n,j) with a_i = 1 is [zⁿ] exp(z/(1−z))
        let order = 13;
        let geometric = TruncatedSeries::new(
            (0..order)
                .map(|i| rat(if i == 0 { 0 } else { 1 }))
                .collect(),
            order,
        );
        let oracle = geometric.exp_nilpotent().unwrap();
        let ones = vec![rat(1); order];
        let table = PartitionWeightTable::build(ones, 12).unwrap();
        for n in 1..=12 {
            let total: Rational = (0..n).map(|j| table.get(n, j).unwrap().clone()).sum();
            assert_eq!(&total, oracle.coeff(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn coefficients_at_zero_epsilon() {
        let BaseCoefficients::Exact(a) =
            expansion_coefficients(&ParameterTriple::from_ints(0, 1, 0), 0.0, 6).unwrap()
        else {
            panic!()
        };
        for (j, aj) in a.iter().enumerate() {
            assert_eq!(aj, &(rat(1) / factorial(j + 1)));
        }
        for triple in [
            ParameterTriple::from_ints(2, 3, -1),
            ParameterTriple::new(ratio(1, 3), rat(-2), rat(5)),
        ] {
            let BaseCoefficients::Exact(a) = expansion_coefficients(&triple, 0.0, 3).unwrap()
            else {
                panic!()
            };
            assert_eq!(a[0], rat(1));
        }
        assert!(matches!(
            expansion_coefficients(&ParameterTriple::from_ints(1, 0, 0), 0.0, 3),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn coefficients_match_generating_function() {
        // a_j = [z^j] (1+αz)^{r/α} (e^ε (1+αz)^{β/α} − 1)/β
        let triple = ParameterTriple::new(ratio(1, 2), rat(2), ratio(-1, 3));
        let eps: f64 = 0.7;
        let pair = crate::riordan::stirling_generating_pair(&triple, 8);
        let h = pair.h.to_complex();
        let mut base = h.scale(&Complex64::new(eps.exp(), 0.0)).into_coeffs();
        base[0] = Complex64::new(eps.exp_m1() / 2.0, 0.0);
        let g = &pair.d.to_complex() * &TruncatedSeries::new(base, 8);
        let BaseCoefficients::Float(a) = expansion_coefficients(&triple, eps, 7).unwrap() else {
            panic!()
        };
        assert!((a[0] - eps.exp_m1() / 2.0).abs() < 1e-15);
        for (j, aj) in a.iter().enumerate() {
            assert!((g.coeffs()[j].re - aj).abs() < 1e-13, "j = {j}");
        }
    }

    #[test]
    fn normalization_is_falling_n() {
        assert_eq!(resolve_normalization().unwrap(), Normalization::FallingN);
    }

    #[test]
    fn full_expansion_is_exact() {
        let triple = ParameterTriple::new(ratio(2, 3), rat(1), ratio(1, 2));
        for shift in [ShiftMode::Scaled, ShiftMode::Fixed] {
            for n in 1..=5 {
                let mu = 3 * n + 2;
                let estimate = asym_estimate(n, mu, &triple, 0.0, n, shift).unwrap();
                let exact =
                    exact_normalized(n, mu, &triple, 0.0, shift, Normalization::FallingN).unwrap();
                assert_eq!(estimate, exact);
            }
        }
    }

    #[test]
    fn leading_term_and_empty_expansion() {
        let triple = ParameterTriple::from_ints(0, 1, 0);
        let lead = asym_estimate(3, 10, &triple, 0.0, 1, ShiftMode::Scaled).unwrap();
        assert_eq!(lead, Scalar::Exact(ratio(1, 48)));
        assert_eq!(
            asym_estimate(0, 10, &triple, 0.0, 2, ShiftMode::Scaled).unwrap(),
            Scalar::Exact(rat(1))
        );
        assert!(matches!(
            asym_estimate(3, 3, &triple, 0.0, 1, ShiftMode::Scaled),
            Err(Error::Range(_))
        ));
        assert!(matches!(
            asym_estimate(3, 9, &triple, 0.0, 0, ShiftMode::Scaled),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn second_kind_errors_decay() {
        let triple = ParameterTriple::from_ints(0, 1, 0);
        let study =
            asym_error_study(3, &[20, 40, 80, 160], &triple, 0.0, 2, ShiftMode::Scaled).unwrap();
        assert!(study.decreasing, "{study:?}");
        let first = asym_error_study(3, &[50], &triple, 0.0, 2, ShiftMode::Scaled).unwrap();
        assert!(first.rows[0].rel_error < 0.01);
        let lah = asym_error_study(
            2,
            &[20, 40, 80, 160],
            &ParameterTriple::from_ints(-1, 1, 0),
            0.0,
            1,
            ShiftMode::Scaled,
        )
        .unwrap();
        assert!(lah.decreasing, "{lah:?}");
        let empty = asym_error_study(0, &[5, 10], &triple, 0.0, 2, ShiftMode::Scaled).unwrap();
        assert!(empty.rows.iter().all(|row| row.rel_error == 0.0));
    }

    #[test]
    fn damped_exact_value_matches_series() {
        let triple = ParameterTriple::new(ratio(1, 2), rat(1), ratio(1, 4));
        let eps = 0.9;
        let (n, mu) = (3, 6);
        let shifted = triple.with_r(&triple.r * rat(mu as i64));
        let q = StirlingFunctionQuery::new(
            Complex64::new(n as f64, 0.0),
            Complex64::new(mu as f64, 0.0),
            shifted,
        )
        .with_epsilon(eps);
        let s = stirling_function(&q).unwrap().value.re;
        let c = 1.0 / eps.exp_m1();
        let want = s * to_f64(&factorial(mu))
            / (to_f64(&factorial(n)) * to_f64(&falling_int(mu as i64, n)))
            / c.powi(n as i32 - mu as i32);
        let got = exact_normalized(
            n,
            mu,
            &triple,
            eps,
            ShiftMode::Scaled,
            Normalization::FallingN,
        )
        .unwrap()
        .to_f64();
        assert!((got - want).abs() < 1e-10 * want.abs(), "{got} vs {want}");
    }

    #[test]
    fn damped_full_expansion_is_exact() {
        let triple = ParameterTriple::new(ratio(1, 2), rat(1), ratio(1, 4));
        for n in 1..=4 {
            let mu = n + 7;
            let estimate = asym_estimate(n, mu, &triple, 0.5, n, ShiftMode::Fixed)
                .unwrap()
                .to_f64();
            let exact = exact_normalized(
                n,
                mu,
                &triple,
                0.5,
                ShiftMode::Fixed,
                Normalization::FallingN,
            )
            .unwrap()
            .to_f64();
            assert!(
                (estimate - exact).abs() < 1e-12 * exact.abs(),
                "n = {n}: {estimate} vs {exact}"
            );
        }
        let study =
            asym_error_study(3, &[50, 100, 200, 400], &triple, 0.5, 2, ShiftMode::Scaled).unwrap();
        assert!(study.decreasing, "{study:?}");
    }
}
