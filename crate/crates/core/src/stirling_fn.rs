//! Generalized Stirling functions of complex order
//!
//! ```text
//! S(γ,η;ε) = 1/(β^η Γ(η+1)) Σ_j (−1)^j C(η,j) e^{(η−j)ε} ⟨r+(η−j)β⟩_{γ,−α}
//! ```
//!
//! For nonnegative integers `γ = n`, `η = k` and `ε = 0` this is `S(n,k,α,β,r)`.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factorial::frac_difference_factorial;
use crate::numeric::gamma::{is_nonpositive_integer, log_gamma};
use crate::numeric::series::TruncatedSeries;
use crate::numeric::{as_real_integer, factorial, to_complex, to_f64, Rational};
use crate::riordan::stirling_generating_pair;
use crate::stirling::ParameterTriple;

/// How `S(0,η;ε)` is defined.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ZeroOrderConvention {
    /// `(e^ε − 1)^η / (β^η Γ(η+1))`, which is what the series gives.
    #[default]
    ClosedForm,
    /// `δ_{η,0}`.
    KroneckerDelta,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StirlingFunctionQuery {
    pub gamma: Complex64,
    pub eta: Complex64,
    pub triple: ParameterTriple,
    pub epsilon: f64,
    pub tol: f64,
    pub zero_order: ZeroOrderConvention,
}

impl StirlingFunctionQuery {
    /// `ε = 0`, `tol = 1e-12`, closed-form zero order.
    pub fn new(gamma: Complex64, eta: Complex64, triple: ParameterTriple) -> Self {
        StirlingFunctionQuery {
            gamma,
            eta,
            triple,
            epsilon: 0.0,
            tol: 1e-12,
            zero_order: ZeroOrderConvention::ClosedForm,
        }
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_zero_order(mut self, convention: ZeroOrderConvention) -> Self {
        self.zero_order = convention;
        self
    }

    fn with_orders(&self, gamma: Complex64, eta: Complex64) -> Self {
        StirlingFunctionQuery {
            gamma,
            eta,
            ..self.clone()
        }
    }

    /// Which convergence regime the query falls in, or why it has none.
    pub fn regime(&self) -> Result<Regime> {
        if !(self.epsilon >= 0.0 && self.epsilon.is_finite()) {
            return Err(Error::Regime(format!(
                "ε must be finite and nonnegative, got {}",
                self.epsilon
            )));
        }
        if !(self.tol > 0.0) {
            return Err(Error::Regime(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        self.triple.ensure_valid()?;
        let beta = to_f64(&self.triple.beta);
        match as_real_integer(self.eta) {
            Some(k) if k >= 0 => {
                if beta == 0.0 {
                    return Err(Error::Regime("the difference operator needs β ≠ 0".into()));
                }
                Ok(Regime::FiniteSum)
            }
            Some(k) => Err(Error::Regime(format!("η = {k} is a negative integer"))),
            None if !(beta > 0.0) => Err(Error::Regime(format!(
                "non-integer η needs β > 0, got β = {}",
                self.triple.beta
            ))),
            None if self.epsilon > 0.0 => Ok(Regime::Damped),
            None if self.eta.re > self.gamma.re => Ok(Regime::Undamped),
            None => Err(Error::Regime(format!(
                "ε = 0 needs Re η > Re γ (γ = {}, η = {})",
                self.gamma, self.eta
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `η` a nonnegative integer: `η + 1` terms.
    FiniteSum,
    /// `ε > 0`, `η ∉ ℤ`.
    Damped,
    /// `ε = 0`, `η ∉ ℤ`, `Re η > Re γ`.
    Undamped,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StirlingFunctionValue {
    pub value: Complex64,
    pub terms: usize,
    pub extrapolated: bool,
    pub regime: Regime,
}

/// Evaluates `S(γ,η;ε)`.
pub fn stirling_function(q: &StirlingFunctionQuery) -> Result<StirlingFunctionValue> {
    let regime = q.regime()?;
    let beta = to_f64(&q.triple.beta);
    if q.gamma.is_zero() {
        let value = match q.zero_order {
            ZeroOrderConvention::KroneckerDelta => {
                if q.eta.is_zero() {
                    Complex64::one()
                } else {
                    Complex64::zero()
                }
            }
            ZeroOrderConvention::ClosedForm => zero_order_closed_form(q.eta, beta, q.epsilon)?,
        };
        return Ok(StirlingFunctionValue {
            value,
            terms: 0,
            extrapolated: false,
            regime,
        });
    }
    let sum = frac_difference_factorial(q.gamma, q.eta, &q.triple, q.epsilon, q.tol)?;
    let value = sum.value * normalizer(q.eta, beta)?;
    Ok(StirlingFunctionValue {
        value,
        terms: sum.terms,
        extrapolated: sum.extrapolated,
        regime,
    })
}

/// `1 / (β^η Γ(η+1))`, zero at the poles of `Γ(η+1)`.
fn normalizer(eta: Complex64, beta: f64) -> Result<Complex64> {
    if let Some(k) = as_real_integer(eta).filter(|&k| k >= 0) {
        return Ok(Complex64::new(beta, 0.0).powi(k as i32).inv() / to_f64(&factorial(k as usize)));
    }
    if is_nonpositive_integer(eta + 1.0) {
        return Ok(Complex64::zero());
    }
    Ok((-(eta * beta.ln()) - log_gamma(eta + 1.0)?).exp())
}

fn zero_order_closed_form(eta: Complex64, beta: f64, epsilon: f64) -> Result<Complex64> {
    let base = epsilon.exp_m1() / beta;
    let power = if let Some(k) = as_real_integer(eta) {
        Complex64::new(base, 0.0).powi(k as i32)
    } else if base == 0.0 {
        // Re η > 0 is guaranteed by the regime check
        Complex64::zero()
    } else {
        (eta * Complex64::new(base, 0.0).ln()).exp()
    };
    let inv_gamma = if is_nonpositive_integer(eta + 1.0) {
        Complex64::zero()
    } else {
        (-log_gamma(eta + 1.0)?).exp()
    };
    Ok(power * inv_gamma)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RecurrenceCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
    /// `|lhs − rhs| / max(1, |lhs|)`.
    pub residual: f64,
    pub passed: bool,
}

/// Checks `S(γ,η) = (r + ηβ − (γ−1)α) S(γ−1,η) + S(γ−1,η−1)`; passes when the
/// residual is at most `10·tol`. `S(γ−1,−1)` is taken as zero.
pub fn verify_fn_recurrence(q: &StirlingFunctionQuery) -> Result<RecurrenceCheck> {
    let lhs = stirling_function(q)?.value;
    let gamma_prev = q.gamma - 1.0;
    let same_eta = stirling_function(&q.with_orders(gamma_prev, q.eta))?.value;
    let eta_prev = q.eta - 1.0;
    let lower = if as_real_integer(eta_prev) == Some(-1) {
        Complex64::zero()
    } else {
        stirling_function(&q.with_orders(gamma_prev, eta_prev))?.value
    };
    let coeff = to_complex(&q.triple.r) + q.eta * to_f64(&q.triple.beta)
        - gamma_prev * to_f64(&q.triple.alpha);
    let rhs = coeff * same_eta + lower;
    let residual = (lhs - rhs).norm() / lhs.norm().max(1.0);
    Ok(RecurrenceCheck {
        lhs,
        rhs,
        residual,
        passed: residual <= 10.0 * q.tol,
    })
}

/// `S(n,η;ε)` for `n = 0..=n_max` as `n!` times the Taylor coefficients of
///
/// ```text
/// (1/Γ(η+1)) d(z) ((e^ε (1+αz)^{β/α} − 1)/β)^η
/// ```
///
/// with `d` and the limit forms of the generating pair. The base vanishes at
/// `z = 0` when `ε = 0`, so then only nonnegative integer `η` is accepted; for
/// `ε > 0` a negative base constant (`β < 0`) needs integer `η`.
pub fn egf_coefficients(
    eta: Complex64,
    triple: &ParameterTriple,
    epsilon: f64,
    n_max: usize,
) -> Result<Vec<Complex64>> {
    triple.ensure_valid()?;
    if !(epsilon >= 0.0 && epsilon.is_finite()) {
        return Err(Error::Domain(format!(
            "ε must be finite and nonnegative, got {epsilon}"
        )));
    }
    let order = n_max + 1;
    let pair = stirling_generating_pair(triple, order);
    let integer_eta = as_real_integer(eta);
    let scaled: TruncatedSeries<Complex64> = if epsilon == 0.0 {
        let k = integer_eta.filter(|&k| k >= 0).ok_or_else(|| {
            Error::Branch(format!(
                "η = {eta} is not a nonnegative integer and the base vanishes at 0 for ε = 0"
            ))
        })?;
        // d h^k / k!, exact
        let column = &pair.d * &pair.h.pow(k as u64);
        column
            .scale(&(Rational::one() / factorial(k as usize)))
            .to_complex()
    } else {
        if triple.beta.is_zero() {
            return Err(Error::Domain(
                "ε > 0 needs β ≠ 0 in the generating function".into(),
            ));
        }
        let beta = to_f64(&triple.beta);
        // e^ε (1 + βh) − 1, divided by β
        let h = pair.h.to_complex();
        let mut base = h.scale(&Complex64::new(epsilon.exp(), 0.0));
        base = {
            let mut coeffs = base.into_coeffs();
            coeffs[0] = Complex64::new(epsilon.exp_m1() / beta, 0.0);
            TruncatedSeries::new(coeffs, order)
        };
        let power = match integer_eta {
            Some(k) if k >= 0 => base.pow(k as u64),
            Some(k) => base.reciprocal()?.pow(k.unsigned_abs()),
            None => {
                if base.coeffs()[0].re < 0.0 {
                    return Err(Error::Branch(format!(
                        "base constant {} lies on the negative real axis",
                        base.coeffs()[0].re
                    )));
                }
                base.powc(eta)?
            }
        };
        let inv_gamma = if is_nonpositive_integer(eta + 1.0) {
            Complex64::zero()
        } else {
            (-log_gamma(eta + 1.0)?).exp()
        };
        (&pair.d.to_complex() * &power).scale(&inv_gamma)
    };
    Ok(scaled
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c * to_f64(&factorial(n)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, ratio};
    use crate::stirling::stirling_explicit;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    fn classical() -> ParameterTriple {
        ParameterTriple::from_ints(0, 1, 0)
    }

    #[test]
    fn integer_example() {
        let q = StirlingFunctionQuery::new(c(4.0, 0.0), c(2.0, 0.0), classical());
        let v = stirling_function(&q).unwrap();
        assert!(rel(v.value, c(7.0, 0.0)) < 1e-14);
        assert_eq!(v.regime, Regime::FiniteSum);
        assert_eq!(v.terms, 3);
    }

    #[test]
    fn order_zero_in_eta() {
        let q = StirlingFunctionQuery::new(
            c(2.0, 0.0),
            c(0.0, 0.0),
            ParameterTriple::from_ints(1, 1, 3),
        )
        .with_epsilon(0.8);
        assert!(rel(stirling_function(&q).unwrap().value, c(6.0, 0.0)) < 1e-14);
    }

    #[test]
    fn order_zero_in_gamma() {
        let q = StirlingFunctionQuery::new(c(0.0, 0.0), c(1.0, 0.0), classical()).with_epsilon(1.0);
        let v = stirling_function(&q).unwrap();
        assert!(rel(v.value, c(std::f64::consts::E - 1.0, 0.0)) < 1e-14);
        let delta = q
            .clone()
            .with_zero_order(ZeroOrderConvention::KroneckerDelta);
        assert_eq!(stirling_function(&delta).unwrap().value, Complex64::zero());
        let q = StirlingFunctionQuery::new(c(0.0, 0.0), c(0.5, 0.3), classical()).with_epsilon(0.4);
        // agrees with the series, which sums to the same closed form
        let series =
            frac_difference_factorial(c(0.0, 0.0), c(0.5, 0.3), &classical(), 0.4, 1e-14).unwrap();
        let expected = series.value * normalizer(c(0.5, 0.3), 1.0).unwrap();
        assert!(rel(stirling_function(&q).unwrap().value, expected) < 1e-11);
    }

    #[test]
    fn regime_checks() {
        let q = StirlingFunctionQuery::new(c(3.0, 0.0), c(2.5, 0.0), classical());
        assert!(matches!(stirling_function(&q), Err(Error::Regime(_))));
        let q =
            StirlingFunctionQuery::new(c(1.0, 0.0), c(-1.0, 0.0), classical()).with_epsilon(1.0);
        assert!(matches!(stirling_function(&q), Err(Error::Regime(_))));
        let q = StirlingFunctionQuery::new(
            c(1.0, 0.0),
            c(1.5, 0.0),
            ParameterTriple::from_ints(1, -1, 0),
        )
        .with_epsilon(1.0);
        assert!(matches!(stirling_function(&q), Err(Error::Regime(_))));
        let q = StirlingFunctionQuery::new(
            c(1.0, 0.0),
            c(1.5, 0.0),
            ParameterTriple::from_ints(0, 0, 0),
        );
        assert!(matches!(
            stirling_function(&q),
            Err(Error::DegenerateTriple)
        ));
    }

    #[test]
    fn fractional_undamped_recurrence() {
        let q = StirlingFunctionQuery::new(c(1.5, 0.0), c(3.25, 0.0), classical());
        let check = verify_fn_recurrence(&q).unwrap();
        assert!(check.residual <= 1e-8, "{check:?}");
        let q = StirlingFunctionQuery::new(c(2.5, 0.0), c(4.5, 0.0), classical());
        let check = verify_fn_recurrence(&q).unwrap();
        assert!(check.residual <= 1e-8, "{check:?}");
    }

    #[test]
    fn integer_recurrence_example() {
        let q = StirlingFunctionQuery::new(c(5.0, 0.0), c(2.0, 0.0), classical());
        let check = verify_fn_recurrence(&q).unwrap();
        assert!(rel(check.lhs, c(15.0, 0.0)) < 1e-14);
        assert!(check.passed);
    }

    #[test]
    fn first_order_against_closed_form() {
        let triple = ParameterTriple::new(rat(1), ratio(3, 2), ratio(1, 2));
        for eta in [c(0.5, 0.0), c(1.7, -0.4), c(2.2, 1.0)] {
            let q = StirlingFunctionQuery::new(c(1.0, 0.0), eta, triple.clone()).with_epsilon(0.6);
            let check = verify_fn_recurrence(&q).unwrap();
            assert!(check.passed, "η = {eta}: {check:?}");
        }
    }

    #[test]
    fn egf_examples() {
        let column = egf_coefficients(c(2.0, 0.0), &classical(), 0.0, 6).unwrap();
        assert!(rel(column[4], c(7.0, 0.0)) < 1e-13);
        assert!(column[1].norm() < 1e-15);
        let eta = c(0.7, 0.2);
        let first = egf_coefficients(eta, &ParameterTriple::from_ints(1, 2, 1), 0.5, 3).unwrap();
        let want = zero_order_closed_form(eta, 2.0, 0.5).unwrap();
        assert!(rel(first[0], want) < 1e-13);
        assert!(matches!(
            egf_coefficients(c(0.5, 0.0), &classical(), 0.0, 3),
            Err(Error::Branch(_))
        ));
        assert!(matches!(
            egf_coefficients(c(0.5, 0.0), &ParameterTriple::from_ints(1, -1, 0), 0.5, 3),
            Err(Error::Branch(_))
        ));
        assert!(matches!(
            egf_coefficients(c(1.0, 0.0), &ParameterTriple::from_ints(1, 0, 0), 0.5, 3),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn egf_matches_exact_columns() {
        for triple in [
            classical(),
            ParameterTriple::from_ints(1, 0, 0),
            ParameterTriple::from_ints(1, 1, -1),
        ] {
            for k in 0..=6 {
                let column = egf_coefficients(c(k as f64, 0.0), &triple, 0.0, 10).unwrap();
                for (n, value) in column.iter().enumerate() {
                    let exact = to_complex(&stirling_explicit(n, k, &triple).unwrap());
                    assert!(
                        (value - exact).norm() <= 1e-10 * exact.norm().max(1.0),
                        "{triple} S({n},{k})"
                    );
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn integer_orders_reduce(n in 0usize..9, k in 0usize..9, an in -3i64..3, bn in 1i64..4, rn in -3i64..3, d in 1i64..3) {
            let triple = ParameterTriple::new(ratio(an, d), ratio(bn, d), ratio(rn, d));
            let q = StirlingFunctionQuery::new(c(n as f64, 0.0), c(k as f64, 0.0), triple.clone());
            let got = stirling_function(&q).unwrap().value;
            let exact = to_complex(&stirling_explicit(n, k, &triple).unwrap());
            prop_assert!((got - exact).norm() <= 1e-10 * exact.norm().max(1.0), "{} vs {}", got, exact);
        }

        #[test]
        fn zero_eta_gives_factorial_function(g in -2.5f64..4.0, gi in -1.0f64..1.0, eps in 0.0f64..2.0) {
            let triple = ParameterTriple::new(rat(1), rat(2), ratio(7, 2));
            let gamma = c(g, gi);
            let q = StirlingFunctionQuery::new(gamma, c(0.0, 0.0), triple).with_epsilon(eps);
            let got = stirling_function(&q).unwrap().value;
            let want = crate::factorial::gen_factorial_function(c(3.5, 0.0), gamma, 1.0, true).unwrap();
            prop_assert!((got - want).norm() <= 1e-10 * want.norm().max(1e-300));
        }

        #[test]
        fn egf_agrees_with_series(eta_re in 0.2f64..3.0, eta_im in -1.0f64..1.0, eps in 0.3f64..2.0) {
            let triple = ParameterTriple::new(ratio(1, 2), rat(1), ratio(1, 3));
            let eta = c(eta_re, eta_im);
            prop_assume!(as_real_integer(eta).is_none());
            let column = egf_coefficients(eta, &triple, eps, 10).unwrap();
            for (n, value) in column.iter().enumerate() {
                let q = StirlingFunctionQuery::new(c(n as f64, 0.0), eta, triple.clone()).with_epsilon(eps).with_tol(1e-15);
                let series = stirling_function(&q).unwrap().value;
                prop_assert!((series - value).norm() <= 1e-9 * value.norm().max(1e-300), "n = {}: {} vs {}", n, series, value);
            }
        }
    }
}
