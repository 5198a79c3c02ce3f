use num_traits::{One, Zero};

use super::{stirling_triangle_recurrence, ParameterTriple};
use crate::error::Result;
use crate::factorial::{gen_factorial, gen_factorial_poly};
use crate::numeric::{binomial, factorial, pow, rat, Rational};

/// Where an identity failed, with both sides rendered as exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub suite: &'static str,
    pub passed: bool,
    /// Number of scalar equalities checked.
    pub checked: usize,
    pub first_violation: Option<Violation>,
}

impl VerifyReport {
    pub(crate) fn new(suite: &'static str) -> Self {
        VerifyReport {
            suite,
            passed: true,
            checked: 0,
            first_violation: None,
        }
    }

    pub(crate) fn check(
        &mut self,
        location: impl FnOnce() -> String,
        lhs: &Rational,
        rhs: &Rational,
    ) {
        self.checked += 1;
        if lhs != rhs {
            self.passed = false;
            if self.first_violation.is_none() {
                self.first_violation = Some(Violation {
                    location: location(),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }
}

/// Multiplies the triangles of `triple` and of its dual `(β, α, −r)` and
/// compares the product with the identity, rows `0..=n_max`.
pub fn verify_pair_inverse(n_max: usize, triple: &ParameterTriple) -> Result<VerifyReport> {
    let a = stirling_triangle_recurrence(n_max, triple)?;
    let b = stirling_triangle_recurrence(n_max, &triple.dual())?;
    let mut report = VerifyReport::new("pair-inverse");
    for i in 0..=n_max {
        for j in 0..=i {
            let product: Rational = (j..=i).map(|k| a.get(i, k) * b.get(k, j)).sum();
            let want = if i == j {
                Rational::one()
            } else {
                Rational::zero()
            };
            report.check(|| format!("({i}, {j})"), &product, &want);
        }
    }
    Ok(report)
}

/// Checks `⟨z⟩_{n,−α} = Σ_k S(n,k) ⟨z−r⟩_{k,−β}` at each sample.
pub fn verify_expansion(
    n: usize,
    triple: &ParameterTriple,
    z_samples: &[Rational],
) -> Result<VerifyReport> {
    let tri = stirling_triangle_recurrence(n, triple)?;
    let neg_alpha = -triple.alpha.clone();
    let neg_beta = -triple.beta.clone();
    let mut report = VerifyReport::new("expansion");
    for z in z_samples {
        let lhs = gen_factorial(z, n, &neg_alpha);
        let shifted = z - &triple.r;
        let rhs: Rational = (0..=n)
            .map(|k| tri.get(n, k) * gen_factorial(&shifted, k, &neg_beta))
            .sum();
        report.check(|| format!("z = {z}"), &lhs, &rhs);
    }
    Ok(report)
}

/// Applies `Δⁿ_α` (step `α`, at `z = 0`) to both sides of the defining
/// expansion: `n! αⁿ = Σ_k S(n,k) Δⁿ_α ⟨z−r⟩_{k,−β}|_{z=0}`. For `α = 0` the
/// operator is `Dⁿ` and the left side is `n!`.
pub fn verify_difference_identity(n: usize, triple: &ParameterTriple) -> Result<VerifyReport> {
    let tri = stirling_triangle_recurrence(n, triple)?;
    let neg_beta = -triple.beta.clone();
    let operator = |k: usize| -> Rational {
        let basis = gen_factorial_poly(k, &neg_beta, &triple.r);
        if triple.alpha.is_zero() {
            return basis.derivative(n).eval(&Rational::zero());
        }
        (0..=n)
            .map(|j| {
                let term = binomial(n, j) * basis.eval(&(&triple.alpha * rat(j as i64)));
                if (n - j) % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    };
    let lhs = if triple.alpha.is_zero() {
        factorial(n)
    } else {
        factorial(n) * pow(&triple.alpha, n)
    };
    let rhs: Rational = (0..=n).map(|k| tri.get(n, k) * operator(k)).sum();
    let mut report = VerifyReport::new("remark22");
    report.check(|| format!("n = {n}"), &lhs, &rhs);
    Ok(report)
}
