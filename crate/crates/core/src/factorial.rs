//! Generalized factorials `⟨z⟩_{n,δ} = z(z+δ)…(z+(n−1)δ)`, their
//! complex-order extension `⟨z⟩_{γ,±k}` through the k-Gamma function, and the
//! fractional difference operator applied to them.
//!
//! Integer orders never go through Gamma: [`gen_factorial`] and
//! [`gen_factorial_poly`] are exact products.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, PoleSite, Result};
use crate::numeric::gamma::{is_nonpositive_integer, log_gamma};
use crate::numeric::poly::DensePolynomial;
use crate::numeric::{as_real_integer, to_f64, Rational};
use crate::stirling::ParameterTriple;

/// Hard cap on the number of terms of a non-terminating difference series.
pub const MAX_SERIES_TERMS: usize = 10_000;

/// Number of consecutive small terms required before a series is accepted.
const SMALL_TERM_RUN: usize = 8;

/// `z (z+δ) (z+2δ) ⋯ (z+(n−1)δ)`, and `1` for `n = 0`.
pub fn gen_factorial(z: &Rational, n: usize, delta: &Rational) -> Rational {
    let mut acc = Rational::one();
    let mut factor = z.clone();
    for _ in 0..n {
        acc *= &factor;
        factor += delta;
    }
    acc
}

/// Expanded `(z−shift)(z−shift+δ)⋯(z−shift+(n−1)δ)`; monic of degree `n`.
pub fn gen_factorial_poly(n: usize, delta: &Rational, shift: &Rational) -> DensePolynomial {
    let mut p = DensePolynomial::one();
    let mut root = shift.clone();
    for _ in 0..n {
        p = p.mul_linear(&root);
        root -= delta;
    }
    p
}

/// `Γ_k(z) = k^{z/k − 1} Γ(z/k)`.
pub fn k_gamma(z: Complex64, k: f64) -> Result<Complex64> {
    check_increment(k)?;
    let scaled = z / k;
    if is_nonpositive_integer(scaled) {
        return Err(Error::GammaPole {
            site: PoleSite::Argument,
            arg: scaled,
        });
    }
    Ok(((scaled - 1.0) * k.ln() + log_gamma(scaled)?).exp())
}

/// The `n`-th element `n! kⁿ (nk)^{z/k − 1} / ⟨z⟩_{n,k}` of the sequence
/// whose limit defines `Γ_k(z)`. Evaluated in log space.
pub fn k_gamma_limit_probe(z: Complex64, k: f64, n: u64) -> Result<Complex64> {
    check_increment(k)?;
    if n == 0 {
        return Err(Error::Range("limit probe needs n ≥ 1".into()));
    }
    let mut log_acc = Complex64::zero();
    for j in 0..n {
        let factor = z + j as f64 * k;
        if factor.is_zero() {
            return Err(Error::ZeroFactor { index: j });
        }
        // ln((j+1)k) − ln(z + jk) = −ln(1 + (z − k)/((j+1)k))
        let w = (z - k) / ((j + 1) as f64 * k);
        log_acc -= ln_1p(w);
    }
    log_acc += (z / k - 1.0) * (n as f64 * k).ln();
    Ok(log_acc.exp())
}

fn ln_1p(w: Complex64) -> Complex64 {
    if w.norm() < 1e-4 {
        // w − w²/2 + w³/3 − w⁴/4
        w * (1.0 - w * (0.5 - w * (1.0 / 3.0 - w * 0.25)))
    } else {
        (w + 1.0).ln()
    }
}

fn check_increment(k: f64) -> Result<()> {
    if k > 0.0 && k.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "increment k must be positive, got {k}"
        )))
    }
}

/// Raising `⟨z⟩_{γ,k} = Γ_k(z+γk)/Γ_k(z)` or falling
/// `⟨z⟩_{γ,−k} = Γ_k(z+k)/Γ_k(z−(γ−1)k)`, `k > 0`.
///
/// Integer `γ` uses the finite product (or its reciprocal for `γ < 0`). For
/// other `γ`, a pole in the denominator Gamma gives `0`, and a pole in the
/// numerator is reported as [`Error::GammaPole`] with `site = Numerator`.
pub fn gen_factorial_function(
    z: Complex64,
    gamma: Complex64,
    k: f64,
    falling: bool,
) -> Result<Complex64> {
    check_increment(k)?;
    let step = if falling { -k } else { k };
    if let Some(n) = as_real_integer(gamma) {
        return integer_order(z, n, step);
    }
    let x = z / k;
    // falling: k^γ Γ(x+1)/Γ(x−γ+1); raising: k^γ Γ(x+γ)/Γ(x)
    let (num, den) = if falling {
        (x + 1.0, x - gamma + 1.0)
    } else {
        (x + gamma, x)
    };
    if is_nonpositive_integer(num) {
        return Err(Error::GammaPole {
            site: PoleSite::Numerator,
            arg: num,
        });
    }
    if is_nonpositive_integer(den) {
        return Ok(Complex64::zero());
    }
    Ok((gamma * k.ln() + log_gamma(num)? - log_gamma(den)?).exp())
}

/// `⟨z⟩_{n,δ}` for integer `n`, with `⟨z⟩_{−m,δ} = 1/((z−δ)(z−2δ)⋯(z−mδ))`
/// from the order recurrence.
fn integer_order(z: Complex64, n: i64, step: f64) -> Result<Complex64> {
    if n >= 0 {
        return Ok((0..n).fold(Complex64::one(), |acc, i| acc * (z + i as f64 * step)));
    }
    let mut denom = Complex64::one();
    for i in 1..=(-n) {
        let factor = z - i as f64 * step;
        if factor.is_zero() {
            return Err(Error::GammaPole {
                site: PoleSite::Numerator,
                arg: factor,
            });
        }
        denom *= factor;
    }
    Ok(denom.inv())
}

/// `⟨x⟩_{γ,δ}` for a signed real increment: falling for `δ < 0`, raising for
/// `δ > 0`, and the principal power `x^γ` for `δ = 0`.
pub fn gen_factorial_signed(x: Complex64, gamma: Complex64, delta: f64) -> Result<Complex64> {
    if delta == 0.0 {
        if let Some(n) = as_real_integer(gamma) {
            return integer_order(x, n, 0.0);
        }
        if x.is_zero() {
            return if gamma.re > 0.0 {
                Ok(Complex64::zero())
            } else {
                Err(Error::GammaPole {
                    site: PoleSite::Numerator,
                    arg: x,
                })
            };
        }
        return Ok((gamma * x.ln()).exp());
    }
    gen_factorial_function(x, gamma, delta.abs(), delta < 0.0)
}

/// Result of summing a difference series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: Complex64,
    /// Number of terms evaluated.
    pub terms: usize,
    /// Whether the partial sums were extrapolated (slowly decaying tail).
    pub extrapolated: bool,
}

/// `Δ^{η,ε}_β ⟨z⟩_{γ,−α}` at `z = r`:
/// `Σ_j (−1)^j C(η,j) e^{(η−j)ε} ⟨r+(η−j)β⟩_{γ,−α}`.
///
/// Nonnegative integer `η` gives a finite sum. Otherwise `β > 0` and either
/// `ε > 0` or `Re η > Re γ` is required. Exponentially damped series (`ε > 0`)
/// stop once [`SMALL_TERM_RUN`] consecutive terms fall below
/// `tol · max(1, |partial sum|)`. Undamped series decay like
/// `j^{γ−η−1}`; when the tail has a pure power expansion (`α = 0` or `β/α` an
/// integer) the partial sums at `N = 128, 256, …` are Richardson-extrapolated
/// in the exponents `η−γ, η−γ+1, …`, otherwise the small-term rule is used.
pub fn frac_difference_factorial(
    gamma: Complex64,
    eta: Complex64,
    triple: &ParameterTriple,
    epsilon: f64,
    tol: f64,
) -> Result<SeriesSum> {
    let alpha = to_f64(&triple.alpha);
    let beta = to_f64(&triple.beta);
    let r = to_f64(&triple.r);
    if !(epsilon >= 0.0) || !epsilon.is_finite() {
        return Err(Error::Regime(format!(
            "ε must be a finite nonnegative number, got {epsilon}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::Regime(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let term = |j: usize, binom: Complex64| -> Result<Complex64> {
        let shift = eta - j as f64;
        let arg = Complex64::new(r, 0.0) + shift * beta;
        let damping = if epsilon == 0.0 {
            Complex64::one()
        } else {
            (shift * epsilon).exp()
        };
        let fact = gen_factorial_signed(arg, gamma, -alpha)?;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        Ok(binom * damping * fact * sign)
    };
    let next_binom = |binom: Complex64, j: usize| binom * (eta - (j - 1) as f64) / j as f64;

    if let Some(k) = as_real_integer(eta).filter(|&k| k >= 0) {
        let mut sum = Complex64::zero();
        let mut binom = Complex64::one();
        for j in 0..=k as usize {
            if j > 0 {
                binom = next_binom(binom, j);
            }
            sum += term(j, binom)?;
        }
        return Ok(SeriesSum {
            value: sum,
            terms: k as usize + 1,
            extrapolated: false,
        });
    }
    if !(beta > 0.0) {
        return Err(Error::Regime(format!(
            "non-integer order η needs an increment β > 0, got β = {beta}"
        )));
    }
    if as_real_integer(eta).is_some() {
        return Err(Error::Regime(format!("η = {eta} is a negative integer")));
    }
    if epsilon == 0.0 && !(eta.re > gamma.re) {
        return Err(Error::Regime(format!(
            "ε = 0 requires Re η > Re γ (η = {eta}, γ = {gamma})"
        )));
    }

    let power_tail = epsilon == 0.0
        && (triple.alpha.is_zero() || crate::numeric::is_integer(&(&triple.beta / &triple.alpha)));

    let mut sum = Complex64::zero();
    let mut binom = Complex64::one();
    let mut small_run = 0usize;
    let mut checkpoints: Vec<Complex64> = Vec::new();
    let mut next_checkpoint = 128usize;
    for j in 0..MAX_SERIES_TERMS {
        if j > 0 {
            binom = next_binom(binom, j);
        }
        let t = term(j, binom)?;
        sum += t;
        if !sum.re.is_finite() || !sum.im.is_finite() {
            return Err(Error::NonConvergence { terms: j + 1 });
        }
        if power_tail {
            if j + 1 == next_checkpoint {
                checkpoints.push(sum);
                next_checkpoint *= 2;
                if let Some(value) = richardson(&checkpoints, eta - gamma, tol) {
                    return Ok(SeriesSum {
                        value,
                        terms: j + 1,
                        extrapolated: true,
                    });
                }
            }
            continue;
        }
        if t.norm() < tol * sum.norm().max(1.0) {
            small_run += 1;
            if small_run >= SMALL_TERM_RUN {
                return Ok(SeriesSum {
                    value: sum,
                    terms: j + 1,
                    extrapolated: false,
                });
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::NonConvergence {
        terms: MAX_SERIES_TERMS,
    })
}

/// Richardson table over partial sums taken at doubling truncation points,
/// assuming `S_N = S + Σ_m b_m N^{−(s+m)}`. Returns the extrapolated value once
/// the two most refined estimates agree to `tol`.
fn richardson(partials: &[Complex64], s: Complex64, tol: f64) -> Option<Complex64> {
    if partials.len() < 3 {
        return None;
    }
    let mut row: Vec<Complex64> = partials.to_vec();
    let mut previous_best = row[row.len() - 1];
    let mut best = previous_best;
    for m in 0..partials.len() - 1 {
        let factor = Complex64::new(2.0, 0.0).powc(s + m as f64);
        row = row
            .windows(2)
            .map(|w| (factor * w[1] - w[0]) / (factor - 1.0))
            .collect();
        previous_best = best;
        best = row[row.len() - 1];
    }
    if (best - previous_best).norm() <= tol * best.norm().max(1.0) {
        Some(best)
    } else {
        None
    }
}
