//! Complex `log Γ`.
//!
//! Lanczos approximation (Godfrey's g = 607/128, fifteen terms) on
//! `Re z ≥ 1/2`, reflection below that. The imaginary part follows the principal branch, i.e. the
//! branch that is real on the positive axis and continuous on the plane cut
//! along `(-∞, 0]`; on the cut itself the limit from above is returned.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, PoleSite, Result};

const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEFFS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    3.399_464_998_481_189e-5,
    4.652_362_892_704_858e-5,
    -9.837_447_530_487_956e-5,
    1.580_887_032_249_125e-4,
    -2.102_644_417_241_048_8e-4,
    2.174_396_181_152_126_5e-4,
    -1.643_181_065_367_639e-4,
    8.441_822_398_385_275e-5,
    -2.619_083_840_158_141e-5,
    3.689_918_265_953_162_5e-6,
];

/// `ln √(2π)`
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

pub fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// Principal branch of `log Γ(z)`.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!(
            "log_gamma of non-finite argument {z}"
        )));
    }
    if is_nonpositive_integer(z) {
        return Err(Error::GammaPole {
            site: PoleSite::Argument,
            arg: z,
        });
    }
    if z.re >= 0.5 {
        return Ok(lanczos(z));
    }
    if z.im < 0.0 {
        return Ok(log_gamma(z.conj())?.conj());
    }
    // log Γ(z) = ln π − log sin(πz) − log Γ(1 − z), with the log-sine taken on
    // the branch that is analytic in the closed upper half-plane:
    //   log sin(πz) = log(1 − e^{2πiz}) + iπ/2 − iπz − ln 2.
    let reduced = z.re - z.re.round();
    let e2piz = Complex64::from_polar((-2.0 * PI * z.im).exp(), 2.0 * PI * reduced);
    let log_sin = (Complex64::new(1.0, 0.0) - e2piz).ln()
        + Complex64::new(PI * z.im - std::f64::consts::LN_2, PI / 2.0 - PI * z.re);
    Ok(Complex64::new(PI.ln(), 0.0) - log_sin - lanczos(Complex64::new(1.0, 0.0) - z))
}

fn lanczos(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut series = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (z + 0.5) * t.ln() - t + LN_SQRT_2PI + series.ln()
}

/// `Γ(z)` via `exp(log Γ(z))`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}
