//! Scalars, polynomials, truncated power series and complex `log Γ`.
//!
//! Everything indexed by integers (orders, triangle entries, A-sequences) is
//! computed over [`Rational`]; complex orders go through [`Complex64`].

pub mod gamma;
pub mod poly;
pub mod series;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_complex::Complex64;

/// Exact scalar: arbitrary-precision rational in lowest terms.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den`; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Rational::from_integer(acc)
}

/// `C(n, k)` for nonnegative integers.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Rational::from_integer(acc)
}

pub fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

/// Nearest `f64`; overflows to ±∞ for huge magnitudes.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

pub fn to_complex(x: &Rational) -> Complex64 {
    Complex64::new(to_f64(x), 0.0)
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Returns `Some(n)` if `z` is exactly a real integer.
pub fn as_real_integer(z: Complex64) -> Option<i64> {
    if z.im == 0.0 && z.re.fract() == 0.0 && z.re.abs() < 9.0e15 {
        Some(z.re as i64)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse `{}` as a rational number", self.0)
    }
}

impl std::error::Error for ParseRationalError {}

/// Parses `p`, `p/q` or a finite decimal such as `-0.125` or `1.5e-2`,
/// each with an optional sign. Decimals are converted exactly.
pub fn parse_rational(input: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(input.to_string());
    let s = input.trim();
    if s.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| err())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(num, den));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| err())?),
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(err());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = Rational::from_integer(BigInt::from_str(&all_digits).map_err(|_| err())?);
    let scale = exponent - frac_part.len() as i32;
    let ten = rat(10);
    if scale >= 0 {
        value *= pow(&ten, scale as usize);
    } else {
        value /= pow(&ten, (-scale) as usize);
    }
    Ok(if sign < 0 { -value } else { value })
}
