//! Truncated formal power series `c_0 + c_1 t + … + c_{N-1} t^{N-1} + O(t^N)`.
//!
//! The same type carries exact ([`Rational`]) and complex ([`Complex64`])
//! coefficients. Binary operations truncate to the smaller of the two orders.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{FromPrimitive, Num, One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Default number of retained coefficients.
pub const DEFAULT_ORDER: usize = 32;

/// Coefficient field of a truncated series.
pub trait Coefficient: Clone + Num + FromPrimitive + fmt::Debug {}
impl<T: Clone + Num + FromPrimitive + fmt::Debug> Coefficient for T {}

fn from_usize<T: Coefficient>(n: usize) -> T {
    T::from_usize(n).expect("index fits the coefficient type")
}

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> TruncatedSeries<T> {
    /// Pads with zeros or truncates `coeffs` to exactly `order` terms.
    ///
    /// Panics if `order` is zero.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        assert!(order >= 1, "truncation order must be positive");
        coeffs.resize(order, T::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![T::one()], order)
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        Self::new(vec![T::zero(), T::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&T> {
        self.coeffs.get(i)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order).cloned().collect(), order)
    }

    pub fn map<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> TruncatedSeries<U> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    /// `self^exponent` by repeated squaring.
    pub fn pow(&self, mut exponent: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = &acc * &base;
            }
            exponent >>= 1;
            if exponent > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotUnit);
        }
        let n = self.order();
        let inv0 = T::one() / c0.clone();
        let mut out: Vec<T> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = T::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * out[k - j].clone();
            }
            out.push(T::zero() - acc * inv0.clone());
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Formal derivative; the result keeps the same order (top coefficient zero).
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let coeffs = (1..n)
            .map(|i| self.coeffs[i].clone() * from_usize(i))
            .collect();
        Self::new(coeffs, n)
    }

    /// Divides by `t`; requires `c_0 = 0`. The order drops by one.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "cannot divide a series with nonzero constant term by t".into(),
            ));
        }
        if self.order() < 2 {
            return Err(Error::Range("series too short to divide by t".into()));
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Multiplies by `t^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs, self.order())
    }

    /// `self(inner(t))`; requires `inner` to have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "inner series of a composition must have zero constant term".into(),
            ));
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Self::zero(n);
        for c in self.coeffs[..n].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }

    /// Compositional inverse `h̄` with `h(h̄(t)) = t`, by Newton iteration
    /// `g ← g − (h(g) − t) / h'(g)`, doubling the number of correct
    /// coefficients per step.
    pub fn compositional_inverse(&self) -> Result<Self> {
        let n = self.order();
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotInvertible("constant term is nonzero"));
        }
        if n < 2 || self.coeffs[1].is_zero() {
            return Err(Error::NotInvertible("linear coefficient is zero"));
        }
        let h1_inv = T::one() / self.coeffs[1].clone();
        let mut g = Self::new(vec![T::zero(), h1_inv], n.min(2));
        let dh = self.derivative();
        let mut prec = g.order();
        while prec < n {
            prec = (2 * prec).min(n);
            let g_ext = Self::new(g.coeffs.clone(), prec);
            let residual = &self.truncate(prec).compose(&g_ext)? - &Self::variable(prec);
            let slope = dh.truncate(prec).compose(&g_ext)?.reciprocal()?;
            g = &g_ext - &(&residual * &slope);
        }
        Ok(g)
    }

    /// `exp(self)` for a series with zero constant term.
    pub fn exp_nilpotent(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "exact exponential needs a zero constant term".into(),
            ));
        }
        let n = self.order();
        let mut out: Vec<T> = Vec::with_capacity(n);
        out.push(T::one());
        for k in 1..n {
            let mut acc = T::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * from_usize(j) * out[k - j].clone();
            }
            out.push(acc / from_usize(k));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `log(self)` for a series with constant term one.
    pub fn log_unit(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain(
                "exact logarithm needs constant term one".into(),
            ));
        }
        let n = self.order();
        let mut out: Vec<T> = vec![T::zero(); n];
        for k in 1..n {
            let mut acc = self.coeffs[k].clone() * from_usize(k);
            for j in 1..k {
                acc = acc - out[j].clone() * from_usize(j) * self.coeffs[k - j].clone();
            }
            out[k] = acc / from_usize(k);
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}

impl TruncatedSeries<Rational> {
    pub fn to_complex(&self) -> TruncatedSeries<Complex64> {
        self.map(super::to_complex)
    }
}

impl TruncatedSeries<Complex64> {
    /// `exp(self)` for any constant term.
    pub fn exp(&self) -> Self {
        let c0 = self.coeffs[0];
        let mut tail = self.clone();
        tail.coeffs[0] = Complex64::zero();
        let unit = tail.exp_nilpotent().expect("constant term cleared");
        unit.scale(&c0.exp())
    }

    /// Principal-branch `log(self)`; the constant term must be nonzero.
    pub fn log(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Branch("logarithm of a series vanishing at 0".into()));
        }
        let mut unit = self.scale(&(Complex64::one() / c0));
        // c0 / c0 need not round to exactly one
        unit.coeffs[0] = Complex64::one();
        let mut out = unit.log_unit()?;
        out.coeffs[0] = c0.ln();
        Ok(out)
    }

    /// Principal-branch complex power `exp(eta · log(self))`.
    pub fn powc(&self, eta: Complex64) -> Result<Self> {
        Ok(self.log()?.scale(&eta).exp())
    }
}

/// Coefficients of `(1 + a z)^q`: coefficient `j` is `C(q, j) a^j` with
/// `C(q, j) = [q]_j / j!`.
pub fn series_binomial_power(
    a: &Rational,
    q: &Rational,
    order: usize,
) -> TruncatedSeries<Rational> {
    let mut coeffs = Vec::with_capacity(order);
    let mut c = Rational::one();
    for j in 0..order {
        if j > 0 {
            c = c * (q - Rational::from_usize(j - 1).unwrap()) * a
                / Rational::from_usize(j).unwrap();
        }
        coeffs.push(c.clone());
    }
    TruncatedSeries::new(coeffs, order)
}

/// Coefficients of `exp(c z)`: coefficient `j` is `c^j / j!`.
pub fn series_exp_scaled(c: &Rational, order: usize) -> TruncatedSeries<Rational> {
    let mut coeffs = Vec::with_capacity(order);
    let mut term = Rational::one();
    for j in 0..order {
        if j > 0 {
            term = term * c / Rational::from_usize(j).unwrap();
        }
        coeffs.push(term.clone());
    }
    TruncatedSeries::new(coeffs, order)
}

impl<T: Coefficient> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn add(self, rhs: &TruncatedSeries<T>) -> TruncatedSeries<T> {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<T: Coefficient> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn sub(self, rhs: &TruncatedSeries<T>) -> TruncatedSeries<T> {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone())
                .collect(),
        }
    }
}

impl<T: Coefficient> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn neg(self) -> TruncatedSeries<T> {
        self.map(|c| T::zero() - c.clone())
    }
}

/// Truncated Cauchy product.
impl<T: Coefficient> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn mul(self, rhs: &TruncatedSeries<T>) -> TruncatedSeries<T> {
        let n = self.order().min(rhs.order());
        let mut out = vec![T::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }
}
