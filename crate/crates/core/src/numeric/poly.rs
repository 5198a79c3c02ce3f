use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{rat, Rational};

/// Exact univariate polynomial, coefficient `i` multiplies `z^i`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and `degree()` is `None`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DensePolynomial {
    coeffs: Vec<Rational>,
}

impl DensePolynomial {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = DensePolynomial { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        DensePolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    /// The monic linear polynomial `z - root`.
    pub fn linear_root(root: &Rational) -> Self {
        Self::new(vec![-root.clone(), rat(1)])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, z: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * z + c)
    }

    /// The `order`-th derivative.
    pub fn derivative(&self, order: usize) -> Self {
        if order >= self.coeffs.len() {
            return Self::zero();
        }
        let coeffs = (order..self.coeffs.len())
            .map(|i| {
                // i (i-1) ... (i-order+1)
                let falling: u64 = ((i - order + 1)..=i).map(|f| f as u64).product();
                &self.coeffs[i] * rat(falling as i64)
            })
            .collect();
        Self::new(coeffs)
    }

    /// `self · (z - root)`.
    pub fn mul_linear(&self, root: &Rational) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] += c;
            out[i] -= c * root;
        }
        Self::new(out)
    }

    /// Synthetic division by `z - root`: returns `(quotient, remainder)` with
    /// `self = quotient · (z - root) + remainder`.
    pub fn synthetic_division(&self, root: &Rational) -> (Self, Rational) {
        let Some(deg) = self.degree() else {
            return (Self::zero(), Rational::zero());
        };
        if deg == 0 {
            return (Self::zero(), self.coeffs[0].clone());
        }
        let mut quotient = vec![Rational::zero(); deg];
        let mut carry = Rational::zero();
        for i in (0..=deg).rev() {
            let value = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return (Self::new(quotient), value);
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// `self(z + shift)` expanded, i.e. the Taylor coefficients at `shift`.
    pub fn taylor_shift(&self, shift: &Rational) -> Self {
        let mut out = Self::zero();
        for c in self.coeffs.iter().rev() {
            out = out.mul_linear(&-shift.clone()) + Self::constant(c.clone());
        }
        out
    }
}

impl Add for &DensePolynomial {
    type Output = DensePolynomial;
    fn add(self, rhs: &DensePolynomial) -> DensePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for DensePolynomial {
    type Output = DensePolynomial;
    fn add(self, rhs: DensePolynomial) -> DensePolynomial {
        &self + &rhs
    }
}

impl Sub for &DensePolynomial {
    type Output = DensePolynomial;
    fn sub(self, rhs: &DensePolynomial) -> DensePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &DensePolynomial {
    type Output = DensePolynomial;
    fn neg(self) -> DensePolynomial {
        DensePolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &DensePolynomial {
    type Output = DensePolynomial;
    fn mul(self, rhs: &DensePolynomial) -> DensePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return DensePolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePolynomial::new(out)
    }
}

impl Mul<&Rational> for &DensePolynomial {
    type Output = DensePolynomial;
    fn mul(self, rhs: &Rational) -> DensePolynomial {
        DensePolynomial::new(self.coeffs.iter().map(|c| c * rhs).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> DensePolynomial {
        DensePolynomial::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn horner_evaluation() {
        let q = p(&[0, -1, 1]);
        assert_eq!(q.eval(&rat(3)), rat(6));
        assert_eq!(DensePolynomial::zero().eval(&ratio(7, 3)), rat(0));
        // <z>_{4,-1} = z(z-1)(z-2)(z-3) at z = -1
        let falling4 = p(&[0, -6, 11, -6, 1]);
        assert_eq!(falling4.eval(&rat(-1)), rat(24));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[0, -1, 1]).derivative(1), p(&[-1, 2]));
        assert_eq!(p(&[5]).derivative(1), DensePolynomial::zero());
        let falling4 = p(&[0, -6, 11, -6, 1]);
        assert_eq!(falling4.derivative(2).eval(&rat(0)) / rat(2), rat(11));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn synthetic_division_reconstructs() {
        let q = p(&[0, 0, 0, 0, 1]);
        let (quot, rem) = q.synthetic_division(&rat(1));
        assert_eq!(rem, rat(1));
        assert_eq!(
            &quot.mul_linear(&rat(1)) + &DensePolynomial::constant(rem),
            q
        );
    }

    #[test]
    fn taylor_shift_matches_evaluation() {
        let q = p(&[3, -2, 0, 5]);
        let shifted = q.taylor_shift(&rat(2));
        assert_eq!(shifted.eval(&rat(0)), q.eval(&rat(2)));
        assert_eq!(shifted.eval(&rat(-3)), q.eval(&rat(-1)));
    }

    fn arb_poly() -> impl Strategy<Value = DensePolynomial> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..7)
            .prop_map(|cs| DensePolynomial::new(cs.into_iter().map(|(n, d)| ratio(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn derivative_is_linear_and_leibniz(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a + &b).derivative(1), &a.derivative(1) + &b.derivative(1));
            let lhs = (&a * &b).derivative(1);
            let rhs = &(&a.derivative(1) * &b) + &(&a * &b.derivative(1));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn division_identity(a in arb_poly(), n in -5i64..5, d in 1i64..4) {
            let root = ratio(n, d);
            let (q, r) = a.synthetic_division(&root);
            prop_assert_eq!(r.clone(), a.eval(&root));
            prop_assert_eq!(&q.mul_linear(&root) + &DensePolynomial::constant(r), a);
        }
    }
}
