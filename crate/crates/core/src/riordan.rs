//! Sheffer-type Riordan arrays `(d(t), h(t))` of the generalized Stirling
//! numbers and their A-sequences.
//!
//! Column `k` of the array has exponential generating function
//! `d(t) h(t)^k / k!`, i.e. `[tⁿ] d(t) h(t)^k = k! S(n,k) / n!`, with
//!
//! ```text
//! d(t) = (1+αt)^{r/α},   h(t) = ((1+αt)^{β/α} − 1) / β
//! ```
//!
//! and the usual limits when `α` or `β` vanishes.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factorial::gen_factorial;
use crate::numeric::series::{series_binomial_power, series_exp_scaled, TruncatedSeries};
use crate::numeric::{factorial, rat, Rational};
use crate::stirling::{Algorithm, ParameterTriple, StirlingTriangle, VerifyReport};

#[derive(Clone, Debug, PartialEq)]
pub struct RiordanPair {
    pub d: TruncatedSeries<Rational>,
    pub h: TruncatedSeries<Rational>,
}

/// Coefficients `a₀, a₁, …` of `A(t)` with `t A(h(t)) = h(t)`; `a₀ ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ASequence {
    terms: Vec<Rational>,
}

impl ASequence {
    pub fn new(terms: Vec<Rational>) -> Result<Self> {
        match terms.first() {
            Some(a0) if !a0.is_zero() => Ok(ASequence { terms }),
            _ => Err(Error::Domain(
                "an A-sequence needs a nonzero leading term".into(),
            )),
        }
    }

    pub fn terms(&self) -> &[Rational] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_series(&self) -> TruncatedSeries<Rational> {
        TruncatedSeries::new(self.terms.clone(), self.terms.len())
    }
}

/// The generating pair of `S(·,·,α,β,r)` truncated to `order` coefficients.
pub fn stirling_generating_pair(triple: &ParameterTriple, order: usize) -> RiordanPair {
    let ParameterTriple { alpha, beta, r } = triple;
    let one = TruncatedSeries::one(order);
    if alpha.is_zero() {
        let d = series_exp_scaled(r, order);
        let h = if beta.is_zero() {
            TruncatedSeries::variable(order)
        } else {
            (&series_exp_scaled(beta, order) - &one).scale(&(Rational::one() / beta))
        };
        return RiordanPair { d, h };
    }
    let d = series_binomial_power(alpha, &(r / alpha), order);
    let h = if beta.is_zero() {
        // ln(1+αt)/α
        let base = TruncatedSeries::new(vec![Rational::one(), alpha.clone()], order);
        base.log_unit()
            .expect("constant term is one")
            .scale(&(Rational::one() / alpha))
    } else {
        (&series_binomial_power(alpha, &(beta / alpha), order) - &one)
            .scale(&(Rational::one() / beta))
    };
    RiordanPair { d, h }
}

/// `a₀ = 1`, `aₙ = −(1/α) Σ_{k=1..n} a_{n−k} ⟨α⟩_{k+1,−β} / (k+1)!`.
///
/// Derived from `h̄(w) = ((1+βw)^{α/β} − 1)/α` and `A = t/h̄(t)`; the division
/// by `α` makes `α = 0` unusable. Also valid for `β = 0`, where
/// `⟨α⟩_{k+1,0} = α^{k+1}`.
pub fn a_sequence_closed(triple: &ParameterTriple, n_terms: usize) -> Result<ASequence> {
    let alpha = &triple.alpha;
    if alpha.is_zero() {
        return Err(Error::Domain(
            "closed-form A-sequence needs α ≠ 0; use the generic path".into(),
        ));
    }
    let neg_beta = -triple.beta.clone();
    let weights: Vec<Rational> = (0..n_terms)
        .map(|k| gen_factorial(alpha, k + 1, &neg_beta) / factorial(k + 1))
        .collect();
    let mut terms = vec![Rational::one()];
    for n in 1..n_terms {
        let sum: Rational = (1..=n).map(|k| &terms[n - k] * &weights[k]).sum();
        terms.push(-sum / alpha);
    }
    terms.truncate(n_terms.max(1));
    ASequence::new(terms)
}

/// `A(t) = t / h̄(t)` from the compositional inverse of `h`. The result has
/// one term fewer than `h`.
pub fn a_sequence_generic(h: &TruncatedSeries<Rational>) -> Result<ASequence> {
    let inverse = h.compositional_inverse()?;
    let a = inverse.shift_down()?.reciprocal()?;
    ASequence::new(a.into_coeffs())
}

/// Rows `0..=n_max` from the A-sequence recurrence
/// `S(n,k) = (n/k!) Σ_j a_j (k+j−1)! S(n−1,k+j−1)` for `1 ≤ k ≤ n`,
/// and first column `S(n,0) = ⟨r⟩_{n,−α}`.
///
/// Needs at least `n_max` terms of `a`.
pub fn riordan_from_asequence(
    a: &ASequence,
    triple: &ParameterTriple,
    n_max: usize,
) -> Result<StirlingTriangle> {
    if n_max > 0 && a.len() < n_max {
        return Err(Error::Range(format!(
            "{} A-sequence terms are not enough for {n_max} rows",
            a.len()
        )));
    }
    let neg_alpha = -triple.alpha.clone();
    let factorials: Vec<Rational> = (0..=n_max).map(factorial).collect();
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(gen_factorial(&triple.r, n, &neg_alpha));
        for k in 1..=n {
            // S(n−1, m) vanishes for m > n−1, so j ≤ n−k
            let sum: Rational = (0..=n - k)
                .map(|j| &a.terms[j] * &factorials[k + j - 1] * &prev[k + j - 1])
                .sum();
            row.push(sum * rat(n as i64) / &factorials[k]);
        }
        rows.push(row);
    }
    Ok(StirlingTriangle {
        triple: triple.clone(),
        rows,
        algorithm: Algorithm::Riordan,
    })
}

/// The A-sequence this crate uses for `triple`: closed form when `α ≠ 0`,
/// generic otherwise.
pub fn stirling_a_sequence(triple: &ParameterTriple, n_terms: usize) -> Result<ASequence> {
    if triple.alpha.is_zero() {
        let pair = stirling_generating_pair(triple, n_terms + 1);
        a_sequence_generic(&pair.h)
    } else {
        a_sequence_closed(triple, n_terms)
    }
}

/// The triangle built through the Riordan array.
pub fn riordan_triangle(triple: &ParameterTriple, n_max: usize) -> Result<StirlingTriangle> {
    triple.ensure_valid()?;
    let a = stirling_a_sequence(triple, n_max.max(1))?;
    riordan_from_asequence(&a, triple, n_max)
}

/// `[tⁿ] d(t) h(t)^k`, which equals `k! S(n,k) / n!` for a Stirling pair.
pub fn coefficient_extract(pair: &RiordanPair, n: usize, k: usize) -> Result<Rational> {
    let order = pair.d.order().min(pair.h.order());
    if n >= order {
        return Err(Error::Range(format!(
            "coefficient {n} is beyond the truncation order {order}"
        )));
    }
    if k > n {
        return Ok(Rational::zero());
    }
    let column = &pair.d.truncate(n + 1) * &pair.h.truncate(n + 1).pow(k as u64);
    Ok(column.coeffs()[n].clone())
}

/// Checks `t A(h(t)) = h(t)` coefficientwise, and for `α ≠ 0` that the closed
/// and generic A-sequences agree.
pub fn verify_aseq_identity(triple: &ParameterTriple, n_terms: usize) -> Result<VerifyReport> {
    let n_terms = n_terms.max(1);
    let pair = stirling_generating_pair(triple, n_terms + 1);
    let generic = a_sequence_generic(&pair.h)?;
    let mut report = VerifyReport::new("aseq-identity");
    let lhs = generic
        .as_series()
        .compose(&pair.h.truncate(n_terms))?
        .shift_up(1);
    for (i, h_i) in pair.h.coeffs().iter().take(n_terms).enumerate() {
        let l = lhs.coeff(i).cloned().unwrap_or_else(Rational::zero);
        report.check(|| format!("t^{i}"), &l, h_i);
    }
    if !triple.alpha.is_zero() {
        let closed = a_sequence_closed(triple, n_terms)?;
        for (j, (c, g)) in closed.terms().iter().zip(generic.terms()).enumerate() {
            report.check(|| format!("a_{j}"), c, g);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;
    use crate::stirling::{stirling_explicit, stirling_triangle_recurrence};
    use proptest::prelude::*;

    fn t(a: i64, b: i64, r: i64) -> ParameterTriple {
        ParameterTriple::from_ints(a, b, r)
    }

    fn q(xs: &[(i64, i64)]) -> Vec<Rational> {
        xs.iter().map(|&(n, d)| ratio(n, d)).collect()
    }

    #[test]
    fn generating_pairs() {
        let second = stirling_generating_pair(&t(0, 1, 0), 5);
        assert_eq!(second.d, TruncatedSeries::one(5));
        assert_eq!(
            second.h.coeffs(),
            q(&[(0, 1), (1, 1), (1, 2), (1, 6), (1, 24)]).as_slice()
        );
        let first = stirling_generating_pair(&t(1, 0, 0), 5);
        assert_eq!(first.d, TruncatedSeries::one(5));
        assert_eq!(
            first.h.coeffs(),
            q(&[(0, 1), (1, 1), (-1, 2), (1, 3), (-1, 4)]).as_slice()
        );
        let identity = stirling_generating_pair(&t(0, 0, 0), 4);
        assert_eq!(identity.d, TruncatedSeries::one(4));
        assert_eq!(identity.h, TruncatedSeries::variable(4));
    }

    #[test]
    fn closed_a_sequences() {
        let howard = a_sequence_closed(&t(1, 1, -1), 6).unwrap();
        assert_eq!(
            howard.terms(),
            q(&[(1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]).as_slice()
        );
        let first = a_sequence_closed(&t(1, 0, 0), 5).unwrap();
        assert_eq!(
            first.terms(),
            q(&[(1, 1), (-1, 2), (1, 12), (0, 1), (-1, 720)]).as_slice()
        );
        assert!(matches!(
            a_sequence_closed(&t(0, 1, 0), 5),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn generic_a_sequences() {
        let second = a_sequence_generic(&stirling_generating_pair(&t(0, 1, 0), 6).h).unwrap();
        assert_eq!(
            second.terms(),
            q(&[(1, 1), (1, 2), (-1, 12), (1, 24), (-19, 720)]).as_slice()
        );
        let first = a_sequence_generic(&stirling_generating_pair(&t(1, 0, 0), 6).h).unwrap();
        assert_eq!(
            first.terms(),
            q(&[(1, 1), (-1, 2), (1, 12), (0, 1), (-1, 720)]).as_slice()
        );
        let identity = a_sequence_generic(&TruncatedSeries::variable(5)).unwrap();
        assert_eq!(
            identity.terms(),
            q(&[(1, 1), (0, 1), (0, 1), (0, 1)]).as_slice()
        );
        let bad = TruncatedSeries::new(vec![rat(1), rat(1)], 4);
        assert!(matches!(
            a_sequence_generic(&bad),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn closed_matches_generic_for_two_three() {
        let triple = t(2, 3, 0);
        let closed = a_sequence_closed(&triple, 10).unwrap();
        let generic = a_sequence_generic(&stirling_generating_pair(&triple, 11).h).unwrap();
        assert_eq!(closed, generic);
    }

    #[test]
    fn riordan_triangles() {
        let howard = riordan_triangle(&t(1, 1, -1), 4).unwrap();
        let want: Vec<Vec<Rational>> = vec![
            vec![rat(1)],
            vec![rat(-1), rat(1)],
            vec![rat(2), rat(-2), rat(1)],
            vec![rat(-6), rat(6), rat(-3), rat(1)],
            vec![rat(24), rat(-24), rat(12), rat(-4), rat(1)],
        ];
        assert_eq!(howard.rows, want);
        let second = riordan_triangle(&t(0, 1, 0), 4).unwrap();
        assert_eq!(
            second.row(4),
            q(&[(0, 1), (1, 1), (7, 1), (6, 1), (1, 1)]).as_slice()
        );
        let first = riordan_triangle(&t(1, 0, 0), 4).unwrap();
        assert_eq!(
            first.row(4),
            q(&[(0, 1), (-6, 1), (11, 1), (-6, 1), (1, 1)]).as_slice()
        );
    }

    #[test]
    fn coefficient_examples() {
        let second = stirling_generating_pair(&t(0, 1, 0), 8);
        assert_eq!(coefficient_extract(&second, 4, 2).unwrap(), ratio(7, 12));
        let first = stirling_generating_pair(&t(1, 0, 0), 8);
        assert_eq!(coefficient_extract(&first, 4, 2).unwrap(), ratio(11, 12));
        // first-kind Riordan matrix entries
        assert_eq!(coefficient_extract(&first, 2, 1).unwrap(), ratio(-1, 2));
        assert_eq!(coefficient_extract(&first, 3, 1).unwrap(), ratio(1, 3));
        assert_eq!(coefficient_extract(&first, 4, 1).unwrap(), ratio(-1, 4));
        assert_eq!(coefficient_extract(&first, 4, 3).unwrap(), ratio(-3, 2));
        let identity = stirling_generating_pair(&t(0, 0, 0), 6);
        for n in 0..6 {
            for k in 0..6 {
                let want = if n == k { rat(1) } else { rat(0) };
                assert_eq!(coefficient_extract(&identity, n, k).unwrap(), want);
            }
        }
        assert!(matches!(
            coefficient_extract(&identity, 6, 0),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn aseq_identity_report() {
        for triple in [
            t(0, 1, 0),
            t(1, 0, 0),
            t(1, 1, -1),
            t(2, 3, 1),
            t(0, 0, 5),
            t(-1, 1, 0),
        ] {
            let report = verify_aseq_identity(&triple, 12).unwrap();
            assert!(report.passed, "{triple}: {:?}", report.first_violation);
        }
    }

    fn arb_triple() -> impl Strategy<Value = ParameterTriple> {
        (-5i64..5, -5i64..5, -5i64..5, 1i64..4)
            .prop_map(|(a, b, r, d)| ParameterTriple::new(ratio(a, d), ratio(b, d), ratio(r, d)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn closed_and_generic_agree(triple in arb_triple()) {
            prop_assume!(!triple.alpha.is_zero());
            let closed = a_sequence_closed(&triple, 16).unwrap();
            let generic = a_sequence_generic(&stirling_generating_pair(&triple, 17).h).unwrap();
            prop_assert_eq!(closed, generic);
        }

        #[test]
        fn defining_identity(triple in arb_triple()) {
            prop_assert!(verify_aseq_identity(&triple, 10).unwrap().passed);
        }

        #[test]
        fn riordan_matches_explicit(triple in arb_triple()) {
            prop_assume!(!triple.is_degenerate());
            let tri = riordan_triangle(&triple, 10).unwrap();
            for n in 0..=10 {
                for k in 0..=n {
                    prop_assert_eq!(tri.get(n, k), stirling_explicit(n, k, &triple).unwrap());
                }
            }
        }

        #[test]
        fn array_recurrence_holds(triple in arb_triple()) {
            // every entry of the k!/n!-weighted array obeys d_{n,k} = Σ_j a_j d_{n−1,k+j−1}
            prop_assume!(!triple.is_degenerate());
            let tri = stirling_triangle_recurrence(10, &triple).unwrap();
            let a = stirling_a_sequence(&triple, 11).unwrap();
            let d = |n: usize, k: usize| tri.get(n, k) * factorial(k) / factorial(n);
            for n in 1..=10 {
                for k in 1..=n {
                    let rhs: Rational = (0..=n - k).map(|j| &a.terms()[j] * d(n - 1, k + j - 1)).sum();
                    prop_assert_eq!(d(n, k), rhs);
                }
            }
        }

        #[test]
        fn coefficients_are_scaled_stirling_numbers(triple in arb_triple()) {
            prop_assume!(!triple.is_degenerate());
            let pair = stirling_generating_pair(&triple, 9);
            for n in 0..9 {
                for k in 0..=n {
                    let scaled = coefficient_extract(&pair, n, k).unwrap() * factorial(n) / factorial(k);
                    prop_assert_eq!(scaled, stirling_explicit(n, k, &triple).unwrap());
                }
            }
        }
    }
}
