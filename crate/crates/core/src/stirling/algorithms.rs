use num_traits::{One, Zero};

use super::{Algorithm, ParameterTriple, StirlingTriangle};
use crate::error::Result;
use crate::factorial::{gen_factorial, gen_factorial_poly};
use crate::numeric::{binomial, factorial, pow, rat, Rational};

/// `S(n,k)` from the closed difference formula
/// `(1/(β^k k!)) Σ_j (−1)^j C(k,j) ⟨r+(k−j)β⟩_{n,−α}`, or from
/// `D^k ⟨z⟩_{n,−α}|_{z=r} / k!` when `β = 0`.
pub fn stirling_explicit(n: usize, k: usize, triple: &ParameterTriple) -> Result<Rational> {
    if n == 0 && k == 0 {
        return Ok(Rational::one());
    }
    triple.ensure_valid()?;
    if k > n {
        return Ok(Rational::zero());
    }
    let neg_alpha = -triple.alpha.clone();
    if triple.beta.is_zero() {
        let p = gen_factorial_poly(n, &neg_alpha, &Rational::zero());
        return Ok(p.derivative(k).eval(&triple.r) / factorial(k));
    }
    let mut sum = Rational::zero();
    for j in 0..=k {
        let node = &triple.r + &triple.beta * rat((k - j) as i64);
        let term = binomial(k, j) * gen_factorial(&node, n, &neg_alpha);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum / (pow(&triple.beta, k) * factorial(k)))
}

/// Output of the divided-difference table for one `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct DividedDifferenceTable {
    /// `S(n,0), …, S(n,n)`.
    pub diagonal: Vec<Rational>,
    /// Entry `i` is the divided difference of `⟨z⟩_{n,−α}` on the nodes
    /// `r+β, …, r+(i+1)β`, for `i = 0..n`. When `α = r = 0` this is
    /// `S(n+1, i+1)`. `None` for `β = 0`, where the table is not built.
    pub subdiagonal: Option<Vec<Rational>>,
}

/// Divided differences of `f = ⟨z⟩_{n,−α}` on the nodes `r + iβ`,
/// `i = 0..=n`. Column `j` holds `[r+(i−j)β, …, r+iβ] f`, obtained from column
/// `j−1` by differencing and dividing by `jβ`; the diagonal is `S(n,·)`.
///
/// For `β = 0` the nodes coalesce and the diagonal is `D^i f(r) / i!`.
pub fn stirling_triangle_dd(n: usize, triple: &ParameterTriple) -> Result<DividedDifferenceTable> {
    if n == 0 {
        return Ok(DividedDifferenceTable {
            diagonal: vec![Rational::one()],
            subdiagonal: (!triple.beta.is_zero()).then(Vec::new),
        });
    }
    triple.ensure_valid()?;
    let neg_alpha = -triple.alpha.clone();
    if triple.beta.is_zero() {
        let f = gen_factorial_poly(n, &neg_alpha, &Rational::zero());
        let mut diagonal = Vec::with_capacity(n + 1);
        let mut derivative = f;
        for i in 0..=n {
            diagonal.push(derivative.eval(&triple.r) / factorial(i));
            derivative = derivative.derivative(1);
        }
        return Ok(DividedDifferenceTable {
            diagonal,
            subdiagonal: None,
        });
    }
    let mut column: Vec<Rational> = (0..=n)
        .map(|i| {
            let node = &triple.r + &triple.beta * rat(i as i64);
            gen_factorial(&node, n, &neg_alpha)
        })
        .collect();
    let mut diagonal = vec![column[0].clone()];
    let mut subdiagonal = vec![column[1].clone()];
    for j in 1..=n {
        let step = &triple.beta * rat(j as i64);
        // column[i] for i ≥ j now holds [r+(i−j)β … r+iβ] f
        for i in (j..=n).rev() {
            column[i] = (&column[i] - &column[i - 1]) / &step;
        }
        diagonal.push(column[j].clone());
        if j < n {
            subdiagonal.push(column[j + 1].clone());
        }
    }
    Ok(DividedDifferenceTable {
        diagonal,
        subdiagonal: Some(subdiagonal),
    })
}

/// Row `S(n,0..=n)` by repeated synthetic division of the expanded
/// `⟨z⟩_{n,−α}` by `z−r`, `z−r−β`, …; the remainders are the row.
pub fn stirling_row_horner(n: usize, triple: &ParameterTriple) -> Result<Vec<Rational>> {
    if n == 0 {
        return Ok(vec![Rational::one()]);
    }
    triple.ensure_valid()?;
    let mut p = gen_factorial_poly(n, &-triple.alpha.clone(), &Rational::zero());
    let mut row = Vec::with_capacity(n + 1);
    let mut root = triple.r.clone();
    for _ in 0..n {
        let (quotient, remainder) = p.synthetic_division(&root);
        row.push(remainder);
        p = quotient;
        root += &triple.beta;
    }
    row.push(p.coeff(0));
    Ok(row)
}

/// Triangle from `S(n,k) = (r + kβ − (n−1)α) S(n−1,k) + S(n−1,k−1)`,
/// `S(0,0) = 1`.
pub fn stirling_triangle_recurrence(
    n_max: usize,
    triple: &ParameterTriple,
) -> Result<StirlingTriangle> {
    triple.ensure_valid()?;
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let shift = &triple.r - &triple.alpha * rat(n as i64 - 1);
        let row = (0..=n)
            .map(|k| {
                let mut value = Rational::zero();
                if k < n {
                    value += (&shift + &triple.beta * rat(k as i64)) * &prev[k];
                }
                if k > 0 {
                    value += &prev[k - 1];
                }
                value
            })
            .collect();
        rows.push(row);
    }
    Ok(StirlingTriangle {
        triple: triple.clone(),
        rows,
        algorithm: Algorithm::Recurrence,
    })
}

/// Near-diagonal bands `band[d][k] = S(k+d, k)` for `d ≤ d_max`, `k ≤ k_max`,
/// from the same recurrence. Costs `O(d_max · k_max)` instead of the whole
/// triangle.
pub fn stirling_band(
    d_max: usize,
    k_max: usize,
    triple: &ParameterTriple,
) -> Result<Vec<Vec<Rational>>> {
    triple.ensure_valid()?;
    let mut bands: Vec<Vec<Rational>> = vec![vec![Rational::one(); k_max + 1]];
    for d in 1..=d_max {
        let mut band = Vec::with_capacity(k_max + 1);
        // S(d,0) = ⟨r⟩_{d,−α}
        band.push(gen_factorial(&triple.r, d, &-triple.alpha.clone()));
        for k in 1..=k_max {
            // S(k+d,k) = (r + kβ − (k+d−1)α) S(k+d−1,k) + S(k+d−1,k−1)
            let n = k + d;
            let coeff =
                &triple.r + &triple.beta * rat(k as i64) - &triple.alpha * rat(n as i64 - 1);
            let value = coeff * &bands[d - 1][k] + &band[k - 1];
            band.push(value);
        }
        bands.push(band);
    }
    Ok(bands)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::numeric::ratio;
    use proptest::prelude::*;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    fn t(a: i64, b: i64, r: i64) -> ParameterTriple {
        ParameterTriple::from_ints(a, b, r)
    }

    #[test]
    fn explicit_examples() {
        assert_eq!(stirling_explicit(4, 2, &t(0, 1, 0)).unwrap(), rat(7));
        assert_eq!(stirling_explicit(4, 2, &t(1, 1, -1)).unwrap(), rat(12));
        assert_eq!(stirling_explicit(4, 3, &t(1, 2, -1)).unwrap(), rat(2));
        assert_eq!(stirling_explicit(4, 2, &t(1, 0, 0)).unwrap(), rat(11));
        assert_eq!(stirling_explicit(4, 2, &t(-1, 1, 0)).unwrap(), rat(36));
        assert_eq!(stirling_explicit(2, 5, &t(1, 1, 1)).unwrap(), rat(0));
        assert_eq!(stirling_explicit(0, 0, &t(0, 0, 0)).unwrap(), rat(1));
        assert_eq!(
            stirling_explicit(3, 1, &t(0, 0, 0)),
            Err(Error::DegenerateTriple)
        );
    }

    #[test]
    fn lah_closed_form() {
        // n! C(n−1,k−1) / k!
        for n in 1..9 {
            for k in 1..=n {
                let want = factorial(n) * binomial(n - 1, k - 1) / factorial(k);
                assert_eq!(stirling_explicit(n, k, &t(-1, 1, 0)).unwrap(), want);
            }
        }
    }

    #[test]
    fn divided_difference_examples() {
        let table = stirling_triangle_dd(4, &t(0, 1, 0)).unwrap();
        assert_eq!(table.diagonal, ints(&[0, 1, 7, 6, 1]));
        assert_eq!(table.subdiagonal.unwrap(), ints(&[1, 15, 25, 10]));
        let howard = stirling_triangle_dd(4, &t(1, 1, -1)).unwrap();
        assert_eq!(howard.diagonal, ints(&[24, -24, 12, -4, 1]));
        let first_kind = stirling_triangle_dd(4, &t(1, 0, 0)).unwrap();
        assert_eq!(first_kind.diagonal, ints(&[0, -6, 11, -6, 1]));
        assert!(first_kind.subdiagonal.is_none());
    }

    #[test]
    fn subdiagonal_is_next_row_when_alpha_and_r_vanish() {
        for beta in [ratio(1, 2), rat(3), rat(-2)] {
            let triple = ParameterTriple::new(rat(0), beta, rat(0));
            for n in 1..8 {
                let sub = stirling_triangle_dd(n, &triple)
                    .unwrap()
                    .subdiagonal
                    .unwrap();
                for (i, value) in sub.iter().enumerate() {
                    assert_eq!(value, &stirling_explicit(n + 1, i + 1, &triple).unwrap());
                }
            }
        }
    }

    #[test]
    fn horner_examples() {
        assert_eq!(
            stirling_row_horner(5, &t(0, 1, 0)).unwrap(),
            ints(&[0, 1, 15, 25, 10, 1])
        );
        assert_eq!(
            stirling_row_horner(4, &t(1, 2, -1)).unwrap(),
            ints(&[24, -12, 3, 2, 1])
        );
        assert_eq!(stirling_row_horner(0, &t(3, 1, 2)).unwrap(), ints(&[1]));
    }

    #[test]
    fn recurrence_examples() {
        let tri = stirling_triangle_recurrence(5, &t(0, 1, 0)).unwrap();
        assert_eq!(tri.get(5, 2), rat(15));
        let first_kind = stirling_triangle_recurrence(4, &t(1, 0, 0)).unwrap();
        assert_eq!(first_kind.row(4), ints(&[0, -6, 11, -6, 1]).as_slice());
        let trivial = stirling_triangle_recurrence(0, &t(2, 2, 2)).unwrap();
        assert_eq!(trivial.rows, vec![ints(&[1])]);
    }

    #[test]
    fn pascal_triangle() {
        let tri = stirling_triangle_recurrence(12, &t(0, 0, 1)).unwrap();
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(tri.get(n, k), binomial(n, k));
            }
        }
    }

    #[test]
    fn bands_match_triangle() {
        let triple = ParameterTriple::new(ratio(1, 2), rat(2), ratio(-3, 4));
        let tri = stirling_triangle_recurrence(14, &triple).unwrap();
        let bands = stirling_band(4, 10, &triple).unwrap();
        for (d, band) in bands.iter().enumerate() {
            for (k, value) in band.iter().enumerate() {
                assert_eq!(value, &tri.get(k + d, k), "d = {d}, k = {k}");
            }
        }
    }

    proptest! {
        #[test]
        fn difference_of_own_basis_is_a_delta(bn in -6i64..6, bd in 1i64..4, j in 0usize..=8, k in 0usize..=8) {
            // Δ^k_β ⟨z⟩_{j,−β}|₀ = β^k k! δ_{kj}
            prop_assume!(bn != 0);
            let beta = ratio(bn, bd);
            let mut sum = Rational::zero();
            for i in 0..=k {
                let node = &beta * rat(i as i64);
                let term = binomial(k, i) * gen_factorial(&node, j, &-beta.clone());
                if (k - i) % 2 == 0 { sum += term } else { sum -= term }
            }
            let want = if j == k { pow(&beta, k) * factorial(k) } else { Rational::zero() };
            prop_assert_eq!(sum, want);
        }

        #[test]
        fn boundary_values(an in -4i64..4, bn in -4i64..4, rn in -4i64..4, d in 1i64..4, n in 1usize..9) {
            let triple = ParameterTriple::new(ratio(an, d), ratio(bn, d), ratio(rn, d));
            prop_assume!(!triple.is_degenerate());
            let row = stirling_row_horner(n, &triple).unwrap();
            prop_assert_eq!(&row[n], &rat(1));
            prop_assert_eq!(&row[0], &gen_factorial(&triple.r, n, &-triple.alpha.clone()));
            if n == 1 {
                prop_assert_eq!(&row[0], &triple.r);
            }
        }
    }
}
