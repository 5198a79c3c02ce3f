//! Generalized Stirling numbers `S(n,k,α,β,r)` and functions `S(γ,η;ε)`.
//!
//! Integer orders are computed exactly over big rationals by five independent
//! algorithms (explicit differences, divided-difference table, Horner basis
//! change, triangular recurrence, Riordan A-sequence). Complex orders go
//! through the k-Gamma function in double precision.
//!
//! ```
//! use genstirling::stirling::{stirling_explicit, ParameterTriple};
//! use genstirling::numeric::rat;
//!
//! let second_kind = ParameterTriple::from_ints(0, 1, 0);
//! assert_eq!(stirling_explicit(4, 2, &second_kind).unwrap(), rat(7));
//! ```

// `!(x > 0.0)` is used on purpose so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod error;
pub mod factorial;
pub mod numeric;
pub mod riordan;
pub mod stirling;
pub mod stirling_fn;

pub use error::{Error, Result};
pub use numeric::{Complex64, Rational};
pub use stirling::{Algorithm, ParameterTriple, StirlingTriangle};
