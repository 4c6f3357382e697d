//! Exact coefficient rings.
//!
//! Every ring here is canonical after each operation (no stored zeros), so
//! structural equality is mathematical equality.

mod coeff;
mod gaussint;
mod laurent;
mod param;
mod poly;
mod qcomb;

pub use coeff::{Coeff, RationalAlgebra};
pub use gaussint::GaussInt;
pub use laurent::QLaurent;
pub use param::{Monomial, ParamPoly};
pub use poly::{IntPoly, Poly};
pub use qcomb::{
    binomial, factorial, gauss_binomial, gauss_binomial_quotient, odd_double_factorial,
    q_factorial, q_number, substitute_q_power,
};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact rationals: denominator positive, fraction in lowest terms.
pub type Rational = BigRational;
