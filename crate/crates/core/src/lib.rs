//! Exact identity engine for q-analogs of the period-6 sequence
//! `1, 1, 0, -1, -1, 0`: Gaussian binomial sums, Euler's pentagonal tower and
//! Chebyshev polynomials with their formal-parameter interpolation.
//!
//! Every identity is checked by expanding both sides independently to a
//! requested truncation order in exact arithmetic.

pub mod chebyshev;
pub mod error;
pub mod exactalg;
pub mod pentagonal;
pub mod registry;
pub mod report;
pub mod series;

pub use error::{AlgebraError, Result};
pub use exactalg::{BigInt, BigRational, Coeff, GaussInt, IntPoly, ParamPoly, Poly, QLaurent, Rational};
pub use registry::{IdentityDescriptor, Selection, SuiteResult};
pub use report::{Discrepancy, Expected, Status, VerificationReport};
pub use series::{SeriesTower, TruncSeries};
