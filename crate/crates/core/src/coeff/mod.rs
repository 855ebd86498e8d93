//! Exact coefficient rings.

mod laurent;
mod qsqrt2;

pub use laurent::{Degree, LaurentInt};
pub use qsqrt2::QSqrt2;
