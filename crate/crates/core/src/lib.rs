//! Exact kernels for iterated univariate resultants as they appear in CAD
//! projection: sparse multivariate polynomials over arbitrary-precision
//! integers, Sylvester/Bareiss and subresultant resultant engines, nested
//! iteration plans, lex Groebner bases with elimination extraction, and the
//! analysis toolkit that separates genuine from spurious factors (integer
//! factorization, squarefree decomposition, Bezout-bound screening, Sturm
//! real-root counts, perfect-square detection).
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the command
//! line live in the companion `iterres-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod groebner;
pub mod monomial;
pub mod parse;
pub mod plan;
pub mod poly;
pub mod resultant;
pub mod variable;

pub use monomial::Monomial;
pub use parse::parse;
pub use poly::{DivisionError, Polynomial};
pub use variable::{Variable, VariableOrdering};
